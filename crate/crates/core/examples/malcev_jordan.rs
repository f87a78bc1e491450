//! The Malcev algebra (C0, (xy - yx)/2) and the Jordan algebra
//! (C, (xy + yx)/2), with their derivation algebras.

use cayley_core::construct::{split_cayley, U1, V1};
use cayley_core::derivation::{derivation_algebra, DerivationSpaces, TraceZeroFrame};
use cayley_core::field::FieldSpec;
use cayley_core::linalg::is_zero_vector;
use cayley_core::sample::SampleSpec;
use cayley_core::suite::{jacobi_defect, malcev_defect, minus_algebra, plus_algebra};

fn main() -> cayley_core::Result<()> {
    for spec in [FieldSpec::Rational, FieldSpec::prime(3)?] {
        let c = split_cayley(spec);
        let minus = minus_algebra(&c)?;
        let plus = plus_algebra(&c)?;
        let triples = SampleSpec::new(11, 100).triples(spec, 7);
        let malcev = triples.iter().filter(|[x, y, z]| is_zero_vector(&malcev_defect(&minus, x, y, z))).count();
        let jacobi = triples.iter().filter(|[x, y, z]| is_zero_vector(&jacobi_defect(&minus, x, y, z))).count();
        println!("{spec}: Malcev holds on {malcev}/{n}, Jacobi on {jacobi}/{n} triples", n = triples.len());

        let s = DerivationSpaces::compute(&c);
        let dm = derivation_algebra(&minus);
        let dp = derivation_algebra(&plus);
        println!("  dim Der(C0^-) = {}, dim Der(C^+) = {}, Der(C^+) = LocDer(C): {}", dm.dim(), dp.dim(), dp.equal(&s.locder)?);
    }

    let c = split_cayley(FieldSpec::Rational);
    let frame = TraceZeroFrame::new(&c);
    let plus = plus_algebra(&c)?;
    let u1v1 = plus.mul(&c.basis_vector(U1), &c.basis_vector(V1));
    println!("u1 o v1 = {}", cayley_core::construct::format_canonical(&u1v1));
    println!("C0 basis: {}", frame.basis.iter().map(|v| cayley_core::construct::format_canonical(v)).collect::<Vec<_>>().join(" | "));
    Ok(())
}
