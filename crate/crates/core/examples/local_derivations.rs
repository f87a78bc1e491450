//! Local derivations: every skew map killing 1 agrees pointwise with a
//! derivation, because Der(C)x fills (F1 + Fx)^perp.

use cayley_core::construct::{format_canonical, split_cayley, U1};
use cayley_core::derivation::DerivationSpaces;
use cayley_core::field::FieldSpec;
use cayley_core::linalg::Subspace;
use cayley_core::sample::SampleSpec;

fn main() -> cayley_core::Result<()> {
    let spec = FieldSpec::prime(5)?;
    let c = split_cayley(spec);
    let s = DerivationSpaces::compute(&c);

    let orbit = s.der.eval_subspace(&c.basis_vector(U1))?;
    let names: Vec<String> = orbit.basis_vectors().iter().map(|v| format_canonical(v)).collect();
    println!("Der(C)u1 = span{{{}}}", names.join(", "));

    let mut agree = 0;
    let pool = SampleSpec::new(7, 50).vectors(spec, 8);
    for x in pool.iter().filter(|x| !c.is_scalar(x)) {
        let dx = s.der.eval_subspace(x)?;
        let perp = Subspace::span(spec, 8, &[c.unit().clone(), x.clone()])?.orth_complement(c.form().polar_gram())?;
        agree += usize::from(dx == perp);
    }
    println!("Der(C)x = (F1 + Fx)^perp at {agree} of {} sampled points", pool.iter().filter(|x| !c.is_scalar(x)).count());

    let outside = s.locder.basis_maps().into_iter().filter(|d| !s.der.contains(d).unwrap()).count();
    println!("{outside} of {} basis maps of LocDer are not derivations", s.locder.dim());
    Ok(())
}
