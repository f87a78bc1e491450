//! Dimensions of Der(C), so(C,n), LocDer(C) and so(C0,n) across fields.

use cayley_core::construct::{division_octonions_q, split_cayley};
use cayley_core::derivation::{graded_component_0, DerivationSpaces};
use cayley_core::field::FieldSpec;

fn main() -> cayley_core::Result<()> {
    println!("{:<22} {:>4} {:>4} {:>7} {:>6} {:>6}", "algebra", "der", "so", "locder", "so_c0", "der_0");
    for p in [0u64, 2, 3, 5, 7] {
        let spec = if p == 0 { FieldSpec::Rational } else { FieldSpec::prime(p)? };
        let c = split_cayley(spec);
        let s = DerivationSpaces::compute(&c);
        let g0 = graded_component_0(&c)?;
        println!(
            "{:<22} {:>4} {:>4} {:>7} {:>6} {:>6}",
            format!("split over {spec}"),
            s.der.dim(),
            s.skew.dim(),
            s.locder.dim(),
            s.so_c0.dim(),
            g0.dim()
        );
    }
    let s = DerivationSpaces::compute(&division_octonions_q());
    println!("{:<22} {:>4} {:>4} {:>7} {:>6} {:>6}", "division over q", s.der.dim(), s.skew.dim(), s.locder.dim(), s.so_c0.dim(), "-");

    let first = &s.der.basis_maps()[0];
    println!("\na derivation of the division octonions:\n{first}");
    Ok(())
}
