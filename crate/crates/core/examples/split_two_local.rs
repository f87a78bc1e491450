//! The skew map phi (u3 -> u3, v3 -> -v3) is local but cannot be matched by
//! a single derivation at the pair (u1 - v1, u2 + v3).

use cayley_core::construct::{combination, format_canonical, split_cayley, U1, U2, V1, V3};
use cayley_core::derivation::DerivationSpaces;
use cayley_core::field::FieldSpec;
use cayley_core::suite::{pair_interpolate, phi_map};

fn main() -> cayley_core::Result<()> {
    let spec = FieldSpec::Rational;
    let c = split_cayley(spec);
    let s = DerivationSpaces::compute(&c);
    let phi = phi_map(spec);
    println!("phi in LocDer: {}, phi in Der: {}", s.locder.contains(&phi)?, s.der.contains(&phi)?);

    let a = combination(spec, 8, &[(U1, 1), (V1, -1)]);
    let b = combination(spec, 8, &[(U2, 1), (V3, 1)]);
    let phi_b = phi.mul_vec(&b)?;
    println!("ab = {}", format_canonical(&c.mul(&a, &b)));
    println!("phi(a) = {}, phi(b) = {}, a phi(b) = {}", format_canonical(&phi.mul_vec(&a)?), format_canonical(&phi_b), format_canonical(&c.mul(&a, &phi_b)));

    let v = pair_interpolate(&s.der, &phi, &a, &b)?;
    println!("some derivation matches phi at a and b: {}", v.solvable);
    let single = pair_interpolate(&s.der, &phi, &b, &b)?;
    println!("some derivation matches phi at b alone: {}", single.solvable);
    Ok(())
}
