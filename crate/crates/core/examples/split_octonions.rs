//! The split octonions on the canonical basis: products, norm, trace,
//! conjugation and the Z3-grading.

use cayley_core::construct::{combination, format_canonical, split_cayley, CANONICAL_LABELS, E1, E2, U1, U2, V1, V3};
use cayley_core::field::FieldSpec;

fn main() -> cayley_core::Result<()> {
    let spec = FieldSpec::Rational;
    let c = split_cayley(spec);
    let b = |i| c.basis_vector(i);

    println!("multiplication table:");
    for i in 0..8 {
        let row: Vec<String> = (0..8).map(|j| format!("{:>4}", format_canonical(&c.mul(&b(i), &b(j))))).collect();
        println!("{:>3} |{}", CANONICAL_LABELS[i], row.join(""));
    }

    println!("u1 u2 = {}", format_canonical(&c.mul(&b(U1), &b(U2))));
    println!("norms: n(u1) = {}, n(u1, v1) = {}, t(e1) = {}", c.norm(&b(U1))?, c.polar(&b(U1), &b(V1))?, c.trace(&b(E1))?);

    let x = combination(spec, 8, &[(E1, 2), (E2, 3), (U1, 1), (V1, 1), (V3, -3)]);
    let xbar = c.conjugate(&x)?;
    println!("x = {}, conj(x) = {}", format_canonical(&x), format_canonical(&xbar));
    println!("x conj(x) = {} = n(x) 1 with n(x) = {}", format_canonical(&c.mul(&x, &xbar)), c.norm(&x)?);

    let g = c.grading().expect("split algebra is graded");
    println!("degrees: {:?}", (0..8).map(|i| g.degree(i).unwrap()).collect::<Vec<_>>());
    Ok(())
}
