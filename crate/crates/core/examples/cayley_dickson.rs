//! Doubling towers, the rational division octonions and isotropy.

use cayley_core::construct::{cd_octonions, cd_tower, classify_isotropy, division_octonions_q, Isotropy};
use cayley_core::field::FieldSpec;
use cayley_core::linalg::{format_vector, vector_from_i64};

fn main() -> cayley_core::Result<()> {
    let q = FieldSpec::Rational;
    let h = cd_tower(q, &[q.from_i64(-1), q.from_i64(-1)])?;
    println!("quaternions: dim {}, i^2 = {}", h.dim(), format_vector(&h.mul(&h.basis_vector(1), &h.basis_vector(1))));

    let o = division_octonions_q();
    let ones = vector_from_i64(q, &[1; 8]);
    println!("division octonions: n(sum b_i) = {}, isotropy {}", o.norm(&ones)?, classify_isotropy(&o).name());

    let f5 = FieldSpec::prime(5)?;
    let o5 = cd_octonions(f5, std::array::from_fn(|_| f5.from_i64(-1)))?;
    match classify_isotropy(&o5) {
        Isotropy::Split(w) => println!("same tower over GF(5) is split: n({}) = {}", format_vector(&w), o5.norm(&w)?),
        other => println!("GF(5): {}", other.name()),
    }

    let f2 = FieldSpec::prime(2)?;
    match cd_octonions(f2, std::array::from_fn(|_| f2.one())) {
        Ok(_) => println!("GF(2) tower unexpectedly nondegenerate"),
        Err(e) => println!("GF(2) tower rejected: {e}"),
    }
    Ok(())
}
