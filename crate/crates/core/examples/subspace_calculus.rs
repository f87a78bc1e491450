//! Row reduction, nullspaces, solving and subspace operations.

use cayley_core::field::FieldSpec;
use cayley_core::linalg::{nullspace, rref, solve, vector_from_i64, Matrix, Subspace};

fn main() -> cayley_core::Result<()> {
    let q = FieldSpec::Rational;
    let m = Matrix::from_i64(q, &[&[1, 2, 3], &[2, 4, 7], &[1, 2, 4]]);
    let (r, rank) = rref(&m);
    println!("rref (rank {rank}):\n{r}");
    let ker = nullspace(&m);
    println!("nullspace has dim {}: {ker}", ker.dim());

    let a = Matrix::from_i64(q, &[&[2, 1], &[1, 3]]);
    let x = solve(&a, &vector_from_i64(q, &[1, 2]))?;
    println!("solution of [[2,1],[1,3]] x = (1,2): {:?}", x.map(|v| cayley_core::linalg::format_vector(&v)));

    let e = |i| vector_from_i64(q, &[(i == 0) as i64, (i == 1) as i64, (i == 2) as i64, (i == 3) as i64]);
    let s = Subspace::span(q, 4, &[e(0), e(1)])?;
    let t = Subspace::span(q, 4, &[e(1), e(2)])?;
    println!("S + T has dim {}, S and T meet in {}", s.sum(&t)?.dim(), s.intersect(&t)?);

    // hyperbolic form: (x1 x3 + x2 x4) polarized
    let gram = Matrix::from_i64(q, &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let perp = s.orth_complement(&gram)?;
    println!("S^perp = {perp}, equal to S: {}", perp == s);
    Ok(())
}
