//! Dense exact linear algebra: row reduction, nullspaces, linear solves and
//! a calculus of subspaces of `F^k`.
//!
//! Subspaces are stored by their canonical reduced row-echelon basis, so two
//! subspaces are equal exactly when their basis matrices are equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Coordinate vector over a [`FieldSpec`].
pub type Vector = Vec<FieldElement>;

pub fn zero_vector(spec: FieldSpec, n: usize) -> Vector {
    vec![spec.zero(); n]
}

/// The `i`-th standard basis vector of `F^n`.
pub fn unit_vector(spec: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(spec, n);
    v[i] = spec.one();
    v
}

pub fn add(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &FieldElement, a: &[FieldElement]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    let spec = a.first().map_or(FieldSpec::Rational, FieldElement::spec);
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(spec.zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(a: &[FieldElement]) -> bool {
    a.iter().all(FieldElement::is_zero)
}

/// Integer coordinates lifted into `spec`.
pub fn vector_from_i64(spec: FieldSpec, coords: &[i64]) -> Vector {
    coords.iter().map(|&c| spec.from_i64(c)).collect()
}

/// Field-text rendering of a vector, e.g. `[1, 0, -1/2]`.
pub fn format_vector(v: &[FieldElement]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Row-major dense matrix with entries in a single field. Zero-row matrices
/// are allowed and represent empty families of vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            spec,
            rows,
            cols,
            entries: vec![spec.zero(); rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.set(i, i, spec.one());
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(spec: FieldSpec, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for x in row {
                if x.spec() != spec {
                    return Err(Error::FieldMismatch(spec.to_string(), x.spec().to_string()));
                }
            }
            entries.extend(row.iter().cloned());
        }
        Ok(Matrix {
            spec,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(spec: FieldSpec, rows: usize, columns: &[Vector]) -> Result<Self> {
        Ok(Self::from_rows(spec, rows, columns)?.transpose())
    }

    pub fn from_i64(spec: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows.iter().map(|r| vector_from_i64(spec, r)).collect();
        Self::from_rows(spec, cols, &rows).expect("rectangular integer matrix")
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldElement) {
        assert_eq!(value.spec(), self.spec, "entry from a different field");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major entries, i.e. the flattened coordinate vector.
    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    /// Reshapes a row-major coordinate vector into a `rows x cols` matrix.
    pub fn from_flat(spec: FieldSpec, rows: usize, cols: usize, flat: &[FieldElement]) -> Result<Self> {
        if flat.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: flat.len(),
            });
        }
        Ok(Matrix {
            spec,
            rows,
            cols,
            entries: flat.to_vec(),
        })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.spec, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.spec, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] = &out.entries[idx] + a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn scaled(&self, c: &FieldElement) -> Matrix {
        Matrix {
            entries: scale(c, &self.entries),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.rows.min(self.cols)).fold(self.spec.zero(), |acc, i| acc + self.get(i, i))
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            spec: self.spec,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", format_vector(self.row(i)))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form plus pivot columns. Pivots are only taken in the
/// first `pivot_cols` columns; the remaining columns are carried along.
fn rref_with_pivots(m: &Matrix, pivot_cols: usize) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, c).inv().expect("pivot is nonzero");
        for j in c..a.cols {
            let x = a.get(r, j);
            if !x.is_zero() {
                let y = x * &inv;
                a.set(r, j, y);
            }
        }
        let pivot_row: Vec<(usize, FieldElement)> = (c..a.cols)
            .filter(|&j| !a.get(r, j).is_zero())
            .map(|j| (j, a.get(r, j).clone()))
            .collect();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for (j, pv) in &pivot_row {
                let y = a.get(i, *j) - &factor * pv;
                a.set(i, *j, y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Canonical reduced row-echelon form (leading ones, zeros above and below
/// each pivot) and the rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let (a, pivots) = rref_with_pivots(m, m.cols);
    (a, pivots.len())
}

/// Kernel `{v : m v = 0}` as a subspace of `F^cols`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (r, pivots) = rref_with_pivots(m, m.cols);
    let spec = m.spec;
    let n = m.cols;
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = zero_vector(spec, n);
        v[free] = spec.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, free);
        }
        basis.push(v);
    }
    Subspace::span(spec, n, &basis).expect("kernel vectors have the ambient length")
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[FieldElement]) -> Result<Option<Vector>> {
    let mut sols = solve_many(a, &[b.to_vec()])?;
    Ok(sols.pop().expect("one right-hand side"))
}

/// Solves `a x = b` for several right-hand sides with a single reduction.
pub fn solve_many(a: &Matrix, rhs: &[Vector]) -> Result<Vec<Option<Vector>>> {
    for b in rhs {
        if b.len() != a.rows {
            return Err(Error::DimensionMismatch {
                expected: a.rows,
                got: b.len(),
            });
        }
    }
    let spec = a.spec;
    let (n, k) = (a.cols, rhs.len());
    let mut aug = Matrix::zeros(spec, a.rows, n + k);
    for i in 0..a.rows {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        for (t, b) in rhs.iter().enumerate() {
            aug.set(i, n + t, b[i].clone());
        }
    }
    let (r, pivots) = rref_with_pivots(&aug, n);
    let rank_a = pivots.len();
    let mut out = Vec::with_capacity(k);
    for t in 0..k {
        let consistent = (rank_a..a.rows).all(|i| r.get(i, n + t).is_zero());
        if !consistent {
            out.push(None);
            continue;
        }
        let mut x = zero_vector(spec, n);
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, n + t).clone();
        }
        out.push(Some(x));
    }
    Ok(out)
}

/// A subspace of `F^ambient_dim`, identified by its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(spec: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(spec, 0, ambient_dim),
        }
    }

    pub fn full(spec: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(spec, ambient_dim),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(spec: FieldSpec, ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let m = Matrix::from_rows(spec, ambient_dim, vectors)?;
        Ok(Self::from_matrix_rows(&m))
    }

    /// Row space of `m`.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, rank) = rref(m);
        let rows: Vec<Vector> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient_dim: m.cols,
            basis: Matrix::from_rows(m.spec, m.cols, &rows).expect("rows of m"),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.basis.spec
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// The RREF basis, one row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient_dim == n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.ambient_dim, n))
        }
    }

    /// Membership via a rank test against the basis.
    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        self.check_ambient(v.len())?;
        let extended = self.basis.stack(&Matrix::from_rows(self.spec(), self.ambient_dim, &[v.to_vec()])?)?;
        Ok(extended.rank() == self.dim())
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        Ok(self == other)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        Ok(Self::from_matrix_rows(&self.basis.stack(&other.basis)?))
    }

    /// Linear constraints cutting out this subspace: the rows of the
    /// returned matrix span its annihilator under the standard pairing.
    pub fn constraints(&self) -> Matrix {
        let ann = nullspace(&self.basis);
        ann.basis
    }

    /// Intersection as the nullspace of both constraint systems stacked.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let stacked = self.constraints().stack(&other.constraints())?;
        Ok(nullspace(&stacked))
    }

    /// `{v : s^T gram v = 0 for every s in self}`.
    pub fn orth_complement(&self, gram: &Matrix) -> Result<Subspace> {
        self.check_ambient(gram.rows)?;
        if gram.rows != gram.cols {
            return Err(Error::DimensionMismatch {
                expected: gram.rows,
                got: gram.cols,
            });
        }
        Ok(nullspace(&self.basis.mul(gram)?))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[FieldElement]) -> Result<Option<Vector>> {
        self.check_ambient(v.len())?;
        solve(&self.basis.transpose(), v)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span(dim {} in F^{})", self.dim(), self.ambient_dim)?;
        for v in self.basis.row_vectors() {
            write!(f, " {}", format_vector(&v))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn e(n: usize, i: usize) -> Vector {
        unit_vector(Q, n, i)
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(rref(&id), (id.clone(), 3));
        let z = Matrix::zeros(Q, 2, 3);
        assert_eq!(rref(&z), (z.clone(), 0));
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(rref(&m), (Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]), 1));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::identity(Q, 4)).dim(), 0);
        assert_eq!(nullspace(&Matrix::zeros(Q, 1, 5)).dim(), 5);
        let gf2 = FieldSpec::prime(2).unwrap();
        let ns = nullspace(&Matrix::from_i64(gf2, &[&[1, 1]]));
        assert_eq!(ns, Subspace::span(gf2, 2, &[vector_from_i64(gf2, &[1, 1])]).unwrap());
    }

    #[test]
    fn solve_examples() {
        let b = vector_from_i64(Q, &[3, -1, 7]);
        assert_eq!(solve(&Matrix::identity(Q, 3), &b).unwrap(), Some(b));
        let a = Matrix::from_i64(Q, &[&[1], &[1]]);
        assert_eq!(solve(&a, &vector_from_i64(Q, &[0, 1])).unwrap(), None);
        let a = Matrix::from_i64(Q, &[&[2]]);
        assert_eq!(
            solve(&a, &vector_from_i64(Q, &[1])).unwrap(),
            Some(vec![Q.fraction(1, 2).unwrap()])
        );
        assert!(matches!(
            solve(&a, &vector_from_i64(Q, &[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn subspace_examples() {
        let s1 = Subspace::span(Q, 3, &[e(3, 0)]).unwrap();
        assert!(!s1.contains(&e(3, 1)).unwrap());
        let a = Subspace::span(Q, 3, &[e(3, 0), e(3, 1)]).unwrap();
        let b = Subspace::span(Q, 3, &[e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(Q, 3, &[e(3, 1)]).unwrap());
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(Q, 3));
        let other = Subspace::zero(Q, 4);
        assert_eq!(a.sum(&other), Err(Error::AmbientMismatch(3, 4)));
        assert_eq!(a.contains(&e(4, 0)), Err(Error::AmbientMismatch(3, 4)));
    }

    #[test]
    fn orth_complement_hyperbolic_plane() {
        // gram of x*y on F^2: the isotropic line e0 is its own complement
        let gram = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        let line = Subspace::span(Q, 2, &[e(2, 0)]).unwrap();
        assert_eq!(line.orth_complement(&gram).unwrap(), line);
    }

    #[test]
    fn coordinates_in_basis() {
        let s = Subspace::span(Q, 3, &[vector_from_i64(Q, &[1, 1, 0]), e(3, 2)]).unwrap();
        let c = s.coordinates(&vector_from_i64(Q, &[2, 2, 5])).unwrap().unwrap();
        assert_eq!(c, vector_from_i64(Q, &[2, 5]));
        assert_eq!(s.coordinates(&e(3, 0)).unwrap(), None);
    }
}
