//! Spaces of linear maps cut out by linear conditions: derivations, maps
//! skew for the norm, local derivations, the orthogonal algebra of the
//! trace-zero part, stabilizers and the degree-zero graded piece.
//!
//! Maps act on column vectors, `d(x) = M x`, so column `j` of `M` holds
//! `d(b_j)`. A map on `F^n` is stored in a [`Subspace`] of `F^{n^2}` through
//! its row-major flattening. Commutators compose as `(de)(x) = d(e(x))`.

use crate::algebra::{AlgebraStructure, CayleyAlgebra, QuadraticFormData};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{nullspace, scale, Matrix, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapKind {
    Der,
    Skew,
    LocDer,
    GradedDer0,
    SoTraceZero,
    Stabilizer,
    Custom,
}

/// A subspace of `End(F^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    pub kind: MapKind,
    n: usize,
    space: Subspace,
}

impl MapSpace {
    pub fn new(kind: MapKind, n: usize, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != n * n {
            return Err(Error::AmbientMismatch(space.ambient_dim(), n * n));
        }
        Ok(MapSpace { kind, n, space })
    }

    /// Span of explicit maps.
    pub fn span(kind: MapKind, spec: FieldSpec, n: usize, maps: &[Matrix]) -> Result<Self> {
        let flat: Vec<Vector> = maps.iter().map(|m| m.entries().to_vec()).collect();
        MapSpace::new(kind, n, Subspace::span(spec, n * n, &flat)?)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Dimension of the underlying vector space the maps act on.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> FieldSpec {
        self.space.spec()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_maps(&self) -> Vec<Matrix> {
        self.space
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_flat(self.spec(), self.n, self.n, v).expect("n^2 entries"))
            .collect()
    }

    pub fn contains(&self, d: &Matrix) -> Result<bool> {
        self.space.contains(d.entries())
    }

    pub fn is_subspace_of(&self, other: &MapSpace) -> Result<bool> {
        self.space.is_subspace_of(&other.space)
    }

    pub fn equal(&self, other: &MapSpace) -> Result<bool> {
        self.space.equal(&other.space)
    }

    /// `{d(x) : d in self}`.
    pub fn eval_subspace(&self, x: &[FieldElement]) -> Result<Subspace> {
        let images = self
            .basis_maps()
            .iter()
            .map(|d| d.mul_vec(x))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.spec(), self.n, &images)
    }

    /// `{d in self : d(x) = 0 for every x in points}`.
    pub fn stabilizer(&self, points: &[Vector]) -> Result<MapSpace> {
        let basis = self.basis_maps();
        if basis.is_empty() {
            return Ok(MapSpace { kind: MapKind::Stabilizer, ..self.clone() });
        }
        // column k stacks d_k(x) over all points
        let mut columns = vec![Vec::new(); basis.len()];
        for x in points {
            for (k, d) in basis.iter().enumerate() {
                columns[k].extend(d.mul_vec(x)?);
            }
        }
        let coeffs = nullspace(&Matrix::from_columns(self.spec(), self.n * points.len(), &columns)?);
        let maps: Vec<Matrix> = coeffs.basis_vectors().iter().map(|c| combine(&basis, c)).collect();
        MapSpace::span(MapKind::Stabilizer, self.spec(), self.n, &maps)
    }

    pub fn intersect(&self, other: &MapSpace) -> Result<MapSpace> {
        MapSpace::new(MapKind::Custom, self.n, self.space.intersect(&other.space)?)
    }

    pub fn sum(&self, other: &MapSpace) -> Result<MapSpace> {
        MapSpace::new(MapKind::Custom, self.n, self.space.sum(&other.space)?)
    }

    /// First pair of basis maps whose commutator leaves the space.
    pub fn commutator_violation(&self) -> Result<Option<(usize, usize)>> {
        let basis = self.basis_maps();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !self.contains(&commutator(&basis[i], &basis[j]))? {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

/// `sum_k c_k d_k`.
pub fn combine(maps: &[Matrix], coeffs: &[FieldElement]) -> Matrix {
    let first = &maps[0];
    let mut flat = vec![first.spec().zero(); first.rows() * first.cols()];
    for (m, c) in maps.iter().zip(coeffs).filter(|(_, c)| !c.is_zero()) {
        for (acc, x) in flat.iter_mut().zip(m.entries()) {
            if !x.is_zero() {
                *acc = &*acc + c * x;
            }
        }
    }
    Matrix::from_flat(first.spec(), first.rows(), first.cols(), &flat).expect("same shape")
}

/// `de - ed`.
pub fn commutator(d: &Matrix, e: &Matrix) -> Matrix {
    let de = d.mul(e).expect("square maps of equal size");
    let ed = e.mul(d).expect("square maps of equal size");
    de.add(&ed.scaled(&-d.spec().one())).expect("same shape")
}

fn var(n: usize, row: usize, col: usize) -> usize {
    row * n + col
}

/// The `n^3 x n^2` system `d(b_i b_j) - d(b_i) b_j - b_i d(b_j) = 0`.
pub fn leibniz_constraints(alg: &AlgebraStructure) -> Matrix {
    let n = alg.dim();
    let spec = alg.spec();
    let mut m = Matrix::zeros(spec, n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row = (i * n + j) * n + k;
                let mut bump = |col: usize, c: &FieldElement| {
                    if !c.is_zero() {
                        let v = m.get(row, col) + c;
                        m.set(row, col, v);
                    }
                };
                for l in 0..n {
                    // d(b_i b_j)_k = sum_l M[k][l] (b_i b_j)_l
                    bump(var(n, k, l), &alg.product(i, j)[l]);
                    // (d(b_i) b_j)_k = sum_l M[l][i] (b_l b_j)_k
                    bump(var(n, l, i), &-&alg.product(l, j)[k]);
                    // (b_i d(b_j))_k = sum_l M[l][j] (b_i b_l)_k
                    bump(var(n, l, j), &-&alg.product(i, l)[k]);
                }
            }
        }
    }
    m
}

/// Der(A) as the nullspace of the Leibniz system.
pub fn derivation_algebra(alg: &AlgebraStructure) -> MapSpace {
    let space = nullspace(&leibniz_constraints(alg));
    MapSpace::new(MapKind::Der, alg.dim(), space).expect("n^2 unknowns")
}

/// Conditions for `n(v, d(v)) = 0` for all `v`, polarized: `n(b_i, d b_i) = 0`
/// for each `i` and `n(d b_i, b_j) + n(b_i, d b_j) = 0` for `i < j`.
fn skew_constraints(gram: &Matrix) -> Matrix {
    let n = gram.rows();
    let spec = gram.spec();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut row = vec![spec.zero(); n * n];
            for l in 0..n {
                // n(d b_i, b_j) = sum_l M[l][i] G[l][j]
                if i != j {
                    row[var(n, l, i)] = &row[var(n, l, i)] + gram.get(l, j);
                }
                // n(b_i, d b_j) = sum_l G[i][l] M[l][j]
                row[var(n, l, j)] = &row[var(n, l, j)] + gram.get(i, l);
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(spec, n * n, &rows).expect("n^2 columns")
}

/// so(C, n): maps with `n(x, d(x)) = 0` for all `x`.
pub fn skew_algebra(form: &QuadraticFormData) -> MapSpace {
    let space = nullspace(&skew_constraints(form.polar_gram()));
    MapSpace::new(MapKind::Skew, form.dim(), space).expect("n^2 unknowns")
}

fn annihilates_constraints(spec: FieldSpec, n: usize, x: &[FieldElement]) -> Matrix {
    let rows: Vec<Vector> = (0..n)
        .map(|i| {
            let mut row = vec![spec.zero(); n * n];
            for (j, c) in x.iter().enumerate() {
                row[var(n, i, j)] = c.clone();
            }
            row
        })
        .collect();
    Matrix::from_rows(spec, n * n, &rows).expect("n^2 columns")
}

/// `{d in so(C, n) : d(1) = 0}`, the space of local derivations.
pub fn locder_space(c: &CayleyAlgebra) -> MapSpace {
    let n = c.dim();
    let constraints = skew_constraints(c.form().polar_gram())
        .stack(&annihilates_constraints(c.spec(), n, c.unit()))
        .expect("same width");
    MapSpace::new(MapKind::LocDer, n, nullspace(&constraints)).expect("n^2 unknowns")
}

/// Derivations preserving each graded piece `K`, `U`, `V`.
pub fn graded_component_0(c: &CayleyAlgebra) -> Result<MapSpace> {
    let grading = c.grading().ok_or(Error::NoGrading)?;
    let n = c.dim();
    let spec = c.spec();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if grading.degree(i) != grading.degree(j) {
                let mut row = vec![spec.zero(); n * n];
                row[var(n, i, j)] = spec.one();
                rows.push(row);
            }
        }
    }
    let constraints = leibniz_constraints(c.alg()).stack(&Matrix::from_rows(spec, n * n, &rows)?)?;
    MapSpace::new(MapKind::GradedDer0, n, nullspace(&constraints))
}

/// The trace-zero subspace `C_0` with its canonical (RREF) basis and the
/// restriction of the norm to it.
#[derive(Clone, Debug)]
pub struct TraceZeroFrame {
    pub subspace: Subspace,
    pub basis: Vec<Vector>,
    pub form: QuadraticFormData,
}

impl TraceZeroFrame {
    pub fn new(c: &CayleyAlgebra) -> Self {
        let subspace = c.trace_zero_subspace();
        let basis = subspace.basis_vectors();
        let m = basis.len();
        let spec = c.spec();
        let norms: Vector = basis.iter().map(|v| c.form().norm(v)).collect();
        let mut gram = Matrix::zeros(spec, m, m);
        for a in 0..m {
            for b in 0..m {
                gram.set(a, b, c.form().polar(&basis[a], &basis[b]));
            }
        }
        let form = QuadraticFormData::new(norms, gram).expect("restriction of a valid form");
        TraceZeroFrame { subspace, basis, form }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in the frame basis, `None` unless `v` lies in `C_0`.
    pub fn coordinates(&self, v: &[FieldElement]) -> Result<Option<Vector>> {
        self.subspace.coordinates(v)
    }

    /// The element of `C` with the given frame coordinates.
    pub fn embed(&self, coords: &[FieldElement]) -> Vector {
        let spec = self.subspace.spec();
        let n = self.subspace.ambient_dim();
        coords
            .iter()
            .zip(&self.basis)
            .fold(vec![spec.zero(); n], |acc, (c, b)| crate::linalg::add(&acc, &scale(c, b)))
    }

    /// Matrix, in frame coordinates, of the restriction of `d` to `C_0`;
    /// `None` when `d` does not leave `C_0` invariant.
    pub fn restrict(&self, d: &Matrix) -> Result<Option<Matrix>> {
        let mut cols = Vec::with_capacity(self.dim());
        for b in &self.basis {
            match self.coordinates(&d.mul_vec(b)?)? {
                Some(c) => cols.push(c),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_columns(self.subspace.spec(), self.dim(), &cols)?))
    }
}

/// so(C_0, n) on the frame coordinates of `C_0`: maps with `n(v, d(v)) = 0`
/// for all `v`, plus `trace(d) = 0` in characteristic 2.
pub fn so_c0(c: &CayleyAlgebra) -> (TraceZeroFrame, MapSpace) {
    let frame = TraceZeroFrame::new(c);
    let m = frame.dim();
    let spec = c.spec();
    let mut constraints = skew_constraints(frame.form.polar_gram());
    if spec.characteristic() == 2 {
        let mut trace_row = vec![spec.zero(); m * m];
        for i in 0..m {
            trace_row[var(m, i, i)] = spec.one();
        }
        constraints = constraints
            .stack(&Matrix::from_rows(spec, m * m, &[trace_row]).expect("one row"))
            .expect("same width");
    }
    let space = MapSpace::new(MapKind::SoTraceZero, m, nullspace(&constraints)).expect("m^2 unknowns");
    (frame, space)
}

/// The 14, 28, 21 and 21 of the dimension table, computed together.
#[derive(Clone, Debug)]
pub struct DerivationSpaces {
    pub der: MapSpace,
    pub skew: MapSpace,
    pub locder: MapSpace,
    pub so_c0: MapSpace,
    pub frame: TraceZeroFrame,
}

impl DerivationSpaces {
    pub fn compute(c: &CayleyAlgebra) -> Self {
        let (frame, so) = so_c0(c);
        DerivationSpaces {
            der: derivation_algebra(c.alg()),
            skew: skew_algebra(c.form()),
            locder: locder_space(c),
            so_c0: so,
            frame,
        }
    }
}
