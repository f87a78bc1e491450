//! Finite-dimensional algebras given by structure constants, quadratic
//! forms, and the composition (Hurwitz) algebras built from them.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{
    self, format_vector, is_zero_vector, nullspace, scale, solve, unit_vector, zero_vector, Matrix,
    Subspace, Vector,
};

/// An algebra on `F^dim` with basis `b_0..b_{dim-1}`, optionally unital.
///
/// `product(i, j)` holds the coordinates of `b_i b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraStructure {
    spec: FieldSpec,
    dim: usize,
    unit: Option<Vector>,
    table: Vec<Vector>,
    // nonzero coordinates of each product, for fast bilinear extension
    sparse: Vec<Vec<(usize, FieldElement)>>,
}

impl AlgebraStructure {
    /// `table[i][j]` is `b_i b_j`. A declared unit is checked against every
    /// basis vector.
    pub fn new(spec: FieldSpec, dim: usize, table: Vec<Vec<Vector>>, unit: Option<Vector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadDimension(0));
        }
        if table.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: table.len(),
            });
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for row in table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for v in row {
                check_vector(spec, dim, &v)?;
                flat.push(v);
            }
        }
        if let Some(u) = &unit {
            check_vector(spec, dim, u)?;
        }
        let sparse = flat.iter().map(|v| sparse_of(v)).collect();
        let alg = AlgebraStructure {
            spec,
            dim,
            unit,
            table: flat,
            sparse,
        };
        if let Some(u) = &alg.unit {
            for i in 0..dim {
                let b = alg.basis_vector(i);
                if alg.mul(u, &b) != b || alg.mul(&b, u) != b {
                    return Err(Error::NotUnital);
                }
            }
        }
        Ok(alg)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    /// The table as nested rows, `table()[i][j] = b_i b_j`.
    pub fn table(&self) -> Vec<Vec<Vector>> {
        self.table.chunks(self.dim).map(|row| row.to_vec()).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.spec, self.dim, i)
    }

    /// Same algebra with `b_i b_j` replaced; the unit is re-validated.
    pub fn with_product(&self, i: usize, j: usize, value: Vector) -> Result<Self> {
        let mut table = self.table();
        table[i][j] = value;
        AlgebraStructure::new(self.spec, self.dim, table, self.unit.clone())
    }

    /// Bilinear extension of the table. Panics on length mismatch; see
    /// [`AlgebraStructure::multiply`] for the checked form.
    pub fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        assert!(x.len() == self.dim && y.len() == self.dim, "operand length");
        let mut out = zero_vector(self.spec, self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let entries = &self.sparse[i * self.dim + j];
                if entries.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, t) in entries {
                    out[*k] = &out[*k] + &c * t;
                }
            }
        }
        out
    }

    pub fn multiply(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<Vector> {
        check_vector(self.spec, self.dim, x)?;
        check_vector(self.spec, self.dim, y)?;
        Ok(self.mul(x, y))
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult_matrix(&self, x: &[FieldElement]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.spec, self.dim, &cols).expect("square")
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult_matrix(&self, x: &[FieldElement]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.spec, self.dim, &cols).expect("square")
    }
}

fn check_vector(spec: FieldSpec, dim: usize, v: &[FieldElement]) -> Result<()> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: v.len(),
        });
    }
    if let Some(x) = v.iter().find(|x| x.spec() != spec) {
        return Err(Error::FieldMismatch(spec.to_string(), x.spec().to_string()));
    }
    Ok(())
}

fn sparse_of(v: &[FieldElement]) -> Vec<(usize, FieldElement)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// A quadratic form given by the norms of the basis vectors and its polar
/// Gram matrix `n(b_i, b_j)`. Both are kept: in characteristic 2 the form
/// cannot be recovered from its polarization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFormData {
    basis_norms: Vector,
    polar_gram: Matrix,
}

impl QuadraticFormData {
    /// Checks symmetry and `n(b_i, b_i) = 2 n(b_i)`.
    pub fn new(basis_norms: Vector, polar_gram: Matrix) -> Result<Self> {
        let n = basis_norms.len();
        if polar_gram.rows() != n || polar_gram.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: polar_gram.rows(),
            });
        }
        let spec = polar_gram.spec();
        check_vector(spec, n, &basis_norms)?;
        for i in 0..n {
            for j in 0..i {
                if polar_gram.get(i, j) != polar_gram.get(j, i) {
                    return Err(Error::BadForm(format!("polar Gram not symmetric at ({i}, {j})")));
                }
            }
            if *polar_gram.get(i, i) != spec.from_i64(2) * &basis_norms[i] {
                return Err(Error::BadForm(format!("n(b{i}, b{i}) != 2 n(b{i})")));
            }
        }
        Ok(QuadraticFormData {
            basis_norms,
            polar_gram,
        })
    }

    pub fn basis_norms(&self) -> &Vector {
        &self.basis_norms
    }

    pub fn polar_gram(&self) -> &Matrix {
        &self.polar_gram
    }

    pub fn dim(&self) -> usize {
        self.basis_norms.len()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.polar_gram.rank() == self.dim()
    }

    /// `sum_i x_i^2 n(b_i) + sum_{i<j} x_i x_j n(b_i, b_j)`.
    pub fn norm(&self, x: &[FieldElement]) -> FieldElement {
        let spec = self.polar_gram.spec();
        let mut acc = spec.zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            acc = acc + xi.square() * &self.basis_norms[i];
            for (j, xj) in x.iter().enumerate().skip(i + 1).filter(|(_, c)| !c.is_zero()) {
                let g = self.polar_gram.get(i, j);
                if !g.is_zero() {
                    acc = acc + xi * xj * g;
                }
            }
        }
        acc
    }

    pub fn polar(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let gy = self.polar_gram.mul_vec(y).expect("length checked by caller");
        linalg::dot(x, &gy)
    }
}

/// Partition of the canonical basis into the graded pieces `K`, `U`, `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub blocks: [Vec<usize>; 3],
}

impl Grading {
    /// Degree (0, 1 or 2) of basis index `i`.
    pub fn degree(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&i))
    }
}

/// A unital algebra with a quadratic form, intended to satisfy
/// `x^2 - n(x,1) x + n(x) 1 = 0`. Stages of the Cayley-Dickson tower and the
/// Cayley algebras themselves live here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionAlgebra {
    alg: AlgebraStructure,
    form: QuadraticFormData,
    grading: Option<Grading>,
}

impl CompositionAlgebra {
    pub fn new(alg: AlgebraStructure, form: QuadraticFormData) -> Result<Self> {
        if alg.unit().is_none() {
            return Err(Error::NotUnital);
        }
        if form.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                got: form.dim(),
            });
        }
        if form.polar_gram().spec() != alg.spec() {
            return Err(Error::FieldMismatch(
                alg.spec().to_string(),
                form.polar_gram().spec().to_string(),
            ));
        }
        Ok(CompositionAlgebra {
            alg,
            form,
            grading: None,
        })
    }

    pub fn with_grading(mut self, grading: Grading) -> Self {
        self.grading = Some(grading);
        self
    }

    pub fn alg(&self) -> &AlgebraStructure {
        &self.alg
    }

    pub fn form(&self) -> &QuadraticFormData {
        &self.form
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn spec(&self) -> FieldSpec {
        self.alg.spec()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn unit(&self) -> &Vector {
        self.alg.unit().expect("checked at construction")
    }

    pub fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        self.alg.mul(x, y)
    }

    pub fn multiply(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<Vector> {
        self.alg.multiply(x, y)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.alg.basis_vector(i)
    }

    fn check(&self, x: &[FieldElement]) -> Result<()> {
        check_vector(self.spec(), self.dim(), x)
    }

    pub fn norm(&self, x: &[FieldElement]) -> Result<FieldElement> {
        self.check(x)?;
        Ok(self.form.norm(x))
    }

    pub fn polar(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<FieldElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.form.polar(x, y))
    }

    /// `t(x) = n(x, 1)`.
    pub fn trace(&self, x: &[FieldElement]) -> Result<FieldElement> {
        self.polar(x, self.unit())
    }

    /// `t(x) 1 - x`.
    pub fn conjugate(&self, x: &[FieldElement]) -> Result<Vector> {
        let t = self.trace(x)?;
        Ok(linalg::sub(&scale(&t, self.unit()), x))
    }

    /// The hyperplane of trace-zero elements, `{x : n(x, 1) = 0}`.
    pub fn trace_zero_subspace(&self) -> Subspace {
        let row = self
            .form
            .polar_gram()
            .mul_vec(self.unit())
            .expect("unit has the algebra dimension");
        nullspace(&Matrix::from_rows(self.spec(), self.dim(), &[row]).expect("one row"))
    }

    /// Whether `x` lies in `F 1`.
    pub fn is_scalar(&self, x: &[FieldElement]) -> bool {
        let line = Subspace::span(self.spec(), self.dim(), &[self.unit().clone()]).expect("unit");
        line.contains(x).unwrap_or(false)
    }
}

/// A composition algebra of dimension eight with nondegenerate polar form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyAlgebra(CompositionAlgebra);

impl CayleyAlgebra {
    pub fn new(inner: CompositionAlgebra) -> Result<Self> {
        if inner.dim() != 8 {
            return Err(Error::BadDimension(inner.dim()));
        }
        if !inner.form().is_nondegenerate() {
            return Err(Error::BadForm("polar form is degenerate".into()));
        }
        Ok(CayleyAlgebra(inner))
    }

    pub fn into_inner(self) -> CompositionAlgebra {
        self.0
    }

    /// Replaces one table entry, keeping the form. Used to build corrupted
    /// tables that the axiom checker must reject.
    pub fn with_product(&self, i: usize, j: usize, value: Vector) -> Result<Self> {
        let alg = self.alg().with_product(i, j, value)?;
        let mut inner = CompositionAlgebra::new(alg, self.form().clone())?;
        inner.grading = self.grading.clone();
        CayleyAlgebra::new(inner)
    }
}

impl std::ops::Deref for CayleyAlgebra {
    type Target = CompositionAlgebra;

    fn deref(&self) -> &CompositionAlgebra {
        &self.0
    }
}

/// Solves `target = a * p + b * q` for scalars `(a, b)` with `p`, `q`
/// linearly independent.
fn coefficients_on(spec: FieldSpec, p: &[FieldElement], q: &[FieldElement], target: &[FieldElement]) -> Option<(FieldElement, FieldElement)> {
    let m = Matrix::from_columns(spec, p.len(), &[p.to_vec(), q.to_vec()]).ok()?;
    let sol = solve(&m, target).ok()??;
    Some((sol[0].clone(), sol[1].clone()))
}

/// Reads the norm off the multiplication table.
///
/// For each basis vector `b`, `b^2 = t(b) b - n(b) 1` determines the trace
/// and norm; the polar values then follow from
/// `b_i b_j + b_j b_i - t(b_i) b_j - t(b_j) b_i + n(b_i, b_j) 1 = 0`.
/// Fails with [`Error::NotQuadratic`] when the table violates either identity.
pub fn derive_form(alg: &AlgebraStructure) -> Result<QuadraticFormData> {
    let spec = alg.spec();
    let n = alg.dim();
    let unit = alg.unit().ok_or(Error::NotUnital)?.clone();
    let mut traces = Vec::with_capacity(n);
    let mut norms = Vec::with_capacity(n);
    for i in 0..n {
        let b = alg.basis_vector(i);
        let sq = alg.product(i, i);
        if let Some(scalar) = scalar_multiple(&unit, &b) {
            traces.push(spec.from_i64(2) * &scalar);
            norms.push(scalar.square());
            continue;
        }
        let (t, minus_n) = coefficients_on(spec, &b, &unit, sq)
            .ok_or_else(|| Error::NotQuadratic(format!("b{i}^2 is not in span(b{i}, 1)")))?;
        traces.push(t);
        norms.push(-minus_n);
    }
    let mut gram = Matrix::zeros(spec, n, n);
    for i in 0..n {
        gram.set(i, i, spec.from_i64(2) * &norms[i]);
        for j in i + 1..n {
            let bi = alg.basis_vector(i);
            let bj = alg.basis_vector(j);
            // n(b_i, b_j) 1 = t(b_i) b_j + t(b_j) b_i - b_i b_j - b_j b_i
            let rhs = linalg::sub(
                &linalg::add(&scale(&traces[i], &bj), &scale(&traces[j], &bi)),
                &linalg::add(alg.product(i, j), alg.product(j, i)),
            );
            let value = scalar_multiple(&unit, &rhs).ok_or_else(|| {
                Error::NotQuadratic(format!(
                    "b{i} b{j} + b{j} b{i} - t(b{i}) b{j} - t(b{j}) b{i} = {} is not a scalar",
                    format_vector(&rhs)
                ))
            })?;
            gram.set(i, j, value.clone());
            gram.set(j, i, value);
        }
    }
    QuadraticFormData::new(norms, gram)
}

/// The scalar `c` with `v = c u`, if any (`u` nonzero).
pub fn scalar_multiple(u: &[FieldElement], v: &[FieldElement]) -> Option<FieldElement> {
    let k = u.iter().position(|x| !x.is_zero())?;
    let c = &v[k] / &u[k];
    let candidate = scale(&c, u);
    (candidate == v).then_some(c)
}

/// Which identity an axiom check exercises.
pub const AXIOM_NAMES: [&str; 8] = [
    "unit",
    "polar_diagonal",
    "composition",
    "left_alternative",
    "right_alternative",
    "degree_two",
    "linearized_degree_two",
    "involution_antihomomorphism",
];

/// Outcome of running every identity over a pool of pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub pairs_checked: usize,
    pub failure: Option<AxiomFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub identity: &'static str,
    pub x: Vector,
    pub y: Vector,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks, on every pair `(x, y)`: unit law, `n(x,x) = 2 n(x)`,
/// `n(xy) = n(x) n(y)`, `(xx)y = x(xy)`, `y(xx) = (yx)x`, the degree-2
/// identity and its linearization, and `conj(xy) = conj(y) conj(x)`.
/// Stops at the first counterexample.
pub fn check_identities(c: &CompositionAlgebra, pairs: &[(Vector, Vector)]) -> AxiomReport {
    let spec = c.spec();
    let one = c.unit();
    let two = spec.from_i64(2);
    for (count, (x, y)) in pairs.iter().enumerate() {
        let fail = |identity| AxiomReport {
            pairs_checked: count + 1,
            failure: Some(AxiomFailure {
                identity,
                x: x.clone(),
                y: y.clone(),
            }),
        };
        if c.mul(one, x) != *x || c.mul(x, one) != *x {
            return fail("unit");
        }
        let nx = c.form.norm(x);
        let ny = c.form.norm(y);
        if c.form.polar(x, x) != &two * &nx {
            return fail("polar_diagonal");
        }
        let xy = c.mul(x, y);
        if c.form.norm(&xy) != &nx * &ny {
            return fail("composition");
        }
        let xx = c.mul(x, x);
        if c.mul(&xx, y) != c.mul(x, &xy) {
            return fail("left_alternative");
        }
        let yx = c.mul(y, x);
        if c.mul(y, &xx) != c.mul(&yx, x) {
            return fail("right_alternative");
        }
        let tx = c.form.polar(x, one);
        let ty = c.form.polar(y, one);
        let deg2 = linalg::add(&linalg::sub(&xx, &scale(&tx, x)), &scale(&nx, one));
        if !is_zero_vector(&deg2) {
            return fail("degree_two");
        }
        let nxy = c.form.polar(x, y);
        let lin = linalg::add(
            &linalg::sub(
                &linalg::sub(&linalg::add(&xy, &yx), &scale(&tx, y)),
                &scale(&ty, x),
            ),
            &scale(&nxy, one),
        );
        if !is_zero_vector(&lin) {
            return fail("linearized_degree_two");
        }
        let conj = |v: &Vector| linalg::sub(&scale(&c.form.polar(v, one), one), v);
        if conj(&xy) != c.mul(&conj(y), &conj(x)) {
            return fail("involution_antihomomorphism");
        }
    }
    AxiomReport {
        pairs_checked: pairs.len(),
        failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // the two-dimensional split algebra F x F with idempotents e1, e2
    fn split_pair(spec: FieldSpec) -> AlgebraStructure {
        let v = |a, b| linalg::vector_from_i64(spec, &[a, b]);
        AlgebraStructure::new(
            spec,
            2,
            vec![vec![v(1, 0), v(0, 0)], vec![v(0, 0), v(0, 1)]],
            Some(v(1, 1)),
        )
        .unwrap()
    }

    #[test]
    fn derive_form_of_split_pair() {
        let spec = FieldSpec::Rational;
        let f = derive_form(&split_pair(spec)).unwrap();
        assert_eq!(f.basis_norms(), &linalg::vector_from_i64(spec, &[0, 0]));
        assert_eq!(f.polar_gram(), &Matrix::from_i64(spec, &[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn unit_is_validated() {
        let spec = FieldSpec::Rational;
        let alg = split_pair(spec);
        let bad = AlgebraStructure::new(spec, 2, alg.table(), Some(linalg::vector_from_i64(spec, &[1, 0])));
        assert_eq!(bad, Err(Error::NotUnital));
    }

    #[test]
    fn mismatched_lengths() {
        let spec = FieldSpec::Rational;
        let alg = split_pair(spec);
        assert!(matches!(
            alg.multiply(&linalg::vector_from_i64(spec, &[1]), &alg.basis_vector(0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn form_validation() {
        let spec = FieldSpec::Rational;
        let norms = linalg::vector_from_i64(spec, &[1, 1]);
        let asym = Matrix::from_i64(spec, &[&[2, 1], &[0, 2]]);
        assert!(matches!(QuadraticFormData::new(norms.clone(), asym), Err(Error::BadForm(_))));
        let bad_diag = Matrix::from_i64(spec, &[&[1, 0], &[0, 2]]);
        assert!(matches!(QuadraticFormData::new(norms, bad_diag), Err(Error::BadForm(_))));
    }

    #[test]
    fn non_quadratic_table_is_rejected() {
        // F[x]/(x^3) truncated to span(1, x, x^2) is not quadratic
        let spec = FieldSpec::Rational;
        let v = |a, b, c| linalg::vector_from_i64(spec, &[a, b, c]);
        let table = vec![
            vec![v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)],
            vec![v(0, 1, 0), v(0, 0, 1), v(0, 0, 0)],
            vec![v(0, 0, 1), v(0, 0, 0), v(0, 0, 0)],
        ];
        let alg = AlgebraStructure::new(spec, 3, table, Some(v(1, 0, 0))).unwrap();
        assert!(matches!(derive_form(&alg), Err(Error::NotQuadratic(_))));
    }
}
