//! Concrete Cayley algebras: the split algebra in its canonical basis, the
//! Cayley-Dickson doubling tower, and isotropy classification.

use crate::algebra::{derive_form, AlgebraStructure, CayleyAlgebra, CompositionAlgebra, Grading, QuadraticFormData};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{self, is_zero_vector, scale, zero_vector, Matrix, Vector};
use crate::sample::SampleSpec;

pub const E1: usize = 0;
pub const E2: usize = 1;
pub const U1: usize = 2;
pub const U2: usize = 3;
pub const U3: usize = 4;
pub const V1: usize = 5;
pub const V2: usize = 6;
pub const V3: usize = 7;

/// Labels of the canonical basis, in index order. Indices 0..2 span `K`,
/// 2..5 span `U` and 5..8 span `V`.
pub const CANONICAL_LABELS: [&str; 8] = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"];

// Entry (i, j) encodes b_i b_j as +-(k + 1) for +-b_k, 0 for zero.
const SPLIT_TABLE: [[i8; 8]; 8] = [
    //  e1  e2  u1  u2  u3  v1  v2  v3
    [1, 0, 3, 4, 5, 0, 0, 0],     // e1
    [0, 2, 0, 0, 0, 6, 7, 8],     // e2
    [0, 3, 0, 8, -7, -1, 0, 0],   // u1
    [0, 4, -8, 0, 6, 0, -1, 0],   // u2
    [0, 5, 7, -6, 0, 0, 0, -1],   // u3
    [6, 0, -2, 0, 0, 0, 5, -4],   // v1
    [7, 0, 0, -2, 0, -5, 0, 3],   // v2
    [8, 0, 0, 0, -2, 4, -3, 0],   // v3
];

/// Builds a vector from `(basis index, coefficient)` pairs.
pub fn combination(spec: FieldSpec, dim: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = zero_vector(spec, dim);
    for &(i, c) in terms {
        v[i] = &v[i] + spec.from_i64(c);
    }
    v
}

/// Renders a vector of the split algebra in the canonical labels, e.g.
/// `u1 - v1` or `-1/2 e1 + 1/2 e2`.
pub fn format_canonical(v: &[FieldElement]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push(' ');
        }
        out.push_str(CANONICAL_LABELS[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The split Cayley algebra over `spec` in its canonical basis
/// `e1, e2, u1, u2, u3, v1, v2, v3`, with unit `e1 + e2` and the grading
/// `K + U + V`. The norm is read off the table by [`derive_form`].
pub fn split_cayley(spec: FieldSpec) -> CayleyAlgebra {
    let table: Vec<Vec<Vector>> = SPLIT_TABLE
        .iter()
        .map(|row| {
            row.iter()
                .map(|&code| {
                    let mut v = zero_vector(spec, 8);
                    if code != 0 {
                        let k = code.unsigned_abs() as usize - 1;
                        v[k] = spec.from_i64(code.signum() as i64);
                    }
                    v
                })
                .collect()
        })
        .collect();
    let unit = combination(spec, 8, &[(E1, 1), (E2, 1)]);
    let alg = AlgebraStructure::new(spec, 8, table, Some(unit)).expect("canonical table is unital");
    let form = derive_form(&alg).expect("canonical table satisfies the degree-2 identity");
    let grading = Grading {
        blocks: [vec![E1, E2], vec![U1, U2, U3], vec![V1, V2, V3]],
    };
    let inner = CompositionAlgebra::new(alg, form)
        .expect("form matches the table")
        .with_grading(grading);
    CayleyAlgebra::new(inner).expect("split norm is nondegenerate in every characteristic")
}

/// The ground field as a one-dimensional composition algebra, `n(x) = x^2`.
pub fn ground_field(spec: FieldSpec) -> CompositionAlgebra {
    let one = vec![spec.one()];
    let alg = AlgebraStructure::new(spec, 1, vec![vec![one.clone()]], Some(one)).expect("F is unital");
    let form = QuadraticFormData::new(vec![spec.one()], Matrix::from_rows(spec, 1, &[vec![spec.from_i64(2)]]).expect("1x1"))
        .expect("x^2 has polar 2xy");
    CompositionAlgebra::new(alg, form).expect("dimensions agree")
}

/// Input to one doubling step.
#[derive(Clone, Debug)]
pub struct CdParams {
    pub base: CompositionAlgebra,
    pub mu: FieldElement,
}

/// One Cayley-Dickson doubling of `base` (dimension 1, 2 or 4):
///
/// `(a, b)(c, d) = (ac + mu conj(d) b, da + b conj(c))`, with
/// `conj(a, b) = (conj(a), -b)` and `n(a, b) = n(a) - mu n(b)`.
///
/// The basis of the result is `(b_i, 0)` followed by `(0, b_i)`.
pub fn cayley_dickson(params: &CdParams) -> Result<CompositionAlgebra> {
    let base = &params.base;
    let mu = &params.mu;
    let n = base.dim();
    if ![1, 2, 4].contains(&n) {
        return Err(Error::BadDimension(n));
    }
    if mu.spec() != base.spec() {
        return Err(Error::FieldMismatch(base.spec().to_string(), mu.spec().to_string()));
    }
    if mu.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let spec = base.spec();
    let conj = |v: &Vector| base.conjugate(v).expect("base-sized vector");
    let split = |i: usize| -> (Vector, Vector) {
        let zero = zero_vector(spec, n);
        if i < n {
            (base.basis_vector(i), zero)
        } else {
            (zero, base.basis_vector(i - n))
        }
    };
    let mut table = vec![vec![Vec::new(); 2 * n]; 2 * n];
    for (i, row) in table.iter_mut().enumerate() {
        let (a, b) = split(i);
        for (j, entry) in row.iter_mut().enumerate() {
            let (c, d) = split(j);
            let first = linalg::add(&base.mul(&a, &c), &scale(mu, &base.mul(&conj(&d), &b)));
            let second = linalg::add(&base.mul(&d, &a), &base.mul(&b, &conj(&c)));
            *entry = [first, second].concat();
        }
    }
    let unit = [base.unit().clone(), zero_vector(spec, n)].concat();
    let alg = AlgebraStructure::new(spec, 2 * n, table, Some(unit))?;

    let minus_mu = -mu;
    let norms = [
        base.form().basis_norms().clone(),
        scale(&minus_mu, base.form().basis_norms()),
    ]
    .concat();
    let g = base.form().polar_gram();
    let mut gram = Matrix::zeros(spec, 2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, g.get(i, j).clone());
            gram.set(n + i, n + j, &minus_mu * g.get(i, j));
        }
    }
    CompositionAlgebra::new(alg, QuadraticFormData::new(norms, gram)?)
}

/// Doubles the ground field once per parameter.
pub fn cd_tower(spec: FieldSpec, mus: &[FieldElement]) -> Result<CompositionAlgebra> {
    mus.iter().try_fold(ground_field(spec), |base, mu| {
        cayley_dickson(&CdParams {
            base,
            mu: mu.clone(),
        })
    })
}

/// The eight-dimensional algebra `CD(mu1, mu2, mu3)` over `spec`.
pub fn cd_octonions(spec: FieldSpec, mus: [FieldElement; 3]) -> Result<CayleyAlgebra> {
    CayleyAlgebra::new(cd_tower(spec, &mus)?)
}

/// `CD(-1, -1, -1)` over the rationals: norm is the sum of eight squares.
pub fn division_octonions_q() -> CayleyAlgebra {
    let q = FieldSpec::Rational;
    cd_octonions(q, [q.from_i64(-1), q.from_i64(-1), q.from_i64(-1)]).expect("nondegenerate over Q")
}

/// Isotropy class of the norm, with a witness when split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isotropy {
    /// A nonzero vector of norm zero was found.
    Split(Vector),
    /// Certified anisotropic: a definite diagonal form over the rationals.
    Division,
    /// Neither certificate applies.
    Unknown,
}

impl Isotropy {
    pub fn name(&self) -> &'static str {
        match self {
            Isotropy::Split(_) => "split",
            Isotropy::Division => "division",
            Isotropy::Unknown => "unknown",
        }
    }
}

const EXHAUSTIVE_LIMIT: u64 = 100_000;
const SUBSPACE_LIMIT: u64 = 10_000_000;

/// Classifies the norm of a composition algebra.
///
/// Basis vectors are tried first. Over `GF(p)` the search then runs
/// exhaustively over `F^dim` when that has at most 10^5 elements, otherwise
/// over the span of the first three basis vectors, where a zero always exists
/// because a quadratic form in three variables over a finite field is
/// isotropic. Over the rationals a definite diagonal form certifies
/// `Division`; otherwise basis combinations and a seeded random pool are
/// searched. Absence of a witness alone never yields `Division`.
pub fn classify_isotropy(c: &CompositionAlgebra) -> Isotropy {
    let spec = c.spec();
    let dim = c.dim();
    let form = c.form();
    let isotropic = |v: &Vector| !is_zero_vector(v) && form.norm(v).is_zero();
    for i in 0..dim {
        let b = c.basis_vector(i);
        if isotropic(&b) {
            return Isotropy::Split(b);
        }
    }
    match spec {
        FieldSpec::Prime(p) => {
            let full = (p as u128).pow(dim as u32);
            let span = dim.min(3);
            let count = if full <= EXHAUSTIVE_LIMIT as u128 {
                Some(dim)
            } else if (p as u128).pow(span as u32) <= SUBSPACE_LIMIT as u128 {
                Some(span)
            } else {
                None
            };
            if let Some(k) = count {
                if let Some(w) = lexicographic_search(spec, p, dim, k, &isotropic) {
                    return Isotropy::Split(w);
                }
                return Isotropy::Unknown;
            }
            random_search(spec, dim, &isotropic).map_or(Isotropy::Unknown, Isotropy::Split)
        }
        FieldSpec::Rational => {
            let g = form.polar_gram();
            let diagonal = (0..dim).all(|i| (0..dim).all(|j| i == j || g.get(i, j).is_zero()));
            let signs: Vec<i8> = form.basis_norms().iter().filter_map(FieldElement::signum).collect();
            let definite = signs.iter().all(|&s| s == 1) || signs.iter().all(|&s| s == -1);
            if diagonal && definite && !signs.contains(&0) {
                return Isotropy::Division;
            }
            random_search(spec, dim, &isotropic).map_or(Isotropy::Unknown, Isotropy::Split)
        }
    }
}

/// Nonzero vectors supported on the first `k` coordinates, in lexicographic
/// order of their residue tuples.
fn lexicographic_search(spec: FieldSpec, p: u64, dim: usize, k: usize, accept: &dyn Fn(&Vector) -> bool) -> Option<Vector> {
    let total = p.pow(k as u32);
    for code in 1..total {
        let mut v = zero_vector(spec, dim);
        let mut rest = code;
        for slot in (0..k).rev() {
            v[slot] = spec.from_i64((rest % p) as i64);
            rest /= p;
        }
        if accept(&v) {
            return Some(v);
        }
    }
    None
}

fn random_search(spec: FieldSpec, dim: usize, accept: &dyn Fn(&Vector) -> bool) -> Option<Vector> {
    let pool = SampleSpec::new(0x15_07_0b1c, 2000).vectors(spec, dim);
    pool.into_iter().find(|v| accept(v))
}
