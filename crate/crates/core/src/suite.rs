//! Finitely checkable consequences of the structure theory of local and
//! 2-local derivations of Cayley algebras.
//!
//! Each suite turns a statement into exact subspace equalities, solvability
//! of interpolation systems, and explicit witnesses, evaluated over a
//! deterministic sample pool. A pass means "holds on every sampled
//! instance", never a proof of the universal statement.

use crate::algebra::{check_identities, derive_form, AlgebraStructure, CayleyAlgebra};
use crate::check::CheckOutcome;
use crate::construct::{classify_isotropy, combination, format_canonical, Isotropy, E1, E2, U1, U2, U3, V1, V2, V3};
use crate::derivation::{combine, derivation_algebra, DerivationSpaces, MapKind, MapSpace};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{self, format_vector, nullspace, scale, unit_vector, Matrix, Subspace, Vector};
use crate::sample::SampleSpec;

/// The verification suites, keyed by their command-line names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Axioms,
    LocalDerivations,
    SplitTwoLocal,
    EigenPairs,
    SplitStabilizers,
    DivisionStabilizers,
    DivisionTwoLocal,
    MalcevJordan,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Axioms,
        Suite::LocalDerivations,
        Suite::SplitTwoLocal,
        Suite::EigenPairs,
        Suite::SplitStabilizers,
        Suite::DivisionStabilizers,
        Suite::DivisionTwoLocal,
        Suite::MalcevJordan,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::LocalDerivations => "thm31",
            Suite::SplitTwoLocal => "thm41",
            Suite::EigenPairs => "lemma43",
            Suite::SplitStabilizers => "lemma44",
            Suite::DivisionStabilizers => "cor44",
            Suite::DivisionTwoLocal => "thm45",
            Suite::MalcevJordan => "section5",
        }
    }

    pub fn from_key(key: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.key() == key)
    }

    /// Statement under test, used when the whole suite is skipped.
    pub fn anchor(self) -> &'static str {
        match self {
            Suite::Axioms => "n(xy) = n(x)n(y), alternative, x^2 - t(x)x + n(x)1 = 0",
            Suite::LocalDerivations => "LocDer(C) = {d in so(C,n) : d(1) = 0}",
            Suite::SplitTwoLocal => "split C: every 2-local derivation is a derivation",
            Suite::EigenPairs => "d(a) = 0 and ab = lambda b imply a d(b) = lambda d(b)",
            Suite::SplitStabilizers => "stabilizer orbits in the split algebra have dimension 5",
            Suite::DivisionStabilizers => "{d in Der : d(x) = 0} y = (F1 + Fx + Fy)^perp",
            Suite::DivisionTwoLocal => "division C: 2-local derivations = LocDer(C)",
            Suite::MalcevJordan => "Der(C0^-) = Der(C)|C0 and Der(C^+) = {d in so(C,n) : d(1) = 0}",
        }
    }
}

/// An algebra together with everything the suites share.
#[derive(Clone, Debug)]
pub struct Subject {
    pub algebra: CayleyAlgebra,
    pub spaces: DerivationSpaces,
    pub isotropy: Isotropy,
}

impl Subject {
    pub fn new(algebra: CayleyAlgebra) -> Self {
        let spaces = DerivationSpaces::compute(&algebra);
        let isotropy = classify_isotropy(&algebra);
        Subject {
            algebra,
            spaces,
            isotropy,
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.algebra.spec()
    }

    fn fmt(&self, v: &[FieldElement]) -> String {
        if self.algebra.grading().is_some() {
            format_canonical(v)
        } else {
            format_vector(v)
        }
    }

    fn require_split(&self) -> Result<()> {
        if self.algebra.grading().is_some() && matches!(self.isotropy, Isotropy::Split(_)) {
            Ok(())
        } else {
            Err(Error::NotSplit)
        }
    }

    fn require_division(&self) -> Result<()> {
        if self.isotropy != Isotropy::Division {
            return Err(Error::NotDivision);
        }
        if self.spec().characteristic() != 0 {
            return Err(Error::NotCharacteristicZero);
        }
        Ok(())
    }
}

/// Runs one suite. Inapplicable suites return the precondition error.
pub fn run_suite(suite: Suite, subject: &Subject, samples: &SampleSpec) -> Result<Vec<CheckOutcome>> {
    match suite {
        Suite::Axioms => axioms(subject, samples),
        Suite::LocalDerivations => local_derivations(subject, samples),
        Suite::SplitTwoLocal => split_two_local(subject, samples),
        Suite::EigenPairs => eigen_pairs(subject, samples),
        Suite::SplitStabilizers => split_stabilizers(subject),
        Suite::DivisionStabilizers => division_stabilizers(subject, samples),
        Suite::DivisionTwoLocal => division_two_local(subject, samples),
        Suite::MalcevJordan => malcev_jordan(subject, samples),
    }
}

pub fn format_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m.row_vectors().iter().map(|r| format_vector(r)).collect();
    format!("[{}]", rows.join(", "))
}

// ---------------------------------------------------------------------------
// interpolation

/// Whether some derivation agrees with `delta` at both `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationVerdict {
    pub delta: Matrix,
    pub x: Vector,
    pub y: Vector,
    pub solvable: bool,
    /// Coordinates of an interpolating derivation in the basis of Der.
    pub witness: Option<Vector>,
}

impl InterpolationVerdict {
    /// Rebuilds the witness derivation and checks it against `delta`.
    pub fn witness_holds(&self, der_basis: &[Matrix]) -> Result<bool> {
        let Some(w) = &self.witness else {
            return Ok(false);
        };
        let d = combine(der_basis, w);
        Ok(d.mul_vec(&self.x)? == self.delta.mul_vec(&self.x)?
            && d.mul_vec(&self.y)? == self.delta.mul_vec(&self.y)?)
    }
}

/// The `2n x dim Der` system `sum_k c_k d_k(x) = delta(x)`,
/// `sum_k c_k d_k(y) = delta(y)` for a fixed pair, reusable across many maps.
#[derive(Clone, Debug)]
pub struct PairSystem {
    x: Vector,
    y: Vector,
    system: Matrix,
}

impl PairSystem {
    pub fn new(der_basis: &[Matrix], x: &[FieldElement], y: &[FieldElement]) -> Result<Self> {
        let spec = x.first().map(|e| e.spec()).ok_or(Error::BadDimension(0))?;
        let columns = der_basis
            .iter()
            .map(|d| {
                let mut col = d.mul_vec(x)?;
                col.extend(d.mul_vec(y)?);
                Ok(col)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PairSystem {
            x: x.to_vec(),
            y: y.to_vec(),
            system: Matrix::from_columns(spec, 2 * x.len(), &columns)?,
        })
    }

    pub fn interpolate(&self, deltas: &[Matrix]) -> Result<Vec<InterpolationVerdict>> {
        let rhs = deltas
            .iter()
            .map(|d| {
                let mut b = d.mul_vec(&self.x)?;
                b.extend(d.mul_vec(&self.y)?);
                Ok(b)
            })
            .collect::<Result<Vec<_>>>()?;
        let solutions = linalg::solve_many(&self.system, &rhs)?;
        Ok(deltas
            .iter()
            .zip(solutions)
            .map(|(d, sol)| InterpolationVerdict {
                delta: d.clone(),
                x: self.x.clone(),
                y: self.y.clone(),
                solvable: sol.is_some(),
                witness: sol,
            })
            .collect())
    }
}

pub fn pair_interpolate(der: &MapSpace, delta: &Matrix, x: &[FieldElement], y: &[FieldElement]) -> Result<InterpolationVerdict> {
    let system = PairSystem::new(&der.basis_maps(), x, y)?;
    Ok(system.interpolate(std::slice::from_ref(delta))?.remove(0))
}

// ---------------------------------------------------------------------------
// axioms

fn axioms(s: &Subject, samples: &SampleSpec) -> Result<Vec<CheckOutcome>> {
    let c = &s.algebra;
    let spec = s.spec();
    let pairs = samples.pairs(spec, c.dim());
    let mut out = Vec::new();

    let mut o = CheckOutcome::new("axioms.identities", Suite::Axioms.anchor());
    let report = check_identities(c, &pairs);
    o.set_dim("pairs", report.pairs_checked);
    if let Some(f) = &report.failure {
        o.set_witness("identity", f.identity);
        o.set_witness("x", s.fmt(&f.x));
        o.set_witness("y", s.fmt(&f.y));
        o.fail(format!("{} fails", f.identity));
    }
    out.push(o);

    let mut o = CheckOutcome::new("axioms.form", "n read off b^2 = t(b)b - n(b)1 agrees with the stored norm; polar form nondegenerate");
    o.require(c.form().is_nondegenerate(), "polar form is degenerate");
    match derive_form(c.alg()) {
        Ok(f) => o.require(&f == c.form(), "stored norm differs from the table-derived norm"),
        Err(e) => o.fail(e.to_string()),
    }
    o.set_witness("isotropy", s.isotropy.name());
    if let Isotropy::Split(w) = &s.isotropy {
        o.set_witness("isotropic_vector", s.fmt(w));
    }
    out.push(o);

    let mut o = CheckOutcome::new("axioms.trace_zero", "C0 = {x : t(x) = 0} has dimension 7; 1 in C0 iff char F = 2");
    let c0 = c.trace_zero_subspace();
    o.set_dim("c0", c0.dim());
    o.require(c0.dim() == 7, "trace-zero subspace is not 7-dimensional");
    o.require(c0.contains(c.unit())? == (spec.characteristic() == 2), "unit membership in C0 is wrong for this characteristic");
    out.push(o);

    if let Some(grading) = c.grading() {
        let mut o = CheckOutcome::new("axioms.grading", "C_i C_j in C_(i+j mod 3) for K, U, V; n(e1,e2) = n(ui,vi) = 1");
        for i in 0..8 {
            for j in 0..8 {
                let (di, dj) = (grading.degree(i), grading.degree(j));
                let target = di.zip(dj).map(|(a, b)| (a + b) % 3);
                let p = c.alg().product(i, j);
                let stray = (0..8).any(|k| !p[k].is_zero() && grading.degree(k) != target);
                o.require(!stray, format!("grading violated at b{i} b{j}"));
            }
        }
        let g = c.form().polar_gram();
        for i in 0..8 {
            o.require(c.form().basis_norms()[i].is_zero(), "a canonical basis vector is not isotropic");
            for j in 0..8 {
                let hyperbolic = [(E1, E2), (U1, V1), (U2, V2), (U3, V3)]
                    .iter()
                    .any(|&(a, b)| (a, b) == (i, j) || (b, a) == (i, j));
                let expect = if hyperbolic { spec.one() } else { spec.zero() };
                o.require(*g.get(i, j) == expect, format!("unexpected polar value n(b{i}, b{j})"));
            }
        }
        out.push(o);
    }

    let mut o = CheckOutcome::new("axioms.mutation", "changing one product (b2 b3 := b6) breaks the identities");
    let mut replacement = unit_vector(spec, 8, 6);
    if c.alg().product(2, 3) == &replacement {
        replacement = unit_vector(spec, 8, 5);
    }
    let corrupted = c.with_product(2, 3, replacement)?;
    let report = check_identities(&corrupted, &pairs);
    match &report.failure {
        Some(f) => {
            o.set_witness("identity", f.identity);
            o.set_witness("x", s.fmt(&f.x));
            o.set_witness("y", s.fmt(&f.y));
        }
        None => o.fail("corrupted table passed every identity"),
    }
    out.push(o);
    Ok(out)
}

// ---------------------------------------------------------------------------
// local derivations

fn local_derivations(s: &Subject, samples: &SampleSpec) -> Result<Vec<CheckOutcome>> {
    let c = &s.algebra;
    let sp = &s.spaces;
    let spec = s.spec();
    let mut out = Vec::new();

    let mut o = CheckOutcome::new("thm31.dimensions", "dim Der = 14, dim so(C,n) = 28, dim LocDer = 21, dim so(C0,n) = 21")
        .dim("der", sp.der.dim())
        .dim("so", sp.skew.dim())
        .dim("locder", sp.locder.dim())
        .dim("so_c0", sp.so_c0.dim());
    o.require(
        (sp.der.dim(), sp.skew.dim(), sp.locder.dim(), sp.so_c0.dim()) == (14, 28, 21, 21),
        "dimension table differs from (14, 28, 21, 21)",
    );
    out.push(o);

    let mut o = CheckOutcome::new("thm31.inclusions", "Der(C) in {d in so(C,n) : d(1) = 0} in so(C,n)");
    o.require(sp.der.is_subspace_of(&sp.locder)?, "a derivation is not skew or moves 1");
    o.require(sp.locder.is_subspace_of(&sp.skew)?, "LocDer is not inside so(C,n)");
    out.push(o);

    let mut o = CheckOutcome::new("thm31.brackets", "[d,e] = de - ed stays in Der and in LocDer");
    for (name, space) in [("der", &sp.der), ("locder", &sp.locder)] {
        if let Some((i, j)) = space.commutator_violation()? {
            o.fail(format!("{name} basis maps {i} and {j} do not close"));
        }
    }
    out.push(o);

    let mut o = CheckOutcome::new("thm31.restriction", "d -> d|C0 maps LocDer(C) isomorphically onto so(C0,n)");
    let mut restricted = Vec::new();
    for d in sp.locder.basis_maps() {
        match sp.frame.restrict(&d)? {
            Some(r) => {
                o.require(sp.so_c0.contains(&r)?, "a restricted map is not in so(C0,n)");
                restricted.push(r);
            }
            None => o.fail("a local derivation does not preserve C0"),
        }
    }
    let image = MapSpace::span(MapKind::Custom, spec, sp.frame.dim(), &restricted)?;
    o.set_dim("image", image.dim());
    o.require(image.dim() == sp.locder.dim() && image.equal(&sp.so_c0)?, "restriction is not a bijection");
    out.push(o);

    if spec.characteristic() == 2 {
        let mut o = CheckOutcome::new("thm31.char2_unit", "char 2: 1 in C0 and every d in so(C0,n) has d(1) = 0");
        match sp.frame.coordinates(c.unit())? {
            Some(one) => {
                for d in sp.so_c0.basis_maps() {
                    o.require(linalg::is_zero_vector(&d.mul_vec(&one)?), "a map in so(C0,n) moves 1");
                }
            }
            None => o.fail("1 is not in C0"),
        }
        out.push(o);
    }

    if spec.characteristic() == 3 {
        let mut o = CheckOutcome::new("thm31.char3_inner", "char 3: ad_x = L_x - R_x is a derivation for x in C0");
        let mut ads = Vec::new();
        for x in &sp.frame.basis {
            let ad = c.alg().left_mult_matrix(x).add(&c.alg().right_mult_matrix(x).scaled(&-spec.one()))?;
            o.require(sp.der.contains(&ad)?, format!("ad_x is not a derivation for x = {}", s.fmt(x)));
            ads.push(ad);
        }
        let span = MapSpace::span(MapKind::Custom, spec, 8, &ads)?;
        o.set_dim("inner", span.dim());
        o.require(span.dim() == 7, "inner derivations do not span 7 dimensions");
        out.push(o);
    }

    let gram = c.form().polar_gram();
    let locder_basis = sp.locder.basis_maps();
    let mut member = CheckOutcome::new("thm31.local_membership", "Delta(x) in Der(C)x for Delta in LocDer and pooled x");
    let mut orbit = CheckOutcome::new("thm31.orbit_complement", "Der(C)x = (F1 + Fx)^perp for x not in F1");
    let (mut tested, mut nonscalar) = (0usize, 0usize);
    for x in samples.vectors(spec, 8) {
        let dx = sp.der.eval_subspace(&x)?;
        for delta in &locder_basis {
            if !dx.contains(&delta.mul_vec(&x)?)? {
                member.set_witness("x", s.fmt(&x));
                member.fail("Delta(x) outside Der(C)x");
            }
            tested += 1;
        }
        if c.is_scalar(&x) {
            orbit.require(dx.dim() == 0, "Der(C) moves a scalar");
            continue;
        }
        nonscalar += 1;
        let complement = Subspace::span(spec, 8, &[c.unit().clone(), x.clone()])?.orth_complement(gram)?;
        if dx != complement || dx.dim() != 6 {
            orbit.set_witness("x", s.fmt(&x));
            orbit.fail(format!("Der(C)x has dim {} and differs from (F1 + Fx)^perp", dx.dim()));
        }
    }
    member.set_dim("checks", tested);
    orbit.set_dim("points", nonscalar);
    out.push(member);
    out.push(orbit);

    if c.grading().is_some() {
        out.push(split_orbits(s)?);
    }
    Ok(out)
}

fn span_of(spec: FieldSpec, terms: &[&[(usize, i64)]]) -> Result<Subspace> {
    let vectors: Vec<Vector> = terms.iter().map(|t| combination(spec, 8, t)).collect();
    Subspace::span(spec, 8, &vectors)
}

/// Explicit orbits and the degree-zero piece on the canonical basis.
fn split_orbits(s: &Subject) -> Result<CheckOutcome> {
    let c = &s.algebra;
    let sp = &s.spaces;
    let spec = s.spec();
    let mut o = CheckOutcome::new(
        "thm31.split_orbits",
        "Der(C)u1 = F(e1-e2) + U + Fv2 + Fv3; Der(C)(a e1 + b e2) = U + V for a != b; Der_0 = stabilizer of e1, e2",
    );
    let du1 = sp.der.eval_subspace(&c.basis_vector(U1))?;
    let expect = span_of(spec, &[&[(E1, 1), (E2, -1)], &[(U1, 1)], &[(U2, 1)], &[(U3, 1)], &[(V2, 1)], &[(V3, 1)]])?;
    o.require(du1 == expect, "Der(C)u1 differs from the expected span");

    let uv = span_of(spec, &[&[(U1, 1)], &[(U2, 1)], &[(U3, 1)], &[(V1, 1)], &[(V2, 1)], &[(V3, 1)]])?;
    for (a, b) in [(1, 0), (0, 1), (2, 1), (1, 3)] {
        if spec.from_i64(a) == spec.from_i64(b) {
            continue;
        }
        let x = combination(spec, 8, &[(E1, a), (E2, b)]);
        o.require(sp.der.eval_subspace(&x)? == uv, format!("Der(C)({a} e1 + {b} e2) is not U + V"));
    }

    let g0 = crate::derivation::graded_component_0(c)?;
    o.set_dim("der_0", g0.dim());
    o.require(g0.dim() == 8, "degree-zero piece is not 8-dimensional");
    let l = sp.der.stabilizer(&[c.basis_vector(E1), c.basis_vector(E2)])?;
    o.require(l.equal(&g0)?, "stabilizer of e1, e2 differs from the degree-zero piece");
    for d in g0.basis_maps() {
        let u_trace = [U1, U2, U3].iter().fold(spec.zero(), |acc, &i| acc + d.get(i, i));
        o.require(u_trace.is_zero(), "a degree-zero derivation has nonzero trace on U");
    }
    Ok(o)
}

// ---------------------------------------------------------------------------
// split 2-local

/// The map fixing u3, negating v3 and killing the other basis vectors.
pub fn phi_map(spec: FieldSpec) -> Matrix {
    let mut m = Matrix::zeros(spec, 8, 8);
    m.set(U3, U3, spec.one());
    m.set(V3, V3, -spec.one());
    m
}

/// `{f in so(C,n) : f(e1) = f(e2) = 0, f(U) in U, f(V) in V}`.
pub fn graded_skew_block(c: &CayleyAlgebra, skew: &MapSpace) -> Result<MapSpace> {
    let spec = c.spec();
    let grading = c.grading().ok_or(Error::NoGrading)?;
    let fixed = skew.stabilizer(&[c.basis_vector(E1), c.basis_vector(E2)])?;
    let mut allowed = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            if grading.degree(j) == Some(0) || grading.degree(i) == grading.degree(j) {
                allowed.push(unit_vector(spec, 64, i * 8 + j));
            }
        }
    }
    let blocks = MapSpace::new(MapKind::Custom, 8, Subspace::span(spec, 64, &allowed)?)?;
    fixed.intersect(&blocks)
}

fn split_two_local(s: &Subject, samples: &SampleSpec) -> Result<Vec<CheckOutcome>> {
    s.require_split()?;
    let c = &s.algebra;
    let sp = &s.spaces;
    let spec = s.spec();
    let mut out = Vec::new();
    let phi = phi_map(spec);
    let g0 = crate::derivation::graded_component_0(c)?;

    let mut o = CheckOutcome::new("thm41.graded_sum", "P = {f in so(C,n) : f(K) = 0, f(U) in U, f(V) in V} = Der_0 + F phi");
    let p = graded_skew_block(c, &sp.skew)?;
    let phi_line = MapSpace::span(MapKind::Custom, spec, 8, std::slice::from_ref(&phi))?;
    let sum = g0.sum(&phi_line)?;
    o.set_dim("p", p.dim());
    o.set_dim("der_0", g0.dim());
    o.require(p.dim() == 9, "P is not 9-dimensional");
    o.require(!g0.contains(&phi)?, "phi lies in Der_0");
    o.require(sum.equal(&p)?, "P differs from Der_0 + F phi");
    out.push(o);

    let mut o = CheckOutcome::new("thm41.phi_not_derivation", "phi(u3) = u3, phi(v3) = -v3 is skew, fixes 1, and is not a derivation");
    o.require(sp.locder.contains(&phi)?, "phi is not in LocDer");
    o.require(!sp.der.contains(&phi)?, "phi is a derivation");
    out.push(o);

    let mut o = CheckOutcome::new("thm41.phi_obstruction", "a = u1 - v1, b = u2 + v3: ab = b, phi(a) = 0, a phi(b) = -u2 != phi(b) = -v3");
    let a = combination(spec, 8, &[(U1, 1), (V1, -1)]);
    let b = combination(spec, 8, &[(U2, 1), (V3, 1)]);
    let ab = c.mul(&a, &b);
    let phi_a = phi.mul_vec(&a)?;
    let phi_b = phi.mul_vec(&b)?;
    let a_phi_b = c.mul(&a, &phi_b);
    o.set_witness("a", s.fmt(&a));
    o.set_witness("b", s.fmt(&b));
    o.set_witness("ab", s.fmt(&ab));
    o.set_witness("phi(b)", s.fmt(&phi_b));
    o.set_witness("a*phi(b)", s.fmt(&a_phi_b));
    o.require(ab == b, "ab != b");
    o.require(linalg::is_zero_vector(&phi_a), "phi(a) != 0");
    o.require(phi_b == combination(spec, 8, &[(V3, -1)]), "phi(b) != -v3");
    o.require(a_phi_b == combination(spec, 8, &[(U2, -1)]), "a phi(b) != -u2");
    o.require(a_phi_b != phi_b, "a phi(b) = phi(b)");
    let verdict = pair_interpolate(&sp.der, &phi, &a, &b)?;
    o.set_witness("interpolation", if verdict.solvable { "solvable" } else { "not solvable" });
    o.require(!verdict.solvable, "some derivation agrees with phi at a and b");
    out.push(o);

    let mut o = CheckOutcome::new("thm41.graded_interpolation", "each d in Der_0 interpolates itself at every pooled pair");
    let der_basis = sp.der.basis_maps();
    let g0_basis = g0.basis_maps();
    let mut count = 0;
    for (x, y) in samples.pairs(spec, 8) {
        for v in PairSystem::new(&der_basis, &x, &y)?.interpolate(&g0_basis)? {
            count += 1;
            if !v.solvable || !v.witness_holds(&der_basis)? {
                o.set_witness("x", s.fmt(&x));
                o.set_witness("y", s.fmt(&y));
                o.fail("a degree-zero derivation failed to interpolate");
            }
        }
    }
    o.set_dim("systems", count);
    out.push(o);
    Ok(out)
}

// ---------------------------------------------------------------------------
// eigen-pairs

/// Roots in the field of `X^2 - tX + n`.
pub fn quadratic_roots(t: &FieldElement, n: &FieldElement) -> Vec<FieldElement> {
    let spec = t.spec();
    let mut roots: Vec<FieldElement> = if spec.characteristic() == 2 {
        spec.elements()
            .expect("GF(2) is finite")
            .filter(|x| (x * x - t * x + n).is_zero())
            .collect()
    } else {
        let two = spec.from_i64(2);
        let disc = t * t - &spec.from_i64(4) * n;
        match disc.sqrt() {
            Some(r) => vec![(t + &r) / &two, (t - &r) / &two],
            None => Vec::new(),
        }
    };
    roots.dedup();
    roots
}

fn eigen_pairs(s: &Subject, samples: &SampleSpec) -> Result<Vec<CheckOutcome>> {
    let c = &s.algebra;
    let sp = &s.spaces;
    let spec = s.spec();
    let mut out = Vec::new();

    if c.grading().is_some() {
        let mut o = CheckOutcome::new("lemma43.instance", "(u1 - v1)(u2 + v3) = u2 + v3");
        let a = combination(spec, 8, &[(U1, 1), (V1, -1)]);
        let b = combination(spec, 8, &[(U2, 1), (V3, 1)]);
        o.set_witness("ab", s.fmt(&c.mul(&a, &b)));
        o.require(c.mul(&a, &b) == b, "ab != b");
        out.push(o);
    }

    let mut o = CheckOutcome::new("lemma43.eigen_pairs", Suite::EigenPairs.anchor());
    let id = Matrix::identity(spec, 8);
    let mut scenarios = 0;
    for a in samples.vectors(spec, 8) {
        let stab = sp.der.stabilizer(std::slice::from_ref(&a))?.basis_maps();
        if stab.is_empty() {
            continue;
        }
        let la = c.alg().left_mult_matrix(&a);
        for lambda in quadratic_roots(&c.trace(&a)?, &c.norm(&a)?) {
            let eigen = nullspace(&la.add(&id.scaled(&-&lambda))?);
            for b in eigen.basis_vectors() {
                o.require(c.mul(&a, &b) == scale(&lambda, &b), "eigenvector computation is inconsistent");
                for d in &stab {
                    let db = d.mul_vec(&b)?;
                    scenarios += 1;
                    if c.mul(&a, &db) != scale(&lambda, &db) {
                        o.set_witness("a", s.fmt(&a));
                        o.set_witness("b", s.fmt(&b));
                        o.set_witness("lambda", lambda.to_string());
                        o.fail("a d(b) != lambda d(b)");
                    }
                }
            }
        }
    }
    o.set_dim("scenarios", scenarios);
    o.require(scenarios > 0, "no eigen-pair scenarios in the pool");
    out.push(o);
    Ok(out)
}

// ---------------------------------------------------------------------------
// split stabilizers

/// Values of `mu != 1` to test: the whole field for `p <= 7`, a fixed small
/// set otherwise.
pub fn mu_test_set(spec: FieldSpec) -> Vec<FieldElement> {
    let mut mus: Vec<FieldElement> = match spec {
        FieldSpec::Prime(p) if p <= 7 => spec.elements().expect("finite").collect(),
        _ => [0, -1, 2, 5].iter().map(|&m| spec.from_i64(m)).collect(),
    };
    mus.retain(|m| !m.is_one());
    mus.sort_by_key(|m| m.to_string());
    mus.dedup();
    mus
}

fn split_stabilizers(s: &Subject) -> Result<Vec<CheckOutcome>> {
    s.require_split()?;
    let c = &s.algebra;
    let sp = &s.spaces;
    let spec = s.spec();
    let mut out = Vec::new();
    let l = sp.der.stabilizer(&[c.basis_vector(E1), c.basis_vector(E2)])?;
    let u1v1 = combination(spec, 8, &[(U1, 1), (V1, 1)]);
    let lp = sp.der.stabilizer(std::slice::from_ref(&u1v1))?;

    let mut o = CheckOutcome::new("lemma44.l_orbit", "{d : d(e1) = d(e2) = 0}(u1 + v1) = span(u1 - v1, u2, u3, v2, v3)");
    let got = l.eval_subspace(&u1v1)?;
    let expect = span_of(spec, &[&[(U1, 1), (V1, -1)], &[(U2, 1)], &[(U3, 1)], &[(V2, 1)], &[(V3, 1)]])?;
    o.set_dim("stabilizer", l.dim());
    o.set_dim("orbit", got.dim());
    o.require(got == expect && got.dim() == 5, "orbit differs from span(u1 - v1, u2, u3, v2, v3)");
    out.push(o);

    let mut o = CheckOutcome::new("lemma44.lprime_mu", "{d : d(u1 + v1) = 0}(u1 + mu v1) = span(e1 - e2, u2, u3, v2, v3) for mu != 1");
    let expect = span_of(spec, &[&[(E1, 1), (E2, -1)], &[(U2, 1)], &[(U3, 1)], &[(V2, 1)], &[(V3, 1)]])?;
    let mus = mu_test_set(spec);
    for mu in &mus {
        let x = linalg::add(&c.basis_vector(U1), &scale(mu, &c.basis_vector(V1)));
        let got = lp.eval_subspace(&x)?;
        if got != expect || got.dim() != 5 {
            o.set_witness("mu", mu.to_string());
            o.fail(format!("orbit for mu = {mu} has dim {}", got.dim()));
        }
    }
    o.set_dim("stabilizer", lp.dim());
    o.set_dim("mu_values", mus.len());
    o.set_witness("mu_values", mus.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","));
    out.push(o);

    // Skewness forces this orbit into (u1 + v1)^perp, so u1 + v1 itself lies
    // in it only when n(u1 + v1, u1 + v1) = 2 vanishes.
    let mut o = CheckOutcome::new("lemma44.lprime_u2v2", "{d : d(u1 + v1) = 0}(u2 + v2) = span(e1 - e2, u1 - v1, u2 - v2, u3, v3)");
    let got = lp.eval_subspace(&combination(spec, 8, &[(U2, 1), (V2, 1)]))?;
    let expect = span_of(spec, &[&[(E1, 1), (E2, -1)], &[(U1, 1), (V1, -1)], &[(U2, 1), (V2, -1)], &[(U3, 1)], &[(V3, 1)]])?;
    o.set_dim("orbit", got.dim());
    o.require(got == expect && got.dim() == 5, "orbit differs from span(e1 - e2, u1 - v1, u2 - v2, u3, v3)");
    o.set_witness("contains_u1+v1", got.contains(&u1v1)?.to_string());
    o.set_witness("n(u1+v1,u1+v1)", c.form().polar(&u1v1, &u1v1).to_string());
    out.push(o);
    Ok(out)
}

// ---------------------------------------------------------------------------
// division algebra

fn division_stabilizers(s: &Subject, samples: &SampleSpec) -> Result<Vec<CheckOutcome>> {
    s.require_division()?;
    let c = &s.algebra;
    let sp = &s.spaces;
    let spec = s.spec();
    let gram = c.form().polar_gram();
    let mut o = CheckOutcome::new("cor44.stabilizer_orbits", Suite::DivisionStabilizers.anchor());
    let mut pairs = vec![(c.basis_vector(1), c.basis_vector(2))];
    pairs.extend(samples.pairs(spec, 8));
    let mut tested = 0;
    for (x, y) in &pairs {
        let frame = Subspace::span(spec, 8, &[c.unit().clone(), x.clone(), y.clone()])?;
        if frame.dim() < 3 {
            continue;
        }
        tested += 1;
        let sy = sp.der.stabilizer(std::slice::from_ref(x))?.eval_subspace(y)?;
        if sy != frame.orth_complement(gram)? || sy.dim() != 5 {
            o.set_witness("x", s.fmt(x));
            o.set_witness("y", s.fmt(y));
            o.fail(format!("orbit has dim {} and differs from the complement", sy.dim()));
        }
    }
    o.set_dim("pairs", tested);
    o.require(tested >= samples.pool_size, "too few independent pairs in the pool");
    Ok(vec![o])
}

fn division_two_local(s: &Subject, samples: &SampleSpec) -> Result<Vec<CheckOutcome>> {
    s.require_division()?;
    let sp = &s.spaces;
    let spec = s.spec();
    let mut out = Vec::new();
    let der_basis = sp.der.basis_maps();
    let loc_basis = sp.locder.basis_maps();

    let mut o = CheckOutcome::new("thm45.interpolation", "every Delta in LocDer agrees with some derivation at any pooled pair");
    let mut count = 0;
    for (x, y) in samples.pairs(spec, 8) {
        for v in PairSystem::new(&der_basis, &x, &y)?.interpolate(&loc_basis)? {
            count += 1;
            if !v.solvable || !v.witness_holds(&der_basis)? {
                o.set_witness("x", s.fmt(&x));
                o.set_witness("y", s.fmt(&y));
                o.set_witness("delta", format_matrix(&v.delta));
                o.fail("interpolation system is inconsistent");
            }
        }
    }
    o.set_dim("maps", loc_basis.len());
    o.set_dim("systems", count);
    out.push(o);

    let mut o = CheckOutcome::new("thm45.non_derivation", "some Delta in LocDer is not a derivation");
    match loc_basis.iter().find(|d| !sp.der.contains(d).unwrap_or(true)) {
        Some(d) => {
            o.set_witness("delta", format_matrix(d));
            let bad = (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).find(|&(i, j)| {
                let (bi, bj) = (s.algebra.basis_vector(i), s.algebra.basis_vector(j));
                let lhs = d.mul_vec(&s.algebra.mul(&bi, &bj)).expect("8x8");
                let rhs = linalg::add(
                    &s.algebra.mul(&d.mul_vec(&bi).expect("8x8"), &bj),
                    &s.algebra.mul(&bi, &d.mul_vec(&bj).expect("8x8")),
                );
                lhs != rhs
            });
            if let Some((i, j)) = bad {
                o.set_witness("leibniz_fails_at", format!("b{i}, b{j}"));
            }
        }
        None => o.fail("LocDer equals Der"),
    }
    out.push(o);
    Ok(out)
}

// ---------------------------------------------------------------------------
// minus and plus algebras

/// `C0` with `[x, y] = (xy - yx)/2`, in the coordinates of the trace-zero
/// frame.
pub fn minus_algebra(c: &CayleyAlgebra) -> Result<AlgebraStructure> {
    let spec = c.spec();
    if spec.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let half = spec.from_i64(2).inv()?;
    let frame = crate::derivation::TraceZeroFrame::new(c);
    let mut table = Vec::new();
    for x in &frame.basis {
        let mut row = Vec::new();
        for y in &frame.basis {
            let bracket = scale(&half, &linalg::sub(&c.mul(x, y), &c.mul(y, x)));
            row.push(frame.coordinates(&bracket)?.expect("commutators have trace zero"));
        }
        table.push(row);
    }
    AlgebraStructure::new(spec, frame.dim(), table, None)
}

/// `C` with `x o y = (xy + yx)/2`.
pub fn plus_algebra(c: &CayleyAlgebra) -> Result<AlgebraStructure> {
    let spec = c.spec();
    if spec.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let half = spec.from_i64(2).inv()?;
    let table = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| scale(&half, &linalg::add(c.alg().product(i, j), c.alg().product(j, i))))
                .collect()
        })
        .collect();
    AlgebraStructure::new(spec, 8, table, Some(c.unit().clone()))
}

/// `(xy)(xz) - ((xy)z)x - ((yz)x)x - ((zx)x)y`.
pub fn malcev_defect(m: &AlgebraStructure, x: &[FieldElement], y: &[FieldElement], z: &[FieldElement]) -> Vector {
    let xy = m.mul(x, y);
    let lhs = m.mul(&xy, &m.mul(x, z));
    let t1 = m.mul(&m.mul(&xy, z), x);
    let t2 = m.mul(&m.mul(&m.mul(y, z), x), x);
    let t3 = m.mul(&m.mul(&m.mul(z, x), x), y);
    linalg::sub(&lhs, &linalg::add(&linalg::add(&t1, &t2), &t3))
}

/// `(xy)z + (yz)x + (zx)y`.
pub fn jacobi_defect(m: &AlgebraStructure, x: &[FieldElement], y: &[FieldElement], z: &[FieldElement]) -> Vector {
    let a = m.mul(&m.mul(x, y), z);
    let b = m.mul(&m.mul(y, z), x);
    let c = m.mul(&m.mul(z, x), y);
    linalg::add(&linalg::add(&a, &b), &c)
}

fn malcev_jordan(s: &Subject, samples: &SampleSpec) -> Result<Vec<CheckOutcome>> {
    let c = &s.algebra;
    let sp = &s.spaces;
    let spec = s.spec();
    let minus = minus_algebra(c)?;
    let plus = plus_algebra(c)?;
    let m = minus.dim();
    let mut out = Vec::new();
    let triples = samples.triples(spec, m);

    let mut o = CheckOutcome::new("section5.malcev", "(xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y on C0 with [x,y] = (xy - yx)/2");
    for i in 0..m {
        let b = unit_vector(spec, m, i);
        o.require(linalg::is_zero_vector(&minus.mul(&b, &b)), "bracket is not alternating");
    }
    for [x, y, z] in &triples {
        if !linalg::is_zero_vector(&malcev_defect(&minus, x, y, z)) {
            o.set_witness("x", format_vector(x));
            o.set_witness("y", format_vector(y));
            o.set_witness("z", format_vector(z));
            o.fail("Malcev identity fails");
        }
    }
    o.set_dim("triples", triples.len());
    out.push(o);

    if spec.characteristic() == 3 {
        let mut o = CheckOutcome::new("section5.jacobi", "char 3: the bracket on C0 satisfies the Jacobi identity");
        for [x, y, z] in &triples {
            if !linalg::is_zero_vector(&jacobi_defect(&minus, x, y, z)) {
                o.set_witness("x", format_vector(x));
                o.fail("Jacobi identity fails");
            }
        }
        o.set_dim("triples", triples.len());
        out.push(o);
    } else {
        let mut o = CheckOutcome::new("section5.non_lie", "char != 2, 3: the bracket on C0 violates the Jacobi identity");
        let found = (0..m)
            .flat_map(|i| (0..m).flat_map(move |j| (0..m).map(move |k| (i, j, k))))
            .map(|(i, j, k)| [unit_vector(spec, m, i), unit_vector(spec, m, j), unit_vector(spec, m, k)])
            .find(|[x, y, z]| !linalg::is_zero_vector(&jacobi_defect(&minus, x, y, z)));
        match found {
            Some([x, y, z]) => {
                o.set_witness("x", s.fmt(&sp.frame.embed(&x)));
                o.set_witness("y", s.fmt(&sp.frame.embed(&y)));
                o.set_witness("z", s.fmt(&sp.frame.embed(&z)));
                o.set_witness("defect", s.fmt(&sp.frame.embed(&jacobi_defect(&minus, &x, &y, &z))));
            }
            None => o.fail("Jacobi holds on every basis triple"),
        }
        out.push(o);
    }

    let mut o = CheckOutcome::new("section5.minus_derivations", "d -> d|C0 is a bijection Der(C) -> Der(C0^-), both of dimension 14");
    let der_minus = derivation_algebra(&minus);
    let mut restricted = Vec::new();
    for d in sp.der.basis_maps() {
        match sp.frame.restrict(&d)? {
            Some(r) => {
                o.require(der_minus.contains(&r)?, "a restricted derivation is not a derivation of C0^-");
                restricted.push(r);
            }
            None => o.fail("a derivation does not preserve C0"),
        }
    }
    let image = MapSpace::span(MapKind::Custom, spec, m, &restricted)?;
    o.set_dim("der_minus", der_minus.dim());
    o.set_dim("image", image.dim());
    o.require(der_minus.dim() == 14, "Der(C0^-) is not 14-dimensional");
    o.require(image.dim() == sp.der.dim() && image.equal(&der_minus)?, "restriction is not a bijection");
    out.push(o);

    let mut o = CheckOutcome::new("section5.plus_derivations", "Der(C^+) = {d in so(C,n) : d(1) = 0}, dimension 21");
    let der_plus = derivation_algebra(&plus);
    o.set_dim("der_plus", der_plus.dim());
    o.require(der_plus.dim() == 21, "Der(C^+) is not 21-dimensional");
    o.require(der_plus.equal(&sp.locder)?, "Der(C^+) differs from LocDer(C)");
    out.push(o);
    Ok(out)
}
