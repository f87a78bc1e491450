//! JSON formats: structure constants of an algebra and verification reports.
//!
//! Scalars are written in the field text encoding (`"-1/2"`, `"3"`), so a
//! document round-trips exactly. Key order is fixed by the struct layouts
//! and by the ordered maps inside [`CheckOutcome`], so identical inputs give
//! byte-identical output.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraStructure, CayleyAlgebra, CompositionAlgebra, Grading, QuadraticFormData};
use crate::check::{CheckOutcome, Status};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{Matrix, Vector};
use crate::sample::SampleSpec;
use crate::suite::{run_suite, Subject, Suite};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldJson {
    Rational,
    Prime { p: u64 },
}

impl From<FieldSpec> for FieldJson {
    fn from(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rational => FieldJson::Rational,
            FieldSpec::Prime(p) => FieldJson::Prime { p },
        }
    }
}

impl TryFrom<FieldJson> for FieldSpec {
    type Error = Error;

    fn try_from(f: FieldJson) -> Result<Self> {
        match f {
            FieldJson::Rational => Ok(FieldSpec::Rational),
            FieldJson::Prime { p } => FieldSpec::prime(p),
        }
    }
}

/// Structure constants plus the norm, as exchanged on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    pub unit: Vec<String>,
    /// `table[i][j]` holds the coordinates of `b_i b_j`.
    pub table: Vec<Vec<Vec<String>>>,
    pub basis_norms: Vec<String>,
    pub polar_gram: Vec<Vec<String>>,
    /// Index blocks of the `K`, `U`, `V` pieces for the split algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<[Vec<usize>; 3]>,
}

fn texts(v: &[FieldElement]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn parse_vector(spec: FieldSpec, v: &[String], len: usize, what: &str) -> Result<Vector> {
    if v.len() != len {
        return Err(Error::Schema(format!("{what} has {} entries, expected {len}", v.len())));
    }
    v.iter().map(|s| spec.parse_element(s)).collect()
}

impl AlgebraJson {
    pub fn from_algebra(c: &CompositionAlgebra) -> Self {
        let n = c.dim();
        AlgebraJson {
            field: c.spec().into(),
            dim: n,
            unit: texts(c.unit()),
            table: (0..n).map(|i| (0..n).map(|j| texts(c.alg().product(i, j))).collect()).collect(),
            basis_norms: texts(c.form().basis_norms()),
            polar_gram: c.form().polar_gram().row_vectors().iter().map(|r| texts(r)).collect(),
            grading: c.grading().map(|g| g.blocks.clone()),
        }
    }

    pub fn to_algebra(&self) -> Result<CompositionAlgebra> {
        let spec = FieldSpec::try_from(self.field)?;
        let n = self.dim;
        if n == 0 {
            return Err(Error::BadDimension(0));
        }
        if self.table.len() != n || self.table.iter().any(|row| row.len() != n) {
            return Err(Error::Schema(format!("table must be {n} x {n}")));
        }
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|v| parse_vector(spec, v, n, "table entry")).collect())
            .collect::<Result<Vec<Vec<Vector>>>>()?;
        let unit = parse_vector(spec, &self.unit, n, "unit")?;
        let alg = AlgebraStructure::new(spec, n, table, Some(unit))?;
        let norms = parse_vector(spec, &self.basis_norms, n, "basis_norms")?;
        if self.polar_gram.len() != n {
            return Err(Error::Schema(format!("polar_gram must have {n} rows")));
        }
        let rows = self
            .polar_gram
            .iter()
            .map(|r| parse_vector(spec, r, n, "polar_gram row"))
            .collect::<Result<Vec<_>>>()?;
        let form = QuadraticFormData::new(norms, Matrix::from_rows(spec, n, &rows)?)?;
        let mut c = CompositionAlgebra::new(alg, form)?;
        if let Some(blocks) = &self.grading {
            let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
            seen.sort_unstable();
            if seen != (0..n).collect::<Vec<_>>() {
                return Err(Error::Schema("grading blocks must partition the basis".into()));
            }
            c = c.with_grading(Grading { blocks: blocks.clone() });
        }
        Ok(c)
    }
}

pub fn algebra_to_json(c: &CompositionAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraJson::from_algebra(c)).expect("plain data serializes")
}

pub fn algebra_from_json(text: &str) -> Result<CompositionAlgebra> {
    let doc: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    doc.to_algebra()
}

pub fn cayley_from_json(text: &str) -> Result<CayleyAlgebra> {
    CayleyAlgebra::new(algebra_from_json(text)?)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn tally(checks: &[CheckOutcome]) -> Self {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Summary {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skipped: count(Status::Skipped),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool_version: String,
    pub field: FieldJson,
    pub algebra_id: String,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Runs `suites` in order. A suite whose precondition fails contributes
    /// one skipped record carrying the reason.
    pub fn run(subject: &Subject, algebra_id: &str, suites: &[Suite], samples: &SampleSpec) -> Self {
        let mut checks = Vec::new();
        for &suite in suites {
            match run_suite(suite, subject, samples) {
                Ok(found) => checks.extend(found),
                Err(e) => checks.push(CheckOutcome::skipped(suite.key(), suite.anchor(), e.to_string())),
            }
        }
        let summary = Summary::tally(&checks);
        VerificationReport {
            schema: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            field: subject.spec().into(),
            algebra_id: algebra_id.to_string(),
            seed: samples.seed,
            checks,
            summary,
        }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let field = FieldSpec::try_from(self.field).map(|f| f.to_string()).unwrap_or_default();
        let mut out = format!("algebra {} over {} (seed {})\n", self.algebra_id, field, self.seed);
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "pass {} fail {} skipped {}\n",
            self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{division_octonions_q, split_cayley};

    #[test]
    fn field_json_shape() {
        assert_eq!(serde_json::to_string(&FieldJson::Rational).unwrap(), r#"{"kind":"rational"}"#);
        assert_eq!(serde_json::to_string(&FieldJson::Prime { p: 5 }).unwrap(), r#"{"kind":"prime","p":5}"#);
        let bad: FieldJson = serde_json::from_str(r#"{"kind":"prime","p":6}"#).unwrap();
        assert_eq!(FieldSpec::try_from(bad), Err(Error::NotPrime(6)));
    }

    #[test]
    fn algebra_round_trip() {
        for c in [split_cayley(FieldSpec::prime(3).unwrap()), division_octonions_q()] {
            let back = cayley_from_json(&algebra_to_json(&c)).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(algebra_from_json("{}"), Err(Error::Schema(_))));
        let mut doc = AlgebraJson::from_algebra(&split_cayley(FieldSpec::Rational));
        doc.unit.pop();
        assert!(matches!(doc.to_algebra(), Err(Error::Schema(_))));
        let mut doc = AlgebraJson::from_algebra(&split_cayley(FieldSpec::Rational));
        doc.grading = Some([vec![0], vec![1, 2, 3], vec![4, 5, 6]]);
        assert!(matches!(doc.to_algebra(), Err(Error::Schema(_))));
    }

    #[test]
    fn skipped_suites_are_recorded() {
        let subject = Subject::new(division_octonions_q());
        let r = VerificationReport::run(&subject, "cd(-1,-1,-1)", &[Suite::SplitTwoLocal], &SampleSpec::new(42, 5));
        assert_eq!(r.summary, Summary { pass: 0, fail: 0, skipped: 1 });
        assert_eq!(r.checks[0].id, "thm41");
        assert!(!r.failed());
    }
}
