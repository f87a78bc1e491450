use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Result of one verification check.
///
/// `dims` records computed dimensions and sample counts, `witness` holds
/// vectors and scalars in field-text encoding. Both maps are ordered so the
/// serialized form is stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub dims: BTreeMap<String, u64>,
    pub witness: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckOutcome {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            dims: BTreeMap::new(),
            witness: BTreeMap::new(),
            detail: String::new(),
        }
    }

    pub fn skipped(id: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut out = Self::new(id, anchor);
        out.status = Status::Skipped;
        out.detail = reason.into();
        out
    }

    pub fn dim(mut self, key: &str, value: usize) -> Self {
        self.dims.insert(key.to_string(), value as u64);
        self
    }

    pub fn set_dim(&mut self, key: &str, value: usize) {
        self.dims.insert(key.to_string(), value as u64);
    }

    pub fn set_witness(&mut self, key: &str, value: impl Into<String>) {
        self.witness.insert(key.to_string(), value.into());
    }

    /// Marks the check failed, keeping the first failure's detail.
    pub fn fail(&mut self, detail: impl Into<String>) {
        if self.status != Status::Fail {
            self.status = Status::Fail;
            self.detail = detail.into();
        }
    }

    /// Fails with `detail` unless `cond` holds.
    pub fn require(&mut self, cond: bool, detail: impl Into<String>) {
        if !cond {
            self.fail(detail);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} \u{2014} \"{}\"", self.id, self.status, self.anchor)?;
        if !self.dims.is_empty() {
            let dims: Vec<String> = self.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", dims.join(" "))?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}
