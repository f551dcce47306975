//! Structured pass/fail records for theorem checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{PermGroup, Permutation};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    SkippedCapacity,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::SkippedCapacity => "skipped-capacity",
        })
    }
}

/// Elements and subgroups that exhibit a failure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<String>,
    /// Subgroups by generators, `<g1, g2, ...>`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subgroups: Vec<String>,
}

impl Witness {
    pub fn element(x: &Permutation) -> Self {
        Witness {
            elements: vec![x.to_string()],
            subgroups: Vec::new(),
        }
    }

    pub fn subgroup(h: &PermGroup) -> Self {
        Witness {
            elements: Vec::new(),
            subgroups: vec![h.generators_string()],
        }
    }

    pub fn with_element(mut self, x: &Permutation) -> Self {
        self.elements.push(x.to_string());
        self
    }

    pub fn with_subgroup(mut self, h: &PermGroup) -> Self {
        self.subgroups.push(h.generators_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// Stable name of the property being checked.
    pub anchor: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineParameters {
    pub enumeration_bound: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dixon_prime: Option<u64>,
    /// Which search regime ran, when a check has more than one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
}

impl Default for EngineParameters {
    fn default() -> Self {
        EngineParameters {
            enumeration_bound: limits::enumeration_bound(),
            dixon_prime: None,
            regime: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub group: String,
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub engine: EngineParameters,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(group: impl Into<String>, suite: impl Into<String>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            group: group.into(),
            suite: suite.into(),
            checks: Vec::new(),
            engine: EngineParameters::default(),
            timing_ms: None,
        }
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(CheckStatus::Fail) > 0
    }

    pub fn has_capacity_skips(&self) -> bool {
        self.count(CheckStatus::SkippedCapacity) > 0
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// One line naming the group, suite and failed checks.
    pub fn failure_summary(&self) -> String {
        let ids: Vec<String> = self
            .failures()
            .map(|c| {
                if c.detail.is_empty() {
                    c.id.clone()
                } else {
                    format!("{} ({})", c.id, c.detail)
                }
            })
            .collect();
        format!("{} / {}: {}", self.group, self.suite, ids.join("; "))
    }

    /// Append the checks of `other`, prefixing nothing.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        if self.engine.dixon_prime.is_none() {
            self.engine.dixon_prime = other.engine.dixon_prime;
        }
        if self.engine.regime.is_none() {
            self.engine.regime = other.engine.regime;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

/// Accumulates check records and turns failures into a theorem violation.
#[derive(Debug, Clone)]
pub struct ReportBuilder {
    report: VerificationReport,
}

impl ReportBuilder {
    pub fn new(group: &PermGroup, suite: &str) -> Self {
        let name = group.name().unwrap_or("unnamed").to_string();
        ReportBuilder {
            report: VerificationReport::new(name, suite),
        }
    }

    pub fn dixon_prime(&mut self, q: u64) -> &mut Self {
        self.report.engine.dixon_prime = Some(q);
        self
    }

    pub fn regime(&mut self, regime: &str) -> &mut Self {
        self.report.engine.regime = Some(regime.to_string());
        self
    }

    fn push(&mut self, id: &str, anchor: &str, status: CheckStatus, detail: String, witness: Option<Witness>) {
        self.report.checks.push(CheckRecord {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status,
            detail,
            witness,
        });
    }

    pub fn pass(&mut self, id: &str, anchor: &str, detail: impl Into<String>) -> &mut Self {
        self.push(id, anchor, CheckStatus::Pass, detail.into(), None);
        self
    }

    pub fn fail(&mut self, id: &str, anchor: &str, detail: impl Into<String>, witness: Witness) -> &mut Self {
        self.push(id, anchor, CheckStatus::Fail, detail.into(), Some(witness));
        self
    }

    pub fn skip_capacity(&mut self, id: &str, anchor: &str, detail: impl Into<String>) -> &mut Self {
        self.push(id, anchor, CheckStatus::SkippedCapacity, detail.into(), None);
        self
    }

    /// Record pass or fail; the witness is only built on failure.
    pub fn check<W>(&mut self, id: &str, anchor: &str, ok: bool, detail: impl Into<String>, witness: W) -> &mut Self
    where
        W: FnOnce() -> Witness,
    {
        if ok {
            self.pass(id, anchor, detail)
        } else {
            self.fail(id, anchor, detail, witness())
        }
    }

    /// Record the outcome of a fallible sub-check: capacity errors become
    /// skips, theorem violations are absorbed as failures, other errors propagate.
    pub fn absorb(&mut self, id: &str, anchor: &str, result: Result<VerificationReport>) -> Result<&mut Self> {
        match result {
            Ok(r) => {
                self.report.absorb(r);
                Ok(self)
            }
            Err(Error::TheoremViolation(r)) => {
                self.report.absorb(*r);
                Ok(self)
            }
            Err(e @ Error::Capacity { .. }) => Ok(self.skip_capacity(id, anchor, e.to_string())),
            Err(e) => Err(e),
        }
    }

    pub fn is_failing(&self) -> bool {
        self.report.has_failures()
    }

    pub fn into_report(self) -> VerificationReport {
        self.report
    }

    /// The report, or a theorem violation carrying it if any check failed.
    pub fn finish(self) -> Result<VerificationReport> {
        if self.report.has_failures() {
            Err(Error::TheoremViolation(Box::new(self.report)))
        } else {
            Ok(self.report)
        }
    }
}
