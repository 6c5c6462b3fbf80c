//! Verification report types shared by all suites, with text and
//! machine-readable `key=value` renderings that carry the same facts.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    HypothesisNotMet,
    Inconclusive,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::HypothesisNotMet => "hypothesis-not-met",
            CheckStatus::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// One verified fact: an id, an outcome and a human-readable witness.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: CheckStatus::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: CheckStatus::Fail,
            detail: detail.into(),
        }
    }

    pub fn hypothesis_not_met(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: CheckStatus::HypothesisNotMet,
            detail: detail.into(),
        }
    }

    pub fn inconclusive(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: CheckStatus::Inconclusive,
            detail: detail.into(),
        }
    }

    /// Builds pass/fail from a boolean.
    pub fn assert(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(id, detail)
        } else {
            Self::fail(id, detail)
        }
    }
}

/// Aggregated result of one verification suite on one target.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: String,
    pub target: String,
    pub checks: Vec<Check>,
    pub millis: u128,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, target: impl Into<String>) -> Self {
        VerifyReport {
            suite: suite.into(),
            target: target.into(),
            checks: Vec::new(),
            millis: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.status != CheckStatus::Fail)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite {} on {}\n", self.suite, self.target);
        for c in &self.checks {
            out.push_str(&format!("  [{:>18}] {}  {}\n", c.status.to_string(), c.id, c.detail));
        }
        out.push_str(&format!(
            "  {} checks: {} pass, {} fail, {} hypothesis-not-met, {} inconclusive ({} ms)\n",
            self.checks.len(),
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::HypothesisNotMet),
            self.count(CheckStatus::Inconclusive),
            self.millis,
        ));
        out
    }

    pub fn render_records(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite={}\n", self.suite));
        out.push_str(&format!("target={}\n", self.target));
        for c in &self.checks {
            out.push_str(&format!(
                "check.{}={}\ncheck.{}.detail={}\n",
                c.id,
                c.status,
                c.id,
                c.detail.replace('\n', "; ")
            ));
        }
        out.push_str(&format!("passed={}\n", self.passed()));
        out
    }
}
