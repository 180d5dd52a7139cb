//! Verification reports: a list of named checks with counts and witnesses.

use alloc::string::String;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// Number of cases examined.
    pub cases: u64,
    /// Description of the first failing case, if any.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
    /// `true` when every check ran over all cases rather than a sample.
    pub exhaustive: bool,
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(exhaustive: bool, seed: Option<u64>) -> Self {
        Report { checks: Vec::new(), exhaustive, seed }
    }

    /// Starts a check; record cases and failures through the returned handle.
    pub fn check(&mut self, name: &str) -> &mut Check {
        self.checks.push(Check { name: name.into(), cases: 0, failure: None });
        self.checks.last_mut().expect("just pushed")
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(&mut self, other: Report) {
        self.exhaustive &= other.exhaustive;
        self.checks.extend(other.checks);
    }
}

impl Check {
    /// Records one case; keeps the first failure message.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }
}
