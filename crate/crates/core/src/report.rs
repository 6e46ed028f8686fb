//! Pass/fail records shared by the `verify_*` routines.

use serde::Serialize;

/// A concrete counterexample: a human-readable message plus the labels of
/// the elements, points or sets involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub message: String,
    pub items: Vec<String>,
}

impl Witness {
    pub fn new(message: impl Into<String>, items: Vec<String>) -> Self {
        Witness {
            message: message.into(),
            items,
        }
    }
}

/// Outcome of one named check. A failed check always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: &'static str) -> Self {
        Check {
            name,
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: &'static str, witness: Witness) -> Self {
        Check {
            name,
            passed: false,
            witness: Some(witness),
        }
    }

    /// Builds a check from the first counterexample found, if any.
    pub fn from_counterexample(name: &'static str, found: Option<Witness>) -> Self {
        match found {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

/// True when every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// The first failing check, if any.
pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed)
}
