use serde::{Deserialize, Serialize};

/// One correction applied to a displayed formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub location: String,
    pub printed: String,
    pub corrected: String,
    /// Identifier of the check that fails with the printed form.
    pub check: String,
}

const ERRATA_JSON: &str = include_str!("../../data/errata.json");

/// The shipped correction log, in file order.
pub fn errata() -> Vec<Erratum> {
    serde_json::from_str(ERRATA_JSON).expect("shipped errata file parses")
}

pub fn errata_json() -> &'static str {
    ERRATA_JSON
}
