//! Noncommutative polynomials over ζ-series: ordered alphabets, rewrite
//! tables, PBW normal forms, confluence checking and rule derivation.

mod confluence;
mod derive;
mod element;
mod presentation;
mod rules_io;
mod word;

pub use confluence::{check_local_confluence, Ambiguity};
pub use derive::{derive_rule_table, ChevalleyInput, DeriveError};
pub use element::{Legs, NcPoly, TensorElement};
pub use presentation::{GenKind, GeneratorSymbol, Presentation, RewriteRule, WordPoly, RULE_ORDER};
pub use rules_io::{parse_rules, render_rules};
pub use word::{GenId, Letter, Word};

use crate::scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcError {
    #[error("no rewrite rule for {b} {a}")]
    MissingRule { b: String, a: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("malformed rule {0}")]
    BadRule(String),
    #[error("leg count mismatch: {0} vs {1}")]
    LegMismatch(usize, usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[cfg(test)]
mod tests;
