//! Verification suite and exporters behind the `twistcheck` binary.

pub mod catalog;
pub mod export;
pub mod report;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "TWISTCHECK_OUT";
