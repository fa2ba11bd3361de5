//! Verification harnesses that replay the edge-ideal claims over enumerated
//! corpora, plus the input handling behind the `eil` command-line tool.

pub mod config;
pub mod corpus;
pub mod harness;
pub mod input;

pub use harness::{run_verify, VerificationReport, VerifyError, VerifyOptions, THEOREM_IDS};
