//! Turing machine laboratory.
//!
//! - [`machine`]: tapes, tables and the step engine.
//! - [`table`]: the text table format and the bundled machines.
//! - [`encoding`]: the universal machine's program and tape encoding.
//! - [`rna`]: the nucleotide pair code.
//! - [`lab`]: experiments, refinement checks, traces and acceptance checks.

pub mod encoding;
pub mod lab;
pub mod machine;
pub mod rna;
pub mod table;
