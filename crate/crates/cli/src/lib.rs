//! File formats and report rendering for the `hypercode` CLI.
//!
//! The binary itself lives in `main.rs`; everything here is a library so
//! the formats can be unit-tested and reused.

pub mod alist;
pub mod doc;
pub mod report;
