//! Writer for the alist sparse parity-check interchange format.
//!
//! Layout: line 1 is `cols rows`, line 2 `max_col_degree max_row_degree`,
//! then the per-column degrees, the per-row degrees, then one line per
//! column with the 1-based row indices of its nonzeros (zero-padded to the
//! maximum column degree), and one line per row with the 1-based column
//! indices (zero-padded to the maximum row degree).

use hypercode_core::BinaryMatrix;
use std::fmt::Write as _;

pub fn write_alist(m: &BinaryMatrix) -> String {
    let rows = m.rows();
    let cols = m.cols();
    let col_support: Vec<Vec<usize>> = (0..cols).map(|c| m.column(c).support()).collect();
    let row_support: Vec<Vec<usize>> = (0..rows).map(|r| m.row(r).support()).collect();
    let max_col = col_support.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = row_support.iter().map(Vec::len).max().unwrap_or(0);

    let mut out = String::new();
    let _ = writeln!(out, "{} {}", cols, rows);
    let _ = writeln!(out, "{} {}", max_col, max_row);
    let degrees = |supports: &[Vec<usize>]| {
        supports
            .iter()
            .map(|s| s.len().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(out, "{}", degrees(&col_support));
    let _ = writeln!(out, "{}", degrees(&row_support));
    let padded = |support: &[usize], width: usize| {
        let mut entries: Vec<String> = support.iter().map(|i| (i + 1).to_string()).collect();
        entries.resize(width, "0".to_string());
        entries.join(" ")
    };
    for support in &col_support {
        let _ = writeln!(out, "{}", padded(support, max_col));
    }
    for support in &row_support {
        let _ = writeln!(out, "{}", padded(support, max_row));
    }
    out
}
