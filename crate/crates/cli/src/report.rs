//! Parameter reports in plain text and stable-schema JSON.

use hypercode_core::css::{CssCode, Distance, Side};
use hypercode_core::Hypermap;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Serialize)]
pub struct Cells {
    pub darts: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

#[derive(Debug, Serialize)]
pub struct WitnessReport {
    pub side: char,
    pub weight: usize,
    /// 1-based qubit positions of the logical operator.
    pub support: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub exhaustive: Option<bool>,
    pub genus: usize,
    pub cells: Cells,
    pub witness: Option<WitnessReport>,
}

impl Report {
    pub fn new(map: &Hypermap, code: &CssCode, distance: Option<&Distance>) -> Report {
        let witness = distance.and_then(|d| d.witness.as_ref()).map(|w| WitnessReport {
            side: match w.side {
                Side::X => 'X',
                Side::Z => 'Z',
            },
            weight: w.vector.weight(),
            support: w.vector.support().iter().map(|i| i + 1).collect(),
        });
        Report {
            n: code.n(),
            k: code.k(),
            d: distance.and_then(|d| d.weight),
            exhaustive: distance.map(|d| d.exhaustive),
            genus: map.genus(),
            cells: Cells {
                darts: map.n(),
                vertices: map.vertices().len(),
                edges: map.edges().len(),
                faces: map.faces().len(),
            },
            witness,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "cells: darts={} vertices={} edges={} faces={}",
            self.cells.darts, self.cells.vertices, self.cells.edges, self.cells.faces
        );
        let _ = writeln!(out, "genus: {}", self.genus);
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "k: {}", self.k);
        let d_text = match (self.k, self.d, self.exhaustive) {
            (0, _, _) => "undefined (k = 0)".to_string(),
            (_, Some(d), Some(true)) => format!("{d} (exhaustive)"),
            (_, Some(d), _) => format!("\u{2264} {d} (inexhaustive)"),
            (_, None, _) => "unknown (inexhaustive)".to_string(),
        };
        let _ = writeln!(out, "d: {d_text}");
        let d_bracket = match (self.k, self.d, self.exhaustive) {
            (0, _, _) => "-".to_string(),
            (_, Some(d), Some(true)) => d.to_string(),
            (_, Some(d), _) => format!("\u{2264}{d}"),
            (_, None, _) => "?".to_string(),
        };
        let _ = writeln!(out, "[n,k,d] = [{},{},{}]", self.n, self.k, d_bracket);
        match &self.witness {
            Some(w) => {
                let support: Vec<String> = w.support.iter().map(usize::to_string).collect();
                let _ = writeln!(
                    out,
                    "witness: side={} weight={} support={}",
                    w.side,
                    w.weight,
                    support.join(",")
                );
            }
            None => {
                let _ = writeln!(out, "witness: none");
            }
        }
        out
    }
}
