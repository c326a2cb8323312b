//! The hypermap text document: a diff-friendly, hand-writable format for
//! `(sigma, alpha)` pairs with an optional special-dart line.
//!
//! ```text
//! # octagon-square
//! darts 24
//! sigma (1 24 20)(2 14 9)...
//! alpha (1 2 3)(4 5 6)...
//! special 3 6 9 12 15 18 21 24
//! ```
//!
//! Lines may carry `#` comments. `darts`, `sigma` and `alpha` are
//! required; `special` lists one dart per edge and overrides the default
//! (maximum label per edge) basis choice. All darts are 1-based in the
//! file and 0-based in memory.

use std::fmt::Write as _;

use hypercode_core::homology::SpecialBasis;
use hypercode_core::hypermap::HypermapError;
use hypercode_core::perm::Permutation;
use hypercode_core::Hypermap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("hypermap is invalid: {0}")]
    InvalidHypermap(String),
}

impl DocError {
    fn parse(line: usize, col: usize, message: impl Into<String>) -> Self {
        DocError::Parse {
            line,
            col,
            message: message.into(),
        }
    }
}

/// A parsed hypermap document, not yet validated for transitivity.
#[derive(Debug, Clone)]
pub struct HypermapDocument {
    pub name: Option<String>,
    pub darts: usize,
    pub sigma: Permutation,
    pub alpha: Permutation,
    /// 0-based special darts, if the file pinned them.
    pub special: Option<Vec<usize>>,
}

impl HypermapDocument {
    pub fn parse(text: &str) -> Result<HypermapDocument, DocError> {
        let mut darts: Option<(usize, usize)> = None; // (value, line)
        let mut sigma_line: Option<(String, usize, usize)> = None; // (text, line, col of payload)
        let mut alpha_line: Option<(String, usize, usize)> = None;
        let mut special_line: Option<(String, usize, usize)> = None;
        let mut name = None;

        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let uncommented = match raw.find('#') {
                Some(pos) => {
                    if name.is_none() && raw[..pos].trim().is_empty() {
                        let c = raw[pos + 1..].trim();
                        if !c.is_empty() {
                            name = Some(c.to_string());
                        }
                    }
                    &raw[..pos]
                }
                None => raw,
            };
            let line = uncommented.trim_end();
            if line.trim().is_empty() {
                continue;
            }
            let indent = line.len() - line.trim_start().len();
            let body = line.trim_start();
            let (key, rest) = match body.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r),
                None => (body, ""),
            };
            let payload_col = indent + key.len() + 2; // 1-based column of the payload
            match key {
                "darts" => {
                    let value: usize = rest.trim().parse().map_err(|_| {
                        DocError::parse(lineno, payload_col, format!("invalid dart count {:?}", rest.trim()))
                    })?;
                    if value == 0 {
                        return Err(DocError::parse(lineno, payload_col, "dart count must be positive"));
                    }
                    darts = Some((value, lineno));
                }
                "sigma" => sigma_line = Some((rest.to_string(), lineno, payload_col)),
                "alpha" => alpha_line = Some((rest.to_string(), lineno, payload_col)),
                "special" => special_line = Some((rest.to_string(), lineno, payload_col)),
                other => {
                    return Err(DocError::parse(
                        lineno,
                        indent + 1,
                        format!("unknown key {other:?}; expected darts, sigma, alpha or special"),
                    ))
                }
            }
        }

        let (n, _) = darts.ok_or_else(|| DocError::parse(1, 1, "missing `darts` line"))?;
        let parse_perm = |entry: &Option<(String, usize, usize)>, key: &str| -> Result<Permutation, DocError> {
            let (text, lineno, col) = entry
                .as_ref()
                .ok_or_else(|| DocError::parse(1, 1, format!("missing `{key}` line")))?;
            Permutation::parse(n, text)
                .map_err(|e| DocError::parse(*lineno, col + e.offset, e.to_string()))
        };
        let sigma = parse_perm(&sigma_line, "sigma")?;
        let alpha = parse_perm(&alpha_line, "alpha")?;

        let special = match special_line {
            None => None,
            Some((text, lineno, col)) => {
                let mut darts = Vec::new();
                for token in text.split_whitespace() {
                    let value: usize = token.parse().map_err(|_| {
                        DocError::parse(lineno, col, format!("invalid special dart {token:?}"))
                    })?;
                    if value == 0 || value > n {
                        return Err(DocError::parse(
                            lineno,
                            col,
                            format!("special dart {value} out of range 1..={n}"),
                        ));
                    }
                    darts.push(value - 1);
                }
                Some(darts)
            }
        };

        Ok(HypermapDocument {
            name,
            darts: n,
            sigma,
            alpha,
            special,
        })
    }

    /// Validates the pair and resolves the special basis: the file's
    /// `special` line when present, the default rule otherwise.
    pub fn realize(&self) -> Result<(Hypermap, SpecialBasis), DocError> {
        let map = Hypermap::new(self.sigma.clone(), self.alpha.clone())
            .map_err(|e: HypermapError| DocError::InvalidHypermap(e.to_string()))?;
        let basis = match &self.special {
            Some(darts) => SpecialBasis::from_darts(&map, darts)
                .map_err(|e| DocError::InvalidHypermap(e.to_string()))?,
            None => SpecialBasis::default_for(&map),
        };
        Ok((map, basis))
    }
}

/// Renders a document with canonical cycle notation; byte-deterministic.
pub fn print_document(
    name: Option<&str>,
    map: &Hypermap,
    special: Option<&[usize]>,
) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        let _ = writeln!(out, "# {name}");
    }
    let _ = writeln!(out, "darts {}", map.n());
    let _ = writeln!(out, "sigma {}", map.sigma().cycle_string(false));
    let _ = writeln!(out, "alpha {}", map.alpha().cycle_string(false));
    if let Some(darts) = special {
        let mut sorted: Vec<usize> = darts.to_vec();
        sorted.sort_unstable();
        let labels: Vec<String> = sorted.iter().map(|d| (d + 1).to_string()).collect();
        let _ = writeln!(out, "special {}", labels.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const OCTAGON: &str = "\
# octagon-square
darts 24
sigma (1 24 20)(2 14 9)(3 11 13)(4 18 23)(5 21 17)(6 7 10)(8 16 12)(15 19 22)
alpha (1 2 3)(4 5 6)(7 8 9)(10 11 12)(13 14 15)(16 17 18)(19 20 21)(22 23 24)
";

    #[test]
    fn parses_and_realizes() {
        let doc = HypermapDocument::parse(OCTAGON).unwrap();
        assert_eq!(doc.name.as_deref(), Some("octagon-square"));
        assert_eq!(doc.darts, 24);
        let (map, basis) = doc.realize().unwrap();
        assert_eq!(map.genus(), 1);
        let one_based: Vec<usize> = basis.special_darts().iter().map(|d| d + 1).collect();
        assert_eq!(one_based, vec![3, 6, 9, 12, 15, 18, 21, 24]);
    }

    #[test]
    fn round_trips_through_print() {
        let doc = HypermapDocument::parse(OCTAGON).unwrap();
        let (map, _) = doc.realize().unwrap();
        let printed = print_document(Some("octagon-square"), &map, None);
        let again = HypermapDocument::parse(&printed).unwrap();
        assert_eq!(again.sigma.images(), doc.sigma.images());
        assert_eq!(again.alpha.images(), doc.alpha.images());
    }

    #[test]
    fn special_line_round_trips() {
        let with_special = format!("{OCTAGON}special 3 6 9 12 15 18 21 24\n");
        let doc = HypermapDocument::parse(&with_special).unwrap();
        let (map, basis) = doc.realize().unwrap();
        let printed = print_document(None, &map, Some(basis.special_darts()));
        let again = HypermapDocument::parse(&printed).unwrap();
        assert_eq!(again.special, doc.special);
    }

    #[test]
    fn parse_errors_carry_line_and_column() {
        let err = HypermapDocument::parse("darts 8\nsigma (1 2 x)\nalpha (1 2)\n").unwrap_err();
        match err {
            DocError::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert!(col > 7);
            }
            other => panic!("unexpected {other:?}"),
        }

        let err = HypermapDocument::parse("sigma (1 2)\n").unwrap_err();
        assert!(matches!(err, DocError::Parse { .. }));

        let err = HypermapDocument::parse("darts 4\nsigma (1 2 3 4)\nalpha ()\n").unwrap_err();
        assert!(matches!(err, DocError::Parse { line: 3, .. }));
    }

    #[test]
    fn fixed_points_may_be_omitted() {
        let doc = HypermapDocument::parse("darts 3\nsigma (1 2 3)\nalpha\n").unwrap();
        let (map, _) = doc.realize().unwrap();
        assert_eq!(map.edges().len(), 3);
    }

    #[test]
    fn non_transitive_documents_fail_realization() {
        let doc = HypermapDocument::parse("darts 2\nsigma\nalpha\n").unwrap();
        assert!(matches!(doc.realize(), Err(DocError::InvalidHypermap(_))));
    }

    #[test]
    fn bad_special_set_is_invalid() {
        let text = format!("{OCTAGON}special 1 2\n");
        let doc = HypermapDocument::parse(&text).unwrap();
        assert!(matches!(doc.realize(), Err(DocError::InvalidHypermap(_))));
    }
}
