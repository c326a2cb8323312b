//! Permutations on the dart set `B = {1..n}`.
//!
//! Products are written left to right: `compose(p, q)` sends `i` to
//! `q(p(i))`, so code spells the written product `alpha sigma` as
//! `compose(alpha, sigma)` and the face permutation `alpha^-1 sigma` as
//! `compose(alpha.inverse(), sigma)`. Every call site in the crate relies
//! on this convention.
//!
//! Storage is 0-based; the cycle-notation parser and printer speak the
//! 1-based dart labels used by file formats and reports.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// `images` is not a bijection: some value appears twice or is out of range.
    NotBijective { value: usize },
    SizeMismatch { left: usize, right: usize },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotBijective { value } => {
                write!(f, "images are not a bijection at value {}", value + 1)
            }
            PermError::SizeMismatch { left, right } => {
                write!(f, "permutations act on different dart counts: {left} vs {right}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PermError {}

/// Error from parsing cycle notation, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleParseError {
    pub offset: usize,
    pub kind: CycleParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleParseErrorKind {
    UnexpectedChar(char),
    DartOutOfRange { dart: usize, n: usize },
    RepeatedDart { dart: usize },
    UnclosedCycle,
    EmptyCycle,
}

impl fmt::Display for CycleParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CycleParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character {:?} at offset {}", c, self.offset)
            }
            CycleParseErrorKind::DartOutOfRange { dart, n } => {
                write!(f, "dart {} out of range 1..={} at offset {}", dart, n, self.offset)
            }
            CycleParseErrorKind::RepeatedDart { dart } => {
                write!(f, "dart {} appears twice at offset {}", dart, self.offset)
            }
            CycleParseErrorKind::UnclosedCycle => write!(f, "unclosed cycle at offset {}", self.offset),
            CycleParseErrorKind::EmptyCycle => write!(f, "empty cycle at offset {}", self.offset),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CycleParseError {}

/// A bijection on `{0..n-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its 0-based image array.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(PermError::NotBijective { value: v.min(n.saturating_sub(1)) });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Number of darts the permutation acts on.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Left-to-right product: the result sends `i` to `q(p(i))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, PermError> {
        if self.n() != q.n() {
            return Err(PermError::SizeMismatch {
                left: self.n(),
                right: q.n(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| q.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles covering `{0..n-1}` in canonical form: every cycle
    /// starts at its minimum element and cycles are sorted by that minimum.
    /// Fixed points are included as length-1 cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cyc.push(i);
                i = self.images[i];
            }
            out.push(cyc);
        }
        out
    }

    /// Rebuilds a permutation on `n` darts from 0-based cycles. Darts not
    /// mentioned are fixed points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cyc in cycles {
            for (t, &d) in cyc.iter().enumerate() {
                if d >= n {
                    return Err(PermError::NotBijective { value: n.saturating_sub(1) });
                }
                if seen[d] {
                    return Err(PermError::NotBijective { value: d });
                }
                seen[d] = true;
                images[d] = cyc[(t + 1) % cyc.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 8 3 6)(2 5 4 7)` with 1-based
    /// darts. Darts omitted from every cycle are fixed points; an input of
    /// only whitespace is the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self, CycleParseError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let bytes = text.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let c = bytes[pos] as char;
            if c.is_whitespace() {
                pos += 1;
                continue;
            }
            if c != '(' {
                return Err(CycleParseError {
                    offset: pos,
                    kind: CycleParseErrorKind::UnexpectedChar(c),
                });
            }
            let open = pos;
            pos += 1;
            let mut darts: Vec<usize> = Vec::new();
            loop {
                while pos < bytes.len() && (bytes[pos] as char).is_whitespace() {
                    pos += 1;
                }
                if pos >= bytes.len() {
                    return Err(CycleParseError {
                        offset: open,
                        kind: CycleParseErrorKind::UnclosedCycle,
                    });
                }
                let c = bytes[pos] as char;
                if c == ')' {
                    pos += 1;
                    break;
                }
                if !c.is_ascii_digit() {
                    return Err(CycleParseError {
                        offset: pos,
                        kind: CycleParseErrorKind::UnexpectedChar(c),
                    });
                }
                let start = pos;
                let mut value: usize = 0;
                while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                    value = value.saturating_mul(10).saturating_add((bytes[pos] - b'0') as usize);
                    pos += 1;
                }
                if value == 0 || value > n {
                    return Err(CycleParseError {
                        offset: start,
                        kind: CycleParseErrorKind::DartOutOfRange { dart: value, n },
                    });
                }
                let d = value - 1;
                if seen[d] {
                    return Err(CycleParseError {
                        offset: start,
                        kind: CycleParseErrorKind::RepeatedDart { dart: value },
                    });
                }
                seen[d] = true;
                darts.push(d);
            }
            if darts.is_empty() {
                return Err(CycleParseError {
                    offset: open,
                    kind: CycleParseErrorKind::EmptyCycle,
                });
            }
            for (t, &d) in darts.iter().enumerate() {
                images[d] = darts[(t + 1) % darts.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Canonical cycle notation with 1-based darts. Fixed points are
    /// omitted unless `include_fixed` is set; the identity prints as `()`
    /// when they are omitted.
    pub fn cycle_string(&self, include_fixed: bool) -> String {
        let mut out = String::new();
        for cyc in self.cycles() {
            if cyc.len() == 1 && !include_fixed {
                continue;
            }
            out.push('(');
            for (t, d) in cyc.iter().enumerate() {
                if t > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", d + 1);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Uniformly random permutation (Fisher-Yates).
    #[cfg(feature = "rand")]
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.n(), self.cycle_string(false))
    }
}

/// Whether the group generated by `sigma` and `alpha` acts transitively on
/// the darts: a work-list orbit closure from dart 1. Closing forward under
/// two permutations reaches the full group orbit because following a cycle
/// far enough also reaches each preimage.
pub fn check_transitive(sigma: &Permutation, alpha: &Permutation) -> Result<bool, PermError> {
    Ok(orbit_of_first(sigma, alpha)?.len() == sigma.n())
}

/// The orbit of dart 0 under forward closure, ascending. Used both for the
/// transitivity test and as the witness in validation errors.
pub fn orbit_of_first(sigma: &Permutation, alpha: &Permutation) -> Result<Vec<usize>, PermError> {
    if sigma.n() != alpha.n() {
        return Err(PermError::SizeMismatch {
            left: sigma.n(),
            right: alpha.n(),
        });
    }
    let n = sigma.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut in_orbit = vec![false; n];
    let mut stack = vec![0usize];
    in_orbit[0] = true;
    while let Some(i) = stack.pop() {
        for j in [sigma.apply(i), alpha.apply(i)] {
            if !in_orbit[j] {
                in_orbit[j] = true;
                stack.push(j);
            }
        }
    }
    Ok((0..n).filter(|&i| in_orbit[i]).collect())
}
