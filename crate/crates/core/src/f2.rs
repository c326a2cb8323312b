//! Exact linear algebra over the two-element field.
//!
//! Matrices are dense with bit-packed rows: a row is a run of 64-bit words
//! and every row operation is word-wise XOR. Rank, reduced row echelon form
//! and nullspace bases are computed exactly; there is no floating point
//! anywhere. Empty matrices (zero rows or zero columns) are legal and have
//! rank zero.
//!
//! All indices in this module are 0-based. Conversion to the 1-based
//! numbering used by file formats and reports happens at the I/O boundary.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    (bits + WORD_BITS - 1) / WORD_BITS
}

/// Shape mismatch between the operands of a matrix operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeError {
    pub op: &'static str,
    pub left: (usize, usize),
    pub right: (usize, usize),
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "shape mismatch in {}: {}x{} against {}x{}",
            self.op, self.left.0, self.left.1, self.right.0, self.right.1
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ShapeError {}

/// Error from parsing a 0/1 text matrix or vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitTextError {
    /// 1-based line of the offending input.
    pub line: usize,
    /// 1-based column of the offending input.
    pub col: usize,
    pub kind: BitTextErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BitTextErrorKind {
    BadCharacter(char),
    RaggedRow { expected: usize, got: usize },
    Empty,
}

impl fmt::Display for BitTextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            BitTextErrorKind::BadCharacter(c) => write!(
                f,
                "line {}, column {}: expected '0' or '1', found {:?}",
                self.line, self.col, c
            ),
            BitTextErrorKind::RaggedRow { expected, got } => write!(
                f,
                "line {}: row has {} entries, expected {}",
                self.line, got, expected
            ),
            BitTextErrorKind::Empty => write!(f, "empty bit text"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BitTextError {}

/// A fixed-length bit-packed vector over F2.
///
/// The length is set at construction and never changes. Unused high bits of
/// the last word are kept zero so that equality and weight are word-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        BinaryVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Vector with ones exactly at the given (0-based) positions.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {} out of range {}", i, self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {} out of range {}", i, self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {} out of range {}", i, self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight: the number of 1-bits.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor of unequal-length vectors");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over F2.
    #[inline]
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot of unequal-length vectors");
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }

    /// Ascending list of the 1-bit positions.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b);
                bits &= bits - 1;
            }
        }
        out
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({})", self)
    }
}

impl core::str::FromStr for BinaryVector {
    type Err = BitTextError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut v = BinaryVector::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(BitTextError {
                        line: 1,
                        col: i + 1,
                        kind: BitTextErrorKind::BadCharacter(other),
                    })
                }
            }
        }
        Ok(v)
    }
}

/// Result of reduced row echelon form over F2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// The unique RREF of the input matrix.
    pub matrix: BinaryMatrix,
    pub rank: usize,
    /// Leading-1 column (0-based) of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

/// A dense F2 matrix with bit-packed rows, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        BinaryMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Stack vectors of length `cols` as the rows of a matrix.
    pub fn from_row_vectors(cols: usize, rows: &[BinaryVector]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            assert_eq!(v.len(), cols, "row {} has wrong length", r);
            m.row_words_mut(r).copy_from_slice(&v.words);
        }
        m
    }

    /// Place vectors of length `rows` as the columns of a matrix.
    pub fn from_col_vectors(rows: usize, cols: &[BinaryVector]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows, "column {} has wrong length", c);
            for i in v.support() {
                m.set(i, c, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.row_words(r)[c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = c / WORD_BITS;
        let mask = 1u64 << (c % WORD_BITS);
        let row = self.row_words_mut(r);
        if value {
            row[w] |= mask;
        } else {
            row[w] &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> BinaryVector {
        BinaryVector {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    pub fn column(&self, c: usize) -> BinaryVector {
        let mut v = BinaryVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn column_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row(r).support() {
                t.set(c, r, true);
            }
        }
        t
    }

    fn xor_row_from(&mut self, dst: usize, src: usize) {
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * self.words_per_row);
            (
                &mut lo[dst * self.words_per_row..(dst + 1) * self.words_per_row],
                &hi[..self.words_per_row],
            )
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * self.words_per_row);
            (
                &mut hi[..self.words_per_row],
                &lo[src * self.words_per_row..(src + 1) * self.words_per_row],
            )
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words_per_row {
            self.data.swap(a * self.words_per_row + w, b * self.words_per_row + w);
        }
    }

    /// Matrix product with XOR accumulation.
    pub fn mul(&self, rhs: &BinaryMatrix) -> Result<BinaryMatrix, ShapeError> {
        if self.cols != rhs.rows {
            return Err(ShapeError {
                op: "mat_mul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = BinaryMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for j in self.row(r).support() {
                let src = rhs.row_words(j).to_vec();
                for (x, y) in out.row_words_mut(r).iter_mut().zip(&src) {
                    *x ^= y;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `M v`, producing a vector of length `rows`.
    pub fn mul_vector(&self, v: &BinaryVector) -> Result<BinaryVector, ShapeError> {
        if self.cols != v.len() {
            return Err(ShapeError {
                op: "mat_vec_mul",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        let mut out = BinaryVector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u32;
            for (a, b) in self.row_words(r).iter().zip(&v.words) {
                acc ^= (a & b).count_ones();
            }
            if acc & 1 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form.
    ///
    /// Pivots are chosen scanning columns left to right and rows top down,
    /// so the output is canonical and bit-exact across runs.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let Some(pivot_row) = (next_row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(next_row, pivot_row);
            for r in 0..m.rows {
                if r != next_row && m.get(r, col) {
                    m.xor_row_from(r, next_row);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A deterministic basis of the right nullspace `{v : M v = 0}`.
    ///
    /// One basis vector per free column, free columns taken in increasing
    /// index; the count always equals `cols - rank`.
    pub fn nullspace_basis(&self) -> Vec<BinaryVector> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = BinaryVector::zeros(self.cols);
            v.set(free, true);
            for (row, &pc) in pivots.iter().enumerate() {
                if matrix.get(row, free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `M y = rhs`, or `None` when the system is
    /// inconsistent. Free variables are set to zero, so the solution is
    /// deterministic.
    pub fn solve(&self, rhs: &BinaryVector) -> Option<BinaryVector> {
        assert_eq!(rhs.len(), self.rows, "rhs length must match row count");
        // RREF of the augmented matrix [M | rhs].
        let mut aug = BinaryMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            let src = self.row_words(r).to_vec();
            aug.row_words_mut(r)[..src.len()].copy_from_slice(&src);
            if rhs.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut y = BinaryVector::zeros(self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            if matrix.get(row, self.cols) {
                y.set(pc, true);
            }
        }
        Some(y)
    }
}

impl fmt::Display for BinaryMatrix {
    /// Rows of 0/1 characters separated by newlines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "\n  {}", self.row(r))?;
        }
        Ok(())
    }
}

impl core::str::FromStr for BinaryMatrix {
    type Err = BitTextError;

    /// Parses rows of 0/1 characters, one row per line. Blank lines and
    /// surrounding whitespace are ignored; all rows must have equal length.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows: Vec<BinaryVector> = Vec::new();
        let mut cols = None;
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let v: BinaryVector = line.parse().map_err(|e: BitTextError| BitTextError {
                line: lineno + 1,
                col: e.col,
                kind: e.kind,
            })?;
            match cols {
                None => cols = Some(v.len()),
                Some(c) if c != v.len() => {
                    return Err(BitTextError {
                        line: lineno + 1,
                        col: 1,
                        kind: BitTextErrorKind::RaggedRow {
                            expected: c,
                            got: v.len(),
                        },
                    })
                }
                _ => {}
            }
            rows.push(v);
        }
        let Some(cols) = cols else {
            return Err(BitTextError {
                line: 1,
                col: 1,
                kind: BitTextErrorKind::Empty,
            });
        };
        Ok(BinaryMatrix::from_row_vectors(cols, &rows))
    }
}
