//! CSS code objects: orthogonality validation, the dimension `k`, and the
//! exact minimum distance.
//!
//! Two independent searches are provided. `min_distance` enumerates the
//! kernels of `H_X` and `H_Z` through their nullspace generators with
//! Gray-code stepping, keeping the lightest vector that fails orthogonality
//! against the opposite kernel. `min_distance_oracle` walks all of `F_2^n`
//! in ascending weight and stops at the first logical operator. Wherever
//! both complete they must agree exactly; the test suites enforce this.

use alloc::vec::Vec;
use core::fmt;

use crate::f2::{BinaryMatrix, BinaryVector};

/// Default enumeration cap for distance searches.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CssError {
    ColumnMismatch { hx_cols: usize, hz_cols: usize },
    /// `H_X H_Z^T != 0`; carries one offending row pair (0-based).
    NotOrthogonal { hx_row: usize, hz_row: usize },
}

impl fmt::Display for CssError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CssError::ColumnMismatch { hx_cols, hz_cols } => {
                write!(f, "H_X has {hx_cols} columns but H_Z has {hz_cols}")
            }
            CssError::NotOrthogonal { hx_row, hz_row } => write!(
                f,
                "H_X row {} and H_Z row {} have odd inner product",
                hx_row + 1,
                hz_row + 1
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CssError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistanceError {
    /// `k = 0`: the minimization domain of the distance formula is empty.
    NoLogicalQubits,
    ZeroBudget,
}

impl fmt::Display for DistanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceError::NoLogicalQubits => write!(f, "code has no logical qubits (k = 0)"),
            DistanceError::ZeroBudget => write!(f, "enumeration budget must be positive"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DistanceError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    NoLogicalQubits,
    ZeroBudget,
    /// Budget ran out before any logical operator was seen.
    Inconclusive { examined: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NoLogicalQubits => write!(f, "code has no logical qubits (k = 0)"),
            OracleError::ZeroBudget => write!(f, "enumeration budget must be positive"),
            OracleError::Inconclusive { examined } => {
                write!(f, "budget exhausted after {examined} candidates with no witness")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OracleError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessError {
    NotComputed,
    NotExhaustive,
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::NotComputed => write!(f, "distance has not been computed yet"),
            WitnessError::NotExhaustive => write!(f, "distance search was not exhaustive"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WitnessError {}

/// Which kernel a logical operator came from: `X` means `c` lies in
/// `ker H_X`, `Z` in `ker H_Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    X,
    Z,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::X => write!(f, "X"),
            Side::Z => write!(f, "Z"),
        }
    }
}

/// A minimum-weight logical operator found by the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub side: Side,
    pub vector: BinaryVector,
}

/// Outcome of a distance search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distance {
    /// Exact distance when `exhaustive`, otherwise the best upper bound
    /// seen (or `None` if no logical operator was encountered).
    pub weight: Option<usize>,
    pub exhaustive: bool,
    pub witness: Option<Witness>,
    /// Number of candidates enumerated across both passes.
    pub examined: u64,
}

#[cfg(feature = "std")]
type DistanceCell = std::sync::OnceLock<Distance>;
#[cfg(not(feature = "std"))]
type DistanceCell = core::cell::OnceCell<Distance>;

/// A validated CSS code: `H_X H_Z^T = 0` and `k = n - rank H_X - rank H_Z`.
///
/// The distance cache is write-once; repeated distance queries return the
/// first result, so reports are deterministic.
#[derive(Debug)]
pub struct CssCode {
    hx: BinaryMatrix,
    hz: BinaryMatrix,
    n: usize,
    k: usize,
    gx: Vec<BinaryVector>,
    gz: Vec<BinaryVector>,
    distance: DistanceCell,
}

impl CssCode {
    pub fn new(hx: BinaryMatrix, hz: BinaryMatrix) -> Result<Self, CssError> {
        if hx.cols() != hz.cols() {
            return Err(CssError::ColumnMismatch {
                hx_cols: hx.cols(),
                hz_cols: hz.cols(),
            });
        }
        let product = hx.mul(&hz.transpose()).expect("column counts match");
        if !product.is_zero() {
            for r in 0..product.rows() {
                for c in 0..product.cols() {
                    if product.get(r, c) {
                        return Err(CssError::NotOrthogonal { hx_row: r, hz_row: c });
                    }
                }
            }
        }
        let n = hx.cols();
        let rank_x = hx.rank();
        let rank_z = hz.rank();
        let k = n - rank_x - rank_z;
        let gx = hx.nullspace_basis();
        let gz = hz.nullspace_basis();
        Ok(CssCode {
            hx,
            hz,
            n,
            k,
            gx,
            gz,
            distance: DistanceCell::new(),
        })
    }

    /// Code length: the number of physical qubits.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of logical qubits, `n - rank(H_X) - rank(H_Z)`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn hx(&self) -> &BinaryMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BinaryMatrix {
        &self.hz
    }

    /// Nullspace generators of `H_X` (the columns of `G_X`).
    pub fn gx(&self) -> &[BinaryVector] {
        &self.gx
    }

    pub fn gz(&self) -> &[BinaryVector] {
        &self.gz
    }

    /// Whether `c` is a logical operator: in one kernel but not orthogonal
    /// to the opposite kernel.
    pub fn is_logical(&self, c: &BinaryVector) -> bool {
        if c.weight() == 0 || c.len() != self.n {
            return false;
        }
        let in_x = self.hx.mul_vector(c).map(|s| s.is_zero()).unwrap_or(false);
        let in_z = self.hz.mul_vector(c).map(|s| s.is_zero()).unwrap_or(false);
        (in_x && self.gz.iter().any(|g| g.dot(c))) || (in_z && self.gx.iter().any(|g| g.dot(c)))
    }

    /// Serial exact distance search with an enumeration budget.
    pub fn min_distance(&self, budget: u64) -> Result<&Distance, DistanceError> {
        self.min_distance_with_threads(budget, 1)
    }

    /// Distance search; with the `std` feature the kernel enumeration may
    /// be partitioned across `threads` workers. The result is bit-identical
    /// to the serial search for any thread count.
    pub fn min_distance_with_threads(
        &self,
        budget: u64,
        threads: usize,
    ) -> Result<&Distance, DistanceError> {
        if budget == 0 {
            return Err(DistanceError::ZeroBudget);
        }
        if self.k == 0 {
            return Err(DistanceError::NoLogicalQubits);
        }
        if let Some(d) = self.distance.get() {
            return Ok(d);
        }
        let result = self.search(budget, threads.max(1));
        let _ = self.distance.set(result);
        Ok(self.distance.get().expect("just set"))
    }

    fn search(&self, budget: u64, threads: usize) -> Distance {
        let size_x = kernel_size(self.gx.len());
        let size_z = kernel_size(self.gz.len());
        let limit_x = size_x.min(budget);
        let limit_z = size_z.min(budget - limit_x);
        let exhaustive = limit_x == size_x && limit_z == size_z;

        let mut best: Option<(usize, u64, Side, BinaryVector)> = None;
        for (side, gens, others, limit, base) in [
            (Side::X, &self.gx, &self.gz, limit_x, 0),
            (Side::Z, &self.gz, &self.gx, limit_z, limit_x),
        ] {
            let found = enumerate_kernel(self.n, gens, others, limit, threads);
            if let Some((w, idx, v)) = found {
                let candidate = (w, base + idx, side, v);
                if best
                    .as_ref()
                    .map(|(bw, bi, _, _)| (w, base + idx) < (*bw, *bi))
                    .unwrap_or(true)
                {
                    best = Some(candidate);
                }
            }
        }

        let (weight, witness) = match best {
            Some((w, _, side, vector)) => {
                let wit = Witness { side, vector };
                debug_assert!(self.is_logical(&wit.vector));
                (Some(w), Some(wit))
            }
            None => (None, None),
        };
        Distance {
            weight,
            exhaustive,
            witness,
            examined: limit_x + limit_z,
        }
    }

    /// Weight-ascending enumeration of `F_2^n`: returns the first weight at
    /// which a logical operator exists. Independent of `min_distance`.
    pub fn min_distance_oracle(&self, budget: u64) -> Result<usize, OracleError> {
        if budget == 0 {
            return Err(OracleError::ZeroBudget);
        }
        if self.k == 0 {
            return Err(OracleError::NoLogicalQubits);
        }
        let n = self.n;
        let col_syn_x: Vec<BinaryVector> = (0..n).map(|c| self.hx.column(c)).collect();
        let col_syn_z: Vec<BinaryVector> = (0..n).map(|c| self.hz.column(c)).collect();
        let mut examined: u64 = 0;
        for w in 1..=n {
            let mut combo: Vec<usize> = (0..w).collect();
            loop {
                if examined == budget {
                    return Err(OracleError::Inconclusive { examined });
                }
                examined += 1;
                let mut syn_x = BinaryVector::zeros(self.hx.rows());
                let mut syn_z = BinaryVector::zeros(self.hz.rows());
                for &i in &combo {
                    syn_x.xor_assign(&col_syn_x[i]);
                    syn_z.xor_assign(&col_syn_z[i]);
                }
                if syn_x.is_zero() || syn_z.is_zero() {
                    let c = BinaryVector::from_support(n, &combo);
                    if (syn_x.is_zero() && self.gz.iter().any(|g| g.dot(&c)))
                        || (syn_z.is_zero() && self.gx.iter().any(|g| g.dot(&c)))
                    {
                        return Ok(w);
                    }
                }
                if !next_combination(&mut combo, n) {
                    break;
                }
            }
        }
        // k >= 1 guarantees a logical operator of weight <= n exists
        unreachable!("ascending enumeration must find a witness for k >= 1")
    }

    /// The witness recorded by an exhaustive `min_distance` run.
    pub fn distance_witness(&self) -> Result<&Witness, WitnessError> {
        let d = self.distance.get().ok_or(WitnessError::NotComputed)?;
        if !d.exhaustive {
            return Err(WitnessError::NotExhaustive);
        }
        Ok(d.witness.as_ref().expect("exhaustive search on k >= 1 always finds a witness"))
    }

    /// The cached distance, if a search already ran.
    pub fn cached_distance(&self) -> Option<&Distance> {
        self.distance.get()
    }
}

fn kernel_size(dim: usize) -> u64 {
    if dim >= 64 {
        u64::MAX
    } else {
        1u64 << dim
    }
}

/// Lexicographically next `w`-combination of `{0..n-1}`; false when done.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let w = combo.len();
    let mut i = w;
    while i > 0 {
        i -= 1;
        if combo[i] != i + n - w {
            combo[i] += 1;
            for j in i + 1..w {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Gray-code value at enumeration index `u`.
fn gray(u: u64) -> u64 {
    u ^ (u >> 1)
}

fn combination_at(n: usize, gens: &[BinaryVector], mask: u64) -> BinaryVector {
    let mut c = BinaryVector::zeros(n);
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        c.xor_assign(&gens[i]);
        bits &= bits - 1;
    }
    c
}

/// Scans kernel elements `c = sum of gens over gray(u)` for `u` in
/// `[lo, hi)`, keeping the minimum `(weight, index)` candidate that has a
/// nonzero product against some opposite-kernel generator.
fn scan_range(
    n: usize,
    gens: &[BinaryVector],
    others: &[BinaryVector],
    lo: u64,
    hi: u64,
) -> Option<(usize, u64, BinaryVector)> {
    let mut c = combination_at(n, gens, gray(lo));
    let mut best: Option<(usize, u64, BinaryVector)> = None;
    let mut u = lo;
    loop {
        let w = c.weight();
        if w > 0
            && best.as_ref().map(|(bw, _, _)| w < *bw).unwrap_or(true)
            && others.iter().any(|g| g.dot(&c))
        {
            best = Some((w, u, c.clone()));
        }
        u += 1;
        if u >= hi {
            break;
        }
        c.xor_assign(&gens[u.trailing_zeros() as usize]);
    }
    best
}

/// Enumerates `limit` kernel elements, possibly split across workers; the
/// merged result equals the serial scan exactly (minimum weight, earliest
/// enumeration index).
fn enumerate_kernel(
    n: usize,
    gens: &[BinaryVector],
    others: &[BinaryVector],
    limit: u64,
    threads: usize,
) -> Option<(usize, u64, BinaryVector)> {
    if limit == 0 || others.is_empty() {
        return None;
    }
    #[cfg(feature = "std")]
    if threads > 1 && limit >= 4096 {
        let workers = threads.min(((limit + 4095) / 4096) as usize);
        let chunk = limit / workers as u64;
        let mut results: Vec<Option<(usize, u64, BinaryVector)>> = Vec::new();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for t in 0..workers {
                let lo = t as u64 * chunk;
                let hi = if t == workers - 1 { limit } else { lo + chunk };
                handles.push(scope.spawn(move || scan_range(n, gens, others, lo, hi)));
            }
            for h in handles {
                results.push(h.join().expect("distance worker panicked"));
            }
        });
        return results
            .into_iter()
            .flatten()
            .min_by_key(|(w, idx, _)| (*w, *idx));
    }
    let _ = threads;
    scan_range(n, gens, others, 0, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn steane() -> CssCode {
        let h: BinaryMatrix = "0001111\n0110011\n1010101".parse().unwrap();
        CssCode::new(h.clone(), h).unwrap()
    }

    #[test]
    fn steane_parameters() {
        let code = steane();
        assert_eq!(code.n(), 7);
        assert_eq!(code.k(), 1);
        let d = code.min_distance(DEFAULT_BUDGET).unwrap();
        assert_eq!(d.weight, Some(3));
        assert!(d.exhaustive);
        assert_eq!(code.min_distance_oracle(1 << 20).unwrap(), 3);
    }

    #[test]
    fn steane_witness_is_a_weight_3_logical() {
        let code = steane();
        code.min_distance(DEFAULT_BUDGET).unwrap();
        let w = code.distance_witness().unwrap();
        assert_eq!(w.vector.weight(), 3);
        assert!(code.is_logical(&w.vector));
    }

    #[test]
    fn witness_requires_a_prior_search() {
        let code = steane();
        assert_eq!(code.distance_witness().unwrap_err(), WitnessError::NotComputed);
    }

    #[test]
    fn orthogonality_is_checked() {
        let hx: BinaryMatrix = "110".parse().unwrap();
        let hz: BinaryMatrix = "100".parse().unwrap();
        let err = CssCode::new(hx, hz).unwrap_err();
        assert_eq!(err, CssError::NotOrthogonal { hx_row: 0, hz_row: 0 });

        let hx: BinaryMatrix = "11".parse().unwrap();
        let hz: BinaryMatrix = "110".parse().unwrap();
        assert!(matches!(CssCode::new(hx, hz), Err(CssError::ColumnMismatch { .. })));
    }

    #[test]
    fn repetition_style_code_has_k_zero() {
        let h: BinaryMatrix = "11".parse().unwrap();
        let code = CssCode::new(h.clone(), h).unwrap();
        assert_eq!(code.n(), 2);
        assert_eq!(code.k(), 0);
        assert_eq!(
            code.min_distance(DEFAULT_BUDGET).unwrap_err(),
            DistanceError::NoLogicalQubits
        );
        assert_eq!(code.min_distance_oracle(10).unwrap_err(), OracleError::NoLogicalQubits);
    }

    #[test]
    fn zero_budget_is_an_argument_error() {
        let code = steane();
        assert_eq!(code.min_distance(0).unwrap_err(), DistanceError::ZeroBudget);
        assert_eq!(code.min_distance_oracle(0).unwrap_err(), OracleError::ZeroBudget);
    }

    #[test]
    fn budget_exhaustion_reports_a_bound() {
        let code = steane();
        // 2^4 + 2^4 = 32 candidates needed; 5 is far too few but legal
        let d = code.min_distance(5).unwrap();
        assert!(!d.exhaustive);
        assert_eq!(d.examined, 5);
        if let Some(w) = d.weight {
            assert!(w >= 3);
        }
    }

    #[test]
    fn oracle_inconclusive_on_tiny_budget() {
        let code = steane();
        assert_eq!(
            code.min_distance_oracle(3).unwrap_err(),
            OracleError::Inconclusive { examined: 3 }
        );
    }

    #[test]
    fn duplicate_rows_change_nothing() {
        let h: BinaryMatrix = "0001111\n0110011\n1010101".parse().unwrap();
        let mut rows = alloc::vec![];
        for r in 0..h.rows() {
            rows.push(h.row(r));
        }
        rows.push(h.row(0));
        rows.push(h.row(2));
        let padded = BinaryMatrix::from_row_vectors(7, &rows);
        let code = CssCode::new(padded.clone(), padded).unwrap();
        assert_eq!(code.k(), 1);
        assert_eq!(code.min_distance(DEFAULT_BUDGET).unwrap().weight, Some(3));
    }

    #[test]
    fn search_is_deterministic_and_thread_independent() {
        let h: BinaryMatrix = "0001111\n0110011\n1010101".parse().unwrap();
        let serial = CssCode::new(h.clone(), h.clone()).unwrap();
        let a = serial.min_distance(DEFAULT_BUDGET).unwrap().clone();
        let b = serial.min_distance(DEFAULT_BUDGET).unwrap().clone();
        assert_eq!(a, b);

        #[cfg(feature = "std")]
        {
            let threaded = CssCode::new(h.clone(), h).unwrap();
            let c = threaded.min_distance_with_threads(DEFAULT_BUDGET, 8).unwrap();
            assert_eq!(&a, c);
        }
    }

    #[test]
    fn oracle_equals_search_on_small_random_codes() {
        // single-row check matrices orthogonal to themselves
        for pattern in ["1111", "110011", "101101"] {
            let h: BinaryMatrix = pattern.parse().unwrap();
            let code = CssCode::new(h.clone(), h).unwrap();
            if code.k() == 0 {
                continue;
            }
            let d = code.min_distance(DEFAULT_BUDGET).unwrap();
            assert!(d.exhaustive);
            assert_eq!(d.weight.unwrap(), code.min_distance_oracle(1 << 20).unwrap());
        }
    }

    #[test]
    fn next_combination_is_lexicographic() {
        let mut c = alloc::vec![0, 1];
        let mut seen = alloc::vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![0, 2],
                alloc::vec![0, 3],
                alloc::vec![1, 2],
                alloc::vec![1, 3],
                alloc::vec![2, 3]
            ]
        );
    }
}
