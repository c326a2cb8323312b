//! Boundary operators and check matrices for the three code constructions:
//! generic F2 chain complexes, graphs embedded in surfaces, and hypermap
//! homology in a special basis.
//!
//! For a hypermap with darts `W`, vertices `V`, edges `E` and faces `F` the
//! raw operators are
//!
//! - `d2(f) = sum of w_i over darts i in face f`,
//! - `d1(w_i) = v(i) + v(alpha^-1(i))` where `v(i)` is the vertex containing `i`,
//! - `iota(e) = sum of w_i over darts i in edge e`,
//!
//! and the code lives on the quotient `W / iota(E)`. A special basis picks
//! one dart per edge (the set `S`); the quotient basis is `W \ S`, and each
//! special dart rewrites as the sum of the other darts of its edge. In that
//! basis `H_X = [d1]` and `H_Z^T = [d2]`, giving a `[|W|-|E|, 2g, D]` CSS
//! code.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::css::CssCode;
use crate::f2::{BinaryMatrix, BinaryVector};
use crate::hypermap::Hypermap;

/// A sum of darts, stored as an F2 vector of length `n`.
pub type DartSum = BinaryVector;

/// The raw (un-quotiented) boundary operators of a hypermap.
pub struct RawBoundaries {
    /// `|V| x n`; column `j` is the boundary of dart `j`.
    pub d1: BinaryMatrix,
    /// `n x |F|`; column `f` is the indicator of face `f`'s darts.
    pub d2: BinaryMatrix,
    /// `n x |E|`; column `e` is the indicator of edge `e`'s darts.
    pub iota: BinaryMatrix,
}

/// Builds the raw boundary operators with rows and columns in the canonical
/// cell order of `Hypermap::cells`.
pub fn raw_boundaries(h: &Hypermap) -> RawBoundaries {
    let n = h.n();
    let alpha_inv = h.alpha().inverse();
    let mut d1 = BinaryMatrix::zeros(h.vertices().len(), n);
    for j in 0..n {
        // char-2: the two endpoints cancel when they coincide
        d1.set(h.vertex_of(j), j, !d1.get(h.vertex_of(j), j));
        let vj = h.vertex_of(alpha_inv.apply(j));
        d1.set(vj, j, !d1.get(vj, j));
    }
    let mut d2 = BinaryMatrix::zeros(n, h.faces().len());
    for (f, cyc) in h.faces().iter().enumerate() {
        for &d in cyc {
            d2.set(d, f, true);
        }
    }
    let mut iota = BinaryMatrix::zeros(n, h.edges().len());
    for (e, cyc) in h.edges().iter().enumerate() {
        for &d in cyc {
            iota.set(d, e, true);
        }
    }
    RawBoundaries { d1, d2, iota }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecialBasisError {
    DartOutOfRange { dart: usize, n: usize },
    /// An edge received no special dart, or more than one.
    EdgeNotCoveredOnce { edge: usize, count: usize },
}

impl fmt::Display for SpecialBasisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialBasisError::DartOutOfRange { dart, n } => {
                write!(f, "special dart {} out of range 1..={}", dart + 1, n)
            }
            SpecialBasisError::EdgeNotCoveredOnce { edge, count } => write!(
                f,
                "edge {} has {} special darts, expected exactly one",
                edge + 1,
                count
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SpecialBasisError {}

/// One designated dart per edge; the quotient basis is the complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialBasis {
    special_of_edge: Vec<usize>,
    is_special: Vec<bool>,
    basis: Vec<usize>,
    col_of: Vec<Option<usize>>,
}

impl SpecialBasis {
    /// Default rule: the maximum dart label in each edge cycle.
    pub fn default_for(h: &Hypermap) -> SpecialBasis {
        let darts: Vec<usize> = h
            .edges()
            .iter()
            .map(|cyc| *cyc.iter().max().expect("edge cycles are nonempty"))
            .collect();
        Self::from_darts(h, &darts).expect("one maximum per edge")
    }

    /// Explicit choice, one dart (0-based) per edge in any order.
    pub fn from_darts(h: &Hypermap, darts: &[usize]) -> Result<SpecialBasis, SpecialBasisError> {
        let n = h.n();
        let mut per_edge: Vec<Vec<usize>> = vec![Vec::new(); h.edges().len()];
        for &d in darts {
            if d >= n {
                return Err(SpecialBasisError::DartOutOfRange { dart: d, n });
            }
            per_edge[h.edge_of(d)].push(d);
        }
        let mut special_of_edge = Vec::with_capacity(per_edge.len());
        for (e, list) in per_edge.iter().enumerate() {
            if list.len() != 1 {
                return Err(SpecialBasisError::EdgeNotCoveredOnce {
                    edge: e,
                    count: list.len(),
                });
            }
            special_of_edge.push(list[0]);
        }
        let mut is_special = vec![false; n];
        for &d in &special_of_edge {
            is_special[d] = true;
        }
        let basis: Vec<usize> = (0..n).filter(|&d| !is_special[d]).collect();
        let mut col_of = vec![None; n];
        for (c, &d) in basis.iter().enumerate() {
            col_of[d] = Some(c);
        }
        Ok(SpecialBasis {
            special_of_edge,
            is_special,
            basis,
            col_of,
        })
    }

    pub fn special_of_edge(&self, e: usize) -> usize {
        self.special_of_edge[e]
    }

    pub fn special_darts(&self) -> &[usize] {
        &self.special_of_edge
    }

    pub fn is_special(&self, dart: usize) -> bool {
        self.is_special[dart]
    }

    /// The non-special darts in increasing index: the columns of the
    /// quotient space.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Column index of a non-special dart.
    pub fn column_of(&self, dart: usize) -> Option<usize> {
        self.col_of[dart]
    }

    /// Coordinates of a dart sum in the quotient basis: every special dart
    /// is replaced by the sum of the other darts of its edge.
    pub fn reduce(&self, h: &Hypermap, darts: &[usize]) -> BinaryVector {
        let mut coords = BinaryVector::zeros(self.basis.len());
        for &d in darts {
            if self.is_special[d] {
                for &mate in &h.edges()[h.edge_of(d)] {
                    if mate != d {
                        coords.flip(self.col_of[mate].expect("edge mates of a special dart are basis darts"));
                    }
                }
            } else {
                coords.flip(self.col_of[d].expect("non-special dart is a basis dart"));
            }
        }
        coords
    }
}

/// The check matrices of a hypermap in a special basis:
/// `H_X` is `|V| x (n - |E|)`, `H_Z` is `|F| x (n - |E|)`, columns ordered
/// by increasing non-special dart, rows by canonical cell order.
pub fn hypermap_check_matrices(h: &Hypermap, s: &SpecialBasis) -> (BinaryMatrix, BinaryMatrix) {
    let alpha_inv = h.alpha().inverse();
    let mut hx = BinaryMatrix::zeros(h.vertices().len(), s.len());
    for (c, &d) in s.basis().iter().enumerate() {
        hx.set(h.vertex_of(d), c, !hx.get(h.vertex_of(d), c));
        let v = h.vertex_of(alpha_inv.apply(d));
        hx.set(v, c, !hx.get(v, c));
    }
    let mut hz = BinaryMatrix::zeros(h.faces().len(), s.len());
    for (f, cyc) in h.faces().iter().enumerate() {
        let coords = s.reduce(h, cyc);
        for c in coords.support() {
            hz.set(f, c, true);
        }
    }
    debug_assert!(hx.mul(&hz.transpose()).unwrap().is_zero());
    (hx, hz)
}

/// CSS code of a hypermap under a special basis.
pub fn hypermap_code(h: &Hypermap, s: &SpecialBasis) -> CssCode {
    let (hx, hz) = hypermap_check_matrices(h, s);
    CssCode::new(hx, hz).expect("hypermap check matrices are orthogonal by construction")
}

/// Homology dimensions `(h0, h1, h2)` from the ranks of the special-basis
/// matrices. For every valid hypermap this equals `(1, 2g, 1)`.
pub fn homology_dimensions(h: &Hypermap) -> (usize, usize, usize) {
    let s = SpecialBasis::default_for(h);
    let (hx, hz) = hypermap_check_matrices(h, &s);
    let rx = hx.rank();
    let rz = hz.rank();
    (
        h.vertices().len() - rx,
        s.len() - rx - rz,
        h.faces().len() - rz,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleError {
    LengthMismatch { expected: usize, got: usize },
    /// The dart sum has odd incidence at the named cell, so it is not a
    /// classical cycle of the (dual) bipartite representation.
    OddIncidence { cell: CellKind, index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    Vertex,
    Edge,
    Face,
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::LengthMismatch { expected, got } => {
                write!(f, "dart sum has length {got}, hypermap has {expected} darts")
            }
            CycleError::OddIncidence { cell, index } => {
                let kind = match cell {
                    CellKind::Vertex => "vertex",
                    CellKind::Edge => "edge",
                    CellKind::Face => "face",
                };
                write!(f, "not a cycle: odd number of darts at {} {}", kind, index + 1)
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CycleError {}

fn check_even_incidence(
    x: &DartSum,
    n: usize,
    cells: &[Vec<usize>],
    kind: CellKind,
) -> Result<(), CycleError> {
    if x.len() != n {
        return Err(CycleError::LengthMismatch {
            expected: n,
            got: x.len(),
        });
    }
    for (i, cyc) in cells.iter().enumerate() {
        if cyc.iter().filter(|&&d| x.get(d)).count() % 2 != 0 {
            return Err(CycleError::OddIncidence { cell: kind, index: i });
        }
    }
    Ok(())
}

/// Weight of `mu^-1(x)` in the special basis, where `x` is a classical
/// cycle of the bipartite representation and `mu` sends a quotient class
/// `w` to `w + alpha^-1(w)`.
///
/// Around each edge the darts of `x` are paired going counterclockwise
/// (against the alpha order). When the edge's special dart is in `x` the
/// pairing is chosen so the special dart ends a pair; when it is not, the
/// pairing avoids spanning it. The result is `wt(x)/2` plus the number of
/// darts skipped inside pairing intervals. The cyclic structure makes the
/// admissible pairing unique, so no tie-breaking arises.
pub fn lift_weight(h: &Hypermap, s: &SpecialBasis, x: &DartSum) -> Result<usize, CycleError> {
    check_even_incidence(x, h.n(), h.vertices(), CellKind::Vertex)?;
    check_even_incidence(x, h.n(), h.edges(), CellKind::Edge)?;

    let mut total = 0usize;
    for (e, cyc) in h.edges().iter().enumerate() {
        let l = cyc.len();
        // counterclockwise order: reverse the stored alpha cycle
        let ccw: Vec<usize> = (0..l).map(|t| cyc[(l - t) % l]).collect();
        let in_x: Vec<usize> = (0..l).filter(|&t| x.get(ccw[t])).collect();
        if in_x.is_empty() {
            continue;
        }
        let s_pos = ccw
            .iter()
            .position(|&d| d == s.special_of_edge(e))
            .expect("special dart lies in its edge cycle");

        // Two alternating pairings exist; the special-dart rules pick one.
        // Class A pairs (P[0],P[1]),(P[2],P[3]),...; class B is the shift.
        let use_class_a = match in_x.iter().position(|&t| t == s_pos) {
            // special dart in x: it must end a pair
            Some(j) => j % 2 == 1,
            // special dart in the gap after P[j]: that gap must not be spanned
            None => {
                let j = match in_x.iter().rposition(|&t| t < s_pos) {
                    Some(j) => j,
                    None => in_x.len() - 1, // wrap gap
                };
                j % 2 == 1
            }
        };

        let m = in_x.len();
        let mut skipped = 0usize;
        let mut t = if use_class_a { 0 } else { 1 };
        for _ in 0..m / 2 {
            let a = in_x[t % m];
            let b = in_x[(t + 1) % m];
            skipped += (b + l - a - 1) % l;
            t += 2;
        }
        total += m / 2 + skipped;
    }
    Ok(total)
}

/// Weighted length of a classical cycle `y` of the dual hypermap's
/// bipartite representation: non-special darts weigh 1, special darts 0.
pub fn dual_cycle_weight(h: &Hypermap, s: &SpecialBasis, y: &DartSum) -> Result<usize, CycleError> {
    check_even_incidence(y, h.n(), h.faces(), CellKind::Face)?;
    check_even_incidence(y, h.n(), h.edges(), CellKind::Edge)?;
    Ok(y.support().iter().filter(|&&d| !s.is_special(d)).count())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapCodeError {
    EdgeIndexOutOfRange { row: usize, edge: usize, num_edges: usize },
    DuplicateEdgeInRow { row: usize, edge: usize },
    /// An edge is incident to more than two vertices or faces.
    EdgeDegreeExceeded { edge: usize, count: usize, side: &'static str },
    /// The incidence data does not describe a closed surface complex.
    InvalidEmbedding { vertex_row: usize, face_row: usize },
}

impl fmt::Display for MapCodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapCodeError::EdgeIndexOutOfRange { row, edge, num_edges } => {
                write!(f, "row {}: edge index {} out of range 0..{}", row, edge, num_edges)
            }
            MapCodeError::DuplicateEdgeInRow { row, edge } => {
                write!(f, "row {}: edge {} listed twice", row, edge)
            }
            MapCodeError::EdgeDegreeExceeded { edge, count, side } => {
                write!(f, "edge {} appears in {} {} rows, at most 2 allowed", edge, count, side)
            }
            MapCodeError::InvalidEmbedding { vertex_row, face_row } => write!(
                f,
                "invalid embedding: vertex row {} and face row {} share an odd number of edges",
                vertex_row, face_row
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MapCodeError {}

fn incidence_matrix(
    rows: &[Vec<usize>],
    num_edges: usize,
    side: &'static str,
) -> Result<BinaryMatrix, MapCodeError> {
    let mut m = BinaryMatrix::zeros(rows.len(), num_edges);
    let mut degree = vec![0usize; num_edges];
    for (r, edges) in rows.iter().enumerate() {
        for &e in edges {
            if e >= num_edges {
                return Err(MapCodeError::EdgeIndexOutOfRange {
                    row: r,
                    edge: e,
                    num_edges,
                });
            }
            if m.get(r, e) {
                return Err(MapCodeError::DuplicateEdgeInRow { row: r, edge: e });
            }
            m.set(r, e, true);
            degree[e] += 1;
        }
    }
    for (e, &count) in degree.iter().enumerate() {
        if count > 2 {
            return Err(MapCodeError::EdgeDegreeExceeded { edge: e, count, side });
        }
    }
    Ok(m)
}

/// Check matrices of a graph embedded in a surface, from its vertex-edge
/// and face-edge incidence lists. The pair is orthogonality-checked before
/// being returned.
pub fn map_check_matrices(
    vertex_edges: &[Vec<usize>],
    face_edges: &[Vec<usize>],
    num_edges: usize,
) -> Result<(BinaryMatrix, BinaryMatrix), MapCodeError> {
    let hx = incidence_matrix(vertex_edges, num_edges, "vertex")?;
    let hz = incidence_matrix(face_edges, num_edges, "face")?;
    let product = hx.mul(&hz.transpose()).expect("shapes agree by construction");
    if !product.is_zero() {
        for v in 0..product.rows() {
            for f in 0..product.cols() {
                if product.get(v, f) {
                    return Err(MapCodeError::InvalidEmbedding {
                        vertex_row: v,
                        face_row: f,
                    });
                }
            }
        }
    }
    Ok((hx, hz))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    Shape { d1_cols: usize, d2_rows: usize },
    /// `d1 . d2 != 0`.
    NotAComplex,
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::Shape { d1_cols, d2_rows } => {
                write!(f, "d1 has {} columns but d2 has {} rows", d1_cols, d2_rows)
            }
            ComplexError::NotAComplex => write!(f, "d1 . d2 is nonzero"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ComplexError {}

/// Optional basis names for the three levels of a chain complex.
#[derive(Debug, Clone, Default)]
pub struct ComplexLabels {
    pub c2: Vec<String>,
    pub c1: Vec<String>,
    pub c0: Vec<String>,
}

/// A length-3 chain complex of F2 vector spaces `C2 -> C1 -> C0`.
pub struct ChainComplexF2 {
    d2: BinaryMatrix,
    d1: BinaryMatrix,
    pub labels: Option<ComplexLabels>,
}

impl ChainComplexF2 {
    /// `d2: C2 -> C1` (a `dim C1 x dim C2` matrix), `d1: C1 -> C0`.
    pub fn new(
        d2: BinaryMatrix,
        d1: BinaryMatrix,
        labels: Option<ComplexLabels>,
    ) -> Result<Self, ComplexError> {
        if d1.cols() != d2.rows() {
            return Err(ComplexError::Shape {
                d1_cols: d1.cols(),
                d2_rows: d2.rows(),
            });
        }
        if !d1.mul(&d2).expect("shapes checked").is_zero() {
            return Err(ComplexError::NotAComplex);
        }
        Ok(ChainComplexF2 { d2, d1, labels })
    }

    pub fn d1(&self) -> &BinaryMatrix {
        &self.d1
    }

    pub fn d2(&self) -> &BinaryMatrix {
        &self.d2
    }

    /// The CSS code of the complex: `H_X = [d1]`, `H_Z = [d2]^T`.
    pub fn css_code(&self) -> CssCode {
        CssCode::new(self.d1.clone(), self.d2.transpose())
            .expect("a chain complex yields orthogonal check matrices")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypermap::Hypermap;
    use crate::perm::Permutation;
    use alloc::string::ToString;

    fn torus8() -> Hypermap {
        Hypermap::from_cycle_text(8, "(1 8 3 6)(2 5 4 7)", "(1 2 3 4)(5 6 7 8)").unwrap()
    }

    fn octagon_square() -> Hypermap {
        Hypermap::from_cycle_text(
            24,
            "(1 24 20)(2 14 9)(3 11 13)(4 18 23)(5 21 17)(6 7 10)(8 16 12)(15 19 22)",
            "(1 2 3)(4 5 6)(7 8 9)(10 11 12)(13 14 15)(16 17 18)(19 20 21)(22 23 24)",
        )
        .unwrap()
    }

    fn trivial() -> Hypermap {
        Hypermap::new(Permutation::identity(1), Permutation::identity(1)).unwrap()
    }

    // H_X and H_Z of the octagon-square hypermap in the basis
    // w1,w2,w4,w5,...,w23, rows v1..v8 and f1..f8.
    const OCTAGON_HX: &str = "1100000000000110\n\
                              0100100001000000\n\
                              1000000111000000\n\
                              0011000000100001\n\
                              0001000000011000\n\
                              0010111100000000\n\
                              0000011000110000\n\
                              0000000010001111";
    const OCTAGON_HZ: &str = "1011000100001100\n\
                              0110100000000011\n\
                              1100000001000000\n\
                              0001000000110000\n\
                              0000011000000000\n\
                              0000110011100001\n\
                              0000001110011000\n\
                              0000000000000110";

    #[test]
    fn octagon_square_d1_column_example() {
        // dart 10 lies in vertex (6 7 10) = v6, alpha^-1(10) = 12 in v7
        let h = octagon_square();
        let b = raw_boundaries(&h);
        let col = b.d1.column(9);
        assert_eq!(col.support(), alloc::vec![5, 6]);
    }

    #[test]
    fn trivial_hypermap_boundaries() {
        let h = trivial();
        let b = raw_boundaries(&h);
        assert_eq!((b.d1.rows(), b.d1.cols()), (1, 1));
        assert!(b.d1.is_zero());
    }

    #[test]
    fn boundary_compositions_vanish() {
        for h in [torus8(), octagon_square(), trivial()] {
            let b = raw_boundaries(&h);
            assert!(b.d1.mul(&b.d2).unwrap().is_zero());
            assert!(b.d1.mul(&b.iota).unwrap().is_zero());
        }
    }

    #[test]
    fn default_special_basis_takes_edge_maxima() {
        let s = SpecialBasis::default_for(&octagon_square());
        let one_based: Vec<usize> = s.special_darts().iter().map(|d| d + 1).collect();
        assert_eq!(one_based, alloc::vec![3, 6, 9, 12, 15, 18, 21, 24]);

        let s = SpecialBasis::default_for(&trivial());
        assert_eq!(s.special_darts(), &[0]);
        assert!(s.basis().is_empty());

        let s = SpecialBasis::default_for(&torus8());
        let one_based: Vec<usize> = s.special_darts().iter().map(|d| d + 1).collect();
        assert_eq!(one_based, alloc::vec![4, 8]);
    }

    #[test]
    fn explicit_special_basis_is_validated() {
        let h = torus8();
        assert!(SpecialBasis::from_darts(&h, &[0, 1]).is_err()); // both in edge 1
        assert!(SpecialBasis::from_darts(&h, &[0]).is_err()); // edge 2 uncovered
        assert!(SpecialBasis::from_darts(&h, &[0, 99]).is_err());
        let s = SpecialBasis::from_darts(&h, &[4, 0]).unwrap();
        assert_eq!(s.special_darts(), &[0, 4]);
        assert_eq!(s.basis(), &[1, 2, 3, 5, 6, 7]);
    }

    #[test]
    fn octagon_square_matrices_match_the_worked_example() {
        let h = octagon_square();
        let s = SpecialBasis::default_for(&h);
        let (hx, hz) = hypermap_check_matrices(&h, &s);
        assert_eq!(hx, OCTAGON_HX.parse().unwrap());
        assert_eq!(hz, OCTAGON_HZ.parse().unwrap());
    }

    #[test]
    fn face_boundary_reduces_into_the_special_basis() {
        // d2(f1) = w1 + w11 + w6 + w21 = w1 + w4 + w5 + w11 + w19 + w20
        let h = octagon_square();
        let s = SpecialBasis::default_for(&h);
        let coords = s.reduce(&h, &h.faces()[0]);
        let darts: Vec<usize> = coords.support().iter().map(|&c| s.basis()[c] + 1).collect();
        assert_eq!(darts, alloc::vec![1, 4, 5, 11, 19, 20]);
    }

    #[test]
    fn trivial_hypermap_check_matrices_are_degenerate() {
        let h = trivial();
        let s = SpecialBasis::default_for(&h);
        let (hx, hz) = hypermap_check_matrices(&h, &s);
        assert_eq!((hx.rows(), hx.cols()), (1, 0));
        assert_eq!((hz.rows(), hz.cols()), (1, 0));
    }

    #[test]
    fn homology_dimensions_are_1_2g_1() {
        assert_eq!(homology_dimensions(&trivial()), (1, 0, 1));
        assert_eq!(homology_dimensions(&torus8()), (1, 2, 1));
        assert_eq!(homology_dimensions(&octagon_square()), (1, 2, 1));
    }

    #[test]
    fn hz_columns_have_weight_at_most_two() {
        for h in [torus8(), octagon_square()] {
            let s = SpecialBasis::default_for(&h);
            let (_, hz) = hypermap_check_matrices(&h, &s);
            for c in 0..hz.cols() {
                assert!(hz.column_weight(c) <= 2);
            }
        }
    }

    /// All classical cycles of the bipartite representation, by enumerating
    /// the kernel of the classical boundary matrix.
    fn classical_cycles(h: &Hypermap) -> Vec<BinaryVector> {
        let n = h.n();
        let mut d1bar = BinaryMatrix::zeros(h.vertices().len() + h.edges().len(), n);
        for j in 0..n {
            d1bar.set(h.vertex_of(j), j, true);
            d1bar.set(h.vertices().len() + h.edge_of(j), j, true);
        }
        enumerate_span(n, &d1bar.nullspace_basis())
    }

    fn enumerate_span(n: usize, basis: &[BinaryVector]) -> Vec<BinaryVector> {
        assert!(basis.len() <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << basis.len()) {
            let mut v = BinaryVector::zeros(n);
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.xor_assign(b);
                }
            }
            out.push(v);
        }
        out
    }

    /// Independent algebraic lift: solve mu(w) = x in the quotient basis
    /// and count ones.
    fn lift_weight_by_solving(h: &Hypermap, s: &SpecialBasis, x: &BinaryVector) -> usize {
        let alpha_inv = h.alpha().inverse();
        let cols: Vec<BinaryVector> = s
            .basis()
            .iter()
            .map(|&b| BinaryVector::from_support(h.n(), &[b, alpha_inv.apply(b)]))
            .collect();
        let mu = BinaryMatrix::from_col_vectors(h.n(), &cols);
        mu.solve(x).expect("classical cycles lie in the image of mu").weight()
    }

    #[test]
    fn lift_weight_of_zero_is_zero() {
        let h = torus8();
        let s = SpecialBasis::default_for(&h);
        assert_eq!(lift_weight(&h, &s, &BinaryVector::zeros(8)).unwrap(), 0);
    }

    #[test]
    fn lift_weight_rejects_non_cycles() {
        let h = torus8();
        let s = SpecialBasis::default_for(&h);
        let x = BinaryVector::from_support(8, &[0]);
        assert!(matches!(
            lift_weight(&h, &s, &x),
            Err(CycleError::OddIncidence { .. })
        ));
        let short = BinaryVector::zeros(3);
        assert!(matches!(
            lift_weight(&h, &s, &short),
            Err(CycleError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn lift_weight_agrees_with_algebraic_lift_on_fixtures() {
        for h in [torus8(), octagon_square()] {
            let s = SpecialBasis::default_for(&h);
            for x in classical_cycles(&h) {
                assert_eq!(
                    lift_weight(&h, &s, &x).unwrap(),
                    lift_weight_by_solving(&h, &s, &x),
                    "cycle {x}"
                );
            }
        }
    }

    /// Dual cycles: even incidence at every face and edge.
    fn dual_cycles(h: &Hypermap) -> Vec<BinaryVector> {
        let n = h.n();
        let mut d = BinaryMatrix::zeros(h.faces().len() + h.edges().len(), n);
        for j in 0..n {
            d.set(h.face_of(j), j, true);
            d.set(h.faces().len() + h.edge_of(j), j, true);
        }
        enumerate_span(n, &d.nullspace_basis())
    }

    #[test]
    fn no_nonzero_dual_cycle_has_weight_zero() {
        let h = octagon_square();
        let s = SpecialBasis::default_for(&h);
        assert_eq!(dual_cycle_weight(&h, &s, &BinaryVector::zeros(24)).unwrap(), 0);
        for y in dual_cycles(&h) {
            if !y.is_zero() {
                assert!(dual_cycle_weight(&h, &s, &y).unwrap() > 0);
            }
        }
    }

    #[test]
    fn dual_cycle_weight_rejects_non_cycles() {
        let h = octagon_square();
        let s = SpecialBasis::default_for(&h);
        let y = BinaryVector::from_support(24, &[0]);
        assert!(dual_cycle_weight(&h, &s, &y).is_err());
    }

    #[test]
    fn single_square_face_row_is_all_ones() {
        // 4 vertices in a square, 4 edges, one face bounded by all of them
        let vertex_edges = alloc::vec![
            alloc::vec![0, 3],
            alloc::vec![0, 1],
            alloc::vec![1, 2],
            alloc::vec![2, 3],
        ];
        let face_edges = alloc::vec![alloc::vec![0, 1, 2, 3]];
        let (hx, hz) = map_check_matrices(&vertex_edges, &face_edges, 4).unwrap();
        assert_eq!(hz.to_string(), "1111");
        assert!(hx.mul(&hz.transpose()).unwrap().is_zero());
    }

    #[test]
    fn map_check_matrices_rejects_open_complexes() {
        // face touches edge 0 once while the edge has two distinct endpoints
        let vertex_edges = alloc::vec![alloc::vec![0], alloc::vec![0]];
        let face_edges = alloc::vec![alloc::vec![0]];
        let err = map_check_matrices(&vertex_edges, &face_edges, 1).unwrap_err();
        assert!(matches!(err, MapCodeError::InvalidEmbedding { .. }));
    }

    #[test]
    fn map_check_matrices_validates_degrees() {
        let vertex_edges = alloc::vec![alloc::vec![0], alloc::vec![0], alloc::vec![0]];
        let err = map_check_matrices(&vertex_edges, &[], 1).unwrap_err();
        assert!(matches!(err, MapCodeError::EdgeDegreeExceeded { .. }));
    }

    #[test]
    fn chain_complex_checks_composition() {
        let h = octagon_square();
        let s = SpecialBasis::default_for(&h);
        let (hx, hz) = hypermap_check_matrices(&h, &s);
        let complex = ChainComplexF2::new(hz.transpose(), hx.clone(), None).unwrap();
        let code = complex.css_code();
        assert_eq!(code.n(), 16);
        assert_eq!(code.k(), 2);

        let bad = ChainComplexF2::new(BinaryMatrix::identity(2), BinaryMatrix::identity(2), None);
        assert!(matches!(bad, Err(ComplexError::NotAComplex)));
    }
}
