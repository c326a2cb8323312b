//! Generators for the code families and fixtures: toric grids, planar
//! codes with holes, the even `m x m` square-grid hypermap, the honeycomb
//! hypermap, and the hard-coded worked examples.
//!
//! Dart labelling of the generated hypermaps is row-major in the
//! generator's own coordinates (documented per generator), so regenerated
//! fixtures are byte-stable. Only the resulting cell counts and code
//! parameters are contractual; figure labellings are not reproduced
//! label-for-label.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::css::CssCode;
use crate::f2::BinaryMatrix;
use crate::homology::{map_check_matrices, SpecialBasis};
use crate::hypermap::Hypermap;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamiliesError {
    InvalidArgument(String),
    UnknownFixture { name: String },
}

impl fmt::Display for FamiliesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamiliesError::InvalidArgument(msg) => write!(f, "{msg}"),
            FamiliesError::UnknownFixture { name } => write!(
                f,
                "unknown fixture {:?}; valid names: steane, torus8, octagon-square, dlcube",
                name
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FamiliesError {}

fn invalid(msg: String) -> FamiliesError {
    FamiliesError::InvalidArgument(msg)
}

/// Toric code of the `m x m` grid on the torus: a `[2m^2, 2, m]` code.
///
/// Vertices, horizontal edges `h(r,c) = (r,c)-(r,c+1)` and vertical edges
/// `v(r,c) = (r,c)-(r+1,c)` are indexed row-major; horizontal edges come
/// first.
pub fn gen_toric(m: usize) -> Result<CssCode, FamiliesError> {
    if m < 2 {
        return Err(invalid(format!("toric grid needs m >= 2, got {m}")));
    }
    let h = |r: usize, c: usize| r * m + c;
    let v = |r: usize, c: usize| m * m + r * m + c;
    let mut vertex_edges = Vec::with_capacity(m * m);
    for r in 0..m {
        for c in 0..m {
            vertex_edges.push(vec![
                h(r, c),
                h(r, (c + m - 1) % m),
                v(r, c),
                v((r + m - 1) % m, c),
            ]);
        }
    }
    let mut face_edges = Vec::with_capacity(m * m);
    for r in 0..m {
        for c in 0..m {
            face_edges.push(vec![h(r, c), h((r + 1) % m, c), v(r, c), v(r, (c + 1) % m)]);
        }
    }
    let (hx, hz) = map_check_matrices(&vertex_edges, &face_edges, 2 * m * m)
        .expect("torus grid incidences form a closed complex");
    Ok(CssCode::new(hx, hz).expect("incidences are orthogonal"))
}

/// A rectangle of faces removed from a planar grid, in 1-based face
/// coordinates (`row`, `col` is the top-left removed face).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoleSpec {
    pub row: usize,
    pub col: usize,
    pub height: usize,
    pub width: usize,
}

impl HoleSpec {
    fn validate(&self, face_rows: usize, face_cols: usize) -> Result<(), FamiliesError> {
        if self.height == 0 || self.width == 0 {
            return Err(invalid(format!("hole at ({}, {}) has zero extent", self.row, self.col)));
        }
        if self.row < 2
            || self.col < 2
            || self.row + self.height - 1 > face_rows.saturating_sub(1)
            || self.col + self.width - 1 > face_cols.saturating_sub(1)
        {
            return Err(invalid(format!(
                "hole at ({}, {}) size {}x{} must lie strictly inside the {}x{} face grid",
                self.row, self.col, self.height, self.width, face_rows, face_cols
            )));
        }
        Ok(())
    }

    fn touches(&self, other: &HoleSpec) -> bool {
        // sharing even a corner vertex counts as touching
        self.row <= other.row + other.height
            && other.row <= self.row + self.height
            && self.col <= other.col + other.width
            && other.col <= self.col + self.width
    }
}

/// Planar code: an `rows x cols` grid of vertices with rectangular holes
/// removed. `H_X` is the vertex-edge incidence of the remaining graph,
/// `H_Z` the face-edge incidence of the remaining interior faces (no outer
/// face, no hole faces); `k` equals the number of holes.
pub fn gen_planar(rows: usize, cols: usize, holes: &[HoleSpec]) -> Result<CssCode, FamiliesError> {
    if rows < 3 || cols < 3 {
        return Err(invalid(format!("planar grid needs at least 3x3 vertices, got {rows}x{cols}")));
    }
    let face_rows = rows - 1;
    let face_cols = cols - 1;
    for hole in holes {
        hole.validate(face_rows, face_cols)?;
    }
    for (i, a) in holes.iter().enumerate() {
        for b in &holes[i + 1..] {
            if a.touches(b) {
                return Err(invalid(format!(
                    "holes at ({}, {}) and ({}, {}) share an edge or vertex",
                    a.row, a.col, b.row, b.col
                )));
            }
        }
    }

    let mut face_removed = vec![false; face_rows * face_cols];
    let mut vertex_removed = vec![false; rows * cols];
    for hole in holes {
        let (a, b) = (hole.row - 1, hole.col - 1); // 0-based face rect
        for fr in a..a + hole.height {
            for fc in b..b + hole.width {
                face_removed[fr * face_cols + fc] = true;
            }
        }
        // vertices surrounded on all four sides by removed faces
        for r in a + 1..a + hole.height {
            for c in b + 1..b + hole.width {
                vertex_removed[r * cols + c] = true;
            }
        }
    }

    // horizontal edges (r, c)-(r, c+1), then vertical edges (r, c)-(r+1, c),
    // both row-major; an edge is removed iff both adjacent faces are removed
    let face_gone = |fr: isize, fc: isize| -> bool {
        if fr < 0 || fc < 0 || fr as usize >= face_rows || fc as usize >= face_cols {
            false // the outer face is never removed
        } else {
            face_removed[fr as usize * face_cols + fc as usize]
        }
    };
    let mut edge_index = vec![usize::MAX; rows * (cols - 1) + (rows - 1) * cols];
    let h_slot = |r: usize, c: usize| r * (cols - 1) + c;
    let v_slot = |r: usize, c: usize| rows * (cols - 1) + r * cols + c;
    let mut n_edges = 0;
    for r in 0..rows {
        for c in 0..cols - 1 {
            if !(face_gone(r as isize - 1, c as isize) && face_gone(r as isize, c as isize)) {
                edge_index[h_slot(r, c)] = n_edges;
                n_edges += 1;
            }
        }
    }
    for r in 0..rows - 1 {
        for c in 0..cols {
            if !(face_gone(r as isize, c as isize - 1) && face_gone(r as isize, c as isize)) {
                edge_index[v_slot(r, c)] = n_edges;
                n_edges += 1;
            }
        }
    }

    let mut vertex_edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if vertex_removed[r * cols + c] {
                continue;
            }
            let mut incident = Vec::with_capacity(4);
            if c > 0 {
                incident.push(h_slot(r, c - 1));
            }
            if c + 1 < cols {
                incident.push(h_slot(r, c));
            }
            if r > 0 {
                incident.push(v_slot(r - 1, c));
            }
            if r + 1 < rows {
                incident.push(v_slot(r, c));
            }
            vertex_edges.push(
                incident
                    .into_iter()
                    .filter_map(|slot| (edge_index[slot] != usize::MAX).then(|| edge_index[slot]))
                    .collect(),
            );
        }
    }
    let mut face_edges = Vec::new();
    for fr in 0..face_rows {
        for fc in 0..face_cols {
            if face_removed[fr * face_cols + fc] {
                continue;
            }
            face_edges.push(
                [h_slot(fr, fc), h_slot(fr + 1, fc), v_slot(fr, fc), v_slot(fr, fc + 1)]
                    .into_iter()
                    .map(|slot| {
                        debug_assert!(edge_index[slot] != usize::MAX);
                        edge_index[slot]
                    })
                    .collect(),
            );
        }
    }

    let (hx, hz) = map_check_matrices(&vertex_edges, &face_edges, n_edges)
        .expect("planar grid incidences form a valid complex");
    Ok(CssCode::new(hx, hz).expect("incidences are orthogonal"))
}

/// Even `m x m` square-grid hypermap on the torus.
///
/// Lattice nodes are checkerboard-coloured; one colour class carries the
/// hypermap vertices (sigma cycles the 4 incident darts counterclockwise),
/// the other the edges (alpha cycles them clockwise). Darts are the `2m^2`
/// lattice adjacencies: horizontal `h(r,c)` labelled `r*m + c`, then
/// vertical `v(r,c)` labelled `m^2 + r*m + c` (0-based, row-major). The
/// returned special basis picks the dart below each edge node, matching
/// the worked `[(3/2)m^2, 2, m]` family.
pub fn gen_grid_hypermap(m: usize) -> Result<(Hypermap, SpecialBasis), FamiliesError> {
    if m < 2 {
        return Err(invalid(format!("grid hypermap needs m >= 2, got {m}")));
    }
    if m % 2 != 0 {
        return Err(invalid(format!("grid hypermap needs even m, got {m}")));
    }
    let n = 2 * m * m;
    let h = |r: usize, c: usize| r * m + c;
    let v = |r: usize, c: usize| m * m + r * m + c;
    let mut sigma = vec![usize::MAX; n];
    let mut alpha = vec![usize::MAX; n];
    let mut special = Vec::with_capacity(m * m / 2);
    for r in 0..m {
        for c in 0..m {
            let east = h(r, c);
            let north = v((r + m - 1) % m, c);
            let west = h(r, (c + m - 1) % m);
            let south = v(r, c);
            if (r + c) % 2 == 0 {
                // vertex node: counterclockwise
                sigma[east] = north;
                sigma[north] = west;
                sigma[west] = south;
                sigma[south] = east;
            } else {
                // edge node: clockwise; the dart below it is special
                alpha[east] = south;
                alpha[south] = west;
                alpha[west] = north;
                alpha[north] = east;
                special.push(south);
            }
        }
    }
    let sigma = Permutation::from_images(sigma).expect("grid rotation is a bijection");
    let alpha = Permutation::from_images(alpha).expect("grid rotation is a bijection");
    let map = Hypermap::new(sigma, alpha).expect("torus grid is connected");
    let basis = SpecialBasis::from_darts(&map, &special).expect("one dart below each edge node");
    Ok((map, basis))
}

/// Brick-wall honeycomb hypermap with `p * q` hexagonal faces on the
/// torus (`p * q` even).
///
/// The hexagons tile the torus as a sheared brick wall: two staggered
/// rows of `p*q/2` cells whose vertical wrap is offset by one cell. Every
/// node has degree 3; alternating node classes carry the hypermap
/// vertices and edges. Cell `(i, j)` (`j` the two-row index) owns the
/// three darts of one edge node, pointing up, down-left and down-right,
/// labelled `3*(j*width + i)` plus 0, 1, 2. The special dart of each edge
/// is the bottom-right one, which is also the maximum label of its edge,
/// so the default basis rule reproduces the same choice.
pub fn gen_honeycomb_hypermap(p: usize, q: usize) -> Result<(Hypermap, SpecialBasis), FamiliesError> {
    if p < 2 || q < 2 {
        return Err(invalid(format!("honeycomb needs p, q >= 2, got {p}, {q}")));
    }
    if (p * q) % 2 != 0 {
        return Err(invalid(format!(
            "honeycomb needs an even number of hexagons, got {p} x {q}"
        )));
    }
    let width = p * q / 2;
    let rows = 2isize;
    let shear = 1isize;
    const UP: usize = 0;
    const DOWN_LEFT: usize = 1;
    const DOWN_RIGHT: usize = 2;
    let idx = |i: isize, j: isize, d: usize| -> usize {
        let mut i = i;
        let mut j = j;
        while j < 0 {
            j += rows;
            i -= shear;
        }
        while j >= rows {
            j -= rows;
            i += shear;
        }
        let i = i.rem_euclid(width as isize) as usize;
        3 * (j as usize * width + i) + d
    };
    let n = 3 * p * q;
    let mut sigma = vec![usize::MAX; n];
    let mut alpha = vec![usize::MAX; n];
    let mut special = Vec::with_capacity(p * q);
    for j in 0..rows {
        for i in 0..width as isize {
            // counterclockwise around the vertex node shared by these darts
            sigma[idx(i, j, DOWN_LEFT)] = idx(i - 1, j, DOWN_RIGHT);
            sigma[idx(i, j, DOWN_RIGHT)] = idx(i + 1, j - 1, UP);
            sigma[idx(i, j, UP)] = idx(i, j + 1, DOWN_LEFT);
            // clockwise around the edge node of cell (i, j)
            alpha[idx(i, j, UP)] = idx(i, j, DOWN_RIGHT);
            alpha[idx(i, j, DOWN_RIGHT)] = idx(i, j, DOWN_LEFT);
            alpha[idx(i, j, DOWN_LEFT)] = idx(i, j, UP);
            special.push(idx(i, j, DOWN_RIGHT));
        }
    }
    let sigma = Permutation::from_images(sigma).expect("honeycomb rotation is a bijection");
    let alpha = Permutation::from_images(alpha).expect("honeycomb rotation is a bijection");
    let map = Hypermap::new(sigma, alpha).expect("torus honeycomb is connected");
    let basis = SpecialBasis::from_darts(&map, &special).expect("one bottom-right dart per edge");
    Ok((map, basis))
}

/// Steane's `[7,1,3]` code: `H_X = H_Z =` the Hamming parity check matrix.
pub fn steane_code() -> CssCode {
    let h: BinaryMatrix = "0001111\n0110011\n1010101".parse().expect("valid bit text");
    CssCode::new(h.clone(), h).expect("Hamming rows are mutually orthogonal")
}

/// The named fixtures shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// Steane's `[7,1,3]` CSS code.
    Steane,
    /// The 8-dart torus hypermap.
    Torus8,
    /// The 24-dart octagon-square hypermap ( `[16,2,2]` under the default basis).
    OctagonSquare,
    /// 24-dart hypermap from the dual of the line graph of a cube
    /// (`[20,2,3]` under the default basis).
    DlCube,
}

impl Fixture {
    pub const ALL: [Fixture; 4] = [
        Fixture::Steane,
        Fixture::Torus8,
        Fixture::OctagonSquare,
        Fixture::DlCube,
    ];

    pub fn from_name(name: &str) -> Result<Fixture, FamiliesError> {
        match name {
            "steane" => Ok(Fixture::Steane),
            "torus8" => Ok(Fixture::Torus8),
            "octagon-square" => Ok(Fixture::OctagonSquare),
            "dlcube" => Ok(Fixture::DlCube),
            other => Err(FamiliesError::UnknownFixture {
                name: String::from(other),
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Fixture::Steane => "steane",
            Fixture::Torus8 => "torus8",
            Fixture::OctagonSquare => "octagon-square",
            Fixture::DlCube => "dlcube",
        }
    }
}

/// A fixture is either a CSS code or a hypermap.
pub enum FixtureValue {
    Code(CssCode),
    Map(Hypermap),
}

pub fn fixture(which: Fixture) -> FixtureValue {
    match which {
        Fixture::Steane => FixtureValue::Code(steane_code()),
        Fixture::Torus8 => FixtureValue::Map(
            Hypermap::from_cycle_text(8, "(1 8 3 6)(2 5 4 7)", "(1 2 3 4)(5 6 7 8)")
                .expect("torus8 fixture is transitive"),
        ),
        Fixture::OctagonSquare => FixtureValue::Map(
            Hypermap::from_cycle_text(
                24,
                "(1 24 20)(2 14 9)(3 11 13)(4 18 23)(5 21 17)(6 7 10)(8 16 12)(15 19 22)",
                "(1 2 3)(4 5 6)(7 8 9)(10 11 12)(13 14 15)(16 17 18)(19 20 21)(22 23 24)",
            )
            .expect("octagon-square fixture is transitive"),
        ),
        Fixture::DlCube => FixtureValue::Map(
            Hypermap::from_cycle_text(
                24,
                "(1 11 14)(2 24 10)(3 18 23)(4 20 17)(5 9 19)(6 15 8)(7 16 21)(12 22 13)",
                "(1 2 3 4 5 6)(7 8 9 10 11 12)(13 14 15 16 17 18)(19 20 21 22 23 24)",
            )
            .expect("dlcube fixture is transitive"),
        ),
    }
}
