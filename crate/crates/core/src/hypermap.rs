//! Combinatorial hypermaps: a transitive pair of permutations on darts.
//!
//! Vertices are the cycles of `sigma`, edges the cycles of `alpha`, faces
//! the cycles of `alpha^-1 sigma`. The genus comes from the Euler formula
//! `|V| + |E| + |F| = n + 2 - 2g`. Validation is eager: a `Hypermap` value
//! existing implies transitivity, so downstream code never re-checks.

use alloc::vec::Vec;
use core::fmt;

use crate::perm::{self, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypermapError {
    SizeMismatch { sigma: usize, alpha: usize },
    Empty,
    /// The pair is not transitive; carries the orbit reachable from dart 1
    /// (ascending, 0-based) as a witness.
    NotTransitive { orbit: Vec<usize> },
}

impl fmt::Display for HypermapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypermapError::SizeMismatch { sigma, alpha } => {
                write!(f, "sigma acts on {sigma} darts but alpha on {alpha}")
            }
            HypermapError::Empty => write!(f, "a hypermap needs at least one dart"),
            HypermapError::NotTransitive { orbit } => {
                write!(f, "<sigma, alpha> is not transitive; darts reachable from 1:")?;
                for d in orbit {
                    write!(f, " {}", d + 1)?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HypermapError {}

impl From<PermError> for HypermapError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::SizeMismatch { left, right } => HypermapError::SizeMismatch {
                sigma: left,
                alpha: right,
            },
            PermError::NotBijective { .. } => unreachable!("permutations are valid by construction"),
        }
    }
}

/// A validated combinatorial hypermap with its derived cells cached.
#[derive(Clone)]
pub struct Hypermap {
    sigma: Permutation,
    alpha: Permutation,
    vertices: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    face_of: Vec<usize>,
    genus: usize,
}

impl PartialEq for Hypermap {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma && self.alpha == other.alpha
    }
}

impl Eq for Hypermap {}

impl fmt::Debug for Hypermap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hypermap(n={}, V={}, E={}, F={}, g={})",
            self.n(),
            self.vertices.len(),
            self.edges.len(),
            self.faces.len(),
            self.genus
        )
    }
}

fn cell_index_of(n: usize, cells: &[Vec<usize>]) -> Vec<usize> {
    let mut of = alloc::vec![0usize; n];
    for (ci, cell) in cells.iter().enumerate() {
        for &d in cell {
            of[d] = ci;
        }
    }
    of
}

impl Hypermap {
    /// Validates the pair and computes cells and genus.
    pub fn new(sigma: Permutation, alpha: Permutation) -> Result<Self, HypermapError> {
        if sigma.n() != alpha.n() {
            return Err(HypermapError::SizeMismatch {
                sigma: sigma.n(),
                alpha: alpha.n(),
            });
        }
        let n = sigma.n();
        if n == 0 {
            return Err(HypermapError::Empty);
        }
        let orbit = perm::orbit_of_first(&sigma, &alpha)?;
        if orbit.len() != n {
            return Err(HypermapError::NotTransitive { orbit });
        }
        let face_perm = alpha.inverse().compose(&sigma)?;
        let vertices = sigma.cycles();
        let edges = alpha.cycles();
        let faces = face_perm.cycles();
        let cells = vertices.len() + edges.len() + faces.len();
        // Euler formula; both conditions are mathematically forced for a
        // transitive pair, so a failure is an internal inconsistency.
        assert!(n + 2 >= cells, "negative genus from Euler formula");
        assert!((n + 2 - cells) % 2 == 0, "odd Euler defect");
        let genus = (n + 2 - cells) / 2;
        let vertex_of = cell_index_of(n, &vertices);
        let edge_of = cell_index_of(n, &edges);
        let face_of = cell_index_of(n, &faces);
        Ok(Hypermap {
            sigma,
            alpha,
            vertices,
            edges,
            faces,
            vertex_of,
            edge_of,
            face_of,
            genus,
        })
    }

    /// Builds from 1-based cycle notation for sigma and alpha.
    pub fn from_cycle_text(n: usize, sigma: &str, alpha: &str) -> Result<Self, HypermapError> {
        let sigma = Permutation::parse(n, sigma)
            .unwrap_or_else(|e| panic!("invalid sigma cycle text: {e}"));
        let alpha = Permutation::parse(n, alpha)
            .unwrap_or_else(|e| panic!("invalid alpha cycle text: {e}"));
        Hypermap::new(sigma, alpha)
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    /// Vertex cycles, canonical order (min dart first, sorted by minimum).
    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn cells(&self) -> (&[Vec<usize>], &[Vec<usize>], &[Vec<usize>]) {
        (&self.vertices, &self.edges, &self.faces)
    }

    /// Index of the vertex cycle containing a dart.
    pub fn vertex_of(&self, dart: usize) -> usize {
        self.vertex_of[dart]
    }

    pub fn edge_of(&self, dart: usize) -> usize {
        self.edge_of[dart]
    }

    pub fn face_of(&self, dart: usize) -> usize {
        self.face_of[dart]
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// The dual hypermap `(alpha^-1 sigma, alpha^-1)`: vertices and faces
    /// swap, the edge partition is unchanged.
    pub fn dual(&self) -> Hypermap {
        let alpha_inv = self.alpha.inverse();
        let sigma_dual = alpha_inv.compose(&self.sigma).expect("same dart count");
        Hypermap::new(sigma_dual, alpha_inv).expect("dual of a valid hypermap is valid")
    }

    /// Uniformly random transitive hypermap: rejection sampling over
    /// uniform permutation pairs.
    #[cfg(feature = "rand")]
    pub fn random_transitive<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Hypermap {
        assert!(n >= 1);
        loop {
            let sigma = Permutation::random(n, rng);
            let alpha = Permutation::random(n, rng);
            if let Ok(h) = Hypermap::new(sigma, alpha) {
                return h;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

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

    #[test]
    fn torus_example_cells_and_genus() {
        let h = torus8();
        assert_eq!(h.vertices().len(), 2);
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.faces().len(), 4);
        assert_eq!(h.genus(), 1);
        let faces = h.alpha().inverse().compose(h.sigma()).unwrap();
        assert_eq!(faces.cycle_string(false), "(1 7)(2 8)(3 5)(4 6)");
    }

    #[test]
    fn one_dart_hypermap_is_a_sphere() {
        let h = Hypermap::new(Permutation::identity(1), Permutation::identity(1)).unwrap();
        assert_eq!(h.vertices(), &[vec![0]]);
        assert_eq!(h.edges(), &[vec![0]]);
        assert_eq!(h.faces(), &[vec![0]]);
        assert_eq!(h.genus(), 0);
        assert_eq!(h.dual(), h);
    }

    #[test]
    fn octagon_square_cells() {
        let h = octagon_square();
        assert_eq!(h.vertices().len(), 8);
        assert_eq!(h.edges().len(), 8);
        assert_eq!(h.faces().len(), 8);
        assert_eq!(h.genus(), 1);
        let faces = h.alpha().inverse().compose(h.sigma()).unwrap();
        assert_eq!(
            faces.cycle_string(false),
            "(1 11 6 21)(2 24 4 7)(3 14)(5 18)(8 10)(9 16 23 15)(12 13 19 17)(20 22)"
        );
    }

    #[test]
    fn octagon_square_dual_matches_printed_permutations() {
        let d = octagon_square().dual();
        assert_eq!(
            d.sigma().cycle_string(false),
            "(1 11 6 21)(2 24 4 7)(3 14)(5 18)(8 10)(9 16 23 15)(12 13 19 17)(20 22)"
        );
        assert_eq!(
            d.alpha().cycle_string(false),
            "(1 3 2)(4 6 5)(7 9 8)(10 12 11)(13 15 14)(16 18 17)(19 21 20)(22 24 23)"
        );
    }

    #[test]
    fn dual_is_an_involution() {
        for h in [torus8(), octagon_square()] {
            let dd = h.dual().dual();
            assert_eq!(dd.sigma().images(), h.sigma().images());
            assert_eq!(dd.alpha().images(), h.alpha().images());
        }
    }

    #[test]
    fn dual_swaps_vertices_and_faces() {
        let h = octagon_square();
        let d = h.dual();
        assert_eq!(d.vertices(), h.faces());
        assert_eq!(d.faces(), h.vertices());
        assert_eq!(d.genus(), h.genus());
        // edge orbits agree as sets of sets
        let mut he: Vec<Vec<usize>> = h.edges().to_vec();
        let mut de: Vec<Vec<usize>> = d
            .edges()
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect();
        for c in &mut he {
            c.sort_unstable();
        }
        de.sort();
        he.sort();
        assert_eq!(he, de);
    }

    #[test]
    fn non_transitive_pair_is_rejected_with_witness() {
        let id = Permutation::identity(2);
        let err = Hypermap::new(id.clone(), id).unwrap_err();
        assert_eq!(err, HypermapError::NotTransitive { orbit: vec![0] });
    }

    #[test]
    fn randomized_euler_integrality() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = 1 + (rand::Rng::gen_range(&mut rng, 0..12));
            let h = Hypermap::random_transitive(n, &mut rng);
            let cells = h.vertices().len() + h.edges().len() + h.faces().len();
            assert_eq!(cells + 2 * h.genus(), h.n() + 2);
            let dd = h.dual().dual();
            assert_eq!(dd, h);
        }
    }
}
