//! Construction and exact analysis of binary CSS quantum codes built from
//! F2 chain complexes, graphs embedded in surfaces, and combinatorial
//! hypermaps with a special-basis quotient.
//!
//! The crate is organised bottom-up:
//!
//! - [`f2`]: dense bit-packed linear algebra over the two-element field,
//! - [`perm`]: permutations on darts `{1..n}` with left-to-right products,
//! - [`hypermap`]: validated `(sigma, alpha)` pairs with derived cells and genus,
//! - [`homology`]: boundary operators and check matrices for all constructions,
//! - [`css`]: the `[n, k, d]` code object and two independent distance searches,
//! - [`families`]: generators for toric, planar, grid- and honeycomb-hypermap
//!   codes plus the hard-coded fixtures.
//!
//! The crate is `no_std` compatible (with `alloc`); the `std` feature adds
//! multi-threaded distance search and search timing.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod css;
pub mod f2;
pub mod families;
pub mod homology;
pub mod hypermap;
pub mod perm;

pub use css::CssCode;
pub use f2::{BinaryMatrix, BinaryVector};
pub use hypermap::Hypermap;
pub use perm::Permutation;
