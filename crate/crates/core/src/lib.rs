//! Construction and analysis of bivariate bicycle and hypergraph product
//! CSS codes, their pruning to codes with open boundaries, and exact
//! verification of fold-transversal Clifford gates.
//!
//! All arithmetic is exact over GF(2). Check matrices are dense and
//! bit-packed ([`gf2`]), polynomials live in [`poly`], and codes are built in
//! [`construct`] and pruned in [`prune`]. Distances are computed exactly by
//! [`css::css_distance`].

pub mod classical;
pub mod construct;
pub mod css;
pub mod error;
pub mod fold;
pub mod gf2;
pub mod poly;
pub mod prune;
pub mod report;
pub mod specfile;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
