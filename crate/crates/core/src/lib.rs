//! Minimal free resolutions of monomial ideals in three variables.
//!
//! The resolution is assembled from matrices whose rows and columns are
//! indexed by faces of Koszul simplicial complexes.  Two independent routes
//! compute every matrix entry:
//!
//! - [`fence`]: a brute-force weighted sum over lattice paths, hedgerows and
//!   chain-link fences (the general construction, used as ground truth), and
//! - [`closed`]: explicit per-path formulas that depend only on the sequence
//!   of Koszul complex shapes along the path.
//!
//! All arithmetic is exact over ℚ; there is no floating point anywhere.

pub mod closed;
pub mod complex;
pub mod corpus;
pub mod fence;
pub mod hedge;
pub mod ideal;
pub mod koszul;
pub mod lattice;
pub mod par;
pub mod rat;
pub mod resolution;
pub mod sylvan;

pub use ideal::{DegreeVector, MonomialIdeal};
pub use rat::{Rat, RatMatrix};
