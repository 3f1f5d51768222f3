//! Exact-arithmetic toolkit for compatible Hom-associative algebras.
//!
//! Algebras are given by structure constants over the rationals. The crate
//! verifies the defining identities by exhaustive basis enumeration, computes
//! the compatible Hochschild-type cohomology of a pair of products sharing a
//! twist, and mechanizes the associated deformation and extension theory:
//! Gerstenhaber brackets, Maurer-Cartan checks, order-by-order deformations
//! with obstruction classes, and abelian extensions classified by the second
//! cohomology group.
//!
//! Everything is computed in exact rational arithmetic; there is no floating
//! point anywhere, so ranks and cohomology dimensions are certified.

pub mod bimod;
pub mod cli;
pub mod cochain;
pub mod constructions;
pub mod deform;
pub mod exactlin;
pub mod extensions;
pub mod fixtures;
pub mod homalg;
pub mod homlie;
pub mod multilinear;
pub mod report;

pub use exactlin::{Matrix, Scalar};
pub use multilinear::MultilinearMap;
