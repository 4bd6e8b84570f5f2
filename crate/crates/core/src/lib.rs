//! Kac-Ward operators on planar embedded graphs and isoradial lattices.
//!
//! The library assembles the phase-weighted non-backtracking transition
//! matrix Λ of a straight-line embedded graph, the Kac-Ward operator
//! T = I − Λ, and everything the identity `det T = Z²` connects to it:
//! even-subgraph generating functions, signed non-backtracking walk sums,
//! the fermionic generating function whose conjugate is T⁻¹, the projection
//! operator S and s-holomorphicity on isoradial lattices, and the
//! spectral-radius machinery (conjugated matrices, ξ certificates,
//! supercritical decay profiles, critical degeneration).
//!
//! Everything is generic over the real scalar type via [`Scalar`];
//! concrete `f64` aliases are exported at the crate root.

pub mod fermion;
pub mod format;
pub mod geometry;
pub mod isoradial;
pub mod linalg;
pub mod operator;
pub mod samples;
pub mod sholo;
pub mod spectral;
pub mod walks;

mod scalar;

pub use scalar::{Scalar, C};

/// `f64` aliases for the main domain types.
pub type Point64 = geometry::Point<f64>;
pub type PlanarGraph64 = geometry::PlanarGraph<f64>;
pub type ModifiedGraph64 = geometry::ModifiedGraph<f64>;







/// `f32` aliases, mostly exercised by the generic smoke tests.
pub type PlanarGraph32 = geometry::PlanarGraph<f32>;

