//! Mabuchi geometry of toric Kähler metrics, computed entirely in symplectic
//! coordinates.
//!
//! A torus-invariant Kähler potential corresponds to a convex function `F` on
//! `R^n`; its Legendre transform `G` lives on the moment polytope `P` and is
//! the coordinate system in which the Mabuchi geometry linearizes: geodesics
//! become affine paths `G_t = (1-t) G_0 + t G_1`, the Mabuchi distance becomes
//! the plain `L^2(P)` distance between symplectic potentials, and every
//! Monge-Ampère integral becomes a pushforward quadrature over `P`.
//!
//! The crate provides:
//! - [`polytope`]: Delzant polytopes, vertex enumeration, quadrature grids;
//! - [`transform`]: discrete Legendre-Fenchel machinery (conjugate,
//!   biconjugate, convexity certificates, gradients);
//! - [`potentials`]: closed-form reference potentials (Fubini-Study,
//!   Guillemin, support function, the two-kink test family) and the
//!   `F <-> G` consistency layer;
//! - [`functionals`]: the Mabuchi distance and the energy functionals
//!   `E`, `I`, `I2`, `J2`;
//! - [`geodesics`]: affine geodesics, the min operation, and the
//!   identity/inequality verification harness;
//! - [`energy`]: finite-energy (`L^q`) classification and the
//!   convergence-regime classifier;
//! - [`instances`]: seeded random piecewise-linear instances for the
//!   property suites;
//! - [`io`]: CSV and JSON interchange formats.

pub mod energy;
pub mod functionals;
pub mod geodesics;
pub mod grid;
pub mod instances;
pub mod io;
pub mod polytope;
pub mod potentials;
pub mod transform;
pub(crate) mod util;

pub use functionals::DistanceReport;
pub use grid::{Axis, PolytopeGrid, TensorGrid};
pub use polytope::DelzantPolytope;
pub use potentials::PotentialPair;
pub use transform::GridFn;
