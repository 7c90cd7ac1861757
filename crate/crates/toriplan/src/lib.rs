//! Topological complexity of subcomplexes of products of spheres.
//!
//! A subcomplex of the standard CW-decomposition of an `n`-fold product of
//! spheres is encoded by a simplicial complex on `{1,..,n}`: a product point
//! lies in the subcomplex exactly when the set of coordinates away from the
//! basepoint is a face.  This crate computes the topological complexity of
//! such spaces, builds the corresponding piecewise motion planners, verifies
//! the planner contract numerically, and certifies the answers with exact
//! zero-divisor computations in the associated square-free monomial algebras.
//!
//! Modules:
//!
//! - [`complex`]: bitset vertex sets, complexes by maximal faces, the
//!   `z`/`d` invariants and the `tc` formulas.
//! - [`sphere`]: points on round spheres and the closed-form path rules
//!   (geodesic, semicircle, fixed meridian).
//! - [`planner`]: coordinate-wise motion planners on products and their
//!   domain classification.
//! - [`verify`]: randomized verification of the planner contract
//!   (partition, containment, endpoints, continuity).
//! - [`algebra`]: exact-rational tensor-square algebra, shuffle expansion
//!   and zero-divisor cup-length certificates.
//! - [`applications`]: closed formulas for arrangement complements,
//!   right-angled Artin complexes, wedges, with model cross-checks.
//! - [`report`]: the batteries-included verification battery used by the
//!   acceptance suite and the `report` CLI command.

pub mod algebra;
pub mod applications;
pub mod complex;
pub mod io;
pub mod planner;
pub mod report;
pub mod sample;
pub mod sphere;
pub mod tolerances;
pub mod verify;

pub use complex::{DisjointCover, Graph, Parity, SimplicialComplex, TcReport, VertexSet};
pub use sphere::{PathSegment, Sphere, SpherePoint, TimedPath};
