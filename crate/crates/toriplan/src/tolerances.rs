//! Numeric tolerances shared across the geometry and planner modules.
//!
//! Combinatorics and algebra are exact; floating point only enters through
//! sphere coordinates.  All thresholds live here so the CLI can override
//! them in one place.

/// Points are accepted as "on the sphere" when `| |x| - 1 |` is below this.
pub const TAU_NORM: f64 = 1e-12;

/// Antipodality threshold on inner products: `x` and `y` count as antipodal
/// when `x·y <= -1 + TAU_ANTI`.  Classification near the boundary is a
/// measure-zero concern; pairs just outside still get a valid geodesic.
pub const TAU_ANTI: f64 = 1e-9;

/// Cell-membership threshold: coordinate `i` counts as "away from the
/// basepoint" when `|x_i - e| > TAU_CELL`.
pub const TAU_CELL: f64 = 1e-7;

/// Below this angle a great-circle arc degenerates to a constant path.
pub const TAU_DEG: f64 = 1e-12;

/// Default number of time samples when exporting a path as a polyline.
pub const DEFAULT_PATH_SAMPLES: usize = 256;

/// Default number of random pairs per verification suite.
pub const DEFAULT_VERIFY_SAMPLES: usize = 10_000;

/// Default seed for every randomized run.
pub const DEFAULT_SEED: u64 = 0;
