//! Coordinate-wise motion planners on products of spheres and their
//! subcomplexes.
//!
//! A pair of product points is classified into a local domain by which
//! coordinates are antipodal (odd spheres) or by the per-coordinate rule
//! index (even spheres); the planner then moves every coordinate
//! simultaneously with the matching single-sphere rule.  On the full
//! product this is an optimal planner.
//!
//! Restricted to a subcomplex the same rule keeps the optimal domain
//! count, but the simultaneous motion can leave the subcomplex when the
//! supports of the two endpoints do not union to a face: on the
//! figure-eight, moving coordinate 1 home while coordinate 2 departs
//! passes through a point with support `{1,2}`, which is not a face.  The
//! planners here therefore come in two flavors:
//!
//! - [`plan_restricted_literal`]: the simultaneous rule verbatim.  Domain
//!   count `z(X) + 1` (odd), but path containment is *not* guaranteed and
//!   must be checked by the verification harness.
//! - [`plan_safe`]: a two-stage rule through the basepoint.  Containment
//!   is guaranteed by construction (each stage stays inside the
//!   subproduct spanned by one endpoint's support) at the price of a
//!   `2·d(X) + 1` domain count.

use serde::Serialize;
use thiserror::Error;

use crate::complex::{Parity, SimplicialComplex, VertexSet};
use crate::sphere::{
    base_meridian, semicircle_even, semicircle_odd, short_geodesic, GeometryError, Sphere,
    SpherePoint, TimedPath,
};
use crate::tolerances::{TAU_ANTI, TAU_CELL};

#[derive(Debug, Error, PartialEq)]
pub enum PlanError {
    #[error("{which} endpoint is not in the complex (support {support} is not a face)")]
    PointNotInComplex { which: &'static str, support: VertexSet },
    #[error("product points have {got} coordinates, complex has ground set size {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("points lie on different product spheres")]
    SphereMismatch,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A point of the `n`-fold product of a fixed sphere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductPoint {
    points: Vec<SpherePoint>,
}

impl ProductPoint {
    pub fn new(points: Vec<SpherePoint>) -> Result<Self, PlanError> {
        if let Some(first) = points.first() {
            if points.iter().any(|p| p.sphere() != first.sphere()) {
                return Err(PlanError::SphereMismatch);
            }
        }
        Ok(ProductPoint { points })
    }

    /// The basepoint `(e,..,e)`.
    pub fn basepoint(sphere: Sphere, n: usize) -> Self {
        ProductPoint { points: (0..n).map(|_| SpherePoint::basepoint(sphere)).collect() }
    }

    /// Circle product point from angles.
    pub fn from_angles(angles: &[f64]) -> Self {
        ProductPoint { points: angles.iter().map(|&a| SpherePoint::circle_angle(a)).collect() }
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn sphere(&self) -> Option<Sphere> {
        self.points.first().map(|p| p.sphere())
    }

    pub fn coordinate(&self, i: usize) -> &SpherePoint {
        &self.points[i - 1]
    }

    pub fn coordinates(&self) -> &[SpherePoint] {
        &self.points
    }

    /// Coordinates farther than `tau` from the basepoint (ambient
    /// distance); the support must be a face for membership in a complex.
    pub fn support(&self, tau: f64) -> VertexSet {
        let mut s = VertexSet::empty();
        for (idx, p) in self.points.iter().enumerate() {
            if p.dist_to_basepoint() > tau {
                s = s.insert(idx + 1);
            }
        }
        s
    }

    /// Max over coordinates of the ambient Euclidean distance.
    pub fn dist_sup(&self, other: &ProductPoint) -> f64 {
        self.points
            .iter()
            .zip(&other.points)
            .map(|(a, b)| a.dist(b))
            .fold(0.0, f64::max)
    }
}

/// Whether a product point lies in the subcomplex: its support must be a
/// face.
pub fn membership(complex: &SimplicialComplex, point: &ProductPoint, tau_cell: f64) -> bool {
    point.n() == complex.n() && complex.is_face(point.support(tau_cell))
}

/// Per-coordinate rule on even spheres, ordered by stratum weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoordRule {
    /// The pair is exactly `(e, -e)`: use the fixed meridian.
    FixedPath = 0,
    /// Antipodal with `x != e`: semicircle along the tangent field.
    Semicircle = 1,
    /// Not antipodal: shortest geodesic.
    Geodesic = 2,
}

/// Identifier of the local domain a pair was classified into.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DomainId {
    /// Odd products: the set of antipodal coordinates; stratum
    /// `j = n - |antipodal|`.
    Odd { antipodal: VertexSet, n: usize },
    /// Even products: one rule per coordinate; stratum = sum of rule
    /// weights in `0..=2n`.
    Even { rules: Vec<CoordRule> },
    /// Two-stage planner: the coordinates of either endpoint that are
    /// antipodal to the basepoint; stratum `s = |start| + |end|` in
    /// `0..=2d(X)`.
    Safe { start_flips: VertexSet, end_flips: VertexSet },
}

impl DomainId {
    pub fn stratum(&self) -> usize {
        match self {
            DomainId::Odd { antipodal, n } => n - antipodal.len(),
            DomainId::Even { rules } => rules.iter().map(|r| *r as usize).sum(),
            DomainId::Safe { start_flips, end_flips } => start_flips.len() + end_flips.len(),
        }
    }
}

/// Classifies a pair on an odd product: coordinate `i` is antipodal when
/// `x_i · y_i <= -1 + tau`.
pub fn classify_odd(x: &ProductPoint, y: &ProductPoint, tau: f64) -> DomainId {
    let mut antipodal = VertexSet::empty();
    for i in 1..=x.n() {
        if x.coordinate(i).is_antipodal_to(y.coordinate(i), tau) {
            antipodal = antipodal.insert(i);
        }
    }
    DomainId::Odd { antipodal, n: x.n() }
}

/// Classifies a pair on an even product into a rule vector.
pub fn classify_even(x: &ProductPoint, y: &ProductPoint, tau: f64) -> DomainId {
    let rules = (1..=x.n())
        .map(|i| {
            let (xi, yi) = (x.coordinate(i), y.coordinate(i));
            if !xi.is_antipodal_to(yi, tau) {
                CoordRule::Geodesic
            } else if xi.is_basepoint(tau) {
                CoordRule::FixedPath
            } else {
                CoordRule::Semicircle
            }
        })
        .collect();
    DomainId::Even { rules }
}

/// Classification for either parity.
pub fn classify(x: &ProductPoint, y: &ProductPoint, tau: f64) -> DomainId {
    match x.sphere().map(|s| s.parity) {
        Some(Parity::Even) => classify_even(x, y, tau),
        _ => classify_odd(x, y, tau),
    }
}

/// Which planner produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PlannerKind {
    FullOdd,
    FullEven,
    RestrictedLiteral,
    Safe,
}

/// A path in the product, one timed path per coordinate, evaluated
/// simultaneously.
#[derive(Debug, Clone, Serialize)]
pub struct ProductPath {
    coords: Vec<TimedPath>,
}

impl ProductPath {
    pub fn eval(&self, t: f64) -> ProductPoint {
        ProductPoint { points: self.coords.iter().map(|c| c.eval(t)).collect() }
    }

    pub fn start(&self) -> ProductPoint {
        ProductPoint { points: self.coords.iter().map(|c| c.start()).collect() }
    }

    pub fn end(&self) -> ProductPoint {
        ProductPoint { points: self.coords.iter().map(|c| c.end()).collect() }
    }

    pub fn coords(&self) -> &[TimedPath] {
        &self.coords
    }
}

/// A planned motion: the classified domain, the path, and which planner
/// built it.  `path(0)` and `path(1)` are the input endpoints.
#[derive(Debug, Clone, Serialize)]
pub struct PlanResult {
    pub domain: DomainId,
    pub path: ProductPath,
    pub kind: PlannerKind,
}

fn check_pair(x: &ProductPoint, y: &ProductPoint) -> Result<(), PlanError> {
    if x.n() != y.n() || x.sphere() != y.sphere() {
        return Err(PlanError::SphereMismatch);
    }
    Ok(())
}

/// Optimal planner on the full odd product: antipodal coordinates take
/// the semicircle, the rest the shortest geodesic, all simultaneously.
pub fn plan_full_odd(x: &ProductPoint, y: &ProductPoint) -> Result<PlanResult, PlanError> {
    plan_full_odd_with(x, y, TAU_ANTI)
}

pub fn plan_full_odd_with(
    x: &ProductPoint,
    y: &ProductPoint,
    tau: f64,
) -> Result<PlanResult, PlanError> {
    check_pair(x, y)?;
    let domain = classify_odd(x, y, tau);
    let DomainId::Odd { antipodal, .. } = &domain else { unreachable!() };
    let mut coords = Vec::with_capacity(x.n());
    for i in 1..=x.n() {
        let seg = if antipodal.contains(i) {
            semicircle_odd(x.coordinate(i))?
        } else {
            short_geodesic(x.coordinate(i), y.coordinate(i))?
        };
        coords.push(TimedPath::single(seg));
    }
    Ok(PlanResult { domain, path: ProductPath { coords }, kind: PlannerKind::FullOdd })
}

/// Optimal planner on the full even product: rules `0/1/2` per
/// coordinate.
pub fn plan_full_even(x: &ProductPoint, y: &ProductPoint) -> Result<PlanResult, PlanError> {
    plan_full_even_with(x, y, TAU_ANTI)
}

pub fn plan_full_even_with(
    x: &ProductPoint,
    y: &ProductPoint,
    tau: f64,
) -> Result<PlanResult, PlanError> {
    check_pair(x, y)?;
    let domain = classify_even(x, y, tau);
    let DomainId::Even { rules } = &domain else { unreachable!() };
    let sphere = x.sphere().expect("even planning requires at least one coordinate");
    let mut coords = Vec::with_capacity(x.n());
    for i in 1..=x.n() {
        let seg = match rules[i - 1] {
            CoordRule::FixedPath => base_meridian(sphere),
            CoordRule::Semicircle => semicircle_even(x.coordinate(i))?,
            CoordRule::Geodesic => short_geodesic(x.coordinate(i), y.coordinate(i))?,
        };
        coords.push(TimedPath::single(seg));
    }
    Ok(PlanResult { domain, path: ProductPath { coords }, kind: PlannerKind::FullEven })
}

/// Full-product planner for either parity.
pub fn plan_full(x: &ProductPoint, y: &ProductPoint) -> Result<PlanResult, PlanError> {
    match x.sphere().map(|s| s.parity) {
        Some(Parity::Even) => plan_full_even(x, y),
        _ => plan_full_odd(x, y),
    }
}

/// Smallest stratum a pair of points of the complex can classify into
/// under the literal rule, per the domain-count formula: `n - z(X)` for
/// odd parity, `2n - 2·d(X)` for even parity.
///
/// The odd bound is sound: antipodal coordinates lie in the union of the
/// two supports, whose size is at most `z(X)`.  The even bound is the
/// stated one but is *not* sound for every subcomplex — see the
/// verification harness, which checks it empirically and reports
/// violations rather than asserting.
pub fn stratum_lower_bound(complex: &SimplicialComplex, parity: Parity) -> usize {
    match parity {
        Parity::Odd => complex.n() - complex.disjoint_cover().size,
        Parity::Even => 2 * complex.n() - 2 * complex.max_face_size(),
    }
}

/// The simultaneous rule restricted to pairs in the subcomplex.  Domain
/// count `z(X) + 1` strata for odd parity.  Path containment in `X` is
/// not guaranteed; run the containment verifier.
pub fn plan_restricted_literal(
    complex: &SimplicialComplex,
    x: &ProductPoint,
    y: &ProductPoint,
) -> Result<PlanResult, PlanError> {
    plan_restricted_literal_with(complex, x, y, TAU_ANTI, TAU_CELL)
}

pub fn plan_restricted_literal_with(
    complex: &SimplicialComplex,
    x: &ProductPoint,
    y: &ProductPoint,
    tau_anti: f64,
    tau_cell: f64,
) -> Result<PlanResult, PlanError> {
    check_membership(complex, x, y, tau_cell)?;
    let parity = x.sphere().map(|s| s.parity).unwrap_or(Parity::Odd);
    let mut result = match parity {
        Parity::Odd => plan_full_odd_with(x, y, tau_anti)?,
        Parity::Even => plan_full_even_with(x, y, tau_anti)?,
    };
    if parity == Parity::Odd {
        // Sound for every subcomplex; see stratum_lower_bound.
        debug_assert!(result.domain.stratum() >= stratum_lower_bound(complex, parity));
    }
    result.kind = PlannerKind::RestrictedLiteral;
    Ok(result)
}

/// Always-contained planner: move `x` home to the basepoint inside the
/// subproduct spanned by its support, then replay the same construction
/// backwards from the basepoint out to `y`.  `2·d(X) + 1` strata.
pub fn plan_safe(
    complex: &SimplicialComplex,
    x: &ProductPoint,
    y: &ProductPoint,
) -> Result<PlanResult, PlanError> {
    plan_safe_with(complex, x, y, TAU_ANTI, TAU_CELL)
}

pub fn plan_safe_with(
    complex: &SimplicialComplex,
    x: &ProductPoint,
    y: &ProductPoint,
    tau_anti: f64,
    tau_cell: f64,
) -> Result<PlanResult, PlanError> {
    check_membership(complex, x, y, tau_cell)?;
    let mut start_flips = VertexSet::empty();
    let mut end_flips = VertexSet::empty();
    let mut coords = Vec::with_capacity(x.n());
    for i in 1..=x.n() {
        let (to_base, x_flip) = toward_basepoint(x.coordinate(i), tau_anti)?;
        let (from_y, y_flip) = toward_basepoint(y.coordinate(i), tau_anti)?;
        if x_flip {
            start_flips = start_flips.insert(i);
        }
        if y_flip {
            end_flips = end_flips.insert(i);
        }
        coords.push(TimedPath::two_stage(to_base, from_y.reversed()));
    }
    Ok(PlanResult {
        domain: DomainId::Safe { start_flips, end_flips },
        path: ProductPath { coords },
        kind: PlannerKind::Safe,
    })
}

/// A path from `p` to the basepoint: the shortest geodesic, or the
/// appropriate semicircle when `p` is antipodal to it.  Returns whether
/// the semicircle branch was taken.
fn toward_basepoint(
    p: &SpherePoint,
    tau_anti: f64,
) -> Result<(crate::sphere::PathSegment, bool), PlanError> {
    let e = SpherePoint::basepoint(p.sphere());
    if p.is_antipodal_to(&e, tau_anti) {
        let seg = match p.sphere().parity {
            Parity::Odd => semicircle_odd(p)?,
            Parity::Even => semicircle_even(p)?,
        };
        Ok((seg, true))
    } else {
        Ok((short_geodesic(p, &e)?, false))
    }
}

fn check_membership(
    complex: &SimplicialComplex,
    x: &ProductPoint,
    y: &ProductPoint,
    tau_cell: f64,
) -> Result<(), PlanError> {
    check_pair(x, y)?;
    if x.n() != complex.n() {
        return Err(PlanError::SizeMismatch { expected: complex.n(), got: x.n() });
    }
    for (which, p) in [("start", x), ("end", y)] {
        let support = p.support(tau_cell);
        if !complex.is_face(support) {
            return Err(PlanError::PointNotInComplex { which, support });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn fig8() -> SimplicialComplex {
        SimplicialComplex::from_facets(2, [VertexSet::of(&[1]), VertexSet::of(&[2])]).unwrap()
    }

    #[test]
    fn classify_odd_examples() {
        let x = ProductPoint::from_angles(&[0.0, 0.0]);
        let y = ProductPoint::from_angles(&[PI, PI / 2.0]);
        let d = classify_odd(&x, &y, TAU_ANTI);
        assert_eq!(d, DomainId::Odd { antipodal: VertexSet::of(&[1]), n: 2 });
        assert_eq!(d.stratum(), 1);

        let d = classify_odd(&x, &x, TAU_ANTI);
        assert_eq!(d, DomainId::Odd { antipodal: VertexSet::empty(), n: 2 });
        assert_eq!(d.stratum(), 2);

        let minus = ProductPoint::from_angles(&[PI, PI]);
        let d = classify_odd(&x, &minus, TAU_ANTI);
        assert_eq!(d, DomainId::Odd { antipodal: VertexSet::of(&[1, 2]), n: 2 });
        assert_eq!(d.stratum(), 0);
    }

    #[test]
    fn classify_even_examples() {
        let sphere = Sphere::even(1);
        let e = SpherePoint::basepoint(sphere);
        let x = ProductPoint::new(vec![e.clone()]).unwrap();
        let y = ProductPoint::new(vec![e.antipode()]).unwrap();
        let d = classify_even(&x, &y, TAU_ANTI);
        assert_eq!(d, DomainId::Even { rules: vec![CoordRule::FixedPath] });
        assert_eq!(d.stratum(), 0);

        let p = SpherePoint::from_unnormalized(sphere, vec![0.1, 0.5, -0.3]).unwrap();
        let x = ProductPoint::new(vec![p.clone()]).unwrap();
        let y = ProductPoint::new(vec![p.antipode()]).unwrap();
        let d = classify_even(&x, &y, TAU_ANTI);
        assert_eq!(d, DomainId::Even { rules: vec![CoordRule::Semicircle] });
        assert_eq!(d.stratum(), 1);

        let y = ProductPoint::new(vec![e.clone()]).unwrap();
        let d = classify_even(&x, &y, TAU_ANTI);
        assert_eq!(d, DomainId::Even { rules: vec![CoordRule::Geodesic] });
        assert_eq!(d.stratum(), 2);
    }

    #[test]
    fn full_odd_semicircle_midpoint() {
        let x = ProductPoint::from_angles(&[0.0]);
        let y = ProductPoint::from_angles(&[PI]);
        let plan = plan_full_odd(&x, &y).unwrap();
        let mid = plan.path.eval(0.5);
        assert!((mid.coordinate(1).angle().unwrap() - PI / 2.0).abs() < 1e-14);
        assert!(plan.path.end().dist_sup(&y) < 1e-12);
    }

    #[test]
    fn full_odd_keeps_equal_coordinates_constant() {
        let x = ProductPoint::from_angles(&[0.3, 1.1]);
        let y = ProductPoint::from_angles(&[0.3 + PI, 1.1]);
        let plan = plan_full_odd(&x, &y).unwrap();
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            assert!(plan.path.eval(t).coordinate(2).dist(x.coordinate(2)) < 1e-15);
        }
    }

    #[test]
    fn full_even_base_pair_uses_meridian() {
        let sphere = Sphere::even(1);
        let e = SpherePoint::basepoint(sphere);
        let x = ProductPoint::new(vec![e.clone()]).unwrap();
        let y = ProductPoint::new(vec![e.antipode()]).unwrap();
        let plan = plan_full_even(&x, &y).unwrap();
        let mid = plan.path.eval(0.5);
        assert!(mid.coordinate(1).dist(&SpherePoint::new(sphere, vec![0.0, 1.0, 0.0]).unwrap()) < 1e-15);
    }

    #[test]
    fn membership_examples() {
        let x8 = fig8();
        let p = ProductPoint::from_angles(&[PI / 3.0, 0.0]);
        assert!(membership(&x8, &p, TAU_CELL));
        let q = ProductPoint::from_angles(&[PI / 3.0, PI / 3.0]);
        assert!(!membership(&x8, &q, TAU_CELL));
        let base = ProductPoint::basepoint(Sphere::circle(), 2);
        assert!(membership(&x8, &base, TAU_CELL));
    }

    #[test]
    fn restricted_literal_rejects_outside_points() {
        let x8 = fig8();
        let p = ProductPoint::from_angles(&[PI / 3.0, PI / 3.0]);
        let q = ProductPoint::from_angles(&[0.0, 0.0]);
        let err = plan_restricted_literal(&x8, &p, &q).unwrap_err();
        assert!(matches!(err, PlanError::PointNotInComplex { which: "start", .. }));
    }

    #[test]
    fn restricted_literal_escapes_figure_eight() {
        // the documented counterexample: both coordinates move at once
        let x8 = fig8();
        let x = ProductPoint::from_angles(&[PI / 2.0, 0.0]);
        let y = ProductPoint::from_angles(&[0.0, PI / 2.0]);
        let plan = plan_restricted_literal(&x8, &x, &y).unwrap();
        assert_eq!(plan.domain.stratum(), 2); // no antipodal coordinates
        let mid = plan.path.eval(0.5);
        let support = mid.support(TAU_CELL);
        assert_eq!(support, VertexSet::of(&[1, 2]));
        assert!(!x8.is_face(support));
        assert!(!membership(&x8, &mid, TAU_CELL));
        // endpoints are still exact
        assert!(plan.path.start().dist_sup(&x) < 1e-12);
        assert!(plan.path.end().dist_sup(&y) < 1e-12);
    }

    #[test]
    fn safe_planner_stays_inside_figure_eight() {
        let x8 = fig8();
        let x = ProductPoint::from_angles(&[PI / 2.0, 0.0]);
        let y = ProductPoint::from_angles(&[0.0, PI / 2.0]);
        let plan = plan_safe(&x8, &x, &y).unwrap();
        for i in 0..=64 {
            let t = i as f64 / 64.0;
            assert!(membership(&x8, &plan.path.eval(t), TAU_CELL), "t = {t}");
        }
        assert!(plan.path.start().dist_sup(&x) < 1e-12);
        assert!(plan.path.end().dist_sup(&y) < 1e-12);
        assert_eq!(plan.domain.stratum(), 0);
    }

    #[test]
    fn safe_planner_constant_at_basepoint() {
        let x8 = fig8();
        let base = ProductPoint::basepoint(Sphere::circle(), 2);
        let plan = plan_safe(&x8, &base, &base).unwrap();
        assert_eq!(plan.domain.stratum(), 0);
        for i in 0..=16 {
            let t = i as f64 / 16.0;
            assert!(plan.path.eval(t).dist_sup(&base) < 1e-12);
        }
    }

    #[test]
    fn safe_planner_max_stratum_on_full_torus() {
        let full = SimplicialComplex::full_simplex(2).unwrap();
        let minus = ProductPoint::from_angles(&[PI, PI]);
        let plan = plan_safe(&full, &minus, &minus).unwrap();
        assert_eq!(plan.domain.stratum(), 4);
        assert!(plan.path.eval(0.5).dist_sup(&ProductPoint::basepoint(Sphere::circle(), 2)) < 1e-12);
        assert!(plan.path.end().dist_sup(&minus) < 1e-12);
    }

    #[test]
    fn stratum_bounds() {
        assert_eq!(stratum_lower_bound(&fig8(), Parity::Odd), 0);
        let sk = SimplicialComplex::skeleton(5, 2).unwrap();
        assert_eq!(stratum_lower_bound(&sk, Parity::Odd), 1);
        assert_eq!(stratum_lower_bound(&sk, Parity::Even), 6);
    }

    #[test]
    fn restricted_on_full_product_matches_full_planner() {
        let full = SimplicialComplex::full_simplex(2).unwrap();
        let x = ProductPoint::from_angles(&[0.4, -1.0]);
        let y = ProductPoint::from_angles(&[2.0, 0.7]);
        let restricted = plan_restricted_literal(&full, &x, &y).unwrap();
        let unrestricted = plan_full_odd(&x, &y).unwrap();
        assert_eq!(restricted.domain, unrestricted.domain);
        for i in 0..=8 {
            let t = i as f64 / 8.0;
            assert!(restricted.path.eval(t).dist_sup(&unrestricted.path.eval(t)) < 1e-15);
        }
    }
}
