//! Points and closed-form paths on round spheres.
//!
//! Odd spheres `S^{2k-1}` live in `R^{2k}`, identified with `C^k`; even
//! spheres `S^{2k}` live in `R^{2k+1}`.  The basepoint is always
//! `e = (1,0,..,0)`.
//!
//! Three path rules cover every planner need:
//!
//! - a great-circle arc between non-antipodal points,
//! - a semicircle from `x` to `-x` tangent to a nowhere-zero field
//!   (`x ↦ i·x` on odd spheres; a stereographic pullback of a constant
//!   field on even spheres minus the basepoint),
//! - the fixed meridian from `e` to `-e` through the second basis vector,
//!   used on even spheres where no global field exists.
//!
//! Paths are analytic segments, never polylines: evaluation at any time is
//! exact up to floating round-off, and sampling is only for verification
//! and export.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::Parity;
use crate::tolerances::{TAU_ANTI, TAU_DEG, TAU_NORM};

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("coordinate vector of length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("|x| = {norm} is not within {TAU_NORM} of 1")]
    NotOnSphere { norm: f64 },
    #[error("cannot normalize a near-zero vector")]
    ZeroVector,
    #[error("short geodesic undefined for antipodal endpoints (x·y = {dot})")]
    AntipodalInput { dot: f64 },
    #[error("tangent field undefined at the basepoint")]
    PoleInput,
    #[error("rule requires {expected} parity, got {got} ")]
    ParityMismatch { expected: Parity, got: Parity },
    #[error("points lie on different spheres")]
    SphereMismatch,
    #[error("segment spans do not tile [0,1]")]
    BadSpans,
}

/// Which round sphere: `S^{2k-1} ⊂ R^{2k}` (odd) or `S^{2k} ⊂ R^{2k+1}`
/// (even), `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Sphere {
    pub parity: Parity,
    pub k: u32,
}

impl Sphere {
    pub fn odd(k: u32) -> Self {
        assert!(k >= 1);
        Sphere { parity: Parity::Odd, k }
    }

    pub fn even(k: u32) -> Self {
        assert!(k >= 1);
        Sphere { parity: Parity::Even, k }
    }

    /// The unit circle `S^1`.
    pub fn circle() -> Self {
        Sphere::odd(1)
    }

    pub fn from_parity(parity: Parity, k: u32) -> Self {
        match parity {
            Parity::Odd => Sphere::odd(k),
            Parity::Even => Sphere::even(k),
        }
    }

    /// Dimension of the ambient Euclidean space.
    pub fn ambient_dim(self) -> usize {
        match self.parity {
            Parity::Odd => 2 * self.k as usize,
            Parity::Even => 2 * self.k as usize + 1,
        }
    }

    /// Dimension of the sphere itself.
    pub fn dim(self) -> usize {
        self.ambient_dim() - 1
    }
}

impl fmt::Display for Sphere {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{}", self.dim())
    }
}

/// A unit vector on a [`Sphere`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpherePoint {
    sphere: Sphere,
    coords: Vec<f64>,
}

impl SpherePoint {
    /// Validates the length and `| |x| - 1 | <= TAU_NORM`.
    pub fn new(sphere: Sphere, coords: Vec<f64>) -> Result<Self, GeometryError> {
        if coords.len() != sphere.ambient_dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: sphere.ambient_dim(),
                got: coords.len(),
            });
        }
        let norm = norm(&coords);
        if (norm - 1.0).abs() > TAU_NORM {
            return Err(GeometryError::NotOnSphere { norm });
        }
        Ok(SpherePoint { sphere, coords })
    }

    /// Scales an arbitrary nonzero vector onto the sphere.
    pub fn from_unnormalized(sphere: Sphere, mut coords: Vec<f64>) -> Result<Self, GeometryError> {
        if coords.len() != sphere.ambient_dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: sphere.ambient_dim(),
                got: coords.len(),
            });
        }
        let n = norm(&coords);
        if n < 1e-50 || !n.is_finite() {
            return Err(GeometryError::ZeroVector);
        }
        for c in &mut coords {
            *c /= n;
        }
        Ok(SpherePoint { sphere, coords })
    }

    /// The basepoint `e = (1,0,..,0)`.
    pub fn basepoint(sphere: Sphere) -> Self {
        let mut coords = vec![0.0; sphere.ambient_dim()];
        coords[0] = 1.0;
        SpherePoint { sphere, coords }
    }

    /// A point on the unit circle at the given angle.
    pub fn circle_angle(angle: f64) -> Self {
        SpherePoint { sphere: Sphere::circle(), coords: vec![angle.cos(), angle.sin()] }
    }

    /// Angle in `(-pi, pi]` for circle points.
    pub fn angle(&self) -> Option<f64> {
        (self.sphere == Sphere::circle()).then(|| self.coords[1].atan2(self.coords[0]))
    }

    pub fn sphere(&self) -> Sphere {
        self.sphere
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        dot(&self.coords, &other.coords)
    }

    pub fn dist(&self, other: &SpherePoint) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint { sphere: self.sphere, coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Distance to the basepoint in the ambient space.
    pub fn dist_to_basepoint(&self) -> f64 {
        self.dist(&SpherePoint::basepoint(self.sphere))
    }

    /// `x·y <= -1 + tau`, the antipodality test used everywhere.
    pub fn is_antipodal_to(&self, other: &SpherePoint, tau: f64) -> bool {
        self.dot(other) <= -1.0 + tau
    }

    pub fn is_basepoint(&self, tau: f64) -> bool {
        self.coords[0] >= 1.0 - tau
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// The standard complex structure on `R^{2k} = C^k`: multiplication by `i`
/// in each complex coordinate pair.  Nowhere zero and tangent to every odd
/// sphere: `x ⊥ i·x`.
fn complex_structure(coords: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; coords.len()];
    for pair in 0..coords.len() / 2 {
        out[2 * pair] = -coords[2 * pair + 1];
        out[2 * pair + 1] = coords[2 * pair];
    }
    out
}

/// A unit tangent field on an even sphere minus the basepoint: the
/// normalized pullback of the constant field along the second basis vector
/// through stereographic projection from the pole `e`.
///
/// In closed form, with `a = x·u2`, `c = 1 - x·e`, and `x'` the component
/// of `x` orthogonal to `e`, the unnormalized field is
/// `w = (a·c)·e + c·u2 - a·x'`, which satisfies `x·w = 0` and `|w| = c`
/// exactly, so the normalized field never degenerates away from the pole.
pub fn even_tangent_field(x: &SpherePoint) -> Result<Vec<f64>, GeometryError> {
    if x.sphere.parity != Parity::Even {
        return Err(GeometryError::ParityMismatch { expected: Parity::Even, got: x.sphere.parity });
    }
    let c = 1.0 - x.coords[0];
    if c <= TAU_ANTI {
        return Err(GeometryError::PoleInput);
    }
    let a = x.coords[1];
    let mut w = vec![0.0; x.coords.len()];
    w[0] = a * c;
    w[1] = c;
    // subtract a·x' where x' = x - (x·e)e
    for (i, wi) in w.iter_mut().enumerate().skip(1) {
        *wi -= a * x.coords[i];
    }
    let nw = norm(&w);
    debug_assert!((nw - c).abs() <= 1e-12 * (1.0 + c));
    for wi in &mut w {
        *wi /= nw;
    }
    Ok(w)
}

/// Half-open time interval inside `[0,1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeSpan {
    pub t0: f64,
    pub t1: f64,
}

impl TimeSpan {
    pub const UNIT: TimeSpan = TimeSpan { t0: 0.0, t1: 1.0 };

    fn local(&self, t: f64) -> f64 {
        (t - self.t0) / (self.t1 - self.t0)
    }
}

/// One analytic piece of a path.  Every variant evaluates exactly on the
/// sphere for all times; see the module docs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum SegmentKind {
    /// Stays at `x`.
    Constant { x: SpherePoint },
    /// Great-circle arc `p(s) = (sin((1-s)θ)·x + sin(sθ)·y) / sin θ`.
    ShortGeodesic { x: SpherePoint, y: SpherePoint, theta: f64 },
    /// `p(s) = cos(πs)·x + sin(πs)·v` for a unit tangent `v` at `x`; ends
    /// at `-x`.
    Semicircle { x: SpherePoint, v: Vec<f64> },
    /// The fixed meridian `p(s) = cos(πs)·e + sin(πs)·u2` from `e` to `-e`.
    FixedMeridian { sphere: Sphere },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathSegment {
    pub kind: SegmentKind,
    pub span: TimeSpan,
}

impl PathSegment {
    pub fn new(kind: SegmentKind) -> Self {
        PathSegment { kind, span: TimeSpan::UNIT }
    }

    pub fn on_span(mut self, t0: f64, t1: f64) -> Self {
        self.span = TimeSpan { t0, t1 };
        self
    }

    pub fn sphere(&self) -> Sphere {
        match &self.kind {
            SegmentKind::Constant { x } => x.sphere,
            SegmentKind::ShortGeodesic { x, .. } => x.sphere,
            SegmentKind::Semicircle { x, .. } => x.sphere,
            SegmentKind::FixedMeridian { sphere } => *sphere,
        }
    }

    /// Evaluates at global time `t` within the span.
    pub fn eval(&self, t: f64) -> SpherePoint {
        let s = self.span.local(t);
        let sphere = self.sphere();
        let coords = match &self.kind {
            SegmentKind::Constant { x } => x.coords.clone(),
            SegmentKind::ShortGeodesic { x, y, theta } => {
                let sine = theta.sin();
                let cx = ((1.0 - s) * theta).sin() / sine;
                let cy = (s * theta).sin() / sine;
                let mut coords: Vec<f64> =
                    x.coords.iter().zip(&y.coords).map(|(a, b)| cx * a + cy * b).collect();
                // the combination cancels catastrophically for nearly
                // antipodal endpoints; rescaling restores the unit norm
                let n = norm(&coords);
                for c in &mut coords {
                    *c /= n;
                }
                coords
            }
            SegmentKind::Semicircle { x, v } => {
                let (cx, cv) = ((std::f64::consts::PI * s).cos(), (std::f64::consts::PI * s).sin());
                x.coords.iter().zip(v).map(|(a, b)| cx * a + cv * b).collect()
            }
            SegmentKind::FixedMeridian { sphere } => {
                let mut coords = vec![0.0; sphere.ambient_dim()];
                coords[0] = (std::f64::consts::PI * s).cos();
                coords[1] = (std::f64::consts::PI * s).sin();
                coords
            }
        };
        SpherePoint { sphere, coords }
    }

    pub fn start(&self) -> SpherePoint {
        self.eval(self.span.t0)
    }

    pub fn end(&self) -> SpherePoint {
        self.eval(self.span.t1)
    }

    /// Time reversal; closed form, same trace.
    pub fn reversed(&self) -> PathSegment {
        let kind = match &self.kind {
            SegmentKind::Constant { x } => SegmentKind::Constant { x: x.clone() },
            SegmentKind::ShortGeodesic { x, y, theta } => {
                SegmentKind::ShortGeodesic { x: y.clone(), y: x.clone(), theta: *theta }
            }
            // cos(π(1-s))x + sin(π(1-s))v = cos(πs)(-x) + sin(πs)v
            SegmentKind::Semicircle { x, v } => {
                SegmentKind::Semicircle { x: x.antipode(), v: v.clone() }
            }
            SegmentKind::FixedMeridian { sphere } => {
                let mut v = vec![0.0; sphere.ambient_dim()];
                v[1] = 1.0;
                SegmentKind::Semicircle { x: SpherePoint::basepoint(*sphere).antipode(), v }
            }
        };
        PathSegment { kind, span: self.span }
    }
}

/// The arc from `x` towards `y` along the shortest great circle.  Errors
/// on antipodal inputs; degenerates to a constant path when the angle is
/// below `TAU_DEG`.
pub fn short_geodesic(x: &SpherePoint, y: &SpherePoint) -> Result<PathSegment, GeometryError> {
    if x.sphere != y.sphere {
        return Err(GeometryError::SphereMismatch);
    }
    let dot = x.dot(y);
    if dot <= -1.0 + TAU_ANTI {
        return Err(GeometryError::AntipodalInput { dot });
    }
    let theta = dot.clamp(-1.0, 1.0).acos();
    if theta < TAU_DEG {
        return Ok(PathSegment::new(SegmentKind::Constant { x: x.clone() }));
    }
    Ok(PathSegment::new(SegmentKind::ShortGeodesic { x: x.clone(), y: y.clone(), theta }))
}

/// The semicircle from `x` to `-x` tangent to `i·x`; odd spheres only.
pub fn semicircle_odd(x: &SpherePoint) -> Result<PathSegment, GeometryError> {
    if x.sphere.parity != Parity::Odd {
        return Err(GeometryError::ParityMismatch { expected: Parity::Odd, got: x.sphere.parity });
    }
    let v = complex_structure(&x.coords);
    Ok(PathSegment::new(SegmentKind::Semicircle { x: x.clone(), v }))
}

/// The semicircle from `x` to `-x` tangent to the even-sphere field;
/// undefined at the basepoint.
pub fn semicircle_even(x: &SpherePoint) -> Result<PathSegment, GeometryError> {
    let v = even_tangent_field(x)?;
    Ok(PathSegment::new(SegmentKind::Semicircle { x: x.clone(), v }))
}

/// The fixed path from `e` to `-e` on an even sphere.
pub fn base_meridian(sphere: Sphere) -> PathSegment {
    PathSegment::new(SegmentKind::FixedMeridian { sphere })
}

/// A path on a single sphere: consecutive analytic segments whose spans
/// tile `[0,1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimedPath {
    segments: Vec<PathSegment>,
}

impl TimedPath {
    pub fn new(segments: Vec<PathSegment>) -> Result<Self, GeometryError> {
        if segments.is_empty() || segments[0].span.t0 != 0.0 {
            return Err(GeometryError::BadSpans);
        }
        for w in segments.windows(2) {
            if w[0].span.t1 != w[1].span.t0 {
                return Err(GeometryError::BadSpans);
            }
        }
        if segments.last().unwrap().span.t1 != 1.0 {
            return Err(GeometryError::BadSpans);
        }
        Ok(TimedPath { segments })
    }

    pub fn single(segment: PathSegment) -> Self {
        TimedPath { segments: vec![segment.on_span(0.0, 1.0)] }
    }

    /// Concatenation on uniform halves `[0,1/2]`, `[1/2,1]`.
    pub fn two_stage(first: PathSegment, second: PathSegment) -> Self {
        TimedPath {
            segments: vec![first.on_span(0.0, 0.5), second.on_span(0.5, 1.0)],
        }
    }

    pub fn segments(&self) -> &[PathSegment] {
        &self.segments
    }

    pub fn eval(&self, t: f64) -> SpherePoint {
        let seg = self
            .segments
            .iter()
            .find(|s| t <= s.span.t1)
            .unwrap_or_else(|| self.segments.last().unwrap());
        seg.eval(t.clamp(seg.span.t0, seg.span.t1))
    }

    pub fn start(&self) -> SpherePoint {
        self.segments[0].start()
    }

    pub fn end(&self) -> SpherePoint {
        self.segments.last().unwrap().end()
    }

    pub fn reversed(&self) -> TimedPath {
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|s| {
                s.reversed().on_span(1.0 - s.span.t1, 1.0 - s.span.t0)
            })
            .collect();
        TimedPath { segments }
    }

    /// Largest jump between consecutive segment endpoints.
    pub fn max_junction_gap(&self) -> f64 {
        self.segments
            .windows(2)
            .map(|w| w[0].end().dist(&w[1].start()))
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn geodesic_midpoint_on_circle() {
        let x = SpherePoint::circle_angle(0.0);
        let y = SpherePoint::circle_angle(PI / 2.0);
        let seg = short_geodesic(&x, &y).unwrap();
        let mid = seg.eval(0.5);
        assert!((mid.angle().unwrap() - PI / 4.0).abs() < 1e-14);
        assert!(seg.start().dist(&x) < 1e-15);
        assert!(seg.end().dist(&y) < 1e-15);
    }

    #[test]
    fn geodesic_equal_endpoints_is_constant() {
        let x = SpherePoint::circle_angle(1.0);
        let seg = short_geodesic(&x, &x).unwrap();
        assert!(matches!(seg.kind, SegmentKind::Constant { .. }));
        assert_eq!(seg.eval(0.3).dist(&x), 0.0);
    }

    #[test]
    fn geodesic_rejects_antipodal() {
        let x = SpherePoint::circle_angle(0.0);
        let y = SpherePoint::circle_angle(PI);
        assert!(matches!(
            short_geodesic(&x, &y),
            Err(GeometryError::AntipodalInput { .. })
        ));
    }

    #[test]
    fn odd_semicircle_on_circle_goes_counterclockwise() {
        let x = SpherePoint::circle_angle(0.0);
        let seg = semicircle_odd(&x).unwrap();
        assert_eq!(seg.eval(0.0).dist(&x), 0.0);
        assert!((seg.eval(0.5).angle().unwrap() - PI / 2.0).abs() < 1e-14);
        assert!(seg.eval(1.0).dist(&x.antipode()) < 1e-15);
    }

    #[test]
    fn odd_semicircle_on_s3_follows_complex_structure() {
        let e = SpherePoint::basepoint(Sphere::odd(2));
        let seg = semicircle_odd(&e).unwrap();
        let mid = seg.eval(0.5);
        // e = (1,0) in C^2, i·e = (i,0) = (0,1,0,0) in R^4
        assert!(mid.dist(&SpherePoint::new(Sphere::odd(2), vec![0.0, 1.0, 0.0, 0.0]).unwrap()) < 1e-15);
    }

    #[test]
    fn even_field_at_antipode_of_pole_is_u2() {
        let sphere = Sphere::even(1);
        let minus_e = SpherePoint::basepoint(sphere).antipode();
        let v = even_tangent_field(&minus_e).unwrap();
        assert!((v[0] - 0.0).abs() < 1e-15);
        assert!((v[1] - 1.0).abs() < 1e-15);
        assert!((v[2] - 0.0).abs() < 1e-15);
    }

    #[test]
    fn even_field_is_unit_tangent_near_pole() {
        // approach e along a meridian; the normalized field must not decay
        let sphere = Sphere::even(1);
        for phi in [1.0f64, 0.1, 1e-2, 1e-4] {
            let x = SpherePoint::new(
                sphere,
                vec![phi.cos(), 0.3 * phi.sin(), (1.0f64 - 0.09).sqrt() * phi.sin()],
            )
            .unwrap();
            let v = even_tangent_field(&x).unwrap();
            let n: f64 = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            let tangency: f64 = v.iter().zip(x.coords()).map(|(a, b)| a * b).sum();
            assert!((n - 1.0).abs() < 1e-10, "norm {n} at phi={phi}");
            assert!(tangency.abs() < 1e-10, "tangency {tangency} at phi={phi}");
        }
    }

    #[test]
    fn even_field_rejects_pole() {
        let e = SpherePoint::basepoint(Sphere::even(1));
        assert_eq!(even_tangent_field(&e), Err(GeometryError::PoleInput));
    }

    #[test]
    fn meridian_midpoint_is_u2() {
        let seg = base_meridian(Sphere::even(1));
        let mid = seg.eval(0.5);
        assert!(mid.dist(&SpherePoint::new(Sphere::even(1), vec![0.0, 1.0, 0.0]).unwrap()) < 1e-15);
        assert!(seg.end().dist(&SpherePoint::basepoint(Sphere::even(1)).antipode()) < 1e-15);
    }

    #[test]
    fn even_semicircle_from_antipode_returns_to_pole() {
        let sphere = Sphere::even(1);
        let minus_e = SpherePoint::basepoint(sphere).antipode();
        let seg = semicircle_even(&minus_e).unwrap();
        assert!(seg.end().dist(&SpherePoint::basepoint(sphere)) < 1e-15);
    }

    #[test]
    fn segments_stay_on_sphere() {
        let x = SpherePoint::from_unnormalized(Sphere::even(2), vec![0.3, -1.2, 0.5, 0.0, 2.0]).unwrap();
        let y = SpherePoint::from_unnormalized(Sphere::even(2), vec![-0.4, 0.1, 0.9, -0.2, 0.3]).unwrap();
        for seg in [
            short_geodesic(&x, &y).unwrap(),
            semicircle_even(&x).unwrap(),
            base_meridian(Sphere::even(2)),
        ] {
            for i in 0..=100 {
                let p = seg.eval(i as f64 / 100.0);
                let n: f64 = p.coords().iter().map(|c| c * c).sum::<f64>().sqrt();
                assert!((n - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn semicircle_endpoint_error_is_tiny() {
        let x = SpherePoint::from_unnormalized(Sphere::odd(1), vec![0.6, -0.8]).unwrap();
        let seg = semicircle_odd(&x).unwrap();
        assert!(seg.end().dist(&x.antipode()) < 1e-12);
    }

    #[test]
    fn reversal_matches_time_flip() {
        let x = SpherePoint::from_unnormalized(Sphere::even(1), vec![-0.9, 0.1, 0.4]).unwrap();
        for seg in [
            semicircle_even(&x).unwrap(),
            short_geodesic(&x, &SpherePoint::basepoint(Sphere::even(1)).antipode()).unwrap(),
            base_meridian(Sphere::even(1)),
        ] {
            let rev = seg.reversed();
            for i in 0..=20 {
                let t = i as f64 / 20.0;
                assert!(rev.eval(t).dist(&seg.eval(1.0 - t)) < 1e-12);
            }
        }
    }

    #[test]
    fn two_stage_paths_span_correctly() {
        let x = SpherePoint::circle_angle(2.0);
        let to_base = short_geodesic(&x, &SpherePoint::basepoint(Sphere::circle())).unwrap();
        let back = to_base.clone().reversed();
        let path = TimedPath::two_stage(to_base, back);
        assert!(path.eval(0.0).dist(&x) < 1e-15);
        assert!(path.eval(0.5).dist(&SpherePoint::basepoint(Sphere::circle())) < 1e-15);
        assert!(path.eval(1.0).dist(&x) < 1e-15);
        assert!(path.max_junction_gap() < 1e-15);
        let rev = path.reversed();
        assert!(rev.eval(0.25).dist(&path.eval(0.75)) < 1e-12);
    }

    #[test]
    fn point_validation() {
        assert!(SpherePoint::new(Sphere::circle(), vec![0.6, 0.8]).is_ok());
        assert!(matches!(
            SpherePoint::new(Sphere::circle(), vec![0.6, 0.9]),
            Err(GeometryError::NotOnSphere { .. })
        ));
        assert!(matches!(
            SpherePoint::new(Sphere::circle(), vec![1.0]),
            Err(GeometryError::DimensionMismatch { .. })
        ));
    }
}
