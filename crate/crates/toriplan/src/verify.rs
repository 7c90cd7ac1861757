//! Randomized verification of the motion-planner contract.
//!
//! Three suites, mirroring the contract of a motion planner:
//!
//! - **partition**: every sampled pair classifies into exactly one domain;
//!   the set of nonempty strata is compared against the theoretical domain
//!   count, and each stratum is checked against the literal rule's lower
//!   bound (violations are *reported*, not asserted — on even products of
//!   subcomplexes the stated bound genuinely fails, and the harness is the
//!   arbiter).
//! - **containment**: planned paths are sampled in time and every point is
//!   checked for membership in the subcomplex.
//! - **endpoints/continuity**: endpoint exactness, on-sphere exactness,
//!   and an empirical per-domain Lipschitz constant for same-domain input
//!   perturbations.
//!
//! Sampling is deterministic: sample `i` draws from stream `i` of the
//! seeded generator, so reports are bit-identical across runs and thread
//! counts.  A prefix of the sample indices is reserved for directed
//! constructions that realize every reachable stratum.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Parity, SimplicialComplex, VertexSet};
use crate::planner::{
    classify, membership, plan_full_even_with, plan_full_odd_with, plan_restricted_literal_with,
    plan_safe_with, stratum_lower_bound, DomainId, PlanError, PlanResult, ProductPoint,
};
use crate::sample::{
    directed_full_pair_even, directed_full_pair_odd, directed_in_complex_pair,
    random_in_complex_pair, random_product_point, stream_rng,
};
use crate::sphere::{Sphere, SpherePoint};
use crate::tolerances::{DEFAULT_SEED, DEFAULT_VERIFY_SAMPLES, TAU_ANTI, TAU_CELL};

/// Which planner a suite exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PlannerChoice {
    /// The optimal planner on the full product (ignores the complex).
    Full,
    /// The simultaneous rule restricted to in-complex pairs.
    Literal,
    /// The two-stage basepoint planner.
    Safe,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyConfig {
    pub samples: usize,
    pub time_samples: usize,
    pub seed: u64,
    pub tau_anti: f64,
    pub tau_cell: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: DEFAULT_VERIFY_SAMPLES,
            time_samples: 256,
            seed: DEFAULT_SEED,
            tau_anti: TAU_ANTI,
            tau_cell: TAU_CELL,
        }
    }
}

impl VerifyConfig {
    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_time_samples(mut self, time_samples: usize) -> Self {
        self.time_samples = time_samples;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// A sampled pair whose stratum fell below the stated lower bound.
#[derive(Debug, Clone, Serialize)]
pub struct StratumViolation {
    pub sample: usize,
    pub stratum: usize,
    pub bound: usize,
    pub domain: DomainId,
    pub start_support: VertexSet,
    pub end_support: VertexSet,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    pub planner: PlannerChoice,
    pub parity: Parity,
    pub samples: usize,
    /// Distinct classified stratum -> sample count.
    pub strata_counts: BTreeMap<usize, usize>,
    /// Number of distinct nonempty strata observed.
    pub nonempty_strata: usize,
    /// Theoretical number of local domains (strata) of this planner.
    pub expected_domains: usize,
    /// The literal rule's stated smallest reachable stratum.
    pub min_allowed_stratum: usize,
    pub bound_violations: Vec<StratumViolation>,
}

impl PartitionReport {
    /// Every stated stratum is realized and none falls below the bound.
    pub fn complete_and_sound(&self) -> bool {
        self.bound_violations.is_empty() && self.nonempty_strata == self.expected_domains
    }
}

/// A sampled time at which a planned path left the subcomplex.
#[derive(Debug, Clone, Serialize)]
pub struct ContainmentViolation {
    pub sample: usize,
    pub time: f64,
    pub support: VertexSet,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContainmentReport {
    pub planner: PlannerChoice,
    pub parity: Parity,
    pub samples: usize,
    pub time_samples: usize,
    pub violations: Vec<ContainmentViolation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractReport {
    pub planner: PlannerChoice,
    pub parity: Parity,
    pub samples: usize,
    /// Largest `max(|path(0) - x|, |path(1) - y|)` over all samples.
    pub max_endpoint_error: f64,
    /// Largest `| |p_i(t)| - 1 |` over all samples, times, coordinates.
    pub max_sphere_error: f64,
    /// Perturbation pairs that entered the Lipschitz estimate.
    pub continuity_pairs: usize,
    /// Empirical constant: sup-distance of paths over input distance.
    pub max_continuity_ratio: f64,
}

fn plan_pair(
    choice: PlannerChoice,
    complex: &SimplicialComplex,
    x: &ProductPoint,
    y: &ProductPoint,
    cfg: &VerifyConfig,
) -> Result<PlanResult, PlanError> {
    match (choice, x.sphere().map(|s| s.parity)) {
        (PlannerChoice::Full, Some(Parity::Even)) => plan_full_even_with(x, y, cfg.tau_anti),
        (PlannerChoice::Full, _) => plan_full_odd_with(x, y, cfg.tau_anti),
        (PlannerChoice::Literal, _) => {
            plan_restricted_literal_with(complex, x, y, cfg.tau_anti, cfg.tau_cell)
        }
        (PlannerChoice::Safe, _) => plan_safe_with(complex, x, y, cfg.tau_anti, cfg.tau_cell),
    }
}

/// One pair per sample index; a reserved prefix covers every stratum the
/// planner is supposed to realize, the rest mixes random and directed
/// draws (3:1).
fn sample_pair(
    choice: PlannerChoice,
    complex: &SimplicialComplex,
    sphere: Sphere,
    index: usize,
    cfg: &VerifyConfig,
) -> (ProductPoint, ProductPoint) {
    let mut rng = stream_rng(cfg.seed, index as u64);
    let n = complex.n();
    match choice {
        PlannerChoice::Full => {
            let strata = match sphere.parity {
                Parity::Odd => n + 1,
                Parity::Even => 2 * n + 1,
            };
            if index < strata {
                match sphere.parity {
                    Parity::Odd => directed_full_pair_odd(sphere, n, index, &mut rng),
                    Parity::Even => directed_full_pair_even(sphere, n, index, &mut rng),
                }
            } else if index % 4 == 3 {
                let j = rng.random_range(0..strata);
                match sphere.parity {
                    Parity::Odd => directed_full_pair_odd(sphere, n, j, &mut rng),
                    Parity::Even => directed_full_pair_even(sphere, n, j, &mut rng),
                }
            } else {
                (random_product_point(sphere, n, &mut rng), random_product_point(sphere, n, &mut rng))
            }
        }
        PlannerChoice::Literal => {
            let reserved = reserved_literal_strata(complex, sphere.parity);
            if index < reserved.len() {
                directed_literal_pair(complex, sphere, reserved[index], &mut rng)
            } else if index % 4 == 3 {
                directed_in_complex_pair(complex, sphere, &mut rng)
            } else {
                random_in_complex_pair(complex, sphere, &mut rng)
            }
        }
        PlannerChoice::Safe => {
            let d = complex.max_face_size();
            if index <= 2 * d {
                directed_safe_pair(complex, sphere, index, &mut rng)
            } else if index % 4 == 3 {
                directed_in_complex_pair(complex, sphere, &mut rng)
            } else {
                random_in_complex_pair(complex, sphere, &mut rng)
            }
        }
    }
}

use rand::Rng;

fn reserved_literal_strata(complex: &SimplicialComplex, parity: Parity) -> Vec<usize> {
    let n = complex.n();
    match parity {
        Parity::Odd => (stratum_lower_bound(complex, parity)..=n).collect(),
        Parity::Even => (stratum_lower_bound(complex, parity)..=2 * n).collect(),
    }
}

/// An in-complex pair landing exactly in the requested literal stratum.
/// Coordinates chosen antipodal are pinned to `(-e, e)` or `(e, -e)` so
/// both supports stay inside the disjoint cover witness (odd) or a
/// maximum face (even).
fn directed_literal_pair(
    complex: &SimplicialComplex,
    sphere: Sphere,
    stratum: usize,
    rng: &mut impl Rng,
) -> (ProductPoint, ProductPoint) {
    let n = complex.n();
    let e = SpherePoint::basepoint(sphere);
    let mut xs: Vec<SpherePoint> = (0..n).map(|_| e.clone()).collect();
    let mut ys = xs.clone();
    match sphere.parity {
        Parity::Odd => {
            let cover = complex.disjoint_cover();
            let antipodal_count = n - stratum; // <= z by choice of stratum
            for (placed, i) in cover.first.iter().chain(cover.second.iter()).enumerate() {
                if placed >= antipodal_count {
                    break;
                }
                if cover.first.contains(i) {
                    xs[i - 1] = e.antipode();
                } else {
                    ys[i - 1] = e.antipode();
                }
            }
            // fill one more support coordinate generically when available
            if stratum == n {
                if let Some(i) = cover.first.iter().next() {
                    xs[i - 1] = crate::sample::random_point(sphere, rng);
                }
            }
        }
        Parity::Even => {
            let face = complex.max_face();
            let deficit = 2 * n - stratum; // <= 2d by choice of stratum
            let zeros = deficit / 2;
            let ones = deficit % 2;
            let members: Vec<usize> = face.iter().collect();
            for &i in members.iter().take(zeros) {
                ys[i - 1] = e.antipode(); // rule 0: the pair (e, -e)
            }
            if ones == 1 {
                let i = members[zeros];
                xs[i - 1] = e.antipode(); // rule 1: antipodal with x != e
            }
        }
    }
    (
        ProductPoint::new(xs).expect("common sphere"),
        ProductPoint::new(ys).expect("common sphere"),
    )
}

/// An in-complex pair landing in the requested safe stratum: both
/// endpoints pin basepoint-antipodal coordinates inside a maximum face.
fn directed_safe_pair(
    complex: &SimplicialComplex,
    sphere: Sphere,
    stratum: usize,
    rng: &mut impl Rng,
) -> (ProductPoint, ProductPoint) {
    let d = complex.max_face_size();
    let a = stratum.min(d);
    let b = stratum - a;
    let face: Vec<usize> = complex.max_face().iter().collect();
    let e = SpherePoint::basepoint(sphere);
    let mut xs: Vec<SpherePoint> = (0..complex.n()).map(|_| e.clone()).collect();
    let mut ys = xs.clone();
    for &i in face.iter().take(a) {
        xs[i - 1] = e.antipode();
    }
    for &i in face.iter().take(b) {
        ys[i - 1] = e.antipode();
    }
    let _ = rng;
    (
        ProductPoint::new(xs).expect("common sphere"),
        ProductPoint::new(ys).expect("common sphere"),
    )
}

/// Expected number of local domains of the planner on this complex.
pub fn expected_domains(
    choice: PlannerChoice,
    complex: &SimplicialComplex,
    parity: Parity,
) -> usize {
    let n = complex.n();
    match (choice, parity) {
        (PlannerChoice::Full, Parity::Odd) => n + 1,
        (PlannerChoice::Full, Parity::Even) => 2 * n + 1,
        (PlannerChoice::Literal, Parity::Odd) => complex.disjoint_cover().size + 1,
        (PlannerChoice::Literal, Parity::Even) => 2 * complex.max_face_size() + 1,
        (PlannerChoice::Safe, _) => 2 * complex.max_face_size() + 1,
    }
}

/// Classification suite; see the module docs.
pub fn verify_partition(
    choice: PlannerChoice,
    complex: &SimplicialComplex,
    sphere: Sphere,
    cfg: &VerifyConfig,
) -> PartitionReport {
    let parity = sphere.parity;
    let min_allowed = match choice {
        PlannerChoice::Full | PlannerChoice::Safe => 0,
        PlannerChoice::Literal => stratum_lower_bound(complex, parity),
    };
    let per_sample: Vec<(usize, Option<StratumViolation>)> = (0..cfg.samples)
        .into_par_iter()
        .map(|index| {
            let (x, y) = sample_pair(choice, complex, sphere, index, cfg);
            let domain = match choice {
                PlannerChoice::Safe => {
                    // domain ids of the two-stage planner come from the plan
                    let plan = plan_pair(choice, complex, &x, &y, cfg)
                        .expect("in-complex samples plan successfully");
                    plan.domain
                }
                _ => classify(&x, &y, cfg.tau_anti),
            };
            let stratum = domain.stratum();
            let violation = (stratum < min_allowed).then(|| StratumViolation {
                sample: index,
                stratum,
                bound: min_allowed,
                domain: domain.clone(),
                start_support: x.support(cfg.tau_cell),
                end_support: y.support(cfg.tau_cell),
            });
            (stratum, violation)
        })
        .collect();

    let mut strata_counts = BTreeMap::new();
    let mut bound_violations = Vec::new();
    for (stratum, violation) in per_sample {
        *strata_counts.entry(stratum).or_insert(0) += 1;
        if let Some(v) = violation {
            bound_violations.push(v);
        }
    }
    bound_violations.sort_by_key(|v| v.sample);
    PartitionReport {
        planner: choice,
        parity,
        samples: cfg.samples,
        nonempty_strata: strata_counts.len(),
        expected_domains: expected_domains(choice, complex, parity),
        min_allowed_stratum: min_allowed,
        strata_counts,
        bound_violations,
    }
}

/// Containment suite: checks every planned path across sampled times.
pub fn verify_containment(
    choice: PlannerChoice,
    complex: &SimplicialComplex,
    sphere: Sphere,
    cfg: &VerifyConfig,
) -> ContainmentReport {
    let times: Vec<f64> = time_grid(cfg.time_samples);
    let mut violations: Vec<ContainmentViolation> = (0..cfg.samples)
        .into_par_iter()
        .flat_map_iter(|index| {
            let (x, y) = sample_pair(choice, complex, sphere, index, cfg);
            let plan = plan_pair(choice, complex, &x, &y, cfg)
                .expect("in-complex samples plan successfully");
            let complex = complex.clone();
            let times = times.clone();
            times.into_iter().filter_map(move |t| {
                let p = plan.path.eval(t);
                let support = p.support(cfg.tau_cell);
                (!complex.is_face(support)).then_some(ContainmentViolation {
                    sample: index,
                    time: t,
                    support,
                })
            })
        })
        .collect();
    violations.sort_by(|a, b| (a.sample, a.time).partial_cmp(&(b.sample, b.time)).unwrap());
    ContainmentReport {
        planner: choice,
        parity: sphere.parity,
        samples: cfg.samples,
        time_samples: cfg.time_samples,
        violations,
    }
}

fn time_grid(count: usize) -> Vec<f64> {
    if count <= 1 {
        return vec![0.0];
    }
    (0..count).map(|i| i as f64 / (count - 1) as f64).collect()
}

/// Inner-product margin from the singular loci below which a pair is
/// excluded from the continuity estimate.
const CONTINUITY_MARGIN: f64 = 0.1;

/// Endpoint exactness, on-sphere exactness, and the empirical continuity
/// modulus for same-domain perturbations.
pub fn verify_endpoints_continuity(
    choice: PlannerChoice,
    complex: &SimplicialComplex,
    sphere: Sphere,
    cfg: &VerifyConfig,
) -> ContractReport {
    let times = time_grid(cfg.time_samples);
    let outcomes: Vec<(f64, f64, Option<f64>)> = (0..cfg.samples)
        .into_par_iter()
        .map(|index| {
            let mut rng = stream_rng(cfg.seed, (1 << 40) + index as u64);
            let (x, y) = sample_pair(choice, complex, sphere, index, cfg);
            let plan = plan_pair(choice, complex, &x, &y, cfg)
                .expect("in-complex samples plan successfully");
            let endpoint_err =
                plan.path.start().dist_sup(&x).max(plan.path.end().dist_sup(&y));
            let mut sphere_err: f64 = 0.0;
            for &t in &times {
                for p in plan.path.eval(t).coordinates() {
                    let norm: f64 = p.coords().iter().map(|c| c * c).sum::<f64>().sqrt();
                    sphere_err = sphere_err.max((norm - 1.0).abs());
                }
            }
            let ratio = continuity_ratio(choice, complex, &x, &y, &plan, &times, cfg, &mut rng);
            (endpoint_err, sphere_err, ratio)
        })
        .collect();

    let mut report = ContractReport {
        planner: choice,
        parity: sphere.parity,
        samples: cfg.samples,
        max_endpoint_error: 0.0,
        max_sphere_error: 0.0,
        continuity_pairs: 0,
        max_continuity_ratio: 0.0,
    };
    for (endpoint_err, sphere_err, ratio) in outcomes {
        report.max_endpoint_error = report.max_endpoint_error.max(endpoint_err);
        report.max_sphere_error = report.max_sphere_error.max(sphere_err);
        if let Some(r) = ratio {
            report.continuity_pairs += 1;
            report.max_continuity_ratio = report.max_continuity_ratio.max(r);
        }
    }
    report
}

/// Perturbs a pair tangentially inside its domain and measures the
/// sup-distance of the two planned paths against the input distance.
/// Pairs too close to a rule's singular locus are skipped, as are
/// perturbations that would leave the domain (antipodal coordinates are
/// re-coupled instead, pinned coordinates stay pinned).
fn continuity_ratio(
    choice: PlannerChoice,
    complex: &SimplicialComplex,
    x: &ProductPoint,
    y: &ProductPoint,
    plan: &PlanResult,
    times: &[f64],
    cfg: &VerifyConfig,
    rng: &mut impl Rng,
) -> Option<f64> {
    const DELTA: f64 = 1e-4;
    if !within_continuity_margin(&plan.domain, x, y) {
        return None;
    }
    let (px, py) = perturb_in_domain(&plan.domain, x, y, DELTA, rng)?;
    if classify(&px, &py, cfg.tau_anti) != classify(x, y, cfg.tau_anti) {
        return None;
    }
    if matches!(choice, PlannerChoice::Literal | PlannerChoice::Safe)
        && !(membership(complex, &px, cfg.tau_cell) && membership(complex, &py, cfg.tau_cell))
    {
        return None;
    }
    let input_dist = px.dist_sup(x).max(py.dist_sup(y));
    if input_dist < 1e-9 {
        return None;
    }
    let perturbed = plan_pair(choice, complex, &px, &py, cfg).ok()?;
    let path_dist = times
        .iter()
        .map(|&t| plan.path.eval(t).dist_sup(&perturbed.path.eval(t)))
        .fold(0.0, f64::max);
    Some(path_dist / input_dist)
}

fn within_continuity_margin(domain: &DomainId, x: &ProductPoint, y: &ProductPoint) -> bool {
    match domain {
        DomainId::Odd { antipodal, n } => (1..=*n).all(|i| {
            antipodal.contains(i)
                || x.coordinate(i).dot(y.coordinate(i)) >= -1.0 + CONTINUITY_MARGIN
        }),
        DomainId::Even { rules } => rules.iter().enumerate().all(|(idx, rule)| {
            let i = idx + 1;
            match rule {
                crate::planner::CoordRule::FixedPath => true,
                crate::planner::CoordRule::Semicircle => {
                    x.coordinate(i).coords()[0] <= 1.0 - CONTINUITY_MARGIN
                }
                crate::planner::CoordRule::Geodesic => {
                    x.coordinate(i).dot(y.coordinate(i)) >= -1.0 + CONTINUITY_MARGIN
                }
            }
        }),
        DomainId::Safe { start_flips, end_flips } => {
            let margin_from_minus_e = |p: &SpherePoint| p.coords()[0] >= -1.0 + CONTINUITY_MARGIN;
            (1..=x.n()).all(|i| {
                (start_flips.contains(i) || margin_from_minus_e(x.coordinate(i)))
                    && (end_flips.contains(i) || margin_from_minus_e(y.coordinate(i)))
            })
        }
    }
}

/// Gaussian tangential perturbation of size about `delta`, renormalized.
fn perturb_point(p: &SpherePoint, delta: f64, rng: &mut impl Rng) -> SpherePoint {
    use rand_distr::StandardNormal;
    let coords: Vec<f64> = p
        .coords()
        .iter()
        .map(|&c| c + delta * rng.sample::<f64, _>(StandardNormal))
        .collect();
    SpherePoint::from_unnormalized(p.sphere(), coords).unwrap_or_else(|_| p.clone())
}

fn perturb_in_domain(
    domain: &DomainId,
    x: &ProductPoint,
    y: &ProductPoint,
    delta: f64,
    rng: &mut impl Rng,
) -> Option<(ProductPoint, ProductPoint)> {
    let n = x.n();
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for i in 1..=n {
        let (xi, yi) = (x.coordinate(i), y.coordinate(i));
        match domain {
            DomainId::Odd { antipodal, .. } => {
                if antipodal.contains(i) {
                    let px = perturb_point(xi, delta, rng);
                    ys.push(px.antipode());
                    xs.push(px);
                } else {
                    xs.push(perturb_point(xi, delta, rng));
                    ys.push(perturb_point(yi, delta, rng));
                }
            }
            DomainId::Even { rules } => match rules[i - 1] {
                crate::planner::CoordRule::FixedPath => {
                    xs.push(xi.clone());
                    ys.push(yi.clone());
                }
                crate::planner::CoordRule::Semicircle => {
                    let px = perturb_point(xi, delta, rng);
                    ys.push(px.antipode());
                    xs.push(px);
                }
                crate::planner::CoordRule::Geodesic => {
                    xs.push(perturb_point(xi, delta, rng));
                    ys.push(perturb_point(yi, delta, rng));
                }
            },
            DomainId::Safe { start_flips, end_flips } => {
                xs.push(if start_flips.contains(i) { xi.clone() } else { perturb_point(xi, delta, rng) });
                ys.push(if end_flips.contains(i) { yi.clone() } else { perturb_point(yi, delta, rng) });
            }
        }
    }
    // keep supports: coordinates at the basepoint stay at the basepoint
    let keep_support = |orig: &ProductPoint, perturbed: Vec<SpherePoint>| {
        let pts = perturbed
            .into_iter()
            .enumerate()
            .map(|(idx, p)| {
                if orig.coordinate(idx + 1).dist_to_basepoint() == 0.0 {
                    SpherePoint::basepoint(p.sphere())
                } else {
                    p
                }
            })
            .collect();
        ProductPoint::new(pts).expect("common sphere")
    };
    Some((keep_support(x, xs), keep_support(y, ys)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig8() -> SimplicialComplex {
        SimplicialComplex::from_facets(2, [VertexSet::of(&[1]), VertexSet::of(&[2])]).unwrap()
    }

    fn small_cfg() -> VerifyConfig {
        VerifyConfig::default().with_samples(500).with_time_samples(64)
    }

    #[test]
    fn full_odd_partition_realizes_all_strata() {
        let full = SimplicialComplex::full_simplex(3).unwrap();
        let report = verify_partition(PlannerChoice::Full, &full, Sphere::circle(), &small_cfg());
        assert!(report.complete_and_sound(), "{report:?}");
        assert_eq!(report.expected_domains, 4);
    }

    #[test]
    fn full_even_partition_realizes_all_strata() {
        let full = SimplicialComplex::full_simplex(2).unwrap();
        let report = verify_partition(PlannerChoice::Full, &full, Sphere::even(1), &small_cfg());
        assert!(report.complete_and_sound(), "{report:?}");
        assert_eq!(report.expected_domains, 5);
    }

    #[test]
    fn literal_partition_on_skeleton_respects_odd_bound() {
        let sk = SimplicialComplex::skeleton(5, 2).unwrap();
        let report = verify_partition(PlannerChoice::Literal, &sk, Sphere::circle(), &small_cfg());
        assert_eq!(report.min_allowed_stratum, 1);
        assert!(report.bound_violations.is_empty(), "{:?}", report.bound_violations.first());
        assert_eq!(report.nonempty_strata, report.expected_domains);
    }

    #[test]
    fn literal_even_bound_fails_on_the_figure_eight() {
        // the stated even lower bound 2n - 2d is not sound: the pair
        // x = (-e, e), y = (e, -e) lies in the complex and classifies
        // into stratum 1 < 2
        let report =
            verify_partition(PlannerChoice::Literal, &fig8(), Sphere::even(1), &small_cfg());
        assert_eq!(report.min_allowed_stratum, 2);
        assert!(!report.bound_violations.is_empty());
        let v = &report.bound_violations[0];
        assert!(v.stratum < v.bound);
    }

    #[test]
    fn safe_partition_counts_strata() {
        let report = verify_partition(PlannerChoice::Safe, &fig8(), Sphere::circle(), &small_cfg());
        assert!(report.complete_and_sound(), "{report:?}");
        assert_eq!(report.expected_domains, 3);
    }

    #[test]
    fn safe_planner_is_contained_everywhere() {
        for sphere in [Sphere::circle(), Sphere::even(1)] {
            let report = verify_containment(PlannerChoice::Safe, &fig8(), sphere, &small_cfg());
            assert!(report.violations.is_empty());
        }
    }

    #[test]
    fn literal_planner_escapes_the_figure_eight() {
        let report =
            verify_containment(PlannerChoice::Literal, &fig8(), Sphere::circle(), &small_cfg());
        assert!(!report.violations.is_empty());
        // deterministic: merged in sample order
        let first = &report.violations[0];
        assert!(!fig8().is_face(first.support));
    }

    #[test]
    fn literal_planner_contained_on_union_closed() {
        let full = SimplicialComplex::full_simplex(3).unwrap();
        let report =
            verify_containment(PlannerChoice::Literal, &full, Sphere::circle(), &small_cfg());
        assert!(report.violations.is_empty());
    }

    #[test]
    fn contract_report_on_full_products() {
        for sphere in [Sphere::circle(), Sphere::even(1)] {
            let full = SimplicialComplex::full_simplex(2).unwrap();
            let report =
                verify_endpoints_continuity(PlannerChoice::Full, &full, sphere, &small_cfg());
            assert!(report.max_endpoint_error <= 1e-9, "{report:?}");
            assert!(report.max_sphere_error <= 1e-10, "{report:?}");
            assert!(report.continuity_pairs > 0);
            assert!(report.max_continuity_ratio <= 10.0, "{report:?}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = small_cfg();
        let a = verify_containment(PlannerChoice::Literal, &fig8(), Sphere::circle(), &cfg);
        let b = verify_containment(PlannerChoice::Literal, &fig8(), Sphere::circle(), &cfg);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
