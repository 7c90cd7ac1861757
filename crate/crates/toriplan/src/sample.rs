//! Deterministic random generators for the verification harness and the
//! randomized test suites.
//!
//! Every sample is drawn from its own counter-mode stream of a seeded
//! ChaCha generator, so results are independent of evaluation order and
//! thread count.
//!
//! Sampling conventions: sphere points are normalized Gaussians;
//! in-complex points pick a random face and put random non-basepoint
//! values on its coordinates; directed pairs additionally force the
//! boundary patterns (exactly antipodal coordinates, coordinates pinned
//! to `±e`) that realize extremal strata.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::complex::{Graph, SimplicialComplex, VertexSet};
use crate::planner::ProductPoint;
use crate::sphere::{Sphere, SpherePoint};

/// A ChaCha generator on stream `stream` of the given seed.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform point: a normalized standard Gaussian vector.
pub fn random_point(sphere: Sphere, rng: &mut impl Rng) -> SpherePoint {
    loop {
        let coords: Vec<f64> =
            (0..sphere.ambient_dim()).map(|_| rng.sample(StandardNormal)).collect();
        if let Ok(p) = SpherePoint::from_unnormalized(sphere, coords) {
            return p;
        }
    }
}

/// Uniform product point.
pub fn random_product_point(sphere: Sphere, n: usize, rng: &mut impl Rng) -> ProductPoint {
    ProductPoint::new((0..n).map(|_| random_point(sphere, rng)).collect())
        .expect("common sphere by construction")
}

/// A random face: a uniform subset of a uniformly chosen maximal face.
pub fn random_face(complex: &SimplicialComplex, rng: &mut impl Rng) -> VertexSet {
    let facet = complex.facets()[rng.random_range(0..complex.facets().len())];
    let mut face = VertexSet::empty();
    for i in facet.iter() {
        if rng.random::<bool>() {
            face = face.insert(i);
        }
    }
    face
}

/// A point of the subcomplex: basepoint coordinates outside a random
/// face, random values on it.
pub fn random_in_complex_point(
    complex: &SimplicialComplex,
    sphere: Sphere,
    rng: &mut impl Rng,
) -> ProductPoint {
    let face = random_face(complex, rng);
    point_supported_on(complex.n(), face, sphere, rng)
}

fn point_supported_on(
    n: usize,
    face: VertexSet,
    sphere: Sphere,
    rng: &mut impl Rng,
) -> ProductPoint {
    let points = (1..=n)
        .map(|i| {
            if face.contains(i) {
                random_point(sphere, rng)
            } else {
                SpherePoint::basepoint(sphere)
            }
        })
        .collect();
    ProductPoint::new(points).expect("common sphere by construction")
}

/// A random pair of points of the subcomplex.
pub fn random_in_complex_pair(
    complex: &SimplicialComplex,
    sphere: Sphere,
    rng: &mut impl Rng,
) -> (ProductPoint, ProductPoint) {
    (
        random_in_complex_point(complex, sphere, rng),
        random_in_complex_point(complex, sphere, rng),
    )
}

/// A full-product pair classifying into stratum `j` of the odd planner:
/// exactly `n - j` coordinates are made antipodal.
pub fn directed_full_pair_odd(
    sphere: Sphere,
    n: usize,
    stratum: usize,
    rng: &mut impl Rng,
) -> (ProductPoint, ProductPoint) {
    assert!(stratum <= n);
    let x = random_product_point(sphere, n, rng);
    let points = (1..=n)
        .map(|i| {
            if i <= n - stratum {
                x.coordinate(i).antipode()
            } else {
                random_point(sphere, rng)
            }
        })
        .collect();
    (x, ProductPoint::new(points).expect("common sphere"))
}

/// A full-product pair classifying into stratum `j` of the even planner:
/// rule weights are forced coordinate by coordinate.
pub fn directed_full_pair_even(
    sphere: Sphere,
    n: usize,
    stratum: usize,
    rng: &mut impl Rng,
) -> (ProductPoint, ProductPoint) {
    assert!(stratum <= 2 * n);
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    let mut remaining = stratum;
    for _ in 0..n {
        let weight = remaining.min(2);
        remaining -= weight;
        let e = SpherePoint::basepoint(sphere);
        match weight {
            0 => {
                // the single pair (e, -e)
                xs.push(e.clone());
                ys.push(e.antipode());
            }
            1 => {
                // antipodal with x != e
                let x = random_point(sphere, rng);
                ys.push(x.antipode());
                xs.push(x);
            }
            _ => {
                // generic, non-antipodal with overwhelming probability
                xs.push(random_point(sphere, rng));
                ys.push(random_point(sphere, rng));
            }
        }
    }
    (
        ProductPoint::new(xs).expect("common sphere"),
        ProductPoint::new(ys).expect("common sphere"),
    )
}

/// An in-complex pair exercising the boundary patterns of the cell
/// decomposition: supports are random faces `J`, `K`, shared coordinates
/// are made exactly antipodal, and exclusive coordinates are pinned to
/// `-e` on one side (hence `e` on the other) half of the time.
pub fn directed_in_complex_pair(
    complex: &SimplicialComplex,
    sphere: Sphere,
    rng: &mut impl Rng,
) -> (ProductPoint, ProductPoint) {
    let j = random_face(complex, rng);
    let k = random_face(complex, rng);
    let mut xs = Vec::with_capacity(complex.n());
    let mut ys = Vec::with_capacity(complex.n());
    let e = SpherePoint::basepoint(sphere);
    for i in 1..=complex.n() {
        match (j.contains(i), k.contains(i)) {
            (true, true) => {
                let x = random_point(sphere, rng);
                let y = if rng.random::<bool>() { x.antipode() } else { random_point(sphere, rng) };
                xs.push(x);
                ys.push(y);
            }
            (true, false) => {
                let x =
                    if rng.random::<bool>() { e.antipode() } else { random_point(sphere, rng) };
                xs.push(x);
                ys.push(e.clone());
            }
            (false, true) => {
                let y =
                    if rng.random::<bool>() { e.antipode() } else { random_point(sphere, rng) };
                xs.push(e.clone());
                ys.push(y);
            }
            (false, false) => {
                xs.push(e.clone());
                ys.push(e.clone());
            }
        }
    }
    (
        ProductPoint::new(xs).expect("common sphere"),
        ProductPoint::new(ys).expect("common sphere"),
    )
}

/// A random complex: a handful of random subsets of `[n]`, reduced to
/// their antichain of maximal elements.
pub fn random_complex(n: usize, rng: &mut impl Rng) -> SimplicialComplex {
    let facet_count = rng.random_range(1..=(n / 2 + 2).max(2));
    let density = rng.random_range(0.25..0.75);
    let facets = (0..facet_count)
        .map(|_| {
            let mut f = VertexSet::empty();
            for i in 1..=n {
                if rng.random::<f64>() < density {
                    f = f.insert(i);
                }
            }
            f
        })
        .collect::<Vec<_>>();
    SimplicialComplex::from_facets(n, facets).expect("indices in range by construction")
}

/// An Erdős–Rényi style random simple graph.
pub fn random_graph(n: usize, edge_prob: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n).expect("n within range");
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.random::<f64>() < edge_prob {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planner::membership;
    use crate::tolerances::TAU_CELL;

    #[test]
    fn streams_are_deterministic_and_independent() {
        let a: Vec<u64> = {
            let mut r = stream_rng(7, 3);
            (0..4).map(|_| r.random()).collect()
        };
        let b: Vec<u64> = {
            let mut r = stream_rng(7, 3);
            (0..4).map(|_| r.random()).collect()
        };
        let c: Vec<u64> = {
            let mut r = stream_rng(7, 4);
            (0..4).map(|_| r.random()).collect()
        };
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn random_points_are_unit() {
        let mut rng = stream_rng(0, 0);
        for sphere in [Sphere::odd(1), Sphere::odd(2), Sphere::even(1), Sphere::even(2)] {
            for _ in 0..50 {
                let p = random_point(sphere, &mut rng);
                let n: f64 = p.coords().iter().map(|c| c * c).sum::<f64>().sqrt();
                assert!((n - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn in_complex_samples_are_members() {
        let mut rng = stream_rng(1, 0);
        for _ in 0..50 {
            let x = random_complex(6, &mut rng);
            let (a, b) = random_in_complex_pair(&x, Sphere::circle(), &mut rng);
            assert!(membership(&x, &a, TAU_CELL));
            assert!(membership(&x, &b, TAU_CELL));
            let (a, b) = directed_in_complex_pair(&x, Sphere::even(1), &mut rng);
            assert!(membership(&x, &a, TAU_CELL));
            assert!(membership(&x, &b, TAU_CELL));
        }
    }

    #[test]
    fn directed_full_pairs_hit_requested_strata() {
        use crate::planner::{classify_even, classify_odd};
        use crate::tolerances::TAU_ANTI;
        let mut rng = stream_rng(2, 0);
        for n in 1..=4usize {
            for j in 0..=n {
                let (x, y) = directed_full_pair_odd(Sphere::circle(), n, j, &mut rng);
                assert_eq!(classify_odd(&x, &y, TAU_ANTI).stratum(), j);
            }
            for j in 0..=2 * n {
                let (x, y) = directed_full_pair_even(Sphere::even(1), n, j, &mut rng);
                assert_eq!(classify_even(&x, &y, TAU_ANTI).stratum(), j);
            }
        }
    }
}
