//! Closed-form topological complexity for the standard families, each
//! cross-checked against the combinatorial model.
//!
//! Every answer is computed twice: once by the published formula and once
//! by running the `z`/`d` machinery on the homotopy model (a skeleton, a
//! flag complex, a product, or a wedge).  The two must agree, and the
//! constructor asserts that they do.  Arrangements are represented by
//! exact rational affine functionals only for the general-position
//! predicate; their complements are never triangulated — the models come
//! from the classical homotopy equivalences, taken as inputs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{ComplexError, Graph, Parity, SimplicialComplex, TcReport};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ApplicationError {
    #[error("parameters must satisfy {constraint}, got n = {n}, l = {l}")]
    ParameterRange { constraint: &'static str, n: usize, l: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Which closed formula produced an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaTag {
    /// Full product of odd spheres: `n + 1`.
    FullProduct,
    /// General position arrangement of `n` hyperplanes in dimension `l`:
    /// `min(n + 1, 2l + 1)`.
    GeneralPosition,
    /// Generic central arrangement: `min(n + 1, 2l)`.
    GenericCentral,
    /// Redundant codimension-`k` thickening: `min(n + 1, 2l + 1)`,
    /// independent of `k`.
    RedundantSubspace,
    /// Open-string configuration space on `n` points: `n + 2`.
    OpenString,
    /// Right-angled Artin complex of a graph: `z(graph) + 1`.
    RightAngledArtin,
    /// Wedge: `max(tc1, tc2, cat1 + cat2 - 1)`.
    Wedge,
}

impl fmt::Display for FormulaTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormulaTag::FullProduct => "full-product: n+1",
            FormulaTag::GeneralPosition => "general-position: min(n+1, 2l+1)",
            FormulaTag::GenericCentral => "generic-central: min(n+1, 2l)",
            FormulaTag::RedundantSubspace => "redundant-subspace: min(n+1, 2l+1)",
            FormulaTag::OpenString => "open-string: n+2",
            FormulaTag::RightAngledArtin => "right-angled-artin: z+1",
            FormulaTag::Wedge => "wedge: max(tc1, tc2, cat1+cat2-1)",
        };
        write!(f, "{s}")
    }
}

/// A topological complexity answer with its model and provenance.
#[derive(Debug, Clone, Serialize)]
pub struct TcAnswer {
    pub tc: usize,
    pub tag: FormulaTag,
    /// Report of the model computation that cross-checks the formula.
    pub report: TcReport,
    /// Ground-set size and facets of the model complex.
    pub model_n: usize,
    #[serde(skip)]
    pub model: SimplicialComplex,
}

impl TcAnswer {
    fn checked(
        formula: usize,
        tag: FormulaTag,
        model: SimplicialComplex,
        parity: Parity,
        k: u32,
    ) -> TcAnswer {
        let report = model.tc_with_k(parity, k);
        assert_eq!(
            report.tc, formula,
            "model disagrees with the {tag} formula on n={} ({report:?})",
            model.n()
        );
        TcAnswer { tc: formula, tag, report, model_n: model.n(), model }
    }
}

/// `tc` of the complex associated to a right-angled Artin group on the
/// graph, with coordinate spheres `S^{2k-1}`.  The value `z(graph) + 1`
/// (most vertices covered by two cliques, plus one) does not depend on
/// `k`.
pub fn raag_tc(graph: &Graph, k: u32) -> TcAnswer {
    let z = graph_cover_number(graph);
    TcAnswer::checked(
        z + 1,
        FormulaTag::RightAngledArtin,
        SimplicialComplex::flag_complex(graph),
        Parity::Odd,
        k,
    )
}

/// Most vertices covered by exactly two cliques, computed on the graph
/// side from the maximal-clique list.
pub fn graph_cover_number(graph: &Graph) -> usize {
    let cliques = graph.maximal_cliques();
    let mut best = 0;
    for a in &cliques {
        for b in &cliques {
            best = best.max(a.union(*b).len());
        }
    }
    best
}

/// Complement of `n` general-position hyperplanes in complex dimension
/// `l`: the model is the full torus for `n <= l` and the `l`-skeleton of
/// the `n`-torus otherwise; `tc = min(n + 1, 2l + 1)`.
pub fn general_position_tc(n: usize, l: usize) -> Result<TcAnswer, ApplicationError> {
    if n < 1 || l < 1 {
        return Err(ApplicationError::ParameterRange { constraint: "n >= 1 and l >= 1", n, l });
    }
    let model = SimplicialComplex::skeleton(n, l.min(n))?;
    let formula = (n + 1).min(2 * l + 1);
    Ok(TcAnswer::checked(formula, FormulaTag::GeneralPosition, model, Parity::Odd, 1))
}

/// Complement of a generic central arrangement of `n >= l` hyperplanes in
/// dimension `l`: deconing gives (general position in dimension `l - 1`)
/// times a circle; `tc = min(n + 1, 2l)`.
pub fn generic_central_tc(n: usize, l: usize) -> Result<TcAnswer, ApplicationError> {
    if l < 1 || n < l {
        return Err(ApplicationError::ParameterRange { constraint: "n >= l >= 1", n, l });
    }
    let affine = SimplicialComplex::skeleton(n - 1, (l - 1).min(n - 1))?;
    let circle = SimplicialComplex::full_simplex(1)?;
    let model = affine.product(&circle)?;
    let formula = (n + 1).min(2 * l);
    Ok(TcAnswer::checked(formula, FormulaTag::GenericCentral, model, Parity::Odd, 1))
}

/// Complement of the codimension-`k` redundant thickening of a
/// general-position arrangement: same combinatorial model with coordinate
/// spheres `S^{2k-1}`, so the answer is independent of `k >= 1`.
pub fn redundant_subspace_tc(n: usize, l: usize, k: u32) -> Result<TcAnswer, ApplicationError> {
    if n < 1 || l < 1 || k < 1 {
        return Err(ApplicationError::ParameterRange { constraint: "n, l, k >= 1", n, l });
    }
    let model = SimplicialComplex::skeleton(n, l.min(n))?;
    let formula = (n + 1).min(2 * l + 1);
    Ok(TcAnswer::checked(formula, FormulaTag::RedundantSubspace, model, Parity::Odd, k))
}

/// An affine hyperplane `{x : normal · x = offset}` with exact rational
/// data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<BigRational>,
    pub offset: BigRational,
}

impl Hyperplane {
    pub fn from_integers(normal: &[i64], offset: i64) -> Self {
        Hyperplane {
            normal: normal.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(),
            offset: BigRational::from_integer(BigInt::from(offset)),
        }
    }

    /// Proportional as affine functionals (same hyperplane).
    fn proportional_to(&self, other: &Hyperplane) -> bool {
        // rows (normal, offset) and (normal', offset') are proportional
        // iff the 2 x (l+1) matrix has rank <= 1
        let a: Vec<BigRational> =
            self.normal.iter().cloned().chain([self.offset.clone()]).collect();
        let b: Vec<BigRational> =
            other.normal.iter().cloned().chain([other.offset.clone()]).collect();
        for i in 0..a.len() {
            for j in (i + 1)..a.len() {
                if &a[i] * &b[j] != &a[j] * &b[i] {
                    return false;
                }
            }
        }
        true
    }
}

/// A finite arrangement of affine hyperplanes in dimension `ambient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    ambient: usize,
    hyperplanes: Vec<Hyperplane>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("hyperplane {index} has {got} coefficients, ambient dimension is {ambient}")]
    DimensionMismatch { index: usize, ambient: usize, got: usize },
    #[error("hyperplane {index} has a zero normal vector")]
    ZeroNormal { index: usize },
    #[error("hyperplanes {a} and {b} coincide")]
    RepeatedHyperplane { a: usize, b: usize },
}

impl Arrangement {
    pub fn new(ambient: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self, ArrangementError> {
        for (index, h) in hyperplanes.iter().enumerate() {
            if h.normal.len() != ambient {
                return Err(ArrangementError::DimensionMismatch {
                    index,
                    ambient,
                    got: h.normal.len(),
                });
            }
            if h.normal.iter().all(Zero::is_zero) {
                return Err(ArrangementError::ZeroNormal { index });
            }
        }
        for a in 0..hyperplanes.len() {
            for b in (a + 1)..hyperplanes.len() {
                if hyperplanes[a].proportional_to(&hyperplanes[b]) {
                    return Err(ArrangementError::RepeatedHyperplane { a, b });
                }
            }
        }
        Ok(Arrangement { ambient, hyperplanes })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }
}

/// Exact rank of a rational matrix by Gaussian elimination.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    let mut col = 0;
    while col < cols && rank < rows.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (entry, p) in row.iter_mut().zip(&pivot_row) {
                *entry -= &factor * p;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// True when every `m <= l` of the hyperplanes meet in codimension `m`
/// (independent normals, consistent system) and every `l + 1` of them
/// have empty intersection.  Exact rational arithmetic throughout.
pub fn is_general_position(arrangement: &Arrangement) -> bool {
    use itertools::Itertools;
    let l = arrangement.ambient;
    let planes = &arrangement.hyperplanes;
    for m in 1..=l.min(planes.len()) {
        for subset in planes.iter().combinations(m) {
            let normals: Vec<Vec<BigRational>> =
                subset.iter().map(|h| h.normal.clone()).collect();
            if rank(normals) != m {
                return false;
            }
            let augmented: Vec<Vec<BigRational>> = subset
                .iter()
                .map(|h| h.normal.iter().cloned().chain([h.offset.clone()]).collect())
                .collect();
            if rank(augmented) != m {
                return false;
            }
        }
    }
    if planes.len() > l {
        for subset in planes.iter().combinations(l + 1) {
            let normals: Vec<Vec<BigRational>> =
                subset.iter().map(|h| h.normal.clone()).collect();
            let augmented: Vec<Vec<BigRational>> = subset
                .iter()
                .map(|h| h.normal.iter().cloned().chain([h.offset.clone()]).collect())
                .collect();
            // empty intersection: the offsets are inconsistent
            if rank(augmented) == rank(normals) {
                return false;
            }
        }
    }
    true
}

/// The arrangement of `n + 1` hyperplanes in dimension `n` cut out by
/// `y_1 (y_n - 1) (y_1 - y_2) ⋯ (y_{n-1} - y_n)`, whose redundant
/// thickening models the open-string configuration space (consecutive
/// points distinct, first point away from the origin, last away from the
/// all-ones point).
pub fn open_string_arrangement(n: usize) -> Arrangement {
    assert!(n >= 1);
    let mut hyperplanes = Vec::with_capacity(n + 1);
    let mut normal = vec![0i64; n];
    normal[0] = 1;
    hyperplanes.push(Hyperplane::from_integers(&normal, 0)); // y_1 = 0
    let mut normal = vec![0i64; n];
    normal[n - 1] = 1;
    hyperplanes.push(Hyperplane::from_integers(&normal, 1)); // y_n = 1
    for i in 0..n - 1 {
        let mut normal = vec![0i64; n];
        normal[i] = 1;
        normal[i + 1] = -1;
        hyperplanes.push(Hyperplane::from_integers(&normal, 0)); // y_i = y_{i+1}
    }
    Arrangement::new(n, hyperplanes).expect("open-string hyperplanes are distinct")
}

/// `tc` of the open-string configuration space on `n` points: the
/// associated arrangement is checked to be in general position and the
/// general-position formula gives `n + 2`.
pub fn open_string_tc(n: usize) -> Result<TcAnswer, ApplicationError> {
    let arrangement = open_string_arrangement(n);
    assert!(
        is_general_position(&arrangement),
        "open-string arrangement on {n} points must be in general position"
    );
    let mut answer = general_position_tc(arrangement.len(), arrangement.ambient())?;
    answer.tag = FormulaTag::OpenString;
    debug_assert_eq!(answer.tc, n + 2);
    Ok(answer)
}

/// `tc` of a wedge of odd-parity subcomplexes: the formula
/// `max(tc1, tc2, cat1 + cat2 - 1)` with `cat = d + 1`, cross-checked
/// against the wedge model.
pub fn wedge_tc(
    x1: &SimplicialComplex,
    x2: &SimplicialComplex,
) -> Result<TcAnswer, ApplicationError> {
    let (r1, r2) = (x1.tc(Parity::Odd), x2.tc(Parity::Odd));
    let formula = r1.tc.max(r2.tc).max(r1.d + r2.d + 1);
    let model = x1.wedge(x2)?;
    Ok(TcAnswer::checked(formula, FormulaTag::Wedge, model, Parity::Odd, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::VertexSet;

    #[test]
    fn raag_examples() {
        let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(raag_tc(&p3, 1).tc, 4);

        let edgeless = Graph::new(2).unwrap();
        assert_eq!(raag_tc(&edgeless, 1).tc, 3);

        for n in 1..=6 {
            let mut g = Graph::new(n).unwrap();
            for u in 1..=n {
                for v in (u + 1)..=n {
                    g.add_edge(u, v).unwrap();
                }
            }
            assert_eq!(raag_tc(&g, 1).tc, n + 1);
            assert_eq!(raag_tc(&g, 3).tc, n + 1);
        }
    }

    #[test]
    fn general_position_examples() {
        assert_eq!(general_position_tc(5, 2).unwrap().tc, 5);
        assert_eq!(general_position_tc(2, 3).unwrap().tc, 3);
        assert_eq!(general_position_tc(8, 2).unwrap().tc, 5);
        assert!(general_position_tc(0, 2).is_err());
    }

    #[test]
    fn generic_central_examples() {
        assert_eq!(generic_central_tc(4, 2).unwrap().tc, 4);
        assert_eq!(generic_central_tc(10, 3).unwrap().tc, 6);
        assert!(generic_central_tc(2, 3).is_err());
        for l in 1..=5 {
            for n in l..=10 {
                assert_eq!(generic_central_tc(n, l).unwrap().tc, (n + 1).min(2 * l));
            }
        }
    }

    #[test]
    fn redundant_examples_are_k_independent() {
        assert_eq!(redundant_subspace_tc(5, 2, 3).unwrap().tc, 5);
        assert_eq!(redundant_subspace_tc(2, 3, 2).unwrap().tc, 3);
        for k in 1..=4 {
            assert_eq!(redundant_subspace_tc(6, 2, k).unwrap().tc, 5);
        }
    }

    #[test]
    fn open_string_examples() {
        let a = open_string_arrangement(2);
        assert_eq!(a.len(), 3);
        assert_eq!(a.ambient(), 2);
        assert!(is_general_position(&a));
        assert_eq!(open_string_tc(2).unwrap().tc, 4);
        assert_eq!(open_string_tc(3).unwrap().tc, 5);
        assert_eq!(open_string_tc(1).unwrap().tc, 3);
    }

    #[test]
    fn general_position_negatives() {
        // two parallel distinct lines in dimension 2
        let parallel = Arrangement::new(
            2,
            vec![Hyperplane::from_integers(&[1, 0], 0), Hyperplane::from_integers(&[1, 0], 1)],
        )
        .unwrap();
        assert!(!is_general_position(&parallel));

        // three concurrent lines through the origin in dimension 2
        let concurrent = Arrangement::new(
            2,
            vec![
                Hyperplane::from_integers(&[1, 0], 0),
                Hyperplane::from_integers(&[0, 1], 0),
                Hyperplane::from_integers(&[1, 1], 0),
            ],
        )
        .unwrap();
        assert!(!is_general_position(&concurrent));
    }

    #[test]
    fn arrangement_rejects_repeats() {
        let err = Arrangement::new(
            2,
            vec![Hyperplane::from_integers(&[1, 1], 1), Hyperplane::from_integers(&[2, 2], 2)],
        )
        .unwrap_err();
        assert_eq!(err, ArrangementError::RepeatedHyperplane { a: 0, b: 1 });
    }

    #[test]
    fn wedge_examples() {
        let circle = SimplicialComplex::full_simplex(1).unwrap();
        assert_eq!(wedge_tc(&circle, &circle).unwrap().tc, 3);

        let torus2 = SimplicialComplex::full_simplex(2).unwrap();
        assert_eq!(wedge_tc(&torus2, &circle).unwrap().tc, 4);

        let fig8 =
            SimplicialComplex::from_facets(2, [VertexSet::of(&[1]), VertexSet::of(&[2])]).unwrap();
        let point = SimplicialComplex::point(0);
        assert_eq!(wedge_tc(&fig8, &point).unwrap().tc, fig8.tc(Parity::Odd).tc);
    }
}
