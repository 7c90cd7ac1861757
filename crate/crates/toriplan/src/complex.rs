//! Subcomplexes of the standard CW-decomposition of a product of spheres,
//! encoded combinatorially.
//!
//! A subcomplex is determined by a downward-closed family of subsets of
//! `[n] = {1,..,n}` (the supports of its cells) and is stored by the
//! antichain of its maximal faces.  The two invariants that control
//! topological complexity are
//!
//! - `d(X)`: the largest cardinality of a face, and
//! - `z(X)`: the largest value of `|J| + |K|` over pairs of *disjoint*
//!   faces `J`, `K`.
//!
//! `z` is computable from maximal faces alone: for maximal faces `M1`,
//! `M2`, the pair `(M1 \ M2, M2)` is a disjoint pair of faces covering
//! `M1 ∪ M2`, and conversely any disjoint pair is dominated by some such
//! pair, so `z(X) = max |M1 ∪ M2|`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// Ground sets are capped so a vertex set fits in a machine word.
pub const MAX_GROUND: usize = 63;

/// Cap for the exhaustive face-pair search.
pub const MAX_EXHAUSTIVE: usize = 20;

/// Errors from complex and graph construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex index {index} out of range for ground set [{n}]")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("ground set size {n} exceeds the supported maximum {MAX_GROUND}")]
    GroundSetTooLarge { n: usize },
    #[error("skeleton dimension {dim} out of range 0..={n}")]
    SkeletonOutOfRange { dim: usize, n: usize },
    #[error("exhaustive search requires n <= {MAX_EXHAUSTIVE}, got {n}")]
    ExhaustiveCap { n: usize },
    #[error("loops are not allowed: edge ({v}, {v})")]
    LoopEdge { v: usize },
}

/// Whether the coordinate spheres are odd- or even-dimensional.  The `tc`
/// formula switches between the two regimes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Odd => write!(f, "odd"),
            Parity::Even => write!(f, "even"),
        }
    }
}

/// A subset of `[n] = {1,..,n}` with `n <= 63`, stored as a bitmask.
/// Element `i` occupies bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn empty() -> Self {
        Self::EMPTY
    }

    /// The full set `{1,..,n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == 0 {
            Self::EMPTY
        } else {
            VertexSet { bits: u64::MAX >> (64 - n) }
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&i));
        VertexSet { bits: 1 << (i - 1) }
    }

    /// Builds a set from 1-based indices, validating against a ground set.
    pub fn from_indices<I>(indices: I, n: usize) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > n {
                return Err(ComplexError::IndexOutOfRange { index: i, n });
            }
            bits |= 1 << (i - 1);
        }
        Ok(VertexSet { bits })
    }

    /// Test/doc convenience; panics on indices outside `1..=63`.
    pub fn of(indices: &[usize]) -> Self {
        Self::from_indices(indices.iter().copied(), MAX_GROUND).expect("index out of range")
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= MAX_GROUND && self.bits >> (i - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn insert(self, i: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&i));
        VertexSet { bits: self.bits | 1 << (i - 1) }
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet { bits: self.bits | other.bits }
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet { bits: self.bits & other.bits }
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet { bits: self.bits & !other.bits }
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Iterates members in increasing order (1-based).
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

fn fmt_as_set(set: &VertexSet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    for (k, i) in set.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{i}")?;
    }
    write!(f, "}}")
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_as_set(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_as_set(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A disjoint pair of faces realizing `z(X) = |first| + |second|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DisjointCover {
    pub size: usize,
    pub first: VertexSet,
    pub second: VertexSet,
}

/// Topological complexity of a complex together with the data the formula
/// was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TcReport {
    /// Number of local domains in an optimal motion planner.
    pub tc: usize,
    /// Largest total size of two disjoint faces.
    pub z: usize,
    /// Largest face size.
    pub d: usize,
    /// Disjoint faces witnessing the formula (for odd parity these realize
    /// `z`; for even parity the first component is a maximum face).
    pub witness: (VertexSet, VertexSet),
    pub parity: Parity,
    /// Sphere size parameter: coordinate spheres are `S^{2k-1}` (odd) or
    /// `S^{2k}` (even).  The value of `tc` does not depend on it.
    pub k: u32,
}

/// A downward-closed family of subsets of `[n]`, stored by its antichain of
/// maximal faces.  The empty complex is `{∅}`; the empty set is a face of
/// every complex (it indexes the basepoint cell).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from an arbitrary family of faces; the stored
    /// facets are the inclusion-maximal inputs, deduplicated and sorted.
    pub fn from_facets<I>(n: usize, facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_GROUND {
            return Err(ComplexError::GroundSetTooLarge { n });
        }
        let ground = VertexSet::full(n);
        let mut sets: Vec<VertexSet> = Vec::new();
        for f in facets {
            if !f.is_subset_of(ground) {
                let index = f.difference(ground).iter().next().unwrap_or(0);
                return Err(ComplexError::IndexOutOfRange { index, n });
            }
            sets.push(f);
        }
        let mut maximal: Vec<VertexSet> = Vec::new();
        for &f in &sets {
            if sets.iter().any(|&g| f != g && f.is_subset_of(g)) {
                continue;
            }
            if !maximal.contains(&f) {
                maximal.push(f);
            }
        }
        if maximal.is_empty() {
            maximal.push(VertexSet::empty());
        }
        maximal.sort();
        Ok(SimplicialComplex { n, facets: maximal })
    }

    /// The complex whose only face is the empty set.
    pub fn point(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VertexSet::empty()] }
    }

    /// All subsets of `[n]` of size `dim` as maximal faces.  `dim = n`
    /// yields the full simplex, `dim = 0` the point complex.
    pub fn skeleton(n: usize, dim: usize) -> Result<Self, ComplexError> {
        if n > MAX_GROUND {
            return Err(ComplexError::GroundSetTooLarge { n });
        }
        if dim > n {
            return Err(ComplexError::SkeletonOutOfRange { dim, n });
        }
        let mut facets = Vec::new();
        subsets_of_size(VertexSet::full(n), dim, &mut facets);
        facets.sort();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn full_simplex(n: usize) -> Result<Self, ComplexError> {
        Self::skeleton(n, n)
    }

    /// The complex whose faces are the cliques of `graph`; maximal faces
    /// are the maximal cliques.
    pub fn flag_complex(graph: &Graph) -> Self {
        let mut facets = graph.maximal_cliques();
        facets.sort();
        SimplicialComplex { n: graph.n(), facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_face(&self, set: VertexSet) -> bool {
        self.facets.iter().any(|&m| set.is_subset_of(m))
    }

    /// Largest face size, `d(X)`.  The category of the complex is `d + 1`.
    pub fn max_face_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// A maximum face, smallest bit pattern among ties.
    pub fn max_face(&self) -> VertexSet {
        let d = self.max_face_size();
        *self
            .facets
            .iter()
            .find(|f| f.len() == d)
            .expect("facet list is never empty")
    }

    /// `z(X)` with a disjoint witness, as a maximum of `|M1 ∪ M2|` over
    /// ordered pairs of maximal faces.  Ties are broken by the smallest
    /// `(first, second)` bit patterns, so the result is deterministic.
    pub fn disjoint_cover(&self) -> DisjointCover {
        let mut best = DisjointCover {
            size: 0,
            first: VertexSet::empty(),
            second: VertexSet::empty(),
        };
        let mut have = false;
        for &a in &self.facets {
            for &b in &self.facets {
                let size = a.union(b).len();
                let cand = DisjointCover { size, first: a.difference(b), second: b };
                let better = !have
                    || size > best.size
                    || (size == best.size && (cand.first, cand.second) < (best.first, best.second));
                if better {
                    best = cand;
                    have = true;
                }
            }
        }
        best
    }

    /// Independent oracle for [`Self::disjoint_cover`]: scans pairs from
    /// the explicit face list.  Faces are sorted by decreasing size, so for
    /// each left face the first disjoint partner is the best one, and the
    /// scan stops once no remaining pair can improve the maximum.
    pub fn disjoint_cover_exhaustive(&self) -> Result<usize, ComplexError> {
        if self.n > MAX_EXHAUSTIVE {
            return Err(ComplexError::ExhaustiveCap { n: self.n });
        }
        let mut faces = self.faces();
        faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let largest = faces[0].len();
        let mut best = 0;
        for &a in &faces {
            if a.len() + largest <= best {
                break;
            }
            for &b in &faces {
                if a.len() + b.len() <= best {
                    break;
                }
                if a.is_disjoint_from(b) {
                    best = a.len() + b.len();
                    break;
                }
            }
        }
        Ok(best)
    }

    /// Every face, i.e. the downward closure of the facets.  Exponential in
    /// the facet sizes; meant for small ground sets.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
        let mut stack: Vec<VertexSet> = self.facets.clone();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            for i in f.iter() {
                stack.push(f.difference(VertexSet::singleton(i)));
            }
        }
        seen.into_iter().collect()
    }

    /// `counts[k]` = number of faces with `k` elements; `counts[0] = 1`.
    pub fn face_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.max_face_size() + 1];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        counts
    }

    /// True when the union of any two faces is again a face; equivalently,
    /// when there is a single maximal face.
    pub fn is_union_closed(&self) -> bool {
        self.facets.len() == 1
    }

    /// Topological complexity for coordinate spheres `S^{2k-1}` / `S^{2k}`
    /// with `k = 1` (circles resp. 2-spheres).
    pub fn tc(&self, parity: Parity) -> TcReport {
        self.tc_with_k(parity, 1)
    }

    /// Topological complexity: `z + 1` local domains for odd parity,
    /// `2d + 1` for even parity.  The value does not depend on `k`.
    pub fn tc_with_k(&self, parity: Parity, k: u32) -> TcReport {
        let cover = self.disjoint_cover();
        let d = self.max_face_size();
        match parity {
            Parity::Odd => TcReport {
                tc: cover.size + 1,
                z: cover.size,
                d,
                witness: (cover.first, cover.second),
                parity,
                k,
            },
            Parity::Even => TcReport {
                tc: 2 * d + 1,
                z: cover.size,
                d,
                witness: (self.max_face(), VertexSet::empty()),
                parity,
                k,
            },
        }
    }

    /// Product complex on `[n1 + n2]`: faces are `J1 ⊔ (J2 shifted by n1)`.
    pub fn product(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(ComplexError::GroundSetTooLarge { n });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a.union(shift(b, self.n)));
            }
        }
        SimplicialComplex::from_facets(n, facets)
    }

    /// Wedge on `[n1 + n2]`: faces of either factor, glued at the empty
    /// face (the basepoint cell).
    pub fn wedge(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(ComplexError::GroundSetTooLarge { n });
        }
        let facets = self
            .facets
            .iter()
            .copied()
            .chain(other.facets.iter().map(|&b| shift(b, self.n)))
            .collect::<Vec<_>>();
        SimplicialComplex::from_facets(n, facets)
    }
}

fn shift(set: VertexSet, by: usize) -> VertexSet {
    VertexSet::from_bits(set.bits() << by)
}

fn subsets_of_size(ground: VertexSet, size: usize, out: &mut Vec<VertexSet>) {
    let members = ground.to_vec();
    if size > members.len() {
        return;
    }
    let mut current = VertexSet::empty();
    fn rec(
        members: &[usize],
        from: usize,
        left: usize,
        current: &mut VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if left == 0 {
            out.push(*current);
            return;
        }
        for idx in from..=members.len() - left {
            let old = *current;
            *current = current.insert(members[idx]);
            rec(members, idx + 1, left - 1, current, out);
            *current = old;
        }
    }
    rec(&members, 0, size, &mut current, out);
}

/// A finite simple graph on `{1,..,n}` with bitset adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, ComplexError> {
        if n > MAX_GROUND {
            return Err(ComplexError::GroundSetTooLarge { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), ComplexError> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(ComplexError::IndexOutOfRange { index: w, n: self.n });
            }
        }
        if u == v {
            return Err(ComplexError::LoopEdge { v });
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v - 1])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in (u + 1)..=self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Maximal cliques via pivoted recursion.  Exact; the pivot is the
    /// vertex with most candidate neighbors, which prunes the branching.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let all = VertexSet::full(self.n).bits();
        self.bron_kerbosch(0, all, 0, &mut out);
        if out.is_empty() {
            out.push(VertexSet::empty());
        }
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
        if p == 0 && x == 0 {
            out.push(VertexSet::from_bits(r));
            return;
        }
        let pivot = {
            let mut best = 0usize;
            let mut best_count = usize::MAX;
            let mut rest = p | x;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let count = (p & !self.adj[v]).count_ones() as usize;
                if best_count == usize::MAX || count < best_count {
                    best = v;
                    best_count = count;
                }
            }
            best
        };
        let mut candidates = p & !self.adj[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            let vb = 1u64 << v;
            candidates &= candidates - 1;
            self.bron_kerbosch(r | vb, p & self.adj[v], x & self.adj[v], out);
            p &= !vb;
            x |= vb;
        }
    }
}
