//! Exact-rational square-free monomial algebras, their tensor squares, and
//! zero-divisor cup-length certificates.
//!
//! The cohomology of a subcomplex `X` is the quotient of the free graded
//! algebra on generators `e_1,..,e_n` of a common degree `g` by the
//! monomials indexed by non-faces of `X`.  For odd `g` the generators
//! anticommute (an exterior algebra); for even `g` they commute but stay
//! square-free.  All arithmetic here is exact: coefficients are big
//! rationals and no floating point appears anywhere in this module.
//!
//! The certificates revolve around the basic zero-divisors
//! `ē_i = 1⊗e_i - e_i⊗1`: a product of `z` of them is nonzero in the
//! reduced tensor square exactly when some partition of the index set into
//! two faces survives, which ties the cup-length bound to the combinatorial
//! invariant `z(X)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::complex::{Parity, SimplicialComplex, VertexSet, MAX_GROUND};

/// Cap for the shuffle expansion (the result has `2^z` terms).
pub const MAX_SHUFFLE: usize = 16;

/// Cap for the exhaustive certificate search.
pub const MAX_ZCL_EXHAUSTIVE: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("gradings differ: {0} vs {1}")]
    GradingMismatch(usize, usize),
    #[error("generator index {index} out of range 1..={MAX_GROUND}")]
    IndexOutOfRange { index: usize },
    #[error("size {got} exceeds cap {cap}")]
    SizeCap { got: usize, cap: usize },
}

/// Common degree of the generators.  Only its parity affects signs: odd
/// degree generators anticommute, even degree generators commute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grading {
    degree: usize,
}

impl Grading {
    pub fn new(degree: usize) -> Self {
        assert!(degree >= 1);
        Grading { degree }
    }

    /// Degree `2k - 1` generators (products of odd spheres `S^{2k-1}`).
    pub fn odd(k: u32) -> Self {
        Grading { degree: 2 * k as usize - 1 }
    }

    /// Degree `2k` generators (products of even spheres `S^{2k}`).
    pub fn even(k: u32) -> Self {
        Grading { degree: 2 * k as usize }
    }

    pub fn from_parity(parity: Parity, k: u32) -> Self {
        match parity {
            Parity::Odd => Grading::odd(k),
            Parity::Even => Grading::even(k),
        }
    }

    pub fn degree(self) -> usize {
        self.degree
    }

    pub fn parity(self) -> Parity {
        if self.degree % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    fn anticommutes(self) -> bool {
        self.degree % 2 == 1
    }
}

/// Sign from merging the sorted monomial `a` past `b`: `(-1)^inv` with
/// `inv` the number of pairs `(i, j) ∈ a × b` with `i > j`, when the
/// generators anticommute; `+1` otherwise.  `None` when the monomials
/// share an index (square-free product vanishes).
fn merge_sign(a: VertexSet, b: VertexSet, grading: Grading) -> Option<i32> {
    if !a.is_disjoint_from(b) {
        return None;
    }
    if !grading.anticommutes() {
        return Some(1);
    }
    let mut inversions = 0u32;
    for i in a.iter() {
        // members of b below i
        let below = b.bits() & ((1u64 << (i - 1)) - 1);
        inversions += below.count_ones();
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An element of the free square-free algebra: a finite rational
/// combination of monomials `e_A` indexed by vertex sets.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    grading: Grading,
    terms: BTreeMap<VertexSet, BigRational>,
}

impl AlgebraElement {
    pub fn zero(grading: Grading) -> Self {
        AlgebraElement { grading, terms: BTreeMap::new() }
    }

    pub fn one(grading: Grading) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(VertexSet::empty(), BigRational::one());
        AlgebraElement { grading, terms }
    }

    pub fn generator(i: usize, grading: Grading) -> Result<Self, AlgebraError> {
        if i == 0 || i > MAX_GROUND {
            return Err(AlgebraError::IndexOutOfRange { index: i });
        }
        let mut terms = BTreeMap::new();
        terms.insert(VertexSet::singleton(i), BigRational::one());
        Ok(AlgebraElement { grading, terms })
    }

    /// The monomial `e_A` with coefficient one.
    pub fn monomial(set: VertexSet, grading: Grading) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(set, BigRational::one());
        AlgebraElement { grading, terms }
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (VertexSet, &BigRational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coefficient(&self, set: VertexSet) -> BigRational {
        self.terms.get(&set).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        check_grading(self.grading, other.grading)?;
        let mut terms = self.terms.clone();
        for (&set, coeff) in &other.terms {
            insert_term(&mut terms, set, coeff.clone());
        }
        Ok(AlgebraElement { grading: self.grading, terms })
    }

    pub fn scale(&self, factor: &BigRational) -> AlgebraElement {
        if factor.is_zero() {
            return AlgebraElement::zero(self.grading);
        }
        AlgebraElement {
            grading: self.grading,
            terms: self.terms.iter().map(|(&s, c)| (s, c * factor)).collect(),
        }
    }

    /// Bilinear square-free product with the grading's sign rule.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        check_grading(self.grading, other.grading)?;
        let mut terms = BTreeMap::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if let Some(sign) = merge_sign(a, b, self.grading) {
                    insert_term(&mut terms, a.union(b), ca * cb * rational(sign as i64));
                }
            }
        }
        Ok(AlgebraElement { grading: self.grading, terms })
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (set, coeff)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}·e{set}")?;
        }
        Ok(())
    }
}

fn check_grading(a: Grading, b: Grading) -> Result<(), AlgebraError> {
    if a != b {
        return Err(AlgebraError::GradingMismatch(a.degree, b.degree));
    }
    Ok(())
}

fn insert_term<K: Ord>(terms: &mut BTreeMap<K, BigRational>, key: K, value: BigRational) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(value);
        }
        Entry::Occupied(mut slot) => {
            let sum = slot.get() + value;
            if sum.is_zero() {
                slot.remove();
            } else {
                slot.insert(sum);
            }
        }
    }
}

/// An element of the tensor square: a rational combination of
/// `e_A ⊗ e_B`.  Multiplication uses the Koszul rule
/// `(a⊗b)(c⊗d) = (-1)^{deg b · deg c} (ac ⊗ bd)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    grading: Grading,
    terms: BTreeMap<(VertexSet, VertexSet), BigRational>,
}

impl TensorElement {
    pub fn zero(grading: Grading) -> Self {
        TensorElement { grading, terms: BTreeMap::new() }
    }

    pub fn one(grading: Grading) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((VertexSet::empty(), VertexSet::empty()), BigRational::one());
        TensorElement { grading, terms }
    }

    /// `e_A ⊗ e_B` with coefficient one.
    pub fn pure(left: VertexSet, right: VertexSet, grading: Grading) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((left, right), BigRational::one());
        TensorElement { grading, terms }
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((VertexSet, VertexSet), &BigRational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coefficient(&self, left: VertexSet, right: VertexSet) -> BigRational {
        self.terms.get(&(left, right)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        check_grading(self.grading, other.grading)?;
        let mut terms = self.terms.clone();
        for (&key, coeff) in &other.terms {
            insert_term(&mut terms, key, coeff.clone());
        }
        Ok(TensorElement { grading: self.grading, terms })
    }

    pub fn scale(&self, factor: &BigRational) -> TensorElement {
        if factor.is_zero() {
            return TensorElement::zero(self.grading);
        }
        TensorElement {
            grading: self.grading,
            terms: self.terms.iter().map(|(&k, c)| (k, c * factor)).collect(),
        }
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), coeff)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}·e{a}⊗e{b}")?;
        }
        Ok(())
    }
}

/// The basic zero-divisor `ē_i = 1 ⊗ e_i - e_i ⊗ 1`.
pub fn zero_divisor(i: usize, grading: Grading) -> Result<TensorElement, AlgebraError> {
    if i == 0 || i > MAX_GROUND {
        return Err(AlgebraError::IndexOutOfRange { index: i });
    }
    let s = VertexSet::singleton(i);
    let mut terms = BTreeMap::new();
    terms.insert((VertexSet::empty(), s), BigRational::one());
    terms.insert((s, VertexSet::empty()), -BigRational::one());
    Ok(TensorElement { grading, terms })
}

/// Product in the tensor square with Koszul signs.
pub fn tensor_mul(u: &TensorElement, v: &TensorElement) -> Result<TensorElement, AlgebraError> {
    check_grading(u.grading, v.grading)?;
    let grading = u.grading;
    let mut terms = BTreeMap::new();
    for (&(a, b), cab) in &u.terms {
        for (&(c, d), ccd) in &v.terms {
            let (Some(s_left), Some(s_right)) =
                (merge_sign(a, c, grading), merge_sign(b, d, grading))
            else {
                continue;
            };
            // (a⊗b)(c⊗d) = (-1)^{deg(b)·deg(c)} ac ⊗ bd
            let koszul = if grading.anticommutes() && b.len() % 2 == 1 && c.len() % 2 == 1 {
                -1
            } else {
                1
            };
            let sign = rational((koszul * s_left * s_right) as i64);
            insert_term(&mut terms, (a.union(c), b.union(d)), cab * ccd * sign);
        }
    }
    Ok(TensorElement { grading, terms })
}

/// Expands the product `ē_1 ē_2 ⋯ ē_z` directly as a signed sum over
/// ordered partitions `(J, J')` of `{1,..,z}`: the term `e_J ⊗ e_{J'}`
/// carries `(-1)^{|J|}` times, for anticommuting generators, the sign of
/// the shuffle that moves all of `J'` past `J` keeping internal orders.
pub fn shuffle_expansion(z: usize, grading: Grading) -> Result<TensorElement, AlgebraError> {
    if z > MAX_SHUFFLE {
        return Err(AlgebraError::SizeCap { got: z, cap: MAX_SHUFFLE });
    }
    let full = VertexSet::full(z);
    let mut terms = BTreeMap::new();
    for bits in 0..(1u64 << z) {
        let left = VertexSet::from_bits(bits);
        let right = full.difference(left);
        let mut sign = if left.len() % 2 == 0 { 1 } else { -1 };
        if grading.anticommutes() {
            // inversions of the arrangement (left, right) of 1..z
            let mut inversions = 0u32;
            for j in right.iter() {
                let above = left.bits() >> j; // members of left exceeding j
                inversions += above.count_ones();
            }
            if inversions % 2 == 1 {
                sign = -sign;
            }
        }
        terms.insert((left, right), rational(sign));
    }
    Ok(TensorElement { grading, terms })
}

/// Projects onto the tensor square of the quotient by the complex's
/// non-face ideal: every term `e_A ⊗ e_B` where `A` or `B` is not a face
/// of `X` is deleted.
pub fn reduce_mod_complex(u: &TensorElement, complex: &SimplicialComplex) -> TensorElement {
    TensorElement {
        grading: u.grading,
        terms: u
            .terms
            .iter()
            .filter(|((a, b), _)| complex.is_face(*a) && complex.is_face(*b))
            .map(|(&k, c)| (k, c.clone()))
            .collect(),
    }
}

/// Result of a cup-length certificate run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZclCertificate {
    /// The certified lower bound: `z(X)` for odd parity, `2·d(X)` for even
    /// parity.  The topological complexity is this value plus one.
    pub value: usize,
    /// Faces the certificate multiplies over (disjoint; the second is
    /// empty in the even case).
    pub witness: (VertexSet, VertexSet),
    /// Whether the product of basic zero-divisors was verified nonzero in
    /// the reduced tensor square.
    pub certified: bool,
    pub parity: Parity,
}

/// Certifies the cup-length lower bound by exact computation.
///
/// Odd parity: multiplies `ē_i` over the disjoint cover witness and checks
/// the reduced product is nonzero.  Even parity: multiplies `(ē_i)^2` over
/// a maximum face.  Intermediate products are reduced after every step;
/// the projection is an algebra map on the quotient, so this is sound and
/// keeps terms small.
pub fn zcl_certificate(
    complex: &SimplicialComplex,
    parity: Parity,
    k: u32,
) -> Result<ZclCertificate, AlgebraError> {
    let grading = Grading::from_parity(parity, k);
    match parity {
        Parity::Odd => {
            let cover = complex.disjoint_cover();
            let indices = cover.first.union(cover.second);
            let mut acc = reduce_mod_complex(&TensorElement::one(grading), complex);
            for i in indices.iter() {
                acc = reduce_mod_complex(&tensor_mul(&acc, &zero_divisor(i, grading)?)?, complex);
            }
            Ok(ZclCertificate {
                value: cover.size,
                witness: (cover.first, cover.second),
                certified: !acc.is_zero(),
                parity,
            })
        }
        Parity::Even => {
            let face = complex.max_face();
            let mut acc = reduce_mod_complex(&TensorElement::one(grading), complex);
            for i in face.iter() {
                let zd = zero_divisor(i, grading)?;
                let square = tensor_mul(&zd, &zd)?;
                acc = reduce_mod_complex(&tensor_mul(&acc, &square)?, complex);
            }
            Ok(ZclCertificate {
                value: 2 * face.len(),
                witness: (face, VertexSet::empty()),
                certified: !acc.is_zero(),
                parity,
            })
        }
    }
}

/// Exhaustive oracle: the largest `|S|` such that the product of the basic
/// zero-divisors over `S` is nonzero in the reduced tensor square, for odd
/// generator degree.  Must equal the disjoint-cover invariant.
pub fn zcl_exhaustive(complex: &SimplicialComplex) -> Result<usize, AlgebraError> {
    let n = complex.n();
    if n > MAX_ZCL_EXHAUSTIVE {
        return Err(AlgebraError::SizeCap { got: n, cap: MAX_ZCL_EXHAUSTIVE });
    }
    let grading = Grading::odd(1);
    let mut subsets: Vec<VertexSet> = (0..(1u64 << n)).map(VertexSet::from_bits).collect();
    subsets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    for s in subsets {
        let mut acc = reduce_mod_complex(&TensorElement::one(grading), complex);
        for i in s.iter() {
            acc = reduce_mod_complex(&tensor_mul(&acc, &zero_divisor(i, grading)?)?, complex);
            if acc.is_zero() {
                break;
            }
        }
        if !acc.is_zero() {
            return Ok(s.len());
        }
    }
    unreachable!("the empty product is 1⊗1 and never reduces to zero")
}

/// Coefficients of the rank polynomial: entry `k` counts the `k`-element
/// faces, which is the rank of the degree-`k·g` part of the quotient
/// algebra (for a flag complex, the number of `k`-cliques).
pub fn poincare_polynomial(complex: &SimplicialComplex) -> Vec<u64> {
    complex.face_counts()
}

/// Formats a rational as `p/q` (or just `p` for integers).
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else if value.denom().is_negative() {
        format!("{}/{}", -value.numer(), -value.denom())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Graph;

    fn fig8() -> SimplicialComplex {
        SimplicialComplex::from_facets(2, [VertexSet::of(&[1]), VertexSet::of(&[2])]).unwrap()
    }

    fn e(i: usize, g: Grading) -> AlgebraElement {
        AlgebraElement::generator(i, g).unwrap()
    }

    #[test]
    fn odd_generators_anticommute() {
        let g = Grading::odd(1);
        let e1e2 = e(1, g).mul(&e(2, g)).unwrap();
        let e2e1 = e(2, g).mul(&e(1, g)).unwrap();
        assert_eq!(e1e2.coefficient(VertexSet::of(&[1, 2])), rational(1));
        assert_eq!(e2e1.coefficient(VertexSet::of(&[1, 2])), rational(-1));
    }

    #[test]
    fn squares_vanish() {
        let g = Grading::odd(1);
        assert!(e(1, g).mul(&e(1, g)).unwrap().is_zero());
        let g = Grading::even(1);
        assert!(e(1, g).mul(&e(1, g)).unwrap().is_zero());
    }

    #[test]
    fn even_generators_commute() {
        let g = Grading::even(1);
        let e2e1 = e(2, g).mul(&e(1, g)).unwrap();
        assert_eq!(e2e1.coefficient(VertexSet::of(&[1, 2])), rational(1));
    }

    #[test]
    fn grading_mismatch_is_an_error() {
        let a = e(1, Grading::odd(1));
        let b = e(2, Grading::odd(2));
        assert_eq!(a.mul(&b), Err(AlgebraError::GradingMismatch(1, 3)));
    }

    #[test]
    fn basic_zero_divisor_product_odd() {
        let g = Grading::odd(1);
        let z1 = zero_divisor(1, g).unwrap();
        let z2 = zero_divisor(2, g).unwrap();
        let p = tensor_mul(&z1, &z2).unwrap();
        // 1⊗e1e2 - e1⊗e2 + e2⊗e1 + e1e2⊗1
        let (s1, s2, s12) = (VertexSet::of(&[1]), VertexSet::of(&[2]), VertexSet::of(&[1, 2]));
        let empty = VertexSet::empty();
        assert_eq!(p.len(), 4);
        assert_eq!(p.coefficient(empty, s12), rational(1));
        assert_eq!(p.coefficient(s1, s2), rational(-1));
        assert_eq!(p.coefficient(s2, s1), rational(1));
        assert_eq!(p.coefficient(s12, empty), rational(1));
    }

    #[test]
    fn odd_zero_divisor_squares_to_zero() {
        let g = Grading::odd(1);
        let z = zero_divisor(3, g).unwrap();
        assert!(tensor_mul(&z, &z).unwrap().is_zero());
    }

    #[test]
    fn even_zero_divisor_square_is_minus_two_pure_tensor() {
        let g = Grading::even(1);
        let z = zero_divisor(2, g).unwrap();
        let sq = tensor_mul(&z, &z).unwrap();
        let s = VertexSet::of(&[2]);
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.coefficient(s, s), rational(-2));
    }

    #[test]
    fn shuffle_matches_small_cases() {
        let g = Grading::odd(1);
        let one_term = shuffle_expansion(1, g).unwrap();
        assert_eq!(one_term, zero_divisor(1, g).unwrap());

        let two = shuffle_expansion(2, g).unwrap();
        let prod = tensor_mul(&zero_divisor(1, g).unwrap(), &zero_divisor(2, g).unwrap()).unwrap();
        assert_eq!(two, prod);
    }

    #[test]
    fn shuffle_term_count_is_power_of_two() {
        for z in 0..=10 {
            let exp = shuffle_expansion(z, Grading::odd(1)).unwrap();
            assert_eq!(exp.len(), 1 << z);
        }
        assert!(shuffle_expansion(17, Grading::odd(1)).is_err());
    }

    #[test]
    fn reduction_on_figure_eight() {
        let g = Grading::odd(1);
        let prod = tensor_mul(&zero_divisor(1, g).unwrap(), &zero_divisor(2, g).unwrap()).unwrap();
        let red = reduce_mod_complex(&prod, &fig8());
        let (s1, s2) = (VertexSet::of(&[1]), VertexSet::of(&[2]));
        assert_eq!(red.len(), 2);
        assert_eq!(red.coefficient(s1, s2), rational(-1));
        assert_eq!(red.coefficient(s2, s1), rational(1));
    }

    #[test]
    fn reduction_keeps_everything_on_full_simplex() {
        let g = Grading::odd(1);
        let full = SimplicialComplex::full_simplex(3).unwrap();
        let exp = shuffle_expansion(3, g).unwrap();
        assert_eq!(reduce_mod_complex(&exp, &full), exp);
    }

    #[test]
    fn certificate_examples_odd() {
        let cert = zcl_certificate(&fig8(), Parity::Odd, 1).unwrap();
        assert_eq!(cert.value, 2);
        assert!(cert.certified);

        let sk = SimplicialComplex::skeleton(5, 2).unwrap();
        let cert = zcl_certificate(&sk, Parity::Odd, 1).unwrap();
        assert_eq!(cert.value, 4);
        assert!(cert.certified);

        for n in 1..=5 {
            let full = SimplicialComplex::full_simplex(n).unwrap();
            let cert = zcl_certificate(&full, Parity::Odd, 1).unwrap();
            assert_eq!(cert.value, n);
            assert!(cert.certified);
        }
    }

    #[test]
    fn certificate_even_uses_squares_over_a_maximum_face() {
        let full = SimplicialComplex::full_simplex(3).unwrap();
        let cert = zcl_certificate(&full, Parity::Even, 1).unwrap();
        assert_eq!(cert.value, 6);
        assert!(cert.certified);

        let cert = zcl_certificate(&fig8(), Parity::Even, 1).unwrap();
        assert_eq!(cert.value, 2);
        assert!(cert.certified);
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(zcl_exhaustive(&fig8()).unwrap(), 2);
        let p3 = SimplicialComplex::flag_complex(&Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap());
        assert_eq!(zcl_exhaustive(&p3).unwrap(), 3);
        let sk41 = SimplicialComplex::skeleton(4, 1).unwrap();
        assert_eq!(zcl_exhaustive(&sk41).unwrap(), 2);
        let big = SimplicialComplex::skeleton(15, 1).unwrap();
        assert!(zcl_exhaustive(&big).is_err());
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&rational(-2)), "-2");
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(format_rational(&half), "1/2");
    }
}
