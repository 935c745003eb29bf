//! Exact Clifford algebra arithmetic over the rationals (Gaussian rationals
//! for phase-tracked tests), reflection decompositions of exact orthogonal
//! matrices, and the three double-cover 2-cocycles of a finite orthogonal
//! matrix group.
//!
//! The quadratic form is the standard positive-definite dot product on Q^n,
//! so e_i e_i = 1 and e_i e_j = -e_j e_i. Lifts are never normalized: the
//! product of a reflection word is compared to the product for the composed
//! element through an exact rational proportionality scalar, and only its
//! sign enters the cocycles.

use crate::cohom::{Cocycle2, Coefficients};
use crate::ext::{from_cocycle, CentralExtension};
use crate::grp::FiniteGroup;
use crate::rat::{dot, rat_str, reflect_matrix, Rat, RatMat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliffError {
    #[error("elements live in Clifford algebras of different dimensions")]
    DimensionMismatch,
    #[error("matrix is not orthogonal (g^T g != I)")]
    NotOrthogonal,
    #[error("lift products are not proportional; reflection decomposition is broken")]
    ScalarMismatch,
    #[error("word-length defect is odd; determinant bookkeeping is broken")]
    PhaseParity,
    #[error("reflection word does not compose to its group element")]
    WordMismatch,
    #[error("matrix group realization is inconsistent: {0}")]
    BadRealization(String),
}

/// Scalars a Clifford algebra can be taken over. `checked_div` returns None
/// exactly on division by zero.
pub trait CliffScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Add<Output = Self>
    + std::ops::Mul<Output = Self>
{
    fn checked_div(&self, other: &Self) -> Option<Self>;
}

impl CliffScalar for Rat {
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }
}

/// Gaussian rational a + b i, the scalar field for antiunit phase tracking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> GaussRat {
        GaussRat { re, im }
    }

    pub fn from_rat(re: Rat) -> GaussRat {
        GaussRat { re, im: Rat::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> GaussRat {
        GaussRat { re: Rat::zero(), im: Rat::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl std::ops::Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat { re: self.re + o.re, im: self.im + o.im }
    }
}

impl std::ops::Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl std::ops::Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat { re: Rat::one(), im: Rat::zero() }
    }
}

impl CliffScalar for GaussRat {
    fn checked_div(&self, other: &Self) -> Option<Self> {
        let norm = &other.re * &other.re + &other.im * &other.im;
        if norm.is_zero() {
            return None;
        }
        let re = (&self.re * &other.re + &self.im * &other.im) / &norm;
        let im = (&self.im * &other.re - &self.re * &other.im) / &norm;
        Some(GaussRat { re, im })
    }
}

/// Sign and support of the product of two basis monomials e_S e_T in the
/// positive-definite Clifford algebra: each generator of T moves left past
/// the higher generators of the accumulated support, contracting on e_i^2=1.
fn monomial_mul(a: u32, b: u32) -> (bool, u32) {
    let mut acc = a;
    let mut negative = false;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        rest &= rest - 1;
        let higher = acc & !((1u32 << (i + 1)) - 1);
        if higher.count_ones() % 2 == 1 {
            negative = !negative;
        }
        acc ^= 1 << i;
    }
    (negative, acc)
}

/// A sparse element of the Clifford algebra C(Q^n): a map from subsets of
/// {1..n} (bitmasks) to exact scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordElement<S: CliffScalar = Rat> {
    dim: usize,
    terms: BTreeMap<u32, S>,
}

impl<S: CliffScalar> CliffordElement<S> {
    pub fn zero(dim: usize) -> Self {
        CliffordElement { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, s: S) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(0, s);
        }
        CliffordElement { dim, terms }
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    /// The i-th generator e_i (0-based).
    pub fn basis_vector(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        let mut terms = BTreeMap::new();
        terms.insert(1u32 << i, S::one());
        CliffordElement { dim, terms }
    }

    /// Embed a coordinate vector of V into the algebra.
    pub fn from_vector(dim: usize, coords: &[S]) -> Self {
        assert_eq!(coords.len(), dim);
        let mut terms = BTreeMap::new();
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(1u32 << i, c.clone());
            }
        }
        CliffordElement { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<u32, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffError> {
        if self.dim != other.dim {
            return Err(CliffError::DimensionMismatch);
        }
        let mut terms = self.terms.clone();
        for (&m, c) in &other.terms {
            let v = match terms.remove(&m) {
                Some(old) => old + c.clone(),
                None => c.clone(),
            };
            if !v.is_zero() {
                terms.insert(m, v);
            }
        }
        Ok(CliffordElement { dim: self.dim, terms })
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        let terms = self
            .terms
            .iter()
            .map(|(&m, c)| (m, c.clone() * s.clone()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        CliffordElement { dim: self.dim, terms }
    }

    /// Clifford product, the bilinear extension of the monomial product.
    pub fn cl_mul(&self, other: &Self) -> Result<Self, CliffError> {
        if self.dim != other.dim {
            return Err(CliffError::DimensionMismatch);
        }
        let mut terms: BTreeMap<u32, S> = BTreeMap::new();
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &other.terms {
                let (neg, m) = monomial_mul(ma, mb);
                let mut c = ca.clone() * cb.clone();
                if neg {
                    c = -c;
                }
                let v = match terms.remove(&m) {
                    Some(old) => old + c,
                    None => c,
                };
                if !v.is_zero() {
                    terms.insert(m, v);
                }
            }
        }
        Ok(CliffordElement { dim: self.dim, terms })
    }

    /// The scalar lambda with self = lambda * other, when one exists and is
    /// nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<S> {
        let (&m0, c0) = other.terms.iter().next()?;
        let lambda = self.terms.get(&m0)?.checked_div(c0)?;
        if lambda.is_zero() {
            return None;
        }
        if *self == other.scale(&lambda) {
            Some(lambda)
        } else {
            None
        }
    }
}

// ---------------------------------------------------------------------------
// Reflection words
// ---------------------------------------------------------------------------

/// An ordered list of nonzero rational vectors v_1, ..., v_k; the word
/// stands for the composition r_{v_1} o ... o r_{v_k} of their reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionWord {
    vectors: Vec<Vec<Rat>>,
}

impl ReflectionWord {
    pub fn new(vectors: Vec<Vec<Rat>>) -> ReflectionWord {
        for v in &vectors {
            assert!(dot(v, v).is_positive(), "reflection vectors need Q(v) > 0");
        }
        ReflectionWord { vectors }
    }

    pub fn empty() -> ReflectionWord {
        ReflectionWord { vectors: Vec::new() }
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The composed orthogonal matrix r_{v_1} ... r_{v_k}.
    pub fn compose(&self, dim: usize) -> RatMat {
        let mut acc = RatMat::identity(dim);
        for v in self.vectors.iter().rev() {
            acc = reflect_matrix(v, &acc);
        }
        acc
    }

    /// The unnormalized lift: the Clifford product v_1 v_2 ... v_k.
    pub fn lift(&self, dim: usize) -> CliffordElement<Rat> {
        let mut acc = CliffordElement::one(dim);
        for v in &self.vectors {
            let vec = CliffordElement::from_vector(dim, v);
            acc = acc.cl_mul(&vec).expect("same dimension");
        }
        acc
    }
}

/// Decompose an exact orthogonal matrix into at most n reflections. Each
/// step takes the lowest index i with g e_i != e_i and reflects in
/// v = g e_i - e_i, which fixes e_i while preserving the already-fixed
/// coordinates. The word length parity equals the determinant parity.
pub fn reflect_decompose(g: &RatMat) -> Result<ReflectionWord, CliffError> {
    reflect_decompose_by(g, |candidates| candidates[0])
}

/// Variant with a caller-chosen pivot among the non-fixed coordinates;
/// used to check that cocycle classes do not depend on the word choices.
pub fn reflect_decompose_by<F>(g: &RatMat, mut choose: F) -> Result<ReflectionWord, CliffError>
where
    F: FnMut(&[usize]) -> usize,
{
    if !g.is_orthogonal() {
        return Err(CliffError::NotOrthogonal);
    }
    let n = g.dim;
    let mut work = g.clone();
    let mut vectors = Vec::new();
    loop {
        let moved: Vec<usize> = (0..n)
            .filter(|&i| {
                (0..n).any(|r| {
                    let want = if r == i { Rat::one() } else { Rat::zero() };
                    *work.at(r, i) != want
                })
            })
            .collect();
        if moved.is_empty() {
            break;
        }
        let i = choose(&moved);
        debug_assert!(moved.contains(&i));
        let col = work.column(i);
        let v: Vec<Rat> = (0..n)
            .map(|r| &col[r] - if r == i { Rat::one() } else { Rat::zero() })
            .collect();
        debug_assert!(dot(&v, &v).is_positive());
        work = reflect_matrix(&v, &work);
        vectors.push(v);
        debug_assert!(vectors.len() <= n);
    }
    Ok(ReflectionWord { vectors })
}

// ---------------------------------------------------------------------------
// Finite orthogonal matrix groups and their double-cover cocycles
// ---------------------------------------------------------------------------

/// A finite group of exact orthogonal rational matrices: the abstract table
/// plus the matrix realization of every element.
#[derive(Clone, Debug)]
pub struct OrthGroup {
    pub group: FiniteGroup,
    pub dim: usize,
    pub mats: Vec<RatMat>,
}

impl OrthGroup {
    pub fn new(group: FiniteGroup, dim: usize, mats: Vec<RatMat>) -> Result<OrthGroup, CliffError> {
        if mats.len() != group.order() {
            return Err(CliffError::BadRealization("one matrix per element required".into()));
        }
        if !mats[0].is_identity() {
            return Err(CliffError::BadRealization("element 0 must be the identity".into()));
        }
        for m in &mats {
            if m.dim != dim {
                return Err(CliffError::BadRealization("dimension mismatch".into()));
            }
            if !m.is_orthogonal() {
                return Err(CliffError::NotOrthogonal);
            }
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if mats[a].mul(&mats[b]) != mats[group.mul(a, b)] {
                    return Err(CliffError::BadRealization(format!(
                        "realization breaks at the product ({a},{b})"
                    )));
                }
            }
        }
        let mut sorted: Vec<&RatMat> = mats.iter().collect();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != mats.len() {
            return Err(CliffError::BadRealization("realization is not faithful".into()));
        }
        Ok(OrthGroup { group, dim, mats })
    }

    /// From `generate` output with an orthogonal realization.
    pub fn from_generated(gen: &crate::grp::Generated) -> Option<OrthGroup> {
        match &gen.realization {
            crate::grp::Realization::Orth { dim, mats } => Some(OrthGroup {
                group: gen.group.clone(),
                dim: *dim,
                mats: mats.clone(),
            }),
            _ => None,
        }
    }

    /// Determinant parity d(g) = (1 - det g)/2 of an element.
    pub fn det_parity(&self, g: usize) -> u64 {
        let d = self.mats[g].det();
        debug_assert!(d == Rat::one() || d == -Rat::one());
        if d == Rat::one() {
            0
        } else {
            1
        }
    }
}

/// Which double cover a cocycle or preimage refers to: unit-vector lifts
/// (plus), antiunit-vector lifts (minus), or the determinant cover through
/// the fourth roots of unity (tilde).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PinVariant {
    Plus,
    Minus,
    Tilde,
}

impl PinVariant {
    pub fn name(&self) -> &'static str {
        match self {
            PinVariant::Plus => "pin_plus",
            PinVariant::Minus => "pin_minus",
            PinVariant::Tilde => "tilde",
        }
    }
}

/// The three double-cover 2-cocycles of a finite orthogonal matrix group,
/// with the reflection words that produced them.
#[derive(Clone, Debug)]
pub struct PinCocycleReport {
    pub plus: Cocycle2,
    pub minus: Cocycle2,
    pub tilde: Cocycle2,
    pub words: Vec<ReflectionWord>,
}

impl PinCocycleReport {
    pub fn word_lengths(&self) -> Vec<usize> {
        self.words.iter().map(|w| w.len()).collect()
    }

    pub fn cocycle(&self, variant: PinVariant) -> &Cocycle2 {
        match variant {
            PinVariant::Plus => &self.plus,
            PinVariant::Minus => &self.minus,
            PinVariant::Tilde => &self.tilde,
        }
    }
}

/// Compute the three cocycles with the deterministic reflection words.
pub fn pin_cocycles(og: &OrthGroup) -> Result<PinCocycleReport, CliffError> {
    let words = og
        .mats
        .iter()
        .map(reflect_decompose)
        .collect::<Result<Vec<_>, _>>()?;
    pin_cocycles_with_words(og, words)
}

/// Compute the cocycles from caller-provided reflection words (one per
/// element; each must compose to its element's matrix).
///
/// For a pair (g, h), the unit-lift cocycle value is the sign of the exact
/// rational scalar lambda with lift(g) lift(h) = lambda lift(gh). The
/// antiunit cocycle adds the phase (-1)^((k_g + k_h - k_gh)/2) coming from
/// multiplying each reflection vector by the imaginary unit, and the
/// determinant cover has the rank-one cocycle d(g) d(h).
pub fn pin_cocycles_with_words(
    og: &OrthGroup,
    words: Vec<ReflectionWord>,
) -> Result<PinCocycleReport, CliffError> {
    let n = og.group.order();
    if words.len() != n {
        return Err(CliffError::WordMismatch);
    }
    for (w, m) in words.iter().zip(&og.mats) {
        if &w.compose(og.dim) != m {
            return Err(CliffError::WordMismatch);
        }
    }
    let lifts: Vec<CliffordElement<Rat>> = words.iter().map(|w| w.lift(og.dim)).collect();
    let coeffs = Coefficients::f2();
    let mut plus = vec![coeffs.zero(); n * n];
    let mut minus = vec![coeffs.zero(); n * n];
    let mut tilde = vec![coeffs.zero(); n * n];
    for g in 0..n {
        let kg = words[g].len();
        debug_assert_eq!(og.det_parity(g), (kg % 2) as u64);
        for h in 0..n {
            let kh = words[h].len();
            let gh = og.group.mul(g, h);
            let kgh = words[gh].len();
            let prod = lifts[g].cl_mul(&lifts[h])?;
            let lambda = prod.ratio_to(&lifts[gh]).ok_or(CliffError::ScalarMismatch)?;
            let fplus = if lambda.is_positive() { 0u64 } else { 1u64 };
            let defect = kg + kh - kgh;
            if !defect.is_multiple_of(2) {
                return Err(CliffError::PhaseParity);
            }
            let fminus = fplus ^ ((defect / 2) as u64 & 1);
            plus[g * n + h] = vec![fplus];
            minus[g * n + h] = vec![fminus];
            tilde[g * n + h] = vec![og.det_parity(g) * og.det_parity(h)];
        }
    }
    Ok(PinCocycleReport {
        plus: Cocycle2::new(og.group.clone(), coeffs.clone(), plus)
            .map_err(|_| CliffError::ScalarMismatch)?,
        minus: Cocycle2::new(og.group.clone(), coeffs.clone(), minus)
            .map_err(|_| CliffError::ScalarMismatch)?,
        tilde: Cocycle2::new(og.group.clone(), coeffs, tilde)
            .map_err(|_| CliffError::ScalarMismatch)?,
        words,
    })
}

/// The preimage of the group in the chosen double cover, as a central
/// extension by Z/2 built from the corresponding cocycle.
pub fn pin_preimage(og: &OrthGroup, variant: PinVariant) -> Result<CentralExtension, CliffError> {
    let report = pin_cocycles(og)?;
    Ok(from_cocycle(report.cocycle(variant)))
}

/// Reflection word rendered as "p/q" strings for reports.
pub fn word_strings(w: &ReflectionWord) -> Vec<Vec<String>> {
    w.vectors().iter().map(|v| v.iter().map(rat_str).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{generate, GroupSpec, DEFAULT_CAP};
    use num_bigint::BigInt;

    fn rt(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    fn gamma(n: usize) -> OrthGroup {
        let gens: Vec<Vec<Vec<String>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|r| {
                        (0..n)
                            .map(|c| {
                                if r == c {
                                    if r == i {
                                        "-1".to_string()
                                    } else {
                                        "1".to_string()
                                    }
                                } else {
                                    "0".to_string()
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let spec = GroupSpec::Orth { dim: n, gens };
        OrthGroup::from_generated(&generate(&spec, DEFAULT_CAP).unwrap()).unwrap()
    }

    #[test]
    fn monomial_products() {
        // e1 e1 = 1
        let e1 = CliffordElement::<Rat>::basis_vector(2, 0);
        let sq = e1.cl_mul(&e1).unwrap();
        assert_eq!(sq, CliffordElement::one(2));
        // e1 e2 = e12, e2 e1 = -e12
        let e2 = CliffordElement::<Rat>::basis_vector(2, 1);
        let e12 = e1.cl_mul(&e2).unwrap();
        assert_eq!(e12.terms().len(), 1);
        assert_eq!(e12.terms().get(&0b11), Some(&rt(1)));
        let e21 = e2.cl_mul(&e1).unwrap();
        assert_eq!(e21.terms().get(&0b11), Some(&rt(-1)));
        // (e1 e2)(e1 e2) = -1
        let sq = e12.cl_mul(&e12).unwrap();
        assert_eq!(sq, CliffordElement::scalar(2, rt(-1)));
    }

    #[test]
    fn cl_mul_is_associative_on_random_elements() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let dim = 5usize;
        let rand_elem = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut acc = CliffordElement::<Rat>::zero(dim);
            for _ in 0..4 {
                let mask = rng.gen_range(0u32..1 << dim);
                let num = rng.gen_range(-6i64..=6);
                let den = rng.gen_range(1i64..=4);
                let coeff = Rat::new(BigInt::from(num), BigInt::from(den));
                if coeff.is_zero() {
                    continue;
                }
                let term = CliffordElement::<Rat>::basis_vector(dim, 0)
                    .scale(&Rat::zero())
                    .add(&CliffordElement {
                        dim,
                        terms: [(mask, coeff)].into_iter().collect(),
                    })
                    .unwrap();
                acc = acc.add(&term).unwrap();
            }
            acc
        };
        for _ in 0..50 {
            let (a, b, c) = (rand_elem(&mut rng), rand_elem(&mut rng), rand_elem(&mut rng));
            let left = a.cl_mul(&b).unwrap().cl_mul(&c).unwrap();
            let right = a.cl_mul(&b.cl_mul(&c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = CliffordElement::<Rat>::one(2);
        let b = CliffordElement::<Rat>::one(3);
        assert!(matches!(a.cl_mul(&b), Err(CliffError::DimensionMismatch)));
    }

    #[test]
    fn reflect_decompose_examples() {
        // identity -> empty word
        let id = RatMat::identity(3);
        assert!(reflect_decompose(&id).unwrap().is_empty());
        // diag(-1, 1, 1) -> a single reflection
        let refl = RatMat::from_rows(vec![
            vec![rt(-1), rt(0), rt(0)],
            vec![rt(0), rt(1), rt(0)],
            vec![rt(0), rt(0), rt(1)],
        ])
        .unwrap();
        let w = reflect_decompose(&refl).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.compose(3), refl);
        // rotation by 90 degrees -> length-2 word composing back exactly
        let rot = RatMat::from_rows(vec![vec![rt(0), rt(-1)], vec![rt(1), rt(0)]]).unwrap();
        let w = reflect_decompose(&rot).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.compose(2), rot);
        // a rational rotation: word composes back, parity = det
        let r35 = RatMat::from_rows(vec![
            vec![Rat::new(3.into(), 5.into()), Rat::new((-4).into(), 5.into())],
            vec![Rat::new(4.into(), 5.into()), Rat::new(3.into(), 5.into())],
        ])
        .unwrap();
        let w = reflect_decompose(&r35).unwrap();
        assert_eq!(w.compose(2), r35);
        assert_eq!(w.len() % 2, 0);
        // non-orthogonal input is rejected
        let bad = RatMat::from_rows(vec![vec![rt(1), rt(1)], vec![rt(0), rt(1)]]).unwrap();
        assert!(matches!(reflect_decompose(&bad), Err(CliffError::NotOrthogonal)));
    }

    #[test]
    fn gamma2_pin_plus_values() {
        let og = gamma(2);
        let report = pin_cocycles(&og).unwrap();
        // locate r1 = diag(-1,1) and r2 = diag(1,-1)
        let r1 = og
            .mats
            .iter()
            .position(|m| *m.at(0, 0) == rt(-1) && *m.at(1, 1) == rt(1))
            .unwrap();
        let r2 = og
            .mats
            .iter()
            .position(|m| *m.at(0, 0) == rt(1) && *m.at(1, 1) == rt(-1))
            .unwrap();
        // multiplicative +1 is additive 0
        assert_eq!(report.plus.at(r1, r2), &vec![0u64]);
        assert_eq!(report.plus.at(r2, r1), &vec![1u64]);
        assert_eq!(report.plus.at(r1, r1), &vec![0u64]);
        for table in [&report.plus, &report.minus, &report.tilde] {
            assert!(table.is_cocycle());
        }
    }

    #[test]
    fn trivial_orthogonal_group_has_zero_cocycles() {
        let spec = GroupSpec::Orth { dim: 2, gens: vec![] };
        let og = OrthGroup::from_generated(&generate(&spec, 4).unwrap()).unwrap();
        assert_eq!(og.group.order(), 1);
        let report = pin_cocycles(&og).unwrap();
        assert!(report.plus.is_zero_table());
        assert!(report.minus.is_zero_table());
        assert!(report.tilde.is_zero_table());
    }

    #[test]
    fn minus_cocycle_matches_gaussian_oracle() {
        // independent oracle: actually multiply the antiunit lifts, i.e.
        // Gaussian-rational Clifford products of the vectors (i v_j)
        for og in [gamma(2), gamma(3)] {
            let report = pin_cocycles(&og).unwrap();
            let dim = og.dim;
            let lifts: Vec<CliffordElement<GaussRat>> = report
                .words
                .iter()
                .map(|w| {
                    let mut acc = CliffordElement::<GaussRat>::one(dim);
                    for v in w.vectors() {
                        let coords: Vec<GaussRat> = v
                            .iter()
                            .map(|x| GaussRat::new(Rat::zero(), x.clone()))
                            .collect();
                        acc = acc.cl_mul(&CliffordElement::from_vector(dim, &coords)).unwrap();
                    }
                    acc
                })
                .collect();
            let n = og.group.order();
            for g in 0..n {
                for h in 0..n {
                    let gh = og.group.mul(g, h);
                    let prod = lifts[g].cl_mul(&lifts[h]).unwrap();
                    let lambda = prod.ratio_to(&lifts[gh]).unwrap();
                    assert!(lambda.is_real());
                    let sign = if lambda.re.is_positive() { 0u64 } else { 1 };
                    assert_eq!(
                        report.minus.at(g, h),
                        &vec![sign],
                        "antiunit sign at ({g},{h})"
                    );
                }
            }
        }
    }

    #[test]
    fn phase_defect_always_even() {
        for og in [gamma(2), gamma(3)] {
            let report = pin_cocycles(&og).unwrap();
            let k = report.word_lengths();
            let n = og.group.order();
            for g in 0..n {
                for h in 0..n {
                    let gh = og.group.mul(g, h);
                    assert_eq!((k[g] + k[h]) % 2, k[gh] % 2);
                }
            }
        }
    }

    #[test]
    fn cocycle_classes_independent_of_word_choice() {
        use crate::cohom::{class_eq, CohomClass};
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let og = gamma(3);
        let base = pin_cocycles(&og).unwrap();
        for _ in 0..5 {
            let words: Vec<ReflectionWord> = og
                .mats
                .iter()
                .map(|m| {
                    reflect_decompose_by(m, |cands| cands[rng.gen_range(0..cands.len())])
                        .unwrap()
                })
                .collect();
            let alt = pin_cocycles_with_words(&og, words).unwrap();
            for (a, b) in [
                (&base.plus, &alt.plus),
                (&base.minus, &alt.minus),
                (&base.tilde, &alt.tilde),
            ] {
                let ca = CohomClass::from_cocycle(a.clone());
                let cb = CohomClass::from_cocycle(b.clone());
                assert!(class_eq(&ca, &cb).unwrap());
            }
        }
    }

    #[test]
    fn gamma2_preimages_are_the_four_groups() {
        use crate::grp::identify::identify;
        let og = gamma(2);
        let plus = pin_preimage(&og, PinVariant::Plus).unwrap();
        assert_eq!(identify(plus.middle()).as_deref(), Some("D4"));
        let minus = pin_preimage(&og, PinVariant::Minus).unwrap();
        assert_eq!(identify(minus.middle()).as_deref(), Some("Q8"));
        let tilde = pin_preimage(&og, PinVariant::Tilde).unwrap();
        assert_eq!(identify(tilde.middle()).as_deref(), Some("C4xC2"));
        let trivial = from_cocycle(&Cocycle2::zero(&og.group, &Coefficients::f2()));
        assert_eq!(identify(trivial.middle()).as_deref(), Some("C2xC2xC2"));
    }

    #[test]
    fn minus_class_is_plus_class_plus_det_square() {
        use crate::cohom::{class_eq, cup11, Cochain1, CohomClass};
        for og in [gamma(2), gamma(3)] {
            let report = pin_cocycles(&og).unwrap();
            let coeffs = Coefficients::f2();
            let n = og.group.order();
            let d = Cochain1::new(
                og.group.clone(),
                coeffs.clone(),
                (0..n).map(|g| vec![og.det_parity(g)]).collect(),
            )
            .unwrap();
            assert!(d.is_hom());
            let dd = cup11(&d, &d).unwrap();
            let plus = CohomClass::from_cocycle(report.plus.clone());
            let minus = CohomClass::from_cocycle(report.minus.clone());
            assert!(class_eq(&minus, &plus.add(&dd).unwrap()).unwrap());
            // the tilde cocycle is exactly d u d
            assert_eq!(report.tilde.rows(), dd.representative().rows());
        }
    }
}
