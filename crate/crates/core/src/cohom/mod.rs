//! Normalized bar-resolution cochains in degrees <= 2 and the resulting
//! cohomology: H^1 (characters) and H^2 with finite abelian coefficients,
//! class arithmetic and equality, restriction along homomorphisms, cup
//! products of degree-1 classes, and polynomial coordinates over elementary
//! abelian 2-groups.
//!
//! Coefficients A = Z/m1 x ... x Z/mr act trivially; every cyclic factor is
//! handled independently (GF(2) elimination for m = 2, Howell elimination
//! over Z/m otherwise) and the results are concatenated.

pub mod linalg;

use crate::grp::{FiniteGroup, GroupHom};
use linalg::{BitEchelon, ZmEchelon, ZmKernelBuilder};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CohomError {
    #[error("cyclic orders must be between 2 and 2^31")]
    BadCoefficients,
    #[error("operands live over different groups or coefficients")]
    MismatchedAmbient,
    #[error("operation requires Z/2 coefficients")]
    NonF2Coefficients,
    #[error("not a normalized 2-cocycle: {0}")]
    InvalidCocycle(String),
    #[error("cochain is not a character (not a homomorphism)")]
    NotCharacter,
    #[error("group is not elementary abelian 2 with the declared basis")]
    NotElementaryAbelian,
    #[error("class is outside the monomial span; internal basis bug")]
    NoSolution,
    #[error("value has wrong shape for the coefficients")]
    BadValue,
}

/// Trivial-action coefficient module Z/m1 x ... x Z/mr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficients {
    moduli: Vec<u64>,
}

pub type AVal = Vec<u64>;

impl Coefficients {
    pub fn new(moduli: Vec<u64>) -> Result<Coefficients, CohomError> {
        // products of residues must stay inside u64
        if moduli.iter().any(|&m| !(2..=1 << 31).contains(&m)) {
            return Err(CohomError::BadCoefficients);
        }
        Ok(Coefficients { moduli })
    }

    pub fn f2() -> Coefficients {
        Coefficients { moduli: vec![2] }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn size(&self) -> u64 {
        self.moduli.iter().product()
    }

    pub fn zero(&self) -> AVal {
        vec![0; self.moduli.len()]
    }

    pub fn is_valid(&self, v: &AVal) -> bool {
        v.len() == self.moduli.len() && v.iter().zip(&self.moduli) .all(|(&a, &m)| a < m)
    }

    pub fn add(&self, a: &AVal, b: &AVal) -> AVal {
        a.iter().zip(b).zip(&self.moduli).map(|((&x, &y), &m)| (x + y) % m).collect()
    }

    pub fn neg(&self, a: &AVal) -> AVal {
        a.iter().zip(&self.moduli).map(|(&x, &m)| (m - x) % m).collect()
    }

    pub fn sub(&self, a: &AVal, b: &AVal) -> AVal {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &AVal, k: u64) -> AVal {
        a.iter().zip(&self.moduli).map(|(&x, &m)| x * (k % m) % m).collect()
    }

    /// The coefficient module as an abelian group (mixed-radix indexing,
    /// first factor fastest; the zero tuple is index 0).
    pub fn group(&self) -> FiniteGroup {
        crate::grp::catalog::abelian(&self.moduli)
    }

    pub fn index_of(&self, v: &AVal) -> usize {
        debug_assert!(self.is_valid(v));
        let mut acc = 0usize;
        let mut stride = 1usize;
        for (&a, &m) in v.iter().zip(&self.moduli) {
            acc += a as usize * stride;
            stride *= m as usize;
        }
        acc
    }

    pub fn value_of(&self, mut i: usize) -> AVal {
        self.moduli
            .iter()
            .map(|&m| {
                let a = (i % m as usize) as u64;
                i /= m as usize;
                a
            })
            .collect()
    }
}

/// A homomorphism between coefficient modules, given by the images of the
/// cyclic generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffHom {
    src: Coefficients,
    dst: Coefficients,
    images: Vec<AVal>,
}

impl CoeffHom {
    /// `images[j]` is the image of the generator of the j-th factor of the
    /// source; its order must divide the factor's modulus.
    pub fn new(
        src: Coefficients,
        dst: Coefficients,
        images: Vec<AVal>,
    ) -> Result<CoeffHom, CohomError> {
        if images.len() != src.rank() || images.iter().any(|v| !dst.is_valid(v)) {
            return Err(CohomError::BadValue);
        }
        for (img, &m) in images.iter().zip(&src.moduli) {
            if dst.scale(img, m).iter().any(|&x| x != 0) {
                return Err(CohomError::BadValue);
            }
        }
        Ok(CoeffHom { src, dst, images })
    }

    pub fn identity(coeffs: &Coefficients) -> CoeffHom {
        let images = (0..coeffs.rank())
            .map(|j| {
                let mut v = coeffs.zero();
                v[j] = 1;
                v
            })
            .collect();
        CoeffHom { src: coeffs.clone(), dst: coeffs.clone(), images }
    }

    pub fn src(&self) -> &Coefficients {
        &self.src
    }

    pub fn dst(&self) -> &Coefficients {
        &self.dst
    }

    pub fn images(&self) -> &[AVal] {
        &self.images
    }

    pub fn apply(&self, v: &AVal) -> AVal {
        debug_assert!(self.src.is_valid(v));
        let mut acc = self.dst.zero();
        for (&a, img) in v.iter().zip(&self.images) {
            acc = self.dst.add(&acc, &self.dst.scale(img, a));
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Cochains
// ---------------------------------------------------------------------------

/// Normalized 1-cochain: a function G -> A with value 0 at the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    pub group: FiniteGroup,
    pub coeffs: Coefficients,
    values: Vec<AVal>,
}

impl Cochain1 {
    pub fn new(
        group: FiniteGroup,
        coeffs: Coefficients,
        values: Vec<AVal>,
    ) -> Result<Cochain1, CohomError> {
        if values.len() != group.order() || values.iter().any(|v| !coeffs.is_valid(v)) {
            return Err(CohomError::BadValue);
        }
        if values[0].iter().any(|&x| x != 0) {
            return Err(CohomError::BadValue);
        }
        Ok(Cochain1 { group, coeffs, values })
    }

    pub fn zero(group: &FiniteGroup, coeffs: &Coefficients) -> Cochain1 {
        Cochain1 {
            group: group.clone(),
            coeffs: coeffs.clone(),
            values: vec![coeffs.zero(); group.order()],
        }
    }

    pub fn eval(&self, g: usize) -> &AVal {
        &self.values[g]
    }

    pub fn values(&self) -> &[AVal] {
        &self.values
    }

    pub fn is_hom(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|g| {
            (0..n).all(|h| {
                self.coeffs.add(&self.values[g], &self.values[h])
                    == self.values[self.group.mul(g, h)]
            })
        })
    }

    pub fn add(&self, other: &Cochain1) -> Result<Cochain1, CohomError> {
        if self.group != other.group || self.coeffs != other.coeffs {
            return Err(CohomError::MismatchedAmbient);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.coeffs.add(a, b))
            .collect();
        Ok(Cochain1 { group: self.group.clone(), coeffs: self.coeffs.clone(), values })
    }

    /// Pullback along a homomorphism into this cochain's group.
    pub fn restrict(&self, phi: &GroupHom) -> Result<Cochain1, CohomError> {
        if phi.target != self.group {
            return Err(CohomError::MismatchedAmbient);
        }
        let values = (0..phi.source.order()).map(|g| self.values[phi.apply(g)].clone()).collect();
        Ok(Cochain1 { group: phi.source.clone(), coeffs: self.coeffs.clone(), values })
    }
}

/// Normalized A-valued 2-cochain table on G x G satisfying the 2-cocycle
/// identity (validated on construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    pub group: FiniteGroup,
    pub coeffs: Coefficients,
    values: Vec<AVal>, // row major, |G| x |G|
}

impl Cocycle2 {
    pub fn new(
        group: FiniteGroup,
        coeffs: Coefficients,
        values: Vec<AVal>,
    ) -> Result<Cocycle2, CohomError> {
        let n = group.order();
        if values.len() != n * n || values.iter().any(|v| !coeffs.is_valid(v)) {
            return Err(CohomError::BadValue);
        }
        let f = Cocycle2 { group, coeffs, values };
        f.check_cocycle()?;
        Ok(f)
    }

    pub fn from_rows(
        group: FiniteGroup,
        coeffs: Coefficients,
        rows: Vec<Vec<AVal>>,
    ) -> Result<Cocycle2, CohomError> {
        let n = group.order();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CohomError::BadValue);
        }
        Cocycle2::new(group, coeffs, rows.into_iter().flatten().collect())
    }

    pub(crate) fn new_unchecked(
        group: FiniteGroup,
        coeffs: Coefficients,
        values: Vec<AVal>,
    ) -> Cocycle2 {
        let f = Cocycle2 { group, coeffs, values };
        debug_assert!(f.check_cocycle().is_ok());
        f
    }

    fn check_cocycle(&self) -> Result<(), CohomError> {
        let n = self.group.order();
        for g in 0..n {
            if self.at(0, g).iter().any(|&x| x != 0) || self.at(g, 0).iter().any(|&x| x != 0) {
                return Err(CohomError::InvalidCocycle(format!(
                    "not normalized at element {g}"
                )));
            }
        }
        let moduli = &self.coeffs.moduli;
        for g in 0..n {
            for h in 0..n {
                let gh = self.group.mul(g, h);
                let f_gh = self.at(g, h);
                for k in 0..n {
                    let hk = self.group.mul(h, k);
                    let (a, b, c) = (self.at(gh, k), self.at(h, k), self.at(g, hk));
                    let ok = (0..moduli.len()).all(|r| {
                        (f_gh[r] + a[r]) % moduli[r] == (b[r] + c[r]) % moduli[r]
                    });
                    if !ok {
                        return Err(CohomError::InvalidCocycle(format!(
                            "identity fails at ({g},{h},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustive re-check of normalization and the cocycle identity.
    pub fn is_cocycle(&self) -> bool {
        self.check_cocycle().is_ok()
    }

    pub fn zero(group: &FiniteGroup, coeffs: &Coefficients) -> Cocycle2 {
        let n = group.order();
        Cocycle2 {
            group: group.clone(),
            coeffs: coeffs.clone(),
            values: vec![coeffs.zero(); n * n],
        }
    }

    pub fn at(&self, g: usize, h: usize) -> &AVal {
        &self.values[g * self.group.order() + h]
    }

    pub fn rows(&self) -> Vec<Vec<AVal>> {
        let n = self.group.order();
        (0..n).map(|g| (0..n).map(|h| self.at(g, h).clone()).collect()).collect()
    }

    pub fn add(&self, other: &Cocycle2) -> Result<Cocycle2, CohomError> {
        if self.group != other.group || self.coeffs != other.coeffs {
            return Err(CohomError::MismatchedAmbient);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.coeffs.add(a, b))
            .collect();
        Ok(Cocycle2::new_unchecked(self.group.clone(), self.coeffs.clone(), values))
    }

    pub fn sub(&self, other: &Cocycle2) -> Result<Cocycle2, CohomError> {
        if self.group != other.group || self.coeffs != other.coeffs {
            return Err(CohomError::MismatchedAmbient);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.coeffs.sub(a, b))
            .collect();
        Ok(Cocycle2::new_unchecked(self.group.clone(), self.coeffs.clone(), values))
    }

    pub fn is_zero_table(&self) -> bool {
        self.values.iter().all(|v| v.iter().all(|&x| x == 0))
    }

    /// Vector of the k-th coefficient over non-identity pairs, row major.
    fn factor_vector(&self, k: usize) -> Vec<u64> {
        let n = self.group.order();
        let mut out = Vec::with_capacity((n - 1) * (n - 1));
        for g in 1..n {
            for h in 1..n {
                out.push(self.at(g, h)[k]);
            }
        }
        out
    }

    fn from_factor_vectors(
        group: &FiniteGroup,
        coeffs: &Coefficients,
        vectors: &[Vec<u64>],
    ) -> Cocycle2 {
        let n = group.order();
        let mut values = vec![coeffs.zero(); n * n];
        for g in 1..n {
            for h in 1..n {
                for (k, vec) in vectors.iter().enumerate() {
                    values[g * n + h][k] = vec[(g - 1) * (n - 1) + (h - 1)];
                }
            }
        }
        Cocycle2::new_unchecked(group.clone(), coeffs.clone(), values)
    }
}

/// A second-cohomology class: a cocycle up to coboundaries.
#[derive(Clone, Debug)]
pub struct CohomClass {
    rep: Cocycle2,
}

impl CohomClass {
    pub fn from_cocycle(rep: Cocycle2) -> CohomClass {
        CohomClass { rep }
    }

    pub fn zero(group: &FiniteGroup, coeffs: &Coefficients) -> CohomClass {
        CohomClass { rep: Cocycle2::zero(group, coeffs) }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.rep.group
    }

    pub fn coeffs(&self) -> &Coefficients {
        &self.rep.coeffs
    }

    pub fn representative(&self) -> &Cocycle2 {
        &self.rep
    }

    pub fn add(&self, other: &CohomClass) -> Result<CohomClass, CohomError> {
        Ok(CohomClass { rep: self.rep.add(&other.rep)? })
    }

    pub fn is_zero(&self) -> bool {
        class_eq(self, &CohomClass::zero(&self.rep.group, &self.rep.coeffs))
            .expect("same ambient by construction")
    }

    /// Deterministic canonical representative: each coefficient factor is
    /// reduced against the echelonized coboundary span.
    pub fn canonical_rep(&self) -> Cocycle2 {
        let group = &self.rep.group;
        let coeffs = &self.rep.coeffs;
        let n = group.order();
        if n == 1 {
            return self.rep.clone();
        }
        let n2 = (n - 1) * (n - 1);
        let mut vectors = Vec::new();
        for (k, &m) in coeffs.moduli.iter().enumerate() {
            let v = self.rep.factor_vector(k);
            if m == 2 {
                let ech = coboundary_span_f2(group);
                let red = ech.reduce(linalg::bits_from_vals(&v, n2));
                vectors.push(linalg::bits_to_vals(&red, n2));
            } else {
                let ech = coboundary_span_zm(group, m);
                vectors.push(ech.reduce(v));
            }
        }
        Cocycle2::from_factor_vectors(group, coeffs, &vectors)
    }
}

// ---------------------------------------------------------------------------
// Coboundaries
// ---------------------------------------------------------------------------

/// d1 c (g,h) = c(g) + c(h) - c(gh); the result is a normalized 2-cocycle.
pub fn d1(c: &Cochain1) -> Cocycle2 {
    let n = c.group.order();
    let mut values = vec![c.coeffs.zero(); n * n];
    for g in 1..n {
        for h in 1..n {
            let gh = c.group.mul(g, h);
            let mut v = c.coeffs.add(c.eval(g), c.eval(h));
            v = c.coeffs.sub(&v, c.eval(gh));
            values[g * n + h] = v;
        }
    }
    Cocycle2::new_unchecked(c.group.clone(), c.coeffs.clone(), values)
}

/// Dense d1 row over the n-1 cochain coordinates for the pair (g, h).
fn d1_row(group: &FiniteGroup, m: u64, g: usize, h: usize) -> Vec<u64> {
    let n = group.order();
    let mut row = vec![0u64; n - 1];
    let mut bump = |e: usize, c: u64| {
        if e != 0 {
            row[e - 1] = (row[e - 1] + c) % m;
        }
    };
    bump(g, 1);
    bump(h, 1);
    bump(group.mul(g, h), m - 1);
    row
}

/// Dense d2 row over the (n-1)^2 cocycle coordinates for the triple
/// (g, h, k): f(h,k) - f(gh,k) + f(g,hk) - f(g,h).
fn d2_row(group: &FiniteGroup, m: u64, g: usize, h: usize, k: usize) -> Vec<u64> {
    let n = group.order();
    let n1 = n - 1;
    let mut row = vec![0u64; n1 * n1];
    let mut bump = |a: usize, b: usize, c: u64| {
        if a != 0 && b != 0 {
            let i = (a - 1) * n1 + (b - 1);
            row[i] = (row[i] + c) % m;
        }
    };
    let (gh, hk) = (group.mul(g, h), group.mul(h, k));
    bump(h, k, 1);
    bump(gh, k, m - 1);
    bump(g, hk, 1);
    bump(g, h, m - 1);
    row
}

/// The coordinates of a d2 row mod 2: at most four pair positions, each
/// toggled (coinciding terms cancel).
fn d2_pairs_f2(group: &FiniteGroup, g: usize, h: usize, k: usize) -> [Option<usize>; 4] {
    let n1 = group.order() - 1;
    let pair = |a: usize, b: usize| {
        if a != 0 && b != 0 {
            Some((a - 1) * n1 + (b - 1))
        } else {
            None
        }
    };
    let (gh, hk) = (group.mul(g, h), group.mul(h, k));
    [pair(h, k), pair(gh, k), pair(g, hk), pair(g, h)]
}

/// Kernel of d2 over GF(2) on the normalized 2-cochain coordinates. Rows of
/// d2 are 4-sparse; a strided sample seeds the echelon, and the candidate
/// kernel is then verified against every triple, re-inserting any violated
/// row, so the result is exact regardless of the sampling.
fn cocycle_kernel_f2(group: &FiniteGroup) -> Vec<Vec<u64>> {
    let n = group.order();
    let n1 = n - 1;
    let n2 = n1 * n1;
    let words = linalg::bit_words(n2);
    let triple_of = |t: usize| (t / (n1 * n1) + 1, t / n1 % n1 + 1, t % n1 + 1);
    let total = n1 * n1 * n1;
    let row_for = |t: usize| -> Vec<u64> {
        let (g, h, k) = triple_of(t);
        let mut row = vec![0u64; words];
        for idx in d2_pairs_f2(group, g, h, k).into_iter().flatten() {
            linalg::bit_set(&mut row, idx);
        }
        row
    };
    let mut ech = BitEchelon::new(n2, 0);
    let seed = (4 * n2).min(total);
    let stride = (total / seed.max(1)).max(1);
    let mut t = 0;
    while t < total {
        ech.insert(row_for(t));
        t += stride;
    }
    loop {
        let kernel = ech.nullspace();
        let mut violated = Vec::new();
        'scan: for t in 0..total {
            let (g, h, k) = triple_of(t);
            let pairs = d2_pairs_f2(group, g, h, k);
            for v in &kernel {
                let mut acc = false;
                for idx in pairs.into_iter().flatten() {
                    acc ^= linalg::bit_get(v, idx);
                }
                if acc {
                    violated.push(t);
                    if violated.len() >= 2 * n2 {
                        break 'scan;
                    }
                    break;
                }
            }
        }
        if violated.is_empty() {
            return kernel;
        }
        for t in violated {
            ech.insert(row_for(t));
        }
    }
}

/// GF(2) echelon of the coboundary space, augmented with the generating
/// 1-cochain (witness columns n2..n2+n1).
fn coboundary_span_f2_aug(group: &FiniteGroup) -> BitEchelon {
    let n = group.order();
    let (n1, n2) = (n - 1, (n - 1) * (n - 1));
    let mut ech = BitEchelon::new(n2, n1);
    for g in 1..n {
        let mut vals = basis_coboundary(group, 2, g);
        vals.extend(std::iter::repeat_n(0, n1));
        vals[n2 + (g - 1)] = 1;
        ech.insert(linalg::bits_from_vals(&vals, n2 + n1));
    }
    ech
}

fn coboundary_span_f2(group: &FiniteGroup) -> BitEchelon {
    let n = group.order();
    let n2 = (n - 1) * (n - 1);
    let mut ech = BitEchelon::new(n2, 0);
    for g in 1..n {
        ech.insert(linalg::bits_from_vals(&basis_coboundary(group, 2, g), n2));
    }
    ech
}

/// Basis coboundary d1(e_x) for the 1-cochain supported at x with value 1
/// modulo m, as a factor vector over the non-identity pairs. Built directly
/// from (d1 e_x)(g,h) = [g=x] + [h=x] - [gh=x].
fn basis_coboundary(group: &FiniteGroup, m: u64, x: usize) -> Vec<u64> {
    let n = group.order();
    let n1 = n - 1;
    let mut out = vec![0u64; n1 * n1];
    for g in 1..n {
        for h in 1..n {
            let mut v = 0u64;
            if g == x {
                v += 1;
            }
            if h == x {
                v += 1;
            }
            if group.mul(g, h) == x {
                v += m - 1;
            }
            out[(g - 1) * n1 + (h - 1)] = v % m;
        }
    }
    out
}

fn coboundary_span_zm(group: &FiniteGroup, m: u64) -> ZmEchelon {
    let n = group.order();
    let n2 = (n - 1) * (n - 1);
    let mut ech = ZmEchelon::new(m, n2, 0);
    for x in 1..n {
        ech.insert(basis_coboundary(group, m, x));
    }
    ech.finish();
    ech
}

fn coboundary_span_zm_aug(group: &FiniteGroup, m: u64) -> ZmEchelon {
    let n = group.order();
    let (n1, n2) = (n - 1, (n - 1) * (n - 1));
    let mut ech = ZmEchelon::new(m, n2, n1);
    for x in 1..n {
        let mut vals = basis_coboundary(group, m, x);
        vals.extend(std::iter::repeat_n(0, n1));
        vals[n2 + (x - 1)] = 1;
        ech.insert(vals);
    }
    ech.finish();
    ech
}

// ---------------------------------------------------------------------------
// H^1 and H^2
// ---------------------------------------------------------------------------

/// Generators (with orders) of Hom(G, A) = H^1(G, A); equivalently
/// Hom(G^ab, A). Factors are concatenated in coefficient order.
#[derive(Clone, Debug)]
pub struct H1Basis {
    pub orders: Vec<u64>,
    pub gens: Vec<Cochain1>,
}

pub fn h1(group: &FiniteGroup, coeffs: &Coefficients) -> H1Basis {
    let n = group.order();
    let mut orders = Vec::new();
    let mut gens = Vec::new();
    if n == 1 {
        return H1Basis { orders, gens };
    }
    let n1 = n - 1;
    for (k, &m) in coeffs.moduli.iter().enumerate() {
        let factor_gens: Vec<(u64, Vec<u64>)> = if m == 2 {
            let mut ech = BitEchelon::new(n1, 0);
            for g in 1..n {
                for h in 1..n {
                    ech.insert(linalg::bits_from_vals(&d1_row(group, 2, g, h), n1));
                }
            }
            ech.nullspace()
                .into_iter()
                .map(|v| (2u64, linalg::bits_to_vals(&v, n1)))
                .collect()
        } else {
            let mut kb = ZmKernelBuilder::new(m, n1);
            for g in 1..n {
                for h in 1..n {
                    kb.add_row(d1_row(group, m, g, h));
                }
            }
            let kernel = kb.finish();
            let (inv, reps) = linalg::subquotient_invariants(m, n1, &kernel, &[]);
            inv.into_iter().zip(reps).collect()
        };
        for (order, vals) in factor_gens {
            let mut values = vec![coeffs.zero(); n];
            for g in 1..n {
                values[g][k] = vals[g - 1];
            }
            let c = Cochain1 { group: group.clone(), coeffs: coeffs.clone(), values };
            debug_assert!(c.is_hom());
            orders.push(order);
            gens.push(c);
        }
    }
    H1Basis { orders, gens }
}

/// |Hom(G, A)|.
pub fn hom_count(group: &FiniteGroup, coeffs: &Coefficients) -> u64 {
    h1(group, coeffs).orders.iter().product()
}

/// Every character G -> A, enumerated from the H^1 basis (all multiples of
/// all generators). Deterministic order.
pub fn all_characters(group: &FiniteGroup, coeffs: &Coefficients) -> Vec<Cochain1> {
    let basis = h1(group, coeffs);
    let mut out = vec![Cochain1::zero(group, coeffs)];
    for (gen, &order) in basis.gens.iter().zip(&basis.orders) {
        let mut next = Vec::with_capacity(out.len() * order as usize);
        for c in &out {
            let mut acc = c.clone();
            next.push(acc.clone());
            for _ in 1..order {
                acc = acc.add(gen).expect("same ambient");
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out
}

/// Invariant factors and representative classes of H^2(G, A).
#[derive(Clone, Debug)]
pub struct H2Basis {
    pub invariants: Vec<u64>,
    pub reps: Vec<CohomClass>,
}

impl H2Basis {
    pub fn dimension(&self) -> usize {
        self.invariants.len()
    }

    /// Every class, as sums of multiples of the representatives (2^dim for
    /// F2 coefficients). Use only for small bases.
    pub fn all_classes(&self, group: &FiniteGroup, coeffs: &Coefficients) -> Vec<CohomClass> {
        let mut out = vec![CohomClass::zero(group, coeffs)];
        for (rep, &order) in self.reps.iter().zip(&self.invariants) {
            let mut next = Vec::with_capacity(out.len() * order as usize);
            for c in &out {
                let mut acc = c.clone();
                next.push(acc.clone());
                for _ in 1..order {
                    acc = acc.add(rep).expect("same ambient");
                    next.push(acc.clone());
                }
            }
            out = next;
        }
        out
    }
}

/// H^2(G, A) on normalized cochains: kernel of d2 modulo the image of d1,
/// factor by factor.
pub fn h2(group: &FiniteGroup, coeffs: &Coefficients) -> H2Basis {
    let n = group.order();
    let mut invariants = Vec::new();
    let mut reps = Vec::new();
    if n == 1 {
        return H2Basis { invariants, reps };
    }
    let n1 = n - 1;
    let n2 = n1 * n1;
    for (k, &m) in coeffs.moduli.iter().enumerate() {
        let factor_reps: Vec<(u64, Vec<u64>)> = if m == 2 {
            let kernel = cocycle_kernel_f2(group);
            let mut span = coboundary_span_f2(group);
            let mut out = Vec::new();
            for v in kernel {
                let red = span.reduce(v);
                if red.iter().any(|&w| w != 0) {
                    out.push((2u64, linalg::bits_to_vals(&red, n2)));
                    span.insert(red);
                }
            }
            out
        } else {
            let mut kb = ZmKernelBuilder::new(m, n2);
            for g in 1..n {
                for h in 1..n {
                    for kk in 1..n {
                        kb.add_row(d2_row(group, m, g, h, kk));
                    }
                }
            }
            let kernel = kb.finish();
            let bound: Vec<Vec<u64>> =
                coboundary_span_zm(group, m).rows().to_vec();
            let (inv, vecs) = linalg::subquotient_invariants(m, n2, &kernel, &bound);
            inv.into_iter().zip(vecs).collect()
        };
        for (order, vals) in factor_reps {
            let mut vectors = vec![vec![0u64; n2]; coeffs.rank()];
            vectors[k] = vals;
            let rep = Cocycle2::from_factor_vectors(group, coeffs, &vectors);
            invariants.push(order);
            reps.push(CohomClass::from_cocycle(rep));
        }
    }
    H2Basis { invariants, reps }
}

// ---------------------------------------------------------------------------
// Class operations
// ---------------------------------------------------------------------------

/// Two classes are equal iff their difference is a coboundary.
pub fn class_eq(x: &CohomClass, y: &CohomClass) -> Result<bool, CohomError> {
    let diff = x.rep.sub(&y.rep)?;
    Ok(is_coboundary(&diff))
}

/// Is this cocycle a coboundary d1(c)? When it is, a witness is returned by
/// [`coboundary_witness`].
pub fn is_coboundary(f: &Cocycle2) -> bool {
    coboundary_witness(f).is_some()
}

/// A 1-cochain c with d1(c) = f, when one exists.
pub fn coboundary_witness(f: &Cocycle2) -> Option<Cochain1> {
    let group = &f.group;
    let coeffs = &f.coeffs;
    let n = group.order();
    if n == 1 {
        return Some(Cochain1::zero(group, coeffs));
    }
    let n1 = n - 1;
    let n2 = n1 * n1;
    let mut values = vec![coeffs.zero(); n];
    for (k, &m) in coeffs.moduli.iter().enumerate() {
        let target = f.factor_vector(k);
        if m == 2 {
            let ech = coboundary_span_f2_aug(group);
            let mut q = target;
            q.extend(std::iter::repeat_n(0, n1));
            let wit = ech.solve(linalg::bits_from_vals(&q, n2 + n1))?;
            for g in 1..n {
                values[g][k] = linalg::bit_get(&wit, g - 1) as u64;
            }
        } else {
            let ech = coboundary_span_zm_aug(group, m);
            let wit = ech.solve(&target)?;
            for g in 1..n {
                values[g][k] = wit[g - 1];
            }
        }
    }
    let c = Cochain1 { group: group.clone(), coeffs: coeffs.clone(), values };
    debug_assert_eq!(d1(&c).values, f.values);
    Some(c)
}

/// Pullback of a cocycle table along phi (target must be the ambient group).
pub fn restrict_cocycle(f: &Cocycle2, phi: &GroupHom) -> Result<Cocycle2, CohomError> {
    if phi.target != f.group {
        return Err(CohomError::MismatchedAmbient);
    }
    let n = phi.source.order();
    let mut values = vec![f.coeffs.zero(); n * n];
    for g in 0..n {
        for h in 0..n {
            values[g * n + h] = f.at(phi.apply(g), phi.apply(h)).clone();
        }
    }
    Ok(Cocycle2::new_unchecked(phi.source.clone(), f.coeffs.clone(), values))
}

/// Contravariant restriction of a class along phi.
pub fn restrict(x: &CohomClass, phi: &GroupHom) -> Result<CohomClass, CohomError> {
    Ok(CohomClass::from_cocycle(restrict_cocycle(&x.rep, phi)?))
}

/// Cup product of two characters with Z/2 coefficients:
/// (a u b)(g, h) = a(g) b(h).
pub fn cup11(a: &Cochain1, b: &Cochain1) -> Result<CohomClass, CohomError> {
    if a.coeffs.moduli != vec![2] || b.coeffs.moduli != vec![2] {
        return Err(CohomError::NonF2Coefficients);
    }
    if a.group != b.group {
        return Err(CohomError::MismatchedAmbient);
    }
    if !a.is_hom() || !b.is_hom() {
        return Err(CohomError::NotCharacter);
    }
    let n = a.group.order();
    let mut values = vec![a.coeffs.zero(); n * n];
    for g in 0..n {
        for h in 0..n {
            values[g * n + h] = vec![a.eval(g)[0] & b.eval(h)[0]];
        }
    }
    Ok(CohomClass::from_cocycle(Cocycle2::new_unchecked(
        a.group.clone(),
        a.coeffs.clone(),
        values,
    )))
}

// ---------------------------------------------------------------------------
// Polynomial coordinates over elementary abelian 2-groups
// ---------------------------------------------------------------------------

/// Coordinates of a degree-2 class in the monomial basis {v_i v_j : i <= j}
/// dual to a declared ordered basis of an elementary abelian 2-group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCoords {
    pub rank: usize,
    /// Monomials with coefficient 1, as (i, j) with i <= j, 0-based.
    pub monomials: BTreeSet<(usize, usize)>,
    /// Set when the class is a symmetric polynomial.
    pub symmetric: Option<SymmetricForm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetricForm {
    Zero,
    E1Squared,
    E2,
    E2PlusE1Squared,
}

impl std::fmt::Display for SymmetricForm {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SymmetricForm::Zero => "0",
            SymmetricForm::E1Squared => "E1^2",
            SymmetricForm::E2 => "E2",
            SymmetricForm::E2PlusE1Squared => "E2+E1^2",
        };
        write!(fm, "{s}")
    }
}

impl std::fmt::Display for PolyCoords {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.monomials.is_empty() {
            return write!(fm, "0");
        }
        let terms: Vec<String> = self
            .monomials
            .iter()
            .map(|&(i, j)| {
                if i == j {
                    format!("v{}^2", i + 1)
                } else {
                    format!("v{}v{}", i + 1, j + 1)
                }
            })
            .collect();
        write!(fm, "{}", terms.join("+"))
    }
}

/// F2 coordinates of every group element in the declared basis; errors when
/// the group is not elementary abelian 2 or the basis does not work.
fn elementary_coords(
    group: &FiniteGroup,
    basis: &[usize],
) -> Result<Vec<Vec<u64>>, CohomError> {
    let n = group.order();
    if !group.is_abelian() || group.exponent() > 2 {
        return Err(CohomError::NotElementaryAbelian);
    }
    let r = basis.len();
    if n != 1usize.checked_shl(r as u32).ok_or(CohomError::NotElementaryAbelian)? {
        return Err(CohomError::NotElementaryAbelian);
    }
    if basis.iter().any(|&b| b == 0 || b >= n) {
        return Err(CohomError::NotElementaryAbelian);
    }
    let mut coords: Vec<Option<Vec<u64>>> = vec![None; n];
    coords[0] = Some(vec![0; r]);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for (i, &b) in basis.iter().enumerate() {
            let y = group.mul(x, b);
            if coords[y].is_none() {
                let mut c = coords[x].clone().unwrap();
                c[i] ^= 1;
                coords[y] = Some(c);
                frontier.push(y);
            }
        }
    }
    coords
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(CohomError::NotElementaryAbelian)
}

/// The class of v_i u v_j for the dual basis of `basis`.
pub fn monomial_class(
    group: &FiniteGroup,
    basis: &[usize],
    i: usize,
    j: usize,
) -> Result<CohomClass, CohomError> {
    let coords = elementary_coords(group, basis)?;
    let coeffs = Coefficients::f2();
    let n = group.order();
    let mut values = vec![coeffs.zero(); n * n];
    for g in 0..n {
        for h in 0..n {
            values[g * n + h] = vec![coords[g][i] & coords[h][j]];
        }
    }
    Ok(CohomClass::from_cocycle(Cocycle2::new_unchecked(group.clone(), coeffs, values)))
}

/// A class built from polynomial coordinates (sum of monomial classes).
pub fn class_from_coords(
    group: &FiniteGroup,
    basis: &[usize],
    monomials: &BTreeSet<(usize, usize)>,
) -> Result<CohomClass, CohomError> {
    let mut acc = CohomClass::zero(group, &Coefficients::f2());
    for &(i, j) in monomials {
        acc = acc.add(&monomial_class(group, basis, i, j)?)?;
    }
    Ok(acc)
}

/// Solve x = sum c_ij [v_i u v_j] modulo coboundaries; the solution is
/// unique because the monomial classes are a basis of H^2.
pub fn express_poly(x: &CohomClass, basis: &[usize]) -> Result<PolyCoords, CohomError> {
    if x.coeffs().moduli != vec![2] {
        return Err(CohomError::NonF2Coefficients);
    }
    let group = x.group();
    let coords = elementary_coords(group, basis)?;
    let r = basis.len();
    let n = group.order();
    let n1 = n - 1;
    let n2 = n1 * n1;
    let monomials: Vec<(usize, usize)> = (0..r)
        .flat_map(|i| (i..r).map(move |j| (i, j)))
        .collect();
    let mut ech = BitEchelon::new(n2, monomials.len());
    // coboundaries carry no witness bits
    for g in 1..n {
        let mut vals = basis_coboundary(group, 2, g);
        vals.extend(std::iter::repeat_n(0, monomials.len()));
        ech.insert(linalg::bits_from_vals(&vals, n2 + monomials.len()));
    }
    for (idx, &(i, j)) in monomials.iter().enumerate() {
        let mut vals = vec![0u64; n2 + monomials.len()];
        for g in 1..n {
            for h in 1..n {
                vals[(g - 1) * n1 + (h - 1)] = coords[g][i] & coords[h][j];
            }
        }
        vals[n2 + idx] = 1;
        ech.insert(linalg::bits_from_vals(&vals, n2 + monomials.len()));
    }
    let mut target = x.representative().factor_vector(0);
    target.extend(std::iter::repeat_n(0, monomials.len()));
    let wit = ech
        .solve(linalg::bits_from_vals(&target, n2 + monomials.len()))
        .ok_or(CohomError::NoSolution)?;
    let mut set = BTreeSet::new();
    for (idx, &(i, j)) in monomials.iter().enumerate() {
        if linalg::bit_get(&wit, idx) {
            set.insert((i, j));
        }
    }
    let diag: BTreeSet<(usize, usize)> = (0..r).map(|i| (i, i)).collect();
    let off: BTreeSet<(usize, usize)> =
        (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect();
    let symmetric = if set.is_empty() {
        Some(SymmetricForm::Zero)
    } else if set == diag {
        Some(SymmetricForm::E1Squared)
    } else if set == off {
        Some(SymmetricForm::E2)
    } else if set == diag.union(&off).copied().collect() {
        Some(SymmetricForm::E2PlusE1Squared)
    } else {
        None
    };
    Ok(PolyCoords { rank: r, monomials: set, symmetric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::catalog::{abelian, cyclic, dihedral, quaternion8};
    use crate::grp::{generate, hom_from_gen_images, GroupSpec};

    fn f2() -> Coefficients {
        Coefficients::f2()
    }

    /// Direct evaluation of the coboundary formula; the oracle for d1.
    fn d1_oracle(c: &Cochain1) -> Vec<Vec<AVal>> {
        let n = c.group.order();
        (0..n)
            .map(|g| {
                (0..n)
                    .map(|h| {
                        let s = c.coeffs.add(c.eval(g), c.eval(h));
                        c.coeffs.sub(&s, c.eval(c.group.mul(g, h)))
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn d1_zero_cochain_and_characters() {
        let c2 = cyclic(2);
        assert!(d1(&Cochain1::zero(&c2, &f2())).is_zero_table());
        // a character has zero coboundary
        let c = Cochain1::new(c2.clone(), f2(), vec![vec![0], vec![1]]).unwrap();
        assert!(c.is_hom());
        assert!(d1(&c).is_zero_table());
    }

    #[test]
    fn d1_on_c4_matches_direct_evaluation() {
        let c4 = cyclic(4);
        // c(x) = 1, c(x^2) = 0, c(x^3) = 1: this c is a character, so the
        // formula gives 0 at every pair (computed by the oracle)
        let c = Cochain1::new(c4.clone(), f2(), vec![vec![0], vec![1], vec![0], vec![1]]).unwrap();
        let table = d1(&c);
        let oracle = d1_oracle(&c);
        assert_eq!(table.rows(), oracle);
        for (g, h) in [(1, 1), (1, 2), (1, 3), (2, 2)] {
            assert_eq!(table.at(g, h), &vec![0u64]);
        }
        // a non-character: c(x) = 1, c(x^2) = 1, c(x^3) = 0; frozen values
        // computed by the oracle
        let c = Cochain1::new(c4.clone(), f2(), vec![vec![0], vec![1], vec![1], vec![0]]).unwrap();
        let table = d1(&c);
        assert_eq!(table.rows(), d1_oracle(&c));
        assert_eq!(table.at(1, 1), &vec![1u64]);
        assert_eq!(table.at(1, 3), &vec![1u64]);
        assert_eq!(table.at(3, 3), &vec![1u64]);
        assert_eq!(table.at(1, 2), &vec![0u64]);
        assert!(table.is_cocycle());
    }

    #[test]
    fn h2_c2_exhaustive_oracle() {
        // the two normalized 2-cochains on C2 are both cocycles and the
        // only coboundary is zero, so H^2(C2, Z/2) = Z/2
        let c2 = cyclic(2);
        for v in [0u64, 1] {
            let table = Cocycle2::new(
                c2.clone(),
                f2(),
                vec![vec![0], vec![0], vec![0], vec![v]],
            );
            assert!(table.is_ok(), "f(x,x)={v} must satisfy the identity");
        }
        for cx in [0u64, 1] {
            let c = Cochain1::new(c2.clone(), f2(), vec![vec![0], vec![cx]]).unwrap();
            assert!(d1(&c).is_zero_table());
        }
        let basis = h2(&c2, &f2());
        assert_eq!(basis.invariants, vec![2]);
        let nonzero = &basis.reps[0];
        assert!(!nonzero.is_zero());
    }

    #[test]
    fn h2_dimensions_for_the_corpus() {
        assert_eq!(h2(&abelian(&[2, 2]), &f2()).dimension(), 3);
        assert_eq!(h2(&quaternion8(), &f2()).dimension(), 2);
        assert_eq!(h2(&cyclic(3), &f2()).dimension(), 0);
        assert_eq!(h2(&cyclic(4), &f2()).dimension(), 1);
        assert_eq!(h2(&dihedral(4), &f2()).dimension(), 3);
        // trivial group: everything vanishes, no errors
        assert_eq!(h2(&cyclic(1), &f2()).dimension(), 0);
        assert_eq!(h1(&cyclic(1), &f2()).gens.len(), 0);
    }

    #[test]
    fn h2_cyclic_general_coefficients_is_gcd() {
        // H^2(C_n, Z/m) = Z/gcd(n, m)
        for (n, m, want) in [(4usize, 4u64, vec![4u64]), (2, 4, vec![2]), (6, 4, vec![2]), (3, 2, vec![])] {
            let basis = h2(&cyclic(n), &Coefficients::new(vec![m]).unwrap());
            assert_eq!(basis.invariants, want, "H^2(C{n}, Z/{m})");
            for rep in &basis.reps {
                assert!(rep.representative().is_cocycle());
            }
        }
        // multi-factor coefficients concatenate: A = Z/2 x Z/4 over C2
        let basis = h2(&cyclic(2), &Coefficients::new(vec![2, 4]).unwrap());
        let mut inv = basis.invariants.clone();
        inv.sort();
        assert_eq!(inv, vec![2, 2]);
    }

    #[test]
    fn h1_ranks() {
        let q8 = quaternion8();
        let b = h1(&q8, &f2());
        assert_eq!(b.orders, vec![2, 2]);
        for g in &b.gens {
            assert!(g.is_hom());
        }
        assert_eq!(h1(&cyclic(3), &f2()).orders, Vec::<u64>::new());
        assert_eq!(h1(&abelian(&[2, 2]), &f2()).orders, vec![2, 2]);
        assert_eq!(hom_count(&q8, &f2()), 4);
        assert_eq!(all_characters(&q8, &f2()).len(), 4);
        // H^1(C4, Z/4) = Z/4
        assert_eq!(h1(&cyclic(4), &Coefficients::new(vec![4]).unwrap()).orders, vec![4]);
    }

    #[test]
    fn class_eq_basics() {
        let c2 = cyclic(2);
        let basis = h2(&c2, &f2());
        let x = &basis.reps[0];
        assert!(class_eq(x, x).unwrap());
        // zero vs a coboundary
        let zero = CohomClass::zero(&c2, &f2());
        let c = Cochain1::new(c2.clone(), f2(), vec![vec![0], vec![1]]).unwrap();
        let cob = CohomClass::from_cocycle(d1(&c));
        assert!(class_eq(&zero, &cob).unwrap());
        // the two representatives f(x,x) = 0 and 1 are different classes
        assert!(!class_eq(x, &zero).unwrap());
        // ambient mismatch is an error
        let c4 = cyclic(4);
        let other = CohomClass::zero(&c4, &f2());
        assert!(matches!(class_eq(x, &other), Err(CohomError::MismatchedAmbient)));
    }

    #[test]
    fn coboundary_witness_roundtrip() {
        let d4 = dihedral(4);
        let mut values = vec![f2().zero(); 8];
        values[3] = vec![1];
        values[5] = vec![1];
        let c = Cochain1::new(d4.clone(), f2(), values).unwrap();
        let f = d1(&c);
        let w = coboundary_witness(&f).expect("a coboundary by construction");
        assert_eq!(d1(&w).rows(), f.rows());
    }

    #[test]
    fn restrict_is_functorial_and_identity() {
        let q8 = quaternion8();
        let basis = h2(&q8, &f2());
        let x = &basis.reps[0];
        let idh = crate::grp::GroupHom::identity_hom(&q8);
        let back = restrict(x, &idh).unwrap();
        assert!(class_eq(x, &back).unwrap());
        // restriction along the center inclusion kills H^2(Q8)
        let z = *q8.center().iter().find(|&&z| z != 0).unwrap();
        let (_, incl) = q8.subgroup(&[z]).unwrap();
        for rep in &basis.reps {
            assert!(restrict(rep, &incl).unwrap().is_zero());
        }
    }

    #[test]
    fn cup_products_on_c2_and_klein() {
        let c2 = cyclic(2);
        let zero = Cochain1::zero(&c2, &f2());
        let chi = Cochain1::new(c2.clone(), f2(), vec![vec![0], vec![1]]).unwrap();
        assert!(cup11(&zero, &chi).unwrap().is_zero());
        let sq = cup11(&chi, &chi).unwrap();
        assert!(!sq.is_zero());
        // over the Klein group: v1 u v2 expressed in the polynomial basis
        let klein = abelian(&[2, 2]);
        let basis_elems = vec![1usize, 2];
        // dual basis characters on the Klein group (index = a1 + 2 a2)
        let v1 = Cochain1::new(klein.clone(), f2(), vec![vec![0], vec![1], vec![0], vec![1]])
            .unwrap();
        let v2 = Cochain1::new(klein.clone(), f2(), vec![vec![0], vec![0], vec![1], vec![1]])
            .unwrap();
        assert!(v1.is_hom() && v2.is_hom());
        let cup = cup11(&v1, &v2).unwrap();
        let coords = express_poly(&cup, &basis_elems).unwrap();
        assert_eq!(coords.monomials.iter().copied().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(coords.symmetric, Some(SymmetricForm::E2));
        // graded commutativity on classes over F2: a u b = b u a
        let cup_rev = cup11(&v2, &v1).unwrap();
        assert!(class_eq(&cup, &cup_rev).unwrap());
        // wrong coefficients are rejected
        let z4 = Coefficients::new(vec![4]).unwrap();
        let c4chain = Cochain1::zero(&klein, &z4);
        assert!(matches!(
            cup11(&c4chain, &c4chain),
            Err(CohomError::NonF2Coefficients)
        ));
    }

    #[test]
    fn express_poly_examples() {
        let klein = abelian(&[2, 2]);
        let basis = vec![1usize, 2];
        // zero class
        let zero = CohomClass::zero(&klein, &f2());
        let coords = express_poly(&zero, &basis).unwrap();
        assert!(coords.monomials.is_empty());
        assert_eq!(coords.symmetric, Some(SymmetricForm::Zero));
        // d u d with d = v1 + v2 gives E1^2 = v1^2 + v2^2
        let d = Cochain1::new(
            klein.clone(),
            f2(),
            vec![vec![0], vec![1], vec![1], vec![0]],
        )
        .unwrap();
        assert!(d.is_hom());
        let dd = cup11(&d, &d).unwrap();
        let coords = express_poly(&dd, &basis).unwrap();
        assert_eq!(
            coords.monomials.iter().copied().collect::<Vec<_>>(),
            vec![(0, 0), (1, 1)]
        );
        assert_eq!(coords.symmetric, Some(SymmetricForm::E1Squared));
        // roundtrip: build a class from coordinates, express it again
        for mono in [
            vec![(0usize, 0usize)],
            vec![(0, 1)],
            vec![(0, 0), (0, 1), (1, 1)],
            vec![(1, 1), (0, 1)],
        ] {
            let set: std::collections::BTreeSet<_> = mono.iter().copied().collect();
            let cls = class_from_coords(&klein, &basis, &set).unwrap();
            assert_eq!(express_poly(&cls, &basis).unwrap().monomials, set);
        }
        // non elementary abelian group is rejected
        let c4 = cyclic(4);
        let x = CohomClass::zero(&c4, &f2());
        assert!(matches!(
            express_poly(&x, &[1]),
            Err(CohomError::NotElementaryAbelian)
        ));
    }

    #[test]
    fn q8_h2_is_spanned_by_cup_products() {
        let q8 = quaternion8();
        let chars = h1(&q8, &f2());
        let basis = h2(&q8, &f2());
        // every H^2 class must be a sum of cup products of characters
        let mut cups = Vec::new();
        for a in &chars.gens {
            for b in &chars.gens {
                cups.push(cup11(a, b).unwrap());
            }
        }
        for cls in basis.all_classes(&q8, &f2()) {
            // exhaustive subsets of the (at most 4) cup generators
            let found = (0..1u32 << cups.len()).any(|mask| {
                let mut acc = CohomClass::zero(&q8, &f2());
                for (i, cup) in cups.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc = acc.add(cup).unwrap();
                    }
                }
                class_eq(&acc, &cls).unwrap()
            });
            assert!(found);
        }
    }

    #[test]
    fn h2_dimension_is_relabel_invariant() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for g in [quaternion8(), dihedral(4), abelian(&[2, 2])] {
            let dim = h2(&g, &f2()).dimension();
            for _ in 0..5 {
                let mut perm: Vec<usize> = (1..g.order()).collect();
                perm.shuffle(&mut rng);
                let mut full = vec![0usize];
                full.extend(perm);
                assert_eq!(h2(&g.relabel(&full), &f2()).dimension(), dim);
            }
        }
    }

    #[test]
    fn restrict_composes() {
        // restrict(x, phi o psi) = restrict(restrict(x, phi), psi)
        let d4 = dihedral(4);
        let klein = {
            let (ab, _) = d4.abelianization();
            ab
        };
        let (_, proj) = d4.abelianization();
        let c2 = cyclic(2);
        let into_d4 = proj; // d4 -> klein
        let basis = h2(&klein, &f2());
        let diag = hom_from_gen_images(&c2, &klein, &[(1, 3)]).unwrap();
        for x in &basis.reps {
            let a = restrict(&restrict(x, &into_d4).unwrap(), &{
                // c2 -> d4 lifting the diagonal: pick any preimage hom; use
                // an element mapping onto klein element 3
                let g = (0..8).find(|&g| into_d4.apply(g) == 3 && d4.element_order(g) == 2).unwrap();
                hom_from_gen_images(&c2, &d4, &[(1, g)]).unwrap()
            })
            .unwrap();
            let b = restrict(x, &diag).unwrap();
            assert!(class_eq(&a, &b).unwrap());
        }
        let _ = generate(
            &GroupSpec::Perm { degree: 2, gens: vec![vec![vec![1, 2]]] },
            16,
        )
        .unwrap();
    }
}
