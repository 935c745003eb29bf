//! The abelian group of central extensions of a finite group G by a finite
//! abelian group A: cocycle <-> extension in both directions, equivalence,
//! Baer sums, pullback along group homomorphisms, pushout along coefficient
//! homomorphisms, lifting decisions, and conjugation actions on restricted
//! extensions.

use crate::cohom::{
    class_eq, coboundary_witness, hom_count, restrict, restrict_cocycle, AVal, Cochain1,
    Cocycle2, CoeffHom, Coefficients, CohomClass, CohomError,
};
use crate::grp::{FiniteGroup, GroupError, GroupHom};
use rand::Rng;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtError {
    #[error("not a normalized 2-cocycle: {0}")]
    InvalidCocycle(String),
    #[error("not a central extension: {0}")]
    InvalidExtension(String),
    #[error("operands live over different groups or coefficients")]
    MismatchedAmbient,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("middle group too large for the brute-force oracle (order {0})")]
    TooLarge(usize),
    #[error(transparent)]
    Cohom(#[from] CohomError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A central extension 0 -> A -> E -> G -> 1: the middle group together
/// with the inclusion of the (canonically indexed) coefficient group and
/// the projection onto the base.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    e: FiniteGroup,
    coeffs: Coefficients,
    i: GroupHom,
    p: GroupHom,
}

/// A set-theoretic section of the projection, normalized at the identity.
#[derive(Clone, Debug)]
pub struct Section {
    values: Vec<usize>,
}

impl Section {
    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

impl CentralExtension {
    /// Validating constructor. Checks that i embeds the canonical group of
    /// `coeffs` onto a central subgroup, p is surjective, ker p = im i, and
    /// |E| = |A| |G|.
    pub fn new(
        e: FiniteGroup,
        coeffs: Coefficients,
        i: GroupHom,
        p: GroupHom,
    ) -> Result<CentralExtension, ExtError> {
        if i.source != coeffs.group() {
            return Err(ExtError::InvalidExtension(
                "kernel inclusion must start at the canonical coefficient group".into(),
            ));
        }
        if i.target != e || p.source != e {
            return Err(ExtError::InvalidExtension("i and p do not connect through E".into()));
        }
        if !i.is_injective() {
            return Err(ExtError::InvalidExtension("i is not injective".into()));
        }
        if !p.is_surjective() {
            return Err(ExtError::InvalidExtension("p is not surjective".into()));
        }
        if e.order() != coeffs.size() as usize * p.target.order() {
            return Err(ExtError::InvalidExtension("|E| != |A| |G|".into()));
        }
        let center_ok = (0..i.source.order()).all(|a| {
            let ia = i.apply(a);
            (0..e.order()).all(|x| e.mul(ia, x) == e.mul(x, ia))
        });
        if !center_ok {
            return Err(ExtError::InvalidExtension("image of i is not central".into()));
        }
        let mut in_image = vec![false; e.order()];
        for a in 0..i.source.order() {
            in_image[i.apply(a)] = true;
        }
        for x in 0..e.order() {
            if (p.apply(x) == 0) != in_image[x] {
                return Err(ExtError::InvalidExtension("ker p != im i".into()));
            }
        }
        Ok(CentralExtension { e, coeffs, i, p })
    }

    pub fn middle(&self) -> &FiniteGroup {
        &self.e
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.p.target
    }

    pub fn coeffs(&self) -> &Coefficients {
        &self.coeffs
    }

    pub fn inclusion(&self) -> &GroupHom {
        &self.i
    }

    pub fn projection(&self) -> &GroupHom {
        &self.p
    }

    fn same_ambient(&self, other: &CentralExtension) -> bool {
        self.base() == other.base() && self.coeffs == other.coeffs
    }

    /// E-index of i(a) for a coefficient value.
    fn embed(&self, v: &AVal) -> usize {
        self.i.apply(self.coeffs.index_of(v))
    }

    /// Inverse of i on its image; None off the image.
    fn kernel_value(&self, x: usize) -> Option<AVal> {
        (0..self.i.source.order())
            .find(|&a| self.i.apply(a) == x)
            .map(|a| self.coeffs.value_of(a))
    }

    /// The least-index preimage of each base element.
    pub fn default_section(&self) -> Section {
        let g = self.base().order();
        let mut values = vec![usize::MAX; g];
        for x in 0..self.e.order() {
            let b = self.p.apply(x);
            if values[b] == usize::MAX {
                values[b] = x;
            }
        }
        Section { values }
    }

    /// A uniformly random section (identity fibre pinned at 1_E).
    pub fn random_section<R: Rng>(&self, rng: &mut R) -> Section {
        let g = self.base().order();
        let mut fibres: Vec<Vec<usize>> = vec![Vec::new(); g];
        for x in 0..self.e.order() {
            fibres[self.p.apply(x)].push(x);
        }
        let mut values = vec![0usize; g];
        for b in 1..g {
            values[b] = fibres[b][rng.gen_range(0..fibres[b].len())];
        }
        Section { values }
    }

    /// The cocycle f(g,h) = i^-1( s(g) s(h) s(gh)^-1 ) of a chosen section
    /// (default: least-index preimages). The class does not depend on the
    /// section.
    pub fn to_class(&self, section: Option<&Section>) -> CohomClass {
        let default;
        let s = match section {
            Some(s) => s,
            None => {
                default = self.default_section();
                &default
            }
        };
        let g = self.base();
        let n = g.order();
        assert_eq!(s.values.len(), n, "section over the wrong group");
        assert_eq!(s.values[0], 0, "section must be normalized");
        let mut kernel_of = HashMap::new();
        for a in 0..self.i.source.order() {
            kernel_of.insert(self.i.apply(a), self.coeffs.value_of(a));
        }
        let mut values = vec![self.coeffs.zero(); n * n];
        for x in 0..n {
            for y in 0..n {
                debug_assert_eq!(self.p.apply(s.values[x]), x, "not a section");
                let prod = self.e.mul(
                    self.e.mul(s.values[x], s.values[y]),
                    self.e.inv(s.values[g.mul(x, y)]),
                );
                values[x * n + y] = kernel_of
                    .get(&prod)
                    .expect("s(g)s(h)s(gh)^-1 lies in ker p = im i")
                    .clone();
            }
        }
        CohomClass::from_cocycle(Cocycle2::new_unchecked(g.clone(), self.coeffs.clone(), values))
    }
}

/// Build the extension E = A x G with product
/// (a, g)(b, h) = (a + b + f(g,h), gh). Pairs are indexed a |G| + g.
pub fn from_cocycle(f: &Cocycle2) -> CentralExtension {
    let g = &f.group;
    let coeffs = &f.coeffs;
    let n = g.order();
    let asize = coeffs.size() as usize;
    let order = asize * n;
    let mut mul = vec![0usize; order * order];
    for a in 0..asize {
        let av = coeffs.value_of(a);
        for x in 0..n {
            for b in 0..asize {
                let bv = coeffs.value_of(b);
                for y in 0..n {
                    let sum = coeffs.add(&coeffs.add(&av, &bv), f.at(x, y));
                    let idx = coeffs.index_of(&sum) * n + g.mul(x, y);
                    mul[(a * n + x) * order + (b * n + y)] = idx;
                }
            }
        }
    }
    let e = FiniteGroup::from_table_unchecked(mul, order);
    let agroup = coeffs.group();
    let i = GroupHom::new(agroup, e.clone(), (0..asize).map(|a| a * n).collect())
        .expect("a |-> (a, 1) is an injective homomorphism");
    let p = GroupHom::new(e.clone(), g.clone(), (0..order).map(|x| x % n).collect())
        .expect("(a, g) |-> g is a surjective homomorphism");
    CentralExtension::new(e, coeffs.clone(), i, p)
        .expect("the cocycle construction is a central extension")
}

/// Validate a raw table as a normalized 2-cocycle and build its extension.
pub fn from_cocycle_table(
    group: &FiniteGroup,
    coeffs: &Coefficients,
    rows: Vec<Vec<AVal>>,
) -> Result<CentralExtension, ExtError> {
    let f = Cocycle2::from_rows(group.clone(), coeffs.clone(), rows)
        .map_err(|e| ExtError::InvalidCocycle(e.to_string()))?;
    Ok(from_cocycle(&f))
}

/// Equivalence of extensions, decided on cohomology classes.
pub fn equivalent(x: &CentralExtension, y: &CentralExtension) -> Result<bool, ExtError> {
    if !x.same_ambient(y) {
        return Err(ExtError::MismatchedAmbient);
    }
    Ok(class_eq(&x.to_class(None), &y.to_class(None))?)
}

/// Brute-force equivalence oracle: searches for an isomorphism E -> E'
/// commuting with i and p, enumerating all fibre-wise candidates. Capped at
/// |E| <= 32; intended for tests.
pub fn equivalent_bruteforce(
    x: &CentralExtension,
    y: &CentralExtension,
) -> Result<bool, ExtError> {
    if !x.same_ambient(y) {
        return Err(ExtError::MismatchedAmbient);
    }
    if x.e.order() > 32 {
        return Err(ExtError::TooLarge(x.e.order()));
    }
    let g = x.base();
    let n = g.order();
    let asize = x.coeffs.size() as usize;
    let sx = x.default_section();
    let sy = y.default_section();
    // decompose each element of E_x as i(a) s_x(g)
    let mut decomp = vec![(0usize, x.coeffs.zero()); x.e.order()];
    for e in 0..x.e.order() {
        let b = x.p.apply(e);
        let rest = x.e.mul(e, x.e.inv(sx.values[b]));
        let a = x.kernel_value(rest).expect("e s(p(e))^-1 lies in the kernel");
        decomp[e] = (b, a);
    }
    // enumerate translations t: G -> A with t(1) = 0
    let mut t = vec![0usize; n]; // kernel indices
    loop {
        // candidate phi(i(a) s_x(g)) = i(a + t(g)) s_y(g)
        let mut phi = vec![0usize; x.e.order()];
        for e in 0..x.e.order() {
            let (b, ref a) = decomp[e];
            let shifted = x.coeffs.add(a, &x.coeffs.value_of(t[b]));
            phi[e] = y.e.mul(y.embed(&shifted), sy.values[b]);
        }
        let hom = (0..x.e.order()).all(|e1| {
            (0..x.e.order()).all(|e2| phi[x.e.mul(e1, e2)] == y.e.mul(phi[e1], phi[e2]))
        });
        if hom {
            return Ok(true);
        }
        // next mixed-radix value of (t[1], ..., t[n-1])
        let mut pos = 1;
        loop {
            if pos == n {
                return Ok(false);
            }
            t[pos] += 1;
            if t[pos] < asize {
                break;
            }
            t[pos] = 0;
            pos += 1;
        }
    }
}

/// Baer sum: quotient of the fibre product E1 x_G E2 by the antidiagonal
/// copy of A.
pub fn baer_sum(
    x: &CentralExtension,
    y: &CentralExtension,
) -> Result<CentralExtension, ExtError> {
    if !x.same_ambient(y) {
        return Err(ExtError::MismatchedAmbient);
    }
    // fibre product, pairs in lexicographic order
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for e1 in 0..x.e.order() {
        for e2 in 0..y.e.order() {
            if x.p.apply(e1) == y.p.apply(e2) {
                index.insert((e1, e2), pairs.len());
                pairs.push((e1, e2));
            }
        }
    }
    let k = pairs.len();
    let mut mul = vec![0usize; k * k];
    for (ia, &(a1, a2)) in pairs.iter().enumerate() {
        for (ib, &(b1, b2)) in pairs.iter().enumerate() {
            mul[ia * k + ib] = index[&(x.e.mul(a1, b1), y.e.mul(a2, b2))];
        }
    }
    let fibre = FiniteGroup::from_table_unchecked(mul, k);
    // antidiagonal (i1(a), i2(a)^-1)
    let asize = x.coeffs.size() as usize;
    let anti: Vec<usize> = (0..asize)
        .map(|a| index[&(x.i.apply(a), y.e.inv(y.i.apply(a)))])
        .collect();
    let (e3, proj) = fibre.quotient(&anti)?;
    let agroup = x.coeffs.group();
    let i3 = GroupHom::new(
        agroup,
        e3.clone(),
        (0..asize).map(|a| proj.apply(index[&(x.i.apply(a), 0)])).collect(),
    )
    .map_err(|_| ExtError::InvalidExtension("antidiagonal quotient broke the kernel".into()))?;
    let mut p3_map = vec![usize::MAX; e3.order()];
    for (idx, &(e1, _)) in pairs.iter().enumerate() {
        p3_map[proj.apply(idx)] = x.p.apply(e1);
    }
    let p3 = GroupHom::new(e3.clone(), x.base().clone(), p3_map)
        .map_err(|_| ExtError::InvalidExtension("projection did not descend".into()))?;
    CentralExtension::new(e3, x.coeffs.clone(), i3, p3)
}

/// Pullback along phi: G' -> G; the fibre-product subgroup of G' x E.
pub fn pullback(
    phi: &GroupHom,
    x: &CentralExtension,
) -> Result<CentralExtension, ExtError> {
    if phi.target != *x.base() {
        return Err(ExtError::MismatchedAmbient);
    }
    let gp = &phi.source;
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for g in 0..gp.order() {
        for e in 0..x.e.order() {
            if phi.apply(g) == x.p.apply(e) {
                index.insert((g, e), pairs.len());
                pairs.push((g, e));
            }
        }
    }
    let k = pairs.len();
    let mut mul = vec![0usize; k * k];
    for (ia, &(g1, e1)) in pairs.iter().enumerate() {
        for (ib, &(g2, e2)) in pairs.iter().enumerate() {
            mul[ia * k + ib] = index[&(gp.mul(g1, g2), x.e.mul(e1, e2))];
        }
    }
    let ep = FiniteGroup::from_table_unchecked(mul, k);
    let asize = x.coeffs.size() as usize;
    let ip = GroupHom::new(
        x.coeffs.group(),
        ep.clone(),
        (0..asize).map(|a| index[&(0, x.i.apply(a))]).collect(),
    )
    .expect("a |-> (1, i(a)) is an injective homomorphism");
    let pp = GroupHom::new(
        ep.clone(),
        gp.clone(),
        pairs.iter().map(|&(g, _)| g).collect(),
    )
    .expect("first projection is a homomorphism");
    CentralExtension::new(ep, x.coeffs.clone(), ip, pp)
}

/// Pushout along psi: A -> A'; the quotient (E x A') / {(i(a), -psi(a))}.
pub fn pushout(psi: &CoeffHom, x: &CentralExtension) -> Result<CentralExtension, ExtError> {
    if *psi.src() != x.coeffs {
        return Err(ExtError::MismatchedAmbient);
    }
    let dst = psi.dst().clone();
    let aprime = dst.group();
    let apn = aprime.order();
    let d = x.e.direct_product(&aprime);
    let asize = x.coeffs.size() as usize;
    let twisted: Vec<usize> = (0..asize)
        .map(|a| {
            let av = x.coeffs.value_of(a);
            let img = dst.neg(&psi.apply(&av));
            x.i.apply(a) * apn + dst.index_of(&img)
        })
        .collect();
    let (ep, proj) = d.quotient(&twisted)?;
    let ip = GroupHom::new(
        aprime.clone(),
        ep.clone(),
        (0..apn).map(|ap| proj.apply(ap)).collect(),
    )
    .map_err(|_| ExtError::InvalidExtension("pushout kernel is not embedded".into()))?;
    let mut pmap = vec![usize::MAX; ep.order()];
    for e in 0..x.e.order() {
        for ap in 0..apn {
            pmap[proj.apply(e * apn + ap)] = x.p.apply(e);
        }
    }
    let pp = GroupHom::new(ep.clone(), x.base().clone(), pmap)
        .map_err(|_| ExtError::InvalidExtension("projection did not descend".into()))?;
    CentralExtension::new(ep, dst, ip, pp)
}

/// The outcome of a lifting decision for phi against an extension.
#[derive(Clone, Debug)]
pub struct LiftReport {
    pub lifts: bool,
    /// The obstruction class (the pulled-back class) when no lift exists.
    pub obstruction: Option<CohomClass>,
    /// Number of lifts, |Hom(G', A)|, when a lift exists; 0 otherwise.
    pub count: u64,
    /// One explicit lift G' -> E.
    pub witness: Option<GroupHom>,
    /// All lifts, materialized when count <= 1024.
    pub all_lifts: Option<Vec<GroupHom>>,
}

/// Decide whether phi: G' -> G lifts through the extension; produce an
/// explicit lift and the lift count, or the obstruction class.
pub fn decide_lift(phi: &GroupHom, x: &CentralExtension) -> Result<LiftReport, ExtError> {
    if phi.target != *x.base() {
        return Err(ExtError::MismatchedAmbient);
    }
    let cls = x.to_class(None);
    let pulled = restrict_cocycle(cls.representative(), phi)?;
    let gp = &phi.source;
    match coboundary_witness(&pulled) {
        None => Ok(LiftReport {
            lifts: false,
            obstruction: Some(restrict(&cls, phi)?),
            count: 0,
            witness: None,
            all_lifts: None,
        }),
        Some(t) => {
            let s = x.default_section();
            let build = |chi: Option<&Cochain1>| -> GroupHom {
                let map: Vec<usize> = (0..gp.order())
                    .map(|g| {
                        let mut a = x.coeffs.neg(t.eval(g));
                        if let Some(chi) = chi {
                            a = x.coeffs.add(&a, chi.eval(g));
                        }
                        x.e.mul(x.embed(&a), s.values[phi.apply(g)])
                    })
                    .collect();
                GroupHom::new(gp.clone(), x.e.clone(), map)
                    .expect("coboundary witness produces a lift")
            };
            let witness = build(None);
            debug_assert!((0..gp.order())
                .all(|g| x.p.apply(witness.apply(g)) == phi.apply(g)));
            let count = hom_count(gp, &x.coeffs);
            let all_lifts = if count <= 1024 {
                Some(
                    crate::cohom::all_characters(gp, &x.coeffs)
                        .iter()
                        .map(|chi| build(Some(chi)))
                        .collect(),
                )
            } else {
                None
            };
            Ok(LiftReport {
                lifts: true,
                obstruction: None,
                count,
                witness: Some(witness),
                all_lifts,
            })
        }
    }
}

/// Pull back an extension of a normal subgroup H <= G along the inner
/// automorphism Int(g)|_H. `incl` embeds H into G; `x` is an extension of H.
pub fn conj_action(
    g: usize,
    incl: &GroupHom,
    x: &CentralExtension,
) -> Result<CentralExtension, ExtError> {
    if incl.source != *x.base() {
        return Err(ExtError::MismatchedAmbient);
    }
    let big = &incl.target;
    if g >= big.order() {
        return Err(ExtError::Group(GroupError::BadIndex));
    }
    let h_order = incl.source.order();
    let mut back = HashMap::new();
    for h in 0..h_order {
        back.insert(incl.apply(h), h);
    }
    let mut map = Vec::with_capacity(h_order);
    for h in 0..h_order {
        let conj = big.conj(incl.apply(h), g);
        match back.get(&conj) {
            Some(&hh) => map.push(hh),
            None => return Err(ExtError::NotNormal),
        }
    }
    let int_h = GroupHom::new(incl.source.clone(), incl.source.clone(), map)
        .expect("conjugation restricted to a normal subgroup is an automorphism");
    pullback(&int_h, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::h2;
    use crate::grp::catalog::{abelian, cyclic, quaternion8};
    use crate::grp::hom_from_gen_images;
    use crate::grp::identify::identify;

    fn f2() -> Coefficients {
        Coefficients::f2()
    }

    fn nonzero_c2_ext() -> CentralExtension {
        let c2 = cyclic(2);
        let basis = h2(&c2, &f2());
        from_cocycle(basis.reps[0].representative())
    }

    fn trivial_ext(g: &FiniteGroup) -> CentralExtension {
        from_cocycle(&Cocycle2::zero(g, &f2()))
    }

    #[test]
    fn trivial_cocycle_gives_direct_product() {
        let klein = abelian(&[2, 2]);
        let x = trivial_ext(&klein);
        assert_eq!(x.middle().order(), 8);
        assert_eq!(identify(x.middle()).as_deref(), Some("C2xC2xC2"));
        assert!(x.to_class(None).is_zero());
    }

    #[test]
    fn nonzero_cocycle_over_c2_gives_c4() {
        let x = nonzero_c2_ext();
        assert_eq!(identify(x.middle()).as_deref(), Some("C4"));
        assert_eq!(x.middle().order_multiset(), vec![1, 2, 4, 4]);
        assert!(!x.to_class(None).is_zero());
    }

    #[test]
    fn roundtrip_to_class_from_cocycle() {
        for g in [cyclic(4), abelian(&[2, 2]), quaternion8()] {
            let basis = h2(&g, &f2());
            for rep in &basis.reps {
                let x = from_cocycle(rep.representative());
                assert!(class_eq(&x.to_class(None), rep).unwrap());
            }
        }
    }

    #[test]
    fn class_is_section_independent() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let g = abelian(&[2, 2]);
        let basis = h2(&g, &f2());
        let x = from_cocycle(basis.reps[1].representative());
        let base = x.to_class(None);
        for _ in 0..100 {
            let s = x.random_section(&mut rng);
            assert!(class_eq(&x.to_class(Some(&s)), &base).unwrap());
        }
    }

    #[test]
    fn equivalence_class_vs_bruteforce() {
        let x = nonzero_c2_ext();
        let t = trivial_ext(&cyclic(2));
        assert!(equivalent(&x, &x).unwrap());
        assert!(equivalent_bruteforce(&x, &x).unwrap());
        assert!(!equivalent(&x, &t).unwrap());
        assert!(!equivalent_bruteforce(&x, &t).unwrap());
    }

    #[test]
    fn baer_sum_laws_over_c2() {
        let x = nonzero_c2_ext();
        let t = trivial_ext(&cyclic(2));
        // neutral element
        let xt = baer_sum(&x, &t).unwrap();
        assert!(equivalent(&xt, &x).unwrap());
        // 2-torsion: C4 + C4 = trivial
        let xx = baer_sum(&x, &x).unwrap();
        assert!(equivalent(&xx, &t).unwrap());
        assert_eq!(identify(xx.middle()).as_deref(), Some("C2xC2"));
        // additivity on classes
        let sum_class = x.to_class(None).add(&x.to_class(None)).unwrap();
        assert!(class_eq(&xx.to_class(None), &sum_class).unwrap());
    }

    #[test]
    fn pullback_identity_and_trivial() {
        let x = nonzero_c2_ext();
        let idh = GroupHom::identity_hom(x.base());
        let back = pullback(&idh, &x).unwrap();
        assert!(equivalent(&back, &x).unwrap());
        // pull back along the trivial group
        let triv = cyclic(1);
        let into = GroupHom::new(triv.clone(), x.base().clone(), vec![0]).unwrap();
        let pb = pullback(&into, &x).unwrap();
        assert_eq!(pb.middle().order(), 2);
        assert!(pb.to_class(None).is_zero());
    }

    #[test]
    fn pullback_computes_restriction_on_classes() {
        // diagonal C2 inside the Klein group against each H^2 class
        let klein = abelian(&[2, 2]);
        let c2 = cyclic(2);
        let diag = hom_from_gen_images(&c2, &klein, &[(1, 3)]).unwrap();
        for rep in &h2(&klein, &f2()).reps {
            let x = from_cocycle(rep.representative());
            let pb = pullback(&diag, &x).unwrap();
            let restricted = restrict(&x.to_class(None), &diag).unwrap();
            assert!(class_eq(&pb.to_class(None), &restricted).unwrap());
        }
    }

    #[test]
    fn pushout_examples() {
        let x = nonzero_c2_ext();
        // identity pushout
        let idpsi = CoeffHom::identity(&f2());
        let same = pushout(&idpsi, &x).unwrap();
        assert!(equivalent(&same, &x).unwrap());
        // zero map kills the class
        let z4 = Coefficients::new(vec![4]).unwrap();
        let zero = CoeffHom::new(f2(), z4.clone(), vec![vec![0]]).unwrap();
        let killed = pushout(&zero, &x).unwrap();
        assert!(killed.to_class(None).is_zero());
        assert_eq!(killed.middle().order(), 8);
        // Z/2 -> Z/4 by 1 |-> 2: order-8 middle group; the class equals the
        // class of the pushed cocycle psi o f
        let emb = CoeffHom::new(f2(), z4.clone(), vec![vec![2]]).unwrap();
        let pushed = pushout(&emb, &x).unwrap();
        assert_eq!(pushed.middle().order(), 8);
        assert_eq!(identify(pushed.middle()).as_deref(), Some("C4xC2"));
        let f = x.to_class(None);
        let pushed_cocycle = {
            let rep = f.representative();
            let n = rep.group.order();
            let mut rows = Vec::new();
            for g in 0..n {
                let mut row = Vec::new();
                for h in 0..n {
                    row.push(emb.apply(rep.at(g, h)));
                }
                rows.push(row);
            }
            Cocycle2::from_rows(rep.group.clone(), z4, rows).unwrap()
        };
        assert!(class_eq(
            &pushed.to_class(None),
            &CohomClass::from_cocycle(pushed_cocycle)
        )
        .unwrap());
    }

    #[test]
    fn lift_decisions_over_c2() {
        let x = nonzero_c2_ext();
        let t = trivial_ext(&cyclic(2));
        // trivial extension always lifts; count = |Hom(G', Z/2)| = 2
        let idh = GroupHom::identity_hom(x.base());
        let r = decide_lift(&idh, &t).unwrap();
        assert!(r.lifts);
        assert_eq!(r.count, 2);
        assert_eq!(r.all_lifts.as_ref().unwrap().len(), 2);
        // the nonsplit extension admits no section
        let r = decide_lift(&idh, &x).unwrap();
        assert!(!r.lifts);
        assert!(!r.obstruction.as_ref().unwrap().is_zero());
        // C4 ->> C2 lifts through C4 with 2 lifts
        let c4 = cyclic(4);
        let surj = hom_from_gen_images(&c4, x.base(), &[(1, 1)]).unwrap();
        let r = decide_lift(&surj, &x).unwrap();
        assert!(r.lifts);
        assert_eq!(r.count, 2);
        let w = r.witness.unwrap();
        for g in 0..4 {
            assert_eq!(x.projection().apply(w.apply(g)), surj.apply(g));
        }
        // oracle: exhaustive search over generator images of C4 into E = C4
        // confirms exactly two lifts exist
        let mut found = 0;
        for img in 0..4 {
            if hom_from_gen_images(&c4, x.middle(), &[(1, img)])
                .map(|h| (0..4).all(|g| x.projection().apply(h.apply(g)) == surj.apply(g)))
                .unwrap_or(false)
            {
                found += 1;
            }
        }
        assert_eq!(found, 2);
    }

    #[test]
    fn conjugation_fixes_restricted_classes() {
        let q8 = quaternion8();
        // H = <i> = C4, normal in Q8
        let i = (0..8).find(|&x| q8.element_order(x) == 4).unwrap();
        let (h, incl) = q8.subgroup(&[i]).unwrap();
        assert_eq!(h.order(), 4);
        for rep in &h2(&q8, &f2()).reps {
            let x = from_cocycle(rep.representative());
            let xh = pullback(&incl, &x).unwrap();
            for g in 0..8 {
                let conj = conj_action(g, &incl, &xh).unwrap();
                assert!(equivalent(&conj, &xh).unwrap());
            }
        }
        // g = 1 gives an extension equivalent to the original
        let x = from_cocycle(h2(&q8, &f2()).reps[0].representative());
        let xh = pullback(&incl, &x).unwrap();
        let same = conj_action(0, &incl, &xh).unwrap();
        assert_eq!(same.middle().order(), xh.middle().order());
        assert!(equivalent(&same, &xh).unwrap());
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let s3 = crate::grp::catalog::dihedral(3);
        let refl = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let (_, incl) = s3.subgroup(&[refl]).unwrap();
        let xh = trivial_ext(&incl.source);
        let rot = (1..6).find(|&x| s3.element_order(x) == 3).unwrap();
        assert!(matches!(
            conj_action(rot, &incl, &xh),
            Err(ExtError::NotNormal)
        ));
    }

    #[test]
    fn invalid_cocycle_table_rejected() {
        let c2 = cyclic(2);
        // non-normalized table
        let rows = vec![vec![vec![1u64], vec![0]], vec![vec![0], vec![0]]];
        assert!(matches!(
            from_cocycle_table(&c2, &f2(), rows),
            Err(ExtError::InvalidCocycle(_))
        ));
        // failed cocycle identity on C4
        let c4 = cyclic(4);
        let mut rows: Vec<Vec<AVal>> = vec![vec![vec![0u64]; 4]; 4];
        rows[1][1] = vec![1];
        assert!(matches!(
            from_cocycle_table(&c4, &f2(), rows),
            Err(ExtError::InvalidCocycle(_))
        ));
    }
}
