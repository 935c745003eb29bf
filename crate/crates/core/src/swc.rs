//! Stiefel-Whitney classes w1, w2 of exact orthogonal representations of
//! finite groups, and the three lifting verdicts they control: the
//! determinant cover needs w1^2 = 0, the unit-vector cover needs w2 = 0,
//! and the antiunit cover needs w2 + w1^2 = 0.

use crate::cliff::{pin_cocycles, pin_preimage, CliffError, OrthGroup, PinVariant};
use crate::cohom::{
    cup11, restrict_cocycle, Cochain1, Coefficients, CohomClass, CohomError,
};
use crate::ext::{decide_lift, ExtError, LiftReport};
use crate::grp::{FiniteGroup, GroupError, GroupHom};
use crate::rat::{Rat, RatMat};
use num_traits::One;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SwcError {
    #[error("pin analysis needs dim >= 2 (pad the representation explicitly)")]
    DimensionTooSmall,
    #[error("generator image is not orthogonal")]
    NotOrthogonal,
    #[error("images do not extend to a representation: {0}")]
    NotARepresentation(String),
    #[error("class verdict and explicit lift search disagree; internal bug")]
    VerdictMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cliff(#[from] CliffError),
    #[error(transparent)]
    Ext(#[from] ExtError),
    #[error(transparent)]
    Cohom(#[from] CohomError),
}

/// An exact orthogonal representation: one rational orthogonal matrix per
/// group element, multiplicative on the nose.
#[derive(Clone, Debug)]
pub struct OrthogonalRep {
    pub group: FiniteGroup,
    pub dim: usize,
    mats: Vec<RatMat>,
}

impl OrthogonalRep {
    /// Extend generator images (element index -> matrix) multiplicatively.
    /// The keys must generate the group; well-definedness is verified on
    /// every (element, generator) product, which covers all products.
    pub fn new(
        group: &FiniteGroup,
        dim: usize,
        images: &[(usize, RatMat)],
    ) -> Result<OrthogonalRep, SwcError> {
        for (g, m) in images {
            if *g >= group.order() {
                return Err(SwcError::Group(GroupError::BadIndex));
            }
            if m.dim != dim {
                return Err(SwcError::NotARepresentation("matrix of wrong dimension".into()));
            }
            if !m.is_orthogonal() {
                return Err(SwcError::NotOrthogonal);
            }
        }
        let n = group.order();
        let mut mats: Vec<Option<RatMat>> = vec![None; n];
        mats[0] = Some(RatMat::identity(dim));
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for (g, img) in images {
                let y = group.mul(x, *g);
                if mats[y].is_none() {
                    mats[y] = Some(mats[x].as_ref().unwrap().mul(img));
                    frontier.push(y);
                }
            }
        }
        if mats.iter().any(|m| m.is_none()) {
            return Err(SwcError::Group(GroupError::DoesNotGenerate));
        }
        let mats: Vec<RatMat> = mats.into_iter().map(|m| m.unwrap()).collect();
        for x in 0..n {
            for (g, img) in images {
                if mats[x].mul(img) != mats[group.mul(x, *g)] {
                    return Err(SwcError::NotARepresentation(format!(
                        "image extension is inconsistent at ({x},{g})"
                    )));
                }
            }
        }
        Ok(OrthogonalRep { group: group.clone(), dim, mats })
    }

    /// The trivial representation of the given dimension.
    pub fn trivial(group: &FiniteGroup, dim: usize) -> OrthogonalRep {
        OrthogonalRep {
            group: group.clone(),
            dim,
            mats: vec![RatMat::identity(dim); group.order()],
        }
    }

    pub fn matrix(&self, g: usize) -> &RatMat {
        &self.mats[g]
    }

    /// Block-diagonal direct sum of two representations of the same group.
    pub fn direct_sum(&self, other: &OrthogonalRep) -> Result<OrthogonalRep, SwcError> {
        if self.group != other.group {
            return Err(SwcError::NotARepresentation("different groups".into()));
        }
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Ok(OrthogonalRep { group: self.group.clone(), dim: self.dim + other.dim, mats })
    }

    /// Pad with a trivial summand; the classes and verdicts are unchanged.
    pub fn padded(&self, extra: usize) -> OrthogonalRep {
        self.direct_sum(&OrthogonalRep::trivial(&self.group, extra))
            .expect("same group by construction")
    }

    /// Precompose with a homomorphism into this representation's group.
    pub fn compose(&self, phi: &GroupHom) -> Result<OrthogonalRep, SwcError> {
        if phi.target != self.group {
            return Err(SwcError::NotARepresentation("hom does not land in the group".into()));
        }
        let mats = (0..phi.source.order()).map(|g| self.mats[phi.apply(g)].clone()).collect();
        Ok(OrthogonalRep { group: phi.source.clone(), dim: self.dim, mats })
    }

    /// Conjugate by a fixed orthogonal matrix: g -> c^T rho(g) c.
    pub fn conjugated(&self, c: &RatMat) -> Result<OrthogonalRep, SwcError> {
        if c.dim != self.dim {
            return Err(SwcError::NotARepresentation("conjugator of wrong dimension".into()));
        }
        if !c.is_orthogonal() {
            return Err(SwcError::NotOrthogonal);
        }
        let ct = c.transpose();
        let mats = self.mats.iter().map(|m| ct.mul(m).mul(c)).collect();
        Ok(OrthogonalRep { group: self.group.clone(), dim: self.dim, mats })
    }

    /// The image matrix group (elements in order of first appearance) and
    /// the quotient homomorphism onto it.
    pub fn image(&self) -> Result<(OrthGroup, GroupHom), SwcError> {
        let n = self.group.order();
        let mut index: HashMap<&RatMat, usize> = HashMap::new();
        let mut mats: Vec<RatMat> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        let mut map = vec![0usize; n];
        for g in 0..n {
            let m = &self.mats[g];
            match index.get(m) {
                Some(&i) => map[g] = i,
                None => {
                    index.insert(m, mats.len());
                    map[g] = mats.len();
                    mats.push(m.clone());
                    reps.push(g);
                }
            }
        }
        let k = mats.len();
        let mut table = vec![0usize; k * k];
        for a in 0..k {
            for b in 0..k {
                table[a * k + b] = map[self.group.mul(reps[a], reps[b])];
            }
        }
        let image_group = FiniteGroup::from_table_unchecked(table, k);
        let q = GroupHom::new(self.group.clone(), image_group.clone(), map)
            .map_err(SwcError::Group)?;
        let og = OrthGroup::new(image_group, self.dim, mats)?;
        Ok((og, q))
    }
}

/// First Stiefel-Whitney class: the determinant character
/// g -> (1 - det rho(g)) / 2 in Z/2.
pub fn w1(rep: &OrthogonalRep) -> Cochain1 {
    let coeffs = Coefficients::f2();
    let values = rep
        .mats
        .iter()
        .map(|m| {
            let d = m.det();
            debug_assert!(d == Rat::one() || d == -Rat::one());
            vec![if d == Rat::one() { 0u64 } else { 1 }]
        })
        .collect();
    Cochain1::new(rep.group.clone(), coeffs, values).expect("identity has det 1")
}

/// Second Stiefel-Whitney class: the unit-lift cocycle of the image matrix
/// group, pulled back along the representation. Needs dim >= 2.
pub fn w2(rep: &OrthogonalRep) -> Result<CohomClass, SwcError> {
    if rep.dim < 2 {
        return Err(SwcError::DimensionTooSmall);
    }
    let (og, q) = rep.image()?;
    let report = pin_cocycles(&og)?;
    let pulled = restrict_cocycle(&report.plus, &q)?;
    Ok(CohomClass::from_cocycle(pulled))
}

/// The full lifting report for a representation.
#[derive(Clone, Debug)]
pub struct SWReport {
    pub w1: Cochain1,
    pub w1_squared: CohomClass,
    pub w2: CohomClass,
    pub tilde: LiftReport,
    pub pin_plus: LiftReport,
    pub pin_minus: LiftReport,
}

impl SWReport {
    pub fn verdict(&self, variant: PinVariant) -> bool {
        self.report(variant).lifts
    }

    pub fn report(&self, variant: PinVariant) -> &LiftReport {
        match variant {
            PinVariant::Plus => &self.pin_plus,
            PinVariant::Minus => &self.pin_minus,
            PinVariant::Tilde => &self.tilde,
        }
    }
}

/// Compute w1, w2 and the three lifting verdicts, each verdict backed by an
/// explicit lift (or obstruction) against the corresponding double-cover
/// preimage of the image group. The class arithmetic and the explicit lift
/// search must agree; disagreement is reported as an internal error.
pub fn lifting_report(rep: &OrthogonalRep) -> Result<SWReport, SwcError> {
    if rep.dim < 2 {
        return Err(SwcError::DimensionTooSmall);
    }
    let (og, q) = rep.image()?;
    let chi = w1(rep);
    let w1sq = cup11(&chi, &chi)?;
    let w2class = w2(rep)?;
    let pin_minus_obstruction = w2class.add(&w1sq)?;
    let mut reports = Vec::new();
    for (variant, class_zero) in [
        (PinVariant::Tilde, w1sq.is_zero()),
        (PinVariant::Plus, w2class.is_zero()),
        (PinVariant::Minus, pin_minus_obstruction.is_zero()),
    ] {
        let cover = pin_preimage(&og, variant)?;
        let lift = decide_lift(&q, &cover)?;
        if lift.lifts != class_zero {
            return Err(SwcError::VerdictMismatch);
        }
        reports.push(lift);
    }
    let pin_minus = reports.pop().unwrap();
    let pin_plus = reports.pop().unwrap();
    let tilde = reports.pop().unwrap();
    Ok(SWReport { w1: chi, w1_squared: w1sq, w2: w2class, tilde, pin_plus, pin_minus })
}

/// Whitney sum cross-check (textbook formula, used as an oracle in tests):
/// both sides of w2(a + b) = w2(a) + w2(b) + w1(a) u w1(b).
pub fn whitney_w2_sum(
    a: &OrthogonalRep,
    b: &OrthogonalRep,
) -> Result<(CohomClass, CohomClass), SwcError> {
    let sum = a.direct_sum(b)?;
    let lhs = w2(&sum)?;
    let mixed = cup11(&w1(a), &w1(b))?;
    let rhs = w2(a)?.add(&w2(b)?)?.add(&mixed)?;
    Ok((lhs, rhs))
}
