//! Exact computational algebra for central extensions of finite groups.
//!
//! The crate computes, with integer/rational arithmetic only:
//!
//! * finite groups as multiplication tables, generated from permutation or
//!   exact orthogonal matrix generators ([`grp`]);
//! * first and second group cohomology with finite abelian coefficients via
//!   the normalized bar resolution, together with class arithmetic,
//!   restriction, cup products of degree-1 classes and polynomial coordinates
//!   over elementary abelian 2-groups ([`cohom`]);
//! * the abelian group of central extensions: cocycle <-> extension in both
//!   directions, Baer sums, pullback, pushout and lifting decisions ([`ext`]);
//! * Clifford algebra arithmetic over the rationals, reflection words for
//!   exact orthogonal matrices, and the three double-cover 2-cocycles
//!   (pin plus / pin minus / det-tilde) of a finite orthogonal matrix group
//!   ([`cliff`]);
//! * Stiefel-Whitney classes w1, w2 of exact orthogonal representations and
//!   the three lifting verdicts they control ([`swc`]).
//!
//! The [`checks`] module bundles the verification suite exposed by the CLI
//! as `pinlift paper-checks`.

pub mod checks;
pub mod cliff;
pub mod cohom;
pub mod ext;
pub mod grp;
pub mod rat;
pub mod swc;

pub use cohom::{Cochain1, Cocycle2, Coefficients, CohomClass};
pub use ext::CentralExtension;
pub use grp::{FiniteGroup, GroupHom, GroupSpec};
