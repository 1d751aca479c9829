//! Descent along a ring map `φ: B → A`.

pub mod amitsur;
pub mod beck;
pub mod completion;
pub mod coring;
pub mod monad;

pub use amitsur::{
    amitsur_cohomology, amitsur_cohomology_range, amitsur_complex, descent_e2, descent_e2_range, hom_cosimplicial,
};
pub use beck::{adjunction_iso_check, beck_descent_check, AdjunctionReport, BeckReport};
pub use completion::{
    algebra_family, restricted_module_sdr, strict_completion_check, Completion, CompletionCertificate,
};
pub use coring::{
    can_phi, can_prim_unit, descent_coring, prim_phi, validate_descent_datum, DescentCoRing, DescentDatum,
    UnitComparison,
};
pub use monad::{monad_t_phi, BaseChangeMonad};
