//! Truncated (co)simplicial objects over a generic category, the (co)bar
//! constructions of (co)monads, cohomotopy, and contractibility checks.

pub mod category;
pub mod cobar;
pub mod cohomotopy;
pub mod contractible;
pub mod matching;
pub mod monad;
pub mod object;

pub use category::{Category, FiniteColimits, FiniteLimits, Modules, Opposite};
pub use cobar::{bar, cobar};
pub use cohomotopy::{alternating_coboundary, cohomotopy, normalized_cochain, unnormalized_cohomology};
pub use contractible::{
    check_contractible_cosimplicial, check_contractible_simplicial, extra_codegeneracies_from_algebra,
    extra_degeneracies_from_coalgebra, Contractibility, SdrCertificate,
};
pub use matching::{h0_cosimplicial, latching_object, matching_object, pi0_simplicial, CanonicalMap};
pub use monad::{check_comonad_laws, check_monad_laws, Comonad, IdentityMonad, LawReport, Monad};
pub use object::{
    check_cosimplicial_identities, check_simplicial_identities, IdentityReport, TruncatedCosimplicial,
    TruncatedSimplicial,
};
