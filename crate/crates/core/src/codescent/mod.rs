//! Codescent over finite sets: the pullback comonad of a map `φ: E → B`.

mod comonad;
mod datum;
mod finset;
pub mod random;
mod slice;

pub use comonad::{
    barr_contractibility_from_section, cech_level_size, cech_nerve, coalgebra_laws, comonad_k_phi, detect_coalgebra,
    trivial_product, CoalgebraSearch, FinsetCoalgebra, PullbackComonad,
};
pub use datum::{
    beck_codescent_check, can_upper_phi, q_can_counit, q_indecomposables, validate_codescent_datum,
    BeckCodescentReport, CodescentDatum, CounitComparison, Indecomposables,
};
pub use finset::{pullback, quotient, FinSet, FinSetMap, Label, UnionFind};
pub use slice::{Bundle, BundleMap, SliceCategory};
