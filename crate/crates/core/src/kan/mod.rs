//! Left Kan extensions along functors of finite categories and the comonad
//! they induce on diagrams.

mod diagram;
mod extension;
mod fincat;
mod nerve;
pub mod random;

pub use diagram::{
    colimit, linearize, linearize_diagram, Colimit, DiagFunctor, Diagrams, NatTrans, Sets, ValueCategory, ValueKind,
};
pub use extension::{
    assembly_pi0_check, fullness_identity_check, kan_bar, kan_bar_certificate, kan_comonad, left_kan, simp_phi,
    AssemblyReport, FullnessVerdict, KanComonad, SimpCategory,
};
pub use fincat::{Arrow, CatFunctor, FinCat, FreeCategory};
pub use nerve::{nerve_cochains, nerve_level, Simplex};
