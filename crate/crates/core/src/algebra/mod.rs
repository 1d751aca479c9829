//! Exact linear algebra over ℤ: matrices, Smith normal form, presented
//! abelian groups, rings, modules and chain complexes.

pub mod catalog;
pub mod complex;
pub mod group;
pub mod matrix;
pub mod module;
pub mod ring;
pub mod snf;

pub use complex::{chain_homology, hom_complex, ChainComplex, HomComplex};
pub use group::{FgAbelianGroup, GroupMap, InvariantFactors, Subquotient};
pub use matrix::{vector, IntegerMatrix};
pub use module::{
    base_change, base_change_map, coequalizer, equalizer, find_isomorphism, hom_group, restrict, restrict_map,
    HomGroup, ModuleMap, ModuleOverRing,
};
pub use ring::{RingMap, RingSpec};
pub use snf::{smith_normal_form, SmithForm};
