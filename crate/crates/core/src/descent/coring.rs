//! The descent co-ring `A ⊗_B A`, descent data, and the `Can ⊣ Prim` adjunction.

use super::monad::{monad_t_phi, BaseChangeMonad};
use crate::algebra::{restrict, restrict_map, GroupMap, IntegerMatrix, ModuleMap, ModuleOverRing, RingMap};
use crate::error::{invalid, Error, Result};
use crate::report::CheckReport;
use crate::simplicial::{FiniteLimits, Modules, Monad};

/// `W = A ⊗_B A` with both `A`-actions, the comultiplication
/// `a ⊗ b ↦ a ⊗ 1 ⊗ b` into `W ⊗_A W ≅ A ⊗_B A ⊗_B A`, and the counit `a ⊗ b ↦ ab`.
#[derive(Clone, Debug)]
pub struct DescentCoRing {
    pub phi: RingMap,
    /// `W` as a right `A`-module (acting on the second factor).
    pub bimodule: ModuleOverRing,
    /// Matrices of the left action of each generator of `A`.
    pub left_actions: Vec<IntegerMatrix>,
    pub comultiplication: GroupMap,
    pub counit: GroupMap,
    /// `φ ⊗ A: A → W`, `a ↦ 1 ⊗ a`.
    pub left_unit: GroupMap,
    /// `A ⊗ φ: A → W`, `a ↦ a ⊗ 1`.
    pub right_unit: GroupMap,
    pub report: CheckReport,
}

pub fn descent_coring(phi: &RingMap) -> Result<DescentCoRing> {
    let t = monad_t_phi(phi);
    let a = phi.target();
    let w = a.generators();
    let a_b = restrict(&ModuleOverRing::regular(a), phi)?;
    let w1 = t.apply(&a_b)?;
    let w2 = t.apply(&w1)?;
    let w3 = t.apply(&w2)?;
    let bimodule = t.extend(&a_b)?;
    let left_actions = (0..w).map(|k| a.multiplication_matrix(k).kron(&IntegerMatrix::identity(w))).collect();

    let ga = a.underlying().clone();
    let g1 = w1.underlying().clone();
    let g2 = w2.underlying().clone();
    let g3 = w3.underlying().clone();
    let comultiplication = GroupMap::new(g1.clone(), g2.clone(), t.insert_unit(w, w))?;
    let counit = GroupMap::new(g1.clone(), ga.clone(), a.product_matrix())?;
    let left_unit = GroupMap::new(ga.clone(), g1.clone(), t.insert_unit(1, w))?;
    let right_unit = GroupMap::new(ga.clone(), g1.clone(), t.insert_unit(w, 1))?;

    let mut report = CheckReport::new();
    let id_a = GroupMap::identity(&ga);
    let id_w = GroupMap::identity(&g1);
    let outer = GroupMap::new(g2.clone(), g3.clone(), t.insert_unit(w, w * w))?;
    let inner = GroupMap::new(g2.clone(), g3, t.insert_unit(w * w, w))?;
    report.record(
        "coassociativity",
        outer.after(&comultiplication)?.same_map(&inner.after(&comultiplication)?)?,
    );
    let first = GroupMap::new(g2.clone(), g1.clone(), t.multiply_factors(1, w))?;
    let second = GroupMap::new(g2, g1, t.multiply_factors(w, 1))?;
    report.record("left counitality", first.after(&comultiplication)?.same_map(&id_w)?);
    report.record("right counitality", second.after(&comultiplication)?.same_map(&id_w)?);
    report.record("counit after left unit", counit.after(&left_unit)?.same_map(&id_a)?);
    report.record("counit after right unit", counit.after(&right_unit)?.same_map(&id_a)?);
    if !report.holds() {
        return Err(invalid!("descent co-ring fails its invariants:\n{}", report));
    }
    Ok(DescentCoRing { phi: phi.clone(), bimodule, left_actions, comultiplication, counit, left_unit, right_unit, report })
}

/// An `A`-module with a coaction `θ: M → M ⊗_B A`.
#[derive(Clone, Debug)]
pub struct DescentDatum {
    pub phi: RingMap,
    pub module: ModuleOverRing,
    pub coaction: ModuleMap,
}

impl DescentDatum {
    /// `M ⊗_B A` for this datum's module, as an `A`-module on the second factor.
    pub fn coaction_target(phi: &RingMap, module: &ModuleOverRing) -> Result<ModuleOverRing> {
        monad_t_phi(phi).extend(&restrict(module, phi)?)
    }

    /// Builds a datum from a coaction matrix, checking only shapes.
    pub fn new(phi: &RingMap, module: ModuleOverRing, coaction: IntegerMatrix) -> Result<Self> {
        if module.ring() != phi.target() {
            return Err(Error::RingMismatch("a descent datum lives over the target ring".into()));
        }
        let target = Self::coaction_target(phi, &module)?;
        let coaction = ModuleMap::new_trusted(module.clone(), target, coaction)?;
        Ok(DescentDatum { phi: phi.clone(), module, coaction })
    }
}

/// Checks that `θ` is `A`-linear, coassociative `(θ ⊗ A)θ = (M ⊗ φ ⊗ A)θ`,
/// and counital `r̄ θ = id` where `r̄(m ⊗ a) = m·a`.
pub fn validate_descent_datum(d: &DescentDatum) -> Result<CheckReport> {
    let t = monad_t_phi(&d.phi);
    let m = &d.module;
    let g = m.generators();
    let w = t.width();
    let theta = &d.coaction;
    let mut report = CheckReport::new();

    let linear = ModuleMap::new(theta.source().clone(), theta.target().clone(), theta.matrix().clone()).is_ok();
    report.record("coaction is linear", linear);

    let mb = restrict(m, &d.phi)?;
    let theta_b = restrict_map(theta, &d.phi)?;
    let tmb = t.apply(&mb)?;
    let ttmb = t.apply(&tmb)?;
    let theta_a = t.apply_map(&theta_b)?;
    let insert = ModuleMap::new_trusted(tmb.clone(), ttmb, t.insert_unit(g, w))?;
    let lhs = theta_a.after(&theta_b)?;
    let rhs = insert.after(&theta_b)?;
    report.record("coassociativity", lhs.same_map(&rhs)?);

    let act = GroupMap::new(tmb.underlying().clone(), mb.underlying().clone(), t.action_matrix(m))?;
    let counit = act.after(theta_b.group_map())?;
    report.record("counitality", counit.same_map(&GroupMap::identity(mb.underlying()))?);
    Ok(report)
}

/// `Can(M) = (M ⊗_B A, θ)` with `θ(m ⊗ a) = m ⊗ 1 ⊗ a`.
pub fn can_phi(phi: &RingMap, m: &ModuleOverRing) -> Result<DescentDatum> {
    let t = monad_t_phi(phi);
    let module = t.extend(m)?;
    DescentDatum::new(phi, module, t.insert_unit(m.generators(), t.width()))
}

/// `Prim(N, θ) = equal(θ, N ⊗ φ)` as a `B`-module, with its inclusion into `N`.
pub fn prim_phi(d: &DescentDatum) -> Result<(ModuleOverRing, ModuleMap)> {
    let t = monad_t_phi(&d.phi);
    let nb = restrict(&d.module, &d.phi)?;
    let theta = restrict_map(&d.coaction, &d.phi)?;
    Modules.equalizer(&theta, &t.unit(&nb)?)
}

/// The unit `M → Prim(Can M)`, its target, and whether it is an isomorphism.
#[derive(Clone, Debug)]
pub struct UnitComparison {
    pub prim: ModuleOverRing,
    pub unit: ModuleMap,
    pub injective: bool,
    pub surjective: bool,
}

impl UnitComparison {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }
}

pub fn can_prim_unit(phi: &RingMap, m: &ModuleOverRing) -> Result<UnitComparison> {
    let t: BaseChangeMonad = monad_t_phi(phi);
    let (prim, incl) = prim_phi(&can_phi(phi, m)?)?;
    let unit = Modules.lift(&incl, &t.unit(m)?)?;
    Ok(UnitComparison { prim, injective: unit.is_injective()?, surjective: unit.is_surjective()?, unit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{catalog_map, probes_for, ring_map_catalog};
    use crate::algebra::{FgAbelianGroup, RingSpec};
    use num_bigint::BigInt;

    fn z() -> ModuleOverRing {
        ModuleOverRing::abelian(FgAbelianGroup::free(1))
    }

    #[test]
    fn coring_of_identity_is_rank_one() {
        let c = descent_coring(&RingMap::identity(&RingSpec::integers())).unwrap();
        assert_eq!(c.bimodule.underlying().to_string(), "Z");
        assert!(c.comultiplication.is_isomorphism().unwrap());
    }

    #[test]
    fn coring_of_diagonal_has_rank_four() {
        let c = descent_coring(&catalog_map("zz2").unwrap()).unwrap();
        assert_eq!(c.bimodule.underlying().to_string(), "Z^4");
        assert_eq!(c.comultiplication.matrix().rows(), 8);
    }

    #[test]
    fn every_catalog_coring_validates() {
        for e in ring_map_catalog() {
            assert!(descent_coring(&e.map).unwrap().report.holds(), "{}", e.name);
        }
    }

    #[test]
    fn canonical_data_validate() {
        for e in ring_map_catalog() {
            for (name, m) in probes_for(e.map.source()).unwrap() {
                let r = validate_descent_datum(&can_phi(&e.map, &m).unwrap()).unwrap();
                assert!(r.holds(), "{} {}: {}", e.name, name, r);
            }
        }
    }

    #[test]
    fn zero_coaction_fails_counit() {
        let phi = catalog_map("zz2").unwrap();
        let d = can_phi(&phi, &z()).unwrap();
        let zero = IntegerMatrix::zeros(d.coaction.matrix().rows(), d.coaction.matrix().cols());
        let bad = DescentDatum::new(&phi, d.module.clone(), zero).unwrap();
        let r = validate_descent_datum(&bad).unwrap();
        assert!(!r.check("counitality").unwrap().holds);
    }

    #[test]
    fn doubled_coaction_fails_both_laws() {
        let phi = catalog_map("zz2").unwrap();
        let d = can_phi(&phi, &z()).unwrap();
        let bad = DescentDatum::new(&phi, d.module.clone(), d.coaction.matrix().scale(&BigInt::from(2))).unwrap();
        let r = validate_descent_datum(&bad).unwrap();
        assert!(r.check("coaction is linear").unwrap().holds);
        assert!(!r.check("coassociativity").unwrap().holds);
        assert!(!r.check("counitality").unwrap().holds);
    }

    #[test]
    fn prim_can_unit_for_diagonal() {
        let u = can_prim_unit(&catalog_map("zz2").unwrap(), &z()).unwrap();
        assert_eq!(u.prim.underlying().to_string(), "Z");
        assert!(u.is_isomorphism());
    }

    #[test]
    fn prim_can_unit_for_quotient_is_not_injective() {
        let u = can_prim_unit(&catalog_map("z2").unwrap(), &z()).unwrap();
        assert!(!u.injective);
        assert_eq!(u.prim.underlying().to_string(), "Z/2");
    }

    #[test]
    fn can_of_zero_is_zero() {
        let phi = catalog_map("zz3").unwrap();
        let d = can_phi(&phi, &ModuleOverRing::zero(phi.source())).unwrap();
        assert!(d.module.is_trivial());
    }
}
