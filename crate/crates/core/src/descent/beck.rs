//! The Beck equalizer criterion and the comparison of Hom groups under `Can`.

use super::coring::can_phi;
use super::monad::monad_t_phi;
use crate::algebra::{base_change_map, hom_group, restrict, restrict_map, GroupMap, IntegerMatrix, ModuleMap, ModuleOverRing, RingMap};
use crate::error::Result;
use crate::report::CheckReport;
use crate::simplicial::{FiniteLimits, Modules, Monad};

/// Outcome of comparing `C` with `equal(Tη_C, η_{TC})`.
#[derive(Clone, Debug)]
pub struct BeckReport {
    pub holds: bool,
    pub equalizer: ModuleOverRing,
    /// `equal(Tη_C, η_{TC}) → TC`
    pub inclusion: ModuleMap,
    /// `C → equal(Tη_C, η_{TC})`, the factorization of `η_C`.
    pub comparison: ModuleMap,
    pub injective: bool,
    pub surjective: bool,
}

/// `C → TC ⇉ T²C` is an equalizer exactly when `η_C` factors through
/// `equal(Tη_C, η_{TC})` as a bijection with matching invariant factors.
pub fn beck_descent_check(phi: &RingMap, c: &ModuleOverRing) -> Result<BeckReport> {
    let t = monad_t_phi(phi);
    let eta = t.unit(c)?;
    let t_eta = t.apply_map(&eta)?;
    let eta_t = t.unit(&t.apply(c)?)?;
    let (equalizer, inclusion) = Modules.equalizer(&t_eta, &eta_t)?;
    let comparison = Modules.lift(&inclusion, &eta)?;
    let injective = comparison.is_injective()?;
    let surjective = comparison.is_surjective()?;
    let same_shape = equalizer.underlying().invariant_factors() == c.underlying().invariant_factors();
    Ok(BeckReport { holds: injective && surjective && same_shape, equalizer, inclusion, comparison, injective, surjective })
}

/// Both sides of `Hom_B(X, TY) → Hom_desc(Can X, Can TY)`, `f ↦ f ⊗_B A`.
#[derive(Clone, Debug)]
pub struct AdjunctionReport {
    pub base_side: crate::algebra::FgAbelianGroup,
    pub descent_side: crate::algebra::FgAbelianGroup,
    pub canonical: GroupMap,
    pub report: CheckReport,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.report.holds()
    }
}

/// Computes `Hom_B(X, TY)`, the group of descent-data maps `Can X → Can TY`
/// (the `A`-linear maps `g` with `θ g = (g ⊗ A) θ`), and checks that
/// the canonical map between them is bijective.
pub fn adjunction_iso_check(phi: &RingMap, x: &ModuleOverRing, y: &ModuleOverRing) -> Result<AdjunctionReport> {
    let t = monad_t_phi(phi);
    let ty = t.apply(y)?;
    let base = hom_group(x, &ty)?;

    let cx = can_phi(phi, x)?;
    let cty = can_phi(phi, &ty)?;
    let over_a = hom_group(&cx.module, &cty.module)?;
    let xb = restrict(&cx.module, phi)?;
    let tyb = restrict(&cty.module, phi)?;
    let into = hom_group(&xb, &t.apply(&tyb)?)?;
    let theta_x = restrict_map(&cx.coaction, phi)?;
    let theta_y = restrict_map(&cty.coaction, phi)?;
    let mut cols = Vec::with_capacity(over_a.rank());
    for g in over_a.representatives()? {
        let gb = restrict_map(&g, phi)?;
        let defect = theta_y.after(&gb)?.sub(&t.apply_map(&gb)?.after(&theta_x)?)?;
        cols.push(into.coordinates(&defect)?);
    }
    let constraint =
        GroupMap::new(over_a.group().clone(), into.group().clone(), IntegerMatrix::from_columns(into.rank(), &cols)?)?;
    let compatible = constraint.kernel()?;

    let mut canon_cols = Vec::with_capacity(base.rank());
    for f in base.representatives()? {
        let coords = over_a.coordinates(&base_change_map(&f, phi)?)?;
        canon_cols.push(compatible.coordinates_of_member(&coords)?);
    }
    let canonical = GroupMap::new(
        base.group().clone(),
        compatible.group().clone(),
        IntegerMatrix::from_columns(compatible.group().generators(), &canon_cols)?,
    )?;
    let mut report = CheckReport::new();
    let same = base.group().invariant_factors() == compatible.group().invariant_factors();
    report.record_with(
        "invariant factors agree",
        same,
        format!("{} vs {}", base.group().invariant_factors(), compatible.group().invariant_factors()),
    );
    report.record("canonical map injective", canonical.is_injective()?);
    report.record("canonical map surjective", canonical.is_surjective()?);
    Ok(AdjunctionReport {
        base_side: base.group().clone(),
        descent_side: compatible.group().clone(),
        canonical,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::catalog_map;
    use crate::algebra::FgAbelianGroup;

    fn z() -> ModuleOverRing {
        ModuleOverRing::abelian(FgAbelianGroup::free(1))
    }

    #[test]
    fn diagonal_descends() {
        let r = beck_descent_check(&catalog_map("zz2").unwrap(), &z()).unwrap();
        assert!(r.holds);
        assert_eq!(r.equalizer.underlying().to_string(), "Z");
    }

    #[test]
    fn quotient_does_not_descend() {
        let r = beck_descent_check(&catalog_map("z2").unwrap(), &z()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.equalizer.underlying().invariant_factors().to_string(), "Z/2");
    }

    #[test]
    fn adjunction_for_diagonal() {
        let r = adjunction_iso_check(&catalog_map("zz2").unwrap(), &z(), &z()).unwrap();
        assert!(r.holds(), "{}", r.report);
        assert_eq!(r.base_side.to_string(), "Z^2");
    }

    #[test]
    fn adjunction_for_quotient() {
        let r = adjunction_iso_check(&catalog_map("z2").unwrap(), &z(), &z()).unwrap();
        assert!(r.holds(), "{}", r.report);
        assert_eq!(r.descent_side.to_string(), "Z/2");
    }
}
