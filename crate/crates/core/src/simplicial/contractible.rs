//! Contractible (co)augmented objects: checking an extra (co)degeneracy family
//! and issuing a strong-deformation-retract certificate.
//!
//! The homotopy itself is not constructed. The certificate records the
//! verified identities and the retraction/section pair they yield.

use super::category::{Category, Opposite};
use super::monad::{comonad_power_map, monad_power_map, Comonad, Monad};
use super::object::{check_view, IdentityReport, OppositeView, TruncatedCosimplicial, TruncatedSimplicial, Variance};
use crate::error::{invalid, mismatch, Error, Result};

/// Evidence that a (co)augmented truncated object is contractible.
pub struct SdrCertificate<C: Category> {
    /// The (co)augmenting object `X`.
    pub base: C::Object,
    /// `ρⁿ: Yⁿ → X` (cosimplicial) or `εₙ: Yₙ → X` (simplicial), per level.
    pub retractions: Vec<C::Morphism>,
    /// `ηⁿ: X → Yⁿ` or `σₙ: X → Yₙ`, per level.
    pub sections: Vec<C::Morphism>,
    /// The extra (co)degeneracy family that was verified.
    pub extra: Vec<C::Morphism>,
    /// Identities that leave the truncation and were not checked.
    pub unchecked: Vec<String>,
    /// Number of identity instances checked.
    pub checked: usize,
}

impl<C: Category> std::fmt::Debug for SdrCertificate<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SdrCertificate")
            .field("base", &self.base)
            .field("levels", &self.retractions.len())
            .field("checked", &self.checked)
            .field("unchecked", &self.unchecked.len())
            .finish()
    }
}

/// Either a certificate or the report naming what failed.
#[derive(Debug)]
pub enum Contractibility<C: Category> {
    Certified(SdrCertificate<C>),
    Refuted(IdentityReport),
}

impl<C: Category> Contractibility<C> {
    pub fn is_certified(&self) -> bool {
        matches!(self, Contractibility::Certified(_))
    }

    pub fn certificate(&self) -> Option<&SdrCertificate<C>> {
        match self {
            Contractibility::Certified(c) => Some(c),
            Contractibility::Refuted(_) => None,
        }
    }

    pub fn violations(&self) -> &[String] {
        match self {
            Contractibility::Certified(_) => &[],
            Contractibility::Refuted(r) => &r.violations,
        }
    }
}

/// Shared checker phrased cosimplicially; `extra[n]: Yⁿ → Yⁿ⁻¹` with `Y⁻¹ = X`.
fn check_family<C: Category>(
    cat: &C,
    y: &OppositeView<'_, C>,
    extra: &[C::Morphism],
    var: Variance,
) -> Result<Contractibility<C>> {
    let top = y.levels.len() - 1;
    let eta = y.aug.ok_or_else(|| invalid!("contractibility needs a (co)augmented object"))?;
    if extra.len() != top + 1 {
        return Err(Error::Missing(format!(
            "extra family has {} members but levels 0..={} need {}",
            extra.len(),
            top,
            top + 1
        )));
    }
    let base = cat.source(eta);
    for (n, e) in extra.iter().enumerate() {
        let expected_target = if n == 0 { base.clone() } else { y.levels[n - 1].clone() };
        if cat.source(e) != y.levels[n] || cat.target(e) != expected_target {
            return Err(mismatch!("extra map {} has the wrong endpoints", n));
        }
    }
    let d = |n: usize, i: usize| &y.up[n][i];
    let s = |n: usize, j: usize| &y.down[n][j];
    let x = |n: usize| &extra[n];
    let xs = |n: usize| match var {
        Variance::Co => format!("s^{}", n),
        Variance::Contra => format!("s_{}", n),
    };

    // Structure-map identities first, then those involving the extra family.
    let mut report = check_view(cat, y, var)?;

    let lhs = cat.compose(x(0), eta)?;
    report.record(cat.is_identity(&lhs)?, format!("{} = id (extra)", var.comp(&xs(0), var.aug())));

    for n in 1..=top {
        // s^n d^n = id on Y^{n−1}.
        let lhs = cat.compose(x(n), d(n - 1, n))?;
        report.record(cat.is_identity(&lhs)?, format!("{} = id (extra) at level {}", var.comp(&xs(n), &var.d(n)), n));
        // s^n d^i = d^i s^{n−1}, i < n; at n = 1 the right-hand d^0 is the (co)augmentation.
        for i in 0..n {
            let lhs = cat.compose(x(n), d(n - 1, i))?;
            let (rhs, rhs_label) = if n == 1 {
                (cat.compose(eta, x(0))?, var.comp(var.aug(), &xs(0)))
            } else {
                (cat.compose(d(n - 2, i), x(n - 1))?, var.comp(&var.d(i), &xs(n - 1)))
            };
            let label = format!("{} = {} (extra) at level {}", var.comp(&xs(n), &var.d(i)), rhs_label, n);
            report.record(cat.same_morphism(&lhs, &rhs)?, label);
        }
    }
    for n in 0..=top {
        // s^n s^i = s^i s^{n+1}, 0 ≤ i ≤ n; the right-hand s^n is the extra one.
        for i in 0..=n {
            let rhs_label = if i == n { xs(i) } else { var.s(i) };
            let label = format!(
                "{} = {} (extra) at level {}",
                var.comp(&xs(n), &var.s(i)),
                var.comp(&rhs_label, &xs(n + 1)),
                n + 1
            );
            if n + 1 > top {
                report.unchecked.push(label);
                continue;
            }
            let lhs = cat.compose(x(n), s(n, i))?;
            let outer = if i == n { x(n) } else { s(n - 1, i) };
            let rhs = cat.compose(outer, x(n + 1))?;
            report.record(cat.same_morphism(&lhs, &rhs)?, label);
        }
    }

    if !report.is_valid() {
        return Ok(Contractibility::Refuted(report));
    }

    // ρⁿ = s⁰ s¹ … sⁿ and ηⁿ = d⁰ … d⁰ η; ρⁿ ηⁿ = id is implied, and rechecked.
    let mut retractions = Vec::with_capacity(top + 1);
    let mut sections = Vec::with_capacity(top + 1);
    let mut rho = x(0).clone();
    let mut sec = eta.clone();
    for n in 0..=top {
        if n > 0 {
            rho = cat.compose(&rho, x(n))?;
            sec = cat.compose(d(n - 1, 0), &sec)?;
        }
        let round = cat.compose(&rho, &sec)?;
        if !cat.is_identity(&round)? {
            report.violations.push(format!("retraction after section is not the identity at level {}", n));
            return Ok(Contractibility::Refuted(report));
        }
        retractions.push(rho.clone());
        sections.push(sec.clone());
    }
    Ok(Contractibility::Certified(SdrCertificate {
        base,
        retractions,
        sections,
        extra: extra.to_vec(),
        unchecked: report.unchecked,
        checked: report.checked,
    }))
}

/// Check that `η: X → Y•` with extra codegeneracies `extra[n]: Yⁿ → Yⁿ⁻¹`
/// (`Y⁻¹ = X`) is a contractible cosimplicial object.
pub fn check_contractible_cosimplicial<C: Category>(
    cat: &C,
    y: &TruncatedCosimplicial<C>,
    extra: &[C::Morphism],
) -> Result<Contractibility<C>> {
    check_family(cat, &y.as_view(), extra, Variance::Co)
}

/// Check that `ε: Y• → X` with extra degeneracies `extra[n]: Yₙ₋₁ → Yₙ`
/// (`Y₋₁ = X`) is a contractible simplicial object.
pub fn check_contractible_simplicial<C: Category>(
    cat: &C,
    y: &TruncatedSimplicial<C>,
    extra: &[C::Morphism],
) -> Result<Contractibility<C>> {
    let op = Opposite(cat);
    let v = y.as_opposite();
    let view = OppositeView { levels: v.levels, up: v.up, down: v.down, aug: v.aug };
    Ok(match check_family(&op, &view, extra, Variance::Contra)? {
        Contractibility::Certified(c) => Contractibility::Certified(SdrCertificate {
            base: c.base,
            retractions: c.retractions,
            sections: c.sections,
            extra: c.extra,
            unchecked: c.unchecked,
            checked: c.checked,
        }),
        Contractibility::Refuted(r) => Contractibility::Refuted(r),
    })
}

/// The extra codegeneracies `sⁿ = Tⁿ(a)` on the cobar construction of the
/// object underlying an algebra `a: TC → C`.
pub fn extra_codegeneracies_from_algebra<M: Monad>(
    t: &M,
    action: &<M::Cat as Category>::Morphism,
    truncation: usize,
) -> Result<Vec<<M::Cat as Category>::Morphism>> {
    (0..=truncation).map(|n| monad_power_map(t, n, action)).collect()
}

/// The extra degeneracies `sₙ = Kⁿ(δ)` on the bar construction of the object
/// underlying a coalgebra `δ: D → KD`.
pub fn extra_degeneracies_from_coalgebra<K: Comonad>(
    k: &K,
    coaction: &<K::Cat as Category>::Morphism,
    truncation: usize,
) -> Result<Vec<<K::Cat as Category>::Morphism>> {
    (0..=truncation).map(|n| comonad_power_map(k, n, coaction)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FgAbelianGroup, ModuleMap, ModuleOverRing};
    use crate::simplicial::category::Modules;
    use crate::simplicial::cobar::{bar, cobar};
    use crate::simplicial::monad::IdentityMonad;

    #[test]
    fn identity_cobar_contracts() {
        let m = ModuleOverRing::abelian(FgAbelianGroup::from_orders(&[0, 3]));
        let t = IdentityMonad(Modules);
        let y = cobar(&t, &m, 3).unwrap();
        let extra = vec![ModuleMap::identity(&m); 4];
        let c = check_contractible_cosimplicial(&Modules, &y, &extra).unwrap();
        let cert = c.certificate().expect("certified");
        assert_eq!(cert.retractions.len(), 4);
        assert!(!cert.unchecked.is_empty());
    }

    #[test]
    fn identity_bar_contracts() {
        let m = ModuleOverRing::abelian(FgAbelianGroup::free(2));
        let k = IdentityMonad(Modules);
        let y = bar(&k, &m, 2).unwrap();
        let extra = vec![ModuleMap::identity(&m); 3];
        assert!(check_contractible_simplicial(&Modules, &y, &extra).unwrap().is_certified());
    }

    #[test]
    fn negated_extra_map_is_named() {
        let m = ModuleOverRing::abelian(FgAbelianGroup::free(1));
        let t = IdentityMonad(Modules);
        let y = cobar(&t, &m, 2).unwrap();
        let mut extra = vec![ModuleMap::identity(&m); 3];
        extra[1] = extra[1].scale(&(-1).into());
        let c = check_contractible_cosimplicial(&Modules, &y, &extra).unwrap();
        assert!(!c.is_certified());
        assert!(c.violations().iter().any(|v| v.starts_with("s^1 d^1 = id")), "{:?}", c.violations());
    }

    #[test]
    fn missing_member_is_an_error() {
        let m = ModuleOverRing::abelian(FgAbelianGroup::free(1));
        let y = cobar(&IdentityMonad(Modules), &m, 2).unwrap();
        let extra = vec![ModuleMap::identity(&m); 2];
        assert!(matches!(check_contractible_cosimplicial(&Modules, &y, &extra), Err(Error::Missing(_))));
    }
}
