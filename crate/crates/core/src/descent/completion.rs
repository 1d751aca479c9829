//! Strict-completeness checks: ∞-algebra families and the extra codegeneracy
//! on cobar objects of restricted modules.

use super::monad::{monad_t_phi, BaseChangeMonad};
use crate::algebra::{ModuleMap, ModuleOverRing, RingMap};
use crate::error::{mismatch, Error, Result};
use crate::simplicial::monad::{monad_power, monad_power_map};
use crate::simplicial::{
    check_contractible_cosimplicial, cobar, extra_codegeneracies_from_algebra, Category, Contractibility, IdentityReport,
    Modules, Monad,
};

/// A family `m_n: TⁿZ → Tⁿ⁻¹Z`, `1 ≤ n ≤ N`, satisfying the strict-completeness identities.
#[derive(Clone, Debug)]
pub struct CompletionCertificate {
    pub object: ModuleOverRing,
    pub family: Vec<ModuleMap>,
    pub checked: usize,
    pub unchecked: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Completion {
    Certified(CompletionCertificate),
    Refuted(IdentityReport),
}

impl Completion {
    pub fn is_certified(&self) -> bool {
        matches!(self, Completion::Certified(_))
    }

    pub fn violations(&self) -> &[String] {
        match self {
            Completion::Certified(_) => &[],
            Completion::Refuted(r) => &r.violations,
        }
    }
}

/// `m_n = Tⁿ⁻¹(a)` for an algebra `a: TZ → Z`.
pub fn algebra_family(t: &BaseChangeMonad, action: &ModuleMap, truncation: usize) -> Result<Vec<ModuleMap>> {
    (1..=truncation).map(|n| monad_power_map(t, n - 1, action)).collect()
}

/// Checks, for `1 ≤ n ≤ N` and `i ≤ n − 2`:
///
/// - `m_n ∘ Tⁱη = Tⁱη ∘ m_{n−1}` and `m_n ∘ Tⁿ⁻¹η = id`,
/// - `m_n ∘ Tⁱμ = Tⁱμ ∘ m_{n+1}` and `m_n ∘ Tⁿ⁻¹μ = m_n ∘ m_{n+1}`,
///
/// where the last two need `n + 1 ≤ N` and are otherwise reported unchecked.
pub fn strict_completion_check(phi: &RingMap, z: &ModuleOverRing, family: &[ModuleMap]) -> Result<Completion> {
    let t = monad_t_phi(phi);
    let top = family.len();
    if top == 0 {
        return Err(Error::Missing("the family needs at least m_1".into()));
    }
    let powers: Vec<ModuleOverRing> = (0..=top + 1).map(|k| monad_power(&t, k, z)).collect::<Result<_>>()?;
    for (k, m) in family.iter().enumerate() {
        let n = k + 1;
        if m.source() != &powers[n] || m.target() != &powers[n - 1] {
            return Err(mismatch!("m_{} must run from T^{}Z to T^{}Z", n, n, n - 1));
        }
    }
    let m = |n: usize| &family[n - 1];
    let eta = |i: usize, k: usize| -> Result<ModuleMap> { monad_power_map(&t, i, &t.unit(&powers[k])?) };
    let mu = |i: usize, k: usize| -> Result<ModuleMap> { monad_power_map(&t, i, &t.multiplication(&powers[k])?) };

    let mut report = IdentityReport::default();
    for n in 1..=top {
        for i in 0..n {
            // Tⁱη_{T^{n−i−1}Z}: T^{n−1}Z → TⁿZ
            let lhs = m(n).after(&eta(i, n - i - 1)?)?;
            if i + 1 == n {
                report.record(Modules.is_identity(&lhs)?, format!("m_{} T^{}η = id", n, i));
            } else {
                let rhs = eta(i, n - i - 2)?.after(m(n - 1))?;
                report.record(lhs.same_map(&rhs)?, format!("m_{} T^{}η = T^{}η m_{}", n, i, i, n - 1));
            }
        }
        for i in 0..n {
            let label = if i + 1 == n {
                format!("m_{} T^{}μ = m_{} m_{}", n, i, n, n + 1)
            } else {
                format!("m_{} T^{}μ = T^{}μ m_{}", n, i, i, n + 1)
            };
            if n + 1 > top {
                report.unchecked.push(label);
                continue;
            }
            // Tⁱμ_{T^{n−i−1}Z}: T^{n+1}Z → TⁿZ
            let lhs = m(n).after(&mu(i, n - i - 1)?)?;
            let rhs = if i + 1 == n { m(n).after(m(n + 1))? } else { mu(i, n - i - 2)?.after(m(n + 1))? };
            report.record(lhs.same_map(&rhs)?, label);
        }
    }
    if !report.is_valid() {
        return Ok(Completion::Refuted(report));
    }
    Ok(Completion::Certified(CompletionCertificate {
        object: z.clone(),
        family: family.to_vec(),
        checked: report.checked,
        unchecked: report.unchecked,
    }))
}

/// The cobar object of `UN` for an `A`-module `N`, with extra codegeneracies
/// `sⁿ = Tⁿ(a)` built from the action `a: TUN → UN`, run through the
/// contractibility checker.
pub fn restricted_module_sdr(phi: &RingMap, n: &ModuleOverRing, truncation: usize) -> Result<Contractibility<Modules>> {
    let t = monad_t_phi(phi);
    let (z, action) = t.algebra_action(n)?;
    let y = cobar(&t, &z, truncation)?;
    let extra = extra_codegeneracies_from_algebra(&t, &action, truncation)?;
    check_contractible_cosimplicial(&Modules, &y, &extra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::catalog_map;
    use crate::algebra::{FgAbelianGroup, IntegerMatrix, RingSpec};

    #[test]
    fn algebra_family_certifies() {
        let phi = catalog_map("zz2").unwrap();
        let t = monad_t_phi(&phi);
        let (z, a) = t.algebra_action(&ModuleOverRing::regular(phi.target())).unwrap();
        let fam = algebra_family(&t, &a, 3).unwrap();
        let c = strict_completion_check(&phi, &z, &fam).unwrap();
        assert!(c.is_certified(), "{:?}", c.violations());
    }

    #[test]
    fn identity_family_certifies() {
        let phi = RingMap::identity(&RingSpec::integers());
        let z = ModuleOverRing::abelian(FgAbelianGroup::free(2));
        let fam = vec![ModuleMap::identity(&z); 3];
        assert!(strict_completion_check(&phi, &z, &fam).unwrap().is_certified());
    }

    #[test]
    fn sum_map_breaks_unit_identity() {
        let phi = catalog_map("zz2").unwrap();
        let t = monad_t_phi(&phi);
        let z = ModuleOverRing::abelian(FgAbelianGroup::free(1));
        let sum = ModuleMap::new(t.apply(&z).unwrap(), z.clone(), IntegerMatrix::from_rows(&[[1, 1]], 2).unwrap()).unwrap();
        let c = strict_completion_check(&phi, &z, &[sum]).unwrap();
        assert_eq!(c.violations(), ["m_1 T^0η = id"]);
    }

    #[test]
    fn restricted_regular_module_contracts() {
        for name in ["zz2", "id", "z2"] {
            let phi = catalog_map(name).unwrap();
            let c = restricted_module_sdr(&phi, &ModuleOverRing::regular(phi.target()), 3).unwrap();
            assert!(c.is_certified(), "{}: {:?}", name, c.violations());
        }
    }
}
