//! Monads and comonads as evaluatable handles, and checks of their laws on probes.

use std::fmt;

use super::category::{Category, Mor, Obj};
use crate::error::Result;

/// A monad `(T, η, μ)` on a category, evaluated object by object.
pub trait Monad {
    type Cat: Category;

    fn category(&self) -> &Self::Cat;
    fn apply(&self, x: &Obj<Self::Cat>) -> Result<Obj<Self::Cat>>;
    fn apply_map(&self, f: &Mor<Self::Cat>) -> Result<Mor<Self::Cat>>;
    /// `η_X: X → TX`
    fn unit(&self, x: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
    /// `μ_X: TTX → TX`
    fn multiplication(&self, x: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
}

/// A comonad `(K, ε, Δ)` on a category, evaluated object by object.
pub trait Comonad {
    type Cat: Category;

    fn category(&self) -> &Self::Cat;
    fn apply(&self, x: &Obj<Self::Cat>) -> Result<Obj<Self::Cat>>;
    fn apply_map(&self, f: &Mor<Self::Cat>) -> Result<Mor<Self::Cat>>;
    /// `ε_X: KX → X`
    fn counit(&self, x: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
    /// `Δ_X: KX → KKX`
    fn comultiplication(&self, x: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
}

/// `Tᵏ(x)`
pub fn monad_power<M: Monad>(t: &M, k: usize, x: &Obj<M::Cat>) -> Result<Obj<M::Cat>> {
    let mut y = x.clone();
    for _ in 0..k {
        y = t.apply(&y)?;
    }
    Ok(y)
}

/// `Tᵏ(f)`
pub fn monad_power_map<M: Monad>(t: &M, k: usize, f: &Mor<M::Cat>) -> Result<Mor<M::Cat>> {
    let mut g = f.clone();
    for _ in 0..k {
        g = t.apply_map(&g)?;
    }
    Ok(g)
}

/// `Kᵏ(x)`
pub fn comonad_power<K: Comonad>(k: &K, n: usize, x: &Obj<K::Cat>) -> Result<Obj<K::Cat>> {
    let mut y = x.clone();
    for _ in 0..n {
        y = k.apply(&y)?;
    }
    Ok(y)
}

/// `Kᵏ(f)`
pub fn comonad_power_map<K: Comonad>(k: &K, n: usize, f: &Mor<K::Cat>) -> Result<Mor<K::Cat>> {
    let mut g = f.clone();
    for _ in 0..n {
        g = k.apply_map(&g)?;
    }
    Ok(g)
}

/// The identity monad and comonad on a category.
#[derive(Clone, Debug, Default)]
pub struct IdentityMonad<C>(pub C);

impl<C: Category> Monad for IdentityMonad<C> {
    type Cat = C;

    fn category(&self) -> &C {
        &self.0
    }
    fn apply(&self, x: &C::Object) -> Result<C::Object> {
        Ok(x.clone())
    }
    fn apply_map(&self, f: &C::Morphism) -> Result<C::Morphism> {
        Ok(f.clone())
    }
    fn unit(&self, x: &C::Object) -> Result<C::Morphism> {
        Ok(self.0.identity(x))
    }
    fn multiplication(&self, x: &C::Object) -> Result<C::Morphism> {
        Ok(self.0.identity(x))
    }
}

impl<C: Category> Comonad for IdentityMonad<C> {
    type Cat = C;

    fn category(&self) -> &C {
        &self.0
    }
    fn apply(&self, x: &C::Object) -> Result<C::Object> {
        Ok(x.clone())
    }
    fn apply_map(&self, f: &C::Morphism) -> Result<C::Morphism> {
        Ok(f.clone())
    }
    fn counit(&self, x: &C::Object) -> Result<C::Morphism> {
        Ok(self.0.identity(x))
    }
    fn comultiplication(&self, x: &C::Object) -> Result<C::Morphism> {
        Ok(self.0.identity(x))
    }
}

/// Outcome of one law on one probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub probe: String,
    pub law: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// Whether the named law held on every probe.
    pub fn law_holds(&self, law: &str) -> bool {
        self.checks.iter().filter(|c| c.law == law).all(|c| c.holds)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<14} {:<20} {}", c.law, c.probe, if c.holds { "holds" } else { "FAILS" })?;
        }
        Ok(())
    }
}

pub const LEFT_UNIT: &str = "left unit";
pub const RIGHT_UNIT: &str = "right unit";
pub const ASSOCIATIVITY: &str = "associativity";
pub const LEFT_COUNIT: &str = "left counit";
pub const RIGHT_COUNIT: &str = "right counit";
pub const COASSOCIATIVITY: &str = "coassociativity";

/// `μ ∘ Tη = id`, `μ ∘ ηT = id` and `μ ∘ Tμ = μ ∘ μT` on every probe.
pub fn check_monad_laws<M: Monad>(t: &M, probes: &[Obj<M::Cat>]) -> Result<LawReport> {
    let c = t.category();
    let mut report = LawReport::default();
    for x in probes {
        let name = c.describe(x);
        let tx = t.apply(x)?;
        let mu = t.multiplication(x)?;
        let left = c.compose(&mu, &t.apply_map(&t.unit(x)?)?)?;
        report.checks.push(LawCheck { probe: name.clone(), law: LEFT_UNIT, holds: c.is_identity(&left)? });
        let right = c.compose(&mu, &t.unit(&tx)?)?;
        report.checks.push(LawCheck { probe: name.clone(), law: RIGHT_UNIT, holds: c.is_identity(&right)? });
        let a = c.compose(&mu, &t.apply_map(&mu)?)?;
        let b = c.compose(&mu, &t.multiplication(&tx)?)?;
        report.checks.push(LawCheck { probe: name, law: ASSOCIATIVITY, holds: c.same_morphism(&a, &b)? });
    }
    Ok(report)
}

/// `Kε ∘ Δ = id`, `εK ∘ Δ = id` and `KΔ ∘ Δ = ΔK ∘ Δ` on every probe.
pub fn check_comonad_laws<K: Comonad>(k: &K, probes: &[Obj<K::Cat>]) -> Result<LawReport> {
    let c = k.category();
    let mut report = LawReport::default();
    for x in probes {
        let name = c.describe(x);
        let kx = k.apply(x)?;
        let delta = k.comultiplication(x)?;
        let left = c.compose(&k.apply_map(&k.counit(x)?)?, &delta)?;
        report.checks.push(LawCheck { probe: name.clone(), law: LEFT_COUNIT, holds: c.is_identity(&left)? });
        let right = c.compose(&k.counit(&kx)?, &delta)?;
        report.checks.push(LawCheck { probe: name.clone(), law: RIGHT_COUNIT, holds: c.is_identity(&right)? });
        let a = c.compose(&k.apply_map(&delta)?, &delta)?;
        let b = c.compose(&k.comultiplication(&kx)?, &delta)?;
        report.checks.push(LawCheck { probe: name, law: COASSOCIATIVITY, holds: c.same_morphism(&a, &b)? });
    }
    Ok(report)
}
