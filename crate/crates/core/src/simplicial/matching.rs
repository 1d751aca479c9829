//! Matching and latching objects, and the `H⁰` / `π₀` truncations.

use super::category::{Category, FiniteColimits, FiniteLimits};
use super::object::{TruncatedCosimplicial, TruncatedSimplicial};
use crate::error::{invalid, Result};

/// An object with its canonical comparison map and whether that map is
/// injective and surjective on underlying groups or sets.
pub struct CanonicalMap<C: Category> {
    pub object: C::Object,
    pub map: C::Morphism,
    pub injective: bool,
    pub surjective: bool,
}

impl<C: Category> std::fmt::Debug for CanonicalMap<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CanonicalMap")
            .field("object", &self.object)
            .field("injective", &self.injective)
            .field("surjective", &self.surjective)
            .finish()
    }
}

/// `M_n = {(x₀ … x_{n−1}) ∈ ∏ X^{n−1} : s^i x_j = s^{j−1} x_i for i < j}` with
/// `σ_n = (s⁰, …, s^{n−1}): Xⁿ → M_n`.
pub fn matching_object<C: FiniteLimits>(cat: &C, x: &TruncatedCosimplicial<C>, n: usize) -> Result<CanonicalMap<C>> {
    if n == 0 || n > x.truncation() {
        return Err(invalid!("matching object {} is outside levels 1..={}", n, x.truncation()));
    }
    let (object, map) = if n == 1 {
        (x.level(0).clone(), x.codegeneracy(0, 0).clone())
    } else {
        let factors = vec![x.level(n - 1).clone(); n];
        let (p, proj) = cat.product(&factors)?;
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for i in 0..j {
                lhs.push(cat.compose(x.codegeneracy(n - 2, i), &proj[j])?);
                rhs.push(cat.compose(x.codegeneracy(n - 2, j - 1), &proj[i])?);
            }
        }
        let below = vec![x.level(n - 2).clone(); lhs.len()];
        let a = cat.tuple(&p, &below, &lhs)?;
        let b = cat.tuple(&p, &below, &rhs)?;
        let (m, incl) = cat.equalizer(&a, &b)?;
        let legs: Vec<_> = (0..n).map(|j| x.codegeneracy(n - 1, j).clone()).collect();
        let sigma = cat.tuple(x.level(n), &factors, &legs)?;
        (m, cat.lift(&incl, &sigma)?)
    };
    Ok(CanonicalMap {
        injective: FiniteLimits::is_injective(cat, &map)?,
        surjective: FiniteLimits::is_surjective(cat, &map)?,
        object,
        map,
    })
}

/// `L^n = (∐_{j<n} X_{n−1}) / (ι_j s_i y ~ ι_i s_{j−1} y for i < j)` with
/// `σ^n: L^n → X_n` induced by `s₀, …, s_{n−1}`.
pub fn latching_object<C: FiniteColimits>(cat: &C, x: &TruncatedSimplicial<C>, n: usize) -> Result<CanonicalMap<C>> {
    if n == 0 || n > x.truncation() {
        return Err(invalid!("latching object {} is outside levels 1..={}", n, x.truncation()));
    }
    let (object, map) = if n == 1 {
        (x.level(0).clone(), x.degeneracy(0, 0).clone())
    } else {
        let summands = vec![x.level(n - 1).clone(); n];
        let (p, inj) = cat.coproduct(&summands)?;
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for i in 0..j {
                lhs.push(cat.compose(&inj[j], x.degeneracy(n - 2, i))?);
                rhs.push(cat.compose(&inj[i], x.degeneracy(n - 2, j - 1))?);
            }
        }
        let below = vec![x.level(n - 2).clone(); lhs.len()];
        let a = cat.cotuple(&p, &below, &lhs)?;
        let b = cat.cotuple(&p, &below, &rhs)?;
        let (l, proj) = cat.coequalizer(&a, &b)?;
        let legs: Vec<_> = (0..n).map(|j| x.degeneracy(n - 1, j).clone()).collect();
        let sigma = cat.cotuple(x.level(n), &summands, &legs)?;
        (l, cat.descend(&proj, &sigma)?)
    };
    Ok(CanonicalMap {
        injective: FiniteColimits::is_injective(cat, &map)?,
        surjective: FiniteColimits::is_surjective(cat, &map)?,
        object,
        map,
    })
}

/// `H⁰ = equalizer(d⁰, d¹: X⁰ ⇉ X¹)` with its inclusion.
pub fn h0_cosimplicial<C: FiniteLimits>(cat: &C, x: &TruncatedCosimplicial<C>) -> Result<(C::Object, C::Morphism)> {
    cat.equalizer(x.coface(0, 0), x.coface(0, 1))
}

/// `π₀ = coequalizer(d₀, d₁: X₁ ⇉ X₀)` with its projection.
pub fn pi0_simplicial<C: FiniteColimits>(cat: &C, x: &TruncatedSimplicial<C>) -> Result<(C::Object, C::Morphism)> {
    cat.coequalizer(x.face(0, 0), x.face(0, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FgAbelianGroup, ModuleOverRing};
    use crate::simplicial::category::Modules;

    #[test]
    fn matching_of_constant_is_identity() {
        let m = ModuleOverRing::abelian(FgAbelianGroup::from_orders(&[0, 2]));
        let x = TruncatedCosimplicial::constant(&Modules, &m, 3).unwrap();
        let r = matching_object(&Modules, &x, 1).unwrap();
        assert!(Modules.is_identity(&r.map).unwrap());
        let r2 = matching_object(&Modules, &x, 2).unwrap();
        assert_eq!(r2.object.underlying().invariant_factors(), m.underlying().invariant_factors());
        assert!(r2.injective && r2.surjective);
    }

    #[test]
    fn latching_of_constant_is_identity() {
        let m = ModuleOverRing::abelian(FgAbelianGroup::free(2));
        let x = TruncatedSimplicial::constant(&Modules, &m, 2).unwrap();
        let r = latching_object(&Modules, &x, 1).unwrap();
        assert!(Modules.is_identity(&r.map).unwrap());
        let r2 = latching_object(&Modules, &x, 2).unwrap();
        assert!(r2.injective && r2.surjective);
    }

    #[test]
    fn h0_of_constant() {
        let m = ModuleOverRing::abelian(FgAbelianGroup::cyclic(4));
        let x = TruncatedCosimplicial::constant(&Modules, &m, 1).unwrap();
        let (h, _) = h0_cosimplicial(&Modules, &x).unwrap();
        assert_eq!(h.underlying().to_string(), "Z/4");
    }

    #[test]
    fn out_of_range_rejected() {
        let m = ModuleOverRing::abelian(FgAbelianGroup::free(1));
        let x = TruncatedCosimplicial::constant(&Modules, &m, 2).unwrap();
        assert!(matching_object(&Modules, &x, 3).is_err());
        assert!(matching_object(&Modules, &x, 0).is_err());
    }
}
