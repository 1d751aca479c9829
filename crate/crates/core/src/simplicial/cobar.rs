//! The cobar construction of a monad and the bar construction of a comonad.

use super::category::Obj;
use super::monad::{comonad_power, comonad_power_map, monad_power, monad_power_map, Comonad, Monad};
use super::object::{TruncatedCosimplicial, TruncatedSimplicial};
use crate::error::{invalid, Result};

/// The coaugmented cosimplicial object `C → TC ⇉ T²C …` truncated at `truncation`.
///
/// Level `n` is `Tⁿ⁺¹C`. The coface `d^i` out of level `n` is `Tⁱ η_{Tⁿ⁺¹⁻ⁱC}`
/// and the codegeneracy `s^j` into level `n` is `Tʲ μ_{Tⁿ⁻ʲC}`.
pub fn cobar<M: Monad>(t: &M, c: &Obj<M::Cat>, truncation: usize) -> Result<TruncatedCosimplicial<M::Cat>> {
    if truncation < 1 {
        return Err(invalid!("cobar needs truncation at least 1"));
    }
    let cat = t.category();
    // powers[k] = Tᵏ C
    let mut powers = vec![c.clone()];
    for _ in 0..truncation + 1 {
        powers.push(t.apply(powers.last().unwrap())?);
    }
    let levels = powers[1..].to_vec();
    let mut cofaces = Vec::with_capacity(truncation);
    let mut codegeneracies = Vec::with_capacity(truncation);
    for n in 0..truncation {
        let mut ds = Vec::with_capacity(n + 2);
        for i in 0..=n + 1 {
            ds.push(monad_power_map(t, i, &t.unit(&powers[n + 1 - i])?)?);
        }
        cofaces.push(ds);
        let mut ss = Vec::with_capacity(n + 1);
        for j in 0..=n {
            ss.push(monad_power_map(t, j, &t.multiplication(&powers[n - j])?)?);
        }
        codegeneracies.push(ss);
    }
    TruncatedCosimplicial::new(cat, levels, cofaces, codegeneracies)?.with_coaugmentation(cat, t.unit(c)?)
}

/// The augmented simplicial object `… K²D ⇉ KD → D` truncated at `truncation`.
///
/// Level `n` is `Kⁿ⁺¹D`. The face `d_i` out of level `n` is `Kⁱ ε_{Kⁿ⁻ⁱD}` and
/// the degeneracy `s_j` out of level `n` is `Kʲ Δ_{Kⁿ⁻ʲD}`.
pub fn bar<K: Comonad>(k: &K, d: &Obj<K::Cat>, truncation: usize) -> Result<TruncatedSimplicial<K::Cat>> {
    if truncation < 1 {
        return Err(invalid!("bar needs truncation at least 1"));
    }
    let cat = k.category();
    let mut powers = vec![d.clone()];
    for _ in 0..truncation + 1 {
        powers.push(k.apply(powers.last().unwrap())?);
    }
    let levels = powers[1..].to_vec();
    let mut faces = Vec::with_capacity(truncation);
    let mut degeneracies = Vec::with_capacity(truncation);
    for n in 0..truncation {
        // Faces out of level n + 1.
        let mut ds = Vec::with_capacity(n + 2);
        for i in 0..=n + 1 {
            ds.push(comonad_power_map(k, i, &k.counit(&powers[n + 1 - i])?)?);
        }
        faces.push(ds);
        let mut ss = Vec::with_capacity(n + 1);
        for j in 0..=n {
            ss.push(comonad_power_map(k, j, &k.comultiplication(&powers[n - j])?)?);
        }
        degeneracies.push(ss);
    }
    TruncatedSimplicial::new(cat, levels, faces, degeneracies)?.with_augmentation(cat, k.counit(d)?)
}

/// `Tᵏ(c)` for callers that only need a level's object.
pub fn cobar_level<M: Monad>(t: &M, c: &Obj<M::Cat>, n: usize) -> Result<Obj<M::Cat>> {
    monad_power(t, n + 1, c)
}

/// `Kⁿ⁺¹(d)`
pub fn bar_level<K: Comonad>(k: &K, d: &Obj<K::Cat>, n: usize) -> Result<Obj<K::Cat>> {
    comonad_power(k, n + 1, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FgAbelianGroup, ModuleOverRing};
    use crate::simplicial::category::{Category, Modules};
    use crate::simplicial::monad::IdentityMonad;
    use crate::simplicial::object::{check_cosimplicial_identities, check_simplicial_identities};

    #[test]
    fn identity_cobar_is_constant() {
        let z = ModuleOverRing::abelian(FgAbelianGroup::free(1));
        let t = IdentityMonad(Modules);
        let x = cobar(&t, &z, 2).unwrap();
        assert_eq!(x.levels().len(), 3);
        assert!(x.levels().iter().all(|l| l == &z));
        assert!(Modules.is_identity(x.coface(1, 2)).unwrap());
        assert!(check_cosimplicial_identities(&Modules, &x).unwrap().is_valid());
    }

    #[test]
    fn identity_bar_is_constant() {
        let z = ModuleOverRing::abelian(FgAbelianGroup::cyclic(5));
        let k = IdentityMonad(Modules);
        let x = bar(&k, &z, 3).unwrap();
        assert!(check_simplicial_identities(&Modules, &x).unwrap().is_valid());
    }
}
