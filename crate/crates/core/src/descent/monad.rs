//! The base-change monad `T = φ*(− ⊗_B A)` on `B`-modules.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::algebra::{base_change, restrict, IntegerMatrix, ModuleMap, ModuleOverRing, RingMap};
use crate::error::{Error, Result};
use crate::simplicial::{Modules, Monad};

/// `T(M) = M ⊗_B A` restricted back to `B`, with `η(m) = m ⊗ 1` and `μ`
/// induced by multiplication in `A`.
///
/// Generator `m_i ⊗ a_j` of `T(M)` has index `i·|A| + j`, so `Tᵏ(M)` is
/// indexed by base-`|A|` digits after the generator of `M`.
pub struct BaseChangeMonad {
    phi: RingMap,
    cache: Mutex<HashMap<ModuleOverRing, ModuleOverRing>>,
}

pub fn monad_t_phi(phi: &RingMap) -> BaseChangeMonad {
    BaseChangeMonad { phi: phi.clone(), cache: Mutex::new(HashMap::new()) }
}

impl BaseChangeMonad {
    pub fn ring_map(&self) -> &RingMap {
        &self.phi
    }

    /// Number of generators of `A`.
    pub fn width(&self) -> usize {
        self.phi.target().generators()
    }

    /// `M ⊗_B A` as an `A`-module.
    pub fn extend(&self, m: &ModuleOverRing) -> Result<ModuleOverRing> {
        base_change(m, &self.phi)
    }

    fn check_base(&self, m: &ModuleOverRing) -> Result<()> {
        if m.ring() != self.phi.source() {
            return Err(Error::RingMismatch("the monad acts on modules over the source ring".into()));
        }
        Ok(())
    }

    /// `I_outer ⊗ u ⊗ I_inner`: insert `1 ∈ A` between the first `outer` and last `inner` indices.
    pub fn insert_unit(&self, outer: usize, inner: usize) -> IntegerMatrix {
        let u = IntegerMatrix::column_vector(self.phi.target().unit());
        IntegerMatrix::identity(outer).kron(&u.kron(&IntegerMatrix::identity(inner)))
    }

    /// `I_outer ⊗ mult ⊗ I_inner`: multiply two adjacent `A` factors.
    pub fn multiply_factors(&self, outer: usize, inner: usize) -> IntegerMatrix {
        let p = self.phi.target().product_matrix();
        IntegerMatrix::identity(outer).kron(&p.kron(&IntegerMatrix::identity(inner)))
    }

    /// `M ⊗_B A → M`, `m ⊗ a ↦ m·a`, for an `A`-module `M` viewed over `B`.
    pub fn action_matrix(&self, n: &ModuleOverRing) -> IntegerMatrix {
        let g = n.generators();
        let w = self.width();
        let mut out = IntegerMatrix::zeros(g, g * w);
        for i in 0..g {
            for j in 0..w {
                let act = &n.actions()[j];
                for r in 0..g {
                    out[(r, i * w + j)] = act[(r, i)].clone();
                }
            }
        }
        out
    }

    /// The algebra structure `T(UN) → UN` on the restriction of an `A`-module.
    pub fn algebra_action(&self, n: &ModuleOverRing) -> Result<(ModuleOverRing, ModuleMap)> {
        let z = restrict(n, &self.phi)?;
        let tz = self.apply(&z)?;
        let a = ModuleMap::new_trusted(tz, z.clone(), self.action_matrix(n))?;
        Ok((z, a))
    }
}

impl Monad for BaseChangeMonad {
    type Cat = Modules;

    fn category(&self) -> &Modules {
        &Modules
    }

    fn apply(&self, x: &ModuleOverRing) -> Result<ModuleOverRing> {
        self.check_base(x)?;
        if let Some(hit) = self.cache.lock().expect("cache lock").get(x) {
            return Ok(hit.clone());
        }
        let t = restrict(&base_change(x, &self.phi)?, &self.phi)?;
        self.cache.lock().expect("cache lock").insert(x.clone(), t.clone());
        Ok(t)
    }

    fn apply_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        let m = f.matrix().kron(&IntegerMatrix::identity(self.width()));
        ModuleMap::new_trusted(self.apply(f.source())?, self.apply(f.target())?, m)
    }

    fn unit(&self, x: &ModuleOverRing) -> Result<ModuleMap> {
        ModuleMap::new_trusted(x.clone(), self.apply(x)?, self.insert_unit(x.generators(), 1))
    }

    fn multiplication(&self, x: &ModuleOverRing) -> Result<ModuleMap> {
        let tx = self.apply(x)?;
        ModuleMap::new_trusted(self.apply(&tx)?, tx, self.multiply_factors(x.generators(), 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{catalog_map, probes_for, ring_map_catalog};
    use crate::algebra::{FgAbelianGroup, RingSpec};
    use crate::simplicial::check_monad_laws;

    #[test]
    fn diagonal_doubles_rank() {
        let t = monad_t_phi(&catalog_map("zz2").unwrap());
        let z = ModuleOverRing::abelian(FgAbelianGroup::free(1));
        assert_eq!(t.apply(&z).unwrap().underlying().to_string(), "Z^2");
    }

    #[test]
    fn quotient_kills_coprime_torsion() {
        let t = monad_t_phi(&catalog_map("z2").unwrap());
        let m = ModuleOverRing::abelian(FgAbelianGroup::cyclic(3));
        assert!(t.apply(&m).unwrap().underlying().is_trivial());
    }

    #[test]
    fn identity_map_gives_identity_monad() {
        let t = monad_t_phi(&RingMap::identity(&RingSpec::integers()));
        let m = ModuleOverRing::abelian(FgAbelianGroup::from_orders(&[0, 4]));
        assert!(t.unit(&m).unwrap().is_isomorphism().unwrap());
    }

    #[test]
    fn laws_hold_on_catalog() {
        for e in ring_map_catalog() {
            let t = monad_t_phi(&e.map);
            let probes: Vec<_> = probes_for(e.map.source()).unwrap().into_iter().map(|(_, m)| m).collect();
            let r = check_monad_laws(&t, &probes).unwrap();
            assert!(r.holds(), "{}: {}", e.name, r);
        }
    }

    #[test]
    fn unit_and_multiplication_are_linear() {
        let t = monad_t_phi(&catalog_map("gauss").unwrap());
        let z = ModuleOverRing::abelian(FgAbelianGroup::free(1));
        let eta = t.unit(&z).unwrap();
        ModuleMap::new(eta.source().clone(), eta.target().clone(), eta.matrix().clone()).unwrap();
        let mu = t.multiplication(&z).unwrap();
        ModuleMap::new(mu.source().clone(), mu.target().clone(), mu.matrix().clone()).unwrap();
    }
}
