//! Amitsur complexes, their cohomology with coefficients, and descent `E₂` terms.

use std::collections::HashMap;

use super::monad::monad_t_phi;
use crate::algebra::complex::{homology_subquotient, HomComplex};
use crate::algebra::{hom_group, ChainComplex, FgAbelianGroup, GroupMap, HomGroup, IntegerMatrix, ModuleMap, ModuleOverRing, RingMap, Subquotient};
use crate::error::{invalid, Result};
use crate::simplicial::monad::monad_power_map;
use crate::simplicial::{cobar, cohomotopy, Modules, TruncatedCosimplicial};

/// The coaugmented cobar object `M → TM ⇉ T²M …` of the base-change monad.
pub fn amitsur_complex(phi: &RingMap, m: &ModuleOverRing, truncation: usize) -> Result<TruncatedCosimplicial<Modules>> {
    cobar(&monad_t_phi(phi), m, truncation)
}

/// `Hom_B(source, −)` applied levelwise to a cosimplicial module, as a
/// cosimplicial abelian group.
pub fn hom_cosimplicial(source: &ModuleOverRing, a: &TruncatedCosimplicial<Modules>) -> Result<TruncatedCosimplicial<Modules>> {
    let mut homs: HashMap<ModuleOverRing, HomGroup> = HashMap::new();
    for x in a.levels().iter().chain(a.coaugmentation().map(|e| e.source())) {
        if !homs.contains_key(x) {
            homs.insert(x.clone(), hom_group(source, x)?);
        }
    }
    let group_of = |h: &HomGroup| ModuleOverRing::abelian(h.group().clone());
    a.map_levels(
        &Modules,
        |x| Ok(group_of(&homs[x])),
        |f| {
            let (hs, ht) = (&homs[f.source()], &homs[f.target()]);
            let g = hs.post_compose(f, ht)?;
            ModuleMap::new_trusted(group_of(hs), group_of(ht), g.matrix().clone())
        },
    )
}

/// `π^s Hom_B(source, Ω•(receiver))` for `s = 0..=max_s`, from one truncation-`max_s + 1` cobar object.
pub fn amitsur_cohomology_range(
    phi: &RingMap,
    source: &ModuleOverRing,
    receiver: &ModuleOverRing,
    max_s: usize,
) -> Result<Vec<FgAbelianGroup>> {
    let omega = amitsur_complex(phi, receiver, max_s + 1)?;
    let h = hom_cosimplicial(source, &omega)?;
    (0..=max_s).map(|s| cohomotopy(&h, s)).collect()
}

/// `π^s Hom_B(source, Ω•(receiver))`, the `t = 0` row of the descent spectral sequence.
pub fn amitsur_cohomology(phi: &RingMap, source: &ModuleOverRing, receiver: &ModuleOverRing, s: usize) -> Result<FgAbelianGroup> {
    Ok(amitsur_cohomology_range(phi, source, receiver, s)?.pop().expect("nonempty range"))
}

/// `E₂^{s,t} = π^s H_t Hom(m, Ω• n)` for `s = 0..=max_s`, where `Ω• n` applies the
/// cobar construction degreewise to the complex `n`.
pub fn descent_e2_range(phi: &RingMap, m: &ChainComplex, n: &ChainComplex, max_s: usize, t: i64) -> Result<Vec<FgAbelianGroup>> {
    let e2 = e2_cosimplicial(phi, m, n, max_s + 1, t)?;
    (0..=max_s).map(|s| cohomotopy(&e2, s)).collect()
}

pub fn descent_e2(phi: &RingMap, m: &ChainComplex, n: &ChainComplex, s: usize, t: i64) -> Result<FgAbelianGroup> {
    Ok(descent_e2_range(phi, m, n, s, t)?.pop().expect("nonempty range"))
}

/// The cosimplicial abelian group `k ↦ H_t Hom(m, Ωᵏ n)`.
pub fn e2_cosimplicial(
    phi: &RingMap,
    m: &ChainComplex,
    n: &ChainComplex,
    truncation: usize,
    t: i64,
) -> Result<TruncatedCosimplicial<Modules>> {
    if m.ring() != phi.source() || n.ring() != phi.source() {
        return Err(invalid!("complexes must live over the source ring"));
    }
    let monad = monad_t_phi(phi);
    let per_degree: Vec<TruncatedCosimplicial<Modules>> =
        n.objects().iter().map(|x| cobar(&monad, x, truncation)).collect::<Result<_>>()?;

    // Ωᵏ n: objects T^{k+1} n_j, boundaries T^{k+1} ∂_j.
    let mut omegas = Vec::with_capacity(truncation + 1);
    for k in 0..=truncation {
        let objects = per_degree.iter().map(|c| c.level(k).clone()).collect();
        let mut boundaries = Vec::new();
        for j in n.lo() + 1..=n.hi() {
            boundaries.push(monad_power_map(&monad, k + 1, n.boundary(j).expect("interior boundary"))?);
        }
        omegas.push(ChainComplex::new(n.ring().clone(), n.lo(), objects, boundaries)?);
    }
    let homs: Vec<HomComplex> = omegas.iter().map(|o| HomComplex::new(m, o)).collect::<Result<_>>()?;
    let pieces: Vec<Option<Subquotient>> =
        homs.iter().map(|h| homology_subquotient(&h.complex, t)).collect::<Result<_>>()?;
    let groups: Vec<ModuleOverRing> = pieces
        .iter()
        .map(|p| ModuleOverRing::abelian(p.as_ref().map(|p| p.group().clone()).unwrap_or_else(FgAbelianGroup::zero)))
        .collect();

    let induced = |from: usize, to: usize, maps: Vec<ModuleMap>| -> Result<ModuleMap> {
        let matrix = match (&pieces[from], &pieces[to]) {
            (Some(p), Some(q)) => {
                let on_chains = homs[from].post_compose(&maps, &homs[to], t)?;
                induced_on_homology(p, q, &on_chains)?
            }
            _ => IntegerMatrix::zeros(groups[to].generators(), groups[from].generators()),
        };
        ModuleMap::new_trusted(groups[from].clone(), groups[to].clone(), matrix)
    };
    let mut cofaces = Vec::with_capacity(truncation);
    let mut codegeneracies = Vec::with_capacity(truncation);
    for k in 0..truncation {
        let mut ds = Vec::with_capacity(k + 2);
        for i in 0..=k + 1 {
            ds.push(induced(k, k + 1, per_degree.iter().map(|c| c.coface(k, i).clone()).collect())?);
        }
        cofaces.push(ds);
        let mut ss = Vec::with_capacity(k + 1);
        for j in 0..=k {
            ss.push(induced(k + 1, k, per_degree.iter().map(|c| c.codegeneracy(k, j).clone()).collect())?);
        }
        codegeneracies.push(ss);
    }
    TruncatedCosimplicial::new(&Modules, groups, cofaces, codegeneracies)
}

/// Matrix of the map `p → q` of subquotients induced by an ambient matrix that
/// carries the numerator of `p` into the numerator of `q`.
fn induced_on_homology(p: &Subquotient, q: &Subquotient, ambient: &IntegerMatrix) -> Result<IntegerMatrix> {
    let m = q.coordinates_of_members(&ambient.mul(p.basis())?)?;
    GroupMap::new(p.group().clone(), q.group().clone(), m.clone())?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::catalog_map;
    use crate::algebra::RingSpec;

    fn z() -> ModuleOverRing {
        ModuleOverRing::abelian(FgAbelianGroup::free(1))
    }

    #[test]
    fn diagonal_amitsur_vanishes() {
        let hs = amitsur_cohomology_range(&catalog_map("zz2").unwrap(), &z(), &z(), 3).unwrap();
        assert_eq!(hs[0].to_string(), "Z");
        assert!(hs[1..].iter().all(|h| h.is_trivial()));
    }

    #[test]
    fn identity_amitsur_is_hom() {
        let phi = RingMap::identity(&RingSpec::integers());
        let m = ModuleOverRing::abelian(FgAbelianGroup::cyclic(4));
        let n = ModuleOverRing::abelian(FgAbelianGroup::cyclic(6));
        let hs = amitsur_cohomology_range(&phi, &m, &n, 2).unwrap();
        assert_eq!(hs[0].to_string(), "Z/2");
        assert!(hs[1].is_trivial() && hs[2].is_trivial());
    }

    #[test]
    fn e2_matches_amitsur_in_degree_zero() {
        let phi = catalog_map("zz2").unwrap();
        let c = ChainComplex::concentrated(&z(), 0);
        let e2 = descent_e2_range(&phi, &c, &c, 2, 0).unwrap();
        assert_eq!(e2[0].to_string(), "Z");
        assert!(e2[1].is_trivial() && e2[2].is_trivial());
        assert!(descent_e2(&phi, &c, &c, 0, 1).unwrap().is_trivial());
    }

    #[test]
    fn e2_of_doubling_complex() {
        let phi = RingMap::identity(&RingSpec::integers());
        let double = ModuleMap::new(z(), z(), IntegerMatrix::from_rows(&[[2]], 1).unwrap()).unwrap();
        let n = ChainComplex::from_map(&double, 1);
        let m = ChainComplex::concentrated(&z(), 0);
        let e2 = descent_e2_range(&phi, &m, &n, 1, 0).unwrap();
        assert_eq!(e2[0].to_string(), "Z/2");
        assert!(e2[1].is_trivial());
    }
}
