//! Cohomotopy of cosimplicial abelian groups through the normalized cochain
//! complex, with the unnormalized alternating-sum complex as an oracle.

use super::category::Modules;
use super::object::TruncatedCosimplicial;
use crate::algebra::{ChainComplex, FgAbelianGroup, GroupMap, IntegerMatrix, ModuleMap, ModuleOverRing, RingSpec, Subquotient};
use crate::error::{invalid, Result};

/// `Σᵢ (−1)ⁱ d^i` out of level `s`.
pub fn alternating_coboundary(a: &TruncatedCosimplicial<Modules>, s: usize) -> Result<IntegerMatrix> {
    let rows = a.level(s + 1).generators();
    let cols = a.level(s).generators();
    let mut m = IntegerMatrix::zeros(rows, cols);
    for i in 0..=s + 1 {
        let d = a.coface(s, i).matrix();
        m = if i % 2 == 0 { m.add(d)? } else { m.sub(d)? };
    }
    Ok(m)
}

/// Lattice basis of `⋂ⱼ ker s^j` in level `s`, including the level's relations.
pub fn normalized_lattice(a: &TruncatedCosimplicial<Modules>, s: usize) -> Result<IntegerMatrix> {
    let g = a.level(s).generators();
    if s == 0 {
        return Ok(IntegerMatrix::identity(g));
    }
    let below = a.level(s - 1).underlying();
    let mut target = FgAbelianGroup::zero();
    let mut stacked = IntegerMatrix::zeros(0, g);
    for j in 0..s {
        target = target.direct_sum(below);
        stacked = stacked.vstack(a.codegeneracy(s - 1, j).matrix())?;
    }
    let map = GroupMap::new(a.level(s).underlying().clone(), target, stacked)?;
    Ok(map.kernel()?.basis().clone())
}

/// Cohomology at `s` of the complex whose degree-`k` lattice has basis `lattice(k)`.
fn cohomology_on(
    a: &TruncatedCosimplicial<Modules>,
    s: usize,
    lattice: impl Fn(usize) -> Result<IntegerMatrix>,
) -> Result<Subquotient> {
    if s + 1 > a.truncation() {
        return Err(invalid!("degree {} needs level {} but the truncation is {}", s, s + 1, a.truncation()));
    }
    let here = lattice(s)?;
    let rel_next = a.level(s + 1).underlying().relations();
    let delta = alternating_coboundary(a, s)?;
    // Cycles: combinations of the lattice basis whose coboundary is a relation.
    let image = delta.mul(&here)?;
    let k = crate::algebra::snf::kernel_basis(&image.hstack(rel_next)?);
    let cycles = here.mul(&k.block(0, 0, here.cols(), k.cols()))?;
    let mut boundaries = a.level(s).underlying().relations().clone();
    if s > 0 {
        let prev = lattice(s - 1)?;
        boundaries = boundaries.hstack(&alternating_coboundary(a, s - 1)?.mul(&prev)?)?;
    }
    Subquotient::new(a.level(s).generators(), &cycles, &boundaries)
}

/// `π^s` of a cosimplicial abelian group: cohomology of the normalized cochain complex.
///
/// Requires `s + 1 ≤ truncation` so that the coboundary out of level `s` exists.
pub fn cohomotopy(a: &TruncatedCosimplicial<Modules>, s: usize) -> Result<FgAbelianGroup> {
    Ok(cohomology_on(a, s, |k| normalized_lattice(a, k))?.group().clone())
}

/// Cohomology of the unnormalized alternating-sum complex; agrees with [`cohomotopy`].
pub fn unnormalized_cohomology(a: &TruncatedCosimplicial<Modules>, s: usize) -> Result<FgAbelianGroup> {
    Ok(cohomology_on(a, s, |k| Ok(IntegerMatrix::identity(a.level(k).generators())))?.group().clone())
}

/// The normalized cochain complex as a chain complex of abelian groups, cochain
/// degree `s` at chain degree `−s`. Its homology at the top level is not `π^N`.
pub fn normalized_cochain(a: &TruncatedCosimplicial<Modules>) -> Result<ChainComplex> {
    let top = a.truncation();
    let mut pieces = Vec::with_capacity(top + 1);
    for s in 0..=top {
        let basis = normalized_lattice(a, s)?;
        pieces.push(Subquotient::new(a.level(s).generators(), &basis, a.level(s).underlying().relations())?);
    }
    let objects: Vec<ModuleOverRing> = pieces.iter().rev().map(|p| ModuleOverRing::abelian(p.group().clone())).collect();
    let mut boundaries = Vec::with_capacity(top);
    // boundaries[k] runs from chain degree −top + k + 1 to −top + k, i.e. cochain s = top − k − 1 to s + 1.
    for k in 0..top {
        let s = top - k - 1;
        let delta = alternating_coboundary(a, s)?;
        let image = delta.mul(pieces[s].basis())?;
        let mut cols = Vec::with_capacity(image.cols());
        for col in image.columns() {
            cols.push(pieces[s + 1].coordinates_of_member(&col)?);
        }
        let m = IntegerMatrix::from_columns(pieces[s + 1].basis().cols(), &cols)?;
        boundaries.push(ModuleMap::new_trusted(objects[k + 1].clone(), objects[k].clone(), m)?);
    }
    ChainComplex::new(RingSpec::integers(), -(top as i64), objects, boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain_homology;

    fn constant(g: FgAbelianGroup, n: usize) -> TruncatedCosimplicial<Modules> {
        TruncatedCosimplicial::constant(&Modules, &ModuleOverRing::abelian(g), n).unwrap()
    }

    #[test]
    fn constant_z3() {
        let a = constant(FgAbelianGroup::cyclic(3), 3);
        assert_eq!(cohomotopy(&a, 0).unwrap().to_string(), "Z/3");
        assert!(cohomotopy(&a, 1).unwrap().is_trivial());
        assert!(cohomotopy(&a, 2).unwrap().is_trivial());
        assert!(cohomotopy(&a, 3).is_err());
        // Unnormalized: Z/3, then alternating sums 0, id, 0, … give zero too.
        assert_eq!(unnormalized_cohomology(&a, 0).unwrap().to_string(), "Z/3");
        assert!(unnormalized_cohomology(&a, 1).unwrap().is_trivial());
    }

    #[test]
    fn zero_bottom_level() {
        let a = constant(FgAbelianGroup::zero(), 2);
        assert!(cohomotopy(&a, 0).unwrap().is_trivial());
    }

    #[test]
    fn normalized_complex_matches_cohomotopy() {
        let a = constant(FgAbelianGroup::free(2), 3);
        let c = normalized_cochain(&a).unwrap();
        // Normalized pieces of a constant object vanish above degree 0.
        assert_eq!(chain_homology(&c, 0).unwrap().to_string(), "Z^2");
        assert!(c.object(-1).unwrap().is_trivial());
    }
}
