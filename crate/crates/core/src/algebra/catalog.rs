//! Fixture ring maps and probe modules used by checks, tests and the CLI.

use super::group::FgAbelianGroup;
use super::matrix::IntegerMatrix;
use super::module::{base_change, ModuleOverRing};
use super::ring::{RingMap, RingSpec};
use crate::error::Result;

/// A named ring map.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub map: RingMap,
}

/// The seven fixture maps: identity of ℤ, diagonals into ℤ² and ℤ³, the
/// quotients ℤ/2 and ℤ/6, the Gaussian integers, and ℤ/2 → ℤ/2 × ℤ/2.
pub fn ring_map_catalog() -> Vec<CatalogEntry> {
    let z2 = RingSpec::cyclic(2);
    let f2f2 = RingSpec::product(&[z2.clone(), z2.clone()]).expect("product ring");
    let diag = IntegerMatrix::from_rows(&[[1], [1]], 1).expect("column");
    let entry = |name, description, map| CatalogEntry { name, description, map };
    vec![
        entry("id", "identity of Z", RingMap::identity(&RingSpec::integers())),
        entry("zz2", "Z -> Z x Z diagonal", from_z(&RingSpec::integer_power(2))),
        entry("zz3", "Z -> Z x Z x Z diagonal", from_z(&RingSpec::integer_power(3))),
        entry("z2", "Z -> Z/2", from_z(&z2)),
        entry("z6", "Z -> Z/6", from_z(&RingSpec::cyclic(6))),
        entry("gauss", "Z -> Z[x]/(x^2 + 1)", from_z(&RingSpec::gaussian_integers())),
        entry("f2f2", "Z/2 -> Z/2 x Z/2 diagonal", RingMap::new(z2, f2f2, diag).expect("diagonal")),
    ]
}

fn from_z(target: &RingSpec) -> RingMap {
    RingMap::from_integers(target).expect("structure map")
}

/// Look up a catalog map by name.
pub fn catalog_map(name: &str) -> Option<RingMap> {
    ring_map_catalog().into_iter().find(|e| e.name == name).map(|e| e.map)
}

/// Probe modules over ℤ: ℤ, ℤ/2, ℤ², ℤ ⊕ ℤ/4.
pub fn integer_probes() -> Vec<(&'static str, ModuleOverRing)> {
    let z = RingSpec::integers();
    let m = |g| ModuleOverRing::scalar(&z, g).expect("abelian group as Z-module");
    vec![
        ("Z", m(FgAbelianGroup::free(1))),
        ("Z/2", m(FgAbelianGroup::cyclic(2))),
        ("Z^2", m(FgAbelianGroup::free(2))),
        ("Z+Z/4", m(FgAbelianGroup::from_orders(&[0, 4]))),
    ]
}

/// Probe modules over `ring`: the integer probes, base-changed along `ℤ → ring`
/// when `ring` is not ℤ.
pub fn probes_for(ring: &RingSpec) -> Result<Vec<(&'static str, ModuleOverRing)>> {
    if ring == &RingSpec::integers() {
        return Ok(integer_probes());
    }
    let unit = RingMap::from_integers(ring)?;
    integer_probes().into_iter().map(|(name, m)| Ok((name, base_change(&m, &unit)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_seven_maps() {
        let names: Vec<_> = ring_map_catalog().iter().map(|e| e.name).collect();
        assert_eq!(names, ["id", "zz2", "zz3", "z2", "z6", "gauss", "f2f2"]);
    }

    #[test]
    fn probes_over_f2() {
        let p = probes_for(&RingSpec::cyclic(2)).unwrap();
        let shapes: Vec<_> = p.iter().map(|(_, m)| m.underlying().invariant_factors().to_string()).collect();
        assert_eq!(shapes, ["Z/2", "Z/2", "Z/2 + Z/2", "Z/2 + Z/2"]);
    }
}
