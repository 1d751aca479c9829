//! Seeded random finite categories, functors and diagrams.
//!
//! Categories are free on random acyclic graphs with at most `max_objects`
//! objects and `max_morphisms` morphisms. Diagrams are generated on free
//! categories by choosing a value per object and a map per generating edge.

use rand::Rng;

use super::diagram::{DiagFunctor, Sets};
use super::fincat::{CatFunctor, FinCat, FreeCategory};
use super::nerve::nerve_cochains;
use crate::algebra::{FgAbelianGroup, GroupMap, IntegerMatrix, ModuleMap, ModuleOverRing};
use crate::codescent::{FinSet, FinSetMap};
use crate::simplicial::{Category, Modules, TruncatedCosimplicial};

#[derive(Clone, Copy, Debug)]
pub struct CategoryBounds {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for CategoryBounds {
    fn default() -> Self {
        CategoryBounds { max_objects: 3, max_morphisms: 8 }
    }
}

/// A free category on a random acyclic multigraph within the bounds.
pub fn random_free_category<R: Rng>(rng: &mut R, bounds: CategoryBounds) -> FreeCategory {
    loop {
        let n = rng.gen_range(1..=bounds.max_objects);
        let mut edges = Vec::new();
        for s in 0..n {
            for t in s + 1..n {
                for _ in 0..rng.gen_range(0..=2) {
                    edges.push((s, t));
                }
            }
        }
        let free = FinCat::free_on_graph(n, &edges).expect("acyclic by construction");
        if free.category.morphism_count() <= bounds.max_morphisms {
            return free;
        }
    }
}

/// A random functor out of a free category, or `None` if some generating
/// edge has no candidate image.
pub fn random_functor<R: Rng>(rng: &mut R, source: &FreeCategory, target: &FinCat) -> Option<CatFunctor> {
    let on_objects: Vec<usize> = (0..source.category.object_count()).map(|_| rng.gen_range(0..target.object_count())).collect();
    let mut images = Vec::new();
    for &g in &source.generators {
        let c = &source.category;
        let candidates = target.hom(on_objects[c.source(g)], on_objects[c.target(g)]);
        if candidates.is_empty() {
            return None;
        }
        images.push(candidates[rng.gen_range(0..candidates.len())]);
    }
    Some(source.extend(target, on_objects, &images).expect("free categories extend any edge assignment"))
}

/// A full functor into `target`: the identity, a full subcategory inclusion,
/// or a random functor from a free category that happens to be full.
pub fn random_full_functor<R: Rng>(rng: &mut R, target: &FinCat, bounds: CategoryBounds) -> CatFunctor {
    match rng.gen_range(0..3) {
        0 => CatFunctor::identity(target),
        1 => {
            let mut keep: Vec<usize> = (0..target.object_count()).filter(|_| rng.gen_bool(0.6)).collect();
            if keep.is_empty() {
                keep.push(rng.gen_range(0..target.object_count()));
            }
            target.full_subcategory(&keep).expect("distinct objects")
        }
        _ => {
            for _ in 0..20 {
                let source = random_free_category(rng, bounds);
                if let Some(phi) = random_functor(rng, &source, target) {
                    if phi.is_full() {
                        return phi;
                    }
                }
            }
            CatFunctor::identity(target)
        }
    }
}

/// A set-valued diagram on a free category with nonempty values of size ≤ 3.
pub fn random_set_diagram<R: Rng>(rng: &mut R, free: &FreeCategory) -> DiagFunctor<Sets> {
    let c = &free.category;
    let values: Vec<FinSet> = (0..c.object_count())
        .map(|x| FinSet::from_names(&(0..rng.gen_range(1..=3)).map(|i| format!("{}{}", c.objects()[x], char::from(b'a' + i))).collect::<Vec<_>>()).unwrap())
        .collect();
    let edges: Vec<FinSetMap> = free
        .generators
        .iter()
        .map(|&g| {
            let (s, t) = (&values[c.source(g)], &values[c.target(g)]);
            FinSetMap::new(s.clone(), t.clone(), (0..s.len()).map(|_| rng.gen_range(0..t.len())).collect()).unwrap()
        })
        .collect();
    let maps = free
        .routes
        .iter()
        .enumerate()
        .map(|(f, route)| {
            route.iter().fold(FinSetMap::identity(&values[c.source(f)]), |acc, &e| edges[e].after(&acc).unwrap())
        })
        .collect();
    DiagFunctor::new(&Sets, c.clone(), values, maps).expect("free extension is functorial")
}

/// A group-valued diagram on a free category; values are among
/// `0, ℤ, ℤ², ℤ/2, ℤ/4` and edge maps have small random entries.
pub fn random_group_diagram<R: Rng>(rng: &mut R, free: &FreeCategory) -> DiagFunctor<Modules> {
    let c = &free.category;
    let choices: [&[i64]; 5] = [&[], &[0], &[0, 0], &[2], &[4]];
    let values: Vec<ModuleOverRing> = (0..c.object_count())
        .map(|_| ModuleOverRing::abelian(FgAbelianGroup::from_orders(choices[rng.gen_range(0..choices.len())])))
        .collect();
    let edges: Vec<ModuleMap> = free
        .generators
        .iter()
        .map(|&g| {
            let (s, t) = (&values[c.source(g)], &values[c.target(g)]);
            random_module_map(rng, s, t)
        })
        .collect();
    let maps = free
        .routes
        .iter()
        .enumerate()
        .map(|(f, route)| {
            route.iter().fold(ModuleMap::identity(&values[c.source(f)]), |acc, &e| Modules.compose(&edges[e], &acc).unwrap())
        })
        .collect();
    DiagFunctor::new(&Modules, c.clone(), values, maps).expect("free extension is functorial")
}

/// A random well-defined map, falling back to zero when the draw is not.
fn random_module_map<R: Rng>(rng: &mut R, s: &ModuleOverRing, t: &ModuleOverRing) -> ModuleMap {
    let (rows, cols) = (t.generators(), s.generators());
    let data = (0..rows * cols).map(|_| rng.gen_range(-2i64..=2).into()).collect();
    let m = IntegerMatrix::from_entries(rows, cols, data).unwrap();
    match GroupMap::new(s.underlying().clone(), t.underlying().clone(), m.clone()) {
        Ok(_) => ModuleMap::new(s.clone(), t.clone(), m).unwrap(),
        Err(_) => ModuleMap::zero(s, t),
    }
}

/// Cochains on the nerve of a random small category (a free category or a
/// cyclic group of order ≤ 3) with coefficients among `ℤ, ℤ/2, ℤ/4, ℤ ⊕ ℤ/2`,
/// truncated at level 2, 3 or 4.
pub fn random_cosimplicial_group<R: Rng>(rng: &mut R) -> TruncatedCosimplicial<Modules> {
    let category = if rng.gen_bool(0.5) {
        FinCat::cyclic_group(rng.gen_range(1..=3)).expect("positive order")
    } else {
        random_free_category(rng, CategoryBounds { max_objects: 3, max_morphisms: 6 }).category
    };
    let choices: [&[i64]; 4] = [&[0], &[2], &[4], &[0, 2]];
    let g = FgAbelianGroup::from_orders(choices[rng.gen_range(0..choices.len())]);
    nerve_cochains(&category, &g, rng.gen_range(2..=4)).expect("nerve cochains are cosimplicial")
}
