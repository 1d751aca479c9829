//! Finite categories given by explicit composition tables, and functors
//! between them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{invalid, mismatch, Result};

/// A named morphism `source → target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(PartialEq, Eq)]
struct Inner {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    /// `(g, f) ↦ g ∘ f` for every composable pair.
    composition: HashMap<(usize, usize), usize>,
    /// `hom[a][b]` lists the morphisms `a → b`.
    hom: Vec<Vec<Vec<usize>>>,
}

/// A finite category. Cloning is cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCat(Arc<Inner>);

impl FinCat {
    /// Validates endpoints, closure under composition, unit laws and associativity.
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        composition: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let cat = Self::new_unchecked(objects, arrows, identities, composition)?;
        cat.validate()?;
        Ok(cat)
    }

    /// Checks only that the table is closed and well-typed.
    pub(crate) fn new_unchecked(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        composition: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let n = objects.len();
        if identities.len() != n {
            return Err(mismatch!("{} identities for {} objects", identities.len(), n));
        }
        let mut hom = vec![vec![Vec::new(); n]; n];
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= n || a.target >= n {
                return Err(invalid!("morphism {} has an endpoint outside the objects", a.name));
            }
            hom[a.source][a.target].push(i);
        }
        for (x, &i) in identities.iter().enumerate() {
            let a = arrows.get(i).ok_or_else(|| invalid!("identity of {} is not a morphism", objects[x]))?;
            if a.source != x || a.target != x {
                return Err(invalid!("identity of {} is not an endomorphism of it", objects[x]));
            }
        }
        for (g, ga) in arrows.iter().enumerate() {
            for (f, fa) in arrows.iter().enumerate() {
                if fa.target != ga.source {
                    continue;
                }
                let h = *composition
                    .get(&(g, f))
                    .ok_or_else(|| invalid!("composite {} ∘ {} is missing", ga.name, fa.name))?;
                let ha = arrows.get(h).ok_or_else(|| invalid!("composite {} ∘ {} is not a morphism", ga.name, fa.name))?;
                if ha.source != fa.source || ha.target != ga.target {
                    return Err(invalid!("composite {} ∘ {} has the wrong endpoints", ga.name, fa.name));
                }
            }
        }
        Ok(FinCat(Arc::new(Inner { objects, arrows, identities, composition, hom })))
    }

    fn validate(&self) -> Result<()> {
        for (f, fa) in self.0.arrows.iter().enumerate() {
            if self.compose(self.identity(fa.target), f) != f || self.compose(f, self.identity(fa.source)) != f {
                return Err(invalid!("unit law fails for {}", fa.name));
            }
        }
        for h in 0..self.0.arrows.len() {
            for g in self.out_of(self.target(h)) {
                for f in self.out_of(self.target(g)) {
                    if self.compose(f, self.compose(g, h)) != self.compose(self.compose(f, g), h) {
                        return Err(invalid!(
                            "composition is not associative on ({}, {}, {})",
                            self.name(f),
                            self.name(g),
                            self.name(h)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Morphisms out of `a`, in index order.
    fn out_of(&self, a: usize) -> Vec<usize> {
        (0..self.0.arrows.len()).filter(|&f| self.0.arrows[f].source == a).collect()
    }

    pub fn objects(&self) -> &[String] {
        &self.0.objects
    }

    pub fn object_count(&self) -> usize {
        self.0.objects.len()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.0.objects.iter().position(|o| o == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.0.arrows
    }

    pub fn morphism_count(&self) -> usize {
        self.0.arrows.len()
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.0.arrows.iter().position(|a| a.name == name)
    }

    pub fn name(&self, f: usize) -> &str {
        &self.0.arrows[f].name
    }

    pub fn source(&self, f: usize) -> usize {
        self.0.arrows[f].source
    }

    pub fn target(&self, f: usize) -> usize {
        self.0.arrows[f].target
    }

    pub fn identity(&self, x: usize) -> usize {
        self.0.identities[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.0.identities[self.source(f)] == f
    }

    /// `g ∘ f`; panics if they are not composable.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.0.composition[&(g, f)]
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Result<usize> {
        self.0
            .composition
            .get(&(g, f))
            .copied()
            .ok_or_else(|| mismatch!("{} and {} are not composable", self.name(g), self.name(f)))
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.0.hom[a][b]
    }

    /// The composition table as `((g, f), g ∘ f)` triples, sorted.
    pub fn composition_table(&self) -> Vec<((usize, usize), usize)> {
        let mut t: Vec<_> = self.0.composition.iter().map(|(&k, &v)| (k, v)).collect();
        t.sort_unstable();
        t
    }

    /// The category with `n` objects and only identities.
    pub fn discrete(n: usize) -> Self {
        Self::free_on_graph(n, &[]).expect("no edges").category
    }

    /// `d0 → d1`
    pub fn arrow() -> Self {
        Self::free_on_graph(2, &[(0, 1)]).expect("acyclic").category
    }

    /// One object with automorphism group `ℤ/k`.
    pub fn cyclic_group(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(invalid!("cyclic group needs a positive order"));
        }
        let arrows = (0..k)
            .map(|i| Arrow { name: if i == 0 { "id_*".into() } else { format!("g^{}", i) }, source: 0, target: 0 })
            .collect();
        let composition = (0..k).flat_map(|a| (0..k).map(move |b| ((a, b), (a + b) % k))).collect();
        Self::new(vec!["*".into()], arrows, vec![0], composition)
    }

    /// The free category on a directed acyclic multigraph; objects are named
    /// `d0, d1, …`, edge `i` is named `e{i}`.
    pub fn free_on_graph(n: usize, edges: &[(usize, usize)]) -> Result<FreeCategory> {
        if let Some(&(s, t)) = edges.iter().find(|&&(s, t)| s >= n || t >= n) {
            return Err(invalid!("edge {} → {} leaves the {} objects", s, t, n));
        }
        // Paths by breadth: identities first, then longer paths.
        let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..n).map(|x| (x, x, Vec::new())).collect();
        let mut frontier: Vec<usize> = (0..n).collect();
        let mut length = 0;
        while !frontier.is_empty() {
            length += 1;
            if length > n {
                return Err(invalid!("graph has a cycle, so its free category is infinite"));
            }
            let mut next = Vec::new();
            for &p in &frontier {
                let (s, t, ref route) = paths[p].clone();
                for (e, &(es, et)) in edges.iter().enumerate() {
                    if es == t {
                        let mut r = route.clone();
                        r.push(e);
                        next.push(paths.len());
                        paths.push((s, et, r));
                    }
                }
            }
            frontier = next;
        }
        let index: HashMap<Vec<usize>, usize> =
            paths.iter().enumerate().filter(|(_, p)| !p.2.is_empty()).map(|(i, p)| (p.2.clone(), i)).collect();
        let arrows = paths
            .iter()
            .map(|(s, t, r)| Arrow {
                name: if r.is_empty() {
                    format!("id_d{}", s)
                } else {
                    r.iter().rev().map(|e| format!("e{}", e)).collect::<Vec<_>>().join("∘")
                },
                source: *s,
                target: *t,
            })
            .collect();
        let mut composition = HashMap::new();
        for (g, (gs, _, gr)) in paths.iter().enumerate() {
            for (f, (_, ft, fr)) in paths.iter().enumerate() {
                if *ft != *gs {
                    continue;
                }
                let h = if fr.is_empty() {
                    g
                } else if gr.is_empty() {
                    f
                } else {
                    index[&[fr.clone(), gr.clone()].concat()]
                };
                composition.insert((g, f), h);
            }
        }
        let objects = (0..n).map(|i| format!("d{}", i)).collect();
        let category = Self::new_unchecked(objects, arrows, (0..n).collect(), composition)?;
        let routes = paths.into_iter().map(|p| p.2).collect();
        let generators = (0..edges.len()).map(|e| index[&vec![e]]).collect();
        Ok(FreeCategory { category, routes, generators })
    }

    /// The same category with its objects renamed; identities named
    /// `id_<object>` follow the rename.
    pub fn with_object_names(&self, names: Vec<String>) -> Result<FinCat> {
        if names.len() != self.object_count() {
            return Err(mismatch!("{} names for {} objects", names.len(), self.object_count()));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(invalid!("object names must be distinct"));
        }
        let i = &self.0;
        let mut arrows = i.arrows.clone();
        for (x, &id) in i.identities.iter().enumerate() {
            if arrows[id].name == format!("id_{}", i.objects[x]) {
                arrows[id].name = format!("id_{}", names[x]);
            }
        }
        Ok(FinCat(Arc::new(Inner {
            objects: names,
            arrows,
            identities: i.identities.clone(),
            composition: i.composition.clone(),
            hom: i.hom.clone(),
        })))
    }

    /// The full subcategory on `keep` (in that order) with its inclusion.
    pub fn full_subcategory(&self, keep: &[usize]) -> Result<CatFunctor> {
        let mut position = vec![None; self.object_count()];
        for (k, &x) in keep.iter().enumerate() {
            if x >= self.object_count() || position[x].is_some() {
                return Err(invalid!("full subcategory needs distinct objects of the category"));
            }
            position[x] = Some(k);
        }
        let kept: Vec<usize> = (0..self.morphism_count())
            .filter(|&f| position[self.source(f)].is_some() && position[self.target(f)].is_some())
            .collect();
        let new_index: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let arrows = kept
            .iter()
            .map(|&f| Arrow {
                name: self.name(f).to_string(),
                source: position[self.source(f)].unwrap(),
                target: position[self.target(f)].unwrap(),
            })
            .collect();
        let identities = keep.iter().map(|&x| new_index[&self.identity(x)]).collect();
        let mut composition = HashMap::new();
        for &g in &kept {
            for &f in &kept {
                if self.target(f) == self.source(g) {
                    composition.insert((new_index[&g], new_index[&f]), new_index[&self.compose(g, f)]);
                }
            }
        }
        let objects = keep.iter().map(|&x| self.objects()[x].clone()).collect();
        let sub = Self::new_unchecked(objects, arrows, identities, composition)?;
        CatFunctor::new(sub, self.clone(), keep.to_vec(), kept)
    }
}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinCat({} objects, {} morphisms)", self.object_count(), self.morphism_count())
    }
}

/// A free category on a graph, remembering each morphism as a path of edges.
#[derive(Clone, Debug)]
pub struct FreeCategory {
    pub category: FinCat,
    /// Edge indices along each morphism, first edge first; empty for identities.
    pub routes: Vec<Vec<usize>>,
    /// The morphism index of each generating edge.
    pub generators: Vec<usize>,
}

impl FreeCategory {
    /// The functor out of this free category sending edge `e` to `images[e]`.
    pub fn extend(&self, target: &FinCat, on_objects: Vec<usize>, images: &[usize]) -> Result<CatFunctor> {
        let mut on_morphisms = Vec::with_capacity(self.routes.len());
        for (f, route) in self.routes.iter().enumerate() {
            let mut acc = target.identity(on_objects[self.category.source(f)]);
            for &e in route {
                acc = target.try_compose(images[e], acc)?;
            }
            on_morphisms.push(acc);
        }
        CatFunctor::new(self.category.clone(), target.clone(), on_objects, on_morphisms)
    }
}

/// A functor of finite categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatFunctor {
    source: FinCat,
    target: FinCat,
    on_objects: Vec<usize>,
    on_morphisms: Vec<usize>,
}

impl CatFunctor {
    /// Validates endpoints, identities and composition.
    pub fn new(source: FinCat, target: FinCat, on_objects: Vec<usize>, on_morphisms: Vec<usize>) -> Result<Self> {
        if on_objects.len() != source.object_count() || on_morphisms.len() != source.morphism_count() {
            return Err(mismatch!("functor data does not cover the source category"));
        }
        if on_objects.iter().any(|&x| x >= target.object_count()) || on_morphisms.iter().any(|&f| f >= target.morphism_count()) {
            return Err(invalid!("functor sends something outside the target category"));
        }
        for f in 0..source.morphism_count() {
            let g = on_morphisms[f];
            if target.source(g) != on_objects[source.source(f)] || target.target(g) != on_objects[source.target(f)] {
                return Err(invalid!("image of {} has the wrong endpoints", source.name(f)));
            }
        }
        for x in 0..source.object_count() {
            if on_morphisms[source.identity(x)] != target.identity(on_objects[x]) {
                return Err(invalid!("identity of {} is not preserved", source.objects()[x]));
            }
        }
        for (&(g, f), &h) in source.0.composition.iter() {
            if target.compose(on_morphisms[g], on_morphisms[f]) != on_morphisms[h] {
                return Err(invalid!("composite {} ∘ {} is not preserved", source.name(g), source.name(f)));
            }
        }
        Ok(CatFunctor { source, target, on_objects, on_morphisms })
    }

    pub fn identity(c: &FinCat) -> Self {
        CatFunctor {
            source: c.clone(),
            target: c.clone(),
            on_objects: (0..c.object_count()).collect(),
            on_morphisms: (0..c.morphism_count()).collect(),
        }
    }

    pub fn source(&self) -> &FinCat {
        &self.source
    }

    pub fn target(&self) -> &FinCat {
        &self.target
    }

    pub fn object(&self, x: usize) -> usize {
        self.on_objects[x]
    }

    pub fn morphism(&self, f: usize) -> usize {
        self.on_morphisms[f]
    }

    pub fn on_objects(&self) -> &[usize] {
        &self.on_objects
    }

    pub fn on_morphisms(&self) -> &[usize] {
        &self.on_morphisms
    }

    /// Every `Hom(a, b) → Hom(Φa, Φb)` is surjective.
    pub fn is_full(&self) -> bool {
        self.hom_maps().all(|(image, all)| all.iter().all(|g| image.contains(g)))
    }

    /// Every `Hom(a, b) → Hom(Φa, Φb)` is injective.
    pub fn is_faithful(&self) -> bool {
        self.hom_maps().all(|(mut image, _)| {
            let n = image.len();
            image.sort_unstable();
            image.dedup();
            image.len() == n
        })
    }

    fn hom_maps(&self) -> impl Iterator<Item = (Vec<usize>, &[usize])> + '_ {
        let n = self.source.object_count();
        (0..n).flat_map(move |a| {
            (0..n).map(move |b| {
                let image = self.source.hom(a, b).iter().map(|&f| self.on_morphisms[f]).collect();
                (image, self.target.hom(self.on_objects[a], self.on_objects[b]))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_on_path_of_two_edges() {
        let free = FinCat::free_on_graph(3, &[(0, 1), (1, 2)]).unwrap();
        let c = &free.category;
        assert_eq!(c.morphism_count(), 6);
        assert!(c.validate().is_ok());
        assert_eq!(c.hom(0, 2).len(), 1);
        assert_eq!(c.name(c.hom(0, 2)[0]), "e1∘e0");
    }

    #[test]
    fn parallel_edges_stay_distinct() {
        let c = FinCat::free_on_graph(2, &[(0, 1), (0, 1)]).unwrap().category;
        assert_eq!(c.hom(0, 1).len(), 2);
    }

    #[test]
    fn cycle_rejected() {
        assert!(FinCat::free_on_graph(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn non_associative_table_names_the_triple() {
        // One object, morphisms {1, a, b}; a∘a = b and everything else collapses to 1,
        // so (a∘a)∘a = b∘a = 1 while a∘(a∘a) = a∘b = b.
        let arrows = ["1", "a", "b"].iter().map(|n| Arrow { name: n.to_string(), source: 0, target: 0 }).collect();
        let mut comp = HashMap::new();
        for x in 0..3 {
            comp.insert((0, x), x);
            comp.insert((x, 0), x);
        }
        comp.insert((1, 1), 2);
        comp.insert((2, 1), 0);
        comp.insert((1, 2), 2);
        comp.insert((2, 2), 0);
        let err = FinCat::new(vec!["*".into()], arrows, vec![0], comp).unwrap_err();
        assert!(err.to_string().contains("not associative"), "{}", err);
    }

    #[test]
    fn inclusions_are_full() {
        let c = FinCat::free_on_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap().category;
        let inc = c.full_subcategory(&[0, 2]).unwrap();
        assert!(inc.is_full() && inc.is_faithful());
        assert_eq!(inc.source().hom(0, 1).len(), 2);
        assert!(CatFunctor::identity(&c).is_full());
    }

    #[test]
    fn point_into_arrow() {
        let a = FinCat::arrow();
        let phi = CatFunctor::new(FinCat::discrete(1), a.clone(), vec![0], vec![a.identity(0)]).unwrap();
        assert!(phi.is_full());
        let collapse = FinCat::free_on_graph(1, &[]).unwrap();
        let g = FinCat::cyclic_group(2).unwrap();
        let to_group = collapse.extend(&g, vec![0], &[]).unwrap();
        assert!(!to_group.is_full());
    }
}
