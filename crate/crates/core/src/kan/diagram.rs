//! Diagrams on finite categories valued in finite sets or finitely generated
//! abelian groups, natural transformations, and colimits.

use std::fmt::Debug;

use super::fincat::FinCat;
use crate::algebra::{FgAbelianGroup, IntegerMatrix, ModuleMap, ModuleOverRing};
use crate::codescent::{quotient, FinSet, FinSetMap, Label};
use crate::error::{invalid, mismatch, Result};
use crate::simplicial::{Category, FiniteColimits, Modules};

/// Which kind of values a diagram takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValueKind {
    Sets,
    Groups,
}

/// A category of values with finite colimits and an initial object.
pub trait ValueCategory: FiniteColimits + Clone + Debug
where
    Self::Morphism: PartialEq,
{
    fn kind(&self) -> ValueKind;
    fn initial(&self) -> Self::Object;
    fn from_initial(&self, target: &Self::Object) -> Self::Morphism;
    /// Bijection of sets, or isomorphism of groups.
    fn is_isomorphism(&self, f: &Self::Morphism) -> Result<bool> {
        Ok(FiniteColimits::is_injective(self, f)? && FiniteColimits::is_surjective(self, f)?)
    }
}

/// Finite sets and total maps.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sets;

impl Category for Sets {
    type Object = FinSet;
    type Morphism = FinSetMap;

    fn source(&self, f: &FinSetMap) -> FinSet {
        f.source().clone()
    }
    fn target(&self, f: &FinSetMap) -> FinSet {
        f.target().clone()
    }
    fn identity(&self, x: &FinSet) -> FinSetMap {
        FinSetMap::identity(x)
    }
    fn compose(&self, g: &FinSetMap, f: &FinSetMap) -> Result<FinSetMap> {
        g.after(f)
    }
    fn same_morphism(&self, f: &FinSetMap, g: &FinSetMap) -> Result<bool> {
        if f.source() != g.source() || f.target() != g.target() {
            return Err(mismatch!("comparing set maps with different endpoints"));
        }
        Ok(f.assignment() == g.assignment())
    }
    fn describe(&self, x: &FinSet) -> String {
        x.len().to_string()
    }
}

impl FiniteColimits for Sets {
    fn coproduct(&self, summands: &[FinSet]) -> Result<(FinSet, Vec<FinSetMap>)> {
        let mut labels = Vec::new();
        let mut offsets = Vec::with_capacity(summands.len());
        for (k, s) in summands.iter().enumerate() {
            offsets.push(labels.len());
            labels.extend(s.labels().iter().map(|l| Label::Tag(k, Box::new(l.clone()))));
        }
        let c = FinSet::new(labels)?;
        let legs = summands
            .iter()
            .zip(offsets)
            .map(|(s, o)| FinSetMap::new(s.clone(), c.clone(), (o..o + s.len()).collect()))
            .collect::<Result<_>>()?;
        Ok((c, legs))
    }

    fn cotuple(&self, target: &FinSet, summands: &[FinSet], legs: &[FinSetMap]) -> Result<FinSetMap> {
        if legs.len() != summands.len() {
            return Err(mismatch!("{} legs for {} summands", legs.len(), summands.len()));
        }
        let (c, _) = self.coproduct(summands)?;
        FinSetMap::new(c, target.clone(), legs.iter().flat_map(|l| l.assignment().iter().copied()).collect())
    }

    fn coequalizer(&self, f: &FinSetMap, g: &FinSetMap) -> Result<(FinSet, FinSetMap)> {
        quotient(f.target(), (0..f.source().len()).map(|i| (f.apply(i), g.apply(i))))
    }

    fn descend(&self, projection: &FinSetMap, h: &FinSetMap) -> Result<FinSetMap> {
        let mut assignment: Vec<Option<usize>> = vec![None; projection.target().len()];
        for i in 0..h.source().len() {
            let c = projection.apply(i);
            match assignment[c] {
                Some(w) if w != h.apply(i) => return Err(invalid!("map is not constant on the classes of the quotient")),
                _ => assignment[c] = Some(h.apply(i)),
            }
        }
        let assignment = assignment.into_iter().map(|a| a.ok_or_else(|| invalid!("empty class"))).collect::<Result<_>>()?;
        FinSetMap::new(projection.target().clone(), h.target().clone(), assignment)
    }

    fn is_injective(&self, f: &FinSetMap) -> Result<bool> {
        Ok(f.is_injective())
    }

    fn is_surjective(&self, f: &FinSetMap) -> Result<bool> {
        Ok(f.is_surjective())
    }
}

impl ValueCategory for Sets {
    fn kind(&self) -> ValueKind {
        ValueKind::Sets
    }
    fn initial(&self) -> FinSet {
        FinSet::empty()
    }
    fn from_initial(&self, target: &FinSet) -> FinSetMap {
        FinSetMap::new(FinSet::empty(), target.clone(), Vec::new()).expect("empty map")
    }
}

impl ValueCategory for Modules {
    fn kind(&self) -> ValueKind {
        ValueKind::Groups
    }
    fn initial(&self) -> ModuleOverRing {
        ModuleOverRing::abelian(FgAbelianGroup::zero())
    }
    fn from_initial(&self, target: &ModuleOverRing) -> ModuleMap {
        ModuleMap::zero(&self.initial(), target)
    }
}

/// A functor from a finite category into a category of values.
pub struct DiagFunctor<V: ValueCategory>
where
    V::Morphism: PartialEq,
{
    base: FinCat,
    values: Vec<V::Object>,
    maps: Vec<V::Morphism>,
}

impl<V: ValueCategory> Clone for DiagFunctor<V>
where
    V::Morphism: PartialEq,
{
    fn clone(&self) -> Self {
        DiagFunctor { base: self.base.clone(), values: self.values.clone(), maps: self.maps.clone() }
    }
}

impl<V: ValueCategory> PartialEq for DiagFunctor<V>
where
    V::Morphism: PartialEq,
{
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.values == other.values && self.maps == other.maps
    }
}

impl<V: ValueCategory> Debug for DiagFunctor<V>
where
    V::Morphism: PartialEq,
{
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.values.iter()).finish()
    }
}

impl<V: ValueCategory> DiagFunctor<V>
where
    V::Morphism: PartialEq,
{
    /// Validates endpoints and exact functoriality.
    pub fn new(cat: &V, base: FinCat, values: Vec<V::Object>, maps: Vec<V::Morphism>) -> Result<Self> {
        if values.len() != base.object_count() || maps.len() != base.morphism_count() {
            return Err(mismatch!("diagram data does not cover the base category"));
        }
        for (f, m) in maps.iter().enumerate() {
            if cat.source(m) != values[base.source(f)] || cat.target(m) != values[base.target(f)] {
                return Err(invalid!("value of {} has the wrong endpoints", base.name(f)));
            }
        }
        for x in 0..base.object_count() {
            if !cat.is_identity(&maps[base.identity(x)])? {
                return Err(invalid!("identity of {} is not sent to an identity", base.objects()[x]));
            }
        }
        for ((g, f), h) in base.composition_table() {
            if !cat.same_morphism(&cat.compose(&maps[g], &maps[f])?, &maps[h])? {
                return Err(invalid!("composite {} ∘ {} is not preserved", base.name(g), base.name(f)));
            }
        }
        Ok(DiagFunctor { base, values, maps })
    }

    pub(crate) fn new_trusted(base: FinCat, values: Vec<V::Object>, maps: Vec<V::Morphism>) -> Self {
        DiagFunctor { base, values, maps }
    }

    /// The constant diagram at `value`.
    pub fn constant(cat: &V, base: &FinCat, value: &V::Object) -> Self {
        DiagFunctor {
            base: base.clone(),
            values: vec![value.clone(); base.object_count()],
            maps: vec![cat.identity(value); base.morphism_count()],
        }
    }

    pub fn base(&self) -> &FinCat {
        &self.base
    }

    pub fn value(&self, x: usize) -> &V::Object {
        &self.values[x]
    }

    pub fn values(&self) -> &[V::Object] {
        &self.values
    }

    pub fn map(&self, f: usize) -> &V::Morphism {
        &self.maps[f]
    }

    pub fn maps(&self) -> &[V::Morphism] {
        &self.maps
    }
}

/// A natural transformation between diagrams on the same category.
pub struct NatTrans<V: ValueCategory>
where
    V::Morphism: PartialEq,
{
    pub source: DiagFunctor<V>,
    pub target: DiagFunctor<V>,
    pub components: Vec<V::Morphism>,
}

impl<V: ValueCategory> Clone for NatTrans<V>
where
    V::Morphism: PartialEq,
{
    fn clone(&self) -> Self {
        NatTrans { source: self.source.clone(), target: self.target.clone(), components: self.components.clone() }
    }
}

impl<V: ValueCategory> Debug for NatTrans<V>
where
    V::Morphism: PartialEq,
{
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.components.iter()).finish()
    }
}

impl<V: ValueCategory> NatTrans<V>
where
    V::Morphism: PartialEq,
{
    /// Validates endpoints and naturality squares.
    pub fn new(cat: &V, source: DiagFunctor<V>, target: DiagFunctor<V>, components: Vec<V::Morphism>) -> Result<Self> {
        let base = source.base.clone();
        if target.base != base || components.len() != base.object_count() {
            return Err(mismatch!("transformation data does not match its diagrams"));
        }
        for f in 0..base.morphism_count() {
            let (a, b) = (base.source(f), base.target(f));
            let lhs = cat.compose(target.map(f), &components[a])?;
            let rhs = cat.compose(&components[b], source.map(f))?;
            if !cat.same_morphism(&lhs, &rhs)? {
                return Err(invalid!("naturality square for {} does not commute", base.name(f)));
            }
        }
        Ok(NatTrans { source, target, components })
    }
}

/// The category of `V`-valued diagrams on a fixed finite category.
#[derive(Clone, Debug)]
pub struct Diagrams<V> {
    pub base: FinCat,
    pub values: V,
}

impl<V: ValueCategory> Category for Diagrams<V>
where
    V::Morphism: PartialEq,
{
    type Object = DiagFunctor<V>;
    type Morphism = NatTrans<V>;

    fn source(&self, f: &NatTrans<V>) -> DiagFunctor<V> {
        f.source.clone()
    }
    fn target(&self, f: &NatTrans<V>) -> DiagFunctor<V> {
        f.target.clone()
    }
    fn identity(&self, x: &DiagFunctor<V>) -> NatTrans<V> {
        let components = x.values.iter().map(|v| self.values.identity(v)).collect();
        NatTrans { source: x.clone(), target: x.clone(), components }
    }
    fn compose(&self, g: &NatTrans<V>, f: &NatTrans<V>) -> Result<NatTrans<V>> {
        if f.target != g.source {
            return Err(mismatch!("composing transformations with different middle diagrams"));
        }
        let components =
            g.components.iter().zip(&f.components).map(|(a, b)| self.values.compose(a, b)).collect::<Result<_>>()?;
        Ok(NatTrans { source: f.source.clone(), target: g.target.clone(), components })
    }
    fn same_morphism(&self, f: &NatTrans<V>, g: &NatTrans<V>) -> Result<bool> {
        for (a, b) in f.components.iter().zip(&g.components) {
            if !self.values.same_morphism(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    fn describe(&self, x: &DiagFunctor<V>) -> String {
        x.values.iter().map(|v| self.values.describe(v)).collect::<Vec<_>>().join(", ")
    }
}

/// A colimit with its coprojections and what is needed to induce maps out of it.
pub struct Colimit<V: ValueCategory>
where
    V::Morphism: PartialEq,
{
    pub object: V::Object,
    /// Coprojection from the value at each object of the shape.
    pub legs: Vec<V::Morphism>,
    summands: Vec<V::Object>,
    /// `∐ values → object`, or `None` for an empty shape.
    projection: Option<V::Morphism>,
}

impl<V: ValueCategory> Colimit<V>
where
    V::Morphism: PartialEq,
{
    /// The map out of the colimit with the given legs, which must form a cocone.
    pub fn induced(&self, cat: &V, target: &V::Object, legs: &[V::Morphism]) -> Result<V::Morphism> {
        match &self.projection {
            None => Ok(cat.from_initial(target)),
            Some(p) => cat.descend(p, &cat.cotuple(target, &self.summands, legs)?),
        }
    }
}

/// `colim` of a diagram given by per-object values and per-morphism maps on
/// `shape`: the coproduct of the values modulo `ι_a = ι_b ∘ x(g)` for each
/// non-identity `g: a → b`.
pub fn colimit<V: ValueCategory>(cat: &V, shape: &FinCat, values: &[V::Object], maps: &[V::Morphism]) -> Result<Colimit<V>>
where
    V::Morphism: PartialEq,
{
    if values.is_empty() {
        return Ok(Colimit { object: cat.initial(), legs: Vec::new(), summands: Vec::new(), projection: None });
    }
    let (sum, inj) = cat.coproduct(values)?;
    let relations: Vec<usize> = (0..shape.morphism_count()).filter(|&g| !shape.is_identity(g)).collect();
    let (object, projection) = if relations.is_empty() {
        (sum.clone(), cat.identity(&sum))
    } else {
        let domains: Vec<V::Object> = relations.iter().map(|&g| values[shape.source(g)].clone()).collect();
        let lhs: Vec<_> = relations.iter().map(|&g| inj[shape.source(g)].clone()).collect();
        let rhs: Vec<_> = relations.iter().map(|&g| cat.compose(&inj[shape.target(g)], &maps[g])).collect::<Result<_>>()?;
        let a = cat.cotuple(&sum, &domains, &lhs)?;
        let b = cat.cotuple(&sum, &domains, &rhs)?;
        cat.coequalizer(&a, &b)?
    };
    let legs = inj.iter().map(|i| cat.compose(&projection, i)).collect::<Result<_>>()?;
    Ok(Colimit { object, legs, summands: values.to_vec(), projection: Some(projection) })
}

/// Free abelian group on a finite set, with the induced map of a set map.
pub fn linearize(f: &FinSetMap) -> Result<ModuleMap> {
    let src = ModuleOverRing::abelian(FgAbelianGroup::free(f.source().len()));
    let tgt = ModuleOverRing::abelian(FgAbelianGroup::free(f.target().len()));
    let (rows, cols) = (f.target().len(), f.source().len());
    let mut data = vec![num_bigint::BigInt::from(0); rows * cols];
    for i in 0..cols {
        data[f.apply(i) * cols + i] = 1.into();
    }
    ModuleMap::new(src, tgt, IntegerMatrix::from_entries(rows, cols, data)?)
}

/// `ℤ[x]`: the free abelian group diagram on a set-valued diagram.
pub fn linearize_diagram(x: &DiagFunctor<Sets>) -> Result<DiagFunctor<Modules>> {
    let maps: Vec<ModuleMap> = x.maps().iter().map(linearize).collect::<Result<_>>()?;
    let values = x.values().iter().map(|s| ModuleOverRing::abelian(FgAbelianGroup::free(s.len()))).collect();
    DiagFunctor::new(&Modules, x.base().clone(), values, maps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow_sets() -> DiagFunctor<Sets> {
        let a = FinCat::arrow();
        let x0 = FinSet::from_names(&["p", "q"]).unwrap();
        let x1 = FinSet::from_names(&["r"]).unwrap();
        let f = FinSetMap::new(x0.clone(), x1.clone(), vec![0, 0]).unwrap();
        let maps = vec![FinSetMap::identity(&x0), FinSetMap::identity(&x1), f];
        DiagFunctor::new(&Sets, a, vec![x0, x1], maps).unwrap()
    }

    #[test]
    fn colimit_over_arrow_is_target_value() {
        let x = arrow_sets();
        let c = colimit(&Sets, x.base(), x.values(), x.maps()).unwrap();
        assert_eq!(c.object.len(), 1);
        let g = linearize_diagram(&x).unwrap();
        let cg = colimit(&Modules, g.base(), g.values(), g.maps()).unwrap();
        assert_eq!(cg.object.underlying().invariant_factors().to_string(), "Z");
    }

    #[test]
    fn nonfunctorial_data_rejected() {
        let a = FinCat::arrow();
        let x0 = FinSet::range(2);
        let swap = FinSetMap::new(x0.clone(), x0.clone(), vec![1, 0]).unwrap();
        let maps = vec![swap.clone(), FinSetMap::identity(&x0), swap];
        assert!(DiagFunctor::new(&Sets, a, vec![x0.clone(), x0], maps).is_err());
    }

    #[test]
    fn empty_colimit_is_initial() {
        let c = colimit::<Sets>(&Sets, &FinCat::discrete(0), &[], &[]).unwrap();
        assert!(c.object.is_empty());
        let t = FinSet::range(2);
        assert!(c.induced(&Sets, &t, &[]).unwrap().source().is_empty());
    }
}
