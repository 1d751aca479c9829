//! Left Kan extension along a functor of finite categories, the comonad
//! `K_Φ = Φ_! Φ^*` on diagrams over the target, and the strict checks built
//! on it.

use std::collections::HashMap;

use super::diagram::{colimit, Colimit, DiagFunctor, Diagrams, NatTrans, ValueCategory};
use super::fincat::{Arrow, CatFunctor, FinCat};
use crate::error::{mismatch, Result};
use crate::report::CheckReport;
use crate::simplicial::{
    bar, check_contractible_simplicial, extra_degeneracies_from_coalgebra, Comonad, Contractibility,
    TruncatedSimplicial,
};

/// The comma category of objects `f: Φ(c) → d`, with its domain functor.
#[derive(Clone, Debug)]
pub struct SimpCategory {
    pub category: FinCat,
    /// `(c, f)` for each object.
    pub objects: Vec<(usize, usize)>,
    /// `(c, f) ↦ c`
    pub dom: CatFunctor,
    index: HashMap<(usize, usize), usize>,
}

impl SimpCategory {
    /// Position of the object `(c, f)`.
    pub fn position(&self, c: usize, f: usize) -> Option<usize> {
        self.index.get(&(c, f)).copied()
    }
}

/// Objects `(c, f: Φc → d)`; morphisms `g: c → c'` with `f' ∘ Φ(g) = f`.
pub fn simp_phi(phi: &CatFunctor, d: usize) -> Result<SimpCategory> {
    let (c_cat, d_cat) = (phi.source(), phi.target());
    if d >= d_cat.object_count() {
        return Err(mismatch!("object {} is outside the target category", d));
    }
    let mut objects = Vec::new();
    for c in 0..c_cat.object_count() {
        for &f in d_cat.hom(phi.object(c), d) {
            objects.push((c, f));
        }
    }
    let index: HashMap<(usize, usize), usize> = objects.iter().enumerate().map(|(k, &o)| (o, k)).collect();
    let name = |k: usize| format!("({},{})", c_cat.objects()[objects[k].0], d_cat.name(objects[k].1));
    let mut arrows = Vec::new();
    let mut by_data: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for (k, &(c, f)) in objects.iter().enumerate() {
        for (k2, &(c2, f2)) in objects.iter().enumerate() {
            for &g in c_cat.hom(c, c2) {
                if d_cat.compose(f2, phi.morphism(g)) == f {
                    by_data.insert((k, k2, g), arrows.len());
                    arrows.push(Arrow { name: format!("{}:{}→{}", c_cat.name(g), name(k), name(k2)), source: k, target: k2 });
                }
            }
        }
    }
    let mut data = vec![(0, 0, 0); arrows.len()];
    for (&key, &i) in &by_data {
        data[i] = key;
    }
    let mut composition = HashMap::new();
    for (m2, &(a2, b2, g2)) in data.iter().enumerate() {
        for (m1, &(a1, b1, g1)) in data.iter().enumerate() {
            if b1 == a2 {
                composition.insert((m2, m1), by_data[&(a1, b2, c_cat.compose(g2, g1))]);
            }
        }
    }
    let identities = objects.iter().enumerate().map(|(k, &(c, _))| by_data[&(k, k, c_cat.identity(c))]).collect();
    let names = (0..objects.len()).map(name).collect();
    let category = FinCat::new_unchecked(names, arrows, identities, composition)?;
    let dom = CatFunctor::new(
        category.clone(),
        c_cat.clone(),
        objects.iter().map(|o| o.0).collect(),
        data.iter().map(|t| t.2).collect(),
    )?;
    Ok(SimpCategory { category, objects, dom, index })
}

/// `K_Φ(x)(d) = colim_{Simp_Φ(d)} x ∘ dom` for a diagram `x` on the source of `Φ`.
pub fn left_kan<V: ValueCategory>(cat: &V, phi: &CatFunctor, x: &DiagFunctor<V>, d: usize) -> Result<Colimit<V>>
where
    V::Morphism: PartialEq,
{
    colimit_over(cat, &simp_phi(phi, d)?, x)
}

fn colimit_over<V: ValueCategory>(cat: &V, simp: &SimpCategory, x: &DiagFunctor<V>) -> Result<Colimit<V>>
where
    V::Morphism: PartialEq,
{
    let values: Vec<_> = simp.objects.iter().map(|&(c, _)| x.value(c).clone()).collect();
    let maps: Vec<_> = simp.dom.on_morphisms().iter().map(|&g| x.map(g).clone()).collect();
    colimit(cat, &simp.category, &values, &maps)
}

/// `K_Φ = Φ_! Φ^*` on `V`-valued diagrams over the target of `Φ`.
#[derive(Clone, Debug)]
pub struct KanComonad<V> {
    phi: CatFunctor,
    diagrams: Diagrams<V>,
    simps: Vec<SimpCategory>,
}

pub fn kan_comonad<V: ValueCategory>(values: V, phi: &CatFunctor) -> Result<KanComonad<V>>
where
    V::Morphism: PartialEq,
{
    let simps = (0..phi.target().object_count()).map(|d| simp_phi(phi, d)).collect::<Result<_>>()?;
    Ok(KanComonad { phi: phi.clone(), diagrams: Diagrams { base: phi.target().clone(), values }, simps })
}

impl<V: ValueCategory> KanComonad<V>
where
    V::Morphism: PartialEq,
{
    pub fn phi(&self) -> &CatFunctor {
        &self.phi
    }

    pub fn values(&self) -> &V {
        &self.diagrams.values
    }

    pub fn simp(&self, d: usize) -> &SimpCategory {
        &self.simps[d]
    }

    /// `Φ^* x = x ∘ Φ`
    pub fn restrict(&self, x: &DiagFunctor<V>) -> Result<DiagFunctor<V>> {
        if x.base() != self.phi.target() {
            return Err(mismatch!("diagram is not on the target category"));
        }
        let values = self.phi.on_objects().iter().map(|&d| x.value(d).clone()).collect();
        let maps = self.phi.on_morphisms().iter().map(|&g| x.map(g).clone()).collect();
        Ok(DiagFunctor::new_trusted(self.phi.source().clone(), values, maps))
    }

    /// `Φ_! y` for a diagram `y` on the source, with the colimit at each object.
    pub fn extend(&self, y: &DiagFunctor<V>) -> Result<(DiagFunctor<V>, Vec<Colimit<V>>)> {
        let cat = self.values();
        let d_cat = self.phi.target();
        let cols: Vec<Colimit<V>> = self.simps.iter().map(|s| colimit_over(cat, s, y)).collect::<Result<_>>()?;
        let mut maps = Vec::with_capacity(d_cat.morphism_count());
        for h in 0..d_cat.morphism_count() {
            let (d, d2) = (d_cat.source(h), d_cat.target(h));
            let legs: Vec<_> = self.simps[d]
                .objects
                .iter()
                .map(|&(c, f)| cols[d2].legs[self.simps[d2].index[&(c, d_cat.compose(h, f))]].clone())
                .collect();
            maps.push(cols[d].induced(cat, &cols[d2].object, &legs)?);
        }
        let values = cols.iter().map(|c| c.object.clone()).collect();
        Ok((DiagFunctor::new(cat, d_cat.clone(), values, maps)?, cols))
    }

    fn apply_with_colimits(&self, x: &DiagFunctor<V>) -> Result<(DiagFunctor<V>, Vec<Colimit<V>>)> {
        self.extend(&self.restrict(x)?)
    }
}

impl<V: ValueCategory> Comonad for KanComonad<V>
where
    V::Morphism: PartialEq,
{
    type Cat = Diagrams<V>;

    fn category(&self) -> &Diagrams<V> {
        &self.diagrams
    }

    fn apply(&self, x: &DiagFunctor<V>) -> Result<DiagFunctor<V>> {
        Ok(self.apply_with_colimits(x)?.0)
    }

    fn apply_map(&self, alpha: &NatTrans<V>) -> Result<NatTrans<V>> {
        let cat = self.values();
        let (kx, cx) = self.apply_with_colimits(&alpha.source)?;
        let (ky, cy) = self.apply_with_colimits(&alpha.target)?;
        let mut components = Vec::with_capacity(self.simps.len());
        for (d, simp) in self.simps.iter().enumerate() {
            let legs: Vec<_> = simp
                .objects
                .iter()
                .enumerate()
                .map(|(k, &(c, _))| cat.compose(&cy[d].legs[k], &alpha.components[self.phi.object(c)]))
                .collect::<Result<_>>()?;
            components.push(cx[d].induced(cat, ky.value(d), &legs)?);
        }
        Ok(NatTrans { source: kx, target: ky, components })
    }

    /// On the summand `(c, f)`, the map `x(f): x(Φc) → x(d)`.
    fn counit(&self, x: &DiagFunctor<V>) -> Result<NatTrans<V>> {
        let cat = self.values();
        let (kx, cx) = self.apply_with_colimits(x)?;
        let mut components = Vec::with_capacity(self.simps.len());
        for (d, simp) in self.simps.iter().enumerate() {
            let legs: Vec<_> = simp.objects.iter().map(|&(_, f)| x.map(f).clone()).collect();
            components.push(cx[d].induced(cat, x.value(d), &legs)?);
        }
        Ok(NatTrans { source: kx, target: x.clone(), components })
    }

    /// On the summand `(c, f)`, the coprojection of `(c, id)` into `Kx(Φc)`
    /// followed by the coprojection of `(c, f)` into `K²x(d)`.
    fn comultiplication(&self, x: &DiagFunctor<V>) -> Result<NatTrans<V>> {
        let cat = self.values();
        let (kx, cx) = self.apply_with_colimits(x)?;
        let (kkx, ckx) = self.apply_with_colimits(&kx)?;
        let d_cat = self.phi.target();
        let mut components = Vec::with_capacity(self.simps.len());
        for (d, simp) in self.simps.iter().enumerate() {
            let legs: Vec<_> = simp
                .objects
                .iter()
                .enumerate()
                .map(|(k, &(c, _))| {
                    let pc = self.phi.object(c);
                    let unit = &cx[pc].legs[self.simps[pc].index[&(c, d_cat.identity(pc))]];
                    cat.compose(&ckx[d].legs[k], unit)
                })
                .collect::<Result<_>>()?;
            components.push(cx[d].induced(cat, kkx.value(d), &legs)?);
        }
        Ok(NatTrans { source: kx, target: kkx, components })
    }
}

/// Outcome of the fullness identity `K_Φ(y)(Φc) = y(Φc)`.
#[derive(Clone, Debug)]
pub enum FullnessVerdict {
    /// `Φ` is not full, so nothing was checked.
    NotFull,
    Checked(CheckReport),
}

impl FullnessVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, FullnessVerdict::Checked(r) if r.holds())
    }
}

/// For full `Φ`, `(c, id)` is terminal in `Simp_Φ(Φc)`, so its coprojection
/// `y(Φc) → K_Φ(y)(Φc)` is an isomorphism inverse to the counit.
pub fn fullness_identity_check<V: ValueCategory>(k: &KanComonad<V>, y: &DiagFunctor<V>, c: usize) -> Result<FullnessVerdict>
where
    V::Morphism: PartialEq,
{
    if !k.phi.is_full() {
        return Ok(FullnessVerdict::NotFull);
    }
    let cat = k.values();
    let pc = k.phi.object(c);
    let (_, cols) = k.apply_with_colimits(y)?;
    let leg = &cols[pc].legs[k.simps[pc].index[&(c, k.phi.target().identity(pc))]];
    let eps = &k.counit(y)?.components[pc];
    let mut report = CheckReport::new();
    report.record("coprojection of (c, id) is an isomorphism", cat.is_isomorphism(leg)?);
    report.record("counit at Φ(c) is an isomorphism", cat.is_isomorphism(eps)?);
    report.record("counit after coprojection is the identity", cat.is_identity(&cat.compose(eps, leg)?)?);
    Ok(FullnessVerdict::Checked(report))
}

/// Whether `K²x(d) ⇉ Kx(d) → x(d)` is a coequalizer.
pub struct AssemblyReport<V: ValueCategory>
where
    V::Morphism: PartialEq,
{
    pub holds: bool,
    pub coequalizer: V::Object,
    /// Induced by the counit.
    pub comparison: V::Morphism,
}

pub fn assembly_pi0_check<V: ValueCategory>(k: &KanComonad<V>, x: &DiagFunctor<V>, d: usize) -> Result<AssemblyReport<V>>
where
    V::Morphism: PartialEq,
{
    let cat = k.values();
    let eps = k.counit(x)?;
    let outer = k.counit(&eps.source)?;
    let inner = k.apply_map(&eps)?;
    let (coequalizer, proj) = cat.coequalizer(&outer.components[d], &inner.components[d])?;
    let comparison = cat.descend(&proj, &eps.components[d])?;
    Ok(AssemblyReport { holds: cat.is_isomorphism(&comparison)?, coequalizer, comparison })
}

/// The augmented bar construction `… K²x ⇉ Kx → x`.
pub fn kan_bar<V: ValueCategory>(k: &KanComonad<V>, x: &DiagFunctor<V>, truncation: usize) -> Result<TruncatedSimplicial<Diagrams<V>>>
where
    V::Morphism: PartialEq,
{
    bar(k, x, truncation)
}

/// The bar construction of the cofree diagram `K_Φ(y)`, certified
/// contractible with the extra degeneracies `Kⁿ(Δ_y)`.
pub fn kan_bar_certificate<V: ValueCategory>(
    k: &KanComonad<V>,
    y: &DiagFunctor<V>,
    truncation: usize,
) -> Result<(TruncatedSimplicial<Diagrams<V>>, Contractibility<Diagrams<V>>)>
where
    V::Morphism: PartialEq,
{
    let delta = k.comultiplication(y)?;
    let x = delta.source.clone();
    let b = bar(k, &x, truncation)?;
    let extra = extra_degeneracies_from_coalgebra(k, &delta, truncation)?;
    let verdict = check_contractible_simplicial(k.category(), &b, &extra)?;
    Ok((b, verdict))
}

#[cfg(test)]
mod tests {
    use super::super::diagram::{linearize_diagram, Sets};
    use super::*;
    use crate::codescent::{FinSet, FinSetMap};
    use crate::simplicial::{check_comonad_laws, check_simplicial_identities, Modules};

    /// `• → (d0 → d1)` picking `d0`.
    fn point_to_d0() -> CatFunctor {
        let a = FinCat::arrow();
        CatFunctor::new(FinCat::discrete(1), a.clone(), vec![0], vec![a.identity(0)]).unwrap()
    }

    fn point_value(names: &[&str]) -> DiagFunctor<Sets> {
        let s = FinSet::from_names(names).unwrap();
        DiagFunctor::new(&Sets, FinCat::discrete(1), vec![s.clone()], vec![FinSetMap::identity(&s)]).unwrap()
    }

    #[test]
    fn simp_of_identity_has_terminal_object() {
        let a = FinCat::arrow();
        let s = simp_phi(&CatFunctor::identity(&a), 1).unwrap();
        assert_eq!(s.objects.len(), 2);
        let t = s.position(1, a.identity(1)).unwrap();
        assert!((0..2).all(|k| s.category.hom(k, t).len() == 1));
    }

    #[test]
    fn simp_of_point_over_target() {
        let s = simp_phi(&point_to_d0(), 1).unwrap();
        assert_eq!((s.objects.len(), s.category.morphism_count()), (1, 1));
        let empty = CatFunctor::new(FinCat::discrete(0), FinCat::arrow(), vec![], vec![]).unwrap();
        assert_eq!(simp_phi(&empty, 0).unwrap().objects.len(), 0);
    }

    #[test]
    fn left_kan_along_point() {
        let x = point_value(&["p", "q"]);
        let v = left_kan(&Sets, &point_to_d0(), &x, 1).unwrap();
        assert_eq!(v.object.len(), 2);
        let g = linearize_diagram(&x).unwrap();
        let vg = left_kan(&Modules, &point_to_d0(), &g, 1).unwrap();
        assert_eq!(vg.object.underlying().invariant_factors().to_string(), "Z^2");
    }

    #[test]
    fn arrow_comonad_laws() {
        let a = FinCat::arrow();
        let k = kan_comonad(Sets, &point_to_d0()).unwrap();
        let x0 = FinSet::from_names(&["p", "q"]).unwrap();
        let x1 = FinSet::from_names(&["r"]).unwrap();
        let f = FinSetMap::new(x0.clone(), x1.clone(), vec![0, 0]).unwrap();
        let x = DiagFunctor::new(&Sets, a, vec![x0.clone(), x1.clone()], vec![FinSetMap::identity(&x0), FinSetMap::identity(&x1), f]).unwrap();
        let kx = k.apply(&x).unwrap();
        assert_eq!((kx.value(0).len(), kx.value(1).len()), (2, 2));
        let eps = k.counit(&x).unwrap();
        assert!(!eps.components[1].is_injective());
        assert!(check_comonad_laws(&k, &[x.clone()]).unwrap().holds());
        let kg = kan_comonad(Modules, &point_to_d0()).unwrap();
        let xg = linearize_diagram(&x).unwrap();
        assert!(check_comonad_laws(&kg, &[xg]).unwrap().holds());
    }

    #[test]
    fn identity_functor_gives_identity_values() {
        let a = FinCat::arrow();
        let k = kan_comonad(Sets, &CatFunctor::identity(&a)).unwrap();
        let s = FinSet::range(3);
        let x = DiagFunctor::constant(&Sets, &a, &s);
        let eps = k.counit(&x).unwrap();
        assert!(eps.components.iter().all(|c| c.is_injective() && c.is_surjective()));
        assert!(fullness_identity_check(&k, &x, 0).unwrap().holds());
        assert!(assembly_pi0_check(&k, &x, 1).unwrap().holds);
    }

    #[test]
    fn fullness_needs_full_functor() {
        let g = FinCat::cyclic_group(2).unwrap();
        let phi = CatFunctor::new(FinCat::discrete(1), g.clone(), vec![0], vec![0]).unwrap();
        let k = kan_comonad(Sets, &phi).unwrap();
        let x = DiagFunctor::constant(&Sets, &g, &FinSet::range(1));
        assert!(matches!(fullness_identity_check(&k, &x, 0).unwrap(), FullnessVerdict::NotFull));
    }

    #[test]
    fn assembly_fails_off_the_image() {
        // Φ picks d1, so d0 receives no map from the image.
        let a = FinCat::arrow();
        let phi = CatFunctor::new(FinCat::discrete(1), a.clone(), vec![1], vec![a.identity(1)]).unwrap();
        let k = kan_comonad(Sets, &phi).unwrap();
        let x = DiagFunctor::constant(&Sets, &a, &FinSet::range(1));
        let r = assembly_pi0_check(&k, &x, 0).unwrap();
        assert!(!r.holds);
        assert!(r.coequalizer.is_empty());
        let cofree = k.apply(&x).unwrap();
        assert!(assembly_pi0_check(&k, &cofree, 0).unwrap().holds);
    }

    #[test]
    fn cofree_bar_contracts() {
        let k = kan_comonad(Sets, &point_to_d0()).unwrap();
        let a = FinCat::arrow();
        let y = DiagFunctor::constant(&Sets, &a, &FinSet::range(2));
        let (b, verdict) = kan_bar_certificate(&k, &y, 2).unwrap();
        assert!(check_simplicial_identities(k.category(), &b).unwrap().is_valid());
        assert!(verdict.is_certified(), "{:?}", verdict.violations());
    }
}
