//! The slice category of finite sets over a fixed base.

use std::fmt;

use super::finset::{quotient, FinSet, FinSetMap, Label};
use crate::error::{invalid, mismatch, Result};
use crate::simplicial::{Category, FiniteColimits, FiniteLimits};

/// A finite set over a base: `projection: total → base`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bundle {
    projection: FinSetMap,
}

impl Bundle {
    pub fn new(projection: FinSetMap) -> Self {
        Bundle { projection }
    }

    pub fn from_assignment(total: FinSet, base: FinSet, assignment: Vec<usize>) -> Result<Self> {
        Ok(Bundle { projection: FinSetMap::new(total, base, assignment)? })
    }

    /// `id: B → B`
    pub fn identity_over(base: &FinSet) -> Self {
        Bundle { projection: FinSetMap::identity(base) }
    }

    pub fn total(&self) -> &FinSet {
        self.projection.source()
    }

    pub fn base(&self) -> &FinSet {
        self.projection.target()
    }

    pub fn projection(&self) -> &FinSetMap {
        &self.projection
    }
}

impl fmt::Debug for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.projection)
    }
}

/// A map of bundles over the same base commuting with the projections.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BundleMap {
    source: Bundle,
    target: Bundle,
    map: FinSetMap,
}

impl BundleMap {
    pub fn new(source: Bundle, target: Bundle, map: FinSetMap) -> Result<Self> {
        if source.base() != target.base() {
            return Err(mismatch!("bundle map between different bases"));
        }
        if map.source() != source.total() || map.target() != target.total() {
            return Err(mismatch!("bundle map endpoints do not match the bundles"));
        }
        for i in 0..map.source().len() {
            if target.projection.apply(map.apply(i)) != source.projection.apply(i) {
                return Err(invalid!("{} does not stay over its base point", map.source().label(i)));
            }
        }
        Ok(BundleMap { source, target, map })
    }

    fn trusted(source: Bundle, target: Bundle, assignment: Vec<usize>) -> Result<Self> {
        let map = FinSetMap::new(source.total().clone(), target.total().clone(), assignment)?;
        Ok(BundleMap { source, target, map })
    }

    pub fn from_assignment(source: Bundle, target: Bundle, assignment: Vec<usize>) -> Result<Self> {
        let map = FinSetMap::new(source.total().clone(), target.total().clone(), assignment)?;
        Self::new(source, target, map)
    }

    pub fn source(&self) -> &Bundle {
        &self.source
    }

    pub fn target(&self) -> &Bundle {
        &self.target
    }

    pub fn map(&self) -> &FinSetMap {
        &self.map
    }
}

impl fmt::Debug for BundleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.map)
    }
}

/// `FinSet/B`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceCategory {
    base: FinSet,
}

impl SliceCategory {
    pub fn new(base: FinSet) -> Self {
        SliceCategory { base }
    }

    pub fn base(&self) -> &FinSet {
        &self.base
    }

    fn check(&self, x: &Bundle) -> Result<()> {
        if x.base() != &self.base {
            return Err(mismatch!("bundle over {} used in the slice over {}", x.base(), self.base));
        }
        Ok(())
    }
}

impl Category for SliceCategory {
    type Object = Bundle;
    type Morphism = BundleMap;

    fn source(&self, f: &BundleMap) -> Bundle {
        f.source.clone()
    }
    fn target(&self, f: &BundleMap) -> Bundle {
        f.target.clone()
    }
    fn identity(&self, x: &Bundle) -> BundleMap {
        BundleMap { source: x.clone(), target: x.clone(), map: FinSetMap::identity(x.total()) }
    }
    fn compose(&self, g: &BundleMap, f: &BundleMap) -> Result<BundleMap> {
        if f.target != g.source {
            return Err(mismatch!("composing bundle maps with different middle bundles"));
        }
        Ok(BundleMap { source: f.source.clone(), target: g.target.clone(), map: g.map.after(&f.map)? })
    }
    fn same_morphism(&self, f: &BundleMap, g: &BundleMap) -> Result<bool> {
        if f.source != g.source || f.target != g.target {
            return Err(mismatch!("comparing bundle maps with different endpoints"));
        }
        Ok(f.map.assignment() == g.map.assignment())
    }
    fn describe(&self, x: &Bundle) -> String {
        format!("{} elements", x.total().len())
    }
}

impl FiniteLimits for SliceCategory {
    /// Iterated fiber product; elements are tuples over a common base point.
    fn product(&self, factors: &[Bundle]) -> Result<(Bundle, Vec<BundleMap>)> {
        if factors.is_empty() {
            return Err(invalid!("empty product"));
        }
        for f in factors {
            self.check(f)?;
        }
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        let mut bases = Vec::new();
        for b in 0..self.base.len() {
            let fibers: Vec<Vec<usize>> = factors.iter().map(|f| f.projection.fiber(b)).collect();
            let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
            for fib in &fibers {
                acc = acc.into_iter().flat_map(|t| fib.iter().map(move |&e| [t.clone(), vec![e]].concat())).collect();
            }
            bases.extend(std::iter::repeat(b).take(acc.len()));
            tuples.extend(acc);
        }
        let labels = tuples
            .iter()
            .map(|t| Label::Tuple(t.iter().zip(factors).map(|(&e, f)| f.total().label(e).clone()).collect()))
            .collect();
        let p = Bundle::from_assignment(FinSet::new(labels)?, self.base.clone(), bases)?;
        let legs = factors
            .iter()
            .enumerate()
            .map(|(k, f)| BundleMap::trusted(p.clone(), f.clone(), tuples.iter().map(|t| t[k]).collect()))
            .collect::<Result<_>>()?;
        Ok((p, legs))
    }

    fn tuple(&self, source: &Bundle, factors: &[Bundle], legs: &[BundleMap]) -> Result<BundleMap> {
        if legs.len() != factors.len() {
            return Err(mismatch!("{} legs for {} factors", legs.len(), factors.len()));
        }
        let (p, _) = self.product(factors)?;
        let mut assignment = Vec::with_capacity(source.total().len());
        for i in 0..source.total().len() {
            let label = Label::Tuple(legs.iter().map(|l| l.target.total().label(l.map.apply(i)).clone()).collect());
            assignment.push(p.total().index_of(&label).ok_or_else(|| invalid!("legs disagree over the base"))?);
        }
        BundleMap::from_assignment(source.clone(), p, assignment)
    }

    fn equalizer(&self, f: &BundleMap, g: &BundleMap) -> Result<(Bundle, BundleMap)> {
        let keep: Vec<usize> = (0..f.source.total().len()).filter(|&i| f.map.apply(i) == g.map.apply(i)).collect();
        let total = FinSet::new(keep.iter().map(|&i| f.source.total().label(i).clone()).collect())?;
        let e = Bundle::from_assignment(total, self.base.clone(), keep.iter().map(|&i| f.source.projection.apply(i)).collect())?;
        let incl = BundleMap::trusted(e.clone(), f.source.clone(), keep)?;
        Ok((e, incl))
    }

    fn lift(&self, inclusion: &BundleMap, h: &BundleMap) -> Result<BundleMap> {
        let sub = inclusion.source.total();
        let assignment = (0..h.source.total().len())
            .map(|i| {
                let l = h.target.total().label(h.map.apply(i));
                sub.index_of(l).ok_or_else(|| invalid!("map does not factor through the subobject"))
            })
            .collect::<Result<_>>()?;
        BundleMap::from_assignment(h.source.clone(), inclusion.source.clone(), assignment)
    }

    fn is_injective(&self, f: &BundleMap) -> Result<bool> {
        Ok(f.map.is_injective())
    }

    fn is_surjective(&self, f: &BundleMap) -> Result<bool> {
        Ok(f.map.is_surjective())
    }
}

impl FiniteColimits for SliceCategory {
    /// Disjoint union; summand `k` elements are tagged `k`.
    fn coproduct(&self, summands: &[Bundle]) -> Result<(Bundle, Vec<BundleMap>)> {
        if summands.is_empty() {
            return Err(invalid!("empty coproduct"));
        }
        let mut labels = Vec::new();
        let mut bases = Vec::new();
        let mut offsets = Vec::new();
        for (k, s) in summands.iter().enumerate() {
            self.check(s)?;
            offsets.push(labels.len());
            for i in 0..s.total().len() {
                labels.push(Label::Tag(k, Box::new(s.total().label(i).clone())));
                bases.push(s.projection.apply(i));
            }
        }
        let c = Bundle::from_assignment(FinSet::new(labels)?, self.base.clone(), bases)?;
        let legs = summands
            .iter()
            .zip(offsets)
            .map(|(s, o)| BundleMap::trusted(s.clone(), c.clone(), (o..o + s.total().len()).collect()))
            .collect::<Result<_>>()?;
        Ok((c, legs))
    }

    fn cotuple(&self, target: &Bundle, summands: &[Bundle], legs: &[BundleMap]) -> Result<BundleMap> {
        if legs.len() != summands.len() {
            return Err(mismatch!("{} legs for {} summands", legs.len(), summands.len()));
        }
        let (c, _) = self.coproduct(summands)?;
        let assignment = legs.iter().flat_map(|l| l.map.assignment().iter().copied()).collect();
        BundleMap::from_assignment(c, target.clone(), assignment)
    }

    fn coequalizer(&self, f: &BundleMap, g: &BundleMap) -> Result<(Bundle, BundleMap)> {
        let y = &f.target;
        let pairs = (0..f.source.total().len()).map(|i| (f.map.apply(i), g.map.apply(i)));
        let (q, p) = quotient(y.total(), pairs)?;
        let mut bases = vec![0; q.len()];
        for i in 0..y.total().len() {
            bases[p.apply(i)] = y.projection.apply(i);
        }
        let qb = Bundle::from_assignment(q, self.base.clone(), bases)?;
        let proj = BundleMap::trusted(y.clone(), qb.clone(), p.assignment().to_vec())?;
        Ok((qb, proj))
    }

    fn descend(&self, projection: &BundleMap, h: &BundleMap) -> Result<BundleMap> {
        let mut assignment: Vec<Option<usize>> = vec![None; projection.target.total().len()];
        for i in 0..h.source.total().len() {
            let c = projection.map.apply(i);
            let v = h.map.apply(i);
            match assignment[c] {
                Some(w) if w != v => return Err(invalid!("map is not constant on the classes of the quotient")),
                _ => assignment[c] = Some(v),
            }
        }
        let assignment = assignment.into_iter().map(|a| a.ok_or_else(|| invalid!("empty class"))).collect::<Result<_>>()?;
        BundleMap::from_assignment(projection.target.clone(), h.target.clone(), assignment)
    }

    fn is_injective(&self, f: &BundleMap) -> Result<bool> {
        Ok(f.map.is_injective())
    }

    fn is_surjective(&self, f: &BundleMap) -> Result<bool> {
        Ok(f.map.is_surjective())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> FinSet {
        FinSet::from_names(&["a", "b"]).unwrap()
    }

    #[test]
    fn fiber_product_counts() {
        let cat = SliceCategory::new(base());
        let x = Bundle::from_assignment(FinSet::range(3), base(), vec![0, 0, 1]).unwrap();
        let (p, legs) = cat.product(&[x.clone(), x.clone()]).unwrap();
        assert_eq!(p.total().len(), 5);
        let t = cat.tuple(&x, &[x.clone(), x.clone()], &[cat.identity(&x), cat.identity(&x)]).unwrap();
        assert!(cat.is_identity(&cat.compose(&legs[1], &t).unwrap()).unwrap());
    }

    #[test]
    fn coequalizer_and_descend() {
        let cat = SliceCategory::new(base());
        let x = Bundle::from_assignment(FinSet::range(3), base(), vec![0, 0, 1]).unwrap();
        let swap = BundleMap::from_assignment(x.clone(), x.clone(), vec![1, 0, 2]).unwrap();
        let (q, p) = cat.coequalizer(&swap, &cat.identity(&x)).unwrap();
        assert_eq!(q.total().len(), 2);
        let pt = Bundle::identity_over(&base());
        let to_base = BundleMap::from_assignment(x.clone(), pt, vec![0, 0, 1]).unwrap();
        let d = cat.descend(&p, &to_base).unwrap();
        assert!(d.map().is_injective());
    }

    #[test]
    fn map_must_stay_over_base() {
        let x = Bundle::from_assignment(FinSet::range(2), base(), vec![0, 1]).unwrap();
        assert!(BundleMap::from_assignment(x.clone(), x, vec![1, 0]).is_err());
    }
}
