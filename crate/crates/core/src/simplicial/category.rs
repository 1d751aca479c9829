//! The ambient-category interface that (co)simplicial machinery is generic over.

use std::fmt::Debug;

use crate::algebra::{coequalizer, equalizer, IntegerMatrix, ModuleMap, ModuleOverRing, Subquotient};
use crate::error::{invalid, Result};

pub type Obj<C> = <C as Category>::Object;
pub type Mor<C> = <C as Category>::Morphism;

/// A category whose objects and morphisms can be compared exactly.
pub trait Category {
    type Object: Clone + Debug + PartialEq;
    type Morphism: Clone + Debug;

    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, x: &Self::Object) -> Self::Morphism;
    /// `g ∘ f`
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    fn same_morphism(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<bool>;
    /// Short human-readable name of an object, used in reports.
    fn describe(&self, x: &Self::Object) -> String;

    /// `fs[0] ∘ fs[1] ∘ … ∘ fs[k-1]`
    fn compose_all(&self, fs: &[&Self::Morphism]) -> Result<Self::Morphism> {
        let (last, rest) = fs.split_last().ok_or_else(|| invalid!("empty composite"))?;
        let mut acc = (*last).clone();
        for f in rest.iter().rev() {
            acc = self.compose(f, &acc)?;
        }
        Ok(acc)
    }

    fn is_identity(&self, f: &Self::Morphism) -> Result<bool> {
        let s = self.source(f);
        if s != self.target(f) {
            return Ok(false);
        }
        self.same_morphism(f, &self.identity(&s))
    }
}

/// Finite products and equalizers, plus the two properties reported for
/// canonical maps into them.
pub trait FiniteLimits: Category {
    /// Product of a nonempty family with its projections.
    fn product(&self, factors: &[Self::Object]) -> Result<(Self::Object, Vec<Self::Morphism>)>;
    /// The map `source → ∏ factors` with the given components.
    fn tuple(&self, source: &Self::Object, factors: &[Self::Object], legs: &[Self::Morphism]) -> Result<Self::Morphism>;
    fn equalizer(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<(Self::Object, Self::Morphism)>;
    /// Factor `h` through an equalizer inclusion.
    fn lift(&self, inclusion: &Self::Morphism, h: &Self::Morphism) -> Result<Self::Morphism>;
    fn is_injective(&self, f: &Self::Morphism) -> Result<bool>;
    fn is_surjective(&self, f: &Self::Morphism) -> Result<bool>;
}

/// Finite coproducts and coequalizers.
pub trait FiniteColimits: Category {
    /// Coproduct of a nonempty family with its injections.
    fn coproduct(&self, summands: &[Self::Object]) -> Result<(Self::Object, Vec<Self::Morphism>)>;
    /// The map `∐ summands → target` with the given components.
    fn cotuple(&self, target: &Self::Object, summands: &[Self::Object], legs: &[Self::Morphism]) -> Result<Self::Morphism>;
    fn coequalizer(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<(Self::Object, Self::Morphism)>;
    /// Factor `h` through a coequalizer projection.
    fn descend(&self, projection: &Self::Morphism, h: &Self::Morphism) -> Result<Self::Morphism>;
    fn is_injective(&self, f: &Self::Morphism) -> Result<bool>;
    fn is_surjective(&self, f: &Self::Morphism) -> Result<bool>;
}

/// The opposite of a category: same objects and morphisms, arrows reversed.
pub struct Opposite<'a, C>(pub &'a C);

impl<C: Category> Category for Opposite<'_, C> {
    type Object = C::Object;
    type Morphism = C::Morphism;

    fn source(&self, f: &Self::Morphism) -> Self::Object {
        self.0.target(f)
    }
    fn target(&self, f: &Self::Morphism) -> Self::Object {
        self.0.source(f)
    }
    fn identity(&self, x: &Self::Object) -> Self::Morphism {
        self.0.identity(x)
    }
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism> {
        self.0.compose(f, g)
    }
    fn same_morphism(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<bool> {
        self.0.same_morphism(f, g)
    }
    fn describe(&self, x: &Self::Object) -> String {
        self.0.describe(x)
    }
}

/// Modules over finitely presented commutative rings and linear maps.
#[derive(Clone, Copy, Debug, Default)]
pub struct Modules;

impl Category for Modules {
    type Object = ModuleOverRing;
    type Morphism = ModuleMap;

    fn source(&self, f: &ModuleMap) -> ModuleOverRing {
        f.source().clone()
    }
    fn target(&self, f: &ModuleMap) -> ModuleOverRing {
        f.target().clone()
    }
    fn identity(&self, x: &ModuleOverRing) -> ModuleMap {
        ModuleMap::identity(x)
    }
    fn compose(&self, g: &ModuleMap, f: &ModuleMap) -> Result<ModuleMap> {
        g.after(f)
    }
    fn same_morphism(&self, f: &ModuleMap, g: &ModuleMap) -> Result<bool> {
        f.same_map(g)
    }
    fn describe(&self, x: &ModuleOverRing) -> String {
        x.underlying().invariant_factors().to_string()
    }
}

impl FiniteLimits for Modules {
    fn product(&self, factors: &[ModuleOverRing]) -> Result<(ModuleOverRing, Vec<ModuleMap>)> {
        let (first, rest) = factors.split_first().ok_or_else(|| invalid!("empty product"))?;
        let mut p = first.clone();
        for f in rest {
            p = p.direct_sum(f)?;
        }
        let mut legs = Vec::with_capacity(factors.len());
        let mut offset = 0;
        for f in factors {
            let mut m = IntegerMatrix::zeros(f.generators(), p.generators());
            m.set_block(0, offset, &IntegerMatrix::identity(f.generators()));
            offset += f.generators();
            legs.push(ModuleMap::new_trusted(p.clone(), f.clone(), m)?);
        }
        Ok((p, legs))
    }

    fn tuple(&self, source: &ModuleOverRing, factors: &[ModuleOverRing], legs: &[ModuleMap]) -> Result<ModuleMap> {
        let (p, _) = self.product(factors)?;
        let mut m = IntegerMatrix::zeros(0, source.generators());
        for l in legs {
            m = m.vstack(l.matrix())?;
        }
        ModuleMap::new_trusted(source.clone(), p, m)
    }

    fn equalizer(&self, f: &ModuleMap, g: &ModuleMap) -> Result<(ModuleOverRing, ModuleMap)> {
        equalizer(f, g)
    }

    fn lift(&self, inclusion: &ModuleMap, h: &ModuleMap) -> Result<ModuleMap> {
        // Equalizer inclusions are lattice bases, so coordinates are unique.
        let basis = inclusion.matrix();
        let solver = Subquotient::new(basis.rows(), basis, &IntegerMatrix::zeros(basis.rows(), 0))?;
        let mut cols = Vec::with_capacity(h.source().generators());
        for col in h.matrix().columns() {
            let c = solver.coordinates(&col)?.ok_or_else(|| invalid!("map does not factor through the subobject"))?;
            cols.push(c);
        }
        let m = IntegerMatrix::from_columns(basis.cols(), &cols)?;
        ModuleMap::new_trusted(h.source().clone(), inclusion.source().clone(), m)
    }

    fn is_injective(&self, f: &ModuleMap) -> Result<bool> {
        f.is_injective()
    }

    fn is_surjective(&self, f: &ModuleMap) -> Result<bool> {
        f.is_surjective()
    }
}

impl FiniteColimits for Modules {
    fn coproduct(&self, summands: &[ModuleOverRing]) -> Result<(ModuleOverRing, Vec<ModuleMap>)> {
        let (p, projections) = <Self as FiniteLimits>::product(self, summands)?;
        let mut legs = Vec::with_capacity(summands.len());
        for (s, pr) in summands.iter().zip(&projections) {
            legs.push(ModuleMap::new_trusted(s.clone(), p.clone(), pr.matrix().transpose())?);
        }
        Ok((p, legs))
    }

    fn cotuple(&self, target: &ModuleOverRing, summands: &[ModuleOverRing], legs: &[ModuleMap]) -> Result<ModuleMap> {
        let (p, _) = self.coproduct(summands)?;
        let mut m = IntegerMatrix::zeros(target.generators(), 0);
        for l in legs {
            m = m.hstack(l.matrix())?;
        }
        ModuleMap::new_trusted(p, target.clone(), m)
    }

    fn coequalizer(&self, f: &ModuleMap, g: &ModuleMap) -> Result<(ModuleOverRing, ModuleMap)> {
        coequalizer(f, g)
    }

    fn descend(&self, projection: &ModuleMap, h: &ModuleMap) -> Result<ModuleMap> {
        // Cokernels are presented on the same generators, so the matrix carries over.
        ModuleMap::new(projection.target().clone(), h.target().clone(), h.matrix().clone())
    }

    fn is_injective(&self, f: &ModuleMap) -> Result<bool> {
        f.is_injective()
    }

    fn is_surjective(&self, f: &ModuleMap) -> Result<bool> {
        f.is_surjective()
    }
}
