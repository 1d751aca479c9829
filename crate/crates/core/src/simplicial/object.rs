//! Truncated cosimplicial and simplicial objects and their identity checks.
//!
//! A simplicial object in `C` is a cosimplicial object in `Cᵒᵖ` with the same
//! data, so both kinds share one storage layout and one checker.

use std::fmt;

use super::category::{Category, Opposite};
use crate::error::{invalid, mismatch, Result};

/// Levels `X⁰ … X^N` with cofaces `d^i: Xⁿ → Xⁿ⁺¹` (`0 ≤ i ≤ n+1`) and
/// codegeneracies `s^j: Xⁿ⁺¹ → Xⁿ` (`0 ≤ j ≤ n`), optionally coaugmented.
pub struct TruncatedCosimplicial<C: Category> {
    levels: Vec<C::Object>,
    cofaces: Vec<Vec<C::Morphism>>,
    codegeneracies: Vec<Vec<C::Morphism>>,
    coaugmentation: Option<C::Morphism>,
}

/// Levels `X₀ … X_N` with faces `d_i: Xₙ₊₁ → Xₙ` (`0 ≤ i ≤ n+1`) and
/// degeneracies `s_j: Xₙ → Xₙ₊₁` (`0 ≤ j ≤ n`), optionally augmented.
pub struct TruncatedSimplicial<C: Category> {
    levels: Vec<C::Object>,
    faces: Vec<Vec<C::Morphism>>,
    degeneracies: Vec<Vec<C::Morphism>>,
    augmentation: Option<C::Morphism>,
}

macro_rules! common_impls {
    ($ty:ident, $up:ident, $down:ident, $aug:ident) => {
        impl<C: Category> Clone for $ty<C> {
            fn clone(&self) -> Self {
                $ty {
                    levels: self.levels.clone(),
                    $up: self.$up.clone(),
                    $down: self.$down.clone(),
                    $aug: self.$aug.clone(),
                }
            }
        }

        impl<C: Category> fmt::Debug for $ty<C> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_struct(stringify!($ty)).field("levels", &self.levels).finish_non_exhaustive()
            }
        }
    };
}

common_impls!(TruncatedCosimplicial, cofaces, codegeneracies, coaugmentation);
common_impls!(TruncatedSimplicial, faces, degeneracies, augmentation);

/// Shape and endpoint validation shared by both kinds, phrased cosimplicially in `cat`.
fn validate_layout<C: Category>(
    cat: &C,
    levels: &[C::Object],
    up: &[Vec<C::Morphism>],
    down: &[Vec<C::Morphism>],
) -> Result<()> {
    let n_max = levels.len().checked_sub(1).ok_or_else(|| invalid!("a truncated object needs level 0"))?;
    if n_max < 1 {
        return Err(invalid!("truncation must be at least 1"));
    }
    if up.len() != n_max || down.len() != n_max {
        return Err(mismatch!("truncation {} needs {} families of structure maps", n_max, n_max));
    }
    for n in 0..n_max {
        if up[n].len() != n + 2 || down[n].len() != n + 1 {
            return Err(mismatch!("level {} needs {} face maps and {} degeneracies", n, n + 2, n + 1));
        }
        for (i, d) in up[n].iter().enumerate() {
            if cat.source(d) != levels[n] || cat.target(d) != levels[n + 1] {
                return Err(mismatch!("face map {} out of level {} has the wrong endpoints", i, n));
            }
        }
        for (j, s) in down[n].iter().enumerate() {
            if cat.source(s) != levels[n + 1] || cat.target(s) != levels[n] {
                return Err(mismatch!("degeneracy {} into level {} has the wrong endpoints", j, n));
            }
        }
    }
    Ok(())
}

impl<C: Category> TruncatedCosimplicial<C> {
    pub fn new(
        cat: &C,
        levels: Vec<C::Object>,
        cofaces: Vec<Vec<C::Morphism>>,
        codegeneracies: Vec<Vec<C::Morphism>>,
    ) -> Result<Self> {
        validate_layout(cat, &levels, &cofaces, &codegeneracies)?;
        Ok(TruncatedCosimplicial { levels, cofaces, codegeneracies, coaugmentation: None })
    }

    /// Attach `η: X → X⁰`.
    pub fn with_coaugmentation(mut self, cat: &C, eta: C::Morphism) -> Result<Self> {
        if cat.target(&eta) != self.levels[0] {
            return Err(mismatch!("coaugmentation must land in level 0"));
        }
        self.coaugmentation = Some(eta);
        Ok(self)
    }

    /// The constant object `cc•X`: every level `X`, every map the identity.
    pub fn constant(cat: &C, x: &C::Object, truncation: usize) -> Result<Self> {
        let id = cat.identity(x);
        let cofaces = (0..truncation).map(|n| vec![id.clone(); n + 2]).collect();
        let codegeneracies = (0..truncation).map(|n| vec![id.clone(); n + 1]).collect();
        Self::new(cat, vec![x.clone(); truncation + 1], cofaces, codegeneracies)
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[C::Object] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> &C::Object {
        &self.levels[n]
    }

    /// `d^i: Xⁿ → Xⁿ⁺¹`
    pub fn coface(&self, n: usize, i: usize) -> &C::Morphism {
        &self.cofaces[n][i]
    }

    /// `s^j: Xⁿ⁺¹ → Xⁿ`
    pub fn codegeneracy(&self, n: usize, j: usize) -> &C::Morphism {
        &self.codegeneracies[n][j]
    }

    pub fn coaugmentation(&self) -> Option<&C::Morphism> {
        self.coaugmentation.as_ref()
    }

    /// Replace one coface; used to build deliberately broken objects.
    pub fn replace_coface(&mut self, cat: &C, n: usize, i: usize, f: C::Morphism) -> Result<()> {
        if cat.source(&f) != self.levels[n] || cat.target(&f) != self.levels[n + 1] {
            return Err(mismatch!("replacement coface has the wrong endpoints"));
        }
        self.cofaces[n][i] = f;
        Ok(())
    }

    /// Apply a functor levelwise.
    pub fn map_levels<D: Category>(
        &self,
        target: &D,
        on_objects: impl Fn(&C::Object) -> Result<D::Object>,
        on_maps: impl Fn(&C::Morphism) -> Result<D::Morphism>,
    ) -> Result<TruncatedCosimplicial<D>> {
        let levels = self.levels.iter().map(&on_objects).collect::<Result<Vec<_>>>()?;
        let cofaces = self.cofaces.iter().map(|fs| fs.iter().map(&on_maps).collect()).collect::<Result<Vec<_>>>()?;
        let codegs = self.codegeneracies.iter().map(|fs| fs.iter().map(&on_maps).collect()).collect::<Result<Vec<_>>>()?;
        let mut out = TruncatedCosimplicial::new(target, levels, cofaces, codegs)?;
        if let Some(eta) = &self.coaugmentation {
            out = out.with_coaugmentation(target, on_maps(eta)?)?;
        }
        Ok(out)
    }
}

impl<C: Category> TruncatedSimplicial<C> {
    pub fn new(
        cat: &C,
        levels: Vec<C::Object>,
        faces: Vec<Vec<C::Morphism>>,
        degeneracies: Vec<Vec<C::Morphism>>,
    ) -> Result<Self> {
        validate_layout(&Opposite(cat), &levels, &faces, &degeneracies)?;
        Ok(TruncatedSimplicial { levels, faces, degeneracies, augmentation: None })
    }

    /// Attach `ε: X₀ → X`.
    pub fn with_augmentation(mut self, cat: &C, eps: C::Morphism) -> Result<Self> {
        if cat.source(&eps) != self.levels[0] {
            return Err(mismatch!("augmentation must start at level 0"));
        }
        self.augmentation = Some(eps);
        Ok(self)
    }

    /// The constant object `cs•X`.
    pub fn constant(cat: &C, x: &C::Object, truncation: usize) -> Result<Self> {
        let id = cat.identity(x);
        let faces = (0..truncation).map(|n| vec![id.clone(); n + 2]).collect();
        let degeneracies = (0..truncation).map(|n| vec![id.clone(); n + 1]).collect();
        Self::new(cat, vec![x.clone(); truncation + 1], faces, degeneracies)
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[C::Object] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> &C::Object {
        &self.levels[n]
    }

    /// `d_i: Xₙ₊₁ → Xₙ`
    pub fn face(&self, n: usize, i: usize) -> &C::Morphism {
        &self.faces[n][i]
    }

    /// `s_j: Xₙ → Xₙ₊₁`
    pub fn degeneracy(&self, n: usize, j: usize) -> &C::Morphism {
        &self.degeneracies[n][j]
    }

    pub fn augmentation(&self) -> Option<&C::Morphism> {
        self.augmentation.as_ref()
    }

    pub fn replace_face(&mut self, cat: &C, n: usize, i: usize, f: C::Morphism) -> Result<()> {
        if cat.source(&f) != self.levels[n + 1] || cat.target(&f) != self.levels[n] {
            return Err(mismatch!("replacement face has the wrong endpoints"));
        }
        self.faces[n][i] = f;
        Ok(())
    }

    pub fn map_levels<D: Category>(
        &self,
        target: &D,
        on_objects: impl Fn(&C::Object) -> Result<D::Object>,
        on_maps: impl Fn(&C::Morphism) -> Result<D::Morphism>,
    ) -> Result<TruncatedSimplicial<D>> {
        let levels = self.levels.iter().map(&on_objects).collect::<Result<Vec<_>>>()?;
        let faces = self.faces.iter().map(|fs| fs.iter().map(&on_maps).collect()).collect::<Result<Vec<_>>>()?;
        let degs = self.degeneracies.iter().map(|fs| fs.iter().map(&on_maps).collect()).collect::<Result<Vec<_>>>()?;
        let mut out = TruncatedSimplicial::new(target, levels, faces, degs)?;
        if let Some(eps) = &self.augmentation {
            out = out.with_augmentation(target, on_maps(eps)?)?;
        }
        Ok(out)
    }

    /// The same data read as a cosimplicial object in the opposite category.
    pub(crate) fn as_opposite(&self) -> OppositeView<'_, C> {
        OppositeView { levels: &self.levels, up: &self.faces, down: &self.degeneracies, aug: self.augmentation.as_ref() }
    }
}

pub(crate) struct OppositeView<'a, C: Category> {
    pub levels: &'a [C::Object],
    pub up: &'a [Vec<C::Morphism>],
    pub down: &'a [Vec<C::Morphism>],
    pub aug: Option<&'a C::Morphism>,
}

impl<C: Category> TruncatedCosimplicial<C> {
    pub(crate) fn as_view(&self) -> OppositeView<'_, C> {
        OppositeView { levels: &self.levels, up: &self.cofaces, down: &self.codegeneracies, aug: self.coaugmentation.as_ref() }
    }
}

/// Whether labels are written with upper (cosimplicial) or lower (simplicial) indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Variance {
    Co,
    Contra,
}

impl Variance {
    pub(crate) fn d(self, i: usize) -> String {
        match self {
            Variance::Co => format!("d^{}", i),
            Variance::Contra => format!("d_{}", i),
        }
    }

    pub(crate) fn s(self, i: usize) -> String {
        match self {
            Variance::Co => format!("s^{}", i),
            Variance::Contra => format!("s_{}", i),
        }
    }

    /// Writes the cosimplicial composite `a ∘ b` in the convention of this variance.
    pub(crate) fn comp(self, a: &str, b: &str) -> String {
        match self {
            Variance::Co => format!("{} {}", a, b),
            Variance::Contra => format!("{} {}", b, a),
        }
    }

    pub(crate) fn aug(self) -> &'static str {
        match self {
            Variance::Co => "η",
            Variance::Contra => "ε",
        }
    }
}

/// Result of an identity check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    /// Number of identity instances compared.
    pub checked: usize,
    /// Every violated instance, named with its indices and source level.
    pub violations: Vec<String>,
    /// Instances whose composites leave the truncation; never assumed to hold.
    pub unchecked: Vec<String>,
}

impl IdentityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn record(&mut self, holds: bool, label: String) {
        self.checked += 1;
        if !holds {
            self.violations.push(label);
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checked, {} violated, {} out of range", self.checked, self.violations.len(), self.unchecked.len())?;
        for v in &self.violations {
            write!(f, "\n  violated: {}", v)?;
        }
        Ok(())
    }
}

/// The cosimplicial identities, phrased in `cat` (which may be an opposite category).
pub(crate) fn check_view<C: Category>(cat: &C, x: &OppositeView<'_, C>, var: Variance) -> Result<IdentityReport> {
    let n_max = x.levels.len() - 1;
    let d = |n: usize, i: usize| &x.up[n][i];
    let s = |n: usize, j: usize| &x.down[n][j];
    let mut report = IdentityReport::default();

    for n in 0..n_max {
        // d^j d^i = d^i d^{j-1}, i < j, from level n to n + 2.
        for j in 0..=n + 2 {
            for i in 0..j {
                let label = format!(
                    "{} = {} at level {}",
                    var.comp(&var.d(j), &var.d(i)),
                    var.comp(&var.d(i), &var.d(j - 1)),
                    n
                );
                if n + 2 > n_max {
                    report.unchecked.push(label);
                    continue;
                }
                let lhs = cat.compose(d(n + 1, j), d(n, i))?;
                let rhs = cat.compose(d(n + 1, i), d(n, j - 1))?;
                report.record(cat.same_morphism(&lhs, &rhs)?, label);
            }
        }
        // s^j d^i from level n back to level n.
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = cat.compose(s(n, j), d(n, i))?;
                let (rhs_label, holds) = if i < j {
                    let rhs = cat.compose(d(n - 1, i), s(n - 1, j - 1))?;
                    (var.comp(&var.d(i), &var.s(j - 1)), cat.same_morphism(&lhs, &rhs)?)
                } else if i == j || i == j + 1 {
                    ("id".to_string(), cat.is_identity(&lhs)?)
                } else {
                    let rhs = cat.compose(d(n - 1, i - 1), s(n - 1, j))?;
                    (var.comp(&var.d(i - 1), &var.s(j)), cat.same_morphism(&lhs, &rhs)?)
                };
                let label = format!("{} = {} at level {}", var.comp(&var.s(j), &var.d(i)), rhs_label, n);
                report.record(holds, label);
            }
        }
        // s^j s^i = s^i s^{j+1}, i ≤ j, from level n + 2 to n.
        for j in 0..=n {
            for i in 0..=j {
                let label = format!(
                    "{} = {} at level {}",
                    var.comp(&var.s(j), &var.s(i)),
                    var.comp(&var.s(i), &var.s(j + 1)),
                    n + 2
                );
                if n + 2 > n_max {
                    report.unchecked.push(label);
                    continue;
                }
                let lhs = cat.compose(s(n, j), s(n + 1, i))?;
                let rhs = cat.compose(s(n, i), s(n + 1, j + 1))?;
                report.record(cat.same_morphism(&lhs, &rhs)?, label);
            }
        }
    }
    if let Some(eta) = x.aug {
        let lhs = cat.compose(d(0, 0), eta)?;
        let rhs = cat.compose(d(0, 1), eta)?;
        let label = format!("{} = {}", var.comp(&var.d(0), var.aug()), var.comp(&var.d(1), var.aug()));
        report.record(cat.same_morphism(&lhs, &rhs)?, label);
    }
    Ok(report)
}

/// Every cosimplicial identity whose composites stay within the truncation.
pub fn check_cosimplicial_identities<C: Category>(cat: &C, x: &TruncatedCosimplicial<C>) -> Result<IdentityReport> {
    check_view(cat, &x.as_view(), Variance::Co)
}

/// Every simplicial identity whose composites stay within the truncation.
pub fn check_simplicial_identities<C: Category>(cat: &C, x: &TruncatedSimplicial<C>) -> Result<IdentityReport> {
    let view = x.as_opposite();
    let op = Opposite(cat);
    let view = OppositeView { levels: view.levels, up: view.up, down: view.down, aug: view.aug };
    check_view(&op, &view, Variance::Contra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FgAbelianGroup, ModuleMap, ModuleOverRing};
    use crate::simplicial::category::Modules;

    fn z3() -> ModuleOverRing {
        ModuleOverRing::abelian(FgAbelianGroup::cyclic(3))
    }

    #[test]
    fn constant_object_is_valid() {
        let x = TruncatedCosimplicial::constant(&Modules, &z3(), 3).unwrap();
        let r = check_cosimplicial_identities(&Modules, &x).unwrap();
        assert!(r.is_valid(), "{}", r);
        assert!(r.checked > 0);
        assert!(!r.unchecked.is_empty());
    }

    #[test]
    fn zero_coface_is_named() {
        let m = z3();
        let mut x = TruncatedCosimplicial::constant(&Modules, &m, 3).unwrap();
        x.replace_coface(&Modules, 1, 0, ModuleMap::zero(&m, &m)).unwrap();
        let r = check_cosimplicial_identities(&Modules, &x).unwrap();
        assert!(r.violations.iter().any(|v| v.starts_with("d^1 d^0 = d^0 d^0")), "{:?}", r.violations);
    }

    #[test]
    fn constant_simplicial_is_valid() {
        let x = TruncatedSimplicial::constant(&Modules, &z3(), 2).unwrap();
        assert!(check_simplicial_identities(&Modules, &x).unwrap().is_valid());
    }

    #[test]
    fn zero_face_uses_lower_indices() {
        let m = z3();
        let mut x = TruncatedSimplicial::constant(&Modules, &m, 2).unwrap();
        x.replace_face(&Modules, 0, 1, ModuleMap::zero(&m, &m)).unwrap();
        let r = check_simplicial_identities(&Modules, &x).unwrap();
        assert!(r.violations.iter().any(|v| v.contains("d_")), "{:?}", r.violations);
    }
}
