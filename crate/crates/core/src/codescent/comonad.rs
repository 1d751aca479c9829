//! The pullback comonad `K_φ(X) = X ×_B E` on `FinSet/B`, its bar
//! construction (the Čech nerve), coalgebras as sections, and contractibility
//! from a global section.

use super::finset::{pullback, FinSet, FinSetMap, Label};
use super::slice::{Bundle, BundleMap, SliceCategory};
use crate::error::{invalid, mismatch, Error, Result};
use crate::report::CheckReport;
use crate::simplicial::{
    bar, check_contractible_simplicial, extra_degeneracies_from_coalgebra, Category, Comonad, Contractibility,
    TruncatedSimplicial,
};

/// `K_φ = φ_! φ^*` for `φ: E → B`.
#[derive(Clone, Debug)]
pub struct PullbackComonad {
    phi: FinSetMap,
    slice: SliceCategory,
}

/// The pullback comonad of `φ: E → B`.
pub fn comonad_k_phi(phi: &FinSetMap) -> PullbackComonad {
    PullbackComonad { phi: phi.clone(), slice: SliceCategory::new(phi.target().clone()) }
}

impl PullbackComonad {
    pub fn phi(&self) -> &FinSetMap {
        &self.phi
    }

    pub fn slice(&self) -> &SliceCategory {
        &self.slice
    }

    fn check_base(&self, x: &Bundle) -> Result<()> {
        if x.base() != self.phi.target() {
            return Err(mismatch!("bundle is not over the target of φ"));
        }
        Ok(())
    }

    /// Index of `(x, e)` in `K(x)`.
    fn locate(kx: &Bundle, x: &Label, e: &Label) -> Result<usize> {
        kx.total()
            .index_of(&Label::pair(x.clone(), e.clone()))
            .ok_or_else(|| invalid!("({}, {}) does not lie in the fiber product", x, e))
    }

    /// The map `x ↦ (x, s(x))` into `K(x)`, for `s: X → E` over `B`.
    pub fn coaction_from_section(&self, x: &Bundle, s: &FinSetMap) -> Result<BundleMap> {
        let kx = self.apply(x)?;
        let e = self.phi.source();
        let assignment = (0..x.total().len())
            .map(|i| Self::locate(&kx, x.total().label(i), e.label(s.apply(i))))
            .collect::<Result<_>>()?;
        BundleMap::from_assignment(x.clone(), kx, assignment)
    }
}

impl Comonad for PullbackComonad {
    type Cat = SliceCategory;

    fn category(&self) -> &SliceCategory {
        &self.slice
    }

    fn apply(&self, x: &Bundle) -> Result<Bundle> {
        self.check_base(x)?;
        let (p, p1, _) = pullback(x.projection(), &self.phi)?;
        let over = x.projection().after(&p1)?;
        debug_assert_eq!(over.source(), &p);
        Ok(Bundle::new(over))
    }

    fn apply_map(&self, f: &BundleMap) -> Result<BundleMap> {
        let ks = self.apply(f.source())?;
        let kt = self.apply(f.target())?;
        let (_, p1, p2) = pullback(f.source().projection(), &self.phi)?;
        let e = self.phi.source();
        let assignment = (0..ks.total().len())
            .map(|i| Self::locate(&kt, f.target().total().label(f.map().apply(p1.apply(i))), e.label(p2.apply(i))))
            .collect::<Result<_>>()?;
        BundleMap::from_assignment(ks, kt, assignment)
    }

    fn counit(&self, x: &Bundle) -> Result<BundleMap> {
        let kx = self.apply(x)?;
        let (_, p1, _) = pullback(x.projection(), &self.phi)?;
        BundleMap::from_assignment(kx, x.clone(), p1.assignment().to_vec())
    }

    /// `(x, e) ↦ ((x, e), e)`
    fn comultiplication(&self, x: &Bundle) -> Result<BundleMap> {
        let kx = self.apply(x)?;
        let kkx = self.apply(&kx)?;
        let (_, _, p2) = pullback(x.projection(), &self.phi)?;
        let e = self.phi.source();
        let assignment = (0..kx.total().len())
            .map(|i| Self::locate(&kkx, kx.total().label(i), e.label(p2.apply(i))))
            .collect::<Result<_>>()?;
        BundleMap::from_assignment(kx, kkx, assignment)
    }
}

/// The augmented Čech nerve `… K²f ⇉ Kf → f`, truncated at `truncation`.
pub fn cech_nerve(phi: &FinSetMap, f: &Bundle, truncation: usize) -> Result<TruncatedSimplicial<SliceCategory>> {
    bar(&comonad_k_phi(phi), f, truncation)
}

/// A `K_φ`-coalgebra on a bundle, given by a lift through `φ`.
#[derive(Clone, Debug)]
pub struct FinsetCoalgebra {
    /// `e: X → E` with `φ e = f`.
    pub section: FinSetMap,
    /// `δ(x) = (x, e(x))`.
    pub coaction: BundleMap,
    /// Counit and coassociativity, rechecked.
    pub report: CheckReport,
}

/// Result of searching for a coalgebra structure.
#[derive(Clone, Debug)]
pub enum CoalgebraSearch {
    Found(FinsetCoalgebra),
    /// No lift exists: `element` lies over `base_point`, which `φ` misses.
    Refuted { element: Label, base_point: Label },
}

impl CoalgebraSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, CoalgebraSearch::Found(_))
    }
}

/// Search all lifts `e: X → E` of `f` through `φ`, taking the first in
/// lexicographic order of fiber elements, and recheck the coalgebra laws.
pub fn detect_coalgebra(phi: &FinSetMap, f: &Bundle) -> Result<CoalgebraSearch> {
    let k = comonad_k_phi(phi);
    k.check_base(f)?;
    let mut assignment = Vec::with_capacity(f.total().len());
    for i in 0..f.total().len() {
        let b = f.projection().apply(i);
        match phi.fiber(b).first() {
            Some(&e) => assignment.push(e),
            None => {
                return Ok(CoalgebraSearch::Refuted {
                    element: f.total().label(i).clone(),
                    base_point: f.base().label(b).clone(),
                })
            }
        }
    }
    let section = FinSetMap::new(f.total().clone(), phi.source().clone(), assignment)?;
    let coaction = k.coaction_from_section(f, &section)?;
    let report = coalgebra_laws(&k, &coaction)?;
    Ok(CoalgebraSearch::Found(FinsetCoalgebra { section, coaction, report }))
}

/// `ε δ = id` and `K(δ) δ = Δ δ`.
pub fn coalgebra_laws(k: &PullbackComonad, coaction: &BundleMap) -> Result<CheckReport> {
    let cat = k.category();
    let x = coaction.source();
    let mut report = CheckReport::new();
    let counit = cat.compose(&k.counit(x)?, coaction)?;
    report.record("counit", cat.is_identity(&counit)?);
    let lhs = cat.compose(&k.apply_map(coaction)?, coaction)?;
    let rhs = cat.compose(&k.comultiplication(x)?, coaction)?;
    report.record("coassociativity", cat.same_morphism(&lhs, &rhs)?);
    Ok(report)
}

/// Certify that the Čech nerve of `f` contracts, using the extra
/// degeneracies `Kⁿ(δ)` of the coalgebra `δ(x) = (x, σ f(x))`.
pub fn barr_contractibility_from_section(
    phi: &FinSetMap,
    sigma: &FinSetMap,
    f: &Bundle,
    truncation: usize,
) -> Result<Contractibility<SliceCategory>> {
    if sigma.source() != phi.target() || sigma.target() != phi.source() {
        return Err(mismatch!("section must run from the target of φ to its source"));
    }
    if !phi.after(sigma)?.is_identity() {
        return Err(Error::Precondition("φ∘σ is not the identity".into()));
    }
    let k = comonad_k_phi(phi);
    let lift = sigma.after(f.projection())?;
    let delta = k.coaction_from_section(f, &lift)?;
    let y = bar(&k, f, truncation)?;
    let extra = extra_degeneracies_from_coalgebra(&k, &delta, truncation)?;
    check_contractible_simplicial(k.category(), &y, &extra)
}

/// `|K_φ^{n+1} f| = Σ_x |φ⁻¹(f(x))|^{n+1}`, counted directly from fibers.
pub fn cech_level_size(phi: &FinSetMap, f: &Bundle, n: usize) -> usize {
    (0..f.total().len()).map(|i| phi.fiber(f.projection().apply(i)).len().pow(n as u32 + 1)).sum()
}

/// `B × G → B` for a finite `G` of size `g`, with elements `(b, k)`.
pub fn trivial_product(base: &FinSet, g: usize) -> Result<FinSetMap> {
    let mut labels = Vec::new();
    let mut assignment = Vec::new();
    for b in 0..base.len() {
        for k in 0..g {
            labels.push(Label::pair(base.label(b).clone(), Label::atom(k.to_string())));
            assignment.push(b);
        }
    }
    FinSetMap::new(FinSet::new(labels)?, base.clone(), assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{check_comonad_laws, check_simplicial_identities};

    fn ab() -> FinSet {
        FinSet::from_names(&["a", "b"]).unwrap()
    }

    /// `{0,1,2} → {a,b}`, `0,1 ↦ a`, `2 ↦ b`.
    fn two_one() -> FinSetMap {
        FinSetMap::new(FinSet::range(3), ab(), vec![0, 0, 1]).unwrap()
    }

    #[test]
    fn k_of_point_over_a() {
        let k = comonad_k_phi(&two_one());
        let x = Bundle::from_assignment(FinSet::from_names(&["x"]).unwrap(), ab(), vec![0]).unwrap();
        assert_eq!(k.apply(&x).unwrap().total().len(), 2);
        let probes = vec![x, Bundle::identity_over(&ab())];
        assert!(check_comonad_laws(&k, &probes).unwrap().holds());
    }

    #[test]
    fn identity_phi_gives_identity_comonad() {
        let k = comonad_k_phi(&FinSetMap::identity(&ab()));
        let x = Bundle::from_assignment(FinSet::range(3), ab(), vec![0, 1, 1]).unwrap();
        assert_eq!(k.apply(&x).unwrap().total().len(), 3);
        assert!(k.counit(&x).unwrap().map().is_injective());
    }

    #[test]
    fn empty_source_gives_empty_k() {
        let k = comonad_k_phi(&FinSetMap::new(FinSet::empty(), ab(), vec![]).unwrap());
        assert!(k.apply(&Bundle::identity_over(&ab())).unwrap().total().is_empty());
    }

    #[test]
    fn cech_levels_3_5_9() {
        let f = Bundle::identity_over(&ab());
        let y = cech_nerve(&two_one(), &f, 2).unwrap();
        let sizes: Vec<_> = y.levels().iter().map(|l| l.total().len()).collect();
        assert_eq!(sizes, [3, 5, 9]);
        assert!(check_simplicial_identities(k_cat(), &y).unwrap().is_valid());
    }

    fn k_cat() -> &'static SliceCategory {
        use std::sync::OnceLock;
        static C: OnceLock<SliceCategory> = OnceLock::new();
        C.get_or_init(|| SliceCategory::new(ab()))
    }

    #[test]
    fn coalgebra_refuted_off_image() {
        let phi = FinSetMap::new(FinSet::range(1), ab(), vec![0]).unwrap();
        let f = Bundle::from_assignment(FinSet::from_names(&["x"]).unwrap(), ab(), vec![1]).unwrap();
        match detect_coalgebra(&phi, &f).unwrap() {
            CoalgebraSearch::Refuted { element, base_point } => {
                assert_eq!(element.to_string(), "x");
                assert_eq!(base_point.to_string(), "b");
            }
            other => panic!("expected refutation, got {:?}", other),
        }
    }

    #[test]
    fn coalgebra_found_through_section() {
        let phi = trivial_product(&ab(), 2).unwrap();
        let f = Bundle::from_assignment(FinSet::range(3), ab(), vec![1, 0, 1]).unwrap();
        let CoalgebraSearch::Found(c) = detect_coalgebra(&phi, &f).unwrap() else { panic!() };
        assert!(c.report.holds());
        assert!(phi.after(&c.section).unwrap() == *f.projection());
    }

    #[test]
    fn barr_certificates() {
        let f = Bundle::from_assignment(FinSet::range(3), ab(), vec![1, 0, 1]).unwrap();
        let id = FinSetMap::identity(&ab());
        assert!(barr_contractibility_from_section(&id, &id, &f, 3).unwrap().is_certified());
        let phi = trivial_product(&ab(), 3).unwrap();
        let sigma = FinSetMap::new(ab(), phi.source().clone(), vec![0, 3]).unwrap();
        assert!(barr_contractibility_from_section(&phi, &sigma, &f, 3).unwrap().is_certified());
        let bad = FinSetMap::new(ab(), phi.source().clone(), vec![0, 1]).unwrap();
        assert!(matches!(barr_contractibility_from_section(&phi, &bad, &f, 3), Err(Error::Precondition(_))));
    }
}
