//! Codescent data: sets over `E` with an action of `E ×_B E`, the canonical
//! datum of a bundle, indecomposables, and the Beck coequalizer criterion.

use std::collections::HashMap;

use super::comonad::comonad_k_phi;
use super::finset::{pullback, quotient, FinSet, FinSetMap, Label};
use super::slice::{Bundle, BundleMap};
use crate::error::{mismatch, Result};
use crate::report::CheckReport;
use crate::simplicial::{Comonad, FiniteColimits};

/// A set `X → E` over the source of `φ: E → B` with an action
/// `θ: X ×_B E → X`.
#[derive(Clone, Debug)]
pub struct CodescentDatum {
    phi: FinSetMap,
    bundle: Bundle,
    action: FinSetMap,
}

/// `X ×_B E` for `X → E → B`, with its two projections.
fn acting_domain(phi: &FinSetMap, bundle: &Bundle) -> Result<(FinSet, FinSetMap, FinSetMap)> {
    pullback(&phi.after(bundle.projection())?, phi)
}

impl CodescentDatum {
    /// `action` is given on `X ×_B E` in the order produced by [`pullback`].
    pub fn new(phi: FinSetMap, bundle: Bundle, action: FinSetMap) -> Result<Self> {
        if bundle.base() != phi.source() {
            return Err(mismatch!("datum must lie over the source of φ"));
        }
        let (p, _, _) = acting_domain(&phi, &bundle)?;
        if action.source() != &p || action.target() != bundle.total() {
            return Err(mismatch!("action must run from X ×_B E to X"));
        }
        Ok(CodescentDatum { phi, bundle, action })
    }

    pub fn from_assignment(phi: FinSetMap, bundle: Bundle, assignment: Vec<usize>) -> Result<Self> {
        let (p, _, _) = acting_domain(&phi, &bundle)?;
        let action = FinSetMap::new(p, bundle.total().clone(), assignment)?;
        Self::new(phi, bundle, action)
    }

    pub fn phi(&self) -> &FinSetMap {
        &self.phi
    }

    pub fn bundle(&self) -> &Bundle {
        &self.bundle
    }

    pub fn action(&self) -> &FinSetMap {
        &self.action
    }

    /// A copy with a replaced action.
    pub fn with_action(&self, assignment: Vec<usize>) -> Result<Self> {
        Self::from_assignment(self.phi.clone(), self.bundle.clone(), assignment)
    }
}

/// Checks that `θ(x, e)` lies over `e`, the cocycle square
/// `θ(θ(x, e), e') = θ(x, e')`, and the unit triangle `θ(x, p(x)) = x`.
pub fn validate_codescent_datum(d: &CodescentDatum) -> Result<CheckReport> {
    let (_, p1, p2) = acting_domain(&d.phi, &d.bundle)?;
    let x = d.bundle.total();
    let e = d.phi.source();
    let p = d.bundle.projection();
    let index: HashMap<(usize, usize), usize> = (0..p1.source().len()).map(|k| ((p1.apply(k), p2.apply(k)), k)).collect();
    let theta = |k: usize| d.action.apply(k);
    let mut report = CheckReport::new();

    let off = (0..index.len()).find(|&k| p.apply(theta(k)) != p2.apply(k));
    record(&mut report, "action lies over E", off.map(|k| format!("θ{} = {} is not over {}", p1.source().label(k), x.label(theta(k)), e.label(p2.apply(k)))));

    let mut cocycle = None;
    'outer: for k in 0..p1.source().len() {
        let (xi, ei) = (p1.apply(k), p2.apply(k));
        let y = theta(k);
        for ej in d.phi.fiber(d.phi.apply(ei)) {
            let (Some(&a), Some(&b)) = (index.get(&(y, ej)), index.get(&(xi, ej))) else {
                continue;
            };
            if theta(a) != theta(b) {
                cocycle = Some(format!(
                    "θ(θ({}, {}), {}) = {} but θ({}, {}) = {}",
                    x.label(xi),
                    e.label(ei),
                    e.label(ej),
                    x.label(theta(a)),
                    x.label(xi),
                    e.label(ej),
                    x.label(theta(b))
                ));
                break 'outer;
            }
        }
    }
    record(&mut report, "cocycle square", cocycle);

    let unit = (0..x.len()).find_map(|i| {
        let k = index[&(i, p.apply(i))];
        (theta(k) != i).then(|| format!("θ({}, {}) = {}", x.label(i), e.label(p.apply(i)), x.label(theta(k))))
    });
    record(&mut report, "unit triangle", unit);
    Ok(report)
}

fn record(report: &mut CheckReport, name: &str, failure: Option<String>) {
    match failure {
        None => report.record(name, true),
        Some(w) => report.record_with(name, false, w),
    }
}

/// The canonical datum of a bundle `f: Y → B`: `Y ×_B E → E` acting by
/// `((y, e), e') ↦ (y, e')`.
pub fn can_upper_phi(phi: &FinSetMap, f: &Bundle) -> Result<CodescentDatum> {
    let (x, _, p2) = pullback(f.projection(), phi)?;
    let bundle = Bundle::new(p2);
    let (dom, q1, q2) = acting_domain(phi, &bundle)?;
    let e = phi.source();
    let assignment = (0..dom.len())
        .map(|k| {
            let Label::Tuple(yx) = x.label(q1.apply(k)) else { unreachable!("pullback labels are pairs") };
            let target = Label::pair(yx[0].clone(), e.label(q2.apply(k)).clone());
            Ok(x.index_of(&target).expect("same fiber"))
        })
        .collect::<Result<_>>()?;
    CodescentDatum::from_assignment(phi.clone(), bundle, assignment)
}

/// `Q(X) = X / (x ~ θ(x, e))`, a set over `B` through `φ p`.
#[derive(Clone, Debug)]
pub struct Indecomposables {
    pub object: Bundle,
    /// `X → Q(X)`
    pub projection: FinSetMap,
}

/// The coequalizer of `θ` and the first projection `X ×_B E ⇉ X`.
pub fn q_indecomposables(d: &CodescentDatum) -> Result<Indecomposables> {
    let (_, p1, _) = acting_domain(&d.phi, &d.bundle)?;
    let x = d.bundle.total();
    let (q, proj) = quotient(x, (0..p1.source().len()).map(|k| (p1.apply(k), d.action.apply(k))))?;
    let over_b = d.phi.after(d.bundle.projection())?;
    let mut bases = vec![0; q.len()];
    for i in 0..x.len() {
        bases[proj.apply(i)] = over_b.apply(i);
    }
    Ok(Indecomposables { object: Bundle::from_assignment(q, d.phi.target().clone(), bases)?, projection: proj })
}

/// The counit `Q(can f) → f`, `[(y, e)] ↦ y`.
#[derive(Clone, Debug)]
pub struct CounitComparison {
    pub object: Bundle,
    pub map: BundleMap,
    pub injective: bool,
    pub surjective: bool,
}

pub fn q_can_counit(phi: &FinSetMap, f: &Bundle) -> Result<CounitComparison> {
    let d = can_upper_phi(phi, f)?;
    let q = q_indecomposables(&d)?;
    let (_, p1, _) = pullback(f.projection(), phi)?;
    let mut assignment = vec![0; q.object.total().len()];
    for k in 0..p1.source().len() {
        assignment[q.projection.apply(k)] = p1.apply(k);
    }
    let map = BundleMap::from_assignment(q.object.clone(), f.clone(), assignment)?;
    Ok(CounitComparison { injective: map.map().is_injective(), surjective: map.map().is_surjective(), object: q.object, map })
}

/// Whether `K²d ⇉ Kd → d` is a coequalizer.
#[derive(Clone, Debug)]
pub struct BeckCodescentReport {
    pub holds: bool,
    pub coequalizer: Bundle,
    /// Induced by the counit `Kd → d`.
    pub comparison: BundleMap,
    /// An element of `d` outside the image of the comparison, with its base point.
    pub witness: Option<(Label, Label)>,
}

pub fn beck_codescent_check(phi: &FinSetMap, d: &Bundle) -> Result<BeckCodescentReport> {
    let k = comonad_k_phi(phi);
    let cat = k.category();
    let kd = k.apply(d)?;
    let outer = k.counit(&kd)?;
    let inner = k.apply_map(&k.counit(d)?)?;
    let (coequalizer, proj) = cat.coequalizer(&outer, &inner)?;
    let comparison = cat.descend(&proj, &k.counit(d)?)?;
    let hit = comparison.map().image();
    let witness = (0..d.total().len()).find(|i| hit.binary_search(i).is_err()).map(|i| {
        (d.total().label(i).clone(), d.base().label(d.projection().apply(i)).clone())
    });
    let holds = comparison.map().is_injective() && witness.is_none();
    Ok(BeckCodescentReport { holds, coequalizer, comparison, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> FinSet {
        FinSet::from_names(&["a", "b"]).unwrap()
    }

    fn two_one() -> FinSetMap {
        FinSetMap::new(FinSet::range(3), ab(), vec![0, 0, 1]).unwrap()
    }

    fn bundle() -> Bundle {
        Bundle::from_assignment(FinSet::from_names(&["x", "y", "z"]).unwrap(), ab(), vec![0, 0, 1]).unwrap()
    }

    #[test]
    fn canonical_datum_is_valid() {
        let d = can_upper_phi(&two_one(), &bundle()).unwrap();
        assert!(validate_codescent_datum(&d).unwrap().holds());
    }

    #[test]
    fn altered_action_names_the_square() {
        let d = can_upper_phi(&two_one(), &bundle()).unwrap();
        // (x,0) acted on by 1 should give (x,1); send it to (y,1) instead.
        let mut a = d.action().assignment().to_vec();
        let dom = acting_domain(d.phi(), d.bundle()).unwrap().0;
        let k = (0..dom.len()).find(|&k| dom.label(k).to_string() == "((x,0),1)").unwrap();
        let target = d.bundle().total().index_of(&Label::pair("y".into(), "1".into())).unwrap();
        a[k] = target;
        let r = validate_codescent_datum(&d.with_action(a).unwrap()).unwrap();
        assert!(!r.holds());
        assert!(r.check("cocycle square").map_or(false, |c| !c.holds), "{}", r);
        assert!(r.check("action lies over E").unwrap().holds);
    }

    #[test]
    fn identity_phi_forces_identity_action() {
        let id = FinSetMap::identity(&ab());
        let d = can_upper_phi(&id, &bundle()).unwrap();
        assert!(d.action().assignment().iter().enumerate().all(|(i, &j)| i == j));
        let q = q_can_counit(&id, &bundle()).unwrap();
        assert!(q.injective && q.surjective);
    }

    #[test]
    fn q_of_can_recovers_bundle() {
        let q = q_can_counit(&two_one(), &bundle()).unwrap();
        assert!(q.injective && q.surjective);
        let phi = FinSetMap::new(FinSet::range(1), ab(), vec![0]).unwrap();
        let q = q_can_counit(&phi, &bundle()).unwrap();
        assert!(!q.surjective);
    }

    #[test]
    fn beck_examples() {
        assert!(beck_codescent_check(&FinSetMap::identity(&ab()), &bundle()).unwrap().holds);
        let a = FinSet::from_names(&["a"]).unwrap();
        let onto = FinSetMap::new(FinSet::range(2), a.clone(), vec![0, 0]).unwrap();
        let d = Bundle::from_assignment(FinSet::range(3), a, vec![0, 0, 0]).unwrap();
        assert!(beck_codescent_check(&onto, &d).unwrap().holds);
        let phi = FinSetMap::new(FinSet::range(1), ab(), vec![0]).unwrap();
        let r = beck_codescent_check(&phi, &Bundle::identity_over(&ab())).unwrap();
        assert!(!r.holds);
        let (element, base) = r.witness.unwrap();
        assert_eq!((element.to_string(), base.to_string()), ("b".into(), "b".into()));
    }
}
