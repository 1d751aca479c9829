//! Seeded random instances `(φ: E → B, f: X → B)`.

use rand::Rng;

use super::finset::{FinSet, FinSetMap};
use super::slice::Bundle;

/// Size bounds for generated instances; `B` is never empty.
#[derive(Clone, Copy, Debug)]
pub struct InstanceBounds {
    pub max_e: usize,
    pub max_b: usize,
    pub max_x: usize,
}

impl Default for InstanceBounds {
    fn default() -> Self {
        InstanceBounds { max_e: 5, max_b: 3, max_x: 4 }
    }
}

fn named(prefix: &str, n: usize) -> FinSet {
    FinSet::from_names(&(0..n).map(|i| format!("{}{}", prefix, i)).collect::<Vec<_>>()).expect("distinct")
}

/// A uniformly random `φ: E → B` and bundle `f: X → B`.
pub fn random_instance<R: Rng>(rng: &mut R, bounds: InstanceBounds) -> (FinSetMap, Bundle) {
    let b = named("b", rng.gen_range(1..=bounds.max_b));
    let e = named("e", rng.gen_range(0..=bounds.max_e));
    let x = named("x", rng.gen_range(0..=bounds.max_x));
    let phi = FinSetMap::new(e.clone(), b.clone(), (0..e.len()).map(|_| rng.gen_range(0..b.len())).collect()).expect("in range");
    let f = Bundle::from_assignment(x.clone(), b.clone(), (0..x.len()).map(|_| rng.gen_range(0..b.len())).collect()).expect("in range");
    (phi, f)
}

/// Like [`random_instance`] but with `φ` surjective (so `|E| ≥ |B|`).
pub fn random_surjective_instance<R: Rng>(rng: &mut R, bounds: InstanceBounds) -> (FinSetMap, Bundle) {
    let nb = rng.gen_range(1..=bounds.max_b.min(bounds.max_e.max(1)));
    let b = named("b", nb);
    let ne = rng.gen_range(nb..=bounds.max_e.max(nb));
    let e = named("e", ne);
    let mut assignment: Vec<usize> = (0..nb).collect();
    assignment.extend((nb..ne).map(|_| rng.gen_range(0..nb)));
    // Shuffle so the hit pattern is not always a prefix.
    for i in (1..ne).rev() {
        let j = rng.gen_range(0..=i);
        assignment.swap(i, j);
    }
    let phi = FinSetMap::new(e, b.clone(), assignment).expect("in range");
    let x = named("x", rng.gen_range(0..=bounds.max_x));
    let f = Bundle::from_assignment(x.clone(), b.clone(), (0..x.len()).map(|_| rng.gen_range(0..nb)).collect()).expect("in range");
    (phi, f)
}
