//! Properties of the pullback comonad on finite sets, on seeded random instances.

use std::collections::BTreeSet;

use descent_core::codescent::random::{random_instance, InstanceBounds};
use descent_core::codescent::{
    beck_codescent_check, can_upper_phi, cech_level_size, cech_nerve, detect_coalgebra, validate_codescent_datum, Bundle,
    CoalgebraSearch, FinSetMap, SliceCategory,
};
use descent_core::simplicial::pi0_simplicial;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instance(seed: u64) -> (FinSetMap, Bundle) {
    random_instance(&mut ChaCha8Rng::seed_from_u64(seed), InstanceBounds::default())
}

/// Whether every base point under `X` is hit by `φ`, by plain set inclusion.
fn image_covers(phi: &FinSetMap, f: &Bundle) -> bool {
    let hit: BTreeSet<usize> = phi.assignment().iter().copied().collect();
    f.projection().assignment().iter().all(|b| hit.contains(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cech_levels_have_fiber_power_size(seed in any::<u64>()) {
        let (phi, f) = instance(seed);
        let nerve = cech_nerve(&phi, &f, 3).unwrap();
        for n in 0..=3 {
            prop_assert_eq!(nerve.level(n).total().len(), cech_level_size(&phi, &f, n));
        }
    }

    #[test]
    fn beck_witnesses_lie_over_missed_points(seed in any::<u64>()) {
        let (phi, f) = instance(seed);
        let r = beck_codescent_check(&phi, &f).unwrap();
        prop_assert_eq!(r.holds, image_covers(&phi, &f));
        if let Some((_, base)) = r.witness {
            let b = phi.target().index_of(&base).unwrap();
            prop_assert!(phi.fiber(b).is_empty());
        }
    }

    #[test]
    fn coalgebras_exist_exactly_over_the_image(seed in any::<u64>()) {
        let (phi, f) = instance(seed);
        match detect_coalgebra(&phi, &f).unwrap() {
            CoalgebraSearch::Found(c) => {
                prop_assert!(image_covers(&phi, &f));
                prop_assert!(c.report.holds());
                let lifted = phi.after(&c.section).unwrap();
                prop_assert_eq!(lifted.assignment(), f.projection().assignment());
            }
            CoalgebraSearch::Refuted { element, base_point } => {
                prop_assert!(!image_covers(&phi, &f));
                let b = phi.target().index_of(&base_point).unwrap();
                let x = f.total().index_of(&element).unwrap();
                prop_assert_eq!(f.projection().apply(x), b);
                prop_assert!(phi.fiber(b).is_empty());
            }
        }
    }

    #[test]
    fn components_of_the_nerve_recover_the_bundle(seed in any::<u64>()) {
        let (phi, f) = instance(seed);
        prop_assume!(image_covers(&phi, &f));
        let nerve = cech_nerve(&phi, &f, 2).unwrap();
        let (pi0, _) = pi0_simplicial(&SliceCategory::new(phi.target().clone()), &nerve).unwrap();
        prop_assert_eq!(pi0.total().len(), f.total().len());
    }

    #[test]
    fn canonical_data_validate(seed in any::<u64>()) {
        let (phi, f) = instance(seed);
        prop_assert!(validate_codescent_datum(&can_upper_phi(&phi, &f).unwrap()).unwrap().holds());
    }
}
