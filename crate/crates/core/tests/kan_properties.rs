//! Properties of left Kan extensions and the comonad they induce, on seeded
//! random functors between free categories.

use descent_core::kan::random::{
    random_free_category, random_full_functor, random_functor, random_group_diagram, random_set_diagram, CategoryBounds,
};
use descent_core::kan::{
    assembly_pi0_check, fullness_identity_check, kan_comonad, left_kan, linearize_diagram, CatFunctor, FreeCategory, Sets,
};
use descent_core::simplicial::{check_comonad_laws, Comonad, Modules};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random functor between two random free categories, with its target.
fn random_pair(seed: u64) -> Option<(FreeCategory, FreeCategory, CatFunctor)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bounds = CategoryBounds::default();
    let source = random_free_category(&mut rng, bounds);
    let target = random_free_category(&mut rng, bounds);
    let phi = random_functor(&mut rng, &source, &target.category)?;
    Some((source, target, phi))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn comonad_laws_hold_for_any_functor(seed in any::<u64>()) {
        let Some((_, target, phi)) = random_pair(seed) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let y = random_set_diagram(&mut rng, &target);
        let g = random_group_diagram(&mut rng, &target);
        let laws = check_comonad_laws(&kan_comonad(Sets, &phi).unwrap(), &[y]).unwrap();
        prop_assert!(laws.holds(), "{}", laws);
        let laws = check_comonad_laws(&kan_comonad(Modules, &phi).unwrap(), &[g]).unwrap();
        prop_assert!(laws.holds(), "{}", laws);
    }

    #[test]
    fn full_functors_fix_values_on_their_image(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bounds = CategoryBounds::default();
        let d = random_free_category(&mut rng, bounds);
        let phi = random_full_functor(&mut rng, &d.category, bounds);
        let y = random_set_diagram(&mut rng, &d);
        let k = kan_comonad(Sets, &phi).unwrap();
        for c in 0..phi.source().object_count() {
            prop_assert!(fullness_identity_check(&k, &y, c).unwrap().holds());
        }
    }

    #[test]
    fn linearization_commutes_with_extension(seed in any::<u64>()) {
        let Some((source, target, phi)) = random_pair(seed) else { return Ok(()) };
        let x = random_set_diagram(&mut ChaCha8Rng::seed_from_u64(seed ^ 2), &source);
        let lx = linearize_diagram(&x).unwrap();
        for d in 0..target.category.object_count() {
            let sets = left_kan(&Sets, &phi, &x, d).unwrap().object;
            let groups = left_kan(&Modules, &phi, &lx, d).unwrap().object;
            let inv = groups.underlying().invariant_factors();
            prop_assert_eq!(inv.rank, sets.len());
            prop_assert!(inv.torsion.is_empty());
        }
    }

    #[test]
    fn cofree_diagrams_assemble(seed in any::<u64>()) {
        let Some((_, target, phi)) = random_pair(seed) else { return Ok(()) };
        let y = random_set_diagram(&mut ChaCha8Rng::seed_from_u64(seed ^ 3), &target);
        let k = kan_comonad(Sets, &phi).unwrap();
        let cofree = k.apply(&y).unwrap();
        for d in 0..target.category.object_count() {
            prop_assert!(assembly_pi0_check(&k, &cofree, d).unwrap().holds);
        }
    }
}
