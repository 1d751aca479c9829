use descent_core::algebra::catalog::{probes_for, ring_map_catalog};
use descent_core::algebra::{FgAbelianGroup, ModuleOverRing};
use descent_core::descent::{monad_t_phi, restricted_module_sdr};
use descent_core::kan::random::random_cosimplicial_group;
use descent_core::simplicial::{
    check_cosimplicial_identities, check_monad_laws, cobar, cohomotopy, matching_object, normalized_cochain,
    unnormalized_cohomology, Category, Modules, TruncatedCosimplicial,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normalized_matches_unnormalized(seed in any::<u64>()) {
        let x = random_cosimplicial_group(&mut ChaCha8Rng::seed_from_u64(seed));
        for s in 0..x.truncation() {
            prop_assert_eq!(
                cohomotopy(&x, s).unwrap().invariant_factors(),
                unnormalized_cohomology(&x, s).unwrap().invariant_factors()
            );
        }
    }

    #[test]
    fn matching_object_of_constant_is_the_object(orders in prop::collection::vec(prop_oneof![Just(0i64), Just(2), Just(5)], 0..=3)) {
        let m = ModuleOverRing::abelian(FgAbelianGroup::from_orders(&orders));
        let x = TruncatedCosimplicial::constant(&Modules, &m, 3).unwrap();
        let c = matching_object(&Modules, &x, 1).unwrap();
        prop_assert_eq!(c.object.underlying().invariant_factors(), m.underlying().invariant_factors());
        prop_assert!(c.injective && c.surjective);
    }
}

#[test]
fn cobar_objects_are_cosimplicial_on_the_catalog() {
    for e in ring_map_catalog() {
        let t = monad_t_phi(&e.map);
        for (p, m) in probes_for(e.map.source()).unwrap() {
            let laws = check_monad_laws(&t, std::slice::from_ref(&m)).unwrap();
            assert!(laws.holds(), "{} {}: {}", e.name, p, laws);
            let x = cobar(&t, &m, 3).unwrap();
            let r = check_cosimplicial_identities(&Modules, &x).unwrap();
            assert!(r.is_valid(), "{} {}: {}", e.name, p, r);
        }
    }
}

#[test]
fn certificates_retract_onto_the_base() {
    for e in ring_map_catalog() {
        let n = ModuleOverRing::regular(e.map.target());
        let c = restricted_module_sdr(&e.map, &n, 3).unwrap();
        let cert = c.certificate().unwrap_or_else(|| panic!("{} not certified", e.name));
        for (rho, eta) in cert.retractions.iter().zip(&cert.sections) {
            let composite = Modules.compose(rho, eta).unwrap();
            assert!(Modules.is_identity(&composite).unwrap(), "{}", e.name);
        }
    }
}

#[test]
fn normalized_complex_has_cohomotopy_as_homology() {
    let x = random_cosimplicial_group(&mut ChaCha8Rng::seed_from_u64(3));
    let c = normalized_cochain(&x).unwrap();
    for s in 0..x.truncation() {
        let h = descent_core::algebra::chain_homology(&c, -(s as i64)).unwrap();
        assert_eq!(h.invariant_factors(), cohomotopy(&x, s).unwrap().invariant_factors());
    }
}
