use descent_core::algebra::catalog::{probes_for, ring_map_catalog};
use descent_core::algebra::{
    base_change, chain_homology, coequalizer, equalizer, hom_group, restrict, restrict_map, smith_normal_form,
    ChainComplex, FgAbelianGroup, GroupMap, IntegerMatrix, ModuleMap, ModuleOverRing,
};
use descent_core::descent::monad_t_phi;
use descent_core::simplicial::{Category, Modules, Monad};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntegerMatrix::from_entries(r, c, v.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

fn orders() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![Just(0i64), Just(2), Just(3), Just(4), Just(6)], 0..=3)
}

fn abelian(orders: &[i64]) -> ModuleOverRing {
    ModuleOverRing::abelian(FgAbelianGroup::from_orders(orders))
}

/// Maps out of a free group are well defined for any matrix.
fn free_map(rank: usize, target: &ModuleOverRing, entries: &[i64]) -> ModuleMap {
    let rows: Vec<Vec<i64>> = (0..target.generators()).map(|i| (0..rank).map(|j| entries[(i * rank + j) % entries.len()]).collect()).collect();
    let m = IntegerMatrix::from_rows(&rows, rank).unwrap();
    ModuleMap::new(abelian(&vec![0; rank]), target.clone(), m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn smith_form_contract(m in matrix(5, 9)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(&s.u.mul(&m).unwrap().mul(&s.v).unwrap(), &s.d);
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        let diag = s.diagonal();
        prop_assert_eq!(diag.len(), s.rank());
        for w in diag.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j || i >= s.rank() {
                    prop_assert!(s.d[(i, j)].is_zero());
                } else {
                    prop_assert!(s.d[(i, j)].is_positive());
                }
            }
        }
        prop_assert!(s.verify(&m).holds());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cokernel_ignores_generator_order(m in matrix(5, 9), seed in any::<u64>()) {
        let g = FgAbelianGroup::new(m.rows(), m.clone()).unwrap();
        let mut perm: Vec<usize> = (0..m.rows()).collect();
        let mut x = seed;
        for i in (1..perm.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let permuted = FgAbelianGroup::new(m.rows(), m.select_rows(&perm)).unwrap();
        prop_assert_eq!(g.invariant_factors(), permuted.invariant_factors());
    }

    #[test]
    fn equalizer_and_coequalizer_are_exact(
        rank in 0usize..=3,
        target in orders(),
        a in prop::collection::vec(-4i64..=4, 1..=9),
        b in prop::collection::vec(-4i64..=4, 1..=9),
    ) {
        let t = abelian(&target);
        let (f, g) = (free_map(rank, &t, &a), free_map(rank, &t, &b));
        let (_, incl) = equalizer(&f, &g).unwrap();
        let d = f.sub(&g).unwrap();
        prop_assert!(Modules.compose(&d, &incl).unwrap().is_zero().unwrap());
        let (_, proj) = coequalizer(&f, &g).unwrap();
        prop_assert!(Modules.compose(&proj, &f).unwrap().same_map(&Modules.compose(&proj, &g).unwrap()).unwrap());
        prop_assert!(proj.is_surjective().unwrap());
        // Exactly: the kernel of the projection is the image of f − g.
        let (k, kin) = proj.kernel().unwrap();
        let image = d.group_map().image().unwrap();
        prop_assert_eq!(k.underlying().invariant_factors(), image.group().invariant_factors());
        prop_assert!(kin.is_injective().unwrap());
    }

    #[test]
    fn zero_boundaries_give_objects_back(groups in prop::collection::vec(orders(), 1..=4), lo in -2i64..=2) {
        let z = descent_core::algebra::RingSpec::integers();
        let objects: Vec<ModuleOverRing> =
            groups.iter().map(|o| ModuleOverRing::scalar(&z, FgAbelianGroup::from_orders(o)).unwrap()).collect();
        let boundaries = objects.windows(2).map(|w| ModuleMap::zero(&w[1], &w[0])).collect();
        let c = ChainComplex::new(z, lo, objects.clone(), boundaries).unwrap();
        for (k, m) in objects.iter().enumerate() {
            let h = chain_homology(&c, lo + k as i64).unwrap();
            prop_assert_eq!(h.invariant_factors(), m.underlying().invariant_factors());
        }
    }
}

/// `Hom_A(A ⊗ M, N) → Hom_B(M, res N)`, `f ↦ res(f) ∘ η_M`.
#[test]
fn extension_restriction_adjunction_on_catalog() {
    for e in ring_map_catalog() {
        let phi = &e.map;
        let t = monad_t_phi(phi);
        let source_probes = probes_for(phi.source()).unwrap();
        let target_probes = probes_for(phi.target()).unwrap();
        for (pm, m) in &source_probes {
            let am = base_change(m, phi).unwrap();
            let eta = t.unit(m).unwrap();
            for (pn, n) in &target_probes {
                let upstairs = hom_group(&am, n).unwrap();
                let downstairs = hom_group(m, &restrict(n, phi).unwrap()).unwrap();
                assert_eq!(
                    upstairs.group().invariant_factors(),
                    downstairs.group().invariant_factors(),
                    "{} M = {} N = {}",
                    e.name,
                    pm,
                    pn
                );
                let columns: Vec<Vec<BigInt>> = upstairs
                    .representatives()
                    .unwrap()
                    .iter()
                    .map(|f| {
                        let down = Modules.compose(&restrict_map(f, phi).unwrap(), &eta).unwrap();
                        downstairs.coordinates(&down).unwrap()
                    })
                    .collect();
                let mat = IntegerMatrix::from_columns(downstairs.rank(), &columns).unwrap();
                let map = GroupMap::new(upstairs.group().clone(), downstairs.group().clone(), mat).unwrap();
                assert!(map.is_isomorphism().unwrap(), "{} M = {} N = {}", e.name, pm, pn);
            }
        }
    }
}

#[test]
fn invariant_factor_strings() {
    assert_eq!(FgAbelianGroup::from_orders(&[0, 0, 2]).to_string(), "Z^2 + Z/2");
    assert_eq!(FgAbelianGroup::zero().to_string(), "0");
    assert_eq!(FgAbelianGroup::from_orders(&[4, 2]).to_string(), "Z/2 + Z/4");
    assert_eq!(FgAbelianGroup::from_orders(&[2, 3]).to_string(), "Z/6");
}
