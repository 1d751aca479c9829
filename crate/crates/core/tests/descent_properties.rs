use descent_core::algebra::catalog::{catalog_map, probes_for, ring_map_catalog};
use descent_core::algebra::{base_change, ChainComplex, ModuleOverRing};
use descent_core::descent::{
    amitsur_cohomology_range, beck_descent_check, can_phi, can_prim_unit, descent_coring, descent_e2_range,
    restricted_module_sdr, validate_descent_datum,
};

#[test]
fn canonical_descent_data_validate() {
    for e in ring_map_catalog() {
        for (p, m) in probes_for(e.map.source()).unwrap() {
            let d = can_phi(&e.map, &m).unwrap();
            let r = validate_descent_datum(&d).unwrap();
            assert!(r.holds(), "{} {}: {}", e.name, p, r);
        }
    }
}

#[test]
fn descent_corings_satisfy_their_axioms() {
    for e in ring_map_catalog() {
        let w = descent_coring(&e.map).unwrap();
        assert!(w.report.holds(), "{}: {}", e.name, w.report);
    }
}

#[test]
fn primitives_recover_modules_for_split_maps() {
    for name in ["id", "zz2", "zz3", "f2f2"] {
        let phi = catalog_map(name).unwrap();
        for (p, m) in probes_for(phi.source()).unwrap() {
            assert!(can_prim_unit(&phi, &m).unwrap().is_isomorphism(), "{} {}", name, p);
        }
    }
    let z2 = catalog_map("z2").unwrap();
    let u = can_prim_unit(&z2, &ModuleOverRing::regular(z2.source())).unwrap();
    assert!(!u.is_isomorphism());
    assert!(!u.injective);
}

#[test]
fn beck_holds_on_the_faithfully_flat_maps() {
    for name in ["id", "zz2", "zz3", "gauss", "f2f2"] {
        let phi = catalog_map(name).unwrap();
        for (p, m) in probes_for(phi.source()).unwrap() {
            let n = base_change(&m, &phi).unwrap();
            assert!(restricted_module_sdr(&phi, &n, 3).unwrap().is_certified(), "{} {}", name, p);
            assert!(beck_descent_check(&phi, &m).unwrap().holds, "{} {}", name, p);
        }
    }
    let z2 = catalog_map("z2").unwrap();
    assert!(!beck_descent_check(&z2, &ModuleOverRing::regular(z2.source())).unwrap().holds);
}

#[test]
fn amitsur_and_e2_agree_on_the_diagonal() {
    for name in ["id", "zz2", "z2", "f2f2", "gauss"] {
        let phi = catalog_map(name).unwrap();
        for (p, m) in probes_for(phi.source()).unwrap() {
            let a = amitsur_cohomology_range(&phi, &m, &m, 2).unwrap();
            let c = ChainComplex::concentrated(&m, 0);
            let b = descent_e2_range(&phi, &c, &c, 2, 0).unwrap();
            for s in 0..=2 {
                assert_eq!(a[s].invariant_factors(), b[s].invariant_factors(), "{} {} s = {}", name, p, s);
            }
        }
    }
}

#[test]
fn quotient_map_amitsur_cohomology() {
    // Along Z → Z/2 every level of Hom_Z(Z, Ω•Z) is Z/2 and all cofaces agree.
    let phi = catalog_map("z2").unwrap();
    let z = ModuleOverRing::regular(phi.source());
    let h = amitsur_cohomology_range(&phi, &z, &z, 2).unwrap();
    assert_eq!(h[0].to_string(), "Z/2");
    assert!(h[1].is_trivial() && h[2].is_trivial());
}
