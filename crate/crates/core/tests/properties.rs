use std::collections::BTreeSet;
use std::sync::Arc;

use dendrotensor::level::{omega_mor, omega_obj, retract_witness, SimplicialOperator};
use dendrotensor::lurie::{gen_hom_count, FreeForestOperad, PtdMap};
use dendrotensor::omega::{compose, hom, hom_count, validate, OperadMap};
use dendrotensor::random::{random_forest, random_operator, random_simplex, random_tree};
use dendrotensor::shuffle::{max_product, shuffles};
use dendrotensor::tree::{parse_forest, parse_tree};
use dendrotensor::Forest;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trees_print_and_parse_back(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_tree(&mut r, 12, 0.2, "e");
        prop_assert_eq!(parse_tree(&t.to_string()).unwrap(), t);
        let f = random_forest(&mut r, 12, 3, 0.2, "f");
        prop_assert_eq!(parse_forest(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn every_inner_edge_cuts_and_regrafts(seed in any::<u64>()) {
        let t = random_tree(&mut rng(seed), 10, 0.2, "e");
        for b in t.inner_edges() {
            let (lower, upper) = t.cut_at(&b).unwrap();
            prop_assert_eq!(lower.edge_count() + upper.edge_count(), t.edge_count() + 1);
            prop_assert_eq!(lower.graft(&b, &upper).unwrap(), t.clone());
        }
    }

    #[test]
    fn hom_sets_validate_and_match_counts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = Forest::from(random_tree(&mut r, 4, 0.2, "s"));
        let t = Forest::from(random_tree(&mut r, 5, 0.2, "t"));
        let maps = hom(&s, &t);
        prop_assert_eq!(maps.len() as u128, hom_count(&s, &t));
        prop_assert_eq!(gen_hom_count(&s, &FreeForestOperad::new(t.clone())), hom_count(&s, &t));
        let distinct: BTreeSet<_> = maps.iter().map(|m| m.edge_map().clone()).collect();
        prop_assert_eq!(distinct.len(), maps.len());
        for m in &maps {
            prop_assert!(validate(m).is_ok());
        }
    }

    #[test]
    fn composition_is_associative_and_unital(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = Forest::from(random_tree(&mut r, 3, 0.2, "a"));
        let b = Forest::from(random_tree(&mut r, 4, 0.2, "b"));
        let c = Forest::from(random_tree(&mut r, 4, 0.2, "c"));
        let d = Forest::from(random_tree(&mut r, 5, 0.2, "d"));
        let (fs, gs, hs) = (hom(&a, &b), hom(&b, &c), hom(&c, &d));
        for f in fs.iter().take(4) {
            prop_assert_eq!(&compose(f, &OperadMap::identity(Arc::new(b.clone()))).unwrap(), f);
            prop_assert_eq!(&compose(&OperadMap::identity(Arc::new(a.clone())), f).unwrap(), f);
            for g in gs.iter().take(4) {
                for h in hs.iter().take(4) {
                    let left = compose(&compose(f, g).unwrap(), h).unwrap();
                    let right = compose(f, &compose(g, h).unwrap()).unwrap();
                    prop_assert_eq!(&left, &right);
                    prop_assert!(validate(&left).is_ok());
                }
            }
        }
    }

    #[test]
    fn omega_is_a_functor(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_simplex(&mut r, 4, 3);
        let phi = random_operator(&mut r, a.top(), 3);
        let psi = random_operator(&mut r, phi.source(), 3);
        let id = omega_mor(&SimplicialOperator::identity(a.top()), &a).unwrap();
        prop_assert_eq!(id, OperadMap::identity(Arc::new(omega_obj(&a))));
        let whole = omega_mor(&phi.after(&psi).unwrap(), &a).unwrap();
        let inner = omega_mor(&psi, &a.restrict(&phi).unwrap()).unwrap();
        let outer = omega_mor(&phi, &a).unwrap();
        prop_assert!(validate(&outer).is_ok());
        prop_assert_eq!(whole, compose(&inner, &outer).unwrap());
    }

    #[test]
    fn forests_are_retracts_of_level_forests(seed in any::<u64>()) {
        let f = random_forest(&mut rng(seed), 10, 3, 0.2, "e");
        let w = retract_witness(&f).unwrap();
        let rs = compose(&w.section, &w.retraction).unwrap();
        prop_assert_eq!(rs, OperadMap::identity(Arc::new(f)));
    }

    #[test]
    fn shuffles_obey_the_root_and_max_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let factors = vec![random_tree(&mut r, 4, 0.3, "a"), random_tree(&mut r, 4, 0.3, "b")];
        let all = shuffles(&factors);
        prop_assert!(!all.is_empty());
        let product = max_product(&factors);
        for s in &all {
            prop_assert_eq!(s.root_tuple().coords(), &[factors[0].root().clone(), factors[1].root().clone()][..]);
            prop_assert_eq!(&s.max_tuples(), &product);
        }
    }

    #[test]
    fn pointed_maps_factor_as_active_after_inert(m in 0usize..5, n in 0usize..5, pick in any::<u64>()) {
        let maps: Vec<PtdMap> = PtdMap::all(m, n).collect();
        let a = &maps[(pick % maps.len() as u64) as usize];
        let (inert, active) = a.factorize();
        prop_assert!(inert.is_inert() && active.is_active());
        prop_assert_eq!(&active.after(&inert).unwrap(), a);
    }
}
