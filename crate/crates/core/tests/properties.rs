//! Invariants over randomly generated structures, checked against the naive
//! oracles in `common`.

mod common;

use bihom_core::constructions::{yau_twist_assoc, TheoremId};
use bihom_core::discovery::catalogue::{dx2_product, n2_product};
use bihom_core::discovery::{search, SearchSpec, SearchTarget};
use bihom_core::exactlin::{LinearMap, Scalar};
use bihom_core::io::{self, Document};
use bihom_core::structures::{
    check_bihom_associative, check_hom_novikov, check_hom_prelie, BiHomAlgebra, HomPreLie,
};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_display_parses_back(p in -1_000_000i64..1_000_000, q in 1i64..10_000) {
        let x = Scalar::new(p, q).unwrap();
        let text = x.to_string();
        prop_assert_eq!(&Scalar::parse_strict(&text).unwrap(), &x);
        if q > 1 && p != 0 {
            let doubled = format!("{}/{}", 2 * x.numer(), 2 * x.denom());
            prop_assert!(Scalar::parse_strict(&doubled).is_err());
        }
    }

    #[test]
    fn bihom_witness_is_the_first_failure(seed in any::<u64>(), d in 1usize..=3) {
        let mut r = rng(seed);
        let mu = random_cube(&mut r, d);
        let alpha = random_map(&mut r, d);
        let beta = random_map(&mut r, d);
        let v = check_bihom_associative(&BiHomAlgebra::new(mu.clone(), alpha.clone(), beta.clone())).unwrap();
        let oracle = bihom_algebra_witness(&mu, &alpha, &beta);
        prop_assert_eq!(v.passed, oracle.is_none());
        let found = v.witness.as_ref().map(|w| (w.law.as_str(), w.indices.clone()));
        prop_assert_eq!(found, oracle);
    }

    #[test]
    fn novikov_implies_prelie(seed in any::<u64>(), d in 1usize..=3) {
        let mut r = rng(seed);
        let p = HomPreLie::new(random_cube(&mut r, d), random_map(&mut r, d));
        let novikov = check_hom_novikov(&p).unwrap().passed;
        let prelie = check_hom_prelie(&p).unwrap().passed;
        prop_assert!(!novikov || prelie);
        prop_assert_eq!(novikov, novikov_holds(&p.mu, &p.alpha));
        prop_assert_eq!(prelie, prelie_holds(&p.mu, &p.alpha));
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), d in 1usize..=3) {
        let mut r = rng(seed);
        let a = BiHomAlgebra::new(random_cube(&mut r, d), random_map(&mut r, d), random_map(&mut r, d));
        let doc = Document::BiHomAlgebra(a);
        let text = io::serialize(&doc);
        prop_assert_eq!(io::parse(&text).unwrap(), doc);
        prop_assert_eq!(io::canonical(&text).unwrap(), text);
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>(), d in 1usize..=4) {
        let p = random_invertible(&mut rng(seed), d);
        let inv = p.invert().unwrap();
        prop_assert_eq!(p.compose(&inv).unwrap(), LinearMap::identity(d));
        prop_assert_eq!(inv.compose(&p).unwrap(), LinearMap::identity(d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn twists_by_searched_pairs_are_bihom_associative(seed in any::<u64>(), dx in any::<bool>()) {
        let base = if dx { dx2_product() } else { n2_product() };
        let p = random_invertible(&mut rng(seed), 2);
        let a = BiHomAlgebra::classical(transport_product(&base, &p));
        let spec = SearchSpec::new(SearchTarget::AlgebraMapPair);
        let found = search(&spec, &a).unwrap();
        prop_assert_eq!(&found, &search(&spec, &a).unwrap());
        prop_assert!(!found.is_empty());
        for f in &found {
            let (alpha, beta) = f.as_pair().unwrap();
            let t = yau_twist_assoc(&a.mu, alpha, beta).unwrap();
            prop_assert!(check_bihom_associative(&t).unwrap().passed);
            prop_assert!(bihom_assoc_witness(&t.mu, alpha, beta).is_none());
        }
    }
}

#[test]
fn theorem_ids_parse_back() {
    for id in TheoremId::ALL {
        assert_eq!(id.to_string().parse::<TheoremId>().unwrap(), id);
    }
}
