//! Randomized invariants over small codes.

mod common;

use cutcode_core::code::weight;
use cutcode_core::correspond;
use cutcode_core::minimal::{
    ab_sufficient, is_minimal_geometric, is_minimal_hdz, is_minimal_naive,
};
use cutcode_core::search::are_equivalent;
use cutcode_core::{pg, Elem, Field, ProjectiveSpace};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn code_from(seed: u64) -> cutcode_core::LinearCode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (q, k, n) = common::random_params(&mut rng);
    common::random_code(&mut rng, q, k, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn criteria_agree(seed in any::<u64>()) {
        let c = code_from(seed);
        let naive = is_minimal_naive(&c).unwrap();
        let hdz = is_minimal_hdz(&c).unwrap();
        prop_assert_eq!(naive.minimal, hdz.minimal);
        prop_assert_eq!(naive.minimal, is_minimal_geometric(&c).unwrap());
        if ab_sufficient(&c).unwrap().applies {
            prop_assert!(naive.minimal);
        }
        for w in [naive.witness, hdz.witness].into_iter().flatten() {
            let (a, b) = w;
            prop_assert!(c.contains(&a) && c.contains(&b));
            prop_assert!(weight(&a) < weight(&b));
            prop_assert!(a.iter().zip(&b).all(|(x, y)| x.is_zero() || !y.is_zero()));
        }
    }

    #[test]
    fn monomial_maps_keep_verdicts(seed in any::<u64>()) {
        let c = code_from(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let d = common::shuffle(&mut rng, &c);
        prop_assert_eq!(
            is_minimal_naive(&c).unwrap().minimal,
            is_minimal_naive(&d).unwrap().minimal
        );
        prop_assert_eq!(c.weight_distribution().unwrap(), d.weight_distribution().unwrap());
        let cert = are_equivalent(&c, &d, &Default::default()).unwrap();
        prop_assert!(cert.is_some_and(|cert| cert.verify(&c, &d)));
    }

    #[test]
    fn psi_phi_round_trip(seed in any::<u64>()) {
        let c = code_from(seed);
        let back = correspond::psi(&correspond::phi(&c).unwrap()).unwrap();
        let cert = are_equivalent(&c, &back, &Default::default()).unwrap();
        prop_assert!(cert.is_some_and(|cert| cert.verify(&c, &back)));
    }

    #[test]
    fn weights_are_hyperplane_complements(seed in any::<u64>()) {
        let c = code_from(seed);
        let sys = correspond::phi(&c).unwrap();
        for p in sys.space().points() {
            let w = weight(&c.encode(&p.coords).unwrap());
            prop_assert_eq!(correspond::weight_from_system(&sys, &p.coords).unwrap(), w);
        }
        let wd = c.weight_distribution().unwrap();
        let q = c.field().q() as u64;
        prop_assert_eq!(wd.total(), q.pow(c.k() as u32));
        prop_assert_eq!(wd.get(0), 1);
        prop_assert_eq!(wd.weight_sum(), c.n() as u64 * (q - 1) * q.pow(c.k() as u32 - 1));
    }

    #[test]
    fn span_is_monotone(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 4]), n in 2usize..4) {
        use rand::Rng;
        let space = ProjectiveSpace::new(Field::new(q).unwrap(), n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let np = space.num_points();
        let a: Vec<_> = (0..2).map(|_| space.point(rng.gen_range(0..np))).collect();
        let mut ab = a.clone();
        ab.push(space.point(rng.gen_range(0..np)));
        let sa = space.span(&a).unwrap();
        let sab = space.span(&ab).unwrap();
        prop_assert!(space.flat_points(&sa).is_subset(&space.flat_points(&sab)));
        let again = space.flat_from_vectors(sa.basis()).unwrap();
        prop_assert_eq!(again, sa);
    }

    #[test]
    fn normalize_is_idempotent(q in prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9]), v in prop::collection::vec(0u8..64, 4)) {
        let f = Field::new(q).unwrap();
        let v: Vec<Elem> = v.into_iter().map(|x| Elem(x % q as u8)).collect();
        match pg::normalize(&f, &v) {
            Ok(w) => prop_assert_eq!(pg::normalize(&f, &w).unwrap(), w),
            Err(_) => prop_assert!(v.iter().all(|x| x.is_zero())),
        }
    }
}
