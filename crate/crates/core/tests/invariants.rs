use proptest::prelude::*;

use symrank::bounds::{closed_form, closed_form_exact, constructive_bound, epsilon, FieldKind};
use symrank::ff::{count_places_rational_ff, poly, GaloisField};
use symrank::mult::{self, verify, Place, VerifyMode};
use symrank::primes::{select_pair, Alpha, Family, FamilyKind, GapPolicy};

const PRIMES: [u64; 8] = [5, 7, 11, 13, 17, 19, 23, 101];

fn field_of(b: bool) -> FieldKind {
    if b {
        FieldKind::Quadratic
    } else {
        FieldKind::Prime
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn value_int_is_floor(pi in 0usize..8, n in 2u64..20_000, quad in any::<bool>()) {
        let p = PRIMES[pi];
        let r = closed_form(p, n, field_of(quad), &GapPolicy::dudek()).unwrap();
        prop_assert!(r.value_int as f64 <= r.value_real);
        prop_assert!(r.value_real < r.value_int as f64 + 1.0);
        prop_assert!(!r.valid_unconditional);
    }

    #[test]
    fn closed_form_increasing(pi in 0usize..8, n in 1u64..50_000, quad in any::<bool>()) {
        let p = PRIMES[pi];
        let f = field_of(quad);
        let pol = GapPolicy::dudek();
        let a = closed_form_exact(p, n, f, &pol).unwrap();
        let b = closed_form_exact(p, n + 1, f, &pol).unwrap();
        prop_assert!(a < b);
    }

    #[test]
    fn constructive_carries_witnesses(pi in 0usize..8, n in 20u64..20_000, quad in any::<bool>()) {
        let p = PRIMES[pi];
        if let Ok(r) = constructive_bound(p, n, field_of(quad), &GapPolicy::dudek()).unwrap() {
            let w = r.witnesses.as_ref().unwrap();
            prop_assert!(w.checks.iter().filter(|c| c.required).all(|c| c.holds));
            prop_assert_eq!(r.value_int as f64, r.value_real);
            prop_assert!(r.valid_unconditional);
            prop_assert!(w.l_k < w.l_k1);
        }
    }

    // The witness prime l_k sits at or below x = 2n/(p-3) (resp. n/(p-3)), so
    // l_k^(alpha-1) is at least eps_p(n).
    #[test]
    fn epsilon_at_witness_dominates(pi in 0usize..8, n in 20u64..100_000, quad in any::<bool>()) {
        let p = PRIMES[pi];
        let kind = FamilyKind::for_characteristic(p);
        let pair = select_pair(p, n, Family::new(field_of(quad), kind)).unwrap();
        let eps = epsilon(p, n, Alpha::TWO_THIRDS, kind).value;
        let at_lk = (pair.l_k as f64).powf(-1.0 / 3.0);
        prop_assert!(at_lk >= eps * (1.0 - 1e-12));
    }

    #[test]
    fn multiplication_commutes(qi in 0usize..6, n in 2usize..7, seed in any::<u64>()) {
        let q = [2u64, 3, 4, 5, 7, 9][qi];
        let Ok(a) = mult::build(q, n, true) else { return Ok(()); };
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let x: Vec<u64> = (0..n).map(|_| rng.gen_range(0..q)).collect();
            let y: Vec<u64> = (0..n).map(|_| rng.gen_range(0..q)).collect();
            prop_assert_eq!(a.multiply_coords(&x, &y), a.multiply_coords(&y, &x));
            prop_assert_eq!(a.multiply_coords(&x, &y), a.extension().mul(&x, &y));
        }
        let one = a.extension().one();
        let x: Vec<u64> = (0..n).map(|_| rng.gen_range(0..q)).collect();
        prop_assert_eq!(a.multiply_coords(&one, &x), x.clone());
        prop_assert_eq!(a.multiply_coords(&vec![0; n], &x), vec![0; n]);
    }
}

#[test]
fn rank_accounting() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
        for n in 2..=7 {
            let Ok(a) = mult::build(q, n, true) else {
                continue;
            };
            let rational = a
                .ledger()
                .iter()
                .filter(|e| matches!(e.place, Place::Node(_) | Place::Infinity))
                .count();
            let quads = a.ledger().len() - rational;
            assert_eq!(a.rank(), rational + 3 * quads, "q={q} n={n}");
            assert!(a.rank() >= 2 * n - 1);
            if quads == 0 {
                assert_eq!(a.rank(), 2 * n - 1);
            } else {
                assert!(a.rank() <= 3 * n);
            }
            let r = verify(&a, VerifyMode::Auto, 11).unwrap();
            assert!(r.failures.is_empty());
            assert!(r.rank as u64 <= r.envelope);
        }
    }
}

#[test]
fn plan_feasibility_matches_place_counts() {
    for q in [2u64, 3, 4, 5, 7] {
        let f = GaloisField::new(q).unwrap();
        let n2 = count_places_rational_ff(q, 2) as usize;
        for n in 2..=2 * q as usize + 4 {
            let need = 2 * n - 1;
            let rational = mult::plan_evaluation(&f, n, false).is_ok();
            assert_eq!(rational, q as usize + 1 >= need, "q={q} n={n}");
            let mixed = mult::plan_evaluation(&f, n, true).is_ok();
            // an odd shortfall costs one rational slot, so capacity is even-adjusted
            let slots = (q as usize + 1).min(need);
            let short = need - slots;
            let quads = short.div_ceil(2);
            assert_eq!(mixed, quads <= n2, "q={q} n={n}");
        }
    }
}

#[test]
fn quadratic_places_are_irreducible_and_distinct() {
    let f = GaloisField::new(3).unwrap();
    let quads: Vec<Vec<u64>> = poly::monic_irreducibles(&f, 2).collect();
    assert_eq!(quads.len(), 3);
    let plan = mult::plan_evaluation(&f, 5, true).unwrap();
    assert_eq!(plan.deg2_places, quads[..plan.deg2_places.len()].to_vec());
}
