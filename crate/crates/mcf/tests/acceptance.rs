//! Acceptance gate: ten end-to-end checks, one per advertised guarantee,
//! each enforced at an explicit tolerance or time budget and reporting a
//! single PASS line (run with `--nocapture` to see them).

mod common;

use common::*;
use mcf::{
    check_e_remark, check_factorial_identity, convergents_by_matrix,
    convergents_by_tail_recurrence, count_b, count_c, count_circular, count_degree_m, count_fast,
    count_mixed, enumerate_circular, enumerate_mixed, enumerate_plain, estimate_limit,
    evaluate_finite, jacobi_expand, perron_expand, HeightConditions, PartialQuotients,
};
use num_bigint::BigInt;
use rand::Rng;
use std::time::Instant;

/// The value of the factorial-sum expansion, to full f64 precision.
const FACTORIAL_LIMIT: f64 = 4.547520543350137;

#[test]
fn a01_factorial_numerators_hold_to_depth_twenty() {
    let clock = Instant::now();
    let report = check_factorial_identity(20);
    assert!(
        report.holds(),
        "first failure at index {:?}",
        report.witness
    );
    assert_eq!(report.verified_up_to, 20);
    assert_eq!(report.max_abs_error, 0.0);
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("PASS 01: A_n = (n+2)! + (n+1)! + n! exactly for n <= 20 ({elapsed:?})");
}

#[test]
fn a02_limit_estimates_settle_on_the_constant() {
    let mut previous = estimate_limit(10);
    let mut largest_gap: f64 = 0.0;
    for n in 11..=15 {
        let value = estimate_limit(n);
        largest_gap = largest_gap.max((value - previous).abs());
        previous = value;
    }
    assert!(
        largest_gap < 1e-5,
        "largest consecutive gap {largest_gap:e}"
    );
    let error = (estimate_limit(15) - FACTORIAL_LIMIT).abs();
    assert!(error < 1e-4, "distance from the constant {error:e}");
    println!(
        "PASS 02: limit estimates Cauchy below 1e-5 on depths 10..=15 \
         (largest gap {largest_gap:.2e}) and within 1e-4 of {FACTORIAL_LIMIT} \
         (off by {error:.2e})"
    );
}

#[test]
fn a03_e_expansion_converges_with_factorial_numerators() {
    let report = check_e_remark(12);
    assert!(
        report.holds(),
        "first failure at index {:?}",
        report.witness
    );
    assert!(
        report.max_abs_error < 1e-6,
        "distance from e at depth 12: {:e}",
        report.max_abs_error
    );
    let deeper = check_e_remark(15);
    assert!(
        deeper.holds(),
        "first failure at index {:?}",
        deeper.witness
    );
    assert_eq!(deeper.verified_up_to, 15);
    println!(
        "PASS 03: p_n = (n+1)! + n! exactly for n <= 15, value within 1e-6 of e \
         at depth 12 (off by {:.2e})",
        report.max_abs_error
    );
}

#[test]
fn a04_strip_counts_equal_literal_enumeration() {
    fn verify(h: &HeightConditions) {
        let oracle = oracle_strip_tilings(h.a(), h.b(), h.c());
        assert_eq!(
            count_fast(h).unwrap(),
            BigInt::from(oracle.len()),
            "count mismatch on a={:?} b={:?} c={:?}",
            h.a(),
            h.b(),
            h.c()
        );
        assert_eq!(enumerate_plain(h).unwrap(), as_tilings(oracle));
    }

    let clock = Instant::now();
    verify(&HeightConditions::new(&[], &[], &[]).unwrap());
    for len in 1..=6usize {
        for x in 1..=3i64 {
            for y in 1..=3i64 {
                for z in 1..=3i64 {
                    verify(
                        &HeightConditions::new(&vec![x; len], &vec![y; len], &vec![z; len])
                            .unwrap(),
                    );
                }
            }
        }
    }

    let mut rng = seeded(0x0404);
    for _ in 0..500 {
        let len = rng.gen_range(0..=6);
        verify(&random_plain(&mut rng, len, 3));
    }

    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "PASS 04: tiling counts equal literal enumeration on 163 grid instances \
         and 500 random boards ({elapsed:?})"
    );
}

#[test]
fn a05_auxiliary_counts_match_their_boards_and_the_matrices() {
    let mut rng = seeded(0x0505);
    for _ in 0..250 {
        let len = rng.gen_range(1..=6);
        let sampled = random_plain(&mut rng, len, 3);
        let mut c = sampled.c().to_vec();
        c[0] = 1; // align with the expansion normalisation
        let h = HeightConditions::new(sampled.a(), sampled.b(), &c).unwrap();

        // Dropping the first cell is the literal definition of the
        // denominator count.
        let dropped = oracle_strip_tilings(&h.a()[1..], &h.b()[1..], &h.c()[1..]);
        assert_eq!(count_c(&h).unwrap(), BigInt::from(dropped.len()));

        // A board extended to the left, whose first stack must cover the new
        // cell: a domino (bound b_0) leaves cells 1.., a bar (bound c_1)
        // leaves cells 2.. .
        let after_domino = BigInt::from(h.b()[0]) * BigInt::from(dropped.len());
        let after_bar = if len >= 2 {
            let rest = oracle_strip_tilings(&h.a()[2..], &h.b()[2..], &h.c()[2..]);
            BigInt::from(h.c()[1]) * BigInt::from(rest.len())
        } else {
            BigInt::from(0)
        };
        assert_eq!(count_b(&h).unwrap(), after_domino + after_bar);

        // And all three agree with the matrix route on the same sequences.
        let pq = PartialQuotients::from_i64(h.a(), h.b(), h.c()).unwrap();
        let last = convergents_by_matrix(&pq).pop().unwrap();
        assert_eq!(count_fast(&h).unwrap(), last.a);
        assert_eq!(count_b(&h).unwrap(), last.b);
        assert_eq!(count_c(&h).unwrap(), last.c);
    }
    println!(
        "PASS 05: prefixed and shifted counts match their literal boards and the \
         matrix convergents on 250 instances"
    );
}

#[test]
fn a06_ring_counts_match_the_seam_oracle() {
    let mut rng = seeded(0x0606);
    for _ in 0..220 {
        let len = rng.gen_range(0..=7);
        let h = random_plain(&mut rng, len, 3);
        let expected = oracle_ring_count(&h);
        assert_eq!(
            count_circular(&h).unwrap(),
            expected.clone(),
            "ring count mismatch on a={:?} b={:?} c={:?}",
            h.a(),
            h.b(),
            h.c()
        );
        let all = enumerate_circular(&h).unwrap();
        assert_eq!(BigInt::from(all.len()), expected);
        let mut unique = all.clone();
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), all.len(), "duplicate ring tilings");
    }
    println!("PASS 06: ring counts match the seam-decomposition oracle on 220 boards");
}

#[test]
fn a07_signed_counts_match_the_discard_oracle() {
    let clock = Instant::now();

    let showcase = HeightConditions::new(
        &[2, 3, 1, 2, 2, 3],
        &[0, -1, 3, 3, 2, -1],
        &[0, 0, -2, 2, 1, -1],
    )
    .unwrap();
    assert_eq!(count_mixed(&showcase), BigInt::from(245));
    assert_eq!(oracle_mixed_count(&showcase), BigInt::from(245));

    let pair_drop = HeightConditions::new(&[3, 4], &[0, -2], &[0, 0]).unwrap();
    assert_eq!(count_mixed(&pair_drop), BigInt::from(10));
    let triple = HeightConditions::new(&[2, 2, 3], &[0, 1, -1], &[0, 0, 1]).unwrap();
    assert_eq!(count_mixed(&triple), BigInt::from(14));

    let mut rng = seeded(0x0707);
    for i in 0..500 {
        let len = rng.gen_range(1..=6);
        let h = random_mixed(&mut rng, len);
        let expected = oracle_mixed_count(&h);
        assert_eq!(
            count_mixed(&h),
            expected.clone(),
            "instance {i}: a={:?} b={:?} c={:?}",
            h.a(),
            h.b(),
            h.c()
        );
        assert_eq!(
            BigInt::from(enumerate_mixed(&h).unwrap().len()),
            expected,
            "instance {i} enumeration disagrees"
        );
    }

    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    println!(
        "PASS 07: signed counts match the discard oracle on 500 random boards plus \
         the showcase instances ({elapsed:?})"
    );
}

#[test]
fn a08_numerators_ignore_their_padding_entries() {
    let mut rng = seeded(0x0808);
    for _ in 0..120 {
        let pq = random_quotients(&mut rng, 10);
        let orig = convergents_by_tail_recurrence(&pq);

        let mut b = pq.b().to_vec();
        b[0] = BigInt::from(rng.gen_range(-9i64..=9));
        let mut c = pq.c().to_vec();
        if c.len() > 1 {
            c[1] = BigInt::from(rng.gen_range(-9i64..=9));
        }
        let varied = PartialQuotients::new(pq.a().to_vec(), b, c).unwrap();
        for (o, v) in orig.iter().zip(&convergents_by_tail_recurrence(&varied)) {
            assert_eq!(o.a, v.a, "A_n moved with b_0/c_1");
        }

        let mut a = pq.a().to_vec();
        a[0] = BigInt::from(rng.gen_range(-9i64..=9));
        let mut b = pq.b().to_vec();
        if b.len() > 1 {
            b[1] = BigInt::from(rng.gen_range(-9i64..=9));
        }
        let mut c = pq.c().to_vec();
        if c.len() > 2 {
            c[2] = BigInt::from(rng.gen_range(-9i64..=9));
        }
        let varied = PartialQuotients::new(a, b, c).unwrap();
        for (o, v) in orig.iter().zip(&convergents_by_tail_recurrence(&varied)) {
            assert_eq!(o.b, v.b, "B_n moved with a_0/b_1/c_2");
        }
    }
    println!(
        "PASS 08: A_n ignores (b_0, c_1) and B_n ignores (a_0, b_1, c_2) on 120 \
         random expansions"
    );
}

#[test]
fn a09_rational_pairs_round_trip_through_expansion() {
    let mut rng = seeded(0x0909);
    let mut verified = 0usize;
    let mut attempts = 0usize;
    while verified < 300 {
        attempts += 1;
        assert!(
            attempts <= 4000,
            "only {verified} clean expansions in 4000 pairs"
        );
        let alpha = rational(rng.gen_range(1..=50), rng.gen_range(1..=50));
        let beta = rational(rng.gen_range(1..=50), rng.gen_range(1..=50));

        let result = jacobi_expand(&alpha, &beta, 30);
        let general = perron_expand(&[alpha.clone(), beta.clone()], 30);
        assert_eq!(general.terminated, result.terminated);
        assert_eq!(general.steps, result.steps);
        for (i, row) in general.quotients.rows().iter().enumerate() {
            assert_eq!(row[0], result.quotients.a()[i]);
            assert_eq!(row[1], result.quotients.b()[i]);
        }

        if result.terminated {
            let pair = evaluate_finite(&result.quotients).unwrap();
            assert_eq!(pair.first, alpha, "first value did not round-trip");
            assert_eq!(pair.second, beta, "second value did not round-trip");
            verified += 1;
        }
    }
    println!(
        "PASS 09: {verified} rational pairs round-tripped exactly within 30 steps \
         ({attempts} sampled), with the degree-2 general expansion in lockstep"
    );
}

#[test]
fn a10_general_degree_counts_specialise_correctly() {
    // Unit square and domino bounds: the classic one-two tiling numbers
    // 1, 2, 3, 5, 8, …
    let bounds = vec![vec![1i64; 21], vec![1i64; 21]];
    let (mut prev, mut cur) = (BigInt::from(1), BigInt::from(1));
    for n in 0..=20usize {
        assert_eq!(count_degree_m(&bounds, n).unwrap(), cur, "at depth {n}");
        let next = &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }

    // Degree-2 tables collapse to the three-tile counter.
    let mut rng = seeded(0x0a0a);
    for _ in 0..100 {
        let len = rng.gen_range(1..=8);
        let h = random_plain(&mut rng, len, 3);
        let table = vec![h.a().to_vec(), h.b().to_vec(), h.c().to_vec()];
        assert_eq!(
            count_degree_m(&table, len - 1).unwrap(),
            count_fast(&h).unwrap()
        );
    }
    println!(
        "PASS 10: unit bounds reproduce the two-tile numbers to depth 20 and \
         degree-2 tables match the tile counter on 100 boards"
    );
}

fn rational(num: i64, den: i64) -> mcf::BigRational {
    mcf::BigRational::new(BigInt::from(num), BigInt::from(den))
}
