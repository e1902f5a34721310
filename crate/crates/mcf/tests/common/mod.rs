//! Shared generators and written-from-scratch oracles for the integration
//! suites. Everything here recomputes results by the most literal available
//! definition — nested fractions, the Euclidean algorithm, direct placement
//! recursion — so agreement with the library routines is real evidence, not
//! an echo.

#![allow(dead_code)] // each test target uses its own subset

use mcf::{HeightConditions, PartialQuotients, Placement, TileKind, Tiling};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A reproducible generator; each suite picks its own fixed seed.
pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random partial quotients: `1..=max_len` triples with entries in
/// `[-3, 5]` and the leading bar coefficient pinned to 1.
pub fn random_quotients(rng: &mut StdRng, max_len: usize) -> PartialQuotients {
    let len = rng.gen_range(1..=max_len);
    let entry = |rng: &mut StdRng| rng.gen_range(-3i64..=5);
    let a: Vec<i64> = (0..len).map(|_| entry(rng)).collect();
    let b: Vec<i64> = (0..len).map(|_| entry(rng)).collect();
    let mut c: Vec<i64> = (0..len).map(|_| entry(rng)).collect();
    c[0] = 1;
    PartialQuotients::from_i64(&a, &b, &c).expect("generated shape is valid")
}

/// Random plain (nonnegative) height conditions for a board of `len` cells
/// with bounds at most `max`.
pub fn random_plain(rng: &mut StdRng, len: usize, max: i64) -> HeightConditions {
    let a: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=max)).collect();
    let b: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=max)).collect();
    let c: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=max)).collect();
    HeightConditions::new(&a, &b, &c).expect("generated bounds are valid")
}

/// The smallest square bound satisfying the mixed-mode sign condition for a
/// position with signed bounds `b`, `c`.
pub fn min_square_bound(b: i64, c: i64) -> i64 {
    match (b < 0, c < 0) {
        (false, false) => 1,
        (true, false) => -b + 1,
        (false, true) => {
            if b > -c {
                1
            } else {
                -c + 1
            }
        }
        (true, true) => -b - c + 1,
    }
}

/// Random signed height conditions: domino and bar bounds in `[-2, 4]`,
/// square bounds sampled in `[1, 5]` and then raised to the smallest legal
/// value where the sample falls short.
pub fn random_mixed(rng: &mut StdRng, len: usize) -> HeightConditions {
    let b: Vec<i64> = (0..len).map(|_| rng.gen_range(-2i64..=4)).collect();
    let c: Vec<i64> = (0..len).map(|_| rng.gen_range(-2i64..=4)).collect();
    let a: Vec<i64> = (0..len)
        .map(|i| rng.gen_range(1i64..=5).max(min_square_bound(b[i], c[i])))
        .collect();
    HeightConditions::new(&a, &b, &c).expect("square bounds were raised to legal values")
}

/// Evaluates an expansion by literal nesting from the bottom:
/// `α_i = a_i + β_{i+1}/α_{i+1}` and `β_i = b_i + c_{i+1}/α_{i+1}`.
/// Returns `None` when an intermediate `α` vanishes and the nested form is
/// undefined.
pub fn nested_value(pq: &PartialQuotients) -> Option<(BigRational, BigRational)> {
    let n = pq.n();
    let mut alpha = BigRational::from(pq.a()[n].clone());
    let mut beta = BigRational::from(pq.b()[n].clone());
    for i in (0..n).rev() {
        if alpha.is_zero() {
            return None;
        }
        let next_alpha = BigRational::from(pq.a()[i].clone()) + &beta / &alpha;
        beta = BigRational::from(pq.b()[i].clone())
            + BigRational::from(pq.c()[i + 1].clone()) / &alpha;
        alpha = next_alpha;
    }
    Some((alpha, beta))
}

/// Continued-fraction quotients of `num/den` (`den > 0`) by the Euclidean
/// algorithm with floor division.
pub fn euclid_quotients(mut num: i64, mut den: i64) -> Vec<i64> {
    assert!(den > 0);
    let mut out = Vec::new();
    loop {
        out.push(num.div_euclid(den));
        let r = num.rem_euclid(den);
        if r == 0 {
            return out;
        }
        num = den;
        den = r;
    }
}

/// Every stacked tiling of a strip with the given nonnegative bounds, by the
/// most literal recursion available: at the leftmost uncovered cell, try
/// every square stack, every domino stack, every bar stack.
pub fn oracle_strip_tilings(a: &[i64], b: &[i64], c: &[i64]) -> Vec<Vec<Placement>> {
    fn go(
        a: &[i64],
        b: &[i64],
        c: &[i64],
        cell: usize,
        acc: &mut Vec<Placement>,
        out: &mut Vec<Vec<Placement>>,
    ) {
        if cell == a.len() {
            out.push(acc.clone());
            return;
        }
        for height in 1..=a[cell] {
            acc.push(Placement {
                kind: TileKind::Square,
                start: cell,
                height,
            });
            go(a, b, c, cell + 1, acc, out);
            acc.pop();
        }
        if cell + 1 < a.len() {
            for height in 1..=b[cell + 1] {
                acc.push(Placement {
                    kind: TileKind::Domino,
                    start: cell,
                    height,
                });
                go(a, b, c, cell + 2, acc, out);
                acc.pop();
            }
        }
        if cell + 2 < a.len() {
            for height in 1..=c[cell + 2] {
                acc.push(Placement {
                    kind: TileKind::Bar,
                    start: cell,
                    height,
                });
                go(a, b, c, cell + 3, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a, b, c, 0, &mut Vec::new(), &mut out);
    out
}

/// Wraps raw placement lists in the library's tiling type, for whole-value
/// comparisons against the library enumerators.
pub fn as_tilings(raw: Vec<Vec<Placement>>) -> Vec<Tiling> {
    raw.into_iter()
        .map(|placements| Tiling { placements })
        .collect()
}

/// Counts ring tilings from the definition: the seam cell either belongs to
/// no wrapping stack (a plain strip remains) or anchors a wrapping domino
/// over the last and first cells (bounded by `b_0`) or a wrapping bar over
/// the last and first two cells (bounded by `c_1`), leaving a shorter strip.
pub fn oracle_ring_count(h: &HeightConditions) -> BigInt {
    let n = h.len();
    let strip = |from: usize, to: usize| {
        oracle_strip_tilings(&h.a()[from..to], &h.b()[from..to], &h.c()[from..to]).len()
    };
    let mut total = BigInt::from(strip(0, n));
    if n >= 2 && h.b()[0] > 0 {
        total += BigInt::from(h.b()[0]) * BigInt::from(strip(1, n - 1));
    }
    if n >= 3 && h.c()[1] > 0 {
        total += BigInt::from(h.c()[1]) * BigInt::from(strip(2, n - 1));
    }
    total
}

/// Re-derives admissibility of one candidate tiling under signed bounds,
/// independently of the library's filter.
pub fn oracle_admissible(h: &HeightConditions, tiling: &[Placement]) -> bool {
    let n = h.len();
    // Height of the square stack on each cell (0 = none) and of the domino
    // stack ending at each cell.
    let mut square = vec![0i64; n];
    let mut domino_end = vec![0i64; n];
    for p in tiling {
        match p.kind {
            TileKind::Square => square[p.start] = p.height,
            TileKind::Domino => domino_end[p.start + 1] = p.height,
            TileKind::Bar => {}
        }
    }
    for k in 0..n {
        let (bk, ck) = (h.b()[k], h.c()[k]);
        let full_prev = k >= 1 && square[k - 1] == h.a()[k - 1];
        let full_prev2 = k >= 2 && square[k - 2] == h.a()[k - 2];
        if bk < 0 && ck >= 0 && full_prev && square[k] >= 1 && square[k] <= -bk {
            return false;
        }
        if bk >= 0 && ck < 0 {
            if h.a()[k] > -ck {
                if full_prev2 && full_prev && square[k] >= 1 && square[k] <= -ck {
                    return false;
                }
            } else if full_prev2 && domino_end[k] >= 1 && domino_end[k] <= -ck {
                return false;
            }
        }
        if bk < 0 && ck < 0 && full_prev && square[k] >= 1 {
            let cap = if full_prev2 { -bk - ck } else { -bk };
            if square[k] <= cap {
                return false;
            }
        }
    }
    true
}

/// Counts admissible tilings of a signed board: literal enumeration of the
/// candidates under the clamped bounds, filtered by [`oracle_admissible`].
pub fn oracle_mixed_count(h: &HeightConditions) -> BigInt {
    let b_plus: Vec<i64> = h.b().iter().map(|&x| x.max(0)).collect();
    let c_plus: Vec<i64> = h.c().iter().map(|&x| x.max(0)).collect();
    let candidates = oracle_strip_tilings(h.a(), &b_plus, &c_plus);
    BigInt::from(
        candidates
            .iter()
            .filter(|t| oracle_admissible(h, t))
            .count(),
    )
}
