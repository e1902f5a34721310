//! Closed-form expansion families with factorial-sum convergents.
//!
//! Two families live here. The degree-two expansion built by
//! [`factorial_mcf`] has convergent numerators `A_n = (n+2)! + (n+1)! + n!`,
//! and its value converges to the constant `4.5475205433501372…`; the
//! classical continued fraction checked by [`check_e_remark`] has numerators
//! `(n+1)! + n!` and converges to `e`. Each family gets a checker that
//! recomputes the convergents through the matrix route and compares them
//! against factorials computed by plain running products, reporting the
//! outcome as an [`IdentityReport`].

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::convergents::{
    convergents_by_matrix, evaluate_classical_cf, evaluate_finite, PartialQuotients,
};

/// Outcome of verifying one identity family up to a chosen depth.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    /// Which identity was checked, as a human-readable formula.
    pub name: &'static str,
    /// Largest index up to which the exact claims held (equal to the
    /// requested depth when nothing failed).
    pub verified_up_to: usize,
    /// For exact claims, the largest absolute deviation observed (0.0 when
    /// the identity holds); for convergence claims, the distance from the
    /// target constant at the requested depth.
    pub max_abs_error: f64,
    /// First index where an exact claim failed, if any.
    pub witness: Option<usize>,
}

impl IdentityReport {
    /// Whether every exact claim held.
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// `n!`, `(n+1)!` and `(n+2)!` as a running window, advanced by one index
/// per call to `step`.
struct FactorialWindow {
    low: BigInt,
    mid: BigInt,
    high: BigInt,
    n: usize,
}

impl FactorialWindow {
    fn start() -> Self {
        FactorialWindow {
            low: BigInt::one(),
            mid: BigInt::one(),
            high: BigInt::from(2),
            n: 0,
        }
    }

    fn sum_all(&self) -> BigInt {
        &self.low + &self.mid + &self.high
    }

    fn sum_lower(&self) -> BigInt {
        &self.low + &self.mid
    }

    fn step(&mut self) {
        self.n += 1;
        let next = &self.high * BigInt::from(self.n as u64 + 2);
        self.low = core::mem::replace(&mut self.mid, core::mem::replace(&mut self.high, next));
    }
}

/// The degree-two expansion whose convergent numerators are the factorial
/// sums `(n+2)! + (n+1)! + n!`: coefficients `a = (4, 2, 3, 4, 5, …)`,
/// `b = (·, 1, 1, 2, 3, …)` and `c = (1, ·, 1, 1, 2, …)`, where the padded
/// entries `b_0` and `c_1` (set to zero here) never influence the numerators.
pub fn factorial_mcf(n_max: usize) -> PartialQuotients {
    let a: Vec<BigInt> = (0..=n_max as i64)
        .map(|n| BigInt::from(if n == 0 { 4 } else { n + 1 }))
        .collect();
    let b: Vec<BigInt> = (0..=n_max as i64)
        .map(|n| BigInt::from(if n == 0 { 0 } else { (n - 1).max(1) }))
        .collect();
    let c: Vec<BigInt> = (0..=n_max as i64)
        .map(|n| match n {
            0 => BigInt::one(),
            1 => BigInt::zero(),
            _ => BigInt::from((n - 2).max(1)),
        })
        .collect();
    PartialQuotients::new(a, b, c).expect("the family is well formed at every depth")
}

/// Verifies `A_n = (n+2)! + (n+1)! + n!` for all `n ≤ n_max` on the
/// expansion of [`factorial_mcf`], comparing convergents from the matrix
/// product against factorials from a running product.
pub fn check_factorial_identity(n_max: usize) -> IdentityReport {
    let triples = convergents_by_matrix(&factorial_mcf(n_max));
    let mut report = IdentityReport {
        name: "A_n = (n+2)! + (n+1)! + n!",
        verified_up_to: n_max,
        max_abs_error: 0.0,
        witness: None,
    };
    let mut window = FactorialWindow::start();
    for (n, triple) in triples.iter().enumerate() {
        let expected = window.sum_all();
        if triple.a != expected {
            let gap = (&triple.a - &expected).abs();
            report.max_abs_error = report.max_abs_error.max(big_to_f64(&gap));
            if report.witness.is_none() {
                report.witness = Some(n);
                report.verified_up_to = n.saturating_sub(1);
            }
        }
        window.step();
    }
    report
}

/// The value of the factorial-sum expansion truncated at depth `n_max`, as a
/// float. The sequence converges (it is Cauchy well below `10^-10` once
/// `n_max` reaches 10) to `4.5475205433501372…`; depths below 5 are refused
/// because the irregular leading coefficients still dominate there.
pub fn estimate_limit(n_max: usize) -> f64 {
    assert!(
        n_max >= 5,
        "estimates need at least five coefficient triples"
    );
    let pair =
        evaluate_finite(&factorial_mcf(n_max)).expect("denominators in this family are positive");
    rational_to_f64(&pair.first)
}

/// Verifies the classical continued fraction of `e` with coefficients
/// `a = (2, 1, 2, 3, 4, …)` and numerators `b = (·, 1, 1, 2, 3, …)`: its
/// convergent numerators are exactly `(n+1)! + n!` for `n ≤ n_max` (checked
/// through the degenerate degree-two expansion whose bar coefficients
/// vanish), and its value approaches `e` — the report's `max_abs_error`
/// holds the distance at depth `n_max`, below `10^-6` from depth 8 on.
pub fn check_e_remark(n_max: usize) -> IdentityReport {
    assert!(
        n_max >= 3,
        "the comparison needs at least four coefficients"
    );
    let a: Vec<BigInt> = (0..=n_max as i64)
        .map(|n| BigInt::from(if n == 0 { 2 } else { n }))
        .collect();
    let b: Vec<BigInt> = (0..=n_max as i64)
        .map(|n| BigInt::from(if n == 0 { 0 } else { (n - 1).max(1) }))
        .collect();
    let mut c = vec![BigInt::zero(); n_max + 1];
    c[0] = BigInt::one();

    let pq = PartialQuotients::new(a.clone(), b.clone(), c)
        .expect("the family is well formed at every depth");
    let mut report = IdentityReport {
        name: "p_n = (n+1)! + n! and p_n/q_n -> e",
        verified_up_to: n_max,
        max_abs_error: 0.0,
        witness: None,
    };
    let mut window = FactorialWindow::start();
    for (n, triple) in convergents_by_matrix(&pq).iter().enumerate() {
        if triple.a != window.sum_lower() && report.witness.is_none() {
            report.witness = Some(n);
            report.verified_up_to = n.saturating_sub(1);
        }
        window.step();
    }

    let value = evaluate_classical_cf(&a, &b).expect("partial values stay positive");
    report.max_abs_error = (rational_to_f64(&value) - core::f64::consts::E).abs();
    report
}

fn big_to_f64(value: &BigInt) -> f64 {
    value.to_f64().unwrap_or(f64::INFINITY)
}

fn rational_to_f64(value: &num_rational::BigRational) -> f64 {
    value
        .to_f64()
        .expect("finite rationals convert to floats (possibly with rounding)")
}
