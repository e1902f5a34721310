//! Floor-and-invert expansions: recovering coefficient sequences from numbers.
//!
//! The degree-two iteration starts from a pair `(α_0, β_0)` and repeats
//!
//! ```text
//! a_i = ⌊α_i⌋,   b_i = ⌊β_i⌋,
//! α_{i+1} = 1 / (β_i − b_i),      β_{i+1} = (α_i − a_i) / (β_i − b_i),
//! ```
//!
//! stopping when the divisor `β_i − b_i` vanishes. These relations invert the
//! nested-fraction relations with all bar coefficients equal to 1, i.e.
//! `α_i = a_i + β_{i+1}/α_{i+1}` and `β_i = b_i + 1/α_{i+1}`, so a run that
//! ends on an exact integer pair produces a finite MCF whose value is the
//! input pair, exactly.
//!
//! The same iteration generalises to any degree `m ≥ 1`: floor every
//! component, divide by the fractional part of the *last* one, and rotate:
//!
//! ```text
//! α_{n+1}^(1) = 1 / (α_n^(m) − a_n^(m)),
//! α_{n+1}^(i) = (α_n^(i−1) − a_n^(i−1)) / (α_n^(m) − a_n^(m)),   i = 2..m.
//! ```
//!
//! Degree 1 is the classical continued-fraction algorithm; degree 2 matches
//! [`jacobi_expand`] component for component.
//!
//! Exact-rational variants are the source of truth. The floating variants
//! take a `zero_tol` under which fractional parts are considered exact zeros
//! (fractional parts within `zero_tol` of 1 likewise snap to the next
//! integer), and refuse to continue past values of magnitude `1/zero_tol`,
//! where tolerance-relative flooring stops being meaningful.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, One, Zero};

use crate::convergents::PartialQuotients;

/// Errors from the floating-point expansion variants.
#[derive(Clone, Debug, PartialEq)]
pub enum ExpansionError {
    /// An input was NaN or infinite.
    NonFiniteInput,
    /// `zero_tol` must be a finite positive number below 1.
    InvalidTolerance,
    /// A state value outgrew `1/zero_tol`, so its fractional part carries no
    /// information at the requested tolerance.
    NumericInstability {
        /// The offending value.
        value: f64,
        /// The magnitude limit `1/zero_tol` that it exceeded.
        limit: f64,
    },
    /// A quotient table row does not match the declared degree.
    RaggedTable {
        /// Index of the offending row.
        row: usize,
        /// Its length.
        len: usize,
        /// The declared degree.
        degree: usize,
    },
    /// Quotient tables must have degree at least 1.
    ZeroDegree,
}

impl fmt::Display for ExpansionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionError::NonFiniteInput => write!(f, "expansion inputs must be finite"),
            ExpansionError::InvalidTolerance => {
                write!(f, "zero_tol must be a finite positive number below 1")
            }
            ExpansionError::NumericInstability { value, limit } => write!(
                f,
                "value {value:e} exceeds the magnitude limit {limit:e} for the requested \
                 tolerance; the expansion is numerically unstable"
            ),
            ExpansionError::RaggedTable { row, len, degree } => write!(
                f,
                "quotient table row {row} has length {len}, expected the degree {degree}"
            ),
            ExpansionError::ZeroDegree => write!(f, "quotient tables must have degree >= 1"),
        }
    }
}

impl core::error::Error for ExpansionError {}

/// The exact state `(α_i, β_i)` of the degree-two iteration before its `i`-th
/// floor step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionState {
    /// First component `α_i`.
    pub alpha: BigRational,
    /// Second component `β_i`.
    pub beta: BigRational,
    /// Step index `i`, starting at 0.
    pub step: usize,
}

/// Iterator over the exact degree-two trajectory; see [`jacobi_states`].
pub struct JacobiStates {
    state: Option<(BigRational, BigRational)>,
    step: usize,
}

/// Iterates the exact states `(α_0, β_0), (α_1, β_1), …` of the degree-two
/// algorithm. The iterator ends after the first state whose `β` is an
/// integer, since no further step is defined there; on rational inputs it is
/// therefore always finite.
pub fn jacobi_states(alpha: &BigRational, beta: &BigRational) -> JacobiStates {
    JacobiStates {
        state: Some((alpha.clone(), beta.clone())),
        step: 0,
    }
}

impl Iterator for JacobiStates {
    type Item = ExpansionState;

    fn next(&mut self) -> Option<ExpansionState> {
        let (alpha, beta) = self.state.take()?;
        let frac_beta = &beta - beta.floor();
        if !frac_beta.is_zero() {
            let frac_alpha = &alpha - alpha.floor();
            self.state = Some((frac_beta.clone().recip(), frac_alpha / &frac_beta));
        }
        let item = ExpansionState {
            alpha,
            beta,
            step: self.step,
        };
        self.step += 1;
        Some(item)
    }
}

/// A finite degree-two expansion: the recovered coefficients plus how the run
/// ended.
///
/// `terminated` is true only when the final state was an exact integer pair,
/// in which case the coefficients represent the inputs exactly (their bar
/// coefficients are all 1). The run also stops — with `terminated` false and
/// `steps` short of `max_steps` — when `β` alone becomes an integer while `α`
/// still has a fractional part: the next division is undefined and that
/// remainder is lost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionResult {
    /// The recovered coefficient sequences, bar coefficients all 1.
    pub quotients: PartialQuotients,
    /// Whether the expansion ended on an exact integer state.
    pub terminated: bool,
    /// Number of coefficient pairs produced (step indices run `0..steps`).
    pub steps: usize,
}

/// Expands an exact rational pair into degree-two coefficients, taking at
/// most `max_steps` steps (which must be at least 1).
pub fn jacobi_expand(alpha: &BigRational, beta: &BigRational, max_steps: usize) -> ExpansionResult {
    assert!(max_steps >= 1, "max_steps must be at least 1");
    let mut va = Vec::new();
    let mut vb = Vec::new();
    let mut terminated = false;
    for state in jacobi_states(alpha, beta).take(max_steps) {
        let floor_alpha = state.alpha.floor();
        let floor_beta = state.beta.floor();
        let alpha_is_integer = state.alpha == floor_alpha;
        let beta_is_integer = state.beta == floor_beta;
        va.push(floor_alpha.to_integer());
        vb.push(floor_beta.to_integer());
        if beta_is_integer {
            terminated = alpha_is_integer;
            break;
        }
    }
    let steps = va.len();
    let c = vec![BigInt::one(); steps];
    let quotients =
        PartialQuotients::new(va, vb, c).expect("expansion yields a valid coefficient triple");
    ExpansionResult {
        quotients,
        terminated,
        steps,
    }
}

/// Floor with snapping: values within `tol` of an integer count as that
/// integer. Returns the quotient and the remaining fractional part.
fn floor_snap(x: f64, tol: f64) -> (f64, f64) {
    let q = Float::floor(x);
    let r = x - q;
    if r < tol {
        (q, 0.0)
    } else if r > 1.0 - tol {
        (q + 1.0, 0.0)
    } else {
        (q, r)
    }
}

fn check_magnitude(value: f64, limit: f64) -> Result<(), ExpansionError> {
    if !value.is_finite() {
        return Err(ExpansionError::NonFiniteInput);
    }
    if Float::abs(value) > limit {
        return Err(ExpansionError::NumericInstability { value, limit });
    }
    Ok(())
}

fn validate_tolerance(zero_tol: f64) -> Result<f64, ExpansionError> {
    if !(zero_tol.is_finite() && zero_tol > 0.0 && zero_tol < 1.0) {
        return Err(ExpansionError::InvalidTolerance);
    }
    Ok(1.0 / zero_tol)
}

fn big_from_float(q: f64) -> BigInt {
    BigInt::from_f64(q).expect("snapped floor of a finite value is integral")
}

/// Floating-point variant of [`jacobi_expand`].
///
/// Fractional parts with magnitude below `zero_tol` are treated as exact
/// zeros (this is also the termination test), and parts within `zero_tol` of
/// 1 snap to the next integer. Any state of magnitude above `1/zero_tol`
/// aborts with [`ExpansionError::NumericInstability`].
pub fn jacobi_expand_float(
    alpha: f64,
    beta: f64,
    max_steps: usize,
    zero_tol: f64,
) -> Result<ExpansionResult, ExpansionError> {
    assert!(max_steps >= 1, "max_steps must be at least 1");
    let limit = validate_tolerance(zero_tol)?;
    let (mut alpha, mut beta) = (alpha, beta);
    let mut va = Vec::new();
    let mut vb = Vec::new();
    let mut terminated = false;
    for _ in 0..max_steps {
        check_magnitude(alpha, limit)?;
        check_magnitude(beta, limit)?;
        let (qa, fa) = floor_snap(alpha, zero_tol);
        let (qb, fb) = floor_snap(beta, zero_tol);
        va.push(big_from_float(qa));
        vb.push(big_from_float(qb));
        if fb == 0.0 {
            terminated = fa == 0.0;
            break;
        }
        alpha = 1.0 / fb;
        beta = fa / fb;
    }
    let steps = va.len();
    let c = vec![BigInt::one(); steps];
    let quotients =
        PartialQuotients::new(va, vb, c).expect("expansion yields a valid coefficient triple");
    Ok(ExpansionResult {
        quotients,
        terminated,
        steps,
    })
}

/// A degree-`m` quotient table: one row `(a_n^(1), …, a_n^(m))` per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTable {
    degree: usize,
    rows: Vec<Vec<BigInt>>,
}

impl QuotientTable {
    /// Builds a table, checking that every row has exactly `degree` entries.
    pub fn new(degree: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, ExpansionError> {
        if degree == 0 {
            return Err(ExpansionError::ZeroDegree);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != degree {
                return Err(ExpansionError::RaggedTable {
                    row: i,
                    len: row.len(),
                    degree,
                });
            }
        }
        Ok(QuotientTable { degree, rows })
    }

    /// The degree `m` (row width).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The quotient rows, one per step.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Number of steps recorded.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Whether no steps were recorded.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// A finite degree-`m` expansion; the fields mirror [`ExpansionResult`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerronResult {
    /// The recovered quotient rows.
    pub quotients: QuotientTable,
    /// Whether the expansion ended on an exact all-integer state.
    pub terminated: bool,
    /// Number of rows produced.
    pub steps: usize,
}

/// Expands a vector of `m ≥ 1` exact rationals by the degree-`m` algorithm,
/// taking at most `max_steps` steps. Degree 1 is the classical
/// continued-fraction algorithm; degree 2 agrees with [`jacobi_expand`].
pub fn perron_expand(values: &[BigRational], max_steps: usize) -> PerronResult {
    assert!(!values.is_empty(), "the degree must be at least 1");
    assert!(max_steps >= 1, "max_steps must be at least 1");
    let m = values.len();
    let mut state = values.to_vec();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut terminated = false;
    for _ in 0..max_steps {
        let floors: Vec<BigRational> = state.iter().map(|x| x.floor()).collect();
        let fracs: Vec<BigRational> = state.iter().zip(&floors).map(|(x, q)| x - q).collect();
        rows.push(floors.iter().map(|q| q.to_integer()).collect());
        let divisor = &fracs[m - 1];
        if divisor.is_zero() {
            terminated = fracs.iter().all(Zero::is_zero);
            break;
        }
        let mut next = Vec::with_capacity(m);
        next.push(divisor.clone().recip());
        for i in 1..m {
            next.push(&fracs[i - 1] / divisor);
        }
        state = next;
    }
    let steps = rows.len();
    let quotients = QuotientTable::new(m, rows).expect("rows are rectangular by construction");
    PerronResult {
        quotients,
        terminated,
        steps,
    }
}

/// Floating-point variant of [`perron_expand`]; tolerance handling as in
/// [`jacobi_expand_float`].
pub fn perron_expand_float(
    values: &[f64],
    max_steps: usize,
    zero_tol: f64,
) -> Result<PerronResult, ExpansionError> {
    assert!(!values.is_empty(), "the degree must be at least 1");
    assert!(max_steps >= 1, "max_steps must be at least 1");
    let limit = validate_tolerance(zero_tol)?;
    let m = values.len();
    let mut state = values.to_vec();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut terminated = false;
    for _ in 0..max_steps {
        for &x in &state {
            check_magnitude(x, limit)?;
        }
        let snapped: Vec<(f64, f64)> = state.iter().map(|&x| floor_snap(x, zero_tol)).collect();
        rows.push(snapped.iter().map(|&(q, _)| big_from_float(q)).collect());
        let divisor = snapped[m - 1].1;
        if divisor == 0.0 {
            terminated = snapped.iter().all(|&(_, r)| r == 0.0);
            break;
        }
        let mut next = Vec::with_capacity(m);
        next.push(1.0 / divisor);
        for i in 1..m {
            next.push(snapped[i - 1].1 / divisor);
        }
        state = next;
    }
    let steps = rows.len();
    let quotients = QuotientTable::new(m, rows).expect("rows are rectangular by construction");
    Ok(PerronResult {
        quotients,
        terminated,
        steps,
    })
}

fn identity_matrix(size: usize) -> Vec<Vec<BigInt>> {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// The step matrix of one quotient row: first column `(a^(1), …, a^(m), 1)`,
/// remaining columns the shifted identity.
fn companion_matrix(row: &[BigInt]) -> Vec<Vec<BigInt>> {
    let size = row.len() + 1;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for (i, entry) in row.iter().enumerate() {
        mat[i][0] = entry.clone();
    }
    mat[size - 1][0] = BigInt::one();
    for j in 1..size {
        mat[j - 1][j] = BigInt::one();
    }
    mat
}

fn matrix_mul(x: &[Vec<BigInt>], y: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let size = x.len();
    let mut out = vec![vec![BigInt::zero(); size]; size];
    for i in 0..size {
        for j in 0..size {
            let mut acc = BigInt::zero();
            for (k, yk) in y.iter().enumerate() {
                acc += &x[i][k] * &yk[j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Convergent vectors of a degree-`m` quotient table: the first columns of
/// the running product of companion matrices, one `(m+1)`-vector per step.
///
/// For `m = 2` this reproduces the triples of
/// [`crate::convergents::convergents_by_matrix`] on the same quotients with
/// all bar coefficients 1; for `m = 1` it yields classical numerator /
/// denominator pairs.
pub fn perron_convergents(table: &QuotientTable) -> Vec<Vec<BigInt>> {
    let size = table.degree() + 1;
    let mut product = identity_matrix(size);
    let mut out = Vec::with_capacity(table.len());
    for row in table.rows() {
        product = matrix_mul(&product, &companion_matrix(row));
        out.push(product.iter().map(|r| r[0].clone()).collect());
    }
    out
}
