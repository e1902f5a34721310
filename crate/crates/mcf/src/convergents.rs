//! Coefficient sequences of degree-two MCFs and their exact convergents.
//!
//! A degree-two multidimensional continued fraction is given by three integer
//! sequences `(a_i)`, `(b_i)`, `(c_i)` of equal length `n + 1`, with the
//! normalisation `c_0 = 1`. It represents the pair `(α_0, β_0)` obtained by
//! unwinding
//!
//! ```text
//! α_i = a_i + β_{i+1} / α_{i+1},      β_i = b_i + c_{i+1} / α_{i+1}
//! ```
//!
//! from the bottom (`α_n = a_n`, `β_n = b_n`) upwards. The `n`-th convergent
//! is the exact rational pair `(A_n / C_n, B_n / C_n)`, where the triple
//! sequences are read off the matrix product
//!
//! ```text
//! ⎛ a_0 1 0 ⎞     ⎛ a_n 1 0 ⎞   ⎛ A_n  A_{n-1}  A_{n-2} ⎞
//! ⎜ b_0 0 1 ⎟ ··· ⎜ b_n 0 1 ⎟ = ⎜ B_n  B_{n-1}  B_{n-2} ⎟
//! ⎝ c_0 0 0 ⎠     ⎝ c_n 0 0 ⎠   ⎝ C_n  C_{n-1}  C_{n-2} ⎠
//! ```
//!
//! Reading the empty product (the identity matrix) the same way fixes the seed
//! triples `(A_{-1}, B_{-1}, C_{-1}) = (1, 0, 0)` and `(A_{-2}, B_{-2},
//! C_{-2}) = (0, 1, 0)`, so every column satisfies the tail recurrence
//!
//! ```text
//! X_k = a_k·X_{k-1} + b_k·X_{k-2} + c_k·X_{k-3}        (X ∈ {A, B, C})
//! ```
//!
//! already from `k = 1`. A third, backward route computes `A_n` alone by
//! peeling coefficients off the front:
//!
//! ```text
//! A(a_0..a_n) = a_0·A(a_1..a_n) + b_1·A(a_2..a_n) + c_2·A(a_3..a_n).
//! ```
//!
//! The three routes are arithmetically independent and are cross-checked
//! against each other in the test suite.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Errors arising from malformed coefficient sequences or degenerate values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum McfError {
    /// The three coefficient sequences do not have the same length.
    LengthMismatch {
        /// Length of the `a` sequence.
        a: usize,
        /// Length of the `b` sequence.
        b: usize,
        /// Length of the `c` sequence.
        c: usize,
    },
    /// The coefficient sequences are empty; an MCF has at least index 0.
    Empty,
    /// The leading coefficient `c_0` differs from 1, violating the
    /// normalisation convention.
    LeadingCNotOne,
    /// A denominator vanished: either the final `C_n` when forming the
    /// convergent pair, or an intermediate value during nested evaluation.
    ZeroDenominator,
}

impl fmt::Display for McfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McfError::LengthMismatch { a, b, c } => write!(
                f,
                "coefficient sequences must have equal length (got a: {a}, b: {b}, c: {c})"
            ),
            McfError::Empty => write!(f, "coefficient sequences must be non-empty"),
            McfError::LeadingCNotOne => write!(f, "the leading coefficient c_0 must equal 1"),
            McfError::ZeroDenominator => write!(f, "denominator vanished during evaluation"),
        }
    }
}

impl core::error::Error for McfError {}

/// The three coefficient sequences `(a_i)`, `(b_i)`, `(c_i)` of a degree-two
/// MCF, all of length `n + 1`, normalised so that `c_0 = 1`.
///
/// `b_0` and `c_1` also exist only as padding: no convergent numerator `A_k`
/// depends on `b_0`, `c_0` or `c_1`, and no `B_k` depends on `a_0`, `b_1` or
/// `c_2` (the seed triples zero out the corresponding terms of the tail
/// recurrence). Constructors therefore accept arbitrary values there, except
/// for the pinned `c_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialQuotients {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
    c: Vec<BigInt>,
}

impl PartialQuotients {
    /// Builds a coefficient triple, validating the shape invariants:
    /// equal non-zero lengths and `c_0 = 1`.
    pub fn new(a: Vec<BigInt>, b: Vec<BigInt>, c: Vec<BigInt>) -> Result<Self, McfError> {
        if a.len() != b.len() || a.len() != c.len() {
            return Err(McfError::LengthMismatch {
                a: a.len(),
                b: b.len(),
                c: c.len(),
            });
        }
        if a.is_empty() {
            return Err(McfError::Empty);
        }
        if !c[0].is_one() {
            return Err(McfError::LeadingCNotOne);
        }
        Ok(PartialQuotients { a, b, c })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(a: &[i64], b: &[i64], c: &[i64]) -> Result<Self, McfError> {
        Self::new(
            a.iter().copied().map(BigInt::from).collect(),
            b.iter().copied().map(BigInt::from).collect(),
            c.iter().copied().map(BigInt::from).collect(),
        )
    }

    /// The largest coefficient index `n`; the sequences run over `0..=n`.
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    /// Number of coefficients per sequence, i.e. `n + 1`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    /// Always false; retained for API symmetry with the standard collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The sequence `(a_i)`.
    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    /// The sequence `(b_i)`.
    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    /// The sequence `(c_i)`.
    pub fn c(&self) -> &[BigInt] {
        &self.c
    }

    /// Drops the leading coefficients `(a_0, b_0, c_0)`, re-pinning the new
    /// leading bar coefficient to 1 as the normalisation demands. Returns
    /// `None` when only index 0 is present.
    ///
    /// The overwritten value (the original `c_1`) is reported alongside,
    /// because recurrences that relate a MCF to its shift need it verbatim:
    /// e.g. `B_n = c_1·C'_{n-1} + b_0·A'_{n-1}` where the primed triples
    /// belong to the shifted MCF.
    pub fn shift_left(&self) -> Option<ShiftedQuotients> {
        if self.len() == 1 {
            return None;
        }
        let mut c = self.c[1..].to_vec();
        let replaced_c = core::mem::replace(&mut c[0], BigInt::one());
        let quotients = PartialQuotients {
            a: self.a[1..].to_vec(),
            b: self.b[1..].to_vec(),
            c,
        };
        Some(ShiftedQuotients {
            quotients,
            replaced_c,
        })
    }
}

/// Result of [`PartialQuotients::shift_left`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedQuotients {
    /// The shifted coefficient sequences, with the new `c_0` pinned to 1.
    pub quotients: PartialQuotients,
    /// The bar coefficient that the pinning overwrote (the original `c_1`).
    pub replaced_c: BigInt,
}

/// One convergent triple: numerators `a`, `b` and the common denominator `c`
/// of the convergent pair `(a/c, b/c)` at position `index`.
///
/// Seed triples sit at indices -1 and -2; regular convergents start at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentTriple {
    /// First numerator `A_n`.
    pub a: BigInt,
    /// Second numerator `B_n`.
    pub b: BigInt,
    /// Common denominator `C_n`.
    pub c: BigInt,
    /// Convergent index `n ≥ -2`.
    pub index: i64,
}

impl ConvergentTriple {
    fn from_parts(a: BigInt, b: BigInt, c: BigInt, index: i64) -> Self {
        ConvergentTriple { a, b, c, index }
    }

    /// The seed triple `(A_{-1}, B_{-1}, C_{-1}) = (1, 0, 0)`.
    pub fn seed_minus_one() -> Self {
        Self::from_parts(BigInt::one(), BigInt::zero(), BigInt::zero(), -1)
    }

    /// The seed triple `(A_{-2}, B_{-2}, C_{-2}) = (0, 1, 0)`.
    pub fn seed_minus_two() -> Self {
        Self::from_parts(BigInt::zero(), BigInt::one(), BigInt::zero(), -2)
    }
}

/// The exact value pair represented by a finite MCF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPair {
    /// `α_0 = A_n / C_n`.
    pub first: BigRational,
    /// `β_0 = B_n / C_n`.
    pub second: BigRational,
}

type Mat3 = [[BigInt; 3]; 3];

fn mat3_identity() -> Mat3 {
    let mut m: Mat3 = Default::default();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

fn mat3_step(a: &BigInt, b: &BigInt, c: &BigInt) -> Mat3 {
    [
        [a.clone(), BigInt::one(), BigInt::zero()],
        [b.clone(), BigInt::zero(), BigInt::one()],
        [c.clone(), BigInt::zero(), BigInt::zero()],
    ]
}

fn mat3_mul(x: &Mat3, y: &Mat3) -> Mat3 {
    let mut out: Mat3 = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = BigInt::zero();
            for (k, yk) in y.iter().enumerate() {
                acc += &x[i][k] * &yk[j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Computes the convergent triples `(A_k, B_k, C_k)` for `k = 0..=n` as the
/// first columns of the running 3×3 matrix product.
///
/// Each step multiplies the accumulated product by the full matrix of
/// `(a_k, b_k, c_k)`; nothing is shared with the recurrence-based routes, so
/// the two can serve as cross-checks for one another.
pub fn convergents_by_matrix(pq: &PartialQuotients) -> Vec<ConvergentTriple> {
    let mut product = mat3_identity();
    let mut out = Vec::with_capacity(pq.len());
    for k in 0..pq.len() {
        let step = mat3_step(&pq.a[k], &pq.b[k], &pq.c[k]);
        product = mat3_mul(&product, &step);
        out.push(ConvergentTriple::from_parts(
            product[0][0].clone(),
            product[1][0].clone(),
            product[2][0].clone(),
            k as i64,
        ));
    }
    out
}

type Triple = (BigInt, BigInt, BigInt);

/// Computes the convergent triples for `k = 0..=n` by the forward tail
/// recurrence `X_k = a_k·X_{k-1} + b_k·X_{k-2} + c_k·X_{k-3}`.
///
/// Index 0 is read directly off the first matrix column `(a_0, b_0, c_0)`;
/// from index 1 on, the recurrence runs with the seed triples at -1 and -2
/// standing in for the missing history.
pub fn convergents_by_tail_recurrence(pq: &PartialQuotients) -> Vec<ConvergentTriple> {
    let mut out = Vec::with_capacity(pq.len());
    // Window of the three preceding triples, youngest last.
    let mut m3: Triple = (BigInt::zero(), BigInt::zero(), BigInt::zero());
    let mut m2: Triple = (BigInt::zero(), BigInt::one(), BigInt::zero());
    let mut m1: Triple = (BigInt::one(), BigInt::zero(), BigInt::zero());
    for k in 0..pq.len() {
        let cur: Triple = if k == 0 {
            (pq.a[0].clone(), pq.b[0].clone(), pq.c[0].clone())
        } else {
            let (ak, bk, ck) = (&pq.a[k], &pq.b[k], &pq.c[k]);
            (
                ak * &m1.0 + bk * &m2.0 + ck * &m3.0,
                ak * &m1.1 + bk * &m2.1 + ck * &m3.1,
                ak * &m1.2 + bk * &m2.2 + ck * &m3.2,
            )
        };
        out.push(ConvergentTriple::from_parts(
            cur.0.clone(),
            cur.1.clone(),
            cur.2.clone(),
            k as i64,
        ));
        m3 = m2;
        m2 = m1;
        m1 = cur;
    }
    out
}

/// Computes the top numerator `A_n` alone by the backward head recurrence
///
/// ```text
/// A(a_i..a_n) = a_i·A(a_{i+1}..a_n) + b_{i+1}·A(a_{i+2}..a_n) + c_{i+2}·A(a_{i+3}..a_n),
/// ```
///
/// memoised on the suffix start index, so the cost is linear in `n` despite
/// the three-way branching. The base cases are the suffixes of length 1, 2
/// and 3:
///
/// ```text
/// A(a_n)               = a_n
/// A(a_{n-1} a_n)       = a_{n-1}·a_n + b_n
/// A(a_{n-2}..a_n)      = a_{n-2}·a_{n-1}·a_n + a_{n-2}·b_n + a_n·b_{n-1} + c_n.
/// ```
pub fn numerator_by_head_recurrence(pq: &PartialQuotients) -> BigInt {
    let n = pq.n();
    let (a, b, c) = (&pq.a, &pq.b, &pq.c);
    // memo[i] = A of the suffix starting at index i.
    let mut memo: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for i in (0..=n).rev() {
        memo[i] = match n - i {
            0 => a[n].clone(),
            1 => &a[n - 1] * &a[n] + &b[n],
            2 => &a[n - 2] * &a[n - 1] * &a[n] + &a[n - 2] * &b[n] + &a[n] * &b[n - 1] + &c[n],
            _ => &a[i] * &memo[i + 1] + &b[i + 1] * &memo[i + 2] + &c[i + 2] * &memo[i + 3],
        };
    }
    memo.swap_remove(0)
}

/// Evaluates a finite MCF to its exact value pair `(A_n/C_n, B_n/C_n)`.
///
/// Fails with [`McfError::ZeroDenominator`] when `C_n = 0`; that is the only
/// way a finite MCF can lack a value, since the integer triples themselves
/// always exist.
pub fn evaluate_finite(pq: &PartialQuotients) -> Result<RationalPair, McfError> {
    let triples = convergents_by_tail_recurrence(pq);
    let last = triples.last().expect("sequences are non-empty");
    if last.c.is_zero() {
        return Err(McfError::ZeroDenominator);
    }
    Ok(RationalPair {
        first: BigRational::new(last.a.clone(), last.c.clone()),
        second: BigRational::new(last.b.clone(), last.c.clone()),
    })
}

/// Evaluates an ordinary (degree-one) continued fraction with general
/// numerators,
///
/// ```text
/// a_0 + b_1 / (a_1 + b_2 / (a_2 + ···))
/// ```
///
/// exactly. This is the degenerate MCF whose bar coefficients all vanish.
///
/// `b` either has the same length as `a` (its entry 0 is padding and never
/// read) or is one entry shorter (then `b[0]` is the numerator over `a_1`).
/// A single coefficient and no numerators yields `a_0` itself.
pub fn evaluate_classical_cf(a: &[BigInt], b: &[BigInt]) -> Result<BigRational, McfError> {
    if a.is_empty() {
        return Err(McfError::Empty);
    }
    let offset = match (a.len() - b.len(), a.len() == b.len()) {
        (_, true) => 0,
        (1, _) => 1,
        _ => {
            return Err(McfError::LengthMismatch {
                a: a.len(),
                b: b.len(),
                c: b.len(),
            })
        }
    };
    let mut value = BigRational::from(a[a.len() - 1].clone());
    for i in (0..a.len() - 1).rev() {
        if value.is_zero() {
            return Err(McfError::ZeroDenominator);
        }
        let numer = &b[i + 1 - offset];
        value = BigRational::from(a[i].clone()) + BigRational::from(numer.clone()) / value;
    }
    Ok(value)
}
