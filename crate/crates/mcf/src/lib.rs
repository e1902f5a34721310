//! Exact arithmetic for degree-two multidimensional continued fractions and
//! the combinatorics of their convergents.
//!
//! A degree-two MCF is built from three integer sequences `(a_i)`, `(b_i)`,
//! `(c_i)` (with the convention `c_0 = 1`) and represents a pair of real
//! numbers, much as an ordinary continued fraction represents one. The crate
//! covers four views of the same objects:
//!
//! * [`convergents`] — the coefficient sequences themselves and the exact
//!   convergent triples `(A_n, B_n, C_n)`, computed along three independent
//!   routes (matrix products, the forward tail recurrence, and a backward
//!   head recurrence).
//! * [`jacobi`] — the floor-and-invert expansion that recovers coefficient
//!   sequences from a pair of numbers, in exact-rational and floating
//!   variants, plus its degree-`m` generalisation.
//! * [`tiling`] — stacked tilings of a one-dimensional board by squares,
//!   dominoes and bars, whose counts are exactly the convergent numerators;
//!   includes brute-force enumerators used as verification oracles, circular
//!   boards, signed ("mixed") height conditions, and tiles of general length.
//! * [`identities`] — checks for closed forms that the machinery above makes
//!   computable: a factorial expression for one family of numerators, the
//!   limit of its convergent ratios, and a classical expansion of `e`.
//!
//! The crate is `no_std` (it requires `alloc`); everything is computed with
//! arbitrary-precision integers and rationals, so results are exact unless a
//! function is explicitly documented as floating-point.

#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod convergents;
pub mod identities;
pub mod jacobi;
pub mod tiling;

/// The arbitrary-precision integer type used throughout, re-exported so
/// downstream code can name it without pinning its own copy of the
/// dependency.
pub use num_bigint::BigInt;
/// The exact rational type used for values, re-exported for the same reason.
pub use num_rational::BigRational;

pub use convergents::{
    convergents_by_matrix, convergents_by_tail_recurrence, evaluate_classical_cf, evaluate_finite,
    numerator_by_head_recurrence, ConvergentTriple, McfError, PartialQuotients, RationalPair,
    ShiftedQuotients,
};
pub use identities::{
    check_e_remark, check_factorial_identity, estimate_limit, factorial_mcf, IdentityReport,
};
pub use jacobi::{
    jacobi_expand, jacobi_expand_float, jacobi_states, perron_convergents, perron_expand,
    perron_expand_float, ExpansionError, ExpansionResult, ExpansionState, JacobiStates,
    PerronResult, QuotientTable,
};
pub use tiling::{
    count_b, count_c, count_circular, count_degree_m, count_fast, count_mixed, enumerate_circular,
    enumerate_circular_with_budget, enumerate_degree_m, enumerate_degree_m_with_budget,
    enumerate_mixed, enumerate_mixed_with_budget, enumerate_plain, enumerate_plain_with_budget,
    HeightConditions, Placement, StackPlacement, TileKind, Tiling, TilingError,
    DEFAULT_ENUM_BUDGET,
};
