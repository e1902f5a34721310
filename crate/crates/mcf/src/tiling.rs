//! Stacked tilings of a one-dimensional board, the combinatorial incarnation
//! of the convergent numerators.
//!
//! A board with cells `0..=n` is tiled by *stacks* of identical tiles:
//! squares (one cell), dominoes (two cells) and bars (three cells). A stack
//! of height `h` in some position counts as its own tiling for every `h`, so
//! each position carries a height bound: a square stack on cell `i` may be
//! `1..=a_i` high, a domino stack covering `(i-1, i)` may be `1..=b_i` high,
//! and a bar stack covering `(i-2, i-1, i)` may be `1..=c_i` high — bounds
//! are indexed by the *last* cell the tile touches. `b_0`, `c_0` and `c_1`
//! have no linear-board meaning (the circular board reuses `b_0` and `c_1`
//! for its wrapping stacks).
//!
//! The total count satisfies the same tail recurrence as the convergent
//! numerator `A_n`,
//!
//! ```text
//! M(n) = a_n·M(n-1) + b_n·M(n-2) + c_n·M(n-3),
//! ```
//!
//! and the counting interpretation survives *negative* `b`/`c` entries: a
//! negative bound allows no stacks of its kind and instead discards certain
//! square- and domino-heavy tilings near its position (the exact rules are
//! documented at [`count_mixed`]), provided each position satisfies a sign
//! condition making enough discards available. Counters run the recurrence;
//! brute-force enumerators generate the tilings themselves and act as
//! independent oracles in the test suite.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Default ceiling on how many tilings an enumerator is willing to produce.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// Errors from constructing height conditions or running the tiling
/// operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TilingError {
    /// The three bound sequences do not have the same length.
    LengthMismatch {
        /// Length of the `a` sequence.
        a: usize,
        /// Length of the `b` sequence.
        b: usize,
        /// Length of the `c` sequence.
        c: usize,
    },
    /// Square bounds must be at least 1 everywhere.
    NonPositiveSquareBound {
        /// Offending position.
        index: usize,
        /// Its value.
        value: i64,
    },
    /// A position with negative `b` or `c` violates the sign conditions that
    /// make the discard rules well defined; see [`HeightConditions::new`].
    InvalidMixedConditions {
        /// Offending position.
        index: usize,
        /// Square bound there.
        a: i64,
        /// Signed domino bound there.
        b: i64,
        /// Signed bar bound there.
        c: i64,
    },
    /// A plain-mode operation was handed a negative bound; the mixed-mode
    /// operations handle those.
    MixedModeRequired {
        /// Which sequence holds the negative entry, `'b'` or `'c'`.
        sequence: char,
        /// Offending position.
        index: usize,
        /// Its value.
        value: i64,
    },
    /// The instance admits more tilings than the enumeration budget allows.
    InstanceTooLarge {
        /// Exact number of candidate tilings the instance generates.
        candidates: BigInt,
        /// The budget in force.
        budget: u64,
    },
    /// A degree-`m` bounds table is unusable: `tile_len` is the offending
    /// row's tile length, and either the row is shorter than the board or an
    /// entry is negative (`value`).
    BadBoundsTable {
        /// Tile length of the offending row (1-based).
        tile_len: usize,
        /// Offending position, or the row length when the row is too short.
        index: usize,
        /// Offending value, if any.
        value: Option<i64>,
    },
}

impl fmt::Display for TilingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TilingError::LengthMismatch { a, b, c } => write!(
                f,
                "bound sequences must have equal length (got a: {a}, b: {b}, c: {c})"
            ),
            TilingError::NonPositiveSquareBound { index, value } => {
                write!(f, "square bound a[{index}] = {value} must be at least 1")
            }
            TilingError::InvalidMixedConditions { index, a, b, c } => {
                write!(
                    f,
                    "signed bounds (a, b, c) = ({a}, {b}, {c}) at position {index} violate the \
                     mixed-mode sign condition: "
                )?;
                match (*b < 0, *c < 0) {
                    (true, false) => write!(f, "b < 0 with c >= 0 requires a > |b|"),
                    (false, true) => write!(f, "c < 0 with b >= 0 requires a > |c| or b > |c|"),
                    _ => write!(f, "b < 0 and c < 0 require a > |b| + |c|"),
                }
            }
            TilingError::MixedModeRequired {
                sequence,
                index,
                value,
            } => write!(
                f,
                "bound {sequence}[{index}] = {value} is negative; this operation only accepts \
                 plain (nonnegative) bounds"
            ),
            TilingError::InstanceTooLarge { candidates, budget } => write!(
                f,
                "instance generates {candidates} candidate tilings, above the enumeration \
                 budget of {budget}"
            ),
            TilingError::BadBoundsTable {
                tile_len,
                index,
                value: Some(value),
            } => write!(
                f,
                "bound {value} for tiles of length {tile_len} at position {index} is negative"
            ),
            TilingError::BadBoundsTable {
                tile_len, index, ..
            } => write!(
                f,
                "bounds row for tiles of length {tile_len} has only {index} entries, fewer \
                 than the board needs"
            ),
        }
    }
}

impl core::error::Error for TilingError {}

/// The per-position stacking bounds of a board: square bounds `a` (positive),
/// domino bounds `b` and bar bounds `c` (possibly negative in mixed mode).
///
/// An empty triple describes the empty board, which has exactly one (empty)
/// tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightConditions {
    a: Vec<i64>,
    b: Vec<i64>,
    c: Vec<i64>,
}

impl HeightConditions {
    /// Builds and validates height conditions.
    ///
    /// Besides equal lengths and `a_i ≥ 1`, every position with a negative
    /// bound must satisfy the sign condition that keeps the mixed-mode
    /// discard rules meaningful:
    ///
    /// * `b_i < 0, c_i ≥ 0` requires `a_i > |b_i|`;
    /// * `b_i ≥ 0, c_i < 0` requires `a_i > |c_i|` or `b_i > |c_i|`;
    /// * `b_i < 0, c_i < 0` requires `a_i > |b_i| + |c_i|`.
    pub fn new(a: &[i64], b: &[i64], c: &[i64]) -> Result<Self, TilingError> {
        if a.len() != b.len() || a.len() != c.len() {
            return Err(TilingError::LengthMismatch {
                a: a.len(),
                b: b.len(),
                c: c.len(),
            });
        }
        for (i, &ai) in a.iter().enumerate() {
            if ai < 1 {
                return Err(TilingError::NonPositiveSquareBound {
                    index: i,
                    value: ai,
                });
            }
            let (bi, ci) = (b[i], c[i]);
            let ok = match (bi < 0, ci < 0) {
                (false, false) => true,
                (true, false) => ai > -bi,
                (false, true) => ai > -ci || bi > -ci,
                (true, true) => ai > -bi - ci,
            };
            if !ok {
                return Err(TilingError::InvalidMixedConditions {
                    index: i,
                    a: ai,
                    b: bi,
                    c: ci,
                });
            }
        }
        Ok(HeightConditions {
            a: a.to_vec(),
            b: b.to_vec(),
            c: c.to_vec(),
        })
    }

    /// Number of board cells.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    /// Whether this is the empty board.
    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The square bounds.
    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// The signed domino bounds.
    pub fn b(&self) -> &[i64] {
        &self.b
    }

    /// The signed bar bounds.
    pub fn c(&self) -> &[i64] {
        &self.c
    }

    /// Whether all domino and bar bounds are nonnegative.
    pub fn is_plain(&self) -> bool {
        self.first_negative().is_none()
    }

    fn first_negative(&self) -> Option<(char, usize, i64)> {
        for (i, &v) in self.b.iter().enumerate() {
            if v < 0 {
                return Some(('b', i, v));
            }
        }
        for (i, &v) in self.c.iter().enumerate() {
            if v < 0 {
                return Some(('c', i, v));
            }
        }
        None
    }

    fn require_plain(&self) -> Result<(), TilingError> {
        match self.first_negative() {
            Some((sequence, index, value)) => Err(TilingError::MixedModeRequired {
                sequence,
                index,
                value,
            }),
            None => Ok(()),
        }
    }

    /// The sub-board consisting of cells `from..to`, with its bounds kept
    /// verbatim (bounds are indexed by a tile's last cell, so a translated
    /// segment keeps the same slice). Segment validity is inherited.
    fn segment(&self, from: usize, to: usize) -> HeightConditions {
        let to = to.min(self.len());
        let from = from.min(to);
        HeightConditions {
            a: self.a[from..to].to_vec(),
            b: self.b[from..to].to_vec(),
            c: self.c[from..to].to_vec(),
        }
    }
}

/// The three tile shapes, in canonical enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TileKind {
    /// One cell.
    Square,
    /// Two cells.
    Domino,
    /// Three cells.
    Bar,
}

impl TileKind {
    /// Number of cells the tile covers.
    pub fn cells(self) -> usize {
        match self {
            TileKind::Square => 1,
            TileKind::Domino => 2,
            TileKind::Bar => 3,
        }
    }

    /// Lower-case name, as used in the textual tiling format.
    pub fn name(self) -> &'static str {
        match self {
            TileKind::Square => "square",
            TileKind::Domino => "domino",
            TileKind::Bar => "bar",
        }
    }
}

/// One stack in a tiling: `height ≥ 1` copies of a tile whose leftmost cell
/// is `start`.
///
/// The derived ordering (kind, then start, then height) makes sequences of
/// placements compare in canonical enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    /// Tile shape.
    pub kind: TileKind,
    /// Leftmost covered cell (a circular wrapping stack starts at the last
    /// cell and covers onward modulo the board).
    pub start: usize,
    /// Stack height.
    pub height: i64,
}

/// A complete tiling: placements listed left to right by starting cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tiling {
    /// The stacks, in increasing `start` order.
    pub placements: Vec<Placement>,
}

/// One stack in a degree-`m` tiling, where tiles of any length `1..=m+1`
/// exist; the analogue of [`Placement`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StackPlacement {
    /// Tile length in cells.
    pub len: usize,
    /// Leftmost covered cell.
    pub start: usize,
    /// Stack height.
    pub height: i64,
}

/// Runs the signed tail recurrence with seeds `M(-1) = 1`, `M(-2) = M(-3) = 0`
/// and the given per-position coefficients.
fn tail_count(a: &[i64], b: &[i64], c: &[i64], seeds: (i64, i64, i64)) -> BigInt {
    let mut m1 = BigInt::from(seeds.0);
    let mut m2 = BigInt::from(seeds.1);
    let mut m3 = BigInt::from(seeds.2);
    for k in 0..a.len() {
        let cur = BigInt::from(a[k]) * &m1 + BigInt::from(b[k]) * &m2 + BigInt::from(c[k]) * &m3;
        m3 = m2;
        m2 = m1;
        m1 = cur;
    }
    m1
}

const SEEDS_A: (i64, i64, i64) = (1, 0, 0);
const SEEDS_B: (i64, i64, i64) = (0, 1, 0);

/// Counts the tilings of a plain board by the tail recurrence, in time linear
/// in the board length.
///
/// Equals the convergent numerator `A_n` of the same coefficient sequences
/// (the padding entries `b_0`, `c_0`, `c_1` never contribute), and equals
/// `enumerate_plain(h).len()` wherever the latter is affordable.
pub fn count_fast(h: &HeightConditions) -> Result<BigInt, TilingError> {
    h.require_plain()?;
    Ok(tail_count(h.a(), h.b(), h.c(), SEEDS_A))
}

/// Counts the tilings of the board extended by one cell on the left whose
/// first stack is a domino or a bar: the domino over `(-1, 0)` is bounded by
/// `b_0` and the bar over `(-1, 0, 1)` by `c_1`. This is the convergent
/// numerator `B_n`; the empty board yields the seed value `B_{-1} = 0`.
pub fn count_b(h: &HeightConditions) -> Result<BigInt, TilingError> {
    h.require_plain()?;
    Ok(tail_count(h.a(), h.b(), h.c(), SEEDS_B))
}

/// Counts the tilings of the board with its first cell dropped (conditions
/// `a_1..a_n` and matching `b`, `c`). This is the convergent denominator
/// `C_n` whenever `c_0 = 1`; the empty board yields the seed value
/// `C_{-1} = 0`.
pub fn count_c(h: &HeightConditions) -> Result<BigInt, TilingError> {
    h.require_plain()?;
    if h.is_empty() {
        return Ok(BigInt::zero());
    }
    let shifted = h.segment(1, h.len());
    Ok(tail_count(shifted.a(), shifted.b(), shifted.c(), SEEDS_A))
}

/// Counts the tilings of the *circular* board with cells `0..=n` arranged in
/// a ring. On top of the linear tilings, a stack may wrap across the seam,
/// anchored at cell `n`: a wrapping domino over `(n, 0)` bounded by `b_0`
/// (needs `n ≥ 1`), or a wrapping bar over `(n, 0, 1)` bounded by `c_1`
/// (needs `n ≥ 2`). Bars wrapping the other way, over `(n-1, n, 0)`, are
/// never placed — their bound (the otherwise-unused `c_0`) is read as 0, and
/// the entry's actual value is ignored.
///
/// The result equals `A_n + B_{n-1}` of the same coefficient sequences.
pub fn count_circular(h: &HeightConditions) -> Result<BigInt, TilingError> {
    h.require_plain()?;
    let mut total = tail_count(h.a(), h.b(), h.c(), SEEDS_A);
    if h.len() >= 2 {
        let head = h.segment(0, h.len() - 1);
        total += tail_count(head.a(), head.b(), head.c(), SEEDS_B);
    }
    Ok(total)
}

/// Counts the tilings of a board with signed domino/bar bounds by the same
/// tail recurrence as [`count_fast`], now with negative coefficients allowed.
///
/// A position `k` with a negative bound admits no stacks of that kind;
/// instead it *discards* otherwise-complete tilings:
///
/// * `b_k < 0, c_k ≥ 0`: a full square stack (height `a_{k-1}`) on cell
///   `k-1` forbids square stacks of height `≤ |b_k|` on cell `k`.
/// * `b_k ≥ 0, c_k < 0`, tall squares (`a_k > |c_k|`): full square stacks on
///   both `k-2` and `k-1` forbid square stacks of height `≤ |c_k|` on `k`.
/// * `b_k ≥ 0, c_k < 0`, otherwise (then `b_k > |c_k|`): a full square stack
///   on `k-2` forbids domino stacks of height `≤ |c_k|` over `(k-1, k)`.
/// * `b_k < 0, c_k < 0`: a full square stack on `k-1` forbids square stacks
///   on `k` of height `≤ |b_k| + |c_k|` when `k-2` also carries a full
///   square stack, and of height `≤ |b_k|` when it does not (including when
///   `k-2` is covered by a domino or bar, or does not exist).
///
/// The sign conditions enforced by [`HeightConditions::new`] guarantee the
/// discard sets are available, so the recurrence value is exactly the number
/// of admissible tilings and in particular nonnegative. [`enumerate_mixed`]
/// realises the discard rules literally and is the oracle for this counter.
pub fn count_mixed(h: &HeightConditions) -> BigInt {
    tail_count(h.a(), h.b(), h.c(), SEEDS_A)
}

fn check_budget(candidates: BigInt, budget: u64) -> Result<(), TilingError> {
    if candidates > BigInt::from(budget) {
        return Err(TilingError::InstanceTooLarge { candidates, budget });
    }
    Ok(())
}

/// Depth-first generation of all stacked tilings of `cells 0..len` under
/// nonnegative bounds, in canonical order: at every cell squares before
/// dominoes before bars, heights ascending.
fn generate_linear(a: &[i64], b: &[i64], c: &[i64], offset: usize, out: &mut Vec<Tiling>) {
    let mut current = Vec::new();
    dfs_linear(a, b, c, 0, offset, &mut current, out);
}

fn dfs_linear(
    a: &[i64],
    b: &[i64],
    c: &[i64],
    cell: usize,
    offset: usize,
    current: &mut Vec<Placement>,
    out: &mut Vec<Tiling>,
) {
    if cell == a.len() {
        out.push(Tiling {
            placements: current.clone(),
        });
        return;
    }
    for height in 1..=a[cell] {
        current.push(Placement {
            kind: TileKind::Square,
            start: offset + cell,
            height,
        });
        dfs_linear(a, b, c, cell + 1, offset, current, out);
        current.pop();
    }
    if cell + 1 < a.len() && b[cell + 1] > 0 {
        for height in 1..=b[cell + 1] {
            current.push(Placement {
                kind: TileKind::Domino,
                start: offset + cell,
                height,
            });
            dfs_linear(a, b, c, cell + 2, offset, current, out);
            current.pop();
        }
    }
    if cell + 2 < a.len() && c[cell + 2] > 0 {
        for height in 1..=c[cell + 2] {
            current.push(Placement {
                kind: TileKind::Bar,
                start: offset + cell,
                height,
            });
            dfs_linear(a, b, c, cell + 3, offset, current, out);
            current.pop();
        }
    }
}

/// Enumerates all tilings of a plain board in canonical order (squares
/// before dominoes before bars at each cell, heights ascending), under the
/// default budget of [`DEFAULT_ENUM_BUDGET`] tilings.
pub fn enumerate_plain(h: &HeightConditions) -> Result<Vec<Tiling>, TilingError> {
    enumerate_plain_with_budget(h, DEFAULT_ENUM_BUDGET)
}

/// [`enumerate_plain`] with an explicit budget. The exact tiling count is
/// pre-computed by the (cheap) recurrence and compared against the budget
/// before any tiling is materialised.
pub fn enumerate_plain_with_budget(
    h: &HeightConditions,
    budget: u64,
) -> Result<Vec<Tiling>, TilingError> {
    h.require_plain()?;
    check_budget(tail_count(h.a(), h.b(), h.c(), SEEDS_A), budget)?;
    let mut out = Vec::new();
    generate_linear(h.a(), h.b(), h.c(), 0, &mut out);
    Ok(out)
}

/// Enumerates the tilings of the circular board: first all linear tilings in
/// canonical order, then the wrapping-domino tilings, then the wrapping-bar
/// tilings (each block ordered by its interior tiling, then by wrap height).
/// The wrapping stack is listed last in its placement list, starting at the
/// final cell. See [`count_circular`] for the wrapping rules.
pub fn enumerate_circular(h: &HeightConditions) -> Result<Vec<Tiling>, TilingError> {
    enumerate_circular_with_budget(h, DEFAULT_ENUM_BUDGET)
}

/// [`enumerate_circular`] with an explicit budget.
pub fn enumerate_circular_with_budget(
    h: &HeightConditions,
    budget: u64,
) -> Result<Vec<Tiling>, TilingError> {
    h.require_plain()?;
    check_budget(count_circular(h)?, budget)?;
    let mut out = Vec::new();
    generate_linear(h.a(), h.b(), h.c(), 0, &mut out);
    let last = h.len().saturating_sub(1);
    for (wrap_kind, first_free, bound) in [
        (TileKind::Domino, 1, h.b().first().copied().unwrap_or(0)),
        (TileKind::Bar, 2, h.c().get(1).copied().unwrap_or(0)),
    ] {
        // The wrapping stack covers `first_free` cells at the left seam, so
        // it needs that many distinct cells besides cell `last`.
        if h.len() < first_free + 1 || bound <= 0 {
            continue;
        }
        let interior = h.segment(first_free, last);
        let mut inner = Vec::new();
        generate_linear(
            interior.a(),
            interior.b(),
            interior.c(),
            first_free,
            &mut inner,
        );
        for tiling in inner {
            for height in 1..=bound {
                let mut placements = tiling.placements.clone();
                placements.push(Placement {
                    kind: wrap_kind,
                    start: last,
                    height,
                });
                out.push(Tiling { placements });
            }
        }
    }
    Ok(out)
}

/// How a cell is covered, for the mixed-mode discard rules.
#[derive(Clone, Copy)]
struct CellCover {
    kind: TileKind,
    start: usize,
    height: i64,
}

fn cover_map(tiling: &Tiling, cells: usize) -> Vec<CellCover> {
    let mut cover = vec![
        CellCover {
            kind: TileKind::Square,
            start: 0,
            height: 0,
        };
        cells
    ];
    for p in &tiling.placements {
        let stamp = CellCover {
            kind: p.kind,
            start: p.start,
            height: p.height,
        };
        for slot in &mut cover[p.start..p.start + p.kind.cells()] {
            *slot = stamp;
        }
    }
    cover
}

/// Applies the per-position discard rules of [`count_mixed`] to one
/// candidate tiling.
#[allow(clippy::needless_range_loop)] // `k` also drives the k-1/k-2 lookbacks
fn survives_discards(h: &HeightConditions, cover: &[CellCover]) -> bool {
    let full_square = |j: usize| cover[j].kind == TileKind::Square && cover[j].height == h.a[j];
    let square_height = |j: usize| match cover[j].kind {
        TileKind::Square => Some(cover[j].height),
        _ => None,
    };
    for k in 0..h.len() {
        let (bk, ck) = (h.b[k], h.c[k]);
        if bk < 0 && ck >= 0 {
            if k >= 1 && full_square(k - 1) {
                if let Some(hk) = square_height(k) {
                    if hk <= -bk {
                        return false;
                    }
                }
            }
        } else if bk >= 0 && ck < 0 {
            if k < 2 || !full_square(k - 2) {
                continue;
            }
            if h.a[k] > -ck {
                if full_square(k - 1) {
                    if let Some(hk) = square_height(k) {
                        if hk <= -ck {
                            return false;
                        }
                    }
                }
            } else if cover[k].kind == TileKind::Domino
                && cover[k].start == k - 1
                && cover[k].height <= -ck
            {
                return false;
            }
        } else if bk < 0 && ck < 0 && k >= 1 && full_square(k - 1) {
            if let Some(hk) = square_height(k) {
                let limit = if k >= 2 && full_square(k - 2) {
                    -bk - ck
                } else {
                    -bk
                };
                if hk <= limit {
                    return false;
                }
            }
        }
    }
    true
}

/// Enumerates the admissible tilings of a board with signed bounds: all
/// candidate tilings under the clamped bounds `max(b, 0)`, `max(c, 0)` are
/// generated in canonical order, and those hit by a discard rule of
/// [`count_mixed`] are dropped.
pub fn enumerate_mixed(h: &HeightConditions) -> Result<Vec<Tiling>, TilingError> {
    enumerate_mixed_with_budget(h, DEFAULT_ENUM_BUDGET)
}

/// [`enumerate_mixed`] with an explicit budget, which bounds the *candidate*
/// count (pre-discard), since that is what drives the running time.
pub fn enumerate_mixed_with_budget(
    h: &HeightConditions,
    budget: u64,
) -> Result<Vec<Tiling>, TilingError> {
    let b_plus: Vec<i64> = h.b().iter().map(|&x| x.max(0)).collect();
    let c_plus: Vec<i64> = h.c().iter().map(|&x| x.max(0)).collect();
    check_budget(tail_count(h.a(), &b_plus, &c_plus, SEEDS_A), budget)?;
    let mut candidates = Vec::new();
    generate_linear(h.a(), &b_plus, &c_plus, 0, &mut candidates);
    Ok(candidates
        .into_iter()
        .filter(|t| survives_discards(h, &cover_map(t, h.len())))
        .collect())
}

fn validate_bounds_table(bounds: &[Vec<i64>], n: usize) -> Result<(), TilingError> {
    assert!(
        !bounds.is_empty(),
        "the bounds table needs at least the length-1 tile row"
    );
    for (j, row) in bounds.iter().enumerate() {
        let tile_len = j + 1;
        if row.len() < n + 1 {
            return Err(TilingError::BadBoundsTable {
                tile_len,
                index: row.len(),
                value: None,
            });
        }
        for (i, &v) in row.iter().enumerate().take(n + 1) {
            if v < 0 || (j == 0 && v == 0) {
                return Err(TilingError::BadBoundsTable {
                    tile_len,
                    index: i,
                    value: Some(v),
                });
            }
        }
    }
    Ok(())
}

/// Counts stacked tilings of the board `0..=n` with tiles of every length
/// `1..=m+1`, where `bounds[j][i] ≥ 0` bounds stacks of tiles of length
/// `j + 1` whose *last* cell is `i` (row 0, the square row, must be
/// positive). Rows longer than `n + 1` are allowed; the excess is ignored.
///
/// Runs the order-`m+1` tail recurrence
///
/// ```text
/// X_k = Σ_{j=0..m} bounds[j][k] · X_{k-1-j},     X_{-1} = 1, X_{<-1} = 0,
/// ```
///
/// so `m = 2` coincides with [`count_fast`] and `m = 1` with unit bounds
/// yields the Fibonacci numbers.
pub fn count_degree_m(bounds: &[Vec<i64>], n: usize) -> Result<BigInt, TilingError> {
    validate_bounds_table(bounds, n)?;
    // hist[t] holds X_{t-1}.
    let mut hist: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..=n {
        let mut acc = BigInt::zero();
        for (j, row) in bounds.iter().enumerate() {
            if k >= j {
                acc += BigInt::from(row[k]) * &hist[k - j];
            }
        }
        hist.push(acc);
    }
    Ok(hist.pop().expect("history is never empty"))
}

/// Brute-force companion of [`count_degree_m`]: enumerates the degree-`m`
/// tilings themselves, in canonical order (shorter tiles first at each cell,
/// heights ascending). Subject to the same budget scheme as the other
/// enumerators.
pub fn enumerate_degree_m(
    bounds: &[Vec<i64>],
    n: usize,
) -> Result<Vec<Vec<StackPlacement>>, TilingError> {
    enumerate_degree_m_with_budget(bounds, n, DEFAULT_ENUM_BUDGET)
}

/// [`enumerate_degree_m`] with an explicit budget.
pub fn enumerate_degree_m_with_budget(
    bounds: &[Vec<i64>],
    n: usize,
    budget: u64,
) -> Result<Vec<Vec<StackPlacement>>, TilingError> {
    validate_bounds_table(bounds, n)?;
    check_budget(count_degree_m(bounds, n)?, budget)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    dfs_degree_m(bounds, n + 1, 0, &mut current, &mut out);
    Ok(out)
}

fn dfs_degree_m(
    bounds: &[Vec<i64>],
    cells: usize,
    cell: usize,
    current: &mut Vec<StackPlacement>,
    out: &mut Vec<Vec<StackPlacement>>,
) {
    if cell == cells {
        out.push(current.clone());
        return;
    }
    for (j, row) in bounds.iter().enumerate() {
        let last = cell + j;
        if last >= cells || row[last] <= 0 {
            continue;
        }
        for height in 1..=row[last] {
            current.push(StackPlacement {
                len: j + 1,
                start: cell,
                height,
            });
            dfs_degree_m(bounds, cells, cell + j + 1, current, out);
            current.pop();
        }
    }
}
