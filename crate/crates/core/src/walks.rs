//! Path counting for finite jump systems.
//!
//! A jump has a time length (horizontal extent it consumes) and a height
//! change. A path is a sequence of jumps whose time lengths tile the total
//! length exactly; a jump is atomic, so constraints are checked at jump
//! endpoints. The four classes are: walks (unconstrained), bridges (end at
//! height 0), meanders (never below 0), and excursions (never below 0 and
//! end at 0).
//!
//! Up/down/double-level jumps give Schroeder paths as excursions and the
//! central Delannoy numbers as bridges; [`verify_bridge_decomposition`]
//! checks the series identity connecting the two.

use crate::delannoy::{central_sequence, CentralAlgorithm};
use crate::exactnum::{ExactInteger, ExactRational, TruncatedSeries};
use crate::report::{Mismatch, VerificationReport};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A single jump: consumes `time_len` units of length and changes the
/// height by `dh`. `time_len` must be at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Jump {
    pub time_len: usize,
    pub dh: i64,
}

impl Jump {
    pub const fn new(time_len: usize, dh: i64) -> Self {
        Jump { time_len, dh }
    }
}

impl fmt::Display for Jump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.time_len, self.dh)
    }
}

/// A nonempty set of pairwise distinct jumps.
#[derive(Debug, Clone)]
pub struct JumpSystem {
    jumps: Vec<Jump>,
}

impl JumpSystem {
    pub fn new(jumps: Vec<Jump>) -> Result<Self, WalkError> {
        if jumps.is_empty() {
            return Err(WalkError::EmptyJumpSystem);
        }
        for (i, j) in jumps.iter().enumerate() {
            if j.time_len == 0 {
                return Err(WalkError::ZeroTimeLen(*j));
            }
            if jumps[..i].contains(j) {
                return Err(WalkError::DuplicateJump(*j));
            }
        }
        Ok(JumpSystem { jumps })
    }

    /// Unit up and down steps.
    pub fn dyck() -> Self {
        JumpSystem::new(vec![Jump::new(1, 1), Jump::new(1, -1)]).unwrap()
    }

    /// Unit up, unit down, and a level step of length 2. Excursions of this
    /// system are Schroeder paths; bridges of length 2n are counted by the
    /// central Delannoy numbers.
    pub fn delannoy() -> Self {
        JumpSystem::new(vec![Jump::new(1, 1), Jump::new(1, -1), Jump::new(2, 0)]).unwrap()
    }

    pub fn jumps(&self) -> &[Jump] {
        &self.jumps
    }

    fn max_abs_dh(&self) -> i64 {
        self.jumps.iter().map(|j| j.dh.abs()).max().unwrap_or(0)
    }
}

/// One of the four path classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    Walk,
    Bridge,
    Meander,
    Excursion,
}

impl PathClass {
    pub fn name(&self) -> &'static str {
        match self {
            PathClass::Walk => "walk",
            PathClass::Bridge => "bridge",
            PathClass::Meander => "meander",
            PathClass::Excursion => "excursion",
        }
    }
}

/// Optional strip constraint; `None` on a side means unbounded. When both
/// sides are finite the strip must contain the origin: lower <= 0 <= upper.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StripBounds {
    pub lower: Option<i64>,
    pub upper: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkError {
    EmptyJumpSystem,
    ZeroTimeLen(Jump),
    DuplicateJump(Jump),
    /// Bridges and excursions end at 0; another endpoint was requested.
    InvalidEnd { class: PathClass, end: i64 },
    /// The strip does not contain the starting height 0.
    InvalidBounds {
        lower: Option<i64>,
        upper: Option<i64>,
    },
}

impl fmt::Display for WalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkError::EmptyJumpSystem => write!(f, "jump system must be nonempty"),
            WalkError::ZeroTimeLen(j) => write!(f, "jump {} must have time length >= 1", j),
            WalkError::DuplicateJump(j) => write!(f, "duplicate jump {}", j),
            WalkError::InvalidEnd { class, end } => {
                write!(f, "{} paths end at 0, cannot request end {}", class.name(), end)
            }
            WalkError::InvalidBounds { lower, upper } => write!(
                f,
                "strip [{}, {}] does not contain the origin",
                lower.map_or("-inf".into(), |v| v.to_string()),
                upper.map_or("+inf".into(), |v| v.to_string()),
            ),
        }
    }
}

impl std::error::Error for WalkError {}

/// Forward DP table: counts[t][h - lo] = number of jump sequences of total
/// time exactly t from height 0 staying within [lo, hi].
struct DpTable {
    lo: i64,
    rows: Vec<Vec<ExactInteger>>,
}

impl DpTable {
    fn count(&self, t: usize, h: i64) -> ExactInteger {
        let hi = self.lo + self.rows[t].len() as i64 - 1;
        if h < self.lo || h > hi {
            return ExactInteger::zero();
        }
        self.rows[t][(h - self.lo) as usize].clone()
    }

    fn row_total(&self, t: usize) -> ExactInteger {
        self.rows[t].iter().sum()
    }
}

fn run_dp(js: &JumpSystem, length: usize, lo: i64, hi: i64) -> DpTable {
    debug_assert!(lo <= 0 && 0 <= hi);
    let span = (hi - lo) as usize + 1;
    let mut rows = vec![vec![ExactInteger::zero(); span]; length + 1];
    rows[0][(-lo) as usize] = ExactInteger::one();
    for t in 0..length {
        for idx in 0..span {
            if rows[t][idx].is_zero() {
                continue;
            }
            let h = lo + idx as i64;
            for jump in js.jumps() {
                let t2 = t + jump.time_len;
                if t2 > length {
                    continue;
                }
                let h2 = h + jump.dh;
                if h2 < lo || h2 > hi {
                    continue;
                }
                let add = rows[t][idx].clone();
                rows[t2][(h2 - lo) as usize] += add;
            }
        }
    }
    DpTable { lo, rows }
}

/// Effective window for the DP given class constraint, user bounds, and the
/// crude reachability bound length * max|dh|.
fn window(
    js: &JumpSystem,
    class: PathClass,
    length: usize,
    bounds: Option<StripBounds>,
) -> (i64, i64) {
    let reach = js.max_abs_dh() * length as i64;
    let user = bounds.unwrap_or_default();
    let mut lo = user.lower.map_or(-reach, |l| l.max(-reach));
    if matches!(class, PathClass::Meander | PathClass::Excursion) {
        lo = lo.max(0);
    }
    let hi = user.upper.map_or(reach, |u| u.min(reach));
    (lo, hi)
}

/// Exact number of paths of the given class and total length, starting at
/// height 0.
///
/// `end` restricts the final height (bridges and excursions already force
/// 0 and reject anything else). `bounds` is an optional strip the whole
/// path must stay inside, intersected with the implicit lower bound 0 for
/// meanders and excursions. The empty path counts once at length 0.
pub fn count_paths(
    js: &JumpSystem,
    class: PathClass,
    length: usize,
    end: Option<i64>,
    bounds: Option<StripBounds>,
) -> Result<ExactInteger, WalkError> {
    if let Some(b) = bounds {
        if b.lower.is_some_and(|l| l > 0) || b.upper.is_some_and(|u| u < 0) {
            return Err(WalkError::InvalidBounds {
                lower: b.lower,
                upper: b.upper,
            });
        }
    }
    let target = match class {
        PathClass::Bridge | PathClass::Excursion => match end {
            Some(e) if e != 0 => return Err(WalkError::InvalidEnd { class, end: e }),
            _ => Some(0),
        },
        PathClass::Walk | PathClass::Meander => end,
    };
    let (lo, hi) = window(js, class, length, bounds);
    let table = run_dp(js, length, lo, hi);
    Ok(match target {
        Some(e) => table.count(length, e),
        None => table.row_total(length),
    })
}

/// Counts of meanders of the given total length grouped by final height.
/// Heights with no path are omitted; the values sum to the meander count.
pub fn meander_end_profile(js: &JumpSystem, length: usize) -> BTreeMap<i64, ExactInteger> {
    let reach = js.max_abs_dh() * length as i64;
    let table = run_dp(js, length, 0, reach.max(0));
    let mut profile = BTreeMap::new();
    for (idx, count) in table.rows[length].iter().enumerate() {
        if !count.is_zero() {
            profile.insert(idx as i64, count.clone());
        }
    }
    profile
}

/// The large Schroeder numbers s_0 .. s_{n_max}: s_n is the number of
/// excursions of length 2n with up/down/double-level jumps. Computed by the
/// excursion DP, independently of any series algebra.
pub fn schroeder_numbers(n_max: usize) -> Vec<ExactInteger> {
    let js = JumpSystem::delannoy();
    let length = 2 * n_max;
    let table = run_dp(&js, length, 0, length as i64);
    (0..=n_max).map(|j| table.count(2 * j, 0)).collect()
}

/// The Schroeder generating function as a truncated series in z, where z
/// marks one unit of time, so s_n sits at z^{2n}.
///
/// Built from the closed form (1 - z^2 - sqrt(1 - 6z^2 + z^4)) / (2 z^2),
/// rationalized to 2 / (1 - z^2 + sqrt(1 - 6z^2 + z^4)) so no coefficient
/// shift is needed.
pub fn schroeder_series(order: usize) -> TruncatedSeries {
    let radicand = TruncatedSeries::from_int_coeffs(&[1, 0, -6, 0, 1], order);
    let root = radicand.sqrt().expect("constant term is 1");
    let denom = TruncatedSeries::from_int_coeffs(&[1, 0, -1], order).add(&root);
    TruncatedSeries::from_int_coeffs(&[2], order)
        .div(&denom)
        .expect("constant term is 2")
}

/// Checks z^2 S^2 - (1 - z^2) S + 1 = 0 coefficient-wise up to `order`,
/// the algebraic equation satisfied by the Schroeder series.
pub fn verify_schroeder_algebraic(order: usize) -> VerificationReport {
    let identity = "schroeder-algebraic";
    let checked = format!("coefficients z^0..=z^{}", order);
    let s = schroeder_series(order);
    let z2 = TruncatedSeries::from_int_coeffs(&[0, 0, 1], order);
    let one_minus_z2 = TruncatedSeries::from_int_coeffs(&[1, 0, -1], order);
    let residual = z2
        .mul(&s.mul(&s))
        .sub(&one_minus_z2.mul(&s))
        .add(&TruncatedSeries::one(order));
    for k in 0..=order {
        let c = residual.coeff(k).unwrap();
        if !c.is_zero() {
            return VerificationReport::fail(
                identity,
                checked,
                Mismatch {
                    location: format!("z^{}", k),
                    expected: "0".into(),
                    actual: c.to_string(),
                },
            );
        }
    }
    VerificationReport::pass(identity, checked)
}

/// Checks the bridge decomposition: a bridge is a sequence of excursions
/// above or below the axis separated by level runs, so
///
/// D(z^2) = 1 / (1 - 2 z^2 S(z) / (1 - z^2)) * 1 / (1 - z^2)
///
/// where D is the central generating function and S the Schroeder series.
/// The left side is built from the grid DP, the right side from series
/// algebra, so the two routes are independent. Odd coefficients must vanish
/// and are checked explicitly.
pub fn verify_bridge_decomposition(order: usize) -> VerificationReport {
    let identity = "bridge-decomposition";
    let checked = format!("coefficients z^0..=z^{}", order);

    let s = schroeder_series(order);
    let geom = TruncatedSeries::one(order)
        .div(&TruncatedSeries::from_int_coeffs(&[1, 0, -1], order))
        .expect("constant term is 1");
    let inner = TruncatedSeries::from_int_coeffs(&[0, 0, 2], order)
        .mul(&s)
        .mul(&geom);
    let rhs = TruncatedSeries::one(order)
        .div(&TruncatedSeries::one(order).sub(&inner))
        .expect("constant term is 1")
        .mul(&geom);

    let central = central_sequence(order / 2, CentralAlgorithm::GridDp);
    for k in 0..=order {
        let expected = if k % 2 == 0 {
            ExactRational::from_integer(central[k / 2].clone())
        } else {
            ExactRational::zero()
        };
        let actual = rhs.coeff(k).unwrap();
        if actual != &expected {
            return VerificationReport::fail(
                identity,
                checked,
                Mismatch {
                    location: format!("z^{}", k),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                },
            );
        }
    }
    VerificationReport::pass(identity, checked)
}
