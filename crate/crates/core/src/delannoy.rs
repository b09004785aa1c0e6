//! The Delannoy array and the central sequence by independent algorithms.
//!
//! `D(n, k)` counts walks from (0,0) to (n,k) with unit east, north and
//! diagonal steps. The central sequence `d_n = D(n, n)` is computed by five
//! mutually independent routes — grid dynamic programming, a binomial sum, a
//! linear recurrence with polynomial coefficients, series extraction from
//! `1/sqrt(1 - 6z + z^2)`, and Legendre-polynomial evaluation at 3 — so each
//! can serve as a check on the others. The grid DP is the reference oracle:
//! it is the most direct transcription of the walk definition.

use crate::exactnum::{binomial, ExactInteger, ExactRational, TruncatedSeries};
use crate::report::{Mismatch, VerificationReport};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Selector for the algorithm computing the central sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralAlgorithm {
    /// Row-by-row table recurrence (the reference oracle).
    GridDp,
    /// d_n = sum_i C(n,i)^2 2^i.
    BinomialSum,
    /// (n+2) d_{n+2} = (6n+9) d_{n+1} - (n+1) d_n, linear number of
    /// big-integer operations.
    PRecurrence,
    /// Coefficient extraction from 1/sqrt(1 - 6z + z^2).
    SeriesExtraction,
    /// Legendre polynomial value P_n(3).
    Legendre,
}

impl CentralAlgorithm {
    pub const ALL: [CentralAlgorithm; 5] = [
        CentralAlgorithm::GridDp,
        CentralAlgorithm::BinomialSum,
        CentralAlgorithm::PRecurrence,
        CentralAlgorithm::SeriesExtraction,
        CentralAlgorithm::Legendre,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CentralAlgorithm::GridDp => "dp",
            CentralAlgorithm::BinomialSum => "sum",
            CentralAlgorithm::PRecurrence => "rec",
            CentralAlgorithm::SeriesExtraction => "series",
            CentralAlgorithm::Legendre => "legendre",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DelannoyError {
    /// The Legendre recurrence produced a non-integral value. The value
    /// P_n(3) is provably integral, so this indicates an implementation bug.
    InternalNonInteger { n: usize },
}

impl fmt::Display for DelannoyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DelannoyError::InternalNonInteger { n } => {
                write!(f, "P_{}(3) evaluated to a non-integer", n)
            }
        }
    }
}

impl std::error::Error for DelannoyError {}

/// The full array D(n, k) for 0 <= n <= n_max, 0 <= k <= k_max.
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct DelannoyTable {
    n_max: usize,
    k_max: usize,
    // flat, index = n * (k_max + 1) + k
    entries: Vec<ExactInteger>,
}

impl DelannoyTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn entry(&self, n: usize, k: usize) -> &ExactInteger {
        assert!(n <= self.n_max && k <= self.k_max, "index out of range");
        &self.entries[n * (self.k_max + 1) + k]
    }
}

/// Builds the table with the Pascal-like recurrence
/// D(n,k) = D(n-1,k) + D(n,k-1) + D(n-1,k-1), D(n,k) = 1 on the axes.
///
/// Out-of-range indices count as zero, which makes the recurrence total.
pub fn delannoy_table(n_max: usize, k_max: usize) -> DelannoyTable {
    let cols = k_max + 1;
    let mut entries = Vec::with_capacity((n_max + 1) * cols);
    for n in 0..=n_max {
        for k in 0..=k_max {
            let v = if n == 0 || k == 0 {
                ExactInteger::one()
            } else {
                let above: &ExactInteger = &entries[(n - 1) * cols + k];
                let left: &ExactInteger = &entries[n * cols + k - 1];
                let diag: &ExactInteger = &entries[(n - 1) * cols + k - 1];
                above + left + diag
            };
            entries.push(v);
        }
    }
    DelannoyTable {
        n_max,
        k_max,
        entries,
    }
}

/// D(n, k) by the closed-form sum `sum_i C(n,i) C(k,i) 2^i`.
pub fn delannoy_binomial(n: usize, k: usize) -> ExactInteger {
    let mut total = ExactInteger::zero();
    let mut c_n = ExactInteger::one();
    let mut c_k = ExactInteger::one();
    let mut pow2 = ExactInteger::one();
    for i in 0..=n.min(k) {
        if i > 0 {
            c_n = c_n * ExactInteger::from((n - i + 1) as u64) / ExactInteger::from(i as u64);
            c_k = c_k * ExactInteger::from((k - i + 1) as u64) / ExactInteger::from(i as u64);
            pow2 *= 2;
        }
        total += &c_n * &c_k * &pow2;
    }
    total
}

/// Number of walks to (n, k) that use exactly m jumps.
///
/// A walk with d diagonal steps uses m = n + k - d jumps, so the count is
/// the multinomial m! / (d! (n-d)! (k-d)!) when max(n,k) <= m <= n+k and 0
/// otherwise. Summing over m recovers D(n, k).
pub fn delannoy_count_by_length(n: usize, k: usize, m: usize) -> ExactInteger {
    if m < n.max(k) || m > n + k {
        return ExactInteger::zero();
    }
    let d = n + k - m;
    binomial(m as u64, d as i64) * binomial((m - d) as u64, (n - d) as i64)
}

/// The central sequence d_0 .. d_{n_max} by the chosen algorithm.
pub fn central_sequence(n_max: usize, algo: CentralAlgorithm) -> Vec<ExactInteger> {
    match algo {
        CentralAlgorithm::GridDp => central_by_grid(n_max),
        CentralAlgorithm::BinomialSum => (0..=n_max).map(|j| delannoy_binomial(j, j)).collect(),
        CentralAlgorithm::PRecurrence => central_by_recurrence(n_max),
        CentralAlgorithm::SeriesExtraction => central_by_series(n_max),
        CentralAlgorithm::Legendre => (0..=n_max)
            .map(|j| legendre_at_3(j).expect("P_n(3) is integral"))
            .collect(),
    }
}

/// d_n by the chosen algorithm. All selectors return the same value.
pub fn central_delannoy(n: usize, algo: CentralAlgorithm) -> ExactInteger {
    match algo {
        CentralAlgorithm::BinomialSum => delannoy_binomial(n, n),
        CentralAlgorithm::Legendre => legendre_at_3(n).expect("P_n(3) is integral"),
        _ => central_sequence(n, algo).pop().expect("nonempty sequence"),
    }
}

fn central_by_grid(n_max: usize) -> Vec<ExactInteger> {
    // Rolling-row DP over the square table; d_k is the diagonal entry of
    // row k. Keeps O(n_max) entries live.
    let mut diag = Vec::with_capacity(n_max + 1);
    let mut prev: Vec<ExactInteger> = vec![ExactInteger::one(); n_max + 1];
    diag.push(ExactInteger::one());
    for k in 1..=n_max {
        let mut row = Vec::with_capacity(n_max + 1);
        row.push(ExactInteger::one());
        for n in 1..=n_max {
            let v = &row[n - 1] + &prev[n] + &prev[n - 1];
            row.push(v);
        }
        diag.push(row[k].clone());
        prev = row;
    }
    diag
}

fn central_by_recurrence(n_max: usize) -> Vec<ExactInteger> {
    let mut seq = vec![ExactInteger::one()];
    if n_max == 0 {
        return seq;
    }
    seq.push(ExactInteger::from(3));
    for j in 0..n_max.saturating_sub(1) {
        // (j+2) d_{j+2} = (6j+9) d_{j+1} - (j+1) d_j
        let numer = ExactInteger::from(6 * j as u64 + 9) * &seq[j + 1]
            - ExactInteger::from(j as u64 + 1) * &seq[j];
        let (q, r) = numer.div_rem(&ExactInteger::from(j as u64 + 2));
        assert!(r.is_zero(), "recurrence step must divide exactly");
        seq.push(q);
    }
    seq
}

fn central_by_series(n_max: usize) -> Vec<ExactInteger> {
    let kernel = TruncatedSeries::from_int_coeffs(&[1, -6, 1], n_max);
    let root = kernel.sqrt().expect("constant term is 1");
    let series = TruncatedSeries::one(n_max)
        .div(&root)
        .expect("constant term is 1");
    series
        .coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "central coefficients are integers");
            c.to_integer()
        })
        .collect()
}

/// P_n(3) by the three-term Legendre recurrence
/// (j+1) P_{j+1}(x) = (2j+1) x P_j(x) - j P_{j-1}(x), evaluated in exact
/// rational arithmetic. The result is integral at x = 3; a non-integral
/// value is reported as an error rather than truncated.
pub fn legendre_at_3(n: usize) -> Result<ExactInteger, DelannoyError> {
    let x = ExactRational::from_integer(ExactInteger::from(3));
    let mut prev = ExactRational::one(); // P_0
    if n == 0 {
        return rational_to_integer(&prev, 0);
    }
    let mut curr = x.clone(); // P_1
    for j in 1..n {
        let jr = ExactRational::from_integer(ExactInteger::from(j as u64));
        let two_j_plus_1 = ExactRational::from_integer(ExactInteger::from(2 * j as u64 + 1));
        let j_plus_1 = ExactRational::from_integer(ExactInteger::from(j as u64 + 1));
        let next = (two_j_plus_1 * &x * &curr - jr * &prev) / j_plus_1;
        prev = curr;
        curr = next;
    }
    rational_to_integer(&curr, n)
}

fn rational_to_integer(v: &ExactRational, n: usize) -> Result<ExactInteger, DelannoyError> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(DelannoyError::InternalNonInteger { n })
    }
}

/// Checks that the series route reproduces the grid DP: builds
/// D(z) = 1/sqrt(1 - 6z + z^2), verifies (1 - 6z + z^2) D(z)^2 = 1, and
/// compares every coefficient with the DP sequence.
pub fn verify_central_gf(order: usize) -> VerificationReport {
    let identity = "gf-central";
    let checked = format!("series order 0..={}", order);
    let kernel = TruncatedSeries::from_int_coeffs(&[1, -6, 1], order);
    let d = TruncatedSeries::one(order)
        .div(&kernel.sqrt().expect("constant term is 1"))
        .expect("constant term is 1");

    let square_back = kernel.mul(&d.mul(&d));
    let one = TruncatedSeries::one(order);
    for i in 0..=order {
        if square_back.coeff(i) != one.coeff(i) {
            return VerificationReport::fail(
                identity,
                checked,
                Mismatch {
                    location: format!("(1-6z+z^2)*D^2 at z^{}", i),
                    expected: one.coeff(i).unwrap().to_string(),
                    actual: square_back.coeff(i).unwrap().to_string(),
                },
            );
        }
    }

    let dp = central_sequence(order, CentralAlgorithm::GridDp);
    for (i, expected) in dp.iter().enumerate() {
        let got = d.coeff(i).unwrap();
        if !got.is_integer() || &got.to_integer() != expected {
            return VerificationReport::fail(
                identity,
                checked,
                Mismatch {
                    location: format!("z^{}", i),
                    expected: expected.to_string(),
                    actual: got.to_string(),
                },
            );
        }
    }
    VerificationReport::pass(identity, checked)
}

/// Checks the residual (n+2) d_{n+2} - (6n+9) d_{n+1} + (n+1) d_n = 0 with
/// grid-DP values for 0 <= n <= n_max.
pub fn verify_p_recurrence(n_max: usize) -> VerificationReport {
    let identity = "p-recurrence";
    let checked = format!("residuals for n in 0..={}", n_max);
    let d = central_sequence(n_max + 2, CentralAlgorithm::GridDp);
    for n in 0..=n_max {
        let residual = ExactInteger::from(n as u64 + 2) * &d[n + 2]
            - ExactInteger::from(6 * n as u64 + 9) * &d[n + 1]
            + ExactInteger::from(n as u64 + 1) * &d[n];
        if !residual.is_zero() {
            return VerificationReport::fail(
                identity,
                checked,
                Mismatch {
                    location: format!("n = {}", n),
                    expected: "0".into(),
                    actual: residual.to_string(),
                },
            );
        }
    }
    VerificationReport::pass(identity, checked)
}

/// Checks P_n(3) = d_n against the grid DP for 0 <= n <= n_max.
pub fn verify_legendre(n_max: usize) -> VerificationReport {
    let identity = "legendre";
    let checked = format!("n in 0..={}", n_max);
    let dp = central_sequence(n_max, CentralAlgorithm::GridDp);
    for (n, expected) in dp.iter().enumerate() {
        let got = match legendre_at_3(n) {
            Ok(v) => v,
            Err(e) => {
                return VerificationReport::fail(
                    identity,
                    checked,
                    Mismatch {
                        location: format!("n = {}", n),
                        expected: expected.to_string(),
                        actual: e.to_string(),
                    },
                )
            }
        };
        if &got != expected {
            return VerificationReport::fail(
                identity,
                checked,
                Mismatch {
                    location: format!("n = {}", n),
                    expected: expected.to_string(),
                    actual: got.to_string(),
                },
            );
        }
    }
    VerificationReport::pass(identity, checked)
}
