//! Duration of the fair two-player ruin game.
//!
//! Each player stakes n francs and one franc changes hands per round, so
//! the game is a fair +-1 walk started at 0 with absorbing barriers at +n
//! and -n; the game ends when a barrier is hit. Everything is exact: the
//! probability of ruin at round m is a rational with denominator 2^(m-1).
//!
//! Three routes to the same number: a forward DP over (step, height) with
//! exact rational mass (the reference oracle), an alternating binomial sum,
//! and a trigonometric sum evaluated in floating point.

use crate::exactnum::{binomial, ExactInteger, ExactRational};
use crate::report::{Mismatch, VerificationReport};
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Query for the probability that the game ends exactly at round m in the
/// strip [-n, n]. Requires n >= 1 and m >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuinSpec {
    n: u32,
    m: u64,
}

impl RuinSpec {
    pub fn new(n: u32, m: u64) -> Result<Self, RuinError> {
        if n == 0 {
            return Err(RuinError::ZeroHalfWidth);
        }
        if m == 0 {
            return Err(RuinError::ZeroRound);
        }
        Ok(RuinSpec { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuinError {
    ZeroHalfWidth,
    ZeroRound,
}

impl fmt::Display for RuinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuinError::ZeroHalfWidth => write!(f, "strip half-width must be >= 1"),
            RuinError::ZeroRound => write!(f, "round index must be >= 1"),
        }
    }
}

impl std::error::Error for RuinError {}

/// Mass absorbed at the upper and lower barrier at each step 1..=horizon.
///
/// This is the shared DP core: alive mass lives on heights -(n-1)..=(n-1),
/// each step splits in half toward both neighbours, and whatever steps onto
/// +-n leaves the game. In a fair game the two sides stay exactly equal at
/// every step.
pub fn absorption_by_step(n: u32, horizon: u64) -> Vec<(ExactRational, ExactRational)> {
    assert!(n >= 1, "half-width must be >= 1");
    let width = (2 * n - 1) as usize; // alive heights, index i = height i - (n-1)
    let half = ExactRational::new(ExactInteger::one(), ExactInteger::from(2));
    let mut alive = vec![ExactRational::zero(); width];
    alive[(n - 1) as usize] = ExactRational::one();
    let mut out = Vec::with_capacity(horizon as usize);
    for _ in 1..=horizon {
        let mut next = vec![ExactRational::zero(); width];
        for (i, mass) in alive.iter().enumerate() {
            if mass.is_zero() {
                continue;
            }
            let moving = mass * &half;
            if i + 1 < width {
                next[i + 1] += &moving;
            }
            if i >= 1 {
                next[i - 1] += &moving;
            }
        }
        let up = &alive[width - 1] * &half;
        let down = &alive[0] * &half;
        out.push((up, down));
        alive = next;
    }
    out
}

/// Probability that absorption happens exactly at step m, by the forward
/// DP. This is the reference oracle for the closed forms.
pub fn ruin_prob_dp(spec: RuinSpec) -> ExactRational {
    let steps = absorption_by_step(spec.n, spec.m);
    let (up, down) = &steps[spec.m as usize - 1];
    up + down
}

/// The same probability by the alternating binomial sum
///
/// (n / 2^(m-1)) * sum_k (-1)^k (2k+1) / ((m+n)/2 + kn) * C(m-1, q - kn)
///
/// with q = (m - n)/2, summed for 0 <= k <= floor(q/n). Zero whenever m < n
/// or m and n have different parity.
pub fn ruin_prob_binomial(spec: RuinSpec) -> ExactRational {
    let n = spec.n as u64;
    let m = spec.m;
    if m < n || !(m - n).is_multiple_of(2) {
        return ExactRational::zero();
    }
    let q = (m - n) / 2;
    let mut sum = ExactRational::zero();
    for k in 0..=q / n {
        let numer = ExactInteger::from(2 * k + 1);
        let denom = ExactInteger::from((m + n) / 2 + k * n);
        let choose = binomial(m - 1, (q - k * n) as i64);
        let term = ExactRational::new(numer * choose, denom);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let prefactor = ExactRational::new(
        ExactInteger::from(n),
        ExactInteger::one() << (m - 1) as usize,
    );
    prefactor * sum
}

/// The same probability by the trigonometric sum
///
/// ((-1)^(m-n) / n) * sum_{k=1..n} (-1)^(k-1)
///     sin((2k-1) pi / 2n) cos^(m-1)((2k-1) pi / 2n)
///
/// evaluated in double precision. At n = 1, m = 1 the cos^0 factor is 1
/// even though cos(pi/2) = 0, which `powi` already provides.
pub fn ruin_prob_trig(spec: RuinSpec) -> f64 {
    let n = spec.n as u64;
    let m = spec.m;
    let nf = n as f64;
    let mut sum = 0.0;
    for k in 1..=n {
        let angle = (2 * k - 1) as f64 * std::f64::consts::PI / (2.0 * nf);
        let term = angle.sin() * angle.cos().powi((m - 1) as i32);
        if k % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let lead_sign = if (m + n).is_multiple_of(2) { 1.0 } else { -1.0 };
    lead_sign / nf * sum
}

/// The exact law of the ruin time up to a horizon.
///
/// `probs` holds only the rounds with positive probability (rounds below n
/// or of the wrong parity are zero); `survival` is the mass not yet
/// absorbed at the horizon. The stored masses and the survival sum to 1
/// exactly.
#[derive(Debug, Clone)]
pub struct DurationDistribution {
    n: u32,
    probs: BTreeMap<u64, ExactRational>,
    survival: ExactRational,
}

impl DurationDistribution {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn probs(&self) -> &BTreeMap<u64, ExactRational> {
        &self.probs
    }

    pub fn survival(&self) -> &ExactRational {
        &self.survival
    }

    /// Probability of absorption exactly at round m (zero if not stored).
    pub fn prob_at(&self, m: u64) -> ExactRational {
        self.probs.get(&m).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Partial expected duration sum m * P(m) over the stored horizon.
    pub fn partial_mean(&self) -> ExactRational {
        self.probs
            .iter()
            .map(|(m, p)| ExactRational::from_integer(ExactInteger::from(*m)) * p)
            .sum()
    }
}

/// Runs the absorption DP to `horizon` rounds. Requires horizon >= n (the
/// first round at which absorption is possible).
pub fn duration_distribution(n: u32, horizon: u64) -> DurationDistribution {
    assert!(n >= 1, "half-width must be >= 1");
    assert!(horizon >= n as u64, "horizon must be at least n");
    let steps = absorption_by_step(n, horizon);
    let mut probs = BTreeMap::new();
    let mut total = ExactRational::zero();
    for (i, (up, down)) in steps.into_iter().enumerate() {
        let p = up + down;
        if !p.is_zero() {
            total += &p;
            probs.insert(i as u64 + 1, p);
        }
    }
    let survival = ExactRational::one() - total;
    DurationDistribution { n, probs, survival }
}

/// Exact expected absolute lead |S_{2n}| of a fair +-1 walk after 2n free
/// steps: sum_j |2j - 2n| C(2n, j) / 2^(2n).
pub fn expected_abs_lead(n: u64) -> ExactRational {
    assert!(n >= 1, "need at least one pair of games");
    let steps = 2 * n;
    let mut numer = ExactInteger::zero();
    let mut choose = ExactInteger::one(); // C(2n, 0)
    for j in 0..=steps {
        if j > 0 {
            choose = choose * ExactInteger::from(steps - j + 1) / ExactInteger::from(j);
        }
        let lead = (2 * j as i64 - steps as i64).abs();
        numer += ExactInteger::from(lead) * &choose;
    }
    ExactRational::new(numer, ExactInteger::one() << steps as usize)
}

/// Cross-checks the three routes for all 1 <= n <= n_max, n-parity rounds
/// up to m_max: binomial equals DP exactly, the trigonometric value is
/// within `tol`, and off-parity rounds are exactly zero.
pub fn verify_agreement(n_max: u32, m_max: u64, tol: f64) -> VerificationReport {
    let identity = "ruin-agreement";
    let checked = format!("n in 1..={}, m in 1..={}, tol {:e}", n_max, m_max, tol);
    for n in 1..=n_max {
        let steps = absorption_by_step(n, m_max);
        for m in 1..=m_max {
            let (up, down) = &steps[m as usize - 1];
            let exact = up + down;
            let spec = RuinSpec::new(n, m).expect("valid spec");
            let by_sum = ruin_prob_binomial(spec);
            if by_sum != exact {
                return VerificationReport::fail(
                    identity,
                    checked,
                    Mismatch {
                        location: format!("binomial at n = {}, m = {}", n, m),
                        expected: exact.to_string(),
                        actual: by_sum.to_string(),
                    },
                );
            }
            if (m < n as u64 || !(m + n as u64).is_multiple_of(2)) && !exact.is_zero() {
                return VerificationReport::fail(
                    identity,
                    checked,
                    Mismatch {
                        location: format!("parity zero at n = {}, m = {}", n, m),
                        expected: "0".into(),
                        actual: exact.to_string(),
                    },
                );
            }
            let by_trig = ruin_prob_trig(spec);
            let exact_f = exact.to_f64().expect("probability fits in f64");
            if (by_trig - exact_f).abs() > tol {
                return VerificationReport::fail(
                    identity,
                    checked,
                    Mismatch {
                        location: format!("trig at n = {}, m = {}", n, m),
                        expected: format!("{}", exact_f),
                        actual: format!("{}", by_trig),
                    },
                );
            }
        }
    }
    VerificationReport::pass(identity, checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn rat(n: i64, d: i64) -> ExactRational {
        ExactRational::new(ExactInteger::from(n), ExactInteger::from(d))
    }

    fn spec(n: u32, m: u64) -> RuinSpec {
        RuinSpec::new(n, m).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert_eq!(RuinSpec::new(0, 1), Err(RuinError::ZeroHalfWidth));
        assert_eq!(RuinSpec::new(1, 0), Err(RuinError::ZeroRound));
        assert!(RuinSpec::new(1, 1).is_ok());
    }

    #[test]
    fn dp_forced_and_small_cases() {
        // n = 1: the first step always hits a barrier
        assert_eq!(ruin_prob_dp(spec(1, 1)), rat(1, 1));
        // n = 2: 2 of the 4 two-step paths reach +-2
        assert_eq!(ruin_prob_dp(spec(2, 2)), rat(1, 2));
        // survivors at step 2 sit at height 0 with mass 1/2; recurse
        assert_eq!(ruin_prob_dp(spec(2, 4)), rat(1, 4));
    }

    #[test]
    fn binomial_matches_dp_spot_checks() {
        assert_eq!(ruin_prob_binomial(spec(1, 1)), rat(1, 1));
        assert_eq!(ruin_prob_binomial(spec(2, 4)), rat(1, 4));
        assert_eq!(ruin_prob_binomial(spec(3, 7)), ruin_prob_dp(spec(3, 7)));
        // first possible absorption for n = 3: three straight steps
        assert_eq!(ruin_prob_binomial(spec(3, 3)), rat(1, 4));
    }

    #[test]
    fn binomial_parity_zeros() {
        for n in 1..=6u32 {
            for m in 1..=40u64 {
                if m < n as u64 || !(m + n as u64).is_multiple_of(2) {
                    assert!(
                        ruin_prob_binomial(spec(n, m)).is_zero(),
                        "n = {}, m = {}",
                        n,
                        m
                    );
                }
            }
        }
    }

    #[test]
    fn trig_forced_cases() {
        assert_eq!(ruin_prob_trig(spec(1, 1)), 1.0);
        assert!(ruin_prob_trig(spec(1, 3)).abs() < 1e-30);
        assert!((ruin_prob_trig(spec(2, 2)) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn distribution_n1_is_deterministic() {
        let d = duration_distribution(1, 5);
        assert_eq!(d.probs().len(), 1);
        assert_eq!(d.prob_at(1), rat(1, 1));
        assert!(d.survival().is_zero());
    }

    #[test]
    fn distribution_n2_halves_geometrically() {
        let d = duration_distribution(2, 10);
        let expected = [(2, 2), (4, 4), (6, 8), (8, 16), (10, 32)];
        assert_eq!(d.probs().len(), expected.len());
        for (m, denom) in expected {
            assert_eq!(d.prob_at(m), rat(1, denom), "m = {}", m);
        }
        assert_eq!(d.survival(), &rat(1, 32));
    }

    #[test]
    fn mass_plus_survival_is_one() {
        for n in 1..=4u32 {
            let d = duration_distribution(n, 25);
            let total: ExactRational = d.probs().values().sum();
            assert_eq!(total + d.survival().clone(), rat(1, 1), "n = {}", n);
        }
    }

    #[test]
    fn sides_absorb_equally() {
        for n in 1..=5u32 {
            for (up, down) in absorption_by_step(n, 30) {
                assert_eq!(up, down);
            }
        }
    }

    #[test]
    fn partial_mean_approaches_n_squared() {
        let d = duration_distribution(3, 300);
        let gap = rat(9, 1) - d.partial_mean();
        assert!(gap.is_positive() || gap.is_zero());
        assert!(gap < rat(1, 100), "gap = {}", gap);
    }

    #[test]
    fn expected_lead_small_cases() {
        assert_eq!(expected_abs_lead(1), rat(1, 1));
        assert_eq!(expected_abs_lead(2), rat(3, 2));
    }

    #[test]
    fn expected_lead_growth_rate() {
        let lead = expected_abs_lead(100).to_f64().unwrap();
        let limit = (4.0 * 100.0 / std::f64::consts::PI).sqrt();
        let ratio = lead / limit;
        assert!((0.99..=1.01).contains(&ratio), "ratio = {}", ratio);
    }

    #[test]
    fn agreement_verifier_passes_small() {
        assert!(verify_agreement(4, 30, 1e-9).passed());
    }
}
