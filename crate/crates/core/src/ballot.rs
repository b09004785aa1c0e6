//! Reflection-principle counts: ballot numbers, Dyck-path prefixes, and a
//! related binomial identity.
//!
//! The closed forms here are binomial differences obtained by reflecting
//! constraint-violating paths. Each is paired with a direct enumeration of
//! the same objects ([`ballot_number_by_enumeration`],
//! [`dyck_prefix_by_enumeration`]); the enumerators walk every step sequence
//! and share no code with the formulas, so agreement is meaningful.

use crate::exactnum::{binomial, ExactInteger, ExactRational};
use crate::report::{Mismatch, VerificationReport};
use num_traits::{One, Zero};
use std::fmt;

/// Endpoint (x, y) of a monotone lattice path with x minority and y
/// majority steps; requires 0 <= x <= y.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallotPoint {
    x: usize,
    y: usize,
}

impl BallotPoint {
    pub fn new(x: usize, y: usize) -> Result<Self, BallotError> {
        if x > y {
            return Err(BallotError::Domain { x, y });
        }
        Ok(BallotPoint { x, y })
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallotError {
    /// Ballot points require x <= y.
    Domain { x: usize, y: usize },
    /// Dyck prefixes need n and k of equal parity.
    Parity { n: usize, k: usize },
    /// Final height outside 0 <= k <= n.
    Height { n: usize, k: usize },
}

impl fmt::Display for BallotError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BallotError::Domain { x, y } => write!(f, "ballot point needs x <= y, got ({}, {})", x, y),
            BallotError::Parity { n, k } => {
                write!(f, "length {} and height {} must have equal parity", n, k)
            }
            BallotError::Height { n, k } => {
                write!(f, "height {} outside 0..={} for length {}", k, n, n)
            }
        }
    }
}

impl std::error::Error for BallotError {}

/// The ballot number T(x, y) = C(x+y, x) - C(x+y, x-1): monotone paths from
/// (0, 0) to (x, y) whose running majority lead y - x never goes negative.
pub fn ballot_number(p: BallotPoint) -> ExactInteger {
    let total = (p.x + p.y) as u64;
    binomial(total, p.x as i64) - binomial(total, p.x as i64 - 1)
}

/// The same count in its ratio form ((y - x + 1) / (y + 1)) C(x+y, x),
/// evaluated in exact rationals. Always integral; kept rational so the
/// integrality itself can be asserted as a cross-check on [`ballot_number`].
pub fn ballot_number_ratio_form(p: BallotPoint) -> ExactRational {
    let total = (p.x + p.y) as u64;
    let ratio = ExactRational::new(
        ExactInteger::from((p.y - p.x + 1) as u64),
        ExactInteger::from((p.y + 1) as u64),
    );
    ratio * ExactRational::from_integer(binomial(total, p.x as i64))
}

/// Reference enumeration of ballot paths: walks every interleaving of x
/// minority and y majority steps and keeps those whose lead never goes
/// negative. Exponential in x + y; intended as an oracle on small inputs.
pub fn ballot_number_by_enumeration(p: BallotPoint) -> ExactInteger {
    let n = p.x + p.y;
    let mut survivors: u64 = 0;
    // bit i set = minority step at position i
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != p.x {
            continue;
        }
        let mut lead: i64 = 0;
        let mut ok = true;
        for i in 0..n {
            lead += if mask >> i & 1 == 1 { -1 } else { 1 };
            if lead < 0 {
                ok = false;
                break;
            }
        }
        if ok {
            survivors += 1;
        }
    }
    ExactInteger::from(survivors)
}

/// Number of +-1 paths of length n starting at 0, never below 0, ending at
/// height k: C(n, (n+k)/2) - C(n, (n+k)/2 + 1) by the reflection principle.
pub fn dyck_prefix_count(n: usize, k: usize) -> Result<ExactInteger, BallotError> {
    if k > n {
        return Err(BallotError::Height { n, k });
    }
    if !(n + k).is_multiple_of(2) {
        return Err(BallotError::Parity { n, k });
    }
    let up = ((n + k) / 2) as i64;
    Ok(binomial(n as u64, up) - binomial(n as u64, up + 1))
}

/// Reference enumeration for [`dyck_prefix_count`]: tries all 2^n sign
/// sequences.
pub fn dyck_prefix_by_enumeration(n: usize, k: usize) -> ExactInteger {
    let mut survivors: u64 = 0;
    for mask in 0u32..(1u32 << n) {
        let mut h: i64 = 0;
        let mut ok = true;
        for i in 0..n {
            h += if mask >> i & 1 == 1 { 1 } else { -1 };
            if h < 0 {
                ok = false;
                break;
            }
        }
        if ok && h == k as i64 {
            survivors += 1;
        }
    }
    ExactInteger::from(survivors)
}

/// Evaluates both sides of sum_k (p - 2k)^2 C(p, k) = p 2^p exactly.
pub fn verify_square_identity(p: usize) -> VerificationReport {
    verify_square_identity_range(p, p)
}

/// Checks the square identity for every p in p_min..=p_max.
pub fn verify_square_identity_range(p_min: usize, p_max: usize) -> VerificationReport {
    let identity = "square-identity";
    let checked = format!("p in {}..={}", p_min, p_max);
    for p in p_min..=p_max {
        let mut lhs = ExactInteger::zero();
        let mut binom = ExactInteger::one();
        for k in 0..=p {
            if k > 0 {
                binom = binom * ExactInteger::from((p - k + 1) as u64)
                    / ExactInteger::from(k as u64);
            }
            let diff = p as i64 - 2 * k as i64;
            lhs += ExactInteger::from(diff * diff) * &binom;
        }
        let rhs = ExactInteger::from(p as u64) * (ExactInteger::one() << p);
        if lhs != rhs {
            return VerificationReport::fail(
                identity,
                checked,
                Mismatch {
                    location: format!("p = {}", p),
                    expected: rhs.to_string(),
                    actual: lhs.to_string(),
                },
            );
        }
    }
    VerificationReport::pass(identity, checked)
}

/// Runs the closed forms against the reference enumerations: ballot numbers
/// for all 0 <= x <= y <= y_max, Dyck prefixes for all valid (n, k) with
/// n <= dyck_n_max.
pub fn verify_against_enumeration(y_max: usize, dyck_n_max: usize) -> VerificationReport {
    let identity = "ballot-oracle";
    let checked = format!("x <= y <= {}, dyck n <= {}", y_max, dyck_n_max);
    for y in 0..=y_max {
        for x in 0..=y {
            let p = BallotPoint::new(x, y).expect("x <= y");
            let formula = ballot_number(p);
            let enumerated = ballot_number_by_enumeration(p);
            if formula != enumerated {
                return VerificationReport::fail(
                    identity,
                    checked,
                    Mismatch {
                        location: format!("ballot ({}, {})", x, y),
                        expected: enumerated.to_string(),
                        actual: formula.to_string(),
                    },
                );
            }
        }
    }
    for n in 0..=dyck_n_max {
        for k in (n % 2..=n).step_by(2) {
            let formula = dyck_prefix_count(n, k).expect("valid parity and range");
            let enumerated = dyck_prefix_by_enumeration(n, k);
            if formula != enumerated {
                return VerificationReport::fail(
                    identity,
                    checked,
                    Mismatch {
                        location: format!("dyck ({}, {})", n, k),
                        expected: enumerated.to_string(),
                        actual: formula.to_string(),
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

    fn int(v: u64) -> ExactInteger {
        ExactInteger::from(v)
    }

    #[test]
    fn ballot_trivial_cases() {
        for y in 0..8 {
            assert_eq!(ballot_number(BallotPoint::new(0, y).unwrap()), int(1));
        }
        assert_eq!(ballot_number(BallotPoint::new(1, 1).unwrap()), int(1));
    }

    #[test]
    fn ballot_catalan_diagonal() {
        // (3,3) leaves the 5 Dyck-like interleavings of the 20 monotone paths
        let p = BallotPoint::new(3, 3).unwrap();
        assert_eq!(ballot_number(p), int(5));
        assert_eq!(ballot_number_by_enumeration(p), int(5));
    }

    #[test]
    fn ballot_domain_error() {
        assert_eq!(
            BallotPoint::new(4, 2),
            Err(BallotError::Domain { x: 4, y: 2 })
        );
    }

    #[test]
    fn ratio_form_is_integral_and_equal() {
        for y in 0..=12 {
            for x in 0..=y {
                let p = BallotPoint::new(x, y).unwrap();
                let ratio = ballot_number_ratio_form(p);
                assert!(ratio.is_integer(), "({}, {})", x, y);
                assert_eq!(ratio.to_integer(), ballot_number(p));
            }
        }
    }

    #[test]
    fn dyck_prefix_examples() {
        assert_eq!(dyck_prefix_count(0, 0).unwrap(), int(1));
        // brute force over the 8 sign sequences: UUD, UDU
        assert_eq!(dyck_prefix_count(3, 1).unwrap(), int(2));
        // Catalan(3)
        assert_eq!(dyck_prefix_count(6, 0).unwrap(), int(5));
    }

    #[test]
    fn dyck_prefix_errors() {
        assert_eq!(dyck_prefix_count(3, 2), Err(BallotError::Parity { n: 3, k: 2 }));
        assert_eq!(dyck_prefix_count(2, 4), Err(BallotError::Height { n: 2, k: 4 }));
    }

    #[test]
    fn dyck_enumeration_agrees_small() {
        for n in 0..=10 {
            for k in (n % 2..=n).step_by(2) {
                assert_eq!(
                    dyck_prefix_count(n, k).unwrap(),
                    dyck_prefix_by_enumeration(n, k),
                    "({}, {})",
                    n,
                    k
                );
            }
        }
    }

    #[test]
    fn square_identity_small() {
        // p = 0: both sides 0; p = 2: 4*1 + 0*2 + 4*1 = 8 = 2 * 4
        assert!(verify_square_identity(0).passed());
        assert!(verify_square_identity(2).passed());
        assert!(verify_square_identity_range(1, 64).passed());
    }

    #[test]
    fn enumeration_verifier_passes() {
        assert!(verify_against_enumeration(6, 10).passed());
    }
}
