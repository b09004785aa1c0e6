//! Exact scalars and truncated formal power series.
//!
//! `ExactInteger` and `ExactRational` are the scalar types every count and
//! coefficient in this crate lives in. Rationals are always in lowest terms
//! with a positive denominator (the backing type normalizes eagerly on every
//! operation).
//!
//! [`TruncatedSeries`] is a dense power series with rational coefficients
//! known up to an explicit truncation order. Coefficients beyond the order
//! are *unknown*, not zero: binary operations return the minimum of the two
//! input orders, and equality only compares coefficients both sides know.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Arbitrary-precision signed integer.
pub type ExactInteger = BigInt;

/// Arbitrary-precision rational, kept in lowest terms with denominator > 0.
pub type ExactRational = BigRational;

/// Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.
///
/// The out-of-range convention makes every binomial sum in this crate total,
/// so callers never special-case boundary terms.
pub fn binomial(n: u64, k: i64) -> ExactInteger {
    if k < 0 || k as u64 > n {
        return ExactInteger::zero();
    }
    let mut k = k as u64;
    if k > n - k {
        k = n - k;
    }
    let mut result = ExactInteger::one();
    for i in 0..k {
        result = result * ExactInteger::from(n - i) / ExactInteger::from(i + 1);
    }
    result
}

/// Errors from series operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Division by a series whose constant term is zero.
    ZeroConstantTerm,
    /// Square root of a series whose constant term is not 1.
    BadConstantTerm,
    /// Coefficient index beyond the truncation order.
    OrderExceeded { index: usize, order: usize },
    /// Division by z^k of a series with a nonzero coefficient below z^k.
    NotDivisibleByPower { power: usize },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroConstantTerm => {
                write!(f, "cannot divide by a series with zero constant term")
            }
            SeriesError::BadConstantTerm => {
                write!(f, "series square root requires constant term 1")
            }
            SeriesError::OrderExceeded { index, order } => write!(
                f,
                "coefficient {} requested but series is only known to order {}",
                index, order
            ),
            SeriesError::NotDivisibleByPower { power } => write!(
                f,
                "series has a nonzero coefficient below z^{}, cannot divide",
                power
            ),
        }
    }
}

impl std::error::Error for SeriesError {}

/// A power series over `ExactRational` with coefficients known for
/// z^0 .. z^order.
///
/// Equality compares coefficient-wise up to the smaller of the two orders,
/// which is the correct notion when both sides are truncations of the same
/// exact object. It is therefore not transitive across mixed orders and no
/// `Eq` is provided.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }
}

impl TruncatedSeries {
    /// Builds a series from explicit coefficients; order = len - 1.
    pub fn from_rationals(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        TruncatedSeries { coeffs }
    }

    /// Builds a series with the given integer coefficients, padded with
    /// zeros (or truncated) to the requested order.
    pub fn from_int_coeffs(ints: &[i64], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| match ints.get(i) {
                Some(&c) => ExactRational::from_integer(ExactInteger::from(c)),
                None => ExactRational::zero(),
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self::from_int_coeffs(&[], order)
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        Self::from_int_coeffs(&[1], order)
    }

    /// Truncation order: coefficients of z^0 ..= z^order are known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All known coefficients, index = power of z.
    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of z^k.
    pub fn coeff(&self, k: usize) -> Result<&ExactRational, SeriesError> {
        self.coeffs.get(k).ok_or(SeriesError::OrderExceeded {
            index: k,
            order: self.order(),
        })
    }

    /// Drops coefficients above `order` (no-op if already shorter).
    pub fn truncated(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Coefficient-wise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    /// Coefficient-wise difference, truncated to the smaller order.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &ExactRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![ExactRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Quotient q with q * other = self up to the smaller order.
    ///
    /// Requires the divisor's constant term to be nonzero.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order().min(other.order());
        let mut q = Vec::with_capacity(n + 1);
        for i in 0..=n {
            // q_i = (a_i - sum_{j=1..=i} b_j q_{i-j}) / b_0
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                let b = &other.coeffs[j];
                if !b.is_zero() {
                    acc -= b * &q[i - j];
                }
            }
            q.push(acc / b0);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// The square root branch with constant term 1.
    ///
    /// Requires the input's constant term to be exactly 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let n = self.order();
        let mut b: Vec<ExactRational> = Vec::with_capacity(n + 1);
        b.push(ExactRational::one());
        let two = ExactRational::from_integer(ExactInteger::from(2));
        for i in 1..=n {
            // From b*b = a: 2 b_i = a_i - sum_{j=1..=i-1} b_j b_{i-j}
            let mut acc = self.coeffs[i].clone();
            for j in 1..i {
                if !b[j].is_zero() {
                    acc -= &b[j] * &b[i - j];
                }
            }
            b.push(acc / &two);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Divides by z^k. The k lowest coefficients must be zero; the result's
    /// order drops by k.
    pub fn div_by_power(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::OrderExceeded {
                index: k,
                order: self.order(),
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisibleByPower { power: k });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*z", c)?,
                _ => write!(f, "{}*z^{}", c, i)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
