//! Growth expansion of the central Delannoy sequence.
//!
//! d_n grows like G^n with G = 3 + 2*sqrt(2); the three-term refinement is
//!
//! ```text
//! d_n = G^n / (sqrt(pi) sqrt(3 sqrt(2) - 4))
//!       * (n^(-1/2)/2 - 23 n^(-3/2) / (32 (8 + 3 sqrt(2)))
//!          + 2401 n^(-5/2) / (2048 (113 + 72 sqrt(2))) + O(n^(-7/2)))
//! ```
//!
//! so the relative error of the three-term form decays like n^(-3). The
//! constants are constructed here from the radical expressions in 50-digit
//! fixed-point arithmetic (pi by a Machin arctangent sum, roots by integer
//! square root), never copied in as decimal literals, and only rounded to
//! f64 at the evaluation boundary.

use crate::delannoy::{central_sequence, CentralAlgorithm};
use crate::exactnum::{ExactInteger, ExactRational};
use num_traits::{Signed, ToPrimitive, Zero};

/// Decimal digits carried by the fixed-point constant construction.
const WORK_DIGITS: u32 = 50;

fn scale() -> ExactInteger {
    ExactInteger::from(10u32).pow(WORK_DIGITS)
}

fn fx_from(v: u64) -> ExactInteger {
    ExactInteger::from(v) * scale()
}

fn fx_mul(a: &ExactInteger, b: &ExactInteger) -> ExactInteger {
    a * b / scale()
}

fn fx_div(a: &ExactInteger, b: &ExactInteger) -> ExactInteger {
    a * scale() / b
}

fn fx_sqrt(a: &ExactInteger) -> ExactInteger {
    (a * scale()).sqrt()
}

fn fx_to_f64(a: &ExactInteger) -> f64 {
    ExactRational::new(a.clone(), scale()).to_f64().expect("finite")
}

/// Rounds a fixed-point value to `decimals` places and renders it as a
/// plain decimal string (no exponent, zero-padded fraction).
fn fx_to_decimal_string(a: &ExactInteger, decimals: u32) -> String {
    assert!(decimals <= WORK_DIGITS);
    assert!(!a.is_negative());
    let drop = ExactInteger::from(10u32).pow(WORK_DIGITS - decimals);
    let rounded = (a + &drop / ExactInteger::from(2)) / drop;
    let base = ExactInteger::from(10u32).pow(decimals);
    let int_part = &rounded / &base;
    let frac_part = rounded % base;
    format!(
        "{}.{:0>width$}",
        int_part,
        frac_part.to_string(),
        width = decimals as usize
    )
}

/// pi at the working scale, by the Machin formula
/// pi = 16 atan(1/5) - 4 atan(1/239) with the arctangent series summed in
/// integer fixed point.
fn fx_pi() -> ExactInteger {
    fn atan_inv(x: u64) -> ExactInteger {
        let x = ExactInteger::from(x);
        let x2 = &x * &x;
        let mut power = scale() / &x;
        let mut total = ExactInteger::zero();
        let mut k = 0u64;
        while !power.is_zero() {
            let term = &power / ExactInteger::from(2 * k + 1);
            if k.is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
            power /= &x2;
            k += 1;
        }
        total
    }
    ExactInteger::from(16) * atan_inv(5) - ExactInteger::from(4) * atan_inv(239)
}

/// The expansion constants at 50-digit precision: the growth base G and the
/// three positive bracket magnitudes c0, c1, c2 (the bracket signs are
/// +, -, +).
#[derive(Debug, Clone)]
pub struct ExpansionConstants {
    growth: ExactInteger,
    brackets: [ExactInteger; 3],
}

/// One term of the expansion: signed coefficient against a half-integer
/// power of n (exponents -1/2, -3/2, -5/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionTerm {
    pub coefficient: f64,
    pub exponent: f64,
}

impl ExpansionConstants {
    pub fn build() -> Self {
        let sqrt2 = fx_sqrt(&fx_from(2));
        let growth = fx_from(3) + ExactInteger::from(2) * &sqrt2;

        let sqrt_pi = fx_sqrt(&fx_pi());
        let radical = ExactInteger::from(3) * &sqrt2 - fx_from(4);
        let amplitude = fx_div(&scale(), &fx_mul(&sqrt_pi, &fx_sqrt(&radical)));

        let c0 = &amplitude / ExactInteger::from(2);
        let denom1 = ExactInteger::from(32) * (fx_from(8) + ExactInteger::from(3) * &sqrt2);
        let c1 = fx_div(&(&amplitude * ExactInteger::from(23)), &denom1);
        let denom2 = ExactInteger::from(2048) * (fx_from(113) + ExactInteger::from(72) * &sqrt2);
        let c2 = fx_div(&(&amplitude * ExactInteger::from(2401)), &denom2);

        ExpansionConstants {
            growth,
            brackets: [c0, c1, c2],
        }
    }

    /// The growth base 3 + 2 sqrt(2) as f64.
    pub fn growth_base(&self) -> f64 {
        fx_to_f64(&self.growth)
    }

    /// The bracket magnitudes as f64 (signs are +, -, +).
    pub fn bracket_coefficients(&self) -> [f64; 3] {
        [
            fx_to_f64(&self.brackets[0]),
            fx_to_f64(&self.brackets[1]),
            fx_to_f64(&self.brackets[2]),
        ]
    }

    /// Growth base rounded to `decimals` places, as a decimal string.
    pub fn growth_base_digits(&self, decimals: u32) -> String {
        fx_to_decimal_string(&self.growth, decimals)
    }

    /// Bracket magnitude i rounded to `decimals` places, as a decimal string.
    pub fn bracket_digits(&self, i: usize, decimals: u32) -> String {
        fx_to_decimal_string(&self.brackets[i], decimals)
    }

    /// The three signed terms of the bracket.
    pub fn terms(&self) -> [ExpansionTerm; 3] {
        let c = self.bracket_coefficients();
        [
            ExpansionTerm { coefficient: c[0], exponent: -0.5 },
            ExpansionTerm { coefficient: -c[1], exponent: -1.5 },
            ExpansionTerm { coefficient: c[2], exponent: -2.5 },
        ]
    }

    fn evaluate(&self, n: u64, terms: u8) -> f64 {
        assert!((1..=3).contains(&terms), "terms must be 1, 2 or 3");
        assert!(n >= 1, "expansion needs n >= 1");
        let nf = n as f64;
        let mut bracket = 0.0;
        for t in self.terms().iter().take(terms as usize) {
            bracket += t.coefficient * nf.powf(t.exponent);
        }
        // overflows to +inf for n beyond f64 range, which the error profile
        // reports as an infinite relative error
        let exponent = i32::try_from(n).unwrap_or(i32::MAX);
        self.growth_base().powi(exponent) * bracket
    }
}

/// The expansion truncated to 1, 2 or 3 bracket terms, evaluated at n.
pub fn central_asymptotic(n: u64, terms: u8) -> f64 {
    ExpansionConstants::build().evaluate(n, terms)
}

/// Relative accuracy of the three-term expansion at one n.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorProfileRow {
    pub n: u64,
    pub approximation: f64,
    /// |approx / d_n - 1|, formed in exact rational arithmetic before the
    /// final rounding to f64 (d_n does not fit machine words already for
    /// moderate n).
    pub relative_error: f64,
    /// relative_error * n^3; roughly constant under the expected n^(-3)
    /// decay of the three-term error.
    pub error_times_n_cubed: f64,
}

/// Profiles the three-term expansion against the exact sequence at each
/// requested n.
pub fn asymptotic_error_profile(n_values: &[u64]) -> Vec<ErrorProfileRow> {
    let constants = ExpansionConstants::build();
    let n_max = n_values.iter().copied().max().unwrap_or(0) as usize;
    let exact = central_sequence(n_max, CentralAlgorithm::GridDp);
    n_values
        .iter()
        .map(|&n| {
            let approximation = constants.evaluate(n, 3);
            let relative_error = relative_error(approximation, &exact[n as usize]);
            ErrorProfileRow {
                n,
                approximation,
                relative_error,
                error_times_n_cubed: relative_error * (n as f64).powi(3),
            }
        })
        .collect()
}

/// |approx / exact - 1| via exact rationals (the f64 approximation is a
/// dyadic rational, so the quotient is formed without rounding). A
/// non-finite approximation yields an infinite error.
pub(crate) fn relative_error(approx: f64, exact: &ExactInteger) -> f64 {
    let Some(approx_rat) = ExactRational::from_float(approx) else {
        return f64::INFINITY;
    };
    let ratio = approx_rat / ExactRational::from_integer(exact.clone());
    (ratio - ExactRational::from_integer(ExactInteger::from(1)))
        .abs()
        .to_f64()
        .expect("finite")
}
