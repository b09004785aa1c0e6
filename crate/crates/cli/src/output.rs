//! Rendering helpers shared by the command handlers.

use lattice_paths::{ExactInteger, ExactRational};
use num_traits::One;

/// Rational as "p/q", with "/q" omitted when the denominator is 1.
pub fn rational_str(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Compact value fingerprint: first and last 8 digits plus the digit count,
/// so timing output carries a correctness check.
pub fn digest(v: &ExactInteger) -> String {
    let s = v.to_string();
    let (sign, digits) = s.strip_prefix('-').map_or(("", s.as_str()), |d| ("-", d));
    let body = if digits.len() <= 16 {
        digits.to_string()
    } else {
        format!("{}..{}", &digits[..8], &digits[digits.len() - 8..])
    };
    format!("{}{}[{} digits]", sign, body, digits.len())
}

/// One CSV line from string cells (values here never contain commas).
pub fn csv_line<I: IntoIterator<Item = String>>(cells: I) -> String {
    cells.into_iter().collect::<Vec<_>>().join(",")
}

/// "index value" lines for an integer sequence, newline-terminated.
pub fn bfile<'a, I: IntoIterator<Item = &'a ExactInteger>>(values: I) -> String {
    let mut out = String::new();
    for (i, v) in values.into_iter().enumerate() {
        out.push_str(&format!("{} {}\n", i, v));
    }
    out
}
