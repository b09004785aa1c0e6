//! Pass/fail reports produced by the identity-verification routines.

use std::fmt;

/// Location and values of the first disagreement found by a verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of checking one identity over a stated range.
///
/// A report fails exactly when it carries a mismatch; the two cannot get out
/// of sync because the only constructors are [`VerificationReport::pass`] and
/// [`VerificationReport::fail`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    identity: String,
    checked: String,
    first_mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn pass(identity: impl Into<String>, checked: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            checked: checked.into(),
            first_mismatch: None,
        }
    }

    pub fn fail(
        identity: impl Into<String>,
        checked: impl Into<String>,
        mismatch: Mismatch,
    ) -> Self {
        VerificationReport {
            identity: identity.into(),
            checked: checked.into(),
            first_mismatch: Some(mismatch),
        }
    }

    /// Name of the identity that was checked.
    pub fn identity(&self) -> &str {
        &self.identity
    }

    /// Human-readable description of the order/range covered.
    pub fn checked(&self) -> &str {
        &self.checked
    }

    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.first_mismatch.as_ref()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "{}: pass ({})", self.identity, self.checked),
            Some(m) => write!(
                f,
                "{}: FAIL at {} (expected {}, got {}); checked {}",
                self.identity, m.location, m.expected, m.actual, self.checked
            ),
        }
    }
}
