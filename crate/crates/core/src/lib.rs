//! Exact enumeration of classical lattice-path families.
//!
//! Everything here is computed in arbitrary-precision arithmetic: integer
//! counts are exact at any magnitude and generating-function identities are
//! checked coefficient by coefficient over exact rationals. The same
//! quantities are deliberately computed along independent routes (closed
//! forms, recurrences, series extraction, direct dynamic programming) so the
//! routes can be played against each other.
//!
//! Modules:
//! - [`exactnum`]: exact scalars and truncated formal power series.
//! - [`delannoy`]: the Delannoy array and the central sequence by five
//!   independent algorithms.
//! - [`walks`]: walk/bridge/meander/excursion counting for arbitrary finite
//!   jump systems, Schroeder paths, and the bridge decomposition identity.
//! - [`ballot`]: reflection-principle counts and a binomial identity.
//! - [`ruin`]: the duration distribution of the fair two-player ruin game.
//! - [`asymptotics`]: the three-term growth expansion of the central
//!   sequence with exactly constructed constants.

pub mod asymptotics;
pub mod ballot;
pub mod delannoy;
pub mod exactnum;
pub mod report;
pub mod ruin;
pub mod walks;

pub use exactnum::{ExactInteger, ExactRational, TruncatedSeries};
pub use report::{Mismatch, VerificationReport};
