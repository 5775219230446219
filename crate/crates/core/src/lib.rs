//! Exact computations in Brauer algebras `Br_n(m)`, Birman–Wenzl–Murakami
//! algebras, their cell representations, and the Lie algebra generated by the
//! infinitesimal braids `t_ij = s_ij - p_ij`.
//!
//! All arithmetic is exact: rationals, rational functions of `m`, and power
//! series in `h` truncated at a fixed order.

pub mod bmw;
pub mod brauer;
pub mod cells;
pub mod diagrams;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod scalars;
pub mod specht;
pub mod suites;

pub use error::{Error, Result};
pub use scalars::{Field, Rational, RationalFunction, Ring, TruncatedSeries};

/// Default semisimple specialization of `m`.
pub fn default_m() -> Rational {
    Rational::new(13, 2).expect("nonzero denominator")
}
