//! Exact coefficient arithmetic.
//!
//! Everything downstream is generic over [`Ring`] / [`Field`]; the concrete
//! instances are [`Rational`], [`RationalFunction`] (in the parameter `m`)
//! and [`TruncatedSeries`] (in `h`, modulo `h^K`). [`Fp`] is only used for
//! rank certificates.

mod modular;
mod poly;
mod rational;
mod series;

use std::fmt;

pub use modular::{Fp, MODULUS};
pub use poly::{Poly, RationalFunction};
pub use rational::Rational;
pub use series::{series_exp, TruncatedSeries, DEFAULT_ORDER};

/// Commutative ring with exact equality.
///
/// Methods take references so that generic code never has to clone big
/// coefficients just to combine them.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(self, rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = Ring::sub(self, rhs);
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            let p = Ring::mul(a, b);
            self.add_assign(&p);
        }
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = Ring::mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = Ring::mul(&base, &base);
            }
        }
        acc
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    /// `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| Ring::mul(self, &r))
    }

    /// Integer powers, negative exponents included.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inv().map(|r| r.pow((-e) as u32))
        }
    }
}
