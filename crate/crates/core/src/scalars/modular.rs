use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Field, Rational, Ring};

/// The Mersenne prime `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

/// Residue modulo [`MODULUS`].
///
/// Used for rank certificates: the rank of a rational matrix reduced modulo
/// a prime never exceeds its rank over `Q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

fn reduce(x: u128) -> u64 {
    let p = MODULUS as u128;
    let folded = (x & p) + (x >> 61);
    let folded = (folded & p) + (folded >> 61);
    let r = folded as u64;
    if r >= MODULUS {
        r - MODULUS
    } else {
        r
    }
}

fn big_residue(n: &BigInt) -> u64 {
    let r = n % BigInt::from(MODULUS);
    let r = if r.sign() == num_bigint::Sign::Minus { r + BigInt::from(MODULUS) } else { r };
    r.to_u64().expect("residue below modulus")
}

impl Fp {
    pub fn value(self) -> u64 {
        self.0
    }

    /// Image of `q`, or `None` when the prime divides the denominator.
    pub fn try_from_rational(q: &Rational) -> Option<Self> {
        let den = Fp(big_residue(&q.denom()));
        let num = Fp(big_residue(&q.numer()));
        den.inv().map(|d| num.mul(&d))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod p", self.0)
    }
}

impl Ring for Fp {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= MODULUS { s - MODULUS } else { s })
    }

    fn sub(&self, rhs: &Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + MODULUS - rhs.0 })
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fp(reduce(self.0 as u128 * rhs.0 as u128))
    }

    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { MODULUS - self.0 })
    }

    fn from_int(n: i64) -> Self {
        let r = n.rem_euclid(MODULUS as i64);
        Fp(r as u64)
    }

    /// Panics when the prime divides the denominator; see
    /// [`Fp::try_from_rational`].
    fn from_rational(q: &Rational) -> Self {
        Fp::try_from_rational(q).expect("denominator divisible by the modulus")
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow_u64(MODULUS - 2))
    }
}

impl Fp {
    fn pow_u64(self, mut e: u64) -> Fp {
        let (mut acc, mut b) = (Fp(1), self);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }
}
