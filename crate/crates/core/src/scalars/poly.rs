use std::fmt;

use super::{Field, Rational, Ring};
use crate::error::Error;

/// Dense univariate polynomial over [`Rational`], lowest degree first, with no
/// trailing zero coefficients (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `m`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Poly) -> Option<(Poly, Poly)> {
        let dl = d.leading()?.inv()?;
        let dd = d.degree()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::default(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = &rem[i] * &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i - dd + j].sub_assign(&t);
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn one() -> Self {
        Poly::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Poly::new(out)
    }

    fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    fn from_int(n: i64) -> Self {
        Poly::constant(Rational::from_int(n))
    }

    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "m")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of `Q(m)`: `num / den` with `den` monic and `gcd(num, den) = 1`.
/// Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Ring::zero());
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (d, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc = d.leading().expect("nonzero").inv().expect("nonzero");
        Ok(RationalFunction { num: n.scale(&lc), den: d.scale(&lc) })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Ring::one() }
    }

    /// The parameter `m` itself.
    pub fn m() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    /// Specializes `m = m0`; fails exactly at roots of the denominator.
    pub fn eval(&self, m0: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(m0);
        if d.is_zero() {
            return Err(Error::Pole(m0.clone()));
        }
        Ok(&self.num.eval(m0) / &d)
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction { num: Poly::default(), den: Ring::one() }
    }

    fn one() -> Self {
        RationalFunction { num: Ring::one(), den: Ring::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction::new(Ring::add(&self.num, &rhs.num), self.den.clone())
                .expect("nonzero denominator");
        }
        let n = Ring::add(&Ring::mul(&self.num, &rhs.den), &Ring::mul(&rhs.num, &self.den));
        RationalFunction::new(n, Ring::mul(&self.den, &rhs.den)).expect("nonzero denominator")
    }

    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Ring::zero();
        }
        RationalFunction::new(Ring::mul(&self.num, &rhs.num), Ring::mul(&self.den, &rhs.den))
            .expect("nonzero denominator")
    }

    fn neg(&self) -> Self {
        RationalFunction { num: Ring::neg(&self.num), den: self.den.clone() }
    }

    fn from_int(n: i64) -> Self {
        Self::from_poly(Poly::from_int(n))
    }

    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Poly::constant(q.clone()))
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RationalFunction::new(self.den.clone(), self.num.clone()).expect("nonzero"))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            let s = p.to_string();
            let single = p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
                && !s.contains('/')
                && !s.starts_with('-');
            if single {
                s
            } else {
                format!("({s})")
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> RationalFunction {
        RationalFunction::m()
    }

    fn c(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }

    #[test]
    fn display_forms() {
        assert_eq!(m().inv().unwrap().to_string(), "1/m");
        let p = Ring::sub(&Ring::mul(&m(), &m()), &c(2));
        assert_eq!(p.to_string(), "m^2 - 2");
        let q = Field::div(&c(3), &Ring::sub(&m(), &c(1))).unwrap();
        assert_eq!(q.to_string(), "3/(m - 1)");
        let half = RationalFunction::from_rational(&"-1/2".parse().unwrap());
        assert_eq!(Ring::mul(&half, &m()).to_string(), "-1/2*m");
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (m^2 - 1)/(2m - 2) = (m + 1)/2
        let num = Ring::sub(&Ring::mul(&m(), &m()), &c(1));
        let den = Ring::sub(&Ring::mul(&c(2), &m()), &c(2));
        let q = Field::div(&num, &den).unwrap();
        let expect = Field::div(&Ring::add(&m(), &c(1)), &c(2)).unwrap();
        assert_eq!(q, expect);
        assert!(q.denom().is_one());
    }

    #[test]
    fn evaluation_and_poles() {
        let q = Field::div(&c(1), &Ring::sub(&m(), &c(2))).unwrap();
        assert_eq!(q.eval(&"5/2".parse().unwrap()).unwrap(), Rational::from_int(2));
        assert!(matches!(q.eval(&Rational::from_int(2)), Err(Error::Pole(_))));
    }

    #[test]
    fn poly_division() {
        let x = Poly::x();
        let p = Ring::sub(&Ring::mul(&x, &Ring::mul(&x, &x)), &Poly::from_int(1));
        let d = Ring::sub(&x, &Poly::from_int(1));
        let (q, r) = p.div_rem(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.to_string(), "m^2 + m + 1");
        assert!(p.div_rem(&Poly::default()).is_none());
    }
}
