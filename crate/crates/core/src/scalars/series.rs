use std::fmt;

use super::{Field, Rational, Ring};
use crate::error::Error;

pub const DEFAULT_ORDER: usize = 8;

/// Power series in `h` truncated modulo `h^order`.
///
/// `order == usize::MAX` marks an exact polynomial (constants built through
/// [`Ring::one`] and friends); combining an exact value with a truncated one
/// truncates the result, so a computation only ever carries one `K`.
#[derive(Clone)]
pub struct TruncatedSeries<F: Field = Rational> {
    coeffs: Vec<F>,
    order: usize,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.truncate(order);
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        TruncatedSeries { coeffs, order }
    }

    /// `c * h^k` modulo `h^order`.
    pub fn monomial(c: F, k: usize, order: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v, order)
    }

    /// The variable `h`.
    pub fn h(order: usize) -> Self {
        Self::monomial(F::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.order)
    }

    /// The involution `h -> -h`.
    pub fn epsilon(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
            self.order,
        )
    }

    /// Inverse of a series with invertible constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0inv = self.coeff(0).inv()?;
        if self.order == usize::MAX {
            return if self.coeffs.len() == 1 { Some(Self::new(vec![c0inv], usize::MAX)) } else { None };
        }
        let k = self.order;
        let mut out: Vec<F> = Vec::with_capacity(k);
        for i in 0..k {
            let mut s = if i == 0 { F::one() } else { F::zero() };
            for j in 1..=i {
                let t = self.coeff(j).mul(&out[i - j]);
                s.sub_assign(&t);
            }
            out.push(s.mul(&c0inv));
        }
        Some(Self::new(out, k))
    }
}

/// `exp(a)` for a series with zero constant term.
pub fn series_exp<F: Field>(a: &TruncatedSeries<F>) -> Result<TruncatedSeries<F>, Error> {
    if !a.coeff(0).is_zero() {
        return Err(Error::Domain("exp needs a series without constant term".into()));
    }
    if a.order == usize::MAX {
        return Err(Error::Domain("exp needs a truncation order".into()));
    }
    let k = a.order;
    let mut term = TruncatedSeries::<F>::one().with_order(k);
    let mut acc = term.clone();
    for i in 1..k {
        let inv_i = F::from_int(i as i64).inv().expect("characteristic zero");
        term = term.mul(a).scale(&inv_i);
        if term.is_zero() {
            break;
        }
        acc.add_assign(&term);
    }
    Ok(acc)
}

impl<F: Field> Ring for TruncatedSeries<F> {
    fn zero() -> Self {
        TruncatedSeries { coeffs: Vec::new(), order: usize::MAX }
    }

    fn one() -> Self {
        TruncatedSeries { coeffs: vec![F::one()], order: usize::MAX }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect(), order)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        if self.is_zero() || rhs.is_zero() {
            return Self::new(Vec::new(), order);
        }
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(order);
        let mut out = vec![F::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(out, order)
    }

    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(Ring::neg).collect(), self.order)
    }

    fn from_int(n: i64) -> Self {
        Self::new(vec![F::from_int(n)], usize::MAX)
    }

    fn from_rational(q: &Rational) -> Self {
        Self::new(vec![F::from_rational(q)], usize::MAX)
    }
}

/// Equality modulo the smaller of the two truncation orders.
impl<F: Field> PartialEq for TruncatedSeries<F> {
    fn eq(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        let n = self.coeffs.len().max(other.coeffs.len()).min(order);
        (0..n).all(|i| self.coeff(i) == other.coeff(i))
    }
}

impl<F: Field> fmt::Display for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            terms.push(match k {
                0 => cs,
                1 if c.is_one() => "h".to_string(),
                1 => format!("{cs}*h"),
                _ if c.is_one() => format!("h^{k}"),
                _ => format!("{cs}*h^{k}"),
            });
        }
        let mut s = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        s = s.replace("+ -", "- ");
        if self.order != usize::MAX {
            s.push_str(&format!(" + O(h^{})", self.order));
        }
        write!(f, "{s}")
    }
}

impl<F: Field> fmt::Debug for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = TruncatedSeries<Rational>;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn exp_of_zero_is_one() {
        let z = S::new(vec![], 8);
        assert_eq!(series_exp(&z).unwrap(), S::one());
    }

    #[test]
    fn exp_h_taylor_coefficients() {
        let e = series_exp(&S::h(4)).unwrap();
        let expect = S::new(vec![q("1"), q("1"), q("1/2"), q("1/6")], 4);
        assert_eq!(e, expect);
        assert_eq!(e.to_string(), "1 + h + 1/2*h^2 + 1/6*h^3 + O(h^4)");
    }

    #[test]
    fn exp_group_inverse() {
        let h = S::h(8);
        let prod = series_exp(&h).unwrap().mul(&series_exp(&h.neg()).unwrap());
        assert_eq!(prod, S::one().with_order(8));
    }

    #[test]
    fn epsilon_definition() {
        let a = S::new(vec![q("1"), q("1")], 8);
        assert_eq!(a.epsilon(), S::new(vec![q("1"), q("-1")], 8));
        assert_eq!(a.epsilon().epsilon(), a);
        let e = series_exp(&S::h(8)).unwrap();
        assert_eq!(e.epsilon(), series_exp(&S::h(8).neg()).unwrap());
    }

    #[test]
    fn exp_rejects_constant_term() {
        let a = S::new(vec![q("1"), q("1")], 8);
        assert!(series_exp(&a).is_err());
    }

    #[test]
    fn inverse_of_one_plus_h() {
        let a = S::new(vec![q("1"), q("1")], 6);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, S::new(vec![q("1"), q("-1"), q("1"), q("-1"), q("1"), q("-1")], 6));
    }
}
