//! Witt indices of rational bilinear forms.
//!
//! A nondegenerate symmetric form is diagonalized by congruence; its isometry
//! class over `Q` is then carried by the dimension, discriminant, signature
//! and Hasse invariants at the finitely many relevant primes. Isotropy is
//! decided place by place (Hasse–Minkowski), and each hyperbolic plane is
//! split off by updating those invariants, so no explicit isotropic vector is
//! ever needed.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{intertwiners, Matrix};
use crate::scalars::{Field, Rational, Ring};

use super::rep::SpechtRep;

/// Diagonal entries of a form congruent to the symmetric matrix `a`.
pub fn diagonalize(a: &Matrix<Rational>) -> Result<Vec<Rational>> {
    if !a.is_symmetric() {
        return Err(Error::Domain("diagonalization needs a symmetric form".into()));
    }
    let n = a.rows();
    let mut m = a.to_rows();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !m[i][i].is_zero()) {
                swap_basis(&mut m, k, i);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // e_k <- e_k + e_j has norm 2 m_kj
                add_basis(&mut m, k, j, &Rational::one());
            } else {
                return Err(Error::Degenerate(format!("form has a radical of dimension {}", n - k)));
            }
        }
        let piv = m[k][k].clone();
        let pinv = piv.inv().expect("nonzero pivot");
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let c = (&m[i][k] * &pinv).neg();
            add_basis(&mut m, i, k, &c);
        }
        diag.push(piv);
    }
    Ok(diag)
}

fn swap_basis(m: &mut [Vec<Rational>], i: usize, j: usize) {
    m.swap(i, j);
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// Replaces `e_i` by `e_i + c e_j` (row and column operation).
fn add_basis(m: &mut [Vec<Rational>], i: usize, j: usize, c: &Rational) {
    let rj = m[j].clone();
    for (x, y) in m[i].iter_mut().zip(&rj) {
        x.add_mul(c, y);
    }
    for row in m.iter_mut() {
        let y = row[j].clone();
        row[i].add_mul(c, &y);
    }
}

/// Squarefree-class representative of a nonzero rational: `num * den`.
fn square_class(q: &Rational) -> BigInt {
    q.numer() * q.denom()
}

fn valuation(x: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut v = 0;
    let mut u = x.clone();
    while (&u % p).is_zero() {
        u /= p;
        v += 1;
    }
    (v, u)
}

/// Legendre symbol of a unit `u` modulo an odd prime `p`, as ±1.
fn legendre(u: &BigInt, p: &BigInt) -> i32 {
    let r = u.mod_floor(p);
    let e = (p - 1u32) / 2u32;
    if r.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Hilbert symbol `(a, b)_p` of nonzero integers; `p = 0` is the real place.
pub fn hilbert_symbol(a: &BigInt, b: &BigInt, p: &BigInt) -> i32 {
    if p.is_zero() {
        return if a.is_negative() && b.is_negative() { -1 } else { 1 };
    }
    let (alpha, u) = valuation(a, p);
    let (beta, v) = valuation(b, p);
    let two = BigInt::from(2);
    if *p == two {
        let eps = |x: &BigInt| u32::from(x.mod_floor(&BigInt::from(4)) == BigInt::from(3));
        let omega = |x: &BigInt| {
            let r = x.mod_floor(&BigInt::from(8)).to_u32().expect("small");
            u32::from(r == 3 || r == 5)
        };
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        return if e % 2 == 0 { 1 } else { -1 };
    }
    let p_mod4_is_3 = p.mod_floor(&BigInt::from(4)) == BigInt::from(3);
    let mut s = if alpha % 2 == 1 && beta % 2 == 1 && p_mod4_is_3 { -1 } else { 1 };
    if beta % 2 == 1 {
        s *= legendre(&u, p);
    }
    if alpha % 2 == 1 {
        s *= legendre(&v, p);
    }
    s
}

/// Is the nonzero integer `d` a square in `Q_p` (`p = 0`: in `R`)?
fn is_local_square(d: &BigInt, p: &BigInt) -> bool {
    if p.is_zero() {
        return d.is_positive();
    }
    let (v, u) = valuation(d, p);
    if v % 2 == 1 {
        return false;
    }
    if *p == BigInt::from(2) {
        u.mod_floor(&BigInt::from(8)).is_one()
    } else {
        legendre(&u, p) == 1
    }
}

fn is_rational_square(d: &BigInt) -> bool {
    if d.is_negative() {
        return false;
    }
    let r = d.sqrt();
    &r * &r == *d
}

fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let nm1 = n - 1u32;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d /= 2u32;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if d != *n {
            return d;
        }
        c += 1u32;
    }
}

fn prime_factors(n: &BigInt, out: &mut BTreeSet<BigInt>) {
    let mut n = n.abs();
    for p in 2u32..1000 {
        let bp = BigInt::from(p);
        while (&n % &bp).is_zero() {
            out.insert(bp.clone());
            n /= &bp;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            out.insert(m);
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
}

/// Isometry invariants of a nondegenerate rational quadratic form.
#[derive(Clone, Debug)]
struct FormInvariants {
    dim: usize,
    positive: usize,
    negative: usize,
    disc: BigInt,
    /// `(p, ε_p)` for every prime where anything can happen.
    hasse: Vec<(BigInt, i32)>,
}

impl FormInvariants {
    fn from_diagonal(diag: &[Rational]) -> Self {
        let entries: Vec<BigInt> = diag.iter().map(square_class).collect();
        let mut primes = BTreeSet::new();
        primes.insert(BigInt::from(2));
        for e in &entries {
            prime_factors(e, &mut primes);
        }
        let hasse = primes
            .into_iter()
            .map(|p| {
                let mut eps = 1;
                for i in 0..entries.len() {
                    for j in i + 1..entries.len() {
                        eps *= hilbert_symbol(&entries[i], &entries[j], &p);
                    }
                }
                (p, eps)
            })
            .collect();
        let positive = diag.iter().filter(|x| x.is_positive()).count();
        FormInvariants {
            dim: diag.len(),
            positive,
            negative: diag.len() - positive,
            disc: entries.iter().product(),
            hasse,
        }
    }

    fn locally_isotropic(&self, p: &BigInt, eps: i32) -> bool {
        let minus_one = BigInt::from(-1);
        match self.dim {
            0 | 1 => false,
            2 => is_local_square(&-&self.disc, p),
            3 => eps == hilbert_symbol(&minus_one, &-&self.disc, p),
            4 => !is_local_square(&self.disc, p) || eps == hilbert_symbol(&minus_one, &minus_one, p),
            _ => true,
        }
    }

    fn is_isotropic(&self) -> bool {
        if self.dim < 2 || self.positive == 0 || self.negative == 0 {
            return false;
        }
        if self.dim == 2 {
            return is_rational_square(&-&self.disc);
        }
        self.hasse.iter().all(|(p, eps)| self.locally_isotropic(p, *eps))
    }

    /// Invariants of `q1` where `q = q1 ⊥ H`.
    fn split_hyperbolic_plane(&mut self) {
        let minus_one = BigInt::from(-1);
        let neg_d = -&self.disc;
        for (p, eps) in &mut self.hasse {
            *eps *= hilbert_symbol(&neg_d, &minus_one, p);
        }
        self.disc = neg_d;
        self.dim -= 2;
        self.positive -= 1;
        self.negative -= 1;
    }
}

/// Witt index of a nondegenerate symmetric or alternating rational form.
pub fn witt_index(form: &Matrix<Rational>) -> Result<usize> {
    if !form.is_square() {
        return Err(Error::Dimension("a bilinear form needs a square matrix".into()));
    }
    if form.is_antisymmetric() && !form.is_zero() {
        let rank = form.rank();
        if rank != form.rows() {
            return Err(Error::Degenerate(format!("alternating form of rank {rank}")));
        }
        return Ok(rank / 2);
    }
    let diag = diagonalize(form)?;
    let mut inv = FormInvariants::from_diagonal(&diag);
    let mut index = 0;
    while inv.is_isotropic() {
        inv.split_hyperbolic_plane();
        index += 1;
    }
    Ok(index)
}

pub fn is_hyperbolic(form: &Matrix<Rational>) -> Result<bool> {
    Ok(form.rows().is_multiple_of(2) && 2 * witt_index(form)? == form.rows())
}

/// The form `β` on `V_λ` with `β(gv, gw) = sign(g) β(v, w)`, unique up to
/// scale when `λ` is self-conjugate; `None` otherwise.
pub fn sign_twisted_form(rep: &SpechtRep) -> Result<Option<Matrix<Rational>>> {
    let gens = rep.generators();
    if gens.is_empty() {
        return Ok(None);
    }
    // g^T B g = -B  <=>  g^T B = B (-g), since g = g^{-1}
    let pairs: Vec<_> = gens.iter().map(|g| (g.transpose(), g.neg())).collect();
    let sols = intertwiners(&pairs)?;
    match sols.len() {
        0 => Ok(None),
        1 => Ok(sols.into_iter().next()),
        k => Err(Error::Verification(format!("{k}-dimensional space of sign-twisted forms"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(xs: &[i64]) -> Matrix<Rational> {
        let n = xs.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &x) in xs.iter().enumerate() {
            m.set(i, i, Rational::from_int(x));
        }
        m
    }

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn hilbert_symbol_values() {
        // (-1,-1) is -1 exactly at 2 and infinity
        assert_eq!(hilbert_symbol(&b(-1), &b(-1), &b(2)), -1);
        assert_eq!(hilbert_symbol(&b(-1), &b(-1), &b(0)), -1);
        assert_eq!(hilbert_symbol(&b(-1), &b(-1), &b(3)), 1);
        // (2,3)_3 = (2/3) = -1
        assert_eq!(hilbert_symbol(&b(2), &b(3), &b(3)), -1);
        // (p, p)_p = (-1, p)_p
        assert_eq!(hilbert_symbol(&b(5), &b(5), &b(5)), 1);
        assert_eq!(hilbert_symbol(&b(7), &b(7), &b(7)), -1);
    }

    #[test]
    fn product_formula() {
        let vals = [-6i64, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 15];
        for &x in &vals {
            for &y in &vals {
                let mut primes = BTreeSet::new();
                primes.insert(b(2));
                prime_factors(&b(x), &mut primes);
                prime_factors(&b(y), &mut primes);
                primes.insert(b(0));
                let prod: i32 = primes.iter().map(|p| hilbert_symbol(&b(x), &b(y), p)).product();
                assert_eq!(prod, 1, "({x},{y})");
            }
        }
    }

    #[test]
    fn small_witt_indices() {
        assert_eq!(witt_index(&diag(&[1, -1])).unwrap(), 1);
        assert_eq!(witt_index(&diag(&[1, 1])).unwrap(), 0);
        assert_eq!(witt_index(&diag(&[1, -2])).unwrap(), 0);
        assert_eq!(witt_index(&diag(&[1, 1, -2])).unwrap(), 1);
        // x^2 + y^2 - 3 z^2 is anisotropic (3 is inert)
        assert_eq!(witt_index(&diag(&[1, 1, -3])).unwrap(), 0);
        assert_eq!(witt_index(&diag(&[1, 1, 1, -7])).unwrap(), 0);
        assert_eq!(witt_index(&diag(&[1, 1, -1, -1])).unwrap(), 2);
        assert_eq!(witt_index(&diag(&[1, 1, 1, 1, -1])).unwrap(), 1);
        assert!(witt_index(&diag(&[1, 0])).is_err());
    }

    #[test]
    fn off_diagonal_and_alternating() {
        let h = Matrix::from_rows(vec![
            vec![Rational::zero(), Rational::one()],
            vec![Rational::one(), Rational::zero()],
        ])
        .unwrap();
        assert!(is_hyperbolic(&h).unwrap());
        let j = Matrix::from_rows(vec![
            vec![Rational::zero(), Rational::one()],
            vec![Rational::from_int(-1), Rational::zero()],
        ])
        .unwrap();
        assert_eq!(witt_index(&j).unwrap(), 1);
    }

    #[test]
    fn factoring() {
        let mut s = BTreeSet::new();
        prime_factors(&(b(1_000_003) * b(999_983) * b(12)), &mut s);
        let got: Vec<BigInt> = s.into_iter().collect();
        assert_eq!(got, vec![b(2), b(3), b(999_983), b(1_000_003)]);
    }
}
