//! Characters of `S_n` evaluated on conjugacy classes, and the sign
//! multiplicity in symmetric and alternating squares.

use num_bigint::BigInt;

use crate::error::Result;
use crate::scalars::{Rational, Ring};

use super::partition::{partitions, Partition};
use super::rep::SpechtRep;

/// Permutation (images, 0-based) with consecutive cycles of the given lengths.
pub fn class_representative(cycle_type: &Partition) -> Vec<usize> {
    let mut w = Vec::with_capacity(cycle_type.size());
    let mut start = 0;
    for &len in cycle_type.parts() {
        for k in 0..len {
            w.push(start + (k + 1) % len);
        }
        start += len;
    }
    w
}

/// Number of permutations with the given cycle type.
pub fn class_size(cycle_type: &Partition) -> BigInt {
    let n = cycle_type.size();
    let fact = |k: usize| -> BigInt { (1..=k).map(BigInt::from).product() };
    let mut z = BigInt::from(1);
    let mut counts = std::collections::BTreeMap::new();
    for &p in cycle_type.parts() {
        *counts.entry(p).or_insert(0usize) += 1;
        z *= BigInt::from(p);
    }
    for &c in counts.values() {
        z *= fact(c);
    }
    fact(n) / z
}

/// Cycle type of `w^2`: even cycles split in half.
pub fn square_type(cycle_type: &Partition) -> Partition {
    let mut parts = Vec::new();
    for &p in cycle_type.parts() {
        if p % 2 == 0 {
            parts.push(p / 2);
            parts.push(p / 2);
        } else {
            parts.push(p);
        }
    }
    Partition::new(parts)
}

pub fn sign_of_type(cycle_type: &Partition) -> i64 {
    let even_cycles = cycle_type.parts().iter().filter(|&&p| p % 2 == 0).count();
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Character table row of `rep`, indexed like [`partitions`].
pub fn character(rep: &SpechtRep) -> Vec<(Partition, Rational)> {
    partitions(rep.n())
        .into_iter()
        .map(|mu| {
            let w = class_representative(&mu);
            let d = rep.dim();
            let mut tr = Rational::zero();
            for t in 0..d {
                let mut e = vec![Rational::zero(); d];
                e[t] = Rational::one();
                tr.add_assign(&rep.apply_permutation(&w, &e)[t]);
            }
            (mu, tr)
        })
        .collect()
}

/// `<f, g> = (1/n!) sum_g f(g) g(g)` for class functions on `S_n`.
pub fn inner_product(n: usize, f: &[(Partition, Rational)], g: &[(Partition, Rational)]) -> Rational {
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    let mut acc = Rational::zero();
    for ((mu, a), (nu, b)) in f.iter().zip(g) {
        debug_assert_eq!(mu, nu);
        let size = Rational::from_bigint(class_size(mu));
        acc.add_assign(&(&(a * b) * &size));
    }
    &acc / &Rational::from_bigint(fact)
}

fn sign_multiplicity(rep: &SpechtRep, symmetric: bool) -> Result<Rational> {
    let n = rep.n();
    let chi = character(rep);
    let lookup = |mu: &Partition| chi.iter().find(|(nu, _)| nu == mu).map(|(_, v)| v.clone()).expect("class");
    let half = Rational::new(1, 2)?;
    let sq: Vec<(Partition, Rational)> = chi
        .iter()
        .map(|(mu, x)| {
            let x2 = lookup(&square_type(mu));
            let v = if symmetric { &(x * x) + &x2 } else { &(x * x) - &x2 };
            (mu.clone(), &v * &half)
        })
        .collect();
    let sign: Vec<(Partition, Rational)> =
        partitions(n).into_iter().map(|mu| (mu.clone(), Rational::from_int(sign_of_type(&mu)))).collect();
    Ok(inner_product(n, &sq, &sign))
}

/// Does `S^2 ρ` contain the sign character?
pub fn sym_square_contains_sign(rep: &SpechtRep) -> Result<bool> {
    Ok(sign_multiplicity(rep, true)?.is_positive())
}

/// Does `Λ^2 ρ` contain the sign character?
pub fn alt_square_contains_sign(rep: &SpechtRep) -> Result<bool> {
    Ok(sign_multiplicity(rep, false)?.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=7 {
            let total: BigInt = partitions(n).iter().map(class_size).sum();
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn characters_are_orthonormal() {
        for n in 2..=5 {
            let chars: Vec<_> =
                partitions(n).into_iter().map(|p| character(&SpechtRep::new(p).unwrap())).collect();
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    let expect = if i == j { Rational::one() } else { Rational::zero() };
                    assert_eq!(inner_product(n, a, b), expect);
                }
            }
        }
    }

    #[test]
    fn square_types() {
        assert_eq!(square_type(&Partition::new(vec![4, 3, 2])), Partition::new(vec![3, 2, 2, 1, 1]));
        assert_eq!(sign_of_type(&Partition::new(vec![2, 2, 1])), 1);
        assert_eq!(class_representative(&Partition::new(vec![3, 1])), vec![1, 2, 0, 3]);
    }
}
