//! Which cell modules stay isomorphic, or become dual, after restriction to
//! the derived algebra generated by the `t'_ij`.

use rayon::prelude::*;
use serde::Serialize;

use crate::cells::{irreducible_labels, is_irr_prime, CellRep};
use crate::error::{Error, Result};
use crate::linalg::{intertwiners, Matrix};
use crate::scalars::Rational;
use crate::specht::Partition;

#[derive(Clone, Debug, Serialize)]
pub struct NonIsoPair {
    pub first: Partition,
    pub second: Partition,
    pub dim: usize,
    /// Dimension of `{P : ρ1(t') P = P ρ2(t')}`.
    pub iso_dim: usize,
    /// Dimension of `{P : -ρ1(t')^T P = P ρ2(t')}`.
    pub dual_dim: usize,
    pub expected_iso: bool,
    pub expected_dual: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NonIsomorphismReport {
    pub n: usize,
    pub m: Rational,
    pub pairs: Vec<NonIsoPair>,
    pub ok: bool,
}

/// All ordered pairs of modules of equal dimension `> 1`, with exact
/// intertwiner spaces for the isomorphism and the duality problem.
pub fn verify_nonisomorphism(n: usize, m0: &Rational) -> Result<NonIsomorphismReport> {
    if !(2..=4).contains(&n) {
        return Err(Error::Bound(format!("intertwiner search runs for 2 <= n <= 4, got {n}")));
    }
    let reps: Vec<(Partition, Vec<Matrix<Rational>>)> = irreducible_labels(n)
        .into_iter()
        .map(|l| Ok((l.clone(), CellRep::new(n, l, m0.clone())?.t_prime_all())))
        .collect::<Result<_>>()?;
    let mut jobs = Vec::new();
    for (i, (a, ga)) in reps.iter().enumerate() {
        for (b, gb) in &reps[i..] {
            let d = ga[0].rows();
            if d > 1 && d == gb[0].rows() {
                jobs.push((a, ga, b, gb, d));
            }
        }
    }
    let pairs: Vec<NonIsoPair> = jobs
        .into_par_iter()
        .map(|(a, ga, b, gb, d)| {
            let iso: Vec<_> = ga.iter().zip(gb).map(|(x, y)| (x.clone(), y.clone())).collect();
            let dual: Vec<_> = ga.iter().zip(gb).map(|(x, y)| (x.transpose().neg(), y.clone())).collect();
            let iso_dim = intertwiners(&iso)?.len();
            let dual_dim = intertwiners(&dual)?.len();
            let expected_iso = a == b;
            let specht = !is_irr_prime(n, a) && !is_irr_prime(n, b);
            let expected_dual = specht && a.transpose() == *b;
            let ok = (iso_dim > 0) == expected_iso && (dual_dim > 0) == expected_dual && iso_dim <= 1 && dual_dim <= 1;
            Ok(NonIsoPair { first: a.clone(), second: b.clone(), dim: d, iso_dim, dual_dim, expected_iso, expected_dual, ok })
        })
        .collect::<Result<_>>()?;
    let ok = pairs.iter().all(|p| p.ok);
    Ok(NonIsomorphismReport { n, m: m0.clone(), pairs, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_four_pairs() {
        let r = verify_nonisomorphism(4, &crate::default_m()).unwrap();
        assert!(r.ok, "{:?}", r.pairs.iter().filter(|p| !p.ok).collect::<Vec<_>>());
        let hooks = r
            .pairs
            .iter()
            .find(|p| p.first == Partition::new(vec![3, 1]) && p.second == Partition::new(vec![2, 1, 1]))
            .unwrap();
        assert_eq!((hooks.iso_dim, hooks.dual_dim), (0, 1));
    }
}
