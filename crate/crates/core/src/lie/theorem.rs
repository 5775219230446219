//! Structure of the infinitesimal Brauer algebra, one cell module at a time
//! and on the faithful sum of all of them.

use rayon::prelude::*;
use serde::Serialize;

use super::{center, certified_closure, lie_closure, Certificate, LieType};
use crate::cells::{irreducible_labels, is_irr_prime, CellRep};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::Rational;
use crate::specht::{alt_square_contains_sign, sym_square_contains_sign, Partition, SpechtRep};

/// What the infinitesimal Hecke algebra looks like on the Specht module `λ ⊢ n`.
///
/// All hooks share one ideal `sl_{n-1}` (acting on exterior powers of the
/// reflection representation), `λ` and `λ'` share one ideal, and a
/// self-conjugate non-hook carries an orthogonal or symplectic ideal
/// according to which square contains the sign character.
pub fn expected_specht_image(lambda: &Partition) -> Result<(LieType, usize)> {
    let n = lambda.size();
    let d = lambda.dimension() as usize;
    if d == 1 {
        return Ok((LieType::Zero, 0));
    }
    let self_dual = if lambda.is_self_conjugate() {
        let rep = SpechtRep::new(lambda.clone())?;
        if sym_square_contains_sign(&rep)? {
            Some(LieType::So(d))
        } else if alt_square_contains_sign(&rep)? {
            Some(LieType::Sp(d))
        } else {
            return Err(Error::Verification(format!("self-conjugate {lambda} without a sign-invariant square")));
        }
    } else {
        None
    };
    if lambda.is_hook() {
        let dim = (n - 1) * (n - 1) - 1;
        let kind = match self_dual {
            Some(k) if k.dimension() == Some(dim) => k,
            None if d == n - 1 => LieType::Sl(d),
            _ => LieType::Other(dim),
        };
        return Ok((kind, dim));
    }
    let kind = self_dual.unwrap_or(LieType::Sl(d));
    Ok((kind, kind.dimension().expect("classical type")))
}

#[derive(Clone, Debug)]
pub struct TheoremOptions {
    /// Also close the faithful sum of all cell modules and compute its center.
    pub global: bool,
}

impl TheoremOptions {
    pub fn for_rank(n: usize) -> Self {
        TheoremOptions { global: n <= 4 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremRow {
    pub lambda: Partition,
    pub irr_prime: bool,
    pub module_dim: usize,
    pub closure_dim: usize,
    pub expected_dim: usize,
    pub kind: LieType,
    pub expected_kind: LieType,
    pub certificate: Certificate,
    pub traceless: bool,
    /// `dim λ · ρ(T) = (n(n-1)/2) tr ρ(t_12) · 1`.
    pub casimir_scalar: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub m: Rational,
    pub rows: Vec<TheoremRow>,
    pub global_dim: Option<usize>,
    pub expected_global_dim: usize,
    pub center_dim: Option<usize>,
    /// The center is spanned by the image of `T`.
    pub center_is_casimir: Option<bool>,
    pub ok: bool,
}

fn row(n: usize, lambda: &Partition, m0: &Rational) -> Result<TheoremRow> {
    let rep = CellRep::new(n, lambda.clone(), m0.clone())?;
    let d = rep.dim();
    let irr_prime = is_irr_prime(n, lambda);
    let (expected_kind, expected_dim) = if d == 1 {
        (LieType::Zero, 0)
    } else if irr_prime {
        (LieType::Sl(d), d * d - 1)
    } else {
        expected_specht_image(lambda)?
    };
    let closure = certified_closure(&rep.t_prime_all())?;
    let traceless = closure.traceless;
    let t12 = rep.t(0, 1)?;
    let pairs = Rational::from_int((n * (n - 1) / 2) as i64);
    let lhs = rep.casimir().scale(&Rational::from_int(d as i64));
    let casimir_scalar = lhs == Matrix::scalar(d, &(&pairs * &t12.trace()));
    let kind = closure.classification.kind;
    let ok = closure.dim == expected_dim && kind == expected_kind && traceless && casimir_scalar;
    Ok(TheoremRow {
        lambda: lambda.clone(),
        irr_prime,
        module_dim: d,
        closure_dim: closure.dim,
        expected_dim,
        kind,
        certificate: closure.certificate,
        expected_kind,
        traceless,
        casimir_scalar,
        ok,
    })
}

/// Dimension of the image of `B_n(m)` on the sum of all cell modules:
/// the center, one `sl(V_λ)` per `λ ∈ Irr'_n`, and the distinct simple
/// ideals of the infinitesimal Hecke algebra.
fn expected_global_dim(rows: &[TheoremRow]) -> usize {
    let mut total = 1;
    let mut hook_seen = false;
    for r in rows {
        if r.irr_prime {
            total += r.expected_dim;
        } else if r.lambda.is_hook() {
            if r.expected_dim > 0 && !hook_seen {
                hook_seen = true;
                total += r.expected_dim;
            }
        } else if r.lambda.is_self_conjugate() || r.lambda > r.lambda.transpose() {
            total += r.expected_dim;
        }
    }
    total
}

/// Closes `{t'_ij}` on every cell module of `Br_n(m0)` and compares with the
/// predicted decomposition; optionally closes `{t_ij}` on the faithful sum.
pub fn verify_theorem_brauer(n: usize, m0: &Rational, opts: &TheoremOptions) -> Result<TheoremReport> {
    if n < 2 {
        return Err(Error::Domain("need at least two strands".into()));
    }
    let labels = irreducible_labels(n);
    let rows: Vec<TheoremRow> = labels.par_iter().map(|l| row(n, l, m0)).collect::<Result<_>>()?;
    let expected_global_dim = expected_global_dim(&rows);
    let (mut global_dim, mut center_dim, mut center_is_casimir) = (None, None, None);
    if opts.global {
        let reps: Vec<CellRep<Rational>> =
            labels.iter().map(|l| CellRep::new(n, l.clone(), m0.clone())).collect::<Result<_>>()?;
        let per_rep: Vec<Vec<Matrix<Rational>>> = reps.iter().map(|r| r.t_all()).collect();
        let gens: Vec<Matrix<Rational>> = (0..per_rep[0].len())
            .map(|k| Matrix::direct_sum(&per_rep.iter().map(|ts| ts[k].clone()).collect::<Vec<_>>()))
            .collect();
        let casimir = gens.iter().skip(1).fold(gens[0].clone(), |acc, g| acc.add(g));
        let sub = lie_closure(&gens)?;
        let z = center(&sub);
        let spanned = z.len() == 1 && !casimir.is_zero() && sub.contains(&casimir) && {
            let c = &z[0];
            let mut probe = super::LieSubspace::new(c.rows());
            probe.insert(c.clone());
            probe.contains(&casimir)
        };
        global_dim = Some(sub.dim());
        center_dim = Some(z.len());
        center_is_casimir = Some(spanned);
    }
    let ok = rows.iter().all(|r| r.ok)
        && global_dim.is_none_or(|g| g == expected_global_dim)
        && center_dim.is_none_or(|c| c == 1)
        && center_is_casimir.unwrap_or(true);
    Ok(TheoremReport {
        n,
        m: m0.clone(),
        rows,
        global_dim,
        expected_global_dim,
        center_dim,
        center_is_casimir,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specht_predictions() {
        let p = |v: Vec<usize>| Partition::new(v);
        assert_eq!(expected_specht_image(&p(vec![4, 1])).unwrap(), (LieType::Sl(4), 15));
        assert_eq!(expected_specht_image(&p(vec![3, 1, 1])).unwrap(), (LieType::So(6), 15));
        assert_eq!(expected_specht_image(&p(vec![3, 2])).unwrap(), (LieType::Sl(5), 24));
        assert_eq!(expected_specht_image(&p(vec![2, 1])).unwrap(), (LieType::Sp(2), 3));
        assert_eq!(expected_specht_image(&p(vec![5])).unwrap(), (LieType::Zero, 0));
    }

    #[test]
    fn rank_three_decomposition() {
        let report = verify_theorem_brauer(3, &crate::default_m(), &TheoremOptions::for_rank(3)).unwrap();
        assert!(report.ok, "{report:?}");
        assert_eq!(report.global_dim, Some(12));
        assert_eq!(report.center_dim, Some(1));
    }

    #[test]
    fn rank_four_decomposition() {
        let report = verify_theorem_brauer(4, &crate::default_m(), &TheoremOptions::for_rank(4)).unwrap();
        assert!(report.ok, "{report:?}");
        assert_eq!(report.global_dim, Some(90));
    }

    #[test]
    fn rank_five_decomposition() {
        let report = verify_theorem_brauer(5, &crate::default_m(), &TheoremOptions::for_rank(5)).unwrap();
        assert!(report.ok, "{report:?}");
    }
}
