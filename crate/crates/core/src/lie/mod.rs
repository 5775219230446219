//! Matrix Lie algebras generated by the infinitesimal braids.

mod arithmetic;
mod exceptional;
mod nonisomorphism;
mod theorem;

pub use arithmetic::{hook_dimension, verify_dimension_arithmetic, ArithmeticCheck, ArithmeticReport, CheckRole};
pub use exceptional::{
    tabulated_sum_table, exceptional_sets, exceptional_sets_from_tables, Affine, ExceptionalSets,
};
pub use nonisomorphism::{verify_nonisomorphism, NonIsoPair, NonIsomorphismReport};
pub use theorem::{expected_specht_image, verify_theorem_brauer, TheoremOptions, TheoremReport, TheoremRow};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{column_relations, intertwiners, Matrix, SparseEchelon};
use crate::scalars::{Field, Fp, Rational, Ring};

/// Subspace of `N x N` matrices with an exact basis, kept in reduced echelon
/// form over the `N^2` matrix coordinates.
#[derive(Clone, Debug)]
pub struct LieSubspace<F: Field = Rational> {
    size: usize,
    generators: Vec<Matrix<F>>,
    basis: Vec<Matrix<F>>,
    echelon: SparseEchelon<F>,
}

impl<F: Field> LieSubspace<F> {
    pub fn new(size: usize) -> Self {
        LieSubspace { size, generators: Vec::new(), basis: Vec::new(), echelon: SparseEchelon::new(size * size) }
    }

    /// Matrix size `N`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<F>] {
        &self.basis
    }

    pub fn generators(&self) -> &[Matrix<F>] {
        &self.generators
    }

    pub fn contains(&self, x: &Matrix<F>) -> bool {
        x.rows() == self.size && self.echelon.contains(x.as_slice())
    }

    /// Adds `x` to the span; `true` if the dimension grew.
    pub fn insert(&mut self, x: Matrix<F>) -> bool {
        let mut v = x.as_slice().to_vec();
        self.echelon.reduce(&mut v);
        self.insert_reduced(x, v)
    }

    fn insert_reduced(&mut self, x: Matrix<F>, reduced: Vec<F>) -> bool {
        if self.echelon.insert_reduced(reduced) {
            self.basis.push(x);
            true
        } else {
            false
        }
    }

    /// Is every `[b_i, b_j]` back in the span? Quadratic in the dimension.
    pub fn is_bracket_closed(&self) -> bool {
        let d = self.dim();
        (0..d).into_par_iter().all(|i| (i + 1..d).all(|j| self.contains(&self.basis[i].bracket(&self.basis[j]))))
    }

    /// Does `self` contain every basis vector of `other`?
    pub fn contains_space(&self, other: &LieSubspace<F>) -> bool {
        other.basis.iter().all(|x| self.contains(x))
    }

    pub fn is_traceless(&self) -> bool {
        self.basis.iter().all(|x| x.trace().is_zero())
    }
}

/// Tuning for [`lie_closure_with`].
#[derive(Clone, Debug)]
pub struct ClosureOptions {
    /// Stop as soon as this dimension is reached. Defaults to `N^2 - 1` when
    /// every generator is traceless and `N^2` otherwise, which is always an
    /// upper bound.
    pub ceiling: Option<usize>,
    /// Abort after this many bracket evaluations.
    pub step_cap: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { ceiling: None, step_cap: 50_000_000 }
    }
}

/// Smallest bracket-closed subspace containing `gens`.
pub fn lie_closure<F: Field>(gens: &[Matrix<F>]) -> Result<LieSubspace<F>> {
    lie_closure_with(gens, &ClosureOptions::default())
}

/// Breadth-first closure under `ad(g)` for the generators `g`: the span of
/// all iterated brackets `[g_1, [g_2, ... g_k]]` is already a Lie algebra, so
/// brackets between two non-generators are never formed.
pub fn lie_closure_with<F: Field>(gens: &[Matrix<F>], opts: &ClosureOptions) -> Result<LieSubspace<F>> {
    let Some(first) = gens.first() else {
        return Ok(LieSubspace::new(0));
    };
    let size = first.rows();
    if gens.iter().any(|g| g.rows() != size || !g.is_square()) {
        return Err(Error::Dimension("generators must be square matrices of one size".into()));
    }
    let mut sub = LieSubspace::new(size);
    sub.generators = gens.to_vec();
    for g in gens {
        sub.insert(g.clone());
    }
    let traceless = gens.iter().all(|g| g.trace().is_zero());
    let ceiling = opts.ceiling.unwrap_or(if traceless { size * size - 1 } else { size * size });
    let mut next = 0;
    let mut steps = 0usize;
    while next < sub.dim() && sub.dim() < ceiling {
        let frontier: Vec<Matrix<F>> = sub.basis[next..].to_vec();
        next = sub.dim();
        steps += frontier.len() * gens.len();
        if steps > opts.step_cap {
            return Err(Error::StepCap(opts.step_cap));
        }
        let echelon = &sub.echelon;
        let candidates: Vec<(Matrix<F>, Vec<F>)> = frontier
            .par_iter()
            .flat_map_iter(|x| gens.iter().map(move |g| g.bracket(x)))
            .filter_map(|y| {
                let mut v = y.as_slice().to_vec();
                echelon.reduce(&mut v);
                (!v.iter().all(Ring::is_zero)).then_some((y, v))
            })
            .collect();
        for (y, mut v) in candidates {
            sub.echelon.reduce(&mut v);
            sub.insert_reduced(y, v);
            if sub.dim() >= ceiling {
                break;
            }
        }
    }
    Ok(sub)
}

/// Center of the Lie algebra generated by `sub.generators()`: the elements
/// of `sub` commuting with every generator.
pub fn center<F: Field>(sub: &LieSubspace<F>) -> Vec<Matrix<F>> {
    if sub.dim() == 0 {
        return Vec::new();
    }
    let columns: Vec<Vec<F>> = sub
        .basis
        .par_iter()
        .map(|b| sub.generators.iter().flat_map(|g| b.bracket(g).into_vec()).collect())
        .collect();
    column_relations(&columns)
        .into_iter()
        .map(|c| {
            let mut acc = Matrix::zeros(sub.size, sub.size);
            for (ck, bk) in c.iter().zip(&sub.basis) {
                if !ck.is_zero() {
                    acc = acc.add(&bk.scale(ck));
                }
            }
            acc
        })
        .collect()
}

/// Classical type of an irreducible matrix Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "n", rename_all = "lowercase")]
pub enum LieType {
    Zero,
    Sl(usize),
    So(usize),
    Sp(usize),
    Other(usize),
}

impl LieType {
    pub fn dimension(&self) -> Option<usize> {
        match *self {
            LieType::Zero => Some(0),
            LieType::Sl(n) => Some(n * n - 1),
            LieType::So(n) => Some(n * (n - 1) / 2),
            LieType::Sp(n) => Some(n * (n + 1) / 2),
            LieType::Other(_) => None,
        }
    }
}

impl std::fmt::Display for LieType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LieType::Zero => write!(f, "0"),
            LieType::Sl(n) => write!(f, "sl{n}"),
            LieType::So(n) => write!(f, "so{n}"),
            LieType::Sp(n) => write!(f, "sp{n}"),
            LieType::Other(d) => write!(f, "other(dim {d})"),
        }
    }
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub kind: LieType,
    pub dim: usize,
    /// Dimension of `{J : X^T J + J X = 0}`.
    pub form_space_dim: usize,
    pub form_symmetric: Option<bool>,
}

/// Reads off `sl`, `so` or `sp` from the invariant bilinear forms of the
/// generators, cross-checked against the dimension.
pub fn classify<F: Field>(sub: &LieSubspace<F>) -> Result<Classification> {
    classify_generators(&sub.generators, sub.size, sub.dim())
}

fn classify_generators<F: Field>(gens: &[Matrix<F>], n: usize, dim: usize) -> Result<Classification> {
    if dim == 0 {
        return Ok(Classification { kind: LieType::Zero, dim, form_space_dim: 0, form_symmetric: None });
    }
    let pairs: Vec<_> = gens.iter().map(|g| (g.transpose(), g.neg())).collect();
    let forms = intertwiners(&pairs)?;
    let (kind, sym) = match forms.len() {
        0 => (if dim == n * n - 1 { LieType::Sl(n) } else { LieType::Other(dim) }, None),
        1 => {
            let j = &forms[0];
            if j.is_symmetric() {
                (if dim == n * (n - 1) / 2 { LieType::So(n) } else { LieType::Other(dim) }, Some(true))
            } else if j.is_antisymmetric() {
                (if dim == n * (n + 1) / 2 { LieType::Sp(n) } else { LieType::Other(dim) }, Some(false))
            } else {
                (LieType::Other(dim), None)
            }
        }
        k => {
            return Err(Error::Verification(format!(
                "{k}-dimensional space of invariant forms: the module is not irreducible"
            )))
        }
    };
    Ok(Classification { kind, dim, form_space_dim: forms.len(), form_symmetric: sym })
}

/// How a [`CertifiedClosure`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    /// Closure and forms computed over `Q`.
    Exact,
    /// The closure modulo [`MODULUS`](crate::scalars::MODULUS) already has the largest possible
    /// dimension and there are no invariant forms modulo the prime. Ranks
    /// only drop under reduction, so both facts hold over `Q`.
    Modular,
}

/// Dimension, type and tracelessness of the Lie algebra generated by
/// rational matrices.
#[derive(Clone, Debug, Serialize)]
pub struct CertifiedClosure {
    pub size: usize,
    pub dim: usize,
    pub classification: Classification,
    pub traceless: bool,
    /// Dimension of the center of the generated algebra.
    pub center_dim: usize,
    pub certificate: Certificate,
}

fn reduce_mod_p(gens: &[Matrix<Rational>]) -> Option<Vec<Matrix<Fp>>> {
    gens.iter()
        .map(|g| {
            let data = g.as_slice().iter().map(Fp::try_from_rational).collect::<Option<Vec<_>>>()?;
            Matrix::from_vec(g.rows(), g.cols(), data).ok()
        })
        .collect()
}

/// Tries the modular certificate and falls back to exact closure and
/// classification when it is inconclusive.
pub fn certified_closure(gens: &[Matrix<Rational>]) -> Result<CertifiedClosure> {
    let Some(first) = gens.first() else {
        return Err(Error::Dimension("no generators".into()));
    };
    let size = first.rows();
    let traceless = gens.iter().all(|g| g.trace().is_zero());
    let ceiling = if traceless { size * size - 1 } else { size * size };
    if let Some(modular) = reduce_mod_p(gens) {
        let sub = lie_closure(&modular)?;
        if sub.dim() == ceiling {
            let pairs: Vec<_> = modular.iter().map(|g| (g.transpose(), g.neg())).collect();
            if intertwiners(&pairs)?.is_empty() {
                let kind = if traceless { LieType::Sl(size) } else { LieType::Other(ceiling) };
                let classification = Classification { kind, dim: ceiling, form_space_dim: 0, form_symmetric: None };
                // all of sl(V) or gl(V)
                let center_dim = usize::from(!traceless);
                return Ok(CertifiedClosure {
                    size,
                    dim: ceiling,
                    classification,
                    traceless,
                    center_dim,
                    certificate: Certificate::Modular,
                });
            }
        }
    }
    let sub = lie_closure(gens)?;
    Ok(CertifiedClosure {
        size,
        dim: sub.dim(),
        classification: classify(&sub)?,
        traceless: sub.is_traceless(),
        center_dim: center(&sub).len(),
        certificate: Certificate::Exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, i: usize, j: usize) -> Matrix<Rational> {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, Rational::one());
        m
    }

    #[test]
    fn identity_closure_is_abelian_line() {
        let sub = lie_closure(&[Matrix::<Rational>::identity(3)]).unwrap();
        assert_eq!(sub.dim(), 1);
        assert_eq!(center(&sub).len(), 1);
    }

    #[test]
    fn sl3_from_elementary_matrices() {
        let gens = vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 1, 0), unit(3, 2, 1)];
        let sub = lie_closure(&gens).unwrap();
        assert_eq!(sub.dim(), 8);
        assert!(sub.is_bracket_closed());
        assert!(center(&sub).is_empty());
        assert_eq!(classify(&sub).unwrap().kind, LieType::Sl(3));
    }

    #[test]
    fn so3_from_rotations() {
        let a = unit(3, 0, 1).sub(&unit(3, 1, 0));
        let b = unit(3, 1, 2).sub(&unit(3, 2, 1));
        let sub = lie_closure(&[a, b]).unwrap();
        assert_eq!(sub.dim(), 3);
        let c = classify(&sub).unwrap();
        assert_eq!(c.kind, LieType::So(3));
        assert_eq!(c.form_symmetric, Some(true));
    }

    #[test]
    fn modular_certificate_agrees_with_exact_closure() {
        let gens = vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 1, 0), unit(3, 2, 1)];
        let c = certified_closure(&gens).unwrap();
        assert_eq!((c.dim, c.certificate, c.classification.kind), (8, Certificate::Modular, LieType::Sl(3)));
        let a = unit(3, 0, 1).sub(&unit(3, 1, 0));
        let b = unit(3, 1, 2).sub(&unit(3, 2, 1));
        let c = certified_closure(&[a, b]).unwrap();
        assert_eq!((c.dim, c.certificate, c.classification.kind), (3, Certificate::Exact, LieType::So(3)));
    }

    #[test]
    fn closure_is_idempotent_and_order_free() {
        let gens = vec![unit(3, 0, 1), unit(3, 1, 2), unit(3, 2, 0)];
        let a = lie_closure(&gens).unwrap();
        let rev: Vec<_> = gens.iter().rev().cloned().collect();
        let b = lie_closure(&rev).unwrap();
        assert!(a.contains_space(&b) && b.contains_space(&a));
        let again = lie_closure(a.basis()).unwrap();
        assert_eq!(again.dim(), a.dim());
    }
}
