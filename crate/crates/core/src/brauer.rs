//! The Brauer algebra `Br_n(m)`: linear combinations of diagrams, the Markov
//! trace, the form `<a, b> = tr_M(a τ(b))` and its Gram matrix.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::cells::{irreducible_labels, CellRep};
use crate::diagrams::{enumerate, BrauerDiagram};
use crate::error::{Error, Result};
use crate::linalg::{ldlt_positive_definite, LdltReport, Matrix, SparseEchelon};
use crate::scalars::{Field, Rational, Ring};
use crate::specht::Partition;

/// Finite linear combination of diagrams on a common number of strands.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement<F> {
    n: usize,
    terms: BTreeMap<BrauerDiagram, F>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: BrauerDiagram) -> Self {
        Self::from_term(d, F::one())
    }

    pub fn from_term(d: BrauerDiagram, c: F) -> Self {
        let mut e = Self::zero(d.n());
        e.add_term(d, &c);
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> F {
        self.terms.get(d).cloned().unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, d: BrauerDiagram, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&F::from_int(-1)))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        AlgebraElement { n: self.n, terms: self.terms.iter().map(|(d, x)| (d.clone(), x.mul(c))).collect() }
    }

    /// Linear extension of the diagram reflection.
    pub fn tau(&self) -> Self {
        AlgebraElement { n: self.n, terms: self.terms.iter().map(|(d, c)| (d.tau(), c.clone())).collect() }
    }
}

impl<F: Field> fmt::Display for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c})*{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Br_n(m)` for a fixed `n` and a value of `m` in the coefficient field.
#[derive(Clone, Debug)]
pub struct BrauerAlgebra<F> {
    n: usize,
    m: F,
}

impl<F: Field> BrauerAlgebra<F> {
    pub fn new(n: usize, m: F) -> Self {
        BrauerAlgebra { n, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> &F {
        &self.m
    }

    pub fn one(&self) -> AlgebraElement<F> {
        AlgebraElement::from_diagram(BrauerDiagram::identity(self.n))
    }

    pub fn s(&self, i: usize, j: usize) -> Result<AlgebraElement<F>> {
        Ok(AlgebraElement::from_diagram(BrauerDiagram::s(self.n, i, j)?))
    }

    pub fn p(&self, i: usize, j: usize) -> Result<AlgebraElement<F>> {
        Ok(AlgebraElement::from_diagram(BrauerDiagram::p(self.n, i, j)?))
    }

    /// The infinitesimal braid `t_ij = s_ij - p_ij`.
    pub fn t(&self, i: usize, j: usize) -> Result<AlgebraElement<F>> {
        self.s(i, j)?.sub(&self.p(i, j)?)
    }

    /// `T = sum_{i<j} t_ij`.
    pub fn casimir(&self) -> AlgebraElement<F> {
        let mut acc = AlgebraElement::zero(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                acc = acc.add(&self.t(i, j).expect("valid pair")).expect("same n");
            }
        }
        acc
    }

    /// `t'_ij = t_ij - 2T / (n(n-1))`.
    pub fn t_prime(&self, i: usize, j: usize) -> Result<AlgebraElement<F>> {
        let n = self.n as i64;
        if n < 2 {
            return Err(Error::Domain("t' needs at least two strands".into()));
        }
        let c = F::from_int(2).div(&F::from_int(n * (n - 1))).expect("n >= 2");
        self.t(i, j)?.sub(&self.casimir().scale(&c))
    }

    pub fn multiply(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        a.check(b)?;
        if a.n != self.n {
            return Err(Error::StrandMismatch(self.n, a.n));
        }
        let mut out = AlgebraElement::zero(self.n);
        for (da, ca) in &a.terms {
            for (db, cb) in &b.terms {
                let (d, loops) = da.compose(db)?;
                let c = ca.mul(cb).mul(&self.m.pow(loops as u32));
                out.add_term(d, &c);
            }
        }
        Ok(out)
    }

    pub fn bracket(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.multiply(a, b)?.sub(&self.multiply(b, a)?)
    }

    /// `tr_M(d) = m^(γ(d) - n)` extended linearly; needs `m != 0`.
    pub fn markov_trace(&self, a: &AlgebraElement<F>) -> Result<F> {
        let mut acc = F::zero();
        for (d, c) in &a.terms {
            let w = self.diagram_trace(d)?;
            acc.add_mul(c, &w);
        }
        Ok(acc)
    }

    pub fn diagram_trace(&self, d: &BrauerDiagram) -> Result<F> {
        self.m.powi(d.closure_loops() as i64 - self.n as i64).ok_or(Error::DivisionByZero)
    }

    /// `<a, b> = tr_M(a τ(b))`.
    pub fn form(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<F> {
        self.markov_trace(&self.multiply(a, &b.tau())?)
    }
}

/// Gram matrix of `<,>` on the diagram basis of `Br_n(m0)`, in the order of
/// [`enumerate`].
pub fn gram_matrix(n: usize, m0: &Rational) -> Result<Matrix<Rational>> {
    if m0.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let basis = enumerate(n)?;
    let taus: Vec<BrauerDiagram> = basis.iter().map(BrauerDiagram::tau).collect();
    // exponents range over -n..=n
    let powers: Vec<Rational> = (-(n as i64)..=n as i64).map(|e| m0.powi(e).expect("m0 != 0")).collect();
    let dim = basis.len();
    let rows: Vec<Vec<Rational>> = basis
        .par_iter()
        .map(|a| {
            taus.iter()
                .map(|tb| {
                    let (d, loops) = a.compose(tb).expect("same n");
                    let e = loops + d.closure_loops();
                    powers[e].clone()
                })
                .collect()
        })
        .collect();
    Matrix::from_vec(dim, dim, rows.into_iter().flatten().collect())
}

/// Positivity of the form on `Br_n(m0)` by exact `LDL^T`.
///
/// Left and right multiplication by a permutation preserve the form, so the
/// commuting involutions `L_(2i-1,2i)` and `R_(2i-1,2i)` split the diagram
/// space into orthogonal character blocks; each block is factored on its
/// own. Pivots are listed block by block and the witness, when there is one,
/// is expressed in the diagram basis of [`enumerate`].
pub fn gram_positivity(n: usize, m0: &Rational) -> Result<LdltReport> {
    if m0.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let basis = enumerate(n)?;
    let index: BTreeMap<&BrauerDiagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let exponents: Vec<Vec<u8>> = basis
        .par_iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    let (d, loops) = a.compose(&b.tau()).expect("same n");
                    (loops + d.closure_loops()) as u8
                })
                .collect()
        })
        .collect();

    // generators of (Z/2)^r acting on basis indices
    let mut gens: Vec<Vec<usize>> = Vec::new();
    for i in (0..n.saturating_sub(1)).step_by(2) {
        let w = BrauerDiagram::s(n, i, i + 1)?;
        for left in [true, false] {
            let act = basis
                .iter()
                .map(|d| {
                    let (img, loops) = if left { w.compose(d) } else { d.compose(&w) }.expect("same n");
                    debug_assert_eq!(loops, 0);
                    index[&img]
                })
                .collect();
            gens.push(act);
        }
    }
    let r = gens.len();

    // orbits, with a group element (as a bitmask) reaching each member
    let mut seen = vec![false; basis.len()];
    let mut orbits: Vec<BTreeMap<usize, u32>> = Vec::new();
    for start in 0..basis.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = vec![(start, 0u32)];
        let mut members = BTreeMap::new();
        while let Some((x, mask)) = queue.pop() {
            members.insert(x, mask);
            for (g, act) in gens.iter().enumerate() {
                if !seen[act[x]] {
                    seen[act[x]] = true;
                    queue.push((act[x], mask ^ (1 << g)));
                }
            }
        }
        orbits.push(members);
    }
    // a character survives on an orbit iff it is trivial on the stabilizer
    let stabilizers: Vec<Vec<u32>> = orbits
        .iter()
        .map(|o| {
            let mut stab: Vec<u32> = o
                .iter()
                .flat_map(|(&x, &mask)| gens.iter().enumerate().map(move |(g, act)| (act[x], mask ^ (1 << g))))
                .map(|(y, mask)| o[&y] ^ mask)
                .filter(|&s| s != 0)
                .collect();
            stab.sort_unstable();
            stab.dedup();
            stab
        })
        .collect();

    let powers: Vec<Rational> = (-(n as i64)..=n as i64).map(|e| m0.powi(e).expect("m0 != 0")).collect();
    let sign = |chi: u32, mask: u32| if (chi & mask).count_ones().is_multiple_of(2) { 1i64 } else { -1 };
    let mut pivots = Vec::with_capacity(basis.len());
    for chi in 0..(1u32 << r) {
        let block: Vec<usize> =
            (0..orbits.len()).filter(|&o| stabilizers[o].iter().all(|&s| sign(chi, s) == 1)).collect();
        if block.is_empty() {
            continue;
        }
        let entries: Vec<Rational> = block
            .par_iter()
            .flat_map_iter(|&o1| {
                let (exponents, orbits, powers) = (&exponents, &orbits, &powers);
                block.iter().map(move |&o2| {
                    let mut counts = vec![0i64; 2 * n + 1];
                    for (&x, &mx) in &orbits[o1] {
                        for (&y, &my) in &orbits[o2] {
                            counts[exponents[x][y] as usize] += sign(chi, mx ^ my);
                        }
                    }
                    let mut v = Rational::zero();
                    for (e, c) in counts.iter().enumerate().filter(|(_, c)| **c != 0) {
                        v.add_mul(&Rational::from_int(*c), &powers[e]);
                    }
                    v
                })
            })
            .collect();
        let report = ldlt_positive_definite(&Matrix::from_vec(block.len(), block.len(), entries)?)?;
        let offset = pivots.len();
        pivots.extend(report.pivots);
        if let (Some(i), Some(y)) = (report.failing_pivot_index, report.witness) {
            let mut x = vec![Rational::zero(); basis.len()];
            for (&o, c) in block.iter().zip(&y) {
                for (&d, &mask) in &orbits[o] {
                    x[d].add_assign(&c.mul(&Rational::from_int(sign(chi, mask))));
                }
            }
            return Ok(LdltReport {
                dim: basis.len(),
                positive_definite: false,
                pivots,
                failing_pivot_index: Some(offset + i),
                witness: Some(x),
            });
        }
    }
    Ok(LdltReport { dim: basis.len(), positive_definite: true, pivots, failing_pivot_index: None, witness: None })
}

/// Weights `w_λ = P_λ(m0) / m0^n` with `tr_M = sum_λ w_λ tr_λ`, solved from
/// the values of both sides on the diagram basis.
pub fn p_lambda_weights(n: usize, m0: &Rational) -> Result<Vec<(Partition, Rational)>> {
    let alg = BrauerAlgebra::new(n, m0.clone());
    let basis = enumerate(n)?;
    let labels = irreducible_labels(n);
    let reps: Vec<CellRep<Rational>> = labels
        .par_iter()
        .map(|l| CellRep::new(n, l.clone(), m0.clone()))
        .collect::<Result<_>>()?;
    let k = reps.len();
    // augmented rows [tr_λ(b) ... | tr_M(b)]
    let mut ech = SparseEchelon::new(k + 1);
    for b in &basis {
        let mut row: Vec<Rational> = reps.iter().map(|r| r.diagram_matrix(b).trace()).collect();
        row.push(alg.diagram_trace(b)?.neg());
        ech.insert(row);
    }
    let sols = ech.kernel_basis();
    if sols.len() != 1 || sols[0][k].is_zero() {
        return Err(Error::Singular(format!(
            "trace weights are not determined at m = {m0}: the specialization is not semisimple"
        )));
    }
    let scale = sols[0][k].inv().expect("nonzero");
    Ok(labels.into_iter().zip(sols[0][..k].iter().map(|x| x * &scale)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RationalFunction;

    type RF = RationalFunction;

    fn br2() -> BrauerAlgebra<RF> {
        BrauerAlgebra::new(2, RF::m())
    }

    #[test]
    fn t_squared_relation_over_qm() {
        let a = br2();
        let t = a.t(0, 1).unwrap();
        let lhs = a.multiply(&t, &t).unwrap().sub(&a.one()).unwrap();
        let rhs = a.p(0, 1).unwrap().scale(&RF::m().sub(&RF::from_int(2)));
        assert_eq!(lhs, rhs);
        let third = t.add(&a.one().scale(&RF::m().sub(&RF::one()))).unwrap();
        assert!(a.multiply(&lhs, &third).unwrap().is_zero());
    }

    #[test]
    fn trace_values() {
        let a = BrauerAlgebra::new(3, RF::m());
        assert_eq!(a.markov_trace(&a.one()).unwrap(), RF::one());
        assert_eq!(a.markov_trace(&a.p(0, 2).unwrap()).unwrap(), RF::m().inv().unwrap());
        let b = br2();
        assert_eq!(b.form(&b.one(), &b.one()).unwrap(), RF::one());
        let p = b.p(0, 1).unwrap();
        assert_eq!(b.form(&p, &p).unwrap(), RF::one());
    }

    #[test]
    fn gram_small_cases() {
        let q = |s: &str| s.parse::<Rational>().unwrap();
        assert!(gram_positivity(2, &q("13/2")).unwrap().positive_definite);
        let r = gram_positivity(2, &q("1")).unwrap();
        assert!(!r.positive_definite);
        // 3x3 oracle: at m = 1 every entry is 1, so the matrix is rank one
        let g = gram_matrix(2, &q("1")).unwrap();
        assert!(g.as_slice().iter().all(|x| x.is_one()));
        // witness realizes the failing pivot
        let w = r.witness.unwrap();
        let gw = crate::linalg::bilinear(&g, &w, &w);
        assert_eq!(gw, r.pivots[r.failing_pivot_index.unwrap()]);
    }
}
