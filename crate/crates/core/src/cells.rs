//! Cell representations of `Br_n(m)`.
//!
//! For `λ ⊢ r` with `n - r = 2k`, the module has basis `D ⊗ v_T`, where `D`
//! is a dangle (a partial matching of `{1..n}` with `k` arcs whose `r` free
//! points carry through-strands, ordered increasingly) and `T` runs over the
//! standard tableaux of `λ`. A diagram acts by stacking on top of the dangle:
//! closed loops give factors of `m`, fusing two through-strands gives zero,
//! and the induced permutation of through-strands acts on the Specht factor.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::brauer::AlgebraElement;
use crate::diagrams::{enumerate, partial_matchings, BrauerDiagram};
use crate::error::{Error, Result};
use crate::linalg::{intertwiners, Matrix, SparseEchelon};
use crate::scalars::{Field, Rational, Ring};
use crate::specht::{partitions, Partition, SpechtRep};

/// Largest number of strands for which cell modules are constructed.
pub const CELL_BOUND: usize = 7;

fn double_factorial(k: u128) -> u128 {
    (1..=k).rev().step_by(2).product::<u128>().max(1)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n, 2k) (2k-1)!! f^λ` with `k = (n - |λ|) / 2`.
pub fn cell_dimension(n: usize, lambda: &Partition) -> Result<u128> {
    let r = lambda.size();
    if r > n || !(n - r).is_multiple_of(2) {
        return Err(Error::Domain(format!("{lambda} does not label a cell module of Br_{n}")));
    }
    let k = ((n - r) / 2) as u128;
    Ok(binomial(n as u128, 2 * k) * double_factorial((2 * k).saturating_sub(1)) * lambda.dimension())
}

/// Labels of `Irr_n`: partitions of `r ≤ n` with `n - r` even, larger `r` first.
pub fn irreducible_labels(n: usize) -> Vec<Partition> {
    (0..=n).rev().filter(|r| (n - r).is_multiple_of(2)).flat_map(partitions).collect()
}

/// Is `λ` in `Irr'_n`, i.e. not factoring through the symmetric group?
pub fn is_irr_prime(n: usize, lambda: &Partition) -> bool {
    lambda.size() < n
}

/// The representation `ρ_λ` of `Br_n(m)` for one value of `m`.
#[derive(Clone, Debug)]
pub struct CellRep<F> {
    n: usize,
    lambda: Partition,
    m: F,
    dangles: Vec<Vec<(usize, usize)>>,
    dangle_index: HashMap<Vec<(usize, usize)>, usize>,
    free_points: Vec<Vec<usize>>,
    specht: SpechtRep,
}

/// Result of stacking a diagram on a dangle.
struct Stacked {
    arcs: Vec<(usize, usize)>,
    /// `perm[j]` = position among the new free points reached by through-strand `j`
    perm: Vec<usize>,
    loops: usize,
}

impl<F: Field> CellRep<F> {
    pub fn new(n: usize, lambda: Partition, m: F) -> Result<Self> {
        if n > CELL_BOUND {
            return Err(Error::Bound(format!("cell modules for n = {n} exceed bound {CELL_BOUND}")));
        }
        cell_dimension(n, &lambda)?;
        let k = (n - lambda.size()) / 2;
        let dangles = partial_matchings(n, k);
        let dangle_index = dangles.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        let free_points = dangles
            .iter()
            .map(|arcs| {
                let mut used = vec![false; n];
                for &(a, b) in arcs {
                    used[a] = true;
                    used[b] = true;
                }
                (0..n).filter(|&i| !used[i]).collect()
            })
            .collect();
        let specht = SpechtRep::new(lambda.clone())?;
        Ok(CellRep { n, lambda, m, dangles, dangle_index, free_points, specht })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn m(&self) -> &F {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.dangles.len() * self.specht.dim()
    }

    pub fn specht(&self) -> &SpechtRep {
        &self.specht
    }

    /// Human-readable basis labels `dangle|tableau`.
    pub fn basis_labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim());
        for arcs in &self.dangles {
            let mut s = String::new();
            for (a, b) in arcs {
                let _ = write!(s, "({},{})", a + 1, b + 1);
            }
            for t in self.specht.tableaux() {
                out.push(format!("{s}|{:?}", t.rows()));
            }
        }
        out
    }

    fn stack(&self, d: &BrauerDiagram, dangle: usize) -> Option<Stacked> {
        let n = self.n;
        let free = &self.free_points[dangle];
        let r = free.len();
        // nodes: d top 0..n, d bottom = dangle points n..2n, through-strands 2n..2n+r
        let mut parent: Vec<usize> = (0..2 * n + r).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra] = rb;
            }
        };
        for (a, b) in d.pairs() {
            union(&mut parent, a, b);
        }
        for &(a, b) in &self.dangles[dangle] {
            union(&mut parent, n + a, n + b);
        }
        for (j, &f) in free.iter().enumerate() {
            union(&mut parent, n + f, 2 * n + j);
        }
        let mut ends: Vec<Vec<usize>> = vec![Vec::new(); 2 * n + r];
        for x in (0..n).chain(2 * n..2 * n + r) {
            let root = find(&mut parent, x);
            ends[root].push(x);
        }
        let mut arcs = Vec::new();
        let mut through_at = vec![usize::MAX; r];
        for e in ends.iter().filter(|e| !e.is_empty()) {
            match (e[0] < n, e[1] < n) {
                (true, true) => arcs.push((e[0].min(e[1]), e[0].max(e[1]))),
                (true, false) => through_at[e[1] - 2 * n] = e[0],
                (false, true) => through_at[e[0] - 2 * n] = e[1],
                (false, false) => return None,
            }
        }
        arcs.sort_unstable();
        let mut tops: Vec<usize> = through_at.clone();
        tops.sort_unstable();
        let perm = through_at.iter().map(|x| tops.binary_search(x).expect("free point")).collect();
        let mut loops = 0;
        let mut counted = vec![false; 2 * n + r];
        for x in n..2 * n {
            let root = find(&mut parent, x);
            if ends[root].is_empty() && !counted[root] {
                counted[root] = true;
                loops += 1;
            }
        }
        Some(Stacked { arcs, perm, loops })
    }

    /// `ρ_λ(d)` for a single diagram.
    pub fn diagram_matrix(&self, d: &BrauerDiagram) -> Matrix<F> {
        assert_eq!(d.n(), self.n, "diagram on the wrong number of strands");
        let f = self.specht.dim();
        let dim = self.dim();
        let mut out = Matrix::zeros(dim, dim);
        for dangle in 0..self.dangles.len() {
            let Some(st) = self.stack(d, dangle) else {
                continue;
            };
            let target = self.dangle_index[&st.arcs];
            let scale = self.m.pow(st.loops as u32);
            for t in 0..f {
                let mut e = vec![Rational::zero(); f];
                e[t] = Rational::one();
                let img = self.specht.apply_permutation(&st.perm, &e);
                for (u, c) in img.iter().enumerate() {
                    if !c.is_zero() {
                        out.set(target * f + u, dangle * f + t, F::from_rational(c).mul(&scale));
                    }
                }
            }
        }
        out
    }

    pub fn element_matrix(&self, a: &AlgebraElement<F>) -> Result<Matrix<F>> {
        if a.n() != self.n {
            return Err(Error::StrandMismatch(self.n, a.n()));
        }
        let mut acc = Matrix::zeros(self.dim(), self.dim());
        for (d, c) in a.terms() {
            acc = acc.add(&self.diagram_matrix(d).scale(c));
        }
        Ok(acc)
    }

    pub fn s(&self, i: usize, j: usize) -> Result<Matrix<F>> {
        Ok(self.diagram_matrix(&BrauerDiagram::s(self.n, i, j)?))
    }

    pub fn p(&self, i: usize, j: usize) -> Result<Matrix<F>> {
        Ok(self.diagram_matrix(&BrauerDiagram::p(self.n, i, j)?))
    }

    /// `ρ(t_ij) = ρ(s_ij) - ρ(p_ij)`.
    pub fn t(&self, i: usize, j: usize) -> Result<Matrix<F>> {
        Ok(self.s(i, j)?.sub(&self.p(i, j)?))
    }

    pub fn t_all(&self) -> Vec<Matrix<F>> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(self.t(i, j).expect("valid pair"));
            }
        }
        out
    }

    /// `ρ(T)` for `T = sum t_ij`.
    pub fn casimir(&self) -> Matrix<F> {
        self.t_all().iter().fold(Matrix::zeros(self.dim(), self.dim()), |acc, t| acc.add(t))
    }

    /// Images of `t'_ij = t_ij - 2T / (n(n-1))`.
    pub fn t_prime_all(&self) -> Vec<Matrix<F>> {
        let n = self.n as i64;
        let c = F::from_int(2).div(&F::from_int(n * (n - 1))).expect("n >= 2");
        let shift = self.casimir().scale(&c);
        self.t_all().iter().map(|t| t.sub(&shift)).collect()
    }

    /// Adjacent generators `(s_1, ..., s_{n-1}, p_1, ..., p_{n-1})`.
    pub fn generators(&self) -> Vec<Matrix<F>> {
        let mut out: Vec<_> = (0..self.n.saturating_sub(1)).map(|i| self.s(i, i + 1).expect("adjacent")).collect();
        out.extend((0..self.n.saturating_sub(1)).map(|i| self.p(i, i + 1).expect("adjacent")));
        out
    }

    /// Checks the defining relations of `Br_n(m)` on the adjacent generators.
    pub fn verify_relations(&self) -> Result<()> {
        let k = self.n.saturating_sub(1);
        let s: Vec<_> = (0..k).map(|i| self.s(i, i + 1)).collect::<Result<_>>()?;
        let p: Vec<_> = (0..k).map(|i| self.p(i, i + 1)).collect::<Result<_>>()?;
        let id = Matrix::identity(self.dim());
        let fail = |what: String| Err(Error::Relation(format!("{what} fails on {}_{}", self.lambda, self.n)));
        for i in 0..k {
            if s[i].mul(&s[i]) != id {
                return fail(format!("s{}^2 = 1", i + 1));
            }
            if p[i].mul(&p[i]) != p[i].scale(&self.m) {
                return fail(format!("p{}^2 = m p{}", i + 1, i + 1));
            }
            if s[i].mul(&p[i]) != p[i] || p[i].mul(&s[i]) != p[i] {
                return fail(format!("s{} p{} = p{} = p{} s{}", i + 1, i + 1, i + 1, i + 1, i + 1));
            }
            if i + 1 < k {
                let j = i + 1;
                if s[i].mul(&s[j]).mul(&s[i]) != s[j].mul(&s[i]).mul(&s[j]) {
                    return fail(format!("braid s{} s{}", i + 1, j + 1));
                }
                if p[i].mul(&p[j]).mul(&p[i]) != p[i] || p[j].mul(&p[i]).mul(&p[j]) != p[j] {
                    return fail(format!("p{} p{} p{} = p{}", i + 1, j + 1, i + 1, i + 1));
                }
                if p[i].mul(&s[j]).mul(&p[i]) != p[i] || p[j].mul(&s[i]).mul(&p[j]) != p[j] {
                    return fail(format!("p{} s{} p{} = p{}", i + 1, j + 1, i + 1, i + 1));
                }
                if s[i].mul(&p[j]).mul(&s[i]) != s[j].mul(&p[i]).mul(&s[j]) {
                    return fail(format!("s{} p{} s{} = s{} p{} s{}", i + 1, j + 1, i + 1, j + 1, i + 1, j + 1));
                }
            }
            for j in i + 2..k {
                if s[i].mul(&s[j]) != s[j].mul(&s[i])
                    || s[i].mul(&p[j]) != p[j].mul(&s[i])
                    || p[i].mul(&p[j]) != p[j].mul(&p[i])
                    || p[i].mul(&s[j]) != s[j].mul(&p[i])
                {
                    return fail(format!("far commutation {} {}", i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    /// Basis of the forms `G` with `ρ(a)^T G = G ρ(τ(a))` for all generators.
    pub fn invariant_forms(&self) -> Result<Vec<Matrix<F>>> {
        let gens = self.generators();
        if gens.is_empty() {
            return Ok(vec![Matrix::identity(self.dim())]);
        }
        // generators are τ-invariant
        let pairs: Vec<_> = gens.into_iter().map(|g| (g.transpose(), g)).collect();
        intertwiners(&pairs)
    }

    /// The contravariant form, unique up to scale on an irreducible module,
    /// normalized so that its first nonzero diagonal entry is 1.
    pub fn gram_cell_form(&self) -> Result<Matrix<F>> {
        let forms = self.invariant_forms()?;
        if forms.len() != 1 {
            return Err(Error::Verification(format!(
                "{}-dimensional space of invariant forms on {}_{}",
                forms.len(),
                self.lambda,
                self.n
            )));
        }
        let g = forms.into_iter().next().expect("one form");
        let scale = (0..self.dim())
            .map(|i| g.get(i, i).clone())
            .find(|x| !x.is_zero())
            .and_then(|x| x.inv())
            .unwrap_or_else(F::one);
        Ok(g.scale(&scale))
    }

    /// Dimension of the span of `ρ(d)` over all diagrams `d`.
    pub fn image_dimension(&self) -> Result<usize> {
        let dim = self.dim();
        let mut ech = SparseEchelon::new(dim * dim);
        for d in enumerate(self.n)? {
            ech.insert(self.diagram_matrix(&d).into_vec());
            if ech.rank() == dim * dim {
                break;
            }
        }
        Ok(ech.rank())
    }
}

impl CellRep<Rational> {
    /// Eigenvalues of `ρ(t_12)`, checked against `(X^2 - 1)(X + m - 1)`.
    pub fn spectrum_t(&self) -> Result<Vec<Rational>> {
        if self.n < 2 {
            return Err(Error::Domain("t_12 needs two strands".into()));
        }
        let t = self.t(0, 1)?;
        let dim = self.dim();
        let one = Rational::one();
        let shifted = |c: &Rational| t.sub(&Matrix::scalar(dim, c));
        let third = &one - &self.m;
        let annihilator = shifted(&one).mul(&shifted(&-&one)).mul(&shifted(&third));
        if !annihilator.is_zero() {
            return Err(Error::Relation(format!(
                "ρ(t_12) on {}_{} has an eigenvalue outside {{1, -1, 1-m}}",
                self.lambda, self.n
            )));
        }
        let mut out: Vec<Rational> = Vec::new();
        for c in [-&one, one.clone(), third] {
            if !out.contains(&c) && shifted(&c).rank() < dim {
                out.push(c);
            }
        }
        out.sort();
        Ok(out)
    }
}

/// Outcome of restricting `ρ_λ` from `Br_n` to `Br_{n-1}`.
#[derive(Clone, Debug, Serialize)]
pub struct BranchingReport {
    pub n: usize,
    pub lambda: Partition,
    pub dim: u128,
    /// `(μ, multiplicity)` found by solving for characters.
    pub constituents: Vec<(Partition, Rational)>,
    pub expected: Vec<Partition>,
    pub ok: bool,
}

/// Constituents predicted by the branching rule: `λ` with one box removed or added.
pub fn branching_rule(n: usize, lambda: &Partition) -> Vec<Partition> {
    let mut out: Vec<Partition> = lambda.remove_box();
    if lambda.size() < n - 1 {
        out.extend(lambda.add_box());
    }
    out.sort();
    out
}

/// Restricts `ρ_λ` to `Br_{n-1}(m0)` and decomposes it by characters.
pub fn verify_branching(n: usize, lambda: &Partition, m0: &Rational) -> Result<BranchingReport> {
    if n < 2 {
        return Err(Error::Domain("restriction needs n >= 2".into()));
    }
    let rep = CellRep::new(n, lambda.clone(), m0.clone())?;
    let small = irreducible_labels(n - 1);
    let small_reps: Vec<CellRep<Rational>> =
        small.iter().map(|mu| CellRep::new(n - 1, mu.clone(), m0.clone())).collect::<Result<_>>()?;
    let k = small.len();
    let mut ech = SparseEchelon::new(k + 1);
    for d in enumerate(n - 1)? {
        let mut pairs: Vec<(usize, usize)> = d.pairs().iter().map(|&(a, b)| (lift(n, a), lift(n, b))).collect();
        pairs.push((n - 1, 2 * n - 1));
        let big = BrauerDiagram::from_pairs(n, &pairs)?;
        let mut row: Vec<Rational> = small_reps.iter().map(|r| r.diagram_matrix(&d).trace()).collect();
        row.push(rep.diagram_matrix(&big).trace().neg());
        ech.insert(row);
    }
    let sols = ech.kernel_basis();
    if sols.len() != 1 || sols[0][k].is_zero() {
        return Err(Error::Singular(format!("characters of Br_{} are dependent at m = {m0}", n - 1)));
    }
    let scale = sols[0][k].inv().expect("nonzero");
    let constituents: Vec<(Partition, Rational)> = small
        .iter()
        .cloned()
        .zip(sols[0][..k].iter().map(|x| x * &scale))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let expected = branching_rule(n, lambda);
    let mut found: Vec<Partition> = constituents.iter().map(|(p, _)| p.clone()).collect();
    found.sort();
    let dim = cell_dimension(n, lambda)?;
    let dim_sum: u128 = expected.iter().map(|mu| cell_dimension(n - 1, mu).unwrap_or(0)).sum();
    let ok = found == expected && constituents.iter().all(|(_, c)| c.is_one()) && dim_sum == dim;
    Ok(BranchingReport { n, lambda: lambda.clone(), dim, constituents, expected, ok })
}

/// Endpoint of `Br_{n-1}` mapped into `Br_n` (bottom indices shift by one).
fn lift(n: usize, e: usize) -> usize {
    if e < n - 1 {
        e
    } else {
        e + 1
    }
}

/// Layered branching graph of `Irr_0, ..., Irr_{n_max}`.
#[derive(Clone, Debug, Serialize)]
pub struct Bratteli {
    pub layers: Vec<Vec<(Partition, u128)>>,
    /// `(layer, from index in layer-1, to index in layer)`
    pub edges: Vec<(usize, usize, usize)>,
}

pub fn bratteli(n_max: usize) -> Result<Bratteli> {
    if n_max > 8 {
        return Err(Error::Bound(format!("Bratteli diagram up to n = {n_max} exceeds bound 8")));
    }
    let mut layers = Vec::new();
    let mut edges = Vec::new();
    for n in 0..=n_max {
        let labels = irreducible_labels(n);
        let layer: Vec<(Partition, u128)> =
            labels.iter().map(|l| Ok((l.clone(), cell_dimension(n, l)?))).collect::<Result<_>>()?;
        if n > 0 {
            let prev: &Vec<(Partition, u128)> = &layers[n - 1];
            for (j, (lam, _)) in layer.iter().enumerate() {
                for mu in branching_rule(n, lam) {
                    let i = prev.iter().position(|(p, _)| *p == mu).expect("label of previous layer");
                    edges.push((n, i, j));
                }
            }
        }
        layers.push(layer);
    }
    Ok(Bratteli { layers, edges })
}

impl Bratteli {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph bratteli {\n  rankdir=TB;\n");
        for (n, layer) in self.layers.iter().enumerate() {
            let _ = write!(s, "  {{ rank=same;");
            for (j, _) in layer.iter().enumerate() {
                let _ = write!(s, " n{n}_{j};");
            }
            s.push_str(" }\n");
            for (j, (p, d)) in layer.iter().enumerate() {
                let _ = writeln!(s, "  n{n}_{j} [label=\"{p}_{n}\\n{d}\"];");
            }
        }
        for &(n, i, j) in &self.edges {
            let _ = writeln!(s, "  n{}_{i} -> n{n}_{j};", n - 1);
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::BrauerAlgebra;
    use crate::scalars::RationalFunction;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn reference_dimensions() {
        assert_eq!(cell_dimension(5, &p(&[1])).unwrap(), 15);
        assert_eq!(cell_dimension(7, &p(&[1])).unwrap(), 105);
        assert_eq!(cell_dimension(9, &p(&[1])).unwrap(), 945);
        assert_eq!(cell_dimension(5, &p(&[2, 1])).unwrap(), 20);
        assert!(cell_dimension(4, &p(&[1])).is_err());
    }

    #[test]
    fn representation_is_multiplicative_over_qm() {
        for n in 1..=3 {
            let all = enumerate(n).unwrap();
            for lam in irreducible_labels(n) {
                let rep = CellRep::new(n, lam.clone(), RationalFunction::m()).unwrap();
                let mats: Vec<_> = all.iter().map(|d| rep.diagram_matrix(d)).collect();
                for (a, ma) in all.iter().zip(&mats) {
                    for (b, mb) in all.iter().zip(&mats) {
                        let (c, loops) = a.compose(b).unwrap();
                        let expect = rep.diagram_matrix(&c).scale(&RationalFunction::m().pow(loops as u32));
                        assert_eq!(ma.mul(mb), expect, "{lam}_{n}: {a} * {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn relations_hold_up_to_five_strands() {
        for n in 2..=5 {
            for lam in irreducible_labels(n) {
                CellRep::new(n, lam, q("13/2")).unwrap().verify_relations().unwrap();
            }
        }
    }

    #[test]
    fn one_dimensional_module_on_two_strands() {
        let rep = CellRep::new(2, Partition::empty(), RationalFunction::m()).unwrap();
        assert_eq!(rep.dim(), 1);
        assert_eq!(*rep.s(0, 1).unwrap().get(0, 0), RationalFunction::one());
        assert_eq!(*rep.p(0, 1).unwrap().get(0, 0), RationalFunction::m());
    }

    #[test]
    fn element_matrix_matches_algebra_product() {
        let alg = BrauerAlgebra::new(3, q("13/2"));
        let rep = CellRep::new(3, p(&[1]), q("13/2")).unwrap();
        let t = alg.t(0, 1).unwrap();
        let tt = alg.multiply(&t, &t).unwrap();
        let mt = rep.element_matrix(&t).unwrap();
        assert_eq!(rep.element_matrix(&tt).unwrap(), mt.mul(&mt));
        assert_eq!(mt, rep.t(0, 1).unwrap());
    }

    #[test]
    fn spectrum_on_three_strands() {
        let m0 = q("13/2");
        let rep = CellRep::new(3, p(&[1]), m0.clone()).unwrap();
        assert_eq!(rep.spectrum_t().unwrap(), vec![q("-11/2"), q("-1"), q("1")]);
        let rep = CellRep::new(2, Partition::empty(), m0).unwrap();
        assert_eq!(rep.spectrum_t().unwrap(), vec![q("-11/2")]);
    }

    #[test]
    fn branching_examples() {
        let m0 = q("13/2");
        let r = verify_branching(5, &p(&[2, 1]), &m0).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.constituents.len(), 5);
        assert!(verify_branching(3, &p(&[1]), &m0).unwrap().ok);
        let r = verify_branching(2, &Partition::empty(), &m0).unwrap();
        assert!(r.ok);
        assert_eq!(r.expected, vec![p(&[1])]);
    }

    #[test]
    fn bratteli_layers() {
        let b = bratteli(4).unwrap();
        let sizes: Vec<usize> = b.layers.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 1, 3, 4, 8]);
        let into_1_3 = b.layers[3].iter().position(|(l, _)| *l == p(&[1])).unwrap();
        assert_eq!(b.edges.iter().filter(|e| e.0 == 3 && e.2 == into_1_3).count(), 3);
        assert!(b.to_dot().contains("[1]_3"));
    }

    #[test]
    fn contravariant_form_three_strands() {
        let rep = CellRep::new(3, p(&[1]), q("13/2")).unwrap();
        let g = rep.gram_cell_form().unwrap();
        assert!(g.is_symmetric());
        assert!(crate::linalg::ldlt_positive_definite(&g).unwrap().positive_definite);
    }
}
