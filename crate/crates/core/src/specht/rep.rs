use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Field, Rational, Ring};

use super::partition::{partitions, standard_tableaux, Partition, Tableau};

/// Largest `n` for which Specht matrices are built.
pub const SPECHT_BOUND: usize = 8;

/// The irreducible representation of `S_n` labelled by a partition, in
/// Young's seminormal basis (indexed by standard tableaux).
#[derive(Clone, Debug)]
pub struct SpechtRep {
    partition: Partition,
    tableaux: Vec<Tableau>,
    /// `adjacent[k][t]` lists `(t', c)` with `s_k v_t = sum c v_t'`.
    adjacent: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl SpechtRep {
    pub fn new(partition: Partition) -> Result<Self> {
        let n = partition.size();
        if n > SPECHT_BOUND {
            return Err(Error::Bound(format!("Specht matrices for n = {n} exceed bound {SPECHT_BOUND}")));
        }
        let tableaux = standard_tableaux(&partition);
        let index = |t: &Tableau| tableaux.iter().position(|x| x == t).expect("standard tableau");
        let mut adjacent = Vec::with_capacity(n.saturating_sub(1));
        for k in 0..n.saturating_sub(1) {
            let mut cols = Vec::with_capacity(tableaux.len());
            for t in &tableaux {
                let (a, b) = (t.cell(k), t.cell(k + 1));
                let col = if a.0 == b.0 {
                    vec![(index(t), Rational::one())]
                } else if a.1 == b.1 {
                    vec![(index(t), Rational::from_int(-1))]
                } else {
                    let rho = Rational::from_int(t.content(k + 1) - t.content(k));
                    let diag = rho.inv().expect("distinct contents");
                    let other = index(&t.swap(k).expect("not in the same row or column"));
                    // k+1 strictly below k: unit off-diagonal coefficient
                    let off = if b.0 > a.0 { Rational::one() } else { &Rational::one() - &(&diag * &diag) };
                    vec![(index(t), diag), (other, off)]
                };
                cols.push(col);
            }
            adjacent.push(cols);
        }
        Ok(SpechtRep { partition, tableaux, adjacent })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.size()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// `s_k v` for the adjacent transposition `(k, k+1)`, 0-based.
    pub fn apply_adjacent(&self, k: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for (t, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (u, c) in &self.adjacent[k][t] {
                out[*u].add_mul(c, x);
            }
        }
        out
    }

    /// Matrix of the adjacent transposition `(k, k+1)`.
    pub fn generator(&self, k: usize) -> Matrix<Rational> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (t, col) in self.adjacent[k].iter().enumerate() {
            for (u, c) in col {
                m.set(*u, t, c.clone());
            }
        }
        m
    }

    pub fn generators(&self) -> Vec<Matrix<Rational>> {
        (0..self.n().saturating_sub(1)).map(|k| self.generator(k)).collect()
    }

    /// `ρ(w) v` where `w[j]` is the image of `j`; `ρ(u ∘ v) = ρ(u) ρ(v)`.
    pub fn apply_permutation(&self, w: &[usize], v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for k in adjacent_factors(w) {
            out = self.apply_adjacent(k, &out);
        }
        out
    }

    pub fn permutation_matrix(&self, w: &[usize]) -> Matrix<Rational> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for t in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[t] = Rational::one();
            for (u, x) in self.apply_permutation(w, &e).into_iter().enumerate() {
                m.set(u, t, x);
            }
        }
        m
    }

    /// Matrix of the transposition `(i j)`, 0-based.
    pub fn transposition(&self, i: usize, j: usize) -> Matrix<Rational> {
        let mut w: Vec<usize> = (0..self.n()).collect();
        w.swap(i, j);
        self.permutation_matrix(&w)
    }
}

/// Adjacent indices `f_1, ..., f_k` with `w = s_{f_k} ∘ ... ∘ s_{f_1}`.
pub fn adjacent_factors(w: &[usize]) -> Vec<usize> {
    let mut cur = w.to_vec();
    let mut factors = Vec::new();
    let mut k = 0;
    while k + 1 < cur.len() {
        if cur[k] > cur[k + 1] {
            cur.swap(k, k + 1);
            factors.push(k);
            k = k.saturating_sub(1);
        } else {
            k += 1;
        }
    }
    factors
}

/// All irreducible representations of `S_n`, in the order of [`partitions`].
pub fn specht_reps(n: usize) -> Result<Vec<SpechtRep>> {
    partitions(n).into_iter().map(SpechtRep::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compose(u: &[usize], v: &[usize]) -> Vec<usize> {
        v.iter().map(|&x| u[x]).collect()
    }

    #[test]
    fn factors_reconstruct_permutation() {
        let w = vec![2, 0, 3, 1];
        let mut acc: Vec<usize> = (0..4).collect();
        for k in adjacent_factors(&w) {
            let mut s: Vec<usize> = (0..4).collect();
            s.swap(k, k + 1);
            acc = compose(&s, &acc);
        }
        assert_eq!(acc, w);
    }

    #[test]
    fn coxeter_relations() {
        for n in 2..=6 {
            for p in partitions(n) {
                let r = SpechtRep::new(p.clone()).unwrap();
                let g = r.generators();
                let id = Matrix::identity(r.dim());
                for i in 0..g.len() {
                    assert_eq!(g[i].mul(&g[i]), id, "{p} s{i}^2");
                    if i + 1 < g.len() {
                        let l = g[i].mul(&g[i + 1]).mul(&g[i]);
                        let rr = g[i + 1].mul(&g[i]).mul(&g[i + 1]);
                        assert_eq!(l, rr, "{p} braid {i}");
                    }
                    for j in i + 2..g.len() {
                        assert_eq!(g[i].mul(&g[j]), g[j].mul(&g[i]));
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_matrices_are_multiplicative() {
        let r = SpechtRep::new(Partition::new(vec![3, 2])).unwrap();
        let u = vec![1, 2, 0, 4, 3];
        let v = vec![4, 3, 2, 1, 0];
        assert_eq!(r.permutation_matrix(&compose(&u, &v)), r.permutation_matrix(&u).mul(&r.permutation_matrix(&v)));
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(SpechtRep::new(Partition::new(vec![4])).unwrap().dim(), 1);
        assert_eq!(SpechtRep::new(Partition::new(vec![4, 1])).unwrap().dim(), 4);
        assert_eq!(SpechtRep::new(Partition::new(vec![2, 1])).unwrap().dim(), 2);
        assert!(SpechtRep::new(Partition::new(vec![9])).is_err());
    }
}
