//! Dense matrices over exact rings and the echelon machinery shared by the
//! Lie closure, intertwiner and kernel computations.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{Field, Rational, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data: out }
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.rows.min(self.cols) {
            t.add_assign(self.get(i, i));
        }
        t
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    /// `[self, rhs] = self*rhs - rhs*self`.
    pub fn bracket(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    s.add_mul(a, b);
                }
                s
            })
            .collect()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[Matrix<T>]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| *self.get(i, j) == self.get(j, i).neg()))
    }
}

impl<F: Field> Matrix<F> {
    pub fn rank(&self) -> usize {
        let mut ech = SparseEchelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.rank()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut ech = SparseEchelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.kernel_basis()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let p = a.get(col, col).inv()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.row_axpy(r, col, &f);
                    inv.row_axpy(r, col, &f);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &F) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(c);
            self.set(r, j, v);
        }
    }

    /// row[r] -= f * row[src]
    fn row_axpy(&mut self, r: usize, src: usize, f: &F) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if !s.is_zero() {
                let t = f.mul(s);
                self.entry_mut(r, j).sub_assign(&t);
            }
        }
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

impl<T: Ring> Serialize for Matrix<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        rows.serialize(s)
    }
}

/// Incrementally maintained reduced row echelon form with sparse rows.
///
/// Every stored row has a unit pivot and zeros in all other pivot columns, so
/// reducing a candidate costs one sparse axpy per pivot it touches.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    dim: usize,
    rows: Vec<Vec<(usize, F)>>,
    pivots: Vec<usize>,
    row_of_col: Vec<Option<usize>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(dim: usize) -> Self {
        SparseEchelon { dim, rows: Vec::new(), pivots: Vec::new(), row_of_col: vec![None; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place modulo the current row space.
    pub fn reduce(&self, v: &mut [F]) {
        assert_eq!(v.len(), self.dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, a) in row {
                let t = c.mul(a);
                v[*j].sub_assign(&t);
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Ring::is_zero)
    }

    /// Adds `v` to the row space; returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        self.reduce(&mut v);
        self.insert_reduced(v)
    }

    /// Like [`insert`](Self::insert) for a vector already reduced against
    /// this echelon form.
    pub fn insert_reduced(&mut self, v: Vec<F>) -> bool {
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        let new_row: Vec<(usize, F)> = v
            .into_iter()
            .enumerate()
            .skip(p)
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.mul(&inv)))
            .collect();
        for row in &mut self.rows {
            if let Ok(k) = row.binary_search_by_key(&p, |(j, _)| *j) {
                let c = row[k].1.clone();
                *row = sparse_axpy(row, &new_row, &c);
            }
        }
        self.row_of_col[p] = Some(self.rows.len());
        self.rows.push(new_row);
        self.pivots.push(p);
        true
    }

    /// Basis of the solution space of `row . x = 0` for all stored rows.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut out = Vec::new();
        for free in 0..self.dim {
            if self.row_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![F::zero(); self.dim];
            x[free] = F::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if let Ok(k) = row.binary_search_by_key(&free, |(j, _)| *j) {
                    x[p] = row[k].1.neg();
                }
            }
            out.push(x);
        }
        out
    }

    pub fn rows_dense(&self) -> Vec<Vec<F>> {
        self.rows
            .iter()
            .map(|r| {
                let mut v = vec![F::zero(); self.dim];
                for (j, a) in r {
                    v[*j] = a.clone();
                }
                v
            })
            .collect()
    }
}

/// `a - c * b` for sparse sorted rows.
fn sparse_axpy<F: Field>(a: &[(usize, F)], b: &[(usize, F)], c: &F) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|x| x.0).unwrap_or(usize::MAX);
        let bj = b.get(j).map(|x| x.0).unwrap_or(usize::MAX);
        if ai < bj {
            out.push(a[i].clone());
            i += 1;
        } else if bj < ai {
            out.push((bj, b[j].1.mul(c).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&b[j].1.mul(c));
            if !v.is_zero() {
                out.push((ai, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Basis of `{X : A X = X B for every (A, B)}`, with `A` of size `p x p` and
/// `B` of size `q x q`, so that each `X` is `p x q`.
pub fn intertwiners<F: Field>(pairs: &[(Matrix<F>, Matrix<F>)]) -> Result<Vec<Matrix<F>>> {
    let Some((a0, b0)) = pairs.first() else {
        return Err(Error::Dimension("no constraints given".into()));
    };
    let (p, q) = (a0.rows(), b0.rows());
    if pairs.iter().any(|(a, b)| a.rows() != p || !a.is_square() || b.rows() != q || !b.is_square())
    {
        return Err(Error::Dimension("inconsistent intertwiner constraint shapes".into()));
    }
    let nvars = p * q;
    let mut ech = SparseEchelon::new(nvars);
    for (a, b) in pairs {
        // (A X - X B)_{ij} = sum_k A_ik X_kj - sum_k X_ik B_kj
        for i in 0..p {
            for j in 0..q {
                let mut row = vec![F::zero(); nvars];
                for k in 0..p {
                    let c = a.get(i, k);
                    if !c.is_zero() {
                        row[k * q + j].add_assign(c);
                    }
                }
                for k in 0..q {
                    let c = b.get(k, j);
                    if !c.is_zero() {
                        row[i * q + k].sub_assign(c);
                    }
                }
                ech.insert(row);
                if ech.rank() == nvars {
                    return Ok(Vec::new());
                }
            }
        }
    }
    Ok(ech
        .kernel_basis()
        .into_iter()
        .map(|x| Matrix::from_vec(p, q, x).expect("p*q entries"))
        .collect())
}

/// Basis of the linear relations `sum_k c_k v_k = 0` among the given vectors.
pub fn column_relations<F: Field>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    let k = vectors.len();
    let Some(len) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut ech = SparseEchelon::new(k);
    for coord in 0..len {
        let row: Vec<F> = vectors.iter().map(|v| v[coord].clone()).collect();
        if row.iter().any(|x| !x.is_zero()) {
            ech.insert(row);
            if ech.rank() == k {
                break;
            }
        }
    }
    ech.kernel_basis()
}

/// Outcome of an exact `L D L^T` factorization without pivoting.
#[derive(Clone, Debug, Serialize)]
pub struct LdltReport {
    pub dim: usize,
    pub positive_definite: bool,
    /// Pivots computed before stopping (all of them when positive definite).
    pub pivots: Vec<Rational>,
    /// First pivot that is not strictly positive.
    pub failing_pivot_index: Option<usize>,
    /// `x` with `x^T A x = pivots[failing_pivot_index] <= 0`.
    pub witness: Option<Vec<Rational>>,
}

/// Decides positive definiteness of a symmetric rational matrix by exact
/// elimination; every leading principal minor is the product of the pivots so
/// far, so stopping at the first non-positive pivot is Sylvester's criterion.
pub fn ldlt_positive_definite(a: &Matrix<Rational>) -> Result<LdltReport> {
    if !a.is_symmetric() {
        return Err(Error::Domain("LDL^T needs a symmetric matrix".into()));
    }
    let n = a.rows();
    // lower triangle, row-major per row
    let mut work: Vec<Vec<Rational>> = (0..n).map(|i| a.row(i)[..=i].to_vec()).collect();
    let mut mult: Vec<Vec<Rational>> = (0..n).map(|i| vec![Rational::zero(); i]).collect();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let piv = work[k][k].clone();
        pivots.push(piv.clone());
        if !piv.is_positive() {
            let witness = ldlt_witness(&mult, k);
            return Ok(LdltReport {
                dim: n,
                positive_definite: false,
                pivots,
                failing_pivot_index: Some(k),
                witness: Some(witness),
            });
        }
        let pinv = piv.inv().expect("positive pivot");
        let col: Vec<Rational> = (k + 1..n).map(|i| work[i][k].clone()).collect();
        let (_, tail) = work.split_at_mut(k + 1);
        let (_, mtail) = mult.split_at_mut(k + 1);
        tail.par_iter_mut().zip(mtail.par_iter_mut()).enumerate().for_each(|(off, (row, mrow))| {
            let lik = &col[off] * &pinv;
            if !lik.is_zero() {
                for j in k + 1..=k + 1 + off {
                    let t = &lik * &col[j - k - 1];
                    row[j].sub_assign(&t);
                }
            }
            mrow[k] = lik;
        });
    }
    Ok(LdltReport { dim: n, positive_definite: true, pivots, failing_pivot_index: None, witness: None })
}

/// Solves `L^T x = e_k` restricted to the leading `k+1` coordinates.
fn ldlt_witness(mult: &[Vec<Rational>], k: usize) -> Vec<Rational> {
    let n = mult.len();
    let mut x = vec![Rational::zero(); n];
    x[k] = Rational::one();
    for i in (0..k).rev() {
        let mut s = Rational::zero();
        for j in i + 1..=k {
            s.add_mul(&mult[j][i], &x[j]);
        }
        x[i] = -s;
    }
    x
}

/// `x^T A y`.
pub fn bilinear<F: Field>(a: &Matrix<F>, x: &[F], y: &[F]) -> F {
    let ay = a.mul_vec(y);
    let mut s = F::zero();
    for (u, v) in x.iter().zip(&ay) {
        s.add_mul(u, v);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Ring::is_zero));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn echelon_membership() {
        let mut e = SparseEchelon::new(3);
        assert!(e.insert(vec![q("1"), q("1"), q("0")]));
        assert!(e.insert(vec![q("0"), q("1"), q("1")]));
        assert!(!e.insert(vec![q("1"), q("2"), q("1")]));
        assert!(e.contains(&[q("2"), q("1"), q("-1")]));
        assert!(!e.contains(&[q("0"), q("0"), q("1")]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn ldlt_detects_indefinite_with_witness() {
        let a = mat(&[&[2, 3], &[3, 4]]);
        let r = ldlt_positive_definite(&a).unwrap();
        assert!(!r.positive_definite);
        assert_eq!(r.failing_pivot_index, Some(1));
        let w = r.witness.unwrap();
        let val = bilinear(&a, &w, &w);
        assert_eq!(val, r.pivots[1]);
        assert!(!val.is_positive());
        let b = mat(&[&[2, 1], &[1, 2]]);
        assert!(ldlt_positive_definite(&b).unwrap().positive_definite);
    }

    #[test]
    fn intertwiners_of_scalar_and_swap() {
        let swap = mat(&[&[0, 1], &[1, 0]]);
        let xs = intertwiners(&[(swap.clone(), swap.clone())]).unwrap();
        // commutant of a reflection in gl2 is 2-dimensional
        assert_eq!(xs.len(), 2);
        for x in &xs {
            assert_eq!(swap.mul(x), x.mul(&swap));
        }
    }
}
