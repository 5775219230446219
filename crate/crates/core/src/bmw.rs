//! The Birman–Wenzl–Murakami algebra from its presentation, its Hecke
//! quotient, and the monodromy of the infinitesimal braids as truncated
//! power series.
//!
//! Algebras are built by vector enumeration of the right regular module:
//! basis vectors are images of the identity under words in the generators,
//! every relator is imposed on every basis vector, and each resulting linear
//! dependency eliminates the newest vector involved.

use std::collections::{BTreeMap, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cells::{irreducible_labels, is_irr_prime, CellRep};
use crate::diagrams::BrauerDiagram;
use crate::error::{Error, Result};
use crate::linalg::{ldlt_positive_definite, Matrix};
use crate::scalars::{series_exp, Field, Rational, Ring, TruncatedSeries};
use crate::specht::Partition;

/// Noncommutative polynomial in the generators: word to coefficient.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WordPoly(BTreeMap<Vec<usize>, Rational>);

impl WordPoly {
    pub fn scalar(c: Rational) -> Self {
        let mut p = WordPoly::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn generator(g: usize) -> Self {
        let mut p = WordPoly::default();
        p.add_term(vec![g], Rational::one());
        p
    }

    fn add_term(&mut self, w: Vec<usize>, c: Rational) {
        let slot = self.0.entry(w).or_insert_with(Rational::zero);
        slot.add_assign(&c);
        if slot.is_zero() {
            self.0.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.0.iter()
    }

    pub fn add(&self, o: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        for (w, c) in &o.0 {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> WordPoly {
        let mut out = WordPoly::default();
        for (w, x) in &self.0 {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, o: &WordPoly) -> WordPoly {
        self.add(&o.scale(&-&Rational::one()))
    }

    pub fn mul(&self, o: &WordPoly) -> WordPoly {
        let mut out = WordPoly::default();
        for (u, a) in &self.0 {
            for (v, b) in &o.0 {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }
}

/// Generators and relators of a finitely presented algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<WordPoly>,
}

/// `(x - r_1)(x - r_2)...` expanded, lowest degree first.
fn monic_with_roots(roots: &[Rational]) -> Vec<Rational> {
    let mut c = vec![Rational::one()];
    for r in roots {
        let mut next = vec![Rational::zero(); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k + 1].add_assign(a);
            next[k].sub_assign(&(a * r));
        }
        c = next;
    }
    c
}

fn poly_in(g: usize, coeffs: &[Rational]) -> WordPoly {
    let mut p = WordPoly::default();
    for (k, c) in coeffs.iter().enumerate() {
        p.add_term(vec![g; k], c.clone());
    }
    p
}

/// `σ^{-1}` as a polynomial in `σ`, read off from a monic annihilating
/// polynomial with nonzero constant term.
fn inverse_poly(g: usize, annihilator: &[Rational]) -> Result<WordPoly> {
    let c0 = &annihilator[0];
    if c0.is_zero() {
        return Err(Error::Degenerate("annihilating polynomial has a zero root".into()));
    }
    let scale = -&c0.inv().expect("nonzero");
    Ok(poly_in(g, &annihilator[1..]).scale(&scale))
}

fn check_parameters(s: &Rational, alpha: Option<&Rational>) -> Result<Rational> {
    let one = Rational::one();
    if s.is_zero() || *s == one || *s == -&one {
        return Err(Error::Domain(format!("s = {s} must avoid 0, 1 and -1")));
    }
    if alpha.is_some_and(Ring::is_zero) {
        return Err(Error::Domain("alpha must be nonzero".into()));
    }
    Ok(s - &s.inv().expect("nonzero"))
}

fn braid_relators(n: usize, rel: &mut Vec<WordPoly>) {
    let g = WordPoly::generator;
    for i in 0..n - 1 {
        for j in i + 1..n - 1 {
            if j == i + 1 {
                rel.push(g(i).mul(&g(j)).mul(&g(i)).sub(&g(j).mul(&g(i)).mul(&g(j))));
            } else {
                rel.push(g(i).mul(&g(j)).sub(&g(j).mul(&g(i))));
            }
        }
    }
}

/// Sign of the third root of the cubic relation.
///
/// Read literally, the cubic is `(σ - s)(σ + s^{-1})(σ + α^{-1})`; together
/// with `e σ^{±1} e = α^{±1} e` this forces every `e_i` to vanish and the
/// algebra collapses onto `H_n(s)`. Kauffman's normalization pairs the same
/// sandwich relations with the root `+α^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootConvention {
    /// Third root `-α^{-1}`.
    Literal,
    /// Third root `+α^{-1}`.
    Kauffman,
}

impl RootConvention {
    pub const ALL: [RootConvention; 2] = [RootConvention::Literal, RootConvention::Kauffman];

    fn third_root(self, alpha: &Rational) -> Rational {
        let r = alpha.inv().expect("alpha nonzero");
        match self {
            RootConvention::Literal => -&r,
            RootConvention::Kauffman => r,
        }
    }
}

impl std::fmt::Display for RootConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RootConvention::Literal => "literal",
            RootConvention::Kauffman => "kauffman",
        })
    }
}

fn bmw_cubic(s: &Rational, alpha: &Rational, conv: RootConvention) -> Vec<Rational> {
    monic_with_roots(&[s.clone(), -&s.inv().expect("s nonzero"), conv.third_root(alpha)])
}

/// `e_i = 1 - (σ_i - σ_i^{-1}) / (s - s^{-1})` in the BMW presentation.
pub fn bmw_e(i: usize, s: &Rational, alpha: &Rational, conv: RootConvention) -> Result<WordPoly> {
    let gap = check_parameters(s, Some(alpha))?;
    let inv = inverse_poly(i, &bmw_cubic(s, alpha, conv))?;
    let frac = WordPoly::generator(i).sub(&inv).scale(&gap.inv().expect("s - 1/s nonzero"));
    Ok(WordPoly::one().sub(&frac))
}

/// The cubic relation, the braid relations and the relations
/// `e_j σ_i^{±1} e_j = α^{±1} e_j` for `|i - j| = 1`. Inverses are
/// eliminated through the cubic, so only `σ_1, ..., σ_{n-1}` are generators.
pub fn bmw_presentation(n: usize, s: &Rational, alpha: &Rational, conv: RootConvention) -> Result<Presentation> {
    check_parameters(s, Some(alpha))?;
    if n < 2 {
        return Err(Error::Domain("need at least two strands".into()));
    }
    let cubic = bmw_cubic(s, alpha, conv);
    let alpha_inv = alpha.inv().expect("nonzero");
    let mut relators: Vec<WordPoly> = (0..n - 1).map(|i| poly_in(i, &cubic)).collect();
    braid_relators(n, &mut relators);
    for j in 0..n - 1 {
        let e = bmw_e(j, s, alpha, conv)?;
        for i in [j.wrapping_sub(1), j + 1] {
            if i >= n - 1 {
                continue;
            }
            let sigma = WordPoly::generator(i);
            let sigma_inv = inverse_poly(i, &cubic)?;
            relators.push(e.mul(&sigma).mul(&e).sub(&e.scale(alpha)));
            relators.push(e.mul(&sigma_inv).mul(&e).sub(&e.scale(&alpha_inv)));
        }
    }
    Ok(Presentation { generators: n - 1, relators })
}

/// `(σ - s)(σ + s^{-1}) = 0` with the braid relations.
pub fn hecke_presentation(n: usize, s: &Rational) -> Result<Presentation> {
    check_parameters(s, None)?;
    if n < 2 {
        return Err(Error::Domain("need at least two strands".into()));
    }
    let quad = monic_with_roots(&[s.clone(), -&s.inv().expect("nonzero")]);
    let mut relators: Vec<WordPoly> = (0..n - 1).map(|i| poly_in(i, &quad)).collect();
    braid_relators(n, &mut relators);
    Ok(Presentation { generators: n - 1, relators })
}

type SVec = Vec<(usize, Rational)>;

fn axpy(acc: &mut BTreeMap<usize, Rational>, c: &Rational, v: &[(usize, Rational)]) {
    for (i, x) in v {
        let slot = acc.entry(*i).or_insert_with(Rational::zero);
        slot.add_mul(c, x);
        if slot.is_zero() {
            acc.remove(i);
        }
    }
}

enum Pending {
    Zero(SVec),
    /// `v * g` must equal `image`.
    Deduce(SVec, usize, SVec),
}

type Enumerated = (Vec<Vec<usize>>, Vec<Matrix<Rational>>);

struct Enumerator<'a> {
    pres: &'a Presentation,
    table: Vec<Vec<Option<SVec>>>,
    replaced: Vec<Option<SVec>>,
    words: Vec<Vec<usize>>,
    queue: VecDeque<Pending>,
    cap: usize,
}

impl<'a> Enumerator<'a> {
    fn new(pres: &'a Presentation, cap: usize) -> Self {
        Enumerator {
            pres,
            table: vec![vec![None; pres.generators]],
            replaced: vec![None],
            words: vec![Vec::new()],
            queue: VecDeque::new(),
            cap,
        }
    }

    fn alive(&self, i: usize) -> bool {
        self.replaced[i].is_none()
    }

    fn normalize(&mut self, v: &[(usize, Rational)]) -> SVec {
        let mut acc = BTreeMap::new();
        let mut stack: Vec<(usize, Rational)> = v.to_vec();
        while let Some((i, c)) = stack.pop() {
            match &self.replaced[i] {
                None => axpy(&mut acc, &c, &[(i, Rational::one())]),
                Some(r) => stack.extend(r.iter().map(|(j, x)| (*j, x * &c))),
            }
        }
        acc.into_iter().collect()
    }

    fn image(&mut self, i: usize, g: usize) -> Result<SVec> {
        if let Some(v) = &self.table[i][g] {
            let v = v.clone();
            let n = self.normalize(&v);
            self.table[i][g] = Some(n.clone());
            return Ok(n);
        }
        let j = self.words.len();
        if j >= self.cap {
            return Err(Error::StepCap(self.cap));
        }
        let mut w = self.words[i].clone();
        w.push(g);
        self.words.push(w);
        self.table.push(vec![None; self.pres.generators]);
        self.replaced.push(None);
        let v = vec![(j, Rational::one())];
        self.table[i][g] = Some(v.clone());
        Ok(v)
    }

    fn apply(&mut self, v: &[(usize, Rational)], g: usize) -> Result<SVec> {
        let v = self.normalize(v);
        let mut acc = BTreeMap::new();
        for (i, c) in &v {
            let img = self.image(*i, g)?;
            axpy(&mut acc, c, &img);
        }
        let out: SVec = acc.into_iter().collect();
        Ok(self.normalize(&out))
    }

    fn apply_poly(&mut self, v: &[(usize, Rational)], p: &WordPoly) -> Result<SVec> {
        let mut acc = BTreeMap::new();
        for (w, c) in p.terms() {
            let mut x = v.to_vec();
            for &g in w {
                x = self.apply(&x, g)?;
            }
            let x = self.normalize(&x);
            axpy(&mut acc, c, &x);
        }
        let out: SVec = acc.into_iter().collect();
        Ok(self.normalize(&out))
    }

    fn drain(&mut self) -> Result<()> {
        while let Some(job) = self.queue.pop_front() {
            let z = match job {
                Pending::Zero(z) => self.normalize(&z),
                Pending::Deduce(v, g, img) => {
                    let lhs = self.apply(&v, g)?;
                    let rhs = self.normalize(&img);
                    let mut acc: BTreeMap<usize, Rational> = lhs.into_iter().collect();
                    axpy(&mut acc, &-&Rational::one(), &rhs);
                    acc.into_iter().collect()
                }
            };
            let Some((p, c)) = z.last().cloned() else { continue };
            let inv = -&c.inv().expect("nonzero pivot");
            let replacement: SVec = z[..z.len() - 1].iter().map(|(i, x)| (*i, x * &inv)).collect();
            self.replaced[p] = Some(replacement.clone());
            for g in 0..self.pres.generators {
                if let Some(img) = self.table[p][g].take() {
                    self.queue.push_back(Pending::Deduce(replacement.clone(), g, img));
                }
            }
        }
        Ok(())
    }

    /// Returns the surviving basis words and the generator action on them.
    fn run(mut self) -> Result<Enumerated> {
        let mut i = 0;
        while i < self.words.len() {
            if self.alive(i) {
                for g in 0..self.pres.generators {
                    self.image(i, g)?;
                }
                for r in 0..self.pres.relators.len() {
                    if !self.alive(i) {
                        break;
                    }
                    let rel = self.pres.relators[r].clone();
                    let z = self.apply_poly(&[(i, Rational::one())], &rel)?;
                    self.queue.push_back(Pending::Zero(z));
                    self.drain()?;
                }
            }
            i += 1;
        }
        let live: Vec<usize> = (0..self.words.len()).filter(|&i| self.alive(i)).collect();
        let index: BTreeMap<usize, usize> = live.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let d = live.len();
        let mut actions = vec![Matrix::zeros(d, d); self.pres.generators];
        for (k, &i) in live.iter().enumerate() {
            for (g, action) in actions.iter_mut().enumerate() {
                for (j, c) in self.image(i, g)? {
                    action.set(index[&j], k, c);
                }
            }
        }
        let words = live.iter().map(|&i| self.words[i].clone()).collect();
        Ok((words, actions))
    }
}

/// Default cap on the number of vectors created during one enumeration.
pub const ENUMERATION_CAP: usize = 2_000_000;

/// A finite-dimensional algebra given by a basis of words and the matrices of
/// right multiplication by each generator.
#[derive(Clone, Debug, Serialize)]
pub struct EnumeratedAlgebra {
    pub n: usize,
    pub dim: usize,
    pub basis_words: Vec<Vec<usize>>,
    pub generator_matrices: Vec<Matrix<Rational>>,
}

impl EnumeratedAlgebra {
    pub fn enumerate(n: usize, pres: &Presentation) -> Result<Self> {
        let (words, actions) = Enumerator::new(pres, ENUMERATION_CAP).run()?;
        Ok(EnumeratedAlgebra { n, dim: words.len(), basis_words: words, generator_matrices: actions })
    }

    /// Coordinates of the identity.
    pub fn identity(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[0] = Rational::one();
        v
    }

    /// `x * w` for a word `w` in the generators.
    pub fn act_word(&self, x: &[Rational], w: &[usize]) -> Vec<Rational> {
        w.iter().fold(x.to_vec(), |acc, &g| self.generator_matrices[g].mul_vec(&acc))
    }

    pub fn act_poly(&self, x: &[Rational], p: &WordPoly) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (w, c) in p.terms() {
            for (o, y) in out.iter_mut().zip(self.act_word(x, w)) {
                o.add_mul(c, &y);
            }
        }
        out
    }

    pub fn element(&self, p: &WordPoly) -> Vec<Rational> {
        self.act_poly(&self.identity(), p)
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (c, w) in y.iter().zip(&self.basis_words) {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(self.act_word(x, w)) {
                o.add_mul(c, &v);
            }
        }
        out
    }

    /// Is `(xy)z = x(yz)` for `samples` random triples of basis vectors?
    pub fn check_associativity(&self, samples: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let unit = |k: usize| {
            let mut v = vec![Rational::zero(); self.dim];
            v[k] = Rational::one();
            v
        };
        (0..samples).all(|_| {
            let (a, b, c) = (unit(rng.gen_range(0..self.dim)), unit(rng.gen_range(0..self.dim)), unit(rng.gen_range(0..self.dim)));
            self.multiply(&self.multiply(&a, &b), &c) == self.multiply(&a, &self.multiply(&b, &c))
        })
    }
}

/// `(2n-1)!!`.
pub fn expected_bmw_dimension(n: usize) -> usize {
    (1..2 * n).step_by(2).product()
}

/// The enumerated BMW algebra with its dimension certificate.
#[derive(Clone, Debug, Serialize)]
pub struct BmwAlgebra {
    pub s: Rational,
    pub alpha: Rational,
    pub convention: RootConvention,
    pub algebra: EnumeratedAlgebra,
    /// `δ` with `e_1^2 = δ e_1`, when `e_1^2` is a multiple of `e_1`.
    pub delta: Option<Rational>,
}

impl BmwAlgebra {
    pub fn e(&self, i: usize) -> Result<Vec<Rational>> {
        Ok(self.algebra.element(&bmw_e(i, &self.s, &self.alpha, self.convention)?))
    }

    pub fn presentation(&self) -> Result<Presentation> {
        bmw_presentation(self.algebra.n, &self.s, &self.alpha, self.convention)
    }
}

fn proportional(x: &[Rational], y: &[Rational]) -> Option<Rational> {
    let k = y.iter().position(|c| !c.is_zero())?;
    let ratio = x[k].div(&y[k])?;
    x.iter().zip(y).all(|(a, b)| *a == &ratio * b).then_some(ratio)
}

/// Dimension of the algebra presented by `conv`, without any certificate.
pub fn enumerate_bmw_dimension(n: usize, s: &Rational, alpha: &Rational, conv: RootConvention) -> Result<usize> {
    if n > 4 {
        return Err(Error::Bound(format!("BMW enumeration runs for n <= 4, got {n}")));
    }
    Ok(EnumeratedAlgebra::enumerate(n, &bmw_presentation(n, s, alpha, conv)?)?.dim)
}

/// Enumerates `BMW_n(s, α)` under `conv`; fails with [`Error::Degenerate`]
/// when the dimension is not `(2n-1)!!`.
pub fn build_bmw_with(n: usize, s: &Rational, alpha: &Rational, conv: RootConvention) -> Result<BmwAlgebra> {
    if n > 4 {
        return Err(Error::Bound(format!("BMW enumeration runs for n <= 4, got {n}")));
    }
    let algebra = EnumeratedAlgebra::enumerate(n, &bmw_presentation(n, s, alpha, conv)?)?;
    let expected = expected_bmw_dimension(n);
    if algebra.dim != expected {
        return Err(Error::Degenerate(format!(
            "BMW_{n}({s}, {alpha}) with {conv} cubic enumerates to dimension {} instead of {expected}",
            algebra.dim
        )));
    }
    let mut out = BmwAlgebra { s: s.clone(), alpha: alpha.clone(), convention: conv, algebra, delta: None };
    let e = out.e(0)?;
    out.delta = proportional(&out.algebra.multiply(&e, &e), &e);
    Ok(out)
}

/// Enumerates `BMW_n(s, α)`, trying the literal cubic first and falling back
/// to the other sign of the third root. The convention that produced the
/// certified dimension is stored in the result.
pub fn build_bmw(n: usize, s: &Rational, alpha: &Rational) -> Result<BmwAlgebra> {
    let mut last = None;
    for conv in RootConvention::ALL {
        match build_bmw_with(n, s, alpha, conv) {
            Err(e @ Error::Degenerate(_)) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one convention"))
}

/// Enumerates the Hecke algebra `H_n(s)`.
pub fn hecke_quotient(n: usize, s: &Rational) -> Result<EnumeratedAlgebra> {
    if n > 5 {
        return Err(Error::Bound(format!("Hecke enumeration runs for n <= 5, got {n}")));
    }
    let algebra = EnumeratedAlgebra::enumerate(n, &hecke_presentation(n, s)?)?;
    let expected: usize = (1..=n).product();
    if algebra.dim != expected {
        return Err(Error::Degenerate(format!("H_{n}({s}) enumerates to dimension {} instead of {expected}", algebra.dim)));
    }
    Ok(algebra)
}

/// Checks that `σ_i ↦ σ_i` defines an algebra map `BMW_n(s, α) -> H_n(s)`:
/// every BMW relator vanishes in the Hecke algebra, every `e_i` maps to 0,
/// and products of sampled basis pairs are respected.
pub fn verify_hecke_surjection(bmw: &BmwAlgebra, hecke: &EnumeratedAlgebra, samples: usize, seed: u64) -> Result<bool> {
    let n = bmw.algebra.n;
    let pres = bmw.presentation()?;
    let zero = vec![Rational::zero(); hecke.dim];
    if pres.relators.iter().any(|r| hecke.element(r) != zero) {
        return Ok(false);
    }
    for i in 0..n - 1 {
        if hecke.element(&bmw_e(i, &bmw.s, &bmw.alpha, bmw.convention)?) != zero {
            return Ok(false);
        }
    }
    let map = |x: &[Rational]| {
        let mut out = zero.clone();
        for (c, w) in x.iter().zip(&bmw.algebra.basis_words) {
            if !c.is_zero() {
                for (o, v) in out.iter_mut().zip(hecke.act_word(&hecke.identity(), w)) {
                    o.add_mul(c, &v);
                }
            }
        }
        out
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices: Vec<usize> = (0..bmw.algebra.dim).collect();
    for _ in 0..samples {
        let (a, b) = (*indices.choose(&mut rng).expect("nonempty"), *indices.choose(&mut rng).expect("nonempty"));
        let unit = |k: usize| {
            let mut v = vec![Rational::zero(); bmw.algebra.dim];
            v[k] = Rational::one();
            v
        };
        let prod = bmw.algebra.multiply(&unit(a), &unit(b));
        if map(&prod) != hecke.multiply(&map(&unit(a)), &map(&unit(b))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sample specializations; the first three good ones are used.
pub const SAMPLE_S: [(i64, i64); 3] = [(2, 1), (3, 1), (5, 2)];
pub const SAMPLE_ALPHA: [(i64, i64); 3] = [(7, 1), (1, 7), (11, 3)];

/// `(s, α)` pairs from the default sampler, zipped.
pub fn default_specializations() -> Vec<(Rational, Rational)> {
    SAMPLE_S
        .iter()
        .zip(SAMPLE_ALPHA.iter())
        .map(|(&(a, b), &(c, d))| (Rational::new(a, b).expect("sample"), Rational::new(c, d).expect("sample")))
        .collect()
}

type Series = TruncatedSeries<Rational>;

fn series_matrix(m: &Matrix<Rational>, order: usize) -> Matrix<Series> {
    m.map(|x| Series::new(vec![x.clone()], order))
}

/// `exp(c h X)` modulo `h^order`.
fn matrix_exp(x: &Matrix<Rational>, c: &Rational, order: usize) -> Matrix<Series> {
    let d = x.rows();
    let mut coeffs: Vec<Matrix<Rational>> = vec![Matrix::identity(d)];
    for k in 1..order {
        let factor = c.div(&Rational::from_int(k as i64)).expect("k > 0");
        coeffs.push(coeffs[k - 1].mul(x).scale(&factor));
    }
    let mut out = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            out.set(i, j, Series::new(coeffs.iter().map(|m| m.get(i, j).clone()).collect(), order));
        }
    }
    out
}

/// A candidate eigenvalue `± exp(c h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesRoot {
    pub sign: i8,
    pub rate: Rational,
}

impl SeriesRoot {
    fn value(&self, order: usize) -> Series {
        let e = series_exp(&Series::monomial(self.rate.clone(), 1, order)).expect("zero constant term");
        if self.sign < 0 {
            e.neg()
        } else {
            e
        }
    }
}

impl std::fmt::Display for SeriesRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}exp({}h)", self.rate)
    }
}

fn annihilates(m: &Matrix<Series>, roots: &[SeriesRoot], order: usize) -> bool {
    let d = m.rows();
    let mut acc = Matrix::identity(d);
    for r in roots {
        let shifted = m.sub(&Matrix::scalar(d, &r.value(order)));
        acc = acc.mul(&shifted);
    }
    acc.as_slice().iter().all(Ring::is_zero)
}

#[derive(Clone, Debug, Serialize)]
pub struct CubicReport {
    pub n: usize,
    pub lambda: Partition,
    pub m: Rational,
    pub order: usize,
    /// `ρ(s_12) ρ(t_12) = ρ(t_12) ρ(s_12)`.
    pub commuting: bool,
    /// `(M - e^h)(M + e^{-h}) = 0`.
    pub quadratic: bool,
    /// Third roots `r` for which `(M - e^h)(M + e^{-h})(M - r) = 0`.
    pub vanishing_third_roots: Vec<SeriesRoot>,
    /// `-α^{-1}` for `α = e^{(1-m)h}`, as written in the cubic relation.
    pub presented_third_root: SeriesRoot,
    pub ok: bool,
}

/// The four candidate third roots `±exp(±(1-m)h)`.
pub fn candidate_third_roots(m0: &Rational) -> Vec<SeriesRoot> {
    let rate = &Rational::one() - m0;
    vec![
        SeriesRoot { sign: 1, rate: rate.clone() },
        SeriesRoot { sign: -1, rate: rate.clone() },
        SeriesRoot { sign: 1, rate: -&rate },
        SeriesRoot { sign: -1, rate: -&rate },
    ]
}

/// Builds `M = ρ(s_12) exp(h ρ(t_12))` and records which cubic with roots
/// `e^h, -e^{-h}` and one of `±e^{±(1-m)h}` kills it modulo `h^order`.
pub fn verify_cubic_monodromy(n: usize, lambda: &Partition, m0: &Rational, order: usize) -> Result<CubicReport> {
    if order < 6 {
        return Err(Error::Domain(format!("truncation order {order} below 6")));
    }
    let rep = CellRep::new(n, lambda.clone(), m0.clone())?;
    let s = rep.s(0, 1)?;
    let t = rep.t(0, 1)?;
    let commuting = s.mul(&t) == t.mul(&s);
    let m = series_matrix(&s, order).mul(&matrix_exp(&t, &Rational::one(), order));
    let base = [SeriesRoot { sign: 1, rate: Rational::one() }, SeriesRoot { sign: -1, rate: -&Rational::one() }];
    let quadratic = annihilates(&m, &base, order);
    let vanishing_third_roots: Vec<SeriesRoot> = candidate_third_roots(m0)
        .into_iter()
        .filter(|r| {
            let mut roots = base.to_vec();
            roots.push(r.clone());
            annihilates(&m, &roots, order)
        })
        .collect();
    let presented_third_root = SeriesRoot { sign: -1, rate: m0 - &Rational::one() };
    let ok = commuting
        && if is_irr_prime(n, lambda) { vanishing_third_roots.len() == 1 } else { quadratic };
    Ok(CubicReport { n, lambda: lambda.clone(), m: m0.clone(), order, commuting, quadratic, vanishing_third_roots, presented_third_root, ok })
}

/// The third root that works for every cell module of `Br_n`, if one does.
pub fn consistent_third_root(reports: &[CubicReport]) -> Option<SeriesRoot> {
    let first = reports.first()?;
    candidate_third_roots(&first.m)
        .into_iter()
        .find(|r| reports.iter().all(|rep| rep.quadratic || rep.vanishing_third_roots.contains(r)))
}

/// Runs [`verify_cubic_monodromy`] on all of `Irr_n`.
pub fn verify_cubic_all(n: usize, m0: &Rational, order: usize) -> Result<Vec<CubicReport>> {
    irreducible_labels(n).iter().map(|l| verify_cubic_monodromy(n, l, m0, order)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitarityReport {
    pub n: usize,
    pub lambda: Partition,
    pub m: Rational,
    pub dim: usize,
    pub gram_positive_definite: bool,
    /// `ρ(t_ij)^T G = G ρ(t_ij)` for every pair.
    pub t_selfadjoint: bool,
    /// `ρ(w)^T G ρ(w) = G` for every permutation.
    pub permutations_orthogonal: bool,
    /// `G^{-1} ε(M)^T G M = 1 mod h^K` for `M = ρ(s_12) exp(h ρ(t_12))`.
    pub monodromy_unitary: bool,
    pub ok: bool,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Checks the Gram-form version of the formal unitarity hypotheses on one
/// cell module.
pub fn formal_unitarity_report(n: usize, lambda: &Partition, m0: &Rational, order: usize) -> Result<UnitarityReport> {
    let rep = CellRep::new(n, lambda.clone(), m0.clone())?;
    let g = rep.gram_cell_form()?;
    let d = rep.dim();
    let gram_positive_definite = ldlt_positive_definite(&g)?.positive_definite;
    let t_selfadjoint = rep.t_all().iter().all(|t| t.transpose().mul(&g) == g.mul(t));
    let permutations_orthogonal = permutations(n).iter().all(|w| {
        let r = rep.diagram_matrix(&BrauerDiagram::from_permutation(w).expect("permutation"));
        r.transpose().mul(&g).mul(&r) == g
    });
    let monodromy_unitary = if n >= 2 {
        let s = rep.s(0, 1)?;
        let t = rep.t(0, 1)?;
        let m = series_matrix(&s, order).mul(&matrix_exp(&t, &Rational::one(), order));
        let g_inv = g.inverse().ok_or_else(|| Error::Singular("Gram form".into()))?;
        let eps_t = m.map(Series::epsilon).transpose();
        let lhs = series_matrix(&g_inv, order).mul(&eps_t).mul(&series_matrix(&g, order)).mul(&m);
        lhs == Matrix::identity(d)
    } else {
        true
    };
    let ok = gram_positive_definite && t_selfadjoint && permutations_orthogonal && monodromy_unitary;
    Ok(UnitarityReport {
        n,
        lambda: lambda.clone(),
        m: m0.clone(),
        dim: d,
        gram_positive_definite,
        t_selfadjoint,
        permutations_orthogonal,
        monodromy_unitary,
        ok,
    })
}

/// `ε(exp(h d)) exp(h d) = 1` on a one-dimensional module with `ρ(t_12) = d`.
pub fn one_dimensional_unitarity(d: &Rational, order: usize) -> bool {
    let e = series_exp(&Series::monomial(d.clone(), 1, order)).expect("zero constant term");
    e.epsilon().mul(&e) == Series::one().with_order(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b).unwrap()
    }

    #[test]
    fn cubic_expansion() {
        let c = monic_with_roots(&[q(1, 1), q(2, 1)]);
        assert_eq!(c, vec![q(2, 1), q(-3, 1), q(1, 1)]);
    }

    #[test]
    fn rank_two_and_three() {
        let b2 = build_bmw(2, &q(2, 1), &q(7, 1)).unwrap();
        assert_eq!(b2.algebra.dim, 3);
        let b3 = build_bmw(3, &q(2, 1), &q(7, 1)).unwrap();
        assert_eq!(b3.algebra.dim, 15);
        assert_eq!(b3.convention, RootConvention::Kauffman);
        assert!(b3.algebra.check_associativity(50, 1));
    }

    #[test]
    fn literal_cubic_collapses_to_hecke() {
        let d = enumerate_bmw_dimension(3, &q(2, 1), &q(7, 1), RootConvention::Literal).unwrap();
        assert_eq!(d, 6);
    }

    #[test]
    fn hecke_dimensions() {
        assert_eq!(hecke_quotient(3, &q(2, 1)).unwrap().dim, 6);
        assert_eq!(hecke_quotient(4, &q(3, 1)).unwrap().dim, 24);
    }

    #[test]
    fn cubic_on_rank_three_reflection_cell() {
        let r = verify_cubic_monodromy(3, &Partition::new(vec![1]), &q(13, 2), 8).unwrap();
        assert!(r.ok);
        assert_eq!(r.vanishing_third_roots, vec![SeriesRoot { sign: 1, rate: q(-11, 2) }]);
        let triv = verify_cubic_monodromy(3, &Partition::new(vec![3]), &q(13, 2), 8).unwrap();
        assert!(triv.quadratic);
    }

    #[test]
    fn one_dimensional_exponentials_are_unitary() {
        assert!(one_dimensional_unitarity(&q(-11, 2), 8));
    }
}
