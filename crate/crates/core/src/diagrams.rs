//! The Brauer diagram monoid.
//!
//! A diagram on `n` strands is a perfect matching of `2n` endpoints. Top
//! endpoint `i` (written `i+1` in text) is stored as `i`; bottom endpoint `i`
//! (written `(i+1)'`) is stored as `n + i`. The partner array is a canonical
//! representation, so derived equality and hashing are structural.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate`] unless the caller raises the bound.
pub const DEFAULT_ENUMERATION_BOUND: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<u8>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

impl BrauerDiagram {
    /// Builds a diagram from a partner array over `0..2n`.
    pub fn from_partner(partner: Vec<usize>) -> Result<Self> {
        let len = partner.len();
        if !len.is_multiple_of(2) || len > 2 * u8::MAX as usize {
            return Err(Error::Parse(format!("partner array of length {len}")));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= len || p == i || partner[p] != i {
                return Err(Error::Parse(format!("endpoint {i} is not matched consistently")));
            }
        }
        Ok(BrauerDiagram { n: len / 2, partner: partner.into_iter().map(|p| p as u8).collect() })
    }

    /// Builds a diagram from endpoint pairs over `0..2n`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || a == b {
                return Err(Error::Index(format!("pair ({a},{b}) on {n} strands")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::Parse(format!("endpoint repeated in pair ({a},{b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::Parse("not every endpoint is matched".into()));
        }
        Self::from_partner(partner)
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect();
        Self::from_partner(partner).expect("identity is a matching")
    }

    /// Permutation diagram of `w` (0-based images): bottom `j` is joined to
    /// top `w[j]`, so that `from_permutation(u∘v)` is the product `u·v`.
    pub fn from_permutation(w: &[usize]) -> Result<Self> {
        let n = w.len();
        let mut seen = vec![false; n];
        for &x in w {
            if x >= n || seen[x] {
                return Err(Error::Index(format!("{w:?} is not a permutation")));
            }
            seen[x] = true;
        }
        let pairs: Vec<(usize, usize)> = (0..n).map(|j| (w[j], n + j)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// The transposition diagram `s_ij` (0-based, `i != j`).
    pub fn s(n: usize, i: usize, j: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        let mut w: Vec<usize> = (0..n).collect();
        w.swap(i, j);
        Self::from_permutation(&w)
    }

    /// The diagram `p_ij` with horizontal arcs `{i,j}` on top and bottom.
    pub fn p(n: usize, i: usize, j: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        let mut pairs = vec![(i, j), (n + i, n + j)];
        pairs.extend((0..n).filter(|&k| k != i && k != j).map(|k| (k, n + k)));
        Self::from_pairs(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, endpoint: usize) -> usize {
        self.partner[endpoint] as usize
    }

    /// Sorted pair list `(a, b)` with `a < b`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n)
            .filter_map(|a| {
                let b = self.partner(a);
                (a < b).then_some((a, b))
            })
            .collect()
    }

    /// Number of strands joining top to bottom.
    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&i| self.partner(i) >= self.n).count()
    }

    /// Is this a permutation diagram?
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.through_strands() != self.n {
            return None;
        }
        Some((0..self.n).map(|j| self.partner(self.n + j)).collect())
    }

    /// Stacks `self` on top of `below` and removes closed loops.
    ///
    /// Returns the resulting diagram and the number of loops removed; the
    /// algebra product is `m^loops` times the diagram.
    pub fn compose(&self, below: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
        let n = self.n;
        if below.n != n {
            return Err(Error::StrandMismatch(n, below.n));
        }
        // nodes: top of self 0..n, middle n..2n, bottom of below 2n..3n
        let mut uf = UnionFind::new(3 * n);
        let upper = |e: usize| e; // self endpoints map 1:1 onto 0..2n
        let lower = |e: usize| e + n; // below's top -> middle, bottom -> 2n..3n
        for (a, b) in self.pairs() {
            uf.union(upper(a), upper(b));
        }
        for (a, b) in below.pairs() {
            uf.union(lower(a), lower(b));
        }
        let mut root_to_outer: Vec<Vec<usize>> = vec![Vec::new(); 3 * n];
        for node in (0..n).chain(2 * n..3 * n) {
            let r = uf.find(node);
            root_to_outer[r].push(node);
        }
        let mut partner = vec![0usize; 2 * n];
        for ends in root_to_outer.iter().filter(|v| !v.is_empty()) {
            debug_assert_eq!(ends.len(), 2);
            let to_endpoint = |x: usize| if x < n { x } else { x - n };
            let (a, b) = (to_endpoint(ends[0]), to_endpoint(ends[1]));
            partner[a] = b;
            partner[b] = a;
        }
        let mut loops = 0;
        let mut seen_root = vec![false; 3 * n];
        for mid in n..2 * n {
            let r = uf.find(mid);
            if root_to_outer[r].is_empty() && !seen_root[r] {
                seen_root[r] = true;
                loops += 1;
            }
        }
        Ok((Self::from_partner(partner)?, loops))
    }

    /// Upside-down reflection.
    pub fn tau(&self) -> BrauerDiagram {
        let n = self.n;
        let flip = |e: usize| if e < n { e + n } else { e - n };
        let mut partner = vec![0usize; 2 * n];
        for e in 0..2 * n {
            partner[flip(e)] = flip(self.partner(e));
        }
        Self::from_partner(partner).expect("reflection of a matching")
    }

    /// Number of cycles after joining top `i` to bottom `i` for every `i`.
    pub fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut uf = UnionFind::new(2 * n);
        for (a, b) in self.pairs() {
            uf.union(a, b);
        }
        for i in 0..n {
            uf.union(i, n + i);
        }
        (0..2 * n).filter(|&x| uf.find(x) == x).count()
    }
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i >= n || j >= n || i == j {
        return Err(Error::Index(format!("pair ({}, {}) on {n} strands", i + 1, j + 1)));
    }
    Ok(())
}

/// All `(2n-1)!!` diagrams on `n` strands, in a fixed order.
pub fn enumerate(n: usize) -> Result<Vec<BrauerDiagram>> {
    enumerate_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_bounded(n: usize, bound: usize) -> Result<Vec<BrauerDiagram>> {
    if n > bound {
        return Err(Error::Bound(format!("enumeration of n = {n} exceeds bound {bound}")));
    }
    let mut out = Vec::new();
    let mut partner = vec![usize::MAX; 2 * n];
    fn rec(partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
        let Some(a) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(BrauerDiagram::from_partner(partner.clone()).expect("complete matching"));
            return;
        };
        for b in a + 1..partner.len() {
            if partner[b] == usize::MAX {
                partner[a] = b;
                partner[b] = a;
                rec(partner, out);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
            }
        }
    }
    rec(&mut partner, &mut out);
    Ok(out)
}

/// All partial matchings of `0..n` with exactly `arcs` arcs, each as a sorted
/// list of `(a, b)` with `a < b`, ordered lexicographically.
pub fn partial_matchings(n: usize, arcs: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        start: usize,
        n: usize,
        left: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for a in start..n {
            if used[a] {
                continue;
            }
            used[a] = true;
            for b in a + 1..n {
                if !used[b] {
                    used[b] = true;
                    cur.push((a, b));
                    rec(a + 1, n, left - 1, used, cur, out);
                    cur.pop();
                    used[b] = false;
                }
            }
            used[a] = false;
        }
    }
    let mut out = Vec::new();
    if 2 * arcs <= n {
        rec(0, n, arcs, &mut vec![false; n], &mut Vec::new(), &mut out);
    }
    out
}

fn fmt_endpoint(n: usize, e: usize) -> String {
    if e < n {
        format!("{}", e + 1)
    } else {
        format!("{}'", e - n + 1)
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            write!(f, "({},{})", fmt_endpoint(self.n, a), fmt_endpoint(self.n, b))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    /// Parses `(1,2')(2,1')(3,3')`; `n` is the largest label that occurs.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("diagram `{s}`: {m}"));
        let mut raw: Vec<((usize, bool), (usize, bool))> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(|| bad("missing `)`"))?;
            let inner = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let inner = &inner[..inner_end - 1];
            let (x, y) = inner.split_once(',').ok_or_else(|| bad("expected `a,b`"))?;
            let ep = |t: &str| -> Result<(usize, bool)> {
                let t = t.trim();
                let (num, bottom) = match t.strip_suffix('\'') {
                    Some(u) => (u, true),
                    None => (t, false),
                };
                let k: usize = num.parse().map_err(|_| bad("bad endpoint label"))?;
                if k == 0 {
                    return Err(bad("labels start at 1"));
                }
                Ok((k - 1, bottom))
            };
            raw.push((ep(x)?, ep(y)?));
            rest = rest[inner_end + 1..].trim_start();
        }
        let n = raw.len();
        let idx = |(k, bottom): (usize, bool)| if bottom { n + k } else { k };
        if raw.iter().any(|&((a, _), (b, _))| a >= n || b >= n) {
            return Err(bad("label exceeds number of strands"));
        }
        let pairs: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (idx(a), idx(b))).collect();
        Self::from_pairs(n, &pairs)
    }
}
