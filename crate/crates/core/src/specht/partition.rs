use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer partition with parts in weakly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        Partition { parts: (0..first).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect() }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let n = self.size();
        let conj = self.transpose();
        let mut num: u128 = (1..=n as u128).product();
        let mut den: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                den *= (len - c - 1 + conj.parts[c] - r - 1 + 1) as u128;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        num / den
    }

    /// Partitions obtained by removing one box.
    pub fn remove_box(&self) -> Vec<Partition> {
        (0..self.parts.len())
            .filter(|&r| r + 1 == self.parts.len() || self.parts[r] > self.parts[r + 1])
            .map(|r| {
                let mut p = self.parts.clone();
                p[r] -= 1;
                Partition::new(p)
            })
            .collect()
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        (0..=self.parts.len())
            .filter(|&r| r == 0 || self.parts.get(r).copied().unwrap_or(0) < self.parts[r - 1])
            .map(|r| {
                let mut p = self.parts.clone();
                if r == p.len() {
                    p.push(1);
                } else {
                    p[r] += 1;
                }
                Partition::new(p)
            })
            .collect()
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All partitions of `n`, in reverse lexicographic order (`[n]` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1`, `[3,1]`, and `[]`, `0` or `empty` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if t.is_empty() || t == "0" || t.eq_ignore_ascii_case("empty") {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition `{s}` is not weakly decreasing and positive")));
        }
        Ok(Partition { parts })
    }
}

/// Standard Young tableau stored as the (row, column) cell of each entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    cells: Vec<(usize, usize)>,
}

impl Tableau {
    /// Cell holding entry `k` (0-based entries).
    pub fn cell(&self, k: usize) -> (usize, usize) {
        self.cells[k]
    }

    /// Content `column - row` of entry `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.cells[k];
        c as i64 - r as i64
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let nrows = self.cells.iter().map(|c| c.0 + 1).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); nrows];
        for (k, &(r, _)) in self.cells.iter().enumerate() {
            rows[r].push(k + 1);
        }
        rows
    }

    /// Exchanges entries `k` and `k+1`; `None` if the result is not standard.
    pub fn swap(&self, k: usize) -> Option<Tableau> {
        let (a, b) = (self.cells[k], self.cells[k + 1]);
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut cells = self.cells.clone();
        cells.swap(k, k + 1);
        Some(Tableau { cells })
    }
}

/// Standard tableaux of shape `lambda`, ordered by the sequence of rows in
/// which `1, 2, ..., n` are placed.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn rec(lambda: &[usize], filled: &mut Vec<usize>, cells: &mut Vec<(usize, usize)>, out: &mut Vec<Tableau>) {
        if cells.len() == lambda.iter().sum::<usize>() {
            out.push(Tableau { cells: cells.clone() });
            return;
        }
        for r in 0..lambda.len() {
            let c = filled[r];
            if c < lambda[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                cells.push((r, c));
                rec(lambda, filled, cells, out);
                cells.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&lambda.parts, &mut vec![0; lambda.len()], &mut Vec::new(), &mut out);
    out
}
