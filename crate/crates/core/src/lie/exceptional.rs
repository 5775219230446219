//! Values of `m` where the eigenvalue bookkeeping of `t_12` degenerates.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::scalars::{Rational, Ring};

/// `c + k m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Affine {
    pub constant: Rational,
    pub slope: Rational,
}

impl Affine {
    pub fn new(constant: i64, slope: i64) -> Self {
        Affine { constant: Rational::from_int(constant), slope: Rational::from_int(slope) }
    }

    pub fn add(&self, o: &Affine) -> Affine {
        Affine { constant: &self.constant + &o.constant, slope: &self.slope + &o.slope }
    }

    pub fn sub(&self, o: &Affine) -> Affine {
        Affine { constant: &self.constant - &o.constant, slope: &self.slope - &o.slope }
    }

    pub fn eval(&self, m: &Rational) -> Rational {
        &self.constant + &(&self.slope * m)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.slope.is_zero()
    }

    /// The single `m` where `self` vanishes, if the slope is nonzero.
    pub fn root(&self) -> Option<Rational> {
        if self.slope.is_zero() {
            None
        } else {
            Some(-&(&self.constant / &self.slope))
        }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.constant.is_zero(), self.slope.is_zero()) {
            (_, true) => write!(f, "{}", self.constant),
            (true, false) => write!(f, "{}m", self.slope),
            (false, false) => write!(f, "{} + {}m", self.constant, self.slope),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalSets {
    /// Where two of the nonzero differences `x - y` coincide.
    pub s: BTreeSet<Rational>,
    /// Where two entries of the upper triangle of the addition table coincide.
    pub s_star: BTreeSet<Rational>,
}

fn collisions(values: &[Affine]) -> BTreeSet<Rational> {
    let mut out = BTreeSet::new();
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            if let Some(r) = a.sub(b).root() {
                out.insert(r);
            }
        }
    }
    out
}

/// Both sets from explicit lists of differences and of sums.
pub fn exceptional_sets_from_tables(differences: &[Affine], sums: &[Affine]) -> ExceptionalSets {
    ExceptionalSets { s: collisions(differences), s_star: collisions(sums) }
}

/// `S` and `S*` for a spectrum `X` given as affine functions of `m`.
pub fn exceptional_sets(x: &[Affine]) -> ExceptionalSets {
    let mut differences = Vec::new();
    for (i, a) in x.iter().enumerate() {
        for (j, b) in x.iter().enumerate() {
            if i != j {
                let d = a.sub(b);
                if !d.is_zero() {
                    differences.push(d);
                }
            }
        }
    }
    let mut sums = Vec::new();
    for (i, a) in x.iter().enumerate() {
        for b in &x[i..] {
            sums.push(a.add(b));
        }
    }
    exceptional_sets_from_tables(&differences, &sums)
}

/// Upper triangle of the addition table of `{1, -1, m-1}` with the corner
/// entry typeset as `2(m-2)` instead of `(m-1) + (m-1) = 2m-2`.
pub fn tabulated_sum_table() -> Vec<Affine> {
    vec![Affine::new(2, 0), Affine::new(0, 0), Affine::new(0, 1), Affine::new(-2, 0), Affine::new(-2, 1), Affine::new(-4, 2)]
}
