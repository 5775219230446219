//! Parser for Brauer algebra expressions such as `p12`, `2*s13*p12 - t23` or
//! `(1,2')(2,1')(3,3')`.
//!
//! Generator indices are 1-based and written as two digits, so ranks above 9
//! need explicit diagrams.

use brauer_core::brauer::{AlgebraElement, BrauerAlgebra};
use brauer_core::diagrams::BrauerDiagram;
use brauer_core::{Error, Field, Rational, Result};

struct Parser<'a, F> {
    src: &'a [u8],
    pos: usize,
    alg: &'a BrauerAlgebra<F>,
}

impl<F: Field> Parser<'_, F> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn expr(&mut self) -> Result<AlgebraElement<F>> {
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.scale(&F::from_int(-1));
        }
        while let Some(op) = self.peek() {
            if op != b'+' && op != b'-' {
                return Err(self.err("expected + or -"));
            }
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { acc.add(&t)? } else { acc.sub(&t)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AlgebraElement<F>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.alg.multiply(&acc, &f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AlgebraElement<F>> {
        let n = self.alg.n();
        match self.peek() {
            Some(b'(') => {
                let start = self.pos;
                while self.peek() == Some(b'(') {
                    let close = self.src[self.pos..].iter().position(|&c| c == b')').ok_or_else(|| self.err("unclosed ("))?;
                    self.pos += close + 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
                let d: BrauerDiagram = text.parse()?;
                if d.n() != n {
                    return Err(Error::StrandMismatch(n, d.n()));
                }
                Ok(AlgebraElement::from_diagram(d))
            }
            Some(c @ (b's' | b'p' | b't')) => {
                let digits = self.src.get(self.pos + 1..self.pos + 3).ok_or_else(|| self.err("expected two indices"))?;
                if !digits.iter().all(|d| (b'1'..=b'9').contains(d)) {
                    return Err(self.err("expected two indices"));
                }
                let (i, j) = ((digits[0] - b'1') as usize, (digits[1] - b'1') as usize);
                self.pos += 3;
                match c {
                    b's' => self.alg.s(i, j),
                    b'p' => self.alg.p(i, j),
                    _ => self.alg.t(i, j),
                }
            }
            Some(b'i') if self.src[self.pos..].starts_with(b"id") => {
                self.pos += 2;
                Ok(self.alg.one())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == b'/') {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
                let q: Rational = text.parse()?;
                Ok(self.alg.one().scale(&F::from_rational(&q)))
            }
            _ => Err(self.err("expected a generator, a diagram or a number")),
        }
    }
}

/// Parses `src` as an element of `alg`.
pub fn parse_element<F: Field>(alg: &BrauerAlgebra<F>, src: &str) -> Result<AlgebraElement<F>> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, alg };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use brauer_core::{RationalFunction, Ring};

    #[test]
    fn generators_and_products() {
        let alg = BrauerAlgebra::new(3, RationalFunction::m());
        let p = parse_element(&alg, "p12").unwrap();
        assert_eq!(p, alg.p(0, 1).unwrap());
        let t = parse_element(&alg, "s12 - p12").unwrap();
        assert_eq!(t, alg.t(0, 1).unwrap());
        let pp = parse_element(&alg, "p12*p12").unwrap();
        assert_eq!(pp, p.scale(&RationalFunction::m()));
        let d = parse_element(&alg, "(1,2')(2,1')(3,3')").unwrap();
        assert_eq!(d, alg.s(0, 1).unwrap());
        let half = RationalFunction::from_rational(&"-1/2".parse().unwrap());
        assert_eq!(parse_element(&alg, "-1/2 * id").unwrap(), alg.one().scale(&half));
    }

    #[test]
    fn rejects_garbage() {
        let alg = BrauerAlgebra::new(2, RationalFunction::m());
        assert!(parse_element(&alg, "q12").is_err());
        assert!(parse_element(&alg, "p12 p12").is_err());
        assert!(parse_element(&alg, "p13").is_err());
        assert!(parse_element(&alg, "p01").is_err());
    }
}
