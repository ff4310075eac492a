//! Monomials in `x0, ..., xn` with the convention `x0 < x1 < ... < xn`.

use std::fmt;

use crate::error::{Error, Result};
use crate::order::TermOrder;

/// A power product `x0^a0 * ... * xn^an`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Smallest index of a variable dividing the monomial.
    pub fn min_var(&self) -> Result<usize> {
        self.exps
            .iter()
            .position(|&e| e > 0)
            .ok_or(Error::UndefinedMin)
    }

    /// Largest index of a variable dividing the monomial.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_same(self, other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| {
                a.checked_add(*b)
                    .ok_or_else(|| Error::Dimension("exponent overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Multiply by a single variable.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// Divide by a single variable, if it divides.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `x_j * self / x_i`, requires `x_i | self`.
    pub fn shift(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Some(Monomial { exps })
    }

    /// Elementary Borel moves `x_j * self / x_i` with `i < j` and `x_i | self`.
    pub fn borel_moves(&self) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        for i in 0..n {
            if self.exps[i] == 0 {
                continue;
            }
            for j in i + 1..n {
                out.push(self.shift(i, j).unwrap());
            }
        }
        out
    }

    /// Inverse Borel moves `x_i * self / x_j` with `i < j` and `x_j | self`.
    pub fn inverse_borel_moves(&self) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        for j in 0..n {
            if self.exps[j] == 0 {
                continue;
            }
            for i in 0..j {
                out.push(self.shift(j, i).unwrap());
            }
        }
        out
    }

    /// Replace the exponents of the listed variables by zero.
    pub fn strip(&self, vars: &[usize]) -> Monomial {
        let mut exps = self.exps.clone();
        for &v in vars {
            exps[v] = 0;
        }
        Monomial { exps }
    }

    /// Parse the text form, e.g. `x3^2*x1` or `1`.
    pub fn parse(text: &str, nvars: usize) -> Result<Monomial> {
        let mut p = Parser::new(text);
        let m = p.monomial(nvars)?;
        p.skip_ws();
        if !p.at_end() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        Ok(m)
    }
}

fn check_same(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension(format!(
            "monomials over {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `nvars` variables, sorted descending under `order`.
pub fn all_monomials(nvars: usize, d: u32, order: &TermOrder) -> Vec<Monomial> {
    let mut out = monomials_of_degree(nvars, d);
    out.sort_by(|a, b| order.cmp_unchecked(b, a));
    out
}

/// All monomials of degree `d`, in an unspecified but fixed order.
pub(crate) fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    let mut exps = vec![0u32; nvars];
    fill(&mut exps, 0, d, &mut out);
    out
}

fn fill(exps: &mut [u32], i: usize, rest: u32, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = rest;
        out.push(Monomial::new(exps.to_vec()));
        return;
    }
    for e in 0..=rest {
        exps[i] = e;
        fill(exps, i + 1, rest - e, out);
    }
    exps[i] = 0;
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn count_monomials(nvars: usize, d: u32) -> u64 {
    if nvars == 0 {
        return u64::from(d == 0);
    }
    binomial_u64(nvars as u64 - 1 + d as u64, nvars as u64 - 1)
}

pub(crate) fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    pub(crate) pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "number out of range"))
    }

    /// A monomial factor list; stops before any character that cannot continue it.
    pub(crate) fn monomial(&mut self, nvars: usize) -> Result<Monomial> {
        self.skip_ws();
        if self.peek() == Some('1') {
            let start = self.pos;
            let v = self.number()?;
            if v != 1 {
                return Err(Error::parse(start, "only the constant 1 is a monomial"));
            }
            return Ok(Monomial::one(nvars));
        }
        let mut exps = vec![0u32; nvars];
        loop {
            self.skip_ws();
            let start = self.pos;
            if !self.eat('x') {
                return Err(Error::parse(start, "expected a variable `x<i>`"));
            }
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(Error::parse(self.pos, "expected a variable index"));
            }
            let idx = self.number()? as usize;
            if idx >= nvars {
                return Err(Error::parse(
                    start,
                    format!("variable x{idx} out of range for {nvars} variables"),
                ));
            }
            if exps[idx] != 0 {
                return Err(Error::parse(start, format!("variable x{idx} repeated")));
            }
            let mut e = 1u64;
            self.skip_ws();
            if self.peek() == Some('^') {
                self.pos += 1;
                let epos = self.pos;
                e = self.number()?;
                if e == 0 {
                    return Err(Error::parse(epos, "zero exponent is not allowed"));
                }
                if e > u32::MAX as u64 {
                    return Err(Error::parse(epos, "exponent out of range"));
                }
            }
            exps[idx] = e as u32;
            let save = self.pos;
            self.skip_ws();
            if self.peek() == Some('*') {
                // `*` followed by a variable continues the product.
                let after = self.pos;
                self.pos += 1;
                self.skip_ws();
                if self.peek() == Some('x') {
                    continue;
                }
                self.pos = after;
            }
            self.pos = save;
            break;
        }
        Ok(Monomial::new(exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn min_var_examples() {
        assert_eq!(m(&[0, 1, 2]).min_var().unwrap(), 1);
        assert_eq!(m(&[4, 0, 0]).min_var().unwrap(), 0);
        assert_eq!(m(&[0, 0, 0, 2]).min_var().unwrap(), 3);
        assert_eq!(m(&[0, 0]).min_var(), Err(Error::UndefinedMin));
    }

    #[test]
    fn borel_moves_examples() {
        let mut got = m(&[1, 0, 1]).borel_moves();
        got.sort();
        let mut want = vec![m(&[0, 1, 1]), m(&[0, 0, 2])];
        want.sort();
        assert_eq!(got, want);

        assert!(m(&[0, 0, 2]).borel_moves().is_empty());

        let mut got = m(&[1, 1, 0]).borel_moves();
        got.sort();
        let mut want = vec![m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(Monomial::parse("x3^2*x1", 4).unwrap(), m(&[0, 1, 0, 2]));
        assert_eq!(Monomial::parse("x0", 3).unwrap(), m(&[1, 0, 0]));
        assert_eq!(Monomial::parse("1", 3).unwrap(), m(&[0, 0, 0]));
        assert!(matches!(
            Monomial::parse("x2^0", 3),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(Monomial::parse("x1*x1", 3).is_err());
        assert!(Monomial::parse("x5", 3).is_err());
        assert!(Monomial::parse("x1 x2", 3).is_err());
        assert!(Monomial::parse("", 3).is_err());
    }

    #[test]
    fn format_ascending_index() {
        assert_eq!(m(&[0, 1, 0, 2]).to_string(), "x1*x3^2");
        assert_eq!(m(&[0, 0, 0]).to_string(), "1");
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(count_monomials(4, 16), 969);
        assert_eq!(monomials_of_degree(4, 16).len(), 969);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
        assert_eq!(count_monomials(3, 2), 6);
    }

    #[test]
    fn all_monomials_small_cases() {
        let o = TermOrder::DegLex;
        assert_eq!(all_monomials(2, 1, &o), vec![m(&[0, 1]), m(&[1, 0])]);
        assert_eq!(all_monomials(4, 0, &o), vec![m(&[0, 0, 0, 0])]);
    }
}
