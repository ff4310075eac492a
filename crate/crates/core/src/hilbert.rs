//! Hilbert polynomials, Gotzmann decompositions and segment ideals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{DegreeSlice, MonomialIdeal};
use crate::monomial::{all_monomials, binomial_u64, Parser};
use crate::order::TermOrder;

/// Largest Gotzmann number we are willing to compute.
pub const GOTZMANN_CAP: usize = 10_000;

/// An integer-valued polynomial in `t` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HilbertPolynomial {
    /// `coeffs[k]` multiplies `t^k`; no trailing zeros.
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        HilbertPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![rat(c)]).expect("integer constant")
    }

    /// Builds a polynomial and checks that it takes integer values.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Result<Self> {
        let p = Self::from_coeffs_unchecked(coeffs);
        for t in 0..=p.coeffs.len() as i64 {
            if !p.eval_rational(t).is_integer() {
                return Err(Error::Admissibility(format!(
                    "{p} is not integer-valued (value at t={t} is {})",
                    p.eval_rational(t)
                )));
            }
        }
        Ok(p)
    }

    pub(crate) fn from_coeffs_unchecked(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval_rational(&self, t: i64) -> BigRational {
        let t = rat(t);
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    pub fn evaluate(&self, t: i64) -> Result<i64> {
        let v = self.eval_rational(t);
        if !v.is_integer() {
            return Err(Error::Admissibility(format!(
                "{self} takes the non-integer value {v} at t={t}"
            )));
        }
        v.to_integer().to_i64().ok_or_else(|| Error::Resource {
            what: format!("value of {self} at t={t} overflows"),
            partial: 0,
        })
    }

    /// `binom(t + c, k)` as a polynomial in `t`.
    pub fn binomial(c: i64, k: u32) -> Self {
        let mut coeffs = vec![BigRational::one()];
        for j in 0..k as i64 {
            // multiply by (t + c - j)
            let shift = rat(c - j);
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (i, a) in coeffs.iter().enumerate() {
                next[i] += a * &shift;
                next[i + 1] += a;
            }
            coeffs = next;
        }
        let fact: BigInt = (1..=k as i64).map(BigInt::from).product();
        let fact = BigRational::from_integer(fact);
        Self::from_coeffs_unchecked(coeffs.into_iter().map(|c| c / &fact).collect())
    }

    /// `p(t + s)`.
    pub fn shift(&self, s: i64) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        let s = rat(s);
        // Horner in the shifted variable.
        for c in self.coeffs.iter().rev() {
            let mut next = vec![BigRational::zero(); out.len()];
            for i in 0..out.len() {
                if out[i].is_zero() {
                    continue;
                }
                next[i] += &out[i] * &s;
                if i + 1 < next.len() {
                    next[i + 1] += &out[i];
                }
            }
            next[0] += c;
            out = next;
        }
        Self::from_coeffs_unchecked(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self
                    .coeffs
                    .get(i)
                    .cloned()
                    .unwrap_or_else(BigRational::zero);
                let b = other
                    .coeffs
                    .get(i)
                    .cloned()
                    .unwrap_or_else(BigRational::zero);
                a - b
            })
            .collect();
        Self::from_coeffs_unchecked(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self
                    .coeffs
                    .get(i)
                    .cloned()
                    .unwrap_or_else(BigRational::zero);
                let b = other
                    .coeffs
                    .get(i)
                    .cloned()
                    .unwrap_or_else(BigRational::zero);
                a + b
            })
            .collect();
        Self::from_coeffs_unchecked(coeffs)
    }

    /// `p(t) - p(t - 1)`.
    pub fn difference(&self) -> Self {
        self.sub(&self.shift(-1))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser::new(text);
        let mut coeffs: Vec<BigRational> = Vec::new();
        let mut first = true;
        loop {
            p.skip_ws();
            if p.at_end() {
                if first {
                    return Err(Error::parse(p.pos, "empty polynomial"));
                }
                break;
            }
            let mut sign = 1i64;
            if p.eat('+') {
            } else if p.eat('-') {
                sign = -1;
            } else if !first {
                return Err(Error::parse(p.pos, "expected `+` or `-`"));
            }
            first = false;
            p.skip_ws();
            let start = p.pos;
            let mut coeff: Option<u64> = None;
            if matches!(p.peek(), Some(c) if c.is_ascii_digit()) {
                coeff = Some(p.number()?);
            }
            p.skip_ws();
            let has_star = p.eat('*');
            let mut power = 0u64;
            if p.eat('t') {
                power = 1;
                if p.eat('^') {
                    power = p.number()?;
                }
            } else if has_star || coeff.is_none() {
                return Err(Error::parse(start, "expected an integer or a power of t"));
            }
            if power > 64 {
                return Err(Error::parse(start, "degree too large"));
            }
            let c = rat(sign) * BigRational::from_integer(BigInt::from(coeff.unwrap_or(1)));
            if coeffs.len() <= power as usize {
                coeffs.resize(power as usize + 1, BigRational::zero());
            }
            coeffs[power as usize] += c;
        }
        Self::from_coeffs(coeffs)
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let body = if a.is_integer() {
                a.to_integer().to_string()
            } else {
                format!("({a})")
            };
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !a.is_one() {
                        f.write_str(&body)?;
                    }
                    f.write_str("t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for HilbertPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// The exponents `a_1 >= ... >= a_s` with `p(t) = sum_i binom(t + a_i - (i-1), a_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GotzmannDecomposition(pub Vec<u32>);

impl GotzmannDecomposition {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_polynomial(&self) -> HilbertPolynomial {
        self.0
            .iter()
            .enumerate()
            .fold(HilbertPolynomial::zero(), |acc, (i, &a)| {
                acc.add(&HilbertPolynomial::binomial(a as i64 - i as i64, a))
            })
    }
}

/// Greedy binomial decomposition: peel off the largest admissible binomial each step.
pub fn gotzmann_decompose(p: &HilbertPolynomial) -> Result<GotzmannDecomposition> {
    if p.is_zero() {
        return Err(Error::Admissibility(
            "the zero polynomial has no Gotzmann decomposition".into(),
        ));
    }
    let mut rest = p.clone();
    let mut out: Vec<u32> = Vec::new();
    while !rest.is_zero() {
        if out.len() >= GOTZMANN_CAP {
            return Err(Error::Resource {
                what: format!("Gotzmann number of {p} exceeds {GOTZMANN_CAP}"),
                partial: out.len(),
            });
        }
        let d = rest.degree().unwrap() as u32;
        if !rest.leading_coefficient().is_positive() || out.last().is_some_and(|&a| d > a) {
            return Err(Error::Admissibility(format!(
                "{p} is not a Hilbert polynomial (no binomial decomposition)"
            )));
        }
        let i = out.len() as i64;
        rest = rest.sub(&HilbertPolynomial::binomial(d as i64 - i, d));
        out.push(d);
    }
    Ok(GotzmannDecomposition(out))
}

pub fn gotzmann_number(p: &HilbertPolynomial) -> Result<usize> {
    Ok(gotzmann_decompose(p)?.len())
}

/// Checks that `p` can be the Hilbert polynomial of a subscheme of `P^n`.
pub fn check_admissible(p: &HilbertPolynomial, n: usize) -> Result<GotzmannDecomposition> {
    let dec = gotzmann_decompose(p)?;
    if dec.0[0] as usize >= n {
        return Err(Error::Admissibility(format!(
            "{p} has degree {} but subschemes of P^{n} have dimension at most {}",
            dec.0[0],
            n.saturating_sub(1)
        )));
    }
    Ok(dec)
}

/// `binom(n + t, n) - p(t)`, the codimension of the degree-`t` part.
///
/// Only meaningful for `t` at least the Gotzmann number of `p`.
pub fn q_codim(p: &HilbertPolynomial, n: usize, t: i64) -> Result<i64> {
    if t < 0 {
        return Err(Error::Parameter(format!("negative degree {t}")));
    }
    if let Ok(r) = gotzmann_number(p) {
        if (t as usize) < r {
            log::warn!("q_codim of {p} at t={t} below the Gotzmann number {r}");
        }
    }
    let dim = binomial_u64(n as u64 + t as u64, n as u64) as i64;
    Ok(dim - p.evaluate(t)?)
}

/// The ideal spanned in degree `r` by the greatest `q(r)` monomials under `order`,
/// saturated, if its Hilbert polynomial is `p`.
pub fn hilb_segment_ideal(
    p: &HilbertPolynomial,
    n: usize,
    order: &TermOrder,
) -> Result<Option<MonomialIdeal>> {
    if !order.is_graded() && *order != TermOrder::Lex {
        return Err(Error::Parameter(
            "segment ideals need a graded order".into(),
        ));
    }
    order.validate(n + 1)?;
    let dec = check_admissible(p, n)?;
    let r = dec.len() as u32;
    let q = q_codim(p, n, r as i64)?;
    let all = all_monomials(n + 1, r, order);
    if q < 0 || q as usize > all.len() {
        return Err(Error::Admissibility(format!(
            "{p} needs {q} monomials of degree {r} in {} variables",
            n + 1
        )));
    }
    let slice = DegreeSlice::new(n + 1, r, all[..q as usize].to_vec())?;
    let next = slice.ek_expand_or_plain();
    if next.len() as i64 != q_codim(p, n, r as i64 + 1)? {
        return Ok(None);
    }
    Ok(Some(slice.to_ideal().saturate()?.ideal))
}

/// The saturated lex-segment ideal with Hilbert polynomial `p` in `P^n`.
pub fn lex_segment_ideal(p: &HilbertPolynomial, n: usize) -> Result<MonomialIdeal> {
    let r = gotzmann_number(p)?;
    hilb_segment_ideal(p, n, &TermOrder::Lex)?.ok_or_else(|| {
        Error::Admissibility(format!(
            "Macaulay growth of the lex segment of {p} fails at degree {}",
            r + 1
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(s: &str) -> HilbertPolynomial {
        s.parse().unwrap()
    }

    /// Independent oracle: sum of binom(t + a_i - (i-1), a_i) by direct integer evaluation.
    fn oracle_sum(a: &[u32], t: i64) -> i64 {
        a.iter()
            .enumerate()
            .map(|(i, &ai)| {
                let top = t + ai as i64 - i as i64;
                // generalized binomial top*(top-1)*.../ai!
                let mut num: i128 = 1;
                let mut den: i128 = 1;
                for j in 0..ai as i128 {
                    num *= top as i128 - j;
                    den *= j + 1;
                }
                (num / den) as i64
            })
            .sum()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(hp("7t-5").evaluate(16).unwrap(), 107);
        assert_eq!(hp("3t+2").evaluate(0).unwrap(), 2);
        assert_eq!(hp("2").evaluate(100).unwrap(), 2);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(hp("7t-5").to_string(), "7t-5");
        assert_eq!(hp(" 3t + 2 ").to_string(), "3t+2");
        assert_eq!(hp("t^2+3t+2").to_string(), "t^2+3t+2");
        assert_eq!(hp("-5+7*t").to_string(), "7t-5");
        assert_eq!(hp("t - t").to_string(), "0");
        assert!("3t+".parse::<HilbertPolynomial>().is_err());
        assert!("3x".parse::<HilbertPolynomial>().is_err());
        assert!("".parse::<HilbertPolynomial>().is_err());
    }

    #[test]
    fn non_integer_valued_is_rejected() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert!(HilbertPolynomial::from_coeffs(vec![half.clone()]).is_err());
        // t(t+1)/2 is integer valued
        assert!(
            HilbertPolynomial::from_coeffs(vec![BigRational::zero(), half.clone(), half]).is_ok()
        );
    }

    #[test]
    fn gotzmann_of_7t_minus_5() {
        let d = gotzmann_decompose(&hp("7t-5")).unwrap();
        let mut want = vec![1; 7];
        want.extend([0; 9]);
        assert_eq!(d.0, want);
        assert_eq!(gotzmann_number(&hp("7t-5")).unwrap(), 16);
    }

    #[test]
    fn gotzmann_of_3t_plus_2() {
        let d = gotzmann_decompose(&hp("3t+2")).unwrap();
        assert_eq!(d.0, vec![1, 1, 1, 0, 0]);
        for t in 0..=6 {
            assert_eq!(oracle_sum(&d.0, t), 3 * t + 2);
        }
    }

    #[test]
    fn gotzmann_of_constants() {
        for c in 1..12 {
            let d = gotzmann_decompose(&HilbertPolynomial::constant(c)).unwrap();
            assert_eq!(d.0, vec![0; c as usize]);
        }
        assert_eq!(gotzmann_number(&hp("2")).unwrap(), 2);
    }

    #[test]
    fn gotzmann_rejects_bad_polynomials() {
        assert!(gotzmann_decompose(&hp("-3")).is_err());
        assert!(gotzmann_decompose(&hp("0")).is_err());
        assert!(gotzmann_decompose(&hp("-t+4")).is_err());
        assert!(matches!(
            gotzmann_decompose(&hp("20000")),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn gotzmann_round_trip() {
        for s in [
            "7t-5", "3t+2", "4t", "t+1", "2t+2", "t^2+3t+1", "5t+3", "3t+1",
        ] {
            let p: HilbertPolynomial = s.parse().unwrap();
            let d = gotzmann_decompose(&p).unwrap();
            assert!(d.0.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(d.0[0] as usize, p.degree().unwrap());
            for t in 0..(d.len() as i64 + 4) {
                assert_eq!(oracle_sum(&d.0, t), p.evaluate(t).unwrap(), "{s} at {t}");
            }
            assert_eq!(d.to_polynomial(), p);
        }
    }

    #[test]
    fn q_codim_examples() {
        // binomial-table oracle: binom(19,3) = 969, binom(8,3) = 56, binom(4,2) = 6
        assert_eq!(q_codim(&hp("7t-5"), 3, 16).unwrap(), 969 - 107);
        assert_eq!(q_codim(&hp("3t+2"), 3, 5).unwrap(), 56 - 17);
        assert_eq!(q_codim(&hp("2"), 2, 2).unwrap(), 6 - 2);
    }

    #[test]
    fn difference_operator() {
        assert_eq!(hp("7t-5").difference(), hp("7"));
        assert_eq!(hp("2").difference(), HilbertPolynomial::zero());
    }

    #[test]
    fn admissibility_needs_small_degree() {
        assert!(check_admissible(&hp("7t-5"), 3).is_ok());
        assert!(check_admissible(&hp("7t-5"), 1).is_err());
        assert!(check_admissible(&hp("2"), 1).is_ok());
    }
}
