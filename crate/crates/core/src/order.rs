//! Term orders with `x0 < x1 < ... < xn`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Pure lex, comparing exponents from `xn` downward. Not graded.
    Lex,
    DegLex,
    DegRevLex,
    /// Degree, then weight, then deglex on ties.
    Weight(Vec<u32>),
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::Dimension(format!(
                "comparing monomials over {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        if let TermOrder::Weight(w) = self {
            if w.len() != a.nvars() {
                return Err(Error::Dimension(format!(
                    "weight vector of length {} for {} variables",
                    w.len(),
                    a.nvars()
                )));
            }
        }
        Ok(self.cmp_unchecked(a, b))
    }

    /// Comparison without the shape checks of [`TermOrder::compare`].
    pub fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            TermOrder::Lex => lex_high_first(ea, eb),
            TermOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_high_first(ea, eb)),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in ea.iter().zip(eb) {
                    if x != y {
                        // more of the smallest differing variable means smaller
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::Weight(w) => {
                let wa: u64 = ea.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let wb: u64 = eb.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                a.degree()
                    .cmp(&b.degree())
                    .then(wa.cmp(&wb))
                    .then_with(|| lex_high_first(ea, eb))
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        !matches!(self, TermOrder::Lex)
    }

    /// Check that the order makes sense for `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let TermOrder::Weight(w) = self {
            if w.len() != nvars {
                return Err(Error::Dimension(format!(
                    "weight vector of length {} for {} variables",
                    w.len(),
                    nvars
                )));
            }
        }
        Ok(())
    }

    /// Descending sort of a list of monomials.
    pub fn sort_desc(&self, terms: &mut [Monomial]) {
        terms.sort_by(|a, b| self.cmp_unchecked(b, a));
    }
}

fn lex_high_first(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => f.write_str("lex"),
            TermOrder::DegLex => f.write_str("deglex"),
            TermOrder::DegRevLex => f.write_str("degrevlex"),
            TermOrder::Weight(w) => {
                f.write_str("weight:")?;
                for (i, x) in w.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "lex" => return Ok(TermOrder::Lex),
            "deglex" => return Ok(TermOrder::DegLex),
            "degrevlex" => return Ok(TermOrder::DegRevLex),
            _ => {}
        }
        let Some(rest) = t.strip_prefix("weight:") else {
            return Err(Error::parse(0, format!("unknown term order `{t}`")));
        };
        let mut w = Vec::new();
        let mut offset = "weight:".len();
        for part in rest.split(',') {
            let v: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::parse(offset, format!("bad weight `{}`", part.trim())))?;
            if v == 0 {
                return Err(Error::parse(offset, "weights must be positive"));
            }
            w.push(v);
            offset += part.len() + 1;
        }
        // x_i < x_{i+1} must hold, so weights cannot decrease.
        if w.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::parse(
                "weight:".len(),
                "weights must be non-decreasing so that x0 < x1 < ... < xn",
            ));
        }
        Ok(TermOrder::Weight(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_and_deglex_examples() {
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(
            TermOrder::DegRevLex.compare(&a, &b).unwrap(),
            Ordering::Less
        );
        assert_eq!(TermOrder::DegLex.compare(&b, &a).unwrap(), Ordering::Less);
        for o in [
            TermOrder::Lex,
            TermOrder::DegLex,
            TermOrder::DegRevLex,
            TermOrder::Weight(vec![1, 1, 1]),
        ] {
            assert_eq!(o.compare(&a, &a).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn mismatched_variables() {
        assert!(matches!(
            TermOrder::DegLex.compare(&m(&[1]), &m(&[1, 0])),
            Err(Error::Dimension(_))
        ));
        assert!(TermOrder::Weight(vec![1, 2])
            .compare(&m(&[1, 0, 0]), &m(&[0, 1, 0]))
            .is_err());
    }

    #[test]
    fn variables_increase() {
        for o in [
            TermOrder::Lex,
            TermOrder::DegLex,
            TermOrder::DegRevLex,
            TermOrder::Weight(vec![1, 2, 9, 12]),
        ] {
            for i in 0..3 {
                assert_eq!(
                    o.cmp_unchecked(&Monomial::var(4, i), &Monomial::var(4, i + 1)),
                    Ordering::Less
                );
            }
        }
    }

    #[test]
    fn weight_breaks_ties_by_lex() {
        // x1^2 and x0*x2 both weigh 4 under (1,2,3).
        let o = TermOrder::Weight(vec![1, 2, 3]);
        assert_eq!(
            o.cmp_unchecked(&m(&[0, 2, 0]), &m(&[1, 0, 1])),
            Ordering::Less
        );
    }

    #[test]
    fn order_text_round_trip() {
        for s in ["lex", "deglex", "degrevlex", "weight:1,2,9,12"] {
            assert_eq!(s.parse::<TermOrder>().unwrap().to_string(), s);
        }
        assert!("weight:3,2".parse::<TermOrder>().is_err());
        assert!("weight:0,1".parse::<TermOrder>().is_err());
        assert!("revlex".parse::<TermOrder>().is_err());
    }
}
