//! Lower bounds on the number of components of a Hilbert scheme from maximal Borel terms,
//! maximal Hilbert functions and the deglex minimum check.
//!
//! Every `≺≺`-maximal Borel term is only a double-generic candidate: deciding which
//! component it actually belongs to is out of scope here.

use serde::Serialize;

use crate::census::{enumerate_borel, CensusRecord};
use crate::error::{Error, Result};
use crate::extensor::{dd_compare, maximal_elements, DdMethod, DdVerdict, ExtensorTerm};
use crate::hilbert::{check_admissible, lex_segment_ideal, HilbertPolynomial};
use crate::ideal::MonomialIdeal;
use crate::order::TermOrder;

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    #[serde(flatten)]
    pub record: CensusRecord,
    /// Absent when `n <= 2`.
    pub x0x1_sat: Option<Vec<String>>,
}

/// The census of `p` with its degree-`r` terms and the bounds derived from them.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub p: String,
    pub n: usize,
    pub order: String,
    pub r: u32,
    pub count: usize,
    /// Indices of the `≺≺`-maximal terms.
    pub maximal: Vec<usize>,
    pub bound_basic: usize,
    pub bound_refined: Option<usize>,
    /// Shared growth vector of every census slice in degree `r`.
    pub growth_vector: Vec<u64>,
    pub ideals: Vec<IdealReport>,
    #[serde(skip)]
    pub census: Vec<MonomialIdeal>,
    #[serde(skip)]
    pub terms: Vec<ExtensorTerm>,
    #[serde(skip)]
    pub lex: MonomialIdeal,
}

impl CensusReport {
    pub fn order(&self) -> &TermOrder {
        self.terms
            .first()
            .map(ExtensorTerm::order)
            .expect("a census is never empty")
    }

    /// Census index of the saturated lex-segment ideal.
    pub fn lex_index(&self) -> usize {
        self.census
            .iter()
            .position(|i| *i == self.lex)
            .expect("the lex-segment ideal is a census member")
    }
}

pub fn component_lower_bound(
    p: &HilbertPolynomial,
    n: usize,
    order: &TermOrder,
) -> Result<CensusReport> {
    order.validate(n + 1)?;
    let r = check_admissible(p, n)?.len() as u32;
    let census = enumerate_borel(p, n)?;
    let terms: Vec<ExtensorTerm> = census
        .iter()
        .map(|i| ExtensorTerm::new(i.truncate(r), order.clone()))
        .collect::<Result<_>>()?;
    let maximal = maximal_elements(&terms)?;

    let growth = terms[0].slice().growth_vector()?;
    for (ideal, t) in census.iter().zip(&terms) {
        if t.slice().growth_vector()? != growth {
            return Err(Error::Precondition(format!(
                "growth vector of ({ideal}) in degree {r} differs from the census"
            )));
        }
    }

    let lex = lex_segment_ideal(p, n)?;
    let sat01 = |i: &MonomialIdeal| -> Result<Option<MonomialIdeal>> {
        if n > 2 {
            i.x0x1_saturation().map(Some)
        } else {
            Ok(None)
        }
    };
    let lex01 = sat01(&lex)?;
    // A maximal term with the lex x0,x1-saturation may be the double-generic ideal of
    // the lex component; the lex term itself always has it.
    let refined = n > 2
        && maximal
            .iter()
            .map(|&i| sat01(&census[i]))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|s| *s != lex01);
    let ideals = census
        .iter()
        .map(|i| {
            Ok(IdealReport {
                record: CensusRecord::new(i, r)?,
                x0x1_sat: sat01(i)?.map(|s| s.generator_strings()),
            })
        })
        .collect::<Result<_>>()?;

    Ok(CensusReport {
        p: p.to_string(),
        n,
        order: order.to_string(),
        r,
        count: census.len(),
        bound_basic: maximal.len(),
        bound_refined: refined.then_some(maximal.len() + 1),
        maximal,
        growth_vector: growth.0,
        ideals,
        census,
        terms,
        lex,
    })
}

/// Split of census terms against a candidate double-generic term `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    /// Terms `≺≺ g`: possibly on a GL-stable set whose double-generic term is `g`.
    pub possible: Vec<usize>,
    /// Terms not `≺≺ g`: certainly off any such set.
    pub excluded: Vec<usize>,
}

pub fn necessary_condition_filter(terms: &[ExtensorTerm], g: &ExtensorTerm) -> Result<Partition> {
    let mut part = Partition {
        possible: Vec::new(),
        excluded: Vec::new(),
    };
    for (i, t) in terms.iter().enumerate() {
        match dd_compare(t, g, DdMethod::Sorted)? {
            DdVerdict::Less | DdVerdict::Equal => part.possible.push(i),
            _ => part.excluded.push(i),
        }
    }
    Ok(part)
}

#[derive(Clone, Debug, Serialize)]
pub struct MaxHilbertReport {
    /// Census indices of the `≺≺`-maximal terms.
    pub candidates: Vec<usize>,
    /// `H_{S/I}(0..=r)` of each candidate.
    pub candidate_functions: Vec<Vec<u64>>,
    /// Distinct pointwise-maximal Hilbert functions over the whole census.
    pub maximal_functions: Vec<Vec<u64>>,
    /// Ordered pairs `(i, j)` with term `i ≺≺ j`, `i != j`.
    pub comparable_pairs: usize,
    /// Comparable pairs whose Hilbert functions are not ordered like the terms.
    pub violations: Vec<(usize, usize)>,
}

/// Checks that `≺≺`-larger terms have pointwise larger `H_{S/I}` and lists the maximal
/// Hilbert functions. Only valid for degrevlex.
pub fn max_hilbert_function(report: &CensusReport) -> Result<MaxHilbertReport> {
    if *report.order() != TermOrder::DegRevLex {
        return Err(Error::Unsupported(format!(
            "maximal Hilbert functions need degrevlex, got {}",
            report.order
        )));
    }
    let h: Vec<&Vec<u64>> = report
        .ideals
        .iter()
        .map(|i| &i.record.hilbert_function)
        .collect();
    let dominated = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x <= y);

    let mut comparable = 0;
    let mut violations = Vec::new();
    for i in 0..report.terms.len() {
        for j in 0..report.terms.len() {
            if dd_compare(&report.terms[i], &report.terms[j], DdMethod::Sorted)? == DdVerdict::Less
            {
                comparable += 1;
                if !dominated(h[i], h[j]) {
                    violations.push((i, j));
                }
            }
        }
    }

    let mut maximal_functions: Vec<Vec<u64>> = Vec::new();
    for a in &h {
        let beaten = h.iter().any(|b| b != a && dominated(a, b));
        if !beaten && !maximal_functions.contains(a) {
            maximal_functions.push((*a).clone());
        }
    }

    Ok(MaxHilbertReport {
        candidates: report.maximal.clone(),
        candidate_functions: report.maximal.iter().map(|&i| h[i].clone()).collect(),
        maximal_functions,
        comparable_pairs: comparable,
        violations,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub p: String,
    pub n: usize,
    /// Census index of the unique deglex-maximal term.
    pub maximum: usize,
    pub consistent: bool,
    /// Members with a Hilbert function value below that of the maximum.
    pub counterexamples: Vec<usize>,
}

/// Evidence on whether the deglex double-generic ideal has the pointwise minimal Hilbert
/// function. Gathers evidence only.
pub fn conjecture_min_deglex_check(p: &HilbertPolynomial, n: usize) -> Result<ConjectureReport> {
    let report = component_lower_bound(p, n, &TermOrder::DegLex)?;
    let [maximum] = report.maximal[..] else {
        return Err(Error::Precondition(format!(
            "expected a unique deglex-maximal term, found {}",
            report.maximal.len()
        )));
    };
    let h = |i: usize| &report.ideals[i].record.hilbert_function;
    let counterexamples: Vec<usize> = (0..report.count)
        .filter(|&i| h(maximum).iter().zip(h(i)).any(|(m, x)| m > x))
        .collect();
    Ok(ConjectureReport {
        p: p.to_string(),
        n,
        maximum,
        consistent: counterexamples.is_empty(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(s: &str) -> HilbertPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn three_t_plus_two_bounds() {
        let rep = component_lower_bound(&hp("3t+2"), 3, &TermOrder::DegRevLex).unwrap();
        assert_eq!(rep.count, 4);
        assert_eq!(rep.bound_basic, 1);
        let top = &rep.census[rep.maximal[0]];
        assert_eq!(top.to_string(), "x3^2, x2*x3, x2^3, x1*x2^2");
        let part = necessary_condition_filter(&rep.terms, &rep.terms[rep.maximal[0]]).unwrap();
        assert_eq!(part.possible, vec![0, 1, 2, 3]);

        let mh = max_hilbert_function(&rep).unwrap();
        assert!(mh.violations.is_empty());
        assert_eq!(mh.candidate_functions, vec![vec![1, 4, 8, 11, 14, 17]]);
    }

    #[test]
    fn constant_polynomial() {
        let rep = component_lower_bound(&hp("2"), 2, &TermOrder::DegRevLex).unwrap();
        assert_eq!(
            (rep.count, rep.bound_basic, rep.bound_refined),
            (1, 1, None)
        );
        assert!(rep.ideals[0].x0x1_sat.is_none());
        let c = conjecture_min_deglex_check(&hp("2"), 2).unwrap();
        assert!(c.consistent);
    }

    #[test]
    fn deglex_filter_keeps_everything() {
        let rep = component_lower_bound(&hp("3t+2"), 3, &TermOrder::DegLex).unwrap();
        assert_eq!(rep.maximal, vec![rep.lex_index()]);
        let part = necessary_condition_filter(&rep.terms, &rep.terms[rep.lex_index()]).unwrap();
        assert!(part.excluded.is_empty());
        assert!(matches!(
            max_hilbert_function(&rep),
            Err(Error::Unsupported(_))
        ));
    }
}
