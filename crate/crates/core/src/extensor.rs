//! Extensor terms, the lexicographic (Eisenbud) order on them and the partial order `≺≺`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::DegreeSlice;
use crate::monomial::Monomial;
use crate::order::TermOrder;

/// A wedge of distinct monomials of one degree, held in normal expression
/// (strictly descending) under its term order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtensorTerm {
    order: TermOrder,
    slice: DegreeSlice,
    normal: Vec<Monomial>,
}

impl ExtensorTerm {
    pub fn new(slice: DegreeSlice, order: TermOrder) -> Result<Self> {
        order.validate(slice.nvars())?;
        let normal = slice.sorted_by(&order);
        Ok(ExtensorTerm {
            order,
            slice,
            normal,
        })
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn slice(&self) -> &DegreeSlice {
        &self.slice
    }

    /// Members, strictly descending.
    pub fn terms(&self) -> &[Monomial] {
        &self.normal
    }

    pub fn len(&self) -> usize {
        self.normal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normal.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.slice.degree()
    }

    pub fn is_borel(&self) -> bool {
        self.slice.is_borel_closed()
    }

    /// Eliahou–Kervaire expansion one degree up, under the same order.
    pub fn ek_expand(&self) -> Result<ExtensorTerm> {
        ExtensorTerm::new(self.slice.ek_expand()?, self.order.clone())
    }

    /// `τ1∧τ2∧...` in normal expression.
    pub fn wedge_string(&self) -> String {
        self.normal
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("∧")
    }

    fn check_shape(&self, other: &ExtensorTerm) -> Result<()> {
        if self.order != other.order {
            return Err(Error::Dimension(format!(
                "extensor terms under different orders ({} and {})",
                self.order, other.order
            )));
        }
        if self.slice.nvars() != other.slice.nvars()
            || self.degree() != other.degree()
            || self.len() != other.len()
        {
            return Err(Error::Dimension(format!(
                "extensor terms of shape (q={}, m={}) and (q={}, m={})",
                self.len(),
                self.degree(),
                other.len(),
                other.degree()
            )));
        }
        Ok(())
    }

    fn cmp_terms(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_unchecked(a, b)
    }
}

impl fmt::Display for ExtensorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.wedge_string())
    }
}

/// Lexicographic comparison of the normal expressions.
pub fn eisenbud_compare(a: &ExtensorTerm, b: &ExtensorTerm) -> Result<Ordering> {
    a.check_shape(b)?;
    Ok(a.normal
        .iter()
        .zip(&b.normal)
        .map(|(x, y)| a.cmp_terms(x, y))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DdVerdict {
    /// `A ≺≺ B`, `A ≠ B`.
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl DdVerdict {
    fn from_flags(a_below: bool, b_below: bool) -> Self {
        match (a_below, b_below) {
            (true, true) => DdVerdict::Equal,
            (true, false) => DdVerdict::Less,
            (false, true) => DdVerdict::Greater,
            (false, false) => DdVerdict::Incomparable,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            DdVerdict::Less => DdVerdict::Greater,
            DdVerdict::Greater => DdVerdict::Less,
            v => v,
        }
    }
}

impl fmt::Display for DdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DdVerdict::Less => "less",
            DdVerdict::Greater => "greater",
            DdVerdict::Equal => "equal",
            DdVerdict::Incomparable => "incomparable",
        })
    }
}

/// Equivalent tests for `A ≺≺ B`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum DdMethod {
    /// Componentwise domination of the descending lists.
    #[default]
    Sorted,
    /// For every `c` in `A ∪ B`, `#{a ⪰ c} <= #{b ⪰ c}`.
    Counting,
    /// Counting on `A \ B` against `B \ A`.
    SymmDiff,
    /// A term-increasing bijection `A -> B` exists.
    Matching,
}

impl DdMethod {
    pub const ALL: [DdMethod; 4] = [
        DdMethod::Sorted,
        DdMethod::Counting,
        DdMethod::SymmDiff,
        DdMethod::Matching,
    ];
}

impl FromStr for DdMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sorted" => Ok(DdMethod::Sorted),
            "counting" => Ok(DdMethod::Counting),
            "symmdiff" => Ok(DdMethod::SymmDiff),
            "matching" => Ok(DdMethod::Matching),
            _ => Err(Error::parse(0, format!("unknown comparison method `{s}`"))),
        }
    }
}

pub fn dd_compare(a: &ExtensorTerm, b: &ExtensorTerm, method: DdMethod) -> Result<DdVerdict> {
    a.check_shape(b)?;
    let below: fn(&ExtensorTerm, &[Monomial], &[Monomial]) -> bool = match method {
        DdMethod::Sorted => sorted_below,
        DdMethod::Counting => counting_below,
        DdMethod::SymmDiff => symmdiff_below,
        DdMethod::Matching => matching_below,
    };
    Ok(DdVerdict::from_flags(
        below(a, &a.normal, &b.normal),
        below(a, &b.normal, &a.normal),
    ))
}

fn sorted_below(t: &ExtensorTerm, a: &[Monomial], b: &[Monomial]) -> bool {
    a.iter()
        .zip(b)
        .all(|(x, y)| t.cmp_terms(x, y) != Ordering::Greater)
}

fn counting_below(t: &ExtensorTerm, a: &[Monomial], b: &[Monomial]) -> bool {
    // Sweep both descending lists; after consuming every element >= c the counts must obey
    // #a <= #b.
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let c = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => {
                if t.cmp_terms(x, y) == Ordering::Less {
                    y
                } else {
                    x
                }
            }
            (Some(x), None) => x,
            (None, Some(y)) => y,
            (None, None) => unreachable!(),
        };
        while i < a.len() && t.cmp_terms(&a[i], c) != Ordering::Less {
            i += 1;
        }
        while j < b.len() && t.cmp_terms(&b[j], c) != Ordering::Less {
            j += 1;
        }
        if i > j {
            return false;
        }
    }
    true
}

fn symmdiff_below(t: &ExtensorTerm, a: &[Monomial], b: &[Monomial]) -> bool {
    let (in_a, in_b): (HashSet<&Monomial>, HashSet<&Monomial>) =
        (a.iter().collect(), b.iter().collect());
    let only_a: Vec<Monomial> = a.iter().filter(|x| !in_b.contains(x)).cloned().collect();
    let only_b: Vec<Monomial> = b.iter().filter(|x| !in_a.contains(x)).cloned().collect();
    counting_below(t, &only_a, &only_b)
}

/// Kuhn's augmenting paths on the graph `a -> b` with `a ⪯ b`.
fn matching_below(t: &ExtensorTerm, a: &[Monomial], b: &[Monomial]) -> bool {
    let q = a.len();
    // b is descending, so the neighbours of a[i] are a prefix b[..reach[i]].
    let reach: Vec<usize> = a
        .iter()
        .map(|x| b.partition_point(|y| t.cmp_terms(x, y) != Ordering::Greater))
        .collect();
    let mut match_b: Vec<Option<usize>> = vec![None; q];
    let mut matched_a = vec![false; q];
    // Greedy start on the positional pairing.
    for i in 0..q {
        if i < reach[i] {
            matched_a[i] = true;
            match_b[i] = Some(i);
        }
    }
    fn augment(
        u: usize,
        reach: &[usize],
        seen: &mut [bool],
        match_b: &mut [Option<usize>],
    ) -> bool {
        for v in 0..reach[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if match_b[v].is_none_or(|w| augment(w, reach, seen, match_b)) {
                match_b[v] = Some(u);
                return true;
            }
        }
        false
    }
    (0..q).all(|u| {
        matched_a[u] || {
            let mut seen = vec![false; q];
            augment(u, &reach, &mut seen, &mut match_b)
        }
    })
}

/// Indices of members not strictly `≺≺`-below another member, in input order.
pub fn maximal_elements(terms: &[ExtensorTerm]) -> Result<Vec<usize>> {
    if let Some(first) = terms.first() {
        for t in &terms[1..] {
            first.check_shape(t)?;
        }
    }
    Ok((0..terms.len())
        .into_par_iter()
        .filter(|&i| {
            !terms
                .iter()
                .any(|other| dd_compare(&terms[i], other, DdMethod::Sorted) == Ok(DdVerdict::Less))
        })
        .collect())
}

/// `≺≺` verdicts in degree `m` and after one Eliahou–Kervaire step.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PersistenceReport {
    pub at_m: DdVerdict,
    pub at_next: DdVerdict,
}

impl PersistenceReport {
    pub fn persistent(&self) -> bool {
        self.at_m == self.at_next
    }
}

pub fn check_persistence(a: &ExtensorTerm, b: &ExtensorTerm) -> Result<PersistenceReport> {
    a.check_shape(b)?;
    if !a.is_borel() || !b.is_borel() {
        return Err(Error::Precondition(
            "persistence is only defined for Borel terms".into(),
        ));
    }
    let (ea, eb) = (a.ek_expand()?, b.ek_expand()?);
    if ea.len() != eb.len() {
        return Err(Error::Precondition(
            "persistence needs terms with equal growth (same Hilbert polynomial)".into(),
        ));
    }
    Ok(PersistenceReport {
        at_m: dd_compare(a, b, DdMethod::Sorted)?,
        at_next: dd_compare(&ea, &eb, DdMethod::Sorted)?,
    })
}
