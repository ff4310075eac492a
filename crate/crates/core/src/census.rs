//! Enumeration of all saturated strongly stable ideals with a given Hilbert polynomial.
//!
//! A saturated Borel ideal `J` of `K[x_s..x_n]` has generators free of `x_s`, so it is
//! the extension of an ideal `J'` of `K[x_{s+1}..x_n]` with Hilbert polynomial `Δp`.
//! `J'` is obtained from its saturation `J''` by deleting a finite set `R` of monomials
//! that is closed under division and inverse Borel moves inside `J''`, and the size of
//! `R` is forced by `p`. Recursing on `s` therefore reaches every ideal exactly once.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{check_admissible, lex_segment_ideal, q_codim, HilbertPolynomial};
use crate::ideal::{canonical_cmp, DegreeSlice, MonomialIdeal};
use crate::monomial::{all_monomials, monomials_of_degree, Monomial};
use crate::order::TermOrder;

/// Default cap on search nodes for [`enumerate_borel`].
pub const DEFAULT_NODE_CAP: usize = 50_000_000;

/// One census member in interchange form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub generators: Vec<String>,
    pub regularity: u32,
    /// `H_{S/I}(t)` for `t = 0..=r`.
    pub hilbert_function: Vec<u64>,
    pub saturated: bool,
}

impl CensusRecord {
    pub fn new(ideal: &MonomialIdeal, r: u32) -> Result<Self> {
        Ok(CensusRecord {
            generators: ideal.generator_strings(),
            regularity: ideal.regularity()?,
            hilbert_function: ideal.hilbert_function_upto(r),
            saturated: ideal.is_saturated()?,
        })
    }
}

/// All saturated strongly stable ideals of `K[x0..xn]` with Hilbert polynomial `p`,
/// sorted canonically.
pub fn enumerate_borel(p: &HilbertPolynomial, n: usize) -> Result<Vec<MonomialIdeal>> {
    enumerate_borel_capped(p, n, DEFAULT_NODE_CAP)
}

pub fn enumerate_borel_capped(
    p: &HilbertPolynomial,
    n: usize,
    node_cap: usize,
) -> Result<Vec<MonomialIdeal>> {
    let r = check_admissible(p, n)?.len() as u32;
    let search = Search {
        nvars: n + 1,
        nodes: AtomicUsize::new(0),
        cap: node_cap,
    };
    let mut out = search.borel(p, 0)?;
    let (q_r, q_next) = (q_codim(p, n, r as i64)?, q_codim(p, n, r as i64 + 1)?);
    for ideal in &out {
        let slice = ideal.truncate(r);
        let persists = slice.len() as i64 == q_r && slice.ek_expand()?.len() as i64 == q_next;
        if !persists || !ideal.is_borel_fixed() {
            return Err(Error::Precondition(format!(
                "census member ({ideal}) fails the Gotzmann persistence check"
            )));
        }
    }
    out.sort_by(MonomialIdeal::canonical_cmp);
    out.dedup();
    Ok(out)
}

struct Search {
    nvars: usize,
    nodes: AtomicUsize,
    cap: usize,
}

impl Search {
    /// Saturated Borel ideals of `K[x_s..x_n]` with Hilbert polynomial `p`.
    fn borel(&self, p: &HilbertPolynomial, s: usize) -> Result<Vec<MonomialIdeal>> {
        let n = self.nvars - 1;
        if p.is_zero() {
            return Ok(vec![MonomialIdeal::unit(self.nvars)]);
        }
        if s == n {
            return Ok(if *p == HilbertPolynomial::constant(1) {
                vec![MonomialIdeal::zero(self.nvars)]
            } else {
                Vec::new()
            });
        }
        let below = self.borel(&p.difference(), s + 1)?;
        let nested: Vec<Vec<MonomialIdeal>> = below
            .par_iter()
            .map(|sat| self.lift(p, s, sat))
            .collect::<Result<_>>()?;
        Ok(nested.into_iter().flatten().collect())
    }

    /// Ideals of `K[x_s..x_n]` obtained from the saturated `sat` of `K[x_{s+1}..x_n]`.
    fn lift(
        &self,
        p: &HilbertPolynomial,
        s: usize,
        sat: &MonomialIdeal,
    ) -> Result<Vec<MonomialIdeal>> {
        let lo = s + 1;
        let t0 = sat.max_generator_degree().unwrap_or(0) as i64 + 1;
        let defect = |t: i64| -> Result<i64> {
            let h: i64 = (0..=t)
                .map(|k| subring_hilbert_function(sat, lo, k as u32) as i64)
                .sum();
            Ok(p.evaluate(t)? - h)
        };
        let delta = defect(t0)?;
        if defect(t0 + 1)? != delta || defect(t0 + 2)? != delta {
            return Err(Error::NotStabilized(format!(
                "defect of ({sat}) against {p} is not constant from degree {t0}"
            )));
        }
        if delta < 0 {
            return Ok(Vec::new());
        }
        let poset = IdealPoset {
            ideal: sat,
            lo,
            nvars: self.nvars,
        };
        let mut found = Vec::new();
        let start: Vec<Monomial> = sat
            .generators()
            .iter()
            .filter(|g| poset.prereqs(g).is_empty())
            .cloned()
            .collect();
        let mut state = DownsetState {
            chosen: Vec::new(),
            in_set: HashSet::new(),
            excluded: HashSet::new(),
        };
        self.downsets(&poset, &mut state, start, delta as usize, &mut found)?;
        Ok(found
            .into_iter()
            .map(|removed| remove_finite(sat, &removed, lo))
            .collect())
    }

    fn downsets(
        &self,
        poset: &IdealPoset<'_>,
        state: &mut DownsetState,
        candidates: Vec<Monomial>,
        target: usize,
        found: &mut Vec<Vec<Monomial>>,
    ) -> Result<()> {
        let seen = self.nodes.fetch_add(1, AtomicOrdering::Relaxed);
        if seen >= self.cap {
            return Err(Error::Resource {
                what: format!("census search exceeded {} nodes", self.cap),
                partial: seen,
            });
        }
        if state.chosen.len() == target {
            found.push(state.chosen.clone());
            return Ok(());
        }
        let Some(c) = candidates
            .iter()
            .filter(|c| !state.excluded.contains(*c))
            .min_by(|a, b| canonical_cmp(a, b))
            .cloned()
        else {
            return Ok(());
        };

        let mut with: Vec<Monomial> = candidates.iter().filter(|x| **x != c).cloned().collect();
        state.chosen.push(c.clone());
        state.in_set.insert(c.clone());
        for succ in poset.succs(&c) {
            if !state.in_set.contains(&succ)
                && !with.contains(&succ)
                && poset
                    .prereqs(&succ)
                    .iter()
                    .all(|x| state.in_set.contains(x))
            {
                with.push(succ);
            }
        }
        self.downsets(poset, state, with, target, found)?;
        state.in_set.remove(&c);
        state.chosen.pop();

        state.excluded.insert(c.clone());
        self.downsets(poset, state, candidates, target, found)?;
        state.excluded.remove(&c);
        Ok(())
    }
}

struct DownsetState {
    chosen: Vec<Monomial>,
    in_set: HashSet<Monomial>,
    excluded: HashSet<Monomial>,
}

/// Monomials of a Borel ideal in the variables `x_lo..x_n`, ordered by division and
/// Borel moves.
struct IdealPoset<'a> {
    ideal: &'a MonomialIdeal,
    lo: usize,
    nvars: usize,
}

impl IdealPoset<'_> {
    fn prereqs(&self, c: &Monomial) -> Vec<Monomial> {
        let mut out = Vec::new();
        for i in self.lo..self.nvars {
            if let Some(d) = c.div_var(i) {
                out.push(d);
            }
            for j in i + 1..self.nvars {
                if let Some(m) = c.shift(j, i) {
                    out.push(m);
                }
            }
        }
        out.retain(|m| self.ideal.contains(m));
        out
    }

    fn succs(&self, c: &Monomial) -> Vec<Monomial> {
        let mut out = Vec::new();
        for i in self.lo..self.nvars {
            out.push(c.mul_var(i));
            for j in i + 1..self.nvars {
                if let Some(m) = c.shift(i, j) {
                    out.push(m);
                }
            }
        }
        out
    }
}

/// `sat` minus the finite set `removed`, which must be closed downward inside `sat`.
fn remove_finite(sat: &MonomialIdeal, removed: &[Monomial], lo: usize) -> MonomialIdeal {
    let gone: HashSet<&Monomial> = removed.iter().collect();
    let mut gens: Vec<Monomial> = sat
        .generators()
        .iter()
        .filter(|g| !gone.contains(g))
        .cloned()
        .collect();
    for r in removed {
        for i in lo..sat.nvars() {
            let m = r.mul_var(i);
            if !gone.contains(&m) {
                gens.push(m);
            }
        }
    }
    MonomialIdeal::from_gens_unchecked(sat.nvars(), gens)
}

/// Monomials of degree `d` in the variables `x_lo..x_n`, embedded in `nvars` variables.
fn subring_monomials(nvars: usize, lo: usize, d: u32) -> Vec<Monomial> {
    monomials_of_degree(nvars - lo, d)
        .into_iter()
        .map(|m| {
            let mut e = vec![0; lo];
            e.extend_from_slice(m.exponents());
            Monomial::new(e)
        })
        .collect()
}

fn subring_hilbert_function(ideal: &MonomialIdeal, lo: usize, d: u32) -> u64 {
    subring_monomials(ideal.nvars(), lo, d)
        .iter()
        .filter(|m| !ideal.contains(m))
        .count() as u64
}

/// Independent census by a sweep over complements of Borel slices in degree `r`.
///
/// Only practical for small `dim S_r`; kept as a cross-check of [`enumerate_borel`].
pub fn enumerate_borel_by_slices(
    p: &HilbertPolynomial,
    n: usize,
    node_cap: usize,
) -> Result<Vec<MonomialIdeal>> {
    let nvars = n + 1;
    let r = check_admissible(p, n)?.len() as u32;
    let q_next = q_codim(p, n, r as i64 + 1)?;
    let mut ascending = all_monomials(nvars, r, &TermOrder::DegRevLex);
    ascending.reverse();
    let lex_slice = lex_segment_ideal(p, n)?.truncate(r);
    let gv = lex_slice.growth_vector()?;
    let mut class_total = vec![0usize; nvars];
    for m in &ascending {
        class_total[m.min_var()?] += 1;
    }
    let target: Vec<usize> = (0..nvars)
        .map(|i| class_total[i] - gv.0[i] as usize)
        .collect();

    struct Sweep<'a> {
        ascending: &'a [Monomial],
        target: &'a [usize],
        left: Vec<Vec<usize>>,
        nodes: usize,
        cap: usize,
        out: Vec<Vec<bool>>,
    }

    impl Sweep<'_> {
        fn go(&mut self, k: usize, taken: &mut Vec<bool>, counts: &mut Vec<usize>) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::Resource {
                    what: format!("slice sweep exceeded {} nodes", self.cap),
                    partial: self.out.len(),
                });
            }
            let feasible = (0..counts.len()).all(|i| {
                counts[i] <= self.target[i] && counts[i] + self.left[k][i] >= self.target[i]
            });
            if !feasible {
                return Ok(());
            }
            if k == self.ascending.len() {
                self.out.push(taken.clone());
                return Ok(());
            }
            let m = &self.ascending[k];
            let class = m.min_var()?;
            let closed = m.inverse_borel_moves().iter().all(|x| {
                let idx = self.ascending.iter().position(|y| y == x).unwrap();
                taken[idx]
            });
            if closed && counts[class] < self.target[class] {
                taken[k] = true;
                counts[class] += 1;
                self.go(k + 1, taken, counts)?;
                counts[class] -= 1;
                taken[k] = false;
            }
            self.go(k + 1, taken, counts)
        }
    }

    // left[k][i]: members of class i at positions >= k
    let mut left = vec![vec![0usize; nvars]; ascending.len() + 1];
    for k in (0..ascending.len()).rev() {
        left[k] = left[k + 1].clone();
        left[k][ascending[k].min_var()?] += 1;
    }
    let mut sweep = Sweep {
        ascending: &ascending,
        target: &target,
        left,
        nodes: 0,
        cap: node_cap,
        out: Vec::new(),
    };
    sweep.go(0, &mut vec![false; ascending.len()], &mut vec![0; nvars])?;

    let mut ideals = Vec::new();
    for taken in sweep.out {
        let terms: Vec<Monomial> = ascending
            .iter()
            .zip(&taken)
            .filter(|(_, &t)| !t)
            .map(|(m, _)| m.clone())
            .collect();
        let slice = DegreeSlice::new(nvars, r, terms)?;
        if slice.ek_expand()?.len() as i64 == q_next {
            ideals.push(slice.to_ideal().saturate()?.ideal);
        }
    }
    ideals.sort_by(MonomialIdeal::canonical_cmp);
    ideals.dedup();
    Ok(ideals)
}

/// Census members' degree-`m` slices, in census order.
pub fn census_slices(census: &[MonomialIdeal], m: u32) -> Vec<DegreeSlice> {
    census.iter().map(|i| i.truncate(m)).collect()
}
