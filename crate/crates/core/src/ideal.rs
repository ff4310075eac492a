//! Monomial ideals, strongly stable (Borel-fixed, characteristic 0) tests, degree
//! slices and their Eliahou–Kervaire expansion.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::hilbert::HilbertPolynomial;
use crate::monomial::{count_monomials, monomials_of_degree, Monomial};
use crate::order::TermOrder;

/// Canonical generator order: ascending degree, then descending degrevlex.
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| TermOrder::DegRevLex.cmp_unchecked(b, a))
}

/// A monomial ideal stored by its minimal generators in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Result of [`MonomialIdeal::saturate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Saturation {
    pub ideal: MonomialIdeal,
    /// The saturation is the unit ideal: some generator was a pure power of `x0`.
    pub degenerate: bool,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::Dimension(format!(
                "generator {g} has {} variables, expected {nvars}",
                g.nvars()
            )));
        }
        Ok(Self::from_gens_unchecked(nvars, gens))
    }

    pub(crate) fn from_gens_unchecked(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(canonical_cmp);
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        // After sorting by degree, a divisor always precedes its multiples.
        for g in gens {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Strongly stable test on generators: every Borel move of a generator stays in the ideal.
    pub fn is_borel_fixed(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.borel_moves().iter().all(|m| self.contains(m)))
    }

    /// All degree-`m` monomials of the ideal.
    pub fn truncate(&self, m: u32) -> DegreeSlice {
        let terms = monomials_of_degree(self.nvars, m)
            .into_iter()
            .filter(|t| self.contains(t))
            .collect();
        DegreeSlice::from_terms_unchecked(self.nvars, m, terms)
    }

    /// `H_{S/I}(t)` by complement counting.
    pub fn hilbert_function(&self, t: u32) -> u64 {
        let inside = monomials_of_degree(self.nvars, t)
            .iter()
            .filter(|m| self.contains(m))
            .count() as u64;
        count_monomials(self.nvars, t) - inside
    }

    pub fn hilbert_function_upto(&self, t_max: u32) -> Vec<u64> {
        (0..=t_max).map(|t| self.hilbert_function(t)).collect()
    }

    /// Hilbert polynomial of `S/I`. Borel ideals use the growth-vector formula at the
    /// top generator degree; anything else is interpolated from the Hilbert function.
    pub fn hilbert_polynomial(&self) -> Result<HilbertPolynomial> {
        let n = self.nvars as u32 - 1;
        let ambient = HilbertPolynomial::binomial(n as i64, n);
        if self.gens.is_empty() {
            return Ok(ambient);
        }
        if self.is_unit() {
            return Ok(HilbertPolynomial::zero());
        }
        if !self.is_borel_fixed() {
            return self.interpolated_hilbert_polynomial();
        }
        let m = self.max_generator_degree().unwrap();
        let gv = self.truncate(m).growth_vector()?;
        let mut q = HilbertPolynomial::zero();
        for (i, &v) in gv.0.iter().enumerate() {
            let term = HilbertPolynomial::binomial(i as i64 - m as i64, i as u32);
            for _ in 0..v {
                q = q.add(&term);
            }
        }
        Ok(ambient.sub(&q))
    }

    fn interpolated_hilbert_polynomial(&self) -> Result<HilbertPolynomial> {
        let n = self.nvars - 1;
        let start = self.max_generator_degree().unwrap_or(0);
        let window = n + 2;
        let confirm = 3;
        let cap = start + (n as u32 + 1) * start.max(1) + 24;
        let values: Vec<i64> = (0..=cap).map(|t| self.hilbert_function(t) as i64).collect();
        let diffs_vanish = |t0: usize| {
            // the (n+1)-th forward difference over n+2 points
            let mut row: Vec<i64> = values[t0..t0 + window].to_vec();
            for _ in 0..=n {
                row = row.windows(2).map(|w| w[1] - w[0]).collect();
            }
            row.iter().all(|&d| d == 0)
        };
        for t0 in start as usize..values.len().saturating_sub(window + confirm) {
            if (t0..=t0 + confirm).all(diffs_vanish) {
                // Newton forward formula anchored at t0.
                let mut p = HilbertPolynomial::zero();
                let mut row: Vec<i64> = values[t0..t0 + window].to_vec();
                for k in 0..=n {
                    let coeff = row[0];
                    let basis = HilbertPolynomial::binomial(-(t0 as i64), k as u32);
                    let scaled = scale(&basis, coeff);
                    p = p.add(&scaled);
                    row = row.windows(2).map(|w| w[1] - w[0]).collect();
                }
                return Ok(p);
            }
        }
        Err(Error::NotStabilized(format!(
            "Hilbert function of ({self}) is not polynomial on any window below degree {cap}"
        )))
    }

    /// Saturation of a Borel-fixed ideal by stripping `x0` from the generators.
    pub fn saturate(&self) -> Result<Saturation> {
        if !self.is_borel_fixed() {
            return Err(Error::Unsupported(format!(
                "saturation by x0-stripping needs a Borel-fixed ideal, got ({self})"
            )));
        }
        let pure_x0 = self
            .gens
            .iter()
            .any(|g| g.exponents()[1..].iter().all(|&e| e == 0));
        if pure_x0 {
            return Ok(Saturation {
                ideal: MonomialIdeal::unit(self.nvars),
                degenerate: true,
            });
        }
        let gens = self.gens.iter().map(|g| g.strip(&[0])).collect();
        Ok(Saturation {
            ideal: MonomialIdeal::from_gens_unchecked(self.nvars, gens),
            degenerate: false,
        })
    }

    pub fn is_saturated(&self) -> Result<bool> {
        Ok(self.saturate()?.ideal == *self)
    }

    /// Evaluate the generators at `(1, 1, x2, ..., xn)`.
    pub fn x0x1_saturation(&self) -> Result<MonomialIdeal> {
        if self.nvars <= 3 {
            return Err(Error::Dimension(format!(
                "x0,x1-saturation needs n > 2, got n = {}",
                self.nvars - 1
            )));
        }
        let gens = self.gens.iter().map(|g| g.strip(&[0, 1])).collect();
        Ok(MonomialIdeal::from_gens_unchecked(self.nvars, gens))
    }

    /// Castelnuovo–Mumford regularity of a Borel-fixed ideal (top generator degree).
    pub fn regularity(&self) -> Result<u32> {
        if !self.is_borel_fixed() {
            return Err(Error::Unsupported(format!(
                "regularity rule needs a Borel-fixed ideal, got ({self})"
            )));
        }
        Ok(self.max_generator_degree().unwrap_or(0))
    }

    /// Comma-separated monomials; `0` or empty text is the zero ideal.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(MonomialIdeal::zero(nvars));
        }
        let mut gens = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let m = Monomial::parse(part, nvars).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: pos + offset,
                    msg,
                },
                e => e,
            })?;
            gens.push(m);
            offset += part.len() + 1;
        }
        Ok(Self::from_gens_unchecked(nvars, gens))
    }

    /// Canonical ordering of ideals: lexicographic on the canonical generator lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.gens.iter().zip(&other.gens) {
            let c = canonical_cmp(a, b);
            if c != Ordering::Equal {
                return c;
            }
        }
        self.gens.len().cmp(&other.gens.len())
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(ToString::to_string).collect()
    }
}

fn scale(p: &HilbertPolynomial, c: i64) -> HilbertPolynomial {
    let c = num_rational::BigRational::from_integer(c.into());
    HilbertPolynomial::from_coeffs_unchecked(p.coeffs().iter().map(|a| a * &c).collect())
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Counts of a slice's monomials by minimal variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GrowthVector(pub Vec<u64>);

/// A set of distinct monomials of one degree, kept sorted descending under degrevlex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeSlice {
    nvars: usize,
    degree: u32,
    terms: Vec<Monomial>,
}

impl DegreeSlice {
    pub fn new(nvars: usize, degree: u32, terms: Vec<Monomial>) -> Result<Self> {
        for t in &terms {
            if t.nvars() != nvars {
                return Err(Error::Dimension(format!(
                    "{t} has {} variables, expected {nvars}",
                    t.nvars()
                )));
            }
            if t.degree() != degree {
                return Err(Error::Dimension(format!(
                    "{t} has degree {}, expected {degree}",
                    t.degree()
                )));
            }
        }
        Ok(Self::from_terms_unchecked(nvars, degree, terms))
    }

    pub(crate) fn from_terms_unchecked(
        nvars: usize,
        degree: u32,
        mut terms: Vec<Monomial>,
    ) -> Self {
        TermOrder::DegRevLex.sort_desc(&mut terms);
        terms.dedup();
        DegreeSlice {
            nvars,
            degree,
            terms,
        }
    }

    /// `[m1, m2, ...]` or a bare comma-separated list; the degree is read off the terms.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(t);
        let ideal_like: Vec<Monomial> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|p| Monomial::parse(p, nvars))
                .collect::<Result<_>>()?
        };
        let degree = ideal_like.first().map(Monomial::degree).unwrap_or(0);
        let len = ideal_like.len();
        let s = Self::new(nvars, degree, ideal_like)?;
        if s.len() != len {
            return Err(Error::parse(0, "repeated monomial in slice"));
        }
        Ok(s)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms
            .binary_search_by(|t| TermOrder::DegRevLex.cmp_unchecked(m, t))
            .is_ok()
    }

    /// Closed under elementary Borel moves.
    pub fn is_borel_closed(&self) -> bool {
        let set: HashSet<&Monomial> = self.terms.iter().collect();
        self.terms
            .iter()
            .all(|t| t.borel_moves().iter().all(|m| set.contains(m)))
    }

    /// `{ t * x_l : t in slice, l <= min(t) }`; needs a Borel-closed slice.
    pub fn ek_expand(&self) -> Result<DegreeSlice> {
        if !self.is_borel_closed() {
            return Err(Error::Precondition(
                "Eliahou–Kervaire expansion needs a Borel-closed slice".into(),
            ));
        }
        let mut out = Vec::new();
        for t in &self.terms {
            let top = if t.is_one() {
                self.nvars - 1
            } else {
                t.min_var()?
            };
            for l in 0..=top {
                out.push(t.mul_var(l));
            }
        }
        Ok(Self::from_terms_unchecked(self.nvars, self.degree + 1, out))
    }

    /// Multiply every member by every variable.
    pub fn plain_expand(&self) -> DegreeSlice {
        let set: BTreeSet<Monomial> = self
            .terms
            .iter()
            .flat_map(|t| (0..self.nvars).map(move |i| t.mul_var(i)))
            .collect();
        Self::from_terms_unchecked(self.nvars, self.degree + 1, set.into_iter().collect())
    }

    pub(crate) fn ek_expand_or_plain(&self) -> DegreeSlice {
        self.ek_expand().unwrap_or_else(|_| self.plain_expand())
    }

    pub fn growth_vector(&self) -> Result<GrowthVector> {
        let mut v = vec![0u64; self.nvars];
        for t in &self.terms {
            v[t.min_var()?] += 1;
        }
        Ok(GrowthVector(v))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_gens_unchecked(self.nvars, self.terms.clone())
    }

    /// The members sorted descending under `order`.
    pub fn sorted_by(&self, order: &TermOrder) -> Vec<Monomial> {
        let mut t = self.terms.clone();
        order.sort_desc(&mut t);
        t
    }
}

impl fmt::Display for DegreeSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}
