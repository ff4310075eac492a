//! Points of the Grassmannian as explicit subspaces of `S_m` over `ℚ`: initial and
//! generic initial extensors, the action of `GL`, Plücker supports and generic initial
//! ideals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extensor::{eisenbud_compare, ExtensorTerm};
use crate::ideal::{DegreeSlice, MonomialIdeal};
use crate::linalg::{clear_denominators, Echelon};
use crate::monomial::{all_monomials, binomial_u64, Monomial, Parser};
use crate::order::TermOrder;

/// Bound on random matrix entries.
pub const ENTRY_BOUND: i64 = 997;
/// How many times the trial count may double before giving up.
pub const MAX_DOUBLINGS: u32 = 4;
pub const DEFAULT_SUPPORT_BUDGET: u64 = 100_000;

/// A nonzero-coefficient map from degree-`m` monomials to rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousPolynomial {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

impl HomogeneousPolynomial {
    pub fn new(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        let mut degree = None;
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::Dimension(format!("{m} is not in {nvars} variables")));
            }
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(Error::Parameter(format!(
                        "polynomial is not homogeneous (degrees {d} and {})",
                        m.degree()
                    )))
                }
                _ => {}
            }
            *map.entry(m).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::Parameter("the zero polynomial has no degree".into()));
        }
        Ok(HomogeneousPolynomial {
            nvars,
            degree: degree.unwrap(),
            terms: map,
        })
    }

    pub fn monomial(m: Monomial) -> Self {
        HomogeneousPolynomial {
            nvars: m.nvars(),
            degree: m.degree(),
            terms: BTreeMap::from([(m, BigRational::one())]),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn leading_term(&self, order: &TermOrder) -> &Monomial {
        self.terms
            .keys()
            .max_by(|a, b| order.cmp_unchecked(a, b))
            .expect("nonzero polynomial")
    }

    /// Terms `c*<monomial>` joined by `+`/`-`; `c` is an integer or `p/q`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let mut p = Parser::new(text);
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            p.skip_ws();
            if p.at_end() {
                if first {
                    return Err(Error::parse(p.pos, "empty polynomial"));
                }
                break;
            }
            let mut negative = false;
            if p.eat('-') {
                negative = true;
            } else if !p.eat('+') && !first {
                return Err(Error::parse(p.pos, "expected `+` or `-`"));
            }
            first = false;
            p.skip_ws();
            let mut coeff = BigRational::one();
            let mut have_coeff = false;
            if matches!(p.peek(), Some(c) if c.is_ascii_digit()) {
                let num = p.number()?;
                let mut den = 1u64;
                if p.eat('/') {
                    let at = p.pos;
                    den = p.number()?;
                    if den == 0 {
                        return Err(Error::parse(at, "zero denominator"));
                    }
                }
                coeff = BigRational::new(BigInt::from(num), BigInt::from(den));
                have_coeff = true;
            }
            let explicit_product = p.eat('*');
            p.skip_ws();
            let m = if explicit_product || !have_coeff || p.peek() == Some('x') {
                p.monomial(nvars)?
            } else {
                Monomial::one(nvars)
            };
            if negative {
                coeff = -coeff;
            }
            terms.push((m, coeff));
        }
        Self::new(nvars, terms).map_err(|e| match e {
            Error::Parameter(msg) => Error::parse(0, msg),
            e => e,
        })
    }

    fn row(&self, index: &HashMap<Monomial, usize>) -> Vec<BigInt> {
        let mut row = vec![BigRational::zero(); index.len()];
        for (m, c) in &self.terms {
            row[index[m]] = c.clone();
        }
        clear_denominators(&row)
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(&Monomial, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| TermOrder::DegRevLex.cmp_unchecked(b.0, a.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A `q`-dimensional subspace of `S_m` given by a basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    nvars: usize,
    degree: u32,
    basis: Vec<HomogeneousPolynomial>,
}

impl Subspace {
    pub fn new(basis: Vec<HomogeneousPolynomial>) -> Result<Self> {
        let Some(first) = basis.first() else {
            return Err(Error::Parameter(
                "a subspace needs at least one basis vector".into(),
            ));
        };
        let (nvars, degree) = (first.nvars, first.degree);
        if let Some(f) = basis
            .iter()
            .find(|f| f.nvars != nvars || f.degree != degree)
        {
            return Err(Error::Dimension(format!(
                "basis vector {f} has degree {}, expected {degree}",
                f.degree
            )));
        }
        let v = Subspace {
            nvars,
            degree,
            basis,
        };
        let rank = v.echelon(&TermOrder::DegRevLex).0.rank();
        if rank != v.basis.len() {
            return Err(Error::Dimension(format!(
                "{} basis vectors span only a {rank}-dimensional space",
                v.basis.len()
            )));
        }
        Ok(v)
    }

    /// The span of a set of monomials of one degree.
    pub fn from_slice(slice: &DegreeSlice) -> Result<Self> {
        Self::new(
            slice
                .terms()
                .iter()
                .cloned()
                .map(HomogeneousPolynomial::monomial)
                .collect(),
        )
    }

    /// Semicolon-separated polynomials.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let mut basis = Vec::new();
        let mut offset = 0;
        for part in text.split(';') {
            let f = HomogeneousPolynomial::parse(part, nvars).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: pos + offset,
                    msg,
                },
                e => e,
            })?;
            basis.push(f);
            offset += part.len() + 1;
        }
        Self::new(basis)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[HomogeneousPolynomial] {
        &self.basis
    }

    /// Echelon form with columns descending under `order`, and the column monomials.
    fn echelon(&self, order: &TermOrder) -> (Echelon, Vec<Monomial>) {
        let cols = all_monomials(self.nvars, self.degree, order);
        let index: HashMap<Monomial, usize> = cols
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut e = Echelon::new(cols.len());
        for f in &self.basis {
            e.insert(f.row(&index));
        }
        (e, cols)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// The reduced row echelon basis, columns descending under `order`.
pub fn rref_basis(v: &Subspace, order: &TermOrder) -> Result<Subspace> {
    order.validate(v.nvars)?;
    let (e, cols) = v.echelon(order);
    let basis = e
        .reduced()
        .into_iter()
        .map(|(_, row)| {
            let terms = cols
                .iter()
                .zip(row)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c));
            HomogeneousPolynomial::new(v.nvars, terms)
        })
        .collect::<Result<_>>()?;
    Ok(Subspace {
        nvars: v.nvars,
        degree: v.degree,
        basis,
    })
}

/// Leading terms of the echelon basis.
pub fn initial_extensor(v: &Subspace, order: &TermOrder) -> Result<ExtensorTerm> {
    order.validate(v.nvars)?;
    let (e, cols) = v.echelon(order);
    let terms = e.pivots().map(|p| cols[p].clone()).collect();
    ExtensorTerm::new(DegreeSlice::new(v.nvars, v.degree, terms)?, order.clone())
}

/// An invertible `(n+1) x (n+1)` rational matrix; `x_i` is sent to `Σ_j g_ij x_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GlMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl GlMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        let k = entries.len();
        if k == 0 || entries.iter().any(|r| r.len() != k) {
            return Err(Error::Dimension(
                "a GL matrix must be square and nonempty".into(),
            ));
        }
        let g = GlMatrix { entries };
        if !g.is_invertible() {
            return Err(Error::Parameter("singular matrix".into()));
        }
        Ok(g)
    }

    pub fn identity(nvars: usize) -> Self {
        let entries = (0..nvars)
            .map(|i| {
                (0..nvars)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        GlMatrix { entries }
    }

    /// Entries uniform in `[-ENTRY_BOUND, ENTRY_BOUND]`, redrawn until invertible.
    pub fn random(nvars: usize, rng: &mut impl Rng) -> Self {
        loop {
            let entries = (0..nvars)
                .map(|_| {
                    (0..nvars)
                        .map(|_| {
                            BigRational::from_integer(
                                rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND).into(),
                            )
                        })
                        .collect()
                })
                .collect();
            let g = GlMatrix { entries };
            if g.is_invertible() {
                return g;
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    fn is_invertible(&self) -> bool {
        let k = self.entries.len();
        let mut e = Echelon::new(k);
        for row in &self.entries {
            e.insert(clear_denominators(row));
        }
        e.rank() == k
    }

    /// `g(f)`, substituting the linear forms into `f`.
    pub fn apply(&self, f: &HomogeneousPolynomial) -> Result<HomogeneousPolynomial> {
        let mut out = self.apply_all(std::slice::from_ref(f))?;
        Ok(out.pop().expect("one polynomial in, one out"))
    }

    /// `g` applied to each polynomial; images of shared monomials are computed once.
    pub fn apply_all(&self, fs: &[HomogeneousPolynomial]) -> Result<Vec<HomogeneousPolynomial>> {
        if let Some(f) = fs.iter().find(|f| f.nvars != self.nvars()) {
            return Err(Error::Dimension(format!(
                "matrix of size {} acting on {} variables",
                self.nvars(),
                f.nvars
            )));
        }
        // Integer arithmetic throughout: g = G / d with G integral.
        let d = self
            .entries
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let linear: Vec<IntPoly> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (Monomial::var(self.nvars(), j), c.numer() * (&d / c.denom())))
                    .collect()
            })
            .collect();
        let mut images: HashMap<Monomial, IntPoly> = HashMap::new();
        images.insert(
            Monomial::one(self.nvars()),
            IntPoly::from([(Monomial::one(self.nvars()), BigInt::one())]),
        );
        Ok(fs
            .iter()
            .map(|f| {
                let l = f
                    .terms
                    .values()
                    .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
                let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
                for (m, c) in &f.terms {
                    let scaled = c.numer() * (&l / c.denom());
                    for (t, x) in image(m, &linear, &mut images) {
                        *acc.entry(t.clone()).or_default() += x * &scaled;
                    }
                }
                let denom = l * num_traits::pow(d.clone(), f.degree as usize);
                let terms = acc
                    .into_iter()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(t, x)| (t, BigRational::new(x, denom.clone())))
                    .collect();
                HomogeneousPolynomial {
                    nvars: f.nvars,
                    degree: f.degree,
                    terms,
                }
            })
            .collect())
    }
}

type IntPoly = BTreeMap<Monomial, BigInt>;

/// `m(linear)`, memoized through `m / x_i` for the largest variable `x_i` of `m`.
fn image<'a>(
    m: &Monomial,
    linear: &[IntPoly],
    cache: &'a mut HashMap<Monomial, IntPoly>,
) -> &'a IntPoly {
    if !cache.contains_key(m) {
        let i = m.max_var().expect("the constant monomial is cached");
        let prev = m.div_var(i).expect("x_i divides m");
        let mut img = IntPoly::new();
        for (a, x) in image(&prev, linear, cache) {
            for (b, y) in &linear[i] {
                *img.entry(a.mul_var(b.max_var().expect("a variable")))
                    .or_default() += x * y;
            }
        }
        img.retain(|_, x| !x.is_zero());
        cache.insert(m.clone(), img);
    }
    &cache[m]
}

pub fn apply_gl(g: &GlMatrix, v: &Subspace) -> Result<Subspace> {
    let basis = g.apply_all(&v.basis)?;
    Ok(Subspace {
        nvars: v.nvars,
        degree: v.degree,
        basis,
    })
}

/// The random matrix of draw number `k` for `seed`, independent of scheduling.
pub fn draw_matrix(nvars: usize, seed: u64, k: u64) -> GlMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    GlMatrix::random(nvars, &mut rng)
}

/// Monte-Carlo generic initial extensor with a two-witness, Borel-closure certificate.
pub fn generic_initial_extensor(
    v: &Subspace,
    order: &TermOrder,
    seed: u64,
    trials: usize,
) -> Result<ExtensorTerm> {
    let best = certified_max(v.nvars, seed, trials, |g| {
        Ok(vec![initial_extensor(&apply_gl(g, v)?, order)?])
    })?;
    Ok(best.into_iter().next().unwrap())
}

/// Runs `draw` on successive random matrices, returns the draw-wise Eisenbud maximum once
/// it is Borel and attained at least twice.
fn certified_max(
    nvars: usize,
    seed: u64,
    trials: usize,
    draw: impl Fn(&GlMatrix) -> Result<Vec<ExtensorTerm>> + Sync,
) -> Result<Vec<ExtensorTerm>> {
    if trials < 2 {
        return Err(Error::Parameter("at least two trials are needed".into()));
    }
    let mut results: Vec<Vec<ExtensorTerm>> = Vec::new();
    let mut target = trials;
    for _ in 0..=MAX_DOUBLINGS {
        let start = results.len() as u64;
        let fresh: Vec<Vec<ExtensorTerm>> = (start..target as u64)
            .into_par_iter()
            .map(|k| draw(&draw_matrix(nvars, seed, k)))
            .collect::<Result<_>>()?;
        results.extend(fresh);

        let mut best = results[0].clone();
        for r in &results[1..] {
            if lex_cmp(r, &best)? == Ordering::Greater {
                best = r.clone();
            }
        }
        let witnesses = results.iter().filter(|r| **r == best).count();
        if witnesses >= 2 && best.iter().all(ExtensorTerm::is_borel) {
            log::debug!(
                "generic initial term certified by {witnesses} of {} draws",
                results.len()
            );
            return Ok(best);
        }
        target *= 2;
    }
    Err(Error::Genericity(format!(
        "no Borel maximum attained twice within {} draws",
        results.len()
    )))
}

fn lex_cmp(a: &[ExtensorTerm], b: &[ExtensorTerm]) -> Result<Ordering> {
    for (x, y) in a.iter().zip(b) {
        let c = eisenbud_compare(x, y)?;
        if c != Ordering::Equal {
            return Ok(c);
        }
    }
    Ok(Ordering::Equal)
}

/// Every extensor term with a nonzero Plücker coordinate, in descending Eisenbud order.
pub fn delta_support(v: &Subspace, order: &TermOrder, budget: u64) -> Result<Vec<ExtensorTerm>> {
    order.validate(v.nvars)?;
    let cols = all_monomials(v.nvars, v.degree, order);
    let q = v.dim();
    let count = binomial_u64(cols.len() as u64, q as u64);
    if count > budget {
        return Err(Error::Resource {
            what: format!("{count} candidate terms exceed the budget of {budget}"),
            partial: 0,
        });
    }
    let (e, _) = v.echelon(order);
    let rows: Vec<&[BigInt]> = e.rows().collect();
    let column = |j: usize| -> Vec<BigInt> { rows.iter().map(|r| r[j].clone()).collect() };

    fn extend(
        start: usize,
        chosen: &mut Vec<usize>,
        span: &Echelon,
        q: usize,
        ncols: usize,
        column: &dyn Fn(usize) -> Vec<BigInt>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == q {
            out.push(chosen.clone());
            return;
        }
        // leave room for the remaining choices
        for j in start..=ncols - (q - chosen.len()) {
            let mut next = span.clone();
            if next.insert(column(j)) {
                chosen.push(j);
                extend(j + 1, chosen, &next, q, ncols, column, out);
                chosen.pop();
            }
        }
    }
    let mut subsets = Vec::new();
    extend(
        0,
        &mut Vec::new(),
        &Echelon::new(q),
        q,
        cols.len(),
        &column,
        &mut subsets,
    );
    subsets
        .into_iter()
        .map(|s| {
            let terms = s.into_iter().map(|j| cols[j].clone()).collect();
            ExtensorTerm::new(DegreeSlice::new(v.nvars, v.degree, terms)?, order.clone())
        })
        .collect()
}

/// `dim (I_V)_t` for `t = m..=t_max`, where `I_V` is the ideal generated by `V`.
pub fn ideal_hilbert_function(v: &Subspace, t_max: u32) -> Result<Vec<u64>> {
    if t_max < v.degree {
        return Err(Error::Parameter(format!(
            "t_max = {t_max} is below the degree {} of the subspace",
            v.degree
        )));
    }
    let mut degrees = DegreeWalk::new(v.nvars, &TermOrder::DegRevLex);
    let mut dims = Vec::new();
    let mut e = degrees.start(v.degree, &v.basis);
    dims.push(e.rank() as u64);
    for _ in v.degree..t_max {
        e = degrees.step(&e, &[]);
        dims.push(e.rank() as u64);
    }
    Ok(dims)
}

/// Degree-by-degree echelon forms of `(I)_t = S_1 (I)_{t-1} + (new generators)`.
struct DegreeWalk {
    nvars: usize,
    order: TermOrder,
    degree: u32,
    cols: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeWalk {
    fn new(nvars: usize, order: &TermOrder) -> Self {
        DegreeWalk {
            nvars,
            order: order.clone(),
            degree: 0,
            cols: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn set_degree(&mut self, d: u32) {
        self.degree = d;
        self.cols = all_monomials(self.nvars, d, &self.order);
        self.index = self
            .cols
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
    }

    fn start(&mut self, d: u32, gens: &[HomogeneousPolynomial]) -> Echelon {
        self.set_degree(d);
        let mut e = Echelon::new(self.cols.len());
        for f in gens {
            e.insert(f.row(&self.index));
        }
        e
    }

    fn step(&mut self, prev: &Echelon, new_gens: &[HomogeneousPolynomial]) -> Echelon {
        let old_cols = std::mem::take(&mut self.cols);
        self.set_degree(self.degree + 1);
        let mut e = Echelon::new(self.cols.len());
        for row in prev.rows() {
            for i in 0..self.nvars {
                let mut next = vec![BigInt::zero(); self.cols.len()];
                for (j, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        next[self.index[&old_cols[j].mul_var(i)]] = c.clone();
                    }
                }
                e.insert(next);
            }
        }
        for f in new_gens {
            e.insert(f.row(&self.index));
        }
        e
    }

    fn leading_slice(&self, e: &Echelon) -> DegreeSlice {
        let terms = e.pivots().map(|p| self.cols[p].clone()).collect();
        DegreeSlice::from_terms_unchecked(self.nvars, self.degree, terms)
    }
}

/// Leading-term slices of the ideal generated by `gens` in degrees `lo..=hi`.
fn initial_slices(
    gens: &[HomogeneousPolynomial],
    order: &TermOrder,
    lo: u32,
    hi: u32,
) -> Result<Vec<ExtensorTerm>> {
    let nvars = gens[0].nvars;
    let mut walk = DegreeWalk::new(nvars, order);
    let of_degree = |d: u32| -> Vec<HomogeneousPolynomial> {
        gens.iter().filter(|f| f.degree == d).cloned().collect()
    };
    let mut e = walk.start(lo, &of_degree(lo));
    let mut out = vec![ExtensorTerm::new(walk.leading_slice(&e), order.clone())?];
    for d in lo + 1..=hi {
        e = walk.step(&e, &of_degree(d));
        out.push(ExtensorTerm::new(walk.leading_slice(&e), order.clone())?);
    }
    Ok(out)
}

/// The initial ideal of the ideal generated by `gens`, read off in degrees up to `bound`.
pub fn initial_ideal(
    gens: &[HomogeneousPolynomial],
    order: &TermOrder,
    bound: u32,
) -> Result<MonomialIdeal> {
    let (nvars, lo) = check_generators(gens, order)?;
    let slices = initial_slices(gens, order, lo, bound.max(lo))?;
    Ok(ideal_of_slices(nvars, &slices))
}

/// Generic initial ideal, certified degreewise up to `max(bound, generator degrees)`.
pub fn gin_ideal(
    gens: &[HomogeneousPolynomial],
    order: &TermOrder,
    seed: u64,
    bound: Option<u32>,
    trials: usize,
) -> Result<MonomialIdeal> {
    let Some(bound) = bound else {
        return Err(Error::Parameter(
            "gin_ideal needs a degree bound (for example the Gotzmann number)".into(),
        ));
    };
    let (nvars, lo) = check_generators(gens, order)?;
    let hi = bound.max(gens.iter().map(|f| f.degree).max().unwrap());
    let slices = certified_max(nvars, seed, trials, |g| {
        let moved: Vec<HomogeneousPolynomial> = g.apply_all(gens)?;
        initial_slices(&moved, order, lo, hi)
    })?;
    let ideal = ideal_of_slices(nvars, &slices);
    if !ideal.is_borel_fixed() {
        return Err(Error::Genericity(format!(
            "certified leading terms generate the non-Borel ideal ({ideal})"
        )));
    }
    Ok(ideal)
}

fn check_generators(gens: &[HomogeneousPolynomial], order: &TermOrder) -> Result<(usize, u32)> {
    let Some(first) = gens.first() else {
        return Err(Error::Parameter("no generators".into()));
    };
    if let Some(f) = gens.iter().find(|f| f.nvars != first.nvars) {
        return Err(Error::Dimension(format!(
            "{f} is not in {} variables",
            first.nvars
        )));
    }
    order.validate(first.nvars)?;
    Ok((first.nvars, gens.iter().map(|f| f.degree).min().unwrap()))
}

fn ideal_of_slices(nvars: usize, slices: &[ExtensorTerm]) -> MonomialIdeal {
    let gens = slices
        .iter()
        .flat_map(|s| s.terms().iter().cloned())
        .collect();
    MonomialIdeal::from_gens_unchecked(nvars, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensor::{dd_compare, DdMethod, DdVerdict};

    fn sub(s: &str, nvars: usize) -> Subspace {
        Subspace::parse(s, nvars).unwrap()
    }

    fn polys(s: &str, nvars: usize) -> Vec<HomogeneousPolynomial> {
        s.split(';')
            .map(|p| HomogeneousPolynomial::parse(p, nvars).unwrap())
            .collect()
    }

    #[test]
    fn polynomial_text() {
        let f = HomogeneousPolynomial::parse("x1*x2 + x0^2", 3).unwrap();
        assert_eq!(f.to_string(), "x1*x2 + x0^2");
        let g = HomogeneousPolynomial::parse("-3/6*x2^2 + 2 x1*x2 - x0*x1", 3).unwrap();
        assert_eq!(g.to_string(), "-1/2*x2^2 + 2*x1*x2 - x0*x1");
        assert_eq!(HomogeneousPolynomial::parse(&g.to_string(), 3).unwrap(), g);
        assert!(HomogeneousPolynomial::parse("x1 + x0^2", 3).is_err());
        assert!(HomogeneousPolynomial::parse("x1 - x1", 3).is_err());
        assert!(HomogeneousPolynomial::parse("1/0*x1", 3).is_err());
    }

    #[test]
    fn rank_is_checked() {
        assert!(matches!(
            Subspace::parse("x2^2; x2^2 + x1^2; x1^2", 3),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn rref_examples() {
        let v = sub("x2^2; x1*x2 + x0^2", 3);
        assert_eq!(rref_basis(&v, &TermOrder::DegRevLex).unwrap(), v);
        let w = sub("x1*x2 + x0^2 + 2*x2^2; 3*x2^2", 3);
        assert_eq!(
            rref_basis(&w, &TermOrder::DegRevLex).unwrap(),
            rref_basis(&v, &TermOrder::DegRevLex).unwrap()
        );
    }

    #[test]
    fn initial_extensor_examples() {
        let v = sub("x2^2; x1*x2 + x0^2", 3);
        for o in [TermOrder::DegRevLex, TermOrder::DegLex] {
            assert_eq!(
                initial_extensor(&v, &o).unwrap().wedge_string(),
                "x2^2∧x1*x2"
            );
        }
        let w = sub("x2^2; x0*x2; x1*x2 + x1^2", 3);
        assert_eq!(
            initial_extensor(&w, &TermOrder::DegRevLex)
                .unwrap()
                .wedge_string(),
            "x2^2∧x1*x2∧x0*x2"
        );
    }

    #[test]
    fn gl_action() {
        let v = sub("x2^2; x1*x2 + x0^2", 3);
        assert_eq!(apply_gl(&GlMatrix::identity(3), &v).unwrap(), v);
        let r = |a: i64| BigRational::from_integer(a.into());
        let diag = GlMatrix::new(vec![
            vec![r(2), r(0), r(0)],
            vec![r(0), r(3), r(0)],
            vec![r(0), r(0), r(5)],
        ])
        .unwrap();
        let mono = sub("x2^2; x1*x2", 3);
        let moved = apply_gl(&diag, &mono).unwrap();
        assert_eq!(moved.basis()[1].to_string(), "15*x1*x2");
        // upper triangular: x_i -> sum_{j >= i} g_ij x_j keeps Borel spans fixed
        let upper = GlMatrix::new(vec![
            vec![r(1), r(4), r(-2)],
            vec![r(0), r(7), r(3)],
            vec![r(0), r(0), r(1)],
        ])
        .unwrap();
        let borel = sub("x2^2; x1*x2; x1^2", 3);
        let moved = apply_gl(&upper, &borel).unwrap();
        assert_eq!(
            rref_basis(&moved, &TermOrder::DegRevLex).unwrap(),
            rref_basis(&borel, &TermOrder::DegRevLex).unwrap()
        );
        assert!(GlMatrix::new(vec![vec![r(1), r(2)], vec![r(2), r(4)]]).is_err());
    }

    #[test]
    fn generic_initial_extensor_examples() {
        let w = sub("x2^2; x0*x2; x1*x2 + x1^2", 3);
        let gin = generic_initial_extensor(&w, &TermOrder::DegRevLex, 7, 4).unwrap();
        assert_eq!(gin.wedge_string(), "x2^2∧x1*x2∧x1^2");
        let init = initial_extensor(&w, &TermOrder::DegRevLex).unwrap();
        assert_eq!(
            dd_compare(&init, &gin, DdMethod::Sorted).unwrap(),
            DdVerdict::Less
        );

        let borel = sub("x2^2; x1*x2; x0*x2", 3);
        let gin = generic_initial_extensor(&borel, &TermOrder::DegRevLex, 1, 4).unwrap();
        assert_eq!(gin.wedge_string(), "x2^2∧x1*x2∧x0*x2");
        assert!(generic_initial_extensor(&borel, &TermOrder::DegRevLex, 1, 1).is_err());
    }

    #[test]
    fn delta_support_examples() {
        let v = sub("x2^2; x1*x2 + x0^2", 3);
        let s = delta_support(&v, &TermOrder::DegRevLex, 1000).unwrap();
        let got: Vec<String> = s.iter().map(ExtensorTerm::wedge_string).collect();
        assert_eq!(got, vec!["x2^2∧x1*x2", "x2^2∧x0^2"]);
        let mono = sub("x2^2; x0*x1", 3);
        assert_eq!(
            delta_support(&mono, &TermOrder::DegLex, 1000)
                .unwrap()
                .len(),
            1
        );
        assert!(matches!(
            delta_support(&v, &TermOrder::DegRevLex, 10),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn ideal_dimensions() {
        let v = sub("x2^2; x1*x2 + x0^2", 3);
        assert_eq!(ideal_hilbert_function(&v, 5).unwrap(), vec![2, 6, 11, 17]);
        let in_i = MonomialIdeal::parse("x2^2, x1*x2, x0^2*x2, x0^4", 3).unwrap();
        for (t, d) in (2..=5).zip([2u64, 6, 11, 17]) {
            assert_eq!(in_i.truncate(t).len() as u64, d);
        }
        let mono = sub("x2^2; x1*x2", 3);
        let i = MonomialIdeal::parse("x2^2, x1*x2", 3).unwrap();
        let want: Vec<u64> = (2..=5).map(|t| i.truncate(t).len() as u64).collect();
        assert_eq!(ideal_hilbert_function(&mono, 5).unwrap(), want);
    }

    #[test]
    fn gin_ideal_examples() {
        let gens = polys("x2^2; x1*x2 + x0^2", 3);
        let gin = gin_ideal(&gens, &TermOrder::DegRevLex, 3, Some(4), 4).unwrap();
        assert_eq!(gin.to_string(), "x2^2, x1*x2, x1^3");
        let gin = gin_ideal(&gens, &TermOrder::DegLex, 3, Some(4), 4).unwrap();
        assert_eq!(gin.to_string(), "x2^2, x1*x2, x0^2*x2, x1^4");
        assert!(matches!(
            gin_ideal(&gens, &TermOrder::DegLex, 3, None, 4),
            Err(Error::Parameter(_))
        ));
        let borel = polys("x2^2; x1*x2; x1^3", 3);
        let gin = gin_ideal(&borel, &TermOrder::DegRevLex, 9, Some(4), 4).unwrap();
        assert_eq!(gin.to_string(), "x2^2, x1*x2, x1^3");
        let init = initial_ideal(&gens, &TermOrder::DegRevLex, 5).unwrap();
        assert_eq!(init.to_string(), "x2^2, x1*x2, x0^2*x2, x0^4");
    }
}
