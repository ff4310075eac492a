//! Acceptance checks. Prints one PASS/FAIL line per criterion and fails if any check does.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use dgin::census::census_slices;
use dgin::components::max_hilbert_function;
use dgin::grassmann::{
    apply_gl, draw_matrix, ideal_hilbert_function, initial_extensor, initial_ideal,
};
use dgin::hilbert::HilbertPolynomial;
use dgin::monomial::all_monomials;
use dgin::{
    component_lower_bound, dd_compare, enumerate_borel, generic_initial_extensor, gin_ideal,
    gotzmann_number, DdMethod, DdVerdict, DegreeSlice, ExtensorTerm, HomogeneousPolynomial,
    Monomial, MonomialIdeal, Subspace, TermOrder,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn hp(s: &str) -> HilbertPolynomial {
    s.parse().unwrap()
}

fn ideal(s: &str, nvars: usize) -> MonomialIdeal {
    MonomialIdeal::parse(s, nvars).unwrap()
}

fn weight() -> TermOrder {
    "weight:1,2,9,12".parse().unwrap()
}

const ORDERS: [&str; 4] = ["lex", "deglex", "degrevlex", "weight:1,2,9,12"];

// Expected saturations of the maximal 7t-5 terms, variables highest first.
const B1: &str = "x3^3, x3^2*x2, x3*x2^2, x3^2*x1, x2^5";
const B2: &str = "x3^2, x3*x2^3, x2^4";
const B3: &str =
    "x3^3, x3^2*x2^2, x3*x2^3, x3^2*x2*x1, x3*x2^2*x1, x3^2*x1^2, x3*x2*x1^2, x3*x1^3, x2^7";
const B4: &str = "x3^3, x3^2*x2, x3*x2^2, x3^2*x1^2, x3*x2*x1^2, x2^6";
const LEX: &str = "x3, x2^8, x2^7*x1^9";

// The 3t+2 census.
const C1: &str = "x3, x2^4, x1^2*x2^3";
const C2: &str = "x3^2, x2*x3, x1*x3, x2^4, x1*x2^3";
const C3: &str = "x3^2, x2*x3, x2^3, x1^2*x3";
const C4: &str = "x3^2, x2*x3, x2^3, x1*x2^2";

fn canonical(list: &[&str]) -> BTreeSet<String> {
    list.iter().map(|s| ideal(s, 4).to_string()).collect()
}

fn maximal_saturations(p: &str, order: &TermOrder) -> BTreeSet<String> {
    let rep = component_lower_bound(&hp(p), 3, order).unwrap();
    rep.maximal
        .iter()
        .map(|&i| rep.census[i].to_string())
        .collect()
}

/// `H_{S/I}(t)` by listing the monomials of degree `t` outside `I`.
fn standard_monomials(i: &MonomialIdeal, t: u32) -> u64 {
    all_monomials(i.nvars(), t, &TermOrder::DegRevLex)
        .iter()
        .filter(|m| !i.generators().iter().any(|g| g.divides(m)))
        .count() as u64
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Growth vector forced by `q(t) = Σ v_i C(t-m+i, i)`: `v_i` is the coefficient of
/// `w^(n-i)` in `(1-z)^(n+1) Σ_k q(m+k) z^k` truncated at `z^n`, with `z = 1-w`.
fn forced_growth_vector(p: &HilbertPolynomial, n: usize, m: u32) -> Vec<u64> {
    let q = |k: usize| -> i64 {
        let t = m as u64 + k as u64;
        binom(t + n as u64, n as u64) as i64 - p.evaluate(t as i64).unwrap()
    };
    let sign = |j: usize| if j.is_multiple_of(2) { 1 } else { -1 };
    let c: Vec<i64> = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|j| sign(j) * binom(n as u64 + 1, j as u64) as i64 * q(k - j))
                .sum()
        })
        .collect();
    (0..=n)
        .map(|i| {
            let l = n - i;
            let w: i64 = (l..=n)
                .map(|k| c[k] * binom(k as u64, l as u64) as i64)
                .sum();
            (sign(l) * w) as u64
        })
        .collect()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let census = enumerate_borel(&hp("7t-5"), 3).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure!(census.len() == 112, "found {} ideals", census.len());
    let distinct: BTreeSet<_> = census.iter().map(|i| i.to_string()).collect();
    ensure!(distinct.len() == 112, "duplicates in census");
    for i in &census {
        ensure!(i.is_borel_fixed(), "({i}) is not Borel-fixed");
        ensure!(i.is_saturated().unwrap(), "({i}) is not saturated");
        ensure!(
            i.hilbert_polynomial().unwrap() == hp("7t-5"),
            "({i}) has the wrong polynomial"
        );
    }
    ensure!(took < Duration::from_secs(300), "took {took:?}");
    Ok(format!(
        "112 saturated Borel ideals for 7t-5 in P^3 in {took:.2?}"
    ))
}

fn criterion_2() -> Check {
    let r = gotzmann_number(&hp("7t-5")).map_err(|e| e.to_string())?;
    ensure!(r == 16, "got {r}");
    Ok("Gotzmann number of 7t-5 is 16".into())
}

fn criterion_3() -> Check {
    let drl = maximal_saturations("7t-5", &TermOrder::DegRevLex);
    ensure!(
        drl == canonical(&[B1, B2, B3, B4]),
        "degrevlex maximal: {drl:?}"
    );
    let w = maximal_saturations("7t-5", &weight());
    ensure!(w == canonical(&[B1, B2]), "weight maximal: {w:?}");
    let lex_seg = canonical(&[LEX]);
    for o in [TermOrder::DegLex, TermOrder::Lex] {
        let got = maximal_saturations("7t-5", &o);
        ensure!(got == lex_seg, "{o} maximal: {got:?}");
    }
    Ok("degrevlex {b1,b2,b3,b4}, weight {b1,b2}, deglex and lex {lex segment}".into())
}

fn criterion_4() -> Check {
    let w = component_lower_bound(&hp("7t-5"), 3, &weight()).map_err(|e| e.to_string())?;
    let lex_sat = w.lex.x0x1_saturation().unwrap();
    for &i in &w.maximal {
        ensure!(
            w.census[i].x0x1_saturation().unwrap() != lex_sat,
            "({}) shares the lex x0,x1-saturation",
            w.census[i]
        );
    }
    ensure!(
        w.bound_refined == Some(3),
        "weight refined bound {:?}",
        w.bound_refined
    );
    let d = component_lower_bound(&hp("7t-5"), 3, &TermOrder::DegRevLex).unwrap();
    ensure!(
        d.bound_refined.is_none(),
        "degrevlex refined bound {:?}",
        d.bound_refined
    );
    Ok(format!(
        "weight: basic {} refined 3; degrevlex: basic {} refined unset",
        w.bound_basic, d.bound_basic
    ))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let rep =
        component_lower_bound(&hp("3t+2"), 3, &TermOrder::DegRevLex).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let got: BTreeSet<String> = rep.census.iter().map(|i| i.to_string()).collect();
    ensure!(got == canonical(&[C1, C2, C3, C4]), "census {got:?}");
    let max: Vec<String> = rep
        .maximal
        .iter()
        .map(|&i| rep.census[i].to_string())
        .collect();
    ensure!(max == [ideal(C4, 4).to_string()], "maximal {max:?}");
    for (i, t) in rep.terms.iter().enumerate() {
        let v = dd_compare(t, &rep.terms[rep.maximal[0]], DdMethod::Sorted).unwrap();
        ensure!(
            matches!(v, DdVerdict::Less | DdVerdict::Equal),
            "term {i} not below b4"
        );
    }
    ensure!(took < Duration::from_secs(5), "took {took:?}");
    Ok(format!("4 ideals for 3t+2, b4 is the maximum, {took:.2?}"))
}

fn criterion_6() -> Check {
    let gens: Vec<HomogeneousPolynomial> = ["x2^2", "x1*x2 + x0^2"]
        .iter()
        .map(|s| HomogeneousPolynomial::parse(s, 3).unwrap())
        .collect();
    let cases = [
        (TermOrder::DegRevLex, "x2^2, x1*x2, x1^3", 3),
        (TermOrder::DegLex, "x2^2, x1*x2, x0^2*x2, x1^4", 4),
    ];
    for (order, want, reg) in cases {
        let want = ideal(want, 3);
        for seed in 0..20 {
            let g = gin_ideal(&gens, &order, seed, Some(6), 8).map_err(|e| e.to_string())?;
            ensure!(g == want, "{order} seed {seed}: ({g})");
            ensure!(
                g.regularity().unwrap() == reg,
                "{order} regularity of ({g})"
            );
        }
    }
    Ok(
        "degrevlex (x2^2, x1*x2, x1^3) reg 3, deglex (x2^2, x1*x2, x0^2*x2, x1^4) reg 4, 20 seeds"
            .into(),
    )
}

fn criterion_7() -> Check {
    let v = Subspace::parse("x2^2; x0*x2; x1*x2 + x1^2", 3).map_err(|e| e.to_string())?;
    let o = TermOrder::DegRevLex;
    let init = initial_extensor(&v, &o).unwrap().wedge_string();
    ensure!(init == "x2^2∧x1*x2∧x0*x2", "in = {init}");
    for seed in 0..20 {
        let gin = generic_initial_extensor(&v, &o, seed, 8)
            .map_err(|e| e.to_string())?
            .wedge_string();
        ensure!(gin == "x2^2∧x1*x2∧x1^2", "seed {seed}: gin = {gin}");
    }
    Ok("in = x2^2∧x1*x2∧x0*x2, gin = x2^2∧x1*x2∧x1^2".into())
}

fn verdict_all(a: &ExtensorTerm, b: &ExtensorTerm) -> Result<DdVerdict, String> {
    let v = dd_compare(a, b, DdMethod::Sorted).unwrap();
    for m in DdMethod::ALL {
        let w = dd_compare(a, b, m).unwrap();
        ensure!(w == v, "{m:?} says {w}, sorted says {v} for {a} vs {b}");
    }
    Ok(v)
}

fn random_slice(rng: &mut ChaCha8Rng, pool: &[Monomial], q: usize, d: u32) -> DegreeSlice {
    let terms: Vec<Monomial> = pool.choose_multiple(rng, q).cloned().collect();
    DegreeSlice::new(4, d, terms).unwrap()
}

fn criterion_8_methods() -> Check {
    let mut pairs = 0;
    for p in ["7t-5", "3t+2"] {
        for o in ORDERS {
            let rep = component_lower_bound(&hp(p), 3, &o.parse().unwrap()).unwrap();
            for i in 0..rep.terms.len() {
                for j in i + 1..rep.terms.len() {
                    verdict_all(&rep.terms[i], &rep.terms[j])?;
                    pairs += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut comparable = 0;
    for k in 0..1000 {
        let d = rng.gen_range(2..=5);
        let order: TermOrder = ORDERS[k % 4].parse().unwrap();
        let pool = all_monomials(4, d, &order);
        let q = rng.gen_range(1..pool.len());
        let a = random_slice(&mut rng, &pool, q, d);
        // Every other pair is a one-term perturbation, so comparable pairs are common.
        let b = if k % 2 == 0 {
            random_slice(&mut rng, &pool, q, d)
        } else {
            let mut terms = a.terms().to_vec();
            let fresh: Vec<&Monomial> = pool.iter().filter(|m| !a.contains(m)).collect();
            if let Some(new) = fresh.choose(&mut rng) {
                let at = rng.gen_range(0..terms.len());
                terms[at] = (*new).clone();
            }
            DegreeSlice::new(4, d, terms).unwrap()
        };
        let v = verdict_all(
            &ExtensorTerm::new(a, order.clone()).unwrap(),
            &ExtensorTerm::new(b, order).unwrap(),
        )?;
        if v != DdVerdict::Incomparable {
            comparable += 1;
        }
    }
    Ok(format!(
        "four methods agree on {pairs} census pairs and 1000 random pairs ({comparable} comparable)"
    ))
}

fn criterion_8_poset() -> Check {
    let le = |a: &ExtensorTerm, b: &ExtensorTerm| {
        matches!(
            dd_compare(a, b, DdMethod::Sorted).unwrap(),
            DdVerdict::Less | DdVerdict::Equal
        )
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pools: Vec<Vec<ExtensorTerm>> = Vec::new();
    for o in ORDERS {
        let rep = component_lower_bound(&hp("7t-5"), 3, &o.parse().unwrap()).unwrap();
        pools.push(rep.terms);
        let order: TermOrder = o.parse().unwrap();
        let all = all_monomials(4, 2, &order);
        let q = 4;
        pools.push(
            (0..60)
                .map(|_| {
                    ExtensorTerm::new(random_slice(&mut rng, &all, q, 2), order.clone()).unwrap()
                })
                .collect(),
        );
    }
    let mut triples = 0;
    let mut chains = 0;
    for pool in &pools {
        for _ in 0..2500 {
            let [a, b, c] = [0; 3].map(|_| pool.choose(&mut rng).unwrap());
            triples += 1;
            ensure!(le(a, a), "not reflexive at {a}");
            if le(a, b) && le(b, a) {
                ensure!(a.terms() == b.terms(), "not antisymmetric: {a}, {b}");
            }
            if le(a, b) && le(b, c) {
                chains += 1;
                ensure!(le(a, c), "not transitive: {a}, {b}, {c}");
            }
        }
    }
    Ok(format!(
        "{triples} random triples, {chains} chains, no violations"
    ))
}

fn persistence_pairs(p: &str, order: &TermOrder) -> Result<usize, String> {
    let rep = component_lower_bound(&hp(p), 3, order).unwrap();
    let next: Vec<ExtensorTerm> = census_slices(&rep.census, rep.r + 1)
        .into_iter()
        .map(|s| ExtensorTerm::new(s, order.clone()).unwrap())
        .collect();
    let mut n = 0;
    for i in 0..rep.terms.len() {
        for j in 0..rep.terms.len() {
            let at_r = dd_compare(&rep.terms[i], &rep.terms[j], DdMethod::Sorted).unwrap();
            let at_next = dd_compare(&next[i], &next[j], DdMethod::Sorted).unwrap();
            ensure!(
                at_r == at_next,
                "{p} {order}: ({}) vs ({}) is {at_r} in degree {} but {at_next} after",
                rep.census[i],
                rep.census[j],
                rep.r
            );
            n += 1;
        }
    }
    Ok(n)
}

fn criterion_8_persistence() -> Check {
    let mut pairs = 0;
    for p in ["7t-5", "3t+2", "4t", "2t+2"] {
        pairs += persistence_pairs(p, &TermOrder::DegRevLex)?;
    }
    for p in ["4", "5", "6"] {
        for o in ORDERS {
            pairs += persistence_pairs(p, &o.parse().unwrap())?;
        }
    }
    Ok(format!(
        "{pairs} ordered census pairs keep their verdict from r to r+1"
    ))
}

fn criterion_8_growth() -> Check {
    let mut members = 0;
    for p in ["7t-5", "3t+2", "4t", "2t+2", "6"] {
        let poly = hp(p);
        let census = enumerate_borel(&poly, 3).unwrap();
        let r = gotzmann_number(&poly).unwrap() as u32;
        for m in [r, r + 1] {
            let want = forced_growth_vector(&poly, 3, m);
            for (i, s) in census.iter().zip(census_slices(&census, m)) {
                let got = s.growth_vector().unwrap().0;
                ensure!(
                    got == want,
                    "{p}: ({i}) in degree {m} has {got:?}, expected {want:?}"
                );
                members += 1;
            }
        }
    }
    Ok(format!(
        "{members} census slices match the growth vector forced by p and m"
    ))
}

fn random_subspace(rng: &mut ChaCha8Rng) -> Subspace {
    loop {
        let nvars = rng.gen_range(3..=4);
        let d = rng.gen_range(2..=3);
        let pool = all_monomials(nvars, d, &TermOrder::DegRevLex);
        let q = rng.gen_range(1..=4.min(pool.len() - 1));
        let basis: Vec<HomogeneousPolynomial> = (0..q)
            .map(|_| {
                let k = rng.gen_range(1..=3);
                let terms = pool.choose_multiple(rng, k).map(|m| {
                    let c = rng.gen_range(1..=5) * if rng.gen() { 1 } else { -1 };
                    (m.clone(), BigRational::from_integer(BigInt::from(c)))
                });
                HomogeneousPolynomial::new(nvars, terms.collect::<Vec<_>>()).unwrap()
            })
            .collect();
        if let Ok(v) = Subspace::new(basis) {
            return v;
        }
    }
}

fn criterion_8_gin() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let mut strict = 0;
    for k in 0..50 {
        let v = random_subspace(&mut rng);
        let order: TermOrder = match k % 3 {
            0 => TermOrder::DegRevLex,
            1 => TermOrder::DegLex,
            _ => TermOrder::Lex,
        };
        let init = initial_extensor(&v, &order).unwrap();
        let gin = generic_initial_extensor(&v, &order, k, 8).map_err(|e| e.to_string())?;
        ensure!(gin.is_borel(), "gin {gin} of subspace {k} is not Borel");
        match dd_compare(&init, &gin, DdMethod::Sorted).unwrap() {
            DdVerdict::Less => strict += 1,
            DdVerdict::Equal => {}
            v => return Err(format!("subspace {k}: in {init} is {v} to gin {gin}")),
        }
    }
    Ok(format!(
        "50 random subspaces: gin Borel, in ≺≺ gin ({strict} strict)"
    ))
}

fn criterion_8_hilbert() -> Check {
    let rep = component_lower_bound(&hp("7t-5"), 3, &TermOrder::DegRevLex).unwrap();
    let mh = max_hilbert_function(&rep).map_err(|e| e.to_string())?;
    ensure!(
        mh.violations.is_empty(),
        "7t-5 violations {:?}",
        mh.violations
    );
    let mut comparable = mh.comparable_pairs;

    let small = component_lower_bound(&hp("3t+2"), 3, &TermOrder::DegRevLex).unwrap();
    let mh = max_hilbert_function(&small).unwrap();
    ensure!(
        mh.violations.is_empty(),
        "3t+2 violations {:?}",
        mh.violations
    );
    comparable += mh.comparable_pairs;

    let (b1, b4) = (ideal(C1, 4), ideal(C4, 4));
    let h = |i: &MonomialIdeal| (0..5).map(|t| standard_monomials(i, t)).collect::<Vec<_>>();
    let (h1, h4) = (h(&b1), h(&b4));
    ensure!(h4 == [1, 4, 8, 11, 14], "H(b4) = {h4:?}");
    ensure!(h1 == [1, 3, 6, 10, 14], "H(b1) = {h1:?}");
    let term = |i: &MonomialIdeal| ExtensorTerm::new(i.truncate(5), TermOrder::DegRevLex).unwrap();
    ensure!(
        dd_compare(&term(&b1), &term(&b4), DdMethod::Sorted).unwrap() == DdVerdict::Less,
        "b1 is not below b4"
    );
    ensure!(
        h1.iter().zip(&h4).all(|(a, b)| a <= b),
        "H(b1) not below H(b4)"
    );
    for i in [&b1, &b4] {
        ensure!(
            i.hilbert_function_upto(4) == h(i),
            "library H disagrees on ({i})"
        );
    }
    Ok(format!(
        "{comparable} comparable pairs ordered; H(b4) = {h4:?} >= H(b1) = {h1:?}"
    ))
}

fn criterion_8_dimensions() -> Check {
    let p = hp("3t+2");
    let census = enumerate_borel(&p, 3).unwrap();
    let m = gotzmann_number(&p).unwrap() as u32;
    let top = m + 3;
    let o = TermOrder::DegRevLex;
    let mut checks = 0;
    for (k, j) in census.iter().enumerate() {
        let g = draw_matrix(4, 0xd1a, k as u64);
        let v = apply_gl(&g, &Subspace::from_slice(&j.truncate(m)).unwrap()).unwrap();
        let iv = ideal_hilbert_function(&v, top).unwrap();
        let init = initial_extensor(&v, &o).unwrap().slice().to_ideal();
        let gin = generic_initial_extensor(&v, &o, k as u64, 4)
            .map_err(|e| e.to_string())?
            .slice()
            .to_ideal();
        let in_iv = initial_ideal(v.basis(), &o, top).unwrap();
        let gin_iv = gin_ideal(v.basis(), &o, k as u64, Some(top), 4).map_err(|e| e.to_string())?;
        for t in m..=top {
            let dims = [
                iv[(t - m) as usize],
                init.truncate(t).len() as u64,
                gin.truncate(t).len() as u64,
                in_iv.truncate(t).len() as u64,
                gin_iv.truncate(t).len() as u64,
            ];
            ensure!(
                dims.iter().all(|&d| d == dims[0]),
                "({j}) degree {t}: dims I_V, (in), (gin), in(I_V), gin(I_V) = {dims:?}"
            );
            checks += 1;
        }
    }
    Ok(format!(
        "{checks} (ideal, degree) checks over degrees {m}..{top}"
    ))
}

fn criterion_9() -> Check {
    let commands: &[&[&str]] = &[
        &["gotzmann", "--poly", "7t-5", "--n", "3"],
        &["enumerate", "--n", "3", "--poly", "3t+2"],
        &[
            "maximal",
            "--n",
            "3",
            "--poly",
            "7t-5",
            "--order",
            "weight:1,2,9,12",
        ],
        &["bound", "--n", "3", "--poly", "7t-5"],
        &["report", "--n", "3", "--poly", "3t+2"],
        &["conjecture", "--n", "3", "--poly", "3t+2"],
        &[
            "compare",
            "--n",
            "2",
            "--a",
            "[x2^2, x1*x2, x1^2]",
            "--b",
            "[x2^2, x1*x2, x0*x2]",
        ],
        &[
            "gin",
            "--n",
            "2",
            "--gens",
            "x2^2; x1*x2 + x0^2",
            "--upto",
            "5",
            "--seed",
            "3",
        ],
        &[
            "ginext",
            "--n",
            "2",
            "--subspace",
            "x2^2; x0*x2; x1*x2 + x1^2",
            "--seed",
            "3",
        ],
        &["support", "--n", "2", "--subspace", "x2^2; x1*x2 + x0^2"],
        &[
            "hilb",
            "--n",
            "3",
            "--ideal",
            "x3^2, x2*x3, x2^3, x1*x2^2",
            "--upto",
            "6",
        ],
        &[
            "hilb",
            "--n",
            "2",
            "--subspace",
            "x2^2; x1*x2 + x0^2",
            "--upto",
            "5",
        ],
    ];
    let run = |args: &[&str]| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = dgin::cli::run(
            std::iter::once("dgin").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, out, err)
    };
    let mut runs = 0;
    for format in ["text", "json"] {
        for cmd in commands {
            let args: Vec<&str> = ["--format", format]
                .iter()
                .chain(cmd.iter())
                .copied()
                .collect();
            let first = run(&args);
            let second = run(&args);
            ensure!(
                first.0 == 0,
                "{args:?} exited {}: {}",
                first.0,
                String::from_utf8_lossy(&first.2)
            );
            ensure!(first == second, "{args:?} differs between runs");
            runs += 1;
        }
    }
    Ok(format!("{runs} commands byte-identical over two runs"))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1", "census count", criterion_1),
        ("2", "Gotzmann number", criterion_2),
        ("3", "maximal sets", criterion_3),
        ("4", "refined bound", criterion_4),
        ("5", "small census", criterion_5),
        ("6", "gin reproduction", criterion_6),
        ("7", "extensor correspondence", criterion_7),
        ("8a", "four-method agreement", criterion_8_methods),
        ("8b", "poset laws", criterion_8_poset),
        ("8c", "persistence", criterion_8_persistence),
        ("8d", "growth rigidity", criterion_8_growth),
        ("8e", "in below gin, gin Borel", criterion_8_gin),
        ("8f", "Hilbert function monotonicity", criterion_8_hilbert),
        ("8g", "dimension agreement", criterion_8_dimensions),
        ("9", "determinism", criterion_9),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {id:>3} {name}: {detail} [{took:.1?}]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id:>3} {name}: {detail} [{took:.1?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
