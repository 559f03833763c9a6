//! Mechanical checks of the identities used in the proof of `d(M) >= n`.
//!
//! For a polynomial `f` in one variable `x_i`, the module `D / D f` satisfies
//!
//! - `d_i f = f d_i + f'` (product rule, exact in `A_n`),
//! - `f^s d_i^t z = 0` whenever `s > t` (`z` = class of 1),
//! - `f^s d_i^t = d_i f^s d_i^(t-1) - s f' f^(s-1) d_i^(t-1)` (exact in `A_n`),
//! - `f^t d_i^t z = (-1)^t t! f'^t z`, with `f'^t z != 0` for squarefree `f`.
//!
//! Membership checks reduce against the truncated ideal, so a zero remainder
//! is a certified identity. A nonzero remainder is only evidence of
//! non-membership when the truncation stabilized; otherwise the verdict is
//! inconclusive.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::corpus::CorpusEntry;
use crate::error::{Error, Result};
use crate::filtration::{
    interleave_width, reduce_element, to_row, GoodFiltrationSpec, LeftIdealPresentation, Quotient,
    TruncationParams,
};
use crate::hilbert::{filtration_dimension, module_dimension, multiplicity, DimConfig, HilbertFit};
use crate::linalg::Echelon;
use crate::rational::{binomial, factorial, frac, int, Rational};
use crate::weyl::{exponents_of_degree, Degree, DiffOp, ExponentPair, Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    /// Combined verdict: any failure wins, then any inconclusive.
    pub fn all<I: IntoIterator<Item = Verdict>>(vs: I) -> Verdict {
        vs.into_iter().max().unwrap_or(Verdict::Pass)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: &'static str,
    /// Named parameters in a fixed order.
    pub parameters: Vec<(&'static str, String)>,
    pub verdict: Verdict,
    /// Offending operator (in printed form) when the identity fails.
    pub witness: Option<String>,
    /// Whether the truncation behind a membership test stabilized.
    pub stabilized: bool,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn exact_report(
    identity: &'static str,
    parameters: Vec<(&'static str, String)>,
    difference: &DiffOp,
) -> IdentityReport {
    IdentityReport {
        identity,
        parameters,
        verdict: if difference.is_zero() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        witness: (!difference.is_zero()).then(|| difference.to_string()),
        stabilized: true,
    }
}

fn d_pow(n: usize, i: usize, t: u32) -> DiffOp {
    DiffOp::d(n, i).pow(t)
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i >= n {
        return Err(Error::InvalidInput(format!(
            "variable index {} out of range for n = {}",
            i + 1,
            n
        )));
    }
    Ok(())
}

/// `d_i f = f d_i + df/dx_i` in `A_n`; `i` is zero-based.
pub fn check_product_rule(f: &Polynomial, i: usize) -> Result<IdentityReport> {
    let n = f.n();
    check_index(n, i)?;
    let fo = DiffOp::from_polynomial(f);
    let d = DiffOp::d(n, i);
    let lhs = d.mul(&fo)?;
    let rhs = fo.mul(&d)?.add(&DiffOp::from_polynomial(&f.partial(i)))?;
    Ok(exact_report(
        "product_rule",
        vec![
            ("f", f.to_string()),
            ("i", (i + 1).to_string()),
            ("n", n.to_string()),
        ],
        &lhs.sub(&rhs)?,
    ))
}

/// Random polynomial with at most `max_terms` terms of total degree `<= max_degree`
/// and small rational coefficients.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    let terms = rng.gen_range(0..=max_terms);
    let mut f = Polynomial::zero(n);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        let c = frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        f = f
            .add(&Polynomial::monomial(n, Monomial::new(exps), c))
            .expect("same n");
    }
    f
}

/// `cases` random instances of the product rule over `A_n`, seeded.
pub fn product_rule_suite(n: usize, seed: u64, cases: usize) -> Result<Vec<IdentityReport>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<(Polynomial, usize)> = (0..cases)
        .map(|_| (random_polynomial(&mut rng, n, 4, 5), rng.gen_range(0..n)))
        .collect();
    inputs
        .par_iter()
        .map(|(f, i)| {
            let mut r = check_product_rule(f, *i)?;
            r.parameters.push(("seed", seed.to_string()));
            Ok(r)
        })
        .collect()
}

/// The variable of a nonconstant polynomial in exactly one variable.
fn univariate(f: &Polynomial) -> Result<usize> {
    match (f.sole_variable(), f.degree()) {
        (Some(i), Some(d)) if d > 0 => Ok(i),
        _ => Err(Error::InvalidInput(format!(
            "{} is not a nonconstant polynomial in one variable",
            f
        ))),
    }
}

fn membership_report(
    identity: &'static str,
    parameters: Vec<(&'static str, String)>,
    p: &DiffOp,
    ideal: &LeftIdealPresentation,
    params: &TruncationParams,
) -> Result<IdentityReport> {
    let r = reduce_element(p, ideal, params)?;
    let verdict = match (r.is_zero(), r.stabilized) {
        (true, _) => Verdict::Pass,
        (false, true) => Verdict::Fail,
        (false, false) => Verdict::Inconclusive,
    };
    Ok(IdentityReport {
        identity,
        parameters,
        verdict,
        witness: (!r.is_zero()).then(|| r.remainder.to_string()),
        stabilized: r.stabilized,
    })
}

/// `f^s d_i^t z = 0` in `D / D f` for `s > t`.
pub fn check_vanishing(
    f: &Polynomial,
    s: u32,
    t: u32,
    params: &TruncationParams,
) -> Result<IdentityReport> {
    let i = univariate(f)?;
    if s <= t {
        return Err(Error::InvalidInput(format!(
            "vanishing needs s > t, got s = {}, t = {}",
            s, t
        )));
    }
    let n = f.n();
    let fo = DiffOp::from_polynomial(f);
    let p = fo.pow(s).mul(&d_pow(n, i, t))?;
    membership_report(
        "vanishing",
        vec![
            ("f", f.to_string()),
            ("s", s.to_string()),
            ("t", t.to_string()),
            ("n", n.to_string()),
        ],
        &p,
        &LeftIdealPresentation::principal(fo)?,
        params,
    )
}

/// `f^s d^t = d f^s d^(t-1) - s f' f^(s-1) d^(t-1)` exactly, for `s, t >= 1`.
pub fn check_recursion(f: &Polynomial, s: u32, t: u32) -> Result<IdentityReport> {
    let i = univariate(f)?;
    if s == 0 || t == 0 {
        return Err(Error::InvalidInput(
            "the recursion needs s >= 1 and t >= 1".into(),
        ));
    }
    let n = f.n();
    let fo = DiffOp::from_polynomial(f);
    let fp = DiffOp::from_polynomial(&f.partial(i));
    let d = DiffOp::d(n, i);
    let lhs = fo.pow(s).mul(&d_pow(n, i, t))?;
    let first = d.mul(&fo.pow(s))?.mul(&d_pow(n, i, t - 1))?;
    let second = fp
        .mul(&fo.pow(s - 1))?
        .mul(&d_pow(n, i, t - 1))?
        .scale(&int(s as i64));
    let rhs = first.sub(&second)?;
    Ok(exact_report(
        "recursion",
        vec![
            ("f", f.to_string()),
            ("s", s.to_string()),
            ("t", t.to_string()),
            ("n", n.to_string()),
        ],
        &lhs.sub(&rhs)?,
    ))
}

/// `f^t d^t z = (-1)^t t! f'^t z` and `f'^t z != 0` in `D / D f`.
pub fn check_factorial_identity(
    f: &Polynomial,
    t: u32,
    params: &TruncationParams,
) -> Result<IdentityReport> {
    let i = univariate(f)?;
    let n = f.n();
    let fo = DiffOp::from_polynomial(f);
    let fp_t = DiffOp::from_polynomial(&f.partial(i)).pow(t);
    let sign = if t.is_multiple_of(2) { int(1) } else { int(-1) };
    let scalar = sign * Rational::from_integer(factorial(t));
    let p = fo.pow(t).mul(&d_pow(n, i, t))?.sub(&fp_t.scale(&scalar))?;
    let ideal = LeftIdealPresentation::principal(fo)?;
    let parameters = vec![
        ("f", f.to_string()),
        ("t", t.to_string()),
        ("n", n.to_string()),
    ];
    let identity = membership_report("factorial", parameters.clone(), &p, &ideal, params)?;
    if !identity.holds() {
        return Ok(identity);
    }
    let nonzero = reduce_element(&fp_t, &ideal, params)?;
    let verdict = match (nonzero.is_zero(), nonzero.stabilized) {
        (true, _) => Verdict::Fail,
        (false, true) => Verdict::Pass,
        (false, false) => Verdict::Inconclusive,
    };
    Ok(IdentityReport {
        identity: "factorial",
        parameters,
        verdict,
        witness: nonzero
            .is_zero()
            .then(|| format!("({})^{} lies in the ideal", f.partial(i), t)),
        stabilized: nonzero.stabilized,
    })
}

/// `C(t + h, h)`, the number of monomials of degree `<= t` in `h` variables.
pub fn binomial_count(h: u32, t: u32) -> BigUint {
    binomial(t as u64 + h as u64, h as u64)
}

/// The same count by listing exponent tuples.
pub fn enumerate_count(h: u32, t: u32) -> BigUint {
    if h == 0 {
        return BigUint::one();
    }
    (0..=t)
        .map(|k| BigUint::from(exponents_of_degree(h as usize, k).len()))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub n: usize,
    pub h: usize,
    pub t: u32,
    pub rank: usize,
    pub expected: BigUint,
    pub stabilized: bool,
    pub verdict: Verdict,
}

/// Rank of the classes `d^alpha z`, `alpha` supported on the first `h`
/// variables with `|alpha| <= t`, in `M = D / D(x_1, ..., x_h)`.
pub fn independence_rank(
    n: usize,
    h: usize,
    t: u32,
    params: &TruncationParams,
) -> Result<IndependenceReport> {
    let ideal = LeftIdealPresentation::monomial_prime(n, h)?;
    let q = Quotient::build(&ideal, t, params);
    let mut e = Echelon::new();
    for k in 0..=t {
        for alpha in exponents_of_degree(h, k) {
            let mut b = alpha.clone();
            b.resize(n, 0);
            let m = DiffOp::monomial(ExponentPair::new(&vec![0; n], &b), Rational::one());
            e.insert(to_row(&q.reduce(&m)));
        }
    }
    let rank = e.rank();
    let expected = binomial_count(h as u32, t);
    let counted = enumerate_count(h as u32, t) == expected;
    // truncation can only miss relations, so the true rank is at most `rank`
    // and a short rank is certain
    let verdict = match BigUint::from(rank).cmp(&expected) {
        _ if !counted => Verdict::Fail,
        std::cmp::Ordering::Less => Verdict::Fail,
        _ if !q.stabilized() => Verdict::Inconclusive,
        std::cmp::Ordering::Equal => Verdict::Pass,
        std::cmp::Ordering::Greater => Verdict::Fail,
    };
    Ok(IndependenceReport {
        n,
        h,
        t,
        rank,
        expected,
        stabilized: q.stabilized(),
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleReport {
    pub p: String,
    pub d_sub: Degree,
    pub d_full: Degree,
    pub verdict: Verdict,
}

fn degree_or_inconclusive(r: Result<HilbertFit>) -> Result<Option<Degree>> {
    match r {
        Ok(fit) => Ok(Some(fit.degree)),
        Err(Error::Inconclusive(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `d(D p) <= d(M)` for the submodule generated by the class of `p`.
pub fn submodule_monotonicity(
    ideal: &LeftIdealPresentation,
    p: &DiffOp,
    config: &DimConfig,
) -> Result<SubmoduleReport> {
    if reduce_element(p, ideal, &config.params)?.is_zero() {
        return Err(Error::InvalidInput(format!("{} vanishes in the module", p)));
    }
    let spec = GoodFiltrationSpec::new(ideal.clone(), vec![p.clone()], vec![0])?;
    let sub = degree_or_inconclusive(filtration_dimension(&spec, config))?;
    let full = degree_or_inconclusive(module_dimension(ideal, config))?;
    let (d_sub, d_full, verdict) = match (sub, full) {
        (Some(s), Some(f)) => (s, f, if s <= f { Verdict::Pass } else { Verdict::Fail }),
        (s, f) => (
            s.unwrap_or(Degree::NegInfinity),
            f.unwrap_or(Degree::NegInfinity),
            Verdict::Inconclusive,
        ),
    };
    Ok(SubmoduleReport {
        p: p.to_string(),
        d_sub,
        d_full,
        verdict,
    })
}

/// Outcome of one corpus module.
#[derive(Clone, Debug)]
pub struct CorpusResult {
    pub name: String,
    pub n: usize,
    /// `None` for a zero module or an inconclusive run.
    pub fit: Option<HilbertFit>,
    pub zero_module: bool,
    pub verdict: Verdict,
    /// Human-readable reasons for anything other than a plain pass.
    pub notes: Vec<String>,
    pub runtime: Duration,
}

impl CorpusResult {
    pub fn degree(&self) -> Option<u32> {
        self.fit.as_ref().and_then(|f| f.degree.finite())
    }

    pub fn multiplicity(&self) -> Option<Rational> {
        self.fit.as_ref().and_then(multiplicity)
    }

    pub fn stabilized(&self) -> bool {
        self.fit.as_ref().is_some_and(HilbertFit::window_stabilized)
    }
}

fn run_entry(entry: &CorpusEntry, config: &DimConfig) -> Result<CorpusResult> {
    let start = Instant::now();
    let n = entry.n;
    let mut verdicts = Vec::new();
    let mut notes = Vec::new();
    let fit = match module_dimension(&entry.ideal, config) {
        Ok(fit) => Some(fit),
        Err(Error::ZeroModule) => {
            return Ok(CorpusResult {
                name: entry.name.clone(),
                n,
                fit: None,
                zero_module: true,
                verdict: Verdict::Pass,
                notes: vec!["zero module; the inequality only concerns nonzero modules".into()],
                runtime: start.elapsed(),
            });
        }
        Err(Error::Inconclusive(why)) => {
            notes.push(why);
            verdicts.push(Verdict::Inconclusive);
            None
        }
        Err(e) => return Err(e),
    };
    if let Some(fit) = &fit {
        let d = fit.degree.finite().unwrap_or(0) as usize;
        if d < n || d > 2 * n {
            verdicts.push(Verdict::Fail);
            notes.push(format!("d = {} outside [{}, {}]", d, n, 2 * n));
        }
        if let Some(e) = entry.expect_d {
            if e as usize != d {
                verdicts.push(Verdict::Fail);
                notes.push(format!("expected d = {}, got {}", e, d));
            }
        }
        for (t, &want) in entry.expect_h.iter().enumerate() {
            if let Some(s) = fit.samples.iter().find(|s| s.t as usize == t) {
                if s.value != want {
                    verdicts.push(Verdict::Fail);
                    notes.push(format!("h({}) = {}, expected {}", t, s.value, want));
                }
            } else if fit.eval(t as u32) != int(want as i64) && t as u32 >= fit.fit_window.0 {
                verdicts.push(Verdict::Fail);
                notes.push(format!("fitted h({}) differs from expected {}", t, want));
            }
        }
        for spec in &entry.filtrations {
            match filtration_dimension(spec, config) {
                Ok(other) if other.degree == fit.degree => {}
                Ok(other) => {
                    verdicts.push(Verdict::Fail);
                    notes.push(format!(
                        "filtration degree {} differs from {}",
                        other.degree, fit.degree
                    ));
                }
                Err(Error::Inconclusive(why)) => {
                    verdicts.push(Verdict::Inconclusive);
                    notes.push(why);
                }
                Err(e) => return Err(e),
            }
        }
    }
    for p in &entry.subs {
        let r = submodule_monotonicity(&entry.ideal, p, config)?;
        if r.verdict != Verdict::Pass {
            notes.push(format!(
                "submodule {}: d_sub = {}, d_full = {}",
                r.p, r.d_sub, r.d_full
            ));
        }
        verdicts.push(r.verdict);
    }
    if let Some(h) = entry.height {
        let t = 4;
        let r = independence_rank(n, h, t, &config.params)?;
        if r.verdict != Verdict::Pass {
            notes.push(format!("independence rank {} vs {}", r.rank, r.expected));
        }
        verdicts.push(r.verdict);
    }
    let standard = GoodFiltrationSpec::standard(entry.ideal.clone());
    for spec in &entry.filtrations {
        let w = interleave_width(&standard, spec, 4, &config.params)?;
        if w.width.is_none() {
            verdicts.push(Verdict::Fail);
            notes.push("no interleaving width found up to t = 4".into());
        }
    }
    Ok(CorpusResult {
        name: entry.name.clone(),
        n,
        fit,
        zero_module: false,
        verdict: Verdict::all(verdicts),
        notes,
        runtime: start.elapsed(),
    })
}

/// Runs every entry (concurrently); results are sorted by name.
pub fn bernstein_corpus(entries: &[CorpusEntry], config: &DimConfig) -> Result<Vec<CorpusResult>> {
    if entries.is_empty() {
        return Err(Error::InvalidInput("empty corpus".into()));
    }
    let mut results: Vec<CorpusResult> = entries
        .par_iter()
        .map(|e| run_entry(e, config))
        .collect::<Result<_>>()?;
    results.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(results)
}
