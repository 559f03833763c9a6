//! Differential operators with polynomial coefficients, stored in normal form
//! `sum c * x^a d^b` (all x-factors to the left of all d-factors).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::{push_factors, ExponentPair, Monomial};
use super::polynomial::{render_sum, Polynomial, Truncation};
use super::symbol::SymbolPoly;
use crate::error::{Error, Result};
use crate::rational::{falling, Rational};

/// A filtration degree; the zero element sits at `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{}", d),
        }
    }
}

/// Which filtration of the Weyl algebra a degree or symbol refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filtration {
    /// Total d-degree `|b|`.
    Order,
    /// Total degree `|a| + |b|`.
    Bernstein,
}

impl Filtration {
    pub fn degree_of(self, m: &ExponentPair) -> u32 {
        match self {
            Filtration::Order => m.order(),
            Filtration::Bernstein => m.bernstein(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffOp {
    n: usize,
    terms: BTreeMap<ExponentPair, Rational>,
}

impl DiffOp {
    pub fn zero(n: usize) -> Self {
        DiffOp {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(ExponentPair::one(n), c)
    }

    /// Multiplication by `x_i` (zero-based `i`).
    pub fn x(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {} out of range for n = {}", i, n);
        let mut e = vec![0; 2 * n];
        e[i] = 1;
        Self::monomial(ExponentPair::from_concat(e), Rational::one())
    }

    /// The derivation `d_i = d/dx_i` (zero-based `i`).
    pub fn d(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {} out of range for n = {}", i, n);
        let mut e = vec![0; 2 * n];
        e[n + i] = 1;
        Self::monomial(ExponentPair::from_concat(e), Rational::one())
    }

    pub fn monomial(m: ExponentPair, c: Rational) -> Self {
        let n = m.n();
        let mut op = DiffOp::zero(n);
        op.accumulate(m, c);
        op
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentPair, Rational)>,
    {
        let mut op = DiffOp::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n(), n, "term has wrong ambient dimension");
            op.accumulate(m, c);
        }
        op
    }

    /// The multiplication operator by `f`.
    pub fn from_polynomial(f: &Polynomial) -> Self {
        let n = f.n();
        DiffOp::from_terms(
            n,
            f.terms()
                .map(|(m, c)| (ExponentPair::new(m.exps(), &vec![0; n]), c.clone())),
        )
    }

    /// The coefficient polynomial when no d-factor occurs.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        if self.terms.keys().any(|m| m.order() > 0) {
            return None;
        }
        Some(Polynomial::from_terms(
            self.n,
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.a().to_vec()), c.clone())),
        ))
    }

    pub(crate) fn accumulate(&mut self, m: ExponentPair, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentPair, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &ExponentPair) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest term under the canonical order.
    pub fn leading(&self) -> Option<(&ExponentPair, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check(&self, other: &DiffOp) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &DiffOp) -> Result<DiffOp> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DiffOp) -> Result<DiffOp> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> DiffOp {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        if c.is_zero() {
            return DiffOp::zero(self.n);
        }
        DiffOp {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Ring product in normal form.
    ///
    /// Each pair of terms is combined with the exchange rule
    /// `d^b x^c = sum_k prod_i C(b_i, k_i) c_i!/(c_i - k_i)! x^(c-k) d^(b-k)`,
    /// which is the closed form of iterating `d_i x_i = x_i d_i + 1`.
    pub fn mul(&self, other: &DiffOp) -> Result<DiffOp> {
        self.check(other)?;
        let mut out = DiffOp::zero(self.n);
        for (l, cl) in &self.terms {
            for (r, cr) in &other.terms {
                let c = cl * cr;
                exchange(l, r, |m, w| {
                    out.accumulate(m, &c * Rational::from_integer(w))
                });
            }
        }
        Ok(out)
    }

    /// `[p, q] = pq - qp`.
    pub fn commutator(&self, other: &DiffOp) -> Result<DiffOp> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, k: u32) -> DiffOp {
        let mut acc = DiffOp::one(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same ambient n");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same ambient n");
            }
        }
        acc
    }

    /// Action on polynomials: `x_i` multiplies, `d_i` differentiates.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.apply_truncated(f, Truncation::OFF)
    }

    /// Like [`DiffOp::apply`], discarding result terms above the truncation bound.
    pub fn apply_truncated(&self, f: &Polynomial, trunc: Truncation) -> Result<Polynomial> {
        if self.n != f.n() {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: f.n(),
            });
        }
        let mut out = Polynomial::zero(self.n);
        for (op, c) in &self.terms {
            'term: for (m, e) in f.terms() {
                let mut w = BigInt::one();
                let mut exps = Vec::with_capacity(self.n);
                for i in 0..self.n {
                    let (mi, bi) = (m.exps()[i], op.b()[i]);
                    if mi < bi {
                        continue 'term;
                    }
                    w *= falling(mi, bi);
                    exps.push(mi - bi + op.a()[i]);
                }
                let mono = Monomial::new(exps);
                if trunc.keeps(mono.degree()) {
                    out.accumulate(mono, c * e * Rational::from_integer(w));
                }
            }
        }
        Ok(out)
    }

    pub fn degree(&self, filtration: Filtration) -> Degree {
        self.terms
            .keys()
            .map(|m| filtration.degree_of(m))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn order_degree(&self) -> Degree {
        self.degree(Filtration::Order)
    }

    pub fn bernstein_degree(&self) -> Degree {
        self.degree(Filtration::Bernstein)
    }

    /// Top-degree part under `filtration`, read in the commutative ring
    /// `k[x, xi]` with `d_i` mapped to `xi_i`.
    pub fn principal_symbol(&self, filtration: Filtration) -> Result<SymbolPoly> {
        let top = self
            .degree(filtration)
            .finite()
            .ok_or(Error::UndefinedSymbol)?;
        Ok(SymbolPoly::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|(m, _)| filtration.degree_of(m) == top)
                .map(|(m, c)| (m.clone(), c.clone())),
        ))
    }
}

/// Expands the normal-ordered product `(x^a d^b)(x^c d^e)` term by term.
fn exchange<F>(l: &ExponentPair, r: &ExponentPair, mut emit: F)
where
    F: FnMut(ExponentPair, BigInt),
{
    let n = l.n();
    let (a, b) = (l.a(), l.b());
    let (c, e) = (r.a(), r.b());
    let bounds: Vec<u32> = (0..n).map(|i| b[i].min(c[i])).collect();
    let mut k = vec![0u32; n];
    loop {
        let mut weight = BigInt::one();
        let mut exps = Vec::with_capacity(2 * n);
        for i in 0..n {
            exps.push(a[i] + c[i] - k[i]);
        }
        for i in 0..n {
            exps.push(b[i] + e[i] - k[i]);
            if k[i] > 0 {
                weight *=
                    falling(b[i], k[i]) * falling(c[i], k[i]) / crate::rational::factorial(k[i]);
            }
        }
        emit(ExponentPair::from_concat(exps), weight);

        // odometer over 0..=bounds[i]
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if k[i] < bounds[i] {
                k[i] += 1;
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = render_sum(self.terms().map(|(m, c)| {
            let mut s = String::new();
            push_factors(&mut s, "x", m.a());
            push_factors(&mut s, "d", m.b());
            (s, c)
        }));
        f.write_str(&rendered)
    }
}
