//! Commutative polynomials over the rationals, the coefficient ring of the
//! operators in [`super::DiffOp`].
//!
//! A [`Truncation`] bound `N` drops every term of total degree above `N`,
//! which emulates power-series arithmetic modulo `m^(N+1)` for the finitely
//! many coefficients that are actually known.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::{push_factors, Monomial};
use crate::error::{Error, Result};
use crate::rational::{falling, is_unit_magnitude, to_literal, Rational};

/// Optional x-degree truncation bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Truncation(pub Option<u32>);

impl Truncation {
    pub const OFF: Truncation = Truncation(None);

    pub fn keeps(&self, degree: u32) -> bool {
        self.0.is_none_or(|bound| degree <= bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(n, Monomial::one(n), c)
    }

    /// The variable `x_i`, with `i` zero-based.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {} out of range for n = {}", i, n);
        Self::monomial(n, Monomial::var(n, i), Rational::one())
    }

    pub fn monomial(n: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.n(), n);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n(), n);
            p.accumulate(m, c);
        }
        p
    }

    pub(crate) fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
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
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The single variable this polynomial involves, if there is exactly one.
    pub fn sole_variable(&self) -> Option<usize> {
        let mut found = None;
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    match found {
                        None => found = Some(i),
                        Some(j) if j != i => return None,
                        _ => {}
                    }
                }
            }
        }
        found
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.mul_truncated(other, Truncation::OFF)
    }

    /// Product with every term of degree above the bound discarded.
    pub fn mul_truncated(&self, other: &Polynomial, trunc: Truncation) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Polynomial::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if trunc.keeps(m.degree()) {
                    out.accumulate(m, ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ambient n");
        }
        acc
    }

    pub fn truncate(&self, trunc: Truncation) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| trunc.keeps(m.degree()))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to `x_i` (zero-based `i`).
    pub fn partial(&self, i: usize) -> Polynomial {
        self.partial_k(i, 1)
    }

    /// k-th partial derivative with respect to `x_i`.
    pub fn partial_k(&self, i: usize, k: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e < k {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= k;
            out.accumulate(
                Monomial::new(exps),
                c * Rational::from_integer(falling(e, k)),
            );
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exps().iter().zip(point).fold(c.clone(), |acc, (&e, v)| {
                    acc * num_traits::pow(v.clone(), e as usize)
                })
            })
            .fold(Rational::zero(), |a, b| a + b)
    }
}

/// Renders a signed sum of `coefficient*factors` terms in parser syntax.
pub(crate) fn render_sum<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    let mut out = String::new();
    for (factors, c) in terms {
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        if factors.is_empty() {
            out.push_str(&to_literal(&mag));
        } else {
            if !is_unit_magnitude(&mag) {
                out.push_str(&to_literal(&mag));
                out.push('*');
            }
            out.push_str(&factors);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = render_sum(self.terms().map(|(m, c)| {
            let mut s = String::new();
            push_factors(&mut s, "x", m.exps());
            (s, c)
        }));
        f.write_str(&rendered)
    }
}
