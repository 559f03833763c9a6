//! Commutative polynomials in `x_1..x_n, xi_1..xi_n`: the associated graded
//! ring, where principal symbols live.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::monomial::{push_factors, ExponentPair};
use super::polynomial::render_sum;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolPoly {
    n: usize,
    terms: BTreeMap<ExponentPair, Rational>,
}

impl SymbolPoly {
    pub fn zero(n: usize) -> Self {
        SymbolPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentPair, Rational)>,
    {
        let mut p = SymbolPoly::zero(n);
        for (m, c) in terms {
            p.accumulate(m, c);
        }
        p
    }

    fn accumulate(&mut self, m: ExponentPair, c: Rational) {
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentPair, &Rational)> {
        self.terms.iter().rev()
    }

    /// Commutative product.
    pub fn mul(&self, other: &SymbolPoly) -> Result<SymbolPoly> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = SymbolPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.add(mb), ca * cb);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SymbolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = render_sum(self.terms().map(|(m, c)| {
            let mut s = String::new();
            push_factors(&mut s, "x", m.a());
            push_factors(&mut s, "xi", m.b());
            (s, c)
        }));
        f.write_str(&rendered)
    }
}
