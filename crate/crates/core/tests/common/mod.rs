//! Shared strategies and oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use weyl_core::rational::frac;
use weyl_core::{DiffOp, ExponentPair, Monomial, Polynomial, Rational};

/// A generator letter: `(is_d, index)`.
type Letter = (bool, usize);

/// Reference product by literal rewriting of words: swap commuting letters
/// into the order `x_1..x_n d_1..d_n` and replace `d_i x_i` by `x_i d_i + 1`.
/// Deliberately slow and independent of the closed exchange formula.
pub fn rewrite_mul(p: &DiffOp, q: &DiffOp) -> DiffOp {
    let n = p.n();
    let mut pending: Vec<(Vec<Letter>, Rational)> = Vec::new();
    for (l, cl) in p.terms() {
        for (r, cr) in q.terms() {
            let mut word = letters(l);
            word.extend(letters(r));
            pending.push((word, cl * cr));
        }
    }
    let mut done: BTreeMap<Vec<Letter>, Rational> = BTreeMap::new();
    while let Some((word, c)) = pending.pop() {
        match word.windows(2).position(|w| w[0] > w[1]) {
            None => *done.entry(word).or_insert_with(|| frac(0, 1)) += c,
            Some(k) => {
                let (u, v) = (word[k], word[k + 1]);
                let mut swapped = word.clone();
                swapped.swap(k, k + 1);
                pending.push((swapped, c.clone()));
                // u = d_i sits before v = x_i
                if u.0 && !v.0 && u.1 == v.1 {
                    let mut shorter = word[..k].to_vec();
                    shorter.extend_from_slice(&word[k + 2..]);
                    pending.push((shorter, c));
                }
            }
        }
    }
    DiffOp::from_terms(
        n,
        done.into_iter().map(|(word, c)| {
            let mut e = vec![0u32; 2 * n];
            for (is_d, i) in word {
                e[if is_d { n + i } else { i }] += 1;
            }
            (ExponentPair::from_concat(e), c)
        }),
    )
}

fn letters(m: &ExponentPair) -> Vec<Letter> {
    let mut w = Vec::new();
    for (i, &a) in m.a().iter().enumerate() {
        w.extend(std::iter::repeat_n((false, i), a as usize));
    }
    for (i, &b) in m.b().iter().enumerate() {
        w.extend(std::iter::repeat_n((true, i), b as usize));
    }
    w
}

pub fn coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

/// Operators with up to `terms` terms, each exponent at most `max_exp`.
pub fn diffop(n: usize, terms: usize, max_exp: u32) -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, 2 * n), coeff()),
        0..=terms,
    )
    .prop_map(move |ts| {
        DiffOp::from_terms(
            n,
            ts.into_iter()
                .map(|(e, c)| (ExponentPair::from_concat(e), c)),
        )
    })
}

pub fn polynomial(n: usize, terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), coeff()), 0..=terms).prop_map(
        move |ts| {
            ts.into_iter().fold(Polynomial::zero(n), |acc, (e, c)| {
                acc.add(&Polynomial::monomial(n, Monomial::new(e), c))
                    .unwrap()
            })
        },
    )
}

/// Ambient size together with two (or three) operators over it.
pub fn op_pair() -> impl Strategy<Value = (DiffOp, DiffOp)> {
    (1usize..=3).prop_flat_map(|n| (diffop(n, 4, 3), diffop(n, 4, 3)))
}

pub fn op_triple() -> impl Strategy<Value = (DiffOp, DiffOp, DiffOp)> {
    (1usize..=3).prop_flat_map(|n| (diffop(n, 3, 2), diffop(n, 3, 2), diffop(n, 3, 2)))
}
