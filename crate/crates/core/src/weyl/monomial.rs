//! Exponent vectors and the canonical term order.
//!
//! Every term container in the crate is ordered by degrevlex: total degree
//! first, then the vector whose *last* differing entry is smaller wins. For
//! differential operators the order runs over the concatenated vector
//! `(a_1..a_n, b_1..b_n)`, so `x_i` outranks `d_j` of the same degree.

use std::cmp::Ordering;

pub fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

pub fn degrevlex(lhs: &[u32], rhs: &[u32]) -> Ordering {
    debug_assert_eq!(lhs.len(), rhs.len());
    total_degree(lhs).cmp(&total_degree(rhs)).then_with(|| {
        for (l, r) in lhs.iter().zip(rhs).rev() {
            if l != r {
                return r.cmp(l);
            }
        }
        Ordering::Equal
    })
}

/// All exponent vectors of length `vars` with entries summing to `degree`,
/// in descending degrevlex order.
pub fn exponents_of_degree(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn fill(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            fill(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if vars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    fill(0, degree, &mut vec![0; vars], &mut out);
    out.sort_by(|a, b| degrevlex(b, a));
    out
}

/// Exponent vector of a commutative monomial `x^a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        total_degree(&self.0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The monomial `x^a d^b` with `a`, `b` of common length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentPair {
    exps: Vec<u32>,
}

impl ExponentPair {
    pub fn new(a: &[u32], b: &[u32]) -> Self {
        assert_eq!(
            a.len(),
            b.len(),
            "x- and d-exponents must have equal length"
        );
        let mut exps = Vec::with_capacity(2 * a.len());
        exps.extend_from_slice(a);
        exps.extend_from_slice(b);
        ExponentPair { exps }
    }

    /// Builds from the concatenated vector `(a, b)`; the length must be even.
    pub fn from_concat(exps: Vec<u32>) -> Self {
        assert!(
            exps.len().is_multiple_of(2),
            "concatenated exponent vector must have even length"
        );
        ExponentPair { exps }
    }

    pub fn one(n: usize) -> Self {
        ExponentPair {
            exps: vec![0; 2 * n],
        }
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn a(&self) -> &[u32] {
        &self.exps[..self.n()]
    }

    pub fn b(&self) -> &[u32] {
        &self.exps[self.n()..]
    }

    pub fn concat(&self) -> &[u32] {
        &self.exps
    }

    pub fn x_degree(&self) -> u32 {
        total_degree(self.a())
    }

    pub fn order(&self) -> u32 {
        total_degree(self.b())
    }

    pub fn bernstein(&self) -> u32 {
        total_degree(&self.exps)
    }

    /// Commutative product (exponent addition), as in the associated graded ring.
    pub fn add(&self, other: &ExponentPair) -> ExponentPair {
        ExponentPair {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for ExponentPair {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(&self.exps, &other.exps)
    }
}

impl PartialOrd for ExponentPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Appends `x1^2*x2` style factors to `out`, `*`-joined with what is there.
pub(crate) fn push_factors(out: &mut String, prefix: &str, exps: &[u32]) {
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(prefix);
        out.push_str(&(i + 1).to_string());
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}
