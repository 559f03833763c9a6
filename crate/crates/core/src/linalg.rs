//! Exact rational row reduction.
//!
//! [`row_reduce`] is the dense reference routine. [`Echelon`] is the sparse,
//! incremental variant used by the filtration engine: rows are inserted one
//! at a time and reduced against the existing pivots, so the pivot set after
//! any prefix of insertions spans exactly the rows inserted so far.

use std::collections::HashMap;
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduced {
    pub rref: Vec<Vec<Rational>>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form with the leftmost nonzero entry as pivot.
pub fn row_reduce(matrix: &[Vec<Rational>]) -> RowReduced {
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / m[r][c].clone();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    RowReduced {
        rref: m,
        rank: r,
        pivots,
    }
}

/// Sparse vector: entries sorted by ascending column key, no zero values.
pub type SparseVec<K> = Vec<(K, Rational)>;

/// `a - f * b` for sparse vectors.
fn axpy<K: Ord + Clone>(a: &[(K, Rational)], f: &Rational, b: &[(K, Rational)]) -> SparseVec<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0.clone(), -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0.clone(), v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon basis over sparse rows with columns ordered by `K`.
///
/// Every pivot row has leading coefficient 1 and a distinct leading column.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Hash + Clone> {
    pivots: HashMap<K, SparseVec<K>>,
}

impl<K: Ord + Hash + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            pivots: HashMap::new(),
        }
    }
}

impl<K: Ord + Hash + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns `true` if it enlarged the span.
    pub fn insert(&mut self, mut row: SparseVec<K>) -> bool {
        while let Some((lead, c)) = row.first() {
            match self.pivots.get(lead) {
                Some(p) => {
                    let f = c.clone();
                    row = axpy(&row, &f, p);
                }
                None => {
                    let inv = Rational::one() / c.clone();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    let key = row[0].0.clone();
                    self.pivots.insert(key, row);
                    return true;
                }
            }
        }
        false
    }

    /// Canonical remainder: the unique vector congruent to `row` modulo the
    /// span that vanishes on every pivot column.
    pub fn reduce(&self, row: &[(K, Rational)]) -> SparseVec<K> {
        let mut row = row.to_vec();
        let mut i = 0;
        while i < row.len() {
            if let Some(p) = self.pivots.get(&row[i].0) {
                let f = row[i].1.clone();
                row = axpy(&row, &f, p);
            } else {
                i += 1;
            }
        }
        row
    }

    pub fn contains(&self, row: &[(K, Rational)]) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn is_pivot(&self, key: &K) -> bool {
        self.pivots.contains_key(key)
    }

    pub fn pivot_rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.pivots.values()
    }

    /// Pivot rows whose leading column satisfies `keep`, fully reduced and
    /// sorted by leading column.
    pub fn reduced_rows<F>(&self, keep: F) -> Vec<SparseVec<K>>
    where
        F: Fn(&K) -> bool,
    {
        let mut rows: Vec<SparseVec<K>> = self
            .pivots
            .iter()
            .filter(|(k, _)| keep(k))
            .map(|(_, row)| {
                let mut out = vec![row[0].clone()];
                out.extend(self.reduce(&row[1..]));
                out
            })
            .collect();
        rows.sort_by(|a, b| a[0].0.cmp(&b[0].0));
        rows
    }
}
