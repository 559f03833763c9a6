//! Finite-dimensional data of the filtration steps of cyclic modules
//! `M = A_n / I`.
//!
//! Dimensions are taken with respect to the Bernstein filtration `B_t`
//! (operators of total degree `|a| + |b| <= t`), whose steps are finite
//! dimensional. The step `Gamma_t = B_t * z` of `M` (with `z` the class of 1)
//! is `B_t / (I ∩ B_t)`.
//!
//! `I ∩ B_t` is approximated from below: we take the span of all products
//! `m * g_j` (`m` a monomial, `g_j` a generator) of total degree at most
//! `s = t + max_j deg g_j + slack` and intersect it with `B_t`. Columns are
//! ordered by descending degree, so the intersection is exactly the set of
//! echelon rows whose leading monomial has degree `<= t`. Raising the slack
//! can only enlarge the subspace; a step is reported `stabilized` once its
//! dimension survives `stabilization_window` consecutive slack increments.
//!
//! Membership in the truncated subspace is always genuine ideal membership.
//! Non-membership is only as good as the stabilization evidence.

use std::cmp::Reverse;
use std::collections::HashSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::rational::Rational;
use crate::weyl::{exponents_of_degree, DiffOp, ExponentPair, Filtration, Truncation};

/// Column key: ascending keys run through monomials by descending degrevlex.
pub type Col = Reverse<ExponentPair>;

pub(crate) fn to_row(p: &DiffOp) -> SparseVec<Col> {
    p.terms()
        .map(|(m, c)| (Reverse(m.clone()), c.clone()))
        .collect()
}

pub(crate) fn from_row(n: usize, row: &[(Col, Rational)]) -> DiffOp {
    DiffOp::from_terms(n, row.iter().map(|(k, c)| (k.0.clone(), c.clone())))
}

/// Generators of a left ideal `I = A_n g_1 + ... + A_n g_m`; the empty list
/// presents `I = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftIdealPresentation {
    n: usize,
    generators: Vec<DiffOp>,
}

impl LeftIdealPresentation {
    pub fn new(n: usize, generators: Vec<DiffOp>) -> Result<Self> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: g.n(),
                });
            }
            if g.is_zero() {
                return Err(Error::InvalidInput(
                    "ideal generator is the zero operator".into(),
                ));
            }
        }
        Ok(LeftIdealPresentation { n, generators })
    }

    pub fn zero(n: usize) -> Self {
        LeftIdealPresentation {
            n,
            generators: Vec::new(),
        }
    }

    pub fn principal(g: DiffOp) -> Result<Self> {
        Self::new(g.n(), vec![g])
    }

    /// The left ideal generated by `x_1, ..., x_h`.
    pub fn monomial_prime(n: usize, h: usize) -> Result<Self> {
        if h > n {
            return Err(Error::InvalidInput(format!(
                "height {} exceeds n = {}",
                h, n
            )));
        }
        Self::new(n, (0..h).map(|i| DiffOp::x(n, i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[DiffOp] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(|g| g.bernstein_degree().finite())
            .max()
            .unwrap_or(0)
    }

    /// Same ambient space and the same generator set, ignoring order and repeats.
    pub fn same_presentation(&self, other: &LeftIdealPresentation) -> bool {
        self.n == other.n
            && self.generators.iter().collect::<HashSet<_>>()
                == other.generators.iter().collect::<HashSet<_>>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationParams {
    /// Extra degree budget for ideal products; `None` means max generator degree + 2.
    pub slack: Option<u32>,
    pub stabilization_window: u32,
    /// Slack increments attempted beyond the base slack before giving up.
    pub max_extra_slack: u32,
}

impl Default for TruncationParams {
    fn default() -> Self {
        TruncationParams {
            slack: None,
            stabilization_window: 2,
            max_extra_slack: 8,
        }
    }
}

impl TruncationParams {
    pub fn with_slack(slack: u32) -> Self {
        TruncationParams {
            slack: Some(slack),
            ..Self::default()
        }
    }

    pub fn slack_for(&self, ideal: &LeftIdealPresentation) -> u32 {
        self.slack.unwrap_or_else(|| ideal.max_degree() + 2)
    }
}

/// Ordered monomial basis of a filtration step: by ascending degree, and by
/// descending term order within a degree.
///
/// The order filtration needs an x-degree bound since its steps are infinite
/// dimensional otherwise.
pub fn monomial_basis(
    n: usize,
    t: u32,
    filtration: Filtration,
    trunc: Truncation,
) -> Result<Vec<ExponentPair>> {
    match filtration {
        Filtration::Bernstein => Ok((0..=t)
            .flat_map(|k| exponents_of_degree(2 * n, k))
            .map(ExponentPair::from_concat)
            .collect()),
        Filtration::Order => {
            let bound = trunc.0.ok_or(Error::UnboundedBasis)?;
            let mut out: Vec<ExponentPair> = Vec::new();
            for total in 0..=(t + bound) {
                for e in exponents_of_degree(2 * n, total) {
                    let m = ExponentPair::from_concat(e);
                    if m.order() <= t && m.x_degree() <= bound {
                        out.push(m);
                    }
                }
            }
            Ok(out)
        }
    }
}

fn monomials_up_to(n: usize, deg: u32) -> impl Iterator<Item = ExponentPair> {
    (0..=deg).flat_map(move |k| {
        exponents_of_degree(2 * n, k)
            .into_iter()
            .map(ExponentPair::from_concat)
    })
}

/// Echelon basis of the products `m * g_j` with total degree `<= top`.
#[derive(Clone, Debug)]
pub(crate) struct TruncatedIdeal {
    ideal: LeftIdealPresentation,
    level: u32,
    top: u32,
    echelon: Echelon<Col>,
}

impl TruncatedIdeal {
    pub(crate) fn new(ideal: &LeftIdealPresentation, level: u32, slack: u32) -> Self {
        let mut ti = TruncatedIdeal {
            ideal: ideal.clone(),
            level,
            top: level + ideal.max_degree() + slack,
            echelon: Echelon::new(),
        };
        let n = ideal.n();
        for deg in 0..=ti.top {
            ti.add_layer(n, deg);
        }
        ti
    }

    /// Inserts all products of exact total degree `deg`.
    fn add_layer(&mut self, n: usize, deg: u32) {
        for g in &self.ideal.generators {
            let gd = g.bernstein_degree().finite().expect("nonzero generator");
            if gd > deg {
                continue;
            }
            for e in exponents_of_degree(2 * n, deg - gd) {
                let m = DiffOp::monomial(
                    ExponentPair::from_concat(e),
                    Rational::from_integer(1.into()),
                );
                let prod = m.mul(g).expect("same n");
                self.echelon.insert(to_row(&prod));
            }
        }
    }

    pub(crate) fn extend(&mut self) {
        self.top += 1;
        let n = self.ideal.n();
        let top = self.top;
        self.add_layer(n, top);
    }

    pub(crate) fn slack(&self) -> u32 {
        self.top - self.level - self.ideal.max_degree()
    }

    /// `dim (Î ∩ B_level)`.
    pub(crate) fn level_dim(&self) -> usize {
        self.echelon
            .pivot_rows()
            .filter(|r| r[0].0 .0.bernstein() <= self.level)
            .count()
    }

    pub(crate) fn reduce(&self, p: &DiffOp) -> DiffOp {
        from_row(p.n(), &self.echelon.reduce(&to_row(p)))
    }

    fn level_rows(&self) -> Vec<DiffOp> {
        let level = self.level;
        self.echelon
            .reduced_rows(|k| k.0.bernstein() <= level)
            .iter()
            .map(|r| from_row(self.ideal.n(), r))
            .collect()
    }

    fn is_level_pivot(&self, m: &ExponentPair) -> bool {
        self.echelon.is_pivot(&Reverse(m.clone()))
    }
}

/// The truncated ideal at a level, pushed through the stabilization search.
#[derive(Clone, Debug)]
pub struct Quotient {
    ideal: TruncatedIdeal,
    stabilized: bool,
}

impl Quotient {
    pub fn build(ideal: &LeftIdealPresentation, level: u32, params: &TruncationParams) -> Self {
        let mut ti = TruncatedIdeal::new(ideal, level, params.slack_for(ideal));
        let mut dim = ti.level_dim();
        let mut unchanged = 0;
        let mut extra = 0;
        while unchanged < params.stabilization_window && extra < params.max_extra_slack {
            ti.extend();
            extra += 1;
            let next = ti.level_dim();
            if next == dim {
                unchanged += 1;
            } else {
                dim = next;
                unchanged = 0;
            }
        }
        Quotient {
            stabilized: unchanged >= params.stabilization_window,
            ideal: ti,
        }
    }

    pub fn level(&self) -> u32 {
        self.ideal.level
    }

    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    pub fn slack_used(&self) -> u32 {
        self.ideal.slack()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.level_dim()
    }

    /// Normal form of `p` modulo the truncated ideal. Only meaningful for
    /// `bernstein_degree(p) <= level`.
    pub fn reduce(&self, p: &DiffOp) -> DiffOp {
        self.ideal.reduce(p)
    }
}

/// RREF basis of `Î ∩ B_t` at a fixed slack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSubspace {
    pub t: u32,
    pub slack: u32,
    /// Rows in reduced echelon form, as operators whose terms are the
    /// coordinates; sorted by leading monomial, highest first.
    pub rows: Vec<DiffOp>,
}

impl IdealSubspace {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

pub fn truncated_ideal_subspace(
    ideal: &LeftIdealPresentation,
    t: u32,
    params: &TruncationParams,
) -> IdealSubspace {
    let slack = params.slack_for(ideal);
    let ti = TruncatedIdeal::new(ideal, t, slack);
    IdealSubspace {
        t,
        slack,
        rows: ti.level_rows(),
    }
}

/// Exact description of `Gamma_t = B_t z` for `M = A_n / I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationSnapshot {
    pub t: u32,
    /// RREF rows spanning `Î ∩ B_t`.
    pub basis: Vec<DiffOp>,
    /// Non-pivot monomials of degree `<= t`; their classes form a basis of `Gamma_t`.
    pub standard_monomials: Vec<ExponentPair>,
    pub gamma_dim: usize,
    pub ideal_dim_in_bt: usize,
    pub stabilized: bool,
    pub slack_used: u32,
}

pub fn gamma_dim(
    ideal: &LeftIdealPresentation,
    t: u32,
    params: &TruncationParams,
) -> FiltrationSnapshot {
    let q = Quotient::build(ideal, t, params);
    let basis = q.ideal.level_rows();
    let standard_monomials: Vec<ExponentPair> = monomials_up_to(ideal.n(), t)
        .filter(|m| !q.ideal.is_level_pivot(m))
        .collect();
    FiltrationSnapshot {
        t,
        gamma_dim: standard_monomials.len(),
        ideal_dim_in_bt: basis.len(),
        basis,
        standard_monomials,
        stabilized: q.stabilized,
        slack_used: q.slack_used(),
    }
}

/// Dimension of `Gamma_t` without materializing the RREF basis.
pub(crate) fn gamma_dim_value(
    ideal: &LeftIdealPresentation,
    t: u32,
    params: &TruncationParams,
) -> (usize, bool) {
    let q = Quotient::build(ideal, t, params);
    let total = crate::rational::binomial(t as u64 + 2 * ideal.n() as u64, 2 * ideal.n() as u64);
    let total: usize = total.try_into().expect("basis size fits in usize");
    (total - q.ideal_dim(), q.stabilized)
}

/// Class of an operator in `Gamma_t`, `t = bernstein_degree(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedElement {
    pub level: u32,
    /// Canonical representative: vanishes on every pivot monomial.
    pub remainder: DiffOp,
    pub stabilized: bool,
    pub slack_used: u32,
}

impl ReducedElement {
    pub fn is_zero(&self) -> bool {
        self.remainder.is_zero()
    }

    /// Coordinates over `monomial_basis(n, level, Bernstein)`.
    pub fn coordinates(&self) -> Vec<Rational> {
        monomials_up_to(self.remainder.n(), self.level)
            .map(|m| self.remainder.coeff(&m))
            .collect()
    }
}

pub fn reduce_element(
    p: &DiffOp,
    ideal: &LeftIdealPresentation,
    params: &TruncationParams,
) -> Result<ReducedElement> {
    if p.n() != ideal.n() {
        return Err(Error::DimensionMismatch {
            left: ideal.n(),
            right: p.n(),
        });
    }
    let level = p.bernstein_degree().finite().unwrap_or(0);
    let q = Quotient::build(ideal, level, params);
    Ok(ReducedElement {
        level,
        remainder: q.reduce(p),
        stabilized: q.stabilized,
        slack_used: q.slack_used(),
    })
}

/// A good filtration `Gamma_t = sum_i B_{t - k_i} u_i` of `M = A_n / I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodFiltrationSpec {
    pub ideal: LeftIdealPresentation,
    pub generators: Vec<DiffOp>,
    pub shifts: Vec<u32>,
}

impl GoodFiltrationSpec {
    pub fn new(
        ideal: LeftIdealPresentation,
        generators: Vec<DiffOp>,
        shifts: Vec<u32>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput(
                "a good filtration needs at least one generator".into(),
            ));
        }
        if generators.len() != shifts.len() {
            return Err(Error::InvalidInput(format!(
                "{} generators but {} shifts",
                generators.len(),
                shifts.len()
            )));
        }
        if let Some(g) = generators.iter().find(|g| g.n() != ideal.n()) {
            return Err(Error::DimensionMismatch {
                left: ideal.n(),
                right: g.n(),
            });
        }
        Ok(GoodFiltrationSpec {
            ideal,
            generators,
            shifts,
        })
    }

    /// `Gamma_t = B_t z`.
    pub fn standard(ideal: LeftIdealPresentation) -> Self {
        let n = ideal.n();
        GoodFiltrationSpec {
            ideal,
            generators: vec![DiffOp::one(n)],
            shifts: vec![0],
        }
    }

    pub(crate) fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(|g| g.bernstein_degree().finite())
            .max()
            .unwrap_or(0)
    }

    /// Spanning set of `Gamma_t` (unreduced).
    pub(crate) fn spanning_set(&self, t: u32) -> Vec<DiffOp> {
        let n = self.ideal.n();
        let mut out = Vec::new();
        for (u, &k) in self.generators.iter().zip(&self.shifts) {
            if k > t || u.is_zero() {
                continue;
            }
            for m in monomials_up_to(n, t - k) {
                let m = DiffOp::monomial(m, Rational::from_integer(1.into()));
                out.push(m.mul(u).expect("same n"));
            }
        }
        out
    }
}

/// Echelon bases of the reduced steps `Gamma_0 ⊆ Gamma_1 ⊆ ... ⊆ Gamma_top`.
fn step_echelons(spec: &GoodFiltrationSpec, q: &Quotient, top: u32) -> Vec<Echelon<Col>> {
    let n = spec.ideal.n();
    let mut steps = Vec::with_capacity(top as usize + 1);
    let mut cur = Echelon::new();
    for j in 0..=top {
        for (u, &k) in spec.generators.iter().zip(&spec.shifts) {
            if k > j {
                continue;
            }
            for e in exponents_of_degree(2 * n, j - k) {
                let m = DiffOp::monomial(
                    ExponentPair::from_concat(e),
                    Rational::from_integer(1.into()),
                );
                let v = q.reduce(&m.mul(u).expect("same n"));
                cur.insert(to_row(&v));
            }
        }
        steps.push(cur.clone());
    }
    steps
}

/// `dim Gamma_t` for a good filtration, with the stabilization flag of the
/// underlying quotient.
pub fn filtration_step_dim(
    spec: &GoodFiltrationSpec,
    t: u32,
    params: &TruncationParams,
) -> (usize, bool) {
    let level = t + spec.max_generator_degree();
    let q = Quotient::build(&spec.ideal, level, params);
    let mut e: Echelon<Col> = Echelon::new();
    for v in spec.spanning_set(t) {
        e.insert(to_row(&q.reduce(&v)));
    }
    (e.rank(), q.stabilized)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interleaving {
    /// Smallest `w <= t_max` that works, if any.
    pub width: Option<u32>,
    pub t_max: u32,
    pub stabilized: bool,
}

fn contained(a: &Echelon<Col>, b: &Echelon<Col>) -> bool {
    a.pivot_rows().all(|r| b.contains(r))
}

/// Smallest `w` with `Gamma_j ⊆ Omega_{j+w}` and `Omega_j ⊆ Gamma_{j+w}` for
/// all `j <= t_max`; equivalently `Omega_{j-w} ⊆ Gamma_j ⊆ Omega_{j+w}`.
pub fn interleave_width(
    gamma: &GoodFiltrationSpec,
    omega: &GoodFiltrationSpec,
    t_max: u32,
    params: &TruncationParams,
) -> Result<Interleaving> {
    if !gamma.ideal.same_presentation(&omega.ideal) {
        return Err(Error::ModuleMismatch);
    }
    let top = 2 * t_max;
    let level = top
        + gamma
            .max_generator_degree()
            .max(omega.max_generator_degree());
    let q = Quotient::build(&gamma.ideal, level, params);
    let g = step_echelons(gamma, &q, top);
    let o = step_echelons(omega, &q, top);
    let width = (0..=t_max).find(|&w| {
        (0..=t_max).all(|j| {
            let (j, w) = (j as usize, w as usize);
            contained(&g[j], &o[j + w]) && contained(&o[j], &g[j + w])
        })
    });
    Ok(Interleaving {
        width,
        t_max,
        stabilized: q.stabilized,
    })
}

/// Zero vector check used by tests and the proof lab.
pub fn is_zero_coordinates(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse, parse_list};
    use crate::rational::binomial;

    fn ideal(n: usize, gens: &str) -> LeftIdealPresentation {
        LeftIdealPresentation::new(n, parse_list(gens, n).unwrap()).unwrap()
    }

    #[test]
    fn bernstein_basis_small_cases() {
        let b = monomial_basis(1, 1, Filtration::Bernstein, Truncation::OFF).unwrap();
        let names: Vec<String> = b
            .iter()
            .map(|m| DiffOp::monomial(m.clone(), crate::rational::int(1)).to_string())
            .collect();
        assert_eq!(names, ["1", "x1", "d1"]);
        assert_eq!(
            monomial_basis(2, 0, Filtration::Bernstein, Truncation::OFF)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn order_basis_needs_truncation() {
        assert_eq!(
            monomial_basis(1, 1, Filtration::Order, Truncation::OFF),
            Err(Error::UnboundedBasis)
        );
        // |b| <= 1 and |a| <= 2 in one variable: 3 * 2 monomials
        let b = monomial_basis(1, 1, Filtration::Order, Truncation(Some(2))).unwrap();
        assert_eq!(b.len(), 6);
    }

    #[test]
    fn basis_size_is_stars_and_bars() {
        for n in 1..=3usize {
            for t in 0..=4u32 {
                let len = monomial_basis(n, t, Filtration::Bernstein, Truncation::OFF)
                    .unwrap()
                    .len();
                assert_eq!(binomial(t as u64 + 2 * n as u64, 2 * n as u64), len.into());
            }
        }
    }

    #[test]
    fn truncated_subspace_examples() {
        let p0 = TruncationParams::with_slack(0);
        let sub = truncated_ideal_subspace(&ideal(1, "d1"), 2, &p0);
        assert_eq!(sub.dim(), 3);
        let names: Vec<String> = sub.rows.iter().map(|r| r.to_string()).collect();
        assert_eq!(names, ["x1*d1", "d1^2", "d1"]);
        assert_eq!(
            truncated_ideal_subspace(&LeftIdealPresentation::zero(2), 3, &p0).dim(),
            0
        );
        for slack in 1..4 {
            let sub =
                truncated_ideal_subspace(&ideal(1, "x1"), 1, &TruncationParams::with_slack(slack));
            assert_eq!(sub.dim(), 1);
            assert_eq!(sub.rows[0], DiffOp::x(1, 0));
        }
    }

    #[test]
    fn gamma_dims_of_basic_modules() {
        let p = TruncationParams::default();
        for t in 0..=8 {
            let s = gamma_dim(&ideal(1, "d1"), t, &p);
            assert_eq!(s.gamma_dim, t as usize + 1);
            assert!(s.stabilized);
            assert_eq!(
                s.standard_monomials.len() + s.ideal_dim_in_bt,
                ((t + 1) * (t + 2) / 2) as usize
            );
            let z = gamma_dim(&LeftIdealPresentation::zero(1), t, &p);
            assert_eq!(z.gamma_dim, ((t + 1) * (t + 2) / 2) as usize);
            assert_eq!(gamma_dim(&ideal(1, "1"), t, &p).gamma_dim, 0);
        }
    }

    #[test]
    fn reduce_element_examples() {
        let p = TruncationParams::default();
        let i = ideal(2, "d1, x1*d2 - 1");
        for g in i.generators() {
            assert!(reduce_element(g, &i, &p).unwrap().is_zero());
        }
        let r = reduce_element(&DiffOp::one(1), &ideal(1, "x1"), &p).unwrap();
        assert!(!r.is_zero() && r.stabilized);
        assert!(reduce_element(&DiffOp::zero(1), &ideal(1, "x1"), &p)
            .unwrap()
            .is_zero());
        let coords = r.coordinates();
        assert_eq!(coords.len(), 1);
        assert!(!is_zero_coordinates(&coords));
    }

    #[test]
    fn reduction_is_class_invariant() {
        let i = ideal(1, "x1*d1 - 1");
        let p = TruncationParams::default();
        let a = parse("d1^2*x1 + x1", 1).unwrap();
        let member = parse("d1*(x1*d1 - 1)", 1).unwrap();
        let b = a.add(&member).unwrap();
        let ra = reduce_element(&a, &i, &p).unwrap();
        let q = Quotient::build(&i, 3, &p);
        assert_eq!(q.reduce(&a), q.reduce(&b));
        assert_eq!(ra.remainder, q.reduce(&a));
    }

    #[test]
    fn syzygies_need_slack() {
        // d1 = d1*(x1*d1) - x1*d1^2 only appears through a degree-3 combination
        let i = ideal(1, "d1^2, x1*d1");
        let tight = TruncatedIdeal::new(&i, 1, 0);
        assert!(tight.reduce(&DiffOp::d(1, 0)).is_zero());
        let snap = gamma_dim(&i, 5, &TruncationParams::default());
        assert_eq!(snap.gamma_dim, 6);
    }

    #[test]
    fn filtration_dims_match_gamma_dims() {
        let i = ideal(2, "d1, x2*d2");
        let p = TruncationParams::default();
        let spec = GoodFiltrationSpec::standard(i.clone());
        for t in 0..5 {
            assert_eq!(
                filtration_step_dim(&spec, t, &p).0,
                gamma_dim(&i, t, &p).gamma_dim
            );
        }
    }

    #[test]
    fn interleaving_examples() {
        let p = TruncationParams::default();
        let i = ideal(1, "d1");
        let g = GoodFiltrationSpec::standard(i.clone());
        let o = GoodFiltrationSpec::new(i.clone(), vec![DiffOp::one(1)], vec![2]).unwrap();
        assert_eq!(interleave_width(&g, &g, 6, &p).unwrap().width, Some(0));
        assert_eq!(interleave_width(&g, &o, 6, &p).unwrap().width, Some(2));
        assert_eq!(interleave_width(&o, &g, 6, &p).unwrap().width, Some(2));
        let other = GoodFiltrationSpec::standard(ideal(1, "x1"));
        assert_eq!(
            interleave_width(&g, &other, 3, &p),
            Err(Error::ModuleMismatch)
        );
    }

    #[test]
    fn spec_validation() {
        let i = LeftIdealPresentation::zero(1);
        assert!(GoodFiltrationSpec::new(i.clone(), vec![], vec![]).is_err());
        assert!(GoodFiltrationSpec::new(i.clone(), vec![DiffOp::one(1)], vec![0, 1]).is_err());
        assert!(GoodFiltrationSpec::new(i, vec![DiffOp::one(2)], vec![0]).is_err());
        assert!(LeftIdealPresentation::new(1, vec![DiffOp::zero(1)]).is_err());
        assert!(LeftIdealPresentation::new(1, vec![DiffOp::one(2)]).is_err());
    }
}
