//! Properties of the filtration engine on the shipped corpus and against
//! closed-form dimension counts.

mod common;

use std::path::Path;

use common::diffop;
use proptest::prelude::*;
use weyl_core::corpus::{load_dir, CorpusEntry};
use weyl_core::filtration::{
    gamma_dim, interleave_width, monomial_basis, reduce_element, truncated_ideal_subspace,
    GoodFiltrationSpec, LeftIdealPresentation, Quotient, TruncationParams,
};
use weyl_core::linalg::row_reduce;
use weyl_core::parser::parse_list;
use weyl_core::rational::{binomial, frac};
use weyl_core::{DiffOp, Filtration, Rational, Truncation};

fn corpus() -> Vec<CorpusEntry> {
    load_dir(&Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")).unwrap()
}

fn count(n: usize, t: u32) -> usize {
    binomial(t as u64 + 2 * n as u64, 2 * n as u64)
        .try_into()
        .unwrap()
}

/// Largest step checked per ambient size; n = 3 steps grow like t^6.
fn t_cap(n: usize) -> u32 {
    if n >= 3 {
        6
    } else {
        10
    }
}

#[test]
fn gamma_dim_monotone_in_t() {
    let p = TruncationParams::default();
    for e in corpus() {
        let dims: Vec<usize> = (0..=t_cap(e.n))
            .map(|t| gamma_dim(&e.ideal, t, &p).gamma_dim)
            .collect();
        assert!(
            dims.windows(2).all(|w| w[0] <= w[1]),
            "{}: {:?}",
            e.name,
            dims
        );
    }
}

#[test]
fn slack_only_adds_relations_and_stabilizes() {
    for e in corpus() {
        let t = 3;
        let dims: Vec<usize> = (0..=4)
            .map(|s| truncated_ideal_subspace(&e.ideal, t, &TruncationParams::with_slack(s)).dim())
            .collect();
        assert!(
            dims.windows(2).all(|w| w[0] <= w[1]),
            "{}: {:?}",
            e.name,
            dims
        );
        for s in 0..=4 {
            let snap = gamma_dim(&e.ideal, t, &TruncationParams::with_slack(s));
            assert_eq!(snap.gamma_dim + snap.ideal_dim_in_bt, count(e.n, t));
        }
        let snap = gamma_dim(&e.ideal, t, &TruncationParams::with_slack(4));
        assert!(snap.stabilized, "{} did not stabilize at slack 4", e.name);
    }
}

#[test]
fn snapshot_rows_are_independent_and_in_bt() {
    for e in corpus().into_iter().filter(|e| e.n <= 2) {
        let t = 3;
        let snap = gamma_dim(&e.ideal, t, &TruncationParams::default());
        let basis = monomial_basis(e.n, t, Filtration::Bernstein, Truncation::OFF).unwrap();
        let matrix: Vec<Vec<Rational>> = snap
            .basis
            .iter()
            .map(|r| basis.iter().map(|m| r.coeff(m)).collect())
            .collect();
        for r in &snap.basis {
            assert!(r.bernstein_degree().finite().unwrap() <= t);
        }
        assert_eq!(row_reduce(&matrix).rank, snap.basis.len(), "{}", e.name);
        assert_eq!(snap.standard_monomials.len(), snap.gamma_dim);
    }
}

#[test]
fn reduction_respects_reported_members() {
    let p = TruncationParams::default();
    for e in corpus().into_iter().filter(|e| e.n <= 2) {
        let t = 3;
        let sub = truncated_ideal_subspace(&e.ideal, t, &p);
        let quotient = Quotient::build(&e.ideal, t, &p);
        let probe = parse_list("x1^2*d1 + 3, d1^3 - x1, 1/2*x1*d1", e.n).unwrap();
        for q in &probe {
            let base = quotient.reduce(q);
            for (k, member) in sub.rows.iter().enumerate() {
                let shifted = q.add(&member.scale(&frac(k as i64 + 1, 3))).unwrap();
                assert_eq!(
                    quotient.reduce(&shifted),
                    base,
                    "{}: {} + member",
                    e.name,
                    q
                );
            }
        }
    }
}

#[test]
fn zero_module_has_no_steps() {
    let p = TruncationParams::default();
    for gens in ["1", "d1*x1 - x1*d1", "x1, x1*d1 - 1"] {
        let ideal = LeftIdealPresentation::new(1, parse_list(gens, 1).unwrap()).unwrap();
        assert!(
            reduce_element(&DiffOp::one(1), &ideal, &p)
                .unwrap()
                .is_zero(),
            "{}",
            gens
        );
        for t in 0..6 {
            assert_eq!(
                gamma_dim(&ideal, t, &p).gamma_dim,
                0,
                "{} at t = {}",
                gens,
                t
            );
        }
    }
}

#[test]
fn interleaving_is_symmetric() {
    let p = TruncationParams::default();
    for e in corpus().into_iter().filter(|e| e.n <= 2) {
        let standard = GoodFiltrationSpec::standard(e.ideal.clone());
        for spec in &e.filtrations {
            let a = interleave_width(&standard, spec, 5, &p).unwrap();
            let b = interleave_width(spec, &standard, 5, &p).unwrap();
            assert_eq!(a.width, b.width, "{}", e.name);
        }
    }
}

#[test]
fn interleaving_examples() {
    let p = TruncationParams::default();
    let ideal = LeftIdealPresentation::new(2, parse_list("d1, d2", 2).unwrap()).unwrap();
    let standard = GoodFiltrationSpec::standard(ideal.clone());
    let wide =
        GoodFiltrationSpec::new(ideal, vec![DiffOp::one(2), DiffOp::x(2, 0)], vec![0, 0]).unwrap();
    let w = interleave_width(&standard, &wide, 8, &p).unwrap();
    assert_eq!(w.width, Some(1));
    assert!(w.stabilized);
}

#[test]
fn order_basis_respects_bounds() {
    let b = monomial_basis(2, 2, Filtration::Order, Truncation(Some(1))).unwrap();
    assert!(b.iter().all(|m| m.order() <= 2 && m.x_degree() <= 1));
    // (monomials of d-degree <= 2 in 2 vars) * (x-monomials of degree <= 1)
    assert_eq!(b.len(), 6 * 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Principal ideals: I ∩ B_t = B_(t-e) g because leading forms multiply,
    /// so h(t) = C(t+2n, 2n) - C(t-e+2n, 2n).
    #[test]
    fn principal_ideal_closed_form(g in (1usize..=2).prop_flat_map(|n| diffop(n, 3, 1))) {
        prop_assume!(!g.is_zero());
        let n = g.n();
        let e = g.bernstein_degree().finite().unwrap();
        let ideal = LeftIdealPresentation::principal(g).unwrap();
        for t in 0..=5u32 {
            let snap = gamma_dim(&ideal, t, &TruncationParams::default());
            let expect = count(n, t) - if t >= e { count(n, t - e) } else { 0 };
            prop_assert_eq!(snap.gamma_dim, expect);
            prop_assert!(snap.stabilized);
        }
    }
}
