//! Acceptance criteria 1-10. Each test prints one line with its verdict and
//! wall time (visible with `--nocapture`).

use std::path::Path;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weyl_core::corpus::load_dir;
use weyl_core::filtration::{
    interleave_width, GoodFiltrationSpec, LeftIdealPresentation, TruncationParams,
};
use weyl_core::hilbert::{filtration_dimension, hilbert_function, module_dimension, DimConfig};
use weyl_core::lab::{
    bernstein_corpus, binomial_count, check_factorial_identity, check_recursion, check_vanishing,
    enumerate_count, independence_rank, product_rule_suite, submodule_monotonicity, Verdict,
};
use weyl_core::parser::{parse, parse_list, parse_polynomial, print};
use weyl_core::rational::{binomial, factorial, frac};
use weyl_core::{Degree, DiffOp, ExponentPair, Monomial, Polynomial, Rational};

fn report(criterion: u32, what: &str, start: Instant, limit: Option<Duration>) {
    let elapsed = start.elapsed();
    println!(
        "criterion {:>2}: PASS  {:<48} {:.3} s",
        criterion,
        what,
        elapsed.as_secs_f64()
    );
    if let Some(limit) = limit {
        assert!(
            elapsed < limit,
            "criterion {} took {:?}, limit {:?}",
            criterion,
            elapsed,
            limit
        );
    }
}

fn f_set() -> Vec<Polynomial> {
    ["x1", "x1^2 - 2", "x1^3 + x1 + 1"]
        .iter()
        .map(|s| parse_polynomial(s, 1).unwrap())
        .collect()
}

fn corpus_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn criterion_01_product_rule() {
    let start = Instant::now();
    let mut total = 0;
    for (n, seed) in [(1, 11), (2, 12), (3, 13)] {
        let reports = product_rule_suite(n, seed, 200).unwrap();
        assert_eq!(reports.len(), 200);
        for r in &reports {
            assert!(r.holds(), "{:?}", r);
        }
        total += reports.len();
    }
    report(
        1,
        &format!("d_i f = f d_i + df/dx_i on {} random cases", total),
        start,
        Some(Duration::from_secs(5)),
    );
}

fn alpha_factorial(alpha: &[u32]) -> Rational {
    Rational::from_integer(alpha.iter().map(|&a| factorial(a)).product())
}

#[test]
fn criterion_02_normal_form_basis() {
    let start = Instant::now();
    let mut cases = 0;
    for n in 1..=3usize {
        let r = parse_polynomial("3/2*x1 + 1", n).unwrap();
        for k in 0..=4 {
            for alpha in weyl_core::weyl::exponents_of_degree(n, k) {
                let d_alpha = DiffOp::monomial(
                    ExponentPair::new(&vec![0; n], &alpha),
                    Rational::from_integer(1.into()),
                );
                let op = DiffOp::from_polynomial(&r).mul(&d_alpha).unwrap();
                let x_alpha = Polynomial::monomial(
                    n,
                    Monomial::new(alpha.clone()),
                    Rational::from_integer(1.into()),
                );
                assert_eq!(
                    op.apply(&x_alpha).unwrap(),
                    r.scale(&alpha_factorial(&alpha)),
                    "alpha = {:?}",
                    alpha
                );
                cases += 1;
            }
        }
    }
    // a nonzero normal form acts nonzero on some monomial of degree <= its order
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(1..=3usize);
        let terms: Vec<(ExponentPair, Rational)> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let e: Vec<u32> = (0..2 * n).map(|_| rng.gen_range(0..=3)).collect();
                (
                    ExponentPair::from_concat(e),
                    frac(rng.gen_range(1..=7), rng.gen_range(1..=3)),
                )
            })
            .collect();
        let p = DiffOp::from_terms(n, terms);
        assert!(!p.is_zero());
        let order = p.order_degree().finite().unwrap();
        let acts = (0..=order).any(|k| {
            weyl_core::weyl::exponents_of_degree(n, k)
                .into_iter()
                .any(|beta| {
                    let x = Polynomial::monomial(
                        n,
                        Monomial::new(beta),
                        Rational::from_integer(1.into()),
                    );
                    !p.apply(&x).unwrap().is_zero()
                })
        });
        assert!(acts, "{} acts as zero", p);
    }
    report(
        2,
        &format!("apply(r d^a, x^a) = r a! on {} exponents", cases),
        start,
        None,
    );
}

#[test]
fn criterion_03_vanishing() {
    let start = Instant::now();
    let p = TruncationParams::default();
    let mut cases = 0;
    for f in f_set() {
        for s in 1..=4 {
            for t in 0..s {
                let r = check_vanishing(&f, s, t, &p).unwrap();
                assert_eq!(r.verdict, Verdict::Pass, "{:?}", r);
                assert!(r.stabilized, "{:?}", r);
                if t >= 1 {
                    assert!(check_recursion(&f, s, t).unwrap().holds());
                }
                cases += 1;
            }
        }
    }
    report(
        3,
        &format!("f^s d^t z = 0 for s > t, {} cases", cases),
        start,
        Some(Duration::from_secs(10)),
    );
}

#[test]
fn criterion_04_factorial_identity() {
    let start = Instant::now();
    let p = TruncationParams::default();
    for f in f_set() {
        for t in 0..=3 {
            let r = check_factorial_identity(&f, t, &p).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{:?}", r);
            assert!(r.stabilized);
        }
    }
    report(4, "f^t d^t z = (-1)^t t! f'^t z, f'^t z != 0", start, None);
}

#[test]
fn criterion_05_independence() {
    let start = Instant::now();
    let p = TruncationParams::default();
    for (n, h) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        for t in 0..=5 {
            let r = independence_rank(n, h, t, &p).unwrap();
            let expected = binomial_count(h as u32, t);
            assert_eq!(expected, enumerate_count(h as u32, t));
            assert_eq!(
                BigUint::from(r.rank),
                expected,
                "n = {}, h = {}, t = {}",
                n,
                h,
                t
            );
            assert_eq!(r.verdict, Verdict::Pass);
        }
    }
    report(5, "rank of d^alpha z equals C(t+h, h)", start, None);
}

#[test]
fn criterion_06_module_dimension() {
    let start = Instant::now();
    let c = DimConfig::default();
    for (n, t_max) in [(1usize, 12u32), (2, 12), (3, 8)] {
        let gens: Vec<String> = (1..=n).map(|i| format!("d{}", i)).collect();
        let ideal = LeftIdealPresentation::new(n, parse_list(&gens.join(","), n).unwrap()).unwrap();
        let fit = module_dimension(&ideal, &c).unwrap();
        assert_eq!(fit.degree, Degree::Finite(n as u32));
        assert!(fit.window_stabilized());
        let samples = hilbert_function(&ideal, 0, t_max, &c.params).unwrap();
        for s in samples {
            assert_eq!(
                BigUint::from(s.value),
                binomial(s.t as u64 + n as u64, n as u64),
                "n = {}, t = {}",
                n,
                s.t
            );
            assert!(s.stabilized);
        }
    }
    for n in 1..=2usize {
        let fit = module_dimension(&LeftIdealPresentation::zero(n), &c).unwrap();
        assert_eq!(fit.degree, Degree::Finite(2 * n as u32));
    }
    report(
        6,
        "d = n for (d_1..d_n), d = 2n for I = 0",
        start,
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_07_bernstein_corpus() {
    let start = Instant::now();
    let entries = load_dir(&corpus_dir()).unwrap();
    let nonzero: Vec<_> = entries.iter().filter(|e| e.name != "unit").collect();
    assert!(nonzero.len() >= 10);
    for required in ["x1", "euler", "d1_d2", "x1_d2", "free_n1", "free_n2"] {
        assert!(
            entries.iter().any(|e| e.name == required),
            "corpus lacks {}",
            required
        );
    }
    let results = bernstein_corpus(&entries, &DimConfig::default()).unwrap();
    for r in &results {
        assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", r.name, r.notes);
        if r.zero_module {
            continue;
        }
        let d = r.degree().unwrap() as usize;
        assert!(r.n <= d && d <= 2 * r.n, "{}: d = {}", r.name, d);
        assert!(r.stabilized(), "{}", r.name);
    }
    report(
        7,
        &format!("n <= d <= 2n on {} corpus modules", results.len()),
        start,
        None,
    );
}

#[test]
fn criterion_08_interleaving() {
    let start = Instant::now();
    let p = TruncationParams::default();
    let c = DimConfig::default();
    let d1 = LeftIdealPresentation::new(1, parse_list("d1", 1).unwrap()).unwrap();
    let gamma = GoodFiltrationSpec::standard(d1.clone());
    assert_eq!(
        interleave_width(&gamma, &gamma, 8, &p).unwrap().width,
        Some(0)
    );
    let shifted = GoodFiltrationSpec::new(d1, vec![DiffOp::one(1)], vec![2]).unwrap();
    assert_eq!(
        interleave_width(&gamma, &shifted, 8, &p).unwrap().width,
        Some(2)
    );

    let ideal = LeftIdealPresentation::new(2, parse_list("d1, d2", 2).unwrap()).unwrap();
    let gamma = GoodFiltrationSpec::standard(ideal.clone());
    let omega =
        GoodFiltrationSpec::new(ideal, vec![DiffOp::one(2), DiffOp::x(2, 0)], vec![0, 0]).unwrap();
    let w = interleave_width(&gamma, &omega, 8, &p).unwrap();
    assert!(w.width.is_some_and(|w| w <= 2), "{:?}", w);
    let dg = filtration_dimension(&gamma, &c).unwrap().degree;
    let dw = filtration_dimension(&omega, &c).unwrap().degree;
    assert_eq!(dg, dw);
    report(
        8,
        "interleaving widths 0, 2 and <= 2; equal degrees",
        start,
        None,
    );
}

#[test]
fn criterion_09_submodules() {
    let start = Instant::now();
    let c = DimConfig::default();
    let mut pairs = 0;
    for e in load_dir(&corpus_dir()).unwrap() {
        for p in &e.subs {
            let r = submodule_monotonicity(&e.ideal, p, &c).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", e.name, r);
            assert!(r.d_sub <= r.d_full);
            pairs += 1;
        }
    }
    // the spec examples
    let ideal = LeftIdealPresentation::new(2, parse_list("d1, d2", 2).unwrap()).unwrap();
    let r = submodule_monotonicity(&ideal, &DiffOp::x(2, 0), &c).unwrap();
    assert_eq!((r.d_sub, r.d_full), (Degree::Finite(2), Degree::Finite(2)));
    let r = submodule_monotonicity(&LeftIdealPresentation::zero(1), &DiffOp::x(1, 0), &c).unwrap();
    assert_eq!((r.d_sub, r.d_full), (Degree::Finite(2), Degree::Finite(2)));
    assert!(pairs >= 5);
    report(
        9,
        &format!("d_sub <= d_full on {} corpus pairs", pairs),
        start,
        None,
    );
}

#[test]
fn criterion_10_parser_round_trip() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=3usize);
        let terms: Vec<(ExponentPair, Rational)> = (0..rng.gen_range(0..=5))
            .map(|_| {
                let e: Vec<u32> = (0..2 * n).map(|_| rng.gen_range(0..=3)).collect();
                (
                    ExponentPair::from_concat(e),
                    frac(rng.gen_range(-20..=20), rng.gen_range(1..=9)),
                )
            })
            .collect();
        let p = DiffOp::from_terms(n, terms);
        let text = print(&p);
        let back = parse(&text, n).unwrap();
        assert_eq!(back, p, "{}", text);
        assert_eq!(print(&back), text);
    }
    assert_eq!(print(&parse("d1*x1^2", 1).unwrap()), "x1^2*d1 + 2*x1");
    report(
        10,
        "parse(print(p)) = p on 1000 random operators",
        start,
        None,
    );
}
