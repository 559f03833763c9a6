//! Hilbert functions `h(t) = dim Gamma_t` and the module dimension `d(M)`.
//!
//! `h` agrees with a polynomial for large `t`. We fit it with exact forward
//! differences and read the degree off the first difference that vanishes.
//! "Large" is never guessed: a fit is accepted only once the vanishing has been
//! seen on a trailing window of samples, all of them stabilized.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::filtration::{
    filtration_step_dim, gamma_dim_value, reduce_element, GoodFiltrationSpec,
    LeftIdealPresentation, TruncationParams,
};
use crate::rational::{binomial_rational, factorial, int, Rational};
use crate::weyl::{Degree, DiffOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HilbertSample {
    pub t: u32,
    pub value: usize,
    pub stabilized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFit {
    /// The samples the fit was computed from, in increasing `t`.
    pub samples: Vec<HilbertSample>,
    /// `c_0..c_d` with `p(t) = sum_j c_j * C(t, j)`; empty for the zero polynomial.
    pub binomial_coeffs: Vec<Rational>,
    pub degree: Degree,
    /// `c_d`; zero for the zero polynomial.
    pub leading: Rational,
    pub fit_window: (u32, u32),
    pub exact_on_window: bool,
}

impl HilbertFit {
    pub fn eval(&self, t: u32) -> Rational {
        let t = int(t as i64);
        self.binomial_coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * binomial_rational(&t, j as u32))
            .sum()
    }

    /// Coefficients of `p` in the power basis `1, t, t^2, ...`.
    pub fn power_coeffs(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.binomial_coeffs.len()];
        for (j, c) in self.binomial_coeffs.iter().enumerate() {
            // C(t, j) = t (t-1) ... (t-j+1) / j!
            let mut falling = vec![Rational::zero(); j + 1];
            falling[0] = int(1);
            for r in 0..j {
                for k in (0..=r + 1).rev() {
                    let shifted = if k > 0 {
                        falling[k - 1].clone()
                    } else {
                        Rational::zero()
                    };
                    falling[k] = shifted - &falling[k] * int(r as i64);
                }
            }
            let scale = c / Rational::from_integer(factorial(j as u32));
            for (k, v) in falling.iter().enumerate() {
                out[k] += v * &scale;
            }
        }
        out
    }

    pub fn all_stabilized(&self) -> bool {
        self.samples.iter().all(|s| s.stabilized)
    }

    pub fn in_window(&self) -> impl Iterator<Item = &HilbertSample> {
        let (lo, hi) = self.fit_window;
        self.samples.iter().filter(move |s| lo <= s.t && s.t <= hi)
    }

    pub fn window_stabilized(&self) -> bool {
        self.in_window().all(|s| s.stabilized)
    }
}

/// `e = c_d`, the coefficient of `C(t, d)`; equivalently `d!` times the
/// coefficient of `t^d`. Undefined for the zero polynomial.
pub fn multiplicity(fit: &HilbertFit) -> Option<Rational> {
    match fit.degree {
        Degree::NegInfinity => None,
        Degree::Finite(_) => Some(fit.leading.clone()),
    }
}

fn sample_range<F>(t_lo: u32, t_hi: u32, step: F) -> Vec<HilbertSample>
where
    F: Fn(u32) -> (usize, bool) + Sync,
{
    (t_lo..=t_hi)
        .into_par_iter()
        .map(|t| {
            let (value, stabilized) = step(t);
            HilbertSample {
                t,
                value,
                stabilized,
            }
        })
        .collect()
}

/// `h(t) = dim B_t z` for `t_lo <= t <= t_hi`.
pub fn hilbert_function(
    ideal: &LeftIdealPresentation,
    t_lo: u32,
    t_hi: u32,
    params: &TruncationParams,
) -> Result<Vec<HilbertSample>> {
    if t_lo > t_hi {
        return Err(Error::InvalidInput(format!(
            "empty range {}..={}",
            t_lo, t_hi
        )));
    }
    Ok(sample_range(t_lo, t_hi, |t| {
        gamma_dim_value(ideal, t, params)
    }))
}

/// Hilbert function of a good filtration.
pub fn filtration_hilbert_function(
    spec: &GoodFiltrationSpec,
    t_lo: u32,
    t_hi: u32,
    params: &TruncationParams,
) -> Result<Vec<HilbertSample>> {
    if t_lo > t_hi {
        return Err(Error::InvalidInput(format!(
            "empty range {}..={}",
            t_lo, t_hi
        )));
    }
    Ok(sample_range(t_lo, t_hi, |t| {
        filtration_step_dim(spec, t, params)
    }))
}

/// Exact forward-difference fit of consecutive samples.
pub fn finite_difference_fit(samples: &[HilbertSample]) -> Result<HilbertFit> {
    if samples.len() < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            got: samples.len(),
        });
    }
    if samples.windows(2).any(|w| w[1].t != w[0].t + 1) {
        return Err(Error::InvalidInput(
            "samples must have consecutive t".into(),
        ));
    }
    // table[j] = Δ^j h on the window
    let mut table: Vec<Vec<Rational>> = vec![samples.iter().map(|s| int(s.value as i64)).collect()];
    while table.last().unwrap().len() > 1 {
        let prev = table.last().unwrap();
        table.push(prev.windows(2).map(|w| &w[1] - &w[0]).collect());
    }
    let degree = table
        .iter()
        .rposition(|row| row.iter().any(|v| !v.is_zero()));
    let t_lo = samples[0].t;
    let fit_window = (t_lo, samples.last().unwrap().t);
    let Some(d) = degree else {
        return Ok(HilbertFit {
            samples: samples.to_vec(),
            binomial_coeffs: Vec::new(),
            degree: Degree::NegInfinity,
            leading: Rational::zero(),
            fit_window,
            exact_on_window: true,
        });
    };
    if samples.len() < d + 2 {
        return Err(Error::InsufficientData {
            needed: d + 2,
            got: samples.len(),
        });
    }
    // Newton form at t_lo: p(t) = sum_j Δ^j h(t_lo) C(t - t_lo, j), and
    // C(t - t_lo, j) = sum_i C(-t_lo, j - i) C(t, i) (Vandermonde).
    let shift = -int(t_lo as i64);
    let binomial_coeffs: Vec<Rational> = (0..=d)
        .map(|i| {
            (i..=d)
                .map(|j| &table[j][0] * binomial_rational(&shift, (j - i) as u32))
                .sum()
        })
        .collect();
    Ok(HilbertFit {
        samples: samples.to_vec(),
        leading: binomial_coeffs[d].clone(),
        binomial_coeffs,
        degree: Degree::Finite(d as u32),
        fit_window,
        // d + 2 samples guarantee that Δ^{d+1} has at least one entry
        exact_on_window: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimConfig {
    pub params: TruncationParams,
    /// Largest `t` ever sampled.
    pub budget: u32,
    /// Number of vanishing `(d+1)`-st differences required.
    pub window: u32,
}

impl Default for DimConfig {
    fn default() -> Self {
        DimConfig {
            params: TruncationParams::default(),
            budget: 16,
            window: 4,
        }
    }
}

/// Smallest suffix of `samples` whose fit is exact with `window` vanishing
/// top differences and only stabilized samples.
fn accept_fit(samples: &[HilbertSample], window: usize) -> Option<HilbertFit> {
    for lo in 0..samples.len() {
        let suffix = &samples[lo..];
        if suffix.len() < window + 1 || !suffix.iter().all(|s| s.stabilized) {
            continue;
        }
        if let Ok(fit) = finite_difference_fit(suffix) {
            let d = fit.degree.finite().map_or(0, |d| d as usize + 1);
            if suffix.len() >= d + window {
                return Some(fit);
            }
        }
    }
    None
}

/// Samples `step` on growing ranges `0..=t_hi` (doubling up to the budget)
/// until a fit is accepted.
pub fn fit_growing<F>(step: F, config: &DimConfig) -> Result<HilbertFit>
where
    F: Fn(u32) -> (usize, bool) + Sync,
{
    let window = config.window.max(1) as usize;
    let mut samples: Vec<HilbertSample> = Vec::new();
    let mut t_hi = 4.min(config.budget);
    loop {
        let next = samples.len() as u32;
        samples.extend(sample_range(next, t_hi, &step));
        if let Some(fit) = accept_fit(&samples, window) {
            return Ok(fit);
        }
        if t_hi >= config.budget {
            let unstable: Vec<String> = samples
                .iter()
                .filter(|s| !s.stabilized)
                .map(|s| s.t.to_string())
                .collect();
            let why = if unstable.is_empty() {
                format!(
                    "no polynomial window of length {} found for t <= {}",
                    window, t_hi
                )
            } else {
                format!("samples at t = {} did not stabilize", unstable.join(", "))
            };
            return Err(Error::Inconclusive(why));
        }
        t_hi = (t_hi * 2).min(config.budget);
    }
}

/// `d(M)` for `M = A_n / I`, with the accepted fit.
pub fn module_dimension(ideal: &LeftIdealPresentation, config: &DimConfig) -> Result<HilbertFit> {
    if reduce_element(&DiffOp::one(ideal.n()), ideal, &config.params)?.is_zero() {
        return Err(Error::ZeroModule);
    }
    fit_growing(|t| gamma_dim_value(ideal, t, &config.params), config)
}

/// Hilbert-degree fit of a good filtration of `A_n / I`.
pub fn filtration_dimension(spec: &GoodFiltrationSpec, config: &DimConfig) -> Result<HilbertFit> {
    let mut all_zero = true;
    for u in &spec.generators {
        all_zero &= reduce_element(u, &spec.ideal, &config.params)?.is_zero();
    }
    if all_zero {
        return Err(Error::ZeroModule);
    }
    fit_growing(|t| filtration_step_dim(spec, t, &config.params), config)
}
