//! Numerical Ronkin function N_f(x) = (2π)^{-n} ∫ log|f(e^{x+iθ})| dθ.
//!
//! The integrand is evaluated in factored form log|f| = M(x) + log|g(θ)|
//! with M the dominant-term log magnitude, so quadrature stays finite for
//! |x| of many log-units. Nodes where |g| drops below 1e-300 (the point
//! sits on a zero of the fiber) are discarded; more than 1% discards is an
//! error. Node values are reduced by pairwise summation in a fixed order,
//! so results do not depend on the worker count.

use crate::degeneration::DegenerationWeights;
use crate::error::{Error, Result};
use crate::laurent::{LatticePoint, LaurentPolynomial};
use crate::polytope;
use crate::tropical::Lifting;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::TAU;

const DISCARD_THRESHOLD: f64 = 1e-300;
const DISCARD_BUDGET: f64 = 0.01;

/// Quadrature scheme for the torus average.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Scheme {
    /// Tensor-product trapezoidal grid; spectrally accurate off the amoeba.
    TensorGrid { nodes_per_angle: usize },
    /// Uniform Monte Carlo with a reported standard error.
    MonteCarlo { samples: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    pub seed: u64,
}

impl QuadratureSpec {
    pub fn tensor(nodes_per_angle: usize) -> Self {
        QuadratureSpec {
            scheme: Scheme::TensorGrid { nodes_per_angle },
            seed: 0,
        }
    }

    pub fn monte_carlo(samples: usize, seed: u64) -> Self {
        QuadratureSpec {
            scheme: Scheme::MonteCarlo { samples },
            seed,
        }
    }

    /// Tensor grid with 256 nodes per angle for n ≤ 2, Monte Carlo with
    /// 10^5 samples above.
    pub fn default_for_dim(n: usize) -> Self {
        if n <= 2 {
            Self::tensor(256)
        } else {
            Self::monte_carlo(100_000, 0)
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.scheme {
            Scheme::TensorGrid { nodes_per_angle } if nodes_per_angle < 16 => Err(Error::Config(
                format!("tensor grid needs >= 16 nodes per angle, got {nodes_per_angle}"),
            )),
            Scheme::MonteCarlo { samples } if samples < 10_000 => Err(Error::Config(format!(
                "Monte Carlo needs >= 10^4 samples, got {samples}"
            ))),
            _ => Ok(()),
        }
    }
}

/// A quadrature result; `std_error` is zero for tensor grids.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RonkinValue {
    pub value: f64,
    pub std_error: f64,
}

/// Deterministic pairwise summation.
fn pairwise_sum(v: &[f64]) -> f64 {
    match v.len() {
        0 => 0.0,
        1 => v[0],
        n => {
            let mid = n / 2;
            pairwise_sum(&v[..mid]) + pairwise_sum(&v[mid..])
        }
    }
}

/// Per-term data for fast evaluation of g(θ) at fixed x.
struct FiberTerms {
    scale: f64,
    // (amplitude e^{w−M}, base phase arg a_α, exponent α)
    terms: Vec<(f64, f64, Vec<i64>)>,
}

impl FiberTerms {
    fn new(f: &LaurentPolynomial, x: &[f64]) -> Self {
        let scale = f.log_scale(x);
        let terms = f
            .terms()
            .map(|(alpha, c)| {
                let w = c.norm().ln() + alpha.dot(x) - scale;
                (w.exp(), c.arg(), alpha.coords().to_vec())
            })
            .collect();
        FiberTerms { scale, terms }
    }

    fn log_abs_g(&self, theta: &[f64]) -> f64 {
        let mut g = Complex64::new(0.0, 0.0);
        for (amp, phase0, alpha) in &self.terms {
            let phase: f64 =
                phase0 + alpha.iter().zip(theta).map(|(&a, &t)| a as f64 * t).sum::<f64>();
            g += Complex64::from_polar(*amp, phase);
        }
        g.norm().ln()
    }
}

struct Accumulated {
    mean: f64,
    values_for_error: Option<Vec<f64>>,
    discarded: usize,
    total: usize,
}

fn accumulate_rows(rows: Vec<(Vec<f64>, usize)>, keep_values: bool) -> Accumulated {
    let mut total = 0usize;
    let mut discarded = 0usize;
    let mut row_sums = Vec::with_capacity(rows.len());
    let mut all = if keep_values { Some(Vec::new()) } else { None };
    for (values, dropped) in rows {
        total += values.len() + dropped;
        discarded += dropped;
        row_sums.push(pairwise_sum(&values));
        if let Some(all) = all.as_mut() {
            all.extend_from_slice(&values);
        }
    }
    let kept = total - discarded;
    let mean = if kept == 0 {
        f64::NEG_INFINITY
    } else {
        pairwise_sum(&row_sums) / kept as f64
    };
    Accumulated {
        mean,
        values_for_error: all,
        discarded,
        total,
    }
}

/// Torus average of log|f(e^{x+iθ})| with the requested quadrature.
pub fn ronkin_estimate(
    f: &LaurentPolynomial,
    x: &[f64],
    q: &QuadratureSpec,
) -> Result<RonkinValue> {
    if x.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: x.len(),
        });
    }
    q.validate()?;
    let fiber = FiberTerms::new(f, x);
    let acc = match q.scheme {
        Scheme::TensorGrid { nodes_per_angle } => tensor_rows(f, &fiber, nodes_per_angle)?,
        Scheme::MonteCarlo { samples } => monte_carlo_rows(f, &fiber, samples, q.seed),
    };
    if (acc.discarded as f64) > DISCARD_BUDGET * acc.total as f64 {
        return Err(Error::QuadratureBudget {
            discarded: acc.discarded,
            total: acc.total,
        });
    }
    let std_error = match &acc.values_for_error {
        None => 0.0,
        Some(values) => {
            let n = values.len();
            if n < 2 {
                0.0
            } else {
                let centered: Vec<f64> = values.iter().map(|v| (v - acc.mean).powi(2)).collect();
                (pairwise_sum(&centered) / ((n - 1) as f64 * n as f64)).sqrt()
            }
        }
    };
    Ok(RonkinValue {
        value: fiber.scale + acc.mean,
        std_error,
    })
}

fn tensor_rows(
    f: &LaurentPolynomial,
    fiber: &FiberTerms,
    nodes: usize,
) -> Result<Accumulated> {
    let n = f.dim();
    if n > 2 {
        return Err(Error::Config(
            "tensor grids are provided for n <= 2; use Monte Carlo".into(),
        ));
    }
    // Midpoint nodes: same order of accuracy for periodic integrands, and
    // the grid avoids θ ∈ {0, π} where real-coefficient fibers put zeros.
    let angles: Vec<f64> = (0..nodes)
        .map(|k| TAU * (k as f64 + 0.5) / nodes as f64)
        .collect();
    let rows: Vec<(Vec<f64>, usize)> = if n == 1 {
        // Single row; phase tables are overkill here.
        let mut values = Vec::with_capacity(nodes);
        let mut dropped = 0usize;
        for &t in &angles {
            let mut g = Complex64::new(0.0, 0.0);
            for (amp, phase0, alpha) in &fiber.terms {
                g += Complex64::from_polar(*amp, phase0 + alpha[0] as f64 * t);
            }
            let a = g.norm();
            if a < DISCARD_THRESHOLD {
                dropped += 1;
            } else {
                values.push(a.ln());
            }
        }
        vec![(values, dropped)]
    } else {
        // Per-term phase tables turn each node into a handful of complex
        // multiply-adds: g(i,j) = Σ_t c_t u_t[i] v_t[j].
        let base: Vec<Complex64> = fiber
            .terms
            .iter()
            .map(|(amp, phase0, _)| Complex64::from_polar(*amp, *phase0))
            .collect();
        let u: Vec<Vec<Complex64>> = fiber
            .terms
            .iter()
            .map(|(_, _, alpha)| {
                angles
                    .iter()
                    .map(|&t| Complex64::from_polar(1.0, alpha[0] as f64 * t))
                    .collect()
            })
            .collect();
        let v: Vec<Vec<Complex64>> = fiber
            .terms
            .iter()
            .map(|(_, _, alpha)| {
                angles
                    .iter()
                    .map(|&t| Complex64::from_polar(1.0, alpha[1] as f64 * t))
                    .collect()
            })
            .collect();
        (0..nodes)
            .into_par_iter()
            .map(|i| {
                let row_coeff: Vec<Complex64> =
                    base.iter().zip(&u).map(|(c, ut)| c * ut[i]).collect();
                let mut values = Vec::with_capacity(nodes);
                let mut dropped = 0usize;
                for j in 0..nodes {
                    let mut g = Complex64::new(0.0, 0.0);
                    for (c, vt) in row_coeff.iter().zip(&v) {
                        g += c * vt[j];
                    }
                    let a = g.norm();
                    if a < DISCARD_THRESHOLD {
                        dropped += 1;
                    } else {
                        values.push(a.ln());
                    }
                }
                (values, dropped)
            })
            .collect()
    };
    Ok(accumulate_rows(rows, false))
}

fn monte_carlo_rows(
    f: &LaurentPolynomial,
    fiber: &FiberTerms,
    samples: usize,
    seed: u64,
) -> Accumulated {
    let n = f.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes: Vec<Vec<f64>> = (0..samples)
        .map(|_| (0..n).map(|_| rng.gen::<f64>() * TAU).collect())
        .collect();
    const CHUNK: usize = 1024;
    let rows: Vec<(Vec<f64>, usize)> = nodes
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut values = Vec::with_capacity(chunk.len());
            let mut dropped = 0usize;
            for theta in chunk {
                let lg = fiber.log_abs_g(theta);
                if lg.is_finite() && lg > DISCARD_THRESHOLD.ln() {
                    values.push(lg);
                } else {
                    dropped += 1;
                }
            }
            (values, dropped)
        })
        .collect();
    accumulate_rows(rows, true)
}

/// Central finite differences of the Ronkin estimate, step `h`.
pub fn ronkin_gradient(
    f: &LaurentPolynomial,
    x: &[f64],
    q: &QuadratureSpec,
    h: f64,
) -> Result<Vec<f64>> {
    let mut grad = Vec::with_capacity(x.len());
    for d in 0..x.len() {
        let mut plus = x.to_vec();
        plus[d] += h;
        let mut minus = x.to_vec();
        minus[d] -= h;
        let np = ronkin_estimate(f, &plus, q)?;
        let nm = ronkin_estimate(f, &minus, q)?;
        grad.push((np.value - nm.value) / (2.0 * h));
    }
    Ok(grad)
}

/// Default finite-difference step in log units.
pub const GRADIENT_STEP: f64 = 0.05;

/// Spine constants from one interior point per complement component:
/// c_α = N_f(x_α) − ⟨α, x_α⟩, returned as the lifting ν = −c over the
/// component orders.
pub fn spine_constants(
    f: &LaurentPolynomial,
    components: &[(LatticePoint, Vec<f64>)],
    q: &QuadratureSpec,
) -> Result<Lifting<f64>> {
    let mut heights = BTreeMap::new();
    for (alpha, x) in components {
        let n = ronkin_estimate(f, x, q)?;
        let c = n.value - alpha.dot(x);
        heights.insert(alpha.clone(), -c);
    }
    Lifting::new(heights)
}

/// One row of [`ft_bound_check`]: the sup-norm gap between N_{f_t} and the
/// tropical proxy F_t over the sample grid.
#[derive(Clone, Debug, Serialize)]
pub struct FtGap {
    pub t: f64,
    pub sup_gap: f64,
    pub argmax_x: Vec<f64>,
    pub max_std_error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FtBoundReport {
    pub gaps: Vec<FtGap>,
    pub max_gap: f64,
    pub min_gap: f64,
    /// log Σ |ξ_α|, the upper-bound constant from the triangle inequality.
    pub log_sum_xi: f64,
    pub maximally_sparse: bool,
}

/// For each t, the largest |N_{f_t}(x) − F_t(x)| over the grid, with
/// F_t(x) = max_α (⟨α,x⟩ + ν(α) log t + log|ξ_α|). The log|ξ_α| offset makes
/// the gap vanish at monomials. Warns (in the report) when f is not
/// maximally sparse but still computes.
pub fn ft_bound_check(
    f: &LaurentPolynomial,
    weights: &DegenerationWeights,
    t_list: &[f64],
    x_grid: &[Vec<f64>],
    q: &QuadratureSpec,
) -> Result<FtBoundReport> {
    let maximally_sparse = polytope::is_maximally_sparse(f).unwrap_or(false);
    let log_sum_xi = {
        let mut sum = 0.0;
        for (alpha, c) in f.terms() {
            let nu = weights
                .get(alpha)
                .ok_or_else(|| Error::WeightMismatch(format!("no weight at {alpha}")))?;
            sum += c.norm() * nu.exp();
        }
        sum.ln()
    };
    let mut gaps = Vec::with_capacity(t_list.len());
    for &t in t_list {
        let ft = f.substitute_t(weights, t)?;
        let evaluated: Vec<Result<(f64, f64)>> = x_grid
            .par_iter()
            .map(|x| {
                let n = ronkin_estimate(&ft, x, q)?;
                let trop = ft.log_scale(x);
                Ok(((n.value - trop).abs(), n.std_error))
            })
            .collect();
        let mut sup_gap = f64::NEG_INFINITY;
        let mut argmax_x = Vec::new();
        let mut max_std_error = 0.0f64;
        for (x, r) in x_grid.iter().zip(evaluated) {
            let (gap, se) = r?;
            max_std_error = max_std_error.max(se);
            if gap > sup_gap {
                sup_gap = gap;
                argmax_x = x.clone();
            }
        }
        gaps.push(FtGap {
            t,
            sup_gap,
            argmax_x,
            max_std_error,
        });
    }
    let max_gap = gaps.iter().map(|g| g.sup_gap).fold(f64::NEG_INFINITY, f64::max);
    let min_gap = gaps.iter().map(|g| g.sup_gap).fold(f64::INFINITY, f64::min);
    Ok(FtBoundReport {
        gaps,
        max_gap,
        min_gap,
        log_sum_xi,
        maximally_sparse,
    })
}

/// Randomized estimate of min_{c∈K} Φ(c), where Φ(c) is the torus average
/// of log|G_c| for the trigonometric polynomial with fixed coefficient
/// ξ(α₀) and the others ranging over the box |c_β| ≤ |ξ_β|. The smallest
/// Φ found is an upper bound for the true minimum (−C₁ in the uniform
/// lower-bound estimate); it is not certified.
pub fn phi_lower_bound(
    alpha0: &LatticePoint,
    xi: &BTreeMap<LatticePoint, Complex64>,
    trials: usize,
    q: &QuadratureSpec,
) -> Result<f64> {
    let lead = *xi
        .get(alpha0)
        .ok_or_else(|| Error::WeightMismatch(format!("xi has no entry at {alpha0}")))?;
    if lead.norm() == 0.0 {
        return Err(Error::Config("xi(alpha0) must be nonzero".into()));
    }
    let dim = alpha0.dim();
    let others: Vec<(&LatticePoint, f64)> = xi
        .iter()
        .filter(|(a, _)| *a != alpha0)
        .map(|(a, c)| (a, c.norm()))
        .collect();
    let origin = vec![0.0; dim];
    let phi = |coeffs: &[(LatticePoint, Complex64)]| -> Result<f64> {
        let g = LaurentPolynomial::from_terms(
            dim,
            coeffs
                .iter()
                .filter(|(_, c)| c.norm() > 0.0)
                .cloned()
                .chain(std::iter::once((alpha0.clone(), lead))),
        )?;
        Ok(ronkin_estimate(&g, &origin, q)?.value)
    };

    // Monomial corner: all other coefficients zero, Φ = log|ξ(α₀)| exactly.
    let mut best = lead.norm().ln();
    if others.is_empty() {
        return Ok(best);
    }
    // The original coefficients sit in K.
    let original: Vec<(LatticePoint, Complex64)> = xi
        .iter()
        .filter(|(a, _)| *a != alpha0)
        .map(|(a, c)| (a.clone(), *c))
        .collect();
    best = best.min(phi(&original)?);

    let mut rng = ChaCha8Rng::seed_from_u64(q.seed ^ 0x5eed_cafe);
    for trial in 0..trials {
        let corner = trial % 2 == 0;
        let coeffs: Vec<(LatticePoint, Complex64)> = others
            .iter()
            .map(|(a, r)| {
                // Corners are pulled in by 1e-6: G_c can acquire zeros on
                // the torus exactly at the box boundary, and a quadrature
                // node on such a zero would poison the average.
                let mag = if corner {
                    r * (1.0 - 1e-6)
                } else {
                    r * rng.gen::<f64>().sqrt()
                };
                let phase = rng.gen::<f64>() * TAU;
                ((*a).clone(), Complex64::from_polar(mag, phase))
            })
            .collect();
        best = best.min(phi(&coeffs)?);
    }
    Ok(best)
}

/// Closed-form dominance threshold along the ray x₀ + s v: the smallest
/// s₀ ≥ 0 past which the affine piece of α₁ strictly beats every other
/// piece of ℓ_{α,t}(x) = ⟨α,x⟩ + ν(α) log t. Requires ⟨α₁,v⟩ > ⟨α,v⟩ for
/// every other support point.
pub fn dominance_threshold(
    x0: &[f64],
    v: &[f64],
    l: &Lifting<f64>,
    t: f64,
    alpha1: &LatticePoint,
) -> Result<f64> {
    if !(t > 0.0 && t <= (-1.0f64).exp()) {
        return Err(Error::TOutOfRange(t));
    }
    let nu1 = *l
        .height(alpha1)
        .ok_or_else(|| Error::WeightMismatch(format!("{alpha1} is not a lifted point")))?;
    let log_t = t.ln();
    let mut s0 = 0.0f64;
    for (alpha, nu) in l.pairs() {
        if alpha == alpha1 {
            continue;
        }
        let delta = alpha1.dot(v) - alpha.dot(v);
        if delta <= 0.0 {
            return Err(Error::NotStrictlyMaximal(alpha1.to_string()));
        }
        // g_{α₁}(s) − g_α(s) = A + B log t + s δ with
        // A = ⟨α₁−α, x₀⟩ and B = ν(α₁) − ν(α); the sign flips at s = −(A + B log t)/δ.
        let a = alpha1.dot(x0) - alpha.dot(x0);
        let b = nu1 - nu;
        let s_alpha = -(a + b * log_t) / delta;
        s0 = s0.max(s_alpha);
    }
    Ok(s0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tensor(n: usize) -> QuadratureSpec {
        QuadratureSpec::tensor(n)
    }

    #[test]
    fn monomial_is_exact() {
        // N(x) = log 3 + 2x₁ + x₂ with a constant integrand.
        let f = LaurentPolynomial::parse("3*z1^2*z2", 2).unwrap();
        let q = tensor(32);
        for x in [[0.0, 0.0], [2.5, -1.0], [-7.0, 4.0]] {
            let n = ronkin_estimate(&f, &x, &q).unwrap();
            let exact = 3.0f64.ln() + 2.0 * x[0] + x[1];
            assert!((n.value - exact).abs() < 1e-13, "x = {x:?}");
            assert_eq!(n.std_error, 0.0);
        }
    }

    #[test]
    fn jensen_formula_in_one_variable() {
        // N_{1+z}(x) = max(0, x) by Jensen's formula.
        let f = LaurentPolynomial::parse("1 + z1", 1).unwrap();
        let q = tensor(256);
        for x in [-3.0, -1.0, -0.5, 0.5, 1.0, 3.0] {
            let n = ronkin_estimate(&f, &[x], &q).unwrap();
            assert!(
                (n.value - x.max(0.0)).abs() < 2e-3,
                "x = {x}, got {}",
                n.value
            );
        }
    }

    #[test]
    fn deep_component_value() {
        let f = LaurentPolynomial::parse("1 + z1 + z2", 2).unwrap();
        let n = ronkin_estimate(&f, &[10.0, 0.0], &tensor(64)).unwrap();
        assert!((n.value - 10.0).abs() < 1e-3);
    }

    #[test]
    fn gradient_of_monomial_is_its_exponent() {
        let f = LaurentPolynomial::parse("3*z1^2*z2", 2).unwrap();
        let g = ronkin_gradient(&f, &[0.3, -0.4], &tensor(32), 0.05).unwrap();
        assert!((g[0] - 2.0).abs() < 1e-10);
        assert!((g[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn gradient_deep_in_components() {
        let f = LaurentPolynomial::parse("1 + z1 + z2", 2).unwrap();
        let q = tensor(64);
        let g = ronkin_gradient(&f, &[10.0, 0.0], &q, 0.05).unwrap();
        assert!((g[0] - 1.0).abs() < 1e-3 && g[1].abs() < 1e-3);
        let g = ronkin_gradient(&f, &[-10.0, -10.0], &q, 0.05).unwrap();
        assert!(g[0].abs() < 1e-3 && g[1].abs() < 1e-3);
    }

    #[test]
    fn spine_constants_jensen_cases() {
        let q = tensor(256);
        let f = LaurentPolynomial::parse("1 + z1", 1).unwrap();
        let l = spine_constants(
            &f,
            &[
                (LatticePoint::from([0]), vec![-5.0]),
                (LatticePoint::from([1]), vec![5.0]),
            ],
            &q,
        )
        .unwrap();
        assert!(l.height(&LatticePoint::from([0])).unwrap().abs() < 1e-3);
        assert!(l.height(&LatticePoint::from([1])).unwrap().abs() < 1e-3);

        // f = 5 + z1: c₀ = log 5, c₁ = 0, spine vertex at log 5.
        let f = LaurentPolynomial::parse("5 + z1", 1).unwrap();
        let l = spine_constants(
            &f,
            &[
                (LatticePoint::from([0]), vec![-5.0]),
                (LatticePoint::from([1]), vec![8.0]),
            ],
            &q,
        )
        .unwrap();
        let c0 = -l.height(&LatticePoint::from([0])).unwrap();
        let c1 = -l.height(&LatticePoint::from([1])).unwrap();
        assert!((c0 - 5.0f64.ln()).abs() < 1e-3);
        assert!(c1.abs() < 1e-3);
        // Corner of max(c₀, c₁ + x) sits at x = c₀ − c₁.
        assert!(((c0 - c1) - 5.0f64.ln()).abs() < 2e-3);

        // Monomial: c = log 3 regardless of the evaluation point.
        let f = LaurentPolynomial::parse("3*z1^2*z2", 2).unwrap();
        let l = spine_constants(
            &f,
            &[(LatticePoint::from([2, 1]), vec![0.7, -0.3])],
            &tensor(32),
        )
        .unwrap();
        let c = -l.height(&LatticePoint::from([2, 1])).unwrap();
        assert!((c - 3.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn monomial_gap_is_zero() {
        let f = LaurentPolynomial::parse("3*z1^2*z2", 2).unwrap();
        let mut w = DegenerationWeights::new();
        w.insert(LatticePoint::from([2, 1]), 1.0);
        let grid: Vec<Vec<f64>> = vec![vec![0.0, 0.0], vec![3.0, -2.0]];
        let r = ft_bound_check(&f, &w, &[0.1, 0.01], &grid, &tensor(32)).unwrap();
        assert!(r.max_gap < 1e-12);
    }

    #[test]
    fn triangle_gap_respects_triangle_inequality_bound() {
        let f = LaurentPolynomial::parse("1 + z1 + z2", 2).unwrap();
        let mut w = DegenerationWeights::new();
        for alpha in f.support() {
            w.insert(alpha.clone(), 0.0);
        }
        let mut grid = Vec::new();
        for i in -5..=5 {
            for j in -5..=5 {
                grid.push(vec![i as f64, j as f64]);
            }
        }
        let r = ft_bound_check(&f, &w, &[0.2], &grid, &tensor(64)).unwrap();
        assert!(r.max_gap <= 3.0f64.ln() + 1e-6);
    }

    #[test]
    fn phi_bound_examples() {
        let q = tensor(128);
        // K empty: Φ = log|ξ(α₀)|.
        let mut xi = BTreeMap::new();
        xi.insert(LatticePoint::from([0]), Complex64::new(2.0, 0.0));
        let phi = phi_lower_bound(&LatticePoint::from([0]), &xi, 10, &q).unwrap();
        assert!((phi - 2.0f64.ln()).abs() < 1e-12);

        // 1 + c z with |c| <= 1: Φ = max(0, log|c|) = 0 on the whole box.
        let mut xi = BTreeMap::new();
        xi.insert(LatticePoint::from([0]), Complex64::new(1.0, 0.0));
        xi.insert(LatticePoint::from([1]), Complex64::new(1.0, 0.0));
        let phi = phi_lower_bound(&LatticePoint::from([0]), &xi, 40, &q).unwrap();
        assert!(phi.abs() < 1e-2, "phi = {phi}");

        // Triangle coefficients: minimum is finite and not below −1.
        let mut xi = BTreeMap::new();
        xi.insert(LatticePoint::from([0, 0]), Complex64::new(1.0, 0.0));
        xi.insert(LatticePoint::from([1, 0]), Complex64::new(1.0, 0.0));
        xi.insert(LatticePoint::from([0, 1]), Complex64::new(1.0, 0.0));
        let phi = phi_lower_bound(&LatticePoint::from([0, 0]), &xi, 60, &tensor(64)).unwrap();
        assert!(phi.is_finite() && phi >= -1.0, "phi = {phi}");
    }

    #[test]
    fn threshold_trivial_and_linear_cases() {
        let l: Lifting<f64> =
            Lifting::from_pairs([(LatticePoint::from([0]), 0.0), (LatticePoint::from([1]), 0.0)])
                .unwrap();
        let s0 =
            dominance_threshold(&[0.0], &[1.0], &l, 0.25, &LatticePoint::from([1])).unwrap();
        assert_eq!(s0, 0.0);

        // A = ⟨α₁−α, x₀⟩ = −2, B = 0, δ = 1: threshold at s = 2.
        let l: Lifting<f64> =
            Lifting::from_pairs([(LatticePoint::from([0]), 0.0), (LatticePoint::from([1]), 0.0)])
                .unwrap();
        let s0 =
            dominance_threshold(&[-2.0], &[1.0], &l, 0.25, &LatticePoint::from([1])).unwrap();
        assert!((s0 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn threshold_requires_strict_direction() {
        let l: Lifting<f64> = Lifting::from_pairs([
            (LatticePoint::from([0, 0]), 0.0),
            (LatticePoint::from([1, 0]), 0.0),
            (LatticePoint::from([0, 1]), 0.0),
        ])
        .unwrap();
        let r = dominance_threshold(
            &[0.0, 0.0],
            &[0.0, 1.0],
            &l,
            0.2,
            &LatticePoint::from([1, 0]),
        );
        assert!(matches!(r, Err(Error::NotStrictlyMaximal(_))));
    }

    #[test]
    fn upper_bound_from_proof_holds_pointwise() {
        // N_f(x) ≤ max⟨α,x⟩ + log Σ|a_α| at every sample.
        let f = LaurentPolynomial::parse("2 + 0.5*z1 + (0+3i)*z2 + z1*z2", 2).unwrap();
        let q = tensor(64);
        let log_sum: f64 = f.terms().map(|(_, c)| c.norm()).sum::<f64>().ln();
        for x in [[0.0, 0.0], [2.0, -1.0], [-4.0, 3.0], [8.0, 8.0]] {
            let n = ronkin_estimate(&f, &x, &q).unwrap();
            let trop = f
                .support()
                .map(|a| a.dot(&x))
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(n.value <= trop + log_sum + 1e-9, "x = {x:?}");
        }
    }

    #[test]
    fn monte_carlo_reports_errors_and_converges() {
        let f = LaurentPolynomial::parse("1 + z1", 1).unwrap();
        let q = QuadratureSpec::monte_carlo(20_000, 7);
        let n = ronkin_estimate(&f, &[1.5], &q).unwrap();
        assert!(n.std_error > 0.0);
        assert!((n.value - 1.5).abs() < 5.0 * n.std_error + 5e-3);
        // Same seed, same value.
        let again = ronkin_estimate(&f, &[1.5], &q).unwrap();
        assert_eq!(n.value, again.value);
    }
}
