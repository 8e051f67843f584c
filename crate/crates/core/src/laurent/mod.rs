//! Laurent polynomials with complex coefficients.
//!
//! A Laurent polynomial is a finite sum Σ a_α z^α with a_α ∈ C* and
//! exponent vectors α ∈ Z^n, evaluated on the complex torus (C*)^n.
//! Points of the torus are stored in logarithmic coordinates
//! z_j = e^{x_j + iθ_j}, and evaluation factors out the dominant term
//! magnitude so that |x| of several dozen log-units stays finite.

mod parser;

use crate::degeneration::DegenerationWeights;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;

/// An exponent vector α ∈ Z^n. Ordering is lexicographic, which fixes the
/// canonical term order everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "lattice point needs dimension >= 1");
        LatticePoint(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// ⟨α, x⟩ with a real vector.
    pub fn dot(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(self.0.len(), x.len());
        self.0.iter().zip(x).map(|(&a, &v)| a as f64 * v).sum()
    }

    /// ⟨α, x⟩ over a generic scalar.
    pub fn dot_scalar<S: Scalar>(&self, x: &[S]) -> S {
        debug_assert_eq!(self.0.len(), x.len());
        self.0
            .iter()
            .zip(x)
            .fold(S::zero(), |acc, (&a, v)| acc + S::from_int(a) * v.clone())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a - b)
                .collect(),
        )
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(coords: [i64; N]) -> Self {
        LatticePoint::new(coords.to_vec())
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point of the torus in logarithmic coordinates: z_j = e^{x_j + iθ_j}.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusPoint {
    log_radii: Vec<f64>,
    angles: Vec<f64>,
}

impl TorusPoint {
    /// Angles are reduced modulo 2π on construction.
    pub fn new(log_radii: Vec<f64>, angles: Vec<f64>) -> Self {
        assert_eq!(log_radii.len(), angles.len());
        let angles = angles.into_iter().map(|a| a.rem_euclid(TAU)).collect();
        TorusPoint { log_radii, angles }
    }

    pub fn dim(&self) -> usize {
        self.log_radii.len()
    }

    pub fn log_radii(&self) -> &[f64] {
        &self.log_radii
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }
}

/// Finite map from exponent vectors to nonzero complex coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPolynomial {
    dim: usize,
    terms: BTreeMap<LatticePoint, Complex64>,
}

impl LaurentPolynomial {
    /// Builds a polynomial from (exponent, coefficient) pairs, merging like
    /// exponents by summation and dropping exact-zero results.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticePoint, Complex64)>,
    {
        let mut map: BTreeMap<LatticePoint, Complex64> = BTreeMap::new();
        for (alpha, coeff) in terms {
            if alpha.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: alpha.dim(),
                });
            }
            let entry = map.entry(alpha).or_insert(Complex64::new(0.0, 0.0));
            *entry += coeff;
        }
        map.retain(|_, c| c.re != 0.0 || c.im != 0.0);
        if map.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(LaurentPolynomial { dim, terms: map })
    }

    /// Parses the textual form, variables `z1..zn` with n = `dim`.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        parser::parse_laurent(text, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, alpha: &LatticePoint) -> Option<Complex64> {
        self.terms.get(alpha).copied()
    }

    /// Support in canonical (lexicographic) order.
    pub fn support(&self) -> impl Iterator<Item = &LatticePoint> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &Complex64)> {
        self.terms.iter()
    }

    /// Min and max exponent of the given variable over the support.
    pub fn exponent_range(&self, var: usize) -> (i64, i64) {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for alpha in self.terms.keys() {
            let e = alpha.coords()[var];
            lo = lo.min(e);
            hi = hi.max(e);
        }
        (lo, hi)
    }

    /// Product of two polynomials (term convolution).
    pub fn mul(&self, other: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let sum: Vec<i64> = a
                    .coords()
                    .iter()
                    .zip(b.coords())
                    .map(|(&x, &y)| x + y)
                    .collect();
                terms.push((LatticePoint::new(sum), ca * cb));
            }
        }
        LaurentPolynomial::from_terms(self.dim, terms)
    }

    /// max_α (log|a_α| + ⟨α, x⟩): the log-magnitude of the dominant term.
    pub fn log_scale(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(alpha, c)| c.norm().ln() + alpha.dot(x))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// The factored unit sum g with f(e^{x+iθ}) = e^M g(θ), M = `log_scale(x)`.
    /// Every term of g has modulus ≤ 1, so the sum never overflows.
    pub fn factored_unit_sum(&self, p: &TorusPoint) -> Complex64 {
        let scale = self.log_scale(p.log_radii());
        let mut g = Complex64::new(0.0, 0.0);
        for (alpha, c) in &self.terms {
            let w = c.norm().ln() + alpha.dot(p.log_radii()) - scale;
            let phase = c.arg() + alpha.dot(p.angles());
            g += Complex64::from_polar(w.exp(), phase);
        }
        g
    }

    /// Evaluates f at the torus point. The dominant term is factored out
    /// before summation, so the result is accurate whenever it is finite.
    pub fn evaluate(&self, p: &TorusPoint) -> Complex64 {
        assert_eq!(p.dim(), self.dim, "torus point dimension mismatch");
        let scale = self.log_scale(p.log_radii());
        self.factored_unit_sum(p) * scale.exp()
    }

    /// log|f(e^{x+iθ})|, finite unless f vanishes at the point.
    pub fn log_abs(&self, p: &TorusPoint) -> f64 {
        assert_eq!(p.dim(), self.dim, "torus point dimension mismatch");
        self.log_scale(p.log_radii()) + self.factored_unit_sum(p).norm().ln()
    }

    /// The degeneration family member f_t with coefficient ξ_α t^{ν(α)} at α,
    /// where ξ_α = a_α e^{ν(α)}. Weights must be defined on exactly supp(f).
    pub fn substitute_t(&self, weights: &DegenerationWeights, t: f64) -> Result<LaurentPolynomial> {
        if !(t > 0.0 && t <= (-1.0f64).exp()) {
            return Err(Error::TOutOfRange(t));
        }
        for alpha in weights.points() {
            if self.coeff(alpha).is_none() {
                return Err(Error::WeightMismatch(format!(
                    "weight at {alpha} has no matching term"
                )));
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (alpha, c) in &self.terms {
            let nu = weights.get(alpha).ok_or_else(|| {
                Error::WeightMismatch(format!("no weight for support point {alpha}"))
            })?;
            // ξ_α t^ν = a_α e^{ν(1 + ln t)}
            let factor = (nu * (1.0 + t.ln())).exp();
            terms.push((alpha.clone(), c * factor));
        }
        LaurentPolynomial::from_terms(self.dim, terms)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Canonical form: terms in lexicographic exponent order; printing and
    /// re-parsing reproduces the same term map.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (alpha, c) in &self.terms {
            let monomial = format_monomial(alpha);
            if c.im == 0.0 {
                let (sign, mag) = if c.re < 0.0 { ("-", -c.re) } else { ("+", c.re) };
                if first {
                    if sign == "-" {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {sign} ")?;
                }
                match (&monomial, mag == 1.0) {
                    (None, _) => write!(f, "{mag}")?,
                    (Some(m), true) => write!(f, "{m}")?,
                    (Some(m), false) => write!(f, "{mag}*{m}")?,
                }
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                let im_sign = if c.im < 0.0 { "-" } else { "+" };
                let coeff = format!("({}{}{}i)", c.re, im_sign, c.im.abs());
                match &monomial {
                    None => write!(f, "{coeff}")?,
                    Some(m) => write!(f, "{coeff}*{m}")?,
                }
            }
            first = false;
        }
        Ok(())
    }
}

fn format_monomial(alpha: &LatticePoint) -> Option<String> {
    let mut parts = Vec::new();
    for (i, &e) in alpha.coords().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(format!("z{}", i + 1));
        } else {
            parts.push(format!("z{}^{}", i + 1, e));
        }
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn evaluate_identity_monomial() {
        let f = LaurentPolynomial::parse("z1", 1).unwrap();
        let p = TorusPoint::new(vec![0.0], vec![0.0]);
        let v = f.evaluate(&p);
        assert!((v - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn evaluate_cancellation_at_pi() {
        let f = LaurentPolynomial::parse("1 + z1", 1).unwrap();
        let p = TorusPoint::new(vec![0.0], vec![PI]);
        assert!(f.evaluate(&p).norm() < 1e-15);
    }

    #[test]
    fn evaluate_with_dominant_factoring() {
        // 1 + z1 + z2 at x = (10, 0), θ = 0: e^10 (1 + 2 e^{-10}).
        let f = LaurentPolynomial::parse("1 + z1 + z2", 2).unwrap();
        let p = TorusPoint::new(vec![10.0, 0.0], vec![0.0, 0.0]);
        let expected = 10f64.exp() + 2.0;
        let v = f.evaluate(&p);
        assert!((v.re - expected).abs() / expected < 1e-13);
        assert!(v.im.abs() < 1e-10);
    }

    #[test]
    fn evaluate_survives_large_radii() {
        let f = LaurentPolynomial::parse("1 + z1^3 + z2^3", 2).unwrap();
        let p = TorusPoint::new(vec![-50.0, -40.0], vec![1.0, 2.0]);
        // All monomials besides the constant are negligible.
        assert!((f.log_abs(&p) - 0.0).abs() < 1e-12);
    }

    #[test]
    fn substitute_cancels_at_one_over_e() {
        let f = LaurentPolynomial::parse("1 + 2*z1", 1).unwrap();
        let mut w = DegenerationWeights::new();
        w.insert(LatticePoint::from([0]), 0.0);
        w.insert(LatticePoint::from([1]), 1.0);
        let ft = f.substitute_t(&w, (-1.0f64).exp()).unwrap();
        let got = ft.coeff(&LatticePoint::from([1])).unwrap();
        assert!((got - c(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn substitute_scales_by_t_power() {
        // ν(1) = 1, t = e^{-3}: coefficient a e^1 e^{-3} = a e^{-2}.
        let f = LaurentPolynomial::parse("1 + 2*z1", 1).unwrap();
        let mut w = DegenerationWeights::new();
        w.insert(LatticePoint::from([0]), 0.0);
        w.insert(LatticePoint::from([1]), 1.0);
        let ft = f.substitute_t(&w, (-3.0f64).exp()).unwrap();
        let got = ft.coeff(&LatticePoint::from([1])).unwrap();
        let expected = 2.0 * (-2.0f64).exp();
        assert!((got.re - expected).abs() < 1e-14 && got.im == 0.0);
    }

    #[test]
    fn substitute_rejects_bad_domains() {
        let f = LaurentPolynomial::parse("1 + z1", 1).unwrap();
        let mut w = DegenerationWeights::new();
        w.insert(LatticePoint::from([0]), 0.0);
        assert!(matches!(
            f.substitute_t(&w, 0.1),
            Err(Error::WeightMismatch(_))
        ));
        w.insert(LatticePoint::from([1]), 0.0);
        assert!(matches!(f.substitute_t(&w, 0.9), Err(Error::TOutOfRange(_))));
    }

    #[test]
    fn zero_weights_leave_coefficients_unchanged() {
        let f = LaurentPolynomial::parse("(2+3i)*z1^2 - z1*z2", 2).unwrap();
        let mut w = DegenerationWeights::new();
        for alpha in f.support() {
            w.insert(alpha.clone(), 0.0);
        }
        let ft = f.substitute_t(&w, 0.05).unwrap();
        assert_eq!(f, ft);
    }
}
