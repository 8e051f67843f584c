//! Tropical degeneration experiments.
//!
//! A weight function ν on supp(f) defines the family
//! f_t = Σ ξ_α t^{ν(α)} z^α with ξ_α = a_α e^{ν(α)}. As t → 0 the rescaled
//! amoebas (−1/log t)·𝒜_{f_t} converge in the Hausdorff metric on compact
//! sets to the corner locus Γ_∞ of max(⟨α,x⟩ − ν(α)). The sweeps here
//! measure that convergence, the stabilization of the spine subdivision,
//! and the persistence of solidness across the family.

use crate::amoeba::{self, Box2D, RasterParams};
use crate::error::{Error, Result};
use crate::laurent::{LatticePoint, LaurentPolynomial};
use crate::polytope;
use crate::ronkin::{self, QuadratureSpec};
use crate::tropical::{corner_locus_2d, regular_subdivision, Lifting, PolyhedralComplex, Subdivision};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Weight map ν: supp(f) → R driving a degeneration family.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DegenerationWeights(BTreeMap<LatticePoint, f64>);

impl DegenerationWeights {
    pub fn new() -> Self {
        DegenerationWeights(BTreeMap::new())
    }

    pub fn insert(&mut self, alpha: LatticePoint, nu: f64) {
        self.0.insert(alpha, nu);
    }

    pub fn get(&self, alpha: &LatticePoint) -> Option<f64> {
        self.0.get(alpha).copied()
    }

    pub fn points(&self) -> impl Iterator<Item = &LatticePoint> {
        self.0.keys()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&LatticePoint, f64)> {
        self.0.iter().map(|(p, &v)| (p, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero weights on the support of f.
    pub fn zero_on(f: &LaurentPolynomial) -> Self {
        DegenerationWeights(f.support().map(|a| (a.clone(), 0.0)).collect())
    }

    pub fn to_lifting(&self) -> Result<Lifting<f64>> {
        Lifting::from_pairs(self.0.iter().map(|(p, &v)| (p.clone(), v)))
    }

    /// Must cover exactly the support of f.
    pub fn validate_against(&self, f: &LaurentPolynomial) -> Result<()> {
        for alpha in f.support() {
            if self.get(alpha).is_none() {
                return Err(Error::WeightMismatch(format!("no weight at {alpha}")));
            }
        }
        for alpha in self.points() {
            if f.coeff(alpha).is_none() {
                return Err(Error::WeightMismatch(format!(
                    "weight at {alpha} has no matching term"
                )));
            }
        }
        Ok(())
    }
}

/// Sampled subset of the plane used for set distances.
pub type PointCloud2D = Vec<[f64; 2]>;

/// t below e^{-10} makes fiber solving operate on boxes of radius
/// ≈ 10·diam(Δ) log-units, past double-precision comfort.
const MIN_LOG_T: f64 = -10.0;

fn validate_t(t: f64) -> Result<()> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::TOutOfRange(t));
    }
    if t.ln() < MIN_LOG_T {
        return Err(Error::TUnderflow(t));
    }
    Ok(())
}

/// Hausdorff distance between nonempty point clouds, brute force.
pub fn hausdorff(a: &[[f64; 2]], b: &[[f64; 2]]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyCloud);
    }
    let directed = |from: &[[f64; 2]], to: &[[f64; 2]]| -> f64 {
        let mins: Vec<f64> = from
            .par_iter()
            .map(|p| {
                to.iter()
                    .map(|q| {
                        let dx = p[0] - q[0];
                        let dy = p[1] - q[1];
                        dx * dx + dy * dy
                    })
                    .fold(f64::INFINITY, f64::min)
            })
            .collect();
        mins.into_iter().fold(0.0f64, f64::max).sqrt()
    };
    Ok(directed(a, b).max(directed(b, a)))
}

/// Samples a polyhedral complex: every vertex, plus points along each edge
/// and along each ray truncated at `extent`, at the given spacing.
pub fn sample_complex(
    gamma: &PolyhedralComplex<f64>,
    spacing: f64,
    extent: f64,
) -> PointCloud2D {
    assert!(spacing > 0.0, "spacing must be positive");
    let mut points: PointCloud2D = gamma.vertices.clone();
    for &(a, b) in &gamma.edges {
        let (pa, pb) = (gamma.vertices[a], gamma.vertices[b]);
        let len = ((pb[0] - pa[0]).powi(2) + (pb[1] - pa[1]).powi(2)).sqrt();
        let steps = (len / spacing).floor() as usize;
        for k in 1..=steps {
            let s = k as f64 * spacing / len;
            if s < 1.0 {
                points.push([pa[0] + s * (pb[0] - pa[0]), pa[1] + s * (pb[1] - pa[1])]);
            }
        }
    }
    for ray in &gamma.rays {
        let base = gamma.vertices[ray.base];
        let norm = ((ray.dir[0].pow(2) + ray.dir[1].pow(2)) as f64).sqrt();
        let dir = [ray.dir[0] as f64 / norm, ray.dir[1] as f64 / norm];
        let steps = (extent / spacing).floor() as usize;
        for k in 1..=steps {
            let s = k as f64 * spacing;
            points.push([base[0] + s * dir[0], base[1] + s * dir[1]]);
        }
    }
    points
}

/// Sampling budget for amoeba point clouds.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CloudBudget {
    pub lines: usize,
    pub fibers: usize,
    pub max_points: usize,
}

impl Default for CloudBudget {
    fn default() -> Self {
        CloudBudget {
            lines: 400,
            fibers: 16,
            max_points: 20_000,
        }
    }
}

/// The compact window on which rescaled amoebas are compared to Γ_∞: the
/// bounding box of the Γ_∞ vertices plus 3 log-units per side (rays agree
/// at infinity by construction).
pub fn comparison_window(gamma: &PolyhedralComplex<f64>) -> Result<Box2D> {
    let (min, max) = gamma
        .vertex_bbox()
        .ok_or_else(|| Error::DegenerateSupport("corner locus has no vertices".into()))?;
    const WINDOW_MARGIN: f64 = 3.0;
    Box2D::new(
        [min[0] - WINDOW_MARGIN, min[1] - WINDOW_MARGIN],
        [max[0] + WINDOW_MARGIN, max[1] + WINDOW_MARGIN],
    )
}

/// Samples 𝒜_{f_t} over the window scaled by −log t, then rescales every
/// point by −1/log t so the cloud lives on the fixed window.
pub fn rescaled_amoeba(
    f: &LaurentPolynomial,
    weights: &DegenerationWeights,
    t: f64,
    window: Box2D,
    budget: &CloudBudget,
) -> Result<PointCloud2D> {
    validate_t(t)?;
    weights.validate_against(f)?;
    let ft = f.substitute_t(weights, t)?;
    let k = -t.ln();
    let big = window.scaled(k);
    let step = (big.width().min(big.height()) / budget.lines as f64).max(1e-6);
    let (points, _, _) = amoeba::sample_points(&ft, big, budget.lines, budget.fibers, step, 4096)?;
    let mut cloud: PointCloud2D = points
        .into_iter()
        .map(|p| [p[0] / k, p[1] / k])
        .collect();
    if cloud.len() > budget.max_points {
        let stride = cloud.len().div_ceil(budget.max_points);
        cloud = cloud
            .into_iter()
            .step_by(stride)
            .collect();
    }
    if cloud.is_empty() {
        return Err(Error::EmptyAmoeba(format!("no amoeba points at t = {t}")));
    }
    Ok(cloud)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceRow {
    pub t: f64,
    pub k: f64,
    pub hausdorff: f64,
    pub cloud_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceSweep {
    pub rows: Vec<ConvergenceRow>,
    /// Least-squares coefficient of the model d_H(k) ≈ c/k.
    pub fit_c: f64,
    pub window: Box2D,
}

/// Hausdorff distance of the rescaled amoebas to Γ_∞ across a decreasing
/// t list, restricted to the fixed compact window.
pub fn convergence_sweep(
    f: &LaurentPolynomial,
    weights: &DegenerationWeights,
    t_list: &[f64],
    budget: &CloudBudget,
) -> Result<ConvergenceSweep> {
    if f.is_monomial() {
        return Err(Error::EmptyAmoeba("constant family".into()));
    }
    weights.validate_against(f)?;
    let gamma = corner_locus_2d(&weights.to_lifting()?)?;
    let window = comparison_window(&gamma)?;
    let extent = (window.width().powi(2) + window.height().powi(2)).sqrt();
    let spacing = 0.05;
    let reference: PointCloud2D = sample_complex(&gamma, spacing, extent)
        .into_iter()
        .filter(|p| window.contains(*p))
        .collect();
    let mut rows = Vec::with_capacity(t_list.len());
    for &t in t_list {
        validate_t(t)?;
        let cloud = rescaled_amoeba(f, weights, t, window, budget)?;
        let inside: PointCloud2D = cloud
            .iter()
            .copied()
            .filter(|p| window.contains(*p))
            .collect();
        let d = hausdorff(&inside, &reference)?;
        rows.push(ConvergenceRow {
            t,
            k: -t.ln(),
            hausdorff: d,
            cloud_size: inside.len(),
        });
    }
    // d ≈ c/k least squares: c = Σ d_i/k_i over Σ 1/k_i².
    let num: f64 = rows.iter().map(|r| r.hausdorff / r.k).sum();
    let den: f64 = rows.iter().map(|r| 1.0 / (r.k * r.k)).sum();
    Ok(ConvergenceSweep {
        rows,
        fit_c: if den > 0.0 { num / den } else { f64::NAN },
        window,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubdivisionRow {
    pub t: f64,
    pub subdivision: Subdivision,
    pub matches_tau_infinity: bool,
    pub orders: Vec<LatticePoint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubdivisionSweep {
    pub tau_infinity: Subdivision,
    pub rows: Vec<SubdivisionRow>,
    /// First index from which every subsequent subdivision matches τ_∞.
    pub stable_from: Option<usize>,
}

/// For each t: raster 𝒜_{f_t}, extract component orders, estimate the spine
/// constants, and compare the induced subdivision with τ_∞.
pub fn subdivision_stability_sweep(
    f: &LaurentPolynomial,
    weights: &DegenerationWeights,
    t_list: &[f64],
    params: &RasterParams,
    q: &QuadratureSpec,
) -> Result<SubdivisionSweep> {
    weights.validate_against(f)?;
    let tau_infinity = regular_subdivision(&weights.to_lifting()?)?;
    let mut rows = Vec::with_capacity(t_list.len());
    for &t in t_list {
        validate_t(t)?;
        let ft = f.substitute_t(weights, t)?;
        let bounds = amoeba::default_box(&ft)?;
        let raster = amoeba::raster_2d(&ft, bounds, params)?;
        let mut components = amoeba::complement_components(&raster);
        amoeba::assign_orders(&ft, &raster, &mut components, q)?;
        let anchors: Vec<(LatticePoint, Vec<f64>)> = components
            .iter()
            .map(|c| {
                let x = raster
                    .pixel_center(c.witness_pixel.0 as usize, c.witness_pixel.1 as usize);
                (c.order.clone().expect("orders assigned"), x.to_vec())
            })
            .collect();
        let spine_lifting = ronkin::spine_constants(&ft, &anchors, q)?;
        let subdivision = regular_subdivision(&spine_lifting)?;
        let matches = subdivision == tau_infinity;
        rows.push(SubdivisionRow {
            t,
            subdivision,
            matches_tau_infinity: matches,
            orders: anchors.into_iter().map(|(a, _)| a).collect(),
        });
    }
    let stable_from = (0..rows.len())
        .find(|&i| rows[i..].iter().all(|r| r.matches_tau_infinity));
    Ok(SubdivisionSweep {
        tau_infinity,
        rows,
        stable_from,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SolidnessRow {
    pub t: f64,
    pub solid: bool,
    pub component_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolidnessSweep {
    pub rows: Vec<SolidnessRow>,
    /// Set when f is not maximally sparse; the sweep still runs.
    pub not_maximally_sparse: bool,
}

/// Runs the solidness verdict on f_t for each t. For maximally sparse f the
/// stability theorem predicts solid across the whole interval.
pub fn solidness_sweep(
    f: &LaurentPolynomial,
    weights: &DegenerationWeights,
    t_list: &[f64],
    params: &RasterParams,
    q: &QuadratureSpec,
) -> Result<SolidnessSweep> {
    weights.validate_against(f)?;
    let not_maximally_sparse = !polytope::is_maximally_sparse(f)?;
    let mut rows = Vec::with_capacity(t_list.len());
    for &t in t_list {
        validate_t(t)?;
        let ft = f.substitute_t(weights, t)?;
        let bounds = amoeba::default_box(&ft)?;
        let report = amoeba::is_solid(&ft, bounds, params, q)?;
        rows.push(SolidnessRow {
            t,
            solid: report.solid,
            component_count: report.component_count,
        });
    }
    Ok(SolidnessSweep {
        rows,
        not_maximally_sparse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hausdorff_basics() {
        let a = vec![[0.0, 0.0]];
        let b = vec![[3.0, 4.0]];
        assert_eq!(hausdorff(&a, &a).unwrap(), 0.0);
        assert!((hausdorff(&a, &b).unwrap() - 5.0).abs() < 1e-15);
        assert_eq!(
            hausdorff(&a, &b).unwrap(),
            hausdorff(&b, &a).unwrap()
        );
        assert!(matches!(hausdorff(&a, &[]), Err(Error::EmptyCloud)));
    }

    #[test]
    fn sample_complex_counts() {
        // Single vertex, no edges: just the vertex.
        let gamma = PolyhedralComplex::<f64> {
            vertices: vec![[1.0, 2.0]],
            edges: vec![],
            rays: vec![],
        };
        assert_eq!(sample_complex(&gamma, 0.5, 10.0).len(), 1);

        // One unit edge at spacing 0.5: endpoints plus midpoint.
        let gamma = PolyhedralComplex::<f64> {
            vertices: vec![[0.0, 0.0], [1.0, 0.0]],
            edges: vec![(0, 1)],
            rays: vec![],
        };
        assert_eq!(sample_complex(&gamma, 0.5, 10.0).len(), 3);

        // Tropical line at extent 10, spacing 0.1: 3 × 100 ray points
        // plus the deduplicated vertex.
        let lifting: Lifting<f64> = Lifting::from_pairs([
            (LatticePoint::from([0, 0]), 0.0),
            (LatticePoint::from([1, 0]), 0.0),
            (LatticePoint::from([0, 1]), 0.0),
        ])
        .unwrap();
        let gamma = corner_locus_2d(&lifting).unwrap();
        assert_eq!(sample_complex(&gamma, 0.1, 10.0).len(), 301);
    }

    #[test]
    fn t_validation() {
        assert!(validate_t(0.1).is_ok());
        assert!(matches!(validate_t(1.5), Err(Error::TOutOfRange(_))));
        assert!(matches!(validate_t(0.0), Err(Error::TOutOfRange(_))));
        assert!(matches!(validate_t(1e-6), Err(Error::TUnderflow(_))));
    }

    #[test]
    fn rescaled_line_approaches_tropical_line() {
        let f = LaurentPolynomial::parse("1 + z1 + z2", 2).unwrap();
        let mut weights = DegenerationWeights::new();
        weights.insert(LatticePoint::from([0, 0]), 0.0);
        weights.insert(LatticePoint::from([1, 0]), 1.0);
        weights.insert(LatticePoint::from([0, 1]), 1.0);
        let gamma = corner_locus_2d(&weights.to_lifting().unwrap()).unwrap();
        let window = comparison_window(&gamma).unwrap();
        let budget = CloudBudget {
            lines: 160,
            fibers: 8,
            max_points: 20_000,
        };
        let reference: PointCloud2D = sample_complex(&gamma, 0.05, 20.0)
            .into_iter()
            .filter(|p| window.contains(*p))
            .collect();
        let d2 = {
            let c = rescaled_amoeba(&f, &weights, (-2.0f64).exp(), window, &budget).unwrap();
            hausdorff(&c, &reference).unwrap()
        };
        let d8 = {
            let c = rescaled_amoeba(&f, &weights, (-8.0f64).exp(), window, &budget).unwrap();
            hausdorff(&c, &reference).unwrap()
        };
        assert!(d8 < d2, "d_H should shrink: d2 = {d2}, d8 = {d8}");
    }

    #[test]
    fn monomial_family_is_degenerate() {
        let f = LaurentPolynomial::parse("3*z1*z2", 2).unwrap();
        let mut weights = DegenerationWeights::new();
        weights.insert(LatticePoint::from([1, 1]), 0.0);
        let err = convergence_sweep(&f, &weights, &[0.1], &CloudBudget::default());
        assert!(matches!(err, Err(Error::EmptyAmoeba(_))));
    }
}
