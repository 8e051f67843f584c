//! Plane amoeba rasterization and complement analysis.
//!
//! The amoeba of f is sampled by fiber root-solving: along each pixel
//! column x₁ the univariate Laurent polynomial z₂ ↦ f(e^{x₁+iθ₁}, z₂) is
//! solved by companion-matrix eigenvalues for a fan of angles θ₁, and every
//! root contributes the point (x₁, log|z₂|). A symmetric pass over rows is
//! unioned in. Within a line the angle fan is refined adaptively until
//! consecutive root positions move by at most one pixel, so the amoeba
//! section of the line is covered without gaps while every marked pixel
//! still holds a genuine root sample.
//!
//! Pixels with no root receive the lopsidedness check: if one term of f
//! dominates the sum of all others in modulus, f cannot vanish on the whole
//! fiber Log⁻¹(x) and the pixel is certified complement.

use crate::error::{Error, Result};
use crate::laurent::{LatticePoint, LaurentPolynomial};
use crate::polytope::NewtonPolytope;
use crate::ronkin::{self, QuadratureSpec};
use crate::tropical::{corner_locus_2d, Lifting};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::VecDeque;
use std::f64::consts::TAU;

/// Axis-aligned window in log space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Box2D {
    pub min: [f64; 2],
    pub max: [f64; 2],
}

impl Box2D {
    pub fn new(min: [f64; 2], max: [f64; 2]) -> Result<Self> {
        if !(min[0] < max[0] && min[1] < max[1]) {
            return Err(Error::Config(format!(
                "box min {min:?} must be componentwise below max {max:?}"
            )));
        }
        Ok(Box2D { min, max })
    }

    pub fn width(&self) -> f64 {
        self.max[0] - self.min[0]
    }

    pub fn height(&self) -> f64 {
        self.max[1] - self.min[1]
    }

    pub fn scaled(&self, factor: f64) -> Box2D {
        Box2D {
            min: [self.min[0] * factor, self.min[1] * factor],
            max: [self.max[0] * factor, self.max[1] * factor],
        }
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        p[0] >= self.min[0] && p[0] <= self.max[0] && p[1] >= self.min[1] && p[1] <= self.max[1]
    }
}

/// Membership verdict for one pixel. Certified pixels carry the index of
/// the dominating term in canonical support order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    InAmoeba,
    CertifiedComplement { term: u32 },
    UncertifiedComplement,
}

/// Rasterized membership grid over a box, with per-pixel root counts.
#[derive(Clone, Debug)]
pub struct AmoebaRaster {
    bounds: Box2D,
    resolution: (usize, usize),
    verdicts: Vec<Verdict>,
    samples: Vec<u32>,
    pub solves: usize,
    pub solve_failures: usize,
}

impl AmoebaRaster {
    pub fn bounds(&self) -> Box2D {
        self.bounds
    }

    pub fn resolution(&self) -> (usize, usize) {
        self.resolution
    }

    fn idx(&self, col: usize, row: usize) -> usize {
        row * self.resolution.0 + col
    }

    pub fn verdict(&self, col: usize, row: usize) -> Verdict {
        self.verdicts[self.idx(col, row)]
    }

    pub fn samples(&self, col: usize, row: usize) -> u32 {
        self.samples[self.idx(col, row)]
    }

    pub fn pixel_width(&self) -> f64 {
        self.bounds.width() / self.resolution.0 as f64
    }

    pub fn pixel_height(&self) -> f64 {
        self.bounds.height() / self.resolution.1 as f64
    }

    pub fn pixel_center(&self, col: usize, row: usize) -> [f64; 2] {
        [
            self.bounds.min[0] + (col as f64 + 0.5) * self.pixel_width(),
            self.bounds.min[1] + (row as f64 + 0.5) * self.pixel_height(),
        ]
    }

    pub fn in_amoeba_count(&self) -> usize {
        self.verdicts
            .iter()
            .filter(|v| **v == Verdict::InAmoeba)
            .count()
    }
}

/// A 4-connected complement region of the raster.
#[derive(Clone, Debug, Serialize)]
pub struct ComplementComponent {
    /// Linear pixel indices (row-major), sorted.
    pub pixels: Vec<u32>,
    /// Does not touch the box boundary.
    pub bounded: bool,
    pub witness_pixel: (u32, u32),
    /// 4-neighbor pixel distance from the witness to the amoeba set
    /// (`u32::MAX` when the raster holds no amoeba pixel at all).
    pub witness_distance: u32,
    pub order: Option<LatticePoint>,
}

/// Raster sampling parameters. `fibers_per_line` is the base angle count
/// per line; refinement may add solves up to `max_solves_per_line`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RasterParams {
    pub resolution: (usize, usize),
    pub fibers_per_line: usize,
    pub max_solves_per_line: usize,
}

impl Default for RasterParams {
    fn default() -> Self {
        RasterParams {
            resolution: (512, 512),
            fibers_per_line: 64,
            max_solves_per_line: 4096,
        }
    }
}

/// Box from the coefficient-lifting spine estimate: corner locus of the
/// lifting ν(α) = −log|a_α|, bounding box of its vertices plus a margin of
/// 2 log-units per side.
pub fn default_box(f: &LaurentPolynomial) -> Result<Box2D> {
    if f.dim() != 2 {
        return Err(Error::UnsupportedDimension(f.dim()));
    }
    if f.is_monomial() {
        return Err(Error::EmptyAmoeba(
            "a monomial has no zeros in the torus".into(),
        ));
    }
    let lifting: Lifting<f64> = Lifting::from_pairs(
        f.terms()
            .map(|(alpha, c)| (alpha.clone(), -c.norm().ln())),
    )?;
    let locus = corner_locus_2d(&lifting)?;
    let (min, max) = locus
        .vertex_bbox()
        .ok_or_else(|| Error::DegenerateSupport("spine estimate has no vertices".into()))?;
    const MARGIN: f64 = 2.0;
    Box2D::new(
        [min[0] - MARGIN, min[1] - MARGIN],
        [max[0] + MARGIN, max[1] + MARGIN],
    )
}

/// Dominating-term certificate: Some(α₀) iff |a_{α₀}| e^{⟨α₀,x⟩} exceeds
/// the sum of all other term moduli, which keeps f nonzero on the fiber.
pub fn lopsided_certificate(f: &LaurentPolynomial, x: &[f64]) -> Option<LatticePoint> {
    let logs: Vec<(&LatticePoint, f64)> = f
        .terms()
        .map(|(alpha, c)| (alpha, c.norm().ln() + alpha.dot(x)))
        .collect();
    let (best_idx, best) = logs
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.total_cmp(&b.1 .1))?;
    let rest: f64 = logs
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != best_idx)
        .map(|(_, (_, w))| (w - best.1).exp())
        .sum();
    // Strict margin keeps the certificate sound on the amoeba boundary,
    // where the inequality is tight and rounding decides the raw compare.
    (rest < 1.0 - 1e-9).then(|| best.0.clone())
}

fn lopsided_term_index(f: &LaurentPolynomial, x: &[f64]) -> Option<u32> {
    let alpha = lopsided_certificate(f, x)?;
    f.support().position(|a| *a == alpha).map(|i| i as u32)
}

enum Axis {
    /// Fix x₁ per line, solve in z₂; a root r yields (x₁, log|r|).
    Columns,
    /// Fix x₂ per line, solve in z₁; a root r yields (log|r|, x₂).
    Rows,
}

struct SolveStats {
    solves: usize,
    failures: usize,
}

/// Fiber solver for one sweep direction: coefficients of the solve variable
/// grouped by its exponent, with log-magnitude offsets for stability.
struct FiberSolver {
    // entries per solve-variable exponent k: (line-variable exponent e,
    // log|a|, arg a)
    groups: Vec<(i64, Vec<(i64, f64, f64)>)>,
    degree: usize,
}

impl FiberSolver {
    fn new(f: &LaurentPolynomial, solve_var: usize, line_var: usize) -> Option<Self> {
        let (k_min, k_max) = f.exponent_range(solve_var);
        if k_max - k_min < 1 {
            return None;
        }
        let mut groups: Vec<(i64, Vec<(i64, f64, f64)>)> =
            (k_min..=k_max).map(|k| (k, Vec::new())).collect();
        for (alpha, c) in f.terms() {
            let k = alpha.coords()[solve_var];
            let e = alpha.coords()[line_var];
            groups[(k - k_min) as usize]
                .1
                .push((e, c.norm().ln(), c.arg()));
        }
        Some(FiberSolver {
            groups,
            degree: (k_max - k_min) as usize,
        })
    }

    /// Roots' log moduli for the fiber at line coordinate `x` and angle
    /// `theta`, sorted and clamped to [lo, hi]. Missing roots (leading
    /// coefficient collapse) are padded at `hi`. None on solver failure.
    fn solve(&self, x: f64, theta: f64, lo: f64, hi: f64) -> Option<Vec<f64>> {
        // Common scale keeps every coefficient magnitude ≤ #terms.
        let scale = self
            .groups
            .iter()
            .flat_map(|(_, terms)| terms.iter().map(|(e, la, _)| la + *e as f64 * x))
            .fold(f64::NEG_INFINITY, f64::max);
        let coeffs: Vec<Complex64> = self
            .groups
            .iter()
            .map(|(_, terms)| {
                let mut c = Complex64::new(0.0, 0.0);
                for (e, la, arg) in terms {
                    let w = la + *e as f64 * x - scale;
                    c += Complex64::from_polar(w.exp(), arg + *e as f64 * theta);
                }
                c
            })
            .collect();
        let max_abs = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
        if !(max_abs > 0.0) || !max_abs.is_finite() {
            return None;
        }
        // Effective degree: drop essentially-zero leading coefficients
        // (their roots sit at infinity, clamped to hi below).
        let mut top = coeffs.len() - 1;
        while top > 0 && coeffs[top].norm() < 1e-250 * max_abs {
            top -= 1;
        }
        let mut logs: Vec<f64> = if top == 0 {
            Vec::new()
        } else if top == 1 {
            let r = -coeffs[0] / coeffs[1];
            vec![r.norm().ln()]
        } else {
            let lead = coeffs[top];
            let m = DMatrix::<Complex64>::from_fn(top, top, |r, c| {
                if c + 1 == r {
                    Complex64::new(1.0, 0.0)
                } else if c == top - 1 {
                    -coeffs[r] / lead
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            let schur = nalgebra::linalg::Schur::try_new(m, 1e-13, 500)?;
            let (_, t) = schur.unpack();
            (0..top).map(|i| t[(i, i)].norm().ln()).collect()
        };
        logs.iter_mut().for_each(|v| *v = v.clamp(lo, hi));
        logs.resize(self.degree, hi);
        logs.sort_by(f64::total_cmp);
        Some(logs)
    }
}

/// Root positions along one line: base fan of `fibers` angles, refined
/// until sorted root lists of adjacent angles differ by at most
/// `step_limit`, capped by `max_solves`.
fn solve_line(
    solver: &FiberSolver,
    x: f64,
    fibers: usize,
    step_limit: f64,
    lo: f64,
    hi: f64,
    max_solves: usize,
) -> (Vec<f64>, SolveStats) {
    let mut out = Vec::new();
    let mut stats = SolveStats {
        solves: 0,
        failures: 0,
    };
    let clamp_lo = lo - step_limit;
    let clamp_hi = hi + step_limit;
    let solve = |theta: f64, stats: &mut SolveStats| -> Option<Vec<f64>> {
        stats.solves += 1;
        let r = solver.solve(x, theta, clamp_lo, clamp_hi);
        if r.is_none() {
            stats.failures += 1;
        }
        r
    };
    let base: Vec<Option<Vec<f64>>> = (0..fibers)
        .map(|j| solve(TAU * j as f64 / fibers as f64, &mut stats))
        .collect();
    for vals in base.iter().flatten() {
        out.extend_from_slice(vals);
    }
    // Refine between consecutive angles (wrapping) while the root lists
    // jump by more than one pixel.
    struct Rec<'a> {
        solver: &'a FiberSolver,
        x: f64,
        step_limit: f64,
        clamp: (f64, f64),
        max_solves: usize,
    }
    impl Rec<'_> {
        fn go(
            &self,
            ta: f64,
            va: &[f64],
            tb: f64,
            vb: &[f64],
            depth: usize,
            out: &mut Vec<f64>,
            stats: &mut SolveStats,
        ) {
            let gap = va
                .iter()
                .zip(vb)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            if gap <= self.step_limit || depth == 0 || stats.solves >= self.max_solves {
                return;
            }
            let tm = 0.5 * (ta + tb);
            stats.solves += 1;
            let Some(vm) = self.solver.solve(self.x, tm, self.clamp.0, self.clamp.1) else {
                stats.failures += 1;
                return;
            };
            out.extend_from_slice(&vm);
            self.go(ta, va, tm, &vm, depth - 1, out, stats);
            self.go(tm, &vm, tb, vb, depth - 1, out, stats);
        }
    }
    let rec = Rec {
        solver,
        x,
        step_limit,
        clamp: (clamp_lo, clamp_hi),
        max_solves,
    };
    for j in 0..fibers {
        let (a, b) = (&base[j], &base[(j + 1) % fibers]);
        if let (Some(va), Some(vb)) = (a, b) {
            let ta = TAU * j as f64 / fibers as f64;
            let tb = TAU * (j + 1) as f64 / fibers as f64;
            rec.go(ta, va, tb, vb, 12, &mut out, &mut stats);
        }
    }
    (out, stats)
}

/// Amoeba sample points from both sweep directions, restricted to the box.
/// `step_limit` controls the refinement resolution in log units.
pub fn sample_points(
    f: &LaurentPolynomial,
    bounds: Box2D,
    lines: usize,
    fibers: usize,
    step_limit: f64,
    max_solves_per_line: usize,
) -> Result<(Vec<[f64; 2]>, usize, usize)> {
    if f.dim() != 2 {
        return Err(Error::UnsupportedDimension(f.dim()));
    }
    let mut points = Vec::new();
    let mut solves = 0usize;
    let mut failures = 0usize;
    for axis in [Axis::Columns, Axis::Rows] {
        let (solve_var, line_var, line_min, line_len, t_min, t_max) = match axis {
            Axis::Columns => (1, 0, bounds.min[0], bounds.width(), bounds.min[1], bounds.max[1]),
            Axis::Rows => (0, 1, bounds.min[1], bounds.height(), bounds.min[0], bounds.max[0]),
        };
        let Some(solver) = FiberSolver::new(f, solve_var, line_var) else {
            continue; // polynomial does not depend on the solve variable
        };
        let results: Vec<(Vec<f64>, SolveStats)> = (0..lines)
            .into_par_iter()
            .map(|i| {
                let x = line_min + (i as f64 + 0.5) * line_len / lines as f64;
                solve_line(&solver, x, fibers, step_limit, t_min, t_max, max_solves_per_line)
            })
            .collect();
        for (i, (values, stats)) in results.into_iter().enumerate() {
            let x = line_min + (i as f64 + 0.5) * line_len / lines as f64;
            solves += stats.solves;
            failures += stats.failures;
            for v in values {
                if v < t_min || v > t_max {
                    continue;
                }
                let p = match axis {
                    Axis::Columns => [x, v],
                    Axis::Rows => [v, x],
                };
                points.push(p);
            }
        }
    }
    if failures * 100 > solves {
        return Err(Error::FiberFailures {
            failed: failures,
            total: solves,
        });
    }
    Ok((points, solves, failures))
}

/// Rasterizes the amoeba over `bounds`: dual-pass fiber solving marks
/// `InAmoeba` pixels, all remaining pixels receive the lopsidedness check.
pub fn raster_2d(
    f: &LaurentPolynomial,
    bounds: Box2D,
    params: &RasterParams,
) -> Result<AmoebaRaster> {
    if f.dim() != 2 {
        return Err(Error::UnsupportedDimension(f.dim()));
    }
    // A monomial never vanishes on the torus: nothing to solve, every pixel
    // is certified by its own single term.
    if !f.is_monomial() {
        let (k_min, k_max) = f.exponent_range(1);
        if k_max - k_min < 1 {
            return Err(Error::DegenerateSupport(
                "polynomial does not depend on z2 after Laurent normalization".into(),
            ));
        }
    }
    let (w, h) = params.resolution;
    assert!(w >= 2 && h >= 2, "resolution too small");
    let mut raster = AmoebaRaster {
        bounds,
        resolution: (w, h),
        verdicts: vec![Verdict::UncertifiedComplement; w * h],
        samples: vec![0; w * h],
        solves: 0,
        solve_failures: 0,
    };
    let step_limit = raster.pixel_height().min(raster.pixel_width());
    let lines = w.max(h); // both passes reuse the larger pixel count
    let (points, solves, failures) = sample_points(
        f,
        bounds,
        lines,
        params.fibers_per_line,
        step_limit,
        params.max_solves_per_line,
    )?;
    raster.solves = solves;
    raster.solve_failures = failures;
    let px = raster.pixel_width();
    let py = raster.pixel_height();
    for p in points {
        let col = ((p[0] - bounds.min[0]) / px) as isize;
        let row = ((p[1] - bounds.min[1]) / py) as isize;
        if col < 0 || row < 0 || col >= w as isize || row >= h as isize {
            continue;
        }
        let idx = row as usize * w + col as usize;
        raster.verdicts[idx] = Verdict::InAmoeba;
        raster.samples[idx] += 1;
    }
    // Lopsidedness pass over the remaining pixels.
    let verdicts: Vec<Verdict> = (0..h)
        .into_par_iter()
        .flat_map_iter(|row| {
            let raster = &raster;
            (0..w).map(move |col| {
                let idx = row * w + col;
                if raster.verdicts[idx] == Verdict::InAmoeba {
                    Verdict::InAmoeba
                } else {
                    match lopsided_term_index(f, &raster.pixel_center(col, row)) {
                        Some(term) => Verdict::CertifiedComplement { term },
                        None => Verdict::UncertifiedComplement,
                    }
                }
            })
        })
        .collect();
    raster.verdicts = verdicts;
    Ok(raster)
}

/// 4-connected flood fill over the non-amoeba pixels. Components under 4
/// pixels are discarded as raster noise; the witness is the component pixel
/// farthest (in 4-neighbor pixel distance) from the amoeba set.
pub fn complement_components(raster: &AmoebaRaster) -> Vec<ComplementComponent> {
    let (w, h) = raster.resolution;
    let n = w * h;
    let in_amoeba: Vec<bool> = (0..n)
        .map(|i| raster.verdicts[i] == Verdict::InAmoeba)
        .collect();

    // Multi-source BFS distance to the amoeba set.
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for (i, &a) in in_amoeba.iter().enumerate() {
        if a {
            dist[i] = 0;
            queue.push_back(i);
        }
    }
    let neighbors = |i: usize| {
        let (col, row) = (i % w, i / w);
        let mut out = [usize::MAX; 4];
        let mut k = 0;
        if col > 0 {
            out[k] = i - 1;
            k += 1;
        }
        if col + 1 < w {
            out[k] = i + 1;
            k += 1;
        }
        if row > 0 {
            out[k] = i - w;
            k += 1;
        }
        if row + 1 < h {
            out[k] = i + w;
            k += 1;
        }
        (out, k)
    };
    while let Some(i) = queue.pop_front() {
        let (nbrs, k) = neighbors(i);
        for &j in &nbrs[..k] {
            if dist[j] == u32::MAX {
                dist[j] = dist[i].saturating_add(1);
                queue.push_back(j);
            }
        }
    }

    let mut label = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if in_amoeba[start] || label[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut pixels = Vec::new();
        let mut bounded = true;
        label[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            pixels.push(i as u32);
            let (col, row) = (i % w, i / w);
            if col == 0 || row == 0 || col + 1 == w || row + 1 == h {
                bounded = false;
            }
            let (nbrs, k) = neighbors(i);
            for &j in &nbrs[..k] {
                if !in_amoeba[j] && label[j] == usize::MAX {
                    label[j] = id;
                    queue.push_back(j);
                }
            }
        }
        pixels.sort_unstable();
        if pixels.len() < 4 {
            components.push(None); // keep label indices aligned
            continue;
        }
        // Witness: farthest from the amoeba; with an empty amoeba (all
        // distances MAX) fall back to the pixel nearest the grid center.
        let witness_idx = if dist[pixels[0] as usize] == u32::MAX {
            let (cc, cr) = (w as i64 / 2, h as i64 / 2);
            *pixels
                .iter()
                .min_by_key(|&&p| {
                    let (col, row) = ((p as usize % w) as i64, (p as usize / w) as i64);
                    ((col - cc).pow(2) + (row - cr).pow(2), p)
                })
                .unwrap() as usize
        } else {
            let mut best = pixels[0] as usize;
            for &p in &pixels {
                if dist[p as usize] > dist[best] {
                    best = p as usize;
                }
            }
            best
        };
        components.push(Some(ComplementComponent {
            bounded,
            witness_pixel: ((witness_idx % w) as u32, (witness_idx / w) as u32),
            witness_distance: dist[witness_idx],
            order: None,
            pixels,
        }));
    }
    components.into_iter().flatten().collect()
}

/// Attaches orders: the Ronkin gradient at each witness, rounded to the
/// nearest lattice point. Fails when a witness is too close to the amoeba
/// or the rounding is ambiguous.
pub fn assign_orders(
    f: &LaurentPolynomial,
    raster: &AmoebaRaster,
    components: &mut [ComplementComponent],
    q: &QuadratureSpec,
) -> Result<()> {
    const MIN_WITNESS_DISTANCE: u32 = 3;
    const MAX_ROUNDING_DISTANCE: f64 = 0.25;
    for comp in components.iter_mut() {
        if comp.witness_distance < MIN_WITNESS_DISTANCE {
            return Err(Error::ThinComponent {
                distance: comp.witness_distance,
                required: MIN_WITNESS_DISTANCE,
            });
        }
        let x = raster.pixel_center(comp.witness_pixel.0 as usize, comp.witness_pixel.1 as usize);
        let grad = ronkin::ronkin_gradient(f, &x, q, ronkin::GRADIENT_STEP)?;
        let rounded: Vec<i64> = grad.iter().map(|g| g.round() as i64).collect();
        let distance = grad
            .iter()
            .zip(&rounded)
            .map(|(g, &r)| (g - r as f64).powi(2))
            .sum::<f64>()
            .sqrt();
        if distance >= MAX_ROUNDING_DISTANCE {
            return Err(Error::AmbiguousOrder {
                gradient: grad,
                distance,
            });
        }
        comp.order = Some(LatticePoint::new(rounded));
    }
    Ok(())
}

/// Summary of one component in a solidness report.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub order: Option<LatticePoint>,
    pub bounded: bool,
    pub pixel_count: usize,
    pub witness: [f64; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct SolidReport {
    pub component_count: usize,
    pub vertex_count: usize,
    pub solid: bool,
    pub orders: Vec<LatticePoint>,
    pub bounded_component_count: usize,
    pub components: Vec<ComponentSummary>,
    pub bounds: Box2D,
    pub resolution: (usize, usize),
    pub fibers_per_line: usize,
}

/// Full solidness pipeline: raster, components, orders, verdict. Solid
/// means one complement component per Newton-polytope vertex, with the
/// orders exactly the vertex set.
pub fn is_solid(
    f: &LaurentPolynomial,
    bounds: Box2D,
    params: &RasterParams,
    q: &QuadratureSpec,
) -> Result<SolidReport> {
    let hull = NewtonPolytope::from_support(f)?;
    let raster = raster_2d(f, bounds, params)?;
    let mut components = complement_components(&raster);
    assign_orders(f, &raster, &mut components, q)?;
    let mut orders: Vec<LatticePoint> = components
        .iter()
        .filter_map(|c| c.order.clone())
        .collect();
    orders.sort();
    let mut distinct = orders.clone();
    distinct.dedup();
    let all_vertices = orders.iter().all(|o| hull.is_vertex(o));
    let solid = components.len() == hull.vertices().len()
        && distinct.len() == orders.len()
        && all_vertices;
    Ok(SolidReport {
        component_count: components.len(),
        vertex_count: hull.vertices().len(),
        solid,
        orders,
        bounded_component_count: components.iter().filter(|c| c.bounded).count(),
        components: components
            .iter()
            .map(|c| ComponentSummary {
                order: c.order.clone(),
                bounded: c.bounded,
                pixel_count: c.pixels.len(),
                witness: raster.pixel_center(c.witness_pixel.0 as usize, c.witness_pixel.1 as usize),
            })
            .collect(),
        bounds,
        resolution: params.resolution,
        fibers_per_line: params.fibers_per_line,
    })
}
