//! Tropical polynomials, regular subdivisions, and corner loci.
//!
//! A lifting ν on a finite support A induces the convex piecewise affine
//! function F(x) = max_{α∈A} (⟨α,x⟩ − ν(α)). Its corner locus (the set
//! where the max is attained at least twice) is a plane tropical curve,
//! dual to the regular subdivision of conv(A) obtained by projecting the
//! lower faces of the lifted configuration {(α, ν(α))}.
//!
//! Heights are generic over [`Scalar`]: `f64` with relative tie tolerance,
//! or `BigRational` with exact ties.

use crate::error::{Error, Result};
use crate::laurent::LatticePoint;
use crate::linprog::{self, Problem, Solution};
use crate::polytope::NewtonPolytope;
use crate::scalar::{comparison_slack, Scalar};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Support points with real heights ν(α). The induced tropical polynomial
/// is F(x) = max (⟨α,x⟩ − ν(α)); Ronkin-derived data enters as ν = −c.
#[derive(Clone, Debug, PartialEq)]
pub struct Lifting<S> {
    dim: usize,
    heights: BTreeMap<LatticePoint, S>,
}

impl<S: Scalar> Lifting<S> {
    pub fn new(heights: BTreeMap<LatticePoint, S>) -> Result<Self> {
        let Some(first) = heights.keys().next() else {
            return Err(Error::DegenerateSupport("empty lifting".into()));
        };
        let dim = first.dim();
        for p in heights.keys() {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        Ok(Lifting { dim, heights })
    }

    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticePoint, S)>,
    {
        Self::new(pairs.into_iter().collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &LatticePoint> {
        self.heights.keys()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&LatticePoint, &S)> {
        self.heights.iter()
    }

    pub fn height(&self, alpha: &LatticePoint) -> Option<&S> {
        self.heights.get(alpha)
    }

    /// Height map scaled by a positive factor; used for the family member
    /// at parameter t, whose effective lifting is ν·(−log t).
    pub fn scale_heights(&self, factor: &S) -> Lifting<S> {
        Lifting {
            dim: self.dim,
            heights: self
                .heights
                .iter()
                .map(|(p, h)| (p.clone(), h.clone() * factor.clone()))
                .collect(),
        }
    }

    pub fn to_f64(&self) -> Lifting<f64> {
        Lifting {
            dim: self.dim,
            heights: self
                .heights
                .iter()
                .map(|(p, h)| (p.clone(), h.as_f64()))
                .collect(),
        }
    }

    /// F(x) = max (⟨α,x⟩ − ν(α)) together with the argmax set. Points within
    /// the relative tie tolerance of the max are included; for exact scalars
    /// the tolerance is zero.
    pub fn trop_eval(&self, x: &[S]) -> (S, Vec<LatticePoint>) {
        assert_eq!(x.len(), self.dim, "evaluation point dimension mismatch");
        let mut best: Option<S> = None;
        let mut values = Vec::with_capacity(self.heights.len());
        for (alpha, nu) in &self.heights {
            let v = alpha.dot_scalar(x) - nu.clone();
            if best.as_ref().is_none_or(|b| v > *b) {
                best = Some(v.clone());
            }
            values.push((alpha, v));
        }
        let best = best.expect("lifting is nonempty");
        let slack = comparison_slack(&best);
        let threshold = best.clone() - slack;
        let argmax = values
            .into_iter()
            .filter(|(_, v)| *v >= threshold)
            .map(|(a, _)| a.clone())
            .collect();
        (best, argmax)
    }

    /// The Newton polytope of the support.
    pub fn hull(&self) -> Result<NewtonPolytope> {
        let pts: BTreeSet<LatticePoint> = self.heights.keys().cloned().collect();
        NewtonPolytope::convex_hull(&pts)
    }
}

/// A cell-wise description of the regular subdivision induced by a lifting.
/// Cells list their polygon corners counterclockwise starting at the
/// lexicographic minimum; lifted points lying on a lower face but not at a
/// corner of it are not subdivision vertices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Subdivision {
    cells: Vec<Vec<LatticePoint>>,
    vertex_set: BTreeSet<LatticePoint>,
}

impl Subdivision {
    pub fn cells(&self) -> &[Vec<LatticePoint>] {
        &self.cells
    }

    pub fn vertex_set(&self) -> &BTreeSet<LatticePoint> {
        &self.vertex_set
    }

    pub fn is_vertex(&self, alpha: &LatticePoint) -> bool {
        self.vertex_set.contains(alpha)
    }

    /// Subdivision edges shared by two cells.
    pub fn interior_edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        self.edge_census()
            .into_iter()
            .filter(|(_, cells)| cells.len() == 2)
            .map(|(e, _)| e)
            .collect()
    }

    /// Subdivision edges on the polytope boundary (single incident cell).
    pub fn boundary_edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        self.edge_census()
            .into_iter()
            .filter(|(_, cells)| cells.len() == 1)
            .map(|(e, _)| e)
            .collect()
    }

    fn edge_census(&self) -> BTreeMap<(LatticePoint, LatticePoint), Vec<usize>> {
        let mut census: BTreeMap<(LatticePoint, LatticePoint), Vec<usize>> = BTreeMap::new();
        for (ci, cell) in self.cells.iter().enumerate() {
            for i in 0..cell.len() {
                let a = cell[i].clone();
                let b = cell[(i + 1) % cell.len()].clone();
                let key = if a <= b { (a, b) } else { (b, a) };
                census.entry(key).or_default().push(ci);
            }
        }
        census
    }

    /// Subdivision vertices lying in the interior of the given polytope.
    pub fn interior_vertices(&self, hull: &NewtonPolytope) -> Result<Vec<LatticePoint>> {
        let mut out = Vec::new();
        for v in &self.vertex_set {
            if hull.classify_point(v)? == crate::polytope::PointClass::Interior {
                out.push(v.clone());
            }
        }
        Ok(out)
    }
}

/// Corner locus of a plane tropical polynomial: vertices dual to the
/// subdivision's 2-cells, bounded edges dual to interior subdivision edges,
/// rays dual to boundary subdivision edges (outward primitive direction).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolyhedralComplex<S> {
    pub vertices: Vec<[S; 2]>,
    pub edges: Vec<(usize, usize)>,
    pub rays: Vec<Ray>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ray {
    pub base: usize,
    pub dir: [i64; 2],
}

impl<S: Scalar> PolyhedralComplex<S> {
    pub fn to_f64(&self) -> PolyhedralComplex<f64> {
        PolyhedralComplex {
            vertices: self
                .vertices
                .iter()
                .map(|v| [v[0].as_f64(), v[1].as_f64()])
                .collect(),
            edges: self.edges.clone(),
            rays: self.rays.clone(),
        }
    }

    /// Axis-aligned bounding box of the vertices.
    pub fn vertex_bbox(&self) -> Option<([f64; 2], [f64; 2])> {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for v in &self.vertices {
            for d in 0..2 {
                let c = v[d].as_f64();
                min[d] = min[d].min(c);
                max[d] = max[d].max(c);
            }
        }
        if self.vertices.is_empty() {
            None
        } else {
            Some((min, max))
        }
    }
}

/// Regular subdivision of the Newton polytope of the lifted support: the
/// projections of the lower faces of conv{(α, ν(α))} ⊂ R³.
pub fn regular_subdivision<S: Scalar>(l: &Lifting<S>) -> Result<Subdivision> {
    if l.dim() != 2 {
        return Err(Error::UnsupportedDimension(l.dim()));
    }
    l.hull()?; // rejects degenerate supports
    let pts: Vec<(&LatticePoint, &S)> = l.pairs().collect();
    let m = pts.len();

    // Enumerate candidate lower-face planes z = c·x + d through affinely
    // independent triples and keep the supporting ones. Distinct supporting
    // planes have distinct equality sets, so deduplication by equality set
    // yields exactly the 2-dimensional lower faces.
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                let (ai, aj, ak) = (pts[i].0.coords(), pts[j].0.coords(), pts[k].0.coords());
                let det2 = (aj[0] - ai[0]) as i128 * (ak[1] - ai[1]) as i128
                    - (aj[1] - ai[1]) as i128 * (ak[0] - ai[0]) as i128;
                if det2 == 0 {
                    continue;
                }
                let Some(plane) = plane_through(pts[i], pts[j], pts[k]) else {
                    continue;
                };
                let mut equality = Vec::new();
                let mut supporting = true;
                for (idx, (alpha, nu)) in pts.iter().enumerate() {
                    let lift = plane_value(&plane, alpha);
                    let slack = comparison_slack(&lift) + comparison_slack(nu);
                    let diff = (*nu).clone() - lift;
                    if diff < S::zero() - slack.clone() {
                        supporting = false;
                        break;
                    }
                    if diff <= slack {
                        equality.push(idx);
                    }
                }
                if supporting {
                    faces.insert(equality);
                }
            }
        }
    }

    let mut cells: Vec<Vec<LatticePoint>> = Vec::new();
    for face in &faces {
        let members: BTreeSet<LatticePoint> =
            face.iter().map(|&i| pts[i].0.clone()).collect();
        let cell_hull = NewtonPolytope::convex_hull(&members)?;
        cells.push(cell_hull.vertices().to_vec());
    }
    cells.sort();
    let vertex_set: BTreeSet<LatticePoint> = cells.iter().flatten().cloned().collect();
    Ok(Subdivision { cells, vertex_set })
}

/// Plane z = c1 x1 + c2 x2 + d through three lifted points; None when the
/// base points are affinely dependent.
fn plane_through<S: Scalar>(
    a: (&LatticePoint, &S),
    b: (&LatticePoint, &S),
    c: (&LatticePoint, &S),
) -> Option<[S; 3]> {
    let (pa, pb, pc) = (a.0.coords(), b.0.coords(), c.0.coords());
    let m = [
        [S::from_int(pb[0] - pa[0]), S::from_int(pb[1] - pa[1])],
        [S::from_int(pc[0] - pa[0]), S::from_int(pc[1] - pa[1])],
    ];
    let rhs = [
        b.1.clone() - a.1.clone(),
        c.1.clone() - a.1.clone(),
    ];
    let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
    if det.is_zero() {
        return None;
    }
    let c1 = (rhs[0].clone() * m[1][1].clone() - rhs[1].clone() * m[0][1].clone()) / det.clone();
    let c2 = (m[0][0].clone() * rhs[1].clone() - m[1][0].clone() * rhs[0].clone()) / det;
    let d = a.1.clone() - (c1.clone() * S::from_int(pa[0]) + c2.clone() * S::from_int(pa[1]));
    Some([c1, c2, d])
}

fn plane_value<S: Scalar>(plane: &[S; 3], p: &LatticePoint) -> S {
    plane[0].clone() * S::from_int(p.coords()[0])
        + plane[1].clone() * S::from_int(p.coords()[1])
        + plane[2].clone()
}

/// True iff some x makes α the strict unique maximizer, i.e. the lifted
/// point (α, ν(α)) is a vertex of the lower hull. Decided by maximizing the
/// domination margin with an LP; equality-only points return false.
pub fn is_subdivision_vertex<S: Scalar>(l: &Lifting<S>, alpha: &LatticePoint) -> bool {
    let nu_alpha = l
        .height(alpha)
        .expect("query point must belong to the lifting")
        .clone();
    let n = l.dim();
    // Variables: x⁺ (n), x⁻ (n), δ⁺, δ⁻; maximize δ = δ⁺ − δ⁻ subject to
    // ⟨β−α, x⟩ + δ ≤ ν(β) − ν(α) for all β ≠ α and δ ≤ 1.
    let nvars = 2 * n + 2;
    let mut le = Vec::new();
    for (beta, nu_beta) in l.pairs() {
        if beta == alpha {
            continue;
        }
        let d = beta.sub(alpha);
        let mut row = Vec::with_capacity(nvars);
        for &c in d.coords() {
            row.push(S::from_int(c));
        }
        for &c in d.coords() {
            row.push(S::from_int(-c));
        }
        row.push(S::one());
        row.push(S::zero() - S::one());
        le.push((row, nu_beta.clone() - nu_alpha.clone()));
    }
    if le.is_empty() {
        return true; // single lifted point dominates trivially
    }
    let mut cap = vec![S::zero(); nvars];
    cap[2 * n] = S::one();
    cap[2 * n + 1] = S::zero() - S::one();
    le.push((cap, S::one()));
    let mut objective = vec![S::zero(); nvars];
    objective[2 * n] = S::zero() - S::one();
    objective[2 * n + 1] = S::one();
    let problem = Problem {
        objective,
        eq: vec![],
        le,
    };
    match linprog::solve(&problem) {
        Solution::Optimal { value, .. } => {
            let margin = S::zero() - value;
            margin > comparison_slack(&S::one())
        }
        Solution::Unbounded => true,
        Solution::Infeasible => unreachable!("margin LP is always feasible"),
    }
}

/// A convex-combination witness that α is redundant: α = Σ λ_i β_i over
/// other support points with ν(α) ≥ Σ λ_i ν(β_i). When the inequality is
/// strict the affine piece of α is strictly dominated everywhere.
#[derive(Clone, Debug, PartialEq)]
pub struct RedundancyCertificate<S> {
    pub combination: Vec<(LatticePoint, S)>,
    /// ν(α) − Σ λ_i ν(β_i) ≥ 0.
    pub slack: S,
}

impl<S: Scalar> RedundancyCertificate<S> {
    pub fn is_strict(&self) -> bool {
        self.slack > comparison_slack(&self.slack)
    }
}

/// Searches for a redundancy certificate by minimizing Σ λ_i ν(β_i) over
/// convex combinations of the other support points equal to α. Returns
/// None when α is not such a combination or every combination sits below
/// the lifted point.
pub fn redundancy_criterion<S: Scalar>(
    l: &Lifting<S>,
    alpha: &LatticePoint,
) -> Option<RedundancyCertificate<S>> {
    let nu_alpha = l
        .height(alpha)
        .expect("query point must belong to the lifting")
        .clone();
    let others: Vec<(&LatticePoint, &S)> = l.pairs().filter(|(b, _)| *b != alpha).collect();
    if others.is_empty() {
        return None;
    }
    let n = l.dim();
    let mut eq = Vec::with_capacity(n + 1);
    for d in 0..n {
        let row: Vec<S> = others
            .iter()
            .map(|(b, _)| S::from_int(b.coords()[d]))
            .collect();
        eq.push((row, S::from_int(alpha.coords()[d])));
    }
    eq.push((vec![S::one(); others.len()], S::one()));
    let objective: Vec<S> = others.iter().map(|(_, nu)| (*nu).clone()).collect();
    let problem = Problem {
        objective,
        eq,
        le: vec![],
    };
    let (lambda, value) = linprog::solve(&problem).optimal()?;
    let slack = nu_alpha - value;
    if slack < S::zero() - comparison_slack(&slack) {
        return None;
    }
    let combination = others
        .iter()
        .zip(&lambda)
        .filter(|(_, w)| **w > S::zero())
        .map(|((b, _), w)| ((*b).clone(), w.clone()))
        .collect();
    Some(RedundancyCertificate { combination, slack })
}

/// Dualizes the regular subdivision into the corner locus of F: one vertex
/// per 2-cell (the common solution of the cell's tie equations), one bounded
/// edge per interior subdivision edge, one ray per boundary subdivision
/// edge in the outward normal direction.
pub fn corner_locus_2d<S: Scalar>(l: &Lifting<S>) -> Result<PolyhedralComplex<S>> {
    let subdivision = regular_subdivision(l)?;
    let cells = subdivision.cells();

    let mut vertices = Vec::with_capacity(cells.len());
    for cell in cells {
        vertices.push(dual_vertex(l, cell)?);
    }

    let mut edge_cells: BTreeMap<(LatticePoint, LatticePoint), Vec<usize>> = BTreeMap::new();
    for (ci, cell) in cells.iter().enumerate() {
        for i in 0..cell.len() {
            let a = cell[i].clone();
            let b = cell[(i + 1) % cell.len()].clone();
            let key = if a <= b { (a, b) } else { (b, a) };
            edge_cells.entry(key).or_default().push(ci);
        }
    }

    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for ((a, b), incident) in &edge_cells {
        match incident.as_slice() {
            [c1, c2] => edges.push((*c1.min(c2), *c1.max(c2))),
            [c] => {
                // Boundary edge: the dual ray is orthogonal to b − a and
                // points away from the polytope, which for a counterclockwise
                // cell polygon is the side opposite the cell.
                let cell = &cells[*c];
                let (pa, pb) = edge_orientation_in(cell, a, b);
                let d = pb.sub(&pa);
                let g = gcd(d.coords()[0], d.coords()[1]);
                let dir = [d.coords()[1] / g, -d.coords()[0] / g];
                rays.push(Ray { base: *c, dir });
            }
            _ => {
                return Err(Error::DegenerateSupport(format!(
                    "subdivision edge {a}-{b} borders {} cells",
                    incident.len()
                )))
            }
        }
    }
    Ok(PolyhedralComplex {
        vertices,
        edges,
        rays,
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Returns the edge endpoints in the cell's counterclockwise orientation.
fn edge_orientation_in(
    cell: &[LatticePoint],
    a: &LatticePoint,
    b: &LatticePoint,
) -> (LatticePoint, LatticePoint) {
    for i in 0..cell.len() {
        let p = &cell[i];
        let q = &cell[(i + 1) % cell.len()];
        if p == a && q == b {
            return (a.clone(), b.clone());
        }
        if p == b && q == a {
            return (b.clone(), a.clone());
        }
    }
    unreachable!("edge does not belong to the cell");
}

/// Solves the tie equations of a cell's first three corners.
fn dual_vertex<S: Scalar>(l: &Lifting<S>, cell: &[LatticePoint]) -> Result<[S; 2]> {
    if cell.len() < 3 {
        return Err(Error::DegenerateSupport("cell with fewer than 3 corners".into()));
    }
    let nu = |p: &LatticePoint| l.height(p).expect("cell corner is a lifted point").clone();
    let (a0, a1, a2) = (&cell[0], &cell[1], &cell[2]);
    // ⟨a1 − a0, x⟩ = ν(a1) − ν(a0), ⟨a2 − a0, x⟩ = ν(a2) − ν(a0)
    let r1 = a1.sub(a0);
    let r2 = a2.sub(a0);
    let b1 = nu(a1) - nu(a0);
    let b2 = nu(a2) - nu(a0);
    let det = S::from_int(r1.coords()[0]) * S::from_int(r2.coords()[1])
        - S::from_int(r1.coords()[1]) * S::from_int(r2.coords()[0]);
    if det.is_zero() {
        return Err(Error::DegenerateSupport("collinear cell corners".into()));
    }
    let x0 = (b1.clone() * S::from_int(r2.coords()[1])
        - b2.clone() * S::from_int(r1.coords()[1]))
        / det.clone();
    let x1 = (S::from_int(r1.coords()[0]) * b2 - S::from_int(r2.coords()[0]) * b1) / det;
    Ok([x0, x1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn lift_f64(pairs: &[([i64; 2], f64)]) -> Lifting<f64> {
        Lifting::from_pairs(pairs.iter().map(|&(p, h)| (LatticePoint::from(p), h))).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trop_eval_picks_the_max() {
        let l = lift_f64(&[([0, 0], 0.0), ([1, 0], 0.0), ([0, 1], 0.0)]);
        let (v, argmax) = l.trop_eval(&[3.0, 1.0]);
        assert_eq!(v, 3.0);
        assert_eq!(argmax, vec![LatticePoint::from([1, 0])]);
    }

    #[test]
    fn trop_eval_reports_triple_tie() {
        let l = lift_f64(&[([0, 0], 0.0), ([1, 0], 0.0), ([0, 1], 0.0)]);
        let (v, argmax) = l.trop_eval(&[0.0, 0.0]);
        assert_eq!(v, 0.0);
        assert_eq!(argmax.len(), 3);
    }

    #[test]
    fn trop_eval_one_dimensional() {
        let l: Lifting<f64> =
            Lifting::from_pairs([(LatticePoint::from([0]), 0.0), (LatticePoint::from([1]), -1.0)])
                .unwrap();
        let (v, argmax) = l.trop_eval(&[0.0]);
        assert_eq!(v, 1.0);
        assert_eq!(argmax, vec![LatticePoint::from([1])]);
    }

    #[test]
    fn flat_square_is_one_cell() {
        let l = lift_f64(&[([0, 0], 0.0), ([1, 0], 0.0), ([0, 1], 0.0), ([1, 1], 0.0)]);
        let s = regular_subdivision(&l).unwrap();
        assert_eq!(s.cells().len(), 1);
        assert_eq!(s.cells()[0].len(), 4);
        assert_eq!(s.vertex_set().len(), 4);
    }

    #[test]
    fn pulled_interior_point_splits_triangle() {
        let l = lift_f64(&[([0, 0], 0.0), ([3, 0], 0.0), ([0, 3], 0.0), ([1, 1], -1.0)]);
        let s = regular_subdivision(&l).unwrap();
        assert_eq!(s.cells().len(), 3);
        assert!(s.is_vertex(&LatticePoint::from([1, 1])));
    }

    #[test]
    fn pushed_interior_point_is_invisible() {
        let l = lift_f64(&[([0, 0], 0.0), ([3, 0], 0.0), ([0, 3], 0.0), ([1, 1], 1.0)]);
        let s = regular_subdivision(&l).unwrap();
        assert_eq!(s.cells().len(), 1);
        assert!(!s.is_vertex(&LatticePoint::from([1, 1])));
    }

    #[test]
    fn vertex_lp_matches_examples() {
        let flat = lift_f64(&[([0, 0], 0.0), ([1, 0], 0.0), ([0, 1], 0.0), ([1, 1], 0.0)]);
        assert!(is_subdivision_vertex(&flat, &LatticePoint::from([1, 1])));

        let pushed = lift_f64(&[([0, 0], 0.0), ([3, 0], 0.0), ([0, 3], 0.0), ([1, 1], 1.0)]);
        assert!(!is_subdivision_vertex(&pushed, &LatticePoint::from([1, 1])));

        let pulled = lift_f64(&[([0, 0], 0.0), ([3, 0], 0.0), ([0, 3], 0.0), ([1, 1], -1.0)]);
        assert!(is_subdivision_vertex(&pulled, &LatticePoint::from([1, 1])));
    }

    #[test]
    fn vertex_lp_exact_rational() {
        let l: Lifting<BigRational> = Lifting::from_pairs([
            (LatticePoint::from([0, 0]), q(0, 1)),
            (LatticePoint::from([3, 0]), q(0, 1)),
            (LatticePoint::from([0, 3]), q(0, 1)),
            (LatticePoint::from([1, 1]), q(0, 1)),
        ])
        .unwrap();
        // Flat heights: (1,1) lies on the lower face but is not a corner.
        assert!(!is_subdivision_vertex(&l, &LatticePoint::from([1, 1])));
    }

    #[test]
    fn redundancy_certificates() {
        let pushed = lift_f64(&[([0, 0], 0.0), ([3, 0], 0.0), ([0, 3], 0.0), ([1, 1], 1.0)]);
        let cert = redundancy_criterion(&pushed, &LatticePoint::from([1, 1])).unwrap();
        assert!(cert.is_strict());
        assert!((cert.slack - 1.0).abs() < 1e-9);
        let lambda_sum: f64 = cert.combination.iter().map(|(_, w)| *w).sum();
        assert!((lambda_sum - 1.0).abs() < 1e-9);

        let pulled = lift_f64(&[([0, 0], 0.0), ([3, 0], 0.0), ([0, 3], 0.0), ([1, 1], -1.0)]);
        assert!(redundancy_criterion(&pulled, &LatticePoint::from([1, 1])).is_none());

        // A polytope vertex is never a combination of the others.
        assert!(redundancy_criterion(&pulled, &LatticePoint::from([0, 0])).is_none());
    }

    #[test]
    fn tropical_line_corner_locus() {
        let l = lift_f64(&[([0, 0], 0.0), ([1, 0], 0.0), ([0, 1], 0.0)]);
        let c = corner_locus_2d(&l).unwrap();
        assert_eq!(c.vertices.len(), 1);
        assert!(c.vertices[0][0].abs() < 1e-12 && c.vertices[0][1].abs() < 1e-12);
        assert!(c.edges.is_empty());
        let mut dirs: Vec<[i64; 2]> = c.rays.iter().map(|r| r.dir).collect();
        dirs.sort();
        assert_eq!(dirs, vec![[-1, 0], [0, -1], [1, 1]]);
    }

    #[test]
    fn flat_square_corner_locus() {
        let l = lift_f64(&[([0, 0], 0.0), ([1, 0], 0.0), ([0, 1], 0.0), ([1, 1], 0.0)]);
        let c = corner_locus_2d(&l).unwrap();
        assert_eq!(c.vertices.len(), 1);
        assert_eq!(c.edges.len(), 0);
        assert_eq!(c.rays.len(), 4);
    }

    #[test]
    fn subdivided_triangle_corner_locus() {
        let l = lift_f64(&[([0, 0], 0.0), ([3, 0], 0.0), ([0, 3], 0.0), ([1, 1], -1.0)]);
        let c = corner_locus_2d(&l).unwrap();
        // Duality: 3 cells, 3 interior edges, 3 boundary edges.
        assert_eq!(c.vertices.len(), 3);
        assert_eq!(c.edges.len(), 3);
        assert_eq!(c.rays.len(), 3);
        // Hand dualization: ties of {1, e^{3x1}, e^{3x2}, e^{x1+x2+1}}.
        let mut vs: Vec<[f64; 2]> = c.vertices.clone();
        vs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expected = [[-1.0, 0.0], [0.0, -1.0], [1.0, 1.0]];
        for (got, want) in vs.iter().zip(expected) {
            assert!((got[0] - want[0]).abs() < 1e-12);
            assert!((got[1] - want[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn duality_counts_hold_exactly() {
        let l: Lifting<BigRational> = Lifting::from_pairs([
            (LatticePoint::from([0, 0]), q(0, 1)),
            (LatticePoint::from([2, 0]), q(-1, 2)),
            (LatticePoint::from([0, 2]), q(1, 3)),
            (LatticePoint::from([2, 2]), q(-1, 1)),
            (LatticePoint::from([1, 1]), q(-5, 4)),
        ])
        .unwrap();
        let s = regular_subdivision(&l).unwrap();
        let c = corner_locus_2d(&l).unwrap();
        assert_eq!(c.vertices.len(), s.cells().len());
        assert_eq!(c.edges.len(), s.interior_edges().len());
        assert_eq!(c.rays.len(), s.boundary_edges().len());
    }
}
