//! Newton polytope combinatorics in exact integer arithmetic.
//!
//! The plane is the fully supported case: hulls via monotone chain with
//! i128 cross products, facet normals as primitive integer vectors, and
//! lattice-point enumeration with vertex / boundary / interior
//! classification. For n ≥ 3 vertex and interior queries fall back to exact
//! rational linear programs, which is all the regime classifier needs.

use crate::error::{Error, Result};
use crate::laurent::{LatticePoint, LaurentPolynomial};
use crate::linprog::{self, Problem, Solution};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// Classification of a lattice point against a polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PointClass {
    Vertex,
    BoundaryNonVertex,
    Interior,
    Outside,
}

/// Position of the support relative to the Newton polytope. The classifier
/// returns the most specific regime that applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    MaximallySparse,
    BoundarySupported,
    InteriorSupported,
}

/// A facet inequality ⟨normal, p⟩ ≤ offset with primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

/// Convex hull of a set of lattice points. In the plane the vertices are
/// stored counterclockwise; facets pair each polygon edge with its outward
/// primitive normal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NewtonPolytope {
    dim: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
}

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i128 {
    let (ax, ay) = ((a[0] - o[0]) as i128, (a[1] - o[1]) as i128);
    let (bx, by) = ((b[0] - o[0]) as i128, (b[1] - o[1]) as i128);
    ax * by - ay * bx
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NewtonPolytope {
    /// Convex hull in exact integer arithmetic. Degenerate (not
    /// full-dimensional) inputs are rejected.
    pub fn convex_hull(points: &BTreeSet<LatticePoint>) -> Result<Self> {
        let Some(first) = points.iter().next() else {
            return Err(Error::DegenerateSupport("no points".into()));
        };
        let dim = first.dim();
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        match dim {
            1 => Self::hull_1d(points),
            2 => Self::hull_2d(points),
            _ => Self::hull_nd(points, dim),
        }
    }

    pub fn from_support(f: &LaurentPolynomial) -> Result<Self> {
        let support: BTreeSet<LatticePoint> = f.support().cloned().collect();
        Self::convex_hull(&support)
    }

    fn hull_1d(points: &BTreeSet<LatticePoint>) -> Result<Self> {
        let lo = points.iter().map(|p| p.coords()[0]).min().unwrap();
        let hi = points.iter().map(|p| p.coords()[0]).max().unwrap();
        if lo == hi {
            return Err(Error::DegenerateSupport("single point in dimension 1".into()));
        }
        Ok(NewtonPolytope {
            dim: 1,
            vertices: vec![LatticePoint::from([lo]), LatticePoint::from([hi])],
            facets: vec![
                Facet { normal: vec![1], offset: hi },
                Facet { normal: vec![-1], offset: -lo },
            ],
        })
    }

    fn hull_2d(points: &BTreeSet<LatticePoint>) -> Result<Self> {
        // Andrew's monotone chain; strict turns only, so collinear points
        // never end up on the vertex list.
        fn half_hull<'a>(pts: impl Iterator<Item = &'a LatticePoint>) -> Vec<&'a LatticePoint> {
            let mut chain: Vec<&LatticePoint> = Vec::new();
            for p in pts {
                while chain.len() >= 2
                    && cross(
                        chain[chain.len() - 2].coords(),
                        chain[chain.len() - 1].coords(),
                        p.coords(),
                    ) <= 0
                {
                    chain.pop();
                }
                chain.push(p);
            }
            chain
        }
        let lower = half_hull(points.iter()); // BTreeSet iterates in lex order
        let upper = half_hull(points.iter().rev());
        // lower runs min..max, upper max..min; drop upper's endpoints to
        // close the counterclockwise cycle without duplicates.
        let mut vertices: Vec<LatticePoint> = lower.iter().map(|p| (*p).clone()).collect();
        for v in upper.iter().skip(1).take(upper.len().saturating_sub(2)) {
            vertices.push((*v).clone());
        }
        if vertices.len() < 3 {
            return Err(Error::DegenerateSupport(
                "support is collinear in dimension 2".into(),
            ));
        }
        let mut facets = Vec::with_capacity(vertices.len());
        for i in 0..vertices.len() {
            let a = vertices[i].coords();
            let b = vertices[(i + 1) % vertices.len()].coords();
            let d = [b[0] - a[0], b[1] - a[1]];
            let g = gcd(d[0], d[1]);
            // CCW polygon: the outward normal of edge a->b is (dy, -dx).
            let normal = vec![d[1] / g, -d[0] / g];
            let offset = normal[0] * a[0] + normal[1] * a[1];
            facets.push(Facet { normal, offset });
        }
        Ok(NewtonPolytope {
            dim: 2,
            vertices,
            facets,
        })
    }

    fn hull_nd(points: &BTreeSet<LatticePoint>, dim: usize) -> Result<Self> {
        if affine_rank(points) < dim {
            return Err(Error::DegenerateSupport(format!(
                "support does not span dimension {dim}"
            )));
        }
        let mut vertices = Vec::new();
        for p in points {
            if !in_convex_hull_of_others(points, p) {
                vertices.push(p.clone());
            }
        }
        // Facet enumeration is not needed by any query in n >= 3.
        Ok(NewtonPolytope {
            dim,
            vertices,
            facets: Vec::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices; counterclockwise starting at the lexicographic minimum in
    /// the plane.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_vertex(&self, p: &LatticePoint) -> bool {
        self.vertices.contains(p)
    }

    /// Classifies an arbitrary lattice point against the polytope.
    pub fn classify_point(&self, p: &LatticePoint) -> Result<PointClass> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        if self.is_vertex(p) {
            return Ok(PointClass::Vertex);
        }
        if self.dim <= 2 {
            let mut on_boundary = false;
            for facet in &self.facets {
                let v: i64 = facet
                    .normal
                    .iter()
                    .zip(p.coords())
                    .map(|(&n, &c)| n.checked_mul(c).expect("facet value overflow"))
                    .sum();
                if v > facet.offset {
                    return Ok(PointClass::Outside);
                }
                if v == facet.offset {
                    on_boundary = true;
                }
            }
            Ok(if on_boundary {
                PointClass::BoundaryNonVertex
            } else {
                PointClass::Interior
            })
        } else {
            let support: BTreeSet<LatticePoint> = self.all_defining_points(p);
            if !point_in_hull(&support, p) {
                return Ok(PointClass::Outside);
            }
            if point_in_interior(&support, p) {
                Ok(PointClass::Interior)
            } else {
                Ok(PointClass::BoundaryNonVertex)
            }
        }
    }

    fn all_defining_points(&self, _p: &LatticePoint) -> BTreeSet<LatticePoint> {
        self.vertices.iter().cloned().collect()
    }

    /// All lattice points of the polytope with their classification, in
    /// lexicographic order. Plane only.
    pub fn lattice_points(&self) -> Result<Vec<(LatticePoint, PointClass)>> {
        if self.dim != 2 {
            return Err(Error::UnsupportedDimension(self.dim));
        }
        let xs: Vec<i64> = self.vertices.iter().map(|v| v.coords()[0]).collect();
        let ys: Vec<i64> = self.vertices.iter().map(|v| v.coords()[1]).collect();
        let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
        let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                let p = LatticePoint::from([x, y]);
                match self.classify_point(&p)? {
                    PointClass::Outside => {}
                    class => out.push((p, class)),
                }
            }
        }
        Ok(out)
    }
}

/// Affine rank of a point set (dimension of its affine span).
fn affine_rank(points: &BTreeSet<LatticePoint>) -> usize {
    let mut it = points.iter();
    let Some(base) = it.next() else { return 0 };
    let mut rows: Vec<Vec<BigRational>> = it
        .map(|p| {
            p.coords()
                .iter()
                .zip(base.coords())
                .map(|(&a, &b)| BigRational::from_integer((a - b).into()))
                .collect()
        })
        .collect();
    // Gaussian elimination over Q.
    let cols = base.dim();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone() / inv.clone();
                for c in 0..cols {
                    let delta = factor.clone() * rows[rank][c].clone();
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Is p in the convex hull of `points \ {p}`? Exact LP feasibility.
fn in_convex_hull_of_others(points: &BTreeSet<LatticePoint>, p: &LatticePoint) -> bool {
    let others: Vec<&LatticePoint> = points.iter().filter(|q| *q != p).collect();
    point_in_hull_of(&others, p)
}

fn point_in_hull(points: &BTreeSet<LatticePoint>, p: &LatticePoint) -> bool {
    let all: Vec<&LatticePoint> = points.iter().collect();
    point_in_hull_of(&all, p)
}

fn point_in_hull_of(points: &[&LatticePoint], p: &LatticePoint) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = p.dim();
    let mut eq = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        let row: Vec<BigRational> = points
            .iter()
            .map(|q| BigRational::from_integer(q.coords()[d].into()))
            .collect();
        eq.push((row, BigRational::from_integer(p.coords()[d].into())));
    }
    eq.push((vec![BigRational::one(); points.len()], BigRational::one()));
    let problem = Problem {
        objective: vec![BigRational::zero(); points.len()],
        eq,
        le: vec![],
    };
    matches!(linprog::solve(&problem), Solution::Optimal { .. })
}

/// Is p in the interior of the hull? True iff p ± εe_i stays inside for all
/// coordinate directions, checked by 2n exact LPs.
fn point_in_interior(points: &BTreeSet<LatticePoint>, p: &LatticePoint) -> bool {
    let all: Vec<&LatticePoint> = points.iter().collect();
    let dim = p.dim();
    for d in 0..dim {
        for sign in [1i64, -1] {
            // maximize ε subject to Σ λ_q q = p + ε sign e_d, Σ λ = 1, λ ≥ 0, ε ≤ 1
            let nvars = all.len() + 1;
            let mut eq = Vec::with_capacity(dim + 1);
            for dd in 0..dim {
                let mut row: Vec<BigRational> = all
                    .iter()
                    .map(|q| BigRational::from_integer(q.coords()[dd].into()))
                    .collect();
                row.push(if dd == d {
                    BigRational::from_integer((-sign).into())
                } else {
                    BigRational::zero()
                });
                eq.push((row, BigRational::from_integer(p.coords()[dd].into())));
            }
            let mut row = vec![BigRational::one(); all.len()];
            row.push(BigRational::zero());
            eq.push((row, BigRational::one()));
            let mut cap = vec![BigRational::zero(); all.len()];
            cap.push(BigRational::one());
            let mut objective = vec![BigRational::zero(); nvars];
            objective[all.len()] = -BigRational::one();
            let problem = Problem {
                objective,
                eq,
                le: vec![(cap, BigRational::one())],
            };
            match linprog::solve(&problem) {
                Solution::Optimal { value, .. } if value < BigRational::zero() => {}
                _ => return false,
            }
        }
    }
    true
}

/// True iff every support point of f is a vertex of its Newton polytope.
pub fn is_maximally_sparse(f: &LaurentPolynomial) -> Result<bool> {
    let hull = NewtonPolytope::from_support(f)?;
    Ok(f.support().all(|alpha| hull.is_vertex(alpha)))
}

/// The three-regime classification of the support against the polytope.
pub fn classify_regime(f: &LaurentPolynomial) -> Result<Regime> {
    let hull = NewtonPolytope::from_support(f)?;
    let mut all_vertices = true;
    let mut on_boundary = true;
    for alpha in f.support() {
        match hull.classify_point(alpha)? {
            PointClass::Vertex => {}
            PointClass::BoundaryNonVertex => all_vertices = false,
            PointClass::Interior => {
                all_vertices = false;
                on_boundary = false;
            }
            PointClass::Outside => unreachable!("support point outside its own hull"),
        }
    }
    Ok(if all_vertices {
        Regime::MaximallySparse
    } else if on_boundary {
        Regime::BoundarySupported
    } else {
        Regime::InteriorSupported
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hull_of(pts: &[[i64; 2]]) -> Result<NewtonPolytope> {
        let set: BTreeSet<LatticePoint> = pts.iter().map(|&p| LatticePoint::from(p)).collect();
        NewtonPolytope::convex_hull(&set)
    }

    #[test]
    fn square_has_four_vertices() {
        let h = hull_of(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        assert_eq!(h.vertices().len(), 4);
        assert_eq!(h.facets().len(), 4);
    }

    #[test]
    fn interior_point_is_not_a_vertex() {
        let h = hull_of(&[[0, 0], [3, 0], [0, 3], [1, 1]]).unwrap();
        assert_eq!(h.vertices().len(), 3);
        assert!(!h.is_vertex(&LatticePoint::from([1, 1])));
    }

    #[test]
    fn collinear_input_is_degenerate() {
        assert!(matches!(
            hull_of(&[[0, 0], [2, 0], [4, 0]]),
            Err(Error::DegenerateSupport(_))
        ));
    }

    #[test]
    fn unit_triangle_lattice_points() {
        let h = hull_of(&[[0, 0], [1, 0], [0, 1]]).unwrap();
        let pts = h.lattice_points().unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|(_, c)| *c == PointClass::Vertex));
    }

    #[test]
    fn dilated_triangle_classification() {
        let h = hull_of(&[[0, 0], [2, 0], [0, 2]]).unwrap();
        let pts = h.lattice_points().unwrap();
        assert_eq!(pts.len(), 6);
        let count = |class: PointClass| pts.iter().filter(|(_, c)| *c == class).count();
        assert_eq!(count(PointClass::Vertex), 3);
        assert_eq!(count(PointClass::BoundaryNonVertex), 3);
        assert_eq!(count(PointClass::Interior), 0);
    }

    #[test]
    fn triangle_with_single_interior_point() {
        let h = hull_of(&[[0, 0], [3, 0], [0, 3]]).unwrap();
        let pts = h.lattice_points().unwrap();
        assert_eq!(pts.len(), 10);
        let interior: Vec<_> = pts
            .iter()
            .filter(|(_, c)| *c == PointClass::Interior)
            .map(|(p, _)| p.clone())
            .collect();
        assert_eq!(interior, vec![LatticePoint::from([1, 1])]);
    }

    #[test]
    fn lattice_count_closed_form() {
        // conv{(0,0),(a,0),(0,a)} holds (a+1)(a+2)/2 lattice points.
        for a in 1..=6 {
            let h = hull_of(&[[0, 0], [a, 0], [0, a]]).unwrap();
            let n = h.lattice_points().unwrap().len() as i64;
            assert_eq!(n, (a + 1) * (a + 2) / 2, "a = {a}");
        }
    }

    #[test]
    fn maximal_sparsity_cases() {
        let f = LaurentPolynomial::parse("1 + z1 + z2", 2).unwrap();
        assert!(is_maximally_sparse(&f).unwrap());
        let f = LaurentPolynomial::parse("1 + z1^2 + z2^2 + z1*z2", 2).unwrap();
        assert!(!is_maximally_sparse(&f).unwrap());
        let f = LaurentPolynomial::parse("1 + z1 + z1^2 + z2", 2).unwrap();
        assert!(!is_maximally_sparse(&f).unwrap());
    }

    #[test]
    fn regime_classification_cases() {
        let f = LaurentPolynomial::parse("1 + z1 + z2", 2).unwrap();
        assert_eq!(classify_regime(&f).unwrap(), Regime::MaximallySparse);
        let f =
            LaurentPolynomial::parse("1 + z1 + z1^2 + z2 + z1^2*z2^2 + z2^2", 2).unwrap();
        assert_eq!(classify_regime(&f).unwrap(), Regime::BoundarySupported);
        let f = LaurentPolynomial::parse("1 + z1^3 + z2^3 + 10*z1*z2", 2).unwrap();
        assert_eq!(classify_regime(&f).unwrap(), Regime::InteriorSupported);
    }

    #[test]
    fn hull_nd_vertices_via_lp() {
        // 3-D simplex plus centroid-ish interior point.
        let pts: BTreeSet<LatticePoint> = [
            [0, 0, 0],
            [4, 0, 0],
            [0, 4, 0],
            [0, 0, 4],
            [1, 1, 1],
        ]
        .iter()
        .map(|&p| LatticePoint::from(p))
        .collect();
        let h = NewtonPolytope::convex_hull(&pts).unwrap();
        assert_eq!(h.vertices().len(), 4);
        assert!(!h.is_vertex(&LatticePoint::from([1, 1, 1])));
        assert_eq!(
            h.classify_point(&LatticePoint::from([1, 1, 1])).unwrap(),
            PointClass::Interior
        );
        assert_eq!(
            h.classify_point(&LatticePoint::from([2, 2, 0])).unwrap(),
            PointClass::BoundaryNonVertex
        );
    }
}
