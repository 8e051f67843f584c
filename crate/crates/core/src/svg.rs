//! Minimal hand-rolled SVG output for the plane objects of the crate.
//!
//! Coordinate convention: x to the right, y up (flipped into SVG's
//! down-positive axis at write time), 64 px per log-unit by default.

use crate::amoeba::{AmoebaRaster, Box2D, ComplementComponent, Verdict};
use crate::laurent::LatticePoint;
use crate::polytope::NewtonPolytope;
use crate::tropical::{PolyhedralComplex, Subdivision};
use std::fmt::Write as _;

pub const DEFAULT_SCALE: f64 = 64.0;

struct Canvas {
    svg: String,
    scale: f64,
    min: [f64; 2],
    max: [f64; 2],
}

impl Canvas {
    fn new(min: [f64; 2], max: [f64; 2], scale: f64) -> Canvas {
        let w = (max[0] - min[0]) * scale;
        let h = (max[1] - min[1]) * scale;
        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
        );
        Canvas {
            svg,
            scale,
            min,
            max,
        }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (
            (p[0] - self.min[0]) * self.scale,
            (self.max[1] - p[1]) * self.scale,
        )
    }

    fn line(&mut self, a: [f64; 2], b: [f64; 2], stroke: &str, width: f64) {
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        let _ = writeln!(
            self.svg,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{width:.2}"/>"#
        );
    }

    fn circle(&mut self, c: [f64; 2], r: f64, fill: &str) {
        let (cx, cy) = self.map(c);
        let _ = writeln!(
            self.svg,
            r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="{fill}"/>"#
        );
    }

    fn rect(&mut self, min: [f64; 2], max: [f64; 2], fill: &str) {
        let (x, y) = self.map([min[0], max[1]]);
        let w = (max[0] - min[0]) * self.scale;
        let h = (max[1] - min[1]) * self.scale;
        let _ = writeln!(
            self.svg,
            r#"<rect x="{x:.2}" y="{y:.2}" width="{w:.2}" height="{h:.2}" fill="{fill}"/>"#
        );
    }

    fn finish(mut self) -> String {
        self.svg.push_str("</svg>\n");
        self.svg
    }
}

fn lattice_bbox(points: impl Iterator<Item = [f64; 2]>) -> ([f64; 2], [f64; 2]) {
    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    for p in points {
        for d in 0..2 {
            min[d] = min[d].min(p[d]);
            max[d] = max[d].max(p[d]);
        }
    }
    for d in 0..2 {
        min[d] -= 1.0;
        max[d] += 1.0;
    }
    (min, max)
}

fn as_f64(p: &LatticePoint) -> [f64; 2] {
    [p.coords()[0] as f64, p.coords()[1] as f64]
}

/// The subdivision with its Newton polytope and lattice points.
pub fn render_subdivision(sub: &Subdivision, hull: &NewtonPolytope) -> String {
    let (min, max) = lattice_bbox(hull.vertices().iter().map(as_f64));
    let mut canvas = Canvas::new(min, max, DEFAULT_SCALE);
    for cell in sub.cells() {
        for i in 0..cell.len() {
            let a = as_f64(&cell[i]);
            let b = as_f64(&cell[(i + 1) % cell.len()]);
            canvas.line(a, b, "#777777", 1.5);
        }
    }
    let vs = hull.vertices();
    for i in 0..vs.len() {
        canvas.line(
            as_f64(&vs[i]),
            as_f64(&vs[(i + 1) % vs.len()]),
            "#202020",
            2.5,
        );
    }
    if let Ok(points) = hull.lattice_points() {
        for (p, class) in points {
            let color = match class {
                crate::polytope::PointClass::Vertex => "#d03020",
                crate::polytope::PointClass::BoundaryNonVertex => "#3060d0",
                crate::polytope::PointClass::Interior => "#20a040",
                crate::polytope::PointClass::Outside => "#aaaaaa",
            };
            let fill = if sub.is_vertex(&p) { color } else { "#cccccc" };
            canvas.circle(as_f64(&p), 4.0, fill);
        }
    }
    canvas.finish()
}

/// The corner locus, rays drawn out to the view edge; optionally with the
/// Newton polytope of the lifting inset at the top right.
pub fn render_complex(gamma: &PolyhedralComplex<f64>, view: Box2D) -> String {
    let mut canvas = Canvas::new(view.min, view.max, DEFAULT_SCALE);
    let extent = view.width() + view.height();
    for &(a, b) in &gamma.edges {
        canvas.line(gamma.vertices[a], gamma.vertices[b], "#c04020", 2.0);
    }
    for ray in &gamma.rays {
        let base = gamma.vertices[ray.base];
        let norm = ((ray.dir[0].pow(2) + ray.dir[1].pow(2)) as f64).sqrt();
        let tip = [
            base[0] + ray.dir[0] as f64 / norm * extent,
            base[1] + ray.dir[1] as f64 / norm * extent,
        ];
        canvas.line(base, tip, "#c04020", 2.0);
    }
    for &v in &gamma.vertices {
        canvas.circle(v, 3.5, "#802010");
    }
    canvas.finish()
}

/// The raster with bounded complement components highlighted and an
/// optional spine overlay.
pub fn render_raster(
    raster: &AmoebaRaster,
    components: &[ComplementComponent],
    spine: Option<&PolyhedralComplex<f64>>,
) -> String {
    let bounds = raster.bounds();
    let (w, h) = raster.resolution();
    let scale = (DEFAULT_SCALE * 8.0 / w as f64).max(1.0);
    let mut canvas = Canvas::new(bounds.min, bounds.max, scale * w as f64 / bounds.width());
    canvas.rect(bounds.min, bounds.max, "#f8f8f4");
    let px = raster.pixel_width();
    let py = raster.pixel_height();
    // Row-wise runs keep the file size reasonable.
    for row in 0..h {
        let mut col = 0;
        while col < w {
            if raster.verdict(col, row) != Verdict::InAmoeba {
                col += 1;
                continue;
            }
            let start = col;
            while col < w && raster.verdict(col, row) == Verdict::InAmoeba {
                col += 1;
            }
            let min = [
                bounds.min[0] + start as f64 * px,
                bounds.min[1] + row as f64 * py,
            ];
            let max = [bounds.min[0] + col as f64 * px, min[1] + py];
            canvas.rect(min, max, "#355e3b");
        }
    }
    for comp in components.iter().filter(|c| c.bounded) {
        for &p in &comp.pixels {
            let (col, row) = (p as usize % w, p as usize / w);
            let min = [
                bounds.min[0] + col as f64 * px,
                bounds.min[1] + row as f64 * py,
            ];
            canvas.rect(min, [min[0] + px, min[1] + py], "#f2c94c");
        }
    }
    if let Some(gamma) = spine {
        let extent = bounds.width() + bounds.height();
        for &(a, b) in &gamma.edges {
            canvas.line(gamma.vertices[a], gamma.vertices[b], "#c04020", 1.5);
        }
        for ray in &gamma.rays {
            let base = gamma.vertices[ray.base];
            let norm = ((ray.dir[0].pow(2) + ray.dir[1].pow(2)) as f64).sqrt();
            let tip = [
                base[0] + ray.dir[0] as f64 / norm * extent,
                base[1] + ray.dir[1] as f64 / norm * extent,
            ];
            canvas.line(base, tip, "#c04020", 1.5);
        }
    }
    canvas.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPolynomial;
    use crate::tropical::{corner_locus_2d, regular_subdivision, Lifting};

    #[test]
    fn writes_well_formed_documents() {
        let lifting: Lifting<f64> = Lifting::from_pairs([
            (LatticePoint::from([0, 0]), 0.0),
            (LatticePoint::from([1, 0]), 0.0),
            (LatticePoint::from([0, 1]), 0.0),
        ])
        .unwrap();
        let hull = lifting.hull().unwrap();
        let sub = regular_subdivision(&lifting).unwrap();
        let svg = render_subdivision(&sub, &hull);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));

        let gamma = corner_locus_2d(&lifting).unwrap();
        let view = Box2D::new([-2.0, -2.0], [2.0, 2.0]).unwrap();
        let svg = render_complex(&gamma, view);
        assert!(svg.contains("<line") && svg.trim_end().ends_with("</svg>"));

        let f = LaurentPolynomial::parse("1 + z1 + z2", 2).unwrap();
        let raster = crate::amoeba::raster_2d(
            &f,
            view,
            &crate::amoeba::RasterParams {
                resolution: (64, 64),
                fibers_per_line: 8,
                max_solves_per_line: 512,
            },
        )
        .unwrap();
        let comps = crate::amoeba::complement_components(&raster);
        let svg = render_raster(&raster, &comps, Some(&gamma));
        assert!(svg.contains("<rect") && svg.trim_end().ends_with("</svg>"));
    }
}
