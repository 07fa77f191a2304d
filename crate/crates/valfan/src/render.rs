//! Static SVG figures: the partitioned dual-complex circle and the chamber
//! polytopes. Rendering uses floating point for coordinates only; all
//! labels carry the exact text forms.

use std::fmt::Write;

use crate::cycle::{CycleConfig, DualComplexPoint};
use crate::degen::RationalPolytope;
use crate::exact::rat_to_f64;
use crate::special::{Partition, Region};

const PALETTE: [&str; 6] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2",
];

/// Angle (radians) of a circle point: vertices sit at equal spacing, an
/// edge point divides its edge arc at the fraction `t / (1 + t)`.
fn angle(config: &CycleConfig, pt: &DualComplexPoint) -> f64 {
    let k = config.node_count() as f64;
    let span = std::f64::consts::TAU / k;
    match pt {
        DualComplexPoint::Vertex(i) => *i as f64 * span,
        DualComplexPoint::Edge { node, t } => {
            let t = t.to_f64();
            let frac = t / (1.0 + t);
            *node as f64 * span + frac * span
        }
    }
}

fn polar(cx: f64, cy: f64, r: f64, theta: f64) -> (f64, f64) {
    (cx + r * theta.cos(), cy + r * theta.sin())
}

fn arc_path(cx: f64, cy: f64, r: f64, a0: f64, a1: f64) -> String {
    let (x0, y0) = polar(cx, cy, r, a0);
    let (x1, y1) = polar(cx, cy, r, a1);
    let sweep = a1 - a0;
    let large = if sweep.abs() > std::f64::consts::PI { 1 } else { 0 };
    format!(
        "M {x0:.3} {y0:.3} A {r:.3} {r:.3} 0 {large} 1 {x1:.3} {y1:.3}"
    )
}

/// Draws the circle with chambers colored and boundaries labelled
/// `t = p/q`.
pub fn partition_svg(config: &CycleConfig, partition: &Partition) -> String {
    let (w, h) = (560.0, 560.0);
    let (cx, cy, r) = (w / 2.0, h / 2.0, 200.0);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        s,
        r##"  <circle cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="#cccccc" stroke-width="2"/>"##
    );
    match &partition.region {
        Region::Empty => {
            let _ = writeln!(
                s,
                r##"  <text x="{cx}" y="{cy}" text-anchor="middle" font-size="16">no special valuations</text>"##
            );
        }
        _ => {
            for (i, chamber) in partition.chambers.iter().enumerate() {
                let a0 = angle(config, &chamber.start);
                let mut a1 = angle(config, &chamber.end);
                if a1 <= a0 {
                    a1 += std::f64::consts::TAU;
                }
                // Keep hairline gaps visible between tiny chambers.
                if a1 - a0 < 1e-3 {
                    a1 = a0 + 1e-3;
                }
                let color = PALETTE[i % PALETTE.len()];
                let _ = writeln!(
                    s,
                    r##"  <path d="{}" fill="none" stroke="{color}" stroke-width="10" stroke-linecap="butt"/>"##,
                    arc_path(cx, cy, r, a0, a1)
                );
            }
            for b in &partition.boundaries {
                let a = angle(config, &b.point);
                let (x0, y0) = polar(cx, cy, r - 12.0, a);
                let (x1, y1) = polar(cx, cy, r + 12.0, a);
                let _ = writeln!(
                    s,
                    r##"  <line x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y1:.3}" stroke="#333333" stroke-width="2"/>"##
                );
                let label = match &b.point {
                    DualComplexPoint::Vertex(i) => format!("C{i}"),
                    DualComplexPoint::Edge { t, .. } => format!("t = {t}"),
                };
                let (tx, ty) = polar(cx, cy, r + 34.0, a);
                let _ = writeln!(
                    s,
                    r##"  <text x="{tx:.3}" y="{ty:.3}" text-anchor="middle" font-size="11">{label}</text>"##
                );
            }
        }
    }
    // Vertices of the cycle for orientation.
    for (vertex, _) in config.circle_atlas() {
        let a = angle(config, &DualComplexPoint::Vertex(vertex));
        let (x, y) = polar(cx, cy, r, a);
        let _ = writeln!(
            s,
            r##"  <circle cx="{x:.3}" cy="{y:.3}" r="4" fill="#333333"/>"##
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Draws a polygon on the unit grid with its lattice points.
pub fn polytope_svg(p: &RationalPolytope) -> String {
    let scale = 60.0;
    let pad = 30.0;
    let xs: Vec<f64> = p.vertices().iter().map(|(x, _)| rat_to_f64(x)).collect();
    let ys: Vec<f64> = p.vertices().iter().map(|(_, y)| rat_to_f64(y)).collect();
    let xmax = xs.iter().cloned().fold(1.0f64, f64::max);
    let ymax = ys.iter().cloned().fold(1.0f64, f64::max);
    let w = xmax * scale + 2.0 * pad;
    let h = ymax * scale + 2.0 * pad;
    let tx = |x: f64| pad + x * scale;
    let ty = |y: f64| h - pad - y * scale;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    for gx in 0..=(xmax.ceil() as i64) {
        let _ = writeln!(
            s,
            r##"  <line x1="{0:.3}" y1="{1:.3}" x2="{0:.3}" y2="{2:.3}" stroke="#eeeeee"/>"##,
            tx(gx as f64),
            ty(0.0),
            ty(ymax.ceil())
        );
    }
    for gy in 0..=(ymax.ceil() as i64) {
        let _ = writeln!(
            s,
            r##"  <line x1="{1:.3}" y1="{0:.3}" x2="{2:.3}" y2="{0:.3}" stroke="#eeeeee"/>"##,
            ty(gy as f64),
            tx(0.0),
            tx(xmax.ceil())
        );
    }
    let pts: Vec<String> = p
        .vertices()
        .iter()
        .map(|(x, y)| format!("{:.3},{:.3}", tx(rat_to_f64(x)), ty(rat_to_f64(y))))
        .collect();
    let _ = writeln!(
        s,
        r##"  <polygon points="{}" fill="#4e79a733" stroke="#4e79a7" stroke-width="2"/>"##,
        pts.join(" ")
    );
    if let Ok(points) = p.lattice_points(1) {
        use num_traits::ToPrimitive;
        for (x, y) in points {
            let (x, y) = (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0));
            let _ = writeln!(
                s,
                r##"  <circle cx="{:.3}" cy="{:.3}" r="3" fill="#333333"/>"##,
                tx(x),
                ty(y)
            );
        }
    }
    for ((x, y), (fx, fy)) in p.vertices().iter().zip(xs.iter().zip(&ys)) {
        let _ = writeln!(
            s,
            r##"  <text x="{:.3}" y="{:.3}" font-size="11" text-anchor="middle">({x}, {y})</text>"##,
            tx(*fx),
            ty(*fy) - 8.0
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::degen::polytope;
    use crate::special::partition;

    #[test]
    fn svg_renders_and_is_deterministic() {
        let config = catalog::by_name("dp8-nodal").unwrap();
        let p = partition(&config, 10).unwrap();
        let a = partition_svg(&config, &p);
        let b = partition_svg(&config, &p);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains("t = 2"));

        let poly = polytope_svg(&polytope(0));
        assert!(poly.contains("polygon"));
    }

    #[test]
    fn empty_region_renders_note() {
        let config = catalog::by_name("dp4-nodal").unwrap();
        let p = partition(&config, 5).unwrap();
        let svg = partition_svg(&config, &p);
        assert!(svg.contains("no special valuations"));
    }
}
