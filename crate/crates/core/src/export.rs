//! CSV and SVG output for curves, orbits and the good region.

use std::fmt::Write as _;

use crate::duality::CurvePoint;
use crate::error::{Error, Result};
use crate::morph::{self, MorphParams, OrbitNode};
use crate::scalar::{self, q};

/// Columns `b, a_lo, a_hi, a_approx, sturm_count`; rationals as exact strings.
pub fn curve_csv(points: &[CurvePoint]) -> Result<String> {
    let mut w = csv::Writer::from_writer(vec![]);
    let io = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(["b", "a_lo", "a_hi", "a_approx", "sturm_count"]).map_err(io)?;
    for p in points {
        w.write_record([
            scalar::fmt(&p.b),
            scalar::fmt(&p.bracket.lo),
            scalar::fmt(&p.bracket.hi),
            format!("{:.12}", p.a),
            p.bracket.sturm_count.map(|k| k.to_string()).unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
    size: f64,
    pad: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.pad + (x - self.x.0) / (self.x.1 - self.x.0) * self.size
    }

    fn py(&self, y: f64) -> f64 {
        self.pad + (self.y.1 - y) / (self.y.1 - self.y.0) * self.size
    }

    fn open(&self) -> String {
        let s = self.size + 2.0 * self.pad;
        format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n")
    }

    fn polyline(&self, pts: &[(f64, f64)], style: &str) -> String {
        let coords: Vec<String> = pts
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|&(x, y)| format!("{:.2},{:.2}", self.px(x), self.py(y)))
            .collect();
        format!("<polyline points=\"{}\" fill=\"none\" {style}/>\n", coords.join(" "))
    }

    fn axes(&self, xl: &str, yl: &str) -> String {
        let mut s = String::new();
        let (x0, y0, x1, y1) = (self.px(self.x.0), self.py(self.y.0), self.px(self.x.1), self.py(self.y.1));
        let _ = writeln!(s, "<rect x=\"{x0:.2}\" y=\"{y1:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" stroke=\"black\"/>", x1 - x0, y0 - y1);
        for k in 0..=4 {
            let t = k as f64 / 4.0;
            let xv = self.x.0 + t * (self.x.1 - self.x.0);
            let yv = self.y.0 + t * (self.y.1 - self.y.0);
            let _ = writeln!(s, "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\">{xv:.2}</text>", self.px(xv), y0 + 14.0);
            let _ = writeln!(s, "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\">{yv:.2}</text>", x0 - 4.0, self.py(yv) + 4.0);
        }
        let _ = writeln!(s, "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"13\">{xl}</text>", x1 - 10.0, y0 + 30.0);
        let _ = writeln!(s, "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"13\">{yl}</text>", x0 - 30.0, y1 - 8.0);
        s
    }
}

/// Lower and upper `a`-boundaries of `Θ` at `b`, upper infinite past `1 + √2`.
pub fn theta_bounds_f64(b: f64) -> (f64, f64) {
    let g = 1.0 + 2.0 * b - b * b;
    if g <= 0.0 {
        (0.0, f64::INFINITY)
    } else {
        (g / (1.0 + b * b), (1.0 + b * b) / g)
    }
}

fn theta_boundary(frame: &Frame, b_max: f64) -> String {
    let steps = 400;
    let bstar = 1.0 + 2f64.sqrt();
    let bs: Vec<f64> = (0..=steps).map(|k| 1.0 + (bstar.min(b_max) - 1.0) * k as f64 / steps as f64).collect();
    let lo: Vec<(f64, f64)> = bs.iter().map(|&b| (theta_bounds_f64(b).0, b)).collect();
    let hi: Vec<(f64, f64)> = bs
        .iter()
        .map(|&b| (theta_bounds_f64(b).1, b))
        .filter(|(a, _)| *a <= frame.x.1)
        .collect();
    let style = "stroke=\"#888\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"";
    format!("{}{}", frame.polyline(&lo, style), frame.polyline(&hi, style))
}

/// Duality curves in the `(a, b)` plane over the boundary of `Θ`.
pub fn curve_svg(curves: &[(String, Vec<CurvePoint>)], b_max: f64) -> String {
    let a_max = curves.iter().flat_map(|(_, c)| c.iter().map(|p| p.a)).fold(2.5f64, f64::max).min(6.0);
    let frame = Frame { x: (0.0, a_max), y: (1.0, b_max), size: 520.0, pad: 50.0 };
    let mut s = frame.open();
    s += &frame.axes("a", "b");
    s += &theta_boundary(&frame, b_max);
    let colors = ["#c0392b", "#2471a3", "#229954", "#7d3c98", "#b9770e"];
    for (k, (label, pts)) in curves.iter().enumerate() {
        let color = colors[k % colors.len()];
        let line: Vec<(f64, f64)> = pts.iter().map(|p| (p.a, scalar::to_f64(&p.b))).collect();
        s += &frame.polyline(&line, &format!("stroke=\"{color}\" stroke-width=\"2\""));
        let _ = writeln!(s, "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" fill=\"{color}\">{}</text>", frame.pad + 8.0, frame.pad + 16.0 * (k as f64 + 1.0), escape(label));
    }
    s + "</svg>\n"
}

/// `Θ` on a `grid × grid` sample of `(0, 6] × (1, 6]`.
pub fn region_svg(grid: usize) -> String {
    let frame = Frame { x: (0.0, 6.0), y: (1.0, 6.0), size: 520.0, pad: 50.0 };
    let mut s = frame.open();
    let n = grid.max(1) as i64;
    let (cw, ch) = (frame.size / n as f64, frame.size / n as f64);
    for i in 1..=n {
        for j in 1..=n {
            let l = MorphParams::new(q(6 * i, n), scalar::int(1) + q(5 * j, n)).expect("a > 0, b > 1");
            if morph::theta_contains_closed(&l) {
                let x = frame.px(scalar::to_f64(&l.a)) - cw;
                let y = frame.py(scalar::to_f64(&l.b));
                let _ = writeln!(s, "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{cw:.2}\" height=\"{ch:.2}\" fill=\"#aed6f1\"/>");
            }
        }
    }
    s += &frame.axes("a", "b");
    s += &theta_boundary(&frame, 6.0);
    s + "</svg>\n"
}

type Quad = (usize, Vec<(f64, f64)>, [(f64, f64); 2]);

/// Nested boxes of an orbit in the chart `y + z = 1`, where the normalized
/// box is the square `[−1, 1] × [0, 1]`. Boxes meeting the line at infinity
/// of the chart, or far outside the root box, are left out.
pub fn orbit_svg(nodes: &[OrbitNode]) -> Result<String> {
    if nodes.is_empty() {
        return Err(Error::Internal("empty orbit".into()));
    }
    let regions: Vec<[[f64; 3]; 4]> = nodes
        .iter()
        .map(|n| n.mbox.region().map(|r| r.verts.clone().map(|v| unit(v.to_f64()))))
        .collect::<Result<_>>()?;
    let s_vec = unit([0.0, 1.0, 1.0]);
    let chart = |p: [f64; 3]| {
        let t = p[1] + p[2];
        (p[0] / t, p[1] / t)
    };
    let quads: Vec<Quad> = nodes
        .iter()
        .zip(&regions)
        .filter(|(_, r)| {
            let ds = r.map(|v| dot(&s_vec, &v));
            ds.iter().all(|d| *d > 1e-9) || ds.iter().all(|d| *d < -1e-9)
        })
        .map(|(n, r)| (n.depth, r.iter().map(|v| chart(*v)).collect(), [chart(n.mbox.t.to_f64()), chart(n.mbox.b.to_f64())]))
        .collect();
    let extent = |pts: &[(f64, f64)]| {
        let (xmin, xmax) = pts.iter().fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.0), b.max(p.0)));
        let (ymin, ymax) = pts.iter().fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.1), b.max(p.1)));
        (xmin, xmax, ymin, ymax)
    };
    let root = extent(&quads.first().map(|q| q.1.clone()).unwrap_or_default());
    let reach = 3.0 * (root.1 - root.0).max(root.3 - root.2);
    let (rcx, rcy) = ((root.0 + root.1) / 2.0, (root.2 + root.3) / 2.0);
    let quads: Vec<_> = quads
        .into_iter()
        .filter(|(_, p, _)| p.iter().all(|(x, y)| (x - rcx).abs() <= reach && (y - rcy).abs() <= reach))
        .collect();
    let all: Vec<(f64, f64)> = quads.iter().flat_map(|(_, p, _)| p.iter().copied()).collect();
    let (xmin, xmax, ymin, ymax) = extent(&all);
    let side = (xmax - xmin).max(ymax - ymin) * 1.05;
    let (cx, cy) = ((xmin + xmax) / 2.0, (ymin + ymax) / 2.0);
    let frame = Frame { x: (cx - side / 2.0, cx + side / 2.0), y: (cy - side / 2.0, cy + side / 2.0), size: 600.0, pad: 20.0 };
    let mut s = frame.open();
    let max_depth = quads.iter().map(|q| q.0).max().unwrap_or(0).max(1);
    for (depth, pts, marks) in &quads {
        let shade = 230 - (150 * depth / max_depth) as u32;
        let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", frame.px(x), frame.py(y))).collect();
        let _ = writeln!(
            s,
            "<polygon points=\"{}\" fill=\"rgb({shade},{shade},255)\" fill-opacity=\"0.6\" stroke=\"#1b2631\" stroke-width=\"{:.2}\"/>",
            coords.join(" "),
            1.5 / (1.0 + *depth as f64)
        );
        for &(x, y) in marks {
            let _ = writeln!(s, "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\" fill=\"#c0392b\"/>", frame.px(x), frame.py(y), 2.5 / (1.0 + *depth as f64));
        }
    }
    Ok(s + "</svg>\n")
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: &[f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

fn unit(a: [f64; 3]) -> [f64; 3] {
    let n = norm(&a);
    a.map(|c| c / n)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality;
    use crate::morph::FullParams;
    use crate::scalar::{int, one, zero};

    #[test]
    fn csv_is_exact() {
        let pts = duality::trace_curve(&q(1, 4), &q(1, 2), &[one(), q(3, 2)], &duality::default_tolerance()).unwrap();
        let out = curve_csv(&pts).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "b,a_lo,a_hi,a_approx,sturm_count");
        assert!(lines[1].starts_with("1,1,1,"));
        assert!(lines[2].split(',').nth(1).unwrap().contains('/'));
    }

    #[test]
    fn svgs_are_well_formed() {
        let p = FullParams::new(one(), int(2), zero(), zero()).unwrap();
        let nodes = morph::generate_orbit(&p, 3, morph::DEFAULT_MAX_DEPTH).unwrap();
        let s = orbit_svg(&nodes).unwrap();
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
        let drawn = s.matches("<polygon").count();
        assert!(drawn >= 1 && drawn <= nodes.len());
        assert_eq!(s.matches("<circle").count(), 2 * drawn);
        assert!(!s.contains("NaN"));
        let r = region_svg(20);
        assert!(r.contains("<rect") && !r.contains("NaN"));
        let pts = duality::trace_curve(&zero(), &zero(), &[one(), int(2)], &duality::default_tolerance()).unwrap();
        let c = curve_svg(&[("(0,0)".into(), pts)], 4.0);
        assert!(c.contains("<polyline") && !c.contains("NaN"));
    }

    #[test]
    fn theta_bounds_meet_at_one() {
        assert_eq!(theta_bounds_f64(1.0), (1.0, 1.0));
        assert_eq!(theta_bounds_f64(3.0).1, f64::INFINITY);
    }
}
