//! Static SVG plots. This is the only place floating point is used.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::exactcore::field::rational_to_f64;
use crate::exactcore::{BivarPoly, Point, Rational};

use super::{arrangement_lines, JobSpec};

const SIZE: f64 = 600.0;

/// What to draw.
#[derive(Clone, Debug, Default)]
pub struct PlotPayload {
    /// Polynomial and level value: draws `{f = level}`.
    pub level_curves: Vec<(BivarPoly, Rational)>,
    pub points: Vec<Point>,
    /// The six lines of the arrangement.
    pub arrangement: bool,
    /// Shade the fourth-point regions giving non-convex quadrilaterals.
    pub convexity: bool,
}

pub type Segment = [(f64, f64); 2];

#[derive(Clone, Copy, Debug)]
struct Window {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
}

impl Window {
    fn from_rationals(w: &[Rational; 4]) -> Self {
        Window {
            xmin: rational_to_f64(&w[0]),
            xmax: rational_to_f64(&w[1]),
            ymin: rational_to_f64(&w[2]),
            ymax: rational_to_f64(&w[3]),
        }
    }

    fn project(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            (x - self.xmin) / (self.xmax - self.xmin) * SIZE,
            SIZE - (y - self.ymin) / (self.ymax - self.ymin) * SIZE,
        )
    }
}

fn float_terms(f: &BivarPoly) -> Vec<(i32, i32, f64)> {
    f.sorted_terms()
        .iter()
        .map(|((i, j), c)| (*i as i32, *j as i32, rational_to_f64(&c.re)))
        .collect()
}

/// Segments of `{f = level}` by marching squares on a `resolution²` cell grid,
/// in world coordinates. Saddle cells are resolved by the cell-center value.
pub fn level_segments(
    f: &BivarPoly,
    level: &Rational,
    window: &[Rational; 4],
    resolution: usize,
) -> Vec<Segment> {
    let w = Window::from_rationals(window);
    let terms = float_terms(f);
    let lv = rational_to_f64(level);
    let n = resolution.max(1);
    let xs: Vec<f64> = (0..=n)
        .map(|i| w.xmin + (w.xmax - w.xmin) * i as f64 / n as f64)
        .collect();
    let ys: Vec<f64> = (0..=n)
        .map(|j| w.ymin + (w.ymax - w.ymin) * j as f64 / n as f64)
        .collect();
    let eval = |x: f64, y: f64| -> f64 {
        terms
            .iter()
            .map(|&(i, j, c)| c * x.powi(i) * y.powi(j))
            .sum::<f64>()
            - lv
    };
    let vals: Vec<Vec<f64>> = ys
        .iter()
        .map(|&y| xs.iter().map(|&x| eval(x, y)).collect())
        .collect();
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let p00 = (xs[i], ys[j]);
            let p10 = (xs[i + 1], ys[j]);
            let p01 = (xs[i], ys[j + 1]);
            let p11 = (xs[i + 1], ys[j + 1]);
            let (v00, v10, v01, v11) = (
                vals[j][i],
                vals[j][i + 1],
                vals[j + 1][i],
                vals[j + 1][i + 1],
            );
            let cross = |pa: (f64, f64), va: f64, pb: (f64, f64), vb: f64| {
                let t = va / (va - vb);
                (pa.0 + t * (pb.0 - pa.0), pa.1 + t * (pb.1 - pa.1))
            };
            let bottom = || cross(p00, v00, p10, v10);
            let left = || cross(p00, v00, p01, v01);
            let right = || cross(p10, v10, p11, v11);
            let top = || cross(p01, v01, p11, v11);
            let case = (v00 > 0.0) as u8
                | ((v10 > 0.0) as u8) << 1
                | ((v11 > 0.0) as u8) << 2
                | ((v01 > 0.0) as u8) << 3;
            match case {
                0 | 15 => {}
                1 | 14 => out.push([bottom(), left()]),
                2 | 13 => out.push([bottom(), right()]),
                3 | 12 => out.push([left(), right()]),
                4 | 11 => out.push([right(), top()]),
                6 | 9 => out.push([bottom(), top()]),
                7 | 8 => out.push([left(), top()]),
                5 | 10 => {
                    let center = eval((p00.0 + p11.0) / 2.0, (p00.1 + p11.1) / 2.0);
                    // corners 00 and 11 share a sign; join them through the
                    // center when it has that sign too
                    let joined = (center > 0.0) == (v00 > 0.0);
                    if joined {
                        out.push([bottom(), right()]);
                        out.push([left(), top()]);
                    } else {
                        out.push([bottom(), left()]);
                        out.push([right(), top()]);
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    out
}

/// Portion of the line `a x + b y + c = 0` inside the window.
fn clip_line(a: f64, b: f64, c: f64, w: &Window) -> Option<Segment> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let eps = 1e-12;
    if b.abs() > eps {
        for x in [w.xmin, w.xmax] {
            let y = -(a * x + c) / b;
            if y >= w.ymin - eps && y <= w.ymax + eps {
                pts.push((x, y));
            }
        }
    }
    if a.abs() > eps {
        for y in [w.ymin, w.ymax] {
            let x = -(b * y + c) / a;
            if x >= w.xmin - eps && x <= w.xmax + eps {
                pts.push((x, y));
            }
        }
    }
    pts.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    pts.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-9 && (p.1 - q.1).abs() < 1e-9);
    match pts.as_slice() {
        [p, .., q] => Some([*p, *q]),
        _ => None,
    }
}

/// Sutherland–Hodgman clip of a polygon against the window.
fn clip_polygon(poly: &[(f64, f64)], w: &Window) -> Vec<(f64, f64)> {
    type Edge = Box<dyn Fn((f64, f64)) -> f64>;
    let (xmin, xmax, ymin, ymax) = (w.xmin, w.xmax, w.ymin, w.ymax);
    let edges: [Edge; 4] = [
        Box::new(move |p| p.0 - xmin),
        Box::new(move |p| xmax - p.0),
        Box::new(move |p| p.1 - ymin),
        Box::new(move |p| ymax - p.1),
    ];
    let mut cur = poly.to_vec();
    for inside in edges.iter() {
        if cur.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for k in 0..cur.len() {
            let a = cur[k];
            let b = cur[(k + 1) % cur.len()];
            let (da, db) = (inside(a), inside(b));
            if da >= 0.0 {
                next.push(a);
            }
            if (da >= 0.0) != (db >= 0.0) {
                let t = da / (da - db);
                next.push((a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)));
            }
        }
        cur = next;
    }
    cur
}

/// Fourth-point regions where `{(0,0), (1,0), (0,1), q}` is not convex: the
/// triangle itself and the three cones behind its vertices.
fn nonconvex_regions(w: &Window) -> Vec<Vec<(f64, f64)>> {
    let r = 4.0 * (w.xmax - w.xmin).abs().max((w.ymax - w.ymin).abs()) + 4.0;
    vec![
        vec![(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)],
        vec![(0.0, 0.0), (0.0, -r), (-r, -r), (-r, 0.0)],
        vec![(1.0, 0.0), (1.0 + r, -r), (1.0 + r, 0.0)],
        vec![(0.0, 1.0), (-r, 1.0 + r), (0.0, 1.0 + r)],
    ]
    .into_iter()
    .map(|p| clip_polygon(&p, w))
    .filter(|p| p.len() >= 3)
    .collect()
}

pub fn render_svg(j: &JobSpec, payload: &PlotPayload) -> Result<String> {
    let real = payload.level_curves.iter().all(|(f, _)| f.is_real())
        && payload
            .points
            .iter()
            .all(|(x, y)| x.is_real() && y.is_real());
    if !real {
        return Err(Error::NonRealPlotData);
    }
    let w = Window::from_rationals(&j.plot_window);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        r##"<rect class="frame" x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white" stroke="black"/>"##
    );
    if payload.convexity {
        for region in nonconvex_regions(&w) {
            let pts: Vec<String> = region
                .iter()
                .map(|&p| {
                    let (x, y) = w.project(p);
                    format!("{x:.4},{y:.4}")
                })
                .collect();
            let _ = writeln!(
                s,
                r##"<polygon class="nonconvex" points="{}" fill="#f4d6a0" stroke="none"/>"##,
                pts.join(" ")
            );
        }
    }
    let mut axes = String::new();
    for seg in [clip_line(0.0, 1.0, 0.0, &w), clip_line(1.0, 0.0, 0.0, &w)]
        .into_iter()
        .flatten()
    {
        let (a, b) = (w.project(seg[0]), w.project(seg[1]));
        let _ = write!(axes, "M{:.4} {:.4} L{:.4} {:.4} ", a.0, a.1, b.0, b.1);
    }
    if !axes.is_empty() {
        let _ = writeln!(
            s,
            r##"<path class="axis" d="{}" stroke="#999" stroke-dasharray="4 3" fill="none"/>"##,
            axes.trim_end()
        );
    }
    if payload.arrangement {
        let _ = writeln!(s, r#"<g class="arrangement">"#);
        for line in arrangement_lines() {
            let c = |i, k| rational_to_f64(&line.coeff(i, k).re);
            if let Some(seg) = clip_line(c(1, 0), c(0, 1), c(0, 0), &w) {
                let (a, b) = (w.project(seg[0]), w.project(seg[1]));
                let _ = writeln!(
                    s,
                    r##"<line x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{:.4}" stroke="#1f5fa8" stroke-width="1.5"/>"##,
                    a.0, a.1, b.0, b.1
                );
            }
        }
        let _ = writeln!(s, "</g>");
    }
    for (f, level) in &payload.level_curves {
        let mut d = String::new();
        for seg in level_segments(f, level, &j.plot_window, j.resolution) {
            let (a, b) = (w.project(seg[0]), w.project(seg[1]));
            let _ = write!(d, "M{:.4} {:.4}L{:.4} {:.4}", a.0, a.1, b.0, b.1);
        }
        let _ = writeln!(
            s,
            r##"<path class="level" d="{d}" stroke="#b0302a" stroke-width="1" fill="none"/>"##
        );
    }
    for p in &payload.points {
        let (x, y) = w.project((rational_to_f64(&p.0.re), rational_to_f64(&p.1.re)));
        let _ = writeln!(
            s,
            r##"<circle class="point" cx="{x:.4}" cy="{y:.4}" r="4" fill="black"/>"##
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
