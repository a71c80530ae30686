//! Static SVG for `scan`: area against diagonal, plus the embedded figure at
//! the shortest, best and longest sampled diagonals.

use std::fmt::Write as _;

use crate::error::Result;
use crate::exactnum::{Rational, Surd};
use crate::mensuration::{DiagQuad, QuadSides};
use crate::oracle::{diagonal_range, embed, ScanResult};

const WIDTH: f64 = 1000.0;
const HEIGHT: f64 = 700.0;
/// Coordinates only need to survive `{:.2}` formatting.
const DRAW_DIGITS: u32 = 20;

const PLOT_LEFT: f64 = 90.0;
const PLOT_RIGHT: f64 = 940.0;
const PLOT_TOP: f64 = 50.0;
const PLOT_BOTTOM: f64 = 370.0;

const PANEL_TOP: f64 = 420.0;
const PANEL_SIZE: f64 = 260.0;
const PANEL_LEFTS: [f64; 3] = [40.0, 370.0, 700.0];

pub(crate) fn scan_figure(q: &QuadSides, scan: &ScanResult) -> Result<String> {
    let (lower, upper) = diagonal_range(q);
    let (lo, hi) = (to_f64(&lower), to_f64(&upper));
    let max_area = scan.max_area.to_f64();
    let x_of = |d: f64| PLOT_LEFT + (d - lo) / (hi - lo) * (PLOT_RIGHT - PLOT_LEFT);
    let y_of = |a: f64| PLOT_BOTTOM - a / max_area * (PLOT_BOTTOM - PLOT_TOP);

    let mut out = String::new();
    let w = &mut out;
    writeln!(w, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="14">"#).unwrap();
    writeln!(w, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#).unwrap();
    writeln!(w, r#"<text x="{:.2}" y="30" text-anchor="middle" font-size="18">Area against diagonal for sides {q}</text>"#, WIDTH / 2.0).unwrap();

    // axes
    writeln!(w, r#"<line x1="{PLOT_LEFT:.2}" y1="{PLOT_BOTTOM:.2}" x2="{PLOT_RIGHT:.2}" y2="{PLOT_BOTTOM:.2}" stroke="black" stroke-width="2"/>"#).unwrap();
    writeln!(w, r#"<line x1="{PLOT_LEFT:.2}" y1="{PLOT_BOTTOM:.2}" x2="{PLOT_LEFT:.2}" y2="{PLOT_TOP:.2}" stroke="black" stroke-width="2"/>"#).unwrap();
    writeln!(w, r#"<text x="{PLOT_LEFT:.2}" y="{:.2}" text-anchor="middle">{lo:.2}</text>"#, PLOT_BOTTOM + 20.0).unwrap();
    writeln!(w, r#"<text x="{PLOT_RIGHT:.2}" y="{:.2}" text-anchor="middle">{hi:.2}</text>"#, PLOT_BOTTOM + 20.0).unwrap();
    writeln!(w, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">diagonal</text>"#, (PLOT_LEFT + PLOT_RIGHT) / 2.0, PLOT_BOTTOM + 20.0).unwrap();
    writeln!(w, r#"<text x="{:.2}" y="{PLOT_TOP:.2}" text-anchor="end">{max_area:.2}</text>"#, PLOT_LEFT - 8.0).unwrap();
    writeln!(w, r#"<text x="{:.2}" y="{PLOT_BOTTOM:.2}" text-anchor="end">0</text>"#, PLOT_LEFT - 8.0).unwrap();

    let points: Vec<String> = scan
        .samples
        .iter()
        .map(|s| format!("{:.2},{:.2}", x_of(s.diagonal.to_f64()), y_of(s.area.to_f64())))
        .collect();
    writeln!(w, r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#, points.join(" ")).unwrap();
    let (bx, by) = (x_of(scan.argmax_diagonal.to_f64()), y_of(max_area));
    writeln!(w, r#"<circle cx="{bx:.2}" cy="{by:.2}" r="5" fill="crimson"/>"#).unwrap();
    writeln!(w, r#"<text x="{bx:.2}" y="{:.2}" text-anchor="middle">max {max_area:.2} at {:.2}</text>"#, by - 12.0, scan.argmax_diagonal.to_f64()).unwrap();

    let last = scan.samples.len() - 1;
    let picks = [("shortest", 0), ("largest area", scan.argmax_index()), ("longest", last)];
    for ((label, index), left) in picks.into_iter().zip(PANEL_LEFTS) {
        let diagonal = &lower + &scan.step * Rational::from_integer((index + 1).into());
        let dq = DiagQuad::new(q.clone(), Surd::rational(diagonal))?;
        snapshot(w, &dq, left, label, scan.samples[index].area.to_f64());
    }
    writeln!(w, "</svg>").unwrap();
    Ok(out)
}

fn to_f64(r: &Rational) -> f64 {
    crate::exactnum::ApproxScalar::from_rational(r, DRAW_DIGITS).to_f64()
}

fn snapshot(w: &mut String, dq: &DiagQuad, left: f64, label: &str, area: f64) {
    let embedded = embed(dq, DRAW_DIGITS);
    let pts: Vec<(f64, f64)> = embedded.points.iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
    let (min_x, max_x) = bounds(pts.iter().map(|p| p.0));
    let (min_y, max_y) = bounds(pts.iter().map(|p| p.1));
    let margin = 30.0;
    let room = PANEL_SIZE - 2.0 * margin;
    let scale = room / (max_x - min_x).max(max_y - min_y);
    let cx = left + PANEL_SIZE / 2.0;
    let cy = PANEL_TOP + PANEL_SIZE / 2.0;
    // y flips because SVG grows downwards
    let place = |(x, y): (f64, f64)| (cx + (x - (min_x + max_x) / 2.0) * scale, cy - (y - (min_y + max_y) / 2.0) * scale);
    let screen: Vec<(f64, f64)> = pts.iter().copied().map(place).collect();

    writeln!(w, r#"<text x="{cx:.2}" y="{:.2}" text-anchor="middle">{label}: d = {:.2}, area {area:.2}</text>"#, PANEL_TOP - 8.0, dq.diagonal().approx(DRAW_DIGITS).to_f64()).unwrap();
    let outline: Vec<String> = screen.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    writeln!(w, r#"<polygon points="{}" fill="aliceblue" stroke="black" stroke-width="2"/>"#, outline.join(" ")).unwrap();
    writeln!(
        w,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-width="2" stroke-dasharray="6 4"/>"#,
        screen[0].0, screen[0].1, screen[2].0, screen[2].1
    )
    .unwrap();

    // edge k joins vertex k to vertex k+1 and has length sides[k]
    let centre = (screen.iter().map(|p| p.0).sum::<f64>() / 4.0, screen.iter().map(|p| p.1).sum::<f64>() / 4.0);
    for (k, side) in dq.sides().sides().iter().enumerate() {
        let (a, b) = (screen[k], screen[(k + 1) % 4]);
        let mid = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        let (dx, dy) = (mid.0 - centre.0, mid.1 - centre.1);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let (lx, ly) = (mid.0 + dx / len * 14.0, mid.1 + dy / len * 14.0 + 5.0);
        writeln!(w, r#"<text x="{lx:.2}" y="{ly:.2}" text-anchor="middle">{side}</text>"#).unwrap();
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}
