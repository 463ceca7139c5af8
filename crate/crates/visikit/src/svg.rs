//! Deterministic SVG figures: flat arrangements as horizontal bars against
//! the shared axis, cylindrical arrangements as radial segments from a
//! circle, convex drawings as points on a circle with straight chords.

use std::fs;
use std::io;
use std::path::Path;

use crate::model::{Arrangement, ConvexDrawing, CylArrangement, FlatArrangement};

/// Either figure subject, borrowed.
#[derive(Debug, Clone, Copy)]
pub enum SvgObject<'a> {
    Arrangement(&'a Arrangement),
    Drawing(&'a ConvexDrawing),
}

/// Render to an SVG string. Identical inputs produce byte-identical output.
pub fn render(object: SvgObject<'_>) -> String {
    match object {
        SvgObject::Arrangement(Arrangement::Flat(a)) => render_flat(a),
        SvgObject::Arrangement(Arrangement::Cyl(a)) => render_cyl(a),
        SvgObject::Drawing(d) => render_drawing(d),
    }
}

/// Render and write to a file.
pub fn export_svg(object: SvgObject<'_>, path: &Path) -> io::Result<()> {
    fs::write(path, render(object))
}

fn render_flat(arr: &FlatArrangement) -> String {
    let n = arr.lengths.len();
    let max_len = arr.lengths.iter().copied().max().unwrap_or(1).max(1);
    let row = 24.0;
    let unit = (360.0 / max_len as f64).min(40.0);
    let axis_x = 40.0;
    let width = axis_x + max_len as f64 * unit + 40.0;
    let height = row * (n as f64 + 1.0);

    let mut s = svg_open(width, height);
    s.push_str(&format!(
        "  <line x1=\"{axis_x:.2}\" y1=\"0.00\" x2=\"{axis_x:.2}\" y2=\"{height:.2}\" stroke=\"#888\" stroke-width=\"2\"/>\n"
    ));
    for (i, &len) in arr.lengths.iter().enumerate() {
        // index 0 is the bottommost bar
        let y = height - row * (i as f64 + 1.0);
        let x2 = axis_x + len as f64 * unit;
        s.push_str(&format!(
            "  <line x1=\"{axis_x:.2}\" y1=\"{y:.2}\" x2=\"{x2:.2}\" y2=\"{y:.2}\" stroke=\"#1a6fb0\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n"
        ));
        s.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\" fill=\"#333\">{}</text>\n",
            x2 + 6.0,
            y + 3.0,
            len
        ));
    }
    s.push_str("</svg>\n");
    s
}

fn render_cyl(arr: &CylArrangement) -> String {
    let n = arr.lengths.len();
    let max_len = arr.lengths.iter().copied().max().unwrap_or(1).max(1);
    let inner = 50.0;
    let unit = 180.0 / max_len as f64;
    let r_max = inner + max_len as f64 * unit;
    let size = 2.0 * (r_max + 20.0);
    let c = size / 2.0;

    let mut s = svg_open(size, size);
    s.push_str(&format!(
        "  <circle cx=\"{c:.2}\" cy=\"{c:.2}\" r=\"{inner:.2}\" fill=\"none\" stroke=\"#888\" stroke-width=\"2\"/>\n"
    ));
    for (i, &len) in arr.lengths.iter().enumerate() {
        let angle = std::f64::consts::TAU * i as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
        let (sin, cos) = angle.sin_cos();
        let (x1, y1) = (c + inner * cos, c + inner * sin);
        let r2 = inner + len as f64 * unit;
        let (x2, y2) = (c + r2 * cos, c + r2 * sin);
        s.push_str(&format!(
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#1a6fb0\" stroke-width=\"5\" stroke-linecap=\"round\"/>\n"
        ));
        s.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\" fill=\"#333\">{}</text>\n",
            c + (r2 + 10.0) * cos - 4.0,
            c + (r2 + 10.0) * sin + 3.0,
            len
        ));
    }
    s.push_str("</svg>\n");
    s
}

fn render_drawing(d: &ConvexDrawing) -> String {
    let n = d.n.max(1);
    let radius = 160.0;
    let size = 2.0 * (radius + 30.0);
    let c = size / 2.0;
    let point = |i: usize| {
        let angle = std::f64::consts::TAU * i as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
        (c + radius * angle.cos(), c + radius * angle.sin())
    };

    let mut s = svg_open(size, size);
    for &(a, b) in &d.edges {
        if a >= d.n || b >= d.n {
            continue;
        }
        let (x1, y1) = point(a);
        let (x2, y2) = point(b);
        s.push_str(&format!(
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#1a6fb0\" stroke-width=\"1.5\"/>\n"
        ));
    }
    for i in 0..d.n {
        let (x, y) = point(i);
        s.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"#333\"/>\n"
        ));
        s.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#333\">{}</text>\n",
            c + (radius + 14.0) * (std::f64::consts::TAU * i as f64 / n as f64 - std::f64::consts::FRAC_PI_2).cos() - 3.0,
            c + (radius + 14.0) * (std::f64::consts::TAU * i as f64 / n as f64 - std::f64::consts::FRAC_PI_2).sin() + 4.0,
            i
        ));
    }
    s.push_str("</svg>\n");
    s
}

fn svg_open(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width:.2} {height:.2}\" width=\"{width:.2}\" height=\"{height:.2}\">\n"
    )
}
