//! Schematic SVG drawings of embeddings.
//!
//! Vertices sit on a circle; each dart leaves its vertex in the direction
//! given by its slot in the rotation, and every edge is one cubic curve
//! between its two darts. Only the combinatorial data is authoritative.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt::Write as _;

use crate::embed::{FaceSet, RotationSystem};
use crate::graph::{Dart, XGraph};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 60.0;
const HANDLE: f64 = 48.0;

fn fmt(x: f64) -> String {
    // Avoid "-0.00" so output stays byte-stable.
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn vertex_position(v: usize, n: usize) -> (f64, f64) {
    let c = SIZE / 2.0;
    if n == 1 {
        return (c, c);
    }
    let radius = c - MARGIN;
    let angle = TAU * v as f64 / n as f64 - FRAC_PI_2;
    (c + radius * angle.cos(), c + radius * angle.sin())
}

/// Direction of each dart: the vertex's outward normal, turned by a quarter
/// turn per rotation slot (counter-clockwise on screen).
fn dart_angles(g: &XGraph, r: &RotationSystem) -> Vec<f64> {
    let n = g.vertex_count();
    let mut angle = vec![0.0; 2 * g.edge_count()];
    for v in 0..n {
        let base = if n == 1 {
            -FRAC_PI_2
        } else {
            TAU * v as f64 / n as f64 - FRAC_PI_2
        };
        for (i, d) in r.canonical_at(v).into_iter().enumerate() {
            // Screen y points down, so counter-clockwise means decreasing angle.
            angle[d.index()] = base - FRAC_PI_2 * i as f64 + FRAC_PI_2 * 0.5;
        }
    }
    angle
}

/// Deterministic SVG 1.1 document with one `<path id="e{k}">` per edge and
/// one circle per vertex.
pub fn render_schematic(g: &XGraph, r: &RotationSystem, faces: &FaceSet) -> String {
    let n = g.vertex_count();
    let angle = dart_angles(g, r);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        SIZE as u32
    );
    let _ = writeln!(
        out,
        "<desc>V={} E={} F={}</desc>",
        n,
        g.edge_count(),
        faces.count()
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2">"#);
    for (k, e) in g.edges().iter().enumerate() {
        let (s, t) = (Dart::s(k), Dart::t(k));
        let (x0, y0) = vertex_position(e.tail, n);
        let (x3, y3) = vertex_position(e.head, n);
        let (a0, a3) = (angle[s.index()], angle[t.index()]);
        let (x1, y1) = (x0 + HANDLE * a0.cos(), y0 + HANDLE * a0.sin());
        let (x2, y2) = (x3 + HANDLE * a3.cos(), y3 + HANDLE * a3.sin());
        let _ = writeln!(
            out,
            r#"<path id="e{k}" d="M {} {} C {} {} {} {} {} {}"/>"#,
            fmt(x0),
            fmt(y0),
            fmt(x1),
            fmt(y1),
            fmt(x2),
            fmt(y2),
            fmt(x3),
            fmt(y3)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="white" stroke="black" stroke-width="1.5">"#);
    for v in 0..n {
        let (x, y) = vertex_position(v, n);
        let _ = writeln!(
            out,
            r#"<circle id="v{v}" cx="{}" cy="{}" r="6"/>"#,
            fmt(x),
            fmt(y)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g font-family="monospace" font-size="12" fill="black">"#);
    for v in 0..n {
        let (x, y) = vertex_position(v, n);
        let _ = writeln!(out, r#"<text x="{}" y="{}">{v}</text>"#, fmt(x + 9.0), fmt(y - 9.0));
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
