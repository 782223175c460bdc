//! Deterministic SVG rendering of braided wiring diagrams.
//!
//! Strands are polylines, one per line. Each event gets one column and one
//! `<g class="crossing …">` glyph group: an actual crossing is drawn as a
//! transversal multi-point with a dot, a virtual crossing redraws its over
//! strand on top of a white halo, which leaves a gap in the under strand.

use std::fmt::Write;

use arrgroup_core::wiring::{BraidedWiringDiagram, EventKind};

const COL: f64 = 48.0;
const ROW: f64 = 36.0;
const LEFT: f64 = 56.0;
const RIGHT: f64 = 40.0;
const TOP: f64 = 28.0;
const PALETTE: [&str; 10] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"];

fn color(line: usize) -> &'static str {
    PALETTE[(line + PALETTE.len() - 1) % PALETTE.len()]
}

fn ypos(p: usize) -> f64 {
    TOP + (p as f64 - 1.0) * ROW
}

fn fmt_num(v: f64) -> String {
    let r = (v * 100.0).round() / 100.0;
    if r == r.trunc() {
        format!("{}", r as i64)
    } else {
        format!("{}", r)
    }
}

fn pt(x: f64, y: f64) -> String {
    format!("{},{}", fmt_num(x), fmt_num(y))
}

/// Renders the diagram as a standalone SVG document.
pub fn render_svg(bwd: &BraidedWiringDiagram) -> String {
    let n = bwd.n;
    let ev = bwd.events.len();
    let width = LEFT + COL * (ev as f64 + 1.0) + RIGHT;
    let height = 2.0 * TOP + ROW * (n.max(1) as f64 - 1.0);
    let orders = bwd.orders();

    // Column k spans [cx − COL/2, cx + COL/2] with cx = LEFT + COL·(k + 1).
    let cx = |k: usize| LEFT + COL * (k as f64 + 1.0);
    let mut paths: Vec<Vec<String>> = vec![Vec::new(); n + 1];
    for (p, &l) in orders[0].iter().enumerate() {
        paths[l].push(pt(LEFT, ypos(p + 1)));
    }
    for (k, e) in bwd.events.iter().enumerate() {
        let (x0, xm, x1) = (cx(k) - COL / 2.0, cx(k), cx(k) + COL / 2.0);
        let before = &orders[k];
        let after = &orders[k + 1];
        let moved: Vec<usize> = match &e.kind {
            EventKind::Actual { top_pos, lines } => (*top_pos..top_pos + lines.len()).collect(),
            EventKind::Virtual { pos, .. } => vec![*pos, pos + 1],
        };
        let meet = match &e.kind {
            EventKind::Actual { top_pos, lines } => Some((ypos(*top_pos) + ypos(top_pos + lines.len() - 1)) / 2.0),
            EventKind::Virtual { .. } => None,
        };
        for &p in &moved {
            let l = before[p - 1];
            let q = after.iter().position(|&o| o == l).expect("line present") + 1;
            paths[l].push(pt(x0, ypos(p)));
            if let Some(ym) = meet {
                paths[l].push(pt(xm, ym));
            }
            paths[l].push(pt(x1, ypos(q)));
        }
    }
    let last = orders.last().expect("at least the initial order");
    for (p, &l) in last.iter().enumerate() {
        paths[l].push(pt(width - RIGHT, ypos(p + 1)));
    }

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = fmt_num(width),
        h = fmt_num(height)
    );
    let _ = writeln!(s, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    let _ = writeln!(s, "<g class=\"strands\" fill=\"none\" stroke-width=\"2\">");
    for (l, pts) in paths.iter().enumerate().skip(1).take(n) {
        let _ = writeln!(
            s,
            "<polyline class=\"strand\" data-line=\"{}\" stroke=\"{}\" points=\"{}\"/>",
            l,
            color(l),
            pts.join(" ")
        );
    }
    let _ = writeln!(s, "</g>");
    for (p, &l) in orders[0].iter().enumerate() {
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"end\">L{}</text>",
            fmt_num(LEFT - 8.0),
            fmt_num(ypos(p + 1) + 4.0),
            l
        );
    }
    for (k, e) in bwd.events.iter().enumerate() {
        let (x0, xm, x1) = (cx(k) - COL / 2.0, cx(k), cx(k) + COL / 2.0);
        match &e.kind {
            EventKind::Actual { top_pos, lines } => {
                let ym = (ypos(*top_pos) + ypos(top_pos + lines.len() - 1)) / 2.0;
                let _ = writeln!(s, "<g class=\"crossing actual\" data-t=\"{}\" data-lines=\"{:?}\">", e.t, lines);
                let _ = writeln!(s, "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/>", fmt_num(xm), fmt_num(ym));
                let _ = writeln!(s, "</g>");
            }
            EventKind::Virtual { pos, sign } => {
                let (up, lo) = (orders[k][pos - 1], orders[k][*pos]);
                // +1: the upper strand is over and descends.
                let (over, ya, yb) =
                    if *sign > 0 { (up, ypos(*pos), ypos(pos + 1)) } else { (lo, ypos(pos + 1), ypos(*pos)) };
                let seg = format!("points=\"{} {}\"", pt(x0, ya), pt(x1, yb));
                let _ = writeln!(s, "<g class=\"crossing virtual\" data-t=\"{}\" data-sign=\"{}\">", e.t, sign);
                let _ = writeln!(s, "<polyline {} fill=\"none\" stroke=\"white\" stroke-width=\"8\"/>", seg);
                let _ = writeln!(s, "<polyline {} fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>", seg, color(over));
                let _ = writeln!(s, "</g>");
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
