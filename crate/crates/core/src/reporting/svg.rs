//! Dependency-free SVG rendering. Output is a pure function of the input:
//! no timestamps, fixed number formatting.

use std::fmt::Write;

use super::ReportError;
use crate::metrics::Curve;
use crate::similarity::SimilarityMatrix;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;
const PALETTE: &[&str] = &["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotLabels {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
}

impl PlotLabels {
    pub fn new(title: &str, x_label: &str, y_label: &str) -> Self {
        Self {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
        }
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// A "nice" tick step covering `span` in roughly `target` intervals.
fn tick_step(span: f64, target: f64) -> f64 {
    if span <= 0.0 {
        return 1.0;
    }
    let raw = span / target;
    let magnitude = 10f64.powf(raw.log10().floor());
    let normalized = raw / magnitude;
    let nice = if normalized <= 1.0 {
        1.0
    } else if normalized <= 2.0 {
        2.0
    } else if normalized <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * magnitude
}

fn format_tick(value: f64, step: f64) -> String {
    if step >= 1.0 {
        format!("{value:.0}")
    } else {
        let decimals = (-step.log10().floor()) as usize;
        format!("{value:.decimals$}")
    }
}

/// One polyline per curve over a shared pair of axes, with a legend.
pub fn render_line_plot(curves: &[&Curve], labels: &PlotLabels) -> Result<String, ReportError> {
    if curves.is_empty() || curves.iter().any(|c| c.points.is_empty()) {
        return Err(ReportError::EmptyCurve);
    }
    let all = curves.iter().flat_map(|c| c.points.iter());
    let x_min = all.clone().map(|p| p.0).min().expect("non-empty") as f64;
    let x_max = all.clone().map(|p| p.0).max().expect("non-empty") as f64;
    let y_top = all.map(|p| p.1).fold(0.0f64, f64::max);
    let y_step = tick_step(if y_top > 0.0 { y_top } else { 1.0 }, 5.0);
    let y_max = (y_top / y_step).ceil().max(1.0) * y_step;
    let x_span = (x_max - x_min).max(1.0);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x_min) / x_span * plot_w;
    let sy = |y: f64| MARGIN_TOP + plot_h - y / y_max * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        escape(&labels.title)
    );

    // y grid and ticks
    let mut y = 0.0;
    while y <= y_max + y_step * 1e-9 {
        let py = sy(y);
        let _ = writeln!(
            svg,
            r##"<line x1="{:.1}" y1="{py:.1}" x2="{:.1}" y2="{py:.1}" stroke="#e0e0e0"/>"##,
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
            MARGIN_LEFT - 6.0,
            py + 4.0,
            format_tick(y, y_step)
        );
        y += y_step;
    }
    // x ticks on integer ordinals
    let x_step = tick_step(x_span, 10.0).max(1.0);
    let mut x = x_min;
    while x <= x_max + 1e-9 {
        let px = sx(x);
        let _ = writeln!(
            svg,
            r##"<line x1="{px:.1}" y1="{:.1}" x2="{px:.1}" y2="{:.1}" stroke="#333"/>"##,
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{px:.1}" y="{:.1}" text-anchor="middle">{x:.0}</text>"#,
            MARGIN_TOP + plot_h + 18.0
        );
        x += x_step;
    }
    let _ = writeln!(
        svg,
        r##"<polyline points="{l:.1},{t:.1} {l:.1},{b:.1} {r:.1},{b:.1}" fill="none" stroke="#333"/>"##,
        l = MARGIN_LEFT,
        t = MARGIN_TOP,
        b = MARGIN_TOP + plot_h,
        r = MARGIN_LEFT + plot_w
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 18.0,
        escape(&labels.x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{:.1}" text-anchor="middle" transform="rotate(-90 18 {:.1})">{}</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        escape(&labels.y_label)
    );

    for (k, curve) in curves.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let points: Vec<String> = curve
            .points
            .iter()
            .map(|&(x, y)| format!("{:.1},{:.1}", sx(x as f64), sy(y)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            points.join(" ")
        );
        for &(x, y) in &curve.points {
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.1}" cy="{:.1}" r="3" fill="{color}"/>"#,
                sx(x as f64),
                sy(y)
            );
        }
        let ly = MARGIN_TOP + 10.0 + k as f64 * 20.0;
        let lx = MARGIN_LEFT + plot_w + 15.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="2"/>"#,
            lx + 20.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}">{}</text>"#,
            lx + 26.0,
            ly + 4.0,
            escape(&curve.name)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Diverging ramp: blue at -1, white at 0, dark red at 1.
pub fn heat_color(value: f64) -> String {
    let v = value.clamp(-1.0, 1.0);
    let (target, t) = if v >= 0.0 {
        ((165.0, 0.0, 38.0), v)
    } else {
        ((49.0, 54.0, 149.0), -v)
    };
    let mix = |c: f64| (255.0 + (c - 255.0) * t).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        mix(target.0),
        mix(target.1),
        mix(target.2)
    )
}

/// `n x n` grid of cells colored by similarity.
pub fn render_heatmap(matrix: &SimilarityMatrix, title: &str) -> String {
    let n = matrix.n();
    let cell = (600.0 / n.max(1) as f64).clamp(4.0, 40.0);
    let offset = 40.0;
    let side = offset * 2.0 + cell * n as f64;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side:.1}" height="{side:.1}" viewBox="0 0 {side:.1} {side:.1}" font-family="sans-serif" font-size="12" shape-rendering="crispEdges">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        side / 2.0,
        escape(title)
    );
    let ids = matrix.code_ids();
    for i in 0..n {
        for j in 0..n {
            let value = matrix.get(i, j);
            let _ = writeln!(
                svg,
                r#"<rect x="{:.2}" y="{:.2}" width="{cell:.2}" height="{cell:.2}" fill="{}"><title>{} / {}: {value:.4}</title></rect>"#,
                offset + j as f64 * cell,
                offset + i as f64 * cell,
                heat_color(value),
                escape(&ids[i]),
                escape(&ids[j]),
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}
