//! Static SVG drawing of a path representation.
//!
//! Grid `y` grows upward, so the image is flipped vertically. Each path gets
//! its own hue; highlighted paths are drawn last with a heavier stroke.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use bkvpg::{GridPoint, Instance, PathId};

const CELL: f64 = 24.0;
const MARGIN: f64 = 24.0;
/// Longest drawable side in pixels before cells are shrunk.
const MAX_SIDE: f64 = 2400.0;
/// Grid lines are drawn only up to this many cells per side.
const MAX_GRID_LINES: i64 = 200;
/// Drawn extent for an instance with no paths.
const EMPTY_EXTENT: i64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RenderError {
    #[error("unknown highlight id {0}")]
    UnknownHighlight(PathId),
}

struct Frame {
    x0: i64,
    y1: i64,
    scale: f64,
}

impl Frame {
    fn px(&self, p: GridPoint) -> (f64, f64) {
        (
            MARGIN + (p.x - self.x0) as f64 * self.scale,
            MARGIN + (self.y1 - p.y) as f64 * self.scale,
        )
    }
}

pub fn render_svg(instance: &Instance, highlight: &[PathId]) -> Result<String, RenderError> {
    let ids: BTreeSet<PathId> = instance.ids().into_iter().collect();
    if let Some(&bad) = highlight.iter().find(|id| !ids.contains(id)) {
        return Err(RenderError::UnknownHighlight(bad));
    }
    let highlight: BTreeSet<PathId> = highlight.iter().copied().collect();

    let pts = instance.paths().iter().flat_map(|p| p.vertices.iter());
    let (x0, y0, x1, y1) = pts.fold(None, |acc: Option<(i64, i64, i64, i64)>, p| {
        Some(match acc {
            None => (p.x, p.y, p.x, p.y),
            Some((a, b, c, d)) => (a.min(p.x), b.min(p.y), c.max(p.x), d.max(p.y)),
        })
    })
    .map(|(a, b, c, d)| (a - 1, b - 1, c + 1, d + 1))
    .unwrap_or((0, 0, EMPTY_EXTENT, EMPTY_EXTENT));
    let (span_w, span_h) = (x1 - x0, y1 - y0);
    let scale = CELL.min(MAX_SIDE / span_w.max(span_h) as f64);
    let frame = Frame { x0, y1, scale };
    let width = 2.0 * MARGIN + span_w as f64 * scale;
    let height = 2.0 * MARGIN + span_h as f64 * scale;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);

    svg.push_str(r##"<g id="grid" stroke="#d8d8d8" stroke-width="1">"##);
    svg.push('\n');
    if span_w.max(span_h) <= MAX_GRID_LINES {
        for x in x0..=x1 {
            let (a, top) = frame.px(GridPoint::new(x, y1));
            let (_, bottom) = frame.px(GridPoint::new(x, y0));
            let _ = writeln!(svg, r#"<line x1="{a:.2}" y1="{top:.2}" x2="{a:.2}" y2="{bottom:.2}"/>"#);
        }
        for y in y0..=y1 {
            let (left, b) = frame.px(GridPoint::new(x0, y));
            let (right, _) = frame.px(GridPoint::new(x1, y));
            let _ = writeln!(svg, r#"<line x1="{left:.2}" y1="{b:.2}" x2="{right:.2}" y2="{b:.2}"/>"#);
        }
    } else {
        let (a, b) = frame.px(GridPoint::new(x0, y1));
        let _ = writeln!(
            svg,
            r#"<rect x="{a:.2}" y="{b:.2}" width="{:.2}" height="{:.2}" fill="none"/>"#,
            span_w as f64 * scale,
            span_h as f64 * scale
        );
    }
    svg.push_str("</g>\n");

    let dim = !highlight.is_empty();
    let mut order: Vec<usize> = (0..instance.len()).collect();
    order.sort_by_key(|&i| highlight.contains(&instance.paths()[i].id));
    svg.push_str("<g id=\"paths\" fill=\"none\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n");
    for i in order {
        let path = &instance.paths()[i];
        let hue = (i as f64 * 137.508) % 360.0;
        let color = format!("hsl({hue:.1},70%,42%)");
        let lit = highlight.contains(&path.id);
        let (stroke, opacity) = match (lit, dim) {
            (true, _) => (5.0, 1.0),
            (false, true) => (2.0, 0.45),
            (false, false) => (2.5, 0.9),
        };
        let class = if lit { "path highlighted" } else { "path" };
        let _ = writeln!(
            svg,
            r#"<g id="path-{}" class="{class}" stroke="{color}" stroke-width="{stroke}" opacity="{opacity}">"#,
            path.id
        );
        let _ = writeln!(svg, "<title>path {} weight {}</title>", path.id, path.weight);
        if let [only] = path.vertices.as_slice() {
            let (cx, cy) = frame.px(*only);
            let r = (scale * 0.3).max(2.0);
            let _ = writeln!(svg, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="{color}"/>"#);
        } else {
            let points: Vec<String> = path
                .vertices
                .iter()
                .map(|v| {
                    let (a, b) = frame.px(*v);
                    format!("{a:.2},{b:.2}")
                })
                .collect();
            let _ = writeln!(svg, r#"<polyline points="{}"/>"#, points.join(" "));
        }
        svg.push_str("</g>\n");
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
