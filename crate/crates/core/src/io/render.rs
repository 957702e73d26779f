//! Static diagrams: concentric critical-value circles and layered Reeb graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::reeb::{Page, VertexKind};
use crate::roundfold::{Direction, RoundFoldDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Dot,
}

impl RenderFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            RenderFormat::Svg => "svg",
            RenderFormat::Dot => "dot",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RenderError {
    #[error("{diagram} diagrams cannot be rendered as {format}")]
    Unsupported {
        diagram: &'static str,
        format: &'static str,
    },
}

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Concentric circles `C_1..C_s`, the fiber circle count in every annulus,
/// and a direction arrow per circle when the source is orientable.
pub fn render_critical_values(
    rf: &RoundFoldDescriptor,
    format: RenderFormat,
) -> Result<String, RenderError> {
    if format != RenderFormat::Svg {
        return Err(RenderError::Unsupported {
            diagram: "critical value",
            format: format.as_str(),
        });
    }
    let page = rf.page();
    let s = page.critical_count();
    let counts = page.regular_fiber_counts();
    let directions = rf.component_directions().ok();
    let size = 2.0 * (f64::from(s) + 1.0) * STEP + 2.0 * MARGIN;
    let c = size / 2.0;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(out, "<title>{}</title>", escape_xml(&rf.to_string())).unwrap();
    out.push_str(
        "<style>.fold{fill:none;stroke:#234;stroke-width:2}.fiber-count{font:12px sans-serif;fill:#555;text-anchor:middle}.arrow-in,.arrow-out{fill:#c33}</style>\n",
    );
    for r in 1..=s {
        writeln!(
            out,
            r#"<circle class="fold" cx="{c}" cy="{c}" r="{}"/>"#,
            f64::from(r) * STEP
        )
        .unwrap();
    }
    for (r, count) in counts.iter().enumerate() {
        // label sits above the centre, midway through annulus r
        let y = if r == 0 {
            c + 4.0
        } else {
            c - (r as f64 + 0.5) * STEP + 4.0
        };
        writeln!(
            out,
            r#"<text class="fiber-count" x="{c}" y="{y}">{count}</text>"#
        )
        .unwrap();
    }
    if let Some(directions) = directions {
        for (r, d) in directions {
            let x = c + f64::from(r) * STEP;
            let (class, tip) = match d {
                Direction::Inward => ("arrow-in", -8.0),
                Direction::Outward => ("arrow-out", 8.0),
            };
            writeln!(
                out,
                r#"<polygon class="{class}" points="{},{} {},{} {},{}"/>"#,
                x + tip,
                c,
                x - tip / 2.0,
                c - 5.0,
                x - tip / 2.0,
                c + 5.0
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn dot_shape(kind: VertexKind) -> &'static str {
    match kind {
        VertexKind::Boundary => "point",
        VertexKind::Min => "invtriangle",
        VertexKind::Max => "triangle",
        VertexKind::SaddleP => "circle",
        VertexKind::SaddleB => "diamond",
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn reeb_dot(page: &Page) -> String {
    let g = page.graph();
    let mut out = String::from("digraph reeb {\n  rankdir=BT;\n  node [fontname=\"Helvetica\"];\n");
    for v in &g.vertices {
        writeln!(
            out,
            "  {} [shape={}, label={}];",
            dot_id(&v.id),
            dot_shape(v.kind),
            dot_id(&format!("{} ({}@{})", v.id, v.kind, v.rank))
        )
        .unwrap();
    }
    let mut layers: BTreeMap<u32, Vec<&str>> = BTreeMap::new();
    for v in &g.vertices {
        layers.entry(v.rank).or_default().push(&v.id);
    }
    for ids in layers.values() {
        let ids: Vec<String> = ids.iter().map(|id| dot_id(id)).collect();
        writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    for e in &g.edges {
        let style = if e.twist { ", style=dashed" } else { "" };
        writeln!(
            out,
            "  {} -> {} [label={}{style}];",
            dot_id(&e.low),
            dot_id(&e.high),
            dot_id(&e.id)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn reeb_svg(page: &Page) -> String {
    let n = page.vertex_count();
    let s = page.critical_count();
    let dx = 60.0;
    let dy = 60.0;

    // Boundary circles spread along the bottom; each critical vertex sits
    // at the mean x of its lower neighbours, or in a fresh column.
    let mut x = vec![0.0f64; n];
    let mut next_column = 0.0;
    for v in (0..n).filter(|&v| page.kind(v) == VertexKind::Boundary) {
        x[v] = next_column;
        next_column += dx;
    }
    for r in 1..=s {
        let v = page.vertex_at_rank(r);
        let lower: Vec<f64> = page
            .incident_edges(v)
            .filter_map(|e| {
                let (lo, hi) = page.edge_ends(e);
                (hi == v).then_some(x[lo])
            })
            .collect();
        x[v] = if lower.is_empty() {
            let col = next_column;
            next_column += dx;
            col
        } else {
            let mean = lower.iter().sum::<f64>() / lower.len() as f64;
            // splits and SaddleB sit slightly right of their parent
            if lower.len() == 1 && page.kind(v) != VertexKind::Max {
                mean + dx / 4.0
            } else {
                mean
            }
        };
    }
    let min_x = x.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_x = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let width = max_x - min_x + 2.0 * MARGIN + dx;
    let height = f64::from(s) * dy + 2.0 * MARGIN;
    let px = |v: usize| x[v] - min_x + MARGIN + dx / 2.0;
    let py = |v: usize| height - MARGIN - f64::from(page.rank(v)) * dy;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    out.push_str(
        "<style>.edge{fill:none;stroke:#234;stroke-width:1.5}.twisted{stroke-dasharray:6 4}.vertex{fill:#fff;stroke:#234;stroke-width:1.5}.boundary{fill:#234}</style>\n",
    );

    let mut parallel: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in 0..page.edge_count() {
        *parallel.entry(page.edge_ends(e)).or_default() += 1;
    }
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (e, edge) in page.graph().edges.iter().enumerate() {
        let ends = page.edge_ends(e);
        let (lo, hi) = ends;
        let total = parallel[&ends];
        let k = seen.entry(ends).or_default();
        let bend = (*k as f64 - (total as f64 - 1.0) / 2.0) * 30.0;
        *k += 1;
        let (x0, y0, x1, y1) = (px(lo), py(lo), px(hi), py(hi));
        let (mx, my) = ((x0 + x1) / 2.0 + bend, (y0 + y1) / 2.0);
        let class = if edge.twist { "edge twisted" } else { "edge" };
        writeln!(
            out,
            r#"<path class="{class}" d="M {x0} {y0} Q {mx} {my} {x1} {y1}"><title>{}</title></path>"#,
            escape_xml(&edge.id)
        )
        .unwrap();
    }
    for (v, vertex) in page.graph().vertices.iter().enumerate() {
        let (cx, cy) = (px(v), py(v));
        let title = format!("<title>{}</title>", escape_xml(&vertex.id));
        let shape = match vertex.kind {
            VertexKind::Boundary => format!(
                r#"<circle class="vertex boundary" cx="{cx}" cy="{cy}" r="3">{title}</circle>"#
            ),
            VertexKind::Min => format!(
                r#"<polygon class="vertex min" points="{},{} {},{} {},{}">{title}</polygon>"#,
                cx - 7.0,
                cy - 6.0,
                cx + 7.0,
                cy - 6.0,
                cx,
                cy + 7.0
            ),
            VertexKind::Max => format!(
                r#"<polygon class="vertex max" points="{},{} {},{} {},{}">{title}</polygon>"#,
                cx - 7.0,
                cy + 6.0,
                cx + 7.0,
                cy + 6.0,
                cx,
                cy - 7.0
            ),
            VertexKind::SaddleP => format!(
                r#"<circle class="vertex saddle-p" cx="{cx}" cy="{cy}" r="6">{title}</circle>"#
            ),
            VertexKind::SaddleB => format!(
                r#"<polygon class="vertex saddle-b" points="{},{} {},{} {},{} {},{}">{title}</polygon>"#,
                cx,
                cy - 8.0,
                cx + 8.0,
                cy,
                cx,
                cy + 8.0,
                cx - 8.0,
                cy
            ),
        };
        out.push_str(&shape);
        out.push('\n');
    }
    out.push_str("</svg>\n");
    out
}

/// Rank-layered Reeb graph; twisted edges are dashed.
pub fn render_reeb(page: &Page, format: RenderFormat) -> Result<String, RenderError> {
    Ok(match format {
        RenderFormat::Dot => reeb_dot(page),
        RenderFormat::Svg => reeb_svg(page),
    })
}
