//! SVG rendering of two-layer drawings. Layer A is drawn solid, layer B
//! dashed. Display coordinates are floats at a chosen scale; an optional
//! logarithmic compression keeps wildly stretched drawings on screen. Both
//! are display-only transforms, verification always uses true coordinates.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::decompose::Layer;
use crate::embed::{Drawing, DrawingKind};
use crate::geom::Point;
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct SvgOptions {
    pub layer_colors: [String; 2],
    pub stroke_widths: [f64; 2],
    pub vertex_radius: f64,
    /// Pixels per grid unit.
    pub scale: f64,
    pub side_by_side: bool,
    /// Compress coordinates through log2(1 + c) before scaling.
    pub log_compress: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            layer_colors: ["#1a5fb4".to_string(), "#c01c28".to_string()],
            stroke_widths: [1.6, 1.6],
            vertex_radius: 3.0,
            scale: 24.0,
            side_by_side: false,
            log_compress: false,
        }
    }
}

fn coord_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        if c.is_negative() {
            f64::MIN
        } else {
            f64::MAX
        }
    })
}

fn display(c: &BigInt, opts: &SvgOptions) -> f64 {
    let raw = coord_to_f64(c);
    if opts.log_compress {
        raw.abs().ln_1p().copysign(raw) / std::f64::consts::LN_2
    } else {
        raw
    }
}

struct Panel {
    x: f64,
    // y axis points up in the drawing, down in SVG.
    height: f64,
}

impl Panel {
    fn map(&self, p: &Point, opts: &SvgOptions) -> (f64, f64) {
        let x = self.x + display(&p.x, opts) * opts.scale;
        let y = self.height - display(&p.y, opts) * opts.scale;
        (x, y)
    }
}

pub fn render_svg(drawing: &Drawing, g: &Graph, opts: &SvgOptions) -> String {
    assert!(opts.scale > 0.0, "scale factor must be positive");
    let margin = opts.scale.max(8.0);
    let span = display(&drawing.extent, opts) * opts.scale;
    let panel_w = span + 2.0 * margin;
    let panel_h = span + 2.0 * margin;
    let panels = if opts.side_by_side { 2 } else { 1 };
    let width = panel_w * panels as f64;

    let mut body = String::new();
    for panel_idx in 0..panels {
        let panel = Panel {
            x: margin + panel_idx as f64 * panel_w,
            height: panel_h - margin,
        };
        let layers: &[Layer] = if opts.side_by_side {
            if panel_idx == 0 {
                &[Layer::A]
            } else {
                &[Layer::B]
            }
        } else {
            &[Layer::A, Layer::B]
        };
        for &layer in layers {
            let color = &opts.layer_colors[layer.index()];
            let width = opts.stroke_widths[layer.index()];
            let dash = if layer == Layer::B {
                " stroke-dasharray=\"6,4\""
            } else {
                ""
            };
            body.push_str(&format!(
                "  <g fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\"{dash}>\n"
            ));
            for e in drawing.layer_edges(layer) {
                let segs = drawing.segments_of(g, e);
                let (x0, y0) = panel.map(&segs[0].a, opts);
                let mut d = format!("M {x0:.3} {y0:.3}");
                for s in &segs {
                    let (x, y) = panel.map(&s.b, opts);
                    d.push_str(&format!(" L {x:.3} {y:.3}"));
                }
                body.push_str(&format!("    <path d=\"{d}\"/>\n"));
            }
            body.push_str("  </g>\n");
        }
        body.push_str("  <g fill=\"#241f31\">\n");
        for p in &drawing.positions {
            let (x, y) = panel.map(p, opts);
            body.push_str(&format!(
                "    <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{}\"/>\n",
                opts.vertex_radius
            ));
        }
        body.push_str("  </g>\n");
    }

    let mode = match drawing.kind {
        DrawingKind::Straight => "straight",
        DrawingKind::Orthogonal => "orthogonal",
    };
    let compressed = if opts.log_compress {
        " data-compressed=\"log2\""
    } else {
        ""
    };
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width:.0}\" height=\"{panel_h:.0}\" data-mode=\"{mode}\"{compressed}>\n\
         {body}</svg>\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{embed_degree3, embed_degree4_ortho};
    use num_traits::Zero;

    #[test]
    fn solid_and_dashed_layers() {
        let g = crate::instances::k4();
        let (d, _) = embed_degree3(&g).unwrap();
        let svg = render_svg(&d, &g, &SvgOptions::default());
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn orthogonal_edges_have_two_segments() {
        let g = crate::instances::k5();
        let (d, _) = embed_degree4_ortho(&g).unwrap();
        let svg = render_svg(&d, &g, &SvgOptions::default());
        // Every edge path has a move plus exactly two line commands.
        let paths: Vec<&str> = svg.lines().filter(|l| l.contains("<path")).collect();
        assert_eq!(paths.len(), 10);
        for p in paths {
            assert_eq!(p.matches(" L ").count(), 2, "path {p}");
        }
    }

    #[test]
    fn empty_graph_renders_without_edges() {
        let g = Graph::new(0, &[]).unwrap();
        let d = Drawing {
            kind: DrawingKind::Straight,
            positions: vec![],
            edges: vec![],
            extent: BigInt::zero(),
        };
        let svg = render_svg(&d, &g, &SvgOptions::default());
        assert!(!svg.contains("<path"));
        assert!(svg.contains("</svg>"));
    }

    #[test]
    fn side_by_side_doubles_width() {
        let g = crate::instances::k4();
        let (d, _) = embed_degree3(&g).unwrap();
        let single = render_svg(&d, &g, &SvgOptions::default());
        let double = render_svg(
            &d,
            &g,
            &SvgOptions {
                side_by_side: true,
                ..SvgOptions::default()
            },
        );
        let w = |s: &str| -> f64 {
            s.split("width=\"")
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap()
                .parse()
                .unwrap()
        };
        assert!((w(&double) - 2.0 * w(&single)).abs() < 1.0);
    }
}
