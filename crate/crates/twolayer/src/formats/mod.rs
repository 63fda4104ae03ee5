//! Graph ingestion (edge list, graph6/sparse6, GraphML) and drawing output
//! (JSON layout documents, SVG).

mod edge_list;
mod graph6;
mod graphml;
mod layout;
mod svg;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, parse_graph6_batch};
pub use graphml::parse_graphml;
pub use layout::{
    layout_document, read_layout, write_layout, LayoutDocument, LayoutEdge, LayoutMeta,
    LayoutVerification, LayoutVertex,
};
pub use svg::{render_svg, SvgOptions};

use crate::graph::Graph;

/// Parsed graph plus the external labels of its vertices, in id order.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl ParsedGraph {
    pub fn numeric(graph: Graph) -> ParsedGraph {
        let labels = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
        ParsedGraph { graph, labels }
    }
}

/// Parse errors carry enough position information to point at the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("byte {offset}: {message}")]
    MalformedAt { offset: usize, message: String },
    #[error("empty input")]
    Empty,
    #[error("vertex '{label}' has degree {degree}, above the supported maximum of 4")]
    DegreeExceeded { label: String, degree: usize },
    #[error("graph error: {0}")]
    Graph(crate::Error),
    #[error("unsupported construct: {0}")]
    Unsupported(String),
}

pub(crate) fn check_degrees(parsed: ParsedGraph) -> Result<ParsedGraph, ParseError> {
    for v in 0..parsed.graph.vertex_count() as u32 {
        let degree = parsed.graph.degree(v);
        if degree > 4 {
            return Err(ParseError::DegreeExceeded {
                label: parsed.labels[v as usize].clone(),
                degree,
            });
        }
    }
    Ok(parsed)
}

/// Input format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Auto,
    EdgeList,
    Graph6,
    GraphMl,
}

/// Extension first, then content sniffing: an XML prolog means GraphML, a
/// single line of printable graph6 bytes means graph6, anything else is an
/// edge list.
pub fn detect_format(path: Option<&str>, text: &str) -> InputFormat {
    if let Some(path) = path {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".graphml") || lower.ends_with(".xml") {
            return InputFormat::GraphMl;
        }
        if lower.ends_with(".g6") || lower.ends_with(".s6") || lower.ends_with(".graph6") {
            return InputFormat::Graph6;
        }
        if lower.ends_with(".edges") || lower.ends_with(".edgelist") || lower.ends_with(".txt") {
            return InputFormat::EdgeList;
        }
    }
    let trimmed = text.trim_start();
    if trimmed.starts_with("<?xml") || trimmed.starts_with("<graphml") || trimmed.starts_with('<')
    {
        return InputFormat::GraphMl;
    }
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    if let Some(first) = lines.next() {
        let candidate = first.trim();
        let body = candidate
            .strip_prefix(">>graph6<<")
            .or_else(|| candidate.strip_prefix(">>sparse6<<"))
            .unwrap_or(candidate);
        let looks_graph6 = !body.is_empty()
            && body
                .bytes()
                .all(|b| (63..=126).contains(&b) || b == b':')
            && !body.contains(char::is_whitespace)
            && body.bytes().any(|b| !b.is_ascii_digit());
        if looks_graph6 {
            return InputFormat::Graph6;
        }
    }
    InputFormat::EdgeList
}

/// Parses with an explicit or auto-detected format.
pub fn parse_graph(
    text: &str,
    format: InputFormat,
    path: Option<&str>,
) -> Result<ParsedGraph, ParseError> {
    match format {
        InputFormat::Auto => parse_graph(text, detect_format(path, text), None),
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Graph6 => parse_graph6(text),
        InputFormat::GraphMl => parse_graphml(text),
    }
}
