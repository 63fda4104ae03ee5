//! Minimal GraphML reader: one `graph` element, `node` and `edge` children,
//! treated as undirected regardless of `edgedefault`.

use std::collections::HashMap;

use super::{check_degrees, ParseError, ParsedGraph};
use crate::graph::Graph;

pub fn parse_graphml(text: &str) -> Result<ParsedGraph, ParseError> {
    let doc = roxmltree::Document::parse(text).map_err(|e| ParseError::MalformedAt {
        offset: e.pos().col as usize,
        message: format!("XML error: {e}"),
    })?;
    let graphs: Vec<_> = doc
        .descendants()
        .filter(|n| n.has_tag_name("graph"))
        .collect();
    if graphs.is_empty() {
        return Err(ParseError::Unsupported("no <graph> element".into()));
    }
    if graphs.len() > 1 {
        return Err(ParseError::Unsupported(
            "nested or multiple <graph> elements".into(),
        ));
    }
    let graph_el = graphs[0];

    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, u32> = HashMap::new();
    for node in graph_el.children().filter(|n| n.has_tag_name("node")) {
        if node.descendants().any(|d| d.has_tag_name("graph")) {
            return Err(ParseError::Unsupported(
                "nested graphs inside <node>".into(),
            ));
        }
        let id = node
            .attribute("id")
            .ok_or_else(|| ParseError::Unsupported("<node> without id".into()))?;
        if ids.contains_key(id) {
            return Err(ParseError::Unsupported(format!("duplicate node id '{id}'")));
        }
        ids.insert(id.to_string(), labels.len() as u32);
        labels.push(id.to_string());
    }

    let mut pairs = Vec::new();
    for edge in graph_el.children().filter(|n| n.has_tag_name("edge")) {
        if edge.attribute("directed") == Some("true") {
            return Err(ParseError::Unsupported(
                "directed edges are not supported".into(),
            ));
        }
        let source = edge
            .attribute("source")
            .ok_or_else(|| ParseError::Unsupported("<edge> without source".into()))?;
        let target = edge
            .attribute("target")
            .ok_or_else(|| ParseError::Unsupported("<edge> without target".into()))?;
        let lookup = |label: &str| {
            ids.get(label).copied().ok_or_else(|| {
                ParseError::Unsupported(format!("edge references undeclared node '{label}'"))
            })
        };
        pairs.push((lookup(source)?, lookup(target)?));
    }

    let graph = Graph::new(labels.len(), &pairs).map_err(ParseError::Graph)?;
    check_degrees(ParsedGraph { graph, labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_two_nodes_one_edge() {
        let xml = r#"<?xml version="1.0"?>
<graphml><graph id="G" edgedefault="undirected">
  <node id="a"/><node id="b"/>
  <edge source="a" target="b"/>
</graph></graphml>"#;
        let p = parse_graphml(xml).unwrap();
        assert_eq!(p.labels, vec!["a", "b"]);
        assert_eq!(p.graph.edges(), &[(0, 1)]);
    }

    #[test]
    fn undeclared_node_rejected() {
        let xml = r#"<graphml><graph><node id="a"/><edge source="a" target="ghost"/></graph></graphml>"#;
        let err = parse_graphml(xml).unwrap_err();
        assert!(matches!(err, ParseError::Unsupported(ref m) if m.contains("ghost")));
    }

    #[test]
    fn nested_graph_rejected() {
        let xml = r#"<graphml><graph><node id="a"><graph/></node></graph></graphml>"#;
        assert!(matches!(
            parse_graphml(xml),
            Err(ParseError::Unsupported(_))
        ));
    }

    #[test]
    fn directed_edge_rejected() {
        let xml = r#"<graphml><graph><node id="a"/><node id="b"/>
            <edge source="a" target="b" directed="true"/></graph></graphml>"#;
        assert!(matches!(
            parse_graphml(xml),
            Err(ParseError::Unsupported(_))
        ));
    }

    #[test]
    fn broken_xml_reports_position() {
        assert!(matches!(
            parse_graphml("<graphml><graph>"),
            Err(ParseError::MalformedAt { .. })
        ));
    }

    #[test]
    fn edgedefault_directed_is_ignored() {
        let xml = r#"<graphml><graph edgedefault="directed">
            <node id="a"/><node id="b"/><edge source="a" target="b"/></graph></graphml>"#;
        let p = parse_graphml(xml).unwrap();
        assert_eq!(p.graph.edge_count(), 1);
    }
}
