//! Whitespace-separated edge lists: one `u v` pair per line, `#` comments,
//! labels mapped to dense ids in first-appearance order. A line holding a
//! single token declares an isolated vertex.

use std::collections::HashMap;

use super::{check_degrees, ParseError, ParsedGraph};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, u32> = HashMap::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut pair_lines: Vec<usize> = Vec::new();

    let intern = |tok: &str, labels: &mut Vec<String>, ids: &mut HashMap<String, u32>| -> u32 {
        if let Some(&id) = ids.get(tok) {
            return id;
        }
        let id = labels.len() as u32;
        labels.push(tok.to_string());
        ids.insert(tok.to_string(), id);
        id
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [single] => {
                intern(single, &mut labels, &mut ids);
            }
            [u, v] => {
                let ui = intern(u, &mut labels, &mut ids);
                let vi = intern(v, &mut labels, &mut ids);
                pairs.push((ui, vi));
                pair_lines.push(line_no);
            }
            more => {
                return Err(ParseError::Malformed {
                    line: line_no,
                    message: format!("expected `u v`, found {} tokens", more.len()),
                })
            }
        }
    }

    let graph = Graph::new(labels.len(), &pairs).map_err(|e| match &e {
        crate::Error::SelfLoop { .. } | crate::Error::DuplicateEdge { .. } => {
            // Point at the offending line.
            let bad = pairs
                .iter()
                .enumerate()
                .find_map(|(i, &(u, v))| {
                    let dup = pairs[..i].iter().any(|&(a, b)| {
                        (a, b) == (u, v) || (b, a) == (u, v)
                    });
                    (u == v || dup).then_some(pair_lines[i])
                })
                .unwrap_or(1);
            ParseError::Malformed {
                line: bad,
                message: e.to_string(),
            }
        }
        _ => ParseError::Graph(e),
    })?;
    check_degrees(ParsedGraph { graph, labels })
}

/// Serializes back to the same line format, isolated vertices on their own
/// lines, so `parse(write(g))` reproduces the edge multiset and labels.
pub fn write_edge_list(parsed: &ParsedGraph) -> String {
    let g = &parsed.graph;
    let mut out = String::new();
    let mut touched = vec![false; g.vertex_count()];
    for &(u, v) in g.edges() {
        touched[u as usize] = true;
        touched[v as usize] = true;
        out.push_str(&format!(
            "{} {}\n",
            parsed.labels[u as usize], parsed.labels[v as usize]
        ));
    }
    for v in 0..g.vertex_count() {
        if !touched[v] {
            out.push_str(&format!("{}\n", parsed.labels[v]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_path() {
        let p = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p.graph.vertex_count(), 3);
        assert_eq!(p.graph.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(p.labels, vec!["0", "1", "2"]);
    }

    #[test]
    fn labeled_triangle() {
        let p = parse_edge_list("a b\nb c\nc a").unwrap();
        assert_eq!(p.labels, vec!["a", "b", "c"]);
        assert_eq!(p.graph.edge_count(), 3);
    }

    #[test]
    fn three_tokens_rejected_with_line() {
        let err = parse_edge_list("0 1 2").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 1, .. }));
    }

    #[test]
    fn comments_and_isolated_vertices() {
        let p = parse_edge_list("# header\na b # trailing\nlonely\n").unwrap();
        assert_eq!(p.labels, vec!["a", "b", "lonely"]);
        assert_eq!(p.graph.edge_count(), 1);
        assert_eq!(p.graph.degree(2), 0);
    }

    #[test]
    fn degree_five_rejected_with_label() {
        let err = parse_edge_list("hub a\nhub b\nhub c\nhub d\nhub e").unwrap_err();
        assert!(
            matches!(err, ParseError::DegreeExceeded { ref label, degree: 5 } if label == "hub")
        );
    }

    #[test]
    fn round_trip_preserves_edges_and_labels() {
        let text = "a b\nb c\nc d\nlonely\n";
        let p = parse_edge_list(text).unwrap();
        let again = parse_edge_list(&write_edge_list(&p)).unwrap();
        assert_eq!(again.labels, p.labels);
        assert_eq!(again.graph.edges(), p.graph.edges());
    }

    #[test]
    fn duplicate_edge_points_at_line() {
        let err = parse_edge_list("a b\nb a\n").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 2, .. }));
    }
}
