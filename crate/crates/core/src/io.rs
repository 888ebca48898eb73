//! Hypergraph file formats.
//!
//! Text: one edge per line, vertex labels separated by whitespace, `#`
//! starts a comment, blank lines are skipped. JSON: `{"edges": [["a", "b"], ...]}`.
//! A file whose first non-blank character is `{` is read as JSON.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{BuildMode, Hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub edges: Vec<Vec<String>>,
}

pub fn parse_hypergraph_file(path: impl AsRef<Path>, mode: BuildMode) -> Result<Hypergraph> {
    let path = path.as_ref();
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::Parse { line: 0, column: 0, message: format!("{}: {e}", path.display()) })?;
    parse_hypergraph(&text, mode)
}

pub fn parse_hypergraph(text: &str, mode: BuildMode) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text, mode)
    } else {
        parse_text(text, mode)
    }
}

fn parse_text(text: &str, mode: BuildMode) -> Result<Hypergraph> {
    let mut edges: Vec<Vec<&str>> = Vec::new();
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut edge: Vec<&str> = Vec::new();
        for token in content.split_whitespace() {
            if edge.contains(&token) {
                let column = token.as_ptr() as usize - raw.as_ptr() as usize + 1;
                return Err(Error::Parse {
                    line: n + 1,
                    column,
                    message: format!("vertex `{token}` repeated within an edge"),
                });
            }
            edge.push(token);
        }
        if !edge.is_empty() {
            edges.push(edge);
            lines.push(n + 1);
        }
    }
    Hypergraph::build_with(edges, mode).map_err(|e| match e {
        Error::NotAntichain { subset, superset } => {
            Error::NotAntichainAt { subset_line: lines[subset], superset_line: lines[superset] }
        }
        other => other,
    })
}

fn parse_json(text: &str, mode: BuildMode) -> Result<Hypergraph> {
    let file: HypergraphFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    for (i, edge) in file.edges.iter().enumerate() {
        if let Some(bad) = edge.iter().find(|l| !valid_label(l)) {
            return Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!("edge {i}: invalid vertex label {bad:?}"),
            });
        }
    }
    Hypergraph::build_with(&file.edges, mode)
}

/// Labels are nonempty and contain neither whitespace nor `#`.
pub fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.contains(|c: char| c.is_whitespace() || c == '#')
}

/// Text format, one edge per line in edge order.
pub fn write_text(h: &Hypergraph) -> String {
    h.raw_edges().iter().map(|e| e.join(" ") + "\n").collect()
}

pub fn write_json(h: &Hypergraph) -> String {
    serde_json::to_string(&HypergraphFile { edges: h.raw_edges() }).expect("plain data serializes") + "\n"
}

/// Comma-separated labels, e.g. `b,e`. Empty input is the empty list.
pub fn parse_label_list(list: &str) -> Vec<String> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn text_examples() {
        let k = parse_hypergraph("a b\nb c\nd e\ne f\n", BuildMode::Strict).unwrap();
        assert_eq!(k, fixtures::figure_two());
        let x = parse_hypergraph("# comment\nx\n", BuildMode::Strict).unwrap();
        assert_eq!(x, Hypergraph::build([["x"]]).unwrap());
        assert_eq!(
            parse_hypergraph("x\nx y\n", BuildMode::Strict),
            Err(Error::NotAntichainAt { subset_line: 1, superset_line: 2 })
        );
        let m = parse_hypergraph("x\n\n  x y # tail\n", BuildMode::Minimalize).unwrap();
        assert_eq!(m.raw_edges(), vec![vec!["x".to_string()]]);
    }

    #[test]
    fn text_errors_carry_position() {
        assert_eq!(
            parse_hypergraph("a b\nc  d c\n", BuildMode::Strict),
            Err(Error::Parse { line: 2, column: 6, message: "vertex `c` repeated within an edge".into() })
        );
        assert_eq!(
            parse_hypergraph("a b\n\nb\nb c", BuildMode::Strict),
            Err(Error::NotAntichainAt { subset_line: 3, superset_line: 1 })
        );
    }

    #[test]
    fn json_format() {
        let h = parse_hypergraph(r#" {"edges": [["a","b"],["b","c"]]}"#, BuildMode::Strict).unwrap();
        assert_eq!(h, fixtures::path3());
        assert_eq!(parse_hypergraph(&write_json(&h), BuildMode::Strict).unwrap(), h);
        assert_eq!(parse_hypergraph(&write_text(&h), BuildMode::Strict).unwrap(), h);

        let err = parse_hypergraph("{\"edges\": [[\"a\",]]}", BuildMode::Strict).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(parse_hypergraph(r#"{"edges": [["a b"]]}"#, BuildMode::Strict).is_err());
        assert_eq!(
            parse_hypergraph(r#"{"edges": [["a"], []]}"#, BuildMode::Strict),
            Err(Error::EmptyEdge { index: 1 })
        );
    }

    #[test]
    fn label_lists() {
        assert_eq!(parse_label_list("b, e"), vec!["b", "e"]);
        assert!(parse_label_list("").is_empty());
        let h = fixtures::figure_three();
        assert_eq!(h.vertex_set(parse_label_list("b,zz")), Err(Error::UnknownVertex("zz".into())));
    }
}
