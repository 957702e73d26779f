//! Page JSON.
//!
//! ```json
//! {"vertices":[{"id":"b0","kind":"boundary","rank":0}, ...],
//!  "edges":[{"id":"e0","low":"b0","high":"v1","twist":0}, ...]}
//! ```
//!
//! `kind` is one of `boundary`, `min`, `max`, `saddle_p`, `saddle_b`;
//! `twist` is 0 or 1. Unknown keys are rejected. The serializer writes
//! two-space indented JSON with keys in the order above and a trailing
//! newline, preserving vertex and edge order.

use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::reeb::{LabeledReebGraph, Page, ValidationReport, VertexKind};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("invalid page: {0}")]
    Invalid(ValidationReport),
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn object<'a>(
    value: &'a Value,
    path: &str,
    keys: &[&str],
) -> Result<&'a Map<String, Value>, ParseError> {
    let map = value
        .as_object()
        .ok_or_else(|| schema(path, "expected an object"))?;
    for key in map.keys() {
        if !keys.contains(&key.as_str()) {
            return Err(schema(format!("{path}.{key}"), "unknown field"));
        }
    }
    for key in keys {
        if !map.contains_key(*key) {
            return Err(schema(format!("{path}.{key}"), "missing field"));
        }
    }
    Ok(map)
}

fn string(map: &Map<String, Value>, path: &str, key: &str) -> Result<String, ParseError> {
    map[key]
        .as_str()
        .map(str::to_owned)
        .ok_or_else(|| schema(format!("{path}.{key}"), "expected a string"))
}

fn array<'a>(map: &'a Map<String, Value>, key: &str) -> Result<&'a Vec<Value>, ParseError> {
    map[key]
        .as_array()
        .ok_or_else(|| schema(key, "expected an array"))
}

fn kind_from_str(s: &str) -> Option<VertexKind> {
    Some(match s {
        "boundary" => VertexKind::Boundary,
        "min" => VertexKind::Min,
        "max" => VertexKind::Max,
        "saddle_p" => VertexKind::SaddleP,
        "saddle_b" => VertexKind::SaddleB,
        _ => return None,
    })
}

/// Parses page JSON without checking page invariants.
pub fn parse_graph(text: &str) -> Result<LabeledReebGraph, ParseError> {
    let root: Value = serde_json::from_str(text)?;
    let root = object(&root, "$", &["vertices", "edges"])?;
    let mut graph = LabeledReebGraph::new();
    for (i, v) in array(root, "vertices")?.iter().enumerate() {
        let path = format!("vertices[{i}]");
        let map = object(v, &path, &["id", "kind", "rank"])?;
        let id = string(map, &path, "id")?;
        let kind = string(map, &path, "kind")?;
        let kind = kind_from_str(&kind)
            .ok_or_else(|| schema(format!("{path}.kind"), format!("unknown kind `{kind}`")))?;
        let rank = map["rank"]
            .as_u64()
            .and_then(|r| u32::try_from(r).ok())
            .ok_or_else(|| schema(format!("{path}.rank"), "expected a non-negative integer"))?;
        graph.vertex(id, kind, rank);
    }
    for (i, e) in array(root, "edges")?.iter().enumerate() {
        let path = format!("edges[{i}]");
        let map = object(e, &path, &["id", "low", "high", "twist"])?;
        let twist = match map["twist"].as_u64() {
            Some(0) => false,
            Some(1) => true,
            _ => return Err(schema(format!("{path}.twist"), "expected 0 or 1")),
        };
        graph.edge(
            string(map, &path, "id")?,
            string(map, &path, "low")?,
            string(map, &path, "high")?,
            twist,
        );
    }
    Ok(graph)
}

/// Parses and validates page JSON.
pub fn parse_page(text: &str) -> Result<Page, ParseError> {
    Page::new(parse_graph(text)?).map_err(ParseError::Invalid)
}

#[derive(Serialize)]
struct VertexOut<'a> {
    id: &'a str,
    kind: &'a str,
    rank: u32,
}

#[derive(Serialize)]
struct EdgeOut<'a> {
    id: &'a str,
    low: &'a str,
    high: &'a str,
    twist: u8,
}

#[derive(Serialize)]
struct GraphOut<'a> {
    vertices: Vec<VertexOut<'a>>,
    edges: Vec<EdgeOut<'a>>,
}

pub fn serialize_graph(graph: &LabeledReebGraph) -> String {
    let out = GraphOut {
        vertices: graph
            .vertices
            .iter()
            .map(|v| VertexOut {
                id: &v.id,
                kind: v.kind.as_str(),
                rank: v.rank,
            })
            .collect(),
        edges: graph
            .edges
            .iter()
            .map(|e| EdgeOut {
                id: &e.id,
                low: &e.low,
                high: &e.high,
                twist: u8::from(e.twist),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&out).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn serialize_page(page: &Page) -> String {
    serialize_graph(page.graph())
}
