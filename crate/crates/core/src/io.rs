//! The JSON instance and cover documents used by the command-line tools.
//!
//! An instance is `{"n": 3, "edges": [{"u": 0, "v": 1, "c": "R"}, ...]}`
//! with `c` one of `"R"`, `"B"`, `"RB"`; unknown fields are rejected. A
//! cover is `{"budget": 2, "pieces": [{"colour": "R", "vertices": [...],
//! "provenance": {...}, "certified_diameter_bound": 60}, ...]}`.

use crate::cover::Cover;
use crate::graph::{ColouredGraph, EdgeColour, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug)]
pub enum IoError {
    Json(serde_json::Error),
    Graph(GraphError),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Json(e) => write!(f, "json: {e}"),
            IoError::Graph(e) => write!(f, "invalid graph: {e}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e)
    }
}

impl From<GraphError> for IoError {
    fn from(e: GraphError) -> Self {
        IoError::Graph(e)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub n: usize,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
    pub c: EdgeColour,
}

pub fn graph_to_doc(g: &ColouredGraph) -> InstanceDoc {
    InstanceDoc {
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v, c)| EdgeDoc { u, v, c }).collect(),
    }
}

pub fn doc_to_graph(doc: &InstanceDoc) -> Result<ColouredGraph, GraphError> {
    ColouredGraph::new(doc.n, doc.edges.iter().map(|e| (e.u, e.v, e.c)))
}

pub fn graph_to_json(g: &ColouredGraph) -> String {
    let mut text = serde_json::to_string_pretty(&graph_to_doc(g)).expect("document serialises");
    text.push('\n');
    text
}

pub fn graph_from_json(text: &str) -> Result<ColouredGraph, IoError> {
    let doc: InstanceDoc = serde_json::from_str(text)?;
    Ok(doc_to_graph(&doc)?)
}

pub fn cover_to_json(cover: &Cover) -> String {
    let mut text = serde_json::to_string_pretty(cover).expect("cover serialises");
    text.push('\n');
    text
}

pub fn cover_from_json(text: &str) -> Result<Cover, IoError> {
    Ok(serde_json::from_str(text)?)
}
