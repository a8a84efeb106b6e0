//! Graphviz DOT export: red/blue/purple edges, optional cover overlay.

use crate::cover::Cover;
use crate::graph::{ColouredGraph, EdgeColour};
use std::fmt::Write;

/// Renders `g` as an undirected DOT document. With a cover, every vertex is
/// labelled with the index of one piece containing it (the lowest).
pub fn export_dot(g: &ColouredGraph, cover: Option<&Cover>) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.vertex_count() {
        let piece = cover.and_then(|c| {
            c.pieces.iter().position(|piece| piece.vertices.contains(&v))
        });
        match piece {
            Some(i) => writeln!(out, "  {v} [label=\"{v} (p{i})\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v, c) in g.edges() {
        let colour = match c {
            EdgeColour::Red => "red",
            EdgeColour::Blue => "blue",
            EdgeColour::Both => "purple",
        };
        writeln!(out, "  {u} -- {v} [color={colour}];").unwrap();
    }
    out.push_str("}\n");
    out
}
