//! Brute-force helpers shared by the integration suites, independent of the
//! library's own algorithm paths.

// each test binary uses a different subset of these helpers
#![allow(dead_code)]

use bichrome::graph::{ColouredGraph, EdgeColour};
use bichrome::konig::BipartiteGraph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Exact minimum vertex cover of a bipartite graph by branching on the
/// endpoints of an uncovered edge.
pub fn min_vertex_cover_exact(h: &BipartiteGraph) -> usize {
    let edges: Vec<(usize, usize)> = h.pairs().collect();
    let mut left_in = vec![false; h.left_count()];
    let mut right_in = vec![false; h.right_count()];
    let mut best = h.left_count().min(h.right_count()) + 1;
    branch(&edges, &mut left_in, &mut right_in, 0, &mut best);
    best
}

fn branch(
    edges: &[(usize, usize)],
    left_in: &mut [bool],
    right_in: &mut [bool],
    size: usize,
    best: &mut usize,
) {
    if size >= *best {
        return;
    }
    match edges.iter().find(|&&(l, r)| !left_in[l] && !right_in[r]) {
        None => *best = size,
        Some(&(l, r)) => {
            left_in[l] = true;
            branch(edges, left_in, right_in, size + 1, best);
            left_in[l] = false;
            right_in[r] = true;
            branch(edges, left_in, right_in, size + 1, best);
            right_in[r] = false;
        }
    }
}

pub fn random_bipartite(rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let left = rng.random_range(1..=10);
    let right = rng.random_range(1..=10);
    let p = rng.random_range(0.1..0.9);
    let mut pairs = Vec::new();
    for l in 0..left {
        for r in 0..right {
            if rng.random_bool(p) {
                pairs.push((l, r));
            }
        }
    }
    BipartiteGraph::new(left, right, pairs).unwrap()
}

pub fn random_coloured(rng: &mut ChaCha8Rng, n: usize, p: f64) -> ColouredGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                let c = match rng.random_range(0..4) {
                    0 => EdgeColour::Red,
                    1 => EdgeColour::Blue,
                    2 => EdgeColour::Both,
                    _ => {
                        if rng.random_bool(0.5) {
                            EdgeColour::Red
                        } else {
                            EdgeColour::Blue
                        }
                    }
                };
                edges.push((u, v, c));
            }
        }
    }
    ColouredGraph::new(n, edges).unwrap()
}
