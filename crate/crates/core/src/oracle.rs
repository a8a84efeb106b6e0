//! Brute-force ground truth: exact independence number (two independent
//! routes), exhaustive minimum component covers on tiny instances, the
//! complete-graph diameter trichotomy, and the cover validator.

use crate::cover::{f_diameter, Cover};
use crate::graph::{Colour, ColouredGraph, EdgeColour};
use serde::Serialize;
use std::fmt;

/// Default vertex limit for [`alpha_exact`].
pub const DEFAULT_ALPHA_LIMIT: usize = 60;
/// Hard cap from the `u128` vertex bitsets of the branch-and-bound solver.
pub const MAX_ALPHA_VERTICES: usize = 128;
/// Vertex limit for the subset-enumeration route [`alpha_naive`].
pub const NAIVE_ALPHA_LIMIT: usize = 20;
/// Component-count limit for [`min_component_cover_exact`].
pub const COMPONENT_COVER_LIMIT: usize = 22;
/// Vertex limit for [`folk_scan`] (3^C(n,2) colourings).
pub const FOLK_SCAN_LIMIT: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { actual: usize, limit: usize },
    NotComplete { u: usize, v: usize },
    TrichotomyViolated { red: Option<usize>, blue: Option<usize> },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { actual, limit } => {
                write!(f, "instance size {actual} exceeds the oracle limit {limit}")
            }
            OracleError::NotComplete { u, v } => {
                write!(f, "graph is not complete: {u} and {v} are nonadjacent")
            }
            OracleError::TrichotomyViolated { red, blue } => write!(
                f,
                "diameter trichotomy violated: red {red:?}, blue {blue:?}"
            ),
        }
    }
}

impl std::error::Error for OracleError {}

fn bit(v: usize) -> u128 {
    1u128 << v
}

fn low_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn adjacency_masks(g: &ColouredGraph) -> Vec<u128> {
    let mut adj = vec![0u128; g.vertex_count()];
    for (u, v, _) in g.edges() {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    adj
}

/// Exact independence number with the default size limit. Adjacency is over
/// edges of any colour; "nonadjacent" means no edge at all.
pub fn alpha_exact(g: &ColouredGraph) -> Result<usize, OracleError> {
    alpha_exact_with_limit(g, DEFAULT_ALPHA_LIMIT)
}

/// Exact independence number by branch and bound on the highest-degree
/// remaining vertex, seeded with a greedy lower bound. Deterministic.
pub fn alpha_exact_with_limit(g: &ColouredGraph, limit: usize) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    let cap = limit.min(MAX_ALPHA_VERTICES);
    if n > cap {
        return Err(OracleError::TooLarge { actual: n, limit: cap });
    }
    let adj = adjacency_masks(g);
    let mut best = greedy_lower_bound(&adj, n);
    branch(low_mask(n), 0, &mut best, &adj);
    Ok(best)
}

/// Greedy independent set: repeatedly take the minimum-degree remaining
/// vertex (lowest id on ties) and discard its closed neighbourhood.
fn greedy_lower_bound(adj: &[u128], n: usize) -> usize {
    let mut available = low_mask(n);
    let mut size = 0;
    while available != 0 {
        let mut pick = None;
        for (v, &mask) in adj.iter().enumerate() {
            if available & bit(v) == 0 {
                continue;
            }
            let degree = (mask & available).count_ones();
            if pick.is_none_or(|(d, _)| degree < d) {
                pick = Some((degree, v));
            }
        }
        let (_, v) = pick.expect("available set is nonempty");
        size += 1;
        available &= !(adj[v] | bit(v));
    }
    size
}

fn branch(available: u128, size: usize, best: &mut usize, adj: &[u128]) {
    if available == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + available.count_ones() as usize <= *best {
        return;
    }
    // branch on the highest-degree available vertex (lowest id on ties)
    let mut pick: Option<(u32, usize)> = None;
    let mut rest = available;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let degree = (adj[v] & available).count_ones();
        if pick.is_none_or(|(d, _)| degree > d) {
            pick = Some((degree, v));
        }
    }
    let (degree, v) = pick.expect("available set is nonempty");
    if degree == 0 {
        branch(available & !bit(v), size + 1, best, adj);
        return;
    }
    branch(available & !(adj[v] | bit(v)), size + 1, best, adj);
    branch(available & !bit(v), size, best, adj);
}

/// Independence number by enumeration over all vertex subsets; the
/// independent second route used to cross-check [`alpha_exact`].
pub fn alpha_naive(g: &ColouredGraph) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if n > NAIVE_ALPHA_LIMIT {
        return Err(OracleError::TooLarge { actual: n, limit: NAIVE_ALPHA_LIMIT });
    }
    let mut adj = vec![0u32; n];
    for (u, v, _) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut independent = vec![false; 1usize << n];
    independent[0] = true;
    let mut best = 0;
    for mask in 1..1u32 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        if independent[rest as usize] && adj[v] & rest == 0 {
            independent[mask as usize] = true;
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Exact minimum number of monochromatic components covering all vertices,
/// by enumeration over component subsets.
pub fn min_component_cover_exact(g: &ColouredGraph) -> Result<usize, OracleError> {
    let mut components = g.mono_components(Colour::Red);
    let red_count = components.len();
    components.extend(g.mono_components(Colour::Blue));
    let m = components.len();
    if m > COMPONENT_COVER_LIMIT {
        return Err(OracleError::TooLarge { actual: m, limit: COMPONENT_COVER_LIMIT });
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let blocks = n.div_ceil(64);
    let masks: Vec<Vec<u64>> = components
        .iter()
        .map(|comp| {
            let mut mask = vec![0u64; blocks];
            for &v in comp {
                mask[v / 64] |= 1 << (v % 64);
            }
            mask
        })
        .collect();
    let mut full = vec![u64::MAX; blocks];
    full[blocks - 1] = if n.is_multiple_of(64) { u64::MAX } else { (1 << (n % 64)) - 1 };

    // the red components alone always cover
    let mut best = red_count;
    for choice in 1u32..1 << m {
        if choice.count_ones() as usize >= best {
            continue;
        }
        let mut union = vec![0u64; blocks];
        for (i, mask) in masks.iter().enumerate() {
            if choice >> i & 1 == 1 {
                for b in 0..blocks {
                    union[b] |= mask[b];
                }
            }
        }
        if union == full {
            best = choice.count_ones() as usize;
        }
    }
    Ok(best)
}

/// The complete-graph trichotomy: one colour spans with diameter at most 2,
/// or both colours span with diameter exactly 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FolkClass {
    RedLe2,
    BlueLe2,
    BothEq3,
}

/// Classifies a complete coloured graph by its spanning red and blue
/// diameters (red reported when both are at most 2).
pub fn folk_classify(g: &ColouredGraph) -> Result<FolkClass, OracleError> {
    if let Some((u, v)) = g.first_nonadjacent_pair() {
        return Err(OracleError::NotComplete { u, v });
    }
    if g.vertex_count() == 0 {
        return Ok(FolkClass::RedLe2);
    }
    let all = g.all_vertices();
    let red = g.mono_diameter(Colour::Red, &all).expect("vertex set is nonempty");
    let blue = g.mono_diameter(Colour::Blue, &all).expect("vertex set is nonempty");
    match (red, blue) {
        (Some(d), _) if d <= 2 => Ok(FolkClass::RedLe2),
        (_, Some(d)) if d <= 2 => Ok(FolkClass::BlueLe2),
        (Some(3), Some(3)) => Ok(FolkClass::BothEq3),
        _ => Err(OracleError::TrichotomyViolated { red, blue }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FolkScanSummary {
    pub n: usize,
    pub colourings: u64,
    pub red_le_2: u64,
    pub blue_le_2: u64,
    pub both_eq_3: u64,
    pub violations: u64,
}

/// Classifies every one of the 3^C(n,2) colourings of the complete graph on
/// `n` vertices and tallies the trichotomy cases.
pub fn folk_scan(n: usize) -> Result<FolkScanSummary, OracleError> {
    if n > FOLK_SCAN_LIMIT {
        return Err(OracleError::TooLarge { actual: n, limit: FOLK_SCAN_LIMIT });
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 3u64.pow(pairs.len() as u32);
    let mut summary = FolkScanSummary {
        n,
        colourings: total,
        red_le_2: 0,
        blue_le_2: 0,
        both_eq_3: 0,
        violations: 0,
    };
    for code in 0..total {
        let mut digits = code;
        let edges = pairs.iter().map(|&(u, v)| {
            let colour = match digits % 3 {
                0 => EdgeColour::Red,
                1 => EdgeColour::Blue,
                _ => EdgeColour::Both,
            };
            digits /= 3;
            (u, v, colour)
        });
        let g = ColouredGraph::new(n, edges).expect("complete colouring is valid");
        match folk_classify(&g) {
            Ok(FolkClass::RedLe2) => summary.red_le_2 += 1,
            Ok(FolkClass::BlueLe2) => summary.blue_le_2 += 1,
            Ok(FolkClass::BothEq3) => summary.both_eq_3 += 1,
            Err(_) => summary.violations += 1,
        }
    }
    Ok(summary)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Index of the offending piece, when the violation is piece-local.
    pub piece: Option<usize>,
    pub reason: String,
}

/// Result of checking a cover against the full contract.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub covers_all: bool,
    pub piece_count: usize,
    /// Largest exact induced diameter among connected pieces.
    pub max_piece_diameter: usize,
    pub budget: usize,
    pub violations: Vec<Violation>,
}

impl CoverReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks coverage of `V(g)`, the piece count against `budget`, and each
/// piece's monochromatic connectivity and exact induced diameter against
/// both `f_diameter(budget)` and the piece's own certified bound.
/// Violations are data, not errors.
pub fn verify_cover(g: &ColouredGraph, cover: &Cover, budget: usize) -> CoverReport {
    let n = g.vertex_count();
    let limit = f_diameter(budget).ok();
    let mut violations = Vec::new();
    if cover.pieces.len() > budget {
        violations.push(Violation {
            piece: None,
            reason: format!("{} pieces exceed the budget {budget}", cover.pieces.len()),
        });
    }
    let mut covered = vec![false; n];
    let mut max_diameter = 0;
    for (index, piece) in cover.pieces.iter().enumerate() {
        if piece.vertices.is_empty() {
            violations.push(Violation { piece: Some(index), reason: "piece is empty".into() });
            continue;
        }
        let mut in_range = true;
        for &v in &piece.vertices {
            if v >= n {
                violations.push(Violation {
                    piece: Some(index),
                    reason: format!("vertex {v} out of range"),
                });
                in_range = false;
            } else {
                covered[v] = true;
            }
        }
        if !in_range {
            continue;
        }
        match g
            .mono_diameter(piece.colour, &piece.vertices)
            .expect("nonemptiness was checked")
        {
            None => violations.push(Violation {
                piece: Some(index),
                reason: format!(
                    "the {} subgraph induced on the piece is disconnected",
                    piece.colour
                ),
            }),
            Some(d) => {
                max_diameter = max_diameter.max(d);
                if let Some(f) = limit {
                    if d > f {
                        violations.push(Violation {
                            piece: Some(index),
                            reason: format!("diameter {d} exceeds f({budget}) = {f}"),
                        });
                    }
                }
                if d > piece.certified_diameter_bound {
                    violations.push(Violation {
                        piece: Some(index),
                        reason: format!(
                            "diameter {d} exceeds the certified bound {}",
                            piece.certified_diameter_bound
                        ),
                    });
                }
            }
        }
    }
    let mut covers_all = true;
    for (v, &is_covered) in covered.iter().enumerate() {
        if !is_covered {
            covers_all = false;
            violations.push(Violation { piece: None, reason: format!("vertex {v} not covered") });
        }
    }
    CoverReport {
        covers_all,
        piece_count: cover.pieces.len(),
        max_piece_diameter: max_diameter,
        budget,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{CoverPiece, Provenance};
    use crate::graph::VertexSet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn complete_red(n: usize) -> ColouredGraph {
        ColouredGraph::new(
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, EdgeColour::Red))),
        )
        .unwrap()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> ColouredGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    let c = match rng.random_range(0..3) {
                        0 => EdgeColour::Red,
                        1 => EdgeColour::Blue,
                        _ => EdgeColour::Both,
                    };
                    edges.push((u, v, c));
                }
            }
        }
        ColouredGraph::new(n, edges).unwrap()
    }

    #[test]
    fn alpha_of_complete_graph_is_one() {
        assert_eq!(alpha_exact(&complete_red(6)), Ok(1));
    }

    #[test]
    fn alpha_of_edgeless_graph_is_n() {
        let g = ColouredGraph::new(7, []).unwrap();
        assert_eq!(alpha_exact(&g), Ok(7));
    }

    #[test]
    fn alpha_of_five_cycle_is_two() {
        let g = ColouredGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5, EdgeColour::Red))).unwrap();
        assert_eq!(alpha_naive(&g), Ok(2));
        assert_eq!(alpha_exact(&g), Ok(2));
    }

    #[test]
    fn alpha_respects_limit() {
        let g = ColouredGraph::new(61, []).unwrap();
        assert_eq!(alpha_exact(&g), Err(OracleError::TooLarge { actual: 61, limit: 60 }));
        assert_eq!(alpha_exact_with_limit(&g, 128), Ok(61));
    }

    #[test]
    fn alpha_branch_and_bound_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..60 {
            let n = rng.random_range(1..=14);
            let p = rng.random_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            assert_eq!(alpha_exact(&g).unwrap(), alpha_naive(&g).unwrap());
        }
    }

    #[test]
    fn min_component_cover_edgeless() {
        let g = ColouredGraph::new(5, []).unwrap();
        assert_eq!(min_component_cover_exact(&g), Ok(5));
    }

    #[test]
    fn min_component_cover_single_edges() {
        let red = ColouredGraph::new(2, [(0, 1, EdgeColour::Red)]).unwrap();
        assert_eq!(min_component_cover_exact(&red), Ok(1));
        let both = ColouredGraph::new(2, [(0, 1, EdgeColour::Both)]).unwrap();
        assert_eq!(min_component_cover_exact(&both), Ok(1));
    }

    #[test]
    fn min_component_cover_at_most_alpha() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..40 {
            let g = random_graph(&mut rng, 10, 0.3);
            assert!(min_component_cover_exact(&g).unwrap() <= alpha_exact(&g).unwrap());
        }
    }

    #[test]
    fn folk_classify_red_triangle() {
        assert_eq!(folk_classify(&complete_red(3)), Ok(FolkClass::RedLe2));
    }

    #[test]
    fn folk_classify_five_cycle_colouring() {
        // red C5, blue complement: both diameters are 2, red preferred
        let g = ColouredGraph::new(
            5,
            (0..5).flat_map(|u| {
                (u + 1..5).map(move |v| {
                    let cyclic = v - u == 1 || v - u == 4;
                    (u, v, if cyclic { EdgeColour::Red } else { EdgeColour::Blue })
                })
            }),
        )
        .unwrap();
        assert_eq!(folk_classify(&g), Ok(FolkClass::RedLe2));
    }

    #[test]
    fn folk_classify_rejects_incomplete() {
        let g = ColouredGraph::new(3, [(0, 1, EdgeColour::Red)]).unwrap();
        assert_eq!(folk_classify(&g), Err(OracleError::NotComplete { u: 0, v: 2 }));
    }

    #[test]
    fn folk_scan_tiny() {
        let two = folk_scan(2).unwrap();
        assert_eq!(two.colourings, 3);
        assert_eq!(two.violations, 0);
        assert_eq!(two.red_le_2 + two.blue_le_2 + two.both_eq_3, 3);

        let three = folk_scan(3).unwrap();
        assert_eq!(three.colourings, 27);
        assert_eq!(three.violations, 0);
        assert_eq!(three.red_le_2 + three.blue_le_2 + three.both_eq_3, 27);
    }

    fn component_pieces(g: &ColouredGraph) -> Cover {
        let mut pieces = Vec::new();
        for colour in [Colour::Red, Colour::Blue] {
            for comp in g.mono_components(colour) {
                let diameter = g.mono_diameter(colour, &comp).unwrap().unwrap();
                pieces.push(CoverPiece {
                    colour,
                    vertices: comp,
                    provenance: Provenance::Component,
                    certified_diameter_bound: diameter,
                });
            }
        }
        Cover { budget: pieces.len(), pieces }
    }

    #[test]
    fn verify_cover_accepts_all_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let g = random_graph(&mut rng, 12, 0.3);
        let cover = component_pieces(&g);
        let report = verify_cover(&g, &cover, 100);
        assert!(report.covers_all);
        assert!(report.is_valid(), "violations: {:?}", report.violations);
    }

    #[test]
    fn verify_cover_reports_uncovered_vertex() {
        let g = ColouredGraph::new(3, [(0, 1, EdgeColour::Red)]).unwrap();
        let cover = Cover {
            budget: 2,
            pieces: vec![CoverPiece {
                colour: Colour::Red,
                vertices: VertexSet::from([0, 1]),
                provenance: Provenance::Component,
                certified_diameter_bound: 1,
            }],
        };
        let report = verify_cover(&g, &cover, 2);
        assert!(!report.covers_all);
        assert!(report.violations.iter().any(|v| v.reason.contains("vertex 2 not covered")));
    }

    #[test]
    fn verify_cover_reports_disconnected_piece() {
        let g = ColouredGraph::new(3, [(0, 1, EdgeColour::Red), (1, 2, EdgeColour::Blue)]).unwrap();
        let cover = Cover {
            budget: 3,
            pieces: vec![CoverPiece {
                colour: Colour::Red,
                vertices: VertexSet::from([0, 1, 2]),
                provenance: Provenance::Component,
                certified_diameter_bound: 2,
            }],
        };
        let report = verify_cover(&g, &cover, 3);
        assert!(report.violations.iter().any(|v| v.reason.contains("disconnected")));
    }
}
