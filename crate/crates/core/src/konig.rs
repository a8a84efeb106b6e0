//! Bipartite matching duality and the red/blue component intersection graph.
//!
//! A maximum matching plus the alternating-reachability vertex cover of the
//! same size witnesses the matching/cover equality on bipartite graphs.
//! Applied to the intersection graph between red components and blue
//! components of a coloured graph, this yields a cover of the vertex set by
//! at most `alpha(G)` monochromatic components.

use crate::cover::{Cover, CoverPiece, Provenance};
use crate::graph::{Colour, ColouredGraph, VertexSet};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KonigError {
    IndexOutOfRange { left: usize, right: usize },
    DuplicatePair { left: usize, right: usize },
    InvalidMatching { reason: String },
    NotMaximumMatching,
}

impl fmt::Display for KonigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KonigError::IndexOutOfRange { left, right } => {
                write!(f, "pair ({left}, {right}) out of range")
            }
            KonigError::DuplicatePair { left, right } => {
                write!(f, "duplicate pair ({left}, {right})")
            }
            KonigError::InvalidMatching { reason } => write!(f, "invalid matching: {reason}"),
            KonigError::NotMaximumMatching => {
                write!(f, "matching is not maximum: an augmenting path exists")
            }
        }
    }
}

impl std::error::Error for KonigError {}

/// A bipartite graph on left vertices `0..left_count` and right vertices
/// `0..right_count`.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    pairs: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(
        left_count: usize,
        right_count: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, KonigError> {
        let mut set = BTreeSet::new();
        for (l, r) in pairs {
            if l >= left_count || r >= right_count {
                return Err(KonigError::IndexOutOfRange { left: l, right: r });
            }
            if !set.insert((l, r)) {
                return Err(KonigError::DuplicatePair { left: l, right: r });
            }
        }
        let mut adj = vec![Vec::new(); left_count];
        for &(l, r) in &set {
            adj[l].push(r);
        }
        Ok(BipartiteGraph { left_count, right_count, pairs: set, adj })
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn has_pair(&self, l: usize, r: usize) -> bool {
        self.pairs.contains(&(l, r))
    }
}

/// A set of pairwise disjoint edges of some host bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: BTreeSet<(usize, usize)>,
}

impl Matching {
    /// Validates that `pairs` are edges of `h` and no endpoint repeats.
    pub fn new(
        h: &BipartiteGraph,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, KonigError> {
        let mut set = BTreeSet::new();
        let mut left_used = BTreeSet::new();
        let mut right_used = BTreeSet::new();
        for (l, r) in pairs {
            if !h.has_pair(l, r) {
                return Err(KonigError::InvalidMatching {
                    reason: format!("({l}, {r}) is not an edge of the host graph"),
                });
            }
            if !left_used.insert(l) {
                return Err(KonigError::InvalidMatching {
                    reason: format!("left vertex {l} matched twice"),
                });
            }
            if !right_used.insert(r) {
                return Err(KonigError::InvalidMatching {
                    reason: format!("right vertex {r} matched twice"),
                });
            }
            set.insert((l, r));
        }
        Ok(Matching { pairs: set })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }
}

/// One side of a bipartite vertex cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoverVertex {
    Left(usize),
    Right(usize),
}

/// A set of tagged vertices touching every edge of the host graph.
pub type VertexCoverSet = BTreeSet<CoverVertex>;

/// True iff every edge of `h` has an endpoint in `cover`.
pub fn is_vertex_cover(h: &BipartiteGraph, cover: &VertexCoverSet) -> bool {
    h.pairs().all(|(l, r)| {
        cover.contains(&CoverVertex::Left(l)) || cover.contains(&CoverVertex::Right(r))
    })
}

/// Maximum-cardinality matching by repeated augmenting-path search (Kuhn's
/// algorithm), deterministic: left vertices and their adjacency are scanned
/// ascending.
pub fn max_matching(h: &BipartiteGraph) -> Matching {
    let mut match_of_right = vec![usize::MAX; h.right_count];
    for l in 0..h.left_count {
        let mut seen = vec![false; h.right_count];
        augment(h, l, &mut seen, &mut match_of_right);
    }
    let pairs = match_of_right
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l != usize::MAX)
        .map(|(r, &l)| (l, r));
    Matching::new(h, pairs).expect("augmenting search yields a valid matching")
}

fn augment(h: &BipartiteGraph, l: usize, seen: &mut [bool], match_of_right: &mut [usize]) -> bool {
    for &r in &h.adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if match_of_right[r] == usize::MAX || augment(h, match_of_right[r], seen, match_of_right) {
            match_of_right[r] = l;
            return true;
        }
    }
    false
}

/// The constructive direction of matching/cover duality: from a maximum
/// matching, build a vertex cover of the same size. Left vertices *not*
/// reached by alternating paths from unmatched left vertices, plus right
/// vertices that are reached. Fails with `NotMaximumMatching` if the
/// reachability search uncovers an augmenting path.
pub fn konig_cover(h: &BipartiteGraph, m: &Matching) -> Result<VertexCoverSet, KonigError> {
    let mut match_of_left = vec![usize::MAX; h.left_count];
    let mut match_of_right = vec![usize::MAX; h.right_count];
    for (l, r) in m.pairs() {
        match_of_left[l] = r;
        match_of_right[r] = l;
    }

    let mut left_reached = vec![false; h.left_count];
    let mut right_reached = vec![false; h.right_count];
    let mut queue: VecDeque<usize> =
        (0..h.left_count).filter(|&l| match_of_left[l] == usize::MAX).collect();
    for &l in &queue {
        left_reached[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in &h.adj[l] {
            if match_of_left[l] == r || right_reached[r] {
                continue;
            }
            right_reached[r] = true;
            let back = match_of_right[r];
            if back == usize::MAX {
                // an unmatched right vertex reached by an alternating path
                return Err(KonigError::NotMaximumMatching);
            }
            if !left_reached[back] {
                left_reached[back] = true;
                queue.push_back(back);
            }
        }
    }

    let mut cover = VertexCoverSet::new();
    for l in 0..h.left_count {
        if !left_reached[l] && match_of_left[l] != usize::MAX {
            cover.insert(CoverVertex::Left(l));
        }
    }
    for (r, &reached) in right_reached.iter().enumerate() {
        if reached {
            cover.insert(CoverVertex::Right(r));
        }
    }
    debug_assert_eq!(cover.len(), m.len());
    debug_assert!(is_vertex_cover(h, &cover));
    Ok(cover)
}

/// The bipartite intersection graph between red components (left side) and
/// blue components (right side) of a coloured graph. Every vertex of `g`
/// lies in exactly one component of each colour, so each vertex witnesses
/// one edge.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    pub graph: BipartiteGraph,
    pub red_components: Vec<VertexSet>,
    pub blue_components: Vec<VertexSet>,
    /// Lowest-id vertex lying in both components of each edge.
    pub witness: BTreeMap<(usize, usize), usize>,
}

pub fn build_intersection(g: &ColouredGraph) -> IntersectionGraph {
    let red_components = g.mono_components(Colour::Red);
    let blue_components = g.mono_components(Colour::Blue);
    let mut blue_of = vec![usize::MAX; g.vertex_count()];
    for (j, comp) in blue_components.iter().enumerate() {
        for &v in comp {
            blue_of[v] = j;
        }
    }
    let mut witness = BTreeMap::new();
    for (i, comp) in red_components.iter().enumerate() {
        for &v in comp {
            witness.entry((i, blue_of[v])).or_insert(v);
        }
    }
    let graph = BipartiteGraph::new(
        red_components.len(),
        blue_components.len(),
        witness.keys().copied(),
    )
    .expect("component indices are in range");
    IntersectionGraph { graph, red_components, blue_components, witness }
}

/// Covers `V(g)` by monochromatic components selected by the matching-sized
/// vertex cover of the intersection graph; the piece count equals the
/// intersection graph's matching number, which is at most `alpha(g)`.
pub fn component_cover(g: &ColouredGraph) -> Cover {
    let ig = build_intersection(g);
    let m = max_matching(&ig.graph);
    let cover =
        konig_cover(&ig.graph, &m).expect("max_matching output admits no augmenting path");
    let mut pieces = Vec::new();
    for member in cover {
        let (colour, vertices) = match member {
            CoverVertex::Left(i) => (Colour::Red, ig.red_components[i].clone()),
            CoverVertex::Right(j) => (Colour::Blue, ig.blue_components[j].clone()),
        };
        let diameter = g
            .mono_diameter(colour, &vertices)
            .expect("components are nonempty")
            .expect("components are connected in their colour");
        pieces.push(CoverPiece {
            colour,
            vertices,
            provenance: Provenance::Component,
            certified_diameter_bound: diameter,
        });
    }
    Cover { budget: pieces.len(), pieces }
}

/// Maps a matching of the intersection graph to one witness vertex per edge.
/// The result is independent in `g`: an edge between two witnesses would
/// merge either their red or their blue components.
pub fn independent_witness(ig: &IntersectionGraph, m: &Matching) -> VertexSet {
    m.pairs()
        .map(|(l, r)| {
            *ig.witness
                .get(&(l, r))
                .expect("matching pairs must be edges of the intersection graph")
        })
        .collect()
}
