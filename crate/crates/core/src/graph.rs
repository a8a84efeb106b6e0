//! Red-blue edge-coloured simple graphs and the monochromatic
//! distance/connectivity primitives everything else is built on.
//!
//! An edge may carry one colour or both; "adjacent" always means joined by
//! an edge of *any* colour, while distances, balls, components and diameters
//! are taken in a single colour class (a `Both` edge belongs to both).

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// A set of vertex identifiers. Ordered so that every iteration in the crate
/// is deterministic.
pub type VertexSet = BTreeSet<usize>;

/// One of the two edge-colour classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Colour {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "B")]
    Blue,
}

impl Colour {
    /// The opposite colour; `c.other().other() == c`.
    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colour::Red => write!(f, "red"),
            Colour::Blue => write!(f, "blue"),
        }
    }
}

/// Colour mask of a single edge. Every edge carries at least one colour by
/// construction; an uncoloured edge is not representable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeColour {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "B")]
    Blue,
    #[serde(rename = "RB")]
    Both,
}

impl EdgeColour {
    /// Does this mask include colour `c`?
    pub fn has(self, c: Colour) -> bool {
        matches!(
            (self, c),
            (EdgeColour::Both, _) | (EdgeColour::Red, Colour::Red) | (EdgeColour::Blue, Colour::Blue)
        )
    }

    pub fn from_colour(c: Colour) -> EdgeColour {
        match c {
            Colour::Red => EdgeColour::Red,
            Colour::Blue => EdgeColour::Blue,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    EmptySourceSet,
    EmptySet,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range for a {vertex_count}-vertex graph")
            }
            GraphError::EmptySourceSet => write!(f, "BFS source set is empty"),
            GraphError::EmptySet => write!(f, "vertex set is empty"),
        }
    }
}

impl std::error::Error for GraphError {}

/// An immutable simple graph on vertices `0..n` whose edges each carry a
/// red/blue colour mask. Validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), EdgeColour>,
    adj: Vec<Vec<(usize, EdgeColour)>>,
}

impl ColouredGraph {
    /// Builds and validates a graph. Endpoint order within an edge does not
    /// matter; the same unordered pair listed twice is rejected.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, EdgeColour)>,
    ) -> Result<Self, GraphError> {
        let mut map = BTreeMap::new();
        for (u, v, c) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count: n });
                }
            }
            let key = (u.min(v), u.max(v));
            if map.insert(key, c).is_some() {
                return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &c) in &map {
            adj[u].push((v, c));
            adj[v].push((u, c));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(ColouredGraph { n, edges: map, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges as `(u, v, mask)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeColour)> + '_ {
        self.edges.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn edge_colour(&self, u: usize, v: usize) -> Option<EdgeColour> {
        if u == v {
            return None;
        }
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    /// Adjacent in *any* colour.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_colour(u, v).is_some()
    }

    /// Neighbours of `v` (all colours), ascending, with edge masks.
    pub fn neighbours(&self, v: usize) -> &[(usize, EdgeColour)] {
        &self.adj[v]
    }

    /// Neighbours of `v` reachable by an edge whose mask includes `c`, ascending.
    pub fn mono_neighbours(&self, v: usize, c: Colour) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().filter(move |&&(_, ec)| ec.has(c)).map(|&(w, _)| w)
    }

    pub fn all_vertices(&self) -> VertexSet {
        (0..self.n).collect()
    }

    /// First pair of vertices joined by no edge of any colour, if one exists.
    pub fn first_nonadjacent_pair(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Multi-source BFS in colour class `c`. Returns per-vertex shortest-path
    /// distance to the nearest source, `None` for unreachable vertices.
    pub fn mono_bfs(&self, c: Colour, sources: &VertexSet) -> Result<Vec<Option<usize>>, GraphError> {
        if sources.is_empty() {
            return Err(GraphError::EmptySourceSet);
        }
        for &s in sources {
            if s >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: s, vertex_count: self.n });
            }
        }
        Ok(self.bfs_restricted(c, sources, None))
    }

    /// BFS in colour `c`, optionally confined to the vertex set `within`
    /// (sources outside `within` are ignored).
    fn bfs_restricted(
        &self,
        c: Colour,
        sources: &VertexSet,
        within: Option<&VertexSet>,
    ) -> Vec<Option<usize>> {
        let inside = |v: usize| within.is_none_or(|set| set.contains(&v));
        let mut dist: Vec<Option<usize>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if inside(s) && dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for w in self.mono_neighbours(u, c) {
                if inside(w) && dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The ball `N^c_{<=d}(v)`: all vertices at colour-`c` distance at most
    /// `d` from `v`. Always contains `v` itself.
    pub fn ball(&self, c: Colour, v: usize, d: usize) -> VertexSet {
        assert!(v < self.n, "ball centre {v} out of range");
        let sources = VertexSet::from([v]);
        self.bfs_restricted(c, &sources, None)
            .iter()
            .enumerate()
            .filter(|&(_, dist)| dist.is_some_and(|x| x <= d))
            .map(|(u, _)| u)
            .collect()
    }

    /// Connected components of the colour-`c` subgraph, ordered by smallest
    /// member. A vertex with no `c`-edge forms a singleton component.
    pub fn mono_components(&self, c: Colour) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = VertexSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.mono_neighbours(u, c) {
                    if !seen[w] {
                        seen[w] = true;
                        component.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// Exact diameter of the colour-`c` subgraph *induced* on `s`: paths must
    /// stay inside `s`. `Ok(None)` means the induced subgraph is disconnected.
    pub fn mono_diameter(&self, c: Colour, s: &VertexSet) -> Result<Option<usize>, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut best = 0;
        for &u in s {
            let dist = self.bfs_restricted(c, &VertexSet::from([u]), Some(s));
            for &v in s {
                match dist[v] {
                    Some(d) => best = best.max(d),
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(best))
    }

    /// A pair `(z, w, dist)` realising the exact colour-`c` diameter of a
    /// `c`-component, via per-vertex BFS. `z` is the first vertex (ascending)
    /// attaining the maximum eccentricity; `w` the lowest-id farthest vertex.
    pub fn eccentric_pair(
        &self,
        c: Colour,
        component: &VertexSet,
    ) -> Result<(usize, usize, usize), GraphError> {
        if component.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for &u in component {
            let dist = self.bfs_restricted(c, &VertexSet::from([u]), None);
            let mut ecc = 0;
            let mut far = u;
            for &v in component {
                let d = dist[v].expect("component must be connected in colour c");
                if d > ecc {
                    ecc = d;
                    far = v;
                }
            }
            if best.is_none_or(|(_, _, b)| ecc > b) {
                best = Some((u, far, ecc));
            }
        }
        Ok(best.expect("component is nonempty"))
    }

    /// The subgraph induced on `s`, relabelled to `0..s.len()`, plus the map
    /// from new vertex ids back to the originals.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (ColouredGraph, Vec<usize>) {
        let to_old: Vec<usize> = s.iter().copied().collect();
        let to_new: BTreeMap<usize, usize> =
            to_old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self.edges.iter().filter_map(|(&(u, v), &c)| {
            match (to_new.get(&u), to_new.get(&v)) {
                (Some(&a), Some(&b)) => Some((a, b, c)),
                _ => None,
            }
        });
        let g = ColouredGraph::new(to_old.len(), edges)
            .expect("induced subgraph of a valid graph is valid");
        (g, to_old)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn path(n: usize, colours: &[EdgeColour]) -> ColouredGraph {
        assert_eq!(colours.len(), n - 1);
        ColouredGraph::new(n, (0..n - 1).map(|i| (i, i + 1, colours[i]))).unwrap()
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
    fn validate_accepts_red_triangle() {
        let g = ColouredGraph::new(
            3,
            [(0, 1, EdgeColour::Red), (1, 2, EdgeColour::Red), (0, 2, EdgeColour::Red)],
        );
        assert!(g.is_ok());
    }

    #[test]
    fn validate_rejects_self_loop() {
        let err = ColouredGraph::new(1, [(0, 0, EdgeColour::Red)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { vertex: 0 });
    }

    #[test]
    fn validate_rejects_out_of_range() {
        let err = ColouredGraph::new(3, [(0, 5, EdgeColour::Red)]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { vertex: 5, vertex_count: 3 });
    }

    #[test]
    fn validate_rejects_duplicate_even_reversed() {
        let err =
            ColouredGraph::new(2, [(0, 1, EdgeColour::Red), (1, 0, EdgeColour::Blue)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 0, v: 1 });
    }

    #[test]
    fn mono_bfs_ignores_other_colour() {
        // path 0-1 red, 1-2 blue
        let g = path(3, &[EdgeColour::Red, EdgeColour::Blue]);
        let dist = g.mono_bfs(Colour::Red, &VertexSet::from([0])).unwrap();
        assert_eq!(dist, vec![Some(0), Some(1), None]);
    }

    #[test]
    fn mono_bfs_source_distance_is_zero() {
        let g = path(4, &[EdgeColour::Red; 3]);
        for v in 0..4 {
            let dist = g.mono_bfs(Colour::Red, &VertexSet::from([v])).unwrap();
            assert_eq!(dist[v], Some(0));
        }
    }

    #[test]
    fn mono_bfs_five_cycle() {
        let g = ColouredGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5, EdgeColour::Red))).unwrap();
        let dist = g.mono_bfs(Colour::Red, &VertexSet::from([0])).unwrap();
        assert_eq!(dist, vec![Some(0), Some(1), Some(2), Some(2), Some(1)]);
    }

    #[test]
    fn mono_bfs_rejects_empty_sources() {
        let g = path(2, &[EdgeColour::Red]);
        assert_eq!(g.mono_bfs(Colour::Red, &VertexSet::new()), Err(GraphError::EmptySourceSet));
    }

    #[test]
    fn ball_radius_zero_is_centre() {
        let g = path(4, &[EdgeColour::Red; 3]);
        assert_eq!(g.ball(Colour::Blue, 2, 0), VertexSet::from([2]));
    }

    #[test]
    fn ball_star_radius_one() {
        let g =
            ColouredGraph::new(4, (1..4).map(|leaf| (0, leaf, EdgeColour::Red))).unwrap();
        assert_eq!(g.ball(Colour::Red, 0, 1), VertexSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn ball_red_path_radius_two() {
        let g = path(4, &[EdgeColour::Red; 3]);
        assert_eq!(g.ball(Colour::Red, 0, 2), VertexSet::from([0, 1, 2]));
    }

    #[test]
    fn ball_is_monotone_in_radius() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let g = random_graph(&mut rng, 12, 0.3);
            let v = rng.random_range(0..12);
            let c = if rng.random_bool(0.5) { Colour::Red } else { Colour::Blue };
            for d in 0..5 {
                let small = g.ball(c, v, d);
                let large = g.ball(c, v, d + 1);
                assert!(small.is_subset(&large));
            }
        }
    }

    #[test]
    fn components_edgeless_are_singletons() {
        let g = ColouredGraph::new(3, []).unwrap();
        assert_eq!(
            g.mono_components(Colour::Red),
            vec![VertexSet::from([0]), VertexSet::from([1]), VertexSet::from([2])]
        );
    }

    #[test]
    fn components_respect_colour() {
        let g = ColouredGraph::new(3, [(0, 1, EdgeColour::Red), (1, 2, EdgeColour::Blue)]).unwrap();
        assert_eq!(
            g.mono_components(Colour::Red),
            vec![VertexSet::from([0, 1]), VertexSet::from([2])]
        );
    }

    #[test]
    fn both_edge_joins_both_partitions() {
        let g = ColouredGraph::new(2, [(0, 1, EdgeColour::Both)]).unwrap();
        assert_eq!(g.mono_components(Colour::Blue), vec![VertexSet::from([0, 1])]);
        assert_eq!(g.mono_components(Colour::Red), vec![VertexSet::from([0, 1])]);
    }

    #[test]
    fn components_of_each_colour_cover_all_vertices() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..30 {
            let g = random_graph(&mut rng, 15, 0.25);
            for c in [Colour::Red, Colour::Blue] {
                let mut seen = VertexSet::new();
                for comp in g.mono_components(c) {
                    for v in comp {
                        assert!(seen.insert(v), "components must partition");
                    }
                }
                assert_eq!(seen, g.all_vertices());
            }
        }
    }

    #[test]
    fn diameter_singleton_is_zero() {
        let g = ColouredGraph::new(2, [(0, 1, EdgeColour::Red)]).unwrap();
        assert_eq!(g.mono_diameter(Colour::Red, &VertexSet::from([1])), Ok(Some(0)));
    }

    #[test]
    fn diameter_red_triangle_is_one() {
        let g = ColouredGraph::new(
            3,
            [(0, 1, EdgeColour::Red), (1, 2, EdgeColour::Red), (0, 2, EdgeColour::Red)],
        )
        .unwrap();
        assert_eq!(g.mono_diameter(Colour::Red, &g.all_vertices()), Ok(Some(1)));
    }

    #[test]
    fn diameter_of_empty_set_errors() {
        let g = ColouredGraph::new(1, []).unwrap();
        assert_eq!(g.mono_diameter(Colour::Red, &VertexSet::new()), Err(GraphError::EmptySet));
    }

    #[test]
    fn diameter_is_induced_not_ambient() {
        // red path 0-1-2; the set {0, 2} has no red path inside itself
        let g = path(3, &[EdgeColour::Red, EdgeColour::Red]);
        assert_eq!(g.mono_diameter(Colour::Red, &VertexSet::from([0, 2])), Ok(None));
    }

    #[test]
    fn ball_piece_diameter_at_most_twice_radius() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 14, 0.3);
            let v = rng.random_range(0..14);
            let d = rng.random_range(0..4);
            let c = if rng.random_bool(0.5) { Colour::Red } else { Colour::Blue };
            let ball = g.ball(c, v, d);
            let diam = g.mono_diameter(c, &ball).unwrap();
            assert!(diam.is_some(), "a ball is connected through its centre");
            assert!(diam.unwrap() <= 2 * d);
        }
    }

    #[test]
    fn eccentric_pair_red_path() {
        let g = path(3, &[EdgeColour::Red, EdgeColour::Red]);
        let comp = g.mono_components(Colour::Red).remove(0);
        assert_eq!(g.eccentric_pair(Colour::Red, &comp), Ok((0, 2, 2)));
    }

    #[test]
    fn eccentric_pair_complete_graph() {
        let g = ColouredGraph::new(
            4,
            (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v, EdgeColour::Red))),
        )
        .unwrap();
        let comp = g.mono_components(Colour::Red).remove(0);
        let (_, _, dist) = g.eccentric_pair(Colour::Red, &comp).unwrap();
        assert_eq!(dist, 1);
    }

    #[test]
    fn eccentric_pair_six_cycle() {
        let g = ColouredGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6, EdgeColour::Red))).unwrap();
        let comp = g.mono_components(Colour::Red).remove(0);
        let (_, _, dist) = g.eccentric_pair(Colour::Red, &comp).unwrap();
        assert_eq!(dist, 3);
    }

    #[test]
    fn eccentric_pair_matches_all_pairs_bfs() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..25 {
            let g = random_graph(&mut rng, 20, 0.15);
            for c in [Colour::Red, Colour::Blue] {
                for comp in g.mono_components(c) {
                    let (_, _, dist) = g.eccentric_pair(c, &comp).unwrap();
                    // independent all-pairs check
                    let mut expected = 0;
                    for &u in &comp {
                        let d = g.mono_bfs(c, &VertexSet::from([u])).unwrap();
                        for &v in &comp {
                            expected = expected.max(d[v].unwrap());
                        }
                    }
                    assert_eq!(dist, expected);
                }
            }
        }
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges_only() {
        let g = ColouredGraph::new(
            4,
            [(0, 1, EdgeColour::Red), (1, 2, EdgeColour::Blue), (2, 3, EdgeColour::Both)],
        )
        .unwrap();
        let (sub, map) = g.induced_subgraph(&VertexSet::from([1, 2, 3]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(
            sub.edges().collect::<Vec<_>>(),
            vec![(0, 1, EdgeColour::Blue), (1, 2, EdgeColour::Both)]
        );
    }
}
