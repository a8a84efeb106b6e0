//! The bounded-diameter cover algorithm.
//!
//! Given a coloured graph and a budget `a` at least the independence number,
//! [`bounded_cover`] produces at most `a` monochromatic pieces, each of
//! induced diameter at most `f(a) = 8a^2 + 12a + 4`, whose vertex sets cover
//! the graph. One recursion level, working on the graph induced on the
//! not-yet-covered vertices:
//!
//! * `a == 1`: the remainder is complete, and one spanning colour has
//!   diameter at most 3 ([`base_complete`]).
//! * every monochromatic component is narrower than `f(a)`: cover by whole
//!   components via the intersection graph ([`crate::konig::component_cover`]).
//! * otherwise some component is wide; let `z` realise its diameter and
//!   `r = f(a)/2`. If two nonadjacent vertices of the radius-`(r-1)` ball
//!   around `z` are joined by a short other-colour path, two radius-`r`
//!   balls come off and the budget drops by 2 ([`blue_shortcut`]). If no
//!   such pair exists, every vertex of the ball far from a fixed maximal
//!   independent set `I` has a unique other-colour neighbour in `I` — its
//!   label ([`build_labels`]). A "good set" of far-apart labelled vertices
//!   is then grown ([`extend_or_collide`]); each label collision either
//!   swaps the set one larger along an alternating path ([`closure`],
//!   [`apply_swap`]) or stabilises, in which case radius-2 other-colour
//!   balls around the closure's labels swallow the closure and its entire
//!   neighbourhood, dropping the budget by the closure size
//!   ([`removal_pieces`]).

use crate::graph::{Colour, ColouredGraph, EdgeColour, VertexSet};
use crate::konig::component_cover;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// How a piece was produced, with enough data to recheck its diameter bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// A whole monochromatic component (small-component fallback).
    Component,
    /// `N^R_{<=radius}(centre)`; induced red diameter at most `2 * radius`.
    RedBall { centre: usize, radius: usize },
    /// `N^B_{<=radius}(centre)`; induced blue diameter at most `2 * radius`.
    BlueBall { centre: usize, radius: usize },
    /// Spanning colour of a complete remainder, diameter at most 3.
    BaseComplete,
}

/// One monochromatic piece of a cover. The induced subgraph of `colour` on
/// `vertices` is connected with diameter at most `certified_diameter_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverPiece {
    pub colour: Colour,
    pub vertices: VertexSet,
    pub provenance: Provenance,
    pub certified_diameter_bound: usize,
}

/// A list of pieces plus the budget they were produced under.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cover {
    pub budget: usize,
    pub pieces: Vec<CoverPiece>,
}

/// Branch counters for one `bounded_cover` run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoverTrace {
    pub base_complete_pieces: usize,
    pub component_pieces: usize,
    pub large_component_hits: usize,
    pub shortcut_hits: usize,
    pub extensions: usize,
    pub collisions: usize,
    pub swaps: usize,
    pub closures: usize,
    pub max_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverError {
    NonPositiveBudget,
    /// The recursion needs budget on a nonempty remainder that it does not
    /// have; the caller's `alpha(g) <= a` precondition was violated.
    BudgetExhausted { remaining_vertices: usize, budget: usize },
    EmptyGraph,
    NotComplete { u: usize, v: usize },
    LabelMissing { vertex: usize },
    LabelNotUnique { vertex: usize, first: usize, second: usize },
    NoVertexAtExactDistance { distance: usize },
    CountingFailure { t: usize },
    UnlabelledNeighbour { vertex: usize },
    GoodnessViolated { reason: String },
    CoverageGap { vertex: usize },
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::NonPositiveBudget => write!(f, "budget must be positive"),
            CoverError::BudgetExhausted { remaining_vertices, budget } => write!(
                f,
                "budget {budget} exhausted with {remaining_vertices} vertices uncovered \
                 (was the budget really an upper bound on the independence number?)"
            ),
            CoverError::EmptyGraph => write!(f, "graph has no vertices"),
            CoverError::NotComplete { u, v } => {
                write!(f, "graph is not complete: {u} and {v} are nonadjacent")
            }
            CoverError::LabelMissing { vertex } => {
                write!(f, "vertex {vertex} has no other-colour neighbour in the independent set")
            }
            CoverError::LabelNotUnique { vertex, first, second } => write!(
                f,
                "vertex {vertex} has several other-colour neighbours in the independent set \
                 ({first} and {second})"
            ),
            CoverError::NoVertexAtExactDistance { distance } => {
                write!(f, "no vertex at distance exactly {distance} from the centre")
            }
            CoverError::CountingFailure { t } => {
                write!(f, "no admissible path vertex found at t = {t}")
            }
            CoverError::UnlabelledNeighbour { vertex } => {
                write!(f, "neighbour {vertex} of the closure has no label")
            }
            CoverError::GoodnessViolated { reason } => write!(f, "good-set invariant broken: {reason}"),
            CoverError::CoverageGap { vertex } => {
                write!(f, "removal pieces miss vertex {vertex} of the closure's neighbourhood")
            }
        }
    }
}

impl std::error::Error for CoverError {}

/// The diameter bound `f(a) = 8a^2 + 12a + 4`.
pub fn f_diameter(a: usize) -> Result<usize, CoverError> {
    if a == 0 {
        return Err(CoverError::NonPositiveBudget);
    }
    Ok(8 * a * a + 12 * a + 4)
}

/// The ball radius `r = f(a)/2 = 4a^2 + 6a + 2`.
pub fn r_radius(a: usize) -> Result<usize, CoverError> {
    Ok(f_diameter(a)? / 2)
}

fn ball_provenance(colour: Colour, centre: usize, radius: usize) -> Provenance {
    match colour {
        Colour::Red => Provenance::RedBall { centre, radius },
        Colour::Blue => Provenance::BlueBall { centre, radius },
    }
}

fn ball_piece(g: &ColouredGraph, colour: Colour, centre: usize, radius: usize) -> CoverPiece {
    CoverPiece {
        colour,
        vertices: g.ball(colour, centre, radius),
        provenance: ball_provenance(colour, centre, radius),
        certified_diameter_bound: 2 * radius,
    }
}

/// Base case `alpha(g) <= 1`: `g` is complete, and either colour class that
/// spans all vertices with diameter at most 3 is returned as a single piece
/// (red preferred when both qualify).
pub fn base_complete(g: &ColouredGraph) -> Result<CoverPiece, CoverError> {
    if g.vertex_count() == 0 {
        return Err(CoverError::EmptyGraph);
    }
    if let Some((u, v)) = g.first_nonadjacent_pair() {
        return Err(CoverError::NotComplete { u, v });
    }
    let all = g.all_vertices();
    let red = g.mono_diameter(Colour::Red, &all).expect("vertex set is nonempty");
    let blue = g.mono_diameter(Colour::Blue, &all).expect("vertex set is nonempty");
    let (colour, diameter) = match (red, blue) {
        (Some(d), _) if d <= 3 => (Colour::Red, d),
        (_, Some(d)) if d <= 3 => (Colour::Blue, d),
        _ => unreachable!("a complete graph has a spanning colour of diameter at most 3"),
    };
    Ok(CoverPiece {
        colour,
        vertices: all,
        provenance: Provenance::BaseComplete,
        certified_diameter_bound: diameter,
    })
}

/// Scans for a monochromatic component of exact diameter at least
/// `f(a)` — red components before blue, in component order — and returns its
/// colour together with an endpoint `z` of an eccentric pair, so that some
/// vertex lies at finite role-distance at least `f(a)` from `z`.
pub fn find_large_component(
    g: &ColouredGraph,
    a: usize,
) -> Result<Option<(Colour, usize)>, CoverError> {
    let f = f_diameter(a)?;
    for colour in [Colour::Red, Colour::Blue] {
        for component in g.mono_components(colour) {
            let (z, _, diameter) =
                g.eccentric_pair(colour, &component).expect("components are nonempty");
            if diameter >= f {
                return Ok(Some((colour, z)));
            }
        }
    }
    Ok(None)
}

/// Looks for distinct nonadjacent `x, y` in `N^role_{<=r-1}(z)` whose
/// other-colour distance in the whole graph is below `r = r_radius(a)`;
/// returns the lexicographically first such pair. When a pair exists, the
/// pieces `N^role_{<=r}(z)` and `N^other_{<=r}(x)` contain `{x, y}` together
/// with all their neighbours, so removing them lowers the independence
/// number by at least 2.
pub fn blue_shortcut(
    g: &ColouredGraph,
    role: Colour,
    z: usize,
    a: usize,
) -> Result<Option<(usize, usize)>, CoverError> {
    let r = r_radius(a)?;
    let ball = g.ball(role, z, r - 1);
    let other = role.other();
    for &x in &ball {
        let dist = g
            .mono_bfs(other, &VertexSet::from([x]))
            .expect("single-vertex source set is valid");
        for &y in ball.range(x + 1..) {
            if !g.adjacent(x, y) && dist[y].is_some_and(|d| d < r) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// The label structure of one recursion level: the restricted ball
/// `U' = N^role_{<=r-1}(z)`, a greedy maximal independent set `I` of the
/// graph induced on `U'`, and for every `u` in `U'` at role-distance at
/// least 2 from `I` its unique other-colour neighbour in `I`.
#[derive(Clone, Debug)]
pub struct Labelling {
    pub u_prime: VertexSet,
    pub independent: VertexSet,
    pub labels: BTreeMap<usize, usize>,
}

/// Builds the labelling. Requires that [`blue_shortcut`] found nothing, so
/// that nonadjacent vertices of `U'` are far apart in the other colour;
/// label existence and uniqueness are consequences and their failure is
/// reported as an error rather than silently accepted.
pub fn build_labels(
    g: &ColouredGraph,
    role: Colour,
    z: usize,
    a: usize,
) -> Result<Labelling, CoverError> {
    let r = r_radius(a)?;
    let u_prime = g.ball(role, z, r - 1);
    let other = role.other();

    let mut independent = VertexSet::new();
    for &u in &u_prime {
        if independent.iter().all(|&i| !g.adjacent(u, i)) {
            independent.insert(u);
        }
    }

    let mut labels = BTreeMap::new();
    for &u in &u_prime {
        if independent.contains(&u) {
            continue;
        }
        // role-distance 1 to I disqualifies u from the label domain
        if independent.iter().any(|&i| g.edge_colour(u, i).is_some_and(|ec| ec.has(role))) {
            continue;
        }
        // remaining edges into I are purely other-coloured
        let mut hits = independent.iter().copied().filter(|&i| g.adjacent(u, i));
        match (hits.next(), hits.next()) {
            (Some(first), None) => {
                labels.insert(u, first);
            }
            (Some(first), Some(second)) => {
                return Err(CoverError::LabelNotUnique { vertex: u, first, second });
            }
            (None, _) => return Err(CoverError::LabelMissing { vertex: u }),
        }
    }

    // Two vertices with different labels are never other-colour adjacent,
    // and two with the same label are always adjacent in some colour.
    #[cfg(debug_assertions)]
    {
        let labelled: Vec<(usize, usize)> = labels.iter().map(|(&u, &l)| (u, l)).collect();
        for (i, &(u, lu)) in labelled.iter().enumerate() {
            for &(v, lv) in &labelled[i + 1..] {
                if lu != lv {
                    debug_assert!(
                        !g.edge_colour(u, v).is_some_and(|ec| ec.has(other)),
                        "vertices {u} and {v} have different labels but are {other}-adjacent"
                    );
                } else {
                    debug_assert!(
                        g.adjacent(u, v),
                        "vertices {u} and {v} share a label but are nonadjacent"
                    );
                }
            }
        }
    }

    Ok(Labelling { u_prime, independent, labels })
}

/// The evolving state of one recursion level: a `t`-good set `S` of labelled
/// vertices. Goodness means
///
/// * (G1) every member is within role-distance `r - a - 2 + t` of `z`,
/// * (G2) members are at role-distance at least `2a - 2t + 3` from the
///   independent set and from each other,
/// * (G3) member labels are pairwise distinct.
#[derive(Clone, Debug)]
pub struct GoodSetState<'g> {
    g: &'g ColouredGraph,
    role: Colour,
    z: usize,
    budget: usize,
    radius: usize,
    labelling: Labelling,
    members: Vec<usize>,
}

impl<'g> GoodSetState<'g> {
    /// Fresh state with `S` empty (trivially 0-good).
    pub fn new(
        g: &'g ColouredGraph,
        role: Colour,
        z: usize,
        budget: usize,
        labelling: Labelling,
    ) -> Result<Self, CoverError> {
        let radius = r_radius(budget)?;
        Ok(GoodSetState { g, role, z, budget, radius, labelling, members: Vec::new() })
    }

    /// State with the given members, validated against (G1)-(G3).
    pub fn from_parts(
        g: &'g ColouredGraph,
        role: Colour,
        z: usize,
        budget: usize,
        labelling: Labelling,
        members: Vec<usize>,
    ) -> Result<Self, CoverError> {
        let radius = r_radius(budget)?;
        let state = GoodSetState { g, role, z, budget, radius, labelling, members };
        state.check_goodness()?;
        Ok(state)
    }

    pub fn t(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn labelling(&self) -> &Labelling {
        &self.labelling
    }

    pub fn role(&self) -> Colour {
        self.role
    }

    pub fn centre(&self) -> usize {
        self.z
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn label_of(&self, v: usize) -> Option<usize> {
        self.labelling.labels.get(&v).copied()
    }

    /// label -> member holding it. Well-defined under (G3).
    fn member_by_label(&self) -> BTreeMap<usize, usize> {
        self.members
            .iter()
            .filter_map(|&s| self.label_of(s).map(|l| (l, s)))
            .collect()
    }

    fn role_distances_from(&self, v: usize) -> Vec<Option<usize>> {
        self.g
            .mono_bfs(self.role, &VertexSet::from([v]))
            .expect("single-vertex source set is valid")
    }

    /// Verifies (G1)-(G3) for the current member list.
    pub fn check_goodness(&self) -> Result<(), CoverError> {
        let t = self.members.len();
        if t > self.budget {
            return Err(CoverError::GoodnessViolated {
                reason: format!("{t} members exceed the budget {}", self.budget),
            });
        }
        let g1_radius = self.radius + t - self.budget - 2;
        let separation = 2 * self.budget + 3 - 2 * t;

        let from_z = self.role_distances_from(self.z);
        let mut seen_labels = VertexSet::new();
        for &s in &self.members {
            match from_z[s] {
                Some(d) if d <= g1_radius => {}
                _ => {
                    return Err(CoverError::GoodnessViolated {
                        reason: format!("member {s} outside the radius-{g1_radius} ball (G1)"),
                    })
                }
            }
            let label = self.label_of(s).ok_or(CoverError::GoodnessViolated {
                reason: format!("member {s} has no label"),
            })?;
            if !seen_labels.insert(label) {
                return Err(CoverError::GoodnessViolated {
                    reason: format!("label {label} repeats among members (G3)"),
                });
            }
            let from_s = self.role_distances_from(s);
            let too_close = |v: usize| from_s[v].is_some_and(|d| d < separation);
            for &i in &self.labelling.independent {
                if too_close(i) {
                    return Err(CoverError::GoodnessViolated {
                        reason: format!(
                            "member {s} within role-distance {separation} of independent vertex {i} (G2)"
                        ),
                    });
                }
            }
            for &s2 in &self.members {
                if s2 != s && too_close(s2) {
                    return Err(CoverError::GoodnessViolated {
                        reason: format!(
                            "members {s} and {s2} within role-distance {separation} of each other (G2)"
                        ),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Outcome of one growth attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendOutcome {
    /// `S` grew by the chosen path vertex; `t` increased by one.
    Extended { chosen: usize },
    /// The chosen path vertex `y0` repeats the label of the member
    /// `partner`, its unique other-colour neighbour in `S`.
    Collision { y0: usize, partner: usize },
}

/// One growth step. Walks a shortest role-path from `z` to the lowest-id
/// vertex at role-distance exactly `r - a - 2 + t` and takes the first path
/// vertex far enough from `S` and the independent set; the counting bound
/// `(a + t)(2(2a - 2t + 2) + 1) <= r - a - 2 + t` guarantees one exists.
/// A fresh label extends `S`; a repeated label is a collision.
pub fn extend_or_collide(state: &mut GoodSetState) -> Result<ExtendOutcome, CoverError> {
    let t = state.members.len();
    let target = state.radius + t - state.budget - 2;
    let separation = 2 * state.budget + 3 - 2 * t;

    let from_z = state.role_distances_from(state.z);
    let x = (0..state.g.vertex_count())
        .find(|&v| from_z[v] == Some(target))
        .ok_or(CoverError::NoVertexAtExactDistance { distance: target })?;

    // shortest path z -> x, parents resolved to the lowest id
    let mut path = vec![x];
    let mut current = x;
    while current != state.z {
        let d = from_z[current].expect("path vertices are reachable");
        let parent = state
            .g
            .mono_neighbours(current, state.role)
            .find(|&w| from_z[w] == Some(d - 1))
            .expect("a BFS-reachable vertex has a parent");
        path.push(parent);
        current = parent;
    }
    path.reverse();

    let mut blockers: VertexSet = state.members.iter().copied().collect();
    blockers.extend(state.labelling.independent.iter().copied());
    let near = state
        .g
        .mono_bfs(state.role, &blockers)
        .expect("independent set is nonempty");
    let y0 = path
        .iter()
        .copied()
        .find(|&v| near[v].is_none_or(|d| d >= separation))
        .ok_or(CoverError::CountingFailure { t })?;

    let label = state.label_of(y0).ok_or(CoverError::LabelMissing { vertex: y0 })?;
    match state.member_by_label().get(&label) {
        None => {
            state.members.push(y0);
            state.check_goodness()?;
            Ok(ExtendOutcome::Extended { chosen: y0 })
        }
        Some(&partner) => {
            debug_assert_eq!(
                state.g.edge_colour(y0, partner),
                Some(EdgeColour::from_colour(state.role.other())),
                "a label collision forces a purely other-coloured edge"
            );
            debug_assert_eq!(
                state
                    .g
                    .mono_neighbours(y0, state.role.other())
                    .filter(|w| state.members.contains(w))
                    .collect::<Vec<_>>(),
                vec![partner],
                "the collision partner is the unique other-colour neighbour of y0 in S"
            );
            Ok(ExtendOutcome::Collision { y0, partner })
        }
    }
}

/// The closure `T` of a collision: members reachable from `s1` by
/// alternating paths `y0 s1 y1 s2 ...` (role edge out of each member, then
/// an other-colour edge into the member holding the same label), with
/// predecessor records for path reconstruction.
#[derive(Clone, Debug)]
pub struct AlternatingForest {
    pub members: VertexSet,
    /// member -> (previous member, connecting role-neighbour).
    pub pred: BTreeMap<usize, (usize, usize)>,
    pub root: (usize, usize),
}

#[derive(Clone, Debug)]
pub enum ClosureOutcome {
    /// Fixed point: the labels of all role-neighbours of `T` already occur
    /// in `T`.
    Closed(AlternatingForest),
    /// A role-neighbour with a label fresh to all of `S` was found; `path`
    /// is the alternating path `[y0, s1, ..., s_k]` ending at its member.
    Swap { path: Vec<usize>, fresh: usize },
}

/// Grows the closure from the collision `(y0, s1)` to a fixed point, or
/// stops early with a swap witness.
pub fn closure(
    state: &GoodSetState,
    y0: usize,
    s1: usize,
) -> Result<ClosureOutcome, CoverError> {
    debug_assert!(
        state
            .g
            .edge_colour(y0, s1)
            .is_some_and(|ec| ec.has(state.role.other())),
        "the collision pair must be other-colour adjacent"
    );
    let member_by_label = state.member_by_label();
    let mut order = vec![s1];
    let mut in_closure = VertexSet::from([s1]);
    let mut pred: BTreeMap<usize, (usize, usize)> = BTreeMap::new();

    let mut index = 0;
    while index < order.len() {
        let s = order[index];
        index += 1;
        for y in state.g.mono_neighbours(s, state.role) {
            let label = state.label_of(y).ok_or(CoverError::UnlabelledNeighbour { vertex: y })?;
            match member_by_label.get(&label) {
                Some(&holder) => {
                    if !in_closure.contains(&holder) {
                        debug_assert_eq!(
                            state.g.edge_colour(y, holder),
                            Some(EdgeColour::from_colour(state.role.other())),
                            "same label forces a purely other-coloured edge into S"
                        );
                        in_closure.insert(holder);
                        order.push(holder);
                        pred.insert(holder, (s, y));
                    }
                }
                None => {
                    let path = reconstruct_path(y0, s1, &pred, s);
                    return Ok(ClosureOutcome::Swap { path, fresh: y });
                }
            }
        }
    }

    // fixed point reached: labels of role-neighbours of T all lie in l(T)
    #[cfg(debug_assertions)]
    {
        let closure_labels: VertexSet =
            in_closure.iter().map(|&s| state.label_of(s).unwrap()).collect();
        for &s in &in_closure {
            for y in state.g.mono_neighbours(s, state.role) {
                debug_assert!(
                    state.label_of(y).is_some_and(|l| closure_labels.contains(&l)),
                    "closed set leaks the fresh label of {y}"
                );
            }
        }
    }
    Ok(ClosureOutcome::Closed(AlternatingForest {
        members: in_closure,
        pred,
        root: (y0, s1),
    }))
}

/// `[y0, s1, y1, s2, ..., y_{k-1}, s_k]` for the unique pred-chain ending at
/// `end`.
fn reconstruct_path(
    y0: usize,
    s1: usize,
    pred: &BTreeMap<usize, (usize, usize)>,
    end: usize,
) -> Vec<usize> {
    let mut reversed = Vec::new();
    let mut current = end;
    while current != s1 {
        let &(previous, via) = pred.get(&current).expect("pred chain reaches the root");
        reversed.push(current);
        reversed.push(via);
        current = previous;
    }
    reversed.push(s1);
    reversed.push(y0);
    reversed.reverse();
    reversed
}

/// Replaces the path's members by the path's connecting vertices plus the
/// fresh-labelled vertex: `S' = (S \ {s1..sk}) + {y0..y_{k-1}, y}`. The
/// result is `(t+1)`-good, which is re-verified.
pub fn apply_swap(
    state: &mut GoodSetState,
    path: &[usize],
    fresh: usize,
) -> Result<(), CoverError> {
    if path.len() < 2 || !path.len().is_multiple_of(2) {
        return Err(CoverError::GoodnessViolated {
            reason: format!("alternating path has invalid length {}", path.len()),
        });
    }
    let old_t = state.members.len();
    let removed: VertexSet = path.iter().skip(1).step_by(2).copied().collect();
    let added: Vec<usize> = path.iter().step_by(2).copied().chain([fresh]).collect();
    for &s in &removed {
        if !state.members.contains(&s) {
            return Err(CoverError::GoodnessViolated {
                reason: format!("path member {s} is not in S"),
            });
        }
    }

    // label bookkeeping: the connecting vertices carry exactly the removed
    // members' labels, and the fresh vertex a label new to all of S
    let removed_labels: VertexSet =
        removed.iter().filter_map(|&s| state.label_of(s)).collect();
    let added_labels: VertexSet = path
        .iter()
        .step_by(2)
        .filter_map(|&y| state.label_of(y))
        .collect();
    if removed_labels != added_labels {
        return Err(CoverError::GoodnessViolated {
            reason: "swap does not preserve the label set".to_string(),
        });
    }
    let fresh_label =
        state.label_of(fresh).ok_or(CoverError::LabelMissing { vertex: fresh })?;
    if state.members.iter().any(|&s| state.label_of(s) == Some(fresh_label)) {
        return Err(CoverError::GoodnessViolated {
            reason: format!("label {fresh_label} is not fresh"),
        });
    }

    let mut next: Vec<usize> =
        state.members.iter().copied().filter(|s| !removed.contains(s)).collect();
    next.extend(added);
    let distinct: VertexSet = next.iter().copied().collect();
    if distinct.len() != old_t + 1 || next.len() != old_t + 1 {
        return Err(CoverError::GoodnessViolated {
            reason: format!("swap produced {} members, expected {}", distinct.len(), old_t + 1),
        });
    }
    state.members = next;
    state.check_goodness()
}

/// Emits one radius-2 other-colour ball around each label of the closed set
/// `T`. Their union contains `T` and the whole neighbourhood of `T` (that is
/// the point of the closure's fixed-point property), so removing it lowers
/// the independence number by at least `|T|`.
pub fn removal_pieces(
    state: &GoodSetState,
    forest: &AlternatingForest,
) -> Result<Vec<CoverPiece>, CoverError> {
    let other = state.role.other();
    let label_set: VertexSet = forest
        .members
        .iter()
        .map(|&s| state.label_of(s).expect("closure members are labelled"))
        .collect();
    debug_assert_eq!(label_set.len(), forest.members.len());

    let pieces: Vec<CoverPiece> =
        label_set.iter().map(|&v| ball_piece(state.g, other, v, 2)).collect();

    let mut union = VertexSet::new();
    for piece in &pieces {
        union.extend(piece.vertices.iter().copied());
    }
    for &s in &forest.members {
        if !union.contains(&s) {
            return Err(CoverError::CoverageGap { vertex: s });
        }
        for &(w, _) in state.g.neighbours(s) {
            if !union.contains(&w) {
                return Err(CoverError::CoverageGap { vertex: w });
            }
        }
    }
    Ok(pieces)
}

/// Covers `V(g)` by at most `a` monochromatic pieces of induced diameter at
/// most `f_diameter(a)`, provided `alpha(g) <= a`. Deterministic in `(g, a)`.
pub fn bounded_cover(g: &ColouredGraph, a: usize) -> Result<Cover, CoverError> {
    bounded_cover_traced(g, a).map(|(cover, _)| cover)
}

/// Like [`bounded_cover`], also reporting which branches ran.
pub fn bounded_cover_traced(
    g: &ColouredGraph,
    a: usize,
) -> Result<(Cover, CoverTrace), CoverError> {
    let mut trace = CoverTrace::default();
    if g.vertex_count() == 0 {
        return Ok((Cover { budget: a, pieces: Vec::new() }, trace));
    }
    if a == 0 {
        return Err(CoverError::BudgetExhausted {
            remaining_vertices: g.vertex_count(),
            budget: 0,
        });
    }
    let identity: Vec<usize> = (0..g.vertex_count()).collect();
    let pieces = cover_level(g, a, &identity, 0, &mut trace)?;
    Ok((Cover { budget: a, pieces }, trace))
}

fn relabel_piece(piece: CoverPiece, to_original: &[usize]) -> CoverPiece {
    CoverPiece {
        colour: piece.colour,
        vertices: piece.vertices.iter().map(|&v| to_original[v]).collect(),
        provenance: match piece.provenance {
            Provenance::RedBall { centre, radius } => {
                Provenance::RedBall { centre: to_original[centre], radius }
            }
            Provenance::BlueBall { centre, radius } => {
                Provenance::BlueBall { centre: to_original[centre], radius }
            }
            keep => keep,
        },
        certified_diameter_bound: piece.certified_diameter_bound,
    }
}

fn cover_level(
    g: &ColouredGraph,
    budget: usize,
    to_original: &[usize],
    depth: usize,
    trace: &mut CoverTrace,
) -> Result<Vec<CoverPiece>, CoverError> {
    trace.max_depth = trace.max_depth.max(depth);
    if g.vertex_count() == 0 {
        return Ok(Vec::new());
    }
    if budget == 0 {
        return Err(CoverError::BudgetExhausted {
            remaining_vertices: g.vertex_count(),
            budget: 0,
        });
    }
    if budget == 1 {
        let piece = base_complete(g)?;
        trace.base_complete_pieces += 1;
        return Ok(vec![relabel_piece(piece, to_original)]);
    }

    let Some((role, z)) = find_large_component(g, budget)? else {
        // every component is narrower than f(budget): component cover
        let cover = component_cover(g);
        if cover.pieces.len() > budget {
            return Err(CoverError::BudgetExhausted {
                remaining_vertices: g.vertex_count(),
                budget,
            });
        }
        trace.component_pieces += cover.pieces.len();
        return Ok(cover.pieces.into_iter().map(|p| relabel_piece(p, to_original)).collect());
    };
    trace.large_component_hits += 1;
    let r = r_radius(budget)?;

    if let Some((x, _)) = blue_shortcut(g, role, z, budget)? {
        trace.shortcut_hits += 1;
        let role_piece = ball_piece(g, role, z, r);
        let other_piece = ball_piece(g, role.other(), x, r);
        let mut removed = role_piece.vertices.clone();
        removed.extend(other_piece.vertices.iter().copied());
        let mut pieces = vec![
            relabel_piece(role_piece, to_original),
            relabel_piece(other_piece, to_original),
        ];
        pieces.extend(recurse_on_remainder(g, &removed, budget - 2, to_original, depth, trace)?);
        return Ok(pieces);
    }

    let labelling = build_labels(g, role, z, budget)?;
    if labelling.independent.len() > budget {
        // the independent set alone already refutes alpha(g) <= budget
        return Err(CoverError::BudgetExhausted {
            remaining_vertices: g.vertex_count(),
            budget,
        });
    }
    let mut state = GoodSetState::new(g, role, z, budget, labelling)?;
    loop {
        match extend_or_collide(&mut state)? {
            ExtendOutcome::Extended { .. } => trace.extensions += 1,
            ExtendOutcome::Collision { y0, partner } => {
                trace.collisions += 1;
                match closure(&state, y0, partner)? {
                    ClosureOutcome::Swap { path, fresh } => {
                        apply_swap(&mut state, &path, fresh)?;
                        trace.swaps += 1;
                    }
                    ClosureOutcome::Closed(forest) => {
                        trace.closures += 1;
                        let local = removal_pieces(&state, &forest)?;
                        let mut removed = VertexSet::new();
                        for piece in &local {
                            removed.extend(piece.vertices.iter().copied());
                        }
                        let drop = forest.members.len();
                        let mut pieces: Vec<CoverPiece> =
                            local.into_iter().map(|p| relabel_piece(p, to_original)).collect();
                        pieces.extend(recurse_on_remainder(
                            g,
                            &removed,
                            budget - drop,
                            to_original,
                            depth,
                            trace,
                        )?);
                        return Ok(pieces);
                    }
                }
            }
        }
    }
}

fn recurse_on_remainder(
    g: &ColouredGraph,
    removed: &VertexSet,
    budget: usize,
    to_original: &[usize],
    depth: usize,
    trace: &mut CoverTrace,
) -> Result<Vec<CoverPiece>, CoverError> {
    let remaining: VertexSet = (0..g.vertex_count()).filter(|v| !removed.contains(v)).collect();
    if remaining.is_empty() {
        return Ok(Vec::new());
    }
    let (sub, map) = g.induced_subgraph(&remaining);
    let composed: Vec<usize> = map.iter().map(|&mid| to_original[mid]).collect();
    cover_level(&sub, budget, &composed, depth + 1, trace)
}
