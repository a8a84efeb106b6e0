//! Seeded instance generation: random coloured graphs plus hand-built
//! gadget families that force each branch of the cover algorithm.
//!
//! All three gadgets share a skeleton with independence number exactly 2: a
//! red spine path `0..=L` (so the red component has diameter `L >= f(2)`)
//! whose non-consecutive pairs are blue-adjacent, which pins every
//! independent set to at most two vertices. Where they differ:
//!
//! * `LongPathGadget` removes one blue chord `{c, L}` with `c <= 5`. The
//!   pair is nonadjacent but invisible to the shortcut scan (`L` lies far
//!   outside the ball), so the run goes through labels, one extension, one
//!   collision and a closed removal.
//! * `ShortcutGadget` instead removes a chord `{p, q}` with both ends inside
//!   the scan ball and a two-step blue detour around it, forcing the
//!   shortcut branch.
//! * `SwapGadget` keeps all spine chords and hangs two extra vertices off
//!   the spine, red at positions `attach` and 7, joined to each other by a
//!   blue edge. The greedy independent set picks spine vertex 0 and the
//!   first pendant; the pendant at 7 then carries the only fresh label, and
//!   the collision at the spine's second good vertex swaps it in.

use crate::graph::{ColouredGraph, EdgeColour};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    Gnp,
    Complete,
    LongPathGadget,
    ShortcutGadget,
    SwapGadget,
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gnp" => Ok(GenKind::Gnp),
            "complete" => Ok(GenKind::Complete),
            "long_path_gadget" => Ok(GenKind::LongPathGadget),
            "shortcut_gadget" => Ok(GenKind::ShortcutGadget),
            "swap_gadget" => Ok(GenKind::SwapGadget),
            other => Err(format!(
                "unknown kind {other:?}; expected gnp, complete, long_path_gadget, \
                 shortcut_gadget or swap_gadget"
            )),
        }
    }
}

/// A fully deterministic instance description: the seed fixes the output.
/// The colour mix applies to `Gnp` and `Complete`; gadgets ignore it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub p_edge: f64,
    pub p_red: f64,
    pub p_blue: f64,
    pub p_both: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn gnp(n: usize, p_edge: f64, seed: u64) -> GenSpec {
        GenSpec { kind: GenKind::Gnp, n, p_edge, p_red: 0.4, p_blue: 0.4, p_both: 0.2, seed }
    }

    pub fn gadget(kind: GenKind, n: usize, seed: u64) -> GenSpec {
        GenSpec { kind, n, p_edge: 1.0, p_red: 0.4, p_blue: 0.4, p_both: 0.2, seed }
    }

    pub fn with_mix(mut self, p_red: f64, p_blue: f64, p_both: f64) -> GenSpec {
        self.p_red = p_red;
        self.p_blue = p_blue;
        self.p_both = p_both;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    InvalidSpec(String),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::InvalidSpec(reason) => write!(f, "invalid generator spec: {reason}"),
        }
    }
}

impl std::error::Error for GenError {}

pub fn generate(spec: &GenSpec) -> Result<ColouredGraph, GenError> {
    match spec.kind {
        GenKind::Gnp => gnp(spec),
        GenKind::Complete => complete(spec),
        GenKind::LongPathGadget => long_path_gadget(spec.n, spec.seed),
        GenKind::ShortcutGadget => shortcut_gadget(spec.n, spec.seed),
        GenKind::SwapGadget => swap_gadget(spec.n, spec.seed),
    }
}

fn check_mix(spec: &GenSpec) -> Result<(), GenError> {
    for (name, p) in
        [("p_edge", spec.p_edge), ("p_red", spec.p_red), ("p_blue", spec.p_blue), ("p_both", spec.p_both)]
    {
        if !(0.0..=1.0).contains(&p) {
            return Err(GenError::InvalidSpec(format!("{name} = {p} is not a probability")));
        }
    }
    let sum = spec.p_red + spec.p_blue + spec.p_both;
    if (sum - 1.0).abs() > 1e-9 {
        return Err(GenError::InvalidSpec(format!("colour mix sums to {sum}, expected 1")));
    }
    Ok(())
}

fn draw_colour(rng: &mut ChaCha8Rng, spec: &GenSpec) -> EdgeColour {
    let x: f64 = rng.random();
    if x < spec.p_red {
        EdgeColour::Red
    } else if x < spec.p_red + spec.p_blue {
        EdgeColour::Blue
    } else {
        EdgeColour::Both
    }
}

fn gnp(spec: &GenSpec) -> Result<ColouredGraph, GenError> {
    check_mix(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges = Vec::new();
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            if rng.random_bool(spec.p_edge) {
                edges.push((u, v, draw_colour(&mut rng, spec)));
            }
        }
    }
    Ok(ColouredGraph::new(spec.n, edges).expect("generated edges are valid"))
}

fn complete(spec: &GenSpec) -> Result<ColouredGraph, GenError> {
    check_mix(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges = Vec::new();
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            edges.push((u, v, draw_colour(&mut rng, spec)));
        }
    }
    Ok(ColouredGraph::new(spec.n, edges).expect("generated edges are valid"))
}

/// Red spine with all blue chords present except one pair reaching the far
/// end of the spine.
fn long_path_gadget(n: usize, seed: u64) -> Result<ColouredGraph, GenError> {
    if n < 62 {
        return Err(GenError::InvalidSpec(format!(
            "long_path_gadget needs n >= 62 (a red path of length f(2) + 1 = 61), got {n}"
        )));
    }
    let last = n - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let skip = rng.random_range(0..6);
    let mut edges: Vec<(usize, usize, EdgeColour)> =
        (0..last).map(|i| (i, i + 1, EdgeColour::Red)).collect();
    for i in 0..=last {
        for j in i + 2..=last {
            if i == skip && j == last {
                continue;
            }
            edges.push((i, j, EdgeColour::Blue));
        }
    }
    Ok(ColouredGraph::new(n, edges).expect("gadget edges are valid"))
}

/// Red spine with one missing blue chord inside the scan ball; its ends stay
/// blue-close through any third spine vertex.
fn shortcut_gadget(n: usize, seed: u64) -> Result<ColouredGraph, GenError> {
    if n < 62 {
        return Err(GenError::InvalidSpec(format!(
            "shortcut_gadget needs n >= 62 (a red path of length f(2) + 1 = 61), got {n}"
        )));
    }
    let last = n - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = 4 + rng.random_range(0..6);
    let q = p + 6 + rng.random_range(0..7);
    let mut edges: Vec<(usize, usize, EdgeColour)> =
        (0..last).map(|i| (i, i + 1, EdgeColour::Red)).collect();
    for i in 0..=last {
        for j in i + 2..=last {
            if i == p && j == q {
                continue;
            }
            edges.push((i, j, EdgeColour::Blue));
        }
    }
    Ok(ColouredGraph::new(n, edges).expect("gadget edges are valid"))
}

/// Red spine with all blue chords, plus two pendants: `b = n-2` red-adjacent
/// to the spine at `attach`, `y = n-1` red-adjacent to spine vertex 7, and
/// the blue edge `b-y`.
fn swap_gadget(n: usize, seed: u64) -> Result<ColouredGraph, GenError> {
    if n < 63 {
        return Err(GenError::InvalidSpec(format!(
            "swap_gadget needs n >= 63 (a red path of length f(2) = 60 plus two pendants), got {n}"
        )));
    }
    let last = n - 3;
    let b = n - 2;
    let y = n - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attach = 16 + rng.random_range(0..10);
    let mut edges: Vec<(usize, usize, EdgeColour)> =
        (0..last).map(|i| (i, i + 1, EdgeColour::Red)).collect();
    for i in 0..=last {
        for j in i + 2..=last {
            edges.push((i, j, EdgeColour::Blue));
        }
    }
    edges.push((attach, b, EdgeColour::Red));
    edges.push((7, y, EdgeColour::Red));
    edges.push((b, y, EdgeColour::Blue));
    Ok(ColouredGraph::new(n, edges).expect("gadget edges are valid"))
}
