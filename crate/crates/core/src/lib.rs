//! Covers of red-blue edge-coloured graphs by few monochromatic pieces of
//! bounded diameter.
//!
//! The centrepiece is [`cover::bounded_cover`]: given a graph whose edges are
//! each coloured red, blue or both, and a budget `a` at least the independence
//! number, it produces at most `a` monochromatic subgraphs of diameter at most
//! `8a^2 + 12a + 4` whose vertex sets cover the graph. The supporting cast:
//!
//! * [`graph`] — coloured graphs and monochromatic BFS/components/diameters,
//! * [`konig`] — bipartite matching, the matching-sized vertex cover, and the
//!   red/blue component intersection graph that turns matching duality into
//!   component covers,
//! * [`cover`] — the bounded-diameter cover algorithm itself,
//! * [`oracle`] — brute-force ground truth (exact independence number, cover
//!   validation, the complete-graph diameter trichotomy),
//! * [`generators`] — seeded instance generators, including gadgets that force
//!   each branch of the cover algorithm,
//! * [`io`] / [`dot`] — the JSON instance/cover formats and DOT export.
//!
//! ```
//! use bichrome::{bounded_cover, generators, oracle};
//!
//! let g = generators::generate(&generators::GenSpec::gnp(20, 0.4, 7)).unwrap();
//! let a = oracle::alpha_exact(&g).unwrap();
//! let cover = bounded_cover(&g, a).unwrap();
//! assert!(cover.pieces.len() <= a);
//! assert!(oracle::verify_cover(&g, &cover, a).is_valid());
//! ```

pub mod cover;
pub mod dot;
pub mod generators;
pub mod graph;
pub mod io;
pub mod konig;
pub mod oracle;

pub use cover::{
    bounded_cover, bounded_cover_traced, f_diameter, r_radius, Cover, CoverError, CoverPiece,
    CoverTrace, Provenance,
};
pub use graph::{Colour, ColouredGraph, EdgeColour, GraphError, VertexSet};
