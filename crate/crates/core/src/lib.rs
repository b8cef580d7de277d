//! Covering a graph with `k` induced subgraphs so that the largest one is
//! as small as possible.
//!
//! Given `G = (V, E)` and `k`, choose subsets `V_1, …, V_k` such that every
//! edge has both endpoints in some `V_i`, minimising `max |V_i|`. The crate
//! provides lower bounds, an exact search for small instances, covering
//! algorithms for caterpillars, bounded-degree, degenerate and separable
//! graphs and cliques, the 3-Partition hardness reduction, and the
//! hypergraph generalisation of the cover model.
//!
//! ```
//! use induced_cover::{approx, bounds, generators};
//!
//! let g = generators::gen_path(6);
//! let cover = approx::cover_caterpillar(&g, 2).unwrap();
//! assert_eq!(cover.cost(), 4);
//! assert_eq!(bounds::best_lower_bound(&g, 2).unwrap().best, 4);
//! ```

pub mod approx;
pub mod bounds;
pub mod cover;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod reduction;

pub use cover::{cover_cost, pad_equalize, validate_cover, Cover, CoverViolation};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
