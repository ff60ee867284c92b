//! Exact total domination and Grundy total domination for finite simple
//! graphs, total k-uniformity decisions, and the constructions and
//! structural predicates around them.
//!
//! ```
//! use totdom::constructions::line_graph_of_complete;
//! use totdom::domination::SolverConfig;
//! use totdom::uniformity::{total_uniformity, UniformityVerdict};
//!
//! let (lk6, _) = line_graph_of_complete(6).unwrap();
//! let verdict = total_uniformity(&lk6, &SolverConfig::default()).unwrap();
//! assert_eq!(verdict, UniformityVerdict::Uniform(4));
//! ```

pub mod constructions;
pub mod domination;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod scan;
pub mod uniformity;
pub mod verify;
mod vertex_set;

pub use domination::{DominationReport, SolverConfig, VertexSequence};
pub use error::{Error, Result};
pub use graph::{Graph, Induced, TwinPartition};
pub use uniformity::UniformityVerdict;
pub use vertex_set::VertexSet;
