//! Text formats: graph6, a plain edge list, and DOT export.

mod dot;
mod edge_list;
mod graph6;

pub use dot::write_dot;
pub use edge_list::{read_edge_list, write_edge_list};
pub use graph6::{decode_graph6, encode_graph6, GRAPH6_HEADER, GRAPH6_MAX_N};
