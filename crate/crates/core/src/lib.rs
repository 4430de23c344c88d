//! Maximum matching in RDV graphs, the intersection graphs of downward
//! paths in a rooted tree, in O(|T| + n log² n) time without listing edges.
//!
//! The greedy matching over a bottom-up vertex order is optimal on these
//! graphs. Its delayed form only ever asks "which free vertex adjacent to
//! `v_j` comes first?", and on the planar embedding in [`geometry`] that
//! question is an upward ray shot among horizontal segments, answered by
//! [`rayshoot::RayShootIndex`].
//!
//! [`adjacency`], [`matching::greedy_reference`] and
//! [`matching::maximum_matching_oracle`] are the slow reference paths the
//! fast one is checked against.

pub mod adjacency;
pub mod bench;
pub mod compress;
pub mod error;
pub mod format;
pub mod gen;
pub mod geometry;
pub mod instance;
pub mod matching;
pub mod order;
pub mod par;
pub mod rayshoot;

pub use adjacency::{adjacency_lists, adjacency_oracle, AdjacencyOracle};
pub use compress::compress_tree;
pub use error::{Error, ParseError, Result};
pub use format::{parse_instance, write_instance, write_matching};
pub use geometry::{assign_coordinates, HSegment, Layout, NodeCoords, RayQuery};
pub use instance::{
    validate_instance, HostTree, NodeId, RdvInstance, Vertex, VertexPath, Violation,
};
pub use matching::{
    delayed_greedy, delayed_greedy_delta, greedy_reference, maximum_matching_oracle, Matching,
};
pub use order::bottom_up_order;
pub use par::Exec;
pub use rayshoot::RayShootIndex;
