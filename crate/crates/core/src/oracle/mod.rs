//! Brute-force oracle: enumerates concrete multigraphs on a handful of
//! nodes and counts C-trees and their rooted variants up to isomorphism.
//! Shares no code with the series pipeline beyond [`VariantFlag`].
//!
//! [`VariantFlag`]: crate::pipeline::VariantFlag

mod blocks;
mod canon;
mod census;
mod dot;
mod graph;

pub use blocks::{block_decomposition, is_ctree, skeleton, Block, BlockDecomposition, BlockKind};
pub use canon::{canonical_form, canonical_form_colored, CanonicalForm};
pub use census::{
    check_limit, count_bridge_rooted, count_node_rooted, count_planted, count_skeleton_rooted,
    enumerate_ctrees, node_limit, skeleton_profile, Census, OracleCounts, MAX_NODES_SIMPLE,
    MAX_NODES_WITH_DOUBLE_EDGES,
};
pub use dot::to_dot;
pub use graph::{MultiGraph, MAX_NODES};
