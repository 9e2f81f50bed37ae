//! Codings for pairs, sequences, graphs, and trees, plus the finite
//! brute-force combinatorics (colorability, embedding) used throughout.

pub mod graph;
pub mod pairing;
pub mod seq;
pub mod tree;

pub use graph::{
    check_coloring, embedding_exists, finite_subgraph, is_embedding, is_k_colorable,
    is_k_colorable_extending, pattern_embeds, pattern_map_ok, FiniteGraph, GraphCode,
    VertexUniverse,
};
pub use pairing::{diag_pair, diag_unpair, pair_decode, pair_encode, unordered_pair_encode};
pub use seq::{seq_decode, seq_encode, Branching};
pub use tree::{path_prefix, TreeCode};
