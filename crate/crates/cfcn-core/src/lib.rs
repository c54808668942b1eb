#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

//! Conflict-free coloring of closed neighborhoods (CFCN).
//!
//! A CFCN coloring assigns a color to every vertex of a simple graph so
//! that each closed neighborhood `N[v]` contains some color exactly once.
//! The central routine, [`pipeline::cfcn_color`], produces such a coloring
//! with `O(log² Δ)` colors on graphs of maximum degree `Δ` by peeling the
//! graph into layers around maximal distance-3⁺ sets and finishing the
//! survivors through a randomized conflict-free hypergraph coloring.
//!
//! The crate also carries the ground-truth side: a CFCN verifier, exact
//! brute-force solvers for small instances, and a greedy baseline, so that
//! every randomized result can be checked independently.
//!
//! This crate is `no_std` (with `alloc`). File formats, the CLI, and
//! wall-clock measurement live in the companion `cfcn-cli` crate.

extern crate alloc;

pub mod cf;
pub mod decompose;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod oracle;
pub mod pipeline;
mod sample;

pub use cf::{cf_color, palette_size, CfColoring, CfError, CfParams, Color, DEFAULT_C1};
pub use decompose::{maximal_distance3_set, partition_abc, AbcPartition, PartitionError};
pub use generate::{generate, GraphKind};
pub use graph::{parse_edge_list, Graph, GraphError, ParseError, Vertex, VertexSet};
pub use hypergraph::{
    exact_cf_number, find_violated_edges, verify_cf, CfReport, ExactCount, Hypergraph,
    HypergraphError,
};
pub use oracle::{
    color_count, exact_chi_cn, greedy_cfcn_baseline, verify_cfcn, CfcnReport, OracleError,
};
pub use pipeline::{
    build_residual_hypergraph, cfcn_color, decompose_layers, iteration_cap, theorem_parameters,
    CfcnColoring, CfcnRunStats, LayerDecomposition, PaletteLedger, PipelineError, StopReason,
};
