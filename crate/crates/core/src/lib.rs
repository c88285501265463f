//! Neighbourhood matrices of undirected simple graphs.
//!
//! The neighbourhood matrix `NM(G) = A · (D - A)` records, for every ordered
//! vertex pair, either how many neighbours one endpoint adds to the other
//! (adjacent pairs) or how many they share (non-adjacent pairs). This crate
//! builds it, inverts it back into the graph, decodes single rows into the
//! two-level BFS neighbourhood of their vertex, and reads triangle and
//! 4-cycle counts, girth and diameter bounds and regularity signatures
//! straight from its entries. Every such quantity has an independent
//! brute-force oracle in [`oracle`] and [`search`].

#![forbid(unsafe_code)]

pub mod analytics;
pub mod bench;
pub mod decode;
pub mod dense;
pub mod det;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod nm;
pub mod oracle;
pub mod random;
pub mod search;
pub mod verify;

pub use analytics::{
    c4_decomposition_check, diameter_at_most_2, four_cycle_count, girth_at_least_5,
    is_induced_c4_free, is_triangle_free, some_row_has_no_zero, strong_regularity_profile,
    triangle_count, FourCycleCount, Quarters, SrgParameters, SrgProfile, StructuralReport,
};
pub use decode::{row_profile, two_level_subgraph, RowProfile, TwoLevelSubgraph};
pub use det::determinant_exact;
pub use error::{Error, Result};
pub use graph::{common_neighbors, exclusive_neighbors, parse_edge_list, Graph};
pub use nm::{
    build_mn, build_nm, build_nm_product, column_sums, is_symmetric, reconstruct_adjacency,
    row_sums, NeighborhoodMatrix,
};
pub use oracle::{subgraph_census, triangle_count_trace, SubgraphCensus};
pub use search::{
    bfs_levels, connected_components, diameter, girth, ComponentPartition, Length, LevelAssignment,
};
