//! Find, certify and analyze `k`-blocks: maximal sets of at least `k`
//! vertices no two of which can be separated by fewer than `k` other
//! vertices.
//!
//! ```
//! use kblocks::{corpus, find_blocks, preprocess};
//!
//! let g = corpus::gen_grid(5, 5).unwrap();
//! let hk = preprocess(&g, 4).unwrap();
//! let (blocks, _) = find_blocks(&g, 4, &hk).unwrap();
//! assert_eq!(blocks.len(), 1);
//! assert_eq!(blocks.blocks()[0].len(), 9);
//! ```

pub mod analysis;
pub mod blocks;
pub mod connectivity;
pub mod corpus;
pub mod decision;
pub mod error;
pub mod fuzz;
pub mod graph;
pub mod inseparability;
pub mod io;
pub mod oracle;

pub use analysis::{is_t_shaped, t_shaped_equivalence_report, tangle_from_set, TShapeWitness, Tangle, TangleOutcome};
pub use blocks::{
    block_number, block_width_certificate, find_all_blocks, find_blocks, find_blocks_with,
    verify_decomposition, BlockDecomposition, BlockSet, Clause, DecompositionReport, NodeKind,
    SplitRule,
};
pub use connectivity::{is_k_connected, kappa, kappa_bounded, vertex_connectivity, KappaResult};
pub use decision::{decide_k_block, verify_certificate, verify_witness, Decision, WitnessSet, WitnessVerdict};
pub use error::{Error, Result};
pub use graph::{make_separation, Graph, Separation, Vertex, VertexSet};
pub use inseparability::{hk_view, preprocess, preprocess_full, InsepGraph, KappaTable};
pub use oracle::{enumerate_separations, oracle_blocks, oracle_kappa, oracle_pair_inseparable, OracleBudget, SeparationCatalog};
