//! Entry points for the fuzz targets. Each must return normally on any
//! input; the seed corpora are replayed through them by an integration test.

use crate::blocks::{find_blocks, verify_decomposition, BlockSet};
use crate::corpus::petersen;
use crate::decision::verify_witness;
use crate::graph::Graph;
use crate::inseparability::hk_view;
use crate::io;

/// The graph that JSON documents are validated against.
pub fn reference_graph() -> Graph {
    petersen()
}

pub fn edge_list(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = io::parse_edge_list(text) {
        let again = io::parse_edge_list(&io::write_edge_list(&g)).expect("written edge list parses");
        assert_eq!(again, g);
    }
}

pub fn dimacs(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = io::parse_dimacs(text) {
        assert!(g.edges().all(|(u, v)| u < v && v < g.n()));
    }
}

pub fn witness_json(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = reference_graph();
    if let Ok(w) = io::parse_witness_json(&g, text) {
        let _ = verify_witness(&g, &w);
    }
}

pub fn kappa_table_json(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = reference_graph();
    if let Ok(table) = io::parse_kappa_table_json(&g, text) {
        for k in 1..=4 {
            let hk = hk_view(&table, k).expect("k >= 1");
            find_blocks(&g, k, &hk).expect("table validated for this graph");
        }
    }
}

pub fn decomposition_json(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = reference_graph();
    if let Ok(d) = io::parse_decomposition_json(&g, text) {
        verify_decomposition(&g, &d, 3, &BlockSet::new(3, Vec::new())).expect("decomposition built over this graph");
    }
}
