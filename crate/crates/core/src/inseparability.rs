//! Pre-processing: the inseparability graph `H_k` and the full κ-table.
//!
//! `H_k` is `G` plus an edge for every non-adjacent pair that no set of
//! fewer than `k` other vertices separates. Every remaining non-edge is
//! labelled by a separation of order `κ(x, y) < k` that separates its ends.
//! The `k`-blocks of `G` are exactly the maximal cliques of `H_k` with at
//! least `k` vertices.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::connectivity::{CutLabel, FlowScratch, Outcome, SplitNetwork};
use crate::error::{Error, Result};
use crate::graph::{make_separation, Graph, Separation, Vertex, VertexSet};

type LabelMap = HashMap<(Vertex, Vertex), CutLabel>;

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

/// Flow outcomes for all non-adjacent pairs, in lexicographic pair order.
fn pair_outcomes(g: &Graph, limit: usize) -> Vec<(Vertex, Vertex, Outcome)> {
    let net = SplitNetwork::new(g);
    let per_source: Vec<Vec<(Vertex, Vertex, Outcome)>> = (0..g.n())
        .into_par_iter()
        .map_init(FlowScratch::default, |scratch, x| {
            (x + 1..g.n())
                .filter(|&y| !g.has_edge(x, y))
                .map(|y| (x, y, net.kappa(scratch, x, y, limit)))
                .collect()
        })
        .collect();
    per_source.into_iter().flatten().collect()
}

/// `κ(x, y)` and a minimum separation for every non-adjacent pair.
#[derive(Debug, Clone)]
pub struct KappaTable {
    graph: Graph,
    entries: Arc<LabelMap>,
}

impl KappaTable {
    /// Assembles a table from externally supplied entries (e.g. a cache
    /// file). Every non-adjacent pair must appear exactly once, and each
    /// label must be a separation of `graph` that separates the pair and
    /// whose order is the stated κ.
    pub fn from_entries<I>(graph: Graph, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, usize, Separation)>,
    {
        let mut map = LabelMap::new();
        for (x, y, kappa, sep) in entries {
            graph.check_vertex(x)?;
            graph.check_vertex(y)?;
            if x == y || graph.has_edge(x, y) {
                return Err(Error::Format(format!(
                    "κ-table entry for {}-{} which is not a non-adjacent pair",
                    graph.label(x),
                    graph.label(y)
                )));
            }
            let sep = make_separation(&graph, sep.a().clone(), sep.b().clone())?;
            if sep.order() != kappa || !sep.separates(x, y) {
                return Err(Error::Format(format!(
                    "label of {}-{} does not separate the pair with order {kappa}",
                    graph.label(x),
                    graph.label(y)
                )));
            }
            if map
                .insert(key(x, y), CutLabel::from_separation(graph.n(), &sep))
                .is_some()
            {
                return Err(Error::Format(format!(
                    "duplicate κ-table entry for {}-{}",
                    graph.label(x),
                    graph.label(y)
                )));
            }
        }
        let expected = graph.n() * graph.n().saturating_sub(1) / 2 - graph.m();
        if map.len() != expected {
            return Err(Error::Format(format!(
                "κ-table has {} entries, the graph has {expected} non-adjacent pairs",
                map.len()
            )));
        }
        Ok(KappaTable {
            graph,
            entries: Arc::new(map),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `κ(x, y)`, or `None` for adjacent or identical vertices.
    pub fn kappa(&self, x: Vertex, y: Vertex) -> Option<usize> {
        self.entries.get(&key(x, y)).map(CutLabel::order)
    }

    pub fn label(&self, x: Vertex, y: Vertex) -> Option<Separation> {
        self.entries.get(&key(x, y)).map(CutLabel::to_separation)
    }

    /// `(x, y, κ, label)` for every non-adjacent pair, `x < y`, sorted.
    pub fn entries(&self) -> Vec<(Vertex, Vertex, usize, Separation)> {
        let mut out: Vec<_> = self
            .entries
            .iter()
            .map(|(&(x, y), l)| (x, y, l.order(), l.to_separation()))
            .collect();
        out.sort_by_key(|e| (e.0, e.1));
        out
    }
}

/// The graph `H_k` with separation labels on its non-edges.
#[derive(Debug, Clone)]
pub struct InsepGraph {
    k: usize,
    adj: Vec<FixedBitSet>,
    labels: Arc<LabelMap>,
}

impl InsepGraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)`, `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// The label of a non-edge of `H_k`; `None` for edges.
    pub fn label(&self, u: Vertex, v: Vertex) -> Option<Separation> {
        self.cut(u, v).map(CutLabel::to_separation)
    }

    pub(crate) fn cut(&self, u: Vertex, v: Vertex) -> Option<&CutLabel> {
        if u == v || self.is_edge(u, v) {
            return None;
        }
        let label = self.labels.get(&key(u, v))?;
        debug_assert!(label.order() < self.k);
        Some(label)
    }

    /// The lexicographically first pair of `x` that is not an edge of `H_k`.
    pub fn first_non_edge(&self, x: &VertexSet) -> Option<(Vertex, Vertex)> {
        let s = x.as_slice();
        for (i, &u) in s.iter().enumerate() {
            if let Some(&v) = s[i + 1..].iter().find(|&&v| !self.is_edge(u, v)) {
                return Some((u, v));
            }
        }
        None
    }

    /// All non-adjacent pairs of `x`, lexicographically.
    pub fn non_edges_within(&self, x: &VertexSet) -> Vec<(Vertex, Vertex)> {
        let s = x.as_slice();
        let mut out = Vec::new();
        for (i, &u) in s.iter().enumerate() {
            out.extend(s[i + 1..].iter().filter(|&&v| !self.is_edge(u, v)).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        self.first_non_edge(x).is_none()
    }
}

fn base_adjacency(g: &Graph) -> Vec<FixedBitSet> {
    g.vertices()
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(g.n());
            for &w in g.neighbors(v) {
                row.insert(w);
            }
            row
        })
        .collect()
}

/// Builds `H_k`, stopping each flow after `k` augmenting paths.
pub fn preprocess(g: &Graph, k: usize) -> Result<InsepGraph> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut adj = base_adjacency(g);
    let mut labels = LabelMap::new();
    for (x, y, outcome) in pair_outcomes(g, k) {
        match outcome {
            Outcome::AtLeast => {
                adj[x].insert(y);
                adj[y].insert(x);
            }
            Outcome::Below(label) => {
                labels.insert((x, y), label);
            }
        }
    }
    Ok(InsepGraph {
        k,
        adj,
        labels: Arc::new(labels),
    })
}

/// Computes `κ(x, y)` and a minimum separation for every non-adjacent pair.
pub fn preprocess_full(g: &Graph) -> KappaTable {
    let limit = g.n();
    let entries = pair_outcomes(g, limit)
        .into_iter()
        .map(|(x, y, outcome)| match outcome {
            Outcome::Below(label) => ((x, y), label),
            Outcome::AtLeast => unreachable!("κ(x, y) <= n - 2 < n"),
        })
        .collect();
    KappaTable {
        graph: g.clone(),
        entries: Arc::new(entries),
    }
}

/// `H_k` assembled from a full table; no flow computation.
pub fn hk_view(table: &KappaTable, k: usize) -> Result<InsepGraph> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut adj = base_adjacency(&table.graph);
    for (&(x, y), label) in table.entries.iter() {
        if label.order() >= k {
            adj[x].insert(y);
            adj[y].insert(x);
        }
    }
    Ok(InsepGraph {
        k,
        adj,
        labels: Arc::clone(&table.entries),
    })
}
