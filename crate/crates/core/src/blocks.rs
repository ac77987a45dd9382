//! The block finder: a rooted tree of vertex sets that repeatedly splits a
//! set along the labelled separation of one of its `H_k` non-edges until
//! every remaining set is either a clique of `H_k` (a `k`-block) or smaller
//! than `k`.

use std::collections::BTreeMap;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{FlowScratch, Outcome, SplitNetwork};
use crate::error::{Error, Result};
use crate::graph::{Graph, Separation, Vertex, VertexSet};
use crate::inseparability::{hk_view, preprocess_full, InsepGraph, KappaTable};

/// The `k`-blocks of a graph in canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSet {
    k: usize,
    blocks: Vec<VertexSet>,
}

impl BlockSet {
    pub fn new(k: usize, mut blocks: Vec<VertexSet>) -> Self {
        blocks.sort();
        blocks.dedup();
        BlockSet { k, blocks }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.blocks.binary_search(set).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.blocks.iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    /// Split by its label into two children.
    Branch,
    /// Leaf whose set is a clique of `H_k` of size at least `k`.
    Block,
    /// Leaf with fewer than `k` vertices.
    Small,
    /// Child of a split of a `k`-set; created and dropped in the same step.
    Dead,
    /// Leaf of a decomposition built elsewhere, without a finder verdict.
    Leaf,
}

impl NodeKind {
    pub fn is_leaf(self) -> bool {
        self != NodeKind::Branch
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Branch => "branch",
            NodeKind::Block => "block",
            NodeKind::Small => "small",
            NodeKind::Dead => "dead",
            NodeKind::Leaf => "leaf",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "branch" => NodeKind::Branch,
            "block" => NodeKind::Block,
            "small" => NodeKind::Small,
            "dead" => NodeKind::Dead,
            "leaf" => NodeKind::Leaf,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompNode {
    pub parent: Option<usize>,
    pub children: Option<(usize, usize)>,
    pub set: VertexSet,
    pub label: Option<Separation>,
    pub kind: NodeKind,
}

/// A rooted tree of vertex sets whose branching nodes are labelled by
/// separations; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    n: usize,
    nodes: Vec<DecompNode>,
    step_count: usize,
}

impl BlockDecomposition {
    /// Single-node decomposition with `X_r = V`.
    pub fn trivial(n: usize) -> Self {
        BlockDecomposition {
            n,
            nodes: vec![DecompNode {
                parent: None,
                children: None,
                set: VertexSet::range(n),
                label: None,
                kind: NodeKind::Leaf,
            }],
            step_count: 0,
        }
    }

    /// Wraps externally built nodes after checking the tree shape: node 0 is
    /// the root, parent and child links agree, labels sit exactly on the
    /// branching nodes.
    pub fn from_nodes(n: usize, nodes: Vec<DecompNode>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::Format("decomposition has no nodes".into()));
        }
        if nodes[0].parent.is_some() {
            return Err(Error::Format("node 0 must be the root".into()));
        }
        let mut seen_as_child = vec![false; nodes.len()];
        for (id, node) in nodes.iter().enumerate() {
            if node.set.last().is_some_and(|v| v >= n) {
                return Err(Error::Format(format!("node {id} names a vertex outside the graph")));
            }
            match (node.children, &node.label, node.kind) {
                (Some((c1, c2)), Some(_), NodeKind::Branch) => {
                    for c in [c1, c2] {
                        if c >= nodes.len() || c == id || nodes[c].parent != Some(id) || seen_as_child[c] {
                            return Err(Error::Format(format!("node {id} has an inconsistent child {c}")));
                        }
                        seen_as_child[c] = true;
                    }
                    if c1 == c2 {
                        return Err(Error::Format(format!("node {id} lists the same child twice")));
                    }
                }
                (None, None, kind) if kind.is_leaf() => {}
                _ => {
                    return Err(Error::Format(format!(
                        "node {id}: labels and children must appear together on branch nodes"
                    )))
                }
            }
            if id > 0 && node.parent.is_none_or(|p| p >= nodes.len()) {
                return Err(Error::Format(format!("node {id} has no valid parent")));
            }
        }
        if seen_as_child.iter().skip(1).any(|s| !s) {
            return Err(Error::Format("some node is not reachable from the root".into()));
        }
        Ok(BlockDecomposition {
            n,
            nodes,
            step_count: 0,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[DecompNode] {
        &self.nodes
    }

    pub fn root(&self) -> &DecompNode {
        &self.nodes[0]
    }

    /// Steps taken by the block finder, including the final one on an
    /// empty list. Zero for decompositions not produced by the finder.
    pub fn step_count(&self) -> usize {
        self.step_count
    }

    pub fn leaves(&self) -> impl Iterator<Item = (usize, &DecompNode)> {
        self.nodes.iter().enumerate().filter(|(_, n)| n.kind.is_leaf())
    }

    pub fn leaf_sets(&self) -> Vec<&VertexSet> {
        self.leaves().map(|(_, n)| &n.set).collect()
    }

    /// Largest label order (0 without labels).
    pub fn adhesion(&self) -> usize {
        self.nodes
            .iter()
            .filter_map(|n| n.label.as_ref().map(Separation::order))
            .max()
            .unwrap_or(0)
    }

    /// Largest leaf set.
    pub fn width(&self) -> usize {
        self.leaves().map(|(_, n)| n.set.len()).max().unwrap_or(0)
    }
}

/// How the finder picks the non-adjacent pair that splits a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitRule {
    /// The lexicographically smallest non-adjacent pair.
    #[default]
    Lexicographic,
    /// A pseudo-random non-adjacent pair from a seeded generator.
    Seeded(u64),
}

/// Full output of a finder run.
#[derive(Debug, Clone)]
pub struct BlockSearch {
    pub blocks: BlockSet,
    pub decomposition: BlockDecomposition,
    /// Sets dropped by the final inclusion-maximality filter. The finder
    /// only ever emits maximal cliques, so this is expected to be zero.
    pub filtered: usize,
}

/// All `k`-blocks of `g`, with the decomposition tree that found them.
pub fn find_blocks(g: &Graph, k: usize, hk: &InsepGraph) -> Result<(BlockSet, BlockDecomposition)> {
    let run = find_blocks_with(g, k, hk, SplitRule::Lexicographic)?;
    Ok((run.blocks, run.decomposition))
}

pub fn find_blocks_with(g: &Graph, k: usize, hk: &InsepGraph, rule: SplitRule) -> Result<BlockSearch> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if hk.n() != g.n() || hk.k() != k {
        return Err(Error::InvalidArgument(format!(
            "H_k was built for k = {} on {} vertices, not k = {k} on {}",
            hk.k(),
            hk.n(),
            g.n()
        )));
    }
    let mut rng = match rule {
        SplitRule::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        SplitRule::Lexicographic => None,
    };
    let mut nodes = vec![DecompNode {
        parent: None,
        children: None,
        set: g.vertex_set(),
        label: None,
        kind: NodeKind::Branch,
    }];
    let mut list = vec![0usize];
    let mut found = Vec::new();
    let mut steps = 0;
    loop {
        steps += 1;
        let Some(&t) = list.last() else { break };
        let x = &nodes[t].set;
        if x.len() < k {
            nodes[t].kind = NodeKind::Small;
            list.pop();
            continue;
        }
        let pair = match rng.as_mut() {
            None => hk.first_non_edge(x),
            Some(rng) => hk.non_edges_within(x).choose(rng).copied(),
        };
        let Some((u, v)) = pair else {
            found.push(x.clone());
            nodes[t].kind = NodeKind::Block;
            list.pop();
            continue;
        };
        let cut = hk.cut(u, v).ok_or_else(|| {
            Error::InvalidArgument(format!("H_k has no label for its non-edge {u}-{v}"))
        })?;
        let first: VertexSet = x.iter().filter(|&w| cut.in_a(w)).collect();
        let second: VertexSet = x.iter().filter(|&w| cut.in_b(w)).collect();
        let dead = x.len() == k;
        let child_kind = if dead { NodeKind::Dead } else { NodeKind::Branch };
        let base = nodes.len();
        for set in [first, second] {
            nodes.push(DecompNode {
                parent: Some(t),
                children: None,
                set,
                label: None,
                kind: child_kind,
            });
        }
        nodes[t].children = Some((base, base + 1));
        nodes[t].label = Some(cut.to_separation());
        list.pop();
        if !dead {
            list.push(base);
            list.push(base + 1);
        }
    }
    let before = found.len();
    let blocks = maximal_sets(found);
    let filtered = before - blocks.len();
    debug_assert_eq!(filtered, 0, "the finder emitted a non-maximal or repeated clique");
    Ok(BlockSearch {
        blocks: BlockSet::new(k, blocks),
        decomposition: BlockDecomposition {
            n: g.n(),
            nodes,
            step_count: steps,
        },
        filtered,
    })
}

/// Removes duplicates and sets strictly contained in another member.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let keep: Vec<bool> = sets
        .iter()
        .map(|s| !sets.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .collect();
    sets.into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect()
}

/// The `k`-blocks for every `k` that has any, from one full κ-table.
pub fn find_all_blocks(g: &Graph) -> BTreeMap<usize, BlockSet> {
    let table = preprocess_full(g);
    find_all_blocks_from(g, &table)
}

pub fn find_all_blocks_from(g: &Graph, table: &KappaTable) -> BTreeMap<usize, BlockSet> {
    let mut out = BTreeMap::new();
    for k in 1..=g.n() {
        let hk = hk_view(table, k).expect("k >= 1");
        let (blocks, _) = find_blocks(g, k, &hk).expect("view built for this graph");
        // A (k+1)-block is k-inseparable, so once a level is empty so are
        // all higher ones.
        if blocks.is_empty() {
            break;
        }
        out.insert(k, blocks);
    }
    out
}

/// The block number β(G): the largest `k` with a `k`-block (0 for the
/// empty graph).
pub fn block_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    block_number_from(g, &preprocess_full(g))
}

pub fn block_number_from(g: &Graph, table: &KappaTable) -> usize {
    let has_block = |k: usize| {
        let hk = hk_view(table, k).expect("k >= 1");
        !find_blocks(g, k, &hk).expect("view built for this graph").0.is_empty()
    };
    // Every vertex lies in a 1-block (its component), so β >= 1.
    let (mut lo, mut hi) = (1, g.n());
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if has_block(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// β(G) with a block-decomposition of adhesion and width at most β(G),
/// taken from a finder run at `k = β + 1`.
pub fn block_width_certificate(g: &Graph) -> Result<(usize, BlockDecomposition)> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("the empty graph has no block-width certificate".into()));
    }
    let table = preprocess_full(g);
    let beta = block_number_from(g, &table);
    let hk = hk_view(&table, beta + 1)?;
    let (blocks, decomposition) = find_blocks(g, beta + 1, &hk)?;
    debug_assert!(blocks.is_empty());
    Ok((beta, decomposition))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clause {
    Pass,
    Fail(String),
    NotApplicable,
}

impl Clause {
    pub fn is_ok(&self) -> bool {
        !matches!(self, Clause::Fail(_))
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Clause::Pass => "pass",
            Clause::Fail(_) => "fail",
            Clause::NotApplicable => "n/a",
        }
    }
}

/// Outcome of [`verify_decomposition`], clause by clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub k: usize,
    pub adhesion: usize,
    pub width: usize,
    pub k_complete: bool,
    /// Tree labels separate two vertices of their set and children are the
    /// intersections with the two sides.
    pub structure: Clause,
    /// Every edge has both ends in a leaf set.
    pub edges_covered: Clause,
    /// With adhesion below `k`: every `k`-block lies in a leaf set.
    pub blocks_contained: Clause,
    /// For `k`-complete decompositions: the `k`-blocks are exactly the leaf
    /// sets of size at least `k`.
    pub blocks_are_leaves: Clause,
}

impl DecompositionReport {
    pub fn all_ok(&self) -> bool {
        [&self.structure, &self.edges_covered, &self.blocks_contained, &self.blocks_are_leaves]
            .iter()
            .all(|c| c.is_ok())
    }
}

fn k_inseparable(g: &Graph, x: &VertexSet, k: usize, net: &SplitNetwork, scratch: &mut FlowScratch) -> bool {
    let s = x.as_slice();
    s.len() >= k
        && s.iter().enumerate().all(|(i, &u)| {
            s[i + 1..]
                .iter()
                .all(|&v| g.has_edge(u, v) || matches!(net.kappa(scratch, u, v, k), Outcome::AtLeast))
        })
}

/// Checks the leaf-set properties of a block-decomposition against the
/// `k`-blocks `blocks` of `g`.
pub fn verify_decomposition(
    g: &Graph,
    d: &BlockDecomposition,
    k: usize,
    blocks: &BlockSet,
) -> Result<DecompositionReport> {
    if d.vertex_count() != g.n() || d.root().set != g.vertex_set() {
        return Err(Error::InvalidArgument(
            "decomposition was not built over this graph".into(),
        ));
    }
    let structure = d
        .nodes()
        .iter()
        .enumerate()
        .find_map(|(id, node)| {
            let (label, (c1, c2)) = (node.label.as_ref()?, node.children?);
            if crate::graph::make_separation(g, label.a().clone(), label.b().clone()).is_err() {
                return Some(format!("label of node {id} is not a separation"));
            }
            if !label.splits(&node.set) {
                return Some(format!("label of node {id} separates no two vertices of its set"));
            }
            let (x1, x2) = (&d.nodes()[c1].set, &d.nodes()[c2].set);
            if *x1 != node.set.intersection(label.a()) || *x2 != node.set.intersection(label.b()) {
                return Some(format!("children of node {id} are not its intersections with the sides"));
            }
            None
        })
        .map_or(Clause::Pass, Clause::Fail);

    let leaf_sets = d.leaf_sets();
    let mut leaves_of = vec![Vec::new(); g.n()];
    for (i, set) in leaf_sets.iter().enumerate() {
        for v in set.iter() {
            leaves_of[v].push(i);
        }
    }
    let edges_covered = g
        .edges()
        .find(|&(u, v)| !leaves_of[u].iter().any(|&i| leaf_sets[i].contains(v)))
        .map_or(Clause::Pass, |(u, v)| {
            Clause::Fail(format!("edge {}-{} lies in no leaf set", g.label(u), g.label(v)))
        });

    let adhesion = d.adhesion();
    let blocks_contained = if adhesion < k {
        blocks
            .iter()
            .find(|b| !leaf_sets.iter().any(|l| b.is_subset(l)))
            .map_or(Clause::Pass, |b| Clause::Fail(format!("block {b:?} lies in no leaf set")))
    } else {
        Clause::NotApplicable
    };

    let net = SplitNetwork::new(g);
    let mut scratch = FlowScratch::default();
    let k_complete = adhesion < k
        && leaf_sets
            .iter()
            .all(|l| l.len() < k || k_inseparable(g, l, k, &net, &mut scratch));
    let blocks_are_leaves = if k_complete {
        let missing = blocks.iter().find(|b| !leaf_sets.contains(b));
        let extra = leaf_sets.iter().find(|l| l.len() >= k && !blocks.contains(l));
        match (missing, extra) {
            (Some(b), _) => Clause::Fail(format!("block {b:?} is not a leaf set")),
            (None, Some(l)) => Clause::Fail(format!("leaf set {l:?} of size >= k is not a block")),
            (None, None) => Clause::Pass,
        }
    } else {
        Clause::NotApplicable
    };

    Ok(DecompositionReport {
        k,
        adhesion,
        width: d.width(),
        k_complete,
        structure,
        edges_covered,
        blocks_contained,
        blocks_are_leaves,
    })
}

/// Pairs of `x` in lexicographic order, the order in which
/// [`SplitRule::Lexicographic`] looks for a non-edge of `H_k`.
pub fn lexicographic_pairs(x: &VertexSet) -> Vec<(Vertex, Vertex)> {
    let s = x.as_slice();
    s.iter()
        .enumerate()
        .flat_map(|(i, &u)| s[i + 1..].iter().map(move |&v| (u, v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inseparability::preprocess;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn blocks_of(g: &Graph, k: usize) -> Vec<VertexSet> {
        let hk = preprocess(g, k).unwrap();
        find_blocks(g, k, &hk).unwrap().0.blocks().to_vec()
    }

    #[test]
    fn complete_graph_is_one_block() {
        let g = complete(5);
        let hk = preprocess(&g, 3).unwrap();
        let (blocks, d) = find_blocks(&g, 3, &hk).unwrap();
        assert_eq!(blocks.blocks(), &[VertexSet::range(5)]);
        assert_eq!(d.nodes().len(), 1);
        assert_eq!(d.step_count(), 2);
    }

    #[test]
    fn path_blocks_are_its_edges() {
        assert_eq!(blocks_of(&path(4), 2), vec![[0, 1].into(), [1, 2].into(), [2, 3].into()]);
    }

    #[test]
    fn k_equal_n_needs_a_complete_graph() {
        assert_eq!(blocks_of(&complete(4), 4), vec![VertexSet::range(4)]);
        assert!(blocks_of(&cycle(4), 4).is_empty());
        assert!(blocks_of(&complete(3), 4).is_empty());
    }

    #[test]
    fn mismatched_hk_is_rejected() {
        let g = path(4);
        let hk = preprocess(&g, 2).unwrap();
        assert!(find_blocks(&g, 3, &hk).is_err());
        assert!(find_blocks(&path(5), 2, &hk).is_err());
    }

    #[test]
    fn all_blocks_of_small_graphs() {
        let k4 = find_all_blocks(&complete(4));
        assert_eq!(k4.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert!(k4.values().all(|b| b.blocks() == [VertexSet::range(4)]));

        let p3 = find_all_blocks(&path(3));
        assert_eq!(p3.len(), 2);
        assert_eq!(p3[&1].blocks(), &[VertexSet::range(3)]);
        assert_eq!(p3[&2].blocks(), &[[0, 1].into(), [1, 2].into()]);

        let c5 = find_all_blocks(&cycle(5));
        assert_eq!(c5.len(), 2);
        assert_eq!(c5[&2].blocks(), &[VertexSet::range(5)]);
    }

    #[test]
    fn block_numbers() {
        for n in 1..7 {
            assert_eq!(block_number(&complete(n)), n);
        }
        for n in 2..8 {
            assert_eq!(block_number(&path(n)), 2);
        }
        assert_eq!(block_number(&Graph::empty(0)), 0);
        assert_eq!(block_number(&Graph::empty(3)), 1);
    }

    #[test]
    fn block_width_certificates() {
        let (beta, d) = block_width_certificate(&complete(5)).unwrap();
        assert_eq!((beta, d.nodes().len(), d.width(), d.adhesion()), (5, 1, 5, 0));
        for g in [path(4), cycle(6)] {
            let (beta, d) = block_width_certificate(&g).unwrap();
            assert_eq!(beta, 2);
            assert!(d.width() <= 2 && d.adhesion() <= 2);
        }
    }

    #[test]
    fn decomposition_of_complete_graph_verifies() {
        let g = complete(5);
        let hk = preprocess(&g, 3).unwrap();
        let (blocks, d) = find_blocks(&g, 3, &hk).unwrap();
        let r = verify_decomposition(&g, &d, 3, &blocks).unwrap();
        assert!(r.all_ok());
        assert_eq!(r.blocks_are_leaves, Clause::Pass);
    }

    #[test]
    fn path_decomposition_covers_edges() {
        let g = path(4);
        let hk = preprocess(&g, 2).unwrap();
        let (blocks, d) = find_blocks(&g, 2, &hk).unwrap();
        let r = verify_decomposition(&g, &d, 2, &blocks).unwrap();
        assert_eq!(r.edges_covered, Clause::Pass);
        assert_eq!(r.structure, Clause::Pass);
        assert!(r.k_complete);
        assert!(r.all_ok());
        assert!(d.nodes().len() <= 7);
    }

    #[test]
    fn foreign_decomposition_is_rejected() {
        let d = BlockDecomposition::trivial(3);
        let blocks = BlockSet::new(2, vec![]);
        assert!(verify_decomposition(&path(4), &d, 2, &blocks).is_err());
    }

    #[test]
    fn broken_tree_fails_the_structure_clause() {
        let g = path(3);
        let sep = crate::graph::make_separation(&g, [0, 1].into(), [1, 2].into()).unwrap();
        let node = |parent, set: VertexSet| DecompNode {
            parent,
            children: None,
            set,
            label: None,
            kind: NodeKind::Leaf,
        };
        let nodes = vec![
            DecompNode {
                parent: None,
                children: Some((1, 2)),
                set: VertexSet::range(3),
                label: Some(sep),
                kind: NodeKind::Branch,
            },
            node(Some(0), [0, 1].into()),
            node(Some(0), [2].into()),
        ];
        let d = BlockDecomposition::from_nodes(3, nodes).unwrap();
        let r = verify_decomposition(&g, &d, 2, &BlockSet::new(2, vec![])).unwrap();
        assert!(matches!(r.structure, Clause::Fail(_)));
        assert!(matches!(r.edges_covered, Clause::Fail(_)));
    }

    #[test]
    fn malformed_trees_are_rejected() {
        assert!(BlockDecomposition::from_nodes(2, vec![]).is_err());
        let orphan = DecompNode {
            parent: None,
            children: None,
            set: VertexSet::new(),
            label: None,
            kind: NodeKind::Leaf,
        };
        assert!(BlockDecomposition::from_nodes(2, vec![orphan.clone(), orphan]).is_err());
    }

    #[test]
    fn maximal_filter_drops_subsets() {
        let sets = vec![[0, 1].into(), [0, 1, 2].into(), [0, 1].into(), [3].into()];
        assert_eq!(maximal_sets(sets), vec![[0, 1, 2].into(), VertexSet::from([3])]);
    }

    #[test]
    fn seeded_split_rule_finds_the_same_blocks() {
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7), (7, 5)]).unwrap();
        for k in 1..=4 {
            let hk = preprocess(&g, k).unwrap();
            let base = find_blocks(&g, k, &hk).unwrap().0;
            for seed in 0..8 {
                let run = find_blocks_with(&g, k, &hk, SplitRule::Seeded(seed)).unwrap();
                assert_eq!(run.blocks, base);
                assert_eq!(run.filtered, 0);
            }
        }
    }

    #[test]
    fn lexicographic_pairs_enumerates_all() {
        assert_eq!(lexicographic_pairs(&[1, 4, 6].into()), vec![(1, 4), (1, 6), (4, 6)]);
    }
}
