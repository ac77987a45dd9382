//! Pairwise vertex connectivity by unit-capacity max-flow.
//!
//! Every non-isolated vertex `v` becomes an arc `v_in -> v_out`; every edge
//! `uv` becomes the arcs `u_out -> v_in` and `v_out -> u_in`. All arcs have
//! capacity 1. A flow from `x_out` to `y_in` of value `c` is a family of `c`
//! internally disjoint `x`-`y` paths, and Dinitz's phases find it in
//! `O(sqrt(n') m')`. The search stops as soon as a requested number of
//! augmenting paths has been found.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Separation, Vertex, VertexSet};

const UNSET: u32 = u32::MAX;

/// The directed split network of a graph.
#[derive(Debug, Clone)]
pub struct SplitNetwork {
    graph_n: usize,
    node_of: Vec<u32>,
    nodes: usize,
    start: Vec<u32>,
    adj: Vec<u32>,
    head: Vec<u32>,
    cap0: Vec<u8>,
    /// Per forward arc: does it come from an edge of the graph (as opposed
    /// to a vertex's internal arc)?
    edge_arc: FixedBitSet,
}

/// Reusable per-worker buffers for [`SplitNetwork::kappa`].
#[derive(Debug, Default, Clone)]
pub struct FlowScratch {
    cap: Vec<u8>,
    level: Vec<u32>,
    it: Vec<u32>,
    queue: Vec<u32>,
    path: Vec<u32>,
}

/// A minimum-order separation read off a residual cut, stored compactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutLabel {
    source_only: FixedBitSet,
    separator: FixedBitSet,
    order: usize,
}

impl CutLabel {
    pub(crate) fn new(source_only: FixedBitSet, separator: FixedBitSet) -> Self {
        let order = separator.count_ones(..);
        CutLabel {
            source_only,
            separator,
            order,
        }
    }

    pub(crate) fn from_separation(n: usize, s: &Separation) -> Self {
        let mut source_only = FixedBitSet::with_capacity(n);
        let mut separator = FixedBitSet::with_capacity(n);
        for v in s.a().iter() {
            if s.b().contains(v) {
                separator.insert(v);
            } else {
                source_only.insert(v);
            }
        }
        CutLabel::new(source_only, separator)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// True if `u` and `v` sit on opposite strict sides.
    pub fn separates(&self, u: Vertex, v: Vertex) -> bool {
        let strict_b = |x: Vertex| !self.source_only.contains(x) && !self.separator.contains(x);
        (self.source_only.contains(u) && strict_b(v)) || (self.source_only.contains(v) && strict_b(u))
    }

    pub fn in_a(&self, v: Vertex) -> bool {
        self.source_only.contains(v) || self.separator.contains(v)
    }

    pub fn in_b(&self, v: Vertex) -> bool {
        !self.source_only.contains(v)
    }

    pub fn to_separation(&self) -> Separation {
        let n = self.source_only.len();
        let a: Vec<Vertex> = (0..n).filter(|&v| self.in_a(v)).collect();
        let b: Vec<Vertex> = (0..n).filter(|&v| self.in_b(v)).collect();
        Separation::from_sides(VertexSet::from_sorted(a), VertexSet::from_sorted(b))
    }
}

/// Result of a bounded connectivity query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KappaResult {
    /// At least the requested number of internally disjoint paths exist.
    AtLeast(usize),
    /// `κ(x, y)` is exactly `value`, witnessed by a minimum separation.
    Exactly { value: usize, separation: Separation },
}

impl KappaResult {
    pub fn is_at_least(&self) -> bool {
        matches!(self, KappaResult::AtLeast(_))
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Outcome {
    AtLeast,
    Below(CutLabel),
}

impl SplitNetwork {
    pub fn new(g: &Graph) -> Self {
        let mut node_of = vec![UNSET; g.n()];
        let mut count = 0u32;
        for v in g.vertices() {
            if !g.is_isolated(v) {
                node_of[v] = count;
                count += 1;
            }
        }
        let nodes = 2 * count as usize;
        let forward = 2 * g.m() + count as usize;
        let mut head = Vec::with_capacity(2 * forward);
        let mut tail = Vec::with_capacity(2 * forward);
        let mut cap0 = Vec::with_capacity(2 * forward);
        let mut edge_arc = FixedBitSet::with_capacity(forward);
        let mut add = |from: u32, to: u32, is_edge: bool| {
            let id = head.len() / 2;
            edge_arc.set(id, is_edge);
            head.push(to);
            tail.push(from);
            cap0.push(1u8);
            head.push(from);
            tail.push(to);
            cap0.push(0u8);
        };
        for v in g.vertices() {
            let c = node_of[v];
            if c != UNSET {
                add(2 * c, 2 * c + 1, false);
            }
        }
        for (u, v) in g.edges() {
            let (cu, cv) = (node_of[u], node_of[v]);
            add(2 * cu + 1, 2 * cv, true);
            add(2 * cv + 1, 2 * cu, true);
        }
        let mut start = vec![0u32; nodes + 1];
        for &t in &tail {
            start[t as usize + 1] += 1;
        }
        for i in 0..nodes {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut adj = vec![0u32; tail.len()];
        for (arc, &t) in tail.iter().enumerate() {
            adj[fill[t as usize] as usize] = arc as u32;
            fill[t as usize] += 1;
        }
        SplitNetwork {
            graph_n: g.n(),
            node_of,
            nodes,
            start,
            adj,
            head,
            cap0,
            edge_arc,
        }
    }

    /// `n' = 2ñ`, twice the number of non-isolated vertices.
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    /// `m' = 2m + ñ` directed unit-capacity arcs (residual twins excluded).
    pub fn arc_count(&self) -> usize {
        self.head.len() / 2
    }

    pub fn capacities(&self) -> impl Iterator<Item = u8> + '_ {
        self.cap0.iter().step_by(2).copied()
    }

    /// Bounded connectivity between distinct non-adjacent `x`, `y`. Stops
    /// after `limit` augmenting paths; below that, returns the minimum
    /// separation read off the residual cut.
    pub(crate) fn kappa(&self, scratch: &mut FlowScratch, x: Vertex, y: Vertex, limit: usize) -> Outcome {
        let n = self.graph_n;
        let (cx, cy) = (self.node_of[x], self.node_of[y]);
        if cx == UNSET || cy == UNSET {
            if limit == 0 {
                return Outcome::AtLeast;
            }
            let mut source_only = FixedBitSet::with_capacity(n);
            if cx == UNSET {
                source_only.insert(x);
            } else {
                source_only.insert_range(..);
                source_only.set(y, false);
            }
            return Outcome::Below(CutLabel::new(source_only, FixedBitSet::with_capacity(n)));
        }
        let src = 2 * cx + 1;
        let sink = 2 * cy;
        let flow = self.max_flow(scratch, src, sink, limit);
        if flow >= limit {
            return Outcome::AtLeast;
        }
        let reach = self.cut_side(scratch, src);
        let mut source_only = FixedBitSet::with_capacity(n);
        let mut separator = FixedBitSet::with_capacity(n);
        for v in 0..n {
            let c = self.node_of[v];
            if v == x {
                source_only.insert(v);
            } else if c != UNSET {
                let (vin, vout) = (2 * c as usize, 2 * c as usize + 1);
                if reach.contains(vout) {
                    source_only.insert(v);
                } else if reach.contains(vin) {
                    separator.insert(v);
                }
            }
        }
        let label = CutLabel::new(source_only, separator);
        debug_assert_eq!(label.order(), flow);
        Outcome::Below(label)
    }

    fn max_flow(&self, s: &mut FlowScratch, src: u32, sink: u32, limit: usize) -> usize {
        s.cap.clear();
        s.cap.extend_from_slice(&self.cap0);
        s.level.resize(self.nodes, UNSET);
        s.it.resize(self.nodes, 0);
        let mut flow = 0;
        while flow < limit && self.levels(s, src, sink) {
            s.it.copy_from_slice(&self.start[..self.nodes]);
            while flow < limit && self.augment(s, src, sink) {
                flow += 1;
            }
        }
        flow
    }

    /// BFS layering of the residual network; false once the sink is cut off.
    fn levels(&self, s: &mut FlowScratch, src: u32, sink: u32) -> bool {
        s.level.fill(UNSET);
        s.queue.clear();
        s.level[src as usize] = 0;
        s.queue.push(src);
        let mut qi = 0;
        while qi < s.queue.len() {
            let u = s.queue[qi] as usize;
            qi += 1;
            for &arc in &self.adj[self.start[u] as usize..self.start[u + 1] as usize] {
                let w = self.head[arc as usize];
                if s.cap[arc as usize] > 0 && s.level[w as usize] == UNSET {
                    s.level[w as usize] = s.level[u] + 1;
                    if w == sink {
                        return true;
                    }
                    s.queue.push(w);
                }
            }
        }
        false
    }

    /// One augmenting path along the level graph (iterative DFS).
    fn augment(&self, s: &mut FlowScratch, src: u32, sink: u32) -> bool {
        s.path.clear();
        let mut v = src as usize;
        loop {
            if v == sink as usize {
                for &arc in &s.path {
                    s.cap[arc as usize] -= 1;
                    s.cap[arc as usize ^ 1] += 1;
                }
                return true;
            }
            let end = self.start[v + 1];
            let mut next = None;
            while s.it[v] < end {
                let arc = self.adj[s.it[v] as usize];
                let w = self.head[arc as usize] as usize;
                if s.cap[arc as usize] > 0 && s.level[w] == s.level[v].wrapping_add(1) {
                    next = Some(arc);
                    break;
                }
                s.it[v] += 1;
            }
            match next {
                Some(arc) => {
                    s.path.push(arc);
                    v = self.head[arc as usize] as usize;
                }
                None => {
                    s.level[v] = UNSET;
                    match s.path.pop() {
                        None => return false,
                        Some(arc) => {
                            v = self.head[arc as usize ^ 1] as usize;
                            s.it[v] += 1;
                        }
                    }
                }
            }
        }
    }

    /// Nodes reachable from the source once the flow is maximum. Edge arcs
    /// never need to be cut to separate two non-adjacent vertices, so they
    /// are treated as uncapacitated here; the cut then consists of internal
    /// arcs only and names a vertex separator directly.
    fn cut_side(&self, s: &mut FlowScratch, src: u32) -> FixedBitSet {
        let mut reach = FixedBitSet::with_capacity(self.nodes);
        reach.insert(src as usize);
        s.queue.clear();
        s.queue.push(src);
        let mut qi = 0;
        while qi < s.queue.len() {
            let u = s.queue[qi] as usize;
            qi += 1;
            for &arc in &self.adj[self.start[u] as usize..self.start[u + 1] as usize] {
                let a = arc as usize;
                let open = s.cap[a] > 0 || (a.is_multiple_of(2) && self.edge_arc.contains(a / 2));
                let w = self.head[a] as usize;
                if open && !reach.contains(w) {
                    reach.insert(w);
                    s.queue.push(w as u32);
                }
            }
        }
        reach
    }
}

pub(crate) fn check_pair(g: &Graph, x: Vertex, y: Vertex) -> Result<()> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y || g.has_edge(x, y) {
        return Err(Error::InvalidPair(x, y));
    }
    Ok(())
}

/// Decides `κ(x, y) >= k`; below `k`, returns `κ(x, y)` and a minimum
/// `x`-`y` separation.
pub fn kappa_bounded(g: &Graph, x: Vertex, y: Vertex, k: usize) -> Result<KappaResult> {
    check_pair(g, x, y)?;
    let net = SplitNetwork::new(g);
    let mut scratch = FlowScratch::default();
    Ok(match net.kappa(&mut scratch, x, y, k) {
        Outcome::AtLeast => KappaResult::AtLeast(k),
        Outcome::Below(label) => KappaResult::Exactly {
            value: label.order(),
            separation: label.to_separation(),
        },
    })
}

/// `κ(x, y)` without early termination.
pub fn kappa(g: &Graph, x: Vertex, y: Vertex) -> Result<usize> {
    match kappa_bounded(g, x, y, g.n())? {
        KappaResult::Exactly { value, .. } => Ok(value),
        KappaResult::AtLeast(_) => unreachable!("κ(x, y) <= n - 2 for non-adjacent x, y"),
    }
}

/// `n > k` and no two non-adjacent vertices are separated by fewer than `k`
/// others.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.n() <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    let net = SplitNetwork::new(g);
    let mut scratch = FlowScratch::default();
    for x in g.vertices() {
        if g.degree(x) < k {
            return false;
        }
        for y in x + 1..g.n() {
            if !g.has_edge(x, y) && !matches!(net.kappa(&mut scratch, x, y, k), Outcome::AtLeast) {
                return false;
            }
        }
    }
    true
}

/// Largest `k` for which the graph is `k`-connected (`n - 1` for complete
/// graphs, 0 for the empty graph).
pub fn vertex_connectivity(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let net = SplitNetwork::new(g);
    let mut scratch = FlowScratch::default();
    let mut best = g.n() - 1;
    for x in g.vertices() {
        for y in x + 1..g.n() {
            if !g.has_edge(x, y) {
                if let Outcome::Below(label) = net.kappa(&mut scratch, x, y, best) {
                    best = label.order();
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_separation;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn network_size_matches_accounting() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let net = SplitNetwork::new(&g);
        // ñ = 5 (vertex 5 is isolated), m = 4.
        assert_eq!(net.node_count(), 10);
        assert_eq!(net.arc_count(), 2 * 4 + 5);
        assert!(net.capacities().all(|c| c == 1));
    }

    #[test]
    fn path_is_cut_by_its_middle() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        match kappa_bounded(&g, 0, 2, 2).unwrap() {
            KappaResult::Exactly { value, separation } => {
                assert_eq!(value, 1);
                assert_eq!(separation.separator(), &VertexSet::from([1]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn four_cycle_opposite_vertices() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        match kappa_bounded(&g, 0, 2, 3).unwrap() {
            KappaResult::Exactly { value, separation } => {
                assert_eq!(value, 2);
                assert_eq!(separation.separator(), &VertexSet::from([1, 3]));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(kappa_bounded(&g, 0, 2, 2).unwrap(), KappaResult::AtLeast(2));
    }

    #[test]
    fn petersen_pairs_have_connectivity_three() {
        let g = petersen();
        for x in g.vertices() {
            for y in x + 1..10 {
                if g.has_edge(x, y) {
                    continue;
                }
                match kappa_bounded(&g, x, y, 4).unwrap() {
                    KappaResult::Exactly { value, separation } => {
                        assert_eq!(value, 3);
                        make_separation(&g, separation.a().clone(), separation.b().clone()).unwrap();
                        assert!(separation.separates(x, y));
                    }
                    other => panic!("unexpected {other:?}"),
                }
            }
        }
    }

    #[test]
    fn adjacent_and_identical_pairs_are_rejected() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(kappa_bounded(&g, 0, 1, 2), Err(Error::InvalidPair(0, 1)));
        assert_eq!(kappa_bounded(&g, 2, 2, 2), Err(Error::InvalidPair(2, 2)));
    }

    #[test]
    fn isolated_endpoints_have_connectivity_zero() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        for (x, y) in [(3, 0), (0, 3)] {
            match kappa_bounded(&g, x, y, 1).unwrap() {
                KappaResult::Exactly { value, separation } => {
                    assert_eq!(value, 0);
                    assert!(separation.separates(x, y));
                    make_separation(&g, separation.a().clone(), separation.b().clone()).unwrap();
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn disconnected_pair_has_connectivity_zero() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(kappa(&g, 0, 3).unwrap(), 0);
    }

    #[test]
    fn complete_graph_connectivity() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert!(is_k_connected(&k5, 4));
        assert!(!is_k_connected(&k5, 5));
        assert_eq!(vertex_connectivity(&k5), 4);
        assert_eq!(vertex_connectivity(&petersen()), 3);
    }
}
