//! Immutable simple graphs, vertex sets and separations.
//!
//! Vertices are dense indices `0..n`. Every graph also carries an external
//! label per vertex which the I/O layer uses for reading and reporting.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A sorted, duplicate-free set of vertices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from an already sorted and deduplicated vector.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Vertex> + Clone + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.len().min(other.len()));
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet(out)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.len() + other.len());
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    /// Membership table over `0..n`.
    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut mark = vec![false; n];
        for v in self.iter() {
            mark[v] = true;
        }
        mark
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// An undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: Vec<String>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .finish()
    }
}

impl Graph {
    /// Graph on `0..n` labelled by the decimal vertex index.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::with_labels((0..n).map(|v| v.to_string()).collect(), edges)
    }

    /// Graph whose vertex `i` carries `labels[i]`. Parallel edges collapse;
    /// self-loops, unknown endpoints and repeated labels are errors.
    pub fn with_labels<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let n = labels.len();
        {
            let mut seen = HashMap::with_capacity(n);
            for (i, l) in labels.iter().enumerate() {
                if let Some(j) = seen.insert(l.as_str(), i) {
                    return Err(Error::InvalidArgument(format!(
                        "vertices {j} and {i} share the label {l:?}"
                    )));
                }
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph {
            adj,
            labels,
            m: m2 / 2,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, std::iter::empty()).expect("edgeless graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::range(self.n())
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n == 0 || self.m == n * (n - 1) / 2
    }

    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.adj[v].is_empty()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "vertex {v} outside 0..{}",
                self.n()
            )))
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n() => self.check_vertex(v),
            _ => Ok(()),
        }
    }

    /// Subgraph induced on `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let labels = keep.iter().map(|v| self.labels[v].clone()).collect();
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::with_labels(labels, edges).expect("induced subgraph of a valid graph")
    }

    pub fn is_connected_subset(&self, s: &VertexSet) -> bool {
        if s.is_empty() {
            return true;
        }
        let inside = s.indicator(self.n());
        let mut seen = vec![false; self.n()];
        let start = s.as_slice()[0];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == s.len()
    }

    pub fn delete_vertex(&self, v: Vertex) -> Graph {
        let keep: VertexSet = self.vertices().filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let edges = self
            .edges()
            .filter(|&e| e != (u.min(v), u.max(v)));
        Graph::with_labels(self.labels.clone(), edges).expect("edge deletion keeps validity")
    }

    /// Contracts `uv` into `u`; the merged vertex keeps `u`'s label and
    /// `v` disappears (vertices above `v` shift down by one).
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let shift = |w: Vertex| if w > v { w - 1 } else { w };
        let target = shift(u);
        let labels = self
            .labels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v)
            .map(|(_, l)| l.clone())
            .collect();
        let edges = self.edges().filter_map(|(a, b)| {
            let a2 = if a == v { target } else { shift(a) };
            let b2 = if b == v { target } else { shift(b) };
            (a2 != b2).then_some((a2, b2))
        });
        Graph::with_labels(labels, edges).expect("contraction keeps validity")
    }
}

/// Drops isolated vertices. Returns the reduced graph and, for each of its
/// vertices, the original index.
pub fn strip_isolated(g: &Graph) -> (Graph, Vec<Vertex>) {
    let keep: VertexSet = g.vertices().filter(|&v| !g.is_isolated(v)).collect();
    let map = keep.as_slice().to_vec();
    (g.induced(&keep), map)
}

/// Connected components of `G - S`, each sorted, listed by smallest member.
pub fn components_after_removal(g: &Graph, s: &VertexSet) -> Result<Vec<VertexSet>> {
    g.check_set(s)?;
    let removed = s.indicator(g.n());
    Ok(components_masked(g, &removed))
}

pub(crate) fn components_masked(g: &Graph, removed: &[bool]) -> Vec<VertexSet> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if removed[start] || comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        queue.push_back(start);
        let mut members = vec![start];
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !removed[w] && comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(VertexSet::from_sorted(members));
    }
    out
}

/// True if `u` and `v` lie in the same component of `G - removed`.
pub(crate) fn connected_avoiding(g: &Graph, u: Vertex, v: Vertex, removed: &[bool]) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        if x == v {
            return true;
        }
        for &w in g.neighbors(x) {
            if !removed[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// An ordered pair `(A, B)` of vertex sets with `A ∪ B = V` and no edge
/// between `A \ B` and `B \ A`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Separation {
    a: VertexSet,
    b: VertexSet,
    separator: VertexSet,
}

impl fmt::Debug for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} | {:?})", self.a, self.b)
    }
}

impl Separation {
    /// Builds a separation without checking the separation property.
    pub(crate) fn from_sides(a: VertexSet, b: VertexSet) -> Self {
        let separator = a.intersection(&b);
        Separation { a, b, separator }
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn separator(&self) -> &VertexSet {
        &self.separator
    }

    pub fn order(&self) -> usize {
        self.separator.len()
    }

    /// `A \ B`.
    pub fn a_only(&self) -> VertexSet {
        self.a.difference(&self.b)
    }

    /// `B \ A`.
    pub fn b_only(&self) -> VertexSet {
        self.b.difference(&self.a)
    }

    pub fn is_proper(&self) -> bool {
        self.a.len() > self.separator.len() && self.b.len() > self.separator.len()
    }

    pub fn reversed(&self) -> Separation {
        Separation {
            a: self.b.clone(),
            b: self.a.clone(),
            separator: self.separator.clone(),
        }
    }

    /// True if one of `u`, `v` lies in `A \ B` and the other in `B \ A`.
    pub fn separates(&self, u: Vertex, v: Vertex) -> bool {
        let side = |x: Vertex| (self.a.contains(x), self.b.contains(x));
        matches!(
            (side(u), side(v)),
            ((true, false), (false, true)) | ((false, true), (true, false))
        )
    }

    /// True if `x` has members in both `A \ B` and `B \ A`.
    pub fn splits(&self, x: &VertexSet) -> bool {
        let mut in_a = false;
        let mut in_b = false;
        for v in x.iter() {
            match (self.a.contains(v), self.b.contains(v)) {
                (true, false) => in_a = true,
                (false, true) => in_b = true,
                _ => {}
            }
            if in_a && in_b {
                return true;
            }
        }
        false
    }
}

/// Validates `(A, B)` as a separation of `g`.
pub fn make_separation(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Separation> {
    g.check_set(&a)?;
    g.check_set(&b)?;
    let n = g.n();
    let in_a = a.indicator(n);
    let in_b = b.indicator(n);
    if let Some(v) = (0..n).find(|&v| !in_a[v] && !in_b[v]) {
        return Err(Error::NotASeparation(format!(
            "vertex {} lies in neither side",
            g.label(v)
        )));
    }
    for u in a.iter().filter(|&u| !in_b[u]) {
        if let Some(&w) = g.neighbors(u).iter().find(|&&w| !in_a[w]) {
            return Err(Error::NotASeparation(format!(
                "edge {}-{} joins A\\B to B\\A",
                g.label(u),
                g.label(w)
            )));
        }
    }
    Ok(Separation::from_sides(a, b))
}

/// The corner separations `(A∩C, B∪D)` and `(B∩D, A∪C)` of two separations.
/// Their orders always sum to `|A∩B| + |C∩D|`.
pub fn corner_orders(s1: &Separation, s2: &Separation) -> (Separation, Separation) {
    let first = Separation::from_sides(s1.a.intersection(&s2.a), s1.b.union(&s2.b));
    let second = Separation::from_sides(s1.b.intersection(&s2.b), s1.a.union(&s2.a));
    (first, second)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub avg_degree: f64,
    pub has_triangle: bool,
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats> {
    if g.n() == 0 {
        return Err(Error::UndefinedDegree);
    }
    let min_degree = g.vertices().map(|v| g.degree(v)).min().unwrap_or(0);
    let avg_degree = 2.0 * g.m() as f64 / g.n() as f64;
    Ok(DegreeStats {
        min_degree,
        avg_degree,
        has_triangle: has_triangle(g),
    })
}

fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return true,
            }
        }
        false
    })
}

/// Orders labels numerically when both are unsigned integers, otherwise
/// lexicographically; numeric labels sort first.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

/// External labels of `s`, sorted by [`label_cmp`].
pub fn sorted_labels(g: &Graph, s: &VertexSet) -> Vec<String> {
    let mut out: Vec<String> = s.iter().map(|v| g.label(v).to_string()).collect();
    out.sort_by(|a, b| label_cmp(a, b));
    out
}
