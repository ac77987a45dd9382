//! Brute-force ground truth. Every check here enumerates vertex sets
//! directly and never touches the flow code.

use itertools::Itertools;

use crate::blocks::BlockSet;
use crate::error::{Error, Result};
use crate::graph::{components_masked, connected_avoiding, Graph, Separation, Vertex, VertexSet};

/// Hard caps for the exhaustive routines. Exceeding one is an error, never
/// a silently truncated answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest graph [`oracle_blocks`] accepts.
    pub max_vertices: usize,
    /// Cap on the number of candidate separators (times bipartitions, for
    /// catalogs) examined by one call.
    pub max_work: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 12,
            max_work: 50_000_000,
        }
    }
}

fn check_distinct(g: &Graph, u: Vertex, v: Vertex) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidPair(u, v));
    }
    Ok(())
}

/// True iff no set of fewer than `k` vertices other than `u`, `v`
/// disconnects them. Adjacent pairs are always inseparable.
pub fn oracle_pair_inseparable(g: &Graph, u: Vertex, v: Vertex, k: usize) -> Result<bool> {
    check_distinct(g, u, v)?;
    if g.has_edge(u, v) {
        return Ok(true);
    }
    Ok(separator_below(g, u, v, k).is_none())
}

/// The smallest `S ⊆ V \ {u, v}` with `|S| < limit` separating `u` from `v`.
fn separator_below(g: &Graph, u: Vertex, v: Vertex, limit: usize) -> Option<VertexSet> {
    let others: Vec<Vertex> = g.vertices().filter(|&w| w != u && w != v).collect();
    let mut removed = vec![false; g.n()];
    for size in 0..limit.min(others.len() + 1) {
        for s in others.iter().copied().combinations(size) {
            for &w in &s {
                removed[w] = true;
            }
            let apart = !connected_avoiding(g, u, v, &removed);
            for &w in &s {
                removed[w] = false;
            }
            if apart {
                return Some(s.into_iter().collect());
            }
        }
    }
    None
}

/// `κ(u, v)` by separator enumeration; `None` for adjacent pairs.
pub fn oracle_kappa(g: &Graph, u: Vertex, v: Vertex) -> Result<Option<usize>> {
    check_distinct(g, u, v)?;
    if g.has_edge(u, v) {
        return Ok(None);
    }
    let s = separator_below(g, u, v, g.n()).expect("V minus the pair always separates it");
    Ok(Some(s.len()))
}

/// The `k`-blocks of `g` as the maximal cliques (of size at least `k`) of
/// the pairwise-inseparability relation.
pub fn oracle_blocks(g: &Graph, k: usize, budget: &OracleBudget) -> Result<BlockSet> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = g.n();
    if n > budget.max_vertices {
        return Err(Error::BudgetExceeded {
            what: "oracle vertices",
            needed: n as u64,
            budget: budget.max_vertices as u64,
        });
    }
    if k > n {
        return Ok(BlockSet::new(k, Vec::new()));
    }
    let per_pair: u64 = (0..k.min(n - 1)).map(|s| binomial(n.saturating_sub(2), s)).sum();
    let work = per_pair.saturating_mul((n * (n - 1) / 2) as u64);
    if work > budget.max_work {
        return Err(Error::BudgetExceeded {
            what: "oracle separator checks",
            needed: work,
            budget: budget.max_work,
        });
    }
    let mut rel = vec![vec![false; n]; n];
    for (u, v) in g.vertices().tuple_combinations() {
        let insep = oracle_pair_inseparable(g, u, v, k)?;
        rel[u][v] = insep;
        rel[v][u] = insep;
    }
    let mut cliques = Vec::new();
    bron_kerbosch(&rel, Vec::new(), g.vertices().collect(), Vec::new(), &mut cliques);
    let blocks = cliques
        .into_iter()
        .filter(|c| c.len() >= k)
        .map(VertexSet::from)
        .collect();
    Ok(BlockSet::new(k, blocks))
}

fn binomial(n: usize, k: usize) -> u64 {
    crate::decision::binomial(n, k).unwrap_or(u64::MAX)
}

fn bron_kerbosch(
    rel: &[Vec<bool>],
    r: Vec<Vertex>,
    mut p: Vec<Vertex>,
    mut x: Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = *p
        .iter()
        .chain(&x)
        .max_by_key(|&&u| p.iter().filter(|&&w| rel[u][w]).count())
        .expect("p is nonempty");
    let candidates: Vec<Vertex> = p.iter().copied().filter(|&v| !rel[pivot][v]).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&w| rel[v][w]).collect();
        let x2 = x.iter().copied().filter(|&w| rel[v][w]).collect();
        bron_kerbosch(rel, r2, p2, x2, out);
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Every proper separation of order at most `max_order`, in both
/// orientations, sorted by order and then by sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationCatalog {
    max_order: usize,
    separations: Vec<Separation>,
}

impl SeparationCatalog {
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn separations(&self) -> &[Separation] {
        &self.separations
    }

    pub fn len(&self) -> usize {
        self.separations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separations.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Separation> {
        self.separations.iter()
    }

    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &Separation> {
        self.separations.iter().filter(move |s| s.order() == order)
    }

    pub fn below(&self, order: usize) -> impl Iterator<Item = &Separation> {
        self.separations.iter().filter(move |s| s.order() < order)
    }
}

/// Enumerates separators `S` with `|S| <= max_order` and, for each, every
/// split of the components of `G - S` into two nonempty groups.
pub fn enumerate_separations(g: &Graph, max_order: usize, budget: &OracleBudget) -> Result<SeparationCatalog> {
    let n = g.n();
    let mut work: u64 = 0;
    let mut separations = Vec::new();
    let mut removed = vec![false; n];
    for size in 0..=max_order.min(n) {
        for s in g.vertices().combinations(size) {
            for &w in &s {
                removed[w] = true;
            }
            let comps = components_masked(g, &removed);
            for &w in &s {
                removed[w] = false;
            }
            let c = comps.len();
            let splits = if c >= 63 { u64::MAX } else { 1u64 << c };
            work = work.saturating_add(splits);
            if work > budget.max_work {
                return Err(Error::BudgetExceeded {
                    what: "separation catalog",
                    needed: work,
                    budget: budget.max_work,
                });
            }
            if c < 2 {
                continue;
            }
            let sep: VertexSet = s.into_iter().collect();
            for mask in 1..(1u64 << c) - 1 {
                let mut a = sep.as_slice().to_vec();
                let mut b = a.clone();
                for (i, comp) in comps.iter().enumerate() {
                    let side = if mask >> i & 1 == 1 { &mut a } else { &mut b };
                    side.extend(comp.iter());
                }
                separations.push(Separation::from_sides(a.into(), b.into()));
            }
        }
    }
    separations.sort_by(|x, y| (x.order(), x.a(), x.b()).cmp(&(y.order(), y.a(), y.b())));
    Ok(SeparationCatalog { max_order, separations })
}
