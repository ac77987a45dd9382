//! T-shaped separations and the tangle induced by a `k`-inseparable set.

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::blocks::find_blocks;
use crate::connectivity::is_k_connected;
use crate::decision::verify_certificate;
use crate::error::{Error, Result};
use crate::graph::{components_after_removal, make_separation, Graph, Separation, VertexSet};
use crate::inseparability::preprocess;
use crate::oracle::{enumerate_separations, OracleBudget, SeparationCatalog};

/// A proper `k`-separation `(A, B)` with a second proper `k`-separation
/// `(C, D)` such that `A \ B ⊆ C ∩ D`, `|A ∩ C| <= k` and `|A ∩ D| <= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TShapeWitness {
    pub target: Separation,
    pub witness: Separation,
}

impl TShapeWitness {
    /// Re-checks all defining conditions from scratch.
    pub fn is_valid(&self, g: &Graph, k: usize) -> bool {
        let (t, w) = (&self.target, &self.witness);
        let is_sep = |s: &Separation| make_separation(g, s.a().clone(), s.b().clone()).is_ok();
        is_sep(t)
            && is_sep(w)
            && t.is_proper()
            && w.is_proper()
            && t.order() == k
            && w.order() == k
            && t.a_only().is_subset(w.separator())
            && t.a().intersection(w.a()).len() <= k
            && t.a().intersection(w.b()).len() <= k
    }
}

fn check_catalog(catalog: &SeparationCatalog, needed: usize) -> Result<()> {
    if catalog.max_order() < needed {
        return Err(Error::InvalidArgument(format!(
            "catalog covers order {} but order {needed} is needed",
            catalog.max_order()
        )));
    }
    Ok(())
}

/// The first separation in `catalog` witnessing that `s` is T-shaped.
pub fn is_t_shaped(g: &Graph, s: &Separation, k: usize, catalog: &SeparationCatalog) -> Result<Option<TShapeWitness>> {
    make_separation(g, s.a().clone(), s.b().clone())?;
    if !s.is_proper() || s.order() != k {
        return Err(Error::Precondition(format!(
            "expected a proper separation of order {k}, got order {}",
            s.order()
        )));
    }
    check_catalog(catalog, k)?;
    let a_only = s.a_only();
    let found = catalog
        .of_order(k)
        .find(|w| a_only.is_subset(w.separator()) && s.a().intersection(w.a()).len() <= k && s.a().intersection(w.b()).len() <= k)
        .map(|w| TShapeWitness {
            target: s.clone(),
            witness: w.clone(),
        });
    if found.is_some() {
        assert!(2 * s.a().len() <= 3 * k, "T-shaped separation with |A| = {} > 3k/2", s.a().len());
    }
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TShapeReport {
    pub k: usize,
    /// Proper `k`-separations examined, counting both orientations.
    pub separations: usize,
    /// Number of `(k+1)`-blocks.
    pub blocks: usize,
    /// Every proper `k`-separation separates two `(k+1)`-blocks.
    pub all_separate_blocks: bool,
    /// A proper `k`-separation separating no two `(k+1)`-blocks.
    pub non_separating: Option<Separation>,
    /// No proper `k`-separation is T-shaped.
    pub none_t_shaped: bool,
    /// Every T-shaped separation, with its first witness.
    pub t_shaped: Vec<TShapeWitness>,
}

impl TShapeReport {
    pub fn equivalent(&self) -> bool {
        self.all_separate_blocks == self.none_t_shaped
    }
}

/// Evaluates, by enumeration, both "every proper `k`-separation separates
/// two `(k+1)`-blocks" and "no `k`-separation is T-shaped" on a
/// `k`-connected graph.
pub fn t_shaped_equivalence_report(g: &Graph, k: usize, budget: &OracleBudget) -> Result<TShapeReport> {
    if !is_k_connected(g, k) {
        return Err(Error::Precondition(format!("graph is not {k}-connected")));
    }
    let catalog = enumerate_separations(g, k, budget)?;
    let hk = preprocess(g, k + 1)?;
    let (blocks, _) = find_blocks(g, k + 1, &hk)?;
    let inside = |side: &VertexSet, other: &VertexSet| {
        blocks.iter().any(|b| b.is_subset(side) && !b.is_subset(other))
    };
    let mut report = TShapeReport {
        k,
        separations: 0,
        blocks: blocks.len(),
        all_separate_blocks: true,
        non_separating: None,
        none_t_shaped: true,
        t_shaped: Vec::new(),
    };
    for s in catalog.of_order(k) {
        report.separations += 1;
        if report.non_separating.is_none() && !(inside(s.a(), s.b()) && inside(s.b(), s.a())) {
            report.all_separate_blocks = false;
            report.non_separating = Some(s.clone());
        }
        if let Some(w) = is_t_shaped(g, s, k, &catalog)? {
            report.none_t_shaped = false;
            report.t_shaped.push(w);
        }
    }
    Ok(report)
}

/// An orientation of the separations of order `< k`. `oriented` lists the
/// proper ones with the small side first; the improper ones are the pairs
/// `(A, V)` with `|A| < k` and are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    pub k: usize,
    pub oriented: Vec<Separation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TangleOutcome {
    Tangle(Tangle),
    /// A separation of order `< k` with the set on neither side.
    Unorientable(Separation),
    /// Three small sides whose induced subgraphs together make up the graph.
    CoveringTriple([Separation; 3]),
}

/// Which (θ2) search found or ruled out a covering triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theta2Scan {
    /// Only inclusion-maximal small sides.
    Pruned,
    /// Every small side, proper or not.
    Unpruned,
}

struct Cover {
    vertices: FixedBitSet,
    edges: FixedBitSet,
}

fn cover_of(g: &Graph, edges: &[(usize, usize)], side: &VertexSet) -> Cover {
    let mut vertices = FixedBitSet::with_capacity(g.n());
    vertices.extend(side.iter());
    let mut e = FixedBitSet::with_capacity(edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        if vertices.contains(u) && vertices.contains(v) {
            e.insert(i);
        }
    }
    Cover { vertices, edges: e }
}

/// Indices `i <= j <= l` of three sides whose induced subgraphs cover `g`.
pub fn covering_triple(g: &Graph, sides: &[VertexSet], budget: &OracleBudget) -> Result<Option<[usize; 3]>> {
    let edges: Vec<_> = g.edges().collect();
    let covers: Vec<Cover> = sides.iter().map(|s| cover_of(g, &edges, s)).collect();
    let (n, m) = (g.n(), edges.len());
    let mut work: u64 = 0;
    for i in 0..covers.len() {
        for j in i..covers.len() {
            let mut v = covers[i].vertices.clone();
            v.union_with(&covers[j].vertices);
            let mut e = covers[i].edges.clone();
            e.union_with(&covers[j].edges);
            for (l, c) in covers.iter().enumerate().skip(j) {
                work += 1;
                if work > budget.max_work {
                    return Err(Error::BudgetExceeded {
                        what: "covering triple scan",
                        needed: work,
                        budget: budget.max_work,
                    });
                }
                if v.union_count(&c.vertices) == n && e.union_count(&c.edges) == m {
                    return Ok(Some([i, j, l]));
                }
            }
        }
    }
    Ok(None)
}

/// Small sides of the improper separations: every set of fewer than `k`
/// vertices.
fn improper_small_sides(g: &Graph, k: usize, max_only: bool) -> Vec<VertexSet> {
    let sizes = if max_only { k.saturating_sub(1)..k } else { 0..k };
    sizes
        .flat_map(|s| g.vertices().combinations(s).map(VertexSet::from))
        .collect()
}

/// Searches the small sides of `oriented` plus the improper ones for a
/// covering triple.
pub fn theta2_scan(
    g: &Graph,
    k: usize,
    oriented: &[Separation],
    scan: Theta2Scan,
    budget: &OracleBudget,
) -> Result<Option<[Separation; 3]>> {
    let mut sides: Vec<(VertexSet, Separation)> = oriented.iter().map(|s| (s.a().clone(), s.clone())).collect();
    let v = g.vertex_set();
    for a in improper_small_sides(g, k, scan == Theta2Scan::Pruned) {
        sides.push((a.clone(), Separation::from_sides(a, v.clone())));
    }
    if scan == Theta2Scan::Pruned {
        sides.sort_by(|x, y| y.0.len().cmp(&x.0.len()).then_with(|| x.0.cmp(&y.0)));
        sides.dedup_by(|x, y| x.0 == y.0);
        let keep: Vec<bool> = sides
            .iter()
            .enumerate()
            .map(|(i, (a, _))| !sides[..i].iter().any(|(b, _)| b.len() > a.len() && a.is_subset(b)))
            .collect();
        sides = sides.into_iter().zip(keep).filter_map(|(s, k)| k.then_some(s)).collect();
    }
    let sets: Vec<VertexSet> = sides.iter().map(|(a, _)| a.clone()).collect();
    Ok(covering_triple(g, &sets, budget)?.map(|t| t.map(|i| sides[i].1.clone())))
}

/// Splits `x` into three consecutive groups `X_l` and takes as small side
/// of `S_l = X \ X_l` everything cut off from `X` by `S_l`. Returns the
/// triple if those sides are valid small sides and cover `g`.
fn constructive_triple(g: &Graph, x: &VertexSet, k: usize) -> Result<Option<[Separation; 3]>> {
    if x.len() < 3 {
        return Ok(None);
    }
    let members = x.as_slice();
    let cuts = [0, members.len() / 3, 2 * members.len() / 3, members.len()];
    let mut triple = Vec::with_capacity(3);
    for l in 0..3 {
        let group: VertexSet = members[cuts[l]..cuts[l + 1]].iter().copied().collect();
        let sep_set = x.difference(&group);
        if sep_set.len() >= k {
            return Ok(None);
        }
        let mut a = sep_set.clone();
        for comp in components_after_removal(g, &sep_set)? {
            if comp.intersection(x).is_empty() {
                a = a.union(&comp);
            }
        }
        let b = g.vertex_set().difference(&a.difference(&sep_set));
        let s = make_separation(g, a, b)?;
        if !x.is_subset(s.b()) || x.is_subset(s.a()) {
            return Ok(None);
        }
        triple.push(s);
    }
    let sides: Vec<VertexSet> = triple.iter().map(|s| s.a().clone()).collect();
    let budget = OracleBudget::default();
    Ok(covering_triple(g, &sides, &budget)?
        .filter(|t| t.iter().collect::<std::collections::BTreeSet<_>>().len() == 3)
        .map(|_| [triple[0].clone(), triple[1].clone(), triple[2].clone()]))
}

/// Orients every separation of order `< k` so that `x` lies in the large
/// side, then checks the tangle axioms.
pub fn tangle_from_set(
    g: &Graph,
    x: &VertexSet,
    k: usize,
    catalog: &SeparationCatalog,
    budget: &OracleBudget,
) -> Result<TangleOutcome> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if !verify_certificate(g, x, k)? {
        return Err(Error::Precondition(format!("the set is not {k}-inseparable")));
    }
    check_catalog(catalog, k - 1)?;
    let mut oriented = Vec::new();
    for s in catalog.below(k) {
        match (x.is_subset(s.a()), x.is_subset(s.b())) {
            (false, true) => oriented.push(s.clone()),
            (true, false) => {}
            _ => return Ok(TangleOutcome::Unorientable(s.clone())),
        }
    }
    if let Some(t) = constructive_triple(g, x, k)? {
        return Ok(TangleOutcome::CoveringTriple(t));
    }
    Ok(match theta2_scan(g, k, &oriented, Theta2Scan::Pruned, budget)? {
        Some(t) => TangleOutcome::CoveringTriple(t),
        None => TangleOutcome::Tangle(Tangle { k, oriented }),
    })
}
