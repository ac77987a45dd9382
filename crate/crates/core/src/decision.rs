//! Deciding whether a `k`-block exists without building `H_k`, and the
//! separation sets that certify a negative answer.

use std::collections::HashMap;

use itertools::Itertools;

use crate::connectivity::{CutLabel, FlowScratch, Outcome, SplitNetwork};
use crate::error::{Error, Result};
use crate::graph::{make_separation, Graph, Separation, Vertex, VertexSet};

/// Separations of order `< k` such that among any `k` vertices some two
/// are separated by a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSet {
    k: usize,
    separations: Vec<Separation>,
}

impl WitnessSet {
    pub fn new(k: usize, separations: Vec<Separation>) -> Result<Self> {
        if let Some(s) = separations.iter().find(|s| s.order() >= k) {
            return Err(Error::InvalidArgument(format!(
                "witness separation of order {} is not below k = {k}",
                s.order()
            )));
        }
        Ok(WitnessSet { k, separations })
    }

    pub fn k(&self) -> usize {
        self.k
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
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// A `k`-inseparable set of exactly `k` vertices (all of `V` when `k = n`).
    Yes(VertexSet),
    No(WitnessSet),
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

/// Decides whether `g` has a `k`-block.
///
/// Starting from `X = V`, the `k` smallest vertices of `X` are tested pair
/// by pair; the first separated pair splits `X` into `X ∩ A` and `X ∩ B`,
/// and its separation joins the witness. Flow computations stop after `k`
/// augmenting paths and are cached per pair.
pub fn decide_k_block(g: &Graph, k: usize) -> Result<Decision> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = g.n();
    if k > n {
        return Ok(Decision::No(WitnessSet::new(k, Vec::new())?));
    }
    let net = SplitNetwork::new(g);
    let mut scratch = FlowScratch::default();
    let mut cache: HashMap<(Vertex, Vertex), Option<CutLabel>> = HashMap::new();
    let mut witness = Vec::new();
    let mut stack = vec![g.vertex_set()];
    while let Some(x) = stack.pop() {
        if x.len() < k {
            continue;
        }
        let kset = &x.as_slice()[..k];
        let mut split = None;
        'pairs: for (i, &u) in kset.iter().enumerate() {
            for &v in &kset[i + 1..] {
                if g.has_edge(u, v) {
                    continue;
                }
                let cut = cache.entry((u, v)).or_insert_with(|| match net.kappa(&mut scratch, u, v, k) {
                    Outcome::AtLeast => None,
                    Outcome::Below(cut) => Some(cut),
                });
                if let Some(cut) = cut {
                    split = Some(cut.clone());
                    break 'pairs;
                }
            }
        }
        let Some(cut) = split else {
            return Ok(Decision::Yes(kset.iter().copied().collect()));
        };
        let sep = cut.to_separation();
        let first = x.intersection(sep.a());
        let second = x.intersection(sep.b());
        witness.push(sep);
        stack.push(second);
        stack.push(first);
    }
    log::debug!("no {k}-block; witness of {} separations", witness.len());
    Ok(Decision::No(WitnessSet::new(k, witness)?))
}

/// Checks that every pair of `x` is `k`-inseparable in `g` and `|x| >= k`.
pub fn verify_certificate(g: &Graph, x: &VertexSet, k: usize) -> Result<bool> {
    g.check_set(x)?;
    if x.len() < k {
        return Ok(false);
    }
    let net = SplitNetwork::new(g);
    let mut scratch = FlowScratch::default();
    Ok(x.as_slice().iter().copied().tuple_combinations().all(|(u, v)| {
        g.has_edge(u, v) || matches!(net.kappa(&mut scratch, u, v, k), Outcome::AtLeast)
    }))
}

/// Largest `C(n, k)` for which [`verify_witness`] also checks every
/// `k`-subset directly.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessVerdict {
    pub valid: bool,
    /// Whether all `k`-subsets were enumerated in addition to the replay.
    pub exhaustive: bool,
    /// A `k`-set no member of the witness separates.
    pub counterexample: Option<VertexSet>,
    /// Set when a member is not a separation of the graph or has order `>= k`.
    pub problem: Option<String>,
}

pub(crate) fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    (0..k as u64).try_fold(1u64, |acc, i| acc.checked_mul(n as u64 - i).map(|x| x / (i + 1)))
}

/// Checks a witness set: every member must be a separation of `g` of order
/// below `k`, and no `k` vertices may be free of a separated pair.
///
/// The replay splits `V` by the first member that separates two vertices of
/// the current set, recursively. It succeeds exactly when every branch ends
/// below `k` vertices; a set of `k` or more that no member splits yields the
/// counterexample. Small instances are also checked over all `k`-subsets.
pub fn verify_witness(g: &Graph, w: &WitnessSet) -> WitnessVerdict {
    let k = w.k();
    let mut verdict = WitnessVerdict {
        valid: false,
        exhaustive: false,
        counterexample: None,
        problem: None,
    };
    for (i, s) in w.separations().iter().enumerate() {
        if s.order() >= k {
            verdict.problem = Some(format!("separation {i} has order {} >= k", s.order()));
            return verdict;
        }
        if let Err(e) = make_separation(g, s.a().clone(), s.b().clone()) {
            verdict.problem = Some(format!("separation {i}: {e}"));
            return verdict;
        }
    }
    verdict.counterexample = replay(g, w);
    if let Some(total) = binomial(g.n(), k).filter(|&c| c <= EXHAUSTIVE_LIMIT) {
        log::trace!("exhaustive witness check over {total} subsets");
        verdict.exhaustive = true;
        let found = exhaustive_counterexample(g, w);
        debug_assert_eq!(found.is_some(), verdict.counterexample.is_some());
        verdict.counterexample = verdict.counterexample.or(found);
    }
    verdict.valid = verdict.counterexample.is_none();
    verdict
}

fn replay(g: &Graph, w: &WitnessSet) -> Option<VertexSet> {
    let k = w.k();
    let mut stack = vec![g.vertex_set()];
    while let Some(x) = stack.pop() {
        if x.len() < k {
            continue;
        }
        match w.separations().iter().find(|s| s.splits(&x)) {
            Some(s) => {
                stack.push(x.intersection(s.b()));
                stack.push(x.intersection(s.a()));
            }
            None => return Some(x.iter().take(k).collect()),
        }
    }
    None
}

fn exhaustive_counterexample(g: &Graph, w: &WitnessSet) -> Option<VertexSet> {
    let sides: Vec<(Vec<bool>, Vec<bool>)> = w
        .separations()
        .iter()
        .map(|s| (s.a_only().indicator(g.n()), s.b_only().indicator(g.n())))
        .collect();
    g.vertices().combinations(w.k()).find_map(|set| {
        let separated = sides.iter().any(|(a, b)| set.iter().any(|&v| a[v]) && set.iter().any(|&v| b[v]));
        (!separated).then(|| set.into_iter().collect())
    })
}
