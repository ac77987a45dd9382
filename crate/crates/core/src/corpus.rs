//! Example graphs, seeded random ensembles, and a harness that checks the
//! extremal degree theorems on concrete graphs.

use itertools::Itertools;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::blocks::find_blocks;
use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::{degree_stats, Graph, Vertex, VertexSet};
use crate::inseparability::preprocess;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).tuple_combinations()).expect("valid edges")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid edges")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Construction(format!("a cycle needs 3 vertices, not {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid edges")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).cartesian_product(a..a + b)).expect("valid edges")
}

/// `K_n` with every edge subdivided once. Branch vertices are `0..n`.
pub fn subdivided_complete(n: usize) -> Graph {
    let edges = (0..n)
        .tuple_combinations()
        .enumerate()
        .flat_map(|(i, (u, v))| [(u, n + i), (n + i, v)]);
    Graph::from_edges(n + n * (n.saturating_sub(1)) / 2, edges).expect("valid edges")
}

/// The `rows × cols` grid; vertex `(r, c)` has index `r * cols + c`.
pub fn gen_grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows < 2 || cols < 2 {
        return Err(Error::Construction(format!("a grid needs at least 2×2, not {rows}×{cols}")));
    }
    let idx = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges)
}

/// Grid boundary in clockwise order from the top-left corner, with the
/// positions of the four corners.
fn boundary_cycle(rows: usize, cols: usize) -> (Vec<Vertex>, [usize; 4]) {
    let idx = |r: usize, c: usize| r * cols + c;
    let mut cyc: Vec<Vertex> = (0..cols).map(|c| idx(0, c)).collect();
    cyc.extend((1..rows).map(|r| idx(r, cols - 1)));
    cyc.extend((0..cols - 1).rev().map(|c| idx(rows - 1, c)));
    cyc.extend((1..rows - 1).rev().map(|r| idx(r, 0)));
    let corners = [0, cols - 1, cols - 1 + rows - 1, 2 * (cols - 1) + rows - 1];
    (cyc, corners)
}

/// A grid with `k` apex vertices `X` attached to boundary paths so that
/// every grid vertex ends with degree 4.
///
/// The boundary cycle is cut at `k` junctions: the four corners and `k - 4`
/// further points spread over the sides. Apex `i` is joined to the arc from
/// junction `i` to junction `i + 1`. A corner belongs to both arcs that meet
/// there; any other junction belongs only to the arc that starts at it.
///
/// For `k = 4` the construction is valid but `X` is not a 4-block of its
/// own: it joins the 4-block of the grid interior.
pub fn gen_grid_with_apex(k: usize, rows: usize, cols: usize) -> Result<(Graph, VertexSet)> {
    if k < 4 {
        return Err(Error::Construction(format!("apex construction needs k >= 4, not {k}")));
    }
    if rows < 2 || cols < 2 {
        return Err(Error::Construction(format!("a grid needs at least 2×2, not {rows}×{cols}")));
    }
    if rows < k * k || cols < k * k {
        log::warn!("grid {rows}×{cols} is below k² = {}; X may not be the only {k}-block", k * k);
    }
    let grid = gen_grid(rows, cols)?;
    let (cyc, corners) = boundary_cycle(rows, cols);
    let side_len = [cols - 1, rows - 1, cols - 1, rows - 1];
    let mut extras = [0usize; 4];
    for i in 0..k - 4 {
        extras[i % 4] += 1;
    }
    let mut junctions = Vec::with_capacity(k);
    for side in 0..4 {
        junctions.push((corners[side], true));
        let e = extras[side];
        for j in 1..=e {
            junctions.push((corners[side] + j * side_len[side] / (e + 1), false));
        }
    }
    let len = cyc.len();
    let gn = grid.n();
    let mut edges: Vec<(Vertex, Vertex)> = grid.edges().collect();
    for i in 0..k {
        let (start, _) = junctions[i];
        let (end, end_corner) = junctions[(i + 1) % k];
        let span = (end + len - start) % len;
        let count = if end_corner { span + 1 } else { span };
        if count < k {
            return Err(Error::Construction(format!(
                "apex {i} would attach to {count} boundary vertices, fewer than k = {k}"
            )));
        }
        edges.extend((0..count).map(|j| (gn + i, cyc[(start + j) % len])));
    }
    let g = Graph::from_edges(gn + k, edges)?;
    debug_assert!((0..gn).all(|v| g.degree(v) == 4));
    Ok((g, (gn..gn + k).collect()))
}

/// `n` core vertices, each pair joined by `k` internally disjoint paths of
/// length 2. The core is `0..n`.
pub fn gen_parallel_paths(n: usize, k: usize) -> Result<(Graph, VertexSet)> {
    if k == 0 || n < k {
        return Err(Error::Construction(format!("need n >= k >= 1, got n = {n}, k = {k}")));
    }
    let mut next = n;
    let mut edges = Vec::new();
    for (u, v) in (0..n).tuple_combinations() {
        for _ in 0..k {
            edges.push((u, next));
            edges.push((next, v));
            next += 1;
        }
    }
    Ok((Graph::from_edges(next, edges)?, VertexSet::range(n)))
}

/// Vertex cap for [`gen_block_tree`].
pub const BLOCK_TREE_MAX_VERTICES: usize = 200_000;

/// A tree of depth `depth` in which every inner node has `C(n, k-1)`
/// children, each node replaced by `n` vertices. Each child is matched to a
/// distinct `(k-1)`-subset of its parent's vertices, and leaf parts are made
/// complete. Returns the graph and all parts, root first.
pub fn gen_block_tree(n: usize, k: usize, depth: usize) -> Result<(Graph, Vec<VertexSet>)> {
    if k < 2 || n < k {
        return Err(Error::Construction(format!("need n >= k >= 2, got n = {n}, k = {k}")));
    }
    let fanout = crate::decision::binomial(n, k - 1).unwrap_or(u64::MAX);
    let total = (0..=depth as u32)
        .try_fold(0u64, |acc, d| fanout.checked_pow(d).and_then(|f| acc.checked_add(f)))
        .and_then(|parts| parts.checked_mul(n as u64));
    match total {
        Some(t) if t <= BLOCK_TREE_MAX_VERTICES as u64 => {}
        _ => {
            return Err(Error::Construction(format!(
                "block tree would exceed {BLOCK_TREE_MAX_VERTICES} vertices"
            )))
        }
    }
    let mut parts = vec![VertexSet::range(n)];
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut next = n;
    for _ in 0..depth {
        let mut new_level = Vec::new();
        for &p in &level {
            let parent: Vec<Vertex> = parts[p].iter().collect();
            for subset in parent.iter().copied().combinations(k - 1) {
                let child = VertexSet::range(next + n).difference(&VertexSet::range(next));
                edges.extend(subset.iter().zip(child.iter()).map(|(&s, c)| (s, c)));
                next += n;
                new_level.push(parts.len());
                parts.push(child);
            }
        }
        level = new_level;
    }
    for &leaf in &level {
        edges.extend(parts[leaf].iter().tuple_combinations::<(Vertex, Vertex)>());
    }
    Ok((Graph::from_edges(next, edges)?, parts))
}

/// The ladder with `squares` squares: vertex `(i, s)` for `i` in
/// `0..=squares`, `s` in `{0, 1}` has index `2i + s`.
pub fn gen_ladder(squares: usize) -> Result<Graph> {
    if squares < 1 {
        return Err(Error::Construction("a ladder needs at least one square".into()));
    }
    Ok(ladder_edges(squares).1)
}

fn ladder_edges(squares: usize) -> (usize, Graph) {
    let n = 2 * (squares + 1);
    let rungs = (0..=squares).map(|i| (2 * i, 2 * i + 1));
    let rails = (0..squares).flat_map(|i| [(2 * i, 2 * i + 2), (2 * i + 1, 2 * i + 3)]);
    (n, Graph::from_edges(n, rungs.chain(rails)).expect("valid edges"))
}

/// Lexicographic product of the ladder with `K^{k/2}` for even `k`; for odd
/// `k`, the `k - 1` graph plus a universal vertex.
pub fn gen_ladder_lex(k: usize, squares: usize) -> Result<Graph> {
    if k < 2 || squares < 2 {
        return Err(Error::Construction(format!("need k >= 2 and squares >= 2, got {k}, {squares}")));
    }
    if k % 2 == 1 {
        let base = gen_ladder_lex(k - 1, squares)?;
        let u = base.n();
        let edges = base.edges().chain((0..u).map(|v| (v, u)));
        return Graph::from_edges(u + 1, edges);
    }
    let (hn, ladder) = ladder_edges(squares);
    let q = k / 2;
    let id = |h: usize, x: usize| h * q + x;
    let mut edges = Vec::new();
    for h in 0..hn {
        edges.extend((0..q).tuple_combinations().map(|(x, y)| (id(h, x), id(h, y))));
    }
    for (h1, h2) in ladder.edges() {
        edges.extend((0..q).cartesian_product(0..q).map(|(x, y)| (id(h1, x), id(h2, y))));
    }
    Graph::from_edges(hn * q, edges)
}

/// The ladder with each degree-2 vertex blown up to `K^{(k+1)/2}` and each
/// degree-3 vertex to `K^{(k-1)/2}`; blown-up vertices are fully joined
/// when the ladder vertices are adjacent. `k` must be odd.
pub fn gen_ladder_cliques(k: usize, squares: usize) -> Result<Graph> {
    if k < 3 || k.is_multiple_of(2) || squares < 2 {
        return Err(Error::Construction(format!(
            "need odd k >= 3 and squares >= 2, got {k}, {squares}"
        )));
    }
    let (hn, ladder) = ladder_edges(squares);
    let mut groups = Vec::with_capacity(hn);
    let mut next = 0;
    for h in 0..hn {
        let size = if ladder.degree(h) == 2 { k.div_ceil(2) } else { (k - 1) / 2 };
        groups.push(next..next + size);
        next += size;
    }
    let mut edges = Vec::new();
    for g in &groups {
        edges.extend(g.clone().tuple_combinations::<(Vertex, Vertex)>());
    }
    for (h1, h2) in ladder.edges() {
        edges.extend(groups[h1].clone().cartesian_product(groups[h2].clone()));
    }
    Graph::from_edges(next, edges)
}

/// The complement of three disjoint paths `a_i b_i c_i` (`i = 1, 2, 3`),
/// labelled `a1, b1, c1, a2, …`.
pub fn gen_complement_three_paths() -> Graph {
    let labels = (1..=3)
        .flat_map(|i| ["a", "b", "c"].map(|p| format!("{p}{i}")))
        .collect();
    let path_edge = |u: usize, v: usize| u / 3 == v / 3 && u.abs_diff(v) == 1;
    let edges = (0..9).tuple_combinations().filter(|&(u, v)| !path_edge(u, v));
    Graph::with_labels(labels, edges).expect("valid edges")
}

/// Disjoint union; vertices of `h` are shifted past those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let edges = g.edges().chain(h.edges().map(|(u, v)| (u + off, v + off)));
    Graph::from_edges(g.n() + h.n(), edges).expect("valid edges")
}

/// Named small graphs used as fixed test inputs.
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=6 {
        out.push((format!("K{n}"), complete(n)));
    }
    for n in 2..=8 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n).expect("n >= 3")));
    }
    out.push(("petersen".into(), petersen()));
    out.push(("K3,3".into(), complete_bipartite(3, 3)));
    out.push(("K2,4".into(), complete_bipartite(2, 4)));
    out.push(("K1,5".into(), complete_bipartite(1, 5)));
    out.push(("E4".into(), Graph::empty(4)));
    out.push(("K3+K3".into(), disjoint_union(&complete(3), &complete(3))));
    out.push(("K4+P3".into(), disjoint_union(&complete(4), &path(3))));
    for (r, c) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        out.push((format!("grid{r}x{c}"), gen_grid(r, c).expect("valid size")));
    }
    out.push(("TK4".into(), subdivided_complete(4)));
    out.push(("ladder2".into(), gen_ladder(2).expect("valid")));
    out.push(("ladder3".into(), gen_ladder(3).expect("valid")));
    out.push(("ladder_lex3_2".into(), gen_ladder_lex(3, 2).expect("valid")));
    out.push(("parallel_paths3_1".into(), gen_parallel_paths(3, 1).expect("valid").0));
    out.push(("parallel_paths2_2".into(), gen_parallel_paths(2, 2).expect("valid").0));
    out.push(("block_tree2_2_1".into(), gen_block_tree(2, 2, 1).expect("valid").0));
    out.push(("block_tree3_2_1".into(), gen_block_tree(3, 2, 1).expect("valid").0));
    out.push(("complement_three_paths".into(), gen_complement_three_paths()));
    out
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n).tuple_combinations().filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, edges).expect("valid edges")
}

/// A uniformly paired `d`-regular multigraph, retried until simple.
/// `None` when `n * d` is odd, `d >= n`, or no simple pairing turns up.
pub fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Option<Graph> {
    if (n * d) % 2 == 1 || d >= n.max(1) {
        return None;
    }
    let mut points: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..10_000 {
        points.shuffle(rng);
        let mut seen = std::collections::HashSet::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
        }
        return Some(Graph::from_edges(n, seen).expect("valid edges"));
    }
    None
}

/// Random bipartite graph with parts `0..a` and `a..a+b`.
pub fn random_bipartite<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..a).cartesian_product(a..a + b).filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(a + b, edges).expect("valid edges")
}

/// Adds random edges from each vertex to `allowed` partners until every
/// degree is at least `d`. Fails if a vertex runs out of partners.
fn augment_min_degree<R, F>(edges: &mut Vec<(Vertex, Vertex)>, n: usize, d: usize, allowed: F, rng: &mut R) -> bool
where
    R: Rng,
    F: Fn(Vertex, Vertex) -> bool,
{
    let mut adj = vec![std::collections::BTreeSet::new(); n];
    for &(u, v) in edges.iter() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    for v in 0..n {
        while adj[v].len() < d {
            let options: Vec<Vertex> = (0..n).filter(|&w| w != v && allowed(v, w) && !adj[v].contains(&w)).collect();
            let Some(&w) = options.as_slice().choose(rng) else { return false };
            adj[v].insert(w);
            adj[w].insert(v);
            edges.push((v, w));
        }
    }
    true
}

/// Two random dense clusters sharing exactly `overlap` vertices, each vertex
/// brought up to degree `min_deg` inside its own cluster(s).
fn glued_clusters<R: Rng>(a: usize, b: usize, overlap: usize, p: f64, min_deg: usize, rng: &mut R) -> Option<Graph> {
    let n = a + b - overlap;
    let in_first = |v: Vertex| v < a;
    let in_second = |v: Vertex| v >= a - overlap;
    let same = |u: Vertex, v: Vertex| (in_first(u) && in_first(v)) || (in_second(u) && in_second(v));
    let mut edges: Vec<_> = (0..n).tuple_combinations().filter(|&(u, v)| same(u, v) && rng.random_bool(p)).collect();
    augment_min_degree(&mut edges, n, min_deg, same, rng).then(|| Graph::from_edges(n, edges).expect("valid edges"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `δ >= 2k` forces a connected `(k+1)`-block of size `>= δ + 1 - k`.
    MinDeg,
    /// `k`-connected with `δ > 3k/2 - 1`: `V` is a `(k+1)`-block or there are
    /// two connected ones of size `>= δ + 1`.
    ConnMinDeg,
    /// `k`-connected, triangle-free, `δ >= k + 1`: as above with size `>= 2δ`.
    TriangleFree,
    /// `k`-connected and `k`-regular: no `(k+1)`-block unless `G = K^{k+1}`.
    KRegular,
    /// Average degree `>= 3k` forces a connected `(k+1)`-block of size
    /// `>= δ + 1 - k`.
    AvgDeg,
    /// Average degree `>= 2(k-1) > 0` gives a minor with a connected
    /// `(k+1)`-block.
    Minor,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::MinDeg,
        TheoremId::ConnMinDeg,
        TheoremId::TriangleFree,
        TheoremId::KRegular,
        TheoremId::AvgDeg,
        TheoremId::Minor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::MinDeg => "min_deg",
            TheoremId::ConnMinDeg => "conn_min_deg",
            TheoremId::TriangleFree => "triangle_free",
            TheoremId::KRegular => "k_regular",
            TheoremId::AvgDeg => "avg_deg",
            TheoremId::Minor => "minor",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Vacuous,
    Violated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Vacuous => "vacuous",
            Verdict::Violated => "VIOLATED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockInfo {
    pub size: usize,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub preconditions: Vec<Condition>,
    /// `None` when the preconditions fail.
    pub conclusion: Option<bool>,
    /// The `(k+1)`-blocks of the graph the conclusion was checked on.
    pub blocks: Vec<BlockInfo>,
    /// `(n, m)` of the reduced minor, for [`TheoremId::Minor`].
    pub minor: Option<(usize, usize)>,
    pub verdict: Verdict,
}

fn block_infos(g: &Graph, k: usize) -> Result<(Vec<VertexSet>, Vec<BlockInfo>)> {
    let hk = preprocess(g, k)?;
    let (blocks, _) = find_blocks(g, k, &hk)?;
    let infos = blocks
        .iter()
        .map(|b| BlockInfo {
            size: b.len(),
            connected: g.is_connected_subset(b),
        })
        .collect();
    Ok((blocks.blocks().to_vec(), infos))
}

fn cond(name: String, holds: bool) -> Condition {
    Condition { name, holds }
}

/// Evaluates one theorem on `g`. The verdict is `Violated` only when every
/// precondition holds and the conclusion fails.
pub fn check_theorem(g: &Graph, theorem: TheoremId, k: usize) -> Result<TheoremReport> {
    if theorem == TheoremId::Minor {
        return minor_minimize_check(g, k);
    }
    let mut report = TheoremReport {
        theorem,
        k,
        n: g.n(),
        m: g.m(),
        preconditions: Vec::new(),
        conclusion: None,
        blocks: Vec::new(),
        minor: None,
        verdict: Verdict::Vacuous,
    };
    let Ok(stats) = degree_stats(g) else {
        report.preconditions.push(cond("nonempty graph".into(), false));
        return Ok(report);
    };
    let delta = stats.min_degree;
    let (n, m) = (g.n(), g.m());
    let pre = &mut report.preconditions;
    match theorem {
        TheoremId::MinDeg => pre.push(cond(format!("δ = {delta} >= 2k = {}", 2 * k), delta >= 2 * k)),
        TheoremId::AvgDeg => pre.push(cond(
            format!("d = {:.3} >= 3k = {}", stats.avg_degree, 3 * k),
            2 * m >= 3 * k * n,
        )),
        TheoremId::ConnMinDeg => {
            pre.push(cond(format!("{k}-connected"), is_k_connected(g, k)));
            pre.push(cond(format!("δ = {delta} > 3k/2 - 1"), 2 * delta + 2 > 3 * k));
        }
        TheoremId::TriangleFree => {
            pre.push(cond(format!("{k}-connected"), is_k_connected(g, k)));
            pre.push(cond(format!("δ = {delta} >= k + 1"), delta > k));
            pre.push(cond("triangle-free".into(), !stats.has_triangle));
        }
        TheoremId::KRegular => {
            pre.push(cond(format!("{k}-connected"), is_k_connected(g, k)));
            pre.push(cond(format!("{k}-regular"), g.vertices().all(|v| g.degree(v) == k)));
        }
        TheoremId::Minor => unreachable!(),
    }
    if !report.preconditions.iter().all(|c| c.holds) {
        return Ok(report);
    }
    let (blocks, infos) = block_infos(g, k + 1)?;
    let whole = blocks.len() == 1 && blocks[0].len() == n;
    let count_at_least = |size: usize| infos.iter().filter(|b| b.connected && b.size >= size).count();
    let holds = match theorem {
        TheoremId::MinDeg | TheoremId::AvgDeg => count_at_least((delta + 1).saturating_sub(k)) >= 1,
        TheoremId::ConnMinDeg => whole || count_at_least(delta + 1) >= 2,
        TheoremId::TriangleFree => whole || count_at_least(2 * delta) >= 2,
        TheoremId::KRegular => blocks.is_empty() || (g.is_complete() && n == k + 1),
        TheoremId::Minor => unreachable!(),
    };
    report.blocks = infos;
    report.conclusion = Some(holds);
    report.verdict = if holds { Verdict::Holds } else { Verdict::Violated };
    Ok(report)
}

/// Shrinks `g` by single vertex deletions, then edge deletions, then edge
/// contractions, each applied only while `m >= (k-1) n` survives, until no
/// single operation does. Returns the minor and the number of operations.
pub fn minor_reduce(g: &Graph, k: usize) -> (Graph, usize) {
    let keeps = |n: usize, m: usize| n >= 1 && m >= (k - 1) * n;
    let mut g = g.clone();
    let mut ops = 0;
    loop {
        let (n, m) = (g.n(), g.m());
        if let Some(v) = g.vertices().find(|&v| keeps(n - 1, m - g.degree(v))) {
            g = g.delete_vertex(v);
        } else if keeps(n, m.saturating_sub(1)) && m > 0 {
            let (u, v) = g.edges().next().expect("m > 0");
            g = g.delete_edge(u, v);
        } else if let Some((u, v)) = contractible(&g, |common| keeps(n - 1, m - 1 - common)) {
            g = g.contract_edge(u, v);
        } else {
            return (g, ops);
        }
        ops += 1;
    }
}

fn contractible(g: &Graph, keeps: impl Fn(usize) -> bool) -> Option<(Vertex, Vertex)> {
    g.edges().find(|&(u, v)| keeps(g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count()))
}

/// The minor theorem: if `m >= (k-1) n` with `k >= 2`, a minor reduced as in
/// [`minor_reduce`] has a connected `(k+1)`-block.
pub fn minor_minimize_check(g: &Graph, k: usize) -> Result<TheoremReport> {
    let (n, m) = (g.n(), g.m());
    let mut report = TheoremReport {
        theorem: TheoremId::Minor,
        k,
        n,
        m,
        preconditions: vec![
            cond("2(k-1) > 0".into(), k >= 2),
            cond(format!("d >= 2(k-1) = {}", 2 * k.saturating_sub(1)), n > 0 && m >= k.saturating_sub(1) * n),
        ],
        conclusion: None,
        blocks: Vec::new(),
        minor: None,
        verdict: Verdict::Vacuous,
    };
    if !report.preconditions.iter().all(|c| c.holds) {
        return Ok(report);
    }
    let (h, ops) = minor_reduce(g, k);
    log::debug!("minor reduction: {ops} operations, {} vertices left", h.n());
    let (_, infos) = block_infos(&h, k + 1)?;
    let holds = infos.iter().any(|b| b.connected);
    report.minor = Some((h.n(), h.m()));
    report.blocks = infos;
    report.conclusion = Some(holds);
    report.verdict = if holds { Verdict::Holds } else { Verdict::Violated };
    Ok(report)
}

/// Largest graph produced by [`theorem_sample`].
pub const ENSEMBLE_MAX_VERTICES: usize = 40;

/// A random graph on at most 40 vertices on which every precondition of
/// `theorem` at this `k` holds, by construction or by rejection.
pub fn theorem_sample<R: Rng>(theorem: TheoremId, k: usize, rng: &mut R) -> Result<Graph> {
    let max_n = ENSEMBLE_MAX_VERTICES;
    for _ in 0..2_000 {
        let candidate = match theorem {
            TheoremId::MinDeg => {
                let d = 2 * k;
                let a = rng.random_range(d + 1..=max_n / 2);
                let b = rng.random_range(d + 1..=max_n / 2);
                let overlap = rng.random_range(0..=k);
                glued_clusters(a, b, overlap, rng.random_range(0.05..0.5), d, rng)
            }
            TheoremId::ConnMinDeg => {
                let d = (3 * k).saturating_sub(2) / 2 + 1;
                let a = rng.random_range(d + 1..=max_n / 2);
                let b = rng.random_range(d + 1..=max_n / 2);
                glued_clusters(a, b, k, rng.random_range(0.3..0.9), d, rng)
            }
            TheoremId::TriangleFree => {
                let a = rng.random_range(k + 1..=max_n / 2);
                let b = rng.random_range(k + 1..=max_n / 2);
                let g = random_bipartite(a, b, rng.random_range(0.2..0.8), rng);
                let mut edges: Vec<_> = g.edges().collect();
                let cross = |u: Vertex, v: Vertex| (u < a) != (v < a);
                augment_min_degree(&mut edges, a + b, k + 1, cross, rng)
                    .then(|| Graph::from_edges(a + b, edges).expect("valid edges"))
            }
            TheoremId::KRegular => {
                let n = if k <= 1 { k + 1 } else { rng.random_range(k + 1..=max_n) };
                random_regular(n, k, rng)
            }
            TheoremId::AvgDeg => {
                let core = rng.random_range((3 * k + 2).min(max_n)..=max_n);
                let tail = rng.random_range(0..=(max_n - core).min(4));
                let n = core + tail;
                let mut edges: Vec<_> = (0..core)
                    .tuple_combinations()
                    .filter(|_| rng.random_bool(0.5))
                    .collect();
                edges.extend((core..n).map(|v| (v - 1, v)));
                let mut missing: Vec<_> = (0..core).tuple_combinations().filter(|e| !edges.contains(e)).collect();
                missing.shuffle(rng);
                let need = (3 * k * n).div_ceil(2);
                let have = edges.len();
                edges.extend(missing.into_iter().take(need.saturating_sub(have)));
                Some(Graph::from_edges(n, edges).expect("valid edges"))
            }
            TheoremId::Minor => {
                let n = rng.random_range((2 * k).max(3)..=max_n);
                let target = k.saturating_sub(1) * n;
                let mut all: Vec<_> = (0..n).tuple_combinations().collect();
                all.shuffle(rng);
                let extra = rng.random_range(0..=n / 2);
                Some(Graph::from_edges(n, all.into_iter().take(target + extra)).expect("valid edges"))
            }
        };
        let Some(g) = candidate else { continue };
        if check_preconditions(&g, theorem, k)? {
            return Ok(g);
        }
    }
    Err(Error::Construction(format!(
        "no sample satisfying the {} preconditions at k = {k}",
        theorem.as_str()
    )))
}

fn check_preconditions(g: &Graph, theorem: TheoremId, k: usize) -> Result<bool> {
    let stats = degree_stats(g)?;
    let (n, m, delta) = (g.n(), g.m(), stats.min_degree);
    Ok(match theorem {
        TheoremId::MinDeg => delta >= 2 * k,
        TheoremId::AvgDeg => 2 * m >= 3 * k * n,
        TheoremId::ConnMinDeg => 2 * delta + 2 > 3 * k && is_k_connected(g, k),
        TheoremId::TriangleFree => delta > k && !stats.has_triangle && is_k_connected(g, k),
        TheoremId::KRegular => g.vertices().all(|v| g.degree(v) == k) && is_k_connected(g, k),
        TheoremId::Minor => k >= 2 && m >= (k - 1) * n,
    })
}
