//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Run with `cargo test -p kblocks --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kblocks::analysis::{theta2_scan, Theta2Scan};
use kblocks::corpus::{self, TheoremId, Verdict};
use kblocks::graph::strip_isolated;
use kblocks::*;

const SEED: u64 = 0x6b_626c_6f63;
const RANDOM_SMALL_GRAPHS: usize = 500;
const RANDOM_SMALL_MAX_N: usize = 7;
const CORPUS_MAX_N: usize = 12;
const DUALITY_GRAPHS: usize = 100;
const DUALITY_MAX_N: usize = 30;
const APEX_TIME_LIMIT: Duration = Duration::from_secs(120);
const THEOREM_SAMPLES: usize = 100;
const THEOREM_MAX_K: usize = 5;
const TANGLE_SETS: usize = 20;
const TANGLE_MAX_K: usize = 4;
const TANGLE_MAX_N: usize = 9;
const KAPPA_MAX_N: usize = 8;

struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn small_graphs() -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out: Vec<(String, Graph)> = (0..RANDOM_SMALL_GRAPHS)
        .map(|i| {
            let n = rng.random_range(1..=RANDOM_SMALL_MAX_N);
            let p = [0.1, 0.25, 0.4, 0.55, 0.7, 0.85, 1.0][i % 7];
            (format!("gnp#{i}(n={n},p={p})"), corpus::gnp(n, p, &mut rng))
        })
        .collect();
    out.extend(corpus::small_corpus().into_iter().filter(|(_, g)| g.n() <= CORPUS_MAX_N));
    out
}

fn blocks_of(g: &Graph, k: usize) -> (BlockSet, BlockDecomposition) {
    let hk = preprocess(g, k).expect("k >= 1");
    find_blocks(g, k, &hk).expect("valid input")
}

fn oracle_equivalence(graphs: &[(String, Graph)]) -> Outcome {
    let mut o = Outcome::new();
    let budget = OracleBudget::default();
    for (name, g) in graphs {
        for k in 1..=g.n().max(1) {
            let (found, _) = blocks_of(g, k);
            let expected = oracle_blocks(g, k, &budget).expect("within budget");
            o.check(found == expected, || format!("{name} k={k}: {found:?} != {expected:?}"));
        }
    }
    o
}

fn step_bound(graphs: &[(String, Graph)]) -> Outcome {
    let mut o = Outcome::new();
    for (name, g) in graphs {
        let (h, _) = strip_isolated(g);
        for k in 1..h.n() {
            let (_, d) = blocks_of(&h, k);
            let bound = 4 * (h.n() - k);
            o.check(d.step_count() <= bound, || {
                format!("{name} k={k}: {} steps > {bound}", d.step_count())
            });
        }
    }
    o
}

fn witness_bound(graphs: &[(String, Graph)]) -> Outcome {
    let mut o = Outcome::new();
    for (name, g) in graphs {
        for k in 1..=g.n() {
            let (blocks, _) = blocks_of(g, k);
            match decide_k_block(g, k).expect("k >= 1") {
                Decision::Yes(x) => {
                    o.check(!blocks.is_empty(), || format!("{name} k={k}: yes but no blocks"));
                    o.check(verify_certificate(g, &x, k).unwrap(), || format!("{name} k={k}: bad certificate"));
                }
                Decision::No(w) => {
                    o.check(blocks.is_empty(), || format!("{name} k={k}: no but blocks exist"));
                    if k < g.n() {
                        let bound = 4 * (g.n() - k) - 1;
                        o.check(w.len() <= bound, || format!("{name} k={k}: witness {} > {bound}", w.len()));
                    }
                    let v = verify_witness(g, &w);
                    let exhaustive_expected = kblocks::decision::EXHAUSTIVE_LIMIT
                        >= (0..k as u64).fold(1u64, |acc, i| acc.saturating_mul(g.n() as u64 - i) / (i + 1));
                    o.check(v.valid && v.exhaustive == exhaustive_expected, || format!("{name} k={k}: {v:?}"));
                }
            }
        }
    }
    o
}

fn duality() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    for i in 0..DUALITY_GRAPHS {
        let n = rng.random_range(1..=DUALITY_MAX_N);
        let p = rng.random_range(0.05..0.9);
        let g = corpus::gnp(n, p, &mut rng);
        let (beta, d) = block_width_certificate(&g).expect("nonempty graph");
        o.check(d.adhesion() <= beta && d.width() <= beta, || {
            format!("#{i}: beta {beta}, adhesion {}, width {}", d.adhesion(), d.width())
        });
        o.check(blocks_of(&g, beta + 1).0.is_empty(), || format!("#{i}: a {}-block exists", beta + 1));
        o.check(beta == 0 || !blocks_of(&g, beta).0.is_empty(), || format!("#{i}: no {beta}-block"));
    }
    o
}

fn paper_examples() -> (Outcome, Duration) {
    let mut o = Outcome::new();

    let grid = corpus::gen_grid(5, 5).unwrap();
    let inner: VertexSet = (1..4).cartesian_product(1..4).map(|(r, c)| r * 5 + c).collect();
    let (b4, _) = blocks_of(&grid, 4);
    o.check(b4.blocks() == [inner], || format!("5x5 grid 4-blocks: {b4:?}"));
    o.check(blocks_of(&grid, 5).0.is_empty(), || "5x5 grid has a 5-block".into());

    let (apex, x) = corpus::gen_grid_with_apex(5, 25, 25).unwrap();
    let start = Instant::now();
    let (b5, _) = blocks_of(&apex, 5);
    let elapsed = start.elapsed();
    o.check(b5.blocks() == [x], || format!("apex grid 5-blocks: {} found", b5.len()));
    o.check(elapsed < APEX_TIME_LIMIT, || format!("apex grid took {elapsed:?}"));

    for k in [4, 6] {
        let g = corpus::gen_ladder_lex(k, 4).unwrap();
        let delta = g.vertices().map(|v| g.degree(v)).min().unwrap();
        o.check(vertex_connectivity(&g) == k, || format!("ladder_lex({k},4) connectivity"));
        o.check(delta == 3 * k / 2 - 1, || format!("ladder_lex({k},4) min degree {delta}"));
        o.check(blocks_of(&g, k + 1).0.is_empty(), || format!("ladder_lex({k},4) has a {}-block", k + 1));
    }

    let g = corpus::gen_ladder_cliques(5, 4).unwrap();
    let (b6, _) = blocks_of(&g, 6);
    o.check(b6.len() == 2 && b6.iter().all(|b| b.len() == 6), || format!("ladder_cliques(5,4) 6-blocks: {b6:?}"));

    let g = corpus::gen_complement_three_paths();
    o.check(vertex_connectivity(&g) >= 6, || "complement of three paths is not 6-connected".into());
    o.check(blocks_of(&g, 7).0.is_empty(), || "complement of three paths has a 7-block".into());
    let catalog = enumerate_separations(&g, 6, &OracleBudget::default()).unwrap();
    let (a1, b1, c1) = (0, 1, 2);
    let s = make_separation(
        &g,
        g.vertex_set().difference(&[b1].into()),
        g.vertex_set().difference(&[a1, c1].into()),
    )
    .unwrap();
    o.check(is_t_shaped(&g, &s, 6, &catalog).unwrap().is_none(), || "(A,B) is T-shaped".into());
    let rev = is_t_shaped(&g, &s.reversed(), 6, &catalog).unwrap();
    o.check(rev.is_some_and(|w| w.is_valid(&g, 6)), || "(B,A) is not T-shaped".into());

    let (g, x) = corpus::gen_parallel_paths(4, 4).unwrap();
    o.check(blocks_of(&g, 4).0.contains(&x), || "parallel paths core is not a 4-block".into());

    let (g, parts) = corpus::gen_block_tree(4, 3, 1).unwrap();
    let (b3, _) = blocks_of(&g, 3);
    let mut expected = parts.clone();
    expected.sort();
    o.check(b3.blocks() == expected.as_slice(), || format!("block tree 3-blocks: {b3:?}"));

    (o, elapsed)
}

fn theorems() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for theorem in TheoremId::ALL {
        for i in 0..THEOREM_SAMPLES {
            let k = 2 + i % (THEOREM_MAX_K - 1);
            let g = corpus::theorem_sample(theorem, k, &mut rng).expect("sampler succeeds");
            let report = corpus::check_theorem(&g, theorem, k).unwrap();
            o.check(report.verdict == Verdict::Holds && g.n() <= corpus::ENSEMBLE_MAX_VERTICES, || {
                format!("{} k={k} n={} m={}: {:?}", theorem.as_str(), g.n(), g.m(), report.verdict)
            });
        }
    }
    o
}

fn both_scans_agree(o: &mut Outcome, g: &Graph, k: usize, oriented: &[Separation], what: &str) {
    let budget = OracleBudget::default();
    let pruned = theta2_scan(g, k, oriented, Theta2Scan::Pruned, &budget).unwrap();
    if let Ok(unpruned) = theta2_scan(g, k, oriented, Theta2Scan::Unpruned, &budget) {
        o.check(pruned.is_some() == unpruned.is_some(), || format!("{what}: pruned and unpruned scans disagree"));
    }
}

fn tangles() -> (Outcome, usize) {
    let mut o = Outcome::new();
    let budget = OracleBudget::default();

    let k7 = corpus::complete(7);
    let catalog = enumerate_separations(&k7, 3, &budget).unwrap();
    let out = tangle_from_set(&k7, &k7.vertex_set(), 4, &catalog, &budget).unwrap();
    o.check(matches!(out, TangleOutcome::Tangle(_)), || format!("K7: {out:?}"));

    let tk6 = corpus::subdivided_complete(6);
    let catalog = enumerate_separations(&tk6, 4, &budget).unwrap();
    match tangle_from_set(&tk6, &VertexSet::range(6), 5, &catalog, &budget).unwrap() {
        TangleOutcome::CoveringTriple(t) => {
            let all_below = t.iter().all(|s| s.order() < 5);
            let mut covered = t[0].a().union(t[1].a()).union(t[2].a());
            covered = covered.intersection(&tk6.vertex_set());
            let edges = tk6.edges().all(|(u, v)| t.iter().any(|s| s.a().contains(u) && s.a().contains(v)));
            o.check(all_below && covered.len() == tk6.n() && edges, || format!("TK6: invalid triple {t:?}"));
        }
        other => o.check(false, || format!("TK6: {other:?}")),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < TANGLE_SETS * 2 && attempts < 10_000 {
        attempts += 1;
        let n = rng.random_range(5..=TANGLE_MAX_N);
        let k = rng.random_range(2..=TANGLE_MAX_K);
        let g = corpus::gnp(n, rng.random_range(0.3..0.9), &mut rng);
        let (blocks, _) = blocks_of(&g, k);
        let Some(block) = blocks.blocks().choose(&mut rng) else { continue };
        let min_size = 3 * (k - 1) / 2 + 1;
        if block.len() < min_size {
            continue;
        }
        let size = rng.random_range(min_size.max(k)..=block.len());
        let mut members = block.as_slice().to_vec();
        members.shuffle(&mut rng);
        let x: VertexSet = members[..size].iter().copied().collect();
        let catalog = enumerate_separations(&g, k - 1, &budget).unwrap();
        let what = format!("n={n} k={k} |X|={size}");
        match tangle_from_set(&g, &x, k, &catalog, &budget).unwrap() {
            TangleOutcome::Tangle(t) => both_scans_agree(&mut o, &g, k, &t.oriented, &what),
            other => o.check(false, || format!("{what}: {other:?}")),
        }
        tested += 1;
    }
    o.check(tested >= TANGLE_SETS, || format!("only {tested} inseparable sets sampled"));
    (o, tested)
}

fn kappa_agreement(graphs: &[(String, Graph)]) -> Outcome {
    let mut o = Outcome::new();
    for (name, g) in graphs.iter().filter(|(_, g)| g.n() <= KAPPA_MAX_N) {
        for (x, y) in g.vertices().tuple_combinations() {
            if g.has_edge(x, y) {
                continue;
            }
            let expected = oracle_kappa(g, x, y).unwrap().expect("non-adjacent");
            for k in 0..=g.n() {
                let ok = match kappa_bounded(g, x, y, k).unwrap() {
                    KappaResult::AtLeast(_) => expected >= k,
                    KappaResult::Exactly { value, separation } => {
                        value == expected && expected < k && separation.order() == value && separation.separates(x, y)
                    }
                };
                o.check(ok, || format!("{name} ({x},{y}) k={k}: expected κ = {expected}"));
            }
        }
    }
    o
}

fn report(id: usize, title: &str, o: &Outcome, extra: &str, start: Instant) -> bool {
    let ok = o.failures.is_empty();
    println!(
        "criterion {id} {}: {title} ({} checks, {} failures{extra}, {:.1?})",
        if ok { "PASS" } else { "FAIL" },
        o.checks,
        o.failures.len(),
        start.elapsed()
    );
    for f in o.failures.iter().take(10) {
        println!("    {f}");
    }
    ok
}

fn main() -> ExitCode {
    let graphs = small_graphs();
    let mut all = true;

    let t = Instant::now();
    all &= report(1, "find_blocks equals the oracle", &oracle_equivalence(&graphs), "", t);
    let t = Instant::now();
    all &= report(2, "steps <= 4(n-k)", &step_bound(&graphs), "", t);
    let t = Instant::now();
    all &= report(3, "witness size <= 4(n-k)-1 and valid", &witness_bound(&graphs), "", t);
    let t = Instant::now();
    all &= report(4, "block number equals block-width", &duality(), "", t);
    let t = Instant::now();
    let (o, apex) = paper_examples();
    all &= report(5, "example graphs", &o, &format!(", apex grid {apex:.1?}"), t);
    let t = Instant::now();
    all &= report(6, "degree theorems hold on seeded samples", &theorems(), "", t);
    let t = Instant::now();
    let (o, sets) = tangles();
    all &= report(7, "inseparable sets induce tangles", &o, &format!(", {sets} random sets"), t);
    let t = Instant::now();
    all &= report(8, "bounded flow agrees with separator enumeration", &kappa_agreement(&graphs), "", t);

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
