use std::error::Error as StdError;
use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use kblocks::analysis::TShapeWitness;
use kblocks::blocks::{block_number_from, find_all_blocks_from};
use kblocks::corpus::{self, TheoremId, TheoremReport, Verdict};
use kblocks::graph::sorted_labels;
use kblocks::io::{self, KappaEntryJson, NodeJson, Report, SeparationJson};
use kblocks::*;

use crate::args::{Cli, Command, Family, Format, Global, VerifyArgs};

type Res<T> = std::result::Result<T, Box<dyn StdError>>;

const YES: u8 = 0;
const NO: u8 = 3;

fn status(ok: bool) -> u8 {
    if ok {
        YES
    } else {
        NO
    }
}

pub fn run(cli: &Cli) -> Res<u8> {
    let gl = &cli.global;
    match &cli.command {
        Command::Gen { family } => gen(gl, family),
        Command::Theorem { name, k, samples: Some(count) } => theorem_samples(gl, name, *k, *count),
        cmd => {
            let g = read_graph(gl)?;
            log::info!("read graph with {} vertices and {} edges", g.n(), g.m());
            match cmd {
                Command::Blocks { k } => blocks(gl, &g, *k),
                Command::AllBlocks => all_blocks(gl, &g),
                Command::Decide { k } => decide(gl, &g, *k),
                Command::Beta => beta(gl, &g),
                Command::Bw => bw(gl, &g),
                Command::Witness { k } => witness(gl, &g, *k),
                Command::Tangle { k, set } => tangle(gl, &g, *k, set.as_deref()),
                Command::Tshaped { k } => tshaped(gl, &g, *k),
                Command::Verify(args) => verify(gl, &g, args),
                Command::OracleCheck { k } => oracle_check(gl, &g, *k),
                Command::Kappa { pair } => kappa_cmd(gl, &g, pair.as_deref()),
                Command::Theorem { name, k, .. } => theorem_input(gl, &g, name, *k),
                Command::Gen { .. } => unreachable!("handled above"),
            }
        }
    }
}

fn read_text(path: Option<&Path>) -> Res<String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graph(gl: &Global) -> Res<Graph> {
    let text = read_text(gl.input.as_deref())?;
    io::parse_graph(&text).map_err(|e| match &gl.input {
        Some(p) => format!("{}: {e}", p.display()).into(),
        None => e.into(),
    })
}

fn emit(gl: &Global, text: &str) -> Res<()> {
    match &gl.output {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn format(gl: &Global, default: Format, allowed: &[Format]) -> Res<Format> {
    let f = gl.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(format!("format {f:?} is not available for this command").to_lowercase().into());
    }
    Ok(f)
}

fn budget(gl: &Global) -> OracleBudget {
    let mut b = OracleBudget::default();
    if let Some(w) = gl.budget {
        b.max_work = w;
    }
    b
}

fn need_k(k: usize) -> Res<()> {
    if k == 0 {
        return Err("k must be at least 1".into());
    }
    Ok(())
}

#[derive(Serialize)]
struct KappaTablePayload {
    kappa_table: Vec<KappaEntryJson>,
}

/// The κ-table from `--kappa-cache`, computed and written on first use.
fn cached_table(gl: &Global, g: &Graph) -> Res<Option<KappaTable>> {
    let Some(path) = &gl.kappa_cache else { return Ok(None) };
    if path.exists() {
        log::info!("reading κ-table from {}", path.display());
        let text = read_text(Some(path))?;
        let table = io::parse_kappa_table_json(g, &text).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(Some(table));
    }
    let table = preprocess_full(g);
    let report = Report::new("kappa", g, None, KappaTablePayload { kappa_table: io::kappa_table_json(&table) });
    fs::write(path, report.to_json()).map_err(|e| format!("{}: {e}", path.display()))?;
    log::info!("wrote κ-table to {}", path.display());
    Ok(Some(table))
}

fn hk(gl: &Global, g: &Graph, k: usize) -> Res<InsepGraph> {
    Ok(match cached_table(gl, g)? {
        Some(t) => hk_view(&t, k)?,
        None => preprocess(g, k)?,
    })
}

fn labels_line(g: &Graph, s: &VertexSet) -> String {
    sorted_labels(g, s).join(" ")
}

fn separation_line(g: &Graph, s: &Separation) -> String {
    format!("{} | {} (order {})", labels_line(g, s.a()), labels_line(g, s.b()), s.order())
}

fn lookup_all(g: &Graph, labels: &[String]) -> Res<VertexSet> {
    labels
        .iter()
        .map(|l| g.vertex_by_label(l).ok_or_else(|| format!("unknown vertex label {l:?}").into()))
        .collect()
}

fn blocks(gl: &Global, g: &Graph, k: usize) -> Res<u8> {
    need_k(k)?;
    let f = format(gl, Format::Json, &[Format::Json, Format::Dot, Format::Text])?;
    let (found, d) = find_blocks(g, k, &hk(gl, g, k)?)?;
    #[derive(Serialize)]
    struct P {
        blocks: Vec<Vec<String>>,
        steps: usize,
        decomposition: Vec<NodeJson>,
    }
    let out = match f {
        Format::Json => Report::new(
            "blocks",
            g,
            Some(k),
            P {
                blocks: io::blocks_json(g, &found),
                steps: d.step_count(),
                decomposition: io::decomposition_json(g, &d, Some(&found)),
            },
        )
        .to_json(),
        Format::Dot => io::emit_dot(g, &d, Some(&found)),
        Format::Text => io::blocks_json(g, &found).iter().map(|b| b.join(" ") + "\n").collect(),
    };
    emit(gl, &out)?;
    Ok(YES)
}

fn all_blocks(gl: &Global, g: &Graph) -> Res<u8> {
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let table = match cached_table(gl, g)? {
        Some(t) => t,
        None => preprocess_full(g),
    };
    let all = find_all_blocks_from(g, &table);
    #[derive(Serialize)]
    struct Level {
        k: usize,
        blocks: Vec<Vec<String>>,
    }
    #[derive(Serialize)]
    struct P {
        all_blocks: Vec<Level>,
    }
    let levels: Vec<Level> = all
        .iter()
        .map(|(&k, b)| Level { k, blocks: io::blocks_json(g, b) })
        .collect();
    let out = match f {
        Format::Json => Report::new("all-blocks", g, None, P { all_blocks: levels }).to_json(),
        _ => levels
            .iter()
            .map(|l| {
                let sets: Vec<String> = l.blocks.iter().map(|b| b.join(" ")).collect();
                format!("{}: {}\n", l.k, sets.join(" | "))
            })
            .collect(),
    };
    emit(gl, &out)?;
    Ok(YES)
}

fn decide(gl: &Global, g: &Graph, k: usize) -> Res<u8> {
    need_k(k)?;
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let decision = decide_k_block(g, k)?;
    #[derive(Serialize)]
    struct P {
        has_block: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<Vec<String>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<SeparationJson>>,
    }
    let (payload, text) = match &decision {
        Decision::Yes(x) => (
            P { has_block: true, certificate: Some(sorted_labels(g, x)), witness: None },
            format!("yes: {}\n", labels_line(g, x)),
        ),
        Decision::No(w) => (
            P { has_block: false, certificate: None, witness: Some(io::witness_json(g, w)) },
            format!("no: witness of {} separations\n", w.len()),
        ),
    };
    let out = match f {
        Format::Json => Report::new("decide", g, Some(k), payload).to_json(),
        _ => text,
    };
    emit(gl, &out)?;
    Ok(status(decision.is_yes()))
}

fn witness(gl: &Global, g: &Graph, k: usize) -> Res<u8> {
    need_k(k)?;
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let w = match decide_k_block(g, k)? {
        Decision::Yes(x) => {
            return Err(format!("no witness exists: {{{}}} is {k}-inseparable", labels_line(g, &x)).into())
        }
        Decision::No(w) => w,
    };
    #[derive(Serialize)]
    struct P {
        witness: Vec<SeparationJson>,
    }
    let out = match f {
        Format::Json => Report::new("witness", g, Some(k), P { witness: io::witness_json(g, &w) }).to_json(),
        _ => w.separations().iter().map(|s| separation_line(g, s) + "\n").collect(),
    };
    emit(gl, &out)?;
    Ok(YES)
}

fn beta(gl: &Global, g: &Graph) -> Res<u8> {
    let f = format(gl, Format::Text, &[Format::Json, Format::Text])?;
    let b = match cached_table(gl, g)? {
        Some(t) => block_number_from(g, &t),
        None => block_number(g),
    };
    #[derive(Serialize)]
    struct P {
        beta: usize,
    }
    let out = match f {
        Format::Json => Report::new("beta", g, None, P { beta: b }).to_json(),
        _ => format!("{b}\n"),
    };
    emit(gl, &out)?;
    Ok(YES)
}

fn bw(gl: &Global, g: &Graph) -> Res<u8> {
    let f = format(gl, Format::Json, &[Format::Json, Format::Dot, Format::Text])?;
    let (b, d) = match cached_table(gl, g)? {
        Some(t) => {
            if g.n() == 0 {
                return Err("the empty graph has no block-width certificate".into());
            }
            let b = block_number_from(g, &t);
            (b, find_blocks(g, b + 1, &hk_view(&t, b + 1)?)?.1)
        }
        None => block_width_certificate(g)?,
    };
    #[derive(Serialize)]
    struct P {
        block_width: usize,
        adhesion: usize,
        width: usize,
        decomposition: Vec<NodeJson>,
    }
    let out = match f {
        Format::Json => Report::new(
            "bw",
            g,
            None,
            P {
                block_width: b,
                adhesion: d.adhesion(),
                width: d.width(),
                decomposition: io::decomposition_json(g, &d, None),
            },
        )
        .to_json(),
        Format::Dot => io::emit_dot(g, &d, None),
        Format::Text => format!("{b}\nadhesion {} width {}\n", d.adhesion(), d.width()),
    };
    emit(gl, &out)?;
    Ok(YES)
}

fn tangle(gl: &Global, g: &Graph, k: usize, set: Option<&[String]>) -> Res<u8> {
    need_k(k)?;
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let x = match set {
        Some(labels) => lookup_all(g, labels)?,
        None => g.vertex_set(),
    };
    let b = budget(gl);
    let catalog = enumerate_separations(g, k - 1, &b)?;
    let outcome = tangle_from_set(g, &x, k, &catalog, &b)?;
    let (kind, seps): (&str, Vec<&Separation>) = match &outcome {
        TangleOutcome::Tangle(t) => ("tangle", t.oriented.iter().collect()),
        TangleOutcome::Unorientable(s) => ("unorientable", vec![s]),
        TangleOutcome::CoveringTriple(t) => ("covering_triple", t.iter().collect()),
    };
    #[derive(Serialize)]
    struct P {
        set: Vec<String>,
        outcome: String,
        separations: Vec<SeparationJson>,
    }
    let out = match f {
        Format::Json => Report::new(
            "tangle",
            g,
            Some(k),
            P {
                set: sorted_labels(g, &x),
                outcome: kind.to_string(),
                separations: seps.iter().map(|s| io::separation_json(g, s)).collect(),
            },
        )
        .to_json(),
        _ => {
            let mut s = format!("{kind}: {} separations\n", seps.len());
            s.extend(seps.iter().map(|sep| separation_line(g, sep) + "\n"));
            s
        }
    };
    emit(gl, &out)?;
    Ok(status(matches!(outcome, TangleOutcome::Tangle(_))))
}

fn tshaped(gl: &Global, g: &Graph, k: usize) -> Res<u8> {
    need_k(k)?;
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let r = t_shaped_equivalence_report(g, k, &budget(gl))?;
    #[derive(Serialize)]
    struct Shape {
        target: SeparationJson,
        witness: SeparationJson,
    }
    #[derive(Serialize)]
    struct P {
        separations: usize,
        blocks: usize,
        all_separate_blocks: bool,
        none_t_shaped: bool,
        equivalent: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        non_separating: Option<SeparationJson>,
        t_shaped: Vec<Shape>,
    }
    let shape = |w: &TShapeWitness| Shape {
        target: io::separation_json(g, &w.target),
        witness: io::separation_json(g, &w.witness),
    };
    let out = match f {
        Format::Json => Report::new(
            "tshaped",
            g,
            Some(k),
            P {
                separations: r.separations,
                blocks: r.blocks,
                all_separate_blocks: r.all_separate_blocks,
                none_t_shaped: r.none_t_shaped,
                equivalent: r.equivalent(),
                non_separating: r.non_separating.as_ref().map(|s| io::separation_json(g, s)),
                t_shaped: r.t_shaped.iter().map(shape).collect(),
            },
        )
        .to_json(),
        _ => format!(
            "proper {k}-separations: {}\n{}-blocks: {}\nevery one separates two blocks: {}\nnone T-shaped: {}\nequivalent: {}\n",
            r.separations,
            k + 1,
            r.blocks,
            r.all_separate_blocks,
            r.none_t_shaped,
            r.equivalent()
        ),
    };
    emit(gl, &out)?;
    Ok(YES)
}

fn gen(gl: &Global, family: &Family) -> Res<u8> {
    format(gl, Format::Text, &[Format::Text])?;
    let mut rng = ChaCha8Rng::seed_from_u64(gl.seed);
    let g = match *family {
        Family::Complete { n } => corpus::complete(n),
        Family::Path { n } => corpus::path(n),
        Family::Cycle { n } => corpus::cycle(n)?,
        Family::Petersen => corpus::petersen(),
        Family::Grid { rows, cols } => corpus::gen_grid(rows, cols)?,
        Family::Apex { k, rows, cols } => corpus::gen_grid_with_apex(k, rows, cols)?.0,
        Family::ParallelPaths { n, k } => corpus::gen_parallel_paths(n, k)?.0,
        Family::BlockTree { n, k, depth } => corpus::gen_block_tree(n, k, depth)?.0,
        Family::Ladder { squares } => corpus::gen_ladder(squares)?,
        Family::LadderLex { k, squares } => corpus::gen_ladder_lex(k, squares)?,
        Family::LadderCliques { k, squares } => corpus::gen_ladder_cliques(k, squares)?,
        Family::ComplementThreePaths => corpus::gen_complement_three_paths(),
        Family::SubdividedComplete { n } => corpus::subdivided_complete(n),
        Family::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("edge probability {p} is outside [0, 1]").into());
            }
            corpus::gnp(n, p, &mut rng)
        }
        Family::Regular { n, d } => corpus::random_regular(n, d, &mut rng)
            .ok_or_else(|| format!("no {d}-regular graph on {n} vertices was found"))?,
    };
    emit(gl, &io::write_edge_list(&g))?;
    Ok(YES)
}

fn verify(gl: &Global, g: &Graph, args: &VerifyArgs) -> Res<u8> {
    let given = [
        args.witness.is_some(),
        args.decomposition.is_some(),
        args.kappa.is_some(),
        args.certificate.is_some(),
    ];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err("give exactly one of --witness, --decomposition, --kappa, --certificate".into());
    }
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let (ok, out) = if let Some(path) = &args.witness {
        verify_witness_file(g, path, f)?
    } else if let Some(path) = &args.decomposition {
        verify_decomposition_file(gl, g, path, args.k, f)?
    } else if let Some(path) = &args.kappa {
        verify_kappa_file(g, path, f)?
    } else {
        let labels = args.certificate.as_deref().unwrap_or_default();
        let k = args.k.ok_or("--certificate needs -k")?;
        need_k(k)?;
        let x = lookup_all(g, labels)?;
        let ok = verify_certificate(g, &x, k)?;
        #[derive(Serialize)]
        struct P {
            certificate: Vec<String>,
            valid: bool,
        }
        let out = match f {
            Format::Json => Report::new("verify", g, Some(k), P { certificate: sorted_labels(g, &x), valid: ok }).to_json(),
            _ => format!("{}\n", if ok { "valid" } else { "invalid" }),
        };
        (ok, out)
    };
    emit(gl, &out)?;
    Ok(status(ok))
}

fn with_path<T>(path: &Path, r: kblocks::Result<T>) -> Res<T> {
    r.map_err(|e| format!("{}: {e}", path.display()).into())
}

fn verify_witness_file(g: &Graph, path: &Path, f: Format) -> Res<(bool, String)> {
    let w = with_path(path, io::parse_witness_json(g, &read_text(Some(path))?))?;
    let v = verify_witness(g, &w);
    #[derive(Serialize)]
    struct P {
        valid: bool,
        exhaustive: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        counterexample: Option<Vec<String>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        problem: Option<String>,
    }
    let out = match f {
        Format::Json => Report::new(
            "verify",
            g,
            Some(w.k()),
            P {
                valid: v.valid,
                exhaustive: v.exhaustive,
                counterexample: v.counterexample.as_ref().map(|c| sorted_labels(g, c)),
                problem: v.problem.clone(),
            },
        )
        .to_json(),
        _ => match (&v.problem, &v.counterexample) {
            (Some(p), _) => format!("invalid: {p}\n"),
            (None, Some(c)) => format!("invalid: nothing separates {}\n", labels_line(g, c)),
            (None, None) => format!("valid{}\n", if v.exhaustive { " (exhaustive)" } else { "" }),
        },
    };
    Ok((v.valid, out))
}

fn verify_decomposition_file(gl: &Global, g: &Graph, path: &Path, k: Option<usize>, f: Format) -> Res<(bool, String)> {
    let text = read_text(Some(path))?;
    let d = with_path(path, io::parse_decomposition_json(g, &text))?;
    let k = match k {
        Some(k) => k,
        None => serde_json::from_str::<serde_json::Value>(&text)?
            .get("k")
            .and_then(serde_json::Value::as_u64)
            .ok_or("the decomposition report has no k; pass -k")? as usize,
    };
    need_k(k)?;
    let (found, _) = find_blocks(g, k, &hk(gl, g, k)?)?;
    let r = verify_decomposition(g, &d, k, &found)?;
    let clauses = [
        ("structure", &r.structure),
        ("edges_covered", &r.edges_covered),
        ("blocks_contained", &r.blocks_contained),
        ("blocks_are_leaves", &r.blocks_are_leaves),
    ];
    #[derive(Serialize)]
    struct ClauseJson {
        clause: String,
        result: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        detail: Option<String>,
    }
    #[derive(Serialize)]
    struct P {
        valid: bool,
        adhesion: usize,
        width: usize,
        k_complete: bool,
        clauses: Vec<ClauseJson>,
    }
    let detail = |c: &Clause| match c {
        Clause::Fail(why) => Some(why.clone()),
        _ => None,
    };
    let out = match f {
        Format::Json => Report::new(
            "verify",
            g,
            Some(k),
            P {
                valid: r.all_ok(),
                adhesion: r.adhesion,
                width: r.width,
                k_complete: r.k_complete,
                clauses: clauses
                    .iter()
                    .map(|(name, c)| ClauseJson { clause: name.to_string(), result: c.as_str().into(), detail: detail(c) })
                    .collect(),
            },
        )
        .to_json(),
        _ => {
            let mut s = format!("adhesion {} width {} k-complete {}\n", r.adhesion, r.width, r.k_complete);
            for (name, c) in clauses {
                s += &match detail(c) {
                    Some(why) => format!("{name}: fail: {why}\n"),
                    None => format!("{name}: {}\n", c.as_str()),
                };
            }
            s
        }
    };
    Ok((r.all_ok(), out))
}

fn verify_kappa_file(g: &Graph, path: &Path, f: Format) -> Res<(bool, String)> {
    let table = with_path(path, io::parse_kappa_table_json(g, &read_text(Some(path))?))?;
    #[derive(Serialize)]
    struct Mismatch {
        u: String,
        v: String,
        stated: usize,
        actual: usize,
    }
    let mut mismatches = Vec::new();
    for (u, v, stated, _) in table.entries() {
        let actual = kappa(g, u, v)?;
        if actual != stated {
            mismatches.push(Mismatch { u: g.label(u).into(), v: g.label(v).into(), stated, actual });
        }
    }
    #[derive(Serialize)]
    struct P {
        valid: bool,
        entries: usize,
        mismatches: Vec<Mismatch>,
    }
    let ok = mismatches.is_empty();
    let out = match f {
        Format::Json => Report::new("verify", g, None, P { valid: ok, entries: table.len(), mismatches }).to_json(),
        _ => {
            let mut s = format!("{} entries, {} wrong\n", table.len(), mismatches.len());
            s.extend(mismatches.iter().map(|m| format!("{} {}: stated {} actual {}\n", m.u, m.v, m.stated, m.actual)));
            s
        }
    };
    Ok((ok, out))
}

fn oracle_check(gl: &Global, g: &Graph, k: Option<usize>) -> Res<u8> {
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let ks: Vec<usize> = match k {
        Some(k) => {
            need_k(k)?;
            vec![k]
        }
        None => (1..=g.n()).collect(),
    };
    let b = budget(gl);
    #[derive(Serialize)]
    struct Check {
        k: usize,
        agree: bool,
        blocks: usize,
        oracle_blocks: usize,
    }
    let mut checks = Vec::new();
    for k in ks {
        let (found, _) = find_blocks(g, k, &hk(gl, g, k)?)?;
        let expected = oracle_blocks(g, k, &b)?;
        checks.push(Check { k, agree: found == expected, blocks: found.len(), oracle_blocks: expected.len() });
    }
    let ok = checks.iter().all(|c| c.agree);
    #[derive(Serialize)]
    struct P {
        agree: bool,
        checks: Vec<Check>,
    }
    let out = match f {
        Format::Json => Report::new("oracle-check", g, k, P { agree: ok, checks }).to_json(),
        _ => checks
            .iter()
            .map(|c| {
                let verdict = if c.agree { "agree" } else { "DISAGREE" };
                format!("k={}: {verdict} ({} blocks, oracle {})\n", c.k, c.blocks, c.oracle_blocks)
            })
            .collect(),
    };
    emit(gl, &out)?;
    Ok(status(ok))
}

fn kappa_cmd(gl: &Global, g: &Graph, pair: Option<&[String]>) -> Res<u8> {
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    if let Some(pair) = pair {
        let uv = lookup_all(g, pair)?;
        let [u, v] = uv.as_slice() else {
            return Err("--pair needs two distinct vertices".into());
        };
        if g.has_edge(*u, *v) {
            return Err(format!("{} and {} are adjacent; κ is defined for non-adjacent pairs", pair[0], pair[1]).into());
        }
        let KappaResult::Exactly { value, separation } = kappa_bounded(g, *u, *v, g.n())? else {
            unreachable!("κ of a non-adjacent pair is below n")
        };
        let out = match f {
            Format::Json => Report::new(
                "kappa",
                g,
                None,
                KappaEntryJson {
                    u: g.label(*u).into(),
                    v: g.label(*v).into(),
                    kappa: value,
                    separation: io::separation_json(g, &separation),
                },
            )
            .to_json(),
            _ => format!("{value}\n"),
        };
        emit(gl, &out)?;
        return Ok(YES);
    }
    let table = match cached_table(gl, g)? {
        Some(t) => t,
        None => preprocess_full(g),
    };
    let out = match f {
        Format::Json => Report::new("kappa", g, None, KappaTablePayload { kappa_table: io::kappa_table_json(&table) }).to_json(),
        _ => table
            .entries()
            .iter()
            .map(|(u, v, k, _)| format!("{} {} {k}\n", g.label(*u), g.label(*v)))
            .collect(),
    };
    emit(gl, &out)?;
    Ok(YES)
}

fn theorem_id(name: &str) -> Res<TheoremId> {
    TheoremId::parse(name).ok_or_else(|| {
        let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
        format!("unknown theorem {name:?}; expected one of {}", names.join(", ")).into()
    })
}

#[derive(Serialize)]
struct ConditionJson {
    name: String,
    holds: bool,
}

#[derive(Serialize)]
struct BlockInfoJson {
    size: usize,
    connected: bool,
}

#[derive(Serialize)]
struct TheoremJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    sample: Option<usize>,
    n: usize,
    m: usize,
    preconditions: Vec<ConditionJson>,
    conclusion: Option<bool>,
    blocks: Vec<BlockInfoJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minor: Option<[usize; 2]>,
    verdict: String,
}

fn theorem_json(r: &TheoremReport, sample: Option<usize>) -> TheoremJson {
    TheoremJson {
        sample,
        n: r.n,
        m: r.m,
        preconditions: r
            .preconditions
            .iter()
            .map(|c| ConditionJson { name: c.name.clone(), holds: c.holds })
            .collect(),
        conclusion: r.conclusion,
        blocks: r.blocks.iter().map(|b| BlockInfoJson { size: b.size, connected: b.connected }).collect(),
        minor: r.minor.map(|(n, m)| [n, m]),
        verdict: r.verdict.as_str().into(),
    }
}

fn theorem_text(r: &TheoremJson) -> String {
    let prefix = r.sample.map(|i| format!("sample {i}: ")).unwrap_or_default();
    format!("{prefix}n={} m={} {}\n", r.n, r.m, r.verdict)
}

fn theorem_input(gl: &Global, g: &Graph, name: &str, k: usize) -> Res<u8> {
    let t = theorem_id(name)?;
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let r = corpus::check_theorem(g, t, k)?;
    let row = theorem_json(&r, None);
    #[derive(Serialize)]
    struct P {
        theorem: String,
        report: TheoremJson,
    }
    let out = match f {
        Format::Json => Report::new("theorem", g, Some(k), P { theorem: t.as_str().into(), report: row }).to_json(),
        _ => theorem_text(&row),
    };
    emit(gl, &out)?;
    Ok(status(r.verdict != Verdict::Violated))
}

fn theorem_samples(gl: &Global, name: &str, k: usize, count: usize) -> Res<u8> {
    let t = theorem_id(name)?;
    let f = format(gl, Format::Json, &[Format::Json, Format::Text])?;
    let mut rng = ChaCha8Rng::seed_from_u64(gl.seed);
    let mut rows = Vec::with_capacity(count);
    let mut violated = false;
    for i in 0..count {
        let g = corpus::theorem_sample(t, k, &mut rng)?;
        let r = corpus::check_theorem(&g, t, k)?;
        violated |= r.verdict == Verdict::Violated;
        rows.push(theorem_json(&r, Some(i)));
    }
    #[derive(Serialize)]
    struct P {
        theorem: String,
        seed: u64,
        reports: Vec<TheoremJson>,
    }
    let out = match f {
        Format::Json => Report::detached("theorem", Some(k), P { theorem: t.as_str().into(), seed: gl.seed, reports: rows }).to_json(),
        _ => rows.iter().map(theorem_text).collect(),
    };
    emit(gl, &out)?;
    Ok(status(!violated))
}
