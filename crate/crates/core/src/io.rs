//! Text formats: edge lists, DIMACS `.col`, JSON reports and the documents
//! read back from them, and DOT output for decomposition trees.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::blocks::{BlockDecomposition, BlockSet, DecompNode, NodeKind};
use crate::decision::WitnessSet;
use crate::error::{Error, Result};
use crate::graph::{label_cmp, make_separation, sorted_labels, Graph, Separation, Vertex, VertexSet};
use crate::inseparability::KappaTable;

pub const SCHEMA_VERSION: u32 = 1;

/// Largest vertex count a DIMACS problem line may declare.
pub const MAX_DIMACS_VERTICES: usize = 1 << 22;

/// Parses an edge list: `u v` declares an edge, a single token declares a
/// vertex, `#` starts a comment line. Vertices are numbered in order of
/// first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut index: HashMap<&str, Vertex> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    fn intern<'a>(tok: &'a str, index: &mut HashMap<&'a str, Vertex>, labels: &mut Vec<String>) -> Vertex {
        let next = index.len();
        let id = *index.entry(tok).or_insert(next);
        if id == labels.len() {
            labels.push(tok.to_string());
        }
        id
    }
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [v] => {
                intern(v, &mut index, &mut labels);
            }
            [_, v] if v.starts_with('#') => {
                return Err(Error::parse(no + 1, format!("label {v:?} starts with '#'")))
            }
            [u, v] if u == v => return Err(Error::parse(no + 1, format!("self-loop at {u}"))),
            [u, v] => {
                let (a, b) = (intern(u, &mut index, &mut labels), intern(v, &mut index, &mut labels));
                edges.push((a, b));
            }
            _ => {
                return Err(Error::parse(
                    no + 1,
                    format!("expected one or two tokens, found {}", toks.len()),
                ))
            }
        }
    }
    Graph::with_labels(labels, edges)
}

/// Writes `g` so that [`parse_edge_list`] returns an identical graph: all
/// vertices are declared first, in index order, then the edges.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# n={} m={}\n", g.n(), g.m());
    for v in g.vertices() {
        let _ = writeln!(out, "{}", g.label(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

/// Parses the DIMACS `.col` format (`c` comments, one `p edge n m` line,
/// `e u v` lines with 1-based endpoints). Vertex `i` is labelled `i`.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0;
    let mut edges = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(no + 1, format!("expected a number, found {s:?}")))
        };
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", _, nv, mv] => {
                if n.is_some() {
                    return Err(Error::parse(no + 1, "second problem line"));
                }
                let nv = num(nv)?;
                if nv > MAX_DIMACS_VERTICES {
                    return Err(Error::parse(no + 1, format!("{nv} vertices exceeds the limit of {MAX_DIMACS_VERTICES}")));
                }
                n = Some(nv);
                declared_m = num(mv)?;
            }
            ["e", u, v] => {
                let Some(n) = n else {
                    return Err(Error::parse(no + 1, "edge before the problem line"));
                };
                let (u, v) = (num(u)?, num(v)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::parse(no + 1, format!("endpoint outside 1..={n}")));
                }
                if u == v {
                    return Err(Error::parse(no + 1, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(Error::parse(no + 1, format!("unrecognised line {line:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if edges.len() != declared_m {
        log::warn!("problem line declares {declared_m} edges, found {}", edges.len());
    }
    Graph::with_labels((1..=n).map(|i| i.to_string()).collect(), edges)
}

/// Reads a graph, choosing DIMACS when the first meaningful line is a
/// `p` or `c` line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("p ") || l == "c" || l.starts_with("c ") => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub separator: Vec<String>,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub parent: Option<usize>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub children: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaf_set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separation: Option<SeparationJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaEntryJson {
    pub u: String,
    pub v: String,
    pub kappa: usize,
    pub separation: SeparationJson,
}

/// Top-level report. Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report<T: Serialize> {
    pub schema_version: u32,
    pub command: String,
    /// Absent for reports that span several graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(flatten)]
    pub payload: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, g: &Graph, k: Option<usize>, payload: T) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            graph: Some(GraphInfo { n: g.n(), m: g.m() }),
            k,
            payload,
        }
    }

    /// A report not tied to a single input graph.
    pub fn detached(command: &str, k: Option<usize>, payload: T) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            graph: None,
            k,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn separation_json(g: &Graph, s: &Separation) -> SeparationJson {
    SeparationJson {
        a: sorted_labels(g, s.a()),
        b: sorted_labels(g, s.b()),
        separator: sorted_labels(g, s.separator()),
        order: s.order(),
    }
}

/// Blocks as sorted label lists, the lists themselves sorted.
pub fn blocks_json(g: &Graph, blocks: &BlockSet) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = blocks.iter().map(|b| sorted_labels(g, b)).collect();
    out.sort_by(|x, y| {
        x.iter()
            .zip(y)
            .map(|(a, b)| label_cmp(a, b))
            .find(|o| o.is_ne())
            .unwrap_or(x.len().cmp(&y.len()))
    });
    out
}

pub fn decomposition_json(g: &Graph, d: &BlockDecomposition, blocks: Option<&BlockSet>) -> Vec<NodeJson> {
    d.nodes()
        .iter()
        .enumerate()
        .map(|(id, node)| {
            let leaf = node.kind.is_leaf();
            NodeJson {
                id,
                parent: node.parent,
                kind: node.kind.as_str().to_string(),
                children: node.children.map(|(a, b)| [a, b]),
                leaf_set: leaf.then(|| sorted_labels(g, &node.set)),
                block: match (leaf, blocks) {
                    (true, Some(b)) => Some(b.contains(&node.set)),
                    _ => None,
                },
                separation: node.label.as_ref().map(|s| separation_json(g, s)),
            }
        })
        .collect()
}

pub fn witness_json(g: &Graph, w: &WitnessSet) -> Vec<SeparationJson> {
    w.separations().iter().map(|s| separation_json(g, s)).collect()
}

pub fn kappa_table_json(table: &KappaTable) -> Vec<KappaEntryJson> {
    let g = table.graph();
    table
        .entries()
        .into_iter()
        .map(|(u, v, kappa, s)| KappaEntryJson {
            u: g.label(u).to_string(),
            v: g.label(v).to_string(),
            kappa,
            separation: separation_json(g, &s),
        })
        .collect()
}

fn lookup(g: &Graph, label: &str) -> Result<Vertex> {
    g.vertex_by_label(label)
        .ok_or_else(|| Error::Format(format!("unknown vertex label {label:?}")))
}

fn label_set(g: &Graph, labels: &[String]) -> Result<VertexSet> {
    labels.iter().map(|l| lookup(g, l)).collect()
}

fn parse_separation(g: &Graph, s: &SeparationJson) -> Result<Separation> {
    let sep = make_separation(g, label_set(g, &s.a)?, label_set(g, &s.b)?)?;
    if sep.order() != s.order || *sep.separator() != label_set(g, &s.separator)? {
        return Err(Error::Format("stated separator or order does not match the sides".into()));
    }
    Ok(sep)
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

#[derive(Deserialize)]
struct WitnessDoc {
    k: usize,
    witness: Vec<SeparationJson>,
}

/// Reads the `k` and `witness` fields of a witness report.
pub fn parse_witness_json(g: &Graph, text: &str) -> Result<WitnessSet> {
    let doc: WitnessDoc = from_json(text)?;
    let seps = doc
        .witness
        .iter()
        .map(|s| parse_separation(g, s))
        .collect::<Result<Vec<_>>>()?;
    WitnessSet::new(doc.k, seps)
}

#[derive(Deserialize)]
struct KappaDoc {
    kappa_table: Vec<KappaEntryJson>,
}

/// Reads the `kappa_table` field of a report and validates it against `g`.
pub fn parse_kappa_table_json(g: &Graph, text: &str) -> Result<KappaTable> {
    let doc: KappaDoc = from_json(text)?;
    let entries = doc
        .kappa_table
        .iter()
        .map(|e| Ok((lookup(g, &e.u)?, lookup(g, &e.v)?, e.kappa, parse_separation(g, &e.separation)?)))
        .collect::<Result<Vec<_>>>()?;
    KappaTable::from_entries(g.clone(), entries)
}

#[derive(Deserialize)]
struct DecompositionDoc {
    decomposition: Vec<NodeJson>,
}

/// Reads the `decomposition` field of a report. Node sets are rebuilt from
/// the root down (`V`, then `X ∩ A` and `X ∩ B` for the two children), and
/// stated leaf sets must agree with them.
pub fn parse_decomposition_json(g: &Graph, text: &str) -> Result<BlockDecomposition> {
    let doc: DecompositionDoc = from_json(text)?;
    let count = doc.decomposition.len();
    let mut nodes: Vec<Option<DecompNode>> = vec![None; count];
    for (i, nj) in doc.decomposition.iter().enumerate() {
        if nj.id != i {
            return Err(Error::Format(format!("node at position {i} has id {}", nj.id)));
        }
        let kind = NodeKind::parse(&nj.kind).ok_or_else(|| Error::Format(format!("unknown node kind {:?}", nj.kind)))?;
        let label = nj.separation.as_ref().map(|s| parse_separation(g, s)).transpose()?;
        nodes[i] = Some(DecompNode {
            parent: nj.parent,
            children: nj.children.map(|[a, b]| (a, b)),
            set: VertexSet::new(),
            label,
            kind,
        });
    }
    let mut nodes: Vec<DecompNode> = nodes.into_iter().map(|n| n.expect("filled above")).collect();
    let d = BlockDecomposition::from_nodes(g.n(), nodes.clone())?;
    // from_nodes has checked the tree shape, so this walk terminates.
    let mut stack = vec![(0usize, g.vertex_set())];
    while let Some((id, set)) = stack.pop() {
        if let (Some((c1, c2)), Some(sep)) = (d.nodes()[id].children, &d.nodes()[id].label) {
            stack.push((c1, set.intersection(sep.a())));
            stack.push((c2, set.intersection(sep.b())));
        }
        if let Some(stated) = &doc.decomposition[id].leaf_set {
            if label_set(g, stated)? != set {
                return Err(Error::Format(format!("leaf set of node {id} does not match its separations")));
            }
        }
        nodes[id].set = set;
    }
    BlockDecomposition::from_nodes(g.n(), nodes)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot_set(g: &Graph, s: &VertexSet) -> String {
    dot_escape(&format!("{{{}}}", sorted_labels(g, s).join(",")))
}

/// The decomposition tree in DOT. Branch nodes show their separator and
/// its order; leaves show their set and whether it is a block; dead leaves
/// are dashed.
pub fn emit_dot(g: &Graph, d: &BlockDecomposition, blocks: Option<&BlockSet>) -> String {
    let mut out = String::from("digraph decomposition {\n  node [shape=box];\n");
    for (id, node) in d.nodes().iter().enumerate() {
        let attrs = match (&node.label, node.kind) {
            (Some(sep), _) => format!("label=\"{} | {}\"", dot_set(g, sep.separator()), sep.order()),
            (None, kind) => {
                let is_block = blocks.is_some_and(|b| b.contains(&node.set));
                let mut a = format!("label=\"{}{}\"", dot_set(g, &node.set), if is_block { " block" } else { "" });
                if is_block {
                    a.push_str(", block=true, style=bold");
                }
                if kind == NodeKind::Dead {
                    a.push_str(", style=dashed");
                }
                a
            }
        };
        let _ = writeln!(out, "  n{id} [{attrs}];");
    }
    for (id, node) in d.nodes().iter().enumerate() {
        if let Some((c1, c2)) = node.children {
            let _ = writeln!(out, "  n{id} -> n{c1};\n  n{id} -> n{c2};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::find_blocks;
    use crate::corpus::{gen_complement_three_paths, path, petersen};
    use crate::decision::{decide_k_block, Decision};
    use crate::inseparability::{preprocess, preprocess_full};

    #[test]
    fn edge_list_basics() {
        let g = parse_edge_list("# comment\nx y\n  y z \n\nw\nx y\ny x\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 2);
        assert_eq!(g.labels(), &["x", "y", "z", "w"]);
        assert!(g.is_isolated(3));
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(parse_edge_list("a b\nc c\n").unwrap_err(), Error::parse(2, "self-loop at c"));
        assert!(matches!(parse_edge_list("a b c\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("a\nb #c\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        for g in [petersen(), gen_complement_three_paths(), Graph::empty(3), parse_edge_list("b a\nc\n").unwrap()] {
            assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn dimacs() {
        let g = parse_dimacs("c triangle\np edge 4 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!(g.label(0), "1");
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 2 2\n").is_err());
        assert!(parse_dimacs("").is_err());
        assert!(parse_dimacs("p edge 99999999999 0\n").is_err());
        assert_eq!(parse_graph("p edge 2 1\ne 1 2\n").unwrap().m(), 1);
        assert_eq!(parse_graph("1 2\n").unwrap().m(), 1);
    }

    #[test]
    fn blocks_report_shape() {
        let g = path(4);
        let hk = preprocess(&g, 2).unwrap();
        let (blocks, _) = find_blocks(&g, 2, &hk).unwrap();
        #[derive(Serialize)]
        struct P {
            blocks: Vec<Vec<String>>,
        }
        let json = Report::new("blocks", &g, Some(2), P { blocks: blocks_json(&g, &blocks) }).to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["graph"]["m"], 3);
        assert_eq!(v["blocks"][2], serde_json::json!(["2", "3"]));
        let pos: Vec<_> = ["schema_version", "command", "graph", "k", "blocks"]
            .iter()
            .map(|key| json.find(&format!("\"{key}\":")).unwrap())
            .collect();
        assert!(pos.is_sorted());
    }

    #[test]
    fn numeric_labels_sort_naturally() {
        let g = path(12);
        let blocks = BlockSet::new(2, (0..11).map(|i| VertexSet::from([i, i + 1])).collect());
        let out = blocks_json(&g, &blocks);
        assert_eq!(out[2], vec!["2", "3"]);
        assert_eq!(out[10], vec!["10", "11"]);
    }

    #[test]
    fn witness_round_trip() {
        let g = path(5);
        let Decision::No(w) = decide_k_block(&g, 3).unwrap() else { panic!() };
        let doc = serde_json::json!({"k": 3, "witness": witness_json(&g, &w)}).to_string();
        assert_eq!(parse_witness_json(&g, &doc).unwrap(), w);
        assert!(parse_witness_json(&g, "{\"k\": 3}").is_err());
        assert!(parse_witness_json(&g, "{\"k\": 3, \"witness\": [{\"a\": [\"9\"], \"b\": [], \"separator\": [], \"order\": 0}]}").is_err());
    }

    #[test]
    fn kappa_table_round_trip() {
        let g = petersen();
        let t = preprocess_full(&g);
        let doc = serde_json::json!({"kappa_table": kappa_table_json(&t)}).to_string();
        let back = parse_kappa_table_json(&g, &doc).unwrap();
        assert_eq!(back.entries(), t.entries());
        assert!(parse_kappa_table_json(&path(10), &doc).is_err());
    }

    #[test]
    fn decomposition_round_trip() {
        let g = path(5);
        let hk = preprocess(&g, 2).unwrap();
        let (blocks, d) = find_blocks(&g, 2, &hk).unwrap();
        let doc = serde_json::json!({"decomposition": decomposition_json(&g, &d, Some(&blocks))}).to_string();
        let back = parse_decomposition_json(&g, &doc).unwrap();
        assert_eq!(back.nodes(), d.nodes());
        let tampered = doc.replacen("[\"0\",\"1\"]", "[\"0\",\"2\"]", 1);
        assert!(parse_decomposition_json(&g, &tampered).is_err());
    }

    #[test]
    fn dot_output() {
        let g = path(4);
        let single = BlockDecomposition::trivial(4);
        let dot = emit_dot(&g, &single, None);
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("[label").count(), 1);

        let hk = preprocess(&g, 2).unwrap();
        let (blocks, d) = find_blocks(&g, 2, &hk).unwrap();
        let dot = emit_dot(&g, &d, Some(&blocks));
        assert!(d.nodes().len() <= 7);
        assert_eq!(dot.matches("block=true").count(), 3);
        assert!(dot.contains("{1} | 1"));
    }
}
