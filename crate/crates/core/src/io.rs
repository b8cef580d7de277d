//! Text formats and run reports. External vertex labels are 1-indexed;
//! this module is the only place where they are translated.
//!
//! * graphs: `p edge n m`, then `e u v` lines; `c` lines are comments;
//! * covers: first line `k`, then `k` lines of vertices (blank = empty);
//! * 3-partition instances: `m S`, then the `3m` values;
//! * hypergraphs: `n p`, then one hyperedge per line.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::bounds::{BoundReport, BoundValues};
use crate::cover::{Cover, CoverViolation};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hypergraph::Hypergraph;
use crate::reduction::ThreePartitionInstance;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

/// Converts a 1-indexed label into a 0-indexed vertex.
fn vertex(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let v = number(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Meaningful lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                if toks.next() != Some("edge") {
                    return Err(parse_err(line, "malformed header, expected `p edge n m`"));
                }
                n = Some(number(toks.next(), line, "vertex count")?);
                number(toks.next(), line, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| parse_err(line, "edge before header"))?;
                let u = vertex(toks.next(), n, line)?;
                let v = vertex(toks.next(), n, line)?;
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            _ => return Err(parse_err(line, format!("unrecognised line `{l}`"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let n = n.ok_or_else(|| parse_err(last_line.max(1), "missing `p edge n m` header"))?;
    Graph::new(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses a cover for a host of order `n`.
pub fn parse_cover(text: &str, n: usize) -> Result<Cover> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(1, "missing subset count"))?;
    let k = number(Some(header), line, "subset count")?;
    let mut subsets = Vec::with_capacity(k);
    for (line, l) in lines.by_ref().take(k) {
        let s = l
            .split_whitespace()
            .map(|t| vertex(Some(t), n, line))
            .collect::<Result<VertexSet>>()?;
        subsets.push(s);
    }
    // trailing blank lines may have been stripped by an editor
    subsets.resize(k, VertexSet::new());
    if let Some((line, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(parse_err(line, format!("more than {k} subsets")));
    }
    Cover::new(n, subsets)
}

pub fn write_cover(c: &Cover) -> String {
    let mut out = format!("{}\n", c.k());
    for s in c.subsets() {
        let labels: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_three_partition(text: &str) -> Result<ThreePartitionInstance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `m S` header"))?;
    let mut toks = header.split_whitespace();
    let m = number(toks.next(), line, "m")?;
    let target = number(toks.next(), line, "S")?;
    let mut values = Vec::new();
    for (line, l) in lines {
        for t in l.split_whitespace() {
            values.push(number(Some(t), line, "value")?);
        }
    }
    ThreePartitionInstance::new(m, target, values)
}

pub fn write_three_partition(inst: &ThreePartitionInstance) -> String {
    let values: Vec<String> = inst.values().iter().map(usize::to_string).collect();
    format!("{} {}\n{}\n", inst.m(), inst.target(), values.join(" "))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n p` header"))?;
    let mut toks = header.split_whitespace();
    let n = number(toks.next(), line, "vertex count")?;
    let p = number(toks.next(), line, "hyperedge count")?;
    let mut edges = Vec::with_capacity(p);
    for (line, l) in lines {
        let e = l
            .split_whitespace()
            .map(|t| vertex(Some(t), n, line))
            .collect::<Result<VertexSet>>()?;
        if e.len() < 2 {
            return Err(parse_err(line, "hyperedges need at least two vertices"));
        }
        edges.push(e);
    }
    if edges.len() != p {
        return Err(parse_err(
            line,
            format!("header announces {p} hyperedges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

fn labels(s: &VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

/// Outcome of one covering run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub algorithm: String,
    pub k: usize,
    pub cost: usize,
    pub subsets: Vec<Vec<usize>>,
    pub bounds: BoundValues,
    pub valid: bool,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violations: Option<Vec<[usize; 2]>>,
    /// Wall-clock time; kept out of the emitted document so output stays
    /// reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(
        algorithm: &str,
        cover: &Cover,
        bounds: &BoundReport,
        violations: &[CoverViolation],
        seed: Option<u64>,
    ) -> Self {
        RunReport {
            algorithm: algorithm.to_string(),
            k: cover.k(),
            cost: cover.cost(),
            subsets: cover.subsets().iter().map(labels).collect(),
            bounds: bounds.values(),
            valid: violations.is_empty(),
            seed,
            violations: None,
            elapsed: Duration::ZERO,
        }
    }

    /// Lists the uncovered edges in the document (used by `check`).
    pub fn with_violations(mut self, violations: &[CoverViolation]) -> Self {
        self.violations = Some(
            violations
                .iter()
                .map(|v| [v.edge.0 + 1, v.edge.1 + 1])
                .collect(),
        );
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub algorithm: &'static str,
    pub m: usize,
    pub p: usize,
    pub subsets: Vec<Vec<usize>>,
    pub valid: bool,
}

impl DualReport {
    pub fn new(m: usize, cover: &Cover, valid: bool) -> Self {
        DualReport {
            algorithm: "dual",
            m,
            p: cover.k(),
            subsets: cover.subsets().iter().map(labels).collect(),
            valid,
        }
    }
}

/// Pretty-printed JSON with a fixed key order and a trailing newline.
pub fn emit_report<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports always serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::best_lower_bound;
    use crate::cover::validate_cover;

    #[test]
    fn graph_examples() {
        let g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);

        let err = parse_graph("c loop\np edge 3 2\ne 1 2\ne 2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");

        let g = parse_graph("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("p graph 3 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("p edge x 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_graph("p edge 3 1\ne 1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_graph("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("p edge 3 1\ne 1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn cover_format() {
        let c = parse_cover("3\n1 2\n\n2 3\n", 3).unwrap();
        assert_eq!(c.k(), 3);
        assert!(c.subsets()[1].is_empty());
        assert_eq!(c.subsets()[2], VertexSet::from([1, 2]));
        assert_eq!(parse_cover(&write_cover(&c), 3).unwrap(), c);

        let c = parse_cover("2\n1 2\n", 3).unwrap();
        assert_eq!(c.k(), 2);
        assert!(parse_cover("1\n1 2\n2 3\n", 3).is_err());
        assert!(parse_cover("1\n1 4\n", 3).is_err());
    }

    #[test]
    fn three_partition_format() {
        let inst = parse_three_partition("2 10\n3 3 4 3 3 4\n").unwrap();
        assert_eq!(inst.values(), &[3, 3, 4, 3, 3, 4]);
        assert_eq!(parse_three_partition(&write_three_partition(&inst)).unwrap(), inst);
        assert!(matches!(
            parse_three_partition("2 10\n3 3 4\n"),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn hypergraph_format() {
        let h = parse_hypergraph("4 2\n1 2 3\n3 4\n").unwrap();
        assert_eq!(h.edges().len(), 2);
        assert!(parse_hypergraph("4 2\n1 2 3\n").is_err());
        assert!(parse_hypergraph("4 1\n1\n").is_err());
    }

    #[test]
    fn report_layout() {
        let g = Graph::edgeless(3);
        let c = Cover::empty(3, 2);
        let bounds = best_lower_bound(&g, 2).unwrap();
        let v = validate_cover(&g, &c).unwrap();
        let text = emit_report(&RunReport::new("exact", &c, &bounds, &v, None));
        let keys: Vec<&str> = text
            .lines()
            .filter_map(|l| l.trim().strip_prefix('"'))
            .filter_map(|l| l.split('"').next())
            .collect();
        assert_eq!(
            keys,
            [
                "algorithm", "k", "cost", "subsets", "bounds", "trivial", "connected",
                "connectivity", "density", "neighborhood", "best", "valid", "seed"
            ]
        );
        assert!(text.contains("\"cost\": 0"));
        assert!(text.contains("\"best\": 0"));
    }
}
