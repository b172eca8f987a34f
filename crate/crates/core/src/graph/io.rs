//! Plain-text and DOT forms of [`LabeledGraph`]. Both use 1-based vertices.
//!
//! Text format: first line `n`, then one `u v` pair per line. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt::Write;

use super::LabeledGraph;
use crate::error::{Error, Result};

pub fn parse_graph_text(text: &str) -> Result<LabeledGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::GraphFormat("missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::GraphFormat(format!("bad vertex count `{header}`")))?;
    let mut g = LabeledGraph::new(n);
    for line in lines {
        let pair: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = pair[..] else {
            return Err(Error::GraphFormat(format!("expected `u v`, got `{line}`")));
        };
        let parse = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                _ => Err(Error::GraphFormat(format!("bad vertex `{s}` for n={n}"))),
            }
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(Error::GraphFormat(format!("self-loop at {}", u + 1)));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn to_graph_text(g: &LabeledGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Undirected DOT with vertices `1..=n`; `labels[i]` becomes the label of vertex `i + 1`.
pub fn to_dot(g: &LabeledGraph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let _ = writeln!(out, "  {} [label=\"{}\"];", v + 1, label.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {};", v + 1);
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}
