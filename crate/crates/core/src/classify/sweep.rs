//! Exhaustive checks over all graphical sequences up to a given length.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::theorems::{verify_hypercube_theorem, verify_product_theorem, verify_triangle_free_theorem};
use crate::decomposition::canonical_decomposition_seq;
use crate::error::{Error, Result};
use crate::graph::{hamiltonian_cycle, is_isomorphic, HamiltonVerdict};
use crate::limits::Limits;
use crate::realizer::realization_graph;
use crate::sequence::{complement_sequence, is_graphical_terms, DegreeSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepCheck {
    /// Realization graph versus the product over canonical parts.
    Product,
    /// Bipartite, triangle-free, product form and matrogenic realization agree.
    TriangleFree,
    /// Hypercube exactly when some realization is split and P4-reducible.
    Hypercube,
    /// Triangle-free realization graphs are Hamiltonian.
    Hamilton,
    /// Realization graphs are connected.
    Connectivity,
    /// Complementing and appending an isolated vertex preserve the realization graph.
    Complement,
}

impl SweepCheck {
    pub const ALL: [SweepCheck; 6] = [
        SweepCheck::Product,
        SweepCheck::TriangleFree,
        SweepCheck::Hypercube,
        SweepCheck::Hamilton,
        SweepCheck::Connectivity,
        SweepCheck::Complement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepCheck::Product => "3.4",
            SweepCheck::TriangleFree => "4.1",
            SweepCheck::Hypercube => "4.2",
            SweepCheck::Hamilton => "hamilton",
            SweepCheck::Connectivity => "connectivity",
            SweepCheck::Complement => "complement",
        }
    }
}

impl fmt::Display for SweepCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "3.4" | "product" => Ok(SweepCheck::Product),
            "4.1" | "triangle-free" => Ok(SweepCheck::TriangleFree),
            "4.2" | "hypercube" => Ok(SweepCheck::Hypercube),
            "hamilton" => Ok(SweepCheck::Hamilton),
            "connectivity" => Ok(SweepCheck::Connectivity),
            "complement" => Ok(SweepCheck::Complement),
            other => Err(Error::InvalidParameter(format!("unknown check `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub limits: Limits,
    /// Larger realization graphs are skipped by the Hamiltonicity check.
    pub hamilton_max_vertices: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 7,
            limits: Limits::default().with_max_realizations(5_000),
            hamilton_max_vertices: 200,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    /// The check's hypothesis does not hold for this sequence.
    NotApplicable,
    /// Over a configured cap.
    Skipped,
    /// The Hamiltonian search ran out of budget.
    Unknown,
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub sequence: DegreeSequence,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub check: SweepCheck,
    pub max_n: usize,
    pub sequences: usize,
    pub verified: usize,
    pub not_applicable: usize,
    pub skipped: Vec<SweepEntry>,
    pub unknown: Vec<SweepEntry>,
    pub violations: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "check={} n<={} sequences={} verified={} not_applicable={} skipped={} unknown={} violations={}",
            self.check,
            self.max_n,
            self.sequences,
            self.verified,
            self.not_applicable,
            self.skipped.len(),
            self.unknown.len(),
            self.violations.len()
        )?;
        for (label, list) in [
            ("skipped", &self.skipped),
            ("unknown", &self.unknown),
            ("violation", &self.violations),
        ] {
            for e in list {
                writeln!(f, "{label} {} {}", e.sequence, e.detail)?;
            }
        }
        Ok(())
    }
}

/// Every graphical sequence of length `1..=max_n`, by length and then in
/// descending lexicographic order.
pub fn graphical_sequences(max_n: usize) -> Vec<DegreeSequence> {
    fn extend(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if prefix.len() == n {
            if is_graphical_terms(prefix) {
                out.push(DegreeSequence::new(prefix.clone()).expect("graphical terms"));
            }
            return;
        }
        let top = prefix.last().copied().unwrap_or(n - 1);
        for t in (0..=top).rev() {
            prefix.push(t);
            extend(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        extend(n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

fn entry(sequence: &DegreeSequence, outcome: Outcome, detail: impl Into<String>) -> SweepEntry {
    SweepEntry {
        sequence: sequence.clone(),
        outcome,
        detail: detail.into(),
    }
}

fn failed(d: &DegreeSequence, err: Error) -> SweepEntry {
    match err {
        Error::BoundExceeded { .. } => entry(d, Outcome::Skipped, err.to_string()),
        other => entry(d, Outcome::Violation, format!("error: {other}")),
    }
}

fn verdict(d: &DegreeSequence, holds: bool, detail: impl FnOnce() -> String) -> SweepEntry {
    if holds {
        entry(d, Outcome::Verified, "")
    } else {
        entry(d, Outcome::Violation, detail())
    }
}

fn check_one(check: SweepCheck, d: &DegreeSequence, cfg: &SweepConfig) -> Result<SweepEntry> {
    let limits = &cfg.limits;
    Ok(match check {
        SweepCheck::Product => {
            if canonical_decomposition_seq(d)?.components.is_empty() {
                entry(d, Outcome::NotApplicable, "")
            } else {
                let r = verify_product_theorem(d, limits)?;
                verdict(d, r.isomorphic, || {
                    format!(
                        "direct {}v/{}e, product {}v/{}e",
                        r.direct_vertices, r.direct_edges, r.product_vertices, r.product_edges
                    )
                })
            }
        }
        SweepCheck::TriangleFree => {
            let r = verify_triangle_free_theorem(d, limits)?;
            verdict(d, r.consistent, || serde_json::to_string(&r).unwrap_or_default())
        }
        SweepCheck::Hypercube => {
            let r = verify_hypercube_theorem(d, limits)?;
            verdict(d, r.consistent, || serde_json::to_string(&r).unwrap_or_default())
        }
        SweepCheck::Hamilton => {
            let g = realization_graph(d, limits)?.graph();
            if !g.is_triangle_free() {
                entry(d, Outcome::NotApplicable, "")
            } else if g.n() > cfg.hamilton_max_vertices {
                entry(d, Outcome::Skipped, format!("{} vertices", g.n()))
            } else {
                match hamiltonian_cycle(&g, limits.hamilton_budget) {
                    HamiltonVerdict::Cycle(_) | HamiltonVerdict::Exempt => entry(d, Outcome::Verified, ""),
                    HamiltonVerdict::Unknown => entry(d, Outcome::Unknown, format!("{} vertices", g.n())),
                    HamiltonVerdict::NoCycle => entry(d, Outcome::Violation, format!("{} vertices, no cycle", g.n())),
                }
            }
        }
        SweepCheck::Connectivity => {
            let g = realization_graph(d, limits)?.graph();
            verdict(d, g.is_connected(), || format!("{} components", g.components().len()))
        }
        SweepCheck::Complement => {
            let g = realization_graph(d, limits)?.graph();
            let co = realization_graph(&complement_sequence(d), limits)?.graph();
            let padded = realization_graph(&d.with_appended_zero(), limits)?.graph();
            let (co_ok, pad_ok) = (is_isomorphic(&g, &co), is_isomorphic(&g, &padded));
            verdict(d, co_ok && pad_ok, || {
                format!("complement={co_ok} appended_zero={pad_ok}")
            })
        }
    })
}

pub fn run_sweep(check: SweepCheck, cfg: &SweepConfig) -> Result<SweepReport> {
    let sequences = graphical_sequences(cfg.max_n);
    let work = || -> Vec<SweepEntry> {
        sequences
            .par_iter()
            .map(|d| check_one(check, d, cfg).unwrap_or_else(|e| failed(d, e)))
            .collect()
    };
    let entries = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    let mut report = SweepReport {
        check,
        max_n: cfg.max_n,
        sequences: entries.len(),
        verified: 0,
        not_applicable: 0,
        skipped: Vec::new(),
        unknown: Vec::new(),
        violations: Vec::new(),
    };
    for e in entries {
        match e.outcome {
            Outcome::Verified => report.verified += 1,
            Outcome::NotApplicable => report.not_applicable += 1,
            Outcome::Skipped => report.skipped.push(e),
            Outcome::Unknown => report.unknown.push(e),
            Outcome::Violation => report.violations.push(e),
        }
    }
    Ok(report)
}
