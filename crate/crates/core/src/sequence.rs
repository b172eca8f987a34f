//! Degree sequences, graphicality, complementation and composition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realizer;

/// A degree sequence kept in descending order.
///
/// Construction rejects the empty sequence and any term larger than `n - 1`,
/// so every value of this type is at least well-formed. Graphicality is a
/// separate question answered by [`is_graphical`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut terms: Vec<usize>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        let len = terms.len();
        if let Some(&degree) = terms.iter().find(|&&t| t >= len) {
            return Err(Error::DegreeTooLarge { degree, len });
        }
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(terms))
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Comma-separated form used by the command line, e.g. `3,2,1,1,1`.
    pub fn to_text(&self) -> String {
        join(&self.0)
    }

    /// Sequence with one more vertex of degree zero.
    pub fn with_appended_zero(&self) -> DegreeSequence {
        let mut terms = self.0.clone();
        terms.push(0);
        DegreeSequence(terms)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = Error;

    fn try_from(terms: Vec<usize>) -> Result<Self> {
        DegreeSequence::new(terms)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(d: DegreeSequence) -> Vec<usize> {
        d.0
    }
}

/// Degree sequence of a split graph with a chosen partition: clique-side
/// degrees first, independent-side degrees second, each descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplittedSequence {
    clique: Vec<usize>,
    indep: Vec<usize>,
}

impl SplittedSequence {
    pub fn new(mut clique: Vec<usize>, mut indep: Vec<usize>) -> Result<Self> {
        if clique.is_empty() && indep.is_empty() {
            return Err(Error::EmptySequence);
        }
        let len = clique.len() + indep.len();
        if let Some(&degree) = clique.iter().chain(&indep).find(|&&t| t >= len) {
            return Err(Error::DegreeTooLarge { degree, len });
        }
        clique.sort_unstable_by(|a, b| b.cmp(a));
        indep.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SplittedSequence { clique, indep })
    }

    pub fn clique_terms(&self) -> &[usize] {
        &self.clique
    }

    pub fn indep_terms(&self) -> &[usize] {
        &self.indep
    }

    pub fn len(&self) -> usize {
        self.clique.len() + self.indep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The same terms with the partition forgotten.
    pub fn unsplitted(&self) -> DegreeSequence {
        let terms = self.clique.iter().chain(&self.indep).copied().collect();
        DegreeSequence::new(terms).expect("splitted terms are well-formed")
    }

    /// Clique terms followed by independent terms, in vertex order of a
    /// splitted realization (clique on the first `clique_terms().len()` vertices).
    pub fn vertex_degrees(&self) -> Vec<usize> {
        self.clique.iter().chain(&self.indep).copied().collect()
    }

    pub fn to_text(&self) -> String {
        format!("{};{}", join(&self.clique), join(&self.indep))
    }
}

impl fmt::Display for SplittedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl FromStr for SplittedSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_splitted(s)
    }
}

fn join(terms: &[usize]) -> String {
    terms.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn parse_terms(text: &str) -> Result<Vec<usize>> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| match tok.parse::<i64>() {
            Ok(v) if v < 0 => Err(Error::NegativeDegree(v)),
            Ok(v) => usize::try_from(v).map_err(|_| Error::InvalidToken(tok.to_string())),
            Err(_) => Err(Error::InvalidToken(tok.to_string())),
        })
        .collect()
}

/// Parses comma- or whitespace-separated degrees; input order is irrelevant.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    DegreeSequence::new(parse_terms(text)?)
}

/// Parses the `clique;indep` form, e.g. `2,2;1,1`, `0;` or `;0`.
pub fn parse_splitted(text: &str) -> Result<SplittedSequence> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    let (clique, indep) = text
        .split_once(';')
        .ok_or_else(|| Error::InvalidToken(text.to_string()))?;
    SplittedSequence::new(parse_terms(clique)?, parse_terms(indep)?)
}

/// Erdős–Gallai test on arbitrary (not necessarily sorted) terms.
pub fn is_graphical_terms(terms: &[usize]) -> bool {
    let mut d = terms.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    if d.first().is_some_and(|&t| t >= n) {
        return false;
    }
    let mut prefix = 0;
    for k in 1..=n {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&t| t.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

pub fn is_graphical(d: &DegreeSequence) -> bool {
    is_graphical_terms(d.terms())
}

/// Degree sequence of the complement graph: term `i` becomes `n-1-d[n+1-i]`.
pub fn complement_sequence(d: &DegreeSequence) -> DegreeSequence {
    let n = d.len();
    DegreeSequence(d.terms().iter().rev().map(|&t| n - 1 - t).collect())
}

/// `(p2; p1) ∘ q`: clique terms gain `|q|`, terms of `q` gain `|p2|`,
/// independent terms are unchanged, and the result is already descending.
pub fn compose_sequences(p: &SplittedSequence, q: &DegreeSequence) -> Result<DegreeSequence> {
    if !is_graphical(q) {
        return Err(Error::NotGraphical(q.to_string()));
    }
    if !realizer::splitted_realizable(p)? {
        return Err(Error::NotSplittedRealizable(p.to_string()));
    }
    Ok(compose_unchecked(p, q))
}

pub(crate) fn compose_unchecked(p: &SplittedSequence, q: &DegreeSequence) -> DegreeSequence {
    let (m, k) = (q.len(), p.clique.len());
    let terms = p
        .clique
        .iter()
        .map(|&t| t + m)
        .chain(q.terms().iter().map(|&t| t + k))
        .chain(p.indep.iter().copied())
        .collect();
    DegreeSequence(terms)
}

/// `max{i : d_i >= i - 1}` with 1-based `i`.
pub fn split_partition_index(d: &DegreeSequence) -> usize {
    d.terms()
        .iter()
        .enumerate()
        .filter(|&(i, &t)| t >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(1)
}

/// Drops trailing zeros, keeping at least one term.
pub fn strip_trailing_zeros(d: &DegreeSequence) -> DegreeSequence {
    let keep = d.terms().iter().rposition(|&t| t != 0).map_or(1, |i| i + 1);
    DegreeSequence(d.terms()[..keep].to_vec())
}
