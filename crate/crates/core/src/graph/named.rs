//! Generators for the small graph families that show up as realizations,
//! realization graphs and forbidden subgraphs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::LabeledGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// `k` disjoint edges.
    Matching(usize),
    KNet(usize),
    NetComplement(usize),
    Transposition(usize),
    K66MinusMatching,
    Hypercube(usize),
    Chair,
    Kite,
    /// A 4-cycle with one pendant vertex.
    PGraph,
    PComplement,
}

pub fn make_named(kind: NamedGraph) -> Result<LabeledGraph> {
    use NamedGraph::*;
    match kind {
        Complete(0) => Err(Error::InvalidParameter("complete graph needs n >= 1".into())),
        Complete(n) => Ok(complete(n)),
        Path(n) => path(n),
        Cycle(n) => cycle(n),
        CompleteBipartite(a, b) if a + b == 0 => Err(Error::InvalidParameter(
            "complete bipartite graph needs a vertex".into(),
        )),
        CompleteBipartite(a, b) => Ok(complete_bipartite(a, b)),
        Matching(0) => Err(Error::InvalidParameter("matching needs k >= 1".into())),
        Matching(k) => Ok(matching(k)),
        KNet(k) => k_net(k),
        NetComplement(k) => net_complement(k),
        Transposition(k) => transposition(k),
        K66MinusMatching => Ok(k66_minus_matching()),
        Hypercube(m) if m > 16 => Err(Error::InvalidParameter(format!("hypercube dimension {m} too large"))),
        Hypercube(m) => Ok(hypercube(m)),
        Chair => Ok(chair()),
        Kite => Ok(kite()),
        PGraph => Ok(p_graph()),
        PComplement => Ok(p_graph().complement()),
    }
}

pub fn complete(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path(n: usize) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let mut g = LabeledGraph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// Parts are `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// `k K_2` with edges `{2i, 2i+1}`.
pub fn matching(k: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new(2 * k);
    for i in 0..k {
        g.add_edge(2 * i, 2 * i + 1);
    }
    g
}

/// Clique `b_1..b_k` on vertices `0..k`, pendant `a_i = k + i` attached to `b_i`.
pub fn k_net(k: usize) -> Result<LabeledGraph> {
    if k == 0 {
        return Err(Error::InvalidParameter("k-net needs k >= 1".into()));
    }
    let mut g = complete(k);
    g = super::disjoint_union(&g, &LabeledGraph::new(k));
    for i in 0..k {
        g.add_edge(i, k + i);
    }
    Ok(g)
}

pub fn net_complement(k: usize) -> Result<LabeledGraph> {
    Ok(k_net(k)?.complement())
}

/// Permutations of `[k]` in lexicographic order, joined when they differ
/// by a single transposition.
pub fn transposition(k: usize) -> Result<LabeledGraph> {
    if k == 0 {
        return Err(Error::InvalidParameter("transposition graph needs k >= 1".into()));
    }
    if k > 8 {
        return Err(Error::InvalidParameter(format!("transposition graph T_{k} too large")));
    }
    let perms: Vec<Vec<u8>> = (0..k as u8).permutations(k).collect();
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut g = LabeledGraph::new(perms.len());
    let mut buf = vec![0u8; k];
    for (idx, p) in perms.iter().enumerate() {
        for (i, j) in (0..k).tuple_combinations() {
            buf.copy_from_slice(p);
            buf.swap(i, j);
            let other = index[buf.as_slice()];
            if other > idx {
                g.add_edge(idx, other);
            }
        }
    }
    Ok(g)
}

/// `K_{6,6}` minus a perfect matching: `i ~ 6 + j` for `i != j`.
pub fn k66_minus_matching() -> LabeledGraph {
    let mut g = LabeledGraph::new(12);
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                g.add_edge(i, 6 + j);
            }
        }
    }
    g
}

/// `Q_m` on bit vectors `0..2^m`.
pub fn hypercube(m: usize) -> LabeledGraph {
    let n = 1usize << m;
    let mut g = LabeledGraph::new(n);
    for v in 0..n {
        for b in 0..m {
            let w = v ^ (1 << b);
            if w > v {
                g.add_edge(v, w);
            }
        }
    }
    g
}

/// Path `0-1-2-3` with a pendant `4` on vertex 1; degree sequence (3,2,1,1,1).
pub fn chair() -> LabeledGraph {
    LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).expect("static edges")
}

/// Complement of the chair; degree sequence (3,3,3,2,1).
pub fn kite() -> LabeledGraph {
    chair().complement()
}

/// 4-cycle `0-1-2-3` with a pendant `4` on vertex 0.
pub fn p_graph() -> LabeledGraph {
    LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).expect("static edges")
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            Complete(n) => write!(f, "complete:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Matching(k) => write!(f, "matching:{k}"),
            KNet(k) => write!(f, "k_net:{k}"),
            NetComplement(k) => write!(f, "net_complement:{k}"),
            Transposition(k) => write!(f, "transposition:{k}"),
            K66MinusMatching => write!(f, "k66_minus_matching"),
            Hypercube(m) => write!(f, "hypercube:{m}"),
            Chair => write!(f, "chair"),
            Kite => write!(f, "kite"),
            PGraph => write!(f, "p_graph"),
            PComplement => write!(f, "p_complement"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// `kind` or `kind:p1,p2`, e.g. `k_net:3`, `complete_bipartite:3,3`, `chair`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<usize> = params
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter `{p}`")))
            })
            .collect::<Result<_>>()?;
        let one = || match params[..] {
            [k] => Ok(k),
            _ => Err(Error::InvalidParameter(format!("`{kind}` takes one parameter"))),
        };
        let none = |g: NamedGraph| {
            if params.is_empty() {
                Ok(g)
            } else {
                Err(Error::InvalidParameter(format!("`{kind}` takes no parameters")))
            }
        };
        use NamedGraph::*;
        match kind.trim().to_ascii_lowercase().as_str() {
            "complete" => Ok(Complete(one()?)),
            "path" => Ok(Path(one()?)),
            "cycle" => Ok(Cycle(one()?)),
            "complete_bipartite" => match params[..] {
                [a, b] => Ok(CompleteBipartite(a, b)),
                _ => Err(Error::InvalidParameter(
                    "complete_bipartite takes two parameters".into(),
                )),
            },
            "matching" => Ok(Matching(one()?)),
            "k_net" | "net" => Ok(KNet(one()?)),
            "net_complement" => Ok(NetComplement(one()?)),
            "transposition" => Ok(Transposition(one()?)),
            "k66_minus_matching" => none(K66MinusMatching),
            "hypercube" => Ok(Hypercube(one()?)),
            "chair" => none(Chair),
            "kite" => none(Kite),
            "p_graph" | "p" => none(PGraph),
            "p_complement" => none(PComplement),
            other => Err(Error::InvalidParameter(format!("unknown graph kind `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn transposition_sizes() {
        let t3 = transposition(3).unwrap();
        assert!(is_isomorphic(&t3, &complete_bipartite(3, 3)));
        let t4 = transposition(4).unwrap();
        assert_eq!((t4.n(), t4.edge_count()), (24, 72));
        assert_eq!(transposition(1).unwrap().n(), 1);
        assert!(is_isomorphic(&transposition(2).unwrap(), &complete(2)));
        for k in 1..=5 {
            assert!(transposition(k).unwrap().is_bipartite(), "T_{k}");
        }
        assert!(transposition(0).is_err());
    }

    #[test]
    fn net_and_friends() {
        let net1 = k_net(1).unwrap();
        assert_eq!((net1.n(), net1.edge_count()), (2, 1));
        assert!(k_net(0).is_err());
        let nc = net_complement(3).unwrap();
        assert_eq!(nc.degree_sequence().terms(), &[4, 4, 4, 2, 2, 2]);
        let k66 = k66_minus_matching();
        assert_eq!(k66.regular_degree(), Some(5));
        assert!(k66.is_bipartite());
        assert_eq!(chair().degree_sequence().terms(), &[3, 2, 1, 1, 1]);
        assert_eq!(kite().degree_sequence().terms(), &[3, 3, 3, 2, 1]);
        assert!(chair().is_connected() && kite().is_connected());
        assert_eq!(p_graph().degree_sequence().terms(), &[3, 2, 2, 2, 1]);
        assert_eq!(hypercube(3).edge_count(), 12);
    }

    #[test]
    fn parse_names() {
        assert_eq!("k_net:3".parse::<NamedGraph>().unwrap(), NamedGraph::KNet(3));
        assert_eq!(
            "complete_bipartite:3,3".parse::<NamedGraph>().unwrap(),
            NamedGraph::CompleteBipartite(3, 3)
        );
        assert!("chair:2".parse::<NamedGraph>().is_err());
        assert!("bogus".parse::<NamedGraph>().is_err());
        for kind in [
            NamedGraph::Transposition(4),
            NamedGraph::PComplement,
            NamedGraph::Hypercube(2),
        ] {
            assert_eq!(kind.to_string().parse::<NamedGraph>().unwrap(), kind);
        }
        assert!(make_named(NamedGraph::Complete(0)).is_err());
        assert!(make_named(NamedGraph::Cycle(2)).is_err());
    }
}
