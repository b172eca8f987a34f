use std::fmt;

use serde::Serialize;

use super::{is_pseudo_split_matrogenic, is_split_p4_reducible};
use crate::decomposition::{canonical_decomposition_seq, CanonicalDecomposition};
use crate::error::Result;
use crate::graph::named::{complete, k66_minus_matching, transposition};
use crate::graph::{cartesian_product_all, hamiltonian_cycle, is_isomorphic, HamiltonVerdict, LabeledGraph};
use crate::limits::Limits;
use crate::realizer::realization_graph;
use crate::sequence::DegreeSequence;

/// A named factor of a realization graph product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Factor {
    K1,
    Transposition(usize),
    K66MinusMatching,
    /// A component shape with no closed form; carries its unsplitted sequence.
    Unknown(DegreeSequence),
}

impl Factor {
    /// Factor graph for a component with this unsplitted sequence.
    pub fn from_part(seq: &DegreeSequence) -> Factor {
        let t = seq.terms();
        if t == [0] {
            return Factor::K1;
        }
        if t == [2, 2, 2, 2, 2] {
            return Factor::K66MinusMatching;
        }
        if t.len().is_multiple_of(2) {
            let k = t.len() / 2;
            let (hi, lo) = t.split_at(k);
            let net = hi.iter().all(|&x| x == k) && lo.iter().all(|&x| x == 1);
            let co_net = hi.iter().all(|&x| x == 2 * k - 2) && lo.iter().all(|&x| x == k - 1);
            if net || co_net {
                return Factor::Transposition(k);
            }
        }
        Factor::Unknown(seq.clone())
    }

    pub fn graph(&self) -> Option<LabeledGraph> {
        match self {
            Factor::K1 => Some(complete(1)),
            Factor::Transposition(k) => transposition(*k).ok(),
            Factor::K66MinusMatching => Some(k66_minus_matching()),
            Factor::Unknown(_) => None,
        }
    }

    pub fn is_known(&self) -> bool {
        !matches!(self, Factor::Unknown(_))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::K1 => write!(f, "K1"),
            Factor::Transposition(k) => write!(f, "T{k}"),
            Factor::K66MinusMatching => write!(f, "K66-6K2"),
            Factor::Unknown(seq) => write!(f, "unknown{seq}"),
        }
    }
}

/// Names a realization graph when it is `K1`, some `T_k`, or `K66 - 6K2`.
pub fn identify_factor_graph(g: &LabeledGraph) -> Option<Factor> {
    let n = g.n();
    if n == 1 {
        return Some(Factor::K1);
    }
    let mut factorial = 1;
    for k in 2..=7 {
        factorial *= k;
        if factorial == n && transposition(k).is_ok_and(|t| is_isomorphic(g, &t)) {
            return Some(Factor::Transposition(k));
        }
    }
    (n == 12 && is_isomorphic(g, &k66_minus_matching())).then_some(Factor::K66MinusMatching)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedFactor {
    /// The canonical part this factor comes from, e.g. `(2,2;1,1)` or `(1,1,1,1)`.
    pub part: String,
    pub sequence: DegreeSequence,
    pub factor: Factor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductPrediction {
    pub decomposition: CanonicalDecomposition,
    pub factors: Vec<PredictedFactor>,
}

impl ProductPrediction {
    pub fn all_known(&self) -> bool {
        self.factors.iter().all(|f| f.factor.is_known())
    }

    /// Factor graphs, building the realization graph of any unknown part.
    pub fn factor_graphs(&self, limits: &Limits) -> Result<Vec<LabeledGraph>> {
        self.factors
            .iter()
            .map(|f| match f.factor.graph() {
                Some(g) => Ok(g),
                None => Ok(realization_graph(&f.sequence, limits)?.graph()),
            })
            .collect()
    }

    pub fn product_graph(&self, limits: &Limits) -> Result<LabeledGraph> {
        Ok(cartesian_product_all(&self.factor_graphs(limits)?))
    }
}

impl fmt::Display for ProductPrediction {
    /// `T3`, or `unknown(2,2,1,1) x unknown(1,1,1,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{}", p.factor)?;
        }
        Ok(())
    }
}

pub fn predict_realization_graph(d: &DegreeSequence) -> Result<ProductPrediction> {
    let decomposition = canonical_decomposition_seq(d)?;
    let parts = decomposition
        .components
        .iter()
        .map(|c| (c.to_string(), c.unsplitted()))
        .chain(std::iter::once((
            decomposition.tail.to_string(),
            decomposition.tail.clone(),
        )));
    let factors = parts
        .map(|(part, sequence)| PredictedFactor {
            part,
            factor: Factor::from_part(&sequence),
            sequence,
        })
        .collect();
    Ok(ProductPrediction { decomposition, factors })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub direct_vertices: usize,
    pub direct_edges: usize,
    pub product_vertices: usize,
    pub product_edges: usize,
    pub isomorphic: bool,
}

/// Builds the realization graph of `d` directly and as the product of the
/// realization graphs of its canonical parts.
pub fn verify_product_theorem(d: &DegreeSequence, limits: &Limits) -> Result<ProductReport> {
    let direct = realization_graph(d, limits)?.graph();
    let decomposition = canonical_decomposition_seq(d)?;
    let factors = decomposition
        .part_sequences()
        .iter()
        .map(|s| Ok(realization_graph(s, limits)?.graph()))
        .collect::<Result<Vec<_>>>()?;
    let product = cartesian_product_all(&factors);
    Ok(ProductReport {
        direct_vertices: direct.n(),
        direct_edges: direct.edge_count(),
        product_vertices: product.n(),
        product_edges: product.edge_count(),
        isomorphic: is_isomorphic(&direct, &product),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleFreeReport {
    pub bipartite: bool,
    pub triangle_free: bool,
    /// Every factor is `K1`, `T_k` or one `K66 - 6K2`, and their product
    /// is isomorphic to the realization graph.
    pub product_form: bool,
    /// Some realization is pseudo-split matrogenic.
    pub matrogenic_realization: bool,
    /// Checked only when the realization graph is triangle-free.
    pub every_realization_matrogenic: Option<bool>,
    /// Factors after resolving unknown parts by direct construction.
    pub factors: Vec<Factor>,
    pub k66_components: usize,
    pub consistent: bool,
}

pub fn verify_triangle_free_theorem(d: &DegreeSequence, limits: &Limits) -> Result<TriangleFreeReport> {
    let rg = realization_graph(d, limits)?;
    let g = rg.graph();
    let bipartite = g.is_bipartite();
    let triangle_free = g.is_triangle_free();

    let prediction = predict_realization_graph(d)?;
    let mut factors = Vec::with_capacity(prediction.factors.len());
    let mut graphs = Vec::with_capacity(prediction.factors.len());
    for p in &prediction.factors {
        match p.factor.graph() {
            Some(fg) => {
                factors.push(p.factor.clone());
                graphs.push(fg);
            }
            None => {
                let fg = realization_graph(&p.sequence, limits)?.graph();
                factors.push(identify_factor_graph(&fg).unwrap_or_else(|| p.factor.clone()));
                graphs.push(fg);
            }
        }
    }
    let k66_components = prediction
        .factors
        .iter()
        .filter(|p| p.sequence.terms() == [2, 2, 2, 2, 2])
        .count();
    let k66_factors = factors.iter().filter(|f| **f == Factor::K66MinusMatching).count();
    let product_form =
        factors.iter().all(Factor::is_known) && k66_factors <= 1 && is_isomorphic(&cartesian_product_all(&graphs), &g);

    let matrogenic: Vec<bool> = rg.realizations().map(|r| is_pseudo_split_matrogenic(&r)).collect();
    let matrogenic_realization = matrogenic.iter().any(|&x| x);
    let every_realization_matrogenic = triangle_free.then(|| matrogenic.iter().all(|&x| x));

    let consistent = bipartite == triangle_free
        && triangle_free == product_form
        && product_form == matrogenic_realization
        && every_realization_matrogenic != Some(false)
        && (!matrogenic_realization || k66_components <= 1);
    Ok(TriangleFreeReport {
        bipartite,
        triangle_free,
        product_form,
        matrogenic_realization,
        every_realization_matrogenic,
        factors,
        k66_components,
        consistent,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypercubeReport {
    pub hypercube: bool,
    pub vertices: usize,
    pub split_p4_reducible_realization: bool,
    /// Every canonical part is `(0)` or `(2,2,1,1)`; checked when the realization graph is a hypercube.
    pub parts_k1_or_p4: Option<bool>,
    pub consistent: bool,
}

pub fn verify_hypercube_theorem(d: &DegreeSequence, limits: &Limits) -> Result<HypercubeReport> {
    let rg = realization_graph(d, limits)?;
    let g = rg.graph();
    let hypercube = g.is_hypercube();
    let split_p4_reducible_realization = rg.realizations().any(|r| is_split_p4_reducible(&r));
    let parts_k1_or_p4 = if hypercube {
        let dec = canonical_decomposition_seq(d)?;
        Some(
            dec.part_sequences()
                .iter()
                .all(|s| s.terms() == [0] || s.terms() == [2, 2, 1, 1]),
        )
    } else {
        None
    };
    Ok(HypercubeReport {
        hypercube,
        vertices: g.n(),
        split_p4_reducible_realization,
        parts_k1_or_p4,
        consistent: hypercube == split_p4_reducible_realization && parts_k1_or_p4 != Some(false),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonReport {
    pub vertices: usize,
    pub triangle_free: bool,
    /// Present when the realization graph is triangle-free.
    pub verdict: Option<HamiltonVerdict>,
    /// Only a completed search that finds no cycle counts against the claim.
    pub consistent: bool,
}

pub fn verify_hamiltonicity_corollary(d: &DegreeSequence, limits: &Limits) -> Result<HamiltonReport> {
    let g = realization_graph(d, limits)?.graph();
    let triangle_free = g.is_triangle_free();
    let verdict = triangle_free.then(|| hamiltonian_cycle(&g, limits.hamilton_budget));
    Ok(HamiltonReport {
        vertices: g.n(),
        triangle_free,
        consistent: verdict != Some(HamiltonVerdict::NoCycle),
        verdict,
    })
}
