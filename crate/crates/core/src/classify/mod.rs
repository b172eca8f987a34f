//! Forbidden-induced-subgraph recognizers and checks of the structure theorems
//! for realization graphs.

mod sweep;
mod theorems;

use std::sync::OnceLock;

use serde::Serialize;

use crate::graph::named::{chair, cycle, k_net, kite, matching, net_complement, p_graph, path};
use crate::graph::{find_induced, LabeledGraph};

pub use sweep::{graphical_sequences, run_sweep, SweepCheck, SweepConfig, SweepEntry, SweepReport};
pub use theorems::{
    predict_realization_graph, verify_hamiltonicity_corollary, verify_hypercube_theorem, verify_product_theorem,
    verify_triangle_free_theorem, Factor, HamiltonReport, HypercubeReport, PredictedFactor, ProductPrediction,
    ProductReport, TriangleFreeReport,
};

/// Small graphs excluded as induced subgraphs by the recognized classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Forbidden {
    TwoK2,
    C4,
    C5,
    P5,
    CoP5,
    P,
    CoP,
    Chair,
    Kite,
    Net3,
    CoNet3,
}

impl Serialize for Forbidden {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl Forbidden {
    pub fn name(self) -> &'static str {
        match self {
            Forbidden::TwoK2 => "2K2",
            Forbidden::C4 => "C4",
            Forbidden::C5 => "C5",
            Forbidden::P5 => "P5",
            Forbidden::CoP5 => "co-P5",
            Forbidden::P => "P",
            Forbidden::CoP => "co-P",
            Forbidden::Chair => "chair",
            Forbidden::Kite => "kite",
            Forbidden::Net3 => "3-net",
            Forbidden::CoNet3 => "co-3-net",
        }
    }

    pub fn graph(self) -> &'static LabeledGraph {
        static GRAPHS: OnceLock<Vec<LabeledGraph>> = OnceLock::new();
        let graphs = GRAPHS.get_or_init(|| {
            vec![
                matching(2),
                cycle(4).expect("C4"),
                cycle(5).expect("C5"),
                path(5).expect("P5"),
                path(5).expect("P5").complement(),
                p_graph(),
                p_graph().complement(),
                chair(),
                kite(),
                k_net(3).expect("3-net"),
                net_complement(3).expect("3-net complement"),
            ]
        });
        &graphs[self as usize]
    }
}

pub const SPLIT_FORBIDDEN: &[Forbidden] = &[Forbidden::TwoK2, Forbidden::C4, Forbidden::C5];
pub const PSEUDO_SPLIT_FORBIDDEN: &[Forbidden] = &[Forbidden::TwoK2, Forbidden::C4];
pub const PSEUDO_SPLIT_MATROGENIC_FORBIDDEN: &[Forbidden] =
    &[Forbidden::TwoK2, Forbidden::C4, Forbidden::Chair, Forbidden::Kite];
pub const P4_REDUCIBLE_FORBIDDEN: &[Forbidden] = &[
    Forbidden::C5,
    Forbidden::P5,
    Forbidden::CoP5,
    Forbidden::P,
    Forbidden::CoP,
    Forbidden::Chair,
    Forbidden::Kite,
    Forbidden::Net3,
    Forbidden::CoNet3,
];

/// An induced copy of a forbidden graph: `vertices[i]` plays vertex `i` of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub forbidden: Forbidden,
    pub vertices: Vec<usize>,
}

/// First member of `family` induced in `g`, in family order.
pub fn find_forbidden(g: &LabeledGraph, family: &[Forbidden]) -> Option<Witness> {
    family.iter().find_map(|&f| {
        let h = f.graph();
        if h.n() > g.n() {
            return None;
        }
        find_induced(g, h).map(|vertices| Witness { forbidden: f, vertices })
    })
}

pub fn is_split_graph(g: &LabeledGraph) -> bool {
    find_forbidden(g, SPLIT_FORBIDDEN).is_none()
}

pub fn is_pseudo_split(g: &LabeledGraph) -> bool {
    find_forbidden(g, PSEUDO_SPLIT_FORBIDDEN).is_none()
}

pub fn is_pseudo_split_matrogenic(g: &LabeledGraph) -> bool {
    find_forbidden(g, PSEUDO_SPLIT_MATROGENIC_FORBIDDEN).is_none()
}

pub fn is_p4_reducible(g: &LabeledGraph) -> bool {
    find_forbidden(g, P4_REDUCIBLE_FORBIDDEN).is_none()
}

pub fn is_split_p4_reducible(g: &LabeledGraph) -> bool {
    is_split_graph(g) && is_p4_reducible(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFlag {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ClassFlag {
    fn from_family(g: &LabeledGraph, family: &[Forbidden]) -> Self {
        let witness = find_forbidden(g, family);
        ClassFlag {
            holds: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub split: ClassFlag,
    pub pseudo_split: ClassFlag,
    pub pseudo_split_matrogenic: ClassFlag,
    pub p4_reducible: ClassFlag,
    pub split_p4_reducible: ClassFlag,
}

pub fn classify_graph(g: &LabeledGraph) -> ClassReport {
    let split = ClassFlag::from_family(g, SPLIT_FORBIDDEN);
    let p4_reducible = ClassFlag::from_family(g, P4_REDUCIBLE_FORBIDDEN);
    let split_p4_reducible = ClassFlag {
        holds: split.holds && p4_reducible.holds,
        witness: split.witness.clone().or_else(|| p4_reducible.witness.clone()),
    };
    ClassReport {
        split,
        pseudo_split: ClassFlag::from_family(g, PSEUDO_SPLIT_FORBIDDEN),
        pseudo_split_matrogenic: ClassFlag::from_family(g, PSEUDO_SPLIT_MATROGENIC_FORBIDDEN),
        p4_reducible,
        split_p4_reducible,
    }
}

impl ClassReport {
    /// `(name, flag)` pairs in a fixed order.
    pub fn flags(&self) -> [(&'static str, &ClassFlag); 5] {
        [
            ("split", &self.split),
            ("pseudo_split", &self.pseudo_split),
            ("pseudo_split_matrogenic", &self.pseudo_split_matrogenic),
            ("p4_reducible", &self.p4_reducible),
            ("split_p4_reducible", &self.split_p4_reducible),
        ]
    }
}
