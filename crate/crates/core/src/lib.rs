//! Degree sequences, their labeled realizations, and the graph of
//! realizations connected by 2-switches.
//!
//! ```
//! use switchlab::{parse_sequence, realization_graph, Limits};
//!
//! let d = parse_sequence("2,2,2,2,2").unwrap();
//! let rg = realization_graph(&d, &Limits::default()).unwrap();
//! assert_eq!(rg.len(), 12);
//! assert_eq!(rg.graph().regular_degree(), Some(5));
//! ```

pub mod classify;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod limits;
pub mod realizer;
pub mod sequence;

pub use decomposition::{
    canonical_decomposition_graph, canonical_decomposition_seq, find_split_off, is_indecomposable_seq, recompose,
    unique_split_partition, CanonicalDecomposition, GraphDecomposition,
};
pub use error::{Error, Result};
pub use graph::LabeledGraph;
pub use limits::{Limits, MAX_SUPPORTED_N};
pub use realizer::{enumerate_realizations, realization_graph, RealizationGraph, TwoSwitch};
pub use sequence::{compose_sequences, is_graphical, parse_sequence, parse_splitted, DegreeSequence, SplittedSequence};
