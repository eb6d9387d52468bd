//! Classifies attributed graphs as anomalous or normal by mining frequent
//! subgraph patterns, selecting the most discriminative ones, representing
//! each graph as a fixed-length pattern vector, and training a linear SVM.
//! Includes an ingestion stage that builds labeled graph collections from
//! public-procurement contract records.

pub mod error;
pub mod graph;
pub mod pattern;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use graph::{AttributedGraph, EdgeLabel, GraphLabel, LabeledCollection, VertexLabel};
pub use pattern::{canonical_code, is_same_pattern, DfsCode, DfsEdge, Pattern};
