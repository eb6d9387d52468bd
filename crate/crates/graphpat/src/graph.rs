//! Attributed graphs and labeled graph collections.
//!
//! Graphs are undirected and simple, with one categorical label per vertex
//! and per edge. Vertex ids are dense `0..n`; inputs with sparse ids must be
//! re-indexed before construction.

use crate::error::{Error, Result};

pub type VertexLabel = u32;
pub type EdgeLabel = u32;

/// Undirected simple graph with categorical vertex and edge labels.
///
/// Immutable after construction; cheap to share read-only across workers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttributedGraph {
    vertex_labels: Vec<VertexLabel>,
    /// Per vertex, `(neighbor, edge label)` sorted by neighbor id.
    adjacency: Vec<Vec<(usize, EdgeLabel)>>,
    /// Normalized edge list: `u < v`, sorted.
    edges: Vec<(usize, usize, EdgeLabel)>,
}

impl AttributedGraph {
    /// Builds a graph from vertex labels (index = vertex id) and an edge list.
    ///
    /// Rejects self-loops, duplicate edges (in either orientation), and edge
    /// endpoints outside `0..n`.
    pub fn new(
        vertex_labels: Vec<VertexLabel>,
        edge_list: &[(usize, usize, EdgeLabel)],
    ) -> Result<Self> {
        let n = vertex_labels.len();
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v, label) in edge_list {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            edges.push((u.min(v), u.max(v), label));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v, label) in &edges {
            adjacency[u].push((v, label));
            adjacency[v].push((u, label));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self {
            vertex_labels,
            adjacency,
            edges,
        })
    }

    /// Single vertex, no edges.
    pub fn single_vertex(label: VertexLabel) -> Self {
        Self {
            vertex_labels: vec![label],
            adjacency: vec![Vec::new()],
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_label(&self, v: usize) -> VertexLabel {
        self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[VertexLabel] {
        &self.vertex_labels
    }

    /// Normalized edge list: `u < v`, sorted ascending.
    pub fn edges(&self) -> &[(usize, usize, EdgeLabel)] {
        &self.edges
    }

    /// Neighbors of `v` as `(neighbor, edge label)`, sorted by neighbor id.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeLabel)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Label of the edge between `u` and `v`, if present.
    pub fn edge_label(&self, u: usize, v: usize) -> Option<EdgeLabel> {
        let nbrs = &self.adjacency[u];
        nbrs.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| nbrs[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_label(u, v).is_some()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::InvalidGraph(format!(
                "permutation length {} != vertex count {n}",
                perm.len()
            )));
        }
        let mut check = vec![false; n];
        for &p in perm {
            if p >= n || check[p] {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
            check[p] = true;
        }
        let mut labels = vec![0; n];
        for v in 0..n {
            labels[perm[v]] = self.vertex_labels[v];
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v, l)| (perm[u], perm[v], l))
            .collect();
        Self::new(labels, &edges)
    }
}

/// Class label of a graph: anomalous or normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphLabel {
    Anomalous,
    Normal,
}

impl GraphLabel {
    pub fn is_anomalous(self) -> bool {
        matches!(self, GraphLabel::Anomalous)
    }

    pub fn as_char(self) -> char {
        match self {
            GraphLabel::Anomalous => 'A',
            GraphLabel::Normal => 'N',
        }
    }
}

impl std::fmt::Display for GraphLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A set of attributed graphs, each tagged anomalous or normal.
#[derive(Debug, Clone)]
pub struct LabeledCollection {
    graphs: Vec<AttributedGraph>,
    labels: Vec<GraphLabel>,
}

impl LabeledCollection {
    pub fn new(graphs: Vec<AttributedGraph>, labels: Vec<GraphLabel>) -> Result<Self> {
        if graphs.len() != labels.len() {
            return Err(Error::InvalidCollection(format!(
                "{} graphs but {} labels",
                graphs.len(),
                labels.len()
            )));
        }
        Ok(Self { graphs, labels })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graph(&self, i: usize) -> &AttributedGraph {
        &self.graphs[i]
    }

    pub fn label(&self, i: usize) -> GraphLabel {
        self.labels[i]
    }

    pub fn graphs(&self) -> &[AttributedGraph] {
        &self.graphs
    }

    pub fn labels(&self) -> &[GraphLabel] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AttributedGraph, GraphLabel)> {
        self.graphs.iter().zip(self.labels.iter().copied())
    }

    pub fn anomalous_count(&self) -> usize {
        self.labels.iter().filter(|l| l.is_anomalous()).count()
    }

    pub fn normal_count(&self) -> usize {
        self.len() - self.anomalous_count()
    }

    /// New collection holding clones of the graphs at `indices`, in order.
    pub fn subset(&self, indices: &[usize]) -> Self {
        Self {
            graphs: indices.iter().map(|&i| self.graphs[i].clone()).collect(),
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
        }
    }
}
