//! DFS codes, canonical forms, and patterns.
//!
//! A DFS code linearizes a connected labeled graph as a sequence of edge
//! tuples produced by a depth-first traversal. The lexicographically minimal
//! code over all traversals is a canonical form: two connected attributed
//! graphs have equal minimal codes iff they are isomorphic (preserving vertex
//! and edge labels).

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{AttributedGraph, EdgeLabel, VertexLabel};

const UNSEEN: usize = usize::MAX;

/// One edge tuple of a DFS code: `(from, to)` are discovery indices.
/// Forward edges have `from < to`, backward edges `from > to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DfsEdge {
    pub from: usize,
    pub to: usize,
    pub from_label: VertexLabel,
    pub edge_label: EdgeLabel,
    pub to_label: VertexLabel,
}

impl DfsEdge {
    pub fn is_forward(&self) -> bool {
        self.from < self.to
    }
}

impl PartialOrd for DfsEdge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DfsEdge {
    /// DFS lexicographic order on edge tuples: structural position first
    /// (forward/backward rules of the DFS-code order), then the label triple.
    fn cmp(&self, other: &Self) -> Ordering {
        let structural = match (self.is_forward(), other.is_forward()) {
            (true, true) => self.to.cmp(&other.to).then(other.from.cmp(&self.from)),
            (false, false) => self.from.cmp(&other.from).then(self.to.cmp(&other.to)),
            (true, false) => {
                if self.to <= other.from {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (false, true) => {
                if self.from < other.to {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        };
        structural.then_with(|| {
            (self.from_label, self.edge_label, self.to_label).cmp(&(
                other.from_label,
                other.edge_label,
                other.to_label,
            ))
        })
    }
}

/// A DFS code: the root vertex label plus an ordered edge-tuple list.
///
/// The edge sequence must describe a connected graph built by rightmost
/// extension; `from_edges` validates this. An empty edge list encodes a
/// single-vertex graph whose label is `root_label`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DfsCode {
    root_label: VertexLabel,
    edges: Vec<DfsEdge>,
}

impl DfsCode {
    pub fn single_vertex(label: VertexLabel) -> Self {
        Self {
            root_label: label,
            edges: Vec::new(),
        }
    }

    /// Validates and wraps an edge-tuple sequence.
    ///
    /// Checks: first tuple is `(0, 1)`; forward edges introduce discovery
    /// index `max+1` from a vertex on the rightmost path; backward edges
    /// leave the current rightmost vertex toward a rightmost-path vertex,
    /// with strictly ascending targets and no duplicate adjacency; vertex
    /// labels are consistent across tuples.
    pub fn from_edges(edges: Vec<DfsEdge>) -> Result<Self> {
        let Some(first) = edges.first() else {
            return Err(Error::InvalidCode(
                "empty edge list; use single_vertex for one-vertex codes".into(),
            ));
        };
        if (first.from, first.to) != (0, 1) {
            return Err(Error::InvalidCode(format!(
                "first tuple must be (0, 1), got ({}, {})",
                first.from, first.to
            )));
        }
        let mut labels: Vec<VertexLabel> = vec![first.from_label];
        let mut rightmost_path: Vec<usize> = vec![0];
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new()];
        // last backward target of the current rightmost vertex
        let mut last_backward: Option<usize> = None;
        for (k, e) in edges.iter().enumerate() {
            let check_label = |v: usize, l: VertexLabel, labels: &[VertexLabel]| {
                if labels[v] != l {
                    return Err(Error::InvalidCode(format!(
                        "tuple {k}: vertex {v} labeled {l} but previously {}",
                        labels[v]
                    )));
                }
                Ok(())
            };
            if e.is_forward() {
                if e.to != labels.len() {
                    return Err(Error::InvalidCode(format!(
                        "tuple {k}: forward edge must introduce vertex {}, got {}",
                        labels.len(),
                        e.to
                    )));
                }
                if !rightmost_path.contains(&e.from) {
                    return Err(Error::InvalidCode(format!(
                        "tuple {k}: forward edge from {} which is not on the rightmost path",
                        e.from
                    )));
                }
                check_label(e.from, e.from_label, &labels)?;
                labels.push(e.to_label);
                adjacency.push(Vec::new());
                let cut = rightmost_path.iter().position(|&v| v == e.from).unwrap();
                rightmost_path.truncate(cut + 1);
                rightmost_path.push(e.to);
                last_backward = None;
            } else {
                if e.from == e.to {
                    return Err(Error::InvalidCode(format!("tuple {k}: self-loop")));
                }
                let rightmost = *rightmost_path.last().unwrap();
                if e.from != rightmost {
                    return Err(Error::InvalidCode(format!(
                        "tuple {k}: backward edge must start at the rightmost vertex {rightmost}"
                    )));
                }
                if !rightmost_path.contains(&e.to) {
                    return Err(Error::InvalidCode(format!(
                        "tuple {k}: backward edge to {} which is not on the rightmost path",
                        e.to
                    )));
                }
                if adjacency[e.from].contains(&e.to) {
                    return Err(Error::InvalidCode(format!(
                        "tuple {k}: duplicate edge ({}, {})",
                        e.from, e.to
                    )));
                }
                if let Some(last) = last_backward {
                    if e.to <= last {
                        return Err(Error::InvalidCode(format!(
                            "tuple {k}: backward targets must ascend ({} after {last})",
                            e.to
                        )));
                    }
                }
                last_backward = Some(e.to);
                check_label(e.from, e.from_label, &labels)?;
                check_label(e.to, e.to_label, &labels)?;
            }
            adjacency[e.from].push(e.to);
            adjacency[e.to].push(e.from);
        }
        Ok(Self {
            root_label: first.from_label,
            edges,
        })
    }

    pub fn root_label(&self) -> VertexLabel {
        self.root_label
    }

    pub fn edges(&self) -> &[DfsEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.edges
            .iter()
            .map(|e| e.from.max(e.to) + 1)
            .max()
            .unwrap_or(1)
    }

    /// Discovery indices on the rightmost path, root first.
    pub fn rightmost_path(&self) -> Vec<usize> {
        if self.edges.is_empty() {
            return vec![0];
        }
        let n = self.vertex_count();
        let mut parent = vec![UNSEEN; n];
        for e in &self.edges {
            if e.is_forward() {
                parent[e.to] = e.from;
            }
        }
        let mut path = vec![n - 1];
        while let Some(&v) = path.last() {
            if parent[v] == UNSEEN {
                break;
            }
            path.push(parent[v]);
        }
        path.reverse();
        path
    }

    /// The code appended with one more tuple, re-validated.
    pub fn child(&self, edge: DfsEdge) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(edge);
        Self::from_edges(edges)
    }

    /// Builds the graph this code describes; vertex ids are discovery indices.
    pub fn realize(&self) -> AttributedGraph {
        if self.edges.is_empty() {
            return AttributedGraph::single_vertex(self.root_label);
        }
        let n = self.vertex_count();
        let mut labels = vec![0; n];
        let mut edge_list = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            labels[e.from] = e.from_label;
            labels[e.to] = e.to_label;
            edge_list.push((e.from, e.to, e.edge_label));
        }
        AttributedGraph::new(labels, &edge_list)
            .expect("validated DFS code realizes a valid graph")
    }
}

impl PartialOrd for DfsCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DfsCode {
    /// Total order: root label, then the edge sequence under the DFS edge
    /// order, with a proper prefix ordered before its extensions.
    fn cmp(&self, other: &Self) -> Ordering {
        self.root_label
            .cmp(&other.root_label)
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl fmt::Display for DfsCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "v{}", self.root_label);
        }
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            write!(
                f,
                "{}-{}-{}-{}-{}",
                e.from, e.to, e.from_label, e.edge_label, e.to_label
            )?;
        }
        Ok(())
    }
}

impl FromStr for DfsCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(label) = s.strip_prefix('v') {
            let label = label
                .parse::<VertexLabel>()
                .map_err(|_| Error::InvalidCode(format!("bad vertex label in {s:?}")))?;
            return Ok(Self::single_vertex(label));
        }
        let mut edges = Vec::new();
        for tuple in s.split(';') {
            let parts: Vec<&str> = tuple.split('-').collect();
            if parts.len() != 5 {
                return Err(Error::InvalidCode(format!("bad edge tuple {tuple:?}")));
            }
            let nums: Vec<u64> = parts
                .iter()
                .map(|p| {
                    p.parse::<u64>()
                        .map_err(|_| Error::InvalidCode(format!("bad number in {tuple:?}")))
                })
                .collect::<Result<_>>()?;
            edges.push(DfsEdge {
                from: nums[0] as usize,
                to: nums[1] as usize,
                from_label: nums[2] as VertexLabel,
                edge_label: nums[3] as EdgeLabel,
                to_label: nums[4] as VertexLabel,
            });
        }
        Self::from_edges(edges)
    }
}

/// A partial DFS traversal of a concrete graph. Used by the minimum-code
/// search: all states that share the minimal code prefix are kept and
/// advanced in lockstep, one emitted edge at a time.
#[derive(Clone)]
struct Traversal {
    /// Discovery order: `order[i]` is the graph vertex with discovery index `i`.
    order: Vec<usize>,
    /// Inverse of `order`; `UNSEEN` for undiscovered vertices.
    disc: Vec<usize>,
    /// DFS stack of graph vertices (the rightmost path).
    stack: Vec<usize>,
    /// Ancestors the last-discovered vertex is still wired to, in ascending
    /// discovery order. These backward edges are forced next.
    pending_backward: VecDeque<usize>,
}

enum NextMove {
    Backward,
    Forward { from: usize, to: usize },
}

impl Traversal {
    fn start(g: &AttributedGraph, root: usize) -> Self {
        let mut disc = vec![UNSEEN; g.vertex_count()];
        disc[root] = 0;
        Self {
            order: vec![root],
            disc,
            stack: vec![root],
            pending_backward: VecDeque::new(),
        }
    }

    /// All possible next edge tuples from this state. Backward edges of the
    /// last-discovered vertex are forced; otherwise the traversal backtracks
    /// to the deepest stack vertex with an unvisited neighbor and branches on
    /// the choice of neighbor.
    fn next_candidates(&mut self, g: &AttributedGraph) -> Vec<(DfsEdge, NextMove)> {
        if let Some(&ancestor) = self.pending_backward.front() {
            let last = *self.order.last().unwrap();
            let edge = DfsEdge {
                from: self.disc[last],
                to: self.disc[ancestor],
                from_label: g.vertex_label(last),
                edge_label: g.edge_label(last, ancestor).unwrap(),
                to_label: g.vertex_label(ancestor),
            };
            return vec![(edge, NextMove::Backward)];
        }
        while let Some(&top) = self.stack.last() {
            if g.neighbors(top).iter().any(|&(w, _)| self.disc[w] == UNSEEN) {
                break;
            }
            self.stack.pop();
        }
        let Some(&top) = self.stack.last() else {
            return Vec::new();
        };
        let next_disc = self.order.len();
        g.neighbors(top)
            .iter()
            .filter(|&&(w, _)| self.disc[w] == UNSEEN)
            .map(|&(w, edge_label)| {
                let edge = DfsEdge {
                    from: self.disc[top],
                    to: next_disc,
                    from_label: g.vertex_label(top),
                    edge_label,
                    to_label: g.vertex_label(w),
                };
                (edge, NextMove::Forward { from: top, to: w })
            })
            .collect()
    }

    fn advance(&self, g: &AttributedGraph, mv: &NextMove) -> Self {
        let mut next = self.clone();
        match *mv {
            NextMove::Backward => {
                next.pending_backward.pop_front();
            }
            NextMove::Forward { from, to } => {
                next.disc[to] = next.order.len();
                next.order.push(to);
                next.stack.push(to);
                let mut ancestors: Vec<usize> = g
                    .neighbors(to)
                    .iter()
                    .filter(|&&(w, _)| w != from && next.disc[w] != UNSEEN)
                    .map(|&(w, _)| w)
                    .collect();
                ancestors.sort_unstable_by_key(|&w| next.disc[w]);
                next.pending_backward = ancestors.into();
            }
        }
        next
    }
}

/// The lexicographically minimal DFS code of a connected graph.
///
/// Two inputs yield equal codes iff they are isomorphic as attributed graphs.
/// Rejects empty or disconnected input.
pub fn canonical_code(g: &AttributedGraph) -> Result<DfsCode> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidGraph("cannot canonicalize an empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidGraph(
            "cannot canonicalize a disconnected graph".into(),
        ));
    }
    if g.edge_count() == 0 {
        return Ok(DfsCode::single_vertex(g.vertex_label(0)));
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    let mut states = start_states(g);
    for _ in 0..g.edge_count() {
        let best = lockstep(g, &mut states).expect("pending edges imply a candidate");
        edges.push(best);
    }
    DfsCode::from_edges(edges)
}

/// True iff `code` equals the canonical code of the graph it describes.
///
/// Runs the same minimum-code search as [`canonical_code`] but exits as soon
/// as a strictly smaller prefix is found.
pub fn is_minimal_code(code: &DfsCode) -> bool {
    if code.edges.is_empty() {
        return true;
    }
    let g = code.realize();
    let min_label = *g.vertex_labels().iter().min().unwrap();
    if code.root_label != min_label {
        return false;
    }
    let mut states = start_states(&g);
    for expected in &code.edges {
        let best = lockstep(&g, &mut states).expect("pending edges imply a candidate");
        match best.cmp(expected) {
            Ordering::Less => return false,
            Ordering::Equal => {}
            Ordering::Greater => {
                // The code is itself a traversal of its realization, so the
                // minimum can never exceed it.
                debug_assert!(false, "minimum code overtook a valid traversal");
                return false;
            }
        }
    }
    true
}

fn start_states(g: &AttributedGraph) -> Vec<Traversal> {
    let min_label = *g.vertex_labels().iter().min().unwrap();
    (0..g.vertex_count())
        .filter(|&v| g.vertex_label(v) == min_label)
        .map(|v| Traversal::start(g, v))
        .collect()
}

/// Advances all states by the globally minimal next edge; returns that edge.
fn lockstep(g: &AttributedGraph, states: &mut Vec<Traversal>) -> Option<DfsEdge> {
    let mut best: Option<DfsEdge> = None;
    let mut moves: Vec<(usize, DfsEdge, NextMove)> = Vec::new();
    for (idx, state) in states.iter_mut().enumerate() {
        for (edge, mv) in state.next_candidates(g) {
            if best.map_or(true, |b| edge < b) {
                best = Some(edge);
            }
            moves.push((idx, edge, mv));
        }
    }
    let best = best?;
    let mut next_states = Vec::new();
    for (idx, edge, mv) in &moves {
        if *edge == best {
            next_states.push(states[*idx].advance(g, mv));
        }
    }
    *states = next_states;
    Some(best)
}

/// A connected attributed graph in canonical DFS-code form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    code: DfsCode,
    graph: AttributedGraph,
}

impl Pattern {
    /// Canonicalizes a connected graph into a pattern.
    pub fn from_graph(g: &AttributedGraph) -> Result<Self> {
        let code = canonical_code(g)?;
        let graph = code.realize();
        Ok(Self { code, graph })
    }

    /// Wraps an already-canonical code; rejects non-minimal codes.
    pub fn from_code(code: DfsCode) -> Result<Self> {
        if !is_minimal_code(&code) {
            return Err(Error::InvalidCode(format!("code {code} is not canonical")));
        }
        let graph = code.realize();
        Ok(Self { code, graph })
    }

    pub fn code(&self) -> &DfsCode {
        &self.code
    }

    /// The code's realization; vertex ids are discovery indices.
    pub fn graph(&self) -> &AttributedGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.cmp(&other.code)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

/// Attributed-graph isomorphism via canonical codes.
pub fn is_same_pattern(p1: &Pattern, p2: &Pattern) -> bool {
    p1.code == p2.code
}
