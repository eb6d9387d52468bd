//! Shared helpers for unit tests: random graph generation and brute-force
//! oracles that stay independent of the search-based implementations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{AttributedGraph, GraphLabel, LabeledCollection};

/// Random connected graph with `n` vertices, labels drawn uniformly from
/// `0..vertex_labels` / `0..edge_labels`. A random spanning tree guarantees
/// connectivity; extra edges are added with probability 0.3 each.
pub fn random_connected_graph(
    rng: &mut impl Rng,
    n: usize,
    vertex_labels: u32,
    edge_labels: u32,
) -> AttributedGraph {
    assert!(n >= 1);
    let labels: Vec<u32> = (0..n).map(|_| rng.random_range(0..vertex_labels)).collect();
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.push((u, v, rng.random_range(0..edge_labels)));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !edges.iter().any(|&(a, b, _)| (a, b) == (u, v)) && rng.random_bool(0.3) {
                edges.push((u, v, rng.random_range(0..edge_labels)));
            }
        }
    }
    AttributedGraph::new(labels, &edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Random labeled collection for miner/matcher oracle tests.
pub fn random_collection(
    rng: &mut impl Rng,
    graphs: usize,
    max_vertices: usize,
    vertex_labels: u32,
    edge_labels: u32,
) -> LabeledCollection {
    let mut gs = Vec::with_capacity(graphs);
    let mut labels = Vec::with_capacity(graphs);
    for _ in 0..graphs {
        let n = rng.random_range(1..=max_vertices);
        gs.push(random_connected_graph(rng, n, vertex_labels, edge_labels));
        labels.push(if rng.random_bool(0.5) {
            GraphLabel::Anomalous
        } else {
            GraphLabel::Normal
        });
    }
    LabeledCollection::new(gs, labels).unwrap()
}

/// Attributed-graph isomorphism by exhaustive bijection search.
pub fn brute_force_isomorphic(a: &AttributedGraph, b: &AttributedGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.vertex_count();
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_bijection(a, b, 0, &mut mapping, &mut used)
}

fn extend_bijection(
    a: &AttributedGraph,
    b: &AttributedGraph,
    v: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = a.vertex_count();
    if v == n {
        return true;
    }
    for w in 0..n {
        if used[w] || a.vertex_label(v) != b.vertex_label(w) {
            continue;
        }
        let consistent = (0..v).all(|u| a.edge_label(u, v) == b.edge_label(mapping[u], w));
        if consistent {
            mapping[v] = w;
            used[w] = true;
            if extend_bijection(a, b, v + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
    }
    false
}

/// Counts injective label-preserving mappings of `p` into `g` by exhaustive
/// enumeration. `induced` additionally forbids host edges between image
/// vertices that have no preimage edge.
pub fn brute_force_count(p: &AttributedGraph, g: &AttributedGraph, induced: bool) -> u64 {
    let k = p.vertex_count();
    if k > g.vertex_count() {
        return 0;
    }
    let mut mapping = vec![usize::MAX; k];
    let mut used = vec![false; g.vertex_count()];
    count_mappings(p, g, induced, 0, &mut mapping, &mut used)
}

fn count_mappings(
    p: &AttributedGraph,
    g: &AttributedGraph,
    induced: bool,
    v: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> u64 {
    if v == p.vertex_count() {
        return 1;
    }
    let mut total = 0;
    for w in 0..g.vertex_count() {
        if used[w] || p.vertex_label(v) != g.vertex_label(w) {
            continue;
        }
        let ok = (0..v).all(|u| {
            let pattern_edge = p.edge_label(u, v);
            let host_edge = g.edge_label(mapping[u], w);
            match pattern_edge {
                Some(l) => host_edge == Some(l),
                None => !induced || host_edge.is_none(),
            }
        });
        if ok {
            mapping[v] = w;
            used[w] = true;
            total += count_mappings(p, g, induced, v + 1, mapping, used);
            mapping[v] = usize::MAX;
            used[w] = false;
        }
    }
    total
}
