//! Occurrence tests and occurrence counting for patterns in a host graph.
//!
//! A general occurrence is an injective label-preserving mapping that sends
//! every pattern edge to an equally-labeled host edge (a monomorphism; the
//! host may have extra edges between image vertices). An induced occurrence
//! additionally forbids host edges between image vertices without a preimage.
//!
//! Counts are over distinct injective mappings, so a symmetric pattern counts
//! each image subgraph once per automorphism.

use crate::graph::AttributedGraph;
use crate::pattern::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchMode {
    General,
    Induced,
}

/// True iff a label-preserving monomorphism `p -> g` exists.
pub fn exists_general(p: &Pattern, g: &AttributedGraph) -> bool {
    exists(p, g, MatchMode::General)
}

/// True iff `p` occurs in `g` as a vertex-induced subgraph.
pub fn exists_induced(p: &Pattern, g: &AttributedGraph) -> bool {
    exists(p, g, MatchMode::Induced)
}

pub fn exists(p: &Pattern, g: &AttributedGraph, mode: MatchMode) -> bool {
    run_search(p, g, mode, true) > 0
}

/// Number of distinct injective label-preserving mappings of `p` into `g`
/// under the given mode.
pub fn count_occurrences(p: &Pattern, g: &AttributedGraph, mode: MatchMode) -> u64 {
    run_search(p, g, mode, false)
}

struct Search<'a> {
    pattern: &'a AttributedGraph,
    host: &'a AttributedGraph,
    mode: MatchMode,
    stop_at_first: bool,
    /// Pattern vertices in assignment order; after the first, each is
    /// adjacent to an earlier one.
    order: Vec<usize>,
    /// For positions >= 1: (anchor position in `order`, edge label to it).
    anchors: Vec<(usize, u32)>,
    mapping: Vec<usize>,
    used: Vec<bool>,
    found: u64,
}

fn run_search(p: &Pattern, g: &AttributedGraph, mode: MatchMode, stop_at_first: bool) -> u64 {
    let pattern = p.graph();
    if pattern.vertex_count() > g.vertex_count() || pattern.edge_count() > g.edge_count() {
        return 0;
    }
    let (order, anchors) = assignment_order(pattern, g);
    let mut search = Search {
        pattern,
        host: g,
        mode,
        stop_at_first,
        mapping: vec![usize::MAX; pattern.vertex_count()],
        used: vec![false; g.vertex_count()],
        order,
        anchors,
        found: 0,
    };
    search.assign(0);
    search.found
}

/// Orders pattern vertices for backtracking: rarest host label first, then
/// higher pattern degree; subsequent vertices stay adjacent to the prefix.
fn assignment_order(p: &AttributedGraph, g: &AttributedGraph) -> (Vec<usize>, Vec<(usize, u32)>) {
    let mut host_label_count = std::collections::HashMap::new();
    for v in 0..g.vertex_count() {
        *host_label_count.entry(g.vertex_label(v)).or_insert(0usize) += 1;
    }
    let rarity = |v: usize| {
        host_label_count
            .get(&p.vertex_label(v))
            .copied()
            .unwrap_or(0)
    };

    let n = p.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut anchors = Vec::with_capacity(n);
    let mut placed = vec![false; n];

    let first = (0..n)
        .min_by_key(|&v| (rarity(v), usize::MAX - p.degree(v), v))
        .unwrap();
    order.push(first);
    anchors.push((usize::MAX, 0));
    placed[first] = true;

    while order.len() < n {
        let candidate = (0..n)
            .filter(|&v| !placed[v] && p.neighbors(v).iter().any(|&(u, _)| placed[u]))
            .min_by_key(|&v| (rarity(v), usize::MAX - p.degree(v), v))
            .expect("pattern graphs are connected");
        let (anchor_vertex, edge_label) = p
            .neighbors(candidate)
            .iter()
            .copied()
            .find(|&(u, _)| placed[u])
            .unwrap();
        let anchor_pos = order.iter().position(|&v| v == anchor_vertex).unwrap();
        order.push(candidate);
        anchors.push((anchor_pos, edge_label));
        placed[candidate] = true;
    }
    (order, anchors)
}

impl Search<'_> {
    fn assign(&mut self, pos: usize) {
        if pos == self.order.len() {
            self.found += 1;
            return;
        }
        let v = self.order[pos];
        if pos == 0 {
            for w in 0..self.host.vertex_count() {
                self.try_vertex(pos, v, w);
                if self.stop_at_first && self.found > 0 {
                    return;
                }
            }
        } else {
            let (anchor_pos, edge_label) = self.anchors[pos];
            let anchor_image = self.mapping[self.order[anchor_pos]];
            let candidates: Vec<usize> = self
                .host
                .neighbors(anchor_image)
                .iter()
                .filter(|&&(_, l)| l == edge_label)
                .map(|&(w, _)| w)
                .collect();
            for w in candidates {
                self.try_vertex(pos, v, w);
                if self.stop_at_first && self.found > 0 {
                    return;
                }
            }
        }
    }

    fn try_vertex(&mut self, pos: usize, v: usize, w: usize) {
        if self.used[w]
            || self.pattern.vertex_label(v) != self.host.vertex_label(w)
            || self.host.degree(w) < self.pattern.degree(v)
        {
            return;
        }
        for &u in &self.order[..pos] {
            let pattern_edge = self.pattern.edge_label(u, v);
            let host_edge = self.host.edge_label(self.mapping[u], w);
            let ok = match pattern_edge {
                Some(l) => host_edge == Some(l),
                None => self.mode == MatchMode::General || host_edge.is_none(),
            };
            if !ok {
                return;
            }
        }
        self.mapping[v] = w;
        self.used[w] = true;
        self.assign(pos + 1);
        self.mapping[v] = usize::MAX;
        self.used[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::AttributedGraph;
    use crate::pattern::Pattern;
    use crate::testutil::{brute_force_count, random_connected_graph};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pattern_of(labels: Vec<u32>, edges: &[(usize, usize, u32)]) -> Pattern {
        Pattern::from_graph(&AttributedGraph::new(labels, edges).unwrap()).unwrap()
    }

    #[test]
    fn general_but_not_induced_path_in_triangle() {
        // A 2-edge path occurs in a triangle as a subgraph, but never as an
        // induced subgraph: the third host edge has no preimage.
        let path = pattern_of(vec![0, 0, 0], &[(0, 1, 0), (1, 2, 0)]);
        let triangle =
            AttributedGraph::new(vec![0, 0, 0], &[(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        assert!(exists_general(&path, &triangle));
        assert!(!exists_induced(&path, &triangle));
    }

    #[test]
    fn induced_occurrence_retained_when_exact() {
        let path = pattern_of(vec![0, 0, 0], &[(0, 1, 0), (1, 2, 0)]);
        let host = AttributedGraph::new(vec![0, 0, 0, 1], &[(0, 1, 0), (1, 2, 0), (2, 3, 5)])
            .unwrap();
        assert!(exists_induced(&path, &host));
    }

    #[test]
    fn pattern_in_itself() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = random_connected_graph(&mut rng, 5, 2, 2);
            let p = Pattern::from_graph(&g).unwrap();
            assert!(exists_induced(&p, p.graph()));
            assert!(exists_general(&p, p.graph()));
        }
    }

    #[test]
    fn size_pruning() {
        let big = pattern_of(vec![0, 0, 0], &[(0, 1, 0), (1, 2, 0)]);
        let small = AttributedGraph::new(vec![0, 0], &[(0, 1, 0)]).unwrap();
        assert!(!exists_general(&big, &small));
        assert_eq!(count_occurrences(&big, &small, MatchMode::General), 0);
    }

    #[test]
    fn single_vertex_counts_label_occurrences() {
        let p = pattern_of(vec![7], &[]);
        let g = AttributedGraph::new(vec![7, 3, 7, 7], &[(0, 1, 0), (1, 2, 0), (2, 3, 0)])
            .unwrap();
        assert_eq!(count_occurrences(&p, &g, MatchMode::General), 3);
        assert_eq!(count_occurrences(&p, &g, MatchMode::Induced), 3);
    }

    #[test]
    fn symmetric_edge_counts_both_mappings() {
        let p = pattern_of(vec![0, 0], &[(0, 1, 0)]);
        let g = AttributedGraph::new(vec![0, 0], &[(0, 1, 0)]).unwrap();
        assert_eq!(count_occurrences(&p, &g, MatchMode::General), 2);
    }

    #[test]
    fn counts_match_brute_force_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for round in 0..100 {
            let p_size = 1 + rand::Rng::random_range(&mut rng, 0..4usize);
            let g_size = 1 + rand::Rng::random_range(&mut rng, 0..7usize);
            let p = Pattern::from_graph(&random_connected_graph(&mut rng, p_size, 2, 2)).unwrap();
            let g = random_connected_graph(&mut rng, g_size, 2, 2);
            let general = count_occurrences(&p, &g, MatchMode::General);
            let induced = count_occurrences(&p, &g, MatchMode::Induced);
            assert_eq!(general, brute_force_count(p.graph(), &g, false), "round {round}");
            assert_eq!(induced, brute_force_count(p.graph(), &g, true), "round {round}");
            // induced occurrences are a subset of general ones
            assert!(induced <= general);
            assert_eq!(exists_general(&p, &g), general >= 1);
            assert_eq!(exists_induced(&p, &g), induced >= 1);
        }
    }

    #[test]
    fn equal_sized_match_is_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let g = random_connected_graph(&mut rng, 5, 2, 2);
            let p = Pattern::from_graph(&g).unwrap();
            let h = random_connected_graph(&mut rng, 5, 2, 2);
            if p.vertex_count() == h.vertex_count() && p.edge_count() == h.edge_count() {
                let iso = crate::testutil::brute_force_isomorphic(p.graph(), &h);
                assert_eq!(exists_general(&p, &h) && exists_induced(&p, &h), iso);
            }
        }
    }
}
