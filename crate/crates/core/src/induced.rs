//! Detection, enumeration, and counting of induced copies of a pattern
//! inside a host graph.
//!
//! Patterns may be disconnected; components are embedded one after another
//! with the full induced condition (adjacency and non-adjacency) checked
//! against everything already placed, so cross-component anti-adjacency
//! comes for free.

use crate::graph::{Graph, VertexId};

/// Injective map from pattern vertices to host vertices realizing the
/// pattern as an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedEmbedding {
    /// `mapping[p]` is the host vertex playing pattern vertex `p`.
    pub mapping: Vec<VertexId>,
}

impl InducedEmbedding {
    /// Host vertex set of the copy, ascending.
    pub fn image(&self) -> Vec<VertexId> {
        let mut image = self.mapping.clone();
        image.sort_unstable();
        image
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    /// Pattern vertices in backtracking order.
    order: Vec<VertexId>,
    /// Host adjacency as bit blocks for O(1) pair checks.
    host_bits: Vec<Vec<u64>>,
    blocks: usize,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        let blocks = host.vertex_count().div_ceil(64).max(1);
        let mut host_bits = vec![vec![0u64; blocks]; host.vertex_count()];
        for u in host.vertices() {
            for v in host.neighbors(u) {
                host_bits[u][v / 64] |= 1 << (v % 64);
            }
        }
        Matcher { host, pattern, order: match_order(pattern), host_bits, blocks }
    }

    fn host_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.host_bits[u][v / 64] & (1 << (v % 64)) != 0
    }

    /// First embedding under the backtracking order, or None.
    fn find(&self) -> Option<InducedEmbedding> {
        let mut assigned = vec![usize::MAX; self.pattern.vertex_count()];
        let mut used = vec![0u64; self.blocks];
        if self.extend(0, &mut assigned, &mut used) {
            Some(InducedEmbedding { mapping: assigned })
        } else {
            None
        }
    }

    fn extend(&self, idx: usize, assigned: &mut Vec<VertexId>, used: &mut Vec<u64>) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let p = self.order[idx];
        let pdeg = self.pattern.degree(p);
        'cand: for c in self.host.vertices() {
            if used[c / 64] & (1 << (c % 64)) != 0 || self.host.degree(c) < pdeg {
                continue;
            }
            for &q in &self.order[..idx] {
                let qc = assigned[q];
                if self.pattern.has_edge(p, q) != self.host_adjacent(c, qc) {
                    continue 'cand;
                }
            }
            assigned[p] = c;
            used[c / 64] |= 1 << (c % 64);
            if self.extend(idx + 1, assigned, used) {
                return true;
            }
            used[c / 64] &= !(1 << (c % 64));
            assigned[p] = usize::MAX;
        }
        false
    }
}

/// Pattern vertices component by component (components by smallest member),
/// inside a component by decreasing degree with id as tie-break, preferring
/// vertices adjacent to something already ordered so partial assignments
/// stay connected and prune early.
fn match_order(pattern: &Graph) -> Vec<VertexId> {
    let mut order = Vec::with_capacity(pattern.vertex_count());
    for comp in pattern.components() {
        let mut remaining: Vec<VertexId> = comp.clone();
        remaining.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
        let mut placed: Vec<VertexId> = Vec::new();
        while !remaining.is_empty() {
            let pos = remaining
                .iter()
                .position(|&v| {
                    placed.is_empty() || placed.iter().any(|&p| pattern.has_edge(p, v))
                })
                .unwrap_or(0);
            placed.push(remaining.remove(pos));
        }
        order.extend(placed);
    }
    order
}

/// Some induced copy of `pattern` in `host`, or None. Deterministic: the
/// first embedding found under the fixed backtracking order.
pub fn find_induced_copy(host: &Graph, pattern: &Graph) -> Option<InducedEmbedding> {
    if pattern.vertex_count() > host.vertex_count() {
        return None;
    }
    Matcher::new(host, pattern).find()
}

pub fn is_h_free(host: &Graph, pattern: &Graph) -> bool {
    find_induced_copy(host, pattern).is_none()
}

/// Number of distinct vertex subsets of the host inducing a copy of the
/// pattern. Automorphic re-embeddings of one subset count once.
pub fn count_induced_copies(host: &Graph, pattern: &Graph) -> usize {
    let k = pattern.vertex_count();
    if k > host.vertex_count() {
        return 0;
    }
    let mut count = 0;
    let mut subset: Vec<VertexId> = Vec::with_capacity(k);
    count_rec(host, pattern, 0, &mut subset, &mut count);
    count
}

fn count_rec(
    host: &Graph,
    pattern: &Graph,
    from: VertexId,
    subset: &mut Vec<VertexId>,
    count: &mut usize,
) {
    if subset.len() == pattern.vertex_count() {
        let (induced, _) = host.induced_subgraph(subset);
        if induced.edge_count() == pattern.edge_count()
            && find_induced_copy(&induced, pattern)
                .map_or(false, |emb| emb.mapping.len() == induced.vertex_count())
        {
            *count += 1;
        }
        return;
    }
    let need = pattern.vertex_count() - subset.len();
    for v in from..host.vertex_count() {
        if host.vertex_count() - v < need {
            break;
        }
        subset.push(v);
        count_rec(host, pattern, v + 1, subset, count);
        subset.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_in_c5() {
        let emb = find_induced_copy(&Graph::cycle(5), &Graph::path(3));
        let emb = emb.expect("C5 contains an induced P3");
        let m = emb.mapping;
        let host = Graph::cycle(5);
        assert!(host.has_edge(m[0], m[1]) && host.has_edge(m[1], m[2]));
        assert!(!host.has_edge(m[0], m[2]));
    }

    #[test]
    fn no_induced_c4_in_k4() {
        assert!(find_induced_copy(&Graph::complete(4), &Graph::cycle(4)).is_none());
    }

    #[test]
    fn joined_triangles_contain_no_induced_2k3() {
        let host = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)],
        )
        .unwrap();
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(find_induced_copy(&host, &two_triangles).is_none());
        // The pattern does appear once the joining edge is also part of it.
        let joined = host.clone();
        assert!(find_induced_copy(&host, &joined).is_some());
    }

    #[test]
    fn h_free_basics() {
        assert!(is_h_free(&Graph::cycle(5), &Graph::complete(3)));
        assert!(!is_h_free(&Graph::complete(3), &Graph::complete(3)));
        let c5 = Graph::cycle(4).subdivide(crate::graph::SubdivisionStep::new(0, 1)).unwrap();
        assert!(is_h_free(&c5, &Graph::cycle(4)));
    }

    #[test]
    fn counting_by_subset() {
        assert_eq!(count_induced_copies(&Graph::complete(4), &Graph::complete(3)), 4);
        assert_eq!(count_induced_copies(&Graph::cycle(6), &Graph::path(4)), 6);
        assert_eq!(count_induced_copies(&Graph::complete(4), &Graph::cycle(4)), 0);
        // K4 has one 4-subset though automorphisms re-embed it 24 ways.
        assert_eq!(count_induced_copies(&Graph::complete(4), &Graph::complete(4)), 1);
    }

    #[test]
    fn disconnected_pattern_requires_anti_adjacency() {
        // 2K2 inside P5: the two edges must not touch.
        let p5 = Graph::path(5);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let emb = find_induced_copy(&p5, &two_k2).expect("P5 contains induced 2K2");
        let m = emb.mapping;
        assert!(!p5.has_edge(m[0], m[2]) && !p5.has_edge(m[0], m[3]));
        assert!(!p5.has_edge(m[1], m[2]) && !p5.has_edge(m[1], m[3]));
        // P4 does not contain 2K2 (edges would have to touch or be adjacent).
        assert!(find_induced_copy(&Graph::path(4), &two_k2).is_none());
    }

    #[test]
    fn agreement_with_exhaustive_enumeration() {
        // find_induced_copy versus subset enumeration on every host with at
        // most 6 vertices for a few fixed patterns.
        let patterns = vec![Graph::path(3), Graph::complete(3), Graph::cycle(4), Graph::star(3)];
        for host in crate::canon::enumerate_graphs_up_to(6) {
            for p in &patterns {
                let found = find_induced_copy(&host, p).is_some();
                let counted = count_induced_copies(&host, p) > 0;
                assert_eq!(found, counted, "host {host:?} pattern {p:?}");
            }
        }
    }

    #[test]
    fn embedding_is_deterministic() {
        let host = Graph::cycle(6);
        let a = find_induced_copy(&host, &Graph::path(4)).unwrap();
        let b = find_induced_copy(&host, &Graph::path(4)).unwrap();
        assert_eq!(a, b);
    }
}
