//! Canonical forms for small graphs, isomorphism testing, and exhaustive
//! enumeration of graphs up to isomorphism.
//!
//! The canonical form is the lexicographically largest lower-triangle
//! adjacency bit string over all vertex orderings, found by backtracking
//! with prefix pruning and twin elimination. Intended for graphs up to 16
//! vertices; everything that needs it here (oracle states, pattern cores)
//! stays far below that.

use crate::graph::{Graph, VertexId};
use thiserror::Error;

pub const DEFAULT_CANON_BOUND: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("graph on {vertices} vertices exceeds canonicalization bound {bound}")]
    TooLarge { vertices: usize, bound: usize },
}

/// Equal byte strings iff the underlying graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_form_bounded(g, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<CanonicalForm, CanonError> {
    let n = g.vertex_count();
    if n > bound.min(16) {
        return Err(CanonError::TooLarge { vertices: n, bound: bound.min(16) });
    }
    let rows: Vec<u16> = (0..n)
        .map(|u| {
            let mut mask = 0u16;
            for v in g.neighbors(u) {
                mask |= 1 << v;
            }
            mask
        })
        .collect();
    let best = search_max_labeling(n, &rows);
    Ok(pack(n, &best))
}

/// Backtracking over vertex orderings. `rows_out[i]` holds the adjacency
/// bits of the i-th placed vertex against positions `0..i`.
fn search_max_labeling(n: usize, rows: &[u16]) -> Vec<u16> {
    let mut best: Option<Vec<u16>> = None;
    let mut cur = vec![0u16; n];
    let mut placed: Vec<VertexId> = Vec::with_capacity(n);
    let mut used = 0u16;
    rec(n, rows, &mut cur, &mut placed, &mut used, &mut best);
    best.unwrap_or_default()
}

fn rec(
    n: usize,
    rows: &[u16],
    cur: &mut Vec<u16>,
    placed: &mut Vec<VertexId>,
    used: &mut u16,
    best: &mut Option<Vec<u16>>,
) {
    let i = placed.len();
    if i == n {
        if best.as_ref().map_or(true, |b| cur[..] > b[..]) {
            *best = Some(cur.clone());
        }
        return;
    }
    // Candidate bits against the placed prefix, deduplicating twins: if two
    // unused vertices have identical adjacency outside each other, their
    // transposition is an automorphism and one branch suffices.
    let mut cands: Vec<(u16, VertexId)> = Vec::new();
    'outer: for v in 0..n {
        if *used & (1 << v) != 0 {
            continue;
        }
        let mut bits = 0u16;
        for (j, &p) in placed.iter().enumerate() {
            if rows[v] & (1 << p) != 0 {
                bits |= 1 << j;
            }
        }
        for &(obits, o) in &cands {
            if obits == bits {
                let excl = !((1u16 << v) | (1u16 << o));
                if (rows[v] ^ rows[o]) & excl == 0 {
                    continue 'outer;
                }
            }
        }
        cands.push((bits, v));
    }
    cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (bits, v) in cands {
        if let Some(b) = best.as_ref() {
            // cur[..i] == b[..i] holds on every path that reaches here with
            // a recorded best, so only the next row decides.
            if cur[..i] == b[..i] && bits < b[i] {
                break;
            }
        }
        cur[i] = bits;
        placed.push(v);
        *used |= 1 << v;
        rec(n, rows, cur, placed, used, best);
        placed.pop();
        *used &= !(1 << v);
    }
}

fn pack(n: usize, rows: &[u16]) -> CanonicalForm {
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..i {
            acc = (acc << 1) | ((row >> j) & 1) as u8;
            nbits += 1;
            if nbits == 8 {
                bytes.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    CanonicalForm(bytes)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// All graphs on exactly `n` vertices, one per isomorphism class, built by
/// extending the classes on `n-1` vertices with every possible neighborhood
/// of a new vertex. Deterministic output order.
pub fn enumerate_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut classes: Vec<(CanonicalForm, Graph)> = vec![(
        canonical_form(&Graph::empty(1)).unwrap(),
        Graph::empty(1),
    )];
    for k in 2..=n {
        let mut next: Vec<(CanonicalForm, Graph)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (_, g) in &classes {
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = g.edges();
                for v in 0..k - 1 {
                    if mask & (1 << v) != 0 {
                        edges.push((v, k - 1));
                    }
                }
                let ext = Graph::from_edges(k, &edges).expect("extension");
                let cf = canonical_form(&ext).expect("small graph");
                if seen.insert(cf.clone()) {
                    next.push((cf, ext));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        classes = next;
    }
    classes.into_iter().map(|(_, g)| g).collect()
}

/// All graphs on `1..=n` vertices, one per isomorphism class.
pub fn enumerate_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(enumerate_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.vertex_count(), &edges).unwrap()
    }

    #[test]
    fn canonical_invariant_under_relabeling() {
        let c4 = Graph::cycle(4);
        let c4b = relabel(&c4, &[2, 0, 3, 1]);
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&c4b).unwrap());
    }

    #[test]
    fn canonical_separates_p4_from_claw() {
        let p4 = Graph::path(4);
        let claw = Graph::star(3);
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&claw).unwrap());
    }

    #[test]
    fn canonical_is_deterministic() {
        let k3 = Graph::complete(3);
        let a = canonical_form(&k3).unwrap();
        let b = canonical_form(&k3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn canonical_rejects_large_graphs() {
        let g = Graph::empty(17);
        assert!(matches!(
            canonical_form(&g),
            Err(CanonError::TooLarge { vertices: 17, bound: 16 })
        ));
    }

    #[test]
    fn isomorphism_spot_checks() {
        assert!(are_isomorphic(&Graph::cycle(4), &Graph::complete_bipartite(2, 2)).unwrap());
        assert!(!are_isomorphic(&Graph::path(4), &Graph::star(3)).unwrap());
        let k33 = Graph::complete_bipartite(3, 3);
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!are_isomorphic(&k33, &prism).unwrap());
    }

    #[test]
    fn canonical_handles_dense_symmetric_graphs() {
        // Complete graphs have a single orbit; twin pruning keeps this fast.
        let k8 = Graph::complete(8);
        let g = relabel(&k8, &[3, 1, 4, 0, 7, 6, 2, 5]);
        assert_eq!(canonical_form(&k8).unwrap(), canonical_form(&g).unwrap());
        let e10 = Graph::empty(10);
        assert!(canonical_form(&e10).is_ok());
    }

    #[test]
    fn enumeration_counts_match_oeis() {
        // Number of graphs on n unlabeled nodes: 1, 2, 4, 11, 34, 156, 1044.
        assert_eq!(enumerate_graphs(1).len(), 1);
        assert_eq!(enumerate_graphs(2).len(), 2);
        assert_eq!(enumerate_graphs(3).len(), 4);
        assert_eq!(enumerate_graphs(4).len(), 11);
        assert_eq!(enumerate_graphs(5).len(), 34);
        assert_eq!(enumerate_graphs(6).len(), 156);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let graphs = enumerate_graphs(5);
        let mut forms = std::collections::HashSet::new();
        for g in &graphs {
            assert!(forms.insert(canonical_form(g).unwrap()));
        }
    }
}
