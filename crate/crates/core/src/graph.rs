//! Simple undirected graphs with value semantics and the edge subdivision
//! operation.
//!
//! Vertices are dense integer ids `0..n`. Every operation returns a new
//! graph; nothing mutates in place. Subdividing an edge always hands the new
//! vertex the id `n`, so a sequence of subdivision steps is replayable and
//! serializable.

use std::collections::BTreeSet;
use thiserror::Error;

pub type VertexId = usize;

/// One edge subdivision, naming an edge of the graph it is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubdivisionStep {
    pub u: VertexId,
    pub v: VertexId,
}

impl SubdivisionStep {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        SubdivisionStep { u, v }
    }

    /// Endpoints in ascending order.
    pub fn sorted(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// An ordered sequence of subdivisions; later steps may name edges created
/// by earlier ones.
pub type SubdivisionSolution = Vec<SubdivisionStep>;

/// Length of a shortest cycle. Forests get the explicit sentinel, never a
/// large integer stand-in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(&self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(*g),
            Girth::Infinite => None,
        }
    }

    /// True when the girth is `>= bound` (always true for forests).
    pub fn at_least(&self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => *g >= bound,
            Girth::Infinite => true,
        }
    }

    /// True when the girth strictly exceeds `bound`.
    pub fn exceeds(&self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => *g > bound,
            Girth::Infinite => true,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    InvalidVertex { vertex: VertexId, vertex_count: usize },
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {{{0}, {1}}} not present")]
    MissingEdge(VertexId, VertexId),
    #[error("step {index}: edge {{{u}, {v}}} not present")]
    InvalidStep { index: usize, u: VertexId, v: VertexId },
    #[error("graph is acyclic")]
    Acyclic,
    #[error("graph is not connected")]
    NotConnected,
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<BTreeSet<VertexId>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph { n, m: 0, adj: vec![BTreeSet::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::InvalidVertex { vertex: u, vertex_count: self.n });
        }
        if v >= self.n {
            return Err(GraphError::InvalidVertex { vertex: v, vertex_count: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    fn delete_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(self.adj[u].contains(&v));
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        self.m -= 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[v]
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with one extra edge.
    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// New graph with the given edges removed.
    pub fn without_edges(&self, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
            }
            g.delete_edge(u, v);
        }
        Ok(g)
    }

    /// Subdivide edge `{u, v}`: the edge is removed and a fresh vertex `w`
    /// with id `vertex_count` is joined to both `u` and `v`.
    pub fn subdivide(&self, step: SubdivisionStep) -> Result<Graph, GraphError> {
        let (u, v) = (step.u, step.v);
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let w = self.n;
        let mut g = self.clone();
        g.delete_edge(u, v);
        g.n += 1;
        g.adj.push(BTreeSet::new());
        g.insert_edge(u, w).expect("fresh vertex");
        g.insert_edge(v, w).expect("fresh vertex");
        Ok(g)
    }

    /// Fold `subdivide` over the steps left to right. Fails at the first
    /// step naming a missing edge, reporting its index.
    pub fn apply_solution(&self, sol: &[SubdivisionStep]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for (index, step) in sol.iter().enumerate() {
            g = g.subdivide(*step).map_err(|_| GraphError::InvalidStep {
                index,
                u: step.u,
                v: step.v,
            })?;
        }
        Ok(g)
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        // A graph is a forest iff m = n - (number of components).
        self.m + self.components().len() == self.n || self.n == 0
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.m == self.n - 1
    }

    /// BFS distance, `None` when `u` and `v` are in different components.
    pub fn dist(&self, u: VertexId, v: VertexId) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Some(dist[y]);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Length of a shortest cycle; `Infinite` for forests.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            for d in dist.iter_mut() {
                *d = usize::MAX;
            }
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                // Cycles through deeper vertices cannot beat the best found.
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Exactly the vertices lying on some cycle of length `girth`.
    pub fn shortest_cycle_vertices(&self) -> Result<BTreeSet<VertexId>, GraphError> {
        let g = match self.girth() {
            Girth::Finite(g) => g,
            Girth::Infinite => return Err(GraphError::Acyclic),
        };
        let mut on_cycle = BTreeSet::new();
        for v in 0..self.n {
            if self.lies_on_cycle_of_length(v, g) {
                on_cycle.insert(v);
            }
        }
        Ok(on_cycle)
    }

    /// DFS for a simple cycle of length exactly `len` through `start`,
    /// pruned by BFS distance back to `start`.
    fn lies_on_cycle_of_length(&self, start: VertexId, len: usize) -> bool {
        let mut dist = vec![usize::MAX; self.n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let mut in_path = vec![false; self.n];
        in_path[start] = true;
        self.cycle_dfs(start, start, 0, len, &dist, &mut in_path)
    }

    fn cycle_dfs(
        &self,
        start: VertexId,
        cur: VertexId,
        depth: usize,
        len: usize,
        dist: &[usize],
        in_path: &mut Vec<bool>,
    ) -> bool {
        if depth + 1 == len {
            return self.has_edge(cur, start);
        }
        for &next in &self.adj[cur] {
            if in_path[next] || dist[next] == usize::MAX || dist[next] > len - depth - 1 {
                continue;
            }
            in_path[next] = true;
            if self.cycle_dfs(start, next, depth + 1, len, dist, in_path) {
                in_path[next] = false;
                return true;
            }
            in_path[next] = false;
        }
        false
    }

    /// Remove degree-one vertices one at a time (smallest id first) until
    /// none remain. Returns the core graph and a map from its vertex ids
    /// back to ids of `self`. For trees this leaves a single vertex.
    pub fn two_core(&self) -> Result<(Graph, Vec<VertexId>), GraphError> {
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let mut g = self.clone();
        let mut alive: Vec<VertexId> = (0..self.n).collect();
        loop {
            let leaf = g.vertices().find(|&v| g.degree(v) == 1);
            match leaf {
                None => break,
                Some(v) => {
                    let keep: Vec<VertexId> =
                        g.vertices().filter(|&x| x != v).collect();
                    let (smaller, map) = g.induced_subgraph(&keep);
                    alive = map.iter().map(|&i| alive[i]).collect();
                    g = smaller;
                }
            }
        }
        Ok((g, alive))
    }

    /// True iff the graph has at least 3 vertices, is connected, and has no
    /// cutvertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        !self.has_cutvertex()
    }

    fn has_cutvertex(&self) -> bool {
        // Iterative Hopcroft-Tarjan lowpoint computation.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut timer = 0usize;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut root_children = 0usize;
            // Stack of (vertex, neighbor iterator position).
            let mut stack: Vec<(VertexId, Vec<VertexId>, usize)> = Vec::new();
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, self.adj[root].iter().copied().collect(), 0));
            while let Some((u, nbrs, idx)) = stack.last_mut() {
                if *idx < nbrs.len() {
                    let v = nbrs[*idx];
                    *idx += 1;
                    let u = *u;
                    if disc[v] == usize::MAX {
                        parent[v] = u;
                        if u == root {
                            root_children += 1;
                        }
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, self.adj[v].iter().copied().collect(), 0));
                    } else if v != parent[u] {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    let u = *u;
                    stack.pop();
                    if let Some((p, _, _)) = stack.last() {
                        let p = *p;
                        low[p] = low[p].min(low[u]);
                        if p != root && low[u] >= disc[p] {
                            return true;
                        }
                    }
                }
            }
            if root_children > 1 {
                return true;
            }
        }
        false
    }

    /// Induced subgraph on the given vertices (must be distinct and valid).
    /// Returns the graph on relabeled ids `0..k` plus the map new id -> old
    /// id, sorted ascending by old id.
    pub fn induced_subgraph(&self, verts: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut sorted: Vec<VertexId> = verts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in sorted.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut g = Graph::empty(sorted.len());
        for (new_u, &old_u) in sorted.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                let new_v = old_to_new[old_v];
                if new_v != usize::MAX && new_u < new_v {
                    g.insert_edge(new_u, new_v).expect("valid induced edge");
                }
            }
        }
        (g, sorted)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.insert_edge(u, v).expect("copied edge");
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + self.n, v + self.n).expect("shifted edge");
        }
        g
    }

    /// Edges with one endpoint in `xs` and the other in `ys` (disjoint sets).
    pub fn edges_between(&self, xs: &BTreeSet<VertexId>, ys: &BTreeSet<VertexId>) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for &u in xs {
            for &v in &self.adj[u] {
                if ys.contains(&v) {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    // Named constructors used all over the tests and the pattern corpus.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete")
    }

    /// Star with center 0 and the given number of leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).expect("complete bipartite")
    }

    /// Two adjacent centers 0 and 1 with `left` leaves on 0 and `right`
    /// leaves on 1.
    pub fn bistar(left: usize, right: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        let mut next = 2;
        for _ in 0..left {
            edges.push((0, next));
            next += 1;
        }
        for _ in 0..right {
            edges.push((1, next));
            next += 1;
        }
        Graph::from_edges(next, &edges).expect("bistar")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivide_triangle_gives_c4() {
        let k3 = Graph::complete(3);
        let g = k3.subdivide(SubdivisionStep::new(0, 1)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(g.girth(), Girth::Finite(4));
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(3), 2);
    }

    #[test]
    fn subdivide_single_edge_gives_p3() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = g.subdivide(SubdivisionStep::new(0, 1)).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn subdivide_c4_gives_c5() {
        let g = Graph::cycle(4).subdivide(SubdivisionStep::new(0, 1)).unwrap();
        assert_eq!(g.girth(), Girth::Finite(5));
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn subdivide_missing_edge_fails() {
        let g = Graph::path(3);
        assert_eq!(
            g.subdivide(SubdivisionStep::new(0, 2)),
            Err(GraphError::MissingEdge(0, 2))
        );
    }

    #[test]
    fn apply_solution_chains_derived_edges() {
        let k3 = Graph::complete(3);
        let g = k3
            .apply_solution(&[SubdivisionStep::new(0, 1), SubdivisionStep::new(0, 3)])
            .unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.girth(), Girth::Finite(5));
    }

    #[test]
    fn apply_solution_empty_is_identity() {
        let g = Graph::cycle(5);
        assert_eq!(g.apply_solution(&[]).unwrap(), g);
    }

    #[test]
    fn apply_solution_reports_failing_index() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let err = g
            .apply_solution(&[SubdivisionStep::new(0, 1), SubdivisionStep::new(0, 1)])
            .unwrap_err();
        assert_eq!(err, GraphError::InvalidStep { index: 1, u: 0, v: 1 });
    }

    #[test]
    fn girth_basics() {
        assert_eq!(Graph::cycle(5).girth(), Girth::Finite(5));
        assert_eq!(Graph::complete(4).girth(), Girth::Finite(3));
        assert_eq!(Graph::path(6).girth(), Girth::Infinite);
        assert_eq!(Graph::star(4).girth(), Girth::Infinite);
        assert_eq!(Graph::complete_bipartite(2, 3).girth(), Girth::Finite(4));
    }

    #[test]
    fn girth_ordering() {
        assert!(Girth::Finite(3) < Girth::Finite(4));
        assert!(Girth::Finite(100) < Girth::Infinite);
        assert!(Girth::Infinite.exceeds(1000));
        assert!(Girth::Finite(5).exceeds(4));
        assert!(!Girth::Finite(5).exceeds(5));
    }

    #[test]
    fn shortest_cycle_vertices_c4_with_pendant() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
        edges.push((3, 4));
        let g = Graph::from_edges(5, &edges).unwrap();
        let on = g.shortest_cycle_vertices().unwrap();
        assert_eq!(on, BTreeSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn shortest_cycle_vertices_k4() {
        let g = Graph::complete(4);
        assert_eq!(g.shortest_cycle_vertices().unwrap().len(), 4);
    }

    #[test]
    fn shortest_cycle_vertices_two_triangles_joined() {
        // Two disjoint triangles plus a connecting edge: all six vertices lie
        // on a shortest (3-)cycle. Frozen from brute-force enumeration of
        // 3-subsets inducing triangles.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)],
        )
        .unwrap();
        assert_eq!(
            g.shortest_cycle_vertices().unwrap(),
            BTreeSet::from([0, 1, 2, 3, 4, 5])
        );
    }

    #[test]
    fn shortest_cycle_vertices_acyclic_errors() {
        assert_eq!(
            Graph::path(4).shortest_cycle_vertices(),
            Err(GraphError::Acyclic)
        );
    }

    #[test]
    fn two_core_strips_pendant_paths() {
        // C5 with a pendant path of length 2 hanging off vertex 0.
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (5, 6)],
        )
        .unwrap();
        let (core, map) = g.two_core().unwrap();
        assert_eq!(core.vertex_count(), 5);
        assert_eq!(core.girth(), Girth::Finite(5));
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn two_core_of_tree_is_single_vertex() {
        let (core, map) = Graph::star(3).two_core().unwrap();
        assert_eq!(core.vertex_count(), 1);
        assert_eq!(map.len(), 1);
        assert_eq!(core.edge_count(), 0);
    }

    #[test]
    fn two_core_requires_connected() {
        let g = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert!(matches!(g.two_core(), Err(GraphError::NotConnected)));
    }

    #[test]
    fn two_connected_basics() {
        assert!(Graph::cycle(4).is_two_connected());
        assert!(!Graph::path(3).is_two_connected());
        // Two triangles sharing one vertex: the shared vertex cuts.
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(!bowtie.is_two_connected());
        assert!(Graph::complete(3).is_two_connected());
        assert!(!Graph::from_edges(2, &[(0, 1)]).unwrap().is_two_connected());
    }

    #[test]
    fn induced_subgraph_and_mapping() {
        let g = Graph::cycle(5);
        let (sub, map) = g.induced_subgraph(&[0, 1, 3]);
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(sub.edges(), vec![(0, 1)]);
    }

    #[test]
    fn edges_between_sets() {
        let g = Graph::complete_bipartite(2, 2);
        let xs = BTreeSet::from([0, 1]);
        let ys = BTreeSet::from([2, 3]);
        assert_eq!(g.edges_between(&xs, &ys).len(), 4);
    }

    #[test]
    fn forest_and_tree_recognition() {
        assert!(Graph::path(5).is_tree());
        assert!(Graph::star(3).disjoint_union(&Graph::path(2)).is_forest());
        assert!(!Graph::cycle(4).is_forest());
        assert!(!Graph::star(3).disjoint_union(&Graph::path(2)).is_tree());
    }

    #[test]
    fn dist_is_bfs_distance() {
        let g = Graph::cycle(6);
        assert_eq!(g.dist(0, 3), Some(3));
        assert_eq!(g.dist(0, 5), Some(1));
        let h = Graph::path(2).disjoint_union(&Graph::path(2));
        assert_eq!(h.dist(0, 2), None);
    }

    #[test]
    fn subdivision_preserves_degrees() {
        let g = Graph::complete(4);
        let s = g.subdivide(SubdivisionStep::new(1, 2)).unwrap();
        for v in 0..4 {
            assert_eq!(s.degree(v), g.degree(v));
        }
        assert_eq!(s.degree(4), 2);
    }
}
