//! Reductions for trees with exactly two branching vertices: stretch each
//! deleted source edge into a long path and attach rooted broom gadgets so
//! that any surviving induced path of the right length completes a copy of
//! the tree.

use super::{
    expect_problem, EdgeClass, Lemma, Recipe, ReductionArtifact, ReductionError, SourceInstance,
    SourceProblem, TargetBuilder,
};
use crate::graph::{Graph, VertexId};
use crate::pattern::tree_branching_profile;

struct TreeShape {
    /// Distance between the two branching vertices.
    d: usize,
    /// Longest pendant path hanging off a branching vertex, in edges.
    lambda: usize,
    /// Pendant paths needed at each end.
    c: usize,
}

fn tree_shape(h: &Graph) -> Result<TreeShape, ReductionError> {
    let profile = tree_branching_profile(h)
        .map_err(|e| ReductionError::PatternNotEligible(e.to_string()))?;
    let (u, v, d) = profile.pair.ok_or_else(|| {
        ReductionError::PatternNotEligible("tree must have exactly two branching vertices".into())
    })?;
    // Components hanging off the branching path are pendant paths; the
    // longest one, measured in edges from the branching vertex, sets the
    // gadget broom length.
    let on_path = path_between(h, u, v);
    let rest: Vec<VertexId> = h.vertices().filter(|w| !on_path.contains(w)).collect();
    let (fringe, _) = h.induced_subgraph(&rest);
    let lambda = fringe.components().iter().map(Vec::len).max().unwrap_or(0);
    let c = h.degree(u).max(h.degree(v)) - 1;
    Ok(TreeShape { d, lambda, c })
}

fn path_between(h: &Graph, u: VertexId, v: VertexId) -> Vec<VertexId> {
    // BFS parents; trees have a unique path.
    let mut parent = vec![usize::MAX; h.vertex_count()];
    let mut queue = std::collections::VecDeque::from([u]);
    let mut seen = vec![false; h.vertex_count()];
    seen[u] = true;
    while let Some(x) = queue.pop_front() {
        for y in h.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path
}

/// Attach a broom: a handle of `q` edges from the root, then `c` pendant
/// paths of `lambda` edges each at the handle's end.
fn attach_broom(b: &mut TargetBuilder, root: VertexId, q: usize, lambda: usize, c: usize, label: String) {
    let len = q + c * lambda;
    let start = b.block(label, len);
    let mut next = start;
    let mut head = root;
    for _ in 0..q {
        b.edge(head, next, EdgeClass::Inert);
        head = next;
        next += 1;
    }
    for _ in 0..c {
        let mut tip = head;
        for _ in 0..lambda {
            b.edge(tip, next, EdgeClass::Inert);
            tip = next;
            next += 1;
        }
    }
}

fn build_tree_reduction(
    src: &SourceInstance,
    h: &Graph,
    lemma: Lemma,
    expected: SourceProblem,
    source_pattern: Graph,
    broom_handles: std::ops::RangeInclusive<usize>,
) -> Result<ReductionArtifact, ReductionError> {
    expect_problem(src, expected)?;
    let shape = tree_shape(h)?;
    let d = shape.d;
    let k_prime = src.budget;
    let stretch_budget = d * k_prime;
    let g = &src.graph;
    let n = g.vertex_count();
    let mut b = TargetBuilder::new();
    b.block("base", n);
    for (u, v) in g.edges() {
        b.edge(u, v, EdgeClass::Source(u, v));
    }
    for x in 0..n {
        for q in broom_handles.clone() {
            for copy in 0..=stretch_budget {
                attach_broom(
                    &mut b,
                    x,
                    q,
                    shape.lambda,
                    shape.c,
                    format!("broom:{x}:{q}:{copy}"),
                );
            }
        }
    }
    Ok(b.finish(
        lemma,
        src.clone(),
        Some(source_pattern),
        stretch_budget,
        Recipe::Stretch { stretch: d },
        vec![format!("d={d} lambda={} c={}", shape.lambda, shape.c)],
    ))
}

/// Branching vertices at even distance d = 2r: brooms with handles
/// 0..r-1, budget d per deleted edge, source problem short-path deletion.
pub fn reduce_tree_even(src: &SourceInstance, h: &Graph) -> Result<ReductionArtifact, ReductionError> {
    let shape = tree_shape(h)?;
    if shape.d < 2 || shape.d % 2 != 0 {
        return Err(ReductionError::PatternNotEligible(
            "branching distance must be even and at least 2".into(),
        ));
    }
    let r = shape.d / 2;
    build_tree_reduction(
        src,
        h,
        Lemma::TreeEven,
        SourceProblem::P3FreeEdgeDeletion,
        Graph::path(3),
        0..=r - 1,
    )
}

/// Branching vertices at odd distance d = 2r + 3 >= 5: brooms with handles
/// 0..r, source problem one-longer-path deletion.
pub fn reduce_tree_odd(src: &SourceInstance, h: &Graph) -> Result<ReductionArtifact, ReductionError> {
    let shape = tree_shape(h)?;
    if shape.d < 5 || shape.d % 2 != 1 {
        return Err(ReductionError::PatternNotEligible(
            "branching distance must be odd and at least 5".into(),
        ));
    }
    let r = (shape.d - 3) / 2;
    build_tree_reduction(
        src,
        h,
        Lemma::TreeOdd,
        SourceProblem::P4FreeEdgeDeletion,
        Graph::path(4),
        0..=r,
    )
}
