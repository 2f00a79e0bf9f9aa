//! Reductions from edge-deletion problems: the direct equivalence for
//! rigid patterns, the branching-vertex construction, and the two
//! triangle-gadget constructions.

use super::{
    expect_problem, EdgeClass, Lemma, Recipe, ReductionArtifact, ReductionError, SourceInstance,
    SourceProblem, TargetBuilder,
};
use crate::graph::{Graph, VertexId};
use crate::pattern::{
    branching_vertices, find_adjacent_hanging_triangles, find_roof_triangle, thm_easy_case,
    ThmEasyCase,
};

/// Patterns with minimum degree 2 whose degree-2 vertices sit on triangles
/// cannot use any subdivision vertex, so subdividing an edge once acts
/// exactly like deleting it. Target instance = source instance.
pub fn reduce_edge_deletion_equiv(
    src: &SourceInstance,
    h: &Graph,
) -> Result<ReductionArtifact, ReductionError> {
    expect_problem(src, SourceProblem::EdgeDeletion)?;
    if thm_easy_case(h) != Some(ThmEasyCase::Case1) || h.min_degree() < Some(2) {
        return Err(ReductionError::PatternNotEligible(
            "needs minimum degree 2 with every degree-2 neighborhood adjacent".into(),
        ));
    }
    let mut b = TargetBuilder::new();
    b.block("base", src.graph.vertex_count());
    for (u, v) in src.graph.edges() {
        b.edge(u, v, EdgeClass::Source(u, v));
    }
    Ok(b.finish(
        Lemma::EdgeDelEq,
        src.clone(),
        Some(h.clone()),
        src.budget,
        Recipe::OncePerEdge,
        vec![],
    ))
}

/// Decomposition of the pattern around its branching vertices: the paths
/// and cycles left after removing them, each with its attachment edges.
struct FringeComponent {
    vertices: Vec<VertexId>,
    /// Fringe endpoints carrying an edge into the branching set (at most 2).
    attach: Vec<VertexId>,
}

fn fringe_components(h: &Graph, branch: &[VertexId]) -> Vec<FringeComponent> {
    let rest: Vec<VertexId> =
        h.vertices().filter(|v| !branch.contains(v)).collect();
    let (fringe, map) = h.induced_subgraph(&rest);
    fringe
        .components()
        .into_iter()
        .map(|comp| {
            let vertices: Vec<VertexId> = comp.iter().map(|&i| map[i]).collect();
            let mut attach: Vec<VertexId> = vertices
                .iter()
                .copied()
                .filter(|&v| h.neighbors(v).any(|w| branch.contains(&w)))
                .collect();
            attach.sort_unstable();
            FringeComponent { vertices, attach }
        })
        .collect()
}

/// When the branching vertices induce two or more edges, attach enough
/// fringe material to the source graph that destroying the derived pattern
/// among original vertices is the only way out.
pub fn reduce_degree3(src: &SourceInstance, h: &Graph) -> Result<ReductionArtifact, ReductionError> {
    expect_problem(src, SourceProblem::EdgeDeletion)?;
    let branch = branching_vertices(h);
    let (h_prime, _) = h.induced_subgraph(&branch);
    if h_prime.edge_count() < 2 {
        return Err(ReductionError::PatternNotEligible(
            "branching vertices must induce at least two edges".into(),
        ));
    }
    let g = &src.graph;
    let k = src.budget;
    let n = g.vertex_count();
    let mut b = TargetBuilder::new();
    b.block("base", n);
    for (u, v) in g.edges() {
        b.edge(u, v, EdgeClass::Source(u, v));
    }

    for (ci, comp) in fringe_components(h, &branch).iter().enumerate() {
        let (piece, piece_map) = h.induced_subgraph(&comp.vertices);
        let x_edges: usize = comp
            .vertices
            .iter()
            .map(|&v| h.neighbors(v).filter(|w| branch.contains(w)).count())
            .sum();
        // Fringe vertices have degree at most 2 overall, so a component
        // carries at most two attachment edges, and components with any
        // must be paths.
        match (x_edges, comp.vertices.len()) {
            (0, _) => {
                for copy in 0..=k {
                    let start = b.block(format!("free:{ci}:{copy}"), piece.vertex_count());
                    add_piece_edges(&mut b, &piece, start);
                }
            }
            (1, _) => {
                let a_local = local_id(&piece_map, comp.attach[0]);
                for v in 0..n {
                    let start = b.block(format!("pend:{ci}:{v}"), piece.vertex_count());
                    add_piece_edges(&mut b, &piece, start);
                    b.edge(v, start + a_local, EdgeClass::Inert);
                }
            }
            (2, 1) => {
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        let start = b.block(format!("link1:{ci}:{idx}"), k + 1);
                        for copy in 0..=k {
                            b.edge(u, start + copy, EdgeClass::Inert);
                            b.edge(v, start + copy, EdgeClass::Inert);
                        }
                        idx += 1;
                    }
                }
            }
            (2, _) => {
                let a_local = local_id(&piece_map, comp.attach[0]);
                let b_local = local_id(&piece_map, *comp.attach.last().unwrap());
                let mut idx = 0;
                for u in 0..n {
                    for v in u..n {
                        for copy in 0..=k {
                            let start =
                                b.block(format!("link:{ci}:{idx}:{copy}"), piece.vertex_count());
                            add_piece_edges(&mut b, &piece, start);
                            b.edge(u, start + a_local, EdgeClass::Inert);
                            b.edge(v, start + b_local, EdgeClass::Inert);
                        }
                        idx += 1;
                    }
                }
            }
            _ => {
                return Err(ReductionError::PatternNotEligible(
                    "fringe component with more than two attachment edges".into(),
                ))
            }
        }
    }
    Ok(b.finish(
        Lemma::Degree3,
        src.clone(),
        Some(h_prime),
        k,
        Recipe::OncePerEdge,
        vec![],
    ))
}

fn local_id(map: &[VertexId], original: VertexId) -> usize {
    map.iter().position(|&v| v == original).expect("vertex in piece")
}

fn add_piece_edges(b: &mut TargetBuilder, piece: &Graph, start: usize) {
    for (u, v) in piece.edges() {
        b.edge(start + u, start + v, EdgeClass::Inert);
    }
}

/// Split the pattern at the two attachment vertices shared by the triangle
/// book: the book itself becomes the derived deletion pattern, the rest
/// hangs off every source edge in enough copies to be unavoidable.
struct TriangleSplit {
    h_prime: Graph,
    /// Remainder piece (pattern minus the book interior minus attachments).
    piece: Graph,
    /// Piece vertices adjacent to each attachment, as piece-local ids.
    a_hooks: Vec<usize>,
    b_hooks: Vec<usize>,
}

fn split_at_attachments(h: &Graph, a: VertexId, bv: VertexId, core_set: &[VertexId]) -> TriangleSplit {
    let (h_prime, _) = h.induced_subgraph(core_set);
    let rest: Vec<VertexId> =
        h.vertices().filter(|v| !core_set.contains(v)).collect();
    let (piece, map) = h.induced_subgraph(&rest);
    let a_hooks: Vec<usize> = (0..piece.vertex_count())
        .filter(|&i| h.has_edge(map[i], a))
        .collect();
    let b_hooks: Vec<usize> = (0..piece.vertex_count())
        .filter(|&i| h.has_edge(map[i], bv))
        .collect();
    TriangleSplit { h_prime, piece, a_hooks, b_hooks }
}

fn branch_edge_budget_ok(h: &Graph) -> bool {
    let branch = branching_vertices(h);
    let (induced, _) = h.induced_subgraph(&branch);
    induced.edge_count() <= 1
}

pub fn reduce_roof_triangle(
    src: &SourceInstance,
    h: &Graph,
) -> Result<ReductionArtifact, ReductionError> {
    expect_problem(src, SourceProblem::EdgeDeletion)?;
    let (_, (a, bv)) = find_roof_triangle(h).ok_or_else(|| {
        ReductionError::PatternNotEligible("no triangle with exactly two branching vertices".into())
    })?;
    if !branch_edge_budget_ok(h) {
        return Err(ReductionError::PatternNotEligible(
            "branching vertices induce two or more edges; use the degree3 reduction".into(),
        ));
    }
    // All roof triangles share the unique adjacent branching pair, so the
    // book is every degree-2 common neighbor of that pair.
    let mut core_set: Vec<VertexId> = vec![a, bv];
    core_set.extend(
        h.vertices()
            .filter(|&w| h.degree(w) == 2 && h.has_edge(w, a) && h.has_edge(w, bv)),
    );
    core_set.sort_unstable();
    let split = split_at_attachments(h, a, bv, &core_set);

    let g = &src.graph;
    let k = src.budget;
    let mut b = TargetBuilder::new();
    b.block("base", g.vertex_count());
    for (u, v) in g.edges() {
        b.edge(u, v, EdgeClass::Source(u, v));
    }
    for (ei, (u, v)) in g.edges().into_iter().enumerate() {
        for copy in 0..=k {
            let start = b.block(format!("rest:{ei}:{copy}"), split.piece.vertex_count());
            add_piece_edges(&mut b, &split.piece, start);
            for &hook in &split.a_hooks {
                b.edge(u, start + hook, EdgeClass::Inert);
            }
            for &hook in &split.b_hooks {
                b.edge(v, start + hook, EdgeClass::Inert);
            }
        }
    }
    Ok(b.finish(
        Lemma::Roof,
        src.clone(),
        Some(split.h_prime),
        k,
        Recipe::OncePerEdge,
        vec![],
    ))
}

pub fn reduce_hanging_triangles(
    src: &SourceInstance,
    h: &Graph,
) -> Result<ReductionArtifact, ReductionError> {
    expect_problem(src, SourceProblem::EdgeDeletion)?;
    let (_, _, (a, bv)) = find_adjacent_hanging_triangles(h).ok_or_else(|| {
        ReductionError::PatternNotEligible("no adjacent pair of hanging triangles".into())
    })?;
    if find_roof_triangle(h).is_some() {
        return Err(ReductionError::PatternNotEligible(
            "pattern has a roof triangle; use the roof reduction".into(),
        ));
    }
    if !branch_edge_budget_ok(h) {
        return Err(ReductionError::PatternNotEligible(
            "branching vertices induce two or more edges; use the degree3 reduction".into(),
        ));
    }
    // The derived pattern keeps the attachment edge plus every hanging
    // triangle sitting on either attachment vertex.
    let mut core_set: Vec<VertexId> = vec![a, bv];
    for &t in &[a, bv] {
        for w in h.vertices() {
            if h.degree(w) != 2 || !h.has_edge(w, t) {
                continue;
            }
            if h.neighbors(w).any(|w2| w2 != t && h.degree(w2) == 2 && h.has_edge(w2, t)) {
                core_set.push(w);
            }
        }
    }
    core_set.sort_unstable();
    core_set.dedup();
    let split = split_at_attachments(h, a, bv, &core_set);

    let g = &src.graph;
    let k = src.budget;
    let mut b = TargetBuilder::new();
    b.block("base", g.vertex_count());
    for (u, v) in g.edges() {
        b.edge(u, v, EdgeClass::Source(u, v));
    }
    for (ei, (u, v)) in g.edges().into_iter().enumerate() {
        for copy in 0..=k {
            // Both orientations, even for symmetric remainders.
            for (tag, (au, bu)) in [("f", (u, v)), ("r", (v, u))] {
                let start =
                    b.block(format!("rest:{ei}:{copy}:{tag}"), split.piece.vertex_count());
                add_piece_edges(&mut b, &split.piece, start);
                for &hook in &split.a_hooks {
                    b.edge(au, start + hook, EdgeClass::Inert);
                }
                for &hook in &split.b_hooks {
                    b.edge(bu, start + hook, EdgeClass::Inert);
                }
            }
        }
    }
    Ok(b.finish(
        Lemma::Hanging,
        src.clone(),
        Some(split.h_prime),
        k,
        Recipe::OncePerEdge,
        vec![],
    ))
}
