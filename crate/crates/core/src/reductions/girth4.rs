//! Vertex-cover reductions built around an apex vertex: the generic
//! highly-joined construction, and the high-girth construction for patterns
//! with a rigid cycle part or an exceptional core.

use super::{
    expect_problem, EdgeClass, Lemma, Recipe, ReductionArtifact, ReductionError, SourceInstance,
    SourceProblem, TargetBuilder,
};
use crate::family::family_membership;
use crate::graph::{Graph, VertexId};
use crate::pattern::{apex_spot, thm_easy_case, two_connected_cycle_set_of};
use crate::special::{recognize_special_core, SpecialCoreKind, HTILDE_A1};

/// Embed one gadget copy and return its block start: the spot vertex goes
/// to the apex (its two edges already exist), pinned pattern vertices go to
/// source vertices, the rest fill a fresh block.
fn embed_pattern_copy(
    b: &mut TargetBuilder,
    h_vertices: &[VertexId],
    h: &Graph,
    spot: VertexId,
    pins: &[(VertexId, VertexId)],
    label: String,
    class: EdgeClass,
) -> usize {
    let fresh: Vec<VertexId> = h_vertices
        .iter()
        .copied()
        .filter(|&w| w != spot && pins.iter().all(|&(p, _)| p != w))
        .collect();
    let start = b.block(label, fresh.len());
    let mut to_target = vec![None; h.vertex_count()];
    for (offset, &w) in fresh.iter().enumerate() {
        to_target[w] = Some(start + offset);
    }
    for &(pat, tgt) in pins {
        to_target[pat] = Some(tgt);
    }
    // The spot vertex stays unmapped: its two edges are apex edges that the
    // base construction already provides.
    for &p in h_vertices {
        for q in h.neighbors(p).filter(|&q| q > p) {
            if !h_vertices.contains(&q) || p == spot || q == spot {
                continue;
            }
            let (tp, tq) = (to_target[p].unwrap(), to_target[q].unwrap());
            b.edge(tp, tq, class);
        }
    }
    start
}

/// Apex construction joining all gadgets pairwise: sound whenever the
/// pattern has girth at least 4, is no forest, misses the rigid cases, and
/// is not an induced subgraph of the exceptional families.
pub fn reduce_girth4a(src: &SourceInstance, h: &Graph) -> Result<ReductionArtifact, ReductionError> {
    expect_problem(src, SourceProblem::VertexCover)?;
    if h.is_forest() || !h.girth().at_least(4) {
        return Err(ReductionError::PatternNotEligible(
            "pattern must contain a cycle and no triangle".into(),
        ));
    }
    if thm_easy_case(h).is_some() {
        return Err(ReductionError::PatternNotEligible(
            "pattern already rigid; use the deletion equivalence".into(),
        ));
    }
    match family_membership(h) {
        Ok(None) => {}
        Ok(Some(_)) => {
            return Err(ReductionError::PatternNotEligible(
                "pattern embeds into an exceptional family; use the high-girth reduction".into(),
            ))
        }
        Err(e) => return Err(ReductionError::PatternNotEligible(e.to_string())),
    }
    let (c, a, bv) = apex_spot(h).expect("non-forest pattern has a shortest cycle");
    debug_assert_eq!(h.degree(c), 2);

    let g = &src.graph;
    let n = g.vertex_count();
    let mut b = TargetBuilder::new();
    b.block("base", n);
    let apex = b.block("apex", 1);
    for v in 0..n {
        b.edge(apex, v, EdgeClass::Apex(v));
    }
    let all: Vec<VertexId> = h.vertices().collect();
    let mut gadget_ranges: Vec<(VertexId, VertexId, usize, usize)> = Vec::new();
    for (u, v) in g.edges() {
        let start = embed_pattern_copy(
            &mut b,
            &all,
            h,
            c,
            &[(a, u), (bv, v)],
            format!("gadget:{u}-{v}"),
            EdgeClass::EdgeGadget(u, v),
        );
        gadget_ranges.push((u, v, start, h.vertex_count() - 3));
    }
    // All edges between distinct gadget blocks, and from every outside
    // source vertex into each block: any copy spread across three blocks or
    // touching a third source vertex closes a triangle.
    for (i, &(_, _, s1, l1)) in gadget_ranges.iter().enumerate() {
        for &(_, _, s2, l2) in &gadget_ranges[i + 1..] {
            for p in s1..s1 + l1 {
                for q in s2..s2 + l2 {
                    b.edge(p, q, EdgeClass::Inert);
                }
            }
        }
    }
    for &(u, v, s, l) in &gadget_ranges {
        for w in 0..n {
            if w == u || w == v {
                continue;
            }
            for p in s..s + l {
                b.edge(w, p, EdgeClass::Inert);
            }
        }
    }
    Ok(b.finish(
        Lemma::Girth4A,
        src.clone(),
        None,
        src.budget,
        Recipe::ApexCover { apex },
        vec![],
    ))
}

enum HighGirthCase {
    /// Spot vertex chosen from a rigid cycle part or an exceptional core.
    Whole { spot: VertexId, note: String },
    /// Two-bundle core split at the middle hub.
    Split {
        part_edge: Vec<VertexId>,
        part_vertex: Vec<VertexId>,
        spot: VertexId,
        outer_hub: VertexId,
        middle_hub: VertexId,
        note: String,
    },
}

/// High-girth vertex-cover construction: per-edge pattern copies through
/// the apex, with no cross joins; short cycles stay inside single gadgets
/// because the source has none.
pub fn reduce_girth4b(src: &SourceInstance, h: &Graph) -> Result<ReductionArtifact, ReductionError> {
    expect_problem(src, SourceProblem::VertexCover)?;
    if h.is_forest() {
        return Err(ReductionError::PatternNotEligible("pattern must contain a cycle".into()));
    }
    if !src.graph.girth().exceeds(h.vertex_count()) {
        return Err(ReductionError::GirthTooSmall {
            src: src.graph.girth().to_string(),
            need: h.vertex_count(),
        });
    }
    let case = classify_high_girth(h)?;
    match case {
        HighGirthCase::Whole { spot, note } => build_whole(src, h, spot, note),
        HighGirthCase::Split { .. } => build_split(src, h, case),
    }
}

fn classify_high_girth(h: &Graph) -> Result<HighGirthCase, ReductionError> {
    // Priority: rigid cycle part, then the 8-vertex core, then two-bundle
    // cores with links on both outer hubs; everything else splits.
    if two_connected_cycle_set_of(h).is_some() {
        let (c, _, _) = apex_spot(h).ok_or_else(|| {
            ReductionError::PatternNotEligible(
                "no degree-2 vertex on a shortest cycle".into(),
            )
        })?;
        return Ok(HighGirthCase::Whole { spot: c, note: "case=rigid-cycles".into() });
    }
    if !h.is_connected() {
        return Err(ReductionError::PatternNotEligible(
            "disconnected pattern without a rigid cycle part".into(),
        ));
    }
    let (core, core_map) = h.two_core().expect("connected");
    let params = match recognize_special_core(&core) {
        Ok(Some(p)) => p,
        _ => {
            return Err(ReductionError::PatternNotEligible(
                "cycle part not 2-connected and no exceptional core".into(),
            ))
        }
    };
    match params.kind {
        SpecialCoreKind::Htilde => {
            let spot = core_map[params.embedding[HTILDE_A1]];
            if h.degree(spot) != 2 {
                return Err(ReductionError::PatternNotEligible(
                    "core attachment vertex carries extra trees".into(),
                ));
            }
            Ok(HighGirthCase::Whole { spot, note: "case=eight-vertex-core".into() })
        }
        SpecialCoreKind::Hkl { k, l, i } => {
            // Reference layout: x1=0, x2=1, x3=2, bundle-1 middles, then
            // bundle-2 middles. Map every role into pattern ids.
            let role = |r: usize| core_map[params.embedding[r]];
            let x1 = role(0);
            let x2 = role(1);
            let x3 = role(2);
            let bundle1: Vec<VertexId> = (3..3 + k).map(role).collect();
            let bundle2: Vec<VertexId> = (3 + k..3 + k + l).map(role).collect();
            if i[0] != 0 && i[2] != 0 {
                let spot = *bundle1
                    .iter()
                    .find(|&&m| h.degree(m) == 2)
                    .ok_or_else(|| rigid_bundle_error())?;
                return Ok(HighGirthCase::Whole {
                    spot,
                    note: format!("case=linked-core k={k} l={l} i={}{}{}", i[0], i[1], i[2]),
                });
            }
            // Normalize so the unlinked outer hub is on the bundle-2 side.
            let (k_eff, l_eff, b1, b2, x1n, x3n, i_n) = if i[2] != 0 {
                (l, k, bundle2, bundle1, x3, x1, [i[2], i[1], i[0]])
            } else {
                (k, l, bundle1, bundle2, x1, x3, i)
            };
            debug_assert!(i_n[2] == 0);
            debug_assert!(!(i_n[0] == 1 && i_n[1] == 1), "renormalized by the recognizer");
            let (l_part, r_part) = split_sides(h, x2, &b1, &b2, x1n, x3n);
            let note = format!(
                "case=split-core k={k_eff} l={l_eff} i={}{}{} swapped={}",
                i_n[0],
                i_n[1],
                i_n[2],
                i[2] != 0
            );
            if k_eff <= l_eff {
                let spot = *b1.iter().find(|&&m| h.degree(m) == 2).ok_or_else(rigid_bundle_error)?;
                Ok(HighGirthCase::Split {
                    part_edge: l_part,
                    part_vertex: r_part,
                    spot,
                    outer_hub: x1n,
                    middle_hub: x2,
                    note,
                })
            } else {
                let spot = *b2.iter().find(|&&m| h.degree(m) == 2).ok_or_else(rigid_bundle_error)?;
                Ok(HighGirthCase::Split {
                    part_edge: r_part,
                    part_vertex: l_part,
                    spot,
                    outer_hub: x3n,
                    middle_hub: x2,
                    note,
                })
            }
        }
    }
}

fn rigid_bundle_error() -> ReductionError {
    ReductionError::PatternNotEligible("every bundle middle carries extra trees".into())
}

/// Split the pattern at the middle hub: each side takes its components of
/// the pattern minus the hub, trees hanging off the hub itself go left.
/// Both sides include the hub.
fn split_sides(
    h: &Graph,
    middle_hub: VertexId,
    bundle1: &[VertexId],
    bundle2: &[VertexId],
    x1: VertexId,
    x3: VertexId,
) -> (Vec<VertexId>, Vec<VertexId>) {
    let rest: Vec<VertexId> = h.vertices().filter(|&v| v != middle_hub).collect();
    let (without, map) = h.induced_subgraph(&rest);
    let mut left = vec![middle_hub];
    let mut right = vec![middle_hub];
    for comp in without.components() {
        let original: Vec<VertexId> = comp.iter().map(|&i| map[i]).collect();
        let touches_left =
            original.iter().any(|v| bundle1.contains(v) || *v == x1);
        let touches_right =
            original.iter().any(|v| bundle2.contains(v) || *v == x3);
        if touches_left {
            left.extend(&original);
        } else if touches_right {
            right.extend(&original);
        } else {
            left.extend(&original);
        }
    }
    left.sort_unstable();
    right.sort_unstable();
    (left, right)
}

fn build_whole(
    src: &SourceInstance,
    h: &Graph,
    spot: VertexId,
    note: String,
) -> Result<ReductionArtifact, ReductionError> {
    if h.degree(spot) != 2 {
        return Err(ReductionError::PatternNotEligible("spot vertex must have degree 2".into()));
    }
    let nb: Vec<VertexId> = h.neighbors(spot).collect();
    let g = &src.graph;
    let n = g.vertex_count();
    let mut b = TargetBuilder::new();
    b.block("base", n);
    let apex = b.block("apex", 1);
    for v in 0..n {
        b.edge(apex, v, EdgeClass::Apex(v));
    }
    let all: Vec<VertexId> = h.vertices().collect();
    for (u, v) in g.edges() {
        embed_pattern_copy(
            &mut b,
            &all,
            h,
            spot,
            &[(nb[0], u), (nb[1], v)],
            format!("gadget:{u}-{v}"),
            EdgeClass::EdgeGadget(u, v),
        );
    }
    Ok(b.finish(
        Lemma::Girth4B,
        src.clone(),
        None,
        src.budget,
        Recipe::ApexCover { apex },
        vec![note],
    ))
}

fn build_split(
    src: &SourceInstance,
    h: &Graph,
    case: HighGirthCase,
) -> Result<ReductionArtifact, ReductionError> {
    let (part_edge, part_vertex, spot, outer_hub, middle_hub, note) = match case {
        HighGirthCase::Split { part_edge, part_vertex, spot, outer_hub, middle_hub, note } => {
            (part_edge, part_vertex, spot, outer_hub, middle_hub, note)
        }
        HighGirthCase::Whole { .. } => unreachable!("routed by caller"),
    };
    if h.degree(spot) != 2 {
        return Err(ReductionError::PatternNotEligible("spot vertex must have degree 2".into()));
    }
    let g = &src.graph;
    let n = g.vertex_count();
    let mut b = TargetBuilder::new();
    b.block("base", n);
    let apex = b.block("apex", 1);
    for v in 0..n {
        b.edge(apex, v, EdgeClass::Apex(v));
    }
    // One edge-part copy per source edge, pinned to (outer hub, middle
    // hub); one vertex-part copy per source vertex, pinned to the middle
    // hub. A second, reversed copy per edge would hand every adjacent
    // source pair k fresh parallel middles, enough to assemble an
    // apex-free copy of the two-bundle core that no apex subdivision can
    // touch; one orientation keeps the fresh common neighbors at k-1, so
    // every short cycle near the base must use the apex.
    for (u, v) in g.edges() {
        embed_pattern_copy(
            &mut b,
            &part_edge,
            h,
            spot,
            &[(outer_hub, u), (middle_hub, v)],
            format!("edge:{u}-{v}"),
            EdgeClass::EdgeGadget(u, v),
        );
    }
    for v in 0..n {
        let fresh: Vec<VertexId> =
            part_vertex.iter().copied().filter(|&w| w != middle_hub).collect();
        let start = b.block(format!("vertex:{v}"), fresh.len());
        let mut to_target = vec![None; h.vertex_count()];
        for (offset, &w) in fresh.iter().enumerate() {
            to_target[w] = Some(start + offset);
        }
        to_target[middle_hub] = Some(v);
        for &p in &part_vertex {
            for q in h.neighbors(p).filter(|&q| q > p) {
                if part_vertex.contains(&q) {
                    b.edge(
                        to_target[p].unwrap(),
                        to_target[q].unwrap(),
                        EdgeClass::VertexGadget(v),
                    );
                }
            }
        }
    }
    Ok(b.finish(
        Lemma::Girth4B,
        src.clone(),
        None,
        src.budget,
        Recipe::ApexCover { apex },
        vec![note],
    ))
}
