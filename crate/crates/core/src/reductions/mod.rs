//! Mechanized hardness reductions: each generator builds a target instance
//! from a source instance plus solution maps in both directions, so the
//! equivalences can be tested end to end against the brute-force oracles.

mod girth4;
mod sample;
mod trees;
mod triangles;

pub use sample::{sample_source, SampleError};

use crate::graph::{Graph, SubdivisionStep, VertexId};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    EdgeDelEq,
    Degree3,
    Roof,
    Hanging,
    Girth4A,
    Girth4B,
    TreeEven,
    TreeOdd,
}

impl Lemma {
    pub const ALL: [Lemma; 8] = [
        Lemma::EdgeDelEq,
        Lemma::Degree3,
        Lemma::Roof,
        Lemma::Hanging,
        Lemma::Girth4A,
        Lemma::Girth4B,
        Lemma::TreeEven,
        Lemma::TreeOdd,
    ];

    pub fn parse(s: &str) -> Option<Lemma> {
        Some(match s {
            "edge-del-eq" => Lemma::EdgeDelEq,
            "degree3" => Lemma::Degree3,
            "roof" => Lemma::Roof,
            "hanging" => Lemma::Hanging,
            "girth4a" => Lemma::Girth4A,
            "girth4b" => Lemma::Girth4B,
            "tree-even" => Lemma::TreeEven,
            "tree-odd" => Lemma::TreeOdd,
            _ => return None,
        })
    }
}

impl std::fmt::Display for Lemma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Lemma::EdgeDelEq => "edge-del-eq",
            Lemma::Degree3 => "degree3",
            Lemma::Roof => "roof",
            Lemma::Hanging => "hanging",
            Lemma::Girth4A => "girth4a",
            Lemma::Girth4B => "girth4b",
            Lemma::TreeEven => "tree-even",
            Lemma::TreeOdd => "tree-odd",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceProblem {
    VertexCover,
    /// Deletion against a pattern derived from the subdivision pattern.
    EdgeDeletion,
    P3FreeEdgeDeletion,
    P4FreeEdgeDeletion,
}

impl std::fmt::Display for SourceProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SourceProblem::VertexCover => "vertex-cover",
            SourceProblem::EdgeDeletion => "edge-deletion",
            SourceProblem::P3FreeEdgeDeletion => "p3-free-edge-deletion",
            SourceProblem::P4FreeEdgeDeletion => "p4-free-edge-deletion",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct SourceInstance {
    pub problem: SourceProblem,
    pub graph: Graph,
    pub budget: usize,
    pub girth_requirement: Option<usize>,
}

impl SourceInstance {
    pub fn new(problem: SourceProblem, graph: Graph, budget: usize) -> SourceInstance {
        SourceInstance { problem, graph, budget, girth_requirement: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceWitness {
    Edges(Vec<(VertexId, VertexId)>),
    Vertices(Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetBlock {
    pub label: String,
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("pattern not eligible for this reduction: {0}")]
    PatternNotEligible(String),
    #[error("source girth {src} must exceed pattern order {need}")]
    GirthTooSmall { src: String, need: usize },
    #[error("source problem mismatch: expected {expected}, got {got}")]
    SourceMismatch { expected: SourceProblem, got: SourceProblem },
    #[error("witness shape does not fit the source problem")]
    WitnessShape,
}

/// How the backward map treats a target edge's subdivisions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum EdgeClass {
    /// An original source edge (identity-style reductions).
    Source(VertexId, VertexId),
    /// Apex-to-source edge; a hit selects that source vertex.
    Apex(VertexId),
    /// Inside the gadget of a source edge; a hit selects one endpoint.
    EdgeGadget(VertexId, VertexId),
    /// Inside the gadget of a source vertex; a hit selects it.
    VertexGadget(VertexId),
    /// Cross-gadget filler; hits select nothing.
    Inert,
}

#[derive(Debug, Clone)]
pub(crate) enum Recipe {
    /// Forward subdivides every witness edge once.
    OncePerEdge,
    /// Forward subdivides the apex-source edge of every witness vertex.
    ApexCover { apex: VertexId },
    /// Forward subdivides every witness edge `stretch` times; backward
    /// keeps source edges hit at least `stretch` times.
    Stretch { stretch: usize },
}

#[derive(Debug, Clone)]
pub struct ReductionArtifact {
    pub lemma: Lemma,
    pub source: SourceInstance,
    /// Pattern for the source problem's oracle (the derived deletion
    /// pattern, or the fixed path for the tree reductions); None for
    /// vertex cover.
    pub source_pattern: Option<Graph>,
    pub target: Graph,
    pub budget: usize,
    pub blocks: Vec<GadgetBlock>,
    pub notes: Vec<String>,
    pub(crate) recipe: Recipe,
    pub(crate) edge_classes: HashMap<(VertexId, VertexId), EdgeClass>,
}

impl ReductionArtifact {
    /// Translate a source witness into a target subdivision solution. Never
    /// judges the witness; verification is the caller's business.
    pub fn lift(&self, witness: &SourceWitness) -> Result<Vec<SubdivisionStep>, ReductionError> {
        match (&self.recipe, witness) {
            (Recipe::OncePerEdge, SourceWitness::Edges(f)) => {
                let mut f = f.clone();
                f.sort_unstable();
                Ok(f.iter().map(|&(u, v)| SubdivisionStep::new(u, v)).collect())
            }
            (Recipe::ApexCover { apex }, SourceWitness::Vertices(y)) => {
                let mut y = y.clone();
                y.sort_unstable();
                y.dedup();
                Ok(y.iter().map(|&v| SubdivisionStep::new(*apex, v)).collect())
            }
            (Recipe::Stretch { stretch }, SourceWitness::Edges(f)) => {
                let mut f = f.clone();
                f.sort_unstable();
                let mut steps = Vec::with_capacity(f.len() * stretch);
                let mut next = self.target.vertex_count();
                for (u, v) in f {
                    steps.push(SubdivisionStep::new(u, v));
                    for _ in 1..*stretch {
                        steps.push(SubdivisionStep::new(next, v));
                        next += 1;
                    }
                    next += 1;
                }
                Ok(steps)
            }
            _ => Err(ReductionError::WitnessShape),
        }
    }

    /// Project a target solution back to a source witness by attributing
    /// every step to the original target edge it descends from.
    pub fn project(&self, sol: &[SubdivisionStep]) -> Result<SourceWitness, ReductionError> {
        let ancestors = step_ancestors(&self.target, sol);
        match &self.recipe {
            Recipe::OncePerEdge => {
                let mut f: Vec<(VertexId, VertexId)> = ancestors
                    .iter()
                    .filter_map(|a| match self.edge_classes.get(a) {
                        Some(EdgeClass::Source(u, v)) => Some((*u, *v)),
                        _ => None,
                    })
                    .collect();
                f.sort_unstable();
                f.dedup();
                Ok(SourceWitness::Edges(f))
            }
            Recipe::ApexCover { .. } => {
                let mut y: Vec<VertexId> = Vec::new();
                for a in &ancestors {
                    match self.edge_classes.get(a) {
                        Some(EdgeClass::Apex(v)) => y.push(*v),
                        Some(EdgeClass::EdgeGadget(u, v)) => y.push(*u.min(v)),
                        Some(EdgeClass::VertexGadget(v)) => y.push(*v),
                        Some(EdgeClass::Source(..)) | Some(EdgeClass::Inert) | None => {}
                    }
                }
                y.sort_unstable();
                y.dedup();
                Ok(SourceWitness::Vertices(y))
            }
            Recipe::Stretch { stretch } => {
                let mut counts: HashMap<(VertexId, VertexId), usize> = HashMap::new();
                for a in &ancestors {
                    if let Some(EdgeClass::Source(u, v)) = self.edge_classes.get(a) {
                        *counts.entry((*u, *v)).or_insert(0) += 1;
                    }
                }
                let mut f: Vec<(VertexId, VertexId)> = counts
                    .into_iter()
                    .filter_map(|(e, c)| (c >= *stretch).then_some(e))
                    .collect();
                f.sort_unstable();
                Ok(SourceWitness::Edges(f))
            }
        }
    }

    /// Text sidecar: lemma tag, budget, gadget blocks, notes.
    pub fn metadata_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        writeln!(out, "lemma={}", self.lemma).unwrap();
        writeln!(out, "budget={}", self.budget).unwrap();
        writeln!(out, "source_problem={}", self.source.problem).unwrap();
        writeln!(out, "source_vertices={}", self.source.graph.vertex_count()).unwrap();
        writeln!(out, "source_edges={}", self.source.graph.edge_count()).unwrap();
        writeln!(out, "target_vertices={}", self.target.vertex_count()).unwrap();
        writeln!(out, "target_edges={}", self.target.edge_count()).unwrap();
        for b in &self.blocks {
            writeln!(out, "block {} {} {}", b.label, b.start, b.len).unwrap();
        }
        for n in &self.notes {
            writeln!(out, "note {n}").unwrap();
        }
        out
    }
}

/// Original edge of `g0` that each step's edge descends from. Steps naming
/// missing edges panic; callers validate solutions first.
pub fn step_ancestors(
    g0: &Graph,
    sol: &[SubdivisionStep],
) -> Vec<(VertexId, VertexId)> {
    let mut ancestor: HashMap<(VertexId, VertexId), (VertexId, VertexId)> = HashMap::new();
    for e in g0.edges() {
        ancestor.insert(e, e);
    }
    let mut next = g0.vertex_count();
    let mut out = Vec::with_capacity(sol.len());
    for step in sol {
        let key = step.sorted();
        let a = *ancestor.get(&key).expect("step names an existing edge");
        out.push(a);
        ancestor.remove(&key);
        let w = next;
        next += 1;
        let (u, v) = (step.u, step.v);
        ancestor.insert((u.min(w), u.max(w)), a);
        ancestor.insert((v.min(w), v.max(w)), a);
    }
    out
}

pub fn reduce(
    lemma: Lemma,
    src: &SourceInstance,
    h: &Graph,
) -> Result<ReductionArtifact, ReductionError> {
    match lemma {
        Lemma::EdgeDelEq => triangles::reduce_edge_deletion_equiv(src, h),
        Lemma::Degree3 => triangles::reduce_degree3(src, h),
        Lemma::Roof => triangles::reduce_roof_triangle(src, h),
        Lemma::Hanging => triangles::reduce_hanging_triangles(src, h),
        Lemma::Girth4A => girth4::reduce_girth4a(src, h),
        Lemma::Girth4B => girth4::reduce_girth4b(src, h),
        Lemma::TreeEven => trees::reduce_tree_even(src, h),
        Lemma::TreeOdd => trees::reduce_tree_odd(src, h),
    }
}

pub use girth4::{reduce_girth4a, reduce_girth4b};
pub use trees::{reduce_tree_even, reduce_tree_odd};
pub use triangles::{
    reduce_degree3, reduce_edge_deletion_equiv, reduce_hanging_triangles, reduce_roof_triangle,
};

/// Check a witness against its source instance: cover all edges within
/// budget, or delete at most budget edges leaving the pattern-free graph.
pub fn verify_source_witness(
    src: &SourceInstance,
    source_pattern: Option<&Graph>,
    witness: &SourceWitness,
) -> bool {
    match (src.problem, witness) {
        (SourceProblem::VertexCover, SourceWitness::Vertices(y)) => {
            y.len() <= src.budget
                && y.iter().all(|&v| v < src.graph.vertex_count())
                && src
                    .graph
                    .edges()
                    .iter()
                    .all(|&(u, v)| y.contains(&u) || y.contains(&v))
        }
        (_, SourceWitness::Edges(f)) => {
            let pattern = match source_pattern {
                Some(p) => p,
                None => return false,
            };
            if f.len() > src.budget {
                return false;
            }
            match src.graph.without_edges(f) {
                Ok(g) => crate::induced::is_h_free(&g, pattern),
                Err(_) => false,
            }
        }
        _ => false,
    }
}

pub(crate) fn expect_problem(
    src: &SourceInstance,
    expected: SourceProblem,
) -> Result<(), ReductionError> {
    if src.problem == expected {
        Ok(())
    } else {
        Err(ReductionError::SourceMismatch { expected, got: src.problem })
    }
}

/// Builder shared by the constructions: grows a graph from the source part
/// and records labeled id blocks.
pub(crate) struct TargetBuilder {
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    pub blocks: Vec<GadgetBlock>,
    pub classes: HashMap<(VertexId, VertexId), EdgeClass>,
}

impl TargetBuilder {
    pub fn new() -> TargetBuilder {
        TargetBuilder { n: 0, edges: Vec::new(), blocks: Vec::new(), classes: HashMap::new() }
    }

    pub fn block(&mut self, label: impl Into<String>, len: usize) -> usize {
        let start = self.n;
        self.blocks.push(GadgetBlock { label: label.into(), start, len });
        self.n += len;
        start
    }

    pub fn edge(&mut self, u: VertexId, v: VertexId, class: EdgeClass) {
        let key = (u.min(v), u.max(v));
        if self.classes.contains_key(&key) {
            return;
        }
        self.edges.push(key);
        self.classes.insert(key, class);
    }

    pub fn finish(
        self,
        lemma: Lemma,
        source: SourceInstance,
        source_pattern: Option<Graph>,
        budget: usize,
        recipe: Recipe,
        notes: Vec<String>,
    ) -> ReductionArtifact {
        let target = Graph::from_edges(self.n, &self.edges).expect("well-formed target");
        ReductionArtifact {
            lemma,
            source,
            source_pattern,
            target,
            budget,
            blocks: self.blocks,
            notes,
            recipe,
            edge_classes: self.classes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ancestors_follow_derived_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        // Subdivide (0,1), then the derived edge (3,1): both descend from (0,1).
        let sol = vec![SubdivisionStep::new(0, 1), SubdivisionStep::new(3, 1)];
        assert_eq!(step_ancestors(&g, &sol), vec![(0, 1), (0, 1)]);
        let sol = vec![SubdivisionStep::new(0, 1), SubdivisionStep::new(1, 2)];
        assert_eq!(step_ancestors(&g, &sol), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn lemma_tags_round_trip() {
        for lemma in Lemma::ALL {
            assert_eq!(Lemma::parse(&lemma.to_string()), Some(lemma));
        }
        assert_eq!(Lemma::parse("bogus"), None);
    }
}
