//! The decision procedure: polynomial fast paths for star/bistar patterns
//! and a bounded search tree for everything else.
//!
//! The branching rule: any feasible solution must subdivide an edge inside
//! every currently present copy of the pattern, because a copy survives
//! every subdivision that does not cut one of its own edges. So it suffices
//! to find one copy and branch on its edges; the budget bounds the depth.

use crate::canon::{canonical_form_bounded, CanonicalForm};
use crate::graph::{Graph, SubdivisionSolution, SubdivisionStep, VertexId};
use crate::induced::{find_induced_copy, is_h_free};
use crate::pattern::{is_subdivided_bistar, is_subdivided_star, obs1_polynomial};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

impl std::fmt::Display for Answer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Answer::Yes => write!(f, "yes"),
            Answer::No => write!(f, "no"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub answer: Answer,
    /// Present exactly when the answer is Yes; replayable on the host.
    pub solution: Option<SubdivisionSolution>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Skip the polynomial fast paths and always run the search tree.
    pub force_generic: bool,
    /// Memoize refuted (graph, budget) states by canonical form. Off by
    /// default; canonicalization can cost more than it saves.
    pub memo: bool,
    pub memo_bound: usize,
    /// Threads for exploring root branches. Results and node counts are
    /// independent of this.
    pub jobs: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { force_generic: false, memo: false, memo_bound: 12, jobs: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("pattern graph is empty")]
    EmptyPattern,
    #[error("pattern does not qualify for this fast path")]
    PreconditionViolated,
    #[error("forced-move iteration limit exceeded; this is a bug")]
    IterationLimit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("solution has {len} steps, budget is {budget}")]
    BudgetExceeded { len: usize, budget: usize },
    #[error("step {index} names missing edge {{{u}, {v}}}")]
    BadStep { index: usize, u: VertexId, v: VertexId },
    #[error("result still contains an induced copy of the pattern")]
    NotFree,
}

/// Upper bound on search-tree nodes: sum of m^j for j = 0..=k, where m is
/// the pattern's edge count.
pub fn node_bound(pattern_edges: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..=k {
        total = total.saturating_add(pow);
        pow = pow.saturating_mul(pattern_edges as u128);
    }
    total
}

pub fn solve(g: &Graph, h: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    solve_with(g, h, k, &SolveOptions::default())
}

pub fn solve_with(
    g: &Graph,
    h: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if h.vertex_count() == 0 {
        return Err(SolveError::EmptyPattern);
    }
    if !opts.force_generic {
        if all_components_stars(h) {
            return solve_poly_star(g, h, k);
        }
        if obs1_polynomial(h) {
            return solve_poly_bistar(g, h, k);
        }
    }
    let mut searcher = Searcher {
        h,
        memo: if opts.memo { Some(HashMap::new()) } else { None },
        memo_bound: opts.memo_bound,
    };
    let mut nodes = 0u64;
    let solution = if opts.jobs > 1 {
        searcher.branch_root_parallel(g, k, opts.jobs, &mut nodes)
    } else {
        searcher.branch(g, k, &mut nodes)
    };
    Ok(match solution {
        Some(sol) => SolveResult { answer: Answer::Yes, solution: Some(sol), nodes_explored: nodes },
        None => SolveResult { answer: Answer::No, solution: None, nodes_explored: nodes },
    })
}

fn all_components_stars(h: &Graph) -> bool {
    h.components().iter().all(|comp| {
        let (c, _) = h.induced_subgraph(comp);
        is_subdivided_star(&c)
    })
}

/// Star patterns can never be destroyed: an induced subdivided star
/// survives every subdivision. Yes iff already free.
pub fn solve_poly_star(g: &Graph, h: &Graph, _k: usize) -> Result<SolveResult, SolveError> {
    if h.vertex_count() == 0 || !all_components_stars(h) {
        return Err(SolveError::PreconditionViolated);
    }
    if is_h_free(g, h) {
        Ok(SolveResult { answer: Answer::Yes, solution: Some(vec![]), nodes_explored: 1 })
    } else {
        Ok(SolveResult { answer: Answer::No, solution: None, nodes_explored: 1 })
    }
}

/// One bistar component, rest stars: the only way to kill a copy for good
/// is to cut the edge between the two branching vertices of its bistar
/// part, so that edge is a forced move. Subdivided endpoints can never
/// become adjacent again, so the number of adjacent high-degree pairs
/// strictly shrinks and the loop ends.
pub fn solve_poly_bistar(g: &Graph, h: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    if h.vertex_count() == 0 || !obs1_polynomial(h) {
        return Err(SolveError::PreconditionViolated);
    }
    let centers = bistar_component_centers(h).ok_or(SolveError::PreconditionViolated)?;
    let limit = g.edge_count() + k + 1;
    let mut current = g.clone();
    let mut sol: SubdivisionSolution = Vec::new();
    let mut nodes = 0u64;
    for _ in 0..limit {
        nodes += 1;
        let emb = match find_induced_copy(&current, h) {
            None => {
                return Ok(SolveResult {
                    answer: Answer::Yes,
                    solution: Some(sol),
                    nodes_explored: nodes,
                });
            }
            Some(e) => e,
        };
        if sol.len() == k {
            return Ok(SolveResult { answer: Answer::No, solution: None, nodes_explored: nodes });
        }
        let step =
            SubdivisionStep::new(emb.mapping[centers.0], emb.mapping[centers.1]);
        current = current.subdivide(step).expect("central pair is an edge of the copy");
        sol.push(step);
    }
    Err(SolveError::IterationLimit)
}

/// The two adjacent branching vertices of the unique bistar component.
fn bistar_component_centers(h: &Graph) -> Option<(VertexId, VertexId)> {
    for comp in h.components() {
        let (c, map) = h.induced_subgraph(&comp);
        if is_subdivided_bistar(&c) {
            let centers: Vec<VertexId> = c.vertices().filter(|&v| c.degree(v) >= 3).collect();
            return Some((map[centers[0]], map[centers[1]]));
        }
    }
    None
}

pub fn verify_solution(
    g: &Graph,
    h: &Graph,
    k: usize,
    sol: &[SubdivisionStep],
) -> Result<(), VerifyError> {
    if sol.len() > k {
        return Err(VerifyError::BudgetExceeded { len: sol.len(), budget: k });
    }
    let mut current = g.clone();
    for (index, step) in sol.iter().enumerate() {
        current = current
            .subdivide(*step)
            .map_err(|_| VerifyError::BadStep { index, u: step.u, v: step.v })?;
    }
    if is_h_free(&current, h) {
        Ok(())
    } else {
        Err(VerifyError::NotFree)
    }
}

pub fn solution_is_valid(g: &Graph, h: &Graph, k: usize, sol: &[SubdivisionStep]) -> bool {
    verify_solution(g, h, k, sol).is_ok()
}

struct Searcher<'a> {
    h: &'a Graph,
    memo: Option<HashMap<(CanonicalForm, usize), ()>>,
    memo_bound: usize,
}

impl<'a> Searcher<'a> {
    fn branch(&mut self, g: &Graph, k: usize, nodes: &mut u64) -> Option<SubdivisionSolution> {
        *nodes += 1;
        let emb = match find_induced_copy(g, self.h) {
            None => return Some(Vec::new()),
            Some(e) => e,
        };
        if k == 0 {
            return None;
        }
        let memo_key = match &self.memo {
            Some(_) if g.vertex_count() <= self.memo_bound => {
                canonical_form_bounded(g, self.memo_bound).ok().map(|cf| (cf, k))
            }
            _ => None,
        };
        if let (Some(memo), Some(key)) = (&self.memo, &memo_key) {
            if memo.contains_key(key) {
                return None;
            }
        }
        for step in copy_edges(g, &emb.image()) {
            let child = g.subdivide(step).expect("copy edge");
            if let Some(mut rest) = self.branch(&child, k - 1, nodes) {
                rest.insert(0, step);
                return Some(rest);
            }
        }
        if let (Some(memo), Some(key)) = (&mut self.memo, memo_key) {
            memo.insert(key, ());
        }
        None
    }

    /// Root-level parallel exploration. Every child subtree is evaluated in
    /// full, then results reconcile by branch index, so the answer, the
    /// certificate, and the node count all match the sequential run.
    fn branch_root_parallel(
        &mut self,
        g: &Graph,
        k: usize,
        jobs: usize,
        nodes: &mut u64,
    ) -> Option<SubdivisionSolution> {
        *nodes += 1;
        let emb = match find_induced_copy(g, self.h) {
            None => return Some(Vec::new()),
            Some(e) => e,
        };
        if k == 0 {
            return None;
        }
        let steps = copy_edges(g, &emb.image());
        let children: Vec<Graph> =
            steps.iter().map(|&s| g.subdivide(s).expect("copy edge")).collect();
        let h = self.h;
        let memo_bound = self.memo_bound;
        let use_memo = self.memo.is_some();
        let mut results: Vec<Option<(Option<SubdivisionSolution>, u64)>> =
            vec![None; children.len()];
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for worker in 0..jobs.min(children.len().max(1)) {
                let children = &children;
                let handle = scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut idx = worker;
                    while idx < children.len() {
                        let mut searcher = Searcher {
                            h,
                            memo: if use_memo { Some(HashMap::new()) } else { None },
                            memo_bound,
                        };
                        let mut child_nodes = 0u64;
                        let sol = searcher.branch(&children[idx], k - 1, &mut child_nodes);
                        out.push((idx, sol, child_nodes));
                        idx += jobs;
                    }
                    out
                });
                handles.push(handle);
            }
            for handle in handles {
                for (idx, sol, child_nodes) in handle.join().expect("branch worker") {
                    results[idx] = Some((sol, child_nodes));
                }
            }
        });
        for (idx, slot) in results.into_iter().enumerate() {
            let (sol, child_nodes) = slot.expect("all children evaluated");
            *nodes += child_nodes;
            if let Some(mut rest) = sol {
                rest.insert(0, steps[idx]);
                return Some(rest);
            }
        }
        None
    }
}

/// Edges of the host induced on the copy's image, in lexicographic order.
fn copy_edges(g: &Graph, image: &[VertexId]) -> Vec<SubdivisionStep> {
    let mut steps = Vec::new();
    for (i, &u) in image.iter().enumerate() {
        for &v in &image[i + 1..] {
            if g.has_edge(u, v) {
                steps.push(SubdivisionStep::new(u, v));
            }
        }
    }
    steps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_host_triangle_pattern() {
        let r = solve(&Graph::complete(3), &Graph::complete(3), 1).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        let sol = r.solution.unwrap();
        assert_eq!(sol, vec![SubdivisionStep::new(0, 1)]);
        assert!(solution_is_valid(&Graph::complete(3), &Graph::complete(3), 1, &sol));
    }

    #[test]
    fn k4_triangle_budgets() {
        let k4 = Graph::complete(4);
        let k3 = Graph::complete(3);
        assert_eq!(solve(&k4, &k3, 1).unwrap().answer, Answer::No);
        let r = solve(&k4, &k3, 2).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert!(solution_is_valid(&k4, &k3, 2, &r.solution.unwrap()));
    }

    #[test]
    fn star_patterns_are_indestructible() {
        let r = solve(&Graph::path(4), &Graph::path(3), 10).unwrap();
        assert_eq!(r.answer, Answer::No);
        assert_eq!(r.nodes_explored, 1);
        let r = solve(&Graph::cycle(6), &Graph::path(3), 100).unwrap();
        assert_eq!(r.answer, Answer::No);
        let r = solve(&Graph::complete(3), &Graph::path(4), 0).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        let r = solve(&Graph::star(4), &Graph::star(3), 5).unwrap();
        assert_eq!(r.answer, Answer::No);
    }

    #[test]
    fn poly_star_guards_preconditions() {
        assert_eq!(
            solve_poly_star(&Graph::path(4), &Graph::complete(3), 1).unwrap_err(),
            SolveError::PreconditionViolated
        );
    }

    #[test]
    fn bistar_forced_moves() {
        let b = Graph::bistar(2, 2);
        let r = solve(&b, &b, 1).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        let sol = r.solution.unwrap();
        assert_eq!(sol.len(), 1);
        assert_eq!(sol[0].sorted(), (0, 1));
        let r = solve(&b, &b, 0).unwrap();
        assert_eq!(r.answer, Answer::No);
        // Already free with budget zero.
        let r = solve(&Graph::cycle(4), &b, 0).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.solution.unwrap(), vec![]);
    }

    #[test]
    fn two_bistar_copies_need_two_moves() {
        let b = Graph::bistar(2, 2);
        let host = b.disjoint_union(&b);
        assert_eq!(solve(&host, &b, 1).unwrap().answer, Answer::No);
        assert_eq!(solve(&host, &b, 2).unwrap().answer, Answer::Yes);
    }

    #[test]
    fn generic_matches_fast_paths() {
        let force = SolveOptions { force_generic: true, ..Default::default() };
        let hosts = [Graph::cycle(6), Graph::star(4), Graph::bistar(3, 2), Graph::complete(4)];
        let patterns = [Graph::path(3), Graph::star(3), Graph::bistar(2, 2)];
        for g in &hosts {
            for h in &patterns {
                for k in 0..=2 {
                    let fast = solve(g, h, k).unwrap().answer;
                    let generic = solve_with(g, h, k, &force).unwrap().answer;
                    assert_eq!(fast, generic, "host {g:?} pattern {h:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn node_counter_respects_bound() {
        let k4 = Graph::complete(4);
        let k3 = Graph::complete(3);
        for k in 0..=3 {
            let r = solve(&k4, &k3, k).unwrap();
            assert!(u128::from(r.nodes_explored) <= node_bound(3, k));
        }
    }

    #[test]
    fn parallel_solve_is_reproducible() {
        let host = Graph::complete(4);
        let h = Graph::complete(3);
        let seq = solve(&host, &h, 2).unwrap();
        let par = solve_with(
            &host,
            &h,
            2,
            &SolveOptions { jobs: 4, ..Default::default() },
        )
        .unwrap();
        assert_eq!(seq.answer, par.answer);
        assert_eq!(seq.solution, par.solution);
        assert_eq!(seq.nodes_explored, par.nodes_explored);
    }

    #[test]
    fn memo_keeps_answers() {
        let memo = SolveOptions { memo: true, force_generic: true, ..Default::default() };
        let plain = SolveOptions { force_generic: true, ..Default::default() };
        let host = Graph::complete(4);
        let h = Graph::complete(3);
        for k in 0..=2 {
            let a = solve_with(&host, &h, k, &memo).unwrap().answer;
            let b = solve_with(&host, &h, k, &plain).unwrap().answer;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn verify_solution_failure_modes() {
        let k3 = Graph::complete(3);
        assert!(verify_solution(&k3, &k3, 1, &[SubdivisionStep::new(0, 1)]).is_ok());
        assert_eq!(
            verify_solution(&k3, &k3, 0, &[SubdivisionStep::new(0, 1)]),
            Err(VerifyError::BudgetExceeded { len: 1, budget: 0 })
        );
        assert_eq!(
            verify_solution(&k3, &k3, 2, &[SubdivisionStep::new(0, 1), SubdivisionStep::new(0, 1)]),
            Err(VerifyError::BadStep { index: 1, u: 0, v: 1 })
        );
        assert_eq!(
            verify_solution(&Graph::complete(4), &k3, 1, &[SubdivisionStep::new(0, 1)]),
            Err(VerifyError::NotFree)
        );
        // Cross-checked case: two opposite cuts clear all four triangles.
        let sol = [SubdivisionStep::new(0, 1), SubdivisionStep::new(2, 3)];
        assert!(verify_solution(&Graph::complete(4), &k3, 2, &sol).is_ok());
    }

    #[test]
    fn empty_pattern_is_an_error() {
        assert_eq!(
            solve(&Graph::path(3), &Graph::empty(0), 1).unwrap_err(),
            SolveError::EmptyPattern
        );
    }
}
