//! The verification suite: solver-versus-oracle agreement, oracle
//! cross-checks, reduction equivalences, the structural sweep, the
//! classifier corpus, planted-star indestructibility, and determinism of
//! all of it. Shared by the acceptance test target and the `selftest` CLI
//! subcommand.

use crate::canon::{enumerate_graphs_up_to, DEFAULT_CANON_BOUND};
use crate::graph::{Graph, SubdivisionStep, VertexId};
use crate::induced::find_induced_copy;
use crate::io::read_graph;
use crate::oracle::{
    oracle_edge_deletion, oracle_subdivision_with, oracle_vertex_cover, OracleOptions,
    OracleWitness, SubdivisionSpace,
};
use crate::pattern::{classify, thm_easy_case, two_connected_cycle_set_of, Rule, VerdictStatus};
use crate::reductions::{
    reduce, sample_source, verify_source_witness, Lemma, ReductionArtifact, SourceInstance,
    SourceProblem, SourceWitness,
};
use crate::solver::{node_bound, solve_with, verify_solution, Answer, SolveOptions};
use crate::special::{htilde, special_core};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Smoke mode: deterministic subsample, same shape, far fewer cases.
    pub quick: bool,
    /// Worker threads for case-level parallelism. Outputs do not depend on
    /// it.
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { quick: false, jobs: 1 }
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
    pub records: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} cases, {} failures)",
            self.name,
            if self.passed() { "pass" } else { "FAIL" },
            self.cases,
            self.failures.len()
        )
    }
}

/// Map worker: applies `f` to every index, merging outputs in index order
/// regardless of the thread count.
fn par_map<T, F>(jobs: usize, items: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if jobs <= 1 || items <= 1 {
        return (0..items).map(f).collect();
    }
    let mut slots: Vec<Option<T>> = (0..items).map(|_| None).collect();
    let f = &f;
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for worker in 0..jobs.min(items) {
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                let mut idx = worker;
                while idx < items {
                    out.push((idx, f(idx)));
                    idx += jobs;
                }
                out
            }));
        }
        let mut collected = Vec::new();
        for h in handles {
            collected.extend(h.join().expect("suite worker"));
        }
        for (idx, val) in collected {
            slots[idx] = Some(val);
        }
    });
    slots.into_iter().map(|s| s.expect("all indices mapped")).collect()
}

pub fn criterion_patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("p3", Graph::path(3)),
        ("p4", Graph::path(4)),
        ("k3", Graph::complete(3)),
        ("claw", Graph::star(3)),
        ("c4", Graph::cycle(4)),
        ("c5", Graph::cycle(5)),
        ("paw", Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()),
        ("diamond", Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()),
        ("bistar32", Graph::bistar(3, 2)),
    ]
}

fn criterion_hosts(cfg: &SuiteConfig) -> Vec<Graph> {
    let max_exhaustive = if cfg.quick { 5 } else { 7 };
    let mut hosts = enumerate_graphs_up_to(max_exhaustive);
    let samples = if cfg.quick { 40 } else { 500 };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..samples {
        let mut edges = Vec::new();
        for u in 0..8 {
            for v in u + 1..8 {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        hosts.push(Graph::from_edges(8, &edges).expect("sampled host"));
    }
    hosts
}

/// Criteria 1 and 6 share one sweep: solver agreement with the exhaustive
/// oracle, certificate soundness, and the search-tree node bound.
pub fn criterion_1_and_6(cfg: &SuiteConfig) -> (CheckReport, CheckReport) {
    let patterns = criterion_patterns();
    let hosts = criterion_hosts(cfg);
    let opts = OracleOptions::default();
    let budgets = [0usize, 1, 2, 3];
    let per_host = par_map(cfg.jobs, hosts.len(), |hi| {
        let host = &hosts[hi];
        let mut records = Vec::new();
        let mut agree_failures = Vec::new();
        let mut bound_failures = Vec::new();
        let space = SubdivisionSpace::new(host, 3, &opts).expect("host within cap");
        for (pname, h) in &patterns {
            let earliest = space.earliest_free_layer(h).map(|(j, _)| j);
            for &k in &budgets {
                let oracle_answer =
                    if earliest.map_or(false, |j| j <= k) { Answer::Yes } else { Answer::No };
                let r = solve_with(host, h, k, &SolveOptions::default()).expect("solve");
                if r.answer != oracle_answer {
                    agree_failures.push(format!(
                        "host#{hi} pattern={pname} k={k}: solve={} oracle={}",
                        r.answer, oracle_answer
                    ));
                }
                if let Some(sol) = &r.solution {
                    if verify_solution(host, h, k, sol).is_err() {
                        agree_failures
                            .push(format!("host#{hi} pattern={pname} k={k}: bad certificate"));
                    }
                }
                let bound = node_bound(h.edge_count(), k);
                if u128::from(r.nodes_explored) > bound {
                    bound_failures.push(format!(
                        "host#{hi} pattern={pname} k={k}: nodes={} bound={bound}",
                        r.nodes_explored
                    ));
                }
                records.push(format!(
                    "c1 host={hi} pattern={pname} k={k} solve={} oracle={} nodes={}",
                    r.answer, oracle_answer, r.nodes_explored
                ));
            }
        }
        (records, agree_failures, bound_failures)
    });
    let mut r1 = CheckReport { name: "criterion-1 solver-oracle agreement", cases: 0, failures: vec![], records: vec![] };
    let mut r6 = CheckReport { name: "criterion-6 search-tree node bound", cases: 0, failures: vec![], records: vec![] };
    for (records, agree, bound) in per_host {
        r1.cases += records.len() as u64;
        r6.cases += records.len() as u64;
        r1.records.extend(records);
        r1.failures.extend(agree);
        r6.failures.extend(bound);
    }
    (r1, r6)
}

/// Criterion 2: subdivision and edge deletion agree for rigid patterns.
pub fn criterion_2(cfg: &SuiteConfig) -> CheckReport {
    let patterns = [
        ("k3", Graph::complete(3)),
        ("k4", Graph::complete(4)),
        ("diamond", Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()),
    ];
    let hosts = enumerate_graphs_up_to(if cfg.quick { 5 } else { 6 });
    let opts = OracleOptions::default();
    let per_host = par_map(cfg.jobs, hosts.len(), |hi| {
        let host = &hosts[hi];
        let mut records = Vec::new();
        let mut failures = Vec::new();
        for (pname, h) in &patterns {
            for k in 0..=2usize {
                let sub = oracle_subdivision_with(host, h, k, &opts).expect("in cap").answer;
                let del = oracle_edge_deletion(host, h, k).expect("in cap").answer;
                if sub != del {
                    failures.push(format!(
                        "host#{hi} pattern={pname} k={k}: subdivision={sub} deletion={del}"
                    ));
                }
                records.push(format!("c2 host={hi} pattern={pname} k={k} sub={sub} del={del}"));
            }
        }
        (records, failures)
    });
    let mut report =
        CheckReport { name: "criterion-2 deletion equivalence", cases: 0, failures: vec![], records: vec![] };
    for (records, failures) in per_host {
        report.cases += records.len() as u64;
        report.records.extend(records);
        report.failures.extend(failures);
    }
    report
}

struct ReductionCase {
    lemma: Lemma,
    pattern: Graph,
    pattern_name: &'static str,
    source: SourceInstance,
}

fn double_claw(d: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, i + 1)).collect();
    let n = d + 1;
    edges.extend([(0, n), (0, n + 1), (d, n + 2), (d, n + 3)]);
    Graph::from_edges(n + 4, &edges).unwrap()
}

fn reduction_cases(cfg: &SuiteConfig) -> Vec<ReductionCase> {
    let per_lemma = if cfg.quick { 8 } else { 52 };
    let k4_pendant =
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
    let k4_bridge = Graph::from_edges(
        6,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 1)],
    )
    .unwrap();
    let k4_chord =
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])
            .unwrap();
    let k4_c4 = Graph::complete(4).disjoint_union(&Graph::cycle(4));
    let net = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
    let roof5 = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
    let roof6 =
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (1, 5)]).unwrap();
    let book_roof =
        Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 5)]).unwrap();
    let hang7 =
        Graph::from_edges(7, &[(0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5), (0, 1), (0, 6)])
            .unwrap();
    let hang8 = Graph::from_edges(
        8,
        &[(0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5), (0, 1), (0, 6), (6, 7)],
    )
    .unwrap();
    let two_c4 = Graph::cycle(4).disjoint_union(&Graph::cycle(4));
    let dumbbell = two_c4.with_edge(0, 4).unwrap();
    let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();

    let mut cases = Vec::new();
    let mut push = |lemma: Lemma,
                    pattern: &Graph,
                    pattern_name: &'static str,
                    problem: SourceProblem,
                    size: usize,
                    girth_req: Option<usize>,
                    budget_cap: usize,
                    seed: u64| {
        let mut src = sample_source(problem, size, girth_req, seed).expect("sample");
        src.budget = src.budget.min(budget_cap);
        cases.push(ReductionCase { lemma, pattern: pattern.clone(), pattern_name, source: src });
    };

    let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    for i in 0..per_lemma as u64 {
        let size = 3 + (i as usize) % 4; // 3..=6
        let (h, name): (&Graph, &'static str) = match i % 3 {
            0 => (&KS.0, "k3"),
            1 => (&KS.1, "k4"),
            _ => (&diamond, "diamond"),
        };
        push(Lemma::EdgeDelEq, h, name, SourceProblem::EdgeDeletion, size, None, 2, 0x100 + i);
    }
    for i in 0..per_lemma as u64 {
        let size = 3 + (i as usize) % 2; // 3..=4
        let (h, name): (&Graph, &'static str) = match i % 5 {
            0 => (&k4_pendant, "k4-pendant"),
            1 => (&net, "net"),
            2 => (&k4_c4, "k4+c4"),
            3 => (&k4_bridge, "k4-bridge"),
            _ => (&k4_chord, "k4-chord"),
        };
        push(Lemma::Degree3, h, name, SourceProblem::EdgeDeletion, size, None, 1, 0x200 + i);
    }
    for i in 0..per_lemma as u64 {
        let size = 3 + (i as usize) % 2;
        let (h, name): (&Graph, &'static str) = match i % 3 {
            0 => (&roof5, "roof5"),
            1 => (&roof6, "roof6"),
            _ => (&book_roof, "book-roof"),
        };
        push(Lemma::Roof, h, name, SourceProblem::EdgeDeletion, size, None, 2, 0x300 + i);
    }
    for i in 0..per_lemma as u64 {
        let size = 3 + (i as usize) % 2;
        let (h, name): (&Graph, &'static str) =
            if i % 2 == 0 { (&hang7, "hang7") } else { (&hang8, "hang8") };
        push(Lemma::Hanging, h, name, SourceProblem::EdgeDeletion, size, None, 1, 0x400 + i);
    }
    for i in 0..per_lemma as u64 {
        let size = 2 + (i as usize) % 3; // 2..=4
        let (h, name): (&Graph, &'static str) =
            if i % 2 == 0 { (&two_c4, "2c4") } else { (&dumbbell, "dumbbell") };
        push(Lemma::Girth4A, h, name, SourceProblem::VertexCover, size, None, 2, 0x500 + i);
    }
    let h2200 = special_core(2, 2, [0, 0, 0]);
    let h2322 = special_core(2, 3, [0, 2, 2]);
    let h22101 = special_core(2, 2, [1, 0, 1]);
    let ht = htilde();
    for i in 0..per_lemma as u64 {
        let size = 4 + (i as usize) % 3; // 4..=6
        let (h, name): (&Graph, &'static str) = match i % 7 {
            0 => (&KS.2, "c4"),
            1 => (&paw, "paw"),
            2 => (&KS.3, "c5"),
            3 => (&h2200, "h2200"),
            4 => (&h2322, "h2322"),
            5 => (&h22101, "h22101"),
            _ => (&ht, "htilde"),
        };
        let need = h.vertex_count() + 1;
        push(Lemma::Girth4B, h, name, SourceProblem::VertexCover, size, Some(need), 3, 0x600 + i);
    }
    let d2 = double_claw(2);
    let d2_long = Graph::from_edges(
        11,
        &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (2, 7), (7, 8), (2, 9), (9, 10)],
    )
    .unwrap();
    let d4 = double_claw(4);
    for i in 0..per_lemma as u64 {
        let size = 3 + (i as usize) % 2;
        let (h, name, cap): (&Graph, &'static str, usize) = match i % 3 {
            0 => (&d2, "dist2", 1),
            1 => (&d2_long, "dist2-long", 1),
            _ => (&d4, "dist4", 0),
        };
        push(Lemma::TreeEven, h, name, SourceProblem::P3FreeEdgeDeletion, size, None, cap, 0x700 + i);
    }
    let d5 = double_claw(5);
    let d7 = double_claw(7);
    for i in 0..per_lemma as u64 {
        let size = 3 + (i as usize) % 3;
        let (h, name): (&Graph, &'static str) =
            if i % 2 == 0 { (&d5, "dist5") } else { (&d7, "dist7") };
        push(Lemma::TreeOdd, h, name, SourceProblem::P4FreeEdgeDeletion, size, None, 0, 0x800 + i);
    }
    cases
}

struct KSPatterns(Graph, Graph, Graph, Graph);
static KS: std::sync::LazyLock<KSPatterns> = std::sync::LazyLock::new(|| {
    KSPatterns(Graph::complete(3), Graph::complete(4), Graph::cycle(4), Graph::cycle(5))
});

fn source_oracle_answer(art: &ReductionArtifact) -> (Answer, Option<SourceWitness>) {
    match art.source.problem {
        SourceProblem::VertexCover => {
            let r = oracle_vertex_cover(&art.source.graph, art.source.budget).expect("small");
            let w = r.witness.map(|w| match w {
                OracleWitness::VertexSet(v) => SourceWitness::Vertices(v),
                _ => unreachable!(),
            });
            (r.answer, w)
        }
        _ => {
            let pattern = art.source_pattern.as_ref().expect("deletion pattern");
            let r =
                oracle_edge_deletion(&art.source.graph, pattern, art.source.budget).expect("small");
            let w = r.witness.map(|w| match w {
                OracleWitness::EdgeSet(e) => SourceWitness::Edges(e),
                _ => unreachable!(),
            });
            (r.answer, w)
        }
    }
}

/// Criterion 3: every reduction generator, seeded sources, oracle answers
/// equal on both sides and certificates transport both ways.
pub fn criterion_3(cfg: &SuiteConfig) -> CheckReport {
    let cases = reduction_cases(cfg);
    let opts = OracleOptions { state_cap: 4_000_000, ..Default::default() };
    let results = par_map(cfg.jobs, cases.len(), |i| {
        let case = &cases[i];
        let mut failures = Vec::new();
        let art = match reduce(case.lemma, &case.source, &case.pattern) {
            Ok(a) => a,
            Err(e) => {
                return (
                    vec![format!("c3 case={i} lemma={} pattern={} error={e}", case.lemma, case.pattern_name)],
                    vec![format!("case#{i} {}: reduce failed: {e}", case.lemma)],
                )
            }
        };
        let (src_answer, src_witness) = source_oracle_answer(&art);
        let target = match oracle_subdivision_with(&art.target, &case.pattern, art.budget, &opts) {
            Ok(r) => r,
            Err(e) => {
                return (
                    vec![format!("c3 case={i} lemma={} pattern={} error={e}", case.lemma, case.pattern_name)],
                    vec![format!("case#{i} {}: target oracle failed: {e}", case.lemma)],
                )
            }
        };
        if src_answer != target.answer {
            failures.push(format!(
                "case#{i} {} pattern={}: source={src_answer} target={}",
                case.lemma, case.pattern_name, target.answer
            ));
        }
        let mut lift_ok = true;
        if let Some(w) = &src_witness {
            match art.lift(w) {
                Ok(steps) if steps.len() <= art.budget => {
                    if verify_solution(&art.target, &case.pattern, art.budget, &steps).is_err() {
                        lift_ok = false;
                    }
                }
                _ => lift_ok = false,
            }
            if !lift_ok {
                failures.push(format!(
                    "case#{i} {} pattern={}: lifted witness invalid",
                    case.lemma, case.pattern_name
                ));
            }
        }
        let mut project_ok = true;
        if let Some(OracleWitness::Subdivisions(sol)) = &target.witness {
            match art.project(sol) {
                Ok(w) => {
                    if !verify_source_witness(&art.source, art.source_pattern.as_ref(), &w) {
                        project_ok = false;
                    }
                }
                Err(_) => project_ok = false,
            }
            if !project_ok {
                failures.push(format!(
                    "case#{i} {} pattern={}: projected witness invalid",
                    case.lemma, case.pattern_name
                ));
            }
        }
        let record = format!(
            "c3 case={i} lemma={} pattern={} n={} budget={} source={} target={} lift={} project={}",
            case.lemma,
            case.pattern_name,
            art.target.vertex_count(),
            art.budget,
            src_answer,
            target.answer,
            lift_ok,
            project_ok
        );
        (vec![record], failures)
    });
    let mut report = CheckReport {
        name: "criterion-3 reduction equivalences",
        cases: cases.len() as u64,
        failures: vec![],
        records: vec![],
    };
    for (records, failures) in results {
        report.records.extend(records);
        report.failures.extend(failures);
    }
    report
}

/// Criterion 4: for every small connected triangle-free non-forest pattern
/// inside the exceptional families (and not already rigid), the cycle part
/// is 2-connected or the core is exceptional.
pub fn criterion_4(cfg: &SuiteConfig) -> CheckReport {
    let graphs = enumerate_graphs_up_to(if cfg.quick { 6 } else { 7 });
    let results = par_map(cfg.jobs, graphs.len(), |i| {
        let h = &graphs[i];
        if !h.is_connected()
            || h.is_forest()
            || !h.girth().at_least(4)
            || thm_easy_case(h).is_some()
        {
            return (None, None);
        }
        let in_family = match crate::family::family_membership(h) {
            Ok(Some(_)) => true,
            Ok(None) => false,
            Err(_) => false,
        };
        if !in_family {
            return (None, None);
        }
        let rigid = two_connected_cycle_set_of(h).is_some();
        let special = h
            .two_core()
            .ok()
            .and_then(|(core, _)| crate::special::recognize_special_core(&core).ok().flatten())
            .is_some();
        let record = format!("c4 graph={i} rigid={rigid} core={special}");
        let failure = if rigid || special {
            None
        } else {
            Some(format!("graph#{i} {h:?}: neither rigid cycle part nor exceptional core"))
        };
        (Some(record), failure)
    });
    let mut report = CheckReport {
        name: "criterion-4 exceptional-family sweep",
        cases: 0,
        failures: vec![],
        records: vec![],
    };
    for (record, failure) in results {
        if let Some(r) = record {
            report.cases += 1;
            report.records.push(r);
        }
        if let Some(f) = failure {
            report.failures.push(f);
        }
    }
    report
}

pub const CORPUS: &[(&str, &str)] = &[
    ("k1", include_str!("../corpus/k1.g")),
    ("k2", include_str!("../corpus/k2.g")),
    ("p3", include_str!("../corpus/p3.g")),
    ("p7", include_str!("../corpus/p7.g")),
    ("claw", include_str!("../corpus/claw.g")),
    ("k15", include_str!("../corpus/k15.g")),
    ("spider222", include_str!("../corpus/spider222.g")),
    ("bistar32", include_str!("../corpus/bistar32.g")),
    ("bistar-long-legs", include_str!("../corpus/bistar-long-legs.g")),
    ("star-forest-bistar", include_str!("../corpus/star-forest-bistar.g")),
    ("two-bistars", include_str!("../corpus/two-bistars.g")),
    ("tree-dist3", include_str!("../corpus/tree-dist3.g")),
    ("k3", include_str!("../corpus/k3.g")),
    ("k4", include_str!("../corpus/k4.g")),
    ("diamond", include_str!("../corpus/diamond.g")),
    ("k5", include_str!("../corpus/k5.g")),
    ("net", include_str!("../corpus/net.g")),
    ("roof5", include_str!("../corpus/roof5.g")),
    ("book-roof", include_str!("../corpus/book-roof.g")),
    ("hanging-pair7", include_str!("../corpus/hanging-pair7.g")),
    ("paw", include_str!("../corpus/paw.g")),
    ("unique-triangle6", include_str!("../corpus/unique-triangle6.g")),
    ("c4", include_str!("../corpus/c4.g")),
    ("c5", include_str!("../corpus/c5.g")),
    ("c6", include_str!("../corpus/c6.g")),
    ("c7", include_str!("../corpus/c7.g")),
    ("k23", include_str!("../corpus/k23.g")),
    ("h2200", include_str!("../corpus/h2200.g")),
    ("h2200-tail", include_str!("../corpus/h2200-tail.g")),
    ("htilde", include_str!("../corpus/htilde.g")),
    ("h22101", include_str!("../corpus/h22101.g")),
    ("two-c4", include_str!("../corpus/two-c4.g")),
    ("dumbbell", include_str!("../corpus/dumbbell.g")),
    ("tree-dist2", include_str!("../corpus/tree-dist2.g")),
    ("tree-dist4", include_str!("../corpus/tree-dist4.g")),
    ("tree-dist5", include_str!("../corpus/tree-dist5.g")),
    ("tree-dist7", include_str!("../corpus/tree-dist7.g")),
];

/// Expected verdict from a corpus file's `# expect:` header.
pub fn corpus_expectation(text: &str) -> Option<(VerdictStatus, Option<Rule>)> {
    let line = text.lines().find(|l| l.starts_with("# expect:"))?;
    let mut status = None;
    let mut rule = None;
    for tok in line.trim_start_matches("# expect:").split_whitespace() {
        if let Some(s) = tok.strip_prefix("status=") {
            status = Some(match s {
                "Polynomial" => VerdictStatus::Polynomial,
                "NPHard" => VerdictStatus::NpHard,
                "Open" => VerdictStatus::Open,
                _ => return None,
            });
        }
        if let Some(r) = tok.strip_prefix("rule=") {
            rule = if r == "none" { Some(None) } else { Some(Some(Rule::parse(r)?)) };
        }
    }
    Some((status?, rule?))
}

/// Criterion 5: the annotated pattern corpus classifies exactly as
/// expected.
pub fn criterion_5(_cfg: &SuiteConfig) -> CheckReport {
    let mut report = CheckReport {
        name: "criterion-5 classifier corpus",
        cases: 0,
        failures: vec![],
        records: vec![],
    };
    for (name, text) in CORPUS {
        report.cases += 1;
        let (expected_status, expected_rule) = match corpus_expectation(text) {
            Some(e) => e,
            None => {
                report.failures.push(format!("{name}: missing or bad expectation header"));
                continue;
            }
        };
        let g = match read_graph(text) {
            Ok(g) => g,
            Err(e) => {
                report.failures.push(format!("{name}: parse error {e}"));
                continue;
            }
        };
        match classify(&g) {
            Ok(v) => {
                let ok = v.status == expected_status && v.rule == expected_rule;
                if !ok {
                    report.failures.push(format!(
                        "{name}: expected {expected_status}/{expected_rule:?}, got {}/{:?}",
                        v.status, v.rule
                    ));
                }
                report.records.push(format!("c5 pattern={name} {}", v.record()));
            }
            Err(e) => report.failures.push(format!("{name}: classify error {e}")),
        }
    }
    report
}

/// Random subdivided star: a center with up to four legs of length up to
/// three, truncated to at most `max` vertices.
fn random_subdivided_star(rng: &mut ChaCha8Rng, max: usize) -> Graph {
    let legs = rng.gen_range(0..=4usize);
    let mut edges = Vec::new();
    let mut n = 1;
    for _ in 0..legs {
        let len = rng.gen_range(1..=3usize);
        let mut prev = 0;
        for _ in 0..len {
            if n >= max {
                break;
            }
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("star")
}

/// Criterion 7: planted induced subdivided stars survive any single
/// subdivision.
pub fn criterion_7(cfg: &SuiteConfig) -> CheckReport {
    let trials: usize = if cfg.quick { 500 } else { 10_000 };
    let results = par_map(cfg.jobs, trials, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7a11_0000 + t as u64);
        let h = random_subdivided_star(&mut rng, 6);
        let hn = h.vertex_count();
        let extra = rng.gen_range(0..=(10 - hn));
        let n = hn + extra;
        let mut edges = h.edges();
        for x in hn..n {
            for y in 0..x {
                // Edges inside the planted copy stay untouched; everything
                // else is fair game.
                if y >= hn || rng.gen_bool(0.4) {
                    if rng.gen_bool(0.5) {
                        edges.push((y, x));
                    }
                }
            }
        }
        let host = Graph::from_edges(n, &edges).expect("host");
        debug_assert!(find_induced_copy(&host, &h).is_some());
        if host.edge_count() == 0 {
            return (format!("c7 trial={t} skipped=no-edges"), None);
        }
        let all = host.edges();
        let (u, v) = all[rng.gen_range(0..all.len())];
        let sub = host.subdivide(SubdivisionStep::new(u, v)).expect("edge");
        let ok = find_induced_copy(&sub, &h).is_some();
        let failure = if ok {
            None
        } else {
            Some(format!("trial#{t}: planted star lost after subdividing ({u},{v})"))
        };
        (format!("c7 trial={t} ok={ok}"), failure)
    });
    let mut report = CheckReport {
        name: "criterion-7 star indestructibility",
        cases: trials as u64,
        failures: vec![],
        records: vec![],
    };
    for (record, failure) in results {
        report.records.push(record);
        if let Some(f) = failure {
            report.failures.push(f);
        }
    }
    report
}

pub fn criteria_1_to_7(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let (r1, r6) = criterion_1_and_6(cfg);
    vec![
        r1,
        criterion_2(cfg),
        criterion_3(cfg),
        criterion_4(cfg),
        criterion_5(cfg),
        r6,
        criterion_7(cfg),
    ]
}

fn concat_records(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        for rec in &r.records {
            out.push_str(rec);
            out.push('\n');
        }
    }
    out
}

/// Criterion 8: the record output of criteria 1-7 is byte-identical across
/// repeated runs and across worker counts.
pub fn criterion_8(cfg: &SuiteConfig, first_run: &[CheckReport]) -> CheckReport {
    let baseline = concat_records(first_run);
    let rerun_same = concat_records(&criteria_1_to_7(&SuiteConfig { jobs: cfg.jobs, ..*cfg }));
    let other_jobs = if cfg.jobs == 1 { 4 } else { 1 };
    let rerun_jobs = concat_records(&criteria_1_to_7(&SuiteConfig { jobs: other_jobs, ..*cfg }));
    let mut failures = Vec::new();
    if baseline != rerun_same {
        failures.push("records differ between two identical runs".into());
    }
    if baseline != rerun_jobs {
        failures.push(format!("records differ between jobs={} and jobs={other_jobs}", cfg.jobs));
    }
    CheckReport {
        name: "criterion-8 determinism",
        cases: 2,
        failures,
        records: vec![format!("c8 bytes={} runs=3", baseline.len())],
    }
}

/// The full suite: criteria 1-7 plus the determinism check over them.
pub fn run_all(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut reports = criteria_1_to_7(cfg);
    let det = criterion_8(cfg, &reports);
    reports.push(det);
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_files_parse_and_annotate() {
        assert!(CORPUS.len() >= 25);
        for (name, text) in CORPUS {
            assert!(read_graph(text).is_ok(), "{name} must parse");
            assert!(corpus_expectation(text).is_some(), "{name} must carry an expectation");
        }
    }

    #[test]
    fn quick_suite_is_green() {
        let cfg = SuiteConfig { quick: true, jobs: 2 };
        for report in criteria_1_to_7(&cfg) {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
        }
    }
}
