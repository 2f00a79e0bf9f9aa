//! Algorithms for graph modification by edge subdivision: decide whether a
//! host graph can be made free of induced copies of a fixed pattern with a
//! bounded number of subdivisions, classify patterns by the known complexity
//! landscape, and build the matching hardness reductions with certificate
//! maps in both directions.

pub mod canon;
pub mod checks;
pub mod family;
pub mod graph;
pub mod induced;
pub mod io;
pub mod oracle;
pub mod pattern;
pub mod reductions;
pub mod solver;
pub mod special;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm, DEFAULT_CANON_BOUND};
pub use graph::{Girth, Graph, GraphError, SubdivisionSolution, SubdivisionStep, VertexId};
pub use induced::{count_induced_copies, find_induced_copy, is_h_free, InducedEmbedding};
pub use oracle::{oracle_edge_deletion, oracle_subdivision, oracle_vertex_cover, OracleOptions, OracleResult, OracleWitness};
pub use pattern::{classify, PatternVerdict, Rule, VerdictStatus};
pub use solver::{solve, verify_solution, Answer, SolveOptions, SolveResult};
