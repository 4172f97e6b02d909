//! Max k-vertex cover toolkit for bipartite graphs.
//!
//! Pick `k` vertices maximizing the number of edges with at least one chosen
//! endpoint. The crate provides:
//!
//! * [`solver::solve_comb07`] — a purely combinatorial split-guessing solver
//!   with a proven 0.7 approximation guarantee,
//! * [`solver::solve_greedy`] — the natural greedy baseline (ratio (e−1)/e),
//! * [`exact::solve_exact`] / [`exact::solve_naive`] — exact oracles for
//!   validation, exponential only in the smaller side,
//! * [`analysis`] — split-parameter extraction and the per-candidate
//!   coverage bounds as exact integer inequalities,
//! * [`gen`] — seeded, reproducible instance generators,
//! * the `mkvc` binary — solve / verify / gen / bench with JSON and CSV
//!   reports.

pub mod analysis;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod report;
pub mod solver;
mod topsum;

pub use analysis::{
    check_lemma_bounds, check_theorem, extract_params, LemmaReport, LemmaRow, LemmaStatus,
    ParamProfile, RatioReport, Rational,
};
pub use exact::{solve_exact, solve_naive, ExactError, DEFAULT_EXACT_CAP};
pub use gen::{gen_gnp, gen_planted, gen_semiregular, GenError};
pub use graph::{BipartiteGraph, GraphError, ParseError, Side, Solution, VertexRef};
pub use solver::{
    best_fill, candidate_solutions, solve_comb07, solve_greedy, top_k, CandidateLabel,
    CandidateTag, Orientation, SplitGuess,
};
