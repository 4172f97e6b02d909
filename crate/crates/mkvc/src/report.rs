//! Machine-readable report documents emitted by the CLI.
//!
//! Field sets are stable: every field below is present on every success path
//! (absent values are `null`), and struct field order fixes the JSON key
//! order so identical runs produce byte-identical documents.

use serde::Serialize;

use crate::analysis::{LemmaReport, LemmaSummary, ParamProfile, RatioReport, Rational};
use crate::graph::Solution;
use crate::solver::CandidateTag;

/// Exact rational as a `"num/den"` string plus a decimal convenience field.
#[derive(Clone, Debug, Serialize)]
pub struct RatioPair {
    pub exact: String,
    pub decimal: f64,
}

impl From<Rational> for RatioPair {
    fn from(r: Rational) -> Self {
        RatioPair {
            exact: r.to_string(),
            decimal: r.to_f64(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CoverageSet {
    pub comb07: Option<u64>,
    pub greedy: Option<u64>,
    pub exact: Option<u64>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SolutionSet {
    pub comb07: Option<Solution>,
    pub greedy: Option<Solution>,
    pub exact: Option<Solution>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RatioSet {
    pub comb07_vs_exact: Option<RatioPair>,
    pub greedy_vs_exact: Option<RatioPair>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub comb07_ms: Option<u64>,
    pub greedy_ms: Option<u64>,
    pub exact_ms: Option<u64>,
    pub total_ms: u64,
}

/// Document for `mkvc solve`.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub instance: String,
    pub k: usize,
    pub n_a: usize,
    pub n_b: usize,
    pub m: usize,
    pub coverage: CoverageSet,
    pub solutions: SolutionSet,
    /// Winning candidate of the split solver, when it ran.
    pub winner: Option<CandidateTag>,
    pub ratios: RatioSet,
    /// `10·comb07 >= 7·exact`, present when both ran.
    pub verdict: Option<bool>,
    /// Inequality summary; populated by `verify`, null for plain solves.
    pub lemmas: Option<LemmaSummary>,
    pub timings_ms: Timings,
}

/// Document for `mkvc verify`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub instance: String,
    pub k: usize,
    pub n_a: usize,
    pub n_b: usize,
    pub m: usize,
    pub profile: ParamProfile,
    pub lemmas: LemmaReport,
    pub lemma_summary: LemmaSummary,
    pub winner: CandidateTag,
    pub theorem: RatioReport,
    pub timings_ms: Timings,
}
