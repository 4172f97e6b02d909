//! Parameter extraction relative to a fixed optimum and the per-candidate
//! coverage bounds, restated as exact integer inequalities.
//!
//! Every bound is evaluated after clearing denominators, so there is no
//! floating-point tolerance anywhere: a bound either holds over the integers
//! or it is reported violated with its full integer witness.

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{solve_exact, ExactError};
use crate::graph::{BipartiteGraph, Side, Solution};
use crate::solver::{candidate_solutions, solve_comb07, CandidateLabel, Orientation, SplitGuess};

/// Exact rational, serialized as `{"num": .., "den": ..}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Reduced rational; `den` must be nonzero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(Ratio::new(num, den))
    }

    pub fn num(&self) -> i64 {
        *self.0.numer()
    }

    pub fn den(&self) -> i64 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.num() as f64 / self.den() as f64
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num(), self.den())
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rational", 2)?;
        s.serialize_field("num", &self.num())?;
        s.serialize_field("den", &self.den())?;
        s.end()
    }
}

/// Raw integer counts describing a fixed optimum, with the derived exact
/// rationals alongside. Rationals whose defining denominator is zero are
/// absent, never a sentinel value.
///
/// Orientation is chosen so that `k1 <= k2` (`A-is-V1` kept on ties); all
/// "top k" prefixes are clamped to the side size when `k` exceeds it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamProfile {
    pub orientation: Orientation,
    /// Optimum coverage.
    pub opt: u64,
    /// |O ∩ V1| and |O ∩ V2|.
    pub k1: usize,
    pub k2: usize,
    /// Edges covered by O1 (α·opt).
    #[serde(rename = "dO1")]
    pub d_o1: u64,
    /// Edges covered by S1 ∩ O1 (β₁·dO1).
    #[serde(rename = "cS1O1")]
    pub c_s1_o1: u64,
    /// Private O2 edges: opt − dO1 (δ′(O₂)).
    #[serde(rename = "dPrivO2")]
    pub d_priv_o2: u64,
    /// O1 edges whose V2 endpoint lies outside the top-k prefix of V2 (θ·dO1).
    pub t: u64,
    /// Private O2 edges whose V1 endpoint lies outside the top-k prefix of V1
    /// (γ·dPrivO2).
    pub gcount: u64,
    /// |O1 \ top_k(V1, k)| and the total degree of those vertices (ζ·dO1).
    pub kp1: usize,
    pub z: u64,
    /// |O2 \ top_k(V2, k)| and the private-edge count on those vertices
    /// (λ·dPrivO2).
    pub kp2: usize,
    pub l: u64,
    pub mu: Option<Rational>,
    pub alpha: Option<Rational>,
    pub beta1: Option<Rational>,
    pub theta: Option<Rational>,
    pub gamma: Option<Rational>,
    pub zeta: Option<Rational>,
    pub lambda: Option<Rational>,
}

/// One checked inequality, identified by a stable id.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaId {
    L1a,
    L1b,
    L1opt,
    L2,
    L3a,
    L3b,
    L4a,
    L4b,
    L4c,
}

pub const LEMMA_IDS: [LemmaId; 9] = [
    LemmaId::L1a,
    LemmaId::L1b,
    LemmaId::L1opt,
    LemmaId::L2,
    LemmaId::L3a,
    LemmaId::L3b,
    LemmaId::L4a,
    LemmaId::L4b,
    LemmaId::L4c,
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum LemmaStatus {
    Holds,
    Violated,
    Skipped { reason: String },
}

/// An inequality verdict with both sides in cleared-denominator integers.
/// Skipped rows carry no lhs/rhs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub id: LemmaId,
    #[serde(flatten)]
    pub status: LemmaStatus,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
}

/// All nine inequality rows, each id exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub rows: Vec<LemmaRow>,
}

impl LemmaReport {
    pub fn violated(&self) -> Vec<&LemmaRow> {
        self.rows
            .iter()
            .filter(|r| r.status == LemmaStatus::Violated)
            .collect()
    }

    pub fn counts(&self) -> LemmaSummary {
        let mut summary = LemmaSummary::default();
        for row in &self.rows {
            match row.status {
                LemmaStatus::Holds => summary.holds += 1,
                LemmaStatus::Violated => summary.violated += 1,
                LemmaStatus::Skipped { .. } => summary.skipped += 1,
            }
        }
        summary
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaSummary {
    pub holds: usize,
    pub violated: usize,
    pub skipped: usize,
}

/// End-to-end approximation verdict: `10·alg >= 7·opt` over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioReport {
    pub alg: u64,
    pub opt: u64,
    pub verdict: bool,
    /// `alg/opt`, absent when the optimum is zero.
    pub ratio: Option<Rational>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("claimed optimum covers {claimed} edges but recomputation gives {actual}")]
    CoverageMismatch { claimed: u64, actual: u64 },
    #[error("optimum has {got} vertices, expected {expected}")]
    WrongSolutionSize { expected: usize, got: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid solution: {0}")]
    Graph(#[from] crate::graph::GraphError),
}

fn ratio_or_absent(num: u64, den: u64) -> Option<Rational> {
    (den != 0).then(|| Rational::new(num as i64, den as i64))
}

/// Extracts all split parameters of `optimum`. The caller must supply a true
/// optimum (its stored coverage is re-verified against the graph; optimality
/// itself is the caller's responsibility).
pub fn extract_params(
    g: &BipartiteGraph,
    k: usize,
    optimum: &Solution,
) -> Result<ParamProfile, AnalysisError> {
    let actual = g.coverage(&optimum.vertices)?;
    if actual != optimum.coverage {
        return Err(AnalysisError::CoverageMismatch {
            claimed: optimum.coverage,
            actual,
        });
    }
    let expected_len = k.min(g.n_total());
    if optimum.len() != expected_len {
        return Err(AnalysisError::WrongSolutionSize {
            expected: expected_len,
            got: optimum.len(),
        });
    }

    let in_a_count = optimum
        .vertices
        .iter()
        .filter(|v| v.side == Side::A)
        .count();
    let in_b_count = optimum.len() - in_a_count;
    let orientation = if in_a_count <= in_b_count {
        Orientation::AIsV1
    } else {
        Orientation::BIsV1
    };
    let v1 = orientation.v1_side();
    let v2 = orientation.v2_side();
    let (n1, n2) = (g.n_side(v1), g.n_side(v2));

    let mut in_o1 = vec![false; n1];
    let mut in_o2 = vec![false; n2];
    for v in &optimum.vertices {
        if v.side == v1 {
            in_o1[v.slot()] = true;
        } else {
            in_o2[v.slot()] = true;
        }
    }
    let k1 = in_o1.iter().filter(|&&x| x).count();
    let k2 = in_o2.iter().filter(|&&x| x).count();

    let opt = optimum.coverage;
    let d_o1: u64 = (0..n1)
        .filter(|&s| in_o1[s])
        .map(|s| g.deg_slot(v1, s) as u64)
        .sum();
    let d_priv_o2 = opt - d_o1;

    // Top-k1 prefix of V1 (S1) and top-k prefixes of both sides, clamped.
    let order1 = g.order(v1);
    let order2 = g.order(v2);
    let mut in_s1 = vec![false; n1];
    for &s in &order1[..k1] {
        in_s1[s as usize] = true;
    }
    let mut in_p1 = vec![false; n1];
    for &s in &order1[..k.min(n1)] {
        in_p1[s as usize] = true;
    }
    let mut in_p2 = vec![false; n2];
    for &s in &order2[..k.min(n2)] {
        in_p2[s as usize] = true;
    }

    let c_s1_o1: u64 = (0..n1)
        .filter(|&s| in_s1[s] && in_o1[s])
        .map(|s| g.deg_slot(v1, s) as u64)
        .sum();

    // θ numerator: O1 edges going below the top-k prefix of V2.
    let mut t = 0u64;
    for s in (0..n1).filter(|&s| in_o1[s]) {
        for &w in &g.adj(v1)[s] {
            if !in_p2[w as usize] {
                t += 1;
            }
        }
    }

    // γ and λ numerators walk the private edges: an O2 edge is private when
    // its V1 endpoint is not in O1.
    let mut gcount = 0u64;
    let mut l = 0u64;
    for s in (0..n2).filter(|&s| in_o2[s]) {
        for &u in &g.adj(v2)[s] {
            if in_o1[u as usize] {
                continue;
            }
            if !in_p1[u as usize] {
                gcount += 1;
            }
            if !in_p2[s] {
                l += 1;
            }
        }
    }

    let kp1 = (0..n1).filter(|&s| in_o1[s] && !in_p1[s]).count();
    let z: u64 = (0..n1)
        .filter(|&s| in_o1[s] && !in_p1[s])
        .map(|s| g.deg_slot(v1, s) as u64)
        .sum();
    let kp2 = (0..n2).filter(|&s| in_o2[s] && !in_p2[s]).count();

    debug_assert!(c_s1_o1 <= d_o1 && d_o1 <= opt);
    debug_assert!(t <= d_o1 && gcount <= d_priv_o2 && z <= d_o1 && l <= d_priv_o2);
    debug_assert!(kp1 > 0 || z == 0);
    debug_assert!(kp2 > 0 || l == 0);

    Ok(ParamProfile {
        orientation,
        opt,
        k1,
        k2,
        d_o1,
        c_s1_o1,
        d_priv_o2,
        t,
        gcount,
        kp1,
        z,
        kp2,
        l,
        mu: ratio_or_absent(k1 as u64, k2 as u64),
        alpha: ratio_or_absent(d_o1, opt),
        beta1: ratio_or_absent(c_s1_o1, d_o1),
        theta: ratio_or_absent(t, d_o1),
        gamma: ratio_or_absent(gcount, d_priv_o2),
        zeta: ratio_or_absent(z, d_o1),
        lambda: ratio_or_absent(l, d_priv_o2),
    })
}

/// Checks the candidate coverage bounds at the true split `(k1, k2)` of the
/// supplied optimum, in cleared-denominator integer arithmetic:
///
/// * `L1a`: cov(SOL1) ≥ opt − dO1 + cS1O1
/// * `L1b`: cov(SOL1) ≥ dO1 + gcount
/// * `L1opt`: S1 = O1 implies cov(SOL1) = opt
/// * `L2`:  cov(SOL2) ≥ opt − dO1 + t
/// * `L3a`: cov(SOL3) ≥ opt − l − t
/// * `L3b`: cov(SOL3)·k2 ≥ dPrivO2·k2 + k1·l
/// * `L4a`: cov(SOL4) ≥ opt − z − gcount
/// * `L4b`: cov(SOL4)·k1 ≥ (2·dO1 − cS1O1)·k1 + (k2 − k1)·z
/// * `L4c`: 2·k1·k2·cov(SOL4) ≥
///   k1·((k2−k1)·opt + (2·k2+k1)·dO1 − k2·cS1O1) + (k2−2·k1)·k2·z
///
/// with SOL4 = max(SOL4a, SOL4b). Rows referencing an infeasible candidate
/// are skipped (SOL3 needs k ≤ |V2|, the SOL4 family needs k ≤ |V1|), as are
/// L4b/L4c when k1 = 0.
pub fn check_lemma_bounds(
    g: &BipartiteGraph,
    k: usize,
    optimum: &Solution,
) -> Result<LemmaReport, AnalysisError> {
    let p = extract_params(g, k, optimum)?;
    let guess = SplitGuess::new(p.k1, p.k2, p.orientation);
    let sols = candidate_solutions(g, &guess);
    let cov = |label: CandidateLabel| -> Option<i64> {
        sols.iter()
            .find(|(tag, _)| tag.label == label)
            .map(|(_, s)| s.coverage as i64)
    };

    let cov1 = cov(CandidateLabel::Sol1).expect("SOL1 is feasible at the true split");
    let cov2 = cov(CandidateLabel::Sol2).expect("SOL2 is feasible at the true split");
    let cov3 = cov(CandidateLabel::Sol3);
    let cov4 = match (cov(CandidateLabel::Sol4a), cov(CandidateLabel::Sol4b)) {
        // The SOL4 bounds presume the k best vertices of V1 exist; without
        // SOL4a the remaining half of the pair proves nothing.
        (None, _) => None,
        (Some(a), None) => Some(a),
        (Some(a), Some(b)) => Some(a.max(b)),
    };

    let (opt, d_o1, c_s1_o1, d_priv_o2) = (
        p.opt as i64,
        p.d_o1 as i64,
        p.c_s1_o1 as i64,
        p.d_priv_o2 as i64,
    );
    let (t, gcount, z, l) = (p.t as i64, p.gcount as i64, p.z as i64, p.l as i64);
    let (k1, k2) = (p.k1 as i64, p.k2 as i64);

    let ineq = |id: LemmaId, lhs: i64, rhs: i64| LemmaRow {
        id,
        status: if lhs >= rhs {
            LemmaStatus::Holds
        } else {
            LemmaStatus::Violated
        },
        lhs: Some(lhs),
        rhs: Some(rhs),
    };
    let skip = |id: LemmaId, reason: &str| LemmaRow {
        id,
        status: LemmaStatus::Skipped {
            reason: reason.to_string(),
        },
        lhs: None,
        rhs: None,
    };

    let mut rows = Vec::with_capacity(9);
    rows.push(ineq(LemmaId::L1a, cov1, opt - d_o1 + c_s1_o1));
    rows.push(ineq(LemmaId::L1b, cov1, d_o1 + gcount));

    // L1opt: equality when S1 and O1 coincide as sets.
    let s1_equals_o1 = p.c_s1_o1 == p.d_o1 && {
        let v1 = p.orientation.v1_side();
        let mut o1: Vec<u32> = optimum
            .vertices
            .iter()
            .filter(|v| v.side == v1)
            .map(|v| v.slot() as u32)
            .collect();
        o1.sort_unstable();
        let mut s1: Vec<u32> = g.order(v1)[..p.k1].to_vec();
        s1.sort_unstable();
        o1 == s1
    };
    if s1_equals_o1 {
        rows.push(LemmaRow {
            id: LemmaId::L1opt,
            status: if cov1 == opt {
                LemmaStatus::Holds
            } else {
                LemmaStatus::Violated
            },
            lhs: Some(cov1),
            rhs: Some(opt),
        });
    } else {
        rows.push(skip(LemmaId::L1opt, "S1 != O1"));
    }

    rows.push(ineq(LemmaId::L2, cov2, opt - d_o1 + t));

    match cov3 {
        Some(c3) => {
            rows.push(ineq(LemmaId::L3a, c3, opt - l - t));
            rows.push(ineq(LemmaId::L3b, c3 * k2, d_priv_o2 * k2 + k1 * l));
        }
        None => {
            rows.push(skip(LemmaId::L3a, "SOL3 infeasible (k > |V2|)"));
            rows.push(skip(LemmaId::L3b, "SOL3 infeasible (k > |V2|)"));
        }
    }

    match cov4 {
        Some(c4) => {
            rows.push(ineq(LemmaId::L4a, c4, opt - z - gcount));
            if k1 == 0 {
                rows.push(skip(LemmaId::L4b, "k1 = 0"));
                rows.push(skip(LemmaId::L4c, "k1 = 0"));
            } else {
                rows.push(ineq(
                    LemmaId::L4b,
                    c4 * k1,
                    (2 * d_o1 - c_s1_o1) * k1 + (k2 - k1) * z,
                ));
                rows.push(ineq(
                    LemmaId::L4c,
                    2 * k1 * k2 * c4,
                    k1 * ((k2 - k1) * opt + (2 * k2 + k1) * d_o1 - k2 * c_s1_o1)
                        + (k2 - 2 * k1) * k2 * z,
                ));
            }
        }
        None => {
            let reason = "SOL4a infeasible (k > |V1|)";
            rows.push(skip(LemmaId::L4a, reason));
            rows.push(skip(LemmaId::L4b, reason));
            rows.push(skip(LemmaId::L4c, reason));
        }
    }

    debug_assert_eq!(rows.len(), LEMMA_IDS.len());
    Ok(LemmaReport { rows })
}

/// Runs the solver against the exact optimum and reports the end-to-end
/// ratio verdict `10·alg >= 7·opt`. A zero optimum holds with the ratio
/// absent.
pub fn check_theorem(
    g: &BipartiteGraph,
    k: usize,
    cap: usize,
) -> Result<RatioReport, AnalysisError> {
    let optimum = solve_exact(g, k, cap)?;
    let (alg_sol, _) = solve_comb07(g, k).map_err(AnalysisError::Graph)?;
    let (alg, opt) = (alg_sol.coverage, optimum.coverage);
    Ok(RatioReport {
        alg,
        opt,
        verdict: 10 * alg >= 7 * opt,
        ratio: ratio_or_absent(alg, opt),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::DEFAULT_EXACT_CAP;
    use crate::graph::VertexRef;
    use crate::testutil::{k23, p4};

    fn p4_profile() -> ParamProfile {
        let g = p4();
        let optimum = Solution::new(&g, vec![VertexRef::a(2), VertexRef::b(1)]).unwrap();
        extract_params(&g, 2, &optimum).unwrap()
    }

    #[test]
    fn p4_parameters_by_hand() {
        let p = p4_profile();
        assert_eq!(p.orientation, Orientation::AIsV1);
        assert_eq!((p.opt, p.k1, p.k2), (3, 1, 1));
        assert_eq!((p.d_o1, p.c_s1_o1, p.d_priv_o2), (2, 2, 1));
        assert_eq!((p.t, p.gcount, p.kp1, p.z, p.kp2, p.l), (0, 0, 0, 0, 0, 0));
        assert_eq!(p.mu, Some(Rational::new(1, 1)));
        assert_eq!(p.alpha, Some(Rational::new(2, 3)));
        assert_eq!(p.beta1, Some(Rational::new(1, 1)));
        assert_eq!(p.theta, Some(Rational::new(0, 1)));
    }

    #[test]
    fn k23_one_sided_optimum_swaps_orientation() {
        let g = k23();
        let optimum = Solution::new(&g, vec![VertexRef::a(1), VertexRef::a(2)]).unwrap();
        let p = extract_params(&g, 2, &optimum).unwrap();
        assert_eq!(p.orientation, Orientation::BIsV1);
        assert_eq!((p.k1, p.k2), (0, 2));
        assert_eq!(p.d_o1, 0);
        assert_eq!(p.alpha, Some(Rational::new(0, 1)));
        assert_eq!(p.beta1, None);
        assert_eq!(p.theta, None);
        assert_eq!(p.zeta, None);
    }

    #[test]
    fn empty_graph_all_rationals_absent() {
        let g = BipartiteGraph::new(2, 2, []).unwrap();
        let optimum = Solution::new(&g, vec![VertexRef::a(1), VertexRef::b(1)]).unwrap();
        let p = extract_params(&g, 2, &optimum).unwrap();
        assert_eq!(p.opt, 0);
        assert_eq!(p.alpha, None);
        assert_eq!(p.gamma, None);
        assert_eq!(p.lambda, None);
    }

    #[test]
    fn extract_params_rejects_bad_input() {
        let g = p4();
        let mut sol = Solution::new(&g, vec![VertexRef::a(2), VertexRef::b(1)]).unwrap();
        sol.coverage = 99;
        assert!(matches!(
            extract_params(&g, 2, &sol),
            Err(AnalysisError::CoverageMismatch { .. })
        ));
        let small = Solution::new(&g, vec![VertexRef::a(2)]).unwrap();
        assert!(matches!(
            extract_params(&g, 2, &small),
            Err(AnalysisError::WrongSolutionSize { .. })
        ));
    }

    #[test]
    fn suboptimal_input_surfaces_as_violation() {
        // {A2, B2} covers 2 < opt = 3 but passes the recompute check, so the
        // bounds are evaluated against a wrong `opt`. S1 = O1 = {A2}, hence
        // the L1opt equality check must report the mismatch verbatim instead
        // of suppressing it.
        let g = p4();
        let claimed = Solution::new(&g, vec![VertexRef::a(2), VertexRef::b(2)]).unwrap();
        assert_eq!(claimed.coverage, 2);
        let report = check_lemma_bounds(&g, 2, &claimed).unwrap();
        let l1opt = report
            .rows
            .iter()
            .find(|r| r.id == LemmaId::L1opt)
            .unwrap();
        assert_eq!(l1opt.status, LemmaStatus::Violated);
        assert_eq!((l1opt.lhs, l1opt.rhs), (Some(3), Some(2)));
        assert_eq!(report.counts().violated, 1);
        assert_eq!(report.violated().len(), 1);
    }

    #[test]
    fn p4_lemma_rows() {
        let g = p4();
        let optimum = Solution::new(&g, vec![VertexRef::a(2), VertexRef::b(1)]).unwrap();
        let report = check_lemma_bounds(&g, 2, &optimum).unwrap();
        assert_eq!(report.rows.len(), 9);
        assert!(report.violated().is_empty());

        let l1a = &report.rows[0];
        assert_eq!(l1a.id, LemmaId::L1a);
        assert_eq!((l1a.lhs, l1a.rhs), (Some(3), Some(3)));

        // S1 = O1 here, so SOL1 must be exactly optimal.
        let l1opt = &report.rows[2];
        assert_eq!(l1opt.id, LemmaId::L1opt);
        assert_eq!(l1opt.status, LemmaStatus::Holds);
        assert_eq!((l1opt.lhs, l1opt.rhs), (Some(3), Some(3)));
    }

    #[test]
    fn k23_degenerate_split_skips_l4b_l4c() {
        let g = k23();
        let optimum = Solution::new(&g, vec![VertexRef::a(1), VertexRef::a(2)]).unwrap();
        let report = check_lemma_bounds(&g, 2, &optimum).unwrap();
        assert!(report.violated().is_empty());
        let by_id = |id: LemmaId| report.rows.iter().find(|r| r.id == id).unwrap();
        assert!(matches!(
            by_id(LemmaId::L4b).status,
            LemmaStatus::Skipped { .. }
        ));
        assert!(matches!(
            by_id(LemmaId::L4c).status,
            LemmaStatus::Skipped { .. }
        ));
        // L3a: cov(SOL3) = 6 >= 6 - 0 - 0.
        assert_eq!(
            (by_id(LemmaId::L3a).lhs, by_id(LemmaId::L3a).rhs),
            (Some(6), Some(6))
        );
    }

    #[test]
    fn theorem_report_p4() {
        let g = p4();
        let r = check_theorem(&g, 2, DEFAULT_EXACT_CAP).unwrap();
        assert_eq!((r.alg, r.opt), (3, 3));
        assert!(r.verdict);
        assert_eq!(r.ratio, Some(Rational::new(1, 1)));
    }

    #[test]
    fn theorem_report_zero_optimum() {
        let g = BipartiteGraph::new(3, 3, []).unwrap();
        let r = check_theorem(&g, 2, DEFAULT_EXACT_CAP).unwrap();
        assert!(r.verdict);
        assert_eq!(r.ratio, None);
    }

    #[test]
    fn rational_reduces_and_serializes() {
        let r = Rational::new(21, 30);
        assert_eq!((r.num(), r.den()), (7, 10));
        assert_eq!(r.to_string(), "7/10");
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"num":7,"den":10}"#);
    }
}
