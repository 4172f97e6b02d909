//! Candidate construction and the split-guessing cover solver, plus the
//! greedy baseline.
//!
//! For a budget `k` the solver enumerates every cardinality split
//! `(k1, k2)` with `k1 + k2 = k` under both side orientations and, per
//! split, builds up to five candidate solutions:
//!
//! * `SOL1`: top `k1` of V1 plus the best `k2` remaining vertices of V2,
//! * `SOL2`: top `k2` of V2 plus the best `k1` remaining vertices of V1,
//! * `SOL3`: the `k` best vertices of V2,
//! * `SOL4a`: the `k` best vertices of V1,
//! * `SOL4b`: top `2·k1` of V1 plus the best `k − 2·k1` remaining of V2,
//!
//! returning the best coverage over all of them. Because same-side vertices
//! cover disjoint edge sets, a one-shot "best fill" by residual degree is an
//! exact completion, and the whole sweep reduces to prefix sums plus
//! "sum of the t largest residual degrees" queries.

use serde::{Deserialize, Serialize};

use crate::graph::{BipartiteGraph, GraphError, Side, Solution, VertexRef};
use crate::topsum::TopSum;

/// Which concrete side plays the role of V1 in a split guess.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "A-is-V1")]
    AIsV1,
    #[serde(rename = "B-is-V1")]
    BIsV1,
}

impl Orientation {
    pub fn v1_side(self) -> Side {
        match self {
            Orientation::AIsV1 => Side::A,
            Orientation::BIsV1 => Side::B,
        }
    }

    pub fn v2_side(self) -> Side {
        self.v1_side().opposite()
    }
}

/// A guessed cardinality split of the optimum: `k1` vertices on V1 and `k2`
/// on V2, with `k1 + k2 = k`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitGuess {
    pub k1: usize,
    pub k2: usize,
    pub orientation: Orientation,
}

impl SplitGuess {
    pub fn new(k1: usize, k2: usize, orientation: Orientation) -> Self {
        SplitGuess {
            k1,
            k2,
            orientation,
        }
    }

    pub fn k(&self) -> usize {
        self.k1 + self.k2
    }
}

/// Identifies which construction produced a solution.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CandidateLabel {
    #[serde(rename = "SOL1")]
    Sol1,
    #[serde(rename = "SOL2")]
    Sol2,
    #[serde(rename = "SOL3")]
    Sol3,
    #[serde(rename = "SOL4a")]
    Sol4a,
    #[serde(rename = "SOL4b")]
    Sol4b,
    #[serde(rename = "GREEDY")]
    Greedy,
    #[serde(rename = "EXACT")]
    Exact,
}

/// Label plus the split guess it was built under, when any.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateTag {
    pub label: CandidateLabel,
    pub guess: Option<SplitGuess>,
}

impl CandidateTag {
    pub fn new(label: CandidateLabel, guess: SplitGuess) -> Self {
        CandidateTag {
            label,
            guess: Some(guess),
        }
    }

    pub fn bare(label: CandidateLabel) -> Self {
        CandidateTag { label, guess: None }
    }
}

/// The `k` largest-degree vertices of a side (prefix of the degree order).
///
/// For any k-subset `s` of the same side, `coverage(top_k) >= coverage(s)`.
pub fn top_k(g: &BipartiteGraph, side: Side, k: usize) -> Result<Vec<VertexRef>, GraphError> {
    if k > g.n_side(side) {
        return Err(GraphError::KOutOfRange {
            k,
            max: g.n_side(side),
        });
    }
    Ok(g.order(side)[..k]
        .iter()
        .map(|&s| VertexRef::from_slot(side, s as usize))
        .collect())
}

/// The `k` vertices of `side` with the largest residual degree given `already`
/// (ties by ascending index). Among all k-subsets of `side` this maximizes the
/// additional coverage, exactly, because same-side vertices cover disjoint
/// edge sets.
pub fn best_fill(
    g: &BipartiteGraph,
    side: Side,
    k: usize,
    already: &[VertexRef],
) -> Result<Vec<VertexRef>, GraphError> {
    if k > g.n_side(side) {
        return Err(GraphError::KOutOfRange {
            k,
            max: g.n_side(side),
        });
    }
    let resid = g.residual_degrees(side, already)?;
    let mut slots: Vec<u32> = (0..g.n_side(side) as u32).collect();
    slots.sort_unstable_by_key(|&s| (std::cmp::Reverse(resid[s as usize]), s));
    Ok(slots[..k]
        .iter()
        .map(|&s| VertexRef::from_slot(side, s as usize))
        .collect())
}

fn prefix_coverage(g: &BipartiteGraph, side: Side, k: usize) -> u64 {
    g.order(side)[..k]
        .iter()
        .map(|&s| g.deg_slot(side, s as usize) as u64)
        .sum()
}

/// Builds one labeled candidate for `guess`, or `None` when the construction
/// needs more vertices than a side holds.
fn build_candidate(
    g: &BipartiteGraph,
    guess: &SplitGuess,
    label: CandidateLabel,
) -> Option<Solution> {
    let v1 = guess.orientation.v1_side();
    let v2 = guess.orientation.v2_side();
    let (n1, n2) = (g.n_side(v1), g.n_side(v2));
    let (k1, k2) = (guess.k1, guess.k2);
    let k = guess.k();

    let prefix_plus_fill = |p_side: Side, p_len: usize, f_len: usize| -> Solution {
        let prefix = top_k(g, p_side, p_len).expect("feasibility checked");
        let fill_side = p_side.opposite();
        let resid = g
            .residual_degrees(fill_side, &prefix)
            .expect("prefix is on the opposite side");
        let mut slots: Vec<u32> = (0..g.n_side(fill_side) as u32).collect();
        slots.sort_unstable_by_key(|&s| (std::cmp::Reverse(resid[s as usize]), s));
        let mut coverage = prefix_coverage(g, p_side, p_len);
        let mut vertices = prefix;
        for &s in &slots[..f_len] {
            coverage += resid[s as usize] as u64;
            vertices.push(VertexRef::from_slot(fill_side, s as usize));
        }
        Solution::from_parts(vertices, coverage)
    };

    match label {
        CandidateLabel::Sol1 => (k1 <= n1 && k2 <= n2).then(|| prefix_plus_fill(v1, k1, k2)),
        CandidateLabel::Sol2 => (k2 <= n2 && k1 <= n1).then(|| prefix_plus_fill(v2, k2, k1)),
        CandidateLabel::Sol3 => (k <= n2).then(|| prefix_plus_fill(v2, k, 0)),
        CandidateLabel::Sol4a => (k <= n1).then(|| prefix_plus_fill(v1, k, 0)),
        CandidateLabel::Sol4b => (2 * k1 <= k.min(n1) && k - 2 * k1 <= n2)
            .then(|| prefix_plus_fill(v1, 2 * k1, k - 2 * k1)),
        CandidateLabel::Greedy | CandidateLabel::Exact => None,
    }
}

const SPLIT_LABELS: [CandidateLabel; 5] = [
    CandidateLabel::Sol1,
    CandidateLabel::Sol2,
    CandidateLabel::Sol3,
    CandidateLabel::Sol4a,
    CandidateLabel::Sol4b,
];

/// All feasible candidates for one split guess, in label order. Candidates
/// requiring more vertices than a side holds are omitted.
pub fn candidate_solutions(
    g: &BipartiteGraph,
    guess: &SplitGuess,
) -> Vec<(CandidateTag, Solution)> {
    SPLIT_LABELS
        .iter()
        .filter_map(|&label| {
            build_candidate(g, guess, label).map(|sol| (CandidateTag::new(label, *guess), sol))
        })
        .collect()
}

/// Coverage of "top-`j` prefix of `prefix_side` plus best `k - j` fill from
/// the other side", for every feasible `j` in `0..=k`.
///
/// One incremental sweep over the prefix keeps the other side's residual
/// degrees in a [`TopSum`], so the whole table costs
/// O((n + m + k) log max_degree) instead of a residual rebuild per guess.
#[allow(clippy::needless_range_loop)] // j is the prefix size, not a plain index
fn prefix_fill_values(g: &BipartiteGraph, prefix_side: Side, k: usize) -> Vec<Option<u64>> {
    let fill_side = prefix_side.opposite();
    let (n_p, n_f) = (g.n_side(prefix_side), g.n_side(fill_side));
    let degrees: Vec<u32> = g.adj(fill_side).iter().map(|l| l.len() as u32).collect();
    let mut ts = TopSum::new(degrees);
    let mut prefix_cov = 0u64;
    let mut out = vec![None; k + 1];
    for j in 0..=k.min(n_p) {
        if j > 0 {
            let slot = g.order(prefix_side)[j - 1] as usize;
            prefix_cov += g.deg_slot(prefix_side, slot) as u64;
            for &nb in &g.adj(prefix_side)[slot] {
                ts.decrement(nb as usize);
            }
        }
        let t = k - j;
        if t <= n_f {
            out[j] = Some(prefix_cov + ts.top_sum(t));
        }
    }
    out
}

/// Split-guessing 0.7-approximation: best candidate over every split
/// `(k1, k2)` with `k1 + k2 = k`, under both orientations.
///
/// Ties between equal-coverage candidates resolve by the fixed enumeration
/// order: orientation `A-is-V1` first, `k1` ascending, then label order
/// `SOL1, SOL2, SOL3, SOL4a, SOL4b`. Guarantees `10·coverage >= 7·optimum`.
pub fn solve_comb07(g: &BipartiteGraph, k: usize) -> Result<(Solution, CandidateTag), GraphError> {
    if k > g.n_total() {
        return Err(GraphError::KOutOfRange {
            k,
            max: g.n_total(),
        });
    }
    let val_a = prefix_fill_values(g, Side::A, k);
    let val_b = prefix_fill_values(g, Side::B, k);

    let mut best: Option<(u64, SplitGuess, CandidateLabel)> = None;
    for orientation in [Orientation::AIsV1, Orientation::BIsV1] {
        let (v1_vals, v2_vals) = match orientation {
            Orientation::AIsV1 => (&val_a, &val_b),
            Orientation::BIsV1 => (&val_b, &val_a),
        };
        for k1 in 0..=k {
            let k2 = k - k1;
            let guess = SplitGuess::new(k1, k2, orientation);
            let candidates = [
                (CandidateLabel::Sol1, v1_vals[k1]),
                (CandidateLabel::Sol2, v2_vals[k2]),
                (CandidateLabel::Sol3, v2_vals[k]),
                (CandidateLabel::Sol4a, v1_vals[k]),
                (
                    CandidateLabel::Sol4b,
                    if k1 <= k2 { v1_vals[2 * k1] } else { None },
                ),
            ];
            for (label, value) in candidates {
                if let Some(value) = value {
                    if best.is_none_or(|(b, _, _)| value > b) {
                        best = Some((value, guess, label));
                    }
                }
            }
        }
    }

    let (value, guess, label) = best.expect("a feasible split always exists for k <= nA + nB");
    let solution = build_candidate(g, &guess, label).expect("winner must be feasible");
    assert_eq!(
        solution.coverage, value,
        "sweep value must match materialized candidate"
    );
    debug_assert_eq!(solution.len(), k.min(g.n_total()));
    Ok((solution, CandidateTag::new(label, guess)))
}

#[derive(PartialEq, Eq)]
struct GreedyEntry {
    gain: u64,
    vertex: VertexRef,
}

impl Ord for GreedyEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Max-heap: higher gain first, then side A before B, then lower index.
        self.gain
            .cmp(&other.gain)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for GreedyEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Natural greedy baseline: `k` rounds, each taking the vertex covering the
/// most still-uncovered edges, ties by side `A` before `B` then ascending
/// index. Guarantees ratio `(e-1)/e`.
pub fn solve_greedy(g: &BipartiteGraph, k: usize) -> Result<Solution, GraphError> {
    if k > g.n_total() {
        return Err(GraphError::KOutOfRange {
            k,
            max: g.n_total(),
        });
    }
    let mut resid = [
        g.adj(Side::A)
            .iter()
            .map(|l| l.len() as u64)
            .collect::<Vec<_>>(),
        g.adj(Side::B)
            .iter()
            .map(|l| l.len() as u64)
            .collect::<Vec<_>>(),
    ];
    let mut picked = [vec![false; g.n_a()], vec![false; g.n_b()]];
    let side_of = |i: usize| if i == 0 { Side::A } else { Side::B };

    let mut heap = std::collections::BinaryHeap::with_capacity(g.n_total());
    for (i, r) in resid.iter().enumerate() {
        for (slot, &gain) in r.iter().enumerate() {
            heap.push(GreedyEntry {
                gain,
                vertex: VertexRef::from_slot(side_of(i), slot),
            });
        }
    }

    let mut chosen = Vec::with_capacity(k);
    let mut covered = 0u64;
    for _ in 0..k {
        let entry = loop {
            let top = heap.pop().expect("k <= nA + nB leaves a vertex available");
            let i = if top.vertex.side == Side::A { 0 } else { 1 };
            if picked[i][top.vertex.slot()] {
                continue;
            }
            let current = resid[i][top.vertex.slot()];
            if current != top.gain {
                // Stale entry; requeue at its real gain.
                heap.push(GreedyEntry {
                    gain: current,
                    vertex: top.vertex,
                });
                continue;
            }
            break top;
        };
        let v = entry.vertex;
        let i = if v.side == Side::A { 0 } else { 1 };
        picked[i][v.slot()] = true;
        covered += entry.gain;
        for &nb in &g.adj(v.side)[v.slot()] {
            if !picked[1 - i][nb as usize] {
                resid[1 - i][nb as usize] -= 1;
            }
        }
        chosen.push(v);
    }
    let solution = Solution::from_parts(chosen, covered);
    debug_assert_eq!(g.coverage(&solution.vertices).unwrap(), solution.coverage);
    Ok(solution)
}
