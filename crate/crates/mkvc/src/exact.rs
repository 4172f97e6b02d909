//! Exact optimum oracles used for validation.
//!
//! `solve_exact` enumerates subsets of the smaller side only (the other side
//! completes optimally by residual degree), so it is exponential in
//! `min(nA, nB)` alone. `solve_naive` enumerates every k-subset of both sides
//! and serves as the ground truth for `solve_exact` on tiny instances.

use thiserror::Error;

use crate::graph::{BipartiteGraph, Side, Solution, VertexRef};
use crate::solver::best_fill;
use crate::topsum::TopSum;

/// Default bound on the smaller side beyond which `solve_exact` refuses to
/// run (the sweep costs `2^min_side` steps).
pub const DEFAULT_EXACT_CAP: usize = 20;

/// Hard input limit for `solve_naive`.
pub const NAIVE_CAP: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("smaller side has {min_side} vertices, above the exact cap {cap}; use solve_naive bounds or raise the cap")]
    CapExceeded { min_side: usize, cap: usize },
    #[error("graph has {n} vertices, above the naive solver cap {cap}")]
    NaiveCapExceeded { n: usize, cap: usize },
    #[error("k = {k} out of range (maximum {max})")]
    KOutOfRange { k: usize, max: usize },
}

/// Exact optimum by enumerating subsets of the smaller side in Gray-code
/// order with incremental residual-degree updates; each step costs
/// O(degree of the toggled vertex · log max_degree).
///
/// Deterministic: among equal-coverage optima the first one reached in the
/// sweep wins, and its completion uses the `best_fill` index tie-break.
pub fn solve_exact(g: &BipartiteGraph, k: usize, cap: usize) -> Result<Solution, ExactError> {
    if k > g.n_total() {
        return Err(ExactError::KOutOfRange {
            k,
            max: g.n_total(),
        });
    }
    let min_side = g.n_a().min(g.n_b());
    // The subset cursor is a u64, so 63 is a hard ceiling regardless of cap.
    if min_side > cap || min_side >= 64 {
        return Err(ExactError::CapExceeded { min_side, cap });
    }

    // Ties between equal side sizes keep A as the enumerated side.
    let small = if g.n_a() <= g.n_b() { Side::A } else { Side::B };
    let other = small.opposite();
    let (n_s, n_o) = (g.n_side(small), g.n_side(other));

    let degrees: Vec<u32> = g.adj(other).iter().map(|l| l.len() as u32).collect();
    let mut ts = TopSum::new(degrees);
    let mut in_subset = 0u64;
    let mut subset_cov = 0u64;
    let mut subset_len = 0usize;

    // (coverage, subset, subset size); first maximum in Gray order wins.
    let mut best: Option<(u64, u64, usize)> = None;
    let consider =
        |subset: u64, len: usize, cov: u64, ts: &TopSum, best: &mut Option<(u64, u64, usize)>| {
            if len <= k && k - len <= n_o {
                let value = cov + ts.top_sum(k - len);
                if best.is_none_or(|(b, _, _)| value > b) {
                    *best = Some((value, subset, len));
                }
            }
        };

    consider(0, 0, 0, &ts, &mut best);
    for i in 1u64..(1u64 << n_s) {
        let bit = i.trailing_zeros() as usize;
        let deg = g.deg_slot(small, bit) as u64;
        if in_subset & (1 << bit) == 0 {
            in_subset |= 1 << bit;
            subset_len += 1;
            subset_cov += deg;
            for &nb in &g.adj(small)[bit] {
                ts.decrement(nb as usize);
            }
        } else {
            in_subset &= !(1 << bit);
            subset_len -= 1;
            subset_cov -= deg;
            for &nb in &g.adj(small)[bit] {
                ts.increment(nb as usize);
            }
        }
        consider(in_subset, subset_len, subset_cov, &ts, &mut best);
    }
    let (best_value, best_subset, best_len) = best.expect("k <= nA + nB always admits a subset");

    let mut vertices: Vec<VertexRef> = (0..n_s)
        .filter(|&s| best_subset & (1 << s) != 0)
        .map(|s| VertexRef::from_slot(small, s))
        .collect();
    let fill = best_fill(g, other, k - best_len, &vertices).expect("fill size checked in sweep");
    vertices.extend(fill);
    let solution = Solution::from_parts(vertices, best_value);
    debug_assert_eq!(
        g.coverage(&solution.vertices).unwrap(),
        solution.coverage,
        "sweep coverage must match recomputation"
    );
    Ok(solution)
}

/// Ground-truth oracle: maximum coverage over every k-subset of all
/// `nA + nB` vertices. First maximum in ascending bitmask order wins.
pub fn solve_naive(g: &BipartiteGraph, k: usize) -> Result<Solution, ExactError> {
    let n = g.n_total();
    if n > NAIVE_CAP {
        return Err(ExactError::NaiveCapExceeded { n, cap: NAIVE_CAP });
    }
    if k > n {
        return Err(ExactError::KOutOfRange { k, max: n });
    }
    let edges: Vec<(u32, u32)> = {
        let mut e = Vec::with_capacity(g.edge_count());
        for (a_slot, nbs) in g.adj(Side::A).iter().enumerate() {
            for &b_slot in nbs {
                e.push((a_slot as u32, b_slot));
            }
        }
        e
    };
    let n_a = g.n_a() as u32;
    let mut best_cov = 0u64;
    let mut best_mask = None;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let cov = edges
            .iter()
            .filter(|&&(a, b)| mask & (1 << a) != 0 || mask & (1 << (n_a + b)) != 0)
            .count() as u64;
        if best_mask.is_none() || cov > best_cov {
            best_cov = cov;
            best_mask = Some(mask);
        }
    }
    let mask = best_mask.expect("some k-subset exists");
    let vertices = (0..n as u32)
        .filter(|&i| mask & (1 << i) != 0)
        .map(|i| {
            if i < n_a {
                VertexRef::from_slot(Side::A, i as usize)
            } else {
                VertexRef::from_slot(Side::B, (i - n_a) as usize)
            }
        })
        .collect();
    Ok(Solution::from_parts(vertices, best_cov))
}
