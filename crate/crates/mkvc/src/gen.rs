//! Reproducible instance generators.
//!
//! All generators are deterministic functions of their arguments including
//! the seed. The stream is ChaCha8 seeded with `seed`; random corpora are
//! therefore reproducible within this implementation (shipped corpus files
//! are the cross-implementation reference, not the bit stream).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::BipartiteGraph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("degree balance violated: nA*dA = {lhs} but nB*dB = {rhs}")]
    UnbalancedDegrees { lhs: usize, rhs: usize },
    #[error("degree {degree} exceeds opposite side size {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("semi-regular validation failed: {0}")]
    Validation(String),
    #[error("infeasible planted parameters: {0}")]
    Infeasible(String),
}

/// Bipartite G(nA, nB, p): every pair becomes an edge independently with
/// probability `p`. Pair positions are visited by geometric skips so sparse
/// instances cost O(expected edges), not O(nA·nB).
pub fn gen_gnp(n_a: usize, n_b: usize, p: f64, seed: u64) -> Result<BipartiteGraph, GenError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = n_a as u64 * n_b as u64;
    let mut edges = Vec::new();
    if p >= 1.0 {
        for a in 1..=n_a as u32 {
            for b in 1..=n_b as u32 {
                edges.push((a, b));
            }
        }
    } else if p > 0.0 && total > 0 {
        let log_q = (1.0 - p).ln();
        let mut pos: u64 = 0;
        loop {
            // Geometric(p) gap between successive edges.
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            let skip = (u.ln() / log_q).floor();
            if skip >= (total - pos) as f64 {
                break;
            }
            pos += skip as u64;
            let (a, b) = ((pos / n_b as u64) as u32, (pos % n_b as u64) as u32);
            edges.push((a + 1, b + 1));
            pos += 1;
            if pos >= total {
                break;
            }
        }
    }
    Ok(BipartiteGraph::new(n_a, n_b, edges).expect("generated edges are valid and distinct"))
}

/// Semi-regular instance: every side-A vertex has degree `dA`, every side-B
/// vertex degree `dB`. Requires `nA·dA = nB·dB`, `dA <= nB`, `dB <= nA`.
///
/// Construction: circulant base `a_i ~ b_((i·dA + j) mod nB)` for
/// `j in 0..dA`, randomized by seed-driven degree-preserving 2-edge swaps.
/// Both regularity conditions and simplicity are re-validated after
/// construction; parameter combinations the circulant cannot realize fail
/// cleanly instead of emitting a broken instance.
pub fn gen_semiregular(
    n_a: usize,
    n_b: usize,
    d_a: usize,
    d_b: usize,
    seed: u64,
) -> Result<BipartiteGraph, GenError> {
    if n_a * d_a != n_b * d_b {
        return Err(GenError::UnbalancedDegrees {
            lhs: n_a * d_a,
            rhs: n_b * d_b,
        });
    }
    if d_a > n_b {
        return Err(GenError::DegreeTooLarge {
            degree: d_a,
            limit: n_b,
        });
    }
    if d_b > n_a {
        return Err(GenError::DegreeTooLarge {
            degree: d_b,
            limit: n_a,
        });
    }
    if n_a == 0 || n_b == 0 || d_a == 0 {
        return BipartiteGraph::new(n_a, n_b, []).map_err(|e| GenError::Validation(e.to_string()));
    }

    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n_a * d_a);
    let mut present = std::collections::HashSet::with_capacity(n_a * d_a);
    for i in 0..n_a {
        for j in 0..d_a {
            let b = (i * d_a + j) % n_b;
            let e = (i as u32 + 1, b as u32 + 1);
            if !present.insert(e) {
                return Err(GenError::Validation(format!(
                    "circulant base repeats pair ({}, {})",
                    e.0, e.1
                )));
            }
            edges.push(e);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = 10 * edges.len();
    for _ in 0..attempts {
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        let (a1, b1) = edges[i];
        let (a2, b2) = edges[j];
        if a1 == a2 || b1 == b2 {
            continue;
        }
        if present.contains(&(a1, b2)) || present.contains(&(a2, b1)) {
            continue;
        }
        present.remove(&(a1, b1));
        present.remove(&(a2, b2));
        present.insert((a1, b2));
        present.insert((a2, b1));
        edges[i] = (a1, b2);
        edges[j] = (a2, b1);
    }

    let g =
        BipartiteGraph::new(n_a, n_b, edges).map_err(|e| GenError::Validation(e.to_string()))?;
    for slot in 0..n_a {
        if g.deg_slot(crate::graph::Side::A, slot) != d_a {
            return Err(GenError::Validation(format!(
                "side A vertex {} has degree {}, expected {}",
                slot + 1,
                g.deg_slot(crate::graph::Side::A, slot),
                d_a
            )));
        }
    }
    for slot in 0..n_b {
        if g.deg_slot(crate::graph::Side::B, slot) != d_b {
            return Err(GenError::Validation(format!(
                "side B vertex {} has degree {}, expected {}",
                slot + 1,
                g.deg_slot(crate::graph::Side::B, slot),
                d_b
            )));
        }
    }
    Ok(g)
}

/// Planted-cover stress instance. Plants `k1` side-A hubs (indices `1..=k1`)
/// and `k2` side-B hubs (indices `1..=k2`), each with `dHub` private edges to
/// non-hub vertices of the other side; non-hub vertices then get up to
/// `dNoise` distractor edges pointing into the opposite hubs, fattening their
/// degrees without adding coverage beyond the planted set. Returns the graph
/// and the planted budget `k = k1 + k2`.
pub fn gen_planted(
    n_a: usize,
    n_b: usize,
    k1: usize,
    k2: usize,
    d_hub: usize,
    d_noise: usize,
    seed: u64,
) -> Result<(BipartiteGraph, usize), GenError> {
    if k1 > n_a || k2 > n_b {
        return Err(GenError::Infeasible(format!(
            "k1 = {k1} or k2 = {k2} exceeds side sizes ({n_a}, {n_b})"
        )));
    }
    if k1 > 0 && d_hub > n_b - k2 {
        return Err(GenError::Infeasible(format!(
            "A hubs need dHub = {d_hub} non-hub B targets, only {} available",
            n_b - k2
        )));
    }
    if k2 > 0 && d_hub > n_a - k1 {
        return Err(GenError::Infeasible(format!(
            "B hubs need dHub = {d_hub} non-hub A targets, only {} available",
            n_a - k1
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut present = std::collections::HashSet::new();
    let push = |edges: &mut Vec<(u32, u32)>,
                present: &mut std::collections::HashSet<(u32, u32)>,
                a: usize,
                b: usize| {
        let e = (a as u32 + 1, b as u32 + 1);
        if present.insert(e) {
            edges.push(e);
            true
        } else {
            false
        }
    };

    let non_hub_b: Vec<usize> = (k2..n_b).collect();
    for hub in 0..k1 {
        let mut targets = non_hub_b.clone();
        targets.shuffle(&mut rng);
        for &b in targets.iter().take(d_hub) {
            push(&mut edges, &mut present, hub, b);
        }
    }
    let non_hub_a: Vec<usize> = (k1..n_a).collect();
    for hub in 0..k2 {
        let mut sources = non_hub_a.clone();
        sources.shuffle(&mut rng);
        for &a in sources.iter().take(d_hub) {
            push(&mut edges, &mut present, a, hub);
        }
    }

    // Distractor noise: edges into the planted hubs only, so they are
    // already covered by the planted set.
    if d_noise > 0 && k2 > 0 {
        for a in k1..n_a {
            let mut hubs: Vec<usize> = (0..k2).collect();
            hubs.shuffle(&mut rng);
            let mut added = 0;
            for &b in &hubs {
                if added == d_noise.min(k2) {
                    break;
                }
                if push(&mut edges, &mut present, a, b) {
                    added += 1;
                }
            }
        }
    }
    if d_noise > 0 && k1 > 0 {
        for b in k2..n_b {
            let mut hubs: Vec<usize> = (0..k1).collect();
            hubs.shuffle(&mut rng);
            let mut added = 0;
            for &a in &hubs {
                if added == d_noise.min(k1) {
                    break;
                }
                if push(&mut edges, &mut present, a, b) {
                    added += 1;
                }
            }
        }
    }

    let g = BipartiteGraph::new(n_a, n_b, edges).expect("planted edges are valid and distinct");
    Ok((g, k1 + k2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Side, VertexRef};

    #[test]
    fn gnp_extremes() {
        let g = gen_gnp(5, 7, 0.0, 3).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = gen_gnp(5, 7, 1.0, 3).unwrap();
        assert_eq!(g.edge_count(), 35);
    }

    #[test]
    fn gnp_rejects_bad_probability() {
        assert!(gen_gnp(3, 3, -0.1, 0).is_err());
        assert!(gen_gnp(3, 3, 1.5, 0).is_err());
        assert!(gen_gnp(3, 3, f64::NAN, 0).is_err());
    }

    #[test]
    fn gnp_deterministic_per_seed() {
        let a = gen_gnp(8, 10, 0.5, 42).unwrap();
        let b = gen_gnp(8, 10, 0.5, 42).unwrap();
        assert_eq!(a, b);
        let c = gen_gnp(8, 10, 0.5, 43).unwrap();
        assert_ne!(a, c, "different seeds should differ at this density");
    }

    #[test]
    fn gnp_density_plausible() {
        let g = gen_gnp(40, 40, 0.5, 7).unwrap();
        let m = g.edge_count();
        assert!((500..1100).contains(&m), "m = {m} wildly off p = 0.5");
    }

    #[test]
    fn semiregular_balanced() {
        let g = gen_semiregular(4, 4, 2, 2, 1).unwrap();
        for i in 0..4 {
            assert_eq!(g.deg_slot(Side::A, i), 2);
            assert_eq!(g.deg_slot(Side::B, i), 2);
        }
    }

    #[test]
    fn semiregular_k23() {
        let g = gen_semiregular(2, 3, 3, 2, 9).unwrap();
        assert_eq!(g.edge_count(), 6);
        for a in 1..=2 {
            for b in 1..=3 {
                assert!(g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn semiregular_6_4_2_3() {
        let g = gen_semiregular(6, 4, 2, 3, 5).unwrap();
        assert_eq!(g.edge_count(), 12);
        for i in 0..6 {
            assert_eq!(g.deg_slot(Side::A, i), 2);
        }
        for i in 0..4 {
            assert_eq!(g.deg_slot(Side::B, i), 3);
        }
    }

    #[test]
    fn semiregular_rejects_bad_parameters() {
        assert!(matches!(
            gen_semiregular(3, 4, 2, 2, 0),
            Err(GenError::UnbalancedDegrees { .. })
        ));
        assert!(matches!(
            gen_semiregular(2, 3, 4, 2, 0),
            Err(GenError::UnbalancedDegrees { .. })
        ));
        assert!(matches!(
            gen_semiregular(1, 4, 8, 2, 0),
            Err(GenError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn planted_cover_covers_every_edge() {
        let (g, k) = gen_planted(6, 6, 1, 2, 4, 1, 11).unwrap();
        assert_eq!(k, 3);
        let planted = vec![VertexRef::a(1), VertexRef::b(1), VertexRef::b(2)];
        assert_eq!(g.coverage(&planted).unwrap(), g.edge_count() as u64);
    }

    #[test]
    fn planted_degenerate_one_sided() {
        let (g, k) = gen_planted(6, 6, 0, 2, 4, 1, 2).unwrap();
        assert_eq!(k, 2);
        let planted = vec![VertexRef::b(1), VertexRef::b(2)];
        assert_eq!(g.coverage(&planted).unwrap(), g.edge_count() as u64);
    }

    #[test]
    fn planted_without_noise_has_planted_optimum() {
        // With dNoise = 0 every edge is a hub private, so the planted set is
        // the unique optimum; the naive oracle must agree on value and set.
        for seed in 0..10u64 {
            let (g, k) = gen_planted(5, 6, 1, 2, 3, 0, seed).unwrap();
            let planted = vec![VertexRef::a(1), VertexRef::b(1), VertexRef::b(2)];
            assert_eq!(g.coverage(&planted).unwrap(), g.edge_count() as u64);
            let opt = crate::exact::solve_naive(&g, k).unwrap();
            assert_eq!(opt.coverage, g.edge_count() as u64);
            assert_eq!(opt.vertices, planted, "seed {seed}");
        }
    }

    #[test]
    fn planted_rejects_infeasible() {
        assert!(gen_planted(4, 4, 5, 0, 1, 0, 0).is_err());
        assert!(gen_planted(6, 6, 1, 2, 5, 0, 0).is_err());
    }

    #[test]
    fn generators_are_seed_deterministic() {
        assert_eq!(
            gen_semiregular(6, 4, 2, 3, 77).unwrap(),
            gen_semiregular(6, 4, 2, 3, 77).unwrap()
        );
        assert_eq!(
            gen_planted(8, 8, 2, 2, 3, 1, 5).unwrap().0,
            gen_planted(8, 8, 2, 2, 3, 1, 5).unwrap().0
        );
    }
}
