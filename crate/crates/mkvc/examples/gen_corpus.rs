//! Regenerates the shipped instance corpus under `corpus/` and the CLI test
//! fixtures under `crates/mkvc/tests/fixtures/`.
//!
//! Run from the workspace root:
//!
//! ```text
//! cargo run -p mkvc --example gen_corpus
//! ```
//!
//! Output is fully deterministic; rerunning must leave the tree unchanged.

use std::path::{Path, PathBuf};

use mkvc::gen::{gen_gnp, gen_planted, gen_semiregular};
use mkvc::graph::BipartiteGraph;

fn write(graph: &BipartiteGraph, dir: &Path, name: &str) {
    let path = dir.join(name);
    std::fs::write(&path, graph.to_bkvc()).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
}

fn main() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    let corpus = root.join("corpus");
    let fixtures = root.join("crates/mkvc/tests/fixtures");
    std::fs::create_dir_all(&corpus).unwrap();
    std::fs::create_dir_all(&fixtures).unwrap();

    let mut count = 0usize;

    // Random bipartite G(nA, nB, p) across the acceptance grid.
    for &n_a in &[4usize, 6, 8, 10, 12] {
        for &n_b in &[4usize, 6, 8, 10, 12] {
            for p10 in 1..=9u32 {
                for seed_ix in 0..2u64 {
                    let p = p10 as f64 / 10.0;
                    let seed =
                        (n_a as u64) << 24 | (n_b as u64) << 16 | (p10 as u64) << 8 | seed_ix;
                    let g = gen_gnp(n_a, n_b, p, seed).unwrap();
                    write(
                        &g,
                        &corpus,
                        &format!("gnp_na{n_a}_nb{n_b}_p{p10}_s{seed_ix}.bkvc"),
                    );
                    count += 1;
                }
            }
        }
    }

    // Tiny instances (nA + nB <= 12) for the oracle cross-check.
    for &n_a in &[4usize, 5, 6] {
        for &n_b in &[4usize, 5, 6] {
            for p10 in 1..=9u32 {
                for seed_ix in 0..3u64 {
                    let p = p10 as f64 / 10.0;
                    let seed = 7_000_000
                        + (n_a as u64) * 100_000
                        + (n_b as u64) * 10_000
                        + (p10 as u64) * 10
                        + seed_ix;
                    let g = gen_gnp(n_a, n_b, p, seed).unwrap();
                    write(
                        &g,
                        &corpus,
                        &format!("tiny_na{n_a}_nb{n_b}_p{p10}_s{seed_ix}.bkvc"),
                    );
                    count += 1;
                }
            }
        }
    }

    // Semi-regular instances over every feasible degree pattern with sides
    // in 2..=12.
    let mut semi = Vec::new();
    for n_a in 2..=12usize {
        for n_b in 2..=12usize {
            for d_a in 1..=n_b {
                if (n_a * d_a) % n_b != 0 {
                    continue;
                }
                let d_b = n_a * d_a / n_b;
                if d_b == 0 || d_b > n_a {
                    continue;
                }
                semi.push((n_a, n_b, d_a, d_b));
            }
        }
    }
    let mut semi_count = 0usize;
    'semi: for (n_a, n_b, d_a, d_b) in semi {
        for seed in 0..1u64 {
            match gen_semiregular(n_a, n_b, d_a, d_b, seed) {
                Ok(g) => {
                    write(
                        &g,
                        &corpus,
                        &format!("semireg_na{n_a}_nb{n_b}_da{d_a}_db{d_b}_s{seed}.bkvc"),
                    );
                    count += 1;
                    semi_count += 1;
                }
                Err(e) => panic!("semiregular({n_a},{n_b},{d_a},{d_b}) failed: {e}"),
            }
            if semi_count >= 60 {
                break 'semi;
            }
        }
    }

    // Planted-cover stress instances.
    let mut planted_count = 0usize;
    for &(n_a, n_b) in &[(8usize, 8usize), (10, 8), (12, 10), (9, 12)] {
        for &(k1, k2) in &[(0usize, 2usize), (1, 1), (1, 2), (2, 2), (2, 3)] {
            for &d_noise in &[0usize, 1, 2] {
                let d_hub = 3;
                if k1 > 0 && d_hub > n_b - k2 {
                    continue;
                }
                if k2 > 0 && d_hub > n_a - k1 {
                    continue;
                }
                let seed = (n_a * 1000 + n_b * 10 + k1 * 5 + k2 + d_noise) as u64;
                let (g, _) = gen_planted(n_a, n_b, k1, k2, d_hub, d_noise, seed).unwrap();
                write(
                    &g,
                    &corpus,
                    &format!(
                        "planted_na{n_a}_nb{n_b}_k1{k1}_k2{k2}_dh{d_hub}_dn{d_noise}_s{seed}.bkvc"
                    ),
                );
                count += 1;
                planted_count += 1;
            }
        }
    }

    // CLI test fixtures: hand picked shapes plus a few generated ones.
    let fixed = [
        ("p4.bkvc", "p bkvc 2 2 3\ne 1 1\ne 2 1\ne 2 2\n"),
        ("two_star.bkvc", "p bkvc 1 2 2\ne 1 1\ne 1 2\n"),
        (
            "k23.bkvc",
            "p bkvc 2 3 6\ne 1 1\ne 1 2\ne 1 3\ne 2 1\ne 2 2\ne 2 3\n",
        ),
        ("empty.bkvc", "p bkvc 3 3 0\n"),
    ];
    for (name, text) in fixed {
        BipartiteGraph::parse_bkvc(text).unwrap();
        std::fs::write(fixtures.join(name), text).unwrap();
    }
    for (name, g) in [
        ("gnp_8_10.bkvc", gen_gnp(8, 10, 0.4, 99).unwrap()),
        ("gnp_5_5.bkvc", gen_gnp(5, 5, 0.6, 17).unwrap()),
        ("semireg_6_4.bkvc", gen_semiregular(6, 4, 2, 3, 4).unwrap()),
        (
            "planted_8_8.bkvc",
            gen_planted(8, 8, 1, 2, 3, 1, 21).unwrap().0,
        ),
    ] {
        write(&g, &fixtures, name);
    }

    println!(
        "wrote {count} corpus instances ({semi_count} semi-regular, {planted_count} planted) and {} fixtures",
        fixed.len() + 4
    );
}
