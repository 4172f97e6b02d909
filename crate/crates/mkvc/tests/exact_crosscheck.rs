//! Cross-checks between the two exact oracles.

use mkvc::exact::{solve_exact, solve_naive, DEFAULT_EXACT_CAP};
use mkvc::gen::gen_gnp;

#[test]
fn exact_equals_naive_on_200_instances() {
    for seed in 0..200u64 {
        let p = 0.1 + 0.08 * (seed % 10) as f64;
        let g = gen_gnp(5, 6, p, seed).unwrap();
        for k in 0..=g.n_total() {
            let e = solve_exact(&g, k, DEFAULT_EXACT_CAP).unwrap();
            let n = solve_naive(&g, k).unwrap();
            assert_eq!(e.coverage, n.coverage, "seed {seed}, p {p:.2}, k {k}");
        }
    }
}

#[test]
fn exact_extremes_on_random_instances() {
    for seed in 0..30u64 {
        let g = gen_gnp(6, 8, 0.35, 700 + seed).unwrap();
        assert_eq!(solve_exact(&g, 0, DEFAULT_EXACT_CAP).unwrap().coverage, 0);
        assert_eq!(
            solve_exact(&g, g.n_total(), DEFAULT_EXACT_CAP)
                .unwrap()
                .coverage,
            g.edge_count() as u64
        );
    }
}
