//! End-to-end acceptance checks, one test per headline capability. Each
//! test prints a single summary line (visible with --nocapture); the test
//! name doubles as the pass/fail label in the cargo output.

mod common;

use common::*;
use krank_core::bounds::{
    audit_rank_multiplicity, bound_report, degeneracy, experiment_csv, harmonic_lower_bound,
    random_chi2_experiment, ExperimentConfig, ProbabilityRule,
};
use krank_core::construct::{
    block_product, distinct_row, rank_cycle_product, rank_hypercube, rank_rook,
    rank_rook_factorial, rank_rook_pow2, rank_triangle_cycle, triangle_cycle_graph,
};
use krank_core::graph::{self, Graph};
use krank_core::iso::are_isomorphic;
use krank_core::solve::{solve_chi2, solve_chi_k, solve_star_chromatic, Budget, SolveOutcome};
use krank_core::subcubic::rank_subcubic_seeded;
use krank_core::verify::{ranking_from_matrix, verify_k_ranking, Ranking};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn assert_valid(g: &Graph, r: &Ranking, context: &str) {
    let verdict = verify_k_ranking(g, r, 2).unwrap();
    assert!(verdict.is_valid(), "{context}: {:?}", verdict.violation());
}

/// Accepts an exact answer or a bracket that still contains the expected
/// value, reporting which happened.
fn expect_or_bracket(outcome: &SolveOutcome, want: u32, context: &str) -> String {
    match outcome {
        SolveOutcome::Solved(r) => {
            assert_eq!(r.chi, want, "{context}");
            format!("exact {want} ({} nodes)", r.nodes)
        }
        SolveOutcome::BudgetExceeded(b) => {
            assert!(
                b.lower <= want && want <= b.upper,
                "{context}: bracket [{}, {}] excludes {want}",
                b.lower,
                b.upper
            );
            format!("bracket [{}, {}] after {} nodes", b.lower, b.upper, b.nodes)
        }
    }
}

#[test]
fn criterion_1_hypercubes_ranked_in_d_plus_1() {
    for d in 0..=12u32 {
        let start = Instant::now();
        let g = graph::hypercube(d).unwrap();
        let r = rank_hypercube(d).unwrap();
        assert_eq!(r.rank_count(), d as usize + 1, "dimension {d}");
        assert_valid(&g, &r, &format!("dimension {d}"));
        let elapsed = start.elapsed().as_secs_f64();
        assert!(elapsed < 1.0, "dimension {d} took {elapsed:.2}s");
    }
    // Small dimensions are also solved exactly: the construction is optimal.
    let budget = Budget { max_nodes: Some(50_000_000), max_seconds: Some(600.0) };
    let mut notes = Vec::new();
    for d in 0..=4u32 {
        let g = graph::hypercube(d).unwrap();
        let outcome = solve_chi2(&g, &budget);
        notes.push(expect_or_bracket(&outcome, d + 1, &format!("dimension {d}")));
    }
    println!("criterion 1 (hypercubes, d = 0..=12 constructed, 0..=4 solved): pass [{}]", notes.join("; "));
}

#[test]
fn criterion_2_cycle_products_ranked_in_2d_plus_1() {
    for lengths in [vec![4usize, 4], vec![8], vec![4, 8], vec![8, 12]] {
        let g = graph::cycle_product(&lengths).unwrap();
        let r = rank_cycle_product(&lengths).unwrap();
        let want = 2 * lengths.len() + 1;
        assert_eq!(r.rank_count(), want, "{lengths:?}");
        assert_valid(&g, &r, &format!("{lengths:?}"));
        // 2d-regular product: the peeling floor meets the construction.
        let (k, _) = degeneracy(&g);
        assert_eq!(k as usize + 1, want, "{lengths:?} is not certified optimal");
    }
    println!("criterion 2 (4-divisible cycle products at 2d+1 ranks, optimality certified): pass");
}

#[test]
fn criterion_3_rook_ladder_meets_the_harmonic_floor() {
    for (m, n) in [(2usize, 2usize), (2, 4), (3, 6)] {
        let mx = rank_rook(m, n).unwrap();
        mx.check_valid().unwrap();
        let g = graph::rook_graph(m, n).unwrap();
        assert_valid(&g, &ranking_from_matrix(&mx), &format!("rook {m}x{n}"));
        let h = harmonic_lower_bound(m as u64, n as u64).unwrap();
        assert_eq!(mx.rank_count() as u64, h.ceil, "rook {m}x{n} misses the floor");
    }
    // The solver independently confirms the two smallest cases outright and
    // the 3x6 case under a generous budget.
    let b = Budget::unlimited();
    assert_eq!(solve_chi2(&graph::rook_graph(2, 2).unwrap(), &b).chi(), Some(3));
    assert_eq!(solve_chi2(&graph::rook_graph(2, 4).unwrap(), &b).chi(), Some(6));
    let big = Budget { max_nodes: Some(200_000_000), max_seconds: Some(1800.0) };
    let outcome = solve_chi2(&graph::rook_graph(3, 6).unwrap(), &big);
    let note = expect_or_bracket(&outcome, 11, "rook 3x6");
    println!("criterion 3 (rook ladders match n*H(m) exactly; solver agrees, 3x6 {note}): pass");
}

#[test]
fn criterion_4_power_of_two_rook_recursion() {
    for (m, n, want) in [(2usize, 2usize, 3), (2, 4, 6), (4, 4, 9), (4, 8, 18)] {
        let mx = rank_rook_pow2(m, n).unwrap();
        assert_eq!(mx.rank_count(), want, "rook {m}x{n}");
        mx.check_valid().unwrap();
        let g = graph::rook_graph(m, n).unwrap();
        assert_valid(&g, &ranking_from_matrix(&mx), &format!("rook {m}x{n}"));
    }
    println!("criterion 4 (power-of-two rook recursion: 3, 6, 9, 18 ranks): pass");
}

#[test]
fn criterion_5_triangle_cycle_products() {
    // Even cycle factors: 5 ranks, optimal because the graph is 4-regular.
    for n in [4usize, 6, 8, 10, 12] {
        let g = triangle_cycle_graph(n).unwrap();
        let r = rank_triangle_cycle(n).unwrap();
        assert_eq!(r.rank_count(), 5, "n = {n}");
        assert_valid(&g, &r, &format!("n = {n}"));
        assert_eq!(degeneracy(&g).0 + 1, 5, "n = {n} optimality");
    }
    // Odd factors genuinely need a sixth rank: solved outright at n = 5.
    let c3c5 = triangle_cycle_graph(5).unwrap();
    assert_eq!(solve_chi2(&c3c5, &Budget::unlimited()).chi(), Some(6));
    // Large odd factors get a 6-rank periodic assignment.
    let g25 = triangle_cycle_graph(25).unwrap();
    let r25 = rank_triangle_cycle(25).unwrap();
    assert_eq!(r25.rank_count(), 6);
    assert_valid(&g25, &r25, "n = 25");
    // Anchor for the lower-bound side on products with a path factor.
    let start = Instant::now();
    let prism = graph::cartesian_product(&graph::cycle(3).unwrap(), &graph::path(2).unwrap());
    assert_eq!(solve_chi2(&prism, &Budget::unlimited()).chi(), Some(5));
    assert!(start.elapsed().as_secs_f64() < 1.0);
    println!("criterion 5 (triangle-cycle products: 5 ranks even, 6 odd, exactness spot-checked): pass");
}

/// All connected 3-regular graphs on `n` labeled vertices, one
/// representative per isomorphism class. Edges are decided at their lower
/// endpoint, and the first vertex's neighborhood is pinned to {1, 2, 3},
/// which every cubic graph can be relabeled to satisfy.
fn connected_cubic_classes(n: usize) -> Vec<Graph> {
    fn extend(
        n: usize,
        v: usize,
        adj: &mut Vec<Vec<u32>>,
        deg: &mut Vec<usize>,
        reps: &mut Vec<(Vec<u32>, Graph)>,
    ) {
        if v == n {
            let edges: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|u| {
                    adj[u as usize].iter().filter(move |&&w| u < w).map(move |&w| (u, w)).collect::<Vec<_>>()
                })
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.is_connected() {
                return;
            }
            let sig = distance_signature(&g);
            let known = reps.iter().any(|(s, rep)| {
                *s == sig && are_isomorphic(rep, &g) == Some(true)
            });
            if !known {
                reps.push((sig, g));
            }
            return;
        }
        let need = 3 - deg[v];
        let candidates: Vec<u32> =
            (v as u32 + 1..n as u32).filter(|&w| deg[w as usize] < 3).collect();
        // Choose `need` higher-numbered partners for v.
        let mut pick = Vec::new();
        choose(&candidates, need, 0, &mut pick, &mut |chosen| {
            for &w in chosen {
                adj[v].push(w);
                adj[w as usize].push(v as u32);
                deg[v] += 1;
                deg[w as usize] += 1;
            }
            extend(n, v + 1, adj, deg, reps);
            for &w in chosen {
                adj[v].pop();
                adj[w as usize].pop();
                deg[v] -= 1;
                deg[w as usize] -= 1;
            }
        });
        let _ = pick;
    }

    fn choose(
        items: &[u32],
        need: usize,
        from: usize,
        acc: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32]),
    ) {
        if acc.len() == need {
            f(acc);
            return;
        }
        if items.len() - from < need - acc.len() {
            return;
        }
        for i in from..items.len() {
            acc.push(items[i]);
            choose(items, need, i + 1, acc, f);
            acc.pop();
        }
    }

    fn distance_signature(g: &Graph) -> Vec<u32> {
        let mut sigs: Vec<Vec<u32>> = (0..g.n() as u32)
            .map(|v| {
                let mut d = g.bfs_dist(v);
                d.sort_unstable();
                d
            })
            .collect();
        sigs.sort_unstable();
        sigs.concat()
    }

    assert!(n >= 4 && n % 2 == 0);
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut deg = vec![0usize; n];
    for w in 1..=3u32 {
        adj[0].push(w);
        adj[w as usize].push(0);
        deg[0] += 1;
        deg[w as usize] += 1;
    }
    let mut reps = Vec::new();
    extend(n, 1, &mut adj, &mut deg, &mut reps);
    reps.into_iter().map(|(_, g)| g).collect()
}

/// Random graph with maximum degree at most 3: shuffle all vertex pairs and
/// greedily keep those whose endpoints still have room.
fn random_subcubic(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut deg = vec![0u32; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u as usize] < 3 && deg[v as usize] < 3 {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn criterion_6_subcubic_graphs_in_at_most_7_ranks() {
    // Named cubic graphs.
    for (name, g) in [
        ("petersen", graph::petersen()),
        ("heawood", graph::heawood()),
        ("wagner", graph::wagner_c8_antipodal()),
    ] {
        let r = rank_subcubic_seeded(&g, 0).unwrap();
        assert!(r.rank_count() <= 7, "{name} used {}", r.rank_count());
        assert_valid(&g, &r, name);
    }
    // Every connected cubic graph up to 10 vertices, classified exhaustively.
    let mut class_counts = Vec::new();
    for (n, want_classes) in [(4usize, 1usize), (6, 2), (8, 5), (10, 19)] {
        let classes = connected_cubic_classes(n);
        assert_eq!(classes.len(), want_classes, "{n}-vertex cubic census");
        for (i, g) in classes.iter().enumerate() {
            let r = rank_subcubic_seeded(g, 0).unwrap();
            assert!(r.rank_count() <= 7, "{n}-vertex class {i} used {}", r.rank_count());
            assert_valid(g, &r, &format!("{n}-vertex class {i}"));
        }
        class_counts.push(format!("{n}v:{want_classes}"));
    }
    // Two hundred random graphs of maximum degree at most 3.
    let mut failures = 0;
    for trial in 0..200u64 {
        let n = 4 + (trial as usize * 7) % 27; // sizes 4..=30
        let g = random_subcubic(n, trial);
        match rank_subcubic_seeded(&g, trial) {
            Ok(r) => {
                assert!(r.rank_count() <= 7, "trial {trial} used {}", r.rank_count());
                assert_valid(&g, &r, &format!("trial {trial}"));
            }
            Err(_) => failures += 1,
        }
    }
    assert_eq!(failures, 0, "random subcubic trials failed");
    println!(
        "criterion 6 (subcubic graphs within 7 ranks: named, full census {}, 200 random): pass",
        class_counts.join(" ")
    );
}

#[test]
fn criterion_7_exact_values_of_named_graphs() {
    let b = Budget::unlimited();
    assert_eq!(solve_chi2(&graph::petersen(), &b).chi(), Some(5));
    assert_eq!(solve_chi2(&graph::heawood(), &b).chi(), Some(5));
    assert_eq!(solve_star_chromatic(&graph::wagner_c8_antipodal(), &b).chi(), Some(6));
    println!("criterion 7 (petersen chi2 = 5, heawood chi2 = 5, wagner star = 6): pass");
}

#[test]
fn criterion_8_parameter_chain_and_counting_audits() {
    let b = Budget::unlimited();
    // Chain of parameters on random graphs.
    for trial in 0..50u64 {
        let n = 4 + (trial as usize) % 5; // 4..=8 vertices
        let g = graph_from_bits(n, trial.wrapping_mul(0x9e3779b97f4a7c15));
        let chromatic = solve_chi_k(&g, 1, &b).chi().unwrap();
        let star = solve_star_chromatic(&g, &b).chi().unwrap();
        let two_rank = solve_chi2(&g, &b).chi().unwrap();
        let square_chromatic =
            solve_chi_k(&graph::distance_power(&g, 2), 1, &b).chi().unwrap();
        assert!(
            chromatic <= star && star <= two_rank && two_rank <= square_chromatic,
            "trial {trial}: {chromatic} {star} {two_rank} {square_chromatic}"
        );
    }
    // Multiplicity audit across every matrix construction.
    let mut audited = 0;
    for m in 1..=4 {
        audit_rank_multiplicity(&rank_rook_factorial(m).unwrap()).unwrap();
        audited += 1;
    }
    for (m, n) in [(1usize, 8usize), (2, 2), (2, 8), (4, 8), (8, 8)] {
        audit_rank_multiplicity(&rank_rook_pow2(m, n).unwrap()).unwrap();
        audited += 1;
    }
    for (m, n) in [(2usize, 6usize), (3, 6), (3, 12)] {
        audit_rank_multiplicity(&rank_rook(m, n).unwrap()).unwrap();
        audited += 1;
    }
    // Verifier versus the exhaustive reference on random pairs.
    for trial in 0..100u64 {
        let n = 2 + (trial as usize) % 8; // 2..=9 vertices
        let g = graph_from_bits(n, trial.wrapping_mul(0x2545f4914f6cdd1d));
        let ranks: Vec<u32> =
            (0..n).map(|i| 1 + ((trial >> (i % 16)) as u32 ^ i as u32) % n as u32).collect();
        let r = Ranking::new(ranks).unwrap();
        let verdict = verify_k_ranking(&g, &r, 2).unwrap();
        assert_eq!(verdict.is_valid(), naive_is_k_ranking(&g, &r, 2), "trial {trial}");
    }
    // Substitution closure on random pairs from the construction pool.
    let pool = [
        distinct_row(2).unwrap(),
        distinct_row(5).unwrap(),
        rank_rook_factorial(2).unwrap(),
        rank_rook_factorial(3).unwrap(),
        rank_rook_pow2(2, 4).unwrap(),
        rank_rook_pow2(4, 4).unwrap(),
    ];
    for trial in 0..50usize {
        let a = &pool[trial % pool.len()];
        let inner = &pool[(trial / pool.len() + trial) % pool.len()];
        let span = inner.entries().iter().max().unwrap() + 1 + (trial as u32 % 3);
        let p = block_product(a, inner, span).unwrap();
        p.check_valid().unwrap();
        audit_rank_multiplicity(&p).unwrap();
    }
    println!(
        "criterion 8 (chain ordering on 50 graphs, {audited} matrix audits, 100 verifier \
         cross-checks, 50 substitution closures): pass"
    );
}

#[test]
fn criterion_9_random_graph_harness_consistency() {
    // The asymptotic growth statements for random graphs concern n far
    // beyond exact solving, so they are not reproduced here; the harness
    // instead demonstrates determinism and bound consistency end to end.
    let cfg = ExperimentConfig {
        n_values: vec![8, 12, 16],
        rule: ProbabilityRule::parse("0.3").unwrap(),
        trials: 5,
        seed: 2024,
        budget: Budget { max_nodes: Some(2_000_000), max_seconds: Some(60.0) },
    };
    let rows = random_chi2_experiment(&cfg).unwrap();
    assert_eq!(rows.len(), 15);
    assert_eq!(rows, random_chi2_experiment(&cfg).unwrap(), "runs must be identical");
    for row in &rows {
        assert!(row.chi2_lo >= row.degeneracy + 1, "row {row:?} beats the peeling floor");
        assert!(row.chi2_lo <= row.chi2_hi, "row {row:?} has a crossed bracket");
        assert!(row.chi2_hi as usize <= row.n as usize);
    }
    let csv = experiment_csv(&rows);
    assert!(csv.starts_with("n,p,trial,chi2_lo,chi2_hi,max_degree,degeneracy\n"));
    assert_eq!(csv.lines().count(), 16);
    // A per-graph report stays internally consistent too.
    let g = graph::rook_graph(2, 4).unwrap();
    let mx = rank_rook(2, 4).unwrap();
    let outcome = solve_chi2(&g, &Budget::unlimited());
    let report = bound_report(
        "rook 2x4",
        &g,
        Some(&ranking_from_matrix(&mx)),
        Some(outcome.bounds()),
    );
    assert!(report.consistent());
    assert_eq!(report.lower(), 6);
    assert_eq!(report.upper(), Some(6));
    let solved = rows.iter().filter(|r| r.chi2_lo == r.chi2_hi).count();
    println!(
        "criterion 9 (random-graph harness: 15 deterministic rows, {solved} solved exactly, \
         floors respected; asymptotic growth is out of exact range by design): pass"
    );
}
