//! Randomized cross-checks: the optimized implementations must agree with
//! the brute-force references in `common` on every generated instance.

mod common;

use common::*;
use krank_core::bounds::{audit_rank_multiplicity, degeneracy};
use krank_core::construct::{block_product, distinct_row, rank_rook_factorial, rank_rook_pow2};
use krank_core::graph::{self, Graph};
use krank_core::io;
use krank_core::iso::{are_isomorphic, canonical_form};
use krank_core::matrix::RankMatrix;
use krank_core::solve::{solve_chi2, solve_chi_k, solve_star_chromatic, Budget};
use krank_core::verify::{ranking_from_matrix, verify_k_ranking, Ranking};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

fn arb_graph_and_ranking(max_n: usize) -> impl Strategy<Value = (Graph, Ranking)> {
    (1..=max_n, any::<u64>())
        .prop_flat_map(|(n, bits)| {
            (Just(graph_from_bits(n, bits)), proptest::collection::vec(1..=n as u32, n))
        })
        .prop_map(|(g, ranks)| (g, Ranking::new(ranks).expect("ranks start at 1")))
}

fn permuted(g: &Graph, perm: &[u32]) -> Graph {
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    Graph::from_edges(g.n(), &edges).expect("permutation keeps the graph simple")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn verifier_agrees_with_exhaustive_path_check((g, r) in arb_graph_and_ranking(9), k in 1usize..=4) {
        let verdict = verify_k_ranking(&g, &r, k as u32).unwrap();
        prop_assert_eq!(verdict.is_valid(), naive_is_k_ranking(&g, &r, k));
        if let Some(v) = verdict.violation() {
            prop_assert!(v.confirm(&g, &r), "reported violation must replay");
            prop_assert!(v.path().len() <= k + 1);
        }
    }

    #[test]
    fn graph_text_round_trips(g in arb_graph(9)) {
        let back = io::read_graph(&io::write_graph(&g)).unwrap();
        prop_assert_eq!(g.n(), back.n());
        prop_assert_eq!(g.edges(), back.edges());
    }

    #[test]
    fn ranking_text_round_trips(ranks in proptest::collection::vec(1..50u32, 1..20)) {
        let r = Ranking::new(ranks).unwrap();
        let back = io::read_ranking(&io::write_ranking(&r)).unwrap();
        prop_assert_eq!(r.ranks(), back.ranks());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degeneracy_agrees_with_subset_definition(g in arb_graph(8)) {
        prop_assert_eq!(degeneracy(&g).0, naive_degeneracy(&g));
    }

    #[test]
    fn canonical_form_is_permutation_invariant(g in arb_graph(7), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        // Fisher-Yates from the seed bits.
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let h = permuted(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(are_isomorphic(&g, &h), Some(true));
    }

    #[test]
    fn matrix_validity_matches_graph_verification(
        rows in 1usize..=3,
        cols in 1usize..=3,
        entries in proptest::collection::vec(0u32..5, 9),
    ) {
        let mx = RankMatrix::new(rows, cols, entries[..rows * cols].to_vec()).unwrap();
        let g = graph::rook_graph(rows, cols).unwrap();
        let verdict = verify_k_ranking(&g, &ranking_from_matrix(&mx), 2).unwrap();
        prop_assert_eq!(mx.check_valid().is_ok(), verdict.is_valid());
        if mx.check_valid().is_ok() {
            prop_assert!(audit_rank_multiplicity(&mx).is_ok());
        }
    }

    #[test]
    fn block_product_preserves_validity(
        a_pick in 0usize..4,
        b_pick in 0usize..4,
        extra_span in 0u32..3,
    ) {
        let pool = [
            distinct_row(3).unwrap(),
            rank_rook_factorial(2).unwrap(),
            rank_rook_factorial(3).unwrap(),
            rank_rook_pow2(2, 4).unwrap(),
        ];
        let a = &pool[a_pick];
        let b = &pool[b_pick];
        let span = b.entries().iter().max().unwrap() + 1 + extra_span;
        let p = block_product(a, b, span).unwrap();
        prop_assert!(p.check_valid().is_ok());
        prop_assert_eq!(p.rows(), a.rows() * b.rows());
        prop_assert_eq!(p.cols(), a.cols() * b.cols());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_agrees_with_exhaustive_minimum(g in arb_graph(6), k in 1u32..=3) {
        let got = solve_chi2(&g, &Budget::unlimited()).chi().unwrap();
        prop_assert_eq!(got, naive_chi_k(&g, 2));
        let got_k = solve_chi_k(&g, k, &Budget::unlimited()).chi().unwrap();
        prop_assert_eq!(got_k, naive_chi_k(&g, k as usize));
    }

    #[test]
    fn both_checkers_solve_the_same_problem(g in arb_graph(9)) {
        let direct = solve_chi2(&g, &Budget::unlimited()).chi().unwrap();
        let general = solve_chi_k(&g, 2, &Budget::unlimited()).chi().unwrap();
        prop_assert_eq!(direct, general);
    }

    #[test]
    fn star_solver_agrees_with_exhaustive_minimum(g in arb_graph(6)) {
        let out = solve_star_chromatic(&g, &Budget::unlimited());
        prop_assert_eq!(out.chi().unwrap(), naive_star_chromatic(&g));
        prop_assert!(naive_star_ok(&g, out.witness().unwrap()));
    }

    #[test]
    fn rank_counts_are_monotone_in_k(g in arb_graph(7)) {
        let b = Budget::unlimited();
        let mut prev = 0;
        for k in 1..=4u32 {
            let chi = solve_chi_k(&g, k, &b).chi().unwrap();
            prop_assert!(chi >= prev, "k = {k} dropped below k - 1");
            prev = chi;
        }
    }

    #[test]
    fn chain_of_parameters_is_ordered(g in arb_graph(7)) {
        let b = Budget::unlimited();
        let chromatic = solve_chi_k(&g, 1, &b).chi().unwrap();
        let star = solve_star_chromatic(&g, &b).chi().unwrap();
        let two_rank = solve_chi2(&g, &b).chi().unwrap();
        let square = graph::distance_power(&g, 2);
        let square_chromatic = solve_chi_k(&square, 1, &b).chi().unwrap();
        prop_assert!(chromatic <= star);
        prop_assert!(star <= two_rank);
        prop_assert!(two_rank <= square_chromatic);
        prop_assert!(two_rank >= degeneracy(&g).0 + 1);
    }

    #[test]
    fn product_order_is_irrelevant(
        a_bits in any::<u64>(),
        b_bits in any::<u64>(),
        an in 2usize..=3,
        bn in 2usize..=3,
    ) {
        let a = graph_from_bits(an, a_bits);
        let b = graph_from_bits(bn, b_bits);
        let ab = graph::cartesian_product(&a, &b);
        let ba = graph::cartesian_product(&b, &a);
        prop_assert_eq!(canonical_form(&ab), canonical_form(&ba));
    }
}
