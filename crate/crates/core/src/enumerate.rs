//! Exhaustive enumeration of the minimum-rank 2-rankings of a small graph,
//! reported up to symmetry.
//!
//! Equivalence: two witnesses are the same class when one is the other
//! pulled back along a graph automorphism. Both use exactly chi ranks from
//! {1..chi}, and the only order-preserving relabeling of that value set
//! onto itself is the identity, so the automorphism action is the whole
//! story. Each class is keyed by the lexicographically smallest rank vector
//! in its orbit.

use crate::graph::Graph;
use crate::solve::{chi2_new_violation, solve_chi2, Budget, SolveOutcome};
use crate::verify::Ranking;
use std::collections::HashSet;
use std::time::Instant;
use thiserror::Error;

/// Vertex limit: the automorphism group is found by brute-force search.
pub const ENUM_MAX: usize = 16;

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("enumeration is limited to {ENUM_MAX} vertices, got {0}")]
    TooLarge(usize),
    #[error("budget exhausted before the minimum was known: bracket [{lower}, {upper}]")]
    Budget { lower: u32, upper: u32 },
}

#[derive(Debug, Clone)]
pub struct WitnessClasses {
    pub chi: u32,
    /// Valid rank assignments found, counted with labels.
    pub labeled_count: u64,
    /// One representative per orbit, sorted by rank vector.
    pub classes: Vec<Ranking>,
    /// False when a budget stopped the sweep early; counts are then floors.
    pub complete: bool,
    pub nodes: u64,
}

/// Every automorphism as a vertex map, by backtracking over same-degree
/// candidates; `max_nodes` caps the number of extension attempts (returns
/// None when exceeded, which symmetric-but-unstructured inputs will hit).
pub fn automorphisms(g: &Graph, max_nodes: u64) -> Option<Vec<Vec<u32>>> {
    let n = g.n();
    if n == 0 {
        return Some(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    let mut nodes = 0u64;

    fn rec(
        g: &Graph,
        map: &mut Vec<u32>,
        used: &mut Vec<bool>,
        depth: u32,
        nodes: &mut u64,
        max_nodes: u64,
        out: &mut Vec<Vec<u32>>,
    ) -> bool {
        let n = g.n() as u32;
        if depth == n {
            out.push(map.clone());
            return true;
        }
        'cand: for c in 0..n {
            if used[c as usize] || g.degree(depth) != g.degree(c) {
                continue;
            }
            *nodes += 1;
            if *nodes > max_nodes {
                return false;
            }
            for u in 0..depth {
                if g.has_edge(depth, u) != g.has_edge(c, map[u as usize]) {
                    continue 'cand;
                }
            }
            map[depth as usize] = c;
            used[c as usize] = true;
            let ok = rec(g, map, used, depth + 1, nodes, max_nodes, out);
            map[depth as usize] = u32::MAX;
            used[c as usize] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    if rec(g, &mut map, &mut used, 0, &mut nodes, max_nodes, &mut out) {
        Some(out)
    } else {
        None
    }
}

/// Smallest rank vector in the orbit of `rank` under the maps.
fn orbit_canonical(rank: &[u32], auts: &[Vec<u32>]) -> Vec<u32> {
    let mut best = rank.to_vec();
    for sigma in auts {
        let mut cand = Vec::with_capacity(rank.len());
        let mut state = std::cmp::Ordering::Equal;
        for v in 0..rank.len() {
            let val = rank[sigma[v] as usize];
            if state == std::cmp::Ordering::Equal {
                state = val.cmp(&best[v]);
                if state == std::cmp::Ordering::Greater {
                    break;
                }
            }
            cand.push(val);
        }
        if state == std::cmp::Ordering::Less {
            best = cand;
        }
    }
    best
}

/// Finds chi, then sweeps every assignment of ranks 1..=chi, folding each
/// valid one into its orbit class. The budget applies to each phase
/// separately (minimization, automorphism search, sweep); only a sweep
/// interruption yields a partial-but-flagged result, the earlier phases
/// fail outright.
pub fn enumerate_optimal_chi2(g: &Graph, budget: &Budget) -> Result<WitnessClasses, EnumerateError> {
    let n = g.n();
    if n > ENUM_MAX {
        return Err(EnumerateError::TooLarge(n));
    }
    let solved = match solve_chi2(g, budget) {
        SolveOutcome::Solved(r) => r,
        SolveOutcome::BudgetExceeded(b) => {
            return Err(EnumerateError::Budget { lower: b.lower, upper: b.upper })
        }
    };
    let chi = solved.chi;
    if n == 0 {
        return Ok(WitnessClasses {
            chi,
            labeled_count: 1,
            classes: vec![Ranking::new(Vec::new()).expect("empty")],
            complete: true,
            nodes: solved.nodes,
        });
    }
    let aut_cap = budget.max_nodes.unwrap_or(u64::MAX);
    let auts = automorphisms(g, aut_cap).ok_or(EnumerateError::Budget { lower: chi, upper: chi })?;

    let start = Instant::now();
    let deadline = budget.max_seconds.map(|s| start + std::time::Duration::from_secs_f64(s));
    let max_nodes = budget.max_nodes.unwrap_or(u64::MAX);
    let mut rank = vec![0u32; n];
    let mut nodes = 0u64;
    let mut labeled = 0u64;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();

    // Plain vertex order: the canonical vector is order-independent and at
    // full enumeration depth a fancier order buys little.
    fn sweep(
        g: &Graph,
        rank: &mut Vec<u32>,
        chi: u32,
        v: usize,
        nodes: &mut u64,
        max_nodes: u64,
        deadline: Option<Instant>,
        labeled: &mut u64,
        auts: &[Vec<u32>],
        seen: &mut HashSet<Vec<u32>>,
    ) -> bool {
        if v == g.n() {
            *labeled += 1;
            let canon = orbit_canonical(rank, auts);
            seen.insert(canon);
            return true;
        }
        for r in 1..=chi {
            *nodes += 1;
            if *nodes >= max_nodes {
                return false;
            }
            if *nodes & 0xfff == 0 {
                if let Some(d) = deadline {
                    if Instant::now() >= d {
                        return false;
                    }
                }
            }
            rank[v] = r;
            if !chi2_new_violation(g, rank, v as u32)
                && !sweep(g, rank, chi, v + 1, nodes, max_nodes, deadline, labeled, auts, seen)
            {
                return false;
            }
        }
        rank[v] = 0;
        true
    }

    let complete =
        sweep(g, &mut rank, chi, 0, &mut nodes, max_nodes, deadline, &mut labeled, &auts, &mut seen);
    let mut reps: Vec<Vec<u32>> = seen.into_iter().collect();
    reps.sort_unstable();
    let classes = reps
        .into_iter()
        .map(|v| Ranking::new(v).expect("sweep assigns ranks >= 1"))
        .collect();
    Ok(WitnessClasses { chi, labeled_count: labeled, classes, complete, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::graph::Graph;
    use crate::verify::verify_k_ranking;

    #[test]
    fn automorphism_group_sizes() {
        assert_eq!(automorphisms(&graph::cycle(4).unwrap(), 1 << 20).unwrap().len(), 8);
        assert_eq!(automorphisms(&graph::complete(3).unwrap(), 1 << 20).unwrap().len(), 6);
        assert_eq!(automorphisms(&graph::path(3).unwrap(), 1 << 20).unwrap().len(), 2);
        assert_eq!(automorphisms(&graph::petersen(), 1 << 20).unwrap().len(), 120);
        assert!(automorphisms(&graph::complete(12).unwrap(), 100).is_none());
    }

    #[test]
    fn path_has_one_class_up_to_symmetry() {
        let p3 = graph::path(3).unwrap();
        let out = enumerate_optimal_chi2(&p3, &Budget::unlimited()).unwrap();
        assert_eq!(out.chi, 2);
        assert!(out.complete);
        // (1,2,1) is the only labeled witness, fixed by the reflection.
        assert_eq!(out.labeled_count, 1);
        assert_eq!(out.classes.len(), 1);
        assert_eq!(out.classes[0].ranks(), &[1, 2, 1]);
    }

    #[test]
    fn triangle_witnesses_are_one_orbit() {
        let k3 = graph::complete(3).unwrap();
        let out = enumerate_optimal_chi2(&k3, &Budget::unlimited()).unwrap();
        assert_eq!(out.chi, 3);
        assert_eq!(out.labeled_count, 6);
        assert_eq!(out.classes.len(), 1);
        assert_eq!(out.classes[0].ranks(), &[1, 2, 3]);
    }

    #[test]
    fn small_hypercubes_have_one_class() {
        for d in [1u32, 2] {
            let g = graph::hypercube(d).unwrap();
            let out = enumerate_optimal_chi2(&g, &Budget::unlimited()).unwrap();
            assert_eq!(out.chi, d + 1);
            assert_eq!(out.classes.len(), 1, "dimension {d}");
            for class in &out.classes {
                assert!(verify_k_ranking(&g, class, 2).unwrap().is_valid());
                assert_eq!(class.rank_count() as u32, out.chi);
            }
        }
    }

    #[test]
    fn budget_and_size_guards() {
        let g = graph::cycle(8).unwrap();
        assert!(matches!(
            enumerate_optimal_chi2(&g, &Budget::nodes(3)),
            Err(EnumerateError::Budget { .. })
        ));
        assert!(matches!(
            enumerate_optimal_chi2(&Graph::empty(17), &Budget::unlimited()),
            Err(EnumerateError::TooLarge(17))
        ));
    }
}
