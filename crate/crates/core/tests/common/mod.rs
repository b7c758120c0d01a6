//! Brute-force reference implementations for cross-checking the library.
//! Everything here favors transparency over speed: paths are enumerated
//! outright and assignments are tried exhaustively, so results are trusted
//! by inspection and the sizes are kept small.

// Each integration test binary compiles this module separately and uses a
// different subset of it.
#![allow(dead_code)]

use krank_core::graph::Graph;
use krank_core::verify::Ranking;

/// Decodes an edge set from a bitmask over the pairs (u, v), u < v, in
/// lexicographic order, reusing bits cyclically past 64.
pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0u32;
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if bits >> (idx % 64) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("pairs are simple by construction")
}

fn path_is_bad(r: &Ranking, path: &[u32]) -> bool {
    let ends_equal = r.rank(path[0]) == r.rank(*path.last().unwrap());
    ends_equal && path[1..path.len() - 1].iter().all(|&w| r.rank(w) <= r.rank(path[0]))
}

/// Walks every simple path of at most `k` edges and applies the definition
/// to each one.
pub fn naive_is_k_ranking(g: &Graph, r: &Ranking, k: usize) -> bool {
    fn walk(g: &Graph, r: &Ranking, path: &mut Vec<u32>, left: usize) -> bool {
        if path.len() >= 2 && path_is_bad(r, path) {
            return false;
        }
        if left == 0 {
            return true;
        }
        let last = *path.last().unwrap();
        for &u in g.neighbors(last) {
            if path.contains(&u) {
                continue;
            }
            path.push(u);
            let ok = walk(g, r, path, left - 1);
            path.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let k = k.min(g.n().saturating_sub(1));
    for s in 0..g.n() as u32 {
        if !walk(g, r, &mut vec![s], k) {
            return false;
        }
    }
    true
}

/// Smallest rank count over all assignments, by exhaustive search. The one
/// shortcut is skipping assignments that give adjacent vertices equal
/// ranks, which the length-1 case of the definition rejects directly.
pub fn naive_chi_k(g: &Graph, k: usize) -> u32 {
    fn assign(g: &Graph, k: usize, t: u32, ranks: &mut Vec<u32>, v: usize) -> bool {
        if v == ranks.len() {
            let r = Ranking::new(ranks.clone()).expect("ranks start at 1");
            return naive_is_k_ranking(g, &r, k);
        }
        for c in 1..=t {
            let clash = k >= 1
                && g.neighbors(v as u32)
                    .iter()
                    .any(|&u| (u as usize) < v && ranks[u as usize] == c);
            if clash {
                continue;
            }
            ranks[v] = c;
            if assign(g, k, t, ranks, v + 1) {
                return true;
            }
        }
        false
    }
    let n = g.n();
    assert!(n <= 8, "exhaustive search only");
    if n == 0 {
        return 0;
    }
    for t in 1..=n as u32 {
        if assign(g, k, t, &mut vec![0; n], 0) {
            return t;
        }
    }
    unreachable!("all-distinct ranks pass every path check")
}

/// Degeneracy straight from the definition: the largest, over all nonempty
/// vertex subsets, of the minimum degree inside the induced subgraph.
pub fn naive_degeneracy(g: &Graph) -> u32 {
    let n = g.n();
    assert!(n <= 16, "subset enumeration only");
    let mut best = 0;
    for mask in 1u32..(1u32 << n) {
        let mut min_deg = u32::MAX;
        for v in 0..n {
            if mask & (1 << v) == 0 {
                continue;
            }
            let d = g
                .neighbors(v as u32)
                .iter()
                .filter(|&&u| mask & (1 << u) != 0)
                .count() as u32;
            min_deg = min_deg.min(d);
        }
        best = best.max(min_deg);
    }
    best
}

/// Star condition by direct path enumeration: proper everywhere, and no
/// four-vertex path carries exactly two colors.
pub fn naive_star_ok(g: &Graph, c: &Ranking) -> bool {
    for (u, v) in g.edges() {
        if c.rank(u) == c.rank(v) {
            return false;
        }
    }
    for a in 0..g.n() as u32 {
        for &b in g.neighbors(a) {
            for &m in g.neighbors(b) {
                if m == a {
                    continue;
                }
                for &d in g.neighbors(m) {
                    if d == b || d == a {
                        continue;
                    }
                    let mut colors = vec![c.rank(a), c.rank(b), c.rank(m), c.rank(d)];
                    colors.sort_unstable();
                    colors.dedup();
                    if colors.len() == 2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Smallest color count passing `naive_star_ok`, exhaustively.
pub fn naive_star_chromatic(g: &Graph) -> u32 {
    fn assign(g: &Graph, t: u32, colors: &mut Vec<u32>, v: usize) -> bool {
        if v == colors.len() {
            let c = Ranking::new(colors.clone()).expect("colors start at 1");
            return naive_star_ok(g, &c);
        }
        for color in 1..=t {
            let clash = g
                .neighbors(v as u32)
                .iter()
                .any(|&u| (u as usize) < v && colors[u as usize] == color);
            if clash {
                continue;
            }
            colors[v] = color;
            if assign(g, t, colors, v + 1) {
                return true;
            }
        }
        false
    }
    let n = g.n();
    assert!(n <= 8, "exhaustive search only");
    if n == 0 {
        return 0;
    }
    for t in 1..=n as u32 {
        if assign(g, t, &mut vec![0; n], 0) {
            return t;
        }
    }
    unreachable!("all-distinct colors pass")
}
