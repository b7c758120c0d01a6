//! Isomorphism checks for small graphs: a canonical form by pruned
//! brute-force permutation search (for at most 12 vertices) and a direct
//! backtracking mapping search that stretches a little further.

use crate::graph::Graph;

/// Limit for `canonical_form`.
pub const CANONICAL_MAX: usize = 12;

/// Limit for `are_isomorphic`.
pub const ISO_MAX: usize = 16;

/// Lexicographically smallest placement encoding over all vertex orderings:
/// position i contributes the bits `adj(v_i, v_j)` for j < i, packed with
/// bit j for position j. Two graphs are isomorphic iff their forms agree.
/// Branch-and-bound on the shared prefix; vertices that are interchangeable
/// with an already-tried sibling (identical adjacency both to placed and to
/// unplaced vertices) are skipped, which keeps highly symmetric graphs like
/// empty or complete ones linear instead of factorial.
///
/// Returns None above `CANONICAL_MAX` vertices.
pub fn canonical_form(g: &Graph) -> Option<Vec<u16>> {
    let n = g.n();
    if n > CANONICAL_MAX {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    // Adjacency as bitmasks for O(1) chunk building.
    let masks: Vec<u16> = (0..n as u32)
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &u| m | 1 << u))
        .collect();

    struct State<'a> {
        n: usize,
        masks: &'a [u16],
        placed: Vec<u32>,
        prefix: Vec<u16>,
        best: Option<Vec<u16>>,
    }

    fn twins(masks: &[u16], u: u32, w: u32) -> bool {
        let swap = |m: u16| {
            let bu = m >> u & 1;
            let bw = m >> w & 1;
            m & !(1 << u) & !(1 << w) | bu << w | bw << u
        };
        swap(masks[u as usize]) == masks[w as usize]
    }

    // `tight` tracks whether the prefix equals the best form so far; only
    // then can a chunk comparison prune. A strictly smaller prefix beats
    // the best no matter the suffix, so those subtrees run unpruned and
    // the leaf test decides.
    fn rec(st: &mut State, tight: bool) {
        let pos = st.placed.len();
        if pos == st.n {
            if st.best.as_ref().is_none_or(|b| st.prefix < *b) {
                st.best = Some(st.prefix.clone());
            }
            return;
        }
        let mut used_mask = 0u16;
        for &p in &st.placed {
            used_mask |= 1 << p;
        }
        // Smallest chunk first, so the first completed leaf is already a
        // strong bound.
        let mut cands: Vec<(u16, u32)> = (0..st.n as u32)
            .filter(|&v| used_mask >> v & 1 == 0)
            .map(|v| {
                let mut chunk = 0u16;
                for (j, &p) in st.placed.iter().enumerate() {
                    chunk |= ((st.masks[v as usize] >> p & 1) as u16) << j;
                }
                (chunk, v)
            })
            .collect();
        cands.sort_unstable();
        let mut tried: Vec<u32> = Vec::new();
        for (chunk, v) in cands {
            let mut child_tight = false;
            if tight {
                match &st.best {
                    // Leftmost descent: this path is about to define best.
                    None => child_tight = true,
                    Some(best) => match chunk.cmp(&best[pos]) {
                        // Later candidates have even bigger chunks.
                        std::cmp::Ordering::Greater => break,
                        std::cmp::Ordering::Equal => child_tight = true,
                        std::cmp::Ordering::Less => {}
                    },
                }
            }
            if tried.iter().any(|&w| twins(st.masks, v, w)) {
                continue;
            }
            tried.push(v);
            st.placed.push(v);
            st.prefix.push(chunk);
            rec(st, child_tight);
            st.prefix.pop();
            st.placed.pop();
        }
    }

    let mut st = State { n, masks: &masks, placed: Vec::new(), prefix: Vec::new(), best: None };
    rec(&mut st, true);
    st.best
}

/// Isomorphism by backtracking: maps vertices of `g` in breadth-first order
/// (for connectivity pruning) onto same-degree vertices of `h`, checking
/// adjacency against everything already mapped. Handles up to `ISO_MAX`
/// vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<bool> {
    if g.n() > ISO_MAX || h.n() > ISO_MAX {
        return None;
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Some(false);
    }
    let mut dg: Vec<usize> = (0..g.n() as u32).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n() as u32).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Some(false);
    }
    let n = g.n();
    if n == 0 {
        return Some(true);
    }

    // BFS order over g, restarting per component at the highest degree.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    loop {
        let Some(start) = (0..n as u32)
            .filter(|&v| !seen[v as usize])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        else {
            break;
        };
        seen[start as usize] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in g.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
    }

    fn rec(g: &Graph, h: &Graph, order: &[u32], map: &mut Vec<Option<u32>>, used: &mut Vec<bool>, depth: usize) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for c in 0..h.n() as u32 {
            if used[c as usize] || g.degree(v) != h.degree(c) {
                continue;
            }
            for &u in g.neighbors(v) {
                if let Some(mu) = map[u as usize] {
                    if !h.has_edge(c, mu) {
                        continue 'cand;
                    }
                }
            }
            // Non-neighbors already mapped must stay non-adjacent; edge
            // counts are equal, so checking neighbors alone would let a
            // missing edge hide behind an extra one elsewhere.
            for u in 0..g.n() as u32 {
                if u != v && !g.has_edge(u, v) {
                    if let Some(mu) = map[u as usize] {
                        if h.has_edge(c, mu) {
                            continue 'cand;
                        }
                    }
                }
            }
            map[v as usize] = Some(c);
            used[c as usize] = true;
            if rec(g, h, order, map, used, depth + 1) {
                return true;
            }
            map[v as usize] = None;
            used[c as usize] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    Some(rec(g, h, &order, &mut map, &mut used, 0))
}
