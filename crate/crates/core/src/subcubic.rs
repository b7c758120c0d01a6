//! Ranks any graph of maximum degree at most 3 with at most 7 ranks: pick a
//! maximal independent set for the bottom rank, then properly color the
//! square of the remaining vertices with at most 6 colors. The coloring can
//! only get stuck on a complete 7-vertex component of that square; those
//! are escaped by re-selecting the independent set.

use crate::construct::ConstructError;
use crate::graph::Graph;
use crate::verify::Ranking;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

const MAX_RESTARTS: u32 = 100;
const RANDOM_ORDER_RETRIES: u32 = 10;

/// `rank_subcubic_seeded` with the default seed 0.
pub fn rank_subcubic(g: &Graph) -> Result<Ranking, ConstructError> {
    rank_subcubic_seeded(g, 0)
}

/// Ranks a graph with maximum degree at most 3 using at most 7 ranks.
/// Deterministic for a fixed seed; the seed only matters when the initial
/// greedy choices hit an exceptional component.
pub fn rank_subcubic_seeded(g: &Graph, seed: u64) -> Result<Ranking, ConstructError> {
    if g.max_degree() > 3 {
        return Err(ConstructError::Unsupported(format!(
            "maximum degree {} exceeds 3",
            g.max_degree()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks0 = vec![0u32; g.n()];
    for comp in g.components() {
        rank_component(g, &comp, &mut rng, &mut ranks0)?;
    }
    Ok(Ranking::from_zero_based(ranks0))
}

fn rank_component(
    g: &Graph,
    comp: &[u32],
    rng: &mut ChaCha8Rng,
    out: &mut [u32],
) -> Result<(), ConstructError> {
    let ordered = {
        let mut v = comp.to_vec();
        v.sort_unstable_by_key(|&u| (g.degree(u), u));
        v
    };
    let mut candidates = vec![greedy_mis(g, &ordered)];
    if let Some(special) = special_independent_set(g, comp) {
        candidates.push(special);
    }
    for s in candidates {
        if try_assign(g, comp, &s, rng, out) {
            return Ok(());
        }
    }
    for _ in 0..MAX_RESTARTS {
        let mut order = comp.to_vec();
        order.shuffle(rng);
        let s = greedy_mis(g, &order);
        if try_assign(g, comp, &s, rng, out) {
            return Ok(());
        }
    }
    Err(ConstructError::RestartsExhausted { attempts: MAX_RESTARTS })
}

/// Scans `order`, keeping each vertex none of whose neighbors was kept.
/// The result is a maximal independent set of the subgraph on `order`.
fn greedy_mis(g: &Graph, order: &[u32]) -> Vec<u32> {
    let mut chosen = std::collections::HashSet::new();
    let mut s = Vec::new();
    for &v in order {
        if g.neighbors(v).iter().all(|u| !chosen.contains(u)) {
            chosen.insert(v);
            s.push(v);
        }
    }
    s.sort_unstable();
    s
}

/// Hand-picked independent sets for the two cubic graphs whose squares
/// resist the default choice: on the Petersen graph a maximum independent
/// set of size 4, on the Heawood graph a vertex together with the four
/// vertices at distance 3 from it.
fn special_independent_set(g: &Graph, comp: &[u32]) -> Option<Vec<u32>> {
    if !comp.iter().all(|&v| g.degree(v) == 3) {
        return None;
    }
    let girth = induced(g, comp).girth()?;
    if comp.len() == 10 && girth == 5 {
        return max_independent_4(g, comp);
    }
    if comp.len() == 14 && girth == 6 {
        let u = comp[0];
        let dist = g.bfs_dist(u);
        let mut s = vec![u];
        s.extend(comp.iter().copied().filter(|&v| dist[v as usize] == 3));
        return Some(s);
    }
    None
}

/// First 4-subset of `comp` (lexicographic) that is independent and
/// dominates the rest.
fn max_independent_4(g: &Graph, comp: &[u32]) -> Option<Vec<u32>> {
    let n = comp.len();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(comp[a], comp[b]) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(comp[a], comp[c]) || g.has_edge(comp[b], comp[c]) {
                    continue;
                }
                for d in c + 1..n {
                    let s = [comp[a], comp[b], comp[c], comp[d]];
                    if s[..3].iter().any(|&u| g.has_edge(u, s[3])) {
                        continue;
                    }
                    let dominated = comp.iter().all(|&v| {
                        s.contains(&v) || g.neighbors(v).iter().any(|u| s.contains(u))
                    });
                    if dominated {
                        return Some(s.to_vec());
                    }
                }
            }
        }
    }
    None
}

fn induced(g: &Graph, verts: &[u32]) -> Graph {
    let index: HashMap<u32, u32> =
        verts.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let mut edges = Vec::new();
    for &v in verts {
        for &u in g.neighbors(v) {
            if v < u {
                if let (Some(&a), Some(&b)) = (index.get(&v), index.get(&u)) {
                    edges.push((a, b));
                }
            }
        }
    }
    Graph::from_edges(verts.len(), &edges).expect("induced subgraph is simple")
}

/// Colors the square of `comp` minus `s` with at most 6 colors and writes
/// ranks (0 for `s`, the color elsewhere). Returns false when some
/// component of that square cannot be colored, leaving `out` untouched.
fn try_assign(g: &Graph, comp: &[u32], s: &[u32], rng: &mut ChaCha8Rng, out: &mut [u32]) -> bool {
    let in_s: std::collections::HashSet<u32> = s.iter().copied().collect();
    let rest: Vec<u32> = comp.iter().copied().filter(|v| !in_s.contains(v)).collect();
    let index: HashMap<u32, usize> = rest.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // Adjacency of the square graph restricted to `rest`: pairs joined by a
    // path of length 1 or 2 in g, middle vertex unrestricted.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); rest.len()];
    for (i, &u) in rest.iter().enumerate() {
        let mut near = Vec::new();
        for &v in g.neighbors(u) {
            if let Some(&j) = index.get(&v) {
                near.push(j);
            }
            for &w in g.neighbors(v) {
                if w == u {
                    continue;
                }
                if let Some(&j) = index.get(&w) {
                    near.push(j);
                }
            }
        }
        near.sort_unstable();
        near.dedup();
        adj[i] = near;
    }

    let mut colors = vec![0u32; rest.len()];
    for component in local_components(&adj) {
        if !color_component(&adj, &component, rng, &mut colors) {
            return false;
        }
    }
    for &v in s {
        out[v as usize] = 0;
    }
    for (i, &v) in rest.iter().enumerate() {
        out[v as usize] = colors[i];
    }
    true
}

fn local_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut comps = Vec::new();
    for start in 0..adj.len() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Greedy-colors one square component with colors 1..=6, trying the
/// smallest-last order first and then a few random orders. A complete
/// component on 7 vertices can never succeed, so it fails straight away.
fn color_component(
    adj: &[Vec<usize>],
    comp: &[usize],
    rng: &mut ChaCha8Rng,
    colors: &mut [u32],
) -> bool {
    let edges_inside: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if comp.len() == 7 && edges_inside == 21 {
        return false;
    }
    if greedy_color(adj, &smallest_last(adj, comp), colors) {
        return true;
    }
    for _ in 0..RANDOM_ORDER_RETRIES {
        let mut order = comp.to_vec();
        order.shuffle(rng);
        if greedy_color(adj, &order, colors) {
            return true;
        }
    }
    false
}

/// Repeatedly removes a minimum-degree vertex (ties to the smallest id) and
/// returns the reverse removal order, so early removals are colored last.
fn smallest_last(adj: &[Vec<usize>], comp: &[usize]) -> Vec<usize> {
    let mut deg: HashMap<usize, usize> =
        comp.iter().map(|&v| (v, adj[v].len())).collect();
    let mut alive = comp.to_vec();
    let mut order = Vec::with_capacity(comp.len());
    while !alive.is_empty() {
        let (pos, _) = alive
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| (deg[&v], v))
            .expect("nonempty");
        let v = alive.swap_remove(pos);
        deg.remove(&v);
        order.push(v);
        for u in &adj[v] {
            if let Some(d) = deg.get_mut(u) {
                *d = d.saturating_sub(1);
            }
        }
    }
    order.reverse();
    order
}

fn greedy_color(adj: &[Vec<usize>], order: &[usize], colors: &mut [u32]) -> bool {
    for &v in order {
        colors[v] = 0;
    }
    for &v in order {
        let used: Vec<u32> = adj[v].iter().map(|&u| colors[u]).collect();
        match (1..=6u32).find(|c| !used.contains(c)) {
            Some(c) => colors[v] = c,
            None => return false,
        }
    }
    true
}
