//! Checking rank assignments. A path is well-ranked when its endpoints have
//! distinct ranks or some interior vertex outranks both; an assignment is a
//! valid k-ranking when every path of length 1..=k is well-ranked.

use crate::graph::Graph;
use crate::matrix::RankMatrix;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("assignment covers {got} vertices but graph has {want}")]
    SizeMismatch { got: usize, want: usize },
    #[error("vertex {0} has rank 0; ranks are 1-based")]
    ZeroRank(u32),
    #[error("k must be >= 1")]
    BadK,
}

/// Total rank assignment, one rank >= 1 per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    ranks: Vec<u32>,
    rank_count: usize,
}

impl Ranking {
    pub fn new(ranks: Vec<u32>) -> Result<Ranking, VerifyError> {
        if let Some(v) = ranks.iter().position(|&r| r == 0) {
            return Err(VerifyError::ZeroRank(v as u32));
        }
        let mut distinct = ranks.clone();
        distinct.sort_unstable();
        distinct.dedup();
        Ok(Ranking { ranks, rank_count: distinct.len() })
    }

    /// Shifts a 0-based assignment up by one.
    pub fn from_zero_based(ranks: Vec<u32>) -> Ranking {
        Ranking::new(ranks.into_iter().map(|r| r + 1).collect()).expect("shifted ranks are >= 1")
    }

    pub fn n(&self) -> usize {
        self.ranks.len()
    }

    pub fn rank(&self, v: u32) -> u32 {
        self.ranks[v as usize]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Number of distinct ranks used.
    pub fn rank_count(&self) -> usize {
        self.rank_count
    }

    pub fn max_rank(&self) -> u32 {
        self.ranks.iter().copied().max().unwrap_or(0)
    }
}

/// A path whose endpoints share a rank with no interior vertex above them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    path: Vec<u32>,
}

impl Violation {
    pub fn path(&self) -> &[u32] {
        &self.path
    }

    /// Replays the reported path against the definition: it must be a real
    /// path in `g`, its endpoints must share a rank, and no interior vertex
    /// may exceed that rank.
    pub fn confirm(&self, g: &Graph, r: &Ranking) -> bool {
        let p = &self.path;
        if p.len() < 2 {
            return false;
        }
        let distinct = {
            let mut s = p.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == p.len()
        };
        let connected = p.windows(2).all(|w| g.has_edge(w[0], w[1]));
        let ends = r.rank(p[0]) == r.rank(*p.last().unwrap());
        let interior_low = p[1..p.len() - 1].iter().all(|&w| r.rank(w) <= r.rank(p[0]));
        distinct && connected && ends && interior_low
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Violated(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Violated(v) => Some(v),
        }
    }
}

fn check_sizes(g: &Graph, r: &Ranking) -> Result<(), VerifyError> {
    if r.n() != g.n() {
        return Err(VerifyError::SizeMismatch { got: r.n(), want: g.n() });
    }
    Ok(())
}

/// Verifies that `r` is a k-ranking of `g`. Violations are reported for the
/// smallest failing length, in a fixed scan order, so the result is
/// deterministic. Runtime grows exponentially in `k` past 2; length is
/// capped at `|V| - 1`, so passing `u32::MAX` checks every path length.
pub fn verify_k_ranking(g: &Graph, r: &Ranking, k: u32) -> Result<Verdict, VerifyError> {
    check_sizes(g, r)?;
    if k < 1 {
        return Err(VerifyError::BadK);
    }
    let k = (k as usize).min(g.n().saturating_sub(1));

    // Length 1: adjacent vertices need distinct ranks.
    for (u, v) in g.edges() {
        if r.rank(u) == r.rank(v) {
            return Ok(Verdict::Violated(Violation { path: vec![u, v] }));
        }
    }
    if k >= 2 {
        // Length 2: scan middle vertices in id order.
        for w in 0..g.n() as u32 {
            let nb = g.neighbors(w);
            for (a, &u) in nb.iter().enumerate() {
                for &v in &nb[a + 1..] {
                    if r.rank(u) == r.rank(v) && r.rank(w) <= r.rank(u) {
                        return Ok(Verdict::Violated(Violation { path: vec![u, w, v] }));
                    }
                }
            }
        }
    }
    // Longer paths by bounded DFS, shortest failing length first.
    for len in 3..=k {
        if let Some(path) = first_bad_path_of_len(g, r, len) {
            return Ok(Verdict::Violated(Violation { path }));
        }
    }
    Ok(Verdict::Valid)
}

/// First violating simple path with exactly `len` edges, scanning start
/// vertices and neighbors in ascending order.
fn first_bad_path_of_len(g: &Graph, r: &Ranking, len: usize) -> Option<Vec<u32>> {
    fn extend(
        g: &Graph,
        r: &Ranking,
        path: &mut Vec<u32>,
        on_path: &mut Vec<bool>,
        left: usize,
    ) -> bool {
        if left == 0 {
            let (s, e) = (path[0], *path.last().unwrap());
            // Each path is seen from both ends; keep the canonical direction.
            if s > e {
                return false;
            }
            let bad = r.rank(s) == r.rank(e)
                && path[1..path.len() - 1].iter().all(|&w| r.rank(w) <= r.rank(s));
            return bad;
        }
        let last = *path.last().unwrap();
        for &v in g.neighbors(last) {
            if on_path[v as usize] {
                continue;
            }
            path.push(v);
            on_path[v as usize] = true;
            if extend(g, r, path, on_path, left - 1) {
                return true;
            }
            on_path[v as usize] = false;
            path.pop();
        }
        false
    }

    let mut on_path = vec![false; g.n()];
    for s in 0..g.n() as u32 {
        let mut path = vec![s];
        on_path[s as usize] = true;
        if extend(g, r, &mut path, &mut on_path, len) {
            return Some(path);
        }
        on_path[s as usize] = false;
    }
    None
}

/// How a coloring fails the star condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarViolation {
    /// Adjacent vertices share a color.
    Edge(u32, u32),
    /// Four-vertex path alternating between two colors.
    BicoloredPath([u32; 4]),
}

/// Verifies a proper coloring with no two-colored four-vertex path. Colors
/// are carried as a `Ranking` (values >= 1).
pub fn verify_star_coloring(
    g: &Graph,
    c: &Ranking,
) -> Result<Result<(), StarViolation>, VerifyError> {
    check_sizes(g, c)?;
    for (u, v) in g.edges() {
        if c.rank(u) == c.rank(v) {
            return Ok(Err(StarViolation::Edge(u, v)));
        }
    }
    // Every four-vertex path has a unique middle edge (v, w); a bicolored
    // one has c(u) = c(w) and c(v) = c(x).
    for (v, w) in g.edges() {
        for &u in g.neighbors(v) {
            if u == w || c.rank(u) != c.rank(w) {
                continue;
            }
            for &x in g.neighbors(w) {
                if x == v || x == u || c.rank(x) != c.rank(v) {
                    continue;
                }
                return Ok(Err(StarViolation::BicoloredPath([u, v, w, x])));
            }
        }
    }
    Ok(Ok(()))
}

/// Reads a rank matrix as a ranking of the rook's graph with vertex `(i, j)`
/// at id `i * cols + j`, shifting the 0-based entries up by one.
pub fn ranking_from_matrix(mx: &RankMatrix) -> Ranking {
    Ranking::from_zero_based(mx.entries().to_vec())
}
