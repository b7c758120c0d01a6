//! Exact minimum rank counts by iterative deepening: for each candidate
//! count t (from a certified lower bound upward) a depth-first search tries
//! to place ranks 1..=t in breadth-first vertex order, pruning any partial
//! assignment that already contains a violating path. The first t that
//! admits a completion is the exact value; the all-distinct assignment
//! guarantees termination at t = |V|.

use crate::bounds;
use crate::graph::{detect_rook, Graph};
use crate::verify::{verify_k_ranking, verify_star_coloring, Ranking};
use std::time::Instant;

/// Path-length cap meaning "all lengths" (internally limited to |V| - 1).
pub const UNBOUNDED: u32 = u32::MAX;

#[derive(Debug, Clone, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn nodes(max: u64) -> Budget {
        Budget { max_nodes: Some(max), max_seconds: None }
    }

    pub fn seconds(max: f64) -> Budget {
        Budget { max_nodes: None, max_seconds: Some(max) }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub chi: u32,
    pub witness: Ranking,
    pub nodes: u64,
    pub seconds: f64,
}

/// What is still known when the search runs out of budget: the target is
/// somewhere in `lower..=upper`.
#[derive(Debug, Clone)]
pub struct Bracket {
    pub lower: u32,
    pub upper: u32,
    pub nodes: u64,
    pub seconds: f64,
}

#[derive(Debug, Clone)]
pub enum SolveOutcome {
    Solved(SolveResult),
    BudgetExceeded(Bracket),
}

impl SolveOutcome {
    pub fn chi(&self) -> Option<u32> {
        match self {
            SolveOutcome::Solved(r) => Some(r.chi),
            SolveOutcome::BudgetExceeded(_) => None,
        }
    }

    /// Bounds on the true value: equal when solved exactly.
    pub fn bounds(&self) -> (u32, u32) {
        match self {
            SolveOutcome::Solved(r) => (r.chi, r.chi),
            SolveOutcome::BudgetExceeded(b) => (b.lower, b.upper),
        }
    }

    pub fn witness(&self) -> Option<&Ranking> {
        match self {
            SolveOutcome::Solved(r) => Some(&r.witness),
            SolveOutcome::BudgetExceeded(_) => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SolveOutcome::Solved(r) => r.nodes,
            SolveOutcome::BudgetExceeded(b) => b.nodes,
        }
    }
}

/// Breadth-first order from a maximum-degree vertex (ties to the lowest
/// id), restarting the same way for further components. Keeps every new
/// vertex near assigned ones, which is what makes the pruning bite.
fn bfs_order(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    loop {
        let start = (0..n as u32)
            .filter(|&v| !seen[v as usize])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
        let Some(start) = start else { break };
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
    order
}

/// Checks whether the vertex just assigned creates a violation among the
/// already-assigned vertices. Implementations may assume `rank[v] != 0` and
/// that the assignment was violation-free before `v` was placed.
trait NewViolation {
    fn violates(&self, g: &Graph, rank: &[u32], v: u32) -> bool;
}

/// True when the newly placed rank at `v` (unassigned neighbors read as 0)
/// completes a violating path of length 1 or 2.
pub(crate) fn chi2_new_violation(g: &Graph, rank: &[u32], v: u32) -> bool {
    let rv = rank[v as usize];
    for &u in g.neighbors(v) {
        let ru = rank[u as usize];
        if ru == 0 {
            continue;
        }
        // Edge u-v.
        if ru == rv {
            return true;
        }
        // v as an endpoint: v-u-x with u in the middle.
        if ru < rv {
            for &x in g.neighbors(u) {
                if x != v && rank[x as usize] == rv {
                    return true;
                }
            }
        }
    }
    // v in the middle: u-v-x.
    let nb = g.neighbors(v);
    for (i, &u) in nb.iter().enumerate() {
        let ru = rank[u as usize];
        if ru == 0 || ru < rv {
            continue;
        }
        for &x in &nb[i + 1..] {
            if rank[x as usize] == ru {
                return true;
            }
        }
    }
    false
}

/// Specialized checks for paths of length 1 and 2 around `v`.
struct Chi2Check;

impl NewViolation for Chi2Check {
    fn violates(&self, g: &Graph, rank: &[u32], v: u32) -> bool {
        chi2_new_violation(g, rank, v)
    }
}

/// General check: enumerates simple paths through `v` of length at most `k`
/// over assigned vertices. Exponential in `k`; fine at desk scale.
struct ChiKCheck {
    k: usize,
}

impl ChiKCheck {
    /// Extends the second arm; `first` is the fixed other endpoint, `used`
    /// marks vertices on either arm.
    fn extend_arm(
        &self,
        g: &Graph,
        rank: &[u32],
        used: &mut Vec<bool>,
        arm: &mut Vec<u32>,
        first: u32,
        interior_max: u32,
        left: usize,
    ) -> bool {
        let last = *arm.last().unwrap();
        let end_rank = rank[first as usize];
        if arm.len() > 1 && rank[last as usize] == end_rank && interior_max <= end_rank {
            return true;
        }
        if left == 0 {
            return false;
        }
        for &x in g.neighbors(last) {
            if used[x as usize] || rank[x as usize] == 0 {
                continue;
            }
            used[x as usize] = true;
            arm.push(x);
            // The previous arm end becomes interior.
            let new_interior = interior_max.max(rank[last as usize]);
            let hit = self.extend_arm(g, rank, used, arm, first, new_interior, left - 1);
            arm.pop();
            used[x as usize] = false;
            if hit {
                return true;
            }
        }
        false
    }

    /// Enumerates one arm rooted at `v` (possibly empty), then the other.
    fn any_bad_path(&self, g: &Graph, rank: &[u32], v: u32) -> bool {
        let mut used = vec![false; g.n()];
        used[v as usize] = true;

        // Arm A as an explicit stack of (vertex, interior max below it).
        // Depth-first over arm A; for each arm A, run arm B enumeration.
        fn rec(
            check: &ChiKCheck,
            g: &Graph,
            rank: &[u32],
            used: &mut Vec<bool>,
            arm_a: &mut Vec<u32>,
            v: u32,
        ) -> bool {
            // Arm A currently ends at `first`; try closing with arm B.
            let first = *arm_a.last().unwrap();
            // Interior of the combined path: everything except `first` and
            // the final arm-B vertex; start from A's interior plus v.
            let mut interior_max = 0;
            for &a in arm_a.iter().take(arm_a.len() - 1).skip(1) {
                interior_max = interior_max.max(rank[a as usize]);
            }
            if arm_a.len() > 1 {
                interior_max = interior_max.max(rank[v as usize]);
            }
            let b_len = check.k - (arm_a.len() - 1);
            if b_len > 0 {
                let mut arm_b = vec![v];
                if check.extend_arm(g, rank, used, &mut arm_b, first, interior_max, b_len) {
                    return true;
                }
            }
            if arm_a.len() - 1 < check.k - 1 {
                let last = *arm_a.last().unwrap();
                for &x in g.neighbors(last) {
                    if used[x as usize] || rank[x as usize] == 0 {
                        continue;
                    }
                    used[x as usize] = true;
                    arm_a.push(x);
                    let hit = rec(check, g, rank, used, arm_a, v);
                    arm_a.pop();
                    used[x as usize] = false;
                    if hit {
                        return true;
                    }
                }
            }
            false
        }

        let mut arm_a = vec![v];
        rec(self, g, rank, &mut used, &mut arm_a, v)
    }
}

impl NewViolation for ChiKCheck {
    fn violates(&self, g: &Graph, rank: &[u32], v: u32) -> bool {
        self.any_bad_path(g, rank, v)
    }
}

/// Proper coloring plus no two-colored four-vertex path.
struct StarCheck;

impl NewViolation for StarCheck {
    fn violates(&self, g: &Graph, rank: &[u32], v: u32) -> bool {
        let cv = rank[v as usize];
        for &u in g.neighbors(v) {
            if rank[u as usize] == cv {
                return true;
            }
        }
        // v as an endpoint: v-x-y-z colored cv,cx,cv,cx.
        for &x in g.neighbors(v) {
            let cx = rank[x as usize];
            if cx == 0 {
                continue;
            }
            for &y in g.neighbors(x) {
                if y == v || rank[y as usize] != cv {
                    continue;
                }
                for &z in g.neighbors(y) {
                    if z != v && z != x && rank[z as usize] == cx {
                        return true;
                    }
                }
            }
        }
        // v in the second position: u-v-y-z colored cu,cv,cu,cv.
        let nb = g.neighbors(v);
        for &u in nb {
            let cu = rank[u as usize];
            if cu == 0 {
                continue;
            }
            for &y in nb {
                if y == u || rank[y as usize] != cu {
                    continue;
                }
                for &z in g.neighbors(y) {
                    if z != v && z != u && rank[z as usize] == cv {
                        return true;
                    }
                }
            }
        }
        false
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Driver<'a, C: NewViolation> {
    g: &'a Graph,
    order: &'a [u32],
    rank: Vec<u32>,
    t: u32,
    check: &'a C,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl<'a, C: NewViolation> Driver<'a, C> {
    fn dfs(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        for r in 1..=self.t {
            self.nodes += 1;
            if self.nodes >= self.max_nodes {
                return Step::OutOfBudget;
            }
            if self.nodes & 0xfff == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() >= d {
                        return Step::OutOfBudget;
                    }
                }
            }
            self.rank[v as usize] = r;
            if !self.check.violates(self.g, &self.rank, v) {
                match self.dfs(depth + 1) {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
        }
        self.rank[v as usize] = 0;
        Step::Exhausted
    }
}

fn run<C: NewViolation>(g: &Graph, check: &C, seed_lower: u32, budget: &Budget) -> SolveOutcome {
    let start = Instant::now();
    let n = g.n() as u32;
    if n == 0 {
        let witness = Ranking::new(Vec::new()).expect("empty");
        return SolveOutcome::Solved(SolveResult { chi: 0, witness, nodes: 0, seconds: 0.0 });
    }
    let deadline = budget.max_seconds.map(|s| start + std::time::Duration::from_secs_f64(s));
    let order = bfs_order(g);
    let mut lower = seed_lower.clamp(1, n);
    let mut total_nodes = 0u64;
    loop {
        let mut driver = Driver {
            g,
            order: &order,
            rank: vec![0; g.n()],
            t: lower,
            check,
            nodes: 0,
            max_nodes: budget.max_nodes.map_or(u64::MAX, |m| m.saturating_sub(total_nodes)),
            deadline,
        };
        let step = driver.dfs(0);
        total_nodes += driver.nodes;
        match step {
            Step::Found => {
                let witness =
                    Ranking::new(driver.rank).expect("search assigns ranks >= 1 everywhere");
                debug_assert_eq!(witness.rank_count(), lower as usize);
                return SolveOutcome::Solved(SolveResult {
                    chi: lower,
                    witness,
                    nodes: total_nodes,
                    seconds: start.elapsed().as_secs_f64(),
                });
            }
            Step::Exhausted => {
                lower += 1;
                debug_assert!(lower <= n, "all-distinct assignment must satisfy any target");
            }
            Step::OutOfBudget => {
                return SolveOutcome::BudgetExceeded(Bracket {
                    lower,
                    upper: n,
                    nodes: total_nodes,
                    seconds: start.elapsed().as_secs_f64(),
                });
            }
        }
    }
}

/// Lower bound fed to the deepening loop: the peeling bound, improved by
/// the harmonic bound when the graph is a labeled rook's graph.
fn seed_lower_bound(g: &Graph, k: u32) -> u32 {
    if g.n() == 0 {
        return 0;
    }
    if k < 2 {
        return 1;
    }
    let mut lower = bounds::degeneracy(g).0 + 1;
    if let Some((m, n)) = detect_rook(g) {
        if let Ok(h) = bounds::harmonic_lower_bound(m as u64, n as u64) {
            lower = lower.max(h.ceil as u32);
        }
        if let Ok(h) = bounds::harmonic_lower_bound(n as u64, m as u64) {
            lower = lower.max(h.ceil as u32);
        }
    }
    lower
}

/// Exact minimum number of ranks in a 2-ranking.
pub fn solve_chi2(g: &Graph, budget: &Budget) -> SolveOutcome {
    let outcome = run(g, &Chi2Check, seed_lower_bound(g, 2), budget);
    if let SolveOutcome::Solved(r) = &outcome {
        assert!(
            verify_k_ranking(g, &r.witness, 2).expect("sizes match").is_valid(),
            "solver produced an invalid witness"
        );
    }
    outcome
}

/// Exact minimum number of ranks in a k-ranking; `UNBOUNDED` means every
/// path length. Uses the general path enumeration even at k = 2, so it
/// doubles as an independent cross-check of `solve_chi2`.
pub fn solve_chi_k(g: &Graph, k: u32, budget: &Budget) -> SolveOutcome {
    if k == 0 {
        // No constraints beyond ranks being positive.
        let witness = Ranking::new(vec![1; g.n()]).expect("ranks are 1");
        let chi = if g.n() == 0 { 0 } else { 1 };
        return SolveOutcome::Solved(SolveResult { chi, witness, nodes: 0, seconds: 0.0 });
    }
    let k_eff = (k as usize).min(g.n().saturating_sub(1)).max(1);
    let outcome = run(g, &ChiKCheck { k: k_eff }, seed_lower_bound(g, k), budget);
    if let SolveOutcome::Solved(r) = &outcome {
        assert!(
            verify_k_ranking(g, &r.witness, k_eff as u32).expect("sizes match").is_valid(),
            "solver produced an invalid witness"
        );
    }
    outcome
}

/// Exact star chromatic number: fewest colors in a proper coloring with no
/// two-colored four-vertex path.
pub fn solve_star_chromatic(g: &Graph, budget: &Budget) -> SolveOutcome {
    let outcome = run(g, &StarCheck, 1, budget);
    if let SolveOutcome::Solved(r) = &outcome {
        assert!(
            verify_star_coloring(g, &r.witness).expect("sizes match").is_ok(),
            "solver produced an invalid star coloring"
        );
    }
    outcome
}
