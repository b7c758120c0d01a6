//! Lower bounds, structural audits, and random-graph experiments.

use crate::graph::{detect_rook, Graph};
use crate::matrix::{MatrixViolation, RankMatrix};
use crate::solve::{solve_chi2, Budget, SolveOutcome};
use crate::verify::Ranking;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// Degeneracy with a witnessing elimination order: vertices removed
/// smallest-degree-first (ties to the lowest id), the bound being the
/// largest degree seen at removal time. Callers use `degeneracy + 1` as a
/// floor on the 2-ranking rank count.
pub fn degeneracy(g: &Graph) -> (u32, Vec<u32>) {
    let n = g.n();
    let mut deg: Vec<u32> = (0..n as u32).map(|v| g.degree(v) as u32).collect();
    let mut removed = vec![false; n];
    // Lazy-deletion heap: stale entries (from before a degree decrement)
    // are skipped on pop, so each edge contributes O(log n) work.
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> =
        (0..n as u32).map(|v| Reverse((deg[v as usize], v))).collect();
    let mut order = Vec::with_capacity(n);
    let mut k = 0;
    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v as usize] || d != deg[v as usize] {
            continue;
        }
        removed[v as usize] = true;
        k = k.max(d);
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u as usize] {
                deg[u as usize] -= 1;
                heap.push(Reverse((deg[u as usize], u)));
            }
        }
    }
    (k, order)
}

/// Exact value of n * (1 + 1/2 + ... + 1/m) together with its ceiling:
/// the minimum rank count of any valid m x n rank matrix is at least this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicBound {
    pub exact: Ratio<u64>,
    pub ceil: u64,
}

pub fn harmonic_lower_bound(m: u64, n: u64) -> Result<HarmonicBound, BoundsError> {
    if m == 0 || n == 0 {
        return Err(BoundsError::Parameter("sides must be positive".into()));
    }
    if m > 20 {
        return Err(BoundsError::Parameter("harmonic bound limited to m <= 20".into()));
    }
    let mut h = Ratio::new(0, 1);
    for i in 1..=m {
        h += Ratio::new(1, i);
    }
    let exact = h * Ratio::from_integer(n);
    let ceil = exact.ceil().to_integer();
    Ok(HarmonicBound { exact, ceil })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AuditError {
    #[error("matrix is not valid: {0}")]
    Invalid(MatrixViolation),
    #[error(
        "column {col}: entry {value} is among the {k} largest of its column \
         but occurs {multiplicity} times in the matrix"
    )]
    MultiplicityExceeded { col: usize, k: usize, value: u32, multiplicity: usize },
}

/// Audits the structural fact that in a valid rank matrix the k-th largest
/// entry of any column occurs at most k times in the whole matrix. Rejects
/// invalid matrices outright; on a valid matrix a failure here would mean
/// the validity checker and this counting argument disagree, so the two
/// serve as cross-checks of one another.
pub fn audit_rank_multiplicity(mx: &RankMatrix) -> Result<(), AuditError> {
    if let Err(v) = mx.check_valid() {
        return Err(AuditError::Invalid(v));
    }
    let mut global: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    for &e in mx.entries() {
        *global.entry(e).or_insert(0) += 1;
    }
    for col in 0..mx.cols() {
        let mut column: Vec<u32> = (0..mx.rows()).map(|r| mx.get(r, col)).collect();
        column.sort_unstable_by(|a, b| b.cmp(a));
        for (idx, &value) in column.iter().enumerate() {
            let k = idx + 1;
            let multiplicity = global[&value];
            if multiplicity > k {
                return Err(AuditError::MultiplicityExceeded { col, k, value, multiplicity });
            }
        }
    }
    Ok(())
}

/// Everything known about one graph's minimum 2-ranking count: lower
/// bounds, whatever a construction achieved, and the solver's word if it
/// ran. `consistent` must hold whenever both sides are present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub graph: String,
    pub n: usize,
    pub degeneracy: u32,
    /// degeneracy + 1: valid for 2-rankings of any graph.
    pub degeneracy_lower: u32,
    /// Present when the graph carries rook's-graph structure.
    pub harmonic: Option<HarmonicBound>,
    /// Rank count of a supplied valid construction (an upper bound).
    pub construction_ranks: Option<u32>,
    /// Solver bracket; equal entries mean exact.
    pub solver: Option<(u32, u32)>,
    /// From the construction: (multiplicity, number of rank values used
    /// exactly that many times), ascending.
    pub multiplicity_histogram: Option<Vec<(u32, u32)>>,
}

impl BoundReport {
    pub fn lower(&self) -> u32 {
        let mut lo = self.degeneracy_lower;
        if let Some(h) = &self.harmonic {
            lo = lo.max(h.ceil as u32);
        }
        if let Some((l, _)) = self.solver {
            lo = lo.max(l);
        }
        lo
    }

    pub fn upper(&self) -> Option<u32> {
        let from_solver = self.solver.map(|(_, u)| u);
        let from_construction = self.construction_ranks;
        match (from_solver, from_construction) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn consistent(&self) -> bool {
        self.upper().is_none_or(|u| self.lower() <= u)
    }
}

pub fn bound_report(
    name: &str,
    g: &Graph,
    construction: Option<&Ranking>,
    solver: Option<(u32, u32)>,
) -> BoundReport {
    let k = degeneracy(g).0;
    let degeneracy_lower = if g.n() == 0 { 0 } else { k + 1 };
    let harmonic = detect_rook(g).and_then(|(m, n)| {
        let a = harmonic_lower_bound(m as u64, n as u64).ok()?;
        let b = harmonic_lower_bound(n as u64, m as u64).ok()?;
        Some(if a.ceil >= b.ceil { a } else { b })
    });
    let multiplicity_histogram = construction.map(|r| {
        let mut per_value: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
        for &val in r.ranks() {
            *per_value.entry(val).or_insert(0) += 1;
        }
        let mut hist: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
        for &mult in per_value.values() {
            *hist.entry(mult).or_insert(0) += 1;
        }
        let mut hist: Vec<(u32, u32)> = hist.into_iter().collect();
        hist.sort_unstable();
        hist
    });
    BoundReport {
        graph: name.to_string(),
        n: g.n(),
        degeneracy: k,
        degeneracy_lower,
        harmonic,
        construction_ranks: construction.map(|r| r.rank_count() as u32),
        solver,
        multiplicity_histogram,
    }
}

/// Erdos-Renyi sample: each pair becomes an edge independently with
/// probability p, pairs visited in lexicographic order so a seed fully
/// determines the graph.
pub fn sample_gnp(n: u32, p: f64, seed: u64) -> Result<Graph, BoundsError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(BoundsError::Parameter(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n as usize, &edges).map_err(|e| BoundsError::Parameter(e.to_string()))
}

/// Edge probability as a function of n.
#[derive(Debug, Clone, PartialEq)]
pub enum ProbabilityRule {
    Const(f64),
    /// c * sqrt(ln n / n), capped at 1; the regime where the minimum rank
    /// count of a 2-ranking is known to grow like sqrt(n log n) factors.
    SqrtLogOverN { c: f64 },
}

impl ProbabilityRule {
    pub fn probability(&self, n: u32) -> f64 {
        match self {
            ProbabilityRule::Const(p) => *p,
            ProbabilityRule::SqrtLogOverN { c } => {
                if n < 2 {
                    return 1.0;
                }
                let n = n as f64;
                (c * (n.ln() / n).sqrt()).min(1.0)
            }
        }
    }

    /// Accepts "0.35" or "sqrtlog:1.5".
    pub fn parse(s: &str) -> Result<ProbabilityRule, BoundsError> {
        if let Some(c) = s.strip_prefix("sqrtlog:") {
            let c: f64 = c
                .parse()
                .map_err(|_| BoundsError::Parameter(format!("bad coefficient in '{s}'")))?;
            if !c.is_finite() || c <= 0.0 {
                return Err(BoundsError::Parameter("coefficient must be positive".into()));
            }
            return Ok(ProbabilityRule::SqrtLogOverN { c });
        }
        let p: f64 =
            s.parse().map_err(|_| BoundsError::Parameter(format!("bad probability '{s}'")))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(BoundsError::Parameter(format!("probability {p} outside [0, 1]")));
        }
        Ok(ProbabilityRule::Const(p))
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub n_values: Vec<u32>,
    pub rule: ProbabilityRule,
    pub trials: u32,
    pub seed: u64,
    pub budget: Budget,
}

/// One sampled graph: exact value when the solver finished, otherwise the
/// bracket it proved before the budget ran out.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRow {
    pub n: u32,
    pub p: f64,
    pub trial: u32,
    pub chi2_lo: u32,
    pub chi2_hi: u32,
    pub max_degree: usize,
    pub degeneracy: u32,
}

fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn trial_seed(master: u64, n: u32, trial: u32) -> u64 {
    mix64(master ^ mix64(((n as u64) << 32) | trial as u64))
}

/// Runs trials in parallel; rows come back in (n, trial) order and are
/// fully determined by the config.
pub fn random_chi2_experiment(cfg: &ExperimentConfig) -> Result<Vec<TrialRow>, BoundsError> {
    let mut jobs = Vec::new();
    for &n in &cfg.n_values {
        let p = cfg.rule.probability(n);
        if !(0.0..=1.0).contains(&p) {
            return Err(BoundsError::Parameter(format!("rule gave probability {p} at n = {n}")));
        }
        for trial in 0..cfg.trials {
            jobs.push((n, p, trial));
        }
    }
    let rows = jobs
        .into_par_iter()
        .map(|(n, p, trial)| {
            let g = sample_gnp(n, p, trial_seed(cfg.seed, n, trial))
                .expect("probability already validated");
            let (chi2_lo, chi2_hi) = match solve_chi2(&g, &cfg.budget) {
                SolveOutcome::Solved(r) => (r.chi, r.chi),
                SolveOutcome::BudgetExceeded(b) => (b.lower, b.upper),
            };
            TrialRow {
                n,
                p,
                trial,
                chi2_lo,
                chi2_hi,
                max_degree: g.max_degree(),
                degeneracy: degeneracy(&g).0,
            }
        })
        .collect();
    Ok(rows)
}

pub fn experiment_csv(rows: &[TrialRow]) -> String {
    let mut out = String::from("n,p,trial,chi2_lo,chi2_hi,max_degree,degeneracy\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n, r.p, r.trial, r.chi2_lo, r.chi2_hi, r.max_degree, r.degeneracy
        ));
    }
    out
}

/// Per-n means of the solved bracket and the degree statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub n: u32,
    pub p: f64,
    pub trials: u32,
    pub solved: u32,
    pub mean_chi2_lo: f64,
    pub mean_chi2_hi: f64,
    pub mean_max_degree: f64,
    pub mean_degeneracy: f64,
}

pub fn summarize(rows: &[TrialRow]) -> Vec<SummaryRow> {
    let mut ns: Vec<u32> = rows.iter().map(|r| r.n).collect();
    ns.sort_unstable();
    ns.dedup();
    ns.iter()
        .map(|&n| {
            let group: Vec<&TrialRow> = rows.iter().filter(|r| r.n == n).collect();
            let count = group.len() as f64;
            SummaryRow {
                n,
                p: group[0].p,
                trials: group.len() as u32,
                solved: group.iter().filter(|r| r.chi2_lo == r.chi2_hi).count() as u32,
                mean_chi2_lo: group.iter().map(|r| r.chi2_lo as f64).sum::<f64>() / count,
                mean_chi2_hi: group.iter().map(|r| r.chi2_hi as f64).sum::<f64>() / count,
                mean_max_degree: group.iter().map(|r| r.max_degree as f64).sum::<f64>() / count,
                mean_degeneracy: group.iter().map(|r| r.degeneracy as f64).sum::<f64>() / count,
            }
        })
        .collect()
}
