//! Rank constructions with certified rank counts: hypercubes in d+1 ranks,
//! products of 4-divisible cycles in 2d+1, rook's graphs via block products
//! and the factorial recursion, and triangle-cycle products from fixed
//! periodic arrays.

use crate::graph::Graph;
use crate::matrix::RankMatrix;
use crate::verify::Ranking;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("no valid assignment found after {attempts} independent-set restarts")]
    RestartsExhausted { attempts: u32 },
}

fn param(msg: impl Into<String>) -> ConstructError {
    ConstructError::Parameter(msg.into())
}

/// Binary matrix over GF(2) stored column-wise; column `i` is a bitmask of
/// `k` row bits. Multiplying a vertex's bit vector XORs the columns in its
/// support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    k: u32,
    cols: Vec<u32>,
}

impl Gf2Matrix {
    pub fn new(k: u32, cols: Vec<u32>) -> Result<Gf2Matrix, ConstructError> {
        if k == 0 || k > 30 {
            return Err(param("row count must be in 1..=30"));
        }
        if let Some(c) = cols.iter().find(|&&c| c >= 1 << k) {
            return Err(param(format!("column value {c} needs more than {k} bits")));
        }
        Ok(Gf2Matrix { k, cols })
    }

    /// The fixed matrix behind `rank_hypercube` for dimension `d = t + 2^k`:
    /// the first `t` columns are the binary encodings of `1..=t` (distinct
    /// and nonzero), the last `2^k` columns enumerate all `k`-bit values in
    /// increasing order.
    pub fn hypercube_default(d: u32) -> Gf2Matrix {
        assert!(d >= 2, "split needs d >= 2");
        let k = d.ilog2();
        let t = d - (1 << k);
        let cols = (0..d).map(|i| if i < t { i + 1 } else { i - t }).collect();
        Gf2Matrix { k, cols }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.cols.len() as u32
    }

    pub fn col(&self, i: u32) -> u32 {
        self.cols[i as usize]
    }

    /// Product with the bit vector `u`, as a `k`-bit value.
    pub fn mul_bits(&self, u: u32) -> u32 {
        let mut acc = 0;
        let mut rest = u;
        while rest != 0 {
            let i = rest.trailing_zeros();
            acc ^= self.cols[i as usize];
            rest &= rest - 1;
        }
        acc
    }

    /// Checks the shape the hypercube construction relies on: with
    /// `t = d - 2^k`, the first `t` columns are distinct and nonzero and the
    /// last `2^k` columns are a permutation of all `k`-bit values.
    pub fn check_hypercube_shape(&self) -> Result<(), ConstructError> {
        let d = self.d();
        let block = 1u32 << self.k;
        if d < block {
            return Err(param(format!("need at least {block} columns, have {d}")));
        }
        let t = d - block;
        if t >= block {
            return Err(param(format!("dimension {d} is not t + 2^k with t < 2^k for k = {}", self.k)));
        }
        let head = &self.cols[..t as usize];
        let mut sorted = head.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != head.len() || head.contains(&0) {
            return Err(param("leading columns must be distinct and nonzero"));
        }
        let mut tail = self.cols[t as usize..].to_vec();
        tail.sort_unstable();
        if tail != (0..block).collect::<Vec<_>>() {
            return Err(param("trailing columns must be a permutation of all k-bit values"));
        }
        Ok(())
    }
}

/// 0-based hypercube ranks for dimension `d`, using `mat` (when given) at
/// the top level of the recursion and the fixed matrices below it.
fn rank0_hypercube(d: u32, mat: Option<&Gf2Matrix>) -> Vec<u32> {
    if d == 0 {
        return vec![0];
    }
    if d == 1 {
        return vec![0, 1];
    }
    let k = d.ilog2();
    let t = d - (1 << k);
    let low = rank0_hypercube(t, None);
    let default;
    let a = match mat {
        Some(m) => m,
        None => {
            default = Gf2Matrix::hypercube_default(d);
            &default
        }
    };
    let mask_t = (1u32 << t) - 1;
    let mut ranks = vec![0u32; 1 << d];
    for (u, slot) in ranks.iter_mut().enumerate() {
        let u = u as u32;
        *slot = if (u >> t).count_ones() % 2 == 0 {
            // Even tail weight: rank the leading coordinates recursively,
            // inside [0, t].
            low[(u & mask_t) as usize]
        } else {
            // Odd tail weight: a fresh high rank in [t+1, d], chosen by the
            // matrix product so that vertices two apart never collide.
            t + 1 + a.mul_bits(u)
        };
    }
    ranks
}

/// Ranks the `d`-dimensional hypercube with exactly `d + 1` ranks.
pub fn rank_hypercube(d: u32) -> Result<Ranking, ConstructError> {
    if d > 30 {
        return Err(ConstructError::TooLarge(format!("hypercube dimension {d} > 30")));
    }
    Ok(Ranking::from_zero_based(rank0_hypercube(d, None)))
}

/// `rank_hypercube` with a caller-supplied top-level matrix, for probing how
/// the choice of columns changes the assignment. The matrix must have `d`
/// columns and pass `check_hypercube_shape`.
pub fn rank_hypercube_with_matrix(d: u32, mat: &Gf2Matrix) -> Result<Ranking, ConstructError> {
    if !(2..=30).contains(&d) {
        return Err(param("dimension must be in 2..=30 when supplying a matrix"));
    }
    if mat.d() != d {
        return Err(param(format!("matrix has {} columns, dimension is {d}", mat.d())));
    }
    if mat.k() != d.ilog2() {
        return Err(param(format!("matrix has {} rows, dimension {d} needs {}", mat.k(), d.ilog2())));
    }
    mat.check_hypercube_shape()?;
    Ok(Ranking::from_zero_based(rank0_hypercube(d, Some(mat))))
}

/// 2-bit Gray code: consecutive values mod 4 differ in one bit.
fn gray2(x: usize) -> u32 {
    let x = (x % 4) as u32;
    x ^ (x >> 1)
}

/// Ranks the product of `d` cycles, each length divisible by 4, with exactly
/// `2d + 1` ranks: every vertex is reduced coordinatewise mod 4 and ranked
/// through the `2d`-dimensional hypercube assignment, since the product of
/// `d` 4-cycles is that hypercube.
pub fn rank_cycle_product(lengths: &[usize]) -> Result<Ranking, ConstructError> {
    if lengths.is_empty() {
        return Err(param("need at least one cycle length"));
    }
    if lengths.len() > 15 {
        return Err(ConstructError::TooLarge("more than 15 factors".into()));
    }
    for &m in lengths {
        if m < 4 || m % 4 != 0 {
            return Err(param(format!("cycle length {m} is not a positive multiple of 4")));
        }
    }
    let n: usize = lengths.iter().try_fold(1usize, |acc, &m| {
        acc.checked_mul(m).filter(|&p| p <= 1 << 24)
    }).ok_or_else(|| ConstructError::TooLarge("vertex count exceeds 2^24".into()))?;
    let d = lengths.len();
    let cube = rank0_hypercube(2 * d as u32, None);
    let mut ranks = Vec::with_capacity(n);
    for id in 0..n {
        let mut rest = id;
        let mut bits = 0u32;
        // Row-major ids: the last factor varies fastest.
        for (i, &m) in lengths.iter().enumerate().rev() {
            bits |= gray2(rest % m) << (2 * i);
            rest /= m;
        }
        ranks.push(cube[bits as usize]);
    }
    Ok(Ranking::from_zero_based(ranks))
}

/// Substitutes `b` into every cell of `a`: cell `(i, j)` of `a` becomes the
/// block `span * a(i,j) + b`, where `span` bounds the entries of `b`. Valid
/// inputs yield a valid output on the correspondingly larger rook's graph.
pub fn block_product(
    a: &RankMatrix,
    b: &RankMatrix,
    span: u32,
) -> Result<RankMatrix, ConstructError> {
    if let Some(&big) = b.entries().iter().find(|&&e| e >= span) {
        return Err(param(format!("entry {big} is outside the declared span {span}")));
    }
    let max_a = a.entries().iter().copied().max().unwrap_or(0);
    if u64::from(max_a) * u64::from(span) + u64::from(span) > u64::from(u32::MAX) {
        return Err(ConstructError::TooLarge("combined rank range overflows".into()));
    }
    let (ar, ac) = (a.rows(), a.cols());
    let (br, bc) = (b.rows(), b.cols());
    let (rows, cols) = (ar * br, ac * bc);
    let mut entries = vec![0u32; rows * cols];
    for i in 0..ar {
        for j in 0..ac {
            let base = span * a.get(i, j);
            for s in 0..br {
                for t in 0..bc {
                    entries[(i * br + s) * cols + (j * bc + t)] = base + b.get(s, t);
                }
            }
        }
    }
    Ok(RankMatrix::new(rows, cols, entries).expect("dimensions positive"))
}

/// `1 x n` matrix with the distinct entries `0..n`.
pub fn distinct_row(n: usize) -> Result<RankMatrix, ConstructError> {
    RankMatrix::new(1, n, (0..n as u32).collect()).ok_or_else(|| param("row needs n >= 1"))
}

fn seed_2x2() -> RankMatrix {
    RankMatrix::from_rows(vec![vec![1, 0], vec![0, 2]]).expect("fixed shape")
}

/// Ranks the rook's graph on `m x n` cells for powers of two `m <= n`,
/// using `n * 3^(log2 m) / m` ranks: repeated block products of a fixed
/// 2x2 seed over a single distinct-entry row.
pub fn rank_rook_pow2(m: usize, n: usize) -> Result<RankMatrix, ConstructError> {
    if m < 1 || !m.is_power_of_two() || n < 1 || !n.is_power_of_two() {
        return Err(param(format!("{m} and {n} must both be powers of two")));
    }
    if m > n {
        return Err(param(format!("need m <= n, got {m} > {n}")));
    }
    if n > 1 << 12 {
        return Err(ConstructError::TooLarge("side above 4096".into()));
    }
    if m == 1 {
        return distinct_row(n);
    }
    let inner = rank_rook_pow2(m / 2, n / 2)?;
    block_product(&inner, &seed_2x2(), 3)
}

fn factorial(m: usize) -> usize {
    (1..=m).product()
}

/// Ranks the rook's graph on `m x m!` cells, `m <= 8`, meeting the harmonic
/// lower bound exactly: `m! * (1 + 1/2 + ... + 1/m)` ranks. Each recursion
/// level places `m` shifted copies of the previous matrix in disjoint high
/// intervals and threads one row of shared low ranks through each copy.
pub fn rank_rook_factorial(m: usize) -> Result<RankMatrix, ConstructError> {
    if m < 1 {
        return Err(param("need m >= 1"));
    }
    if m > 8 {
        return Err(ConstructError::TooLarge(format!("m = {m} > 8 (matrix has m * m! cells)")));
    }
    if m == 1 {
        return distinct_row(1);
    }
    let prev = rank_rook_factorial(m - 1)?;
    let low = factorial(m - 1); // ranks 0..low are shared across blocks
    let prev_count = prev.rank_count() as u32;
    let cols = factorial(m);
    let mut entries = vec![0u32; m * cols];
    for block in 0..m {
        let shift = low as u32 + block as u32 * prev_count;
        for i in 0..m {
            for j in 0..low {
                let col = block * low + j;
                entries[i * cols + col] = if i == block {
                    j as u32 // the low ranks, in identity order
                } else {
                    let prev_row = if i < block { i } else { i - 1 };
                    prev.get(prev_row, j) + shift
                };
            }
        }
    }
    Ok(RankMatrix::new(m, cols, entries).expect("dimensions positive"))
}

/// Ranks the rook's graph on `m x n` cells whenever `m!` divides `n`, with
/// exactly `n * (1 + 1/2 + ... + 1/m)` ranks.
pub fn rank_rook(m: usize, n: usize) -> Result<RankMatrix, ConstructError> {
    if m < 1 || n < 1 {
        return Err(param("need m, n >= 1"));
    }
    if m > 8 {
        return Err(ConstructError::TooLarge(format!("m = {m} > 8")));
    }
    let f = factorial(m);
    if n % f != 0 {
        return Err(param(format!("{}! = {f} does not divide n = {n}", m)));
    }
    if n > 1 << 20 {
        return Err(ConstructError::TooLarge("n above 2^20".into()));
    }
    let base = rank_rook_factorial(m)?;
    let t = n / f;
    block_product(&base, &distinct_row(t)?, t as u32)
}

// Periodic column blocks for products of a triangle with a cycle. The
// 6-rank pair splices at any column count n = 4a + 9b; the 5-rank pair
// needs even n.
const BLOCK6_W9: [[u32; 9]; 3] = [
    [2, 4, 0, 3, 1, 0, 4, 0, 5],
    [0, 5, 1, 0, 5, 2, 0, 1, 3],
    [1, 3, 2, 4, 0, 3, 5, 2, 4],
];
const BLOCK6_W4: [[u32; 4]; 3] = [
    [2, 4, 0, 5],
    [0, 5, 1, 3],
    [1, 3, 2, 4],
];
const BLOCK5_W4: [[u32; 4]; 3] = [
    [0, 1, 0, 2],
    [3, 2, 4, 1],
    [4, 0, 3, 0],
];
const BLOCK5_W6: [[u32; 6]; 3] = [
    [0, 1, 3, 0, 4, 2],
    [3, 0, 4, 2, 0, 1],
    [4, 2, 0, 1, 3, 0],
];

fn concat_blocks(n: usize, plan: &[(usize, &[&[u32]])]) -> Vec<u32> {
    let mut rows: [Vec<u32>; 3] = [Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n)];
    for &(count, block) in plan {
        for _ in 0..count {
            for (i, row) in block.iter().enumerate() {
                rows[i].extend_from_slice(row);
            }
        }
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    rows.concat()
}

/// Ranks the product of a triangle with an `n`-cycle (vertex `(i, j)` at id
/// `i * n + j`): 5 ranks for even `n >= 4`, 6 ranks for `n >= 24`. Odd `n`
/// below 24 is declined; the exact solver handles those sizes directly.
pub fn rank_triangle_cycle(n: usize) -> Result<Ranking, ConstructError> {
    let ranks0 = if n >= 4 && n % 2 == 0 {
        // n = 4a + 6b with b in {0, 1}.
        let b = (n % 4) / 2;
        let a = (n - 6 * b) / 4;
        let w4: Vec<&[u32]> = BLOCK5_W4.iter().map(|r| r.as_slice()).collect();
        let w6: Vec<&[u32]> = BLOCK5_W6.iter().map(|r| r.as_slice()).collect();
        concat_blocks(n, &[(a, &w4), (b, &w6)])
    } else if n >= 24 {
        // n = 9b + 4a, taking b = n mod 4 nine-wide blocks first.
        let b = n % 4;
        let a = (n - 9 * b) / 4;
        let w9: Vec<&[u32]> = BLOCK6_W9.iter().map(|r| r.as_slice()).collect();
        let w4: Vec<&[u32]> = BLOCK6_W4.iter().map(|r| r.as_slice()).collect();
        concat_blocks(n, &[(b, &w9), (a, &w4)])
    } else {
        return Err(ConstructError::Unsupported(format!(
            "no periodic assignment for odd n = {n} < 24; use the exact solver"
        )));
    };
    Ok(Ranking::from_zero_based(ranks0))
}

/// The graph `rank_triangle_cycle` ranks.
pub fn triangle_cycle_graph(n: usize) -> Result<Graph, ConstructError> {
    if n < 3 {
        return Err(param("cycle factor needs n >= 3"));
    }
    crate::graph::cycle_product(&[3, n]).map_err(|e| param(e.to_string()))
}
