//! Rank matrices: rank assignments for products of two complete graphs,
//! written as an `m x n` grid. Entries are 0-based; they shift up by one
//! when converted to a `Ranking`.

use std::collections::HashMap;
use thiserror::Error;

/// `m x n` matrix of 0-based ranks, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// Why a matrix fails to be a valid rank assignment for its rook's graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixViolation {
    #[error("row {row} repeats entry {value} at columns {col_a} and {col_b}")]
    RowDuplicate { row: usize, col_a: usize, col_b: usize, value: u32 },
    #[error("column {col} repeats entry {value} at rows {row_a} and {row_b}")]
    ColDuplicate { col: usize, row_a: usize, row_b: usize, value: u32 },
    #[error(
        "cells ({row_a},{col_a}) and ({row_b},{col_b}) share entry {value} \
         but a corner cell is not larger"
    )]
    CornerNotLarger { row_a: usize, col_a: usize, row_b: usize, col_b: usize, value: u32 },
}

impl RankMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u32>) -> Option<RankMatrix> {
        (rows >= 1 && cols >= 1 && entries.len() == rows * cols)
            .then_some(RankMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Option<RankMatrix> {
        let m = rows.len();
        let n = rows.first()?.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        RankMatrix::new(m, n, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Number of distinct entries.
    pub fn rank_count(&self) -> usize {
        let mut seen: Vec<u32> = self.entries.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Checks the grid conditions that characterize a valid assignment on
    /// the rook's graph: rows and columns hold distinct entries, and two
    /// cells sharing an entry have both opposite corners strictly larger.
    /// This is a direct check on the matrix, independent of any graph or
    /// path machinery.
    pub fn check_valid(&self) -> Result<(), MatrixViolation> {
        for i in 0..self.rows {
            let mut where_val: HashMap<u32, usize> = HashMap::new();
            for j in 0..self.cols {
                if let Some(&j0) = where_val.get(&self.get(i, j)) {
                    return Err(MatrixViolation::RowDuplicate {
                        row: i,
                        col_a: j0,
                        col_b: j,
                        value: self.get(i, j),
                    });
                }
                where_val.insert(self.get(i, j), j);
            }
        }
        for j in 0..self.cols {
            let mut where_val: HashMap<u32, usize> = HashMap::new();
            for i in 0..self.rows {
                if let Some(&i0) = where_val.get(&self.get(i, j)) {
                    return Err(MatrixViolation::ColDuplicate {
                        col: j,
                        row_a: i0,
                        row_b: i,
                        value: self.get(i, j),
                    });
                }
                where_val.insert(self.get(i, j), i);
            }
        }
        // Group cells by value; repeats are rare, so pairwise within a group
        // is cheap.
        let mut by_value: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                by_value.entry(self.get(i, j)).or_default().push((i, j));
            }
        }
        let mut values: Vec<u32> = by_value.keys().copied().collect();
        values.sort_unstable();
        for v in values {
            let cells = &by_value[&v];
            for (a, &(ia, ja)) in cells.iter().enumerate() {
                for &(ib, jb) in &cells[a + 1..] {
                    // Same row/column repeats were caught above.
                    if self.get(ia, jb) <= v || self.get(ib, ja) <= v {
                        return Err(MatrixViolation::CornerNotLarger {
                            row_a: ia,
                            col_a: ja,
                            row_b: ib,
                            col_b: jb,
                            value: v,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}
