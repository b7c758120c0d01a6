//! Plain-text exchange formats: edge lists, rank assignments, and rank
//! matrices. All files are ASCII decimal, one record per line, LF separated.

use crate::graph::{Graph, GraphError};
use crate::matrix::RankMatrix;
use crate::verify::Ranking;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("{0}")]
    Structure(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Line { line, reason: reason.into() }
}

/// Numbered non-blank lines, 1-based as they appear in the file.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn parse_fields<const N: usize>(line: usize, text: &str) -> Result<[u64; N], ParseError> {
    let mut out = [0u64; N];
    let mut fields = text.split_whitespace();
    for slot in &mut out {
        let f = fields
            .next()
            .ok_or_else(|| bad(line, format!("expected {N} fields, got fewer")))?;
        *slot = f
            .parse()
            .map_err(|_| bad(line, format!("invalid integer {f:?}")))?;
    }
    if fields.next().is_some() {
        return Err(bad(line, format!("expected {N} fields, got more")));
    }
    Ok(out)
}

/// Reads a graph from edge-list text: a header line `n m` followed by `m`
/// lines `u v`. Self-loops and duplicate edges are rejected with the
/// offending line number.
pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    let lines = content_lines(text);
    let (&(hline, header), rest) = lines
        .split_first()
        .ok_or_else(|| ParseError::Structure("empty input, expected header line `n m`".into()))?;
    let [n, m] = parse_fields(hline, header)?;
    if n > 10_000_000 {
        return Err(bad(hline, format!("vertex count {n} too large for this format")));
    }
    if rest.len() != m as usize {
        return Err(ParseError::Structure(format!(
            "header declares {m} edges but file has {}",
            rest.len()
        )));
    }
    let mut edges = Vec::with_capacity(m as usize);
    let mut seen = std::collections::HashSet::new();
    for &(lno, line) in rest {
        let [u, v] = parse_fields(lno, line)?;
        if u >= n || v >= n {
            return Err(bad(lno, format!("vertex {} out of range (n = {n})", u.max(v))));
        }
        let (u, v) = (u as u32, v as u32);
        if u == v {
            return Err(bad(lno, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(bad(lno, format!("duplicate edge {} {}", u.min(v), u.max(v))));
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n as usize, &edges)?)
}

/// Writes the edge-list form: `n m` then edges with `u < v` in lexicographic
/// order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a rank assignment: one `vertex rank` pair per line, each vertex
/// exactly once, ranks >= 1. The vertex count is the number of lines.
pub fn read_ranking(text: &str) -> Result<Ranking, ParseError> {
    let lines = content_lines(text);
    if lines.is_empty() {
        return Err(ParseError::Structure("empty input, expected `vertex rank` lines".into()));
    }
    let n = lines.len();
    let mut ranks = vec![0u32; n];
    let mut seen = vec![false; n];
    for &(lno, line) in &lines {
        let [v, r] = parse_fields(lno, line)?;
        if v as usize >= n {
            return Err(bad(lno, format!("vertex {v} out of range for {n} lines")));
        }
        if seen[v as usize] {
            return Err(bad(lno, format!("vertex {v} listed twice")));
        }
        if r < 1 || r > u32::MAX as u64 {
            return Err(bad(lno, "rank must be >= 1 and fit in 32 bits"));
        }
        seen[v as usize] = true;
        ranks[v as usize] = r as u32;
    }
    Ok(Ranking::new(ranks).expect("ranks validated above"))
}

/// Writes a rank assignment, ascending by vertex id.
pub fn write_ranking(r: &Ranking) -> String {
    let mut out = String::new();
    for (v, rank) in r.ranks().iter().enumerate() {
        out.push_str(&format!("{v} {rank}\n"));
    }
    out
}

/// Reads a rank matrix: `m` lines of `n` space-separated integers (>= 0).
pub fn read_matrix(text: &str) -> Result<RankMatrix, ParseError> {
    let lines = content_lines(text);
    if lines.is_empty() {
        return Err(ParseError::Structure("empty input, expected matrix rows".into()));
    }
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(lines.len());
    let mut width = None;
    for &(lno, line) in &lines {
        let row: Vec<u32> = line
            .split_whitespace()
            .map(|f| f.parse().map_err(|_| bad(lno, format!("invalid integer {f:?}"))))
            .collect::<Result<_, _>>()?;
        if let Some(w) = width {
            if row.len() != w {
                return Err(bad(lno, format!("row has {} entries, expected {w}", row.len())));
            }
        } else {
            if row.is_empty() {
                return Err(bad(lno, "empty matrix row"));
            }
            width = Some(row.len());
        }
        rows.push(row);
    }
    Ok(RankMatrix::from_rows(rows).expect("rectangular by construction"))
}

/// Writes a rank matrix, one row per line.
pub fn write_matrix(mx: &RankMatrix) -> String {
    let mut out = String::new();
    for i in 0..mx.rows() {
        let row: Vec<String> = (0..mx.cols()).map(|j| mx.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
