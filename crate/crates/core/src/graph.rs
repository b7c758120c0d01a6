//! Simple undirected graphs on dense integer vertex ids, plus the named
//! families and product operations the rest of the crate builds on.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexRange { vertex: u32, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(u32, u32),
    #[error("graph too large: {0}")]
    TooLarge(String),
}

/// Undirected simple graph. Vertices are `0..n`; each adjacency list is kept
/// sorted. Optional per-vertex labels carry coordinate metadata for products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], labels: None }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates, and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        let n = self.n();
        if u as usize >= n {
            return Err(GraphError::VertexRange { vertex: u, n });
        }
        if v as usize >= n {
            return Err(GraphError::VertexRange { vertex: v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u as usize].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u as usize].push(v);
        self.adj[v as usize].push(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() as u32 {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v as usize].as_str())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
    }

    /// BFS distances from `from`; unreachable vertices get `u32::MAX`.
    pub fn bfs_dist(&self, from: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        dist[from as usize] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn dist(&self, u: u32, v: u32) -> u32 {
        self.bfs_dist(u)[v as usize]
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() as u32 {
            if seen[s as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = std::collections::VecDeque::from([s]);
            seen[s as usize] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Length of a shortest cycle, or `None` if the graph is a forest.
    pub fn girth(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        for s in 0..self.n() as u32 {
            // BFS from s; a non-tree edge closes a cycle through s of length
            // dist[u] + dist[v] + 1.
            let mut dist = vec![u32::MAX; self.n()];
            let mut parent = vec![u32::MAX; self.n()];
            dist[s as usize] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if dist[v as usize] == u32::MAX {
                        dist[v as usize] = dist[u as usize] + 1;
                        parent[v as usize] = u;
                        queue.push_back(v);
                    } else if parent[u as usize] != v {
                        let len = dist[u as usize] + dist[v as usize] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::Parameter("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Parameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n as u32).map(|u| (u, (u + 1) % n as u32)).collect();
    Graph::from_edges(n, &edges)
}

/// Path on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::Parameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n as u32 - 1).map(|u| (u, u + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// `d`-dimensional hypercube. Vertex ids are the integer values of the bit
/// vectors; coordinate `i` is bit `i`. Enforces `d <= 30`.
pub fn hypercube(d: u32) -> Result<Graph, GraphError> {
    if d > 30 {
        return Err(GraphError::TooLarge(format!("hypercube dimension {d} > 30")));
    }
    let n = 1usize << d;
    let mut edges = Vec::with_capacity(n / 2 * d as usize);
    for u in 0..n as u32 {
        for i in 0..d {
            let v = u ^ (1 << i);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cartesian product. Vertex `(g, h)` gets id `g * |V(H)| + h` and label
/// `"<g>,<h>"` built from the factors' labels (ids when unlabeled).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let id = |a: u32, b: u32| a * nh as u32 + b;
    let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
    for a in 0..ng as u32 {
        for b in 0..nh as u32 {
            for &b2 in h.neighbors(b) {
                if b < b2 {
                    edges.push((id(a, b), id(a, b2)));
                }
            }
        }
    }
    for b in 0..nh as u32 {
        for a in 0..ng as u32 {
            for &a2 in g.neighbors(a) {
                if a < a2 {
                    edges.push((id(a, b), id(a2, b)));
                }
            }
        }
    }
    let mut out = Graph::from_edges(ng * nh, &edges).expect("product of simple graphs is simple");
    let mut labels = Vec::with_capacity(ng * nh);
    for a in 0..ng as u32 {
        for b in 0..nh as u32 {
            let la = g.label(a).map_or_else(|| a.to_string(), str::to_owned);
            let lb = h.label(b).map_or_else(|| b.to_string(), str::to_owned);
            labels.push(format!("{la},{lb}"));
        }
    }
    out.set_labels(labels);
    out
}

/// Graph on the same vertices with edges between distinct vertices at
/// distance at most `k`.
pub fn distance_power(g: &Graph, k: u32) -> Graph {
    if k < 1 {
        return Graph::empty(g.n());
    }
    let mut edges = Vec::new();
    for u in 0..g.n() as u32 {
        let dist = g.bfs_dist(u);
        for v in u + 1..g.n() as u32 {
            if dist[v as usize] <= k {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(g.n(), &edges).expect("distance power of a simple graph is simple")
}

/// Product of cycles `C_{lengths[0]} x ... x C_{lengths[d-1]}` with row-major
/// vertex ids.
pub fn cycle_product(lengths: &[usize]) -> Result<Graph, GraphError> {
    if lengths.is_empty() {
        return Err(GraphError::Parameter("cycle product needs at least one factor".into()));
    }
    let mut g = cycle(lengths[0])?;
    for &m in &lengths[1..] {
        g = cartesian_product(&g, &cycle(m)?);
    }
    Ok(g)
}

/// `K_m x K_n` (the rook's graph) with vertex `(i, j)` at id `i * n + j`.
pub fn rook_graph(m: usize, n: usize) -> Result<Graph, GraphError> {
    Ok(cartesian_product(&complete(m)?, &complete(n)?))
}

/// Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("fixed edge list")
}

/// Heawood graph: 14-cycle plus the chords `{i, i+5}` for even `i`.
pub fn heawood() -> Graph {
    let mut edges = Vec::new();
    for i in 0..14u32 {
        edges.push((i, (i + 1) % 14));
        if i % 2 == 0 {
            edges.push((i, (i + 5) % 14));
        }
    }
    Graph::from_edges(14, &edges).expect("fixed edge list")
}

/// Wagner graph: 8-cycle plus the four antipodal chords.
pub fn wagner_c8_antipodal() -> Graph {
    let mut edges = Vec::new();
    for i in 0..8u32 {
        edges.push((i, (i + 1) % 8));
    }
    for i in 0..4u32 {
        edges.push((i, i + 4));
    }
    Graph::from_edges(8, &edges).expect("fixed edge list")
}

/// Recognizes a labeled rook's graph: labels must read "i,j" and cover an
/// m x n grid, and adjacency must be exactly "same row or same column".
/// Returns (m, n) on success. Quadratic in the vertex count, so graphs past
/// 4096 vertices are not inspected.
pub fn detect_rook(g: &Graph) -> Option<(usize, usize)> {
    let nv = g.n();
    if nv == 0 || nv > 4096 {
        return None;
    }
    let mut coords = Vec::with_capacity(nv);
    for v in 0..nv as u32 {
        let label = g.label(v)?;
        let (a, b) = label.split_once(',')?;
        let a: usize = a.trim().parse().ok()?;
        let b: usize = b.trim().parse().ok()?;
        coords.push((a, b));
    }
    let m = coords.iter().map(|c| c.0).max()? + 1;
    let n = coords.iter().map(|c| c.1).max()? + 1;
    if m * n != nv {
        return None;
    }
    let mut seen = vec![false; nv];
    for &(a, b) in &coords {
        let cell = a * n + b;
        if seen[cell] {
            return None;
        }
        seen[cell] = true;
    }
    for u in 0..nv as u32 {
        for v in u + 1..nv as u32 {
            let (a1, b1) = coords[u as usize];
            let (a2, b2) = coords[v as usize];
            let expect = (a1 == a2) != (b1 == b2);
            if g.has_edge(u, v) != expect {
                return None;
            }
        }
    }
    Some((m, n))
}

/// Vertex of a `d`-dimensional hypercube as an explicit bit vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeVertex {
    d: u32,
    bits: u32,
}

impl CubeVertex {
    pub fn new(d: u32, bits: u32) -> CubeVertex {
        assert!(d <= 30 && (d == 30 || bits < (1 << d)), "bits out of range for dimension");
        CubeVertex { d, bits }
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinates holding a 1, ascending.
    pub fn support(&self) -> Vec<u32> {
        (0..self.d).filter(|i| self.bits >> i & 1 == 1).collect()
    }

    pub fn coord(&self, i: u32) -> bool {
        debug_assert!(i < self.d);
        self.bits >> i & 1 == 1
    }
}
