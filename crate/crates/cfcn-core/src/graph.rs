//! Simple undirected graphs over dense integer vertex ids.
//!
//! Vertices are `0..n`; adjacency lists are sorted and deduplicated, and
//! self-loops are rejected at construction. Graphs are immutable once
//! built. The whitespace edge-list format used by the CLI is parsed and
//! rendered here so it can be exercised without touching the filesystem.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

pub type Vertex = u32;

/// Sorted set of distinct vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSet {
    ids: Vec<Vertex>,
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { ids: Vec::new() }
    }

    /// Sorts and deduplicates.
    pub fn from_unsorted(mut ids: Vec<Vertex>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet { ids }
    }

    /// Wraps a vector that is already strictly increasing.
    pub fn from_sorted(ids: Vec<Vertex>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet { ids }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    /// Position of `v` within the set's ascending order.
    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.ids.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.ids
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: Vertex },
    /// A vertex id is not below the graph's order.
    InvalidVertex { vertex: Vertex, order: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::InvalidVertex { vertex, order } => {
                write!(
                    f,
                    "vertex {vertex} out of range for graph on {order} vertices"
                )
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Errors from [`parse_edge_list`], each carrying a 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    SelfLoop {
        line: usize,
    },
    Malformed {
        line: usize,
    },
    VertexOutOfRange {
        line: usize,
        vertex: Vertex,
        declared: usize,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::SelfLoop { line } => write!(f, "line {line}: self-loop edge"),
            ParseError::Malformed { line } => write!(f, "line {line}: malformed edge line"),
            ParseError::VertexOutOfRange {
                line,
                vertex,
                declared,
            } => {
                write!(
                    f,
                    "line {line}: vertex {vertex} exceeds declared order {declared}"
                )
            }
        }
    }
}

impl core::error::Error for ParseError {}

/// Simple undirected graph. `PartialEq` compares adjacency structure, which
/// is canonical because lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph on `n` vertices from an edge iterator. Duplicate
    /// edges (in either orientation) collapse to one.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::InvalidVertex {
                        vertex: w,
                        order: n,
                    });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.adj.len() as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as Vertex;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// All vertices within `radius` hops of `v`, including `v` itself.
    pub fn ball(&self, v: Vertex, radius: usize) -> Result<VertexSet, GraphError> {
        let n = self.vertex_count();
        if v as usize >= n {
            return Err(GraphError::InvalidVertex {
                vertex: v,
                order: n,
            });
        }
        let mut seen = vec![false; n];
        seen[v as usize] = true;
        let mut frontier = vec![v];
        for _ in 0..radius {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        let ids = (0..n as Vertex).filter(|&u| seen[u as usize]).collect();
        Ok(VertexSet::from_sorted(ids))
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()`. The second
    /// return value maps each new id back to its original id.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let n = self.vertex_count();
        if let Some(v) = keep.iter().find(|&v| v as usize >= n) {
            return Err(GraphError::InvalidVertex {
                vertex: v,
                order: n,
            });
        }
        let mut adj = Vec::with_capacity(keep.len());
        for old in keep.iter() {
            let row: Vec<Vertex> = self
                .neighbors(old)
                .iter()
                .filter_map(|&w| keep.index_of(w).map(|i| i as Vertex))
                .collect();
            adj.push(row);
        }
        Ok((Graph { adj }, keep.as_slice().to_vec()))
    }

    /// Renders the whitespace edge-list format. An `n <count>` header is
    /// emitted only when the edges alone do not determine the vertex count
    /// (so a headerless file round-trips to the same graph).
    pub fn to_edge_list(&self) -> String {
        let n = self.vertex_count();
        let implied = self.edges().map(|(_, v)| v as usize + 1).max().unwrap_or(0);
        let mut out = String::new();
        if n > 0 && implied != n {
            let _ = writeln!(out, "n {n}");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the whitespace edge-list format: one `u v` pair per line, `#`
/// comment lines and blank lines skipped, and an optional `n <count>`
/// header as the first significant line for graphs whose order exceeds
/// every edge endpoint. Without a header the order is one past the largest
/// endpoint (zero for an empty file).
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, Vertex, Vertex)> = Vec::new();
    let mut seen_significant = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let first = tokens.next().expect("significant line has a token");
        if !seen_significant && first == "n" {
            seen_significant = true;
            let count = tokens
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or(ParseError::Malformed { line })?;
            if tokens.next().is_some() {
                return Err(ParseError::Malformed { line });
            }
            declared = Some(count);
            continue;
        }
        seen_significant = true;
        let u: Vertex = first.parse().map_err(|_| ParseError::Malformed { line })?;
        let v: Vertex = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::Malformed { line })?;
        if tokens.next().is_some() {
            return Err(ParseError::Malformed { line });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line });
        }
        edges.push((line, u, v));
    }
    let implied = edges
        .iter()
        .map(|&(_, u, v)| u.max(v) as usize + 1)
        .max()
        .unwrap_or(0);
    let n = declared.unwrap_or(implied);
    if let Some(&(line, u, v)) = edges.iter().find(|&&(_, u, v)| u.max(v) as usize >= n) {
        return Err(ParseError::VertexOutOfRange {
            line,
            vertex: u.max(v),
            declared: n,
        });
    }
    let graph = Graph::from_edges(n, edges.into_iter().map(|(_, u, v)| (u, v)))
        .expect("edge list validated before construction");
    Ok(graph)
}
