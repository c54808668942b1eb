//! Deterministic graph generators for tests and benchmarks.

use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};
use crate::sample;

/// A generator request. Every variant is fully determined by its fields;
/// `Gnp` draws each pair independently from a stream seeded by `seed`.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    /// Path on `n` vertices (`n - 1` edges).
    Path { n: usize },
    /// Cycle on `n ≥ 3` vertices.
    Cycle { n: usize },
    /// Complete graph on `n` vertices.
    Complete { n: usize },
    /// Star: one center adjacent to `leaves` leaves.
    Star { leaves: usize },
    /// Grid with `rows × cols` vertices in row-major order.
    Grid { rows: usize, cols: usize },
    /// Erdős–Rényi G(n, p).
    Gnp { n: usize, p: f64, seed: u64 },
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Path { .. } => "path",
            GraphKind::Cycle { .. } => "cycle",
            GraphKind::Complete { .. } => "complete",
            GraphKind::Star { .. } => "star",
            GraphKind::Grid { .. } => "grid",
            GraphKind::Gnp { .. } => "gnp",
        }
    }
}

/// Builds the requested graph. For `Cycle` the order must be at least 3,
/// and for `Gnp` the probability must lie in `[0, 1]`.
pub fn generate(kind: &GraphKind) -> Graph {
    match *kind {
        GraphKind::Path { n } => from_pairs(n, (1..n).map(|v| (v as Vertex - 1, v as Vertex))),
        GraphKind::Cycle { n } => {
            assert!(n >= 3, "cycle needs at least 3 vertices");
            let wrap = [(n as Vertex - 1, 0)];
            from_pairs(
                n,
                (1..n).map(|v| (v as Vertex - 1, v as Vertex)).chain(wrap),
            )
        }
        GraphKind::Complete { n } => {
            let pairs = (0..n as Vertex).flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)));
            from_pairs(n, pairs)
        }
        GraphKind::Star { leaves } => {
            from_pairs(leaves + 1, (1..=leaves as Vertex).map(|v| (0, v)))
        }
        GraphKind::Grid { rows, cols } => {
            let mut pairs = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    let v = (r * cols + c) as Vertex;
                    if c + 1 < cols {
                        pairs.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        pairs.push((v, v + cols as Vertex));
                    }
                }
            }
            from_pairs(rows * cols, pairs)
        }
        GraphKind::Gnp { n, p, seed } => {
            assert!(
                (0.0..=1.0).contains(&p),
                "gnp probability must be in [0, 1]"
            );
            let mut rng = sample::seeded(seed);
            let mut pairs = Vec::new();
            for u in 0..n as Vertex {
                for v in u + 1..n as Vertex {
                    if sample::unit_f64(&mut rng) < p {
                        pairs.push((u, v));
                    }
                }
            }
            from_pairs(n, pairs)
        }
    }
}

fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::from_edges(n, pairs).expect("generated edges are simple and in range")
}
