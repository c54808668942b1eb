//! Hypergraphs on ambient vertex ids, conflict-free verification, and an
//! exact brute-force solver for small point sets.
//!
//! A coloring of the points is conflict-free when every edge contains some
//! color exactly once. Edges are nonempty subsets of the point set; an
//! optional per-edge label records which ambient vertex an edge stands for
//! (the pipeline labels each residual edge with its surviving vertex).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cf::Color;
use crate::graph::{Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypergraphError {
    /// Edges must be nonempty.
    EmptyEdge { index: usize },
    /// An edge mentions a vertex outside the point set.
    ForeignVertex { index: usize, vertex: Vertex },
    /// Labels, when given, must pair up with edges.
    LabelCountMismatch { edges: usize, labels: usize },
    /// A coloring must assign one color per point.
    ColoringLengthMismatch { points: usize, colors: usize },
    /// The exact solver only handles small point sets.
    TooManyPoints { points: usize, limit: usize },
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypergraphError::EmptyEdge { index } => write!(f, "edge {index} is empty"),
            HypergraphError::ForeignVertex { index, vertex } => {
                write!(
                    f,
                    "edge {index} mentions vertex {vertex} outside the point set"
                )
            }
            HypergraphError::LabelCountMismatch { edges, labels } => {
                write!(f, "{labels} labels for {edges} edges")
            }
            HypergraphError::ColoringLengthMismatch { points, colors } => {
                write!(f, "{colors} colors for {points} points")
            }
            HypergraphError::TooManyPoints { points, limit } => {
                write!(
                    f,
                    "{points} points exceed the exact-search limit of {limit}"
                )
            }
        }
    }
}

impl core::error::Error for HypergraphError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    points: VertexSet,
    edges: Vec<VertexSet>,
    labels: Option<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn new(points: VertexSet, edges: Vec<VertexSet>) -> Result<Self, HypergraphError> {
        Self::build(points, edges, None)
    }

    /// Like [`Hypergraph::new`] but tagging edge `i` with `labels[i]`.
    pub fn with_labels(
        points: VertexSet,
        edges: Vec<VertexSet>,
        labels: Vec<Vertex>,
    ) -> Result<Self, HypergraphError> {
        Self::build(points, edges, Some(labels))
    }

    fn build(
        points: VertexSet,
        edges: Vec<VertexSet>,
        labels: Option<Vec<Vertex>>,
    ) -> Result<Self, HypergraphError> {
        if let Some(labels) = &labels {
            if labels.len() != edges.len() {
                return Err(HypergraphError::LabelCountMismatch {
                    edges: edges.len(),
                    labels: labels.len(),
                });
            }
        }
        for (index, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            if let Some(vertex) = edge.iter().find(|&v| !points.contains(v)) {
                return Err(HypergraphError::ForeignVertex { index, vertex });
            }
        }
        Ok(Hypergraph {
            points,
            edges,
            labels,
        })
    }

    pub fn points(&self) -> &VertexSet {
        &self.points
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn label(&self, edge: usize) -> Option<Vertex> {
        self.labels.as_ref().map(|l| l[edge])
    }

    /// Size of the largest pairwise edge intersection; 0 when fewer than
    /// two edges exist.
    pub fn max_edge_intersection(&self) -> usize {
        let mut best = 0;
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                best = best.max(intersection_size(
                    self.edges[i].as_slice(),
                    self.edges[j].as_slice(),
                ));
            }
        }
        best
    }

    /// Each edge as indices into the ascending point order.
    pub(crate) fn edge_point_indices(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .map(|e| {
                e.iter()
                    .map(|v| self.points.index_of(v).expect("edge members are points"))
                    .collect()
            })
            .collect()
    }
}

fn intersection_size(a: &[Vertex], b: &[Vertex]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Outcome of a conflict-free check: per edge, the smallest color that
/// occurs exactly once, or `None` for a violated edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfReport {
    pub witnesses: Vec<Option<Color>>,
}

impl CfReport {
    pub fn valid(&self) -> bool {
        self.witnesses.iter().all(|w| w.is_some())
    }

    /// Indices of violated edges, ascending.
    pub fn violations(&self) -> impl Iterator<Item = usize> + '_ {
        self.witnesses
            .iter()
            .enumerate()
            .filter_map(|(i, w)| w.is_none().then_some(i))
    }
}

/// Checks a coloring (one color per point, in the point set's ascending
/// order) against every edge.
pub fn verify_cf(h: &Hypergraph, colors: &[Color]) -> Result<CfReport, HypergraphError> {
    if colors.len() != h.points().len() {
        return Err(HypergraphError::ColoringLengthMismatch {
            points: h.points().len(),
            colors: colors.len(),
        });
    }
    let mut scratch: Vec<Color> = Vec::new();
    let witnesses = h
        .edges()
        .iter()
        .map(|edge| {
            scratch.clear();
            scratch.extend(
                edge.iter()
                    .map(|v| colors[h.points().index_of(v).expect("edge members are points")]),
            );
            lowest_unique(&mut scratch)
        })
        .collect();
    Ok(CfReport { witnesses })
}

/// Smallest color occurring exactly once in `colors`; sorts its scratch
/// argument in place.
fn lowest_unique(colors: &mut [Color]) -> Option<Color> {
    colors.sort_unstable();
    let mut i = 0;
    while i < colors.len() {
        let mut j = i + 1;
        while j < colors.len() && colors[j] == colors[i] {
            j += 1;
        }
        if j - i == 1 {
            return Some(colors[i]);
        }
        i = j;
    }
    None
}

/// Indices of edges with no uniquely-occurring color, ascending.
pub fn find_violated_edges(
    h: &Hypergraph,
    colors: &[Color],
) -> Result<Vec<usize>, HypergraphError> {
    Ok(verify_cf(h, colors)?.violations().collect())
}

/// Result of an exact minimum-color search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactCount {
    Colors(u32),
    ExceedsMax,
}

/// Hard cap on the point count accepted by the exact searches.
pub const EXACT_LIMIT: usize = 12;

/// Exact conflict-free chromatic number of `h` by canonical backtracking,
/// for at most [`EXACT_LIMIT`] points. Returns the smallest palette size
/// `k ≤ max_colors` admitting a conflict-free coloring.
pub fn exact_cf_number(h: &Hypergraph, max_colors: u32) -> Result<ExactCount, HypergraphError> {
    let n = h.points().len();
    if n > EXACT_LIMIT {
        return Err(HypergraphError::TooManyPoints {
            points: n,
            limit: EXACT_LIMIT,
        });
    }
    Ok(min_conflict_free_colors(
        &h.edge_point_indices(),
        n,
        max_colors,
    ))
}

/// Smallest `k ≤ max_colors` such that the points `0..n_points` admit a
/// coloring with `k` colors in which every set in `sets` contains some
/// color exactly once. Sets must be nonempty. With no points at all the
/// empty coloring needs 0 colors.
///
/// The search enumerates canonical colorings only (point 0 takes color 0;
/// each later point takes at most one color beyond the maximum used so
/// far), and prunes as soon as any fully-assigned set lacks a unique
/// color: set `s` is checked at the moment its largest point is assigned.
pub(crate) fn min_conflict_free_colors(
    sets: &[Vec<usize>],
    n_points: usize,
    max_colors: u32,
) -> ExactCount {
    if n_points == 0 {
        debug_assert!(sets.is_empty());
        return ExactCount::Colors(0);
    }
    // triggers[i] lists the sets whose largest point is i.
    let mut triggers: Vec<Vec<usize>> = vec![Vec::new(); n_points];
    for (s, set) in sets.iter().enumerate() {
        let last = *set.iter().max().expect("sets are nonempty");
        triggers[last].push(s);
    }
    let mut colors = vec![0 as Color; n_points];
    for k in 1..=max_colors {
        if assign(0, 0, k, sets, &triggers, &mut colors) {
            return ExactCount::Colors(k);
        }
    }
    ExactCount::ExceedsMax
}

fn assign(
    point: usize,
    used: u32,
    k: u32,
    sets: &[Vec<usize>],
    triggers: &[Vec<usize>],
    colors: &mut Vec<Color>,
) -> bool {
    if point == colors.len() {
        return true;
    }
    let ceiling = k.min(used + 1);
    for c in 0..ceiling {
        colors[point] = c;
        let ok = triggers[point]
            .iter()
            .all(|&s| has_unique_color(&sets[s], colors));
        if ok && assign(point + 1, used.max(c + 1), k, sets, triggers, colors) {
            return true;
        }
    }
    false
}

fn has_unique_color(set: &[usize], colors: &[Color]) -> bool {
    set.iter().any(|&p| {
        let c = colors[p];
        set.iter().filter(|&&q| colors[q] == c).count() == 1
    })
}
