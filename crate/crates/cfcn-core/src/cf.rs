//! Randomized conflict-free coloring of hypergraphs by resampling.
//!
//! For a hypergraph whose edges all have at least `2t − 1` points and whose
//! pairwise edge intersections have at most `Γ` points, a palette of
//! `O(t · Γ^(1/t) · log Γ)` colors admits a conflict-free coloring, and the
//! local-lemma regime makes the simplest constructive strategy work: color
//! every point uniformly at random, then repeatedly pick the lowest-index
//! violated edge and resample just its points until no violation remains.
//! [`cf_color`] adds a safety net for parameter choices outside that
//! regime: when the round budget runs out it restarts with a doubled
//! palette (fresh stream, derived seed), up to a bounded number of times.

use alloc::vec::Vec;
use core::fmt;

use libm::{ceil, log2, pow};

use crate::hypergraph::Hypergraph;
use crate::sample;

pub type Color = u32;

/// Default palette constant; generous enough that doubling is rare.
pub const DEFAULT_C1: f64 = 4.0;

/// Parameters of one conflict-free coloring run.
#[derive(Clone, Debug, PartialEq)]
pub struct CfParams {
    /// Uniformity scale: edges are expected to carry at least `2t − 1`
    /// points. Must be at least 1.
    pub t: u32,
    /// Bound on pairwise edge intersections. Must be at least 2.
    pub gamma: u64,
    /// Multiplier on the palette formula.
    pub c1: f64,
    /// Resample budget per attempt: `max_rounds_factor × (edges + 1)`.
    pub max_rounds_factor: u64,
    /// How many palette doublings to try after the first attempt.
    pub max_doublings: u32,
}

impl CfParams {
    pub fn new(t: u32, gamma: u64) -> Self {
        CfParams {
            t: t.max(1),
            gamma: gamma.max(2),
            c1: DEFAULT_C1,
            max_rounds_factor: 1000,
            max_doublings: 10,
        }
    }

    pub fn with_c1(mut self, c1: f64) -> Self {
        self.c1 = c1;
        self
    }
}

/// Starting palette size: `max(2, ⌈c1 · t · Γ^(1/t) · log2 Γ⌉)`.
pub fn palette_size(p: &CfParams) -> u32 {
    let t = p.t as f64;
    let gamma = p.gamma as f64;
    let raw = ceil(p.c1 * t * pow(gamma, 1.0 / t) * log2(gamma));
    if raw < 2.0 {
        2
    } else if raw >= u32::MAX as f64 {
        u32::MAX
    } else {
        raw as u32
    }
}

/// A successful conflict-free coloring, with the budget actually spent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfColoring {
    /// One color per point, following the point set's ascending order.
    pub colors: Vec<Color>,
    /// Palette size of the successful attempt.
    pub palette: u32,
    /// Resample rounds consumed, summed over all attempts.
    pub rounds: u64,
    /// Palette doublings before the successful attempt (0 = first try).
    pub doublings: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfError {
    /// Rounds consumed over all attempts.
    pub rounds: u64,
    /// Doublings tried before giving up.
    pub doublings: u32,
    /// Palette size of the final attempt.
    pub palette: u32,
    /// Violated edges remaining when the budget ran out.
    pub last_violations: usize,
}

impl fmt::Display for CfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "resample budget exhausted: {} rounds over {} doublings \
             (final palette {}, {} violated edges remained)",
            self.rounds, self.doublings, self.palette, self.last_violations
        )
    }
}

impl core::error::Error for CfError {}

/// Colors the points of `h` conflict-freely. Deterministic in
/// `(h, params, seed)`, including the reported round count.
pub fn cf_color(h: &Hypergraph, params: &CfParams, seed: u64) -> Result<CfColoring, CfError> {
    let n = h.points().len();
    let edges = h.edge_point_indices();
    let max_rounds = params.max_rounds_factor * (edges.len() as u64 + 1);
    let base = palette_size(params);

    let mut total_rounds = 0u64;
    let mut palette = base;
    let mut last_violations = 0usize;
    for attempt in 0..=params.max_doublings {
        palette = ((base as u64) << attempt).min(u32::MAX as u64) as u32;
        let mut rng = sample::seeded(sample::restart_seed(seed, attempt));
        let mut colors: Vec<Color> = (0..n)
            .map(|_| sample::uniform_u32(&mut rng, palette))
            .collect();
        let mut spent = 0u64;
        loop {
            match edges.iter().position(|e| !edge_satisfied(e, &colors)) {
                None => {
                    return Ok(CfColoring {
                        colors,
                        palette,
                        rounds: total_rounds,
                        doublings: attempt,
                    });
                }
                Some(bad) => {
                    if spent == max_rounds {
                        last_violations =
                            edges.iter().filter(|e| !edge_satisfied(e, &colors)).count();
                        break;
                    }
                    for &p in &edges[bad] {
                        colors[p] = sample::uniform_u32(&mut rng, palette);
                    }
                    spent += 1;
                    total_rounds += 1;
                }
            }
        }
    }

    Err(CfError {
        rounds: total_rounds,
        doublings: params.max_doublings,
        palette,
        last_violations,
    })
}

/// An edge is satisfied when some point's color appears exactly once in
/// it. (Deliberately written as a direct count, independent of the
/// verifier's sorted-run scan.)
fn edge_satisfied(edge: &[usize], colors: &[Color]) -> bool {
    edge.iter().any(|&p| {
        let c = colors[p];
        edge.iter().filter(|&&q| colors[q] == c).count() == 1
    })
}
