//! The JSON coloring document: what `color` writes and `verify` reads.
//!
//! `verify` only needs `n` and `colors`, so the ledger and stats blocks
//! are optional on input (hand-written documents can omit them); `color`
//! always writes the full document.

use cfcn_core::{CfcnColoring, CfcnRunStats};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringDocument {
    pub n: usize,
    pub colors: Vec<u32>,
    #[serde(default)]
    pub ledger: LedgerDoc,
    #[serde(default)]
    pub stats: StatsDoc,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct LedgerDoc {
    pub layer_colors: RangeDoc,
    pub hypergraph_colors: RangeDoc,
    pub fresh_color: Option<u32>,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct RangeDoc {
    pub start: u32,
    pub end: u32,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct StatsDoc {
    pub k_target: u32,
    pub layers: u32,
    #[serde(rename = "K")]
    pub palette: u32,
    pub doublings: u32,
    pub rounds: u64,
    pub total_colors: u32,
    pub seed: u64,
}

impl ColoringDocument {
    pub fn from_run(coloring: &CfcnColoring, stats: &CfcnRunStats) -> Self {
        ColoringDocument {
            n: coloring.colors.len(),
            colors: coloring.colors.clone(),
            ledger: LedgerDoc {
                layer_colors: RangeDoc {
                    start: coloring.ledger.layer_colors.start,
                    end: coloring.ledger.layer_colors.end,
                },
                hypergraph_colors: RangeDoc {
                    start: coloring.ledger.hypergraph_colors.start,
                    end: coloring.ledger.hypergraph_colors.end,
                },
                fresh_color: coloring.ledger.fresh_color,
            },
            stats: StatsDoc {
                k_target: stats.k_target,
                layers: stats.layers,
                palette: stats.palette,
                doublings: stats.doublings,
                rounds: stats.rounds,
                total_colors: stats.total_colors,
                seed: stats.seed,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}
