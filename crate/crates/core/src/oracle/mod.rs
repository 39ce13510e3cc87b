//! Exhaustive search for interval colorings of small graphs.
//!
//! [`search`] decides a single palette size. [`feasible_spectrum`] runs it
//! for every candidate `t` between `Δ` and an upper bound and keeps one
//! witness per feasible `t`. Budget exhaustion is always reported as such,
//! never folded into "infeasible".

mod chromatic;
mod interval;

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub use chromatic::{chromatic_index, proper_edge_coloring, ChromaticIndex, ProperOutcome};
pub use interval::search;

use crate::bounds::{ub_asratian_kamalian, ub_triangle_free};
use crate::coloring::{io::ColoringJson, EdgeColoring};
use crate::error::Result;
use crate::graph::io::GraphJson;
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const BUDGET_ENV: &str = "INTERCOL_BUDGET";

/// `INTERCOL_BUDGET` when set to a valid integer, else [`DEFAULT_BUDGET`].
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of color assignments tried.
    pub budget: u64,
    /// Interval-window propagation, forward checking and the color cover
    /// test. Without it only properness is checked during the search.
    pub pruning: bool,
    /// Restricts the first edge to the lower half of the palette, using the
    /// reversal `c -> t + 1 - c`.
    pub symmetry_breaking: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: default_budget(),
            pruning: true,
            symmetry_breaking: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    Exhausted,
    BudgetExceeded { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub t: u32,
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumStatus {
    /// Every candidate decided and at least one feasible.
    Complete,
    /// Every candidate decided and none feasible.
    NotColorable,
    BudgetExceeded,
}

/// Minimum or maximum of the feasible set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremum {
    Value(u32),
    NotColorable,
    /// An undecided palette could change the answer.
    Undecided,
}

#[derive(Clone, Debug)]
pub struct FeasibleSpectrum {
    pub graph: Arc<Graph>,
    /// Candidates checked, inclusive.
    pub range: (u32, u32),
    pub entries: Vec<SpectrumEntry>,
}

impl FeasibleSpectrum {
    pub fn feasible(&self) -> Vec<u32> {
        self.entries
            .iter()
            .filter(|e| matches!(e.outcome, SearchOutcome::Found(_)))
            .map(|e| e.t)
            .collect()
    }

    pub fn infeasible(&self) -> Vec<u32> {
        self.entries
            .iter()
            .filter(|e| e.outcome == SearchOutcome::Exhausted)
            .map(|e| e.t)
            .collect()
    }

    pub fn undecided(&self) -> Vec<u32> {
        self.entries
            .iter()
            .filter(|e| matches!(e.outcome, SearchOutcome::BudgetExceeded { .. }))
            .map(|e| e.t)
            .collect()
    }

    pub fn witness(&self, t: u32) -> Option<&EdgeColoring> {
        self.entries.iter().find_map(|e| match &e.outcome {
            SearchOutcome::Found(c) if e.t == t => Some(c),
            _ => None,
        })
    }

    pub fn status(&self) -> SpectrumStatus {
        if !self.undecided().is_empty() {
            SpectrumStatus::BudgetExceeded
        } else if self.feasible().is_empty() {
            SpectrumStatus::NotColorable
        } else {
            SpectrumStatus::Complete
        }
    }

    pub fn min(&self) -> Extremum {
        self.extremum(self.feasible().first().copied(), |t, u| u < t)
    }

    pub fn max(&self) -> Extremum {
        self.extremum(self.feasible().last().copied(), |t, u| u > t)
    }

    /// `beyond(t, u)` says whether an undecided `u` lies on the far side of `t`.
    fn extremum(&self, best: Option<u32>, beyond: impl Fn(u32, u32) -> bool) -> Extremum {
        let undecided = self.undecided();
        match best {
            Some(t) if !undecided.iter().any(|&u| beyond(t, u)) => Extremum::Value(t),
            None if undecided.is_empty() => Extremum::NotColorable,
            _ => Extremum::Undecided,
        }
    }

    /// `{"graph": .., "range": [lo, hi], "feasible": [{"t": .., "witness": ..}],
    /// "infeasible": [..], "undecided": [..], "status": ..}`
    pub fn to_json(&self) -> Value {
        let feasible: Vec<Value> = self
            .entries
            .iter()
            .filter_map(|e| match &e.outcome {
                SearchOutcome::Found(c) => {
                    Some(json!({"t": e.t, "witness": ColoringJson::from(c)}))
                }
                _ => None,
            })
            .collect();
        json!({
            "graph": GraphJson::from(self.graph.as_ref()),
            "range": [self.range.0, self.range.1],
            "feasible": feasible,
            "infeasible": self.infeasible(),
            "undecided": self.undecided(),
            "status": self.status(),
        })
    }
}

/// Largest palette worth trying: the diameter bound, the triangle-free
/// bound when it applies, and `|E|`.
pub fn default_t_max(g: &Graph) -> Result<u32> {
    let delta = g.max_degree() as i64;
    let diam = g.diameter()? as i64;
    let mut t = ub_asratian_kamalian(diam, delta, g.is_bipartite());
    if g.is_triangle_free() {
        t = t.min(ub_triangle_free(g.num_vertices() as i64));
    }
    t = t
        .min(g.num_edges() as i64)
        .min(interval::MAX_PALETTE as i64);
    Ok(t.max(0) as u32)
}

/// Runs [`search`] for every `t` in `[max(Δ, 1), t_max]` in parallel.
pub fn feasible_spectrum(
    g: &Arc<Graph>,
    t_max: Option<u32>,
    opts: &SearchOptions,
) -> Result<FeasibleSpectrum> {
    let lo = (g.max_degree() as u32).max(1);
    let hi = match t_max {
        Some(t) => t.min(interval::MAX_PALETTE),
        None => default_t_max(g)?,
    };
    let entries = (lo..=hi)
        .into_par_iter()
        .map(|t| {
            search(g, t, opts).map(|r| SpectrumEntry {
                t,
                outcome: r.outcome,
                nodes: r.nodes,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FeasibleSpectrum {
        graph: Arc::clone(g),
        range: (lo, hi),
        entries,
    })
}

#[allow(non_snake_case)]
pub fn exact_W(g: &Arc<Graph>, opts: &SearchOptions) -> Result<Extremum> {
    Ok(feasible_spectrum(g, None, opts)?.max())
}

pub fn exact_w(g: &Arc<Graph>, opts: &SearchOptions) -> Result<Extremum> {
    Ok(feasible_spectrum(g, None, opts)?.min())
}
