use serde::Serialize;

use crate::error::Result;
use crate::graph::{EdgeId, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProperOutcome {
    /// Colors by edge id, each in `1..=k`.
    Found(Vec<u32>),
    Exhausted,
    BudgetExceeded {
        nodes: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChromaticIndex {
    Exact(u32),
    Undecided { nodes: u64 },
}

/// Exact chromatic index: a `Δ`-coloring is searched for, and `Δ + 1` is
/// returned when none exists.
pub fn chromatic_index(g: &Graph, budget: u64) -> Result<ChromaticIndex> {
    let delta = g.max_degree() as u32;
    if delta == 0 {
        return Ok(ChromaticIndex::Exact(0));
    }
    Ok(match proper_edge_coloring(g, delta, budget) {
        ProperOutcome::Found(_) => ChromaticIndex::Exact(delta),
        ProperOutcome::Exhausted => ChromaticIndex::Exact(delta + 1),
        ProperOutcome::BudgetExceeded { nodes } => ChromaticIndex::Undecided { nodes },
    })
}

/// Backtracking proper edge coloring with `k` colors. The most constrained
/// edge is colored first and only one unused color is ever tried.
pub fn proper_edge_coloring(g: &Graph, k: u32, budget: u64) -> ProperOutcome {
    let m = g.num_edges();
    // each color class is a matching
    if (k as usize) < g.max_degree() || m > k as usize * (g.num_vertices() / 2) {
        return ProperOutcome::Exhausted;
    }
    if k > 128 {
        return ProperOutcome::Exhausted;
    }
    let mut s = Proper {
        g,
        full: if k == 128 {
            u128::MAX
        } else {
            (1u128 << k) - 1
        },
        color: vec![0; m],
        used: vec![0; g.num_vertices()],
        incident: (0..g.num_vertices())
            .map(|v| g.incident_edges(v).collect())
            .collect(),
        nodes: 0,
        budget,
    };
    match s.descend(m, 0) {
        Some(true) => ProperOutcome::Found(s.color),
        Some(false) => ProperOutcome::Exhausted,
        None => ProperOutcome::BudgetExceeded { nodes: s.nodes },
    }
}

struct Proper<'a> {
    g: &'a Graph,
    full: u128,
    color: Vec<u32>,
    used: Vec<u128>,
    incident: Vec<Vec<EdgeId>>,
    nodes: u64,
    budget: u64,
}

impl Proper<'_> {
    fn available(&self, e: EdgeId) -> u128 {
        let (u, v) = self.g.edge(e);
        self.full & !self.used[u] & !self.used[v]
    }

    fn pick(&self) -> Option<(EdgeId, u128)> {
        let mut best: Option<(EdgeId, u128, u32)> = None;
        for e in 0..self.color.len() {
            if self.color[e] != 0 {
                continue;
            }
            let avail = self.available(e);
            let n = avail.count_ones();
            if best.is_none_or(|(_, _, b)| n < b) {
                best = Some((e, avail, n));
                if n == 0 {
                    break;
                }
            }
        }
        best.map(|(e, a, _)| (e, a))
    }

    fn descend(&mut self, left: usize, max_used: u32) -> Option<bool> {
        if left == 0 {
            return Some(true);
        }
        let (e, mut avail) = self.pick().expect("an uncolored edge remains");
        // colors above max_used + 1 are interchangeable with max_used + 1
        let cap = max_used + 1;
        avail &= if cap >= 128 {
            u128::MAX
        } else {
            (1u128 << cap) - 1
        };
        let (u, v) = self.g.edge(e);
        while avail != 0 {
            let c = avail.trailing_zeros() + 1;
            avail &= avail - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let bit = 1u128 << (c - 1);
            self.color[e] = c;
            self.used[u] |= bit;
            self.used[v] |= bit;
            let dead = [u, v].iter().any(|&x| {
                self.incident[x]
                    .iter()
                    .any(|&f| self.color[f] == 0 && self.available(f) == 0)
            });
            let result = if dead {
                Some(false)
            } else {
                self.descend(left - 1, max_used.max(c))
            };
            if result == Some(true) {
                return result;
            }
            self.color[e] = 0;
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            result?;
        }
        Some(false)
    }
}
