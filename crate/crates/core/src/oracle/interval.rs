use std::sync::Arc;

use super::{SearchOptions, SearchOutcome, SearchResult};
use crate::coloring::{verify_interval, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

pub(crate) const MAX_PALETTE: u32 = 128;

/// Bit `c - 1` stands for color `c`.
fn color_range(a: u32, b: u32) -> u128 {
    if a > b || b == 0 {
        return 0;
    }
    let below_b = if b >= 128 {
        u128::MAX
    } else {
        (1u128 << b) - 1
    };
    let below_a = (1u128 << (a - 1)) - 1;
    below_b & !below_a
}

/// Decides whether `g` has an interval `t`-coloring.
pub fn search(g: &Arc<Graph>, t: u32, opts: &SearchOptions) -> Result<SearchResult> {
    g.require_connected()?;
    if t == 0 || t > MAX_PALETTE {
        return Err(Error::Parameter(format!(
            "palette size must be in 1..={MAX_PALETTE}, got {t}"
        )));
    }
    let m = g.num_edges();
    if (t as usize) < g.max_degree() || t as usize > m {
        return Ok(SearchResult {
            outcome: SearchOutcome::Exhausted,
            nodes: 0,
        });
    }
    let mut s = Solver::new(g, t, opts);
    let found = s.descend(0);
    let nodes = s.nodes;
    let outcome = match found {
        Some(true) => {
            let colors = s.color.clone();
            let c = EdgeColoring::new(Arc::clone(g), t, colors)?;
            let cert = verify_interval(&c);
            if !cert.is_valid() {
                return Err(Error::ConstructionInvariant(format!(
                    "search produced an invalid witness: {cert:?}"
                )));
            }
            SearchOutcome::Found(c)
        }
        Some(false) => SearchOutcome::Exhausted,
        None => SearchOutcome::BudgetExceeded { nodes },
    };
    Ok(SearchResult { outcome, nodes })
}

/// Edges by BFS layer from vertex 0, ties by edge id.
fn edge_order(g: &Graph) -> Vec<EdgeId> {
    let level = g.bfs(0);
    let mut order: Vec<EdgeId> = (0..g.num_edges()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        (level[u].max(level[v]), level[u].min(level[v]), e)
    });
    order
}

struct Solver<'a> {
    g: &'a Graph,
    t: u32,
    pruning: bool,
    symmetry: bool,
    budget: u64,
    nodes: u64,
    order: Vec<EdgeId>,
    incident: Vec<Vec<EdgeId>>,
    color: Vec<u32>,
    used: Vec<u128>,
    lo: Vec<u32>,
    hi: Vec<u32>,
    count: Vec<u32>,
    deg: Vec<u32>,
    color_count: Vec<u32>,
    missing: u32,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, t: u32, opts: &SearchOptions) -> Self {
        let n = g.num_vertices();
        let order = edge_order(g);
        Solver {
            g,
            t,
            pruning: opts.pruning,
            symmetry: opts.symmetry_breaking,
            budget: opts.budget,
            nodes: 0,
            order,
            incident: (0..n).map(|v| g.incident_edges(v).collect()).collect(),
            color: vec![0; g.num_edges()],
            used: vec![0; n],
            lo: vec![0; n],
            hi: vec![0; n],
            count: vec![0; n],
            deg: (0..n).map(|v| g.degree(v) as u32).collect(),
            color_count: vec![0; t as usize + 1],
            missing: t,
        }
    }

    /// Colors a vertex may still take on a new edge.
    fn window(&self, x: usize) -> u128 {
        if !self.pruning || self.count[x] == 0 {
            return color_range(1, self.t);
        }
        let d = self.deg[x];
        let a = (self.hi[x] + 1).saturating_sub(d).max(1);
        let b = (self.lo[x] + d - 1).min(self.t);
        color_range(a, b)
    }

    fn domain(&self, e: EdgeId) -> u128 {
        let (u, v) = self.g.edge(e);
        self.window(u) & self.window(v) & !self.used[u] & !self.used[v]
    }

    fn assign(&mut self, e: EdgeId, c: u32) -> [(u32, u32); 2] {
        let (u, v) = self.g.edge(e);
        let saved = [(self.lo[u], self.hi[u]), (self.lo[v], self.hi[v])];
        for x in [u, v] {
            self.used[x] |= 1u128 << (c - 1);
            if self.count[x] == 0 {
                self.lo[x] = c;
                self.hi[x] = c;
            } else {
                self.lo[x] = self.lo[x].min(c);
                self.hi[x] = self.hi[x].max(c);
            }
            self.count[x] += 1;
        }
        self.color[e] = c;
        if self.color_count[c as usize] == 0 {
            self.missing -= 1;
        }
        self.color_count[c as usize] += 1;
        saved
    }

    fn unassign(&mut self, e: EdgeId, c: u32, saved: [(u32, u32); 2]) {
        let (u, v) = self.g.edge(e);
        for (x, (lo, hi)) in [u, v].into_iter().zip(saved) {
            self.used[x] &= !(1u128 << (c - 1));
            self.count[x] -= 1;
            self.lo[x] = lo;
            self.hi[x] = hi;
        }
        self.color[e] = 0;
        self.color_count[c as usize] -= 1;
        if self.color_count[c as usize] == 0 {
            self.missing += 1;
        }
    }

    /// Cheap necessary conditions after placing the edge at position `pos`.
    fn consistent(&self, pos: usize, e: EdgeId) -> bool {
        let remaining = self.order.len() - pos - 1;
        if self.missing as usize > remaining {
            return false;
        }
        if !self.pruning {
            return true;
        }
        let (u, v) = self.g.edge(e);
        for x in [u, v] {
            for &f in &self.incident[x] {
                if self.color[f] == 0 && self.domain(f) == 0 {
                    return false;
                }
            }
        }
        if self.missing > 0 {
            let mut missing_mask = 0u128;
            for c in 1..=self.t {
                if self.color_count[c as usize] == 0 {
                    missing_mask |= 1u128 << (c - 1);
                }
            }
            let mut cover = 0u128;
            for &f in &self.order[pos + 1..] {
                cover |= self.domain(f);
                if missing_mask & !cover == 0 {
                    return true;
                }
            }
            return false;
        }
        true
    }

    /// `Some(true)` when a coloring is completed, `Some(false)` when the
    /// subtree is exhausted, `None` when the budget runs out.
    fn descend(&mut self, pos: usize) -> Option<bool> {
        if pos == self.order.len() {
            return Some(self.missing == 0 && (self.pruning || self.leaf_is_interval()));
        }
        let e = self.order[pos];
        let mut dom = self.domain(e);
        if self.symmetry && pos == 0 {
            dom &= color_range(1, self.t.div_ceil(2));
        }
        while dom != 0 {
            let c = dom.trailing_zeros() + 1;
            dom &= dom - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let saved = self.assign(e, c);
            if self.consistent(pos, e) {
                match self.descend(pos + 1) {
                    Some(true) => return Some(true),
                    None => {
                        self.unassign(e, c, saved);
                        return None;
                    }
                    Some(false) => {}
                }
            }
            self.unassign(e, c, saved);
        }
        Some(false)
    }

    fn leaf_is_interval(&self) -> bool {
        (0..self.g.num_vertices())
            .all(|x| self.count[x] == 0 || self.hi[x] - self.lo[x] + 1 == self.deg[x])
    }
}
