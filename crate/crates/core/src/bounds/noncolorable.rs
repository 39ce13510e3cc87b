//! Certificates that a graph has no interval coloring.

use serde::Serialize;

use super::invariants::Invariants;
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{chromatic_index, ChromaticIndex};

pub const DEFAULT_EDGE_BUDGET: usize = 40;

pub const EULERIAN_ODD: &str = "Eulerian graphs with an odd number of edges";
pub const EULERIAN_PRODUCT: &str =
    "Eulerian factor of odd order and even size times an Eulerian factor of odd size";
pub const CHROMATIC_INDEX: &str = "interval colorable graphs are class 1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub citation: &'static str,
    pub detail: String,
}

pub fn eulerian_odd(inv: &Invariants) -> Option<Obstruction> {
    (inv.edges > 0 && inv.is_eulerian() && inv.edges % 2 == 1).then(|| Obstruction {
        citation: EULERIAN_ODD,
        detail: format!("Eulerian with {} edges", inv.edges),
    })
}

/// `g` Eulerian of odd order and even size, `h` Eulerian of odd size: then
/// `g □ h` is not interval colorable.
pub fn eulerian_product(g: &Invariants, h: &Invariants) -> Option<Obstruction> {
    let g_ok = g.is_eulerian() && g.vertices % 2 == 1 && g.edges % 2 == 0;
    let h_ok = h.is_eulerian() && h.edges % 2 == 1;
    (g_ok && h_ok).then(|| Obstruction {
        citation: EULERIAN_PRODUCT,
        detail: format!(
            "|V(G)| = {}, |E(G)| = {}, |E(H)| = {}",
            g.vertices, g.edges, h.edges
        ),
    })
}

/// More edges than `Δ` matchings can hold forces `χ' > Δ`.
pub fn overfull(inv: &Invariants) -> Option<Obstruction> {
    (inv.max_degree > 0 && inv.edges > inv.max_degree * (inv.vertices / 2)).then(|| Obstruction {
        citation: CHROMATIC_INDEX,
        detail: format!(
            "{} edges exceed {} matchings of size {}",
            inv.edges,
            inv.max_degree,
            inv.vertices / 2
        ),
    })
}

pub fn test_eulerian_odd(g: &Graph) -> Result<Option<Obstruction>> {
    if !g.is_connected() {
        return Ok(None);
    }
    Ok(eulerian_odd(&Invariants::of_graph(g)?))
}

pub fn test_eulerian_product(g: &Graph, h: &Graph) -> Result<Option<Obstruction>> {
    if !g.is_connected() || !h.is_connected() {
        return Ok(None);
    }
    Ok(eulerian_product(
        &Invariants::of_graph(g)?,
        &Invariants::of_graph(h)?,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ChromaticTest {
    NotColorable {
        index: u32,
        max_degree: u32,
    },
    NoVerdict {
        index: u32,
    },
    /// More edges than the configured budget.
    Skipped {
        edges: usize,
    },
    Undecided {
        nodes: u64,
    },
}

impl ChromaticTest {
    pub fn obstruction(&self) -> Option<Obstruction> {
        match *self {
            ChromaticTest::NotColorable { index, max_degree } => Some(Obstruction {
                citation: CHROMATIC_INDEX,
                detail: format!("chromatic index {index} exceeds maximum degree {max_degree}"),
            }),
            _ => None,
        }
    }
}

/// Exact `χ'` search on graphs with at most `edge_budget` edges.
pub fn test_chromatic_index(
    g: &Graph,
    edge_budget: usize,
    node_budget: u64,
) -> Result<ChromaticTest> {
    if g.num_edges() > edge_budget {
        return Ok(ChromaticTest::Skipped {
            edges: g.num_edges(),
        });
    }
    let delta = g.max_degree() as u32;
    Ok(match chromatic_index(g, node_budget)? {
        ChromaticIndex::Exact(index) if index > delta => ChromaticTest::NotColorable {
            index,
            max_degree: delta,
        },
        ChromaticIndex::Exact(index) => ChromaticTest::NoVerdict { index },
        ChromaticIndex::Undecided { nodes } => ChromaticTest::Undecided { nodes },
    })
}
