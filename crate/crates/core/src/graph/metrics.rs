use std::borrow::Cow;
use std::collections::VecDeque;

use serde::Serialize;

use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

pub const UNREACHABLE: u32 = u32::MAX;

/// Graphs up to this order get a dense all-pairs table.
const DENSE_LIMIT: usize = 4096;

impl Graph {
    /// Breadth-first distances from `src`; unreachable vertices get `u32::MAX`.
    pub fn bfs(&self, src: VertexId) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.num_vertices()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// All-pairs distances. Dense for small graphs, BFS per query otherwise.
    pub fn distances(&self) -> Result<DistanceTable<'_>> {
        self.require_connected()?;
        let n = self.num_vertices();
        let dense = (n <= DENSE_LIMIT).then(|| {
            let mut table = Vec::with_capacity(n * n);
            for v in 0..n {
                table.extend(self.bfs(v));
            }
            table
        });
        Ok(DistanceTable { graph: self, dense })
    }

    pub fn eccentricity(&self, v: VertexId) -> Result<u32> {
        self.require_connected()?;
        Ok(self.bfs(v).into_iter().max().unwrap_or(0))
    }

    pub fn diameter(&self) -> Result<u32> {
        self.require_connected()?;
        Ok((0..self.num_vertices())
            .map(|v| self.bfs(v).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }

    pub fn edge_diameter(&self) -> Result<u32> {
        Ok(self.distances()?.edge_diameter())
    }

    /// Distance classes and edge layers around `root`.
    pub fn level_decomposition(&self, root: VertexId) -> Result<LevelDecomposition> {
        if root >= self.num_vertices() {
            return Err(Error::Parameter(format!("root index {root} out of range")));
        }
        self.require_connected()?;
        let level = self.bfs(root);
        let ecc = level.iter().copied().max().unwrap_or(0) as usize;
        let mut levels = vec![Vec::new(); ecc + 1];
        for (v, &d) in level.iter().enumerate() {
            levels[d as usize].push(v);
        }
        let mut edge_layers = vec![Vec::new(); ecc];
        for (e, &(u, v)) in self.edges().iter().enumerate() {
            let i = level[u].max(level[v]) as usize;
            edge_layers[i - 1].push(e);
        }
        Ok(LevelDecomposition {
            root,
            level,
            levels,
            edge_layers,
        })
    }

    /// Vertices lying on some shortest `u`-`v` path, in canonical order.
    pub fn vertex_interval(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
        self.require_connected()?;
        let from_u = self.bfs(u);
        let from_v = self.bfs(v);
        let d = from_u[v];
        Ok((0..self.num_vertices())
            .filter(|&w| from_u[w] + from_v[w] == d)
            .collect())
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.num_vertices()];
        for s in 0..self.num_vertices() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.neighbors(0).len();
        (0..self.num_vertices())
            .all(|v| self.degree(v) == d)
            .then_some(d)
    }

    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && (0..self.num_vertices()).all(|v| self.degree(v).is_multiple_of(2))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().iter().all(|&(u, v)| {
            let (a, b) = (self.neighbors(u), self.neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    pub fn structure(&self) -> StructureReport {
        StructureReport {
            is_bipartite: self.is_bipartite(),
            regular_degree: if self.num_vertices() == 0 {
                None
            } else {
                self.regular_degree()
            },
            is_eulerian: self.is_eulerian(),
            is_triangle_free: self.is_triangle_free(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub is_bipartite: bool,
    /// `Some(d)` when every vertex has degree `d`.
    pub regular_degree: Option<usize>,
    pub is_eulerian: bool,
    pub is_triangle_free: bool,
}

pub struct DistanceTable<'g> {
    graph: &'g Graph,
    dense: Option<Vec<u32>>,
}

impl<'g> DistanceTable<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn row(&self, u: VertexId) -> Cow<'_, [u32]> {
        let n = self.graph.num_vertices();
        match &self.dense {
            Some(t) => Cow::Borrowed(&t[u * n..(u + 1) * n]),
            None => Cow::Owned(self.graph.bfs(u)),
        }
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        match &self.dense {
            Some(t) => t[u * self.graph.num_vertices() + v],
            None => self.graph.bfs(u)[v],
        }
    }

    pub fn eccentricity(&self, v: VertexId) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.graph.num_vertices())
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(0)
    }

    /// Minimum endpoint distance between two edges.
    pub fn edge_distance(&self, e: EdgeId, f: EdgeId) -> u32 {
        let (a, b) = self.graph.edge(e);
        let (c, d) = self.graph.edge(f);
        self.get(a, c)
            .min(self.get(a, d))
            .min(self.get(b, c))
            .min(self.get(b, d))
    }

    pub fn edge_diameter(&self) -> u32 {
        let m = self.graph.num_edges();
        let mut best = 0;
        for e in 0..m {
            for f in e + 1..m {
                best = best.max(self.edge_distance(e, f));
            }
        }
        best
    }
}

/// Distance classes `N_0..N_ecc` around a root and the edge layers
/// `E_1..E_ecc`, where `E_i` holds the edges whose farther endpoint is in `N_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub root: VertexId,
    /// Distance of each vertex from the root.
    pub level: Vec<u32>,
    pub levels: Vec<Vec<VertexId>>,
    /// `edge_layers[i - 1]` is `E_i`.
    pub edge_layers: Vec<Vec<EdgeId>>,
}

impl LevelDecomposition {
    pub fn eccentricity(&self) -> u32 {
        (self.levels.len() - 1) as u32
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.edge_layers.iter().map(Vec::len).collect()
    }

    /// Index `i` of the layer `E_i` containing an edge.
    pub fn layer_of(&self, g: &Graph, e: EdgeId) -> u32 {
        let (u, v) = g.edge(e);
        self.level[u].max(self.level[v])
    }
}
