//! Simple undirected graphs with structured vertex labels.
//!
//! Vertices are stored in canonical (sorted label) order and addressed by
//! their index in that order. Edges are stored as `(u, v)` index pairs with
//! `u < v`, sorted lexicographically, and addressed by their position.

mod descriptor;
pub(crate) mod family;
pub mod io;
mod label;
mod metrics;
pub(crate) mod product;

use std::collections::HashMap;

pub use descriptor::Descriptor;
pub use family::{generate, Family};
pub use label::VertexLabel;
pub use metrics::{DistanceTable, LevelDecomposition, StructureReport};
pub use product::{cartesian_product, cartesian_product_all};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, VertexId>,
    adj: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from labels and label pairs. Rejects loops, parallel
    /// edges, duplicate vertices and edges with unknown endpoints.
    pub fn from_labels<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexLabel>,
        E: IntoIterator<Item = (VertexLabel, VertexLabel)>,
    {
        let mut labels: Vec<VertexLabel> = vertices.into_iter().collect();
        labels.sort();
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(Error::MalformedGraph(format!("duplicate vertex {}", w[0])));
            }
        }
        let index: HashMap<VertexLabel, VertexId> = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();

        let mut pairs = Vec::new();
        for (a, b) in edges {
            let u = *index
                .get(&a)
                .ok_or_else(|| Error::UnknownVertex(a.clone()))?;
            let v = *index
                .get(&b)
                .ok_or_else(|| Error::UnknownVertex(b.clone()))?;
            if u == v {
                return Err(Error::MalformedGraph(format!("loop at {a}")));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::MalformedGraph(format!(
                    "parallel edge {}-{}",
                    labels[w[0].0], labels[w[0].1]
                )));
            }
        }
        Ok(Self::from_sorted_parts(labels, index, pairs))
    }

    /// Builds from integer-labelled vertices `0..n` and index pairs.
    pub fn from_index_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph> {
        let labels = (0..n).map(VertexLabel::from);
        let edges: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| (VertexLabel::from(a), VertexLabel::from(b)))
            .collect();
        Graph::from_labels(labels, edges)
    }

    fn from_sorted_parts(
        labels: Vec<VertexLabel>,
        index: HashMap<VertexLabel, VertexId>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Graph {
        let mut adj = vec![Vec::new(); labels.len()];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            edge_index.insert((u, v), id);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            labels,
            index,
            adj,
            edges,
            edge_index,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &VertexLabel) -> Result<VertexId> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.clone()))
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn edge_by_labels(&self, a: &VertexLabel, b: &VertexLabel) -> Result<EdgeId> {
        let u = self.vertex(a)?;
        let v = self.vertex(b)?;
        self.edge_id(u, v)
            .ok_or_else(|| Error::UnknownEdge(a.clone(), b.clone()))
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edge ids incident to `v`, in neighbor order.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj[v]
            .iter()
            .map(move |&w| self.edge_id(v, w).expect("adjacency is consistent"))
    }

    /// Rebuilds the graph under an injective relabelling.
    pub fn relabel(&self, f: impl Fn(&VertexLabel) -> VertexLabel) -> Result<Graph> {
        let labels: Vec<_> = self.labels.iter().map(&f).collect();
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (labels[u].clone(), labels[v].clone()));
        Graph::from_labels(labels.clone(), edges.collect::<Vec<_>>())
    }

    /// Subgraph induced by the given vertex set.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut keep = vec![false; self.num_vertices()];
        for &v in vertices {
            keep[v] = true;
        }
        let labels: Vec<_> = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect();
        Graph::from_labels(labels, edges).expect("induced subgraph of a valid graph is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(matches!(
            Graph::from_index_edges(2, [(0, 0)]),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            Graph::from_index_edges(2, [(0, 1), (1, 0)]),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            Graph::from_index_edges(2, [(0, 2)]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn canonical_order_is_label_order() {
        let g = Graph::from_labels(
            [
                VertexLabel::Int(5),
                VertexLabel::Int(-1),
                VertexLabel::Int(2),
            ],
            [(VertexLabel::Int(5), VertexLabel::Int(-1))],
        )
        .unwrap();
        assert_eq!(
            g.labels(),
            &[
                VertexLabel::Int(-1),
                VertexLabel::Int(2),
                VertexLabel::Int(5)
            ]
        );
        assert_eq!(g.edges(), &[(0, 2)]);
        assert_eq!(g.degree(1), 0);
    }
}
