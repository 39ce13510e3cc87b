//! Edge colorings, vertex spectra and interval verification.
//!
//! Colors are 1-based. A coloring always carries its declared palette size
//! `t`; whether it is a valid interval `t`-coloring is decided by
//! [`verify_interval`].

pub mod io;
mod separable;
mod span;
mod verify;

use std::sync::Arc;

use serde::Serialize;

pub use separable::{is_separable, split_spectrum, ExtColor, Separability, SplitSpectrum};
pub use span::{edge_span, edge_span_at_distance, edge_spans_by_distance};
pub use verify::{
    verify_interval, verify_interval_with, verify_lemma1, ColoringCertificate, Verdict, VerifyMode,
    Witness,
};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId, VertexLabel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: Arc<Graph>,
    t: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// `colors` is indexed by edge id. Values are not range-checked here;
    /// out-of-range colors are reported by the verifier.
    pub fn new(graph: Arc<Graph>, t: u32, colors: Vec<u32>) -> Result<Self> {
        if t == 0 {
            return Err(Error::Parameter("palette size must be positive".into()));
        }
        if colors.len() != graph.num_edges() {
            return Err(Error::Parameter(format!(
                "coloring has {} entries for {} edges",
                colors.len(),
                graph.num_edges()
            )));
        }
        Ok(EdgeColoring { graph, t, colors })
    }

    pub fn from_fn(graph: Arc<Graph>, t: u32, f: impl Fn(EdgeId) -> u32) -> Result<Self> {
        let colors = (0..graph.num_edges()).map(f).collect();
        EdgeColoring::new(graph, t, colors)
    }

    /// Builds from `(label, label, color)` triples covering every edge once.
    pub fn from_triples(
        graph: Arc<Graph>,
        t: u32,
        triples: impl IntoIterator<Item = (VertexLabel, VertexLabel, u32)>,
    ) -> Result<Self> {
        let mut colors = vec![None; graph.num_edges()];
        for (a, b, c) in triples {
            let e = graph.edge_by_labels(&a, &b)?;
            if colors[e].replace(c).is_some() {
                return Err(Error::Parameter(format!("edge {a}-{b} colored twice")));
            }
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(e, c)| {
                c.ok_or_else(|| {
                    let (u, v) = graph.edge(e);
                    Error::Parameter(format!(
                        "edge {}-{} is not colored",
                        graph.label(u),
                        graph.label(v)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        EdgeColoring::new(graph, t, colors)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> u32 {
        self.colors[e]
    }

    pub fn color_between(&self, u: VertexId, v: VertexId) -> Option<u32> {
        self.graph.edge_id(u, v).map(|e| self.colors[e])
    }

    pub fn color_by_labels(&self, a: &VertexLabel, b: &VertexLabel) -> Result<u32> {
        Ok(self.colors[self.graph.edge_by_labels(a, b)?])
    }

    pub fn min_color(&self) -> Option<u32> {
        self.colors.iter().copied().min()
    }

    pub fn max_color(&self) -> Option<u32> {
        self.colors.iter().copied().max()
    }

    pub fn spectrum(&self, v: VertexId) -> VertexSpectrum {
        let mut colors: Vec<u32> = self
            .graph
            .incident_edges(v)
            .map(|e| self.colors[e])
            .collect();
        colors.sort_unstable();
        VertexSpectrum { vertex: v, colors }
    }

    pub fn spectrum_of(&self, label: &VertexLabel) -> Result<VertexSpectrum> {
        Ok(self.spectrum(self.graph.vertex(label)?))
    }

    /// Shifts colors so the smallest is 1 and sets `t` to the largest.
    pub fn normalized(&self) -> EdgeColoring {
        let Some(min) = self.min_color() else {
            return self.clone();
        };
        let colors: Vec<u32> = self.colors.iter().map(|&c| c + 1 - min).collect();
        let t = colors.iter().copied().max().unwrap_or(1);
        EdgeColoring {
            graph: Arc::clone(&self.graph),
            t,
            colors,
        }
    }

    /// Same colors with a different declared palette.
    pub fn with_palette(&self, t: u32) -> Result<EdgeColoring> {
        EdgeColoring::new(Arc::clone(&self.graph), t, self.colors.clone())
    }
}

/// Colors on the edges at one vertex, sorted, with repetitions kept so that
/// improper colorings stay visible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexSpectrum {
    pub vertex: VertexId,
    pub colors: Vec<u32>,
}

impl VertexSpectrum {
    pub fn min(&self) -> Option<u32> {
        self.colors.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.colors.last().copied()
    }

    pub fn is_proper(&self) -> bool {
        self.colors.windows(2).all(|w| w[0] != w[1])
    }

    /// Distinct and consecutive.
    pub fn is_interval(&self) -> bool {
        self.colors.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn contains(&self, c: u32) -> bool {
        self.colors.binary_search(&c).is_ok()
    }
}
