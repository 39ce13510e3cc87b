//! Coloring JSON: `{"t": <palette>, "edges": [[<label>, <label>, <color>]...]}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub t: u32,
    pub edges: Vec<(VertexLabel, VertexLabel, u32)>,
}

impl From<&EdgeColoring> for ColoringJson {
    fn from(c: &EdgeColoring) -> Self {
        let g = c.graph();
        ColoringJson {
            t: c.t(),
            edges: g
                .edges()
                .iter()
                .zip(c.colors())
                .map(|(&(u, v), &col)| (g.label(u).clone(), g.label(v).clone(), col))
                .collect(),
        }
    }
}

pub fn to_json(c: &EdgeColoring) -> String {
    serde_json::to_string(&ColoringJson::from(c)).expect("coloring serializes")
}

/// Reads a coloring of `graph`; every edge must appear exactly once.
pub fn from_json(graph: Arc<Graph>, text: &str) -> Result<EdgeColoring> {
    let json: ColoringJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    EdgeColoring::from_triples(graph, json.t, json.edges)
}
