//! JSON and DOT forms of graphs.
//!
//! JSON: `{"vertices": [<label>...], "edges": [[<label>, <label>]...]}` where
//! a label is an integer, a string of 0/1 characters, or a list of labels.
//!
//! DOT: an undirected `graph` with one node line per vertex and one `--`
//! line per edge. Node ids are the quoted text form of the label
//! (`"3"`, `"b0101"`, `"(0,1)"`); edges may carry a `label` attribute.

use serde::{Deserialize, Serialize};

use super::{Graph, VertexLabel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<(VertexLabel, VertexLabel)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v)| (g.label(u).clone(), g.label(v).clone()))
                .collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Graph> {
        json.vertices.iter().try_for_each(VertexLabel::validate)?;
        Graph::from_labels(json.vertices, json.edges)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let json: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::try_from(json)
}

/// DOT text; `edge_labels`, when given, is indexed by edge id.
pub fn to_dot(g: &Graph, edge_labels: Option<&[u32]>) -> String {
    let mut out = String::from("graph G {\n");
    for l in g.labels() {
        out.push_str(&format!("  \"{l}\";\n"));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match edge_labels {
            Some(colors) => out.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                g.label(u),
                g.label(v),
                colors[e]
            )),
            None => out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.label(u), g.label(v))),
        }
    }
    out.push_str("}\n");
    out
}

/// Reads back the DOT subset written by [`to_dot`]. Returns the graph and
/// the edge labels (by edge id) when every edge carries one.
pub fn from_dot(text: &str) -> Result<(Graph, Option<Vec<u32>>)> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for raw in text.lines() {
        let line = raw.trim().trim_end_matches(';').trim();
        if line.is_empty() || line.starts_with("graph") || line == "}" || line.starts_with("//") {
            continue;
        }
        let (body, attrs) = match line.find('[') {
            Some(i) => (line[..i].trim(), Some(line[i..].trim())),
            None => (line, None),
        };
        let ids = body
            .split("--")
            .map(|s| parse_dot_id(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        match ids.as_slice() {
            [v] => vertices.push(v.clone()),
            [a, b] => {
                let color = attrs.and_then(dot_label_attr).map(|s| {
                    s.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("edge label {s:?} is not a color")))
                });
                edges.push((a.clone(), b.clone(), color.transpose()?));
            }
            _ => return Err(Error::Parse(format!("unsupported DOT line {raw:?}"))),
        }
    }
    let g = Graph::from_labels(
        vertices,
        edges
            .iter()
            .map(|(a, b, _)| (a.clone(), b.clone()))
            .collect::<Vec<_>>(),
    )?;
    if edges.iter().any(|(_, _, c)| c.is_none()) {
        return Ok((g, None));
    }
    let mut colors = vec![0; g.num_edges()];
    for (a, b, c) in &edges {
        colors[g.edge_by_labels(a, b)?] = c.expect("checked above");
    }
    Ok((g, Some(colors)))
}

fn parse_dot_id(s: &str) -> Result<VertexLabel> {
    let inner = s
        .strip_prefix('"')
        .and_then(|s| s.strip_suffix('"'))
        .ok_or_else(|| Error::Parse(format!("expected quoted DOT id, got {s:?}")))?;
    inner.parse()
}

fn dot_label_attr(attrs: &str) -> Option<&str> {
    let start = attrs.find("label=\"")? + "label=\"".len();
    let len = attrs[start..].find('"')?;
    Some(&attrs[start..start + len])
}
