use serde::Serialize;

use super::{verify_interval, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{LevelDecomposition, VertexId};

/// A color extended by the two sentinels used for empty sets:
/// `max ∅ = NegInf`, `min ∅ = PosInf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtColor {
    NegInf,
    Finite(u32),
    PosInf,
}

impl ExtColor {
    pub fn finite(self) -> Option<u32> {
        match self {
            ExtColor::Finite(c) => Some(c),
            _ => None,
        }
    }
}

/// Colors at a vertex split by the level of the other endpoint: `lower`
/// goes to the same or the previous level, `upper` to the next one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitSpectrum {
    pub vertex: VertexId,
    pub lower: Vec<u32>,
    pub upper: Vec<u32>,
}

impl SplitSpectrum {
    pub fn max_lower(&self) -> ExtColor {
        self.lower
            .iter()
            .max()
            .map_or(ExtColor::NegInf, |&c| ExtColor::Finite(c))
    }

    pub fn min_upper(&self) -> ExtColor {
        self.upper
            .iter()
            .min()
            .map_or(ExtColor::PosInf, |&c| ExtColor::Finite(c))
    }

    pub fn is_separated(&self) -> bool {
        self.max_lower() < self.min_upper()
    }
}

pub fn split_spectrum(
    c: &EdgeColoring,
    ld: &LevelDecomposition,
    v: VertexId,
) -> Result<SplitSpectrum> {
    let g = c.graph();
    if ld.level.len() != g.num_vertices() {
        return Err(Error::Parameter(
            "level decomposition belongs to another graph".into(),
        ));
    }
    if v >= g.num_vertices() {
        return Err(Error::Parameter(format!("vertex index {v} out of range")));
    }
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for &w in g.neighbors(v) {
        let col = c.color_between(v, w).expect("neighbors share an edge");
        if ld.level[w] > ld.level[v] {
            upper.push(col);
        } else {
            lower.push(col);
        }
    }
    lower.sort_unstable();
    upper.sort_unstable();
    Ok(SplitSpectrum {
        vertex: v,
        lower,
        upper,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separability {
    pub root: VertexId,
    pub separable: bool,
    /// First vertex in canonical order with `max lower >= min upper`.
    pub first_failing: Option<VertexId>,
}

/// Whether every vertex has its lower colors strictly below its upper ones
/// with respect to the distance classes around `root`. The coloring must be
/// a valid interval coloring.
pub fn is_separable(c: &EdgeColoring, root: VertexId) -> Result<Separability> {
    let cert = verify_interval(c);
    if !cert.is_valid() {
        return Err(Error::Contract(format!(
            "not an interval coloring: {:?}",
            cert.verdict
        )));
    }
    let ld = c.graph().level_decomposition(root)?;
    for v in 0..c.graph().num_vertices() {
        if !split_spectrum(c, &ld, v)?.is_separated() {
            return Ok(Separability {
                root,
                separable: false,
                first_failing: Some(v),
            });
        }
    }
    Ok(Separability {
        root,
        separable: true,
        first_failing: None,
    })
}
