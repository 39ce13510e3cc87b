//! Explicit interval colorings: the two product constructions, separable
//! colorings of cycles, caterpillars, complete bipartite graphs and
//! hypercubes, and the recursive Fibonacci cube colorings.

mod families;
mod fibonacci;
mod product;

use serde::Serialize;

pub use families::{
    caterpillar_separable, complete_bipartite_separable, cycle_separable, hypercube_max_separable,
};
pub use fibonacci::{fibonacci_min_coloring, fibonacci_plus_coloring};
pub use product::{product_max_coloring, product_parts, separable_product_coloring};

use crate::coloring::{is_separable, verify_interval, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexLabel};

/// An interval coloring that is separable with respect to `root`, has color
/// 1 at the root and its largest color at a vertex `far` of maximum distance
/// from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparableColoring {
    coloring: EdgeColoring,
    root: VertexId,
    eccentricity: u32,
    far: VertexId,
}

impl SeparableColoring {
    /// Checks every invariant and picks the least admissible `far` vertex.
    /// A violated invariant is a contract error naming it.
    pub fn new(coloring: EdgeColoring, root: VertexId) -> Result<Self> {
        let g = coloring.graph();
        if root >= g.num_vertices() {
            return Err(Error::Parameter(format!("root index {root} out of range")));
        }
        let cert = verify_interval(&coloring);
        if !cert.is_valid() {
            return Err(Error::Contract(format!(
                "not an interval coloring: {:?}",
                cert.verdict
            )));
        }
        let sep = is_separable(&coloring, root)?;
        if let Some(v) = sep.first_failing {
            return Err(Error::Contract(format!(
                "not separable with respect to {} at {}",
                g.label(root),
                g.label(v)
            )));
        }
        if !coloring.spectrum(root).contains(1) {
            return Err(Error::Contract(format!(
                "color 1 missing at root {}",
                g.label(root)
            )));
        }
        let ld = g.level_decomposition(root)?;
        let eccentricity = ld.eccentricity();
        let far = ld.levels[eccentricity as usize]
            .iter()
            .copied()
            .find(|&y| coloring.spectrum(y).contains(coloring.t()))
            .ok_or_else(|| {
                Error::Contract(format!(
                    "no vertex at distance {eccentricity} carries color {}",
                    coloring.t()
                ))
            })?;
        Ok(SeparableColoring {
            coloring,
            root,
            eccentricity,
            far,
        })
    }

    pub fn with_root_label(coloring: EdgeColoring, root: &VertexLabel) -> Result<Self> {
        let root = coloring.graph().vertex(root)?;
        SeparableColoring::new(coloring, root)
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn into_coloring(self) -> EdgeColoring {
        self.coloring
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn root_label(&self) -> &VertexLabel {
        self.coloring.graph().label(self.root)
    }

    pub fn t(&self) -> u32 {
        self.coloring.t()
    }

    /// Eccentricity of the root.
    pub fn eccentricity(&self) -> u32 {
        self.eccentricity
    }

    /// Least vertex at maximum distance from the root that carries color `t`.
    pub fn far(&self) -> VertexId {
        self.far
    }

    pub fn summary(&self) -> SeparableSummary {
        let g = self.coloring.graph();
        SeparableSummary {
            t: self.t(),
            root: g.label(self.root).clone(),
            eccentricity: self.eccentricity,
            far: g.label(self.far).clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparableSummary {
    pub t: u32,
    pub root: VertexLabel,
    pub eccentricity: u32,
    pub far: VertexLabel,
}

/// Wraps a construction's own output check: any failure there is a bug in
/// the construction rather than in the caller's input.
fn construction_checked(c: EdgeColoring) -> Result<EdgeColoring> {
    let cert = verify_interval(&c);
    if cert.is_valid() {
        Ok(c)
    } else {
        Err(Error::ConstructionInvariant(format!(
            "output failed verification: {cert:?}"
        )))
    }
}

fn construction_separable(c: EdgeColoring, root: VertexId) -> Result<SeparableColoring> {
    SeparableColoring::new(c, root).map_err(|e| match e {
        Error::Contract(msg) => Error::ConstructionInvariant(msg),
        other => other,
    })
}
