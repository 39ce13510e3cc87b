use std::sync::Arc;

use super::{construction_checked, SeparableColoring};
use crate::coloring::{split_spectrum, verify_interval, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::product::product_label;
use crate::graph::{cartesian_product, Graph, VertexId};

/// `G □ H` together with the factor coordinates `(u, v)` of every product
/// vertex.
pub fn product_parts(g: &Graph, h: &Graph) -> (Graph, Vec<(VertexId, VertexId)>) {
    let p = cartesian_product(g, h);
    let mut parts = vec![(0, 0); p.num_vertices()];
    for u in 0..g.num_vertices() {
        for v in 0..h.num_vertices() {
            let id = p
                .vertex(&product_label(g.label(u), h.label(v)))
                .expect("product vertex exists");
            parts[id] = (u, v);
        }
    }
    (p, parts)
}

fn require_valid(c: &EdgeColoring, what: &str) -> Result<()> {
    let cert = verify_interval(c);
    if cert.is_valid() {
        Ok(())
    } else {
        Err(Error::Contract(format!(
            "{what} is not an interval coloring: {:?}",
            cert.verdict
        )))
    }
}

fn require_regular(h: &Graph) -> Result<u32> {
    if h.num_vertices() == 0 {
        return Err(Error::Precondition("second factor is empty".into()));
    }
    h.regular_degree()
        .map(|r| r as u32)
        .ok_or_else(|| Error::Precondition("second factor is not regular".into()))
}

/// Interval `(t_G + t_H + r)`-coloring of `G □ H` for an `r`-regular `H`.
///
/// `u_m` is the least vertex whose largest color is `t_G`; its copy of `H`
/// is placed above everything else.
pub fn product_max_coloring(alpha: &EdgeColoring, beta: &EdgeColoring) -> Result<EdgeColoring> {
    require_valid(alpha, "first factor coloring")?;
    require_valid(beta, "second factor coloring")?;
    let (g, h) = (alpha.graph(), beta.graph());
    g.require_connected()?;
    let r = require_regular(h)?;
    let t = alpha.t() + beta.t() + r;

    let g_lo: Vec<u32> = (0..g.num_vertices())
        .map(|u| alpha.spectrum(u).min().unwrap_or(0))
        .collect();
    let g_hi: Vec<u32> = (0..g.num_vertices())
        .map(|u| alpha.spectrum(u).max().unwrap_or(0))
        .collect();
    let h_hi: Vec<u32> = (0..h.num_vertices())
        .map(|v| beta.spectrum(v).max().unwrap_or(0))
        .collect();
    let u_m = (0..g.num_vertices())
        .find(|&u| g_hi[u] == alpha.t())
        .expect("a valid coloring uses t");

    let (p, parts) = product_parts(g, h);
    let colors = p
        .edges()
        .iter()
        .map(|&(a, b)| {
            let ((u1, v1), (u2, v2)) = (parts[a], parts[b]);
            if u1 == u2 {
                let base = beta.color_between(v1, v2).expect("factor edge");
                if u1 == u_m {
                    base + g_hi[u_m] + r
                } else {
                    base + g_lo[u1] - 1
                }
            } else {
                alpha.color_between(u1, u2).expect("factor edge") + h_hi[v1]
            }
        })
        .collect();
    construction_checked(EdgeColoring::new(Arc::new(p), t, colors)?)
}

/// Interval `(t_G + t_H + ε(x)·r)`-coloring of `G □ H` from a separable
/// coloring of `G` with respect to `x`.
pub fn separable_product_coloring(
    sc: &SeparableColoring,
    beta: &EdgeColoring,
) -> Result<EdgeColoring> {
    let alpha = sc.coloring();
    // re-check in case the coloring was built by hand
    let sc = SeparableColoring::new(alpha.clone(), sc.root())?;
    require_valid(beta, "second factor coloring")?;
    let (g, h) = (alpha.graph(), beta.graph());
    let r = require_regular(h)?;
    let t = alpha.t() + beta.t() + sc.eccentricity() * r;

    let ld = g.level_decomposition(sc.root())?;
    let lower_max: Vec<u32> = (0..g.num_vertices())
        .map(|u| {
            let s = split_spectrum(alpha, &ld, u).expect("vertex in range");
            s.max_lower().finite().unwrap_or(0)
        })
        .collect();
    let h_hi: Vec<u32> = (0..h.num_vertices())
        .map(|v| beta.spectrum(v).max().unwrap_or(0))
        .collect();

    let (p, parts) = product_parts(g, h);
    let colors = p
        .edges()
        .iter()
        .map(|&(a, b)| {
            let ((u1, v1), (u2, v2)) = (parts[a], parts[b]);
            if u1 == u2 {
                beta.color_between(v1, v2).expect("factor edge") + lower_max[u1] + ld.level[u1] * r
            } else {
                let i = ld.level[u1].max(ld.level[u2]);
                alpha.color_between(u1, u2).expect("factor edge") + h_hi[v1] + i * r - r
            }
        })
        .collect();
    construction_checked(EdgeColoring::new(Arc::new(p), t, colors)?)
}
