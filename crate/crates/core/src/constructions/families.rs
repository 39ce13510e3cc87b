use std::sync::Arc;

use super::{construction_separable, separable_product_coloring, SeparableColoring};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::family::caterpillar_layout;
use crate::graph::{generate, Family, Graph, VertexLabel};

/// `C_{2n}` with vertices `0..2n`: one side `0, 1, ..., n` colored `1..n`,
/// the other side `0, 2n-1, ..., n` colored `2..n+1`. Root 0.
pub fn cycle_separable(n: usize) -> Result<SeparableColoring> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "cycle half-length must be at least 2, got {n}"
        )));
    }
    let g = Arc::new(generate(&Family::Cycle(2 * n))?);
    let m = 2 * n;
    let mut triples = Vec::with_capacity(m);
    for i in 0..n {
        triples.push((i, i + 1, i as u32 + 1));
        triples.push((m - i - 1, (m - i) % m, i as u32 + 2));
    }
    let c = EdgeColoring::from_triples(
        g,
        n as u32 + 1,
        triples
            .into_iter()
            .map(|(a, b, c)| (VertexLabel::from(a), VertexLabel::from(b), c)),
    )?;
    construction_separable(c, 0)
}

/// Caterpillar with spine `u_0..u_n` (labels `0..=n`) and `ks[i-1]` leaves at
/// `u_i`, colored with all `|E|` colors. Root `u_0`.
pub fn caterpillar_separable(ks: &[usize]) -> Result<SeparableColoring> {
    let (n_vertices, edges) = caterpillar_layout(ks);
    let g = Arc::new(Graph::from_index_edges(
        n_vertices,
        edges.iter().map(|&(u, v, _)| (u, v)),
    )?);
    // prefix[i] = k_1 + ... + k_i
    let prefix: Vec<usize> = std::iter::once(0)
        .chain(ks.iter().scan(0, |acc, &k| {
            *acc += k;
            Some(*acc)
        }))
        .collect();
    let t = g.num_edges() as u32;
    let c = EdgeColoring::from_triples(
        Arc::clone(&g),
        t,
        edges.iter().map(|&(u, v, (i, j))| {
            let color = if j == 0 {
                prefix[i] + i + 1
            } else {
                prefix[i - 1] + i + j
            };
            (VertexLabel::from(u), VertexLabel::from(v), color as u32)
        }),
    )?;
    construction_separable(c, 0)
}

/// `K_{m,n}` with `u_i = i-1`, `v_j = m+j-1` and `u_i v_j` colored `i+j-1`.
/// Root `u_1`.
pub fn complete_bipartite_separable(m: usize, n: usize) -> Result<SeparableColoring> {
    let g = Arc::new(generate(&Family::CompleteBipartite(m, n))?);
    let c = EdgeColoring::from_fn(Arc::clone(&g), (m + n - 1) as u32, |e| {
        let (a, b) = g.edge(e);
        (a + 1 + b - m) as u32
    })?;
    construction_separable(c, 0)
}

/// Interval `n(n+1)/2`-coloring of `Q_n` separable from the all-zeros
/// vertex, built as `Q_k = Q_{k-1} □ K_2` starting from a single edge.
pub fn hypercube_max_separable(n: usize) -> Result<SeparableColoring> {
    if n < 1 {
        return Err(Error::Parameter(
            "hypercube dimension must be at least 1".into(),
        ));
    }
    let bit = |s: &str| VertexLabel::Bits(s.to_string());
    let q1 = Arc::new(Graph::from_labels(
        [bit("0"), bit("1")],
        [(bit("0"), bit("1"))],
    )?);
    let k2 = EdgeColoring::new(Arc::new(generate(&Family::Complete(2))?), 1, vec![1])?;
    let mut sc = construction_separable(EdgeColoring::new(q1, 1, vec![1])?, 0)?;
    for k in 2..=n {
        let prod = separable_product_coloring(&sc, &k2)?;
        let g = Arc::new(prod.graph().relabel(flatten_cube_label)?);
        let p = prod.graph();
        let triples = p.edges().iter().zip(prod.colors()).map(|(&(a, b), &col)| {
            (
                flatten_cube_label(p.label(a)),
                flatten_cube_label(p.label(b)),
                col,
            )
        });
        let c = EdgeColoring::from_triples(Arc::clone(&g), prod.t(), triples.collect::<Vec<_>>())?;
        let root = g.vertex(&VertexLabel::Bits("0".repeat(k)))?;
        sc = construction_separable(c, root)?;
    }
    Ok(sc)
}

fn flatten_cube_label(l: &VertexLabel) -> VertexLabel {
    match l {
        VertexLabel::Tuple(items) => match items.as_slice() {
            [VertexLabel::Bits(s), VertexLabel::Int(b)] => VertexLabel::Bits(format!("{s}{b}")),
            _ => l.clone(),
        },
        _ => l.clone(),
    }
}
