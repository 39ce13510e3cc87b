use super::{Graph, VertexLabel};

/// Label of the product vertex `(a, b)`. Tuple labels on the left are
/// flattened so that k-fold left-associated products get k-tuples.
pub(crate) fn product_label(a: &VertexLabel, b: &VertexLabel) -> VertexLabel {
    let mut items = match a {
        VertexLabel::Tuple(items) => items.clone(),
        other => vec![other.clone()],
    };
    items.push(b.clone());
    VertexLabel::Tuple(items)
}

/// Cartesian product `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.num_vertices();
    let labels: Vec<VertexLabel> = g
        .labels()
        .iter()
        .flat_map(|a| h.labels().iter().map(move |b| product_label(a, b)))
        .collect();
    let id = |u: usize, v: usize| u * nh + v;
    let mut edges = Vec::with_capacity(g.num_vertices() * h.num_edges() + nh * g.num_edges());
    for u in 0..g.num_vertices() {
        for &(v1, v2) in h.edges() {
            edges.push((labels[id(u, v1)].clone(), labels[id(u, v2)].clone()));
        }
    }
    for v in 0..nh {
        for &(u1, u2) in g.edges() {
            edges.push((labels[id(u1, v)].clone(), labels[id(u2, v)].clone()));
        }
    }
    Graph::from_labels(labels, edges).expect("product of simple graphs is simple")
}

/// Left-associated product of all factors. A single factor is returned with
/// its labels wrapped in 1-tuples so the label shape always matches the
/// number of factors.
pub fn cartesian_product_all(factors: &[Graph]) -> Graph {
    let (first, rest) = factors.split_first().expect("at least one factor");
    let mut acc = first
        .relabel(|l| VertexLabel::Tuple(vec![l.clone()]))
        .expect("wrapping labels is injective");
    for f in rest {
        acc = cartesian_product(&acc, f);
    }
    acc
}
