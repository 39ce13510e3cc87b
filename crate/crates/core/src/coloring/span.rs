use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::EdgeId;

pub fn edge_span(c: &EdgeColoring, e: EdgeId, f: EdgeId) -> u32 {
    c.color(e).abs_diff(c.color(f))
}

/// Largest color difference over edge pairs at exactly distance `k`.
pub fn edge_span_at_distance(c: &EdgeColoring, k: u32) -> Result<u32> {
    let spans = edge_spans_by_distance(c)?;
    spans.get(k as usize).copied().ok_or_else(|| {
        Error::OutOfRange(format!(
            "distance {k} exceeds edge diameter {}",
            spans.len() - 1
        ))
    })
}

/// `result[k]` is the span at distance `k` for `k = 0..=edge_diameter`.
pub fn edge_spans_by_distance(c: &EdgeColoring) -> Result<Vec<u32>> {
    let g = c.graph();
    let table = g.distances()?;
    let m = g.num_edges();
    let mut spans = vec![0u32; table.edge_diameter() as usize + 1];
    for e in 0..m {
        for f in e + 1..m {
            let k = table.edge_distance(e, f) as usize;
            spans[k] = spans[k].max(edge_span(c, e, f));
        }
    }
    Ok(spans)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graph::{generate, Family};

    fn c8_two_sided() -> EdgeColoring {
        // path 0..4 colored 1..4, the other side 4..7,0 colored 5..2
        let g = Arc::new(generate(&Family::Cycle(8)).unwrap());
        let t = [
            (0, 1, 1),
            (1, 2, 2),
            (2, 3, 3),
            (3, 4, 4),
            (0, 7, 2),
            (7, 6, 3),
            (6, 5, 4),
            (5, 4, 5),
        ]
        .map(|(a, b, c): (i64, i64, u32)| (a.into(), b.into(), c));
        EdgeColoring::from_triples(g, 5, t).unwrap()
    }

    #[test]
    fn c8_spans() {
        let c = c8_two_sided();
        assert!(super::super::verify_interval(&c).is_valid());
        assert_eq!(edge_span_at_distance(&c, 3).unwrap(), 4);
        assert_eq!(edge_span_at_distance(&c, 0).unwrap(), 1);
        assert!(matches!(
            edge_span_at_distance(&c, 4),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn identical_edge_has_zero_span() {
        let c = c8_two_sided();
        for e in 0..8 {
            assert_eq!(edge_span(&c, e, e), 0);
        }
    }
}
