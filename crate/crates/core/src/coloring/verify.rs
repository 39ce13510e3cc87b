use serde::Serialize;

use super::EdgeColoring;
use crate::error::Result;
use crate::graph::VertexLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ValidInterval,
    Improper,
    NonIntervalVertex,
    UnusedColor,
    ColorOutOfRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Offending vertex with its (sorted, possibly repeating) incident colors.
    Vertex {
        vertex: VertexLabel,
        colors: Vec<u32>,
    },
    Edge {
        edge: (VertexLabel, VertexLabel),
        color: u32,
    },
    Color {
        color: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringCertificate {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ColoringCertificate {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::ValidInterval
    }

    fn valid() -> Self {
        ColoringCertificate {
            verdict: Verdict::ValidInterval,
            witness: None,
        }
    }

    fn fail(verdict: Verdict, witness: Witness) -> Self {
        ColoringCertificate {
            verdict,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VerifyMode {
    /// Interval `t`-coloring as defined: proper, colors in `[1, t]`, every
    /// color used, every spectrum an interval.
    #[default]
    Strict,
    /// Drops the every-color-used clause. For intermediate states only.
    Relaxed,
}

pub fn verify_interval(c: &EdgeColoring) -> ColoringCertificate {
    verify_interval_with(c, VerifyMode::Strict)
}

/// Reports the first failure: range by edge order, then properness and
/// spectra by canonical vertex order, then unused colors ascending.
pub fn verify_interval_with(c: &EdgeColoring, mode: VerifyMode) -> ColoringCertificate {
    let g = c.graph();
    let edge_witness = |e: usize| {
        let (u, v) = g.edge(e);
        Witness::Edge {
            edge: (g.label(u).clone(), g.label(v).clone()),
            color: c.color(e),
        }
    };
    if let Some(e) = (0..g.num_edges()).find(|&e| !(1..=c.t()).contains(&c.color(e))) {
        return ColoringCertificate::fail(Verdict::ColorOutOfRange, edge_witness(e));
    }
    let spectra: Vec<_> = (0..g.num_vertices()).map(|v| c.spectrum(v)).collect();
    let vertex_witness = |s: &super::VertexSpectrum| Witness::Vertex {
        vertex: g.label(s.vertex).clone(),
        colors: s.colors.clone(),
    };
    if let Some(s) = spectra.iter().find(|s| !s.is_proper()) {
        return ColoringCertificate::fail(Verdict::Improper, vertex_witness(s));
    }
    if let Some(s) = spectra.iter().find(|s| !s.is_interval()) {
        return ColoringCertificate::fail(Verdict::NonIntervalVertex, vertex_witness(s));
    }
    if mode == VerifyMode::Strict {
        let mut used = vec![false; c.t() as usize + 1];
        for &col in c.colors() {
            used[col as usize] = true;
        }
        if let Some(col) = (1..=c.t()).find(|&col| !used[col as usize]) {
            return ColoringCertificate::fail(Verdict::UnusedColor, Witness::Color { color: col });
        }
    }
    ColoringCertificate::valid()
}

/// Local sufficient condition for connected graphs: distinct consecutive
/// colors at every vertex, smallest color 1 and largest color `t`.
pub fn verify_lemma1(c: &EdgeColoring) -> Result<ColoringCertificate> {
    let g = c.graph();
    g.require_connected()?;
    for v in 0..g.num_vertices() {
        let s = c.spectrum(v);
        let witness = || Witness::Vertex {
            vertex: g.label(v).clone(),
            colors: s.colors.clone(),
        };
        if !s.is_proper() {
            return Ok(ColoringCertificate::fail(Verdict::Improper, witness()));
        }
        if !s.is_interval() {
            return Ok(ColoringCertificate::fail(
                Verdict::NonIntervalVertex,
                witness(),
            ));
        }
    }
    let edge_witness = |e: usize| {
        let (u, v) = g.edge(e);
        Witness::Edge {
            edge: (g.label(u).clone(), g.label(v).clone()),
            color: c.color(e),
        }
    };
    let colors = c.colors();
    let Some(min_e) = (0..colors.len()).min_by_key(|&e| colors[e]) else {
        return Ok(ColoringCertificate::fail(
            Verdict::UnusedColor,
            Witness::Color { color: 1 },
        ));
    };
    let max_e = (0..colors.len())
        .max_by_key(|&e| (colors[e], std::cmp::Reverse(e)))
        .expect("nonempty");
    if colors[min_e] < 1 {
        return Ok(ColoringCertificate::fail(
            Verdict::ColorOutOfRange,
            edge_witness(min_e),
        ));
    }
    if colors[max_e] > c.t() {
        return Ok(ColoringCertificate::fail(
            Verdict::ColorOutOfRange,
            edge_witness(max_e),
        ));
    }
    if colors[min_e] != 1 {
        return Ok(ColoringCertificate::fail(
            Verdict::UnusedColor,
            Witness::Color { color: 1 },
        ));
    }
    if colors[max_e] != c.t() {
        return Ok(ColoringCertificate::fail(
            Verdict::UnusedColor,
            Witness::Color { color: c.t() },
        ));
    }
    Ok(ColoringCertificate::valid())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;
    use crate::graph::{generate, Family, Graph};

    fn colored(f: Family, t: u32, colors: &[u32]) -> EdgeColoring {
        let g = Arc::new(generate(&f).unwrap());
        EdgeColoring::new(g, t, colors.to_vec()).unwrap()
    }

    #[test]
    fn alternating_c6_is_valid() {
        // (0,1),(0,5),(1,2),(2,3),(3,4),(4,5)
        let c = colored(Family::Cycle(6), 2, &[1, 2, 2, 1, 2, 1]);
        assert!(verify_interval(&c).is_valid());
        assert!(verify_lemma1(&c).unwrap().is_valid());
    }

    #[test]
    fn gap_at_middle_of_path() {
        let c = colored(Family::Path(3), 3, &[1, 3]);
        let cert = verify_interval(&c);
        assert_eq!(cert.verdict, Verdict::NonIntervalVertex);
        assert_eq!(
            cert.witness,
            Some(Witness::Vertex {
                vertex: VertexLabel::Int(1),
                colors: vec![1, 3]
            })
        );
        let relaxed = verify_interval_with(&c, VerifyMode::Relaxed);
        assert_eq!(relaxed.verdict, Verdict::NonIntervalVertex);
    }

    #[test]
    fn improper_coloring_is_reported_with_vertex() {
        // C6 colored 1,2,1,2,3,... around the cycle: vertex 5 sees 1 and... build explicitly
        let c = colored(Family::Cycle(6), 3, &[1, 1, 2, 1, 2, 3]);
        let cert = verify_lemma1(&c).unwrap();
        assert_eq!(cert.verdict, Verdict::Improper);
        assert_eq!(
            cert.witness,
            Some(Witness::Vertex {
                vertex: VertexLabel::Int(0),
                colors: vec![1, 1]
            })
        );
        assert_eq!(verify_interval(&c).verdict, Verdict::Improper);
    }

    #[test]
    fn out_of_range_and_unused() {
        let c = colored(Family::Path(3), 2, &[2, 3]);
        assert_eq!(verify_interval(&c).verdict, Verdict::ColorOutOfRange);
        let c = colored(Family::Path(3), 4, &[2, 3]);
        assert_eq!(verify_interval(&c).verdict, Verdict::UnusedColor);
        assert_eq!(
            verify_interval(&c).witness,
            Some(Witness::Color { color: 1 })
        );
        assert!(verify_interval_with(&c, VerifyMode::Relaxed).is_valid());
    }

    #[test]
    fn lemma1_needs_connectivity() {
        let g = Arc::new(Graph::from_index_edges(4, [(0, 1), (2, 3)]).unwrap());
        let c = EdgeColoring::new(g, 1, vec![1, 1]).unwrap();
        assert!(verify_lemma1(&c).is_err());
        assert!(verify_interval(&c).is_valid());
    }

    fn small_connected() -> impl Strategy<Value = Graph> {
        prop_oneof![
            Just(Family::Path(4)),
            Just(Family::Cycle(4)),
            Just(Family::Cycle(5)),
            Just(Family::Complete(4)),
            Just(Family::CompleteBipartite(2, 3)),
            Just(Family::Butterfly),
            Just(Family::Hypercube(2)),
            Just(Family::Fibonacci(3)),
            Just(Family::Fibonacci(4)),
            Just(Family::Caterpillar(vec![1, 2])),
        ]
        .prop_map(|f| generate(&f).unwrap())
    }

    proptest! {
        #[test]
        fn lemma1_agrees_with_definition(
            g in small_connected(),
            t in 1u32..6,
            seed in proptest::collection::vec(0u32..7, 10),
        ) {
            prop_assume!(g.num_edges() <= 10);
            let g = Arc::new(g);
            let colors: Vec<u32> = (0..g.num_edges()).map(|e| seed[e]).collect();
            let c = EdgeColoring::new(g, t, colors).unwrap();
            prop_assert_eq!(verify_lemma1(&c).unwrap().is_valid(), verify_interval(&c).is_valid());
        }

        #[test]
        fn proper_spectra_have_degree_size(
            g in small_connected(),
            seed in proptest::collection::vec(1u32..12, 10),
        ) {
            let g = Arc::new(g);
            let colors: Vec<u32> = (0..g.num_edges()).map(|e| seed[e % seed.len()] + 12 * e as u32).collect();
            let c = EdgeColoring::new(Arc::clone(&g), 200, colors).unwrap();
            for v in 0..g.num_vertices() {
                prop_assert_eq!(c.spectrum(v).colors.len(), g.degree(v));
            }
        }
    }
}
