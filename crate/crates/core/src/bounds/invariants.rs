use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Descriptor, Family, Graph};

/// Parameters the closed forms are evaluated on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub vertices: i64,
    pub edges: i64,
    pub max_degree: i64,
    pub diameter: i64,
    pub bipartite: bool,
    pub triangle_free: bool,
    /// Common degree when regular.
    pub regular: Option<i64>,
    /// Common degree parity when every vertex has the same one.
    pub degree_parity: Option<i64>,
}

fn overflow() -> Error {
    Error::Parameter("graph parameters overflow 64-bit integers".into())
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or_else(overflow)
}

impl Invariants {
    pub fn is_eulerian(&self) -> bool {
        self.degree_parity == Some(0)
    }

    pub fn of_graph(g: &Graph) -> Result<Self> {
        let degrees: Vec<i64> = (0..g.num_vertices()).map(|v| g.degree(v) as i64).collect();
        let parity = degrees
            .first()
            .map(|d| d % 2)
            .filter(|p| degrees.iter().all(|d| d % 2 == *p));
        Ok(Invariants {
            vertices: g.num_vertices() as i64,
            edges: g.num_edges() as i64,
            max_degree: g.max_degree() as i64,
            diameter: g.diameter()? as i64,
            bipartite: g.is_bipartite(),
            triangle_free: g.is_triangle_free(),
            regular: g.regular_degree().map(|d| d as i64),
            degree_parity: parity,
        })
    }

    pub fn of_family(f: &Family) -> Result<Self> {
        f.validate()?;
        Ok(match f {
            Family::Path(n) => {
                let n = *n as i64;
                let small = (n <= 2).then_some(n - 1);
                Invariants {
                    vertices: n,
                    edges: n - 1,
                    max_degree: (n - 1).min(2),
                    diameter: n - 1,
                    bipartite: true,
                    triangle_free: true,
                    regular: small,
                    degree_parity: small,
                }
            }
            Family::Cycle(n) => {
                let n = *n as i64;
                Invariants {
                    vertices: n,
                    edges: n,
                    max_degree: 2,
                    diameter: n / 2,
                    bipartite: n % 2 == 0,
                    triangle_free: n > 3,
                    regular: Some(2),
                    degree_parity: Some(0),
                }
            }
            Family::Complete(n) => {
                let n = *n as i64;
                Invariants {
                    vertices: n,
                    edges: mul(n, n - 1)? / 2,
                    max_degree: n - 1,
                    diameter: (n > 1) as i64,
                    bipartite: n <= 2,
                    triangle_free: n <= 2,
                    regular: Some(n - 1),
                    degree_parity: Some((n - 1) % 2),
                }
            }
            Family::CompleteBipartite(m, n) => {
                let (m, n) = (*m as i64, *n as i64);
                Invariants {
                    vertices: m + n,
                    edges: mul(m, n)?,
                    max_degree: m.max(n),
                    diameter: if m + n == 2 { 1 } else { 2 },
                    bipartite: true,
                    triangle_free: true,
                    regular: (m == n).then_some(m),
                    degree_parity: (m % 2 == n % 2).then_some(m % 2),
                }
            }
            Family::Hypercube(n) => {
                let n = *n as i64;
                let v = 1i64
                    .checked_shl(n as u32)
                    .filter(|_| n < 63)
                    .ok_or_else(overflow)?;
                Invariants {
                    vertices: v,
                    edges: mul(n, v / 2)?,
                    max_degree: n,
                    diameter: n,
                    bipartite: true,
                    triangle_free: true,
                    regular: Some(n),
                    degree_parity: Some(n % 2),
                }
            }
            Family::Torus(ns) => {
                let parts = ns
                    .iter()
                    .map(|&n| Invariants::of_family(&Family::Cycle(n)))
                    .collect::<Result<Vec<_>>>()?;
                Invariants::product(&parts)?
            }
            Family::Hamming(ns) => {
                let parts = ns
                    .iter()
                    .map(|&n| Invariants::of_family(&Family::Complete(n)))
                    .collect::<Result<Vec<_>>>()?;
                Invariants::product(&parts)?
            }
            Family::Fibonacci(n) => {
                let n = *n as i64;
                // F_1 = F_2 = 1
                let mut fib = vec![0i64, 1, 1];
                while fib.len() < n as usize + 3 {
                    let k = fib.len();
                    fib.push(fib[k - 1].checked_add(fib[k - 2]).ok_or_else(overflow)?);
                }
                let nu = n as usize;
                let edges = (mul(n, fib[nu + 1])? + mul(2 * (n + 1), fib[nu])?) / 5;
                Invariants {
                    vertices: fib[nu + 2],
                    edges,
                    max_degree: n,
                    diameter: n,
                    bipartite: true,
                    triangle_free: true,
                    regular: (n == 1).then_some(1),
                    degree_parity: (n == 1).then_some(1),
                }
            }
            Family::Caterpillar(ks) => {
                let spine = ks.len() as i64 + 1;
                let leaves: i64 = ks.iter().map(|&k| k as i64).sum();
                let all_odd = ks.iter().all(|k| k % 2 == 1);
                Invariants {
                    vertices: spine + 1 + leaves,
                    edges: spine + leaves,
                    max_degree: ks.iter().map(|&k| k as i64 + 2).max().unwrap_or(1),
                    diameter: spine,
                    bipartite: true,
                    triangle_free: true,
                    regular: ks.is_empty().then_some(1),
                    degree_parity: all_odd.then_some(1),
                }
            }
            Family::Butterfly => Invariants {
                vertices: 5,
                edges: 6,
                max_degree: 4,
                diameter: 2,
                bipartite: false,
                triangle_free: false,
                regular: None,
                degree_parity: Some(0),
            },
            Family::Petersen => Invariants {
                vertices: 10,
                edges: 15,
                max_degree: 3,
                diameter: 2,
                bipartite: false,
                triangle_free: true,
                regular: Some(3),
                degree_parity: Some(1),
            },
        })
    }

    /// Invariants of the Cartesian product of the given factors.
    pub fn product(parts: &[Invariants]) -> Result<Self> {
        let (first, rest) = parts
            .split_first()
            .ok_or_else(|| Error::Parameter("empty product".into()))?;
        rest.iter().try_fold(first.clone(), |g, h| {
            Ok(Invariants {
                vertices: mul(g.vertices, h.vertices)?,
                edges: mul(g.edges, h.vertices)?
                    .checked_add(mul(h.edges, g.vertices)?)
                    .ok_or_else(overflow)?,
                max_degree: g.max_degree + h.max_degree,
                diameter: g.diameter + h.diameter,
                bipartite: g.bipartite && h.bipartite,
                triangle_free: g.triangle_free && h.triangle_free,
                regular: g.regular.zip(h.regular).map(|(a, b)| a + b),
                degree_parity: g
                    .degree_parity
                    .zip(h.degree_parity)
                    .map(|(a, b)| (a + b) % 2),
            })
        })
    }

    pub fn of_descriptor(d: &Descriptor) -> Result<Self> {
        let parts = d
            .factors()
            .iter()
            .map(Invariants::of_family)
            .collect::<Result<Vec<_>>>()?;
        Invariants::product(&parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_materialized_graphs() {
        let mut cases: Vec<Family> = vec![Family::Butterfly, Family::Petersen];
        for n in 1..8 {
            cases.extend([
                Family::Path(n),
                Family::Complete(n),
                Family::Hypercube(n.min(6)),
                Family::Fibonacci(n + 3),
            ]);
            cases.push(Family::Fibonacci(n));
        }
        for n in 3..10 {
            cases.push(Family::Cycle(n));
        }
        for m in 1..5 {
            for n in 1..5 {
                cases.push(Family::CompleteBipartite(m, n));
            }
        }
        cases.extend([
            Family::Torus(vec![3, 4]),
            Family::Torus(vec![4, 4, 5]),
            Family::Hamming(vec![2, 3, 4]),
            Family::Caterpillar(vec![]),
            Family::Caterpillar(vec![1, 2, 2, 0]),
            Family::Caterpillar(vec![1, 3]),
        ]);
        for f in cases {
            let g = crate::graph::generate(&f).unwrap();
            assert_eq!(
                Invariants::of_family(&f).unwrap(),
                Invariants::of_graph(&g).unwrap(),
                "{f}"
            );
        }
    }

    #[test]
    fn product_matches_materialized() {
        for text in [
            "butterflyxk:3",
            "c:5xc:5",
            "p:3xk:2",
            "kmn:2,3xc:4",
            "fib:3xpetersen",
        ] {
            let d: Descriptor = text.parse().unwrap();
            let g = d.generate().unwrap();
            assert_eq!(
                Invariants::of_descriptor(&d).unwrap(),
                Invariants::of_graph(&g).unwrap(),
                "{text}"
            );
        }
    }

    #[test]
    fn huge_parameters_do_not_overflow_silently() {
        assert!(Invariants::of_family(&Family::Hypercube(70)).is_err());
        assert_eq!(
            Invariants::of_family(&Family::Hypercube(40)).unwrap().edges,
            40 << 39
        );
    }
}
