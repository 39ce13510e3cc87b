//! Recursive interval colorings of Fibonacci cubes.
//!
//! `Γ_n` splits into the words `0w` (a copy of `Γ_{n-1}`), the words `10w`
//! (a copy of `Γ_{n-2}`) and the matching `00w – 10w`. Odd `n` shifts both
//! copies up by one and puts the matching edge at the bottom of `10w`; even
//! `n` shifts only the `Γ_{n-2}` copy and puts the matching edge on top.

use std::sync::Arc;

use super::construction_checked;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{generate, Family, VertexLabel};

/// Interval `n`-coloring of `Γ_n`.
pub fn fibonacci_min_coloring(n: usize) -> Result<EdgeColoring> {
    if n < 1 {
        return Err(Error::Parameter(
            "Fibonacci cube order must be at least 1".into(),
        ));
    }
    let base1 = table(1, 1, &[("0", "1", 1)])?;
    if n == 1 {
        return Ok(base1);
    }
    let base2 = table(2, 2, &[("00", "01", 1), ("00", "10", 2)])?;
    iterate(base1, base2, 2, n, 0)
}

/// Interval `(n+1)`-coloring of `Γ_n`, `n >= 3`.
pub fn fibonacci_plus_coloring(n: usize) -> Result<EdgeColoring> {
    if n < 3 {
        return Err(Error::Parameter(format!(
            "the (n+1)-coloring needs n >= 3, got {n}"
        )));
    }
    let base3 = table(
        3,
        4,
        &[
            ("100", "101", 1),
            ("000", "001", 3),
            ("000", "010", 4),
            ("001", "101", 2),
            ("000", "100", 2),
        ],
    )?;
    if n == 3 {
        return Ok(base3);
    }
    let base4 = table(
        4,
        5,
        &[
            ("0100", "0101", 1),
            ("0000", "0001", 3),
            ("0000", "0010", 4),
            ("0001", "0101", 2),
            ("0000", "0100", 2),
            ("1000", "1001", 3),
            ("1000", "1010", 4),
            ("0001", "1001", 4),
            ("0000", "1000", 5),
            ("0010", "1010", 5),
        ],
    )?;
    iterate(base3, base4, 4, n, 1)
}

fn table(n: usize, t: u32, edges: &[(&str, &str, u32)]) -> Result<EdgeColoring> {
    let g = Arc::new(generate(&Family::Fibonacci(n))?);
    let bits = |s: &str| VertexLabel::Bits(s.to_string());
    let c = EdgeColoring::from_triples(g, t, edges.iter().map(|&(a, b, c)| (bits(a), bits(b), c)))?;
    construction_checked(c)
}

/// Runs the recursion from `(Γ_{k-1}, Γ_k)` up to `Γ_n`; `extra` is the
/// palette excess over `n`.
fn iterate(
    mut older: EdgeColoring,
    mut newer: EdgeColoring,
    k: usize,
    n: usize,
    extra: u32,
) -> Result<EdgeColoring> {
    for m in k + 1..=n {
        let next = step(&older, &newer, m, m as u32 + extra)?;
        older = std::mem::replace(&mut newer, next);
    }
    Ok(newer)
}

fn step(prev2: &EdgeColoring, prev1: &EdgeColoring, n: usize, t: u32) -> Result<EdgeColoring> {
    let odd = n % 2 == 1;
    let bits = |s: &str| VertexLabel::Bits(s.to_string());
    let spectrum = |c: &EdgeColoring, w: &str| c.spectrum_of(&bits(w));

    for l in prev2.graph().labels() {
        let w = l.as_bits().expect("Fibonacci labels are bitstrings");
        let (low, high) = (spectrum(prev2, w)?, spectrum(prev1, &format!("0{w}"))?);
        let holds = if odd {
            low.min() == high.min()
        } else {
            low.max().map(|c| c + 1) == high.max()
        };
        if !holds {
            return Err(Error::ConstructionInvariant(format!(
                "Γ_{n}: spectra of {w} in Γ_{} and 0{w} in Γ_{} do not line up",
                n - 2,
                n - 1
            )));
        }
    }

    let g = Arc::new(generate(&Family::Fibonacci(n))?);
    let colors = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (
                g.label(a).as_bits().expect("bits"),
                g.label(b).as_bits().expect("bits"),
            );
            let color = match (x.starts_with('0'), y.starts_with('0')) {
                (true, true) => prev1.color_by_labels(&bits(&x[1..]), &bits(&y[1..]))? + odd as u32,
                (false, false) => prev2.color_by_labels(&bits(&x[2..]), &bits(&y[2..]))? + 1,
                _ => {
                    let w = if x.starts_with('1') { &x[2..] } else { &y[2..] };
                    let s = spectrum(prev2, w)?;
                    if odd {
                        s.min().expect("nonempty spectrum")
                    } else {
                        s.max().expect("nonempty spectrum") + 2
                    }
                }
            };
            Ok(color)
        })
        .collect::<Result<Vec<u32>>>()?;
    construction_checked(EdgeColoring::new(g, t, colors)?)
}
