//! Closed-form bounds on the largest interval palette `W`.
//!
//! Inputs are plain integers so that parameter sweeps far beyond anything
//! that can be materialized stay cheap. Functions that need ordered inputs
//! sort internally.

use super::factor::Factorization;
use crate::error::{Error, Result};

fn param(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

/// `W(G □ H) >= W(G) + W(H) + r` for an `r`-regular `H`.
pub fn lb_product_general(w_g: i64, w_h: i64, r: i64) -> i64 {
    w_g + w_h + r
}

/// Both factors regular, of degrees `r` and `r2`.
pub fn lb_regular_pair(w_g: i64, w_h: i64, r: i64, r2: i64) -> i64 {
    w_g + w_h + r.max(r2)
}

/// `k` regular factors: `ΣW_i + Σ_{i<k} Σ_{j<=i} r_j` with degrees taken in
/// nonincreasing order.
pub fn lb_regular_chain(ws: &[i64], rs: &[i64]) -> Result<i64> {
    param(ws.len() == rs.len(), || {
        format!("{} palettes for {} degrees", ws.len(), rs.len())
    })?;
    param(!ws.is_empty(), || "at least one factor".into())?;
    let mut rs = rs.to_vec();
    rs.sort_unstable_by(|a, b| b.cmp(a));
    let k = rs.len();
    let tail: i64 = (0..k - 1).map(|i| rs[..=i].iter().sum::<i64>()).sum();
    Ok(ws.iter().sum::<i64>() + tail)
}

/// From a separable `t_G`-coloring with root eccentricity `ecc`.
pub fn lb_separable(t_g: i64, t_h: i64, ecc: i64, r: i64) -> i64 {
    t_g + t_h + ecc * r
}

/// First factors with known separable colorings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparableFamily {
    /// `C_{2n}`
    EvenCycle {
        n: i64,
    },
    /// `P_n` on `n` vertices
    Path {
        n: i64,
    },
    Hypercube {
        n: i64,
    },
    /// Caterpillar with `edges` edges and diameter `diam`.
    Caterpillar {
        edges: i64,
        diam: i64,
    },
    CompleteBipartite {
        m: i64,
        n: i64,
    },
}

/// `W(G □ H)` lower bound for `G` in one of the separable families and an
/// `r`-regular `H` with `W(H) >= w_h`.
pub fn lb_family(g: SeparableFamily, w_h: i64, r: i64) -> Result<i64> {
    use SeparableFamily::*;
    match g {
        EvenCycle { n } => {
            param(n >= 2, || format!("even cycle needs n >= 2, got {n}"))?;
            Ok(n * (r + 1) + w_h + 1)
        }
        Path { n } => {
            param(n >= 2, || {
                format!("path needs at least 2 vertices, got {n}")
            })?;
            Ok((n - 1) * (r + 1) + w_h)
        }
        Hypercube { n } => {
            param(n >= 1, || format!("hypercube needs n >= 1, got {n}"))?;
            Ok(n * (n + 2 * r + 1) / 2 + w_h)
        }
        Caterpillar { edges, diam } => {
            param(edges >= 1 && diam >= 1, || {
                "caterpillar needs an edge".into()
            })?;
            Ok(edges + w_h + diam * r)
        }
        CompleteBipartite { m, n } => {
            // K_{1,1} has diameter 1, the closed form assumes 2
            param(m >= 1 && n >= 1 && m + n >= 3, || {
                format!("K_{{{m},{n}}} needs diameter 2")
            })?;
            Ok(m + n + 2 * r + w_h - 1)
        }
    }
}

/// `(diam + 1)(Δ - 1) + 1`, or `diam (Δ - 1) + 1` for bipartite graphs.
pub fn ub_asratian_kamalian(diam: i64, delta: i64, bipartite: bool) -> i64 {
    let factor = if bipartite { diam } else { diam + 1 };
    factor * (delta - 1) + 1
}

pub fn ub_triangle_free(num_vertices: i64) -> i64 {
    num_vertices - 1
}

/// `(1 + diam_e) Δ - Σ p_i` for a graph in `D(p_1, ..., p_{diam_e})`.
pub fn ub_d_class(diam_e: i64, delta: i64, p: &[i64]) -> Result<i64> {
    param(p.len() as i64 == diam_e, || {
        format!("profile has length {}, edge diameter is {diam_e}", p.len())
    })?;
    Ok((1 + diam_e) * delta - p.iter().sum::<i64>())
}

/// Bipartite form: `diam Δ - Σ_{i < diam} p_i`.
pub fn ub_d_class_bipartite(diam: i64, delta: i64, p: &[i64]) -> Result<i64> {
    param(p.len() as i64 == diam - 1, || {
        format!("profile has length {}, diameter is {diam}", p.len())
    })?;
    Ok(diam * delta - p.iter().sum::<i64>())
}

/// `T(2n_1, ..., 2n_k)`: `k + Σ n_i (2k - i)` with `n_1 >= ... >= n_k >= 2`.
pub fn ub_torus(ns: &[i64]) -> Result<i64> {
    param(!ns.is_empty() && ns.iter().all(|&n| n >= 2), || {
        "torus half-lengths must be >= 2".into()
    })?;
    let mut ns = ns.to_vec();
    ns.sort_unstable_by(|a, b| b.cmp(a));
    let k = ns.len() as i64;
    Ok(k + ns
        .iter()
        .enumerate()
        .map(|(i, &n)| n * (2 * k - (i as i64 + 1)))
        .sum::<i64>())
}

/// `H(2n_1, ..., 2n_k)`: `(k + 1) Σ (4n_i - 3) / 2`.
pub fn ub_hamming(ns: &[i64]) -> Result<i64> {
    param(!ns.is_empty() && ns.iter().all(|&n| n >= 1), || {
        "Hamming half-sizes must be >= 1".into()
    })?;
    let k = ns.len() as i64;
    Ok((k + 1) * ns.iter().map(|&n| 4 * n - 3).sum::<i64>() / 2)
}

/// `H_{2n}^k`: `k (k + 1) (4n - 3) / 2`.
pub fn ub_hamming_uniform(n: i64, k: i64) -> i64 {
    k * (k + 1) * (4 * n - 3) / 2
}

pub fn ub_hypercube(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// `T(2n_1, ..., 2n_k)`: `k + Σ n_i (2i - 1)` with `2 <= n_1 <= ... <= n_k`.
pub fn lb_torus_even(ns: &[i64]) -> Result<i64> {
    param(!ns.is_empty() && ns.iter().all(|&n| n >= 2), || {
        "torus half-lengths must be >= 2".into()
    })?;
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    let k = ns.len() as i64;
    Ok(k + ns
        .iter()
        .enumerate()
        .map(|(i, &n)| n * (2 * (i as i64 + 1) - 1))
        .sum::<i64>())
}

/// `T(2n_1, ..., 2n_{k+s}, 2m_1 + 1, ..., 2m_k + 1)`:
/// `s + 2k² + 2 Σ_{i<=k} (m_i + n_i) + Σ_{j<=s} n_{k+j} (4k + 2j - 1)`,
/// both lists ascending. Each odd cycle is paired with one of the `k`
/// shortest even cycles through the two-factor bound.
pub fn lb_torus_mixed(ms: &[i64], ns: &[i64]) -> Result<i64> {
    param(!ms.is_empty() && ms.iter().all(|&m| m >= 1), || {
        "odd half-lengths must be >= 1".into()
    })?;
    param(ns.iter().all(|&n| n >= 2), || {
        "even half-lengths must be >= 2".into()
    })?;
    param(ns.len() >= ms.len(), || {
        "need at least as many even cycles as odd ones".into()
    })?;
    let (mut ms, mut ns) = (ms.to_vec(), ns.to_vec());
    ms.sort_unstable();
    ns.sort_unstable();
    let k = ms.len() as i64;
    let s = ns.len() as i64 - k;
    let paired: i64 = ms.iter().zip(&ns).map(|(m, n)| m + n).sum();
    let rest: i64 = ns[k as usize..]
        .iter()
        .enumerate()
        .map(|(j, &n)| n * (4 * k + 2 * (j as i64 + 1) - 1))
        .sum();
    Ok(s + 2 * k * k + 2 * paired + rest)
}

/// `T(2n, ..., 2n)` with `k` factors: `n k² + k`.
pub fn lb_torus_uniform(n: i64, k: i64) -> i64 {
    n * k * k + k
}

/// `T(2m, 2n)`, `m, n >= 2`: `max(3m + n + 2, 3n + m + 2)`.
pub fn lb_two_torus_even(m: i64, n: i64) -> Result<i64> {
    param(m >= 2 && n >= 2, || "half-lengths must be >= 2".into())?;
    Ok((3 * m + n + 2).max(3 * n + m + 2))
}

/// `T(2m, 2n + 1)`, `m >= 2`, `n >= 1`: `2m + 2n + 2`, plus one when `m` is even.
pub fn lb_two_torus_mixed(m: i64, n: i64) -> Result<i64> {
    param(m >= 2 && n >= 1, || "need m >= 2 and n >= 1".into())?;
    Ok(2 * m + 2 * n + 2 + i64::from(m % 2 == 0))
}

/// `W(K_{2n}) >= 4n - 3 - A_n`.
pub fn lb_complete_even(n: &Factorization) -> i64 {
    4 * n.n() as i64 - 3 - n.a_n()
}

/// `H(2n_1, ..., 2n_k)`: `Σ W(K_{2n_i}) + Σ_{i<k} i (2n_i - 1)` in the given
/// order. Every order is valid; see [`lb_regular_chain`] for the best one.
pub fn lb_hamming(w_complete: &[i64], ns: &[i64]) -> Result<i64> {
    param(w_complete.len() == ns.len() && !ns.is_empty(), || {
        "one palette per factor".into()
    })?;
    let k = ns.len();
    Ok(w_complete.iter().sum::<i64>()
        + (0..k - 1)
            .map(|i| (i as i64 + 1) * (2 * ns[i] - 1))
            .sum::<i64>())
}

/// `H_{2n}^k`: `(4n - 3 - A_n) k + k (k - 1) (2n - 1) / 2`.
pub fn lb_hamming_uniform(n: &Factorization, k: i64) -> i64 {
    lb_complete_even(n) * k + k * (k - 1) * (2 * n.n() as i64 - 1) / 2
}
