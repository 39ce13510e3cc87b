//! Membership in the distance classes `D(p_1, ..., p_d)`.
//!
//! `G` belongs to `D(p)` when for every `k` and every pair `u, v` at
//! distance `k`, `v` has at least `p_k` neighbors at distance `k - 1` from `u`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// For each `k` in `1..=diam_e`, the fewest neighbors of `v` one step
/// closer to `u`, over all pairs at distance `k`. This is the largest
/// vector `p` with `G` in `D(p)`.
pub fn d_profile(g: &Graph) -> Result<Vec<u32>> {
    let dist = g.distances()?;
    let len = dist.edge_diameter() as usize;
    let mut profile = vec![u32::MAX; len];
    for u in 0..g.num_vertices() {
        let row = dist.row(u);
        for v in 0..g.num_vertices() {
            let k = row[v] as usize;
            if k == 0 || k > len {
                continue;
            }
            let closer = g
                .neighbors(v)
                .iter()
                .filter(|&&w| row[w] as usize == k - 1)
                .count() as u32;
            profile[k - 1] = profile[k - 1].min(closer);
        }
    }
    Ok(profile)
}

/// Checks `G ∈ D(p)`. `p` must have length `diam_e(G)`.
pub fn verify_d_membership(g: &Graph, p: &[u32]) -> Result<bool> {
    let profile = d_profile(g)?;
    if p.len() != profile.len() {
        return Err(Error::Precondition(format!(
            "vector has length {}, edge diameter is {}",
            p.len(),
            profile.len()
        )));
    }
    Ok(p.iter().zip(&profile).all(|(a, b)| a <= b))
}

/// Vector for `T(2n_1, ..., 2n_k)`: `n_1` ones, `n_2` twos, ..., `n_k - 1`
/// copies of `k`, with `n_1 >= ... >= n_k`.
pub fn torus_d_vector(half_lengths: &[usize]) -> Vec<u32> {
    let mut ns = half_lengths.to_vec();
    ns.sort_unstable_by(|a, b| b.cmp(a));
    let k = ns.len();
    let mut p = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        let copies = if i + 1 == k { n.saturating_sub(1) } else { n };
        p.extend(std::iter::repeat_n(i as u32 + 1, copies));
    }
    p
}

/// Vector `(1, 2, ..., k)` for `H(2n_1, ..., 2n_k)` with every `n_i >= 2`.
pub fn hamming_d_vector(k: usize) -> Vec<u32> {
    (1..=k as u32).collect()
}
