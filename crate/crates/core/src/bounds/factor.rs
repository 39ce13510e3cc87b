use serde::Serialize;

use crate::error::{Error, Result};

/// Prime factorization by trial division, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    n: u64,
    /// `(p, α)` with `α >= 1`.
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("cannot factor 0".into()));
        }
        let mut factors = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            let mut alpha = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                alpha += 1;
            }
            if alpha > 0 {
                factors.push((p, alpha));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(Factorization { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Exponent of `p` (0 when `p` does not divide `n`).
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }

    /// `A_n = α_1 + 2α_2 + 3α_3 + 4α_4 + 4α_5 + ½ Σ_{i>=6} α_i (p_i + 1)`
    /// where `p_i` is the `i`-th prime.
    pub fn a_n(&self) -> i64 {
        self.factors
            .iter()
            .map(|&(p, a)| {
                let w = match p {
                    2 => 1,
                    3 => 2,
                    5 => 3,
                    7 | 11 => 4,
                    _ => (p as i64 + 1) / 2,
                };
                w * a as i64
            })
            .sum()
    }
}
