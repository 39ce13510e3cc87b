use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{cartesian_product_all, Graph, VertexLabel};
use crate::error::{Error, Result};

/// Named graph families.
///
/// Text form is `name:arg,arg,...`, e.g. `cycle:8`, `torus:4,6`,
/// `caterpillar:1,2,2,0`. Short aliases are accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Hypercube(usize),
    /// Product of cycles of the given lengths.
    Torus(Vec<usize>),
    /// Product of complete graphs of the given orders.
    Hamming(Vec<usize>),
    Fibonacci(usize),
    /// Leaf counts `k_1..k_{n-1}` hanging off the inner spine vertices
    /// `u_1..u_{n-1}` of the spine `u_0..u_n`.
    Caterpillar(Vec<usize>),
    Butterfly,
    Petersen,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Hypercube(_) => "hypercube",
            Family::Torus(_) => "torus",
            Family::Hamming(_) => "hamming",
            Family::Fibonacci(_) => "fibonacci",
            Family::Caterpillar(_) => "caterpillar",
            Family::Butterfly => "butterfly",
            Family::Petersen => "petersen",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Hypercube(n)
            | Family::Fibonacci(n) => vec![*n],
            Family::CompleteBipartite(m, n) => vec![*m, *n],
            Family::Torus(v) | Family::Hamming(v) | Family::Caterpillar(v) => v.clone(),
            Family::Butterfly | Family::Petersen => vec![],
        }
    }

    /// Builds a family from a name (or alias) and its parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family> {
        let one = |what: &str| -> Result<usize> {
            match params {
                [n] => Ok(*n),
                _ => Err(Error::Parameter(format!(
                    "{what} takes exactly one parameter"
                ))),
            }
        };
        let family = match name.to_ascii_lowercase().as_str() {
            "path" | "p" => Family::Path(one("path")?),
            "cycle" | "c" => Family::Cycle(one("cycle")?),
            "complete" | "k" => Family::Complete(one("complete")?),
            "complete_bipartite" | "kmn" | "kb" => match params {
                [m, n] => Family::CompleteBipartite(*m, *n),
                _ => {
                    return Err(Error::Parameter(
                        "complete_bipartite takes two parameters m,n".into(),
                    ))
                }
            },
            "hypercube" | "q" => Family::Hypercube(one("hypercube")?),
            "torus" | "t" => Family::Torus(params.to_vec()),
            "hamming" | "h" => Family::Hamming(params.to_vec()),
            "fibonacci" | "fib" => Family::Fibonacci(one("fibonacci")?),
            "caterpillar" | "cat" => Family::Caterpillar(params.to_vec()),
            "butterfly" => {
                no_params("butterfly", params)?;
                Family::Butterfly
            }
            "petersen" => {
                no_params("petersen", params)?;
                Family::Petersen
            }
            other => return Err(Error::Parameter(format!("unknown graph family {other:?}"))),
        };
        family.validate()?;
        Ok(family)
    }

    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        let positive = |what: &str, n: usize| {
            if n >= 1 {
                Ok(())
            } else {
                Err(Error::Parameter(format!("{what} must be at least 1")))
            }
        };
        match self {
            Family::Path(n) => positive("path order", *n),
            Family::Cycle(n) => {
                if *n >= 3 {
                    Ok(())
                } else {
                    Err(Error::Parameter(format!(
                        "cycle length must be at least 3, got {n}"
                    )))
                }
            }
            Family::Complete(n) => positive("complete graph order", *n),
            Family::CompleteBipartite(m, n) => {
                positive("complete bipartite side m", *m)?;
                positive("complete bipartite side n", *n)
            }
            Family::Hypercube(n) => positive("hypercube dimension", *n),
            Family::Torus(ns) => {
                if ns.is_empty() {
                    return Err(Error::Parameter(
                        "torus needs at least one cycle length".into(),
                    ));
                }
                match ns.iter().find(|&&n| n < 3) {
                    Some(n) => Err(Error::Parameter(format!(
                        "torus factor lengths must be at least 3, got {n}"
                    ))),
                    None => Ok(()),
                }
            }
            Family::Hamming(ns) => {
                if ns.is_empty() {
                    return Err(Error::Parameter(
                        "hamming graph needs at least one factor".into(),
                    ));
                }
                ns.iter()
                    .try_for_each(|&n| positive("hamming factor order", n))
            }
            Family::Fibonacci(n) => positive("fibonacci cube dimension", *n),
            Family::Caterpillar(_) | Family::Butterfly | Family::Petersen => Ok(()),
        }
    }
}

fn no_params(name: &str, params: &[usize]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{name} takes no parameters")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            return f.write_str(self.name());
        }
        let joined: Vec<String> = params.iter().map(usize::to_string).collect();
        write!(f, "{}:{}", self.name(), joined.join(","))
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        let (name, rest) = match s.split_once(':') {
            Some((name, rest)) => (name, rest),
            // compact single-parameter form such as `k2` or `c8`
            None => match s.find(|c: char| c.is_ascii_digit()) {
                Some(i) if i > 0 && s[i..].bytes().all(|b| b.is_ascii_digit()) => {
                    (&s[..i], &s[i..])
                }
                _ => (s, ""),
            },
        };
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(name, &params)
    }
}

/// Generates a family member with canonical labels: integers for simple
/// families, bitstrings for hypercubes and Fibonacci cubes, tuples for tori
/// and Hamming graphs.
pub fn generate(family: &Family) -> Result<Graph> {
    family.validate()?;
    match family {
        Family::Path(n) => Graph::from_index_edges(*n, (1..*n).map(|i| (i - 1, i))),
        Family::Cycle(n) => Graph::from_index_edges(*n, (0..*n).map(|i| (i, (i + 1) % n))),
        Family::Complete(n) => {
            Graph::from_index_edges(*n, (0..*n).flat_map(|i| (i + 1..*n).map(move |j| (i, j))))
        }
        Family::CompleteBipartite(m, n) => Graph::from_index_edges(
            m + n,
            (0..*m).flat_map(|i| (0..*n).map(move |j| (i, m + j))),
        ),
        Family::Hypercube(n) => {
            let labels: Vec<String> = (0..1usize << n).map(|x| bitstring(x, *n)).collect();
            let mut edges = Vec::new();
            for x in 0..1usize << n {
                for b in 0..*n {
                    let y = x ^ (1 << b);
                    if x < y {
                        edges.push((
                            VertexLabel::Bits(labels[x].clone()),
                            VertexLabel::Bits(labels[y].clone()),
                        ));
                    }
                }
            }
            Graph::from_labels(labels.into_iter().map(VertexLabel::Bits), edges)
        }
        Family::Torus(ns) => {
            let factors = ns
                .iter()
                .map(|&n| generate(&Family::Cycle(n)))
                .collect::<Result<Vec<_>>>()?;
            Ok(cartesian_product_all(&factors))
        }
        Family::Hamming(ns) => {
            let factors = ns
                .iter()
                .map(|&n| generate(&Family::Complete(n)))
                .collect::<Result<Vec<_>>>()?;
            Ok(cartesian_product_all(&factors))
        }
        Family::Fibonacci(n) => {
            let words = fibonacci_strings(*n);
            let mut edges = Vec::new();
            for (i, a) in words.iter().enumerate() {
                for b in &words[i + 1..] {
                    if a.bytes().zip(b.bytes()).filter(|(x, y)| x != y).count() == 1 {
                        edges.push((VertexLabel::Bits(a.clone()), VertexLabel::Bits(b.clone())));
                    }
                }
            }
            Graph::from_labels(words.into_iter().map(VertexLabel::Bits), edges)
        }
        Family::Caterpillar(ks) => {
            let (n_vertices, edges) = caterpillar_layout(ks);
            Graph::from_index_edges(n_vertices, edges.into_iter().map(|(u, v, _)| (u, v)))
        }
        Family::Butterfly => {
            Graph::from_index_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        }
        Family::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_index_edges(10, edges)
        }
    }
}

/// `n`-bit binary word of `x`, most significant bit first.
pub(crate) fn bitstring(x: usize, n: usize) -> String {
    (0..n)
        .rev()
        .map(|b| if x >> b & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Binary words of length `n` with no two consecutive 1s, in sorted order.
pub(crate) fn fibonacci_strings(n: usize) -> Vec<String> {
    let mut words = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(words.len() * 2);
        for w in &words {
            next.push(format!("{w}0"));
            if !w.ends_with('1') {
                next.push(format!("{w}1"));
            }
        }
        words = next;
    }
    words.sort();
    words
}

/// Edge `(u, v)` with its caterpillar role tag.
pub(crate) type RoleEdge = (usize, usize, (usize, usize));

/// Caterpillar vertex numbering shared with the separable construction.
///
/// Spine `u_0..u_n` gets labels `0..=n`; the leaves of `u_i` follow in
/// order of `i` then `j`. Each edge carries a role tag:
/// `(i, 0)` for the spine edge `u_i u_{i+1}` and `(i, j)` for `u_i v_i^j`.
pub(crate) fn caterpillar_layout(ks: &[usize]) -> (usize, Vec<RoleEdge>) {
    let n = ks.len() + 1;
    let mut edges: Vec<RoleEdge> = (0..n).map(|i| (i, i + 1, (i, 0))).collect();
    let mut next = n + 1;
    for (idx, &k) in ks.iter().enumerate() {
        let i = idx + 1;
        for j in 1..=k {
            edges.push((i, next, (i, j)));
            next += 1;
        }
    }
    (next, edges)
}
