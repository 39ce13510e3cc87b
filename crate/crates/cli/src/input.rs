use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use intercol::constructions::{
    caterpillar_separable, complete_bipartite_separable, cycle_separable, fibonacci_min_coloring,
    fibonacci_plus_coloring, hypercube_max_separable, product_max_coloring, SeparableColoring,
};
use intercol::graph::{io, Descriptor, Family};
use intercol::oracle::{feasible_spectrum, Extremum, SearchOptions};
use intercol::{EdgeColoring, Graph};

use crate::Exit;

/// A graph given either as a file (JSON or DOT) or as a family descriptor.
pub enum Source {
    File(Graph),
    Family(Descriptor),
}

impl Source {
    pub fn parse(text: &str) -> Result<Source> {
        let path = Path::new(text);
        if path.exists() {
            return Ok(Source::File(read_graph(path)?));
        }
        let d: Descriptor = text
            .parse()
            .with_context(|| format!("{text:?} is neither a file nor a family descriptor"))?;
        Ok(Source::Family(d))
    }

    pub fn graph(&self) -> Result<Graph> {
        match self {
            Source::File(g) => Ok(g.clone()),
            Source::Family(d) => Ok(d.generate()?),
        }
    }
}

/// Joins `torus 4 4` into `torus:4,4`; a lone argument is taken as written.
pub fn descriptor_text(name: &str, params: &[usize]) -> String {
    if params.is_empty() {
        name.to_string()
    } else {
        let joined: Vec<String> = params.iter().map(usize::to_string).collect();
        format!("{name}:{}", joined.join(","))
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_dot = path.extension().is_some_and(|e| e == "dot" || e == "gv")
        || text.trim_start().starts_with("graph");
    let g = if is_dot {
        io::from_dot(&text)?.0
    } else {
        io::from_json(&text)?
    };
    Ok(g)
}

pub fn read_coloring(graph: Arc<Graph>, path: &Path) -> Result<EdgeColoring> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(intercol::coloring::io::from_json(graph, &text)?)
}

/// Constructions that come with a root, addressed as in `color --method`:
/// `cycle:n` is `C_{2n}`, `caterpillar:k1,..`, `kmn:m,n`, `hypercube:n`.
pub fn separable_spec(text: &str) -> Result<SeparableColoring> {
    let (name, rest) = text.split_once(':').unwrap_or((text, ""));
    let params = rest
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .with_context(|| format!("bad parameter {p:?}"))
        })
        .collect::<Result<Vec<_>>>()?;
    let sc = match (name, params.as_slice()) {
        ("cycle" | "c", [n]) => cycle_separable(*n)?,
        ("caterpillar" | "cat", ks) => caterpillar_separable(ks)?,
        ("kmn" | "complete_bipartite", [m, n]) => complete_bipartite_separable(*m, *n)?,
        ("hypercube" | "q", [n]) => hypercube_max_separable(*n)?,
        _ => bail!("unknown separable coloring {text:?}; use cycle:n, caterpillar:k1,..., kmn:m,n or hypercube:n"),
    };
    Ok(sc)
}

/// Largest interval coloring available for a graph: an explicit
/// construction for families that have one, otherwise the oracle's witness
/// at the largest feasible palette.
pub fn known_coloring(src: &Source, opts: &SearchOptions) -> Result<EdgeColoring> {
    if let Source::Family(d) = src {
        let mut parts = d.factors().iter();
        let first = parts.next().expect("descriptor has a factor");
        if let Some(mut acc) = family_coloring(first)? {
            let mut ok = true;
            for f in parts {
                match family_coloring(f)?.map(|beta| product_max_coloring(&acc, &beta)) {
                    Some(Ok(c)) => acc = c,
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Ok(acc);
            }
        }
    }
    oracle_max(src.graph()?, opts)
}

fn family_coloring(f: &Family) -> Result<Option<EdgeColoring>> {
    Ok(Some(match f {
        Family::Path(n) if *n >= 2 => caterpillar_separable(&vec![0; n - 2])?.into_coloring(),
        Family::Complete(2) => caterpillar_separable(&[])?.into_coloring(),
        Family::Cycle(n) if n % 2 == 0 => cycle_separable(n / 2)?.into_coloring(),
        Family::CompleteBipartite(m, n) => complete_bipartite_separable(*m, *n)?.into_coloring(),
        Family::Hypercube(n) => hypercube_max_separable(*n)?.into_coloring(),
        Family::Caterpillar(ks) => caterpillar_separable(ks)?.into_coloring(),
        Family::Fibonacci(n) if *n >= 3 => fibonacci_plus_coloring(*n)?,
        Family::Fibonacci(n) => fibonacci_min_coloring(*n)?,
        _ => return Ok(None),
    }))
}

fn oracle_max(g: Graph, opts: &SearchOptions) -> Result<EdgeColoring> {
    let g = Arc::new(g);
    let spectrum = feasible_spectrum(&g, None, opts)?;
    match spectrum.max() {
        Extremum::Value(t) => Ok(spectrum
            .witness(t)
            .expect("feasible palette has a witness")
            .clone()),
        Extremum::NotColorable => Err(Exit::new(1, "graph has no interval coloring").into()),
        Extremum::Undecided => {
            Err(Exit::new(3, "search budget exceeded before a coloring was settled").into())
        }
    }
}
