use std::fs;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use intercol::bounds::{report_with, ReportOptions};
use intercol::coloring::{io::ColoringJson, is_separable, verify_interval_with, VerifyMode};
use intercol::constructions::{
    caterpillar_separable, complete_bipartite_separable, cycle_separable, fibonacci_min_coloring,
    fibonacci_plus_coloring, hypercube_max_separable, product_max_coloring,
    separable_product_coloring, SeparableColoring,
};
use intercol::graph::{cartesian_product, io, Descriptor, VertexLabel};
use intercol::oracle::{feasible_spectrum, search, SearchOptions, SearchOutcome, SpectrumStatus};
use intercol::{EdgeColoring, Graph};
use serde_json::{json, Value};

use crate::input::{descriptor_text, known_coloring, read_coloring, separable_spec, Source};
use crate::{table, ColorArgs, Command, Method, Output, SearchArgs};

pub fn run(cmd: Command, as_table: bool) -> Result<u8> {
    match cmd {
        Command::Gen {
            family,
            params,
            out,
        } => {
            let d: Descriptor = descriptor_text(&family, &params).parse()?;
            emit(&out, &graph_json(&d.generate()?), as_table)?;
            Ok(0)
        }
        Command::Product { g, h, out } => {
            let p = cartesian_product(&Source::parse(&g)?.graph()?, &Source::parse(&h)?.graph()?);
            emit(&out, &graph_json(&p), as_table)?;
            Ok(0)
        }
        Command::Color(args) => color(args, as_table),
        Command::Verify {
            graph,
            coloring,
            separable,
            relaxed,
        } => {
            let g = Arc::new(Source::parse(&graph)?.graph()?);
            let c = read_coloring(Arc::clone(&g), &coloring)?;
            let mode = if relaxed {
                VerifyMode::Relaxed
            } else {
                VerifyMode::Strict
            };
            let cert = verify_interval_with(&c, mode);
            let mut v = serde_json::to_value(&cert)?;
            let mut ok = cert.is_valid();
            if let Some(root) = separable {
                let label: VertexLabel = root.parse()?;
                let r = g.vertex(&label)?;
                if ok {
                    let s = is_separable(&c, r)?;
                    ok = s.separable;
                    v["separable"] = json!({
                        "root": label,
                        "separable": s.separable,
                        "first_failing": s.first_failing.map(|x| g.label(x).clone()),
                    });
                }
            }
            emit(&Output { out: None }, &v, as_table)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Bounds {
            family,
            params,
            edge_budget,
        } => {
            let d: Descriptor = descriptor_text(&family, &params).parse()?;
            let opts = ReportOptions {
                edge_budget,
                ..ReportOptions::default()
            };
            let r = report_with(&d, &opts)?;
            if as_table {
                print_stdout(&table::bounds(&r))?;
            } else {
                print_stdout(&serde_json::to_string_pretty(&r)?)?;
            }
            Ok(if r.not_colorable() { 1 } else { 0 })
        }
        Command::Search(args) => search_cmd(args, as_table),
        Command::Export {
            graph,
            coloring,
            dot: _,
            out,
        } => {
            let g = Arc::new(Source::parse(&graph)?.graph()?);
            let text = match coloring {
                Some(path) => {
                    let c = read_coloring(Arc::clone(&g), &path)?;
                    io::to_dot(&g, Some(c.colors()))
                }
                None => io::to_dot(&g, None),
            };
            write_text(&out, &text)?;
            Ok(0)
        }
    }
}

fn graph_json(g: &Graph) -> Value {
    serde_json::to_value(io::GraphJson::from(g)).expect("graph serializes")
}

fn emit(out: &Output, v: &Value, as_table: bool) -> Result<()> {
    let text = if as_table {
        table::object(v)
    } else {
        serde_json::to_string_pretty(v)?
    };
    write_text(out, &text)
}

fn write_text(out: &Output, text: &str) -> Result<()> {
    match &out.out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display())),
        None => print_stdout(text),
    }
}

/// Prints, treating a closed pipe as success.
pub fn print_stdout(text: &str) -> Result<()> {
    use std::io::Write;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn one<T: std::str::FromStr>(args: &[String], what: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    match args {
        [a] => a
            .parse()
            .map_err(|e| anyhow::anyhow!("bad {what} {a:?}: {e}")),
        _ => bail!("expected exactly one argument: {what}"),
    }
}

fn numbers(args: &[String]) -> Result<Vec<usize>> {
    args.iter()
        .map(|a| {
            a.parse::<usize>()
                .with_context(|| format!("bad number {a:?}"))
        })
        .collect()
}

fn color(args: ColorArgs, as_table: bool) -> Result<u8> {
    let opts = SearchOptions {
        budget: args.budget.budget,
        ..SearchOptions::default()
    };
    let a = &args.args;
    let coloring_for = |src: &str, file: &Option<std::path::PathBuf>| -> Result<EdgeColoring> {
        let src = Source::parse(src)?;
        match file {
            Some(path) => read_coloring(Arc::new(src.graph()?), path),
            None => known_coloring(&src, &opts),
        }
    };
    let separable = |sc: SeparableColoring| -> (EdgeColoring, Option<Value>) {
        let summary = serde_json::to_value(sc.summary()).expect("summary serializes");
        (sc.into_coloring(), Some(summary))
    };
    let (c, extra) = match args.method {
        Method::Cycle => separable(cycle_separable(one(a, "n")?)?),
        Method::Caterpillar => separable(caterpillar_separable(&numbers(a)?)?),
        Method::Kmn => match numbers(a)?.as_slice() {
            [m, n] => separable(complete_bipartite_separable(*m, *n)?),
            _ => bail!("kmn takes two arguments m n"),
        },
        Method::HypercubeMax => separable(hypercube_max_separable(one(a, "n")?)?),
        Method::FibMin => (fibonacci_min_coloring(one(a, "n")?)?, None),
        Method::FibPlus => (fibonacci_plus_coloring(one(a, "n")?)?, None),
        Method::ProductMax => match a.as_slice() {
            [g, h] => {
                let alpha = coloring_for(g, &args.g_coloring)?;
                let beta = coloring_for(h, &args.h_coloring)?;
                (product_max_coloring(&alpha, &beta)?, None)
            }
            _ => bail!("product-max takes two graphs G H"),
        },
        Method::SeparableProduct => match a.as_slice() {
            [spec, h] => {
                let sc = separable_spec(spec)?;
                let beta = coloring_for(h, &args.h_coloring)?;
                (separable_product_coloring(&sc, &beta)?, None)
            }
            _ => bail!("separable-product takes a separable coloring and a graph: SPEC H"),
        },
    };
    if let Some(path) = &args.graph_out {
        fs::write(path, io::to_json(c.graph()))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let mut v = serde_json::to_value(ColoringJson::from(&c))?;
    if let Some(extra) = extra {
        v["separable"] = extra;
    }
    emit(&args.out, &v, as_table)?;
    Ok(0)
}

fn search_cmd(args: SearchArgs, as_table: bool) -> Result<u8> {
    let g = Arc::new(Source::parse(&args.graph)?.graph()?);
    let opts = SearchOptions {
        budget: args.budget.budget,
        pruning: !args.no_pruning,
        symmetry_breaking: args.symmetry,
    };
    if let Some(t) = args.t {
        let r = search(&g, t, &opts)?;
        let (status, witness, code) = match &r.outcome {
            SearchOutcome::Found(c) => ("found", Some(ColoringJson::from(c)), 0),
            SearchOutcome::Exhausted => ("exhausted", None, 1),
            SearchOutcome::BudgetExceeded { .. } => ("budget_exceeded", None, 3),
        };
        let v = json!({"t": t, "status": status, "nodes": r.nodes, "witness": witness});
        emit(&args.out, &v, as_table)?;
        return Ok(code);
    }
    if !args.spectrum && args.t_max.is_none() {
        bail!("give --t N or --spectrum");
    }
    let s = feasible_spectrum(&g, args.t_max, &opts)?;
    let v = s.to_json();
    if as_table {
        write_text(&args.out, &table::spectrum(&v))?;
    } else {
        emit(&args.out, &v, false)?;
    }
    Ok(match s.status() {
        SpectrumStatus::Complete => 0,
        SpectrumStatus::NotColorable => 1,
        SpectrumStatus::BudgetExceeded => 3,
    })
}
