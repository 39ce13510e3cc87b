use serde::Serialize;

use super::factor::Factorization;
use super::formulas::*;
use super::invariants::Invariants;
use super::noncolorable::{self, Obstruction, DEFAULT_EDGE_BUDGET};
use crate::error::Result;
use crate::graph::{Descriptor, Family, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    #[serde(rename = "lower_W")]
    LowerW,
    #[serde(rename = "upper_W")]
    UpperW,
    #[serde(rename = "exact_w")]
    ExactW,
    #[serde(rename = "not_colorable")]
    NotColorable,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::LowerW => "lower_W",
            Direction::UpperW => "upper_W",
            Direction::ExactW => "exact_w",
            Direction::NotColorable => "not_colorable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub direction: Direction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub descriptor: String,
    pub invariants: Invariants,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    fn values(&self, dir: Direction) -> impl Iterator<Item = i64> + '_ {
        self.entries
            .iter()
            .filter(move |e| e.direction == dir)
            .filter_map(|e| e.value)
    }

    /// Best lower bound on `W`.
    pub fn lower(&self) -> Option<i64> {
        self.values(Direction::LowerW).max()
    }

    /// Best upper bound on `W`, valid when the graph is colorable.
    pub fn upper(&self) -> Option<i64> {
        self.values(Direction::UpperW).min()
    }

    pub fn exact_w(&self) -> Option<i64> {
        self.values(Direction::ExactW).next()
    }

    pub fn not_colorable(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.direction == Direction::NotColorable)
    }

    /// Every lower bound and exact value comes from a coloring that exists.
    pub fn known_colorable(&self) -> bool {
        self.lower().is_some() || self.exact_w().is_some()
    }

    pub fn find(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    /// Graphs with at most this many edges get an exact chromatic index test.
    pub edge_budget: usize,
    pub node_budget: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            edge_budget: DEFAULT_EDGE_BUDGET,
            node_budget: 10_000_000,
        }
    }
}

struct Entries(Vec<BoundEntry>);

impl Entries {
    fn value(&mut self, name: &str, direction: Direction, value: i64, citation: &str) {
        self.0.push(BoundEntry {
            name: name.into(),
            direction,
            value: Some(value),
            verdict: None,
            citation: citation.into(),
        });
    }

    fn lower(&mut self, name: &str, value: i64, citation: &str) {
        self.value(name, Direction::LowerW, value, citation);
    }

    fn upper(&mut self, name: &str, value: i64, citation: &str) {
        self.value(name, Direction::UpperW, value, citation);
    }

    fn exact_w(&mut self, name: &str, value: i64, citation: &str) {
        self.value(name, Direction::ExactW, value, citation);
    }

    fn not_colorable(&mut self, name: &str, verdict: String, citation: &str) {
        self.0.push(BoundEntry {
            name: name.into(),
            direction: Direction::NotColorable,
            value: None,
            verdict: Some(verdict),
            citation: citation.into(),
        });
    }

    fn obstruction(&mut self, name: &str, o: Option<Obstruction>) {
        if let Some(o) = o {
            self.not_colorable(name, o.detail, o.citation);
        }
    }
}

pub fn report(d: &Descriptor) -> Result<BoundReport> {
    report_with(d, &ReportOptions::default())
}

pub fn report_with(d: &Descriptor, opts: &ReportOptions) -> Result<BoundReport> {
    let inv = Invariants::of_descriptor(d)?;
    let mut out = Entries(Vec::new());
    if inv.edges > 0 {
        generic(&inv, &mut out);
        if inv.edges as usize <= opts.edge_budget {
            chromatic(&d.generate()?, opts, &mut out)?;
        }
        match d.factors() {
            [f] => family(f, &inv, &mut out)?,
            factors => product(factors, opts, &mut out)?,
        }
    }
    Ok(BoundReport {
        descriptor: d.to_string(),
        invariants: inv,
        entries: out.0,
    })
}

/// Report for an arbitrary connected graph: only parameter-based entries.
pub fn report_graph(g: &Graph, opts: &ReportOptions) -> Result<BoundReport> {
    let inv = Invariants::of_graph(g)?;
    let mut out = Entries(Vec::new());
    if inv.edges > 0 {
        generic(&inv, &mut out);
        chromatic(g, opts, &mut out)?;
    }
    Ok(BoundReport {
        descriptor: "graph".into(),
        invariants: inv,
        entries: out.0,
    })
}

fn generic(inv: &Invariants, out: &mut Entries) {
    out.upper(
        "diameter bound",
        ub_asratian_kamalian(inv.diameter, inv.max_degree, inv.bipartite),
        "diameter and maximum degree bound for interval colorings",
    );
    if inv.triangle_free {
        out.upper(
            "triangle-free bound",
            ub_triangle_free(inv.vertices),
            "triangle-free graphs use at most |V| - 1 colors",
        );
    }
    out.obstruction("Eulerian odd size", noncolorable::eulerian_odd(inv));
    out.obstruction("overfull", noncolorable::overfull(inv));
}

fn chromatic(g: &Graph, opts: &ReportOptions, out: &mut Entries) -> Result<()> {
    if g.num_edges() > opts.edge_budget {
        return Ok(());
    }
    let test = noncolorable::test_chromatic_index(g, opts.edge_budget, opts.node_budget)?;
    out.obstruction("chromatic index", test.obstruction());
    Ok(())
}

fn family(f: &Family, inv: &Invariants, out: &mut Entries) -> Result<()> {
    match f {
        Family::Path(n) => out.lower(
            "path coloring",
            *n as i64 - 1,
            "trees are colorable with |E| colors",
        ),
        Family::Cycle(n) => torus(&[*n], out)?,
        Family::Complete(n) => hamming(&[*n], out)?,
        Family::CompleteBipartite(m, n) => {
            let (m, n) = (*m as i64, *n as i64);
            let cite = "complete bipartite spectrum (prior work)";
            out.lower("complete bipartite coloring", m + n - 1, cite);
            out.exact_w("complete bipartite minimum", m + n - gcd(m, n), cite);
        }
        Family::Hypercube(n) => {
            let n = *n as i64;
            let cite = "hypercube spectrum (prior work)";
            out.lower("hypercube coloring", ub_hypercube(n), cite);
            out.upper(
                "hypercube upper bound",
                ub_hypercube(n),
                "hypercube upper bound from the distance class",
            );
            out.exact_w("hypercube minimum", n, cite);
        }
        Family::Torus(ns) => torus(ns, out)?,
        Family::Hamming(ns) => hamming(ns, out)?,
        Family::Fibonacci(n) => {
            let n = *n as i64;
            out.exact_w(
                "Fibonacci cube minimum",
                n,
                "Fibonacci cubes have a minimum interval palette of n colors",
            );
            let w = if n >= 3 { n + 1 } else { n };
            out.lower(
                "Fibonacci cube coloring",
                w,
                "Fibonacci cubes have an interval (n+1)-coloring for n >= 3",
            );
        }
        Family::Caterpillar(_) => out.lower(
            "caterpillar coloring",
            inv.edges,
            "trees are colorable with |E| colors",
        ),
        Family::Butterfly | Family::Petersen => {}
    }
    Ok(())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn torus(lengths: &[usize], out: &mut Entries) -> Result<()> {
    let k = lengths.len() as i64;
    if lengths.iter().all(|n| n % 2 == 1) {
        out.not_colorable(
            "torus criterion",
            format!("every cycle length in {lengths:?} is odd"),
            "tori are colorable exactly when some cycle is even (prior work)",
        );
        return Ok(());
    }
    out.exact_w(
        "torus minimum",
        2 * k,
        "tori have a minimum interval palette of 2k colors",
    );
    let halves: Vec<i64> = lengths
        .iter()
        .filter(|n| *n % 2 == 0)
        .map(|&n| n as i64 / 2)
        .collect();
    let odd: Vec<i64> = lengths
        .iter()
        .filter(|n| *n % 2 == 1)
        .map(|&n| (n as i64 - 1) / 2)
        .collect();
    if odd.is_empty() {
        out.lower(
            "even torus lower bound",
            lb_torus_even(&halves)?,
            "even torus lower bound",
        );
        out.upper(
            "even torus upper bound",
            ub_torus(&halves)?,
            "even torus upper bound from the distance class",
        );
        if k >= 2 && halves.iter().all(|&h| h == halves[0]) {
            out.lower(
                "uniform torus lower bound",
                lb_torus_uniform(halves[0], k),
                "uniform even torus lower bound",
            );
        }
        if k == 2 {
            out.lower(
                "two-dimensional torus bound",
                lb_two_torus_even(halves[0], halves[1])?,
                "two-dimensional even torus lower bound (prior work)",
            );
        }
    } else if halves.len() >= odd.len() {
        out.lower(
            "mixed torus lower bound",
            lb_torus_mixed(&odd, &halves)?,
            "torus with odd cycles lower bound",
        );
        if k == 2 {
            out.lower(
                "two-dimensional torus bound",
                lb_two_torus_mixed(halves[0], odd[0])?,
                "two-dimensional torus with one odd cycle lower bound (prior work)",
            );
        }
    }
    Ok(())
}

fn hamming(orders: &[usize], out: &mut Entries) -> Result<()> {
    let ns: Vec<i64> = orders
        .iter()
        .filter(|&&n| n > 1)
        .map(|&n| n as i64)
        .collect();
    if ns.is_empty() {
        return Ok(());
    }
    if ns.iter().all(|n| n % 2 == 1) {
        out.not_colorable(
            "Hamming criterion",
            format!("every factor order in {orders:?} is odd"),
            "Hamming graphs are colorable exactly when some factor order is even (prior work)",
        );
        return Ok(());
    }
    out.exact_w(
        "Hamming minimum",
        ns.iter().map(|n| n - 1).sum(),
        "Hamming graphs have a minimum palette of the sum of n_i - 1",
    );
    if ns.iter().any(|n| n % 2 == 1) {
        return Ok(());
    }
    let halves: Vec<i64> = ns.iter().map(|n| n / 2).collect();
    let k = halves.len() as i64;
    let complete = halves
        .iter()
        .map(|&h| Ok(lb_complete_even(&Factorization::new(h as u64)?)))
        .collect::<Result<Vec<_>>>()?;
    if k == 1 {
        out.lower(
            "complete graph lower bound",
            complete[0],
            "even complete graph lower bound (prior work)",
        );
    } else {
        // smallest factor last, the rest ascending
        let mut idx: Vec<usize> = (0..halves.len()).collect();
        idx.sort_by_key(|&i| halves[i]);
        idx.rotate_left(1);
        let w: Vec<i64> = idx.iter().map(|&i| complete[i]).collect();
        let h: Vec<i64> = idx.iter().map(|&i| halves[i]).collect();
        out.lower(
            "Hamming lower bound",
            lb_hamming(&w, &h)?,
            "Hamming graph lower bound from complete factors",
        );
        if halves.iter().all(|&x| x == halves[0]) {
            let f = Factorization::new(halves[0] as u64)?;
            out.lower(
                "uniform Hamming lower bound",
                lb_hamming_uniform(&f, k),
                "uniform Hamming graph lower bound",
            );
        }
    }
    out.upper(
        "Hamming upper bound",
        ub_hamming(&halves)?,
        "Hamming graph upper bound from the distance class",
    );
    if k >= 2 && halves.iter().all(|&x| x == halves[0]) {
        out.upper(
            "uniform Hamming upper bound",
            ub_hamming_uniform(halves[0], k),
            "uniform Hamming graph upper bound",
        );
    }
    Ok(())
}

fn separable_family(f: &Family, inv: &Invariants) -> Option<SeparableFamily> {
    match *f {
        Family::Cycle(n) if n % 2 == 0 => Some(SeparableFamily::EvenCycle { n: n as i64 / 2 }),
        Family::Path(n) if n >= 2 => Some(SeparableFamily::Path { n: n as i64 }),
        Family::Hypercube(n) => Some(SeparableFamily::Hypercube { n: n as i64 }),
        Family::Caterpillar(_) => Some(SeparableFamily::Caterpillar {
            edges: inv.edges,
            diam: inv.diameter,
        }),
        Family::CompleteBipartite(m, n) if m + n >= 3 => Some(SeparableFamily::CompleteBipartite {
            m: m as i64,
            n: n as i64,
        }),
        _ => None,
    }
}

fn product(factors: &[Family], opts: &ReportOptions, out: &mut Entries) -> Result<()> {
    let invs = factors
        .iter()
        .map(Invariants::of_family)
        .collect::<Result<Vec<_>>>()?;
    let reports = factors
        .iter()
        .map(|f| report_with(&Descriptor::from(f.clone()), opts))
        .collect::<Result<Vec<_>>>()?;
    let w: Vec<Option<i64>> = reports.iter().map(|r| r.lower()).collect();

    if factors.iter().all(|f| matches!(f, Family::Cycle(_))) {
        let lengths: Vec<usize> = factors.iter().flat_map(Family::params).collect();
        torus(&lengths, out)?;
    }
    if factors.iter().all(|f| matches!(f, Family::Complete(_))) {
        let orders: Vec<usize> = factors.iter().flat_map(Family::params).collect();
        hamming(&orders, out)?;
    }

    if let [a, b] = invs.as_slice() {
        out.obstruction("Eulerian product", noncolorable::eulerian_product(a, b));
        out.obstruction("Eulerian product", noncolorable::eulerian_product(b, a));
        for (i, j) in [(0, 1), (1, 0)] {
            let (Some(wg), Some(wh), Some(r)) = (w[i], w[j], invs[j].regular) else {
                continue;
            };
            out.lower(
                "regular factor product bound",
                lb_product_general(wg, wh, r),
                "product with a regular factor",
            );
            if let Some(sf) = separable_family(&factors[i], &invs[i]) {
                out.lower(
                    "separable factor product bound",
                    lb_family(sf, wh, r)?,
                    "product of a separably colored factor and a regular factor",
                );
            }
        }
        if let (Some(wg), Some(wh), Some(r), Some(r2)) =
            (w[0], w[1], invs[0].regular, invs[1].regular)
        {
            out.lower(
                "two regular factors bound",
                lb_regular_pair(wg, wh, r, r2),
                "product of two regular factors",
            );
        }
    } else if w.iter().all(Option::is_some) && invs.iter().all(|i| i.regular.is_some()) {
        let ws: Vec<i64> = w.iter().flatten().copied().collect();
        let rs: Vec<i64> = invs.iter().filter_map(|i| i.regular).collect();
        out.lower(
            "iterated regular product bound",
            lb_regular_chain(&ws, &rs)?,
            "product of several regular factors",
        );
    }
    Ok(())
}
