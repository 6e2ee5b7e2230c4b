//! Report shapes and renderers. JSON key order is fixed by the struct
//! declarations so identical inputs produce byte-identical output; timings
//! live in their own trailing field so golden comparisons can drop them.

use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use hankel_core::graph::ClosedGraph;
use hankel_core::resolution::BettiTable;
use hankel_core::verifier::{Check, InstanceReport, Status};

#[derive(Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub facets: Vec<[usize; 2]>,
}

pub fn graph_json(g: &ClosedGraph) -> GraphJson {
    GraphJson {
        n: g.n(),
        facets: g.facets().iter().map(|&(a, b)| [a, b]).collect(),
    }
}

#[derive(Serialize)]
pub struct InstanceJson {
    pub g1: GraphJson,
    pub g2: GraphJson,
}

pub fn instance_json(g1: &ClosedGraph, g2: &ClosedGraph) -> InstanceJson {
    InstanceJson {
        g1: graph_json(g1),
        g2: graph_json(g2),
    }
}

#[derive(Serialize)]
pub struct CheckJson {
    pub name: String,
    pub status: String,
    pub claimed: String,
    pub computed: String,
    pub paper_ref: String,
}

pub fn check_json(c: &Check) -> CheckJson {
    CheckJson {
        name: c.name.clone(),
        status: c.status.to_string(),
        claimed: c.claimed.clone(),
        computed: c.computed.clone(),
        paper_ref: c.reference.clone(),
    }
}

#[derive(Serialize)]
pub struct TimingsJson {
    pub total: u128,
}

#[derive(Serialize)]
pub struct GenJson {
    pub instance: InstanceJson,
    pub combined: GraphJson,
    pub num_vars: usize,
    pub order: String,
    pub pair_generators: Vec<String>,
    pub scroll_generators: Vec<String>,
}

#[derive(Serialize)]
pub struct GbJson {
    pub instance: InstanceJson,
    pub num_vars: usize,
    pub order: String,
    pub basis: Vec<String>,
}

#[derive(Serialize)]
pub struct BettiJson {
    pub betti: Vec<(usize, usize, u64)>,
    pub reg: u32,
    pub pd: usize,
    pub depth: usize,
}

pub fn betti_json(t: &BettiTable) -> BettiJson {
    BettiJson {
        betti: t.entries().iter().map(|(&(i, j), &v)| (i, j, v)).collect(),
        reg: t.regularity(),
        pd: t.proj_dim(),
        depth: t.depth(),
    }
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub instance: InstanceJson,
    pub prime: bool,
    pub radical: bool,
    pub linear_resolution: bool,
    pub min_primes: Vec<Vec<String>>,
    pub checks: Vec<CheckJson>,
    pub timings_ms: TimingsJson,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub instance: InstanceJson,
    pub checks: Vec<CheckJson>,
    pub timings_ms: TimingsJson,
}

#[derive(Serialize)]
pub struct SweepInstanceJson {
    pub instance: InstanceJson,
    pub checks: Vec<CheckJson>,
}

#[derive(Serialize)]
pub struct TotalsJson {
    pub pass: usize,
    pub flagged: usize,
    pub fail: usize,
}

#[derive(Serialize)]
pub struct SweepJson {
    pub max_m: usize,
    pub max_n: usize,
    pub checks: Vec<String>,
    pub instances: Vec<SweepInstanceJson>,
    pub totals: TotalsJson,
    pub aborted: bool,
    pub timings_ms: TimingsJson,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// One aligned text row per check. Claimed and computed are shown side by
/// side; the claim catalog key goes in brackets at the end.
pub fn text_checks(checks: &[Check]) -> String {
    let name_w = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        out.push_str(&format!(
            "[{:<7}] {:<name_w$}  claimed: {}; computed: {} [{}]\n",
            c.status.to_string(),
            c.name,
            c.claimed,
            c.computed,
            c.reference,
        ));
    }
    out
}

pub fn summary_line(checks: &[Check]) -> String {
    let mut pass = 0usize;
    let mut flagged = 0usize;
    let mut fail = 0usize;
    for c in checks {
        match c.status {
            Status::Pass => pass += 1,
            Status::Flagged => flagged += 1,
            Status::Fail => fail += 1,
        }
    }
    format!("summary: {} pass, {} flagged, {} fail\n", pass, flagged, fail)
}

pub fn text_instance_header(g1: &ClosedGraph, g2: &ClosedGraph) -> String {
    format!(
        "instance: {} x {} (ring has {} variables)\n",
        g1,
        g2,
        g1.n() + g2.n() - 1
    )
}

pub fn text_verify(rep: &InstanceReport) -> String {
    let mut out = text_instance_header(&rep.g1, &rep.g2);
    out.push_str(&text_checks(&rep.checks));
    out.push_str(&summary_line(&rep.checks));
    out
}

/// Macaulay2-style staircase: columns are homological degrees, row d holds
/// the Betti numbers of internal degree i+d.
pub fn betti_staircase(t: &BettiTable) -> String {
    let pd = t.proj_dim();
    let max_row = t
        .entries()
        .keys()
        .map(|&(i, j)| j - i)
        .max()
        .unwrap_or(0);
    let cell = |d: usize, i: usize| -> String {
        let v = t.betti(i, i + d);
        if v == 0 {
            String::from(".")
        } else {
            v.to_string()
        }
    };
    let total = |i: usize| -> String {
        let v: u64 = (0..=max_row).map(|d| t.betti(i, i + d)).sum();
        if v == 0 {
            String::from(".")
        } else {
            v.to_string()
        }
    };

    let mut widths = Vec::with_capacity(pd + 1);
    for i in 0..=pd {
        let mut w = i.to_string().len().max(total(i).len());
        for d in 0..=max_row {
            w = w.max(cell(d, i).len());
        }
        widths.push(w);
    }
    let label_w = "total:".len().max(format!("{}:", max_row).len());

    let mut out = String::new();
    out.push_str(&format!("{:label_w$}", ""));
    for i in 0..=pd {
        out.push_str(&format!("  {:>w$}", i, w = widths[i]));
    }
    out.push('\n');
    out.push_str(&format!("{:label_w$}", "total:"));
    for i in 0..=pd {
        out.push_str(&format!("  {:>w$}", total(i), w = widths[i]));
    }
    out.push('\n');
    for d in 0..=max_row {
        out.push_str(&format!("{:label_w$}", format!("{}:", d)));
        for i in 0..=pd {
            out.push_str(&format!("  {:>w$}", cell(d, i), w = widths[i]));
        }
        out.push('\n');
    }
    out
}

/// Writes the report to stdout, or atomically (temp file + rename) to `out`.
pub fn write_report(out: Option<&Path>, body: &str) -> std::io::Result<()> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(body.as_bytes())?;
            tmp.persist(path).map_err(|e| e.error)?;
            Ok(())
        }
    }
}
