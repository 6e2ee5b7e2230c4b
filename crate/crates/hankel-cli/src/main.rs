//! `hankel`: construct the 2-minor ideal of a generic Hankel matrix for a
//! pair of closed graphs, compute Groebner bases and Betti tables, and run
//! the structural claim checks, on one instance or across a sweep.
//!
//! Exit codes: 0 all checks pass (flagged rows warn on stderr but still
//! exit 0), 1 any check fails, 2 usage or configuration error.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hankel_core::field::{Field, PrimeField, Rationals};
use hankel_core::graph::ClosedGraph;
use hankel_core::hankel::pair_ideal;
use hankel_core::monomial::MonomialOrder;
use hankel_core::poly::PolyRing;
use hankel_core::resolution::{graded_betti, ResolutionError};
use hankel_core::verifier::{
    classify, run_checks, sweep, Caps, Check, CheckKind, Instance, Status, SweepReport,
    VerifyError,
};

#[derive(Parser)]
#[command(
    name = "hankel",
    version,
    about = "Ideals of 2-minors of generic Hankel matrices indexed by pairs of closed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an instance: combined graph plus both generating sets
    Gen {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        common: Common,
    },
    /// Reduced Groebner basis of the minor ideal
    Gb {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        common: Common,
    },
    /// Structural classification: prime, minimal primes, radical, resolution
    Classify {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        common: Common,
    },
    /// Graded Betti table of the quotient ring
    Betti {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        common: Common,
    },
    /// Run claim checks on one instance
    Verify {
        #[command(flatten)]
        pair: Pair,
        /// Comma-separated check names: thm1.1, corollary, prop2.1, thm2.3
        /// (alias classify), prop2.4, or all
        #[arg(long, default_value = "all")]
        check: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run claim checks over every ordered pair up to the given sizes
    Sweep {
        /// Largest vertex count for the left factor
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        /// Largest vertex count for the right factor
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Comma-separated check names, as for verify
        #[arg(long, default_value = "all")]
        check: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Pair {
    /// Left graph: K<n>, L<n>, or facet intervals like 1-3,2-4,3-5
    #[arg(long)]
    g1: String,
    /// Right graph, same grammar
    #[arg(long)]
    g2: String,
}

#[derive(Args, Clone)]
struct Common {
    /// Monomial order for basis output
    #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
    /// Coefficient field: rational, prime (= 32003), prime:P, or prime(P)
    #[arg(long, default_value = "rational")]
    field: String,
    /// Report format
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
    /// Write the report to FILE atomically instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Variable-count cap for Betti computations; env HANKEL_BETTI_CAP
    /// overrides the default of 7, this flag overrides both
    #[arg(long, value_name = "N")]
    betti_cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

impl OrderArg {
    fn to_core(self) -> MonomialOrder {
        match self {
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }

    fn token(self) -> &'static str {
        match self {
            OrderArg::Degrevlex => "degrevlex",
            OrderArg::Lex => "lex",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

enum CliError {
    Usage(String),
    Runtime(String),
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

enum FieldChoice {
    Rational,
    Prime(u64),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    let field_spec = match &cmd {
        Command::Gen { common, .. }
        | Command::Gb { common, .. }
        | Command::Classify { common, .. }
        | Command::Betti { common, .. }
        | Command::Verify { common, .. }
        | Command::Sweep { common, .. } => common.field.clone(),
    };
    match parse_field(&field_spec)? {
        FieldChoice::Rational => execute(cmd, Rationals),
        FieldChoice::Prime(p) => {
            let f = PrimeField::new(p).map_err(|e| usage(e.to_string()))?;
            execute(cmd, f)
        }
    }
}

fn parse_field(s: &str) -> Result<FieldChoice, CliError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("rational") {
        return Ok(FieldChoice::Rational);
    }
    if let Some(rest) = t.strip_prefix("prime") {
        let rest = rest.trim();
        let digits = if rest.is_empty() {
            None
        } else if let Some(r) = rest.strip_prefix(':') {
            Some(r.trim())
        } else if let Some(r) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some(r.trim())
        } else {
            return Err(usage(format!("malformed field spec '{}'", s)));
        };
        let p = match digits {
            None => 32003,
            Some(d) => d
                .parse::<u64>()
                .map_err(|_| usage(format!("prime modulus must be an integer in '{}'", s)))?,
        };
        return Ok(FieldChoice::Prime(p));
    }
    Err(usage(format!(
        "unknown field '{}'; use rational, prime, prime:P, or prime(P)",
        s
    )))
}

fn parse_graph(s: &str) -> Result<ClosedGraph, CliError> {
    ClosedGraph::parse(s).map_err(|e| usage(format!("graph spec '{}': {}", s, e)))
}

fn parse_checks(s: &str) -> Result<Vec<CheckKind>, CliError> {
    let mut kinds = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match CheckKind::parse(tok) {
            Some(ks) => kinds.extend(ks),
            None => {
                return Err(usage(format!(
                    "unknown check '{}'; valid names: thm1.1, corollary, prop2.1, thm2.3, classify, prop2.4, all",
                    tok
                )))
            }
        }
    }
    if kinds.is_empty() {
        return Err(usage(String::from("no checks selected")));
    }
    kinds.sort_unstable();
    kinds.dedup();
    Ok(kinds)
}

fn resolve_caps(flag: Option<usize>) -> Result<Caps, CliError> {
    if let Some(v) = flag {
        return Ok(Caps { betti_vars: v });
    }
    match std::env::var("HANKEL_BETTI_CAP") {
        Ok(s) => s
            .trim()
            .parse()
            .map(|betti_vars| Caps { betti_vars })
            .map_err(|_| usage(format!("HANKEL_BETTI_CAP must be an integer, got '{}'", s))),
        Err(_) => Ok(Caps::default()),
    }
}

fn verify_err(e: VerifyError) -> CliError {
    match &e {
        VerifyError::Betti(ResolutionError::CapExceeded { num_vars, cap }) => usage(format!(
            "Betti computation needs {} variables but the cap is {}; raise --betti-cap or HANKEL_BETTI_CAP",
            num_vars, cap
        )),
        _ => CliError::Runtime(e.to_string()),
    }
}

fn count_flagged(checks: &[Check]) -> usize {
    checks.iter().filter(|c| c.status == Status::Flagged).count()
}

fn finish(
    out: Option<&std::path::Path>,
    body: String,
    status: Status,
    flagged: usize,
) -> Result<ExitCode, CliError> {
    report::write_report(out, &body)
        .map_err(|e| CliError::Runtime(format!("cannot write report: {}", e)))?;
    if flagged > 0 {
        eprintln!(
            "warning: {} flagged check(s); computed values take precedence over the printed claims",
            flagged
        );
    }
    Ok(if status == Status::Fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn render_polys<F: Field>(ring: &PolyRing<F>, polys: &[hankel_core::poly::Polynomial<F>], order: MonomialOrder) -> Vec<String> {
    polys
        .iter()
        .map(|p| ring.canonical_string(p, order))
        .collect()
}

fn execute<F: Field>(cmd: Command, field: F) -> Result<ExitCode, CliError> {
    match cmd {
        Command::Gen { pair, common } => {
            let (g1, g2) = (parse_graph(&pair.g1)?, parse_graph(&pair.g2)?);
            let order = common.order.to_core();
            let inst = Instance::new(field, &g1, &g2).map_err(verify_err)?;
            let ring = inst.ideal().ring();
            let pair_gens = render_polys(ring, inst.ideal().generators(), order);
            let scroll_gens = render_polys(inst.scroll().ring(), inst.scroll().generators(), order);
            let body = match common.output {
                OutputArg::Json => report::to_json(&report::GenJson {
                    instance: report::instance_json(&g1, &g2),
                    combined: report::graph_json(inst.combined()),
                    num_vars: inst.num_vars(),
                    order: common.order.token().to_string(),
                    pair_generators: pair_gens,
                    scroll_generators: scroll_gens,
                }),
                OutputArg::Text => {
                    let mut s = report::text_instance_header(&g1, &g2);
                    s.push_str(&format!("combined graph: {}\n", inst.combined()));
                    s.push_str(&format!("pair generators ({}):\n", pair_gens.len()));
                    for g in &pair_gens {
                        s.push_str(&format!("  {}\n", g));
                    }
                    s.push_str(&format!("scroll generators ({}):\n", scroll_gens.len()));
                    for g in &scroll_gens {
                        s.push_str(&format!("  {}\n", g));
                    }
                    s
                }
            };
            finish(common.out.as_deref(), body, Status::Pass, 0)
        }
        Command::Gb { pair, common } => {
            let (g1, g2) = (parse_graph(&pair.g1)?, parse_graph(&pair.g2)?);
            let order = common.order.to_core();
            let ideal = pair_ideal(field, &g1, &g2).map_err(|e| CliError::Runtime(e.to_string()))?;
            let gb = ideal.groebner_basis(order);
            let basis = render_polys(ideal.ring(), gb.elements(), order);
            let body = match common.output {
                OutputArg::Json => report::to_json(&report::GbJson {
                    instance: report::instance_json(&g1, &g2),
                    num_vars: ideal.ring().num_vars(),
                    order: common.order.token().to_string(),
                    basis,
                }),
                OutputArg::Text => {
                    let mut s = report::text_instance_header(&g1, &g2);
                    s.push_str(&format!(
                        "reduced Groebner basis under {} ({} elements):\n",
                        common.order.token(),
                        basis.len()
                    ));
                    for g in &basis {
                        s.push_str(&format!("  {}\n", g));
                    }
                    s
                }
            };
            finish(common.out.as_deref(), body, Status::Pass, 0)
        }
        Command::Classify { pair, common } => {
            let (g1, g2) = (parse_graph(&pair.g1)?, parse_graph(&pair.g2)?);
            let caps = resolve_caps(common.betti_cap)?;
            let start = Instant::now();
            let inst = Instance::new(field, &g1, &g2).map_err(verify_err)?;
            let c = classify(&inst, caps);
            let elapsed = start.elapsed().as_millis();
            let status = c.report.status();
            let flagged = count_flagged(&c.report.checks);
            let body = match common.output {
                OutputArg::Json => report::to_json(&report::ClassifyJson {
                    instance: report::instance_json(&g1, &g2),
                    prime: c.prime,
                    radical: c.radical,
                    linear_resolution: c.linear_resolution,
                    min_primes: c.min_primes.clone(),
                    checks: c.report.checks.iter().map(report::check_json).collect(),
                    timings_ms: report::TimingsJson { total: elapsed },
                }),
                OutputArg::Text => {
                    let mut s = report::text_instance_header(&g1, &g2);
                    s.push_str(&format!("prime: {}\n", c.prime));
                    s.push_str(&format!("radical: {}\n", c.radical));
                    s.push_str(&format!("linear resolution: {}\n", c.linear_resolution));
                    s.push_str(&format!("minimal primes ({}):\n", c.min_primes.len()));
                    for (i, p) in c.min_primes.iter().enumerate() {
                        s.push_str(&format!("  P{}: {}\n", i + 1, p.join(", ")));
                    }
                    s.push_str("checks:\n");
                    s.push_str(&report::text_checks(&c.report.checks));
                    s.push_str(&report::summary_line(&c.report.checks));
                    s
                }
            };
            finish(common.out.as_deref(), body, status, flagged)
        }
        Command::Betti { pair, common } => {
            let (g1, g2) = (parse_graph(&pair.g1)?, parse_graph(&pair.g2)?);
            let caps = resolve_caps(common.betti_cap)?;
            let ideal = pair_ideal(field, &g1, &g2).map_err(|e| CliError::Runtime(e.to_string()))?;
            let table = graded_betti(&ideal, caps.betti_vars)
                .map_err(|e| verify_err(VerifyError::Betti(e)))?;
            let body = match common.output {
                OutputArg::Json => report::to_json(&report::betti_json(&table)),
                OutputArg::Text => {
                    let mut s = report::text_instance_header(&g1, &g2);
                    s.push_str(&report::betti_staircase(&table));
                    s.push_str(&format!(
                        "reg = {}, pd = {}, depth = {}\n",
                        table.regularity(),
                        table.proj_dim(),
                        table.depth()
                    ));
                    s
                }
            };
            finish(common.out.as_deref(), body, Status::Pass, 0)
        }
        Command::Verify { pair, check, common } => {
            let (g1, g2) = (parse_graph(&pair.g1)?, parse_graph(&pair.g2)?);
            let kinds = parse_checks(&check)?;
            let caps = resolve_caps(common.betti_cap)?;
            let start = Instant::now();
            let inst = Instance::new(field, &g1, &g2).map_err(verify_err)?;
            let rep = run_checks(&inst, &kinds, caps).map_err(verify_err)?;
            let elapsed = start.elapsed().as_millis();
            let status = rep.status();
            let flagged = count_flagged(&rep.checks);
            let body = match common.output {
                OutputArg::Json => report::to_json(&report::VerifyJson {
                    instance: report::instance_json(&g1, &g2),
                    checks: rep.checks.iter().map(report::check_json).collect(),
                    timings_ms: report::TimingsJson { total: elapsed },
                }),
                OutputArg::Text => report::text_verify(&rep),
            };
            finish(common.out.as_deref(), body, status, flagged)
        }
        Command::Sweep { max_m, max_n, check, common } => {
            let kinds = parse_checks(&check)?;
            let caps = resolve_caps(common.betti_cap)?;
            let start = Instant::now();
            let swept = sweep(field, max_m, max_n, &kinds, caps).map_err(verify_err)?;
            let elapsed = start.elapsed().as_millis();
            let status = swept.status();
            let flagged: usize = swept
                .reports
                .iter()
                .map(|r| count_flagged(&r.checks))
                .sum();
            let body = match common.output {
                OutputArg::Json => {
                    let (pass, fl, fail) = swept.totals();
                    report::to_json(&report::SweepJson {
                        max_m,
                        max_n,
                        checks: kinds.iter().map(|k| k.token().to_string()).collect(),
                        instances: swept
                            .reports
                            .iter()
                            .map(|r| report::SweepInstanceJson {
                                instance: report::instance_json(&r.g1, &r.g2),
                                checks: r.checks.iter().map(report::check_json).collect(),
                            })
                            .collect(),
                        totals: report::TotalsJson {
                            pass,
                            flagged: fl,
                            fail,
                        },
                        aborted: swept.aborted,
                        timings_ms: report::TimingsJson { total: elapsed },
                    })
                }
                OutputArg::Text => text_sweep(max_m, max_n, &kinds, &swept),
            };
            finish(common.out.as_deref(), body, status, flagged)
        }
    }
}

fn text_sweep(max_m: usize, max_n: usize, kinds: &[CheckKind], swept: &SweepReport) -> String {
    let names: Vec<&str> = kinds.iter().map(|k| k.token()).collect();
    let mut s = format!(
        "sweep: m <= {}, n <= {}, checks: {}\n",
        max_m,
        max_n,
        names.join(", ")
    );
    s.push_str(&format!("{} instances\n", swept.reports.len()));
    for rep in &swept.reports {
        let worst = rep.status();
        s.push_str(&format!("{} x {}: {}", rep.g1, rep.g2, worst));
        if worst != Status::Pass {
            let offenders: Vec<&str> = rep
                .checks
                .iter()
                .filter(|c| c.status == worst)
                .map(|c| c.name.as_str())
                .collect();
            s.push_str(&format!(" ({})", offenders.join(", ")));
        }
        s.push('\n');
    }
    let (pass, flagged, fail) = swept.totals();
    s.push_str(&format!(
        "totals: {} pass, {} flagged, {} fail\n",
        pass, flagged, fail
    ));
    if swept.aborted {
        s.push_str("aborted after the first failing instance\n");
    }
    s
}
