//! `sumsets`: compute signed and restricted signed sumsets, search extremal
//! functions, evaluate bound formulas, build extremal sets, and run the
//! verification catalog.
//!
//! Every subcommand is a thin adapter over `sumset-core`: inputs are parsed,
//! the library does the work, and the result is rendered in the requested
//! format. No arithmetic or set logic lives here.

mod families;
mod output;
mod sweep;

use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sumset_core::bounds::{self, DEFAULT_DEGREE_CAP};
use sumset_core::rho::{self, SearchOptions};
use sumset_core::sumset::{self, MultiplicitySet, SumsetKind};
use sumset_core::verify::{self, Mode};
use sumset_core::{ClassFilter, ExtendedCount, GroupSpec, RhoQuery};

use families::{eval_bound, eval_construct, BoundParams, ConstructParams};
use output::{Format, Renderer};

#[derive(Parser)]
#[command(
    name = "sumsets",
    version,
    about = "Signed and restricted signed sumsets over groups, Z, and field models"
)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ConfigArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Worker threads for searches and the catalog (env SUMSETS_WORKERS).
    #[arg(long, global = true, env = "SUMSETS_WORKERS", default_value_t = 1)]
    workers: usize,

    /// Seed for sampled verification runs.
    #[arg(long, global = true, default_value_t = 0x00C0_FFEE)]
    seed: u64,

    /// Envelope cap: largest group order accepted.
    #[arg(long, global = true, default_value_t = 64)]
    max_order: u64,

    /// Envelope cap: largest subset size searched exhaustively.
    #[arg(long, global = true, default_value_t = 8)]
    max_m: u32,

    /// Envelope cap: largest subset count scanned per search.
    #[arg(long, global = true, default_value_t = 50_000_000)]
    max_cells: u64,

    /// Total-degree cap for the symbolic coefficient oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: u32,

    /// Report search progress to stderr every N examined subsets.
    #[arg(long, global = true)]
    progress: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an H-fold sumset of one of the four kinds.
    Sumset {
        /// Group spec: Z | Z<n> | Z<n1>xZ<n2>... | F<p>^<r>.
        #[arg(short = 'g', long)]
        group: String,
        /// Set literal: comma-separated elements, tuples for product groups.
        #[arg(short = 'A', long)]
        set: String,
        /// plain | restricted | signed | restricted-signed.
        #[arg(short = 'k', long, default_value = "signed")]
        kind: String,
        /// Multiplicities: a single h, a list h1,h2,..., or an interval lo..hi.
        #[arg(short = 'H', long)]
        multiplicity: String,
    },

    /// Exhaustive minimum of |H-fold sumset| over filtered m-subsets.
    Rho {
        #[arg(short = 'g', long)]
        group: String,
        #[arg(short = 'm', long)]
        m: u32,
        #[arg(short = 'k', long, default_value = "signed")]
        kind: String,
        #[arg(short = 'H', long)]
        multiplicity: String,
        /// all | sym | asym | nsym | class-a | sdeg=<s> | contains-zero.
        #[arg(long, default_value = "all")]
        filter: String,
        /// Disable unit-orbit pruning (cyclic groups only).
        #[arg(long)]
        no_prune: bool,
    },

    /// Run verification checks; nonzero exit iff any cell fails.
    Verify {
        /// Check id, or "all".
        #[arg(long, default_value = "all")]
        check: String,
        /// Grid overrides, repeatable: --grid orders=3,5,7 --grid h_max=4.
        #[arg(long)]
        grid: Vec<String>,
        /// Sample count override for sampled checks.
        #[arg(long)]
        samples: Option<u32>,
    },

    /// Materialize a named extremal construction.
    Construct {
        /// odd_spaced_ap | interval_set | rho_s_witness | subgroup_interval | symmetrize.
        #[arg(long)]
        recipe: String,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(short = 'g', long)]
        group: Option<String>,
        #[arg(short = 'A', long)]
        set: Option<String>,
        #[arg(long)]
        h: Option<u32>,
    },

    /// Evaluate a polynomial-method coefficient, with its factorization.
    Coeff {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 0)]
        l: u64,
        /// Cross-check against the symbolic expansion oracle.
        #[arg(long)]
        oracle: bool,
    },

    /// Evaluate a closed-form bound with branch and hypothesis report.
    Bound {
        /// signed-field | restricted-field | rho-plain | rho-signed |
        /// interval-restricted | class | restricted-plain | int-signed |
        /// theta | ell | liu-sun-k.
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<u64>,
        /// A positive integer or "inf".
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        h: Option<u32>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        theta: Option<i64>,
        #[arg(long)]
        zero_in_a: Option<bool>,
        /// sym | asym | nsym (for --family class).
        #[arg(long)]
        class: Option<String>,
    },

    /// Run a declarative list of queries from a JSON file; emits a CSV table.
    Sweep {
        /// Path to the sweep config (see README for the schema).
        #[arg(long)]
        config: String,
    },

    /// List the verification catalog: id, claim, mode, default grid.
    ListChecks,
}

fn main() {
    // die quietly when the downstream pipe closes (e.g. `sumsets ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}

fn parse_group(s: &str) -> Result<GroupSpec> {
    GroupSpec::from_str(s).with_context(|| format!("bad group spec {s:?}"))
}

fn parse_kind(s: &str) -> Result<SumsetKind> {
    SumsetKind::from_str(s).map_err(|e| anyhow!("{e}"))
}

fn parse_mult(s: &str) -> Result<MultiplicitySet> {
    MultiplicitySet::from_str(s).map_err(|e| anyhow!("{e}"))
}

fn parse_ext(s: &str) -> Result<ExtendedCount> {
    ExtendedCount::from_str(s).map_err(|e| anyhow!("{e}"))
}

fn check_group_envelope(cfg: &ConfigArgs, g: &GroupSpec) -> Result<()> {
    if let Some(order) = g.order() {
        if order > cfg.max_order as u128 {
            bail!(
                "group order {order} exceeds the envelope (max-order {}); raise --max-order if you mean it",
                cfg.max_order
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SumsetOut {
    group: String,
    set: String,
    kind: String,
    multiplicity: String,
    cardinality: usize,
    result: String,
}

#[derive(Serialize)]
struct RhoOut {
    group: String,
    m: u32,
    kind: String,
    multiplicity: String,
    filter: String,
    value: u64,
    witness: String,
    sets_examined: u64,
    pruned_by_automorphism: u64,
}

#[derive(Serialize)]
struct ConstructOut {
    recipe: String,
    params: String,
    group: String,
    cardinality: usize,
    result: String,
    steps: Option<usize>,
}

#[derive(Serialize)]
struct CoeffOut {
    h: u32,
    k: u64,
    l: u64,
    value: String,
    factorization: String,
    oracle: Option<String>,
    oracle_matches: Option<bool>,
}

#[derive(Serialize)]
struct BoundOut {
    family: String,
    params: String,
    value: Option<u64>,
    branch: String,
    hypotheses: Vec<bounds::Hypothesis>,
}

fn run(cli: Cli) -> Result<i32> {
    let cfg = cli.config.clone();
    let fmt = match cfg.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let renderer = Renderer::new(fmt, &config_echo(&cfg));

    match cli.command {
        Command::Sumset {
            group,
            set,
            kind,
            multiplicity,
        } => {
            let g = parse_group(&group)?;
            check_group_envelope(&cfg, &g)?;
            let a = g.parse_subset(&set).map_err(|e| anyhow!("{e}"))?;
            let kind = parse_kind(&kind)?;
            let hs = parse_mult(&multiplicity)?;
            let out = sumset::union_fold(&a, &hs, kind).map_err(|e| anyhow!("{e}"))?;
            renderer.emit(
                &SumsetOut {
                    group: g.to_string(),
                    set: a.canonical_literal(),
                    kind: kind.to_string(),
                    multiplicity: hs.to_string(),
                    cardinality: out.len(),
                    result: out.canonical_literal(),
                },
                &[
                    "group",
                    "set",
                    "kind",
                    "multiplicity",
                    "cardinality",
                    "result",
                ],
            )?;
            Ok(0)
        }

        Command::Rho {
            group,
            m,
            kind,
            multiplicity,
            filter,
            no_prune,
        } => {
            let g = parse_group(&group)?;
            check_group_envelope(&cfg, &g)?;
            if m > cfg.max_m {
                let order = g.order().unwrap_or(0);
                let estimate = rho::search_space(order as u64, m as u64);
                bail!(
                    "m = {m} exceeds the envelope (max-m {}); search space is C({order}, {m}) = {estimate} subsets",
                    cfg.max_m
                );
            }
            let q = RhoQuery::new(
                g.clone(),
                m,
                parse_mult(&multiplicity)?,
                parse_kind(&kind)?,
                ClassFilter::from_str(&filter).map_err(|e| anyhow!("{e}"))?,
            );
            let opts = SearchOptions {
                workers: cfg.workers.max(1),
                prune: !no_prune,
                max_cells: cfg.max_cells,
                progress_every: cfg.progress,
            };
            let r = rho::rho_search(&q, &opts).map_err(|e| anyhow!("{e}"))?;
            renderer.emit(
                &RhoOut {
                    group: g.to_string(),
                    m,
                    kind: q.kind.to_string(),
                    multiplicity: q.multiplicity.to_string(),
                    filter: q.filter.to_string(),
                    value: r.value,
                    witness: r.witness.canonical_literal(),
                    sets_examined: r.sets_examined,
                    pruned_by_automorphism: r.pruned_by_automorphism,
                },
                &[
                    "group",
                    "m",
                    "kind",
                    "multiplicity",
                    "filter",
                    "value",
                    "witness",
                    "sets_examined",
                    "pruned_by_automorphism",
                ],
            )?;
            Ok(0)
        }

        Command::Verify {
            check,
            grid,
            samples,
        } => {
            let mut specs = if check == "all" {
                verify::list_checks()
            } else {
                vec![verify::default_spec(&check).map_err(|e| anyhow!("{e}"))?]
            };
            for spec in &mut specs {
                for ov in &grid {
                    let (key, value) = ov
                        .split_once('=')
                        .ok_or_else(|| anyhow!("grid override must look like key=value: {ov:?}"))?;
                    spec.grid
                        .apply_override(key, value)
                        .map_err(|e| anyhow!("{e}"))?;
                }
                if let Mode::Sampled { count, .. } = spec.mode {
                    spec.mode = Mode::Sampled {
                        seed: cfg.seed,
                        count: samples.unwrap_or(count),
                    };
                }
            }
            let reports: Vec<verify::CheckReport> = if specs.len() == 1 {
                vec![verify::run_check_with(&specs[0], cfg.workers.max(1))
                    .map_err(|e| anyhow!("{e}"))?]
            } else {
                verify::run_specs(&specs, cfg.workers.max(1)).map_err(|e| anyhow!("{e}"))?
            };
            let any_failed = reports.iter().any(|r| !r.passed());
            renderer.emit_reports(&reports)?;
            Ok(if any_failed { 1 } else { 0 })
        }

        Command::Construct {
            recipe,
            d,
            m,
            s,
            group,
            set,
            h,
        } => {
            let g = group.as_deref().map(parse_group).transpose()?;
            if let Some(g) = &g {
                check_group_envelope(&cfg, g)?;
            }
            let built = eval_construct(
                &recipe,
                &ConstructParams {
                    d,
                    m,
                    s,
                    group: g,
                    set,
                    h,
                },
            )?;
            renderer.emit(
                &ConstructOut {
                    recipe,
                    params: built.params_echo,
                    group: built.set.group().to_string(),
                    cardinality: built.set.len(),
                    result: built.set.canonical_literal(),
                    steps: built.steps,
                },
                &["recipe", "params", "group", "cardinality", "result", "steps"],
            )?;
            Ok(0)
        }

        Command::Coeff { h, k, l, oracle } => {
            let (value, factorization) = match h {
                2 => (
                    bounds::coeff_h2(k).map_err(|e| anyhow!("{e}"))?,
                    format!("C({}, {})", 4 * k - 2, 2 * k - 1),
                ),
                3 => (
                    bounds::coeff_h3(k).map_err(|e| anyhow!("{e}"))?,
                    format!(
                        "2 * {} * {}! / ({}! * ({}!)^2)",
                        8 * k - 7,
                        6 * k - 6,
                        2 * k - 1,
                        2 * k - 2
                    ),
                ),
                4 => (
                    bounds::coeff_h4(k, l).map_err(|e| anyhow!("{e}"))?,
                    format!(
                        "8 * {}! * {} / ({}! * ({}!)^2 * {}!)",
                        8 * k - 10 - 4 * l,
                        bounds::h4_polynomial_term(k as i64, l as i64),
                        2 * k - 1 - l,
                        2 * k - 2 - l,
                        2 * k - 3 - l
                    ),
                ),
                other => bail!("coefficients exist for h in {{2, 3, 4}}, got {other}"),
            };
            let (oracle_value, oracle_matches) = if oracle {
                let o = bounds::symbolic_coefficient_oracle(h, k, l, cfg.degree_cap)
                    .map_err(|e| anyhow!("{e}"))?;
                let matches = o == value;
                (Some(o.to_string()), Some(matches))
            } else {
                (None, None)
            };
            renderer.emit(
                &CoeffOut {
                    h,
                    k,
                    l,
                    value: value.to_string(),
                    factorization,
                    oracle: oracle_value,
                    oracle_matches,
                },
                &["h", "k", "l", "value", "factorization", "oracle", "oracle_matches"],
            )?;
            Ok(0)
        }

        Command::Bound {
            family,
            k,
            p,
            h,
            m,
            s,
            theta,
            zero_in_a,
            class,
        } => {
            let params = BoundParams {
                k,
                p: p.as_deref().map(parse_ext).transpose()?,
                h,
                m,
                s,
                theta,
                zero_in_a,
                class,
            };
            let (result, echo) = eval_bound(&family, &params)?;
            renderer.emit(
                &BoundOut {
                    family,
                    params: echo,
                    value: result.value,
                    branch: result.branch.clone(),
                    hypotheses: result.hypotheses,
                },
                &["family", "params", "value", "branch", "hypotheses"],
            )?;
            Ok(0)
        }

        Command::Sweep { config } => {
            let table = sweep::run_sweep(&config, &cfg_to_sweep(&cfg))?;
            renderer.emit_table(&table)?;
            Ok(0)
        }

        Command::ListChecks => {
            let rows: Vec<Vec<String>> = verify::list_checks()
                .into_iter()
                .map(|c| {
                    vec![
                        c.id,
                        c.claim,
                        match c.mode {
                            Mode::Exhaustive => "exhaustive".to_string(),
                            Mode::Sampled { seed, count } => {
                                format!("sampled(seed={seed},count={count})")
                            }
                        },
                        c.grid.to_string(),
                    ]
                })
                .collect();
            renderer.emit_table(&output::Table {
                columns: vec![
                    "id".into(),
                    "claim".into(),
                    "mode".into(),
                    "default_grid".into(),
                ],
                rows,
            })?;
            Ok(0)
        }
    }
}

fn config_echo(cfg: &ConfigArgs) -> Vec<(String, String)> {
    // workers is intentionally excluded: results never depend on it
    vec![
        (
            "format".into(),
            match cfg.format {
                FormatArg::Text => "text",
                FormatArg::Json => "json",
                FormatArg::Csv => "csv",
            }
            .into(),
        ),
        ("seed".into(), cfg.seed.to_string()),
        ("max_order".into(), cfg.max_order.to_string()),
        ("max_m".into(), cfg.max_m.to_string()),
        ("max_cells".into(), cfg.max_cells.to_string()),
        ("degree_cap".into(), cfg.degree_cap.to_string()),
    ]
}

fn cfg_to_sweep(cfg: &ConfigArgs) -> sweep::SweepLimits {
    sweep::SweepLimits {
        workers: cfg.workers.max(1),
        max_order: cfg.max_order,
        max_m: cfg.max_m,
        max_cells: cfg.max_cells,
    }
}
