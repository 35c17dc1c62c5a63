//! Declarative sweeps: a JSON file lists queries; the output is one table
//! row per query, with witness sets quoted as canonical literals so
//! spreadsheets and diff tools handle them.

use std::str::FromStr;

use anyhow::{anyhow, Context, Result};
use serde::Deserialize;

use sumset_core::bounds;
use sumset_core::rho::{self, SearchOptions};
use sumset_core::sumset::{self, MultiplicitySet, SumsetKind};
use sumset_core::{ClassFilter, ExtendedCount, GroupSpec, RhoQuery};

use crate::families::{eval_bound, eval_construct, BoundParams, ConstructParams};
use crate::output::Table;

pub struct SweepLimits {
    pub workers: usize,
    pub max_order: u64,
    pub max_m: u32,
    pub max_cells: u64,
}

#[derive(Deserialize)]
struct SweepConfig {
    queries: Vec<Query>,
}

fn default_filter() -> String {
    "all".into()
}

fn default_kind() -> String {
    "signed".into()
}

#[derive(Deserialize)]
#[serde(tag = "cmd", rename_all = "kebab-case", deny_unknown_fields)]
enum Query {
    Sumset {
        group: String,
        set: String,
        #[serde(default = "default_kind")]
        kind: String,
        multiplicity: String,
    },
    Rho {
        group: String,
        m: u32,
        #[serde(default = "default_kind")]
        kind: String,
        multiplicity: String,
        #[serde(default = "default_filter")]
        filter: String,
    },
    Coeff {
        h: u32,
        k: u64,
        #[serde(default)]
        l: u64,
    },
    Bound {
        family: String,
        #[serde(default)]
        k: Option<u64>,
        #[serde(default)]
        p: Option<String>,
        #[serde(default)]
        h: Option<u32>,
        #[serde(default)]
        m: Option<u64>,
        #[serde(default)]
        s: Option<u64>,
        #[serde(default)]
        theta: Option<i64>,
        #[serde(default)]
        zero_in_a: Option<bool>,
        #[serde(default)]
        class: Option<String>,
    },
    Construct {
        recipe: String,
        #[serde(default)]
        d: Option<u64>,
        #[serde(default)]
        m: Option<u64>,
        #[serde(default)]
        s: Option<u64>,
        #[serde(default)]
        group: Option<String>,
        #[serde(default)]
        set: Option<String>,
        #[serde(default)]
        h: Option<u32>,
    },
}

fn check_order(limits: &SweepLimits, g: &GroupSpec) -> Result<()> {
    if let Some(order) = g.order() {
        if order > limits.max_order as u128 {
            return Err(anyhow!(
                "group order {order} exceeds the envelope (max-order {})",
                limits.max_order
            ));
        }
    }
    Ok(())
}

pub fn run_sweep(path: &str, limits: &SweepLimits) -> Result<Table> {
    let raw = std::fs::read_to_string(path)
        .with_context(|| format!("reading sweep config {path:?}"))?;
    let config: SweepConfig =
        serde_json::from_str(&raw).with_context(|| format!("parsing sweep config {path:?}"))?;
    let mut rows = Vec::with_capacity(config.queries.len());
    for q in &config.queries {
        rows.push(run_query(q, limits)?);
    }
    Ok(Table {
        columns: vec![
            "cmd".into(),
            "spec".into(),
            "value".into(),
            "witness".into(),
        ],
        rows,
    })
}

fn run_query(q: &Query, limits: &SweepLimits) -> Result<Vec<String>> {
    Ok(match q {
        Query::Sumset {
            group,
            set,
            kind,
            multiplicity,
        } => {
            let g = GroupSpec::from_str(group).map_err(|e| anyhow!("{e}"))?;
            check_order(limits, &g)?;
            let a = g.parse_subset(set).map_err(|e| anyhow!("{e}"))?;
            let kind = SumsetKind::from_str(kind).map_err(|e| anyhow!("{e}"))?;
            let hs = MultiplicitySet::from_str(multiplicity).map_err(|e| anyhow!("{e}"))?;
            let out = sumset::union_fold(&a, &hs, kind).map_err(|e| anyhow!("{e}"))?;
            vec![
                "sumset".into(),
                format!("group={g} A={} kind={kind} H={hs}", a.canonical_literal()),
                out.len().to_string(),
                out.canonical_literal(),
            ]
        }
        Query::Rho {
            group,
            m,
            kind,
            multiplicity,
            filter,
        } => {
            let g = GroupSpec::from_str(group).map_err(|e| anyhow!("{e}"))?;
            check_order(limits, &g)?;
            if *m > limits.max_m {
                let estimate =
                    rho::search_space(g.order().unwrap_or(0) as u64, *m as u64);
                return Err(anyhow!(
                    "m = {m} exceeds the envelope (max-m {}); search space is {estimate} subsets",
                    limits.max_m
                ));
            }
            let query = RhoQuery::new(
                g.clone(),
                *m,
                MultiplicitySet::from_str(multiplicity).map_err(|e| anyhow!("{e}"))?,
                SumsetKind::from_str(kind).map_err(|e| anyhow!("{e}"))?,
                ClassFilter::from_str(filter).map_err(|e| anyhow!("{e}"))?,
            );
            let r = rho::rho_search(
                &query,
                &SearchOptions {
                    workers: limits.workers,
                    max_cells: limits.max_cells,
                    ..SearchOptions::default()
                },
            )
            .map_err(|e| anyhow!("{e}"))?;
            vec![
                "rho".into(),
                format!(
                    "group={g} m={m} kind={} H={} filter={}",
                    query.kind, query.multiplicity, query.filter
                ),
                r.value.to_string(),
                r.witness.canonical_literal(),
            ]
        }
        Query::Coeff { h, k, l } => {
            let value = match h {
                2 => bounds::coeff_h2(*k),
                3 => bounds::coeff_h3(*k),
                4 => bounds::coeff_h4(*k, *l),
                other => return Err(anyhow!("coeff needs h in {{2,3,4}}, got {other}")),
            }
            .map_err(|e| anyhow!("{e}"))?;
            vec![
                "coeff".into(),
                format!("h={h} k={k} l={l}"),
                value.to_string(),
                String::new(),
            ]
        }
        Query::Bound {
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
                k: *k,
                p: p.as_deref()
                    .map(ExtendedCount::from_str)
                    .transpose()
                    .map_err(|e| anyhow!("{e}"))?,
                h: *h,
                m: *m,
                s: *s,
                theta: *theta,
                zero_in_a: *zero_in_a,
                class: class.clone(),
            };
            let (result, echo) = eval_bound(family, &params)?;
            vec![
                "bound".into(),
                format!("family={family} {echo}"),
                result
                    .value
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "inapplicable".into()),
                result.branch,
            ]
        }
        Query::Construct {
            recipe,
            d,
            m,
            s,
            group,
            set,
            h,
        } => {
            let g = group
                .as_deref()
                .map(GroupSpec::from_str)
                .transpose()
                .map_err(|e| anyhow!("{e}"))?;
            if let Some(g) = &g {
                check_order(limits, g)?;
            }
            let params = ConstructParams {
                d: *d,
                m: *m,
                s: *s,
                group: g,
                set: set.clone(),
                h: *h,
            };
            let built = eval_construct(recipe, &params)?;
            vec![
                "construct".into(),
                format!("recipe={recipe} {}", built.params_echo),
                built.set.len().to_string(),
                built.set.canonical_literal(),
            ]
        }
    })
}
