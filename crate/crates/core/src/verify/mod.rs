//! Check registry: every statement in scope becomes a named check over a
//! parameter grid, producing pass/fail with counterexample witnesses.

mod checks;

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};

/// Common grid knobs; each check reads the fields relevant to it (the
/// defaults in the registry say which).
#[derive(Clone, Debug, Serialize)]
pub struct Grid {
    /// Cyclic group orders Z_n to sweep.
    pub orders: Vec<u64>,
    /// Extra (non-cyclic) group specs to sweep, as parseable literals.
    pub groups: Vec<String>,
    /// Prime moduli for field checks.
    pub primes: Vec<u64>,
    /// Subset size range (inclusive).
    pub size_min: u32,
    pub size_max: u32,
    /// Multiplicity range (inclusive).
    pub h_min: u32,
    pub h_max: u32,
    /// Integer window for Z grids (inclusive).
    pub value_min: i64,
    pub value_max: i64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            orders: Vec::new(),
            groups: Vec::new(),
            primes: Vec::new(),
            size_min: 1,
            size_max: 4,
            h_min: 1,
            h_max: 3,
            value_min: 1,
            value_max: 10,
        }
    }
}

impl Grid {
    /// Apply `key=value` overrides (comma-separated integer lists for the
    /// list-valued fields).
    pub fn apply_override(&mut self, key: &str, value: &str) -> Result<()> {
        fn ints<T: std::str::FromStr>(v: &str) -> Result<Vec<T>> {
            v.split(',')
                .map(|p| {
                    p.trim().parse::<T>().map_err(|_| Error::Parse {
                        pos: 0,
                        msg: format!("bad integer {p:?}"),
                    })
                })
                .collect()
        }
        fn int<T: std::str::FromStr>(v: &str) -> Result<T> {
            v.trim().parse::<T>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad integer {v:?}"),
            })
        }
        match key {
            "orders" => self.orders = ints(value)?,
            "groups" => {
                self.groups = value.split(',').map(|s| s.trim().to_string()).collect()
            }
            "primes" => self.primes = ints(value)?,
            "size_min" => self.size_min = int(value)?,
            "size_max" => self.size_max = int(value)?,
            "h_min" => self.h_min = int(value)?,
            "h_max" => self.h_max = int(value)?,
            "value_min" => self.value_min = int(value)?,
            "value_max" => self.value_max = int(value)?,
            other => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown grid key {other:?}"),
                })
            }
        }
        Ok(())
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.orders.is_empty() {
            parts.push(format!(
                "orders={}",
                self.orders.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ));
        }
        if !self.groups.is_empty() {
            parts.push(format!("groups={}", self.groups.join(",")));
        }
        if !self.primes.is_empty() {
            parts.push(format!(
                "primes={}",
                self.primes.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ));
        }
        parts.push(format!("size={}..{}", self.size_min, self.size_max));
        parts.push(format!("h={}..{}", self.h_min, self.h_max));
        parts.push(format!("values={}..{}", self.value_min, self.value_max));
        write!(f, "{}", parts.join(" "))
    }
}

/// Exhaustive evaluation of the full grid, or a seeded reproducible sample.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, count: u32 },
}

/// A runnable check: id, the claim it verifies, grid, and mode.
#[derive(Clone, Debug, Serialize)]
pub struct CheckSpec {
    pub id: String,
    /// The mathematical claim being checked, in formula form.
    pub claim: String,
    pub grid: Grid,
    pub mode: Mode,
}

/// One grid cell that falsified the predicate, recorded so the cell can be
/// re-run in isolation.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub params: String,
    pub witness: String,
    pub expected: String,
    pub actual: String,
}

/// JSON schema: {id, claim, mode, cells, failures[], elapsed_ms}. The mode
/// records the seed of sampled runs so every report is reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub claim: String,
    pub mode: Mode,
    #[serde(rename = "cells")]
    pub cells_checked: u64,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_ms", serialize_with = "ser_millis")]
    pub elapsed: Duration,
}

fn ser_millis<S: serde::Serializer>(
    d: &Duration,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_u64(d.as_millis() as u64)
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tally that check bodies push cells and failures into.
pub(crate) struct Tally {
    pub cells: u64,
    pub failures: Vec<Failure>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cells: 0,
            failures: Vec::new(),
        }
    }

    pub fn cell(&mut self) {
        self.cells += 1;
    }

    pub fn fail(
        &mut self,
        params: impl Into<String>,
        witness: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) {
        self.failures.push(Failure {
            params: params.into(),
            witness: witness.into(),
            expected: expected.into(),
            actual: actual.into(),
        });
    }
}

/// Runtime context handed to check bodies; searches delegate to the parallel
/// scanner with this worker count.
pub(crate) struct Ctx {
    pub workers: usize,
}

type CheckFn = fn(&CheckSpec, &Ctx, &mut Tally) -> Result<()>;

struct Entry {
    id: &'static str,
    claim: &'static str,
    default_grid: Grid,
    default_mode: Mode,
    run: CheckFn,
}

/// The registry rows, in the order reports are emitted.
fn registry() -> Vec<Entry> {
    checks::entries()
}

/// Default spec (id, claim, grid, mode) for every registered check.
pub fn list_checks() -> Vec<CheckSpec> {
    registry()
        .into_iter()
        .map(|e| CheckSpec {
            id: e.id.to_string(),
            claim: e.claim.to_string(),
            grid: e.default_grid,
            mode: e.default_mode,
        })
        .collect()
}

/// Default spec for one check id.
pub fn default_spec(id: &str) -> Result<CheckSpec> {
    list_checks()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Run a check; deterministic given the spec (sampled mode re-seeds from the
/// spec's seed, and values never depend on the worker count).
pub fn run_check_with(spec: &CheckSpec, workers: usize) -> Result<CheckReport> {
    let entry = registry()
        .into_iter()
        .find(|e| e.id == spec.id)
        .ok_or_else(|| Error::UnknownCheck(spec.id.clone()))?;
    let start = Instant::now();
    let mut tally = Tally::new();
    let ctx = Ctx {
        workers: workers.max(1),
    };
    (entry.run)(spec, &ctx, &mut tally)?;
    Ok(CheckReport {
        id: spec.id.clone(),
        claim: spec.claim.clone(),
        mode: spec.mode,
        cells_checked: tally.cells,
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

/// Single-threaded [`run_check_with`].
pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    run_check_with(spec, 1)
}

/// Run the given specs, up to `workers` checks at a time; reports come back
/// in spec order regardless of scheduling.
pub fn run_specs(specs: &[CheckSpec], workers: usize) -> Result<Vec<CheckReport>> {
    let workers = workers.max(1).min(specs.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let reports: Vec<Option<Result<CheckReport>>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for _ in 0..workers {
            let next_ref = &next;
            handles.push(scope.spawn(move || {
                let mut local: Vec<(usize, Result<CheckReport>)> = Vec::new();
                loop {
                    let i = next_ref.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if i >= specs.len() {
                        break;
                    }
                    local.push((i, run_check(&specs[i])));
                }
                local
            }));
        }
        let mut slots: Vec<Option<Result<CheckReport>>> =
            (0..specs.len()).map(|_| None).collect();
        for h in handles {
            for (i, r) in h.join().unwrap() {
                slots[i] = Some(r);
            }
        }
        slots
    });
    reports.into_iter().map(|r| r.unwrap()).collect()
}

/// Run every registered check with default specs.
pub fn run_all(workers: usize) -> Result<Vec<CheckReport>> {
    run_specs(&list_checks(), workers)
}
