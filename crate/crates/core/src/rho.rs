//! Exhaustive computation of the extremal functions ρ, ρ±, ρ±^, and their
//! class-restricted variants, with witnesses and deterministic parallel
//! enumeration.
//!
//! Subsets are streamed in lexicographic order of their sorted element-index
//! tuples. The combination index space [0, C(|G|, m)) is split into
//! contiguous chunks, one per worker; each worker reduces its chunk to a
//! local (value, witness) minimum and the merge keeps the smallest value with
//! the earliest witness in enumeration order, so the result is identical for
//! every worker count.
//!
//! Unit-multiplication orbits of Z_n are optionally pruned: only the
//! lexicographically least member of each orbit is evaluated. Soundness rests
//! on the equivariance u·(h±A) = h±(u·A) (and likewise for the other kinds),
//! which preserves both the filter classes and the sumset sizes. Translation
//! is never used for pruning: signed sumsets are not translation-invariant.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupSpec, GroupSubset};
use crate::sumset::{fold_table_finite, MultiplicitySet, SumsetKind};

/// Restriction of the search class.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ClassFilter {
    All,
    Sym,
    Asym,
    Nsym,
    /// Sym ∪ Asym ∪ Nsym.
    ClassA,
    /// |A ∩ (-A)| = s.
    SdegEquals(u32),
    ContainsZero,
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassFilter::All => write!(f, "all"),
            ClassFilter::Sym => write!(f, "sym"),
            ClassFilter::Asym => write!(f, "asym"),
            ClassFilter::Nsym => write!(f, "nsym"),
            ClassFilter::ClassA => write!(f, "class-a"),
            ClassFilter::SdegEquals(s) => write!(f, "sdeg={s}"),
            ClassFilter::ContainsZero => write!(f, "contains-zero"),
        }
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(v) = t.strip_prefix("sdeg=") {
            let s: u32 = v.parse().map_err(|_| Error::Parse {
                pos: 5,
                msg: format!("bad sdeg value {v:?}"),
            })?;
            return Ok(ClassFilter::SdegEquals(s));
        }
        match t {
            "all" => Ok(ClassFilter::All),
            "sym" => Ok(ClassFilter::Sym),
            "asym" => Ok(ClassFilter::Asym),
            "nsym" => Ok(ClassFilter::Nsym),
            "class-a" | "classA" => Ok(ClassFilter::ClassA),
            "contains-zero" | "zero" => Ok(ClassFilter::ContainsZero),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown filter {other:?}"),
            }),
        }
    }
}

/// A minimum-sumset-size query over all m-subsets of a finite group.
#[derive(Clone, Debug)]
pub struct RhoQuery {
    pub group: GroupSpec,
    pub m: u32,
    pub multiplicity: MultiplicitySet,
    pub kind: SumsetKind,
    pub filter: ClassFilter,
}

impl RhoQuery {
    pub fn new(
        group: GroupSpec,
        m: u32,
        multiplicity: MultiplicitySet,
        kind: SumsetKind,
        filter: ClassFilter,
    ) -> Self {
        RhoQuery {
            group,
            m,
            multiplicity,
            kind,
            filter,
        }
    }
}

/// Search controls. `prune` only takes effect on cyclic presentations.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub workers: usize,
    pub prune: bool,
    /// Fail fast when C(|G|, m) exceeds this.
    pub max_cells: u64,
    /// Emit progress to stderr every this many examined subsets.
    pub progress_every: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            prune: true,
            max_cells: 50_000_000,
            progress_every: None,
        }
    }
}

/// Exact minimum with an attaining witness and search accounting.
#[derive(Clone, Debug)]
pub struct RhoResult {
    pub value: u64,
    pub witness: GroupSubset,
    pub sets_examined: u64,
    pub pruned_by_automorphism: u64,
}

/// Size of the search space: C(n, m). Used for envelope decisions before a
/// scan starts.
pub fn search_space(n: u64, m: u64) -> u128 {
    binomial(n, m)
}

/// C(n, k), saturating at u128::MAX; envelope checks only need exact values
/// below their caps and "too big" above them.
pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// Lexicographic unranking: the `rank`-th m-combination of [0, n).
fn unrank_combination(n: usize, m: usize, mut rank: u128) -> Vec<usize> {
    let mut combo = Vec::with_capacity(m);
    let mut v = 0usize;
    for i in 0..m {
        loop {
            let with_v = binomial((n - 1 - v) as u64, (m - 1 - i) as u64);
            if rank < with_v {
                combo.push(v);
                v += 1;
                break;
            }
            rank -= with_v;
            v += 1;
        }
    }
    combo
}

/// Advance to the next combination in lex order; false when exhausted.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let m = combo.len();
    let mut i = m;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if combo[i] < n - m + i {
            combo[i] += 1;
            for j in i + 1..m {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
}

fn sdeg_of_combo(fg: &FiniteGroup, combo: &[usize]) -> u32 {
    combo
        .iter()
        .filter(|&&i| combo.binary_search(&fg.neg(i)).is_ok())
        .count() as u32
}

pub(crate) fn filter_matches(fg: &FiniteGroup, combo: &[usize], filter: &ClassFilter) -> bool {
    let m = combo.len() as u32;
    match filter {
        ClassFilter::All => true,
        ClassFilter::ContainsZero => combo.binary_search(&0).is_ok(),
        ClassFilter::Sym => sdeg_of_combo(fg, combo) == m,
        ClassFilter::Asym => sdeg_of_combo(fg, combo) == 0,
        // a set misses symmetry by one deletion exactly when sdeg = |A| - 1
        ClassFilter::Nsym => sdeg_of_combo(fg, combo) == m.saturating_sub(1) && m >= 1,
        ClassFilter::ClassA => {
            let s = sdeg_of_combo(fg, combo);
            s == 0 || s + 1 == m || s == m
        }
        ClassFilter::SdegEquals(s) => sdeg_of_combo(fg, combo) == *s,
    }
}

/// Is `combo` the lexicographically least member of its orbit under the unit
/// multiplications x ↦ ux of Z_n? Always true on non-cyclic presentations,
/// where pruning is disabled.
pub fn automorphism_orbit_prune(g: &GroupSpec, a: &GroupSubset) -> Result<bool> {
    let fg = FiniteGroup::new(g)?;
    let combo = {
        let mut c = fg.indices_of(a)?;
        c.sort_unstable();
        c
    };
    Ok(is_orbit_canonical(&fg, &combo))
}

fn is_orbit_canonical(fg: &FiniteGroup, combo: &[usize]) -> bool {
    let units = fg.units();
    if units.is_empty() {
        return true;
    }
    let n = fg.order() as u64;
    let mut image = vec![0usize; combo.len()];
    for &u in &units {
        if u == 1 {
            continue;
        }
        for (dst, &i) in image.iter_mut().zip(combo) {
            *dst = ((i as u64 * u) % n) as usize;
        }
        image.sort_unstable();
        if image.as_slice() < combo {
            return false;
        }
    }
    true
}

/// Stream of the m-subsets of a finite group matching a filter, each exactly
/// once, in lexicographic index order.
pub struct SubsetStream {
    fg: FiniteGroup,
    combo: Option<Vec<usize>>,
    filter: ClassFilter,
}

impl SubsetStream {
    pub fn group_tables(&self) -> &FiniteGroup {
        &self.fg
    }
}

impl Iterator for SubsetStream {
    type Item = GroupSubset;

    fn next(&mut self) -> Option<GroupSubset> {
        loop {
            let combo = self.combo.as_mut()?;
            let hit = filter_matches(&self.fg, combo, &self.filter);
            let out = if hit {
                Some(self.fg.subset_from_indices(combo.iter().copied()))
            } else {
                None
            };
            let n = self.fg.order();
            if !next_combination(combo, n) {
                self.combo = None;
            }
            if let Some(s) = out {
                return Some(s);
            }
        }
    }
}

/// All m-subsets of `g` satisfying `filter`, as a deterministic stream.
/// An infeasible filter yields an empty stream, not an error.
pub fn enumerate_subsets(g: &GroupSpec, m: u32, filter: ClassFilter) -> Result<SubsetStream> {
    let fg = FiniteGroup::new(g)?;
    let n = fg.order();
    if m < 1 || m as usize > n {
        return Err(Error::Precondition(format!(
            "need 1 <= m <= |G|, got m = {m} for |G| = {n}"
        )));
    }
    let combo: Vec<usize> = (0..m as usize).collect();
    Ok(SubsetStream {
        fg,
        combo: Some(combo),
        filter,
    })
}

struct ChunkOutcome {
    best: Option<(u64, Vec<usize>)>,
    examined: u64,
    pruned: u64,
}

fn scan_chunk(
    fg: &FiniteGroup,
    q: &RhoQuery,
    start: u128,
    end: u128,
    prune: bool,
    progress: Option<(&AtomicU64, u64)>,
) -> ChunkOutcome {
    if start >= end {
        return ChunkOutcome {
            best: None,
            examined: 0,
            pruned: 0,
        };
    }
    let n = fg.order();
    let m = q.m as usize;
    let h_max = q.multiplicity.max();
    let mut combo = unrank_combination(n, m, start);
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut examined = 0u64;
    let mut pruned = 0u64;
    let mut idx = start;
    while idx < end {
        if filter_matches(fg, &combo, &q.filter) {
            if prune && !is_orbit_canonical(fg, &combo) {
                pruned += 1;
            } else {
                let dp = fold_table_finite(fg, &combo, q.kind, h_max);
                let mut union = crate::bits::BitSet::new(n);
                for &h in q.multiplicity.values() {
                    if q.kind.is_restricted() && h as usize > m {
                        continue;
                    }
                    union.union_with(&dp[h as usize]);
                }
                let value = union.count() as u64;
                let better = match &best {
                    None => true,
                    Some((v, _)) => value < *v,
                };
                if better {
                    best = Some((value, combo.clone()));
                }
                examined += 1;
                if let Some((counter, every)) = progress {
                    let c = counter.fetch_add(1, AtomicOrdering::Relaxed) + 1;
                    if c % every == 0 {
                        eprintln!("rho: examined {c} subsets");
                    }
                }
            }
        }
        idx += 1;
        if idx < end && !next_combination(&mut combo, n) {
            break;
        }
    }
    ChunkOutcome {
        best,
        examined,
        pruned,
    }
}

/// Exact minimum of |H-fold kind-sumset| over the filtered m-subsets, with a
/// witness, a chunked deterministic parallel scan, and orbit pruning.
pub fn rho_search(q: &RhoQuery, opts: &SearchOptions) -> Result<RhoResult> {
    if opts.workers == 0 {
        return Err(Error::Precondition("workers must be >= 1".into()));
    }
    let fg = FiniteGroup::new(&q.group)?;
    let n = fg.order();
    if q.m < 1 || q.m as usize > n {
        return Err(Error::Precondition(format!(
            "need 1 <= m <= |G|, got m = {} for |G| = {n}",
            q.m
        )));
    }
    if let ClassFilter::SdegEquals(s) = q.filter {
        if s > q.m {
            return Err(Error::Precondition(format!(
                "sdeg filter needs 0 <= s <= m, got s = {s}, m = {}",
                q.m
            )));
        }
    }
    let total = binomial(n as u64, q.m as u64);
    if total > opts.max_cells as u128 {
        return Err(Error::Envelope {
            estimate: total,
            cap: opts.max_cells,
        });
    }
    let prune = opts.prune && fg.is_cyclic_presentation();
    let workers = opts.workers.min(total.max(1) as usize);
    let chunk = total.div_ceil(workers as u128);
    let progress_counter = AtomicU64::new(0);
    let outcomes: Vec<ChunkOutcome> = std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers {
            let start = chunk * w as u128;
            let end = (start + chunk).min(total);
            let fg_ref = &fg;
            let counter_ref = &progress_counter;
            handles.push(scope.spawn(move || {
                scan_chunk(
                    fg_ref,
                    q,
                    start,
                    end,
                    prune,
                    opts.progress_every.map(|e| (counter_ref, e)),
                )
            }));
        }
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut examined = 0u64;
    let mut pruned = 0u64;
    for out in outcomes {
        examined += out.examined;
        pruned += out.pruned;
        if let Some((v, combo)) = out.best {
            let take = match &best {
                None => true,
                // chunks are merged in enumeration order, so strict
                // improvement keeps the earliest witness among minimizers
                Some((bv, _)) => v < *bv,
            };
            if take {
                best = Some((v, combo));
            }
        }
    }
    match best {
        Some((value, combo)) => Ok(RhoResult {
            value,
            witness: fg.subset_from_indices(combo),
            sets_examined: examined,
            pruned_by_automorphism: pruned,
        }),
        None => Err(Error::EmptyClass(format!(
            "no {}-subset of {} satisfies {}",
            q.m, q.group, q.filter
        ))),
    }
}

/// Single-threaded search with default options.
pub fn rho(q: &RhoQuery) -> Result<RhoResult> {
    rho_search(q, &SearchOptions::default())
}

/// Parallel search; identical value and witness to [`rho`] for any worker
/// count.
pub fn rho_parallel(q: &RhoQuery, workers: usize) -> Result<RhoResult> {
    rho_search(
        q,
        &SearchOptions {
            workers,
            ..SearchOptions::default()
        },
    )
}
