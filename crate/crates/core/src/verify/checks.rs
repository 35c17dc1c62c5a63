//! The check bodies and their registry rows.
//!
//! Conventions shared by every check:
//!
//! * a "cell" is one evaluated parameter point; infeasible cells (an empty
//!   search class, an inapplicable hypothesis) count as checked and pass
//!   vacuously;
//! * inverse statements are run as implication checks: every extremal set
//!   found on the grid must satisfy the structural conclusion;
//! * failures record enough of the cell to re-run it in isolation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CheckSpec, Ctx, Entry, Grid, Mode, Tally};
use crate::bits::BitSet;
use crate::bounds;
use crate::error::{Error, Result};
use crate::group::{ExtendedCount, FiniteGroup, GroupSpec, GroupSubset};
use crate::rho::{self, next_combination, ClassFilter, RhoQuery, SearchOptions};
use crate::structure;
use crate::sumset::{self, fold_table_finite, MultiplicitySet, SumsetKind};

const SAMPLED_DEFAULT_SEED: u64 = 0x00C0_FFEE;

fn grid(
    orders: &[u64],
    groups: &[&str],
    primes: &[u64],
    size: (u32, u32),
    h: (u32, u32),
    values: (i64, i64),
) -> Grid {
    Grid {
        orders: orders.to_vec(),
        groups: groups.iter().map(|s| s.to_string()).collect(),
        primes: primes.to_vec(),
        size_min: size.0,
        size_max: size.1,
        h_min: h.0,
        h_max: h.1,
        value_min: values.0,
        value_max: values.1,
    }
}

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry {
            id: "T_NATH_DIRECT",
            claim: "|hA| >= hk-h+1 over Z; equality only for arithmetic progressions",
            default_grid: grid(&[], &[], &[], (2, 4), (2, 3), (0, 9)),
            default_mode: Mode::Exhaustive,
            run: t_nath_direct,
        },
        Entry {
            id: "T_DEVOS",
            claim: "|A+B| >= min(p(G), |A|+|B|-1)",
            default_grid: grid(&[2, 3, 4, 5, 6, 7, 8, 9], &["Z2xZ2", "Z2xZ4"], &[], (1, 9), (1, 1), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_devos,
        },
        Entry {
            id: "L_RHO_PLAIN",
            claim: "rho(G,m,h) >= min(p(G), hm-h+1), with equality iff m <= p(G)",
            default_grid: grid(&[2, 3, 4, 5, 6, 7, 8, 9], &["Z2xZ2", "Z2xZ4", "Z3xZ3"], &[], (1, 4), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: l_rho_plain,
        },
        Entry {
            id: "T_KEMP_INV",
            claim: "|A1+...+Ah| = sum|Ai|-h+1 below p(G) forces APs with one common difference",
            default_grid: grid(&[], &[], &[5, 7], (2, 3), (2, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_kemp_inv,
        },
        Entry {
            id: "T_BP_2FOLD",
            claim: "|2±A| >= 4k-2 for k >= 3 positive integers; equality only for d*{1,3,...,2k-1}",
            default_grid: grid(&[], &[], &[], (3, 5), (2, 2), (1, 12)),
            default_mode: Mode::Exhaustive,
            run: t_bp_2fold,
        },
        Entry {
            id: "T_BP_HFOLD",
            claim: "|h±A| >= 2hk-h+1 for h >= 3 over k >= 3 positive integers",
            default_grid: grid(&[], &[], &[], (3, 5), (3, 3), (1, 12)),
            default_mode: Mode::Exhaustive,
            run: t_bp_hfold,
        },
        Entry {
            id: "T_BP_INV",
            claim: "|h±A| = 2hk-h+1 (h >= 3) forces A = d*{1,3,...,2k-1}",
            default_grid: grid(&[], &[], &[], (3, 5), (3, 3), (1, 12)),
            default_mode: Mode::Exhaustive,
            run: t_bp_inv,
        },
        Entry {
            id: "L_SIGNED_EQ_UNION",
            claim: "h±A = h(A ∪ -A) when A ∩ -A is nonempty; the unguarded identity fails",
            default_grid: grid(&[2, 3, 4, 5, 6, 7, 8, 9, 10], &[], &[], (1, 10), (0, 4), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: l_signed_eq_union,
        },
        Entry {
            id: "C_INT_DIRECT",
            claim: "|h±A| >= 2hm - h|A ∩ -A| - h + 1 over Z for h >= 3, m >= 3",
            default_grid: grid(&[], &[], &[], (3, 4), (3, 3), (-8, 8)),
            default_mode: Mode::Exhaustive,
            run: c_int_direct,
        },
        Entry {
            id: "C_INT_INV_EVEN_ODD",
            claim: "signed equality over Z forces A_abs odd-spaced (even sdeg) or a dilated interval (odd sdeg)",
            default_grid: grid(&[], &[], &[], (3, 4), (3, 3), (-8, 8)),
            default_mode: Mode::Exhaustive,
            run: c_int_inv_even_odd,
        },
        Entry {
            id: "C_INT_2FOLD",
            claim: "|2±A| >= 4m-2 (asym) or 4m-2|A ∩ -A|-1 over Z, with the parity inverse",
            default_grid: grid(&[], &[], &[], (3, 4), (2, 2), (-8, 8)),
            default_mode: Mode::Exhaustive,
            run: c_int_2fold,
        },
        Entry {
            id: "L_HSET_EQ_UNION",
            claim: "H±A = H(A ∪ -A) when A ∩ -A is nonempty",
            default_grid: grid(&[2, 3, 4, 5, 6, 7, 8], &[], &[], (1, 8), (0, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: l_hset_eq_union,
        },
        Entry {
            id: "L_INTERVAL_SHIFT",
            claim: "[0,h]±A = h±(A ∪ {0}) = h(A ∪ -A ∪ {0}) for |A| >= 2",
            default_grid: grid(&[2, 3, 4, 5, 6, 7, 8, 9, 10], &[], &[], (2, 10), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: l_interval_shift,
        },
        Entry {
            id: "L_SDEG_RAISE",
            claim: "replacement raises sdeg to |A|-1 or |A| while shrinking h±A",
            default_grid: grid(&[3, 4, 5, 6, 7, 8, 9, 10], &[], &[], (2, 5), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: l_sdeg_raise,
        },
        Entry {
            id: "T_RHO_CLASS_A",
            claim: "rho±(G,m,H) is attained on sym, asym, or nsym sets",
            default_grid: grid(&[3, 4, 5, 6, 7, 8], &["Z2xZ2", "Z2xZ4"], &[], (1, 4), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_rho_class_a,
        },
        Entry {
            id: "T_RHO_S_BOUND",
            claim: "rho±^(s)(G,m,h) >= min(p(G), 2hm-hs-h+1), equality iff m <= (s+p(G))/2",
            default_grid: grid(&[3, 5, 7, 9, 11], &[], &[], (1, 11), (2, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_rho_s_bound,
        },
        Entry {
            id: "T_GEN_TRANSLATE",
            claim: "<g> independent of <A-g> gives |H±A| >= |H±(A-g)|; likewise for the zero substitution",
            default_grid: grid(&[4, 6, 8, 9], &["Z2xZ2", "Z2xZ4", "Z3xZ3"], &[], (1, 3), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_gen_translate,
        },
        Entry {
            id: "T_INV_AP",
            claim: "extremal |h±A| below p(G) forces A ∪ -A to be an arithmetic progression",
            default_grid: grid(&[], &[], &[5, 7, 11, 13], (2, 4), (2, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_inv_ap,
        },
        Entry {
            id: "T_PARITY_20",
            claim: "rho±^(s)(G,m,[0,h]) = rho±^(s)(G,m,h) for odd s, rho±^(s+1)(G,m+1,h) for even s",
            default_grid: grid(&[3, 5, 7, 9], &["Z3xZ3", "Z15"], &[], (1, 4), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_parity_20,
        },
        Entry {
            id: "T_SYM_RESTRICT",
            claim: "rho±(G,m,[0,h]) is attained on symmetric sets, in four equivalent forms",
            default_grid: grid(&[3, 4, 5, 6, 7, 8, 9], &[], &[], (2, 4), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_sym_restrict,
        },
        Entry {
            id: "T_FIELD_H2",
            claim: "asym A in Z_p: |2±A| >= 4k-2 when p >= 4k-1, else >= p-1",
            default_grid: grid(&[], &[], &[5, 7, 11, 13], (1, 64), (2, 2), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_field_h2,
        },
        Entry {
            id: "T_FIELD_H3",
            claim: "asym A in Z_p with p > 6k-6, p != 8k-7: |3±A| >= 6k-5",
            default_grid: grid(&[], &[], &[7, 11, 13, 17, 19], (2, 4), (3, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_field_h3,
        },
        Entry {
            id: "T_FIELD_H4",
            claim: "asym A in Z_p: |4±A| >= 8k-9, or 8k-9-4l below 8k-10, under the mod-8 cases",
            default_grid: grid(&[], &[], &[7, 11, 13, 17, 19, 23, 31], (2, 3), (4, 4), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_field_h4,
        },
        Entry {
            id: "T_RSS_FIELD",
            claim: "|h±^A| >= the three-case theta/ell lower bound in Z_p",
            default_grid: grid(&[], &[], &[11, 13, 17, 19], (2, 12), (2, 4), (0, 0)),
            default_mode: Mode::Sampled {
                seed: SAMPLED_DEFAULT_SEED,
                count: 500,
            },
            run: t_rss_field,
        },
        Entry {
            id: "L_RSS_INTERVAL",
            claim: "[0,h]±^A contains [0,h]^(A ∪ -A ∪ {0}), with equality for asym A",
            default_grid: grid(&[2, 3, 4, 5, 6, 7, 8, 9, 10], &[], &[], (1, 10), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: l_rss_interval,
        },
        Entry {
            id: "T_RSS_GROUP",
            claim: "|[0,h]±^A| >= min(p(G), 2hm-h^2-h|A ∩ -A|+1), plus h when 0 is missing",
            default_grid: grid(&[4, 5, 6, 7, 8, 9, 10, 11, 12], &["Z2xZ4", "Z3xZ3"], &[], (2, 5), (2, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_rss_group,
        },
        Entry {
            id: "T_RSS_FIELD_04",
            claim: "|[0,h]±^A| >= min(p, 2hm-h^2-h|A ∩ -A|+1), plus h when 0 is missing (field form)",
            default_grid: grid(&[], &[], &[5, 7, 11, 13], (1, 5), (1, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_rss_field_04,
        },
        Entry {
            id: "C_RSS_CLASSES",
            claim: "class minima of |[0,h]±^A| respect the asym, sym, and nsym bounds",
            default_grid: grid(&[4, 5, 6, 7, 8, 9, 10, 11, 12], &[], &[], (2, 4), (2, 3), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: c_rss_classes,
        },
        Entry {
            id: "T_ANR",
            claim: "|h^A| >= min(p, hm-h^2+1) in Z_p",
            default_grid: grid(&[], &[], &[5, 7, 11, 13], (2, 13), (2, 13), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_anr,
        },
        Entry {
            id: "T_DUPAN",
            claim: "|h^A| >= min(p(G), h|A|-h^2+1) in finite abelian groups",
            default_grid: grid(&[4, 6, 8, 9, 10, 12], &["Z2xZ2", "Z2xZ4", "Z3xZ3"], &[], (1, 12), (1, 12), (0, 0)),
            default_mode: Mode::Exhaustive,
            run: t_dupan,
        },
        Entry {
            id: "EX_Z17",
            claim: "|2±^{1,2,3,4,5}| = 16 in Z_17",
            default_grid: Grid::default(),
            default_mode: Mode::Exhaustive,
            run: ex_z17,
        },
        Entry {
            id: "EX_Z41",
            claim: "3±^{0,1,3,5,7,9,11,13,15} = Z_41 minus {0}",
            default_grid: Grid::default(),
            default_mode: Mode::Exhaustive,
            run: ex_z41,
        },
    ]
}

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

fn grid_groups(g: &Grid) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    for &n in &g.orders {
        out.push(GroupSpec::cyclic(n)?);
    }
    for s in &g.groups {
        out.push(s.parse()?);
    }
    Ok(out)
}

fn for_each_combo(n: usize, m: usize, f: &mut dyn FnMut(&[usize])) {
    if m == 0 || m > n {
        return;
    }
    let mut combo: Vec<usize> = (0..m).collect();
    loop {
        f(&combo);
        if !next_combination(&mut combo, n) {
            break;
        }
    }
}

fn combo_sdeg(fg: &FiniteGroup, combo: &[usize]) -> usize {
    combo
        .iter()
        .filter(|&&i| combo.binary_search(&fg.neg(i)).is_ok())
        .count()
}

fn combo_literal(fg: &FiniteGroup, combo: &[usize]) -> String {
    fg.subset_from_indices(combo.iter().copied()).canonical_literal()
}

/// Union of dp[h] over h in [0, h_max]; restricted weights past |A| are
/// already empty in the table.
fn dp_interval_union(dp: &[BitSet]) -> BitSet {
    let mut acc = BitSet::new(dp[0].len());
    for level in dp {
        acc.union_with(level);
    }
    acc
}

/// A_1 + ... + A_t over a finite group, sets given as index slices.
fn sum_of_combos(fg: &FiniteGroup, sets: &[&[usize]]) -> BitSet {
    let n = fg.order();
    let mut acc = BitSet::new(n);
    acc.set(0);
    for set in sets {
        let mut next = BitSet::new(n);
        for &a in set.iter() {
            for i in acc.iter_ones() {
                next.set(fg.add(i, a));
            }
        }
        acc = next;
    }
    acc
}

fn for_each_window_subset(lo: i64, hi: i64, k: usize, f: &mut dyn FnMut(&[i64])) {
    let window: Vec<i64> = (lo..=hi).collect();
    let n = window.len();
    if k == 0 || k > n {
        return;
    }
    for_each_combo(n, k, &mut |combo| {
        let vals: Vec<i64> = combo.iter().map(|&i| window[i]).collect();
        f(&vals);
    });
}

fn zset(vals: &[i64]) -> GroupSubset {
    GroupSubset::from_i64s(&GroupSpec::Integers, vals)
}

fn p_of(g: &GroupSpec) -> u64 {
    g.p_of_group().finite().expect("finite group")
}

/// min over the subsets matching `filter` of `score`; None when the class is
/// empty.
fn class_min(
    g: &GroupSpec,
    m: u32,
    filter: ClassFilter,
    score: &mut dyn FnMut(&GroupSubset) -> Result<u64>,
) -> Result<Option<(u64, GroupSubset)>> {
    let mut best: Option<(u64, GroupSubset)> = None;
    for a in rho::enumerate_subsets(g, m, filter)? {
        let v = score(&a)?;
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, a));
        }
    }
    Ok(best)
}

fn rho_value(
    g: &GroupSpec,
    m: u32,
    hs: MultiplicitySet,
    kind: SumsetKind,
    filter: ClassFilter,
    workers: usize,
) -> Result<Option<u64>> {
    let q = RhoQuery::new(g.clone(), m, hs, kind, filter);
    match rho::rho_search(
        &q,
        &SearchOptions {
            workers,
            ..SearchOptions::default()
        },
    ) {
        Ok(r) => Ok(Some(r.value)),
        Err(Error::EmptyClass(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

fn t_nath_direct(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let g = &spec.grid;
    for k in g.size_min.max(2)..=g.size_max {
        for h in g.h_min.max(2)..=g.h_max {
            for_each_window_subset(g.value_min, g.value_max, k as usize, &mut |vals| {
                tally.cell();
                let a = zset(vals);
                let size = sumset::hfold_sumset(&a, h).unwrap().len() as u64;
                let bound = h as u64 * (k as u64 - 1) + 1;
                if size < bound {
                    tally.fail(
                        format!("Z, h={h}, A={}", a.canonical_literal()),
                        a.canonical_literal(),
                        format!("|hA| >= {bound}"),
                        size.to_string(),
                    );
                } else if size == bound {
                    let ap = structure::detect_ap(&a).unwrap();
                    if ap.is_none() {
                        tally.fail(
                            format!("Z, h={h}, A={}", a.canonical_literal()),
                            a.canonical_literal(),
                            "extremal set is an arithmetic progression",
                            "no progression witness",
                        );
                    }
                }
            });
        }
    }
    Ok(())
}

fn t_devos(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    for g in grid_groups(&spec.grid)? {
        let fg = FiniteGroup::new(&g)?;
        let n = fg.order();
        let p = p_of(&g);
        // all nonempty pairs, masks over the canonical index order
        let subsets: Vec<Vec<usize>> = (1u64..(1 << n))
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        for a in &subsets {
            for b in &subsets {
                tally.cell();
                let sum = sum_of_combos(&fg, &[a.as_slice(), b.as_slice()]);
                let bound = p.min((a.len() + b.len() - 1) as u64);
                if (sum.count() as u64) < bound {
                    tally.fail(
                        format!("G={g}, A={}, B={}", combo_literal(&fg, a), combo_literal(&fg, b)),
                        combo_literal(&fg, a),
                        format!("|A+B| >= {bound}"),
                        sum.count().to_string(),
                    );
                }
            }
        }
    }
    Ok(())
}

fn l_rho_plain(spec: &CheckSpec, ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for g in grid_groups(grid)? {
        let order = g.order().unwrap() as u32;
        let p = p_of(&g);
        for m in grid.size_min..=grid.size_max.min(order) {
            for h in grid.h_min.max(1)..=grid.h_max {
                tally.cell();
                let value = rho_value(
                    &g,
                    m,
                    MultiplicitySet::singleton(h),
                    SumsetKind::Plain,
                    ClassFilter::All,
                    ctx.workers,
                )?
                .expect("All filter is never empty");
                let bound = p.min(h as u64 * (m as u64 - 1) + 1);
                let eq_expected = m as u64 <= p;
                if value < bound {
                    tally.fail(
                        format!("G={g}, m={m}, h={h}"),
                        "",
                        format!("rho >= {bound}"),
                        value.to_string(),
                    );
                } else if (value == bound) != eq_expected {
                    tally.fail(
                        format!("G={g}, m={m}, h={h}"),
                        "",
                        format!("equality iff m <= p(G) = {p} (expected {eq_expected})"),
                        format!("rho = {value}, bound = {bound}"),
                    );
                }
            }
        }
    }
    Ok(())
}

fn kemp_cell(
    g: &GroupSpec,
    fg: &FiniteGroup,
    tally: &mut Tally,
    sets: &[&[usize]],
    cutoff: u64,
) -> Result<()> {
    tally.cell();
    let h = sets.len();
    let total: usize = sets.iter().map(|s| s.len()).sum();
    let size = sum_of_combos(fg, sets).count();
    if size as u64 >= cutoff || size != total - h + 1 {
        return Ok(());
    }
    // hypothesis met: every summand must be an AP with one common difference
    let as_subsets: Vec<GroupSubset> = sets
        .iter()
        .map(|s| fg.subset_from_indices(s.iter().copied()))
        .collect();
    let found = g.enumerate_elements()?.into_iter().any(|d| {
        !d.is_zero() && as_subsets.iter().all(|a| structure::is_ap_with_diff(a, &d))
    });
    if !found {
        let lits: Vec<String> = as_subsets.iter().map(|a| a.canonical_literal()).collect();
        tally.fail(
            format!("G={g}, h={h}, sets=[{}]", lits.join(" | ")),
            lits.join(" | "),
            "all summands are APs with the same difference",
            "no common difference",
        );
    }
    Ok(())
}

fn t_kemp_inv(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &p in &grid.primes {
        let g = GroupSpec::cyclic(p)?;
        let fg = FiniteGroup::new(&g)?;
        let n = fg.order();
        let mut per_size: Vec<Vec<usize>> = Vec::new();
        for m in grid.size_min.max(2)..=grid.size_max {
            for_each_combo(n, m as usize, &mut |c| per_size.push(c.to_vec()));
        }
        for h in grid.h_min.max(2)..=grid.h_max.min(3) {
            let cutoff = if h == 2 { p - 1 } else { p };
            if h == 2 {
                for a in &per_size {
                    for b in &per_size {
                        kemp_cell(&g, &fg, tally, &[a.as_slice(), b.as_slice()], cutoff)?;
                    }
                }
            } else {
                for a in &per_size {
                    for b in &per_size {
                        for c in &per_size {
                            kemp_cell(
                                &g,
                                &fg,
                                tally,
                                &[a.as_slice(), b.as_slice(), c.as_slice()],
                                cutoff,
                            )?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn bp_signed_direct(
    spec: &CheckSpec,
    tally: &mut Tally,
    h_lo: u32,
    check_inverse: bool,
    check_bound: bool,
) -> Result<()> {
    let grid = &spec.grid;
    for k in grid.size_min.max(3)..=grid.size_max {
        for h in grid.h_min.max(h_lo)..=grid.h_max {
            for_each_window_subset(grid.value_min.max(1), grid.value_max, k as usize, &mut |vals| {
                tally.cell();
                let a = zset(vals);
                let size = sumset::signed_sumset(&a, h).unwrap().len() as u64;
                let bound = if h == 2 {
                    4 * k as u64 - 2
                } else {
                    2 * h as u64 * k as u64 - h as u64 + 1
                };
                if check_bound && size < bound {
                    tally.fail(
                        format!("Z, h={h}, A={}", a.canonical_literal()),
                        a.canonical_literal(),
                        format!("|h±A| >= {bound}"),
                        size.to_string(),
                    );
                }
                if check_inverse && size == bound && !structure::is_odd_spaced(&a).unwrap() {
                    tally.fail(
                        format!("Z, h={h}, A={}", a.canonical_literal()),
                        a.canonical_literal(),
                        "extremal set is d*{1,3,...,2k-1}",
                        "not odd-spaced",
                    );
                }
            });
        }
    }
    Ok(())
}

fn t_bp_2fold(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    bp_signed_direct(spec, tally, 2, true, true)
}

fn t_bp_hfold(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    bp_signed_direct(spec, tally, 3, false, true)
}

fn t_bp_inv(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    bp_signed_direct(spec, tally, 3, true, false)
}

fn l_signed_eq_union(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &n in &grid.orders {
        let g = GroupSpec::cyclic(n)?;
        let fg = FiniteGroup::new(&g)?;
        let order = fg.order();
        for m in grid.size_min.max(1)..=grid.size_max.min(order as u32) {
            for_each_combo(order, m as usize, &mut |combo| {
                if combo_sdeg(&fg, combo) == 0 {
                    return;
                }
                let mut union: Vec<usize> = combo.to_vec();
                union.extend(combo.iter().map(|&i| fg.neg(i)));
                union.sort_unstable();
                union.dedup();
                for h in grid.h_min..=grid.h_max {
                    tally.cell();
                    let signed = &fold_table_finite(&fg, combo, SumsetKind::Signed, h)[h as usize];
                    let plain = &fold_table_finite(&fg, &union, SumsetKind::Plain, h)[h as usize];
                    if signed != plain {
                        tally.fail(
                            format!("G={g}, h={h}, A={}", combo_literal(&fg, combo)),
                            combo_literal(&fg, combo),
                            "h±A = h(A ∪ -A)",
                            "sets differ",
                        );
                    }
                }
            });
        }
    }
    // negative control: without A ∩ -A ≠ ∅ the identity fails by exactly {0}
    tally.cell();
    let a = zset(&[1, 2]);
    let lhs = sumset::signed_sumset(&a, 2)?;
    let rhs = sumset::hfold_sumset(&structure::union_with_negation(&a), 2)?;
    let extra = rhs.difference(&lhs)?;
    let missing = lhs.difference(&rhs)?;
    if lhs == rhs || extra != zset(&[0]) || !missing.is_empty() {
        tally.fail(
            "Z, h=2, A=1,2 (negative control)",
            "1,2",
            "2(A ∪ -A) exceeds 2±A by exactly {0}",
            format!("extra={extra}, missing={missing}"),
        );
    }
    Ok(())
}

fn c_int_direct(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for m in grid.size_min.max(3)..=grid.size_max {
        for h in grid.h_min.max(3)..=grid.h_max {
            for_each_window_subset(grid.value_min, grid.value_max, m as usize, &mut |vals| {
                tally.cell();
                let a = zset(vals);
                let s = structure::sdeg(&a) as u64;
                let size = sumset::signed_sumset(&a, h).unwrap().len() as u64;
                let bound = 2 * h as u64 * m as u64 - h as u64 * s - h as u64 + 1;
                if size < bound {
                    tally.fail(
                        format!("Z, h={h}, A={}", a.canonical_literal()),
                        a.canonical_literal(),
                        format!("|h±A| >= {bound}"),
                        size.to_string(),
                    );
                }
            });
        }
    }
    Ok(())
}

fn int_inverse_parity(
    tally: &mut Tally,
    a: &GroupSubset,
    h: u32,
    size: u64,
    bound: u64,
) {
    if size != bound {
        return;
    }
    let s = structure::sdeg(a);
    let abs = structure::abs_set(a).unwrap();
    let ok = if s.is_multiple_of(2) {
        structure::is_odd_spaced(&abs).unwrap()
    } else {
        structure::is_dilated_interval(&abs).unwrap()
    };
    if !ok {
        tally.fail(
            format!("Z, h={h}, A={}", a.canonical_literal()),
            a.canonical_literal(),
            if s.is_multiple_of(2) {
                "A_abs = d*{1,3,...} for even sdeg"
            } else {
                "A_abs = d*[0,..] for odd sdeg"
            },
            format!("A_abs = {abs}"),
        );
    }
}

fn c_int_inv_even_odd(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for m in grid.size_min.max(3)..=grid.size_max {
        for h in grid.h_min.max(3)..=grid.h_max {
            for_each_window_subset(grid.value_min, grid.value_max, m as usize, &mut |vals| {
                tally.cell();
                let a = zset(vals);
                let s = structure::sdeg(&a) as u64;
                let size = sumset::signed_sumset(&a, h).unwrap().len() as u64;
                let bound = 2 * h as u64 * m as u64 - h as u64 * s - h as u64 + 1;
                int_inverse_parity(tally, &a, h, size, bound);
            });
        }
    }
    Ok(())
}

fn c_int_2fold(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for m in grid.size_min.max(3)..=grid.size_max {
        for_each_window_subset(grid.value_min, grid.value_max, m as usize, &mut |vals| {
            tally.cell();
            let a = zset(vals);
            let s = structure::sdeg(&a) as u64;
            let size = sumset::signed_sumset(&a, 2).unwrap().len() as u64;
            let bound = if s == 0 {
                4 * m as u64 - 2
            } else {
                4 * m as u64 - 2 * s - 1
            };
            if size < bound {
                tally.fail(
                    format!("Z, h=2, A={}", a.canonical_literal()),
                    a.canonical_literal(),
                    format!("|2±A| >= {bound}"),
                    size.to_string(),
                );
            }
            int_inverse_parity(tally, &a, 2, size, bound);
        });
    }
    Ok(())
}

fn l_hset_eq_union(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    let h_sets = [
        MultiplicitySet::new(vec![2]).unwrap(),
        MultiplicitySet::new(vec![0, 2]).unwrap(),
        MultiplicitySet::new(vec![1, 3]).unwrap(),
        MultiplicitySet::interval(grid.h_max),
    ];
    for &n in &grid.orders {
        let g = GroupSpec::cyclic(n)?;
        let fg = FiniteGroup::new(&g)?;
        let order = fg.order();
        for m in grid.size_min..=grid.size_max.min(order as u32) {
            for_each_combo(order, m as usize, &mut |combo| {
                if combo_sdeg(&fg, combo) == 0 {
                    return;
                }
                let a = fg.subset_from_indices(combo.iter().copied());
                let u = structure::union_with_negation(&a);
                for hs in &h_sets {
                    tally.cell();
                    let lhs = sumset::union_fold(&a, hs, SumsetKind::Signed).unwrap();
                    let rhs = sumset::union_fold(&u, hs, SumsetKind::Plain).unwrap();
                    if lhs != rhs {
                        tally.fail(
                            format!("G={g}, H={{{hs}}}, A={}", a.canonical_literal()),
                            a.canonical_literal(),
                            "H±A = H(A ∪ -A)",
                            "sets differ",
                        );
                    }
                }
            });
        }
    }
    Ok(())
}

fn l_interval_shift(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &n in &grid.orders {
        let g = GroupSpec::cyclic(n)?;
        let fg = FiniteGroup::new(&g)?;
        let order = fg.order();
        for m in grid.size_min.max(2)..=grid.size_max.min(order as u32) {
            for_each_combo(order, m as usize, &mut |combo| {
                let a = fg.subset_from_indices(combo.iter().copied());
                let with_zero = a.with_zero();
                let full = structure::union_with_negation(&a).with_zero();
                for h in grid.h_min.max(1)..=grid.h_max {
                    tally.cell();
                    let interval =
                        sumset::union_fold(&a, &MultiplicitySet::interval(h), SumsetKind::Signed)
                            .unwrap();
                    let shifted = sumset::signed_sumset(&with_zero, h).unwrap();
                    let plain = sumset::hfold_sumset(&full, h).unwrap();
                    if interval != shifted || interval != plain {
                        tally.fail(
                            format!("G={g}, h={h}, A={}", a.canonical_literal()),
                            a.canonical_literal(),
                            "[0,h]±A = h±(A ∪ {0}) = h(A ∪ -A ∪ {0})",
                            format!(
                                "interval={}, shifted={}, plain={}",
                                interval.len(),
                                shifted.len(),
                                plain.len()
                            ),
                        );
                    }
                }
            });
        }
    }
    Ok(())
}

fn l_sdeg_raise(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &n in &grid.orders {
        let g = GroupSpec::cyclic(n)?;
        let fg = FiniteGroup::new(&g)?;
        let order = fg.order();
        for m in grid.size_min.max(2)..=grid.size_max.min(order as u32) {
            for_each_combo(order, m as usize, &mut |combo| {
                let s = combo_sdeg(&fg, combo);
                if s == 0 || s + 2 > m as usize {
                    return;
                }
                let a = fg.subset_from_indices(combo.iter().copied());
                for h in grid.h_min.max(1)..=grid.h_max {
                    tally.cell();
                    let out = crate::construct::symmetrize(&a, h).unwrap();
                    let b = &out.set;
                    let sd = structure::sdeg(b);
                    let before = sumset::signed_sumset(&a, h).unwrap();
                    let after = sumset::signed_sumset(b, h).unwrap();
                    let ok = b.len() == a.len()
                        && (sd == m as usize - 1 || sd == m as usize)
                        && after.difference(&before).unwrap().is_empty()
                        && out.steps <= (m as usize - s) / 2;
                    if !ok {
                        tally.fail(
                            format!("G={g}, h={h}, A={}", a.canonical_literal()),
                            b.canonical_literal(),
                            "|B| = |A|, sdeg(B) in {|A|-1, |A|}, h±B inside h±A",
                            format!("sdeg(B) = {sd}, steps = {}", out.steps),
                        );
                    }
                }
            });
        }
    }
    Ok(())
}

fn t_rho_class_a(spec: &CheckSpec, ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    let mut h_sets: Vec<MultiplicitySet> = (grid.h_min.max(1)..=grid.h_max)
        .map(MultiplicitySet::singleton)
        .collect();
    h_sets.push(MultiplicitySet::interval(2));
    for g in grid_groups(grid)? {
        let order = g.order().unwrap() as u32;
        for m in grid.size_min.max(1)..=grid.size_max.min(order) {
            for hs in &h_sets {
                tally.cell();
                let all = rho_value(&g, m, hs.clone(), SumsetKind::Signed, ClassFilter::All, ctx.workers)?
                    .expect("nonempty");
                let class_a =
                    rho_value(&g, m, hs.clone(), SumsetKind::Signed, ClassFilter::ClassA, ctx.workers)?;
                let three
                    = [ClassFilter::Sym, ClassFilter::Asym, ClassFilter::Nsym]
                    .into_iter()
                    .filter_map(|f| {
                        rho_value(&g, m, hs.clone(), SumsetKind::Signed, f, ctx.workers).transpose()
                    })
                    .collect::<Result<Vec<u64>>>()?;
                let min_three = three.into_iter().min();
                if class_a != min_three || class_a != Some(all) {
                    tally.fail(
                        format!("G={g}, m={m}, H={{{hs}}}"),
                        "",
                        format!("rho over all = {all} attained on sym/asym/nsym"),
                        format!("class-A min = {class_a:?}, per-class min = {min_three:?}"),
                    );
                }
            }
        }
    }
    Ok(())
}

fn t_rho_s_bound(spec: &CheckSpec, ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for g in grid_groups(grid)? {
        let order = g.order().unwrap() as u32;
        let p = p_of(&g);
        for h in grid.h_min.max(1)..=grid.h_max {
            for m in 1..=order.min(grid.size_max) {
                for s in 1..=m {
                    tally.cell();
                    let value = rho_value(
                        &g,
                        m,
                        MultiplicitySet::singleton(h),
                        SumsetKind::Signed,
                        ClassFilter::SdegEquals(s),
                        ctx.workers,
                    )?;
                    let Some(value) = value else {
                        continue; // empty class: vacuous cell
                    };
                    let bound = p.min(2 * h as u64 * m as u64 - h as u64 * s as u64 - h as u64 + 1);
                    let eq_expected = 2 * m as u64 - s as u64 <= p;
                    if value < bound || (value == bound) != eq_expected {
                        tally.fail(
                            format!("G={g}, m={m}, s={s}, h={h}"),
                            "",
                            format!("rho >= {bound}, equality iff 2m-s <= p(G) = {p} ({eq_expected})"),
                            format!("rho = {value}"),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn t_gen_translate(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    let mut h_sets: Vec<MultiplicitySet> = (grid.h_min.max(1)..=grid.h_max)
        .map(MultiplicitySet::singleton)
        .collect();
    h_sets.push(MultiplicitySet::interval(2));
    for g in grid_groups(grid)? {
        let fg = FiniteGroup::new(&g)?;
        let order = fg.order();
        for m in grid.size_min.max(1)..=grid.size_max.min(order as u32) {
            for_each_combo(order, m as usize, &mut |combo| {
                let a = fg.subset_from_indices(combo.iter().copied());
                for e in a.iter() {
                    let single =
                        GroupSubset::new(g.clone(), vec![e.clone()]).unwrap();
                    let gen_g = g.subgroup_generated(&single).unwrap();
                    // part 1: translate by -g
                    let shifted = a.translated(&g.neg(e).unwrap()).unwrap();
                    let gen_shifted = g.subgroup_generated(&shifted).unwrap();
                    if gen_g.intersect(&gen_shifted).unwrap().len() == 1 {
                        for hs in &h_sets {
                            tally.cell();
                            let lhs =
                                sumset::union_fold(&a, hs, SumsetKind::Signed).unwrap().len();
                            let rhs = sumset::union_fold(&shifted, hs, SumsetKind::Signed)
                                .unwrap()
                                .len();
                            if lhs < rhs {
                                tally.fail(
                                    format!(
                                        "G={g}, H={{{hs}}}, A={}, g={e}",
                                        a.canonical_literal()
                                    ),
                                    a.canonical_literal(),
                                    "|H±A| >= |H±(A-g)|",
                                    format!("{lhs} < {rhs}"),
                                );
                            }
                        }
                    }
                    // part 2: swap g for 0
                    if e.is_zero() {
                        continue;
                    }
                    let without = a.difference(&single).unwrap();
                    let gen_without = g.subgroup_generated(&without).unwrap();
                    if gen_g.intersect(&gen_without).unwrap().len() == 1 {
                        let b = without.with_zero();
                        for hs in &h_sets {
                            tally.cell();
                            let lhs =
                                sumset::union_fold(&a, hs, SumsetKind::Signed).unwrap().len();
                            let rhs =
                                sumset::union_fold(&b, hs, SumsetKind::Signed).unwrap().len();
                            if lhs < rhs {
                                tally.fail(
                                    format!(
                                        "G={g}, H={{{hs}}}, A={}, g={e}",
                                        a.canonical_literal()
                                    ),
                                    a.canonical_literal(),
                                    "|H±A| >= |H±(A ∪ {0} \\ {g})|",
                                    format!("{lhs} < {rhs}"),
                                );
                            }
                        }
                    }
                }
            });
        }
    }
    Ok(())
}

fn t_inv_ap(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &p in &grid.primes {
        let g = GroupSpec::cyclic(p)?;
        let fg = FiniteGroup::new(&g)?;
        let order = fg.order();
        for m in grid.size_min.max(2)..=grid.size_max.min(order as u32) {
            for_each_combo(order, m as usize, &mut |combo| {
                let s = combo_sdeg(&fg, combo) as u64;
                if s == 0 {
                    return;
                }
                for h in grid.h_min.max(2)..=grid.h_max.min(3) {
                    tally.cell();
                    let size =
                        fold_table_finite(&fg, combo, SumsetKind::Signed, h)[h as usize].count() as u64;
                    let bound = 2 * h as u64 * m as u64 - h as u64 * s - h as u64 + 1;
                    let cutoff = if h == 2 { p - 1 } else { p };
                    if size == bound && size < cutoff {
                        let a = fg.subset_from_indices(combo.iter().copied());
                        let u = structure::union_with_negation(&a);
                        if u.len() >= 2 && structure::detect_ap(&u).unwrap().is_none() {
                            tally.fail(
                                format!("G={g}, h={h}, A={}", a.canonical_literal()),
                                u.canonical_literal(),
                                "A ∪ -A is an arithmetic progression",
                                "no progression witness",
                            );
                        }
                    }
                }
            });
        }
    }
    Ok(())
}

fn t_parity_20(spec: &CheckSpec, ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for g in grid_groups(grid)? {
        let p = p_of(&g);
        if p < 3 {
            continue;
        }
        let order = g.order().unwrap() as u32;
        for m in grid.size_min.max(1)..=grid.size_max.min(order) {
            for s in 1..=m {
                for h in grid.h_min.max(1)..=grid.h_max {
                    tally.cell();
                    let lhs = rho_value(
                        &g,
                        m,
                        MultiplicitySet::interval(h),
                        SumsetKind::Signed,
                        ClassFilter::SdegEquals(s),
                        ctx.workers,
                    )?;
                    let rhs = if s % 2 == 1 {
                        rho_value(
                            &g,
                            m,
                            MultiplicitySet::singleton(h),
                            SumsetKind::Signed,
                            ClassFilter::SdegEquals(s),
                            ctx.workers,
                        )?
                    } else if m < order {
                        rho_value(
                            &g,
                            m + 1,
                            MultiplicitySet::singleton(h),
                            SumsetKind::Signed,
                            ClassFilter::SdegEquals(s + 1),
                            ctx.workers,
                        )?
                    } else {
                        None
                    };
                    if lhs != rhs {
                        tally.fail(
                            format!("G={g}, m={m}, s={s}, h={h}"),
                            "",
                            "rho±^(s)(G,m,[0,h]) equals its parity-matched single-h form",
                            format!("lhs = {lhs:?}, rhs = {rhs:?}"),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn t_sym_restrict(spec: &CheckSpec, ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for g in grid_groups(grid)? {
        let order = g.order().unwrap() as u32;
        for m in grid.size_min.max(2)..=grid.size_max.min(order) {
            for h in grid.h_min.max(1)..=grid.h_max {
                tally.cell();
                let hs = MultiplicitySet::interval(h);
                let lhs =
                    rho_value(&g, m, hs.clone(), SumsetKind::Signed, ClassFilter::All, ctx.workers)?
                        .expect("nonempty");
                // (1) restricted to symmetric sets
                let part1 =
                    rho_value(&g, m, hs.clone(), SumsetKind::Signed, ClassFilter::Sym, ctx.workers)?;
                if part1 != Some(lhs) {
                    tally.fail(
                        format!("G={g}, m={m}, h={h} (part 1)"),
                        "",
                        format!("min over Sym equals rho = {lhs}"),
                        format!("{part1:?}"),
                    );
                }
                // (2) min |h(A ∪ {0})| over symmetric sets
                let part2 = class_min(&g, m, ClassFilter::Sym, &mut |a| {
                    Ok(sumset::hfold_sumset(&a.with_zero(), h)?.len() as u64)
                })?;
                if part2.as_ref().map(|(v, _)| *v) != Some(lhs) {
                    tally.fail(
                        format!("G={g}, m={m}, h={h} (part 2)"),
                        part2.map(|(_, a)| a.canonical_literal()).unwrap_or_default(),
                        format!("min |h(A ∪ {{0}})| over Sym equals rho = {lhs}"),
                        "differs",
                    );
                }
                // (3) odd m: min |hA| over symmetric sets containing 0
                if m % 2 == 1 {
                    let part3 = sym_zero_min(&g, m, h)?;
                    if part3 != Some(lhs) {
                        tally.fail(
                            format!("G={g}, m={m}, h={h} (part 3)"),
                            "",
                            format!("min |hA| over Sym with 0 equals rho = {lhs}"),
                            format!("{part3:?}"),
                        );
                    }
                }
                // (4) odd |G|: the 2⌊m/2⌋+1 form
                if order % 2 == 1 {
                    let m4 = 2 * (m / 2) + 1;
                    if m4 <= order {
                        let part4 = sym_zero_min(&g, m4, h)?;
                        if part4 != Some(lhs) {
                            tally.fail(
                                format!("G={g}, m={m}, h={h} (part 4)"),
                                "",
                                format!("min |hA| over Sym(G,{m4}) with 0 equals rho = {lhs}"),
                                format!("{part4:?}"),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// min |hA| over symmetric m-sets containing 0.
fn sym_zero_min(g: &GroupSpec, m: u32, h: u32) -> Result<Option<u64>> {
    let zero = g.zero();
    let mut best: Option<u64> = None;
    for a in rho::enumerate_subsets(g, m, ClassFilter::Sym)? {
        if !a.contains(&zero) {
            continue;
        }
        let v = sumset::hfold_sumset(&a, h)?.len() as u64;
        if best.is_none_or(|b| v < b) {
            best = Some(v);
        }
    }
    Ok(best)
}

fn t_field_h2(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &p in &grid.primes {
        let g = GroupSpec::cyclic(p)?;
        let fg = FiniteGroup::new(&g)?;
        let max_asym = ((p - 1) / 2) as u32;
        for k in grid.size_min.max(1)..=grid.size_max.min(max_asym) {
            for_each_combo(fg.order(), k as usize, &mut |combo| {
                if combo_sdeg(&fg, combo) != 0 {
                    return;
                }
                tally.cell();
                let size = fold_table_finite(&fg, combo, SumsetKind::Signed, 2)[2].count() as u64;
                let bound = if p >= 4 * k as u64 - 1 {
                    4 * k as u64 - 2
                } else {
                    p - 1
                };
                if size < bound {
                    tally.fail(
                        format!("Z_{p}, k={k}, A={}", combo_literal(&fg, combo)),
                        combo_literal(&fg, combo),
                        format!("|2±A| >= {bound}"),
                        size.to_string(),
                    );
                }
            });
        }
    }
    Ok(())
}

fn t_field_h3(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &p in &grid.primes {
        let g = GroupSpec::cyclic(p)?;
        let fg = FiniteGroup::new(&g)?;
        for k in grid.size_min.max(2)..=grid.size_max {
            // hypotheses of the three-fold bound
            if p <= 6 * k as u64 - 6 || p == 8 * k as u64 - 7 {
                continue;
            }
            for_each_combo(fg.order(), k as usize, &mut |combo| {
                if combo_sdeg(&fg, combo) != 0 {
                    return;
                }
                tally.cell();
                let size = fold_table_finite(&fg, combo, SumsetKind::Signed, 3)[3].count() as u64;
                let bound = 6 * k as u64 - 5;
                if size < bound {
                    tally.fail(
                        format!("Z_{p}, k={k}, A={}", combo_literal(&fg, combo)),
                        combo_literal(&fg, combo),
                        format!("|3±A| >= {bound}"),
                        size.to_string(),
                    );
                }
            });
        }
    }
    Ok(())
}

fn t_field_h4(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &p in &grid.primes {
        let g = GroupSpec::cyclic(p)?;
        let fg = FiniteGroup::new(&g)?;
        for k in grid.size_min.max(2)..=grid.size_max {
            let bound = bounds::bound_signed_field(k as u64, &ExtendedCount::Finite(p), 4)?;
            let Some(bound) = bound.value else {
                continue; // no hypothesis covers this (k, p) cell
            };
            for_each_combo(fg.order(), k as usize, &mut |combo| {
                if combo_sdeg(&fg, combo) != 0 {
                    return;
                }
                tally.cell();
                let size = fold_table_finite(&fg, combo, SumsetKind::Signed, 4)[4].count() as u64;
                if size < bound {
                    tally.fail(
                        format!("Z_{p}, k={k}, A={}", combo_literal(&fg, combo)),
                        combo_literal(&fg, combo),
                        format!("|4±A| >= {bound}"),
                        size.to_string(),
                    );
                }
            });
        }
    }
    Ok(())
}

fn t_rss_field(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    let Mode::Sampled { seed, count } = spec.mode else {
        return Err(Error::Precondition(
            "T_RSS_FIELD runs in sampled mode; set mode Sampled".into(),
        ));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &p in &grid.primes {
        let g = GroupSpec::cyclic(p)?;
        let fg = FiniteGroup::new(&g)?;
        let k_hi = (p - 1).min(grid.size_max as u64) as usize;
        for _ in 0..count {
            let k = rng.gen_range(grid.size_min.max(2) as usize..=k_hi);
            let combo = {
                let mut idxs = rand::seq::index::sample(&mut rng, p as usize, k).into_vec();
                idxs.sort_unstable();
                idxs
            };
            let s = combo_sdeg(&fg, &combo) as u64;
            let h_hi = grid.h_max.min(4).min(k as u32);
            let dp = fold_table_finite(&fg, &combo, SumsetKind::RestrictedSigned, h_hi);
            for h in 2..=h_hi {
                tally.cell();
                let b = bounds::bound_restricted_field(k as u64, &ExtendedCount::Finite(p), h, s)?;
                let bound = b.value.expect("three cases are exhaustive");
                let size = dp[h as usize].count() as u64;
                if size < bound {
                    tally.fail(
                        format!(
                            "Z_{p}, k={k}, h={h}, s={s}, branch={}, A={}",
                            b.branch,
                            combo_literal(&fg, &combo)
                        ),
                        combo_literal(&fg, &combo),
                        format!("|h±^A| >= {bound}"),
                        size.to_string(),
                    );
                }
            }
        }
    }
    Ok(())
}

fn l_rss_interval(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for &n in &grid.orders {
        let g = GroupSpec::cyclic(n)?;
        let fg = FiniteGroup::new(&g)?;
        let order = fg.order();
        for m in grid.size_min.max(1)..=grid.size_max.min(order as u32) {
            for_each_combo(order, m as usize, &mut |combo| {
                let a = fg.subset_from_indices(combo.iter().copied());
                let asym = combo_sdeg(&fg, combo) == 0;
                let full = structure::union_with_negation(&a).with_zero();
                let full_idx = fg.indices_of(&full).unwrap();
                for h in grid.h_min.max(1)..=grid.h_max.min(m) {
                    tally.cell();
                    let lhs = dp_interval_union(&fold_table_finite(
                        &fg,
                        combo,
                        SumsetKind::RestrictedSigned,
                        h,
                    ));
                    let rhs = dp_interval_union(&fold_table_finite(
                        &fg,
                        &full_idx,
                        SumsetKind::Restricted,
                        h,
                    ));
                    let contained = rhs.is_subset_of(&lhs);
                    let equal = lhs == rhs;
                    if !contained || (asym && !equal) {
                        tally.fail(
                            format!("G={g}, h={h}, A={}", a.canonical_literal()),
                            a.canonical_literal(),
                            if asym {
                                "[0,h]±^A = [0,h]^(A ∪ -A ∪ {0})"
                            } else {
                                "[0,h]±^A contains [0,h]^(A ∪ -A ∪ {0})"
                            },
                            format!("contained={contained}, equal={equal}"),
                        );
                    }
                }
            });
        }
    }
    Ok(())
}

fn rss_interval_bound_check(
    tally: &mut Tally,
    g: &GroupSpec,
    grid: &Grid,
    h_floor: u32,
) -> Result<()> {
    let fg = FiniteGroup::new(g)?;
    let order = fg.order();
    let p = ExtendedCount::Finite(p_of(g));
    for m in grid.size_min.max(1)..=grid.size_max.min(order as u32) {
        for_each_combo(order, m as usize, &mut |combo| {
            let s = combo_sdeg(&fg, combo) as u64;
            let zero_in = combo.binary_search(&0).is_ok();
            for h in grid.h_min.max(h_floor)..=grid.h_max.min(m) {
                tally.cell();
                let size = dp_interval_union(&fold_table_finite(
                    &fg,
                    combo,
                    SumsetKind::RestrictedSigned,
                    h,
                ))
                .count() as u64;
                let bound = bounds::bound_interval_restricted(&p, m as u64, h, s, zero_in)
                    .unwrap()
                    .value
                    .unwrap();
                if size < bound {
                    tally.fail(
                        format!("G={g}, m={m}, h={h}, s={s}, zero={zero_in}"),
                        combo_literal(&fg, combo),
                        format!("|[0,h]±^A| >= {bound}"),
                        size.to_string(),
                    );
                }
            }
        });
    }
    Ok(())
}

fn t_rss_group(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    for g in grid_groups(&spec.grid)? {
        rss_interval_bound_check(tally, &g, &spec.grid, 2)?;
    }
    Ok(())
}

fn t_rss_field_04(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    for &p in &spec.grid.primes {
        let g = GroupSpec::cyclic(p)?;
        rss_interval_bound_check(tally, &g, &spec.grid, 1)?;
    }
    Ok(())
}

fn c_rss_classes(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    let grid = &spec.grid;
    for g in grid_groups(grid)? {
        let order = g.order().unwrap() as u32;
        let p = ExtendedCount::Finite(p_of(&g));
        for m in grid.size_min.max(2)..=grid.size_max.min(order) {
            for h in grid.h_min.max(2)..=grid.h_max.min(m) {
                for class in [
                    crate::structure::SymmetryClass::Asym,
                    crate::structure::SymmetryClass::Sym,
                    crate::structure::SymmetryClass::Nsym,
                ] {
                    tally.cell();
                    let filter = match class {
                        crate::structure::SymmetryClass::Asym => ClassFilter::Asym,
                        crate::structure::SymmetryClass::Sym => ClassFilter::Sym,
                        _ => ClassFilter::Nsym,
                    };
                    let min = class_min(&g, m, filter, &mut |a| {
                        Ok(sumset::union_fold(
                            a,
                            &MultiplicitySet::interval(h),
                            SumsetKind::RestrictedSigned,
                        )?
                        .len() as u64)
                    })?;
                    let Some((min, witness)) = min else {
                        continue; // empty class
                    };
                    let bound = bounds::bound_interval_restricted_class(&p, m as u64, h, class)?
                        .value
                        .unwrap();
                    if min < bound {
                        tally.fail(
                            format!("G={g}, m={m}, h={h}, class={class}"),
                            witness.canonical_literal(),
                            format!("class min >= {bound}"),
                            min.to_string(),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn restricted_plain_bound_check(
    tally: &mut Tally,
    g: &GroupSpec,
    grid: &Grid,
    h_floor: u32,
) -> Result<()> {
    let fg = FiniteGroup::new(g)?;
    let order = fg.order();
    let p = p_of(g);
    for m in grid.size_min.max(1)..=grid.size_max.min(order as u32) {
        for_each_combo(order, m as usize, &mut |combo| {
            let h_hi = grid.h_max.min(m);
            let h_lo = grid.h_min.max(h_floor);
            if h_lo > h_hi {
                return;
            }
            let dp = fold_table_finite(&fg, combo, SumsetKind::Restricted, h_hi);
            for h in h_lo..=h_hi {
                tally.cell();
                let size = dp[h as usize].count() as u64;
                let bound = p.min((h as u64) * (m as u64) - (h as u64) * (h as u64) + 1);
                if size < bound {
                    tally.fail(
                        format!("G={g}, m={m}, h={h}"),
                        combo_literal(&fg, combo),
                        format!("|h^A| >= {bound}"),
                        size.to_string(),
                    );
                }
            }
        });
    }
    Ok(())
}

fn t_anr(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    for &p in &spec.grid.primes {
        let g = GroupSpec::cyclic(p)?;
        restricted_plain_bound_check(tally, &g, &spec.grid, 2)?;
    }
    Ok(())
}

fn t_dupan(spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    for g in grid_groups(&spec.grid)? {
        restricted_plain_bound_check(tally, &g, &spec.grid, 1)?;
    }
    Ok(())
}

fn ex_z17(_spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    tally.cell();
    let g = GroupSpec::cyclic(17)?;
    let a = GroupSubset::from_i64s(&g, &[1, 2, 3, 4, 5]);
    let size = sumset::restricted_signed_sumset(&a, 2)?.len();
    if size != 16 {
        tally.fail(
            "Z_17, A=1,2,3,4,5, h=2",
            a.canonical_literal(),
            "|2±^A| = 16",
            size.to_string(),
        );
    }
    Ok(())
}

fn ex_z41(_spec: &CheckSpec, _ctx: &Ctx, tally: &mut Tally) -> Result<()> {
    tally.cell();
    let g = GroupSpec::cyclic(41)?;
    let a = GroupSubset::from_i64s(&g, &[0, 1, 3, 5, 7, 9, 11, 13, 15]);
    let s = sumset::restricted_signed_sumset(&a, 3)?;
    let everything_but_zero =
        GroupSubset::from_i64s(&g, &(1..41).collect::<Vec<i64>>());
    if s != everything_but_zero {
        tally.fail(
            "Z_41, A=0,1,3,...,15, h=3",
            a.canonical_literal(),
            "3±^A = Z_41 \\ {0}",
            format!("got {} elements", s.len()),
        );
    }
    Ok(())
}
