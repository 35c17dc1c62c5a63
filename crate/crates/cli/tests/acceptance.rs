//! Acceptance suite: one test per criterion, each printing a PASS line and
//! holding its stated runtime budget. Run with
//! `cargo test -p sumset-cli --test acceptance` (use `-- --nocapture` to see
//! the per-criterion lines).

use std::process::Command;
use std::time::{Duration, Instant};

use sumset_core::bounds;
use sumset_core::construct;
use sumset_core::reference::naive_sumset;
use sumset_core::rho::{self, ClassFilter, RhoQuery, SearchOptions};
use sumset_core::structure;
use sumset_core::sumset::{self, MultiplicitySet, SumsetKind};
use sumset_core::verify::{default_spec, run_check, run_check_with};
use sumset_core::{GroupSpec, GroupSubset};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sumsets"))
}

fn finish(n: u32, name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "criterion {n} exceeded its budget: {elapsed:?} >= {budget:?}"
    );
    println!("ACCEPTANCE {n} ({name}): PASS in {elapsed:?}");
}

#[test]
fn criterion_01_z17_example_via_cli() {
    let start = Instant::now();
    let out = bin()
        .args([
            "sumset",
            "-g",
            "Z17",
            "-A",
            "1,2,3,4,5",
            "-k",
            "restricted-signed",
            "-H",
            "2",
            "--format",
            "json",
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["cardinality"], 16);
    finish(1, "Z17 example", start, Duration::from_secs(1));
}

#[test]
fn criterion_02_z41_example() {
    let start = Instant::now();
    let g = GroupSpec::cyclic(41).unwrap();
    let a = GroupSubset::from_i64s(&g, &[0, 1, 3, 5, 7, 9, 11, 13, 15]);
    let s = sumset::restricted_signed_sumset(&a, 3).unwrap();
    let expect = GroupSubset::from_i64s(&g, &(1..41).collect::<Vec<i64>>());
    assert_eq!(s.len(), 40);
    assert_eq!(s, expect);
    finish(2, "Z41 example", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_signed_union_lemma_exhaustive() {
    let start = Instant::now();
    // default grid is the stated one: n in [2,10], h in [0,4], all A with
    // A ∩ -A nonempty, plus the recorded negative control
    let report = run_check(&default_spec("L_SIGNED_EQ_UNION").unwrap()).unwrap();
    assert!(report.passed(), "{:?}", report.failures.first());
    assert!(report.cells_checked > 0);
    // negative control, asserted directly as well: the sides differ by {0}
    let zz = GroupSpec::Integers;
    let a = GroupSubset::from_i64s(&zz, &[1, 2]);
    let lhs = sumset::signed_sumset(&a, 2).unwrap();
    let rhs = sumset::hfold_sumset(&structure::union_with_negation(&a), 2).unwrap();
    assert_ne!(lhs, rhs);
    assert_eq!(
        rhs.difference(&lhs).unwrap(),
        GroupSubset::from_i64s(&zz, &[0])
    );
    assert!(lhs.difference(&rhs).unwrap().is_empty());
    finish(3, "h±A = h(A ∪ -A) exhaustive", start, Duration::from_secs(300));
}

#[test]
fn criterion_04_sdeg_rho_bound_grid() {
    let start = Instant::now();
    let mut spec = default_spec("T_RHO_S_BOUND").unwrap();
    spec.grid.apply_override("orders", "3,5,7,11").unwrap();
    spec.grid.apply_override("size_max", "11").unwrap();
    spec.grid.apply_override("h_min", "2").unwrap();
    spec.grid.apply_override("h_max", "3").unwrap();
    let report = run_check_with(&spec, 4).unwrap();
    assert!(report.passed(), "{:?}", report.failures.first());
    assert!(report.cells_checked >= 230);
    finish(4, "rho bound at fixed sdeg", start, Duration::from_secs(600));
}

#[test]
fn criterion_05_construction_tightness() {
    let start = Instant::now();
    for p in [3u64, 5, 7, 11] {
        let g = GroupSpec::cyclic(p).unwrap();
        for h in 2..=3u32 {
            for m in 1..=p {
                for s in 1..=m {
                    if 2 * m - s > p {
                        continue;
                    }
                    let w = construct::rho_s_witness(&g, m, s).unwrap();
                    let size = sumset::signed_sumset(&w, h).unwrap().len() as u64;
                    let bound = p.min(2 * h as u64 * m - h as u64 * s - h as u64 + 1);
                    assert_eq!(size, bound, "p={p} m={m} s={s} h={h} witness={w}");
                }
            }
        }
    }
    finish(5, "witness tightness", start, Duration::from_secs(60));
}

#[test]
fn criterion_06_coefficient_oracle_equivalence() {
    let start = Instant::now();
    let cap = bounds::DEFAULT_DEGREE_CAP;
    for k in 2..=6u64 {
        assert_eq!(
            bounds::coeff_h2(k).unwrap(),
            bounds::symbolic_coefficient_oracle(2, k, 0, cap).unwrap(),
            "h2 k={k}"
        );
        assert_eq!(
            bounds::coeff_h3(k).unwrap(),
            bounds::symbolic_coefficient_oracle(3, k, 0, cap).unwrap(),
            "h3 k={k}"
        );
        for l in 0..=2u64 {
            if 2 * k >= 3 + l {
                assert_eq!(
                    bounds::coeff_h4(k, l).unwrap(),
                    bounds::symbolic_coefficient_oracle(4, k, l, cap).unwrap(),
                    "h4 k={k} l={l}"
                );
            }
            // the l-shifted two-variable coefficient is a plain binomial
            assert_eq!(
                bounds::symbolic_coefficient_oracle(2, k, l, cap).unwrap(),
                bounds::binomial_big(4 * k - 2 - 2 * l, 2 * k - 1 - l),
                "h2 shifted k={k} l={l}"
            );
        }
    }
    // values pinned by an oracle run before the build
    assert_eq!(bounds::coeff_h4(2, 0).unwrap(), 7440u32.into());
    assert_eq!(bounds::coeff_h3(2).unwrap(), 540u32.into());
    assert_eq!(bounds::coeff_h2(2).unwrap(), 20u32.into());
    assert_eq!(bounds::coeff_h2(3).unwrap(), 252u32.into());
    finish(6, "coefficient oracle equivalence", start, Duration::from_secs(60));
}

#[test]
fn criterion_07_field_h2_exhaustive() {
    let start = Instant::now();
    let report = run_check(&default_spec("T_FIELD_H2").unwrap()).unwrap();
    assert!(report.passed(), "{:?}", report.failures.first());
    assert!(report.cells_checked > 0);
    finish(7, "two-fold field bound", start, Duration::from_secs(120));
}

#[test]
fn criterion_08_field_h3_z13() {
    let start = Instant::now();
    let mut spec = default_spec("T_FIELD_H3").unwrap();
    spec.grid.apply_override("primes", "13").unwrap();
    spec.grid.apply_override("size_min", "3").unwrap();
    spec.grid.apply_override("size_max", "3").unwrap();
    let report = run_check(&spec).unwrap();
    assert!(report.passed(), "{:?}", report.failures.first());
    // C(13,3) combinations restricted to asymmetric sets: 6 pairs choose 3,
    // two orientations each
    assert_eq!(report.cells_checked, 160);
    // the bound 6k-5 = 13 = |Z_13| forces 3±A to be the whole group
    let g = GroupSpec::cyclic(13).unwrap();
    let a = GroupSubset::from_i64s(&g, &[1, 2, 3]);
    assert_eq!(sumset::signed_sumset(&a, 3).unwrap().len(), 13);
    finish(8, "three-fold field bound at (13, 3)", start, Duration::from_secs(60));
}

#[test]
fn criterion_09_restricted_field_sampled() {
    let start = Instant::now();
    let spec = default_spec("T_RSS_FIELD").unwrap();
    let report = run_check(&spec).unwrap();
    assert!(report.passed(), "{:?}", report.failures.first());
    // 500 sampled sets per prime, at least one h each
    assert!(report.cells_checked >= 2000);
    finish(9, "restricted signed field bound, sampled", start, Duration::from_secs(300));
}

#[test]
fn criterion_10_interval_lemmas_exhaustive() {
    let start = Instant::now();
    let shift = run_check(&default_spec("L_INTERVAL_SHIFT").unwrap()).unwrap();
    assert!(shift.passed(), "{:?}", shift.failures.first());
    let rss = run_check(&default_spec("L_RSS_INTERVAL").unwrap()).unwrap();
    assert!(rss.passed(), "{:?}", rss.failures.first());
    finish(10, "interval lemmas", start, Duration::from_secs(300));
}

#[test]
fn criterion_11_invariant_suite() {
    let start = Instant::now();
    // symmetry, nesting, DP vs naive, and unit equivariance on small grids
    for n in 2..=8u64 {
        let g = GroupSpec::cyclic(n).unwrap();
        let elems = g.enumerate_elements().unwrap();
        let units: Vec<i64> = (1..n as i64)
            .filter(|&u| {
                let (mut a, mut b) = (u as u64, n);
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                a == 1
            })
            .collect();
        for mask in 1u64..(1 << n) {
            if mask.count_ones() > 3 {
                continue;
            }
            let a = GroupSubset::new(
                g.clone(),
                (0..n as usize)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| elems[i].clone())
                    .collect(),
            )
            .unwrap();
            for h in 0..=3u32 {
                let plain = sumset::hfold_sumset(&a, h).unwrap();
                let restricted = sumset::restricted_sumset(&a, h).unwrap();
                let signed = sumset::signed_sumset(&a, h).unwrap();
                let rsigned = sumset::restricted_signed_sumset(&a, h).unwrap();
                // symmetry
                assert_eq!(signed.negated(), signed);
                assert_eq!(rsigned.negated(), rsigned);
                // nesting
                assert!(plain.difference(&signed).unwrap().is_empty());
                assert!(restricted.difference(&rsigned).unwrap().is_empty());
                assert!(rsigned.difference(&signed).unwrap().is_empty());
                // DP against the brute-force enumerators
                for kind in SumsetKind::ALL {
                    assert_eq!(
                        sumset::sumset(&a, kind, h).unwrap(),
                        naive_sumset(&a, kind, h).unwrap()
                    );
                }
                // unit equivariance
                for &u in &units {
                    assert_eq!(
                        sumset::signed_sumset(&a.scaled(u), h).unwrap(),
                        signed.scaled(u)
                    );
                }
            }
        }
    }
    // parallel determinism across worker counts
    let q = RhoQuery::new(
        GroupSpec::cyclic(11).unwrap(),
        4,
        MultiplicitySet::singleton(3),
        SumsetKind::Signed,
        ClassFilter::All,
    );
    let base = rho::rho_search(&q, &SearchOptions::default()).unwrap();
    for workers in [1usize, 2, 4] {
        let r = rho::rho_parallel(&q, workers).unwrap();
        assert_eq!(r.value, base.value);
        assert_eq!(r.witness, base.witness);
        assert_eq!(r.sets_examined, base.sets_examined);
    }
    finish(11, "invariant suite", start, Duration::from_secs(300));
}

#[test]
fn criterion_12_integer_direct_and_inverse() {
    let start = Instant::now();
    let mut direct = default_spec("T_BP_HFOLD").unwrap();
    for (k, v) in [
        ("size_min", "3"),
        ("size_max", "5"),
        ("h_min", "3"),
        ("h_max", "3"),
        ("value_min", "1"),
        ("value_max", "20"),
    ] {
        direct.grid.apply_override(k, v).unwrap();
    }
    let mut inverse = default_spec("T_BP_INV").unwrap();
    inverse.grid = direct.grid.clone();
    let all_sets: u64 = 1140 + 4845 + 15504; // C(20,3) + C(20,4) + C(20,5)
    let r = run_check(&direct).unwrap();
    assert!(r.passed(), "{:?}", r.failures.first());
    assert_eq!(r.cells_checked, all_sets);
    let r = run_check(&inverse).unwrap();
    assert!(r.passed(), "{:?}", r.failures.first());
    assert_eq!(r.cells_checked, all_sets);
    finish(
        12,
        "integer signed direct and inverse",
        start,
        Duration::from_secs(600),
    );
}
