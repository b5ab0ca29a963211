//! Acceptance gate: ten go/no-go criteria, one test and one printed
//! PASS/FAIL line each (run with `--nocapture` to see the lines).
//!
//! Criterion 9 exercises hardware limits by design; when the host
//! cannot hold the n = 80 tables it reports an environment failure and
//! falls back to asserting the same direction at n = 40.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use degcount::alloc_model;
use degcount::bounds::{m_lower, m_upper};
use degcount::dp::{self, ragged};
use degcount::error::Error;
use degcount::estimator::{self, EnsembleTable};
use degcount::oracle;
use degcount::partition::{enumerate_partitions, DegreeSequence};
use degcount::BigCount;

fn criterion(idx: u32, name: &str, f: impl FnOnce() -> Result<String, String>) {
    match f() {
        Ok(detail) => println!("ACCEPTANCE {idx} {name}: PASS ({detail})"),
        Err(msg) => {
            println!("ACCEPTANCE {idx} {name}: FAIL ({msg})");
            panic!("criterion {idx} ({name}) failed: {msg}");
        }
    }
}

#[test]
fn criterion_01_oracle_equivalence() {
    criterion(1, "oracle-equivalence", || {
        let mut memo = dp::PnklsMemo::new();
        let mut checked = 0u64;
        for n in 0..=20i64 {
            for k in 0..=8i64 {
                for l in 0..=8i64 {
                    for s in 0..=20i64 {
                        let fast = memo.get(n, k, l, s);
                        let slow = oracle::p_nkls_bruteforce(n, k as u32, l as u32, s);
                        if fast != slow {
                            return Err(format!(
                                "P({n},{k},{l},{s}): recurrence {fast}, enumeration {slow}"
                            ));
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok(format!("{checked} points, exact match"))
    });
}

#[test]
fn criterion_02_degree_sequence_counts() {
    criterion(2, "degree-sequence-counts", || {
        let report = dp::count_all_improved(12, 0).map_err(|e| e.to_string())?;
        let expected_d: [(u32, u64); 7] =
            [(2, 1), (3, 2), (4, 7), (5, 20), (6, 71), (7, 240), (8, 871)];
        for (n, d) in expected_d {
            let row = report.rows.iter().find(|r| r.n == n).unwrap();
            if row.d != BigCount::from(d) {
                return Err(format!("D({n}) = {}, expected {d}", row.d));
            }
        }
        for row in &report.rows {
            let slow = oracle::d_bruteforce(row.n);
            if row.d != slow {
                return Err(format!("D({}) = {}, enumeration {slow}", row.n, row.d));
            }
        }
        Ok("D(2..=12) match brute-force enumeration".into())
    });
}

#[test]
fn criterion_03_allocation_table_reproduction() {
    criterion(3, "allocation-table", || {
        for &(n, f1, f4, ratio) in alloc_model::REFERENCE_TABLE {
            let rows = alloc_model::alloc_table(&[n]);
            let row = &rows[0];
            if row.f1 != BigCount::from(f1) || row.f4 != BigCount::from(f4) || row.ratio != ratio {
                return Err(format!(
                    "n={n}: got ({},{},{}), reference ({f1},{f4},{ratio})",
                    row.f1, row.f4, row.ratio
                ));
            }
        }
        Ok(format!(
            "{} rows byte-exact incl. 7-decimal ratios",
            alloc_model::REFERENCE_TABLE.len()
        ))
    });
}

#[test]
fn criterion_04_ratio_envelope() {
    criterion(4, "ratio-envelope", || {
        for n in 10..=1000u64 {
            let f1 = alloc_model::f1(n);
            let f4 = alloc_model::f4(n);
            // 1/192 <= f4/f1 <= 7/12, compared in integers.
            if f4.clone() * 192u32 < f1 {
                return Err(format!("n={n}: f4/f1 below 1/192"));
            }
            if f4 * 12u32 > f1 * 7u32 {
                return Err(format!("n={n}: f4/f1 above 7/12"));
            }
        }
        Ok("f4/f1 within [1/192, 7/12] for 10 <= n <= 1000".into())
    });
}

#[test]
fn criterion_05_identities() {
    criterion(5, "identities", || {
        // D(n) = L(n) + D0(n-1) and H = D - L, n <= 30.
        let report = dp::count_all_improved(30, 0).map_err(|e| e.to_string())?;
        let mut d0_prev = BigCount::from(2u32); // D0(2)
        for row in report.rows.iter().skip(1) {
            if row.d != row.l.clone() + &d0_prev || row.h != row.d.clone() - &row.l {
                return Err(format!("row identity broken at n = {}", row.n));
            }
            d0_prev = row.d0.clone();
        }

        // L'(N,n) = L'(n(n-1) - N, n) for even N in [n, n(n-2)]. The
        // full-extent table stores both halves.
        for n in [3u32, 4, 5, 8, 13, 20, 30] {
            let big_n = n as u64;
            let table =
                ragged::fill_improved_with_cap(n, big_n * (big_n - 2), 0, |_, _| {})
                    .map_err(|e| e.to_string())?;
            let mut nn = (big_n + 1) & !1; // first even N >= n
            while nn <= big_n * (big_n - 2) {
                if table.lprime(n, nn) != table.lprime(n, big_n * (big_n - 1) - nn) {
                    return Err(format!("L'({nn},{n}) != L'({},{n})", big_n * (big_n - 1) - nn));
                }
                nn += 2;
            }
        }

        // d_direct(n) = D(n) for n <= 10.
        for n in 2..=10u32 {
            let d = dp::d_direct(n).map_err(|e| e.to_string())?;
            let row = report.rows.iter().find(|r| r.n == n).unwrap();
            if d != row.d {
                return Err(format!("d_direct({n}) = {d}, table {}", row.d));
            }
        }

        // Baseline L(n) = improved L(n) for every n <= 40.
        let report40 = dp::count_all_improved(40, 0).map_err(|e| e.to_string())?;
        for n in 3..=40u32 {
            let l = dp::count_l_baseline(n, 0).map_err(|e| e.to_string())?;
            let row = report40.rows.iter().find(|r| r.n == n).unwrap();
            if l != row.l {
                return Err(format!("baseline L({n}) = {l}, improved {}", row.l));
            }
        }
        Ok("Eq.(5), L' symmetry, d_direct and baseline cross-checks exact".into())
    });
}

#[test]
fn criterion_06_helper_bound_safety() {
    criterion(6, "helper-bound-safety", || {
        for n in 0..=20u64 {
            for l in 0..=8u32 {
                for k in 0..=8u32 {
                    let lo = m_lower(n, l as u64);
                    for s in 0..lo as i64 {
                        let v = oracle::p_nkls_bruteforce(n as i64, k, l, s);
                        if v != BigCount::from(0u32) {
                            return Err(format!("P({n},{k},{l},{s}) = {v} below m'({n},{l}) = {lo}"));
                        }
                    }
                    let hi = m_upper(n, k as u64) as i64;
                    let saturated = oracle::p_nkl_bruteforce(n, k, l);
                    for s in hi..=hi + 3 {
                        let v = oracle::p_nkls_bruteforce(n as i64, k, l, s);
                        if v != saturated {
                            return Err(format!(
                                "P({n},{k},{l},{s}) = {v} != P({n},{k},{l}) = {saturated} at s >= M' = {hi}"
                            ));
                        }
                    }
                }
            }
        }
        Ok("m' vanishing and M' saturation hold on the full grid".into())
    });
}

#[test]
fn criterion_07_graphical_partition_counts() {
    criterion(7, "graphical-partitions", || {
        let expected: [(u64, u64); 3] = [(2, 1), (4, 2), (6, 5)];
        for (n, g) in expected {
            let got = dp::g_count(n).map_err(|e| e.to_string())?;
            if got != BigCount::from(g) {
                return Err(format!("G({n}) = {got}, expected {g}"));
            }
        }
        for n in (2..=14u64).step_by(2) {
            let got = dp::g_count(n).map_err(|e| e.to_string())?;
            let cap = n.min(u32::MAX as u64) as u32;
            let slow = enumerate_partitions(n, cap, cap)
                .filter(|p| DegreeSequence::from(p).is_graphical())
                .count();
            if got != BigCount::from(slow) {
                return Err(format!("G({n}) = {got}, enumeration {slow}"));
            }
        }
        Ok("G(N) matches graphical-partition enumeration for even N <= 14".into())
    });
}

#[test]
fn criterion_08_sampler_correctness() {
    criterion(8, "sampler", || {
        for n in 2..=12u32 {
            let fast = EnsembleTable::new(n).map_err(|e| e.to_string())?.e_count();
            let slow = oracle::e_bruteforce(n);
            if fast != slow {
                return Err(format!("E({n}) = {fast}, enumeration {slow}"));
            }
        }

        // Chi-square uniformity over the 9 members of E(4).
        let table = EnsembleTable::new(4).unwrap();
        let mut rng = <rand_chacha::ChaCha12Rng as rand::SeedableRng>::seed_from_u64(20240817);
        let draws = 10_000u64;
        let mut counts: HashMap<_, u64> = HashMap::new();
        for _ in 0..draws {
            *counts.entry(table.sample_uniform(&mut rng).unwrap()).or_default() += 1;
        }
        let members: Vec<_> = oracle::members_of_e(4).collect();
        if counts.keys().any(|p| !members.contains(p)) {
            return Err("sampler produced a non-member of E(4)".into());
        }
        let expected = draws as f64 / members.len() as f64;
        let chi2: f64 = members
            .iter()
            .map(|m| {
                let obs = *counts.get(m).unwrap_or(&0) as f64;
                (obs - expected) * (obs - expected) / expected
            })
            .sum();
        let dof = (members.len() - 1) as f64;
        let dist = statrs::distribution::ChiSquared::new(dof).unwrap();
        let cutoff =
            statrs::distribution::ContinuousCDF::inverse_cdf(&dist, 1.0 - 0.001);
        if chi2 > cutoff {
            return Err(format!("chi-square {chi2:.2} > cutoff {cutoff:.2} (alpha = 0.001)"));
        }

        // D(4)/E(4) = 7/9 within 3 standard errors, three seeds.
        for seed in [1u64, 2, 3] {
            let rep =
                estimator::estimate_ratio(4, 9000, seed, 0, &[]).map_err(|e| e.to_string())?;
            let target = 7.0 / 9.0;
            if (rep.ratio - target).abs() > 3.0 * rep.stderr {
                return Err(format!(
                    "seed {seed}: ratio {} not within 3*stderr ({}) of 7/9",
                    rep.ratio, rep.stderr
                ));
            }
        }
        Ok(format!("e_count exact, chi-square {chi2:.2} <= {cutoff:.2}, ratio within 3*stderr"))
    });
}

/// Wall time of the improved all-i run, also asserting cell counts
/// against the allocation models.
fn timed_improved(n: u32) -> Result<Duration, Error> {
    let start = Instant::now();
    let mut harvested = Vec::new();
    let table = ragged::fill_improved(n, 0, |l, table| {
        let i = l + 1;
        if (3..=n).contains(&i) {
            harvested.push(table.l_value(i));
        }
    })?;
    let elapsed = start.elapsed();
    let cells = BigCount::from(table.cell_count());
    if cells != alloc_model::f4(n as u64) {
        return Err(Error::Inconsistent(format!(
            "improved table used {cells} cells, f4({n}) predicts otherwise"
        )));
    }
    if cells >= alloc_model::f1(n as u64) {
        return Err(Error::Inconsistent(format!("improved table not smaller than f1({n})")));
    }
    Ok(elapsed)
}

#[test]
fn criterion_09_performance_direction() {
    criterion(9, "performance-direction", || {
        let runs = 3;
        let median = |mut v: Vec<Duration>| -> Duration {
            v.sort();
            v[v.len() / 2]
        };

        // Faithful attempt at the stated scale, n = 80.
        let attempt = || -> Result<(Duration, Duration), Error> {
            let mut improved = Vec::new();
            let mut baseline = Vec::new();
            for _ in 0..runs {
                improved.push(timed_improved(80)?);
                let start = Instant::now();
                dp::count_l_baseline(80, 0)?;
                baseline.push(start.elapsed());
            }
            Ok((median(improved), median(baseline)))
        };
        match attempt() {
            Ok((imp, base)) => {
                if imp < base {
                    return Ok(format!(
                        "n=80: improved all-i {imp:?} < baseline single {base:?}, cells f4(80) < f1(80)"
                    ));
                }
                return Err(format!("n=80: improved {imp:?} not faster than baseline {base:?}"));
            }
            Err(Error::ResourceLimit(msg)) => {
                println!("ACCEPTANCE 9 note: n=80 unattainable here ({msg}); asserting direction at n=40");
            }
            Err(e) => return Err(e.to_string()),
        }

        // Same direction at the largest scale this host can hold.
        let imp = timed_improved(40).map_err(|e| e.to_string())?;
        let start = Instant::now();
        dp::count_l_baseline(40, 0).map_err(|e| e.to_string())?;
        let base = start.elapsed();
        if imp >= base {
            return Err(format!("n=40: improved all-i {imp:?} not faster than baseline single {base:?}"));
        }
        Err(format!(
            "n=80 exceeds this host's memory; n=40 direction holds (improved {imp:?} < baseline {base:?}, cells f4 < f1)"
        ))
    });
}

#[test]
fn criterion_10_determinism() {
    criterion(10, "determinism", || {
        let a = dp::count_all_improved(16, 1).map_err(|e| e.to_string())?;
        let b = dp::count_all_improved(16, 4).map_err(|e| e.to_string())?;
        let c = dp::count_all_improved(16, 4).map_err(|e| e.to_string())?;
        if a.to_csv() != b.to_csv() || b.to_csv() != c.to_csv() {
            return Err("count output differs across thread counts or runs".into());
        }
        let e1 = estimator::estimate_ratio(10, 20_000, 123, 1, &[]).map_err(|e| e.to_string())?;
        let e4 = estimator::estimate_ratio(10, 20_000, 123, 4, &[]).map_err(|e| e.to_string())?;
        let e4b = estimator::estimate_ratio(10, 20_000, 123, 4, &[]).map_err(|e| e.to_string())?;
        if e1.to_csv() != e4.to_csv() || e4.to_csv() != e4b.to_csv() {
            return Err("estimate output differs across thread counts or runs".into());
        }
        Ok("count and estimate bit-identical across {1,4} threads and repeats".into())
    });
}
