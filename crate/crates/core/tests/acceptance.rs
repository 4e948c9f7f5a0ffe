//! Acceptance suite. Run with `cargo test --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::time::Instant;

use common::*;
use cylschur::verify::{scan, Check};
use cylschur::{
    count_cyl_tableaux, cylindric_schur, degree_quotient, enumerate_cyl_tableaux, enumerate_nl_partitions,
    fusion_product, verify_pieri, Partition, ScanConfig, SkewShape, VerificationReport, Weight,
};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// `(N,L)`-cylindric shapes as raw parts with `|λ| ≤ max_outer` and
/// `|λ/μ| ≤ max_size`, built from the brute-force generators.
fn shapes(n: usize, l: usize, max_outer: usize, max_size: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let nl: Vec<Vec<usize>> = brute_partitions_upto(max_outer)
        .into_iter()
        .filter(|p| nl_partition_oracle(n, l, p))
        .collect();
    let mut out = Vec::new();
    for lam in &nl {
        for mu in &nl {
            if let Some(boxes) = skew_boxes(lam, mu) {
                if boxes.len() <= max_size {
                    out.push((lam.clone(), mu.clone()));
                }
            }
        }
    }
    out
}

fn scan_grid(reports: &[VerificationReport], which: Check) -> (usize, Vec<String>) {
    let mine: Vec<&VerificationReport> = reports.iter().filter(|r| r.check == which).collect();
    let failed = mine
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {}/{} {:?}", r.profile, r.lam, r.mu, r.alpha))
        .collect();
    (mine.len(), failed)
}

fn criterion_1(reports: &[VerificationReport]) -> Outcome {
    let (total, failed) = scan_grid(reports, Check::Theorem1);
    let shapes: usize = (1..=3).flat_map(|n| (1..=3).map(move |l| shapes(n, l, 7, 7).len())).sum();
    check(total == shapes, || format!("{total} theorem reports for {shapes} shapes"))?;
    check(failed.is_empty(), || format!("{} failures, first {}", failed.len(), failed[0]))?;
    Ok(format!("{total} shapes, 0 failures"))
}

fn criterion_2(reports: &[VerificationReport]) -> Outcome {
    let (total, failed) = scan_grid(reports, Check::Prop1);
    check(failed.is_empty(), || format!("{} failures, first {}", failed.len(), failed[0]))?;
    let vanishing = reports
        .iter()
        .filter(|r| r.check == Check::Prop1)
        .filter(|r| r.alpha.as_ref().is_some_and(|a| a.entries().first().copied().unwrap_or(0) > r.profile.level()))
        .count();
    check(vanishing > 0, || "no weight with α_1 > L was scanned".into())?;
    Ok(format!("{total} instances ({vanishing} with α_1 > L), 0 failures"))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        for l in 1..=4 {
            let p = prof(n, l);
            for size in 0..=6 {
                for eta in enumerate_nl_partitions(p, size) {
                    for k in 0..=l {
                        let ok = verify_pieri(p, &eta, k).map_err(|e| e.to_string())?;
                        check(ok, || format!("{p} η={eta} k={k}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} (p, η, k) triples agree"))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        for l in 1..=4 {
            let p = prof(n, l);
            for d in 0..=8 {
                let expected = brute_partitions(d).iter().filter(|x| nl_partition_oracle(n, l, x)).count();
                let q = degree_quotient(p, d);
                check(q.quotient_rank() == expected, || format!("{p} degree {d}: rank {} vs {expected}", q.quotient_rank()))?;
                check(q.has_nl_basis(), || format!("{p} degree {d}: (N,L)-partitions are not a ℤ-basis"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (profile, degree) quotients"))
}

fn criterion_5() -> Outcome {
    let mut coeffs = 0;
    for n in 1..=4 {
        for l in 1..=4 {
            let p = prof(n, l);
            let nl: Vec<Partition> = (0..=8).flat_map(|d| enumerate_nl_partitions(p, d)).collect();
            for mu in &nl {
                for nu in nl.iter().filter(|nu| mu.size() + nu.size() <= 8) {
                    let prod = fusion_product(p, mu, nu).map_err(|e| e.to_string())?;
                    check(prod.is_nonnegative(), || format!("{p} {mu}·{nu} = {prod}"))?;
                    coeffs += enumerate_nl_partitions(p, mu.size() + nu.size()).len();
                }
            }
        }
    }
    Ok(format!("{coeffs} coefficients nonnegative integers"))
}

fn criterion_6() -> Outcome {
    let l = 5;
    let (mut shapes_seen, mut coeffs) = (0, 0);
    for n in 1..=3 {
        let p = prof(n, l);
        let lams: Vec<Vec<usize>> = brute_partitions_upto(4 * n)
            .into_iter()
            .filter(|x| x.len() <= n && x.first().copied().unwrap_or(0) <= 4)
            .collect();
        for lam in &lams {
            for mu in &lams {
                let Some(boxes) = skew_boxes(lam, mu) else { continue };
                let size = boxes.len();
                let shape = SkewShape::new(part(lam), part(mu)).unwrap();
                let cyl = cylindric_schur(p, &shape).map_err(|e| e.to_string())?;
                for alpha in brute_partitions(size) {
                    let expected = BigInt::from(ssyt_count(lam, mu, &alpha));
                    check(cyl.coeff(&part(&alpha)) == expected, || format!("{p} {shape} at m{alpha:?}"))?;
                }
                for nu in brute_partitions(size).into_iter().filter(|x| nl_partition_oracle(n, l, x)) {
                    let d = fusion_product(p, &part(mu), &part(&nu)).map_err(|e| e.to_string())?.coeff(&part(lam));
                    let c = brute_lr(lam, mu, &nu);
                    check(d == BigInt::from(c), || format!("{p} d^{lam:?}_{mu:?},{nu:?} = {d}, LR = {c}"))?;
                    coeffs += 1;
                }
                shapes_seen += 1;
            }
        }
    }
    Ok(format!("{shapes_seen} shapes, {coeffs} fusion coefficients match"))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for l in 1..=3 {
            let p = prof(n, l);
            for (lam, mu) in shapes(n, l, 12, 6) {
                let shape = SkewShape::new(part(&lam), part(&mu)).unwrap();
                for alpha in brute_partitions(shape.size()) {
                    let base = count_cyl_tableaux(p, &shape, &Weight::new(alpha.clone())).map_err(|e| e.to_string())?;
                    let mut padded = alpha.clone();
                    padded.push(0);
                    for perm in distinct_permutations(&padded) {
                        let k = count_cyl_tableaux(p, &shape, &Weight::new(perm.clone())).map_err(|e| e.to_string())?;
                        check(k == base, || format!("{p} {shape}: α={alpha:?} gives {base}, {perm:?} gives {k}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} permuted weights agree"))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        for l in 1..=4 {
            let p = prof(n, l);
            for (lam, mu) in shapes(n, l, 12, 6) {
                let shape = SkewShape::new(part(&lam), part(&mu)).unwrap();
                for alpha in compositions(shape.size()) {
                    let w = Weight::new(alpha);
                    let dp = count_cyl_tableaux(p, &shape, &w).map_err(|e| e.to_string())?;
                    let listed = enumerate_cyl_tableaux(p, &shape, &w).map_err(|e| e.to_string())?.len();
                    check(dp == listed.into(), || format!("{p} {shape} {w}: {dp} vs {listed}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} instances agree"))
}

#[test]
fn acceptance_criteria() {
    let started = Instant::now();
    let reports = scan(&ScanConfig::new(3, 3, 7)).expect("scan runs");
    let scan_ms = started.elapsed().as_millis();

    let criteria: Vec<Criterion<'_>> = vec![
        ("expansion of cylindric Schur functions, scan 3/3/7", Box::new(|| criterion_1(&reports))),
        ("tableau-count identity over the same grid", Box::new(|| criterion_2(&reports))),
        ("fusion Pieri rule two-path agreement", Box::new(criterion_3)),
        ("quotient rank equals (N,L)-partition count", Box::new(criterion_4)),
        ("fusion coefficients nonnegative and integral", Box::new(criterion_5)),
        ("large-level degeneration to skew Schur and LR", Box::new(criterion_6)),
        ("weight permutation symmetry", Box::new(criterion_7)),
        ("counting agrees with enumeration", Box::new(criterion_8)),
    ];

    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let ms = t.elapsed().as_millis() + if i < 2 { scan_ms } else { 0 };
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail} ({ms} ms)", i + 1),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
