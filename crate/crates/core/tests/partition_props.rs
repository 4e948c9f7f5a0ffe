mod common;

use common::*;
use cylschur::partition::{bounded_partitions, partitions_with_length};
use cylschur::{enumerate_nl_partitions, horizontal_strip_extensions, is_horizontal_strip, partitions_of, Partition};

#[test]
fn oracle_self_checks() {
    let counts: Vec<usize> = (0..=8).map(|n| brute_partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    assert_eq!(ssyt_count(&[2, 1], &[], &[1, 1, 1]), 2);
    assert_eq!(brute_lr(&[3, 2, 1], &[2, 1], &[2, 1]), 2);
    assert_eq!(distinct_permutations(&[1, 1, 2]).len(), 3);
    assert_eq!(compositions(4).len(), 8);
}

#[test]
fn interlacing_agrees_with_column_count() {
    let all = brute_partitions_upto(8);
    for outer in &all {
        for inner in &all {
            assert_eq!(
                is_horizontal_strip(&part(outer), &part(inner)),
                column_strip_oracle(outer, inner),
                "{outer:?}/{inner:?}"
            );
        }
    }
}

#[test]
fn nl_predicates_agree_with_oracle() {
    let all = brute_partitions_upto(7);
    for n in 1..=4 {
        for l in 1..=4 {
            let p = prof(n, l);
            for outer in &all {
                assert_eq!(p.is_nl_partition(&part(outer)), nl_partition_oracle(n, l, outer));
                for inner in &all {
                    let strip = p.is_nl_horizontal_strip(&part(outer), &part(inner));
                    assert_eq!(strip, nl_strip_oracle(n, l, outer, inner), "{p} {outer:?}/{inner:?}");
                    if strip {
                        assert!(p.is_nl_partition(&part(outer)) && p.is_nl_partition(&part(inner)));
                        assert!(outer.iter().sum::<usize>() - inner.iter().sum::<usize>() <= l);
                    }
                }
            }
        }
    }
}

#[test]
fn strip_extensions_match_brute_filter() {
    for n in 1..=4 {
        for l in 1..=4 {
            let p = prof(n, l);
            for eta in brute_partitions_upto(6) {
                if !nl_partition_oracle(n, l, &eta) {
                    continue;
                }
                for k in 0..=l + 1 {
                    let size = eta.iter().sum::<usize>() + k;
                    let expected: Vec<Partition> = if k > l {
                        Vec::new()
                    } else {
                        let mut v: Vec<Partition> = brute_partitions(size)
                            .into_iter()
                            .filter(|rho| nl_strip_oracle(n, l, rho, &eta))
                            .map(|rho| part(&rho))
                            .collect();
                        v.sort();
                        v
                    };
                    let got = horizontal_strip_extensions(p, &part(&eta), k);
                    assert_eq!(got, expected, "{p} η={eta:?} k={k}");
                }
            }
        }
    }
}

#[test]
fn nl_enumeration_is_sorted_and_complete() {
    for n in 1..=4 {
        for l in 1..=4 {
            let p = prof(n, l);
            for size in 0..=12 {
                let got = enumerate_nl_partitions(p, size);
                assert!(got.windows(2).all(|w| w[0] < w[1]), "not strictly ordered");
                let mut expected: Vec<Partition> = brute_partitions(size)
                    .into_iter()
                    .filter(|lam| nl_partition_oracle(n, l, lam))
                    .map(|lam| part(&lam))
                    .collect();
                expected.sort();
                assert_eq!(got, expected, "{p} n={size}");
            }
        }
    }
}

#[test]
fn frozen_enumeration_examples() {
    // Brute-force filters of all partitions of 9 and 2.
    assert_eq!(enumerate_nl_partitions(prof(2, 1), 9), vec![part(&[5, 4])]);
    assert_eq!(enumerate_nl_partitions(prof(2, 2), 2), vec![part(&[2]), part(&[1, 1])]);
    assert_eq!(horizontal_strip_extensions(prof(2, 2), &part(&[1]), 2), vec![part(&[2, 1])]);
}

#[test]
fn partition_generators_match_brute_force() {
    for n in 0..=12 {
        let mut expected: Vec<Partition> = brute_partitions(n).iter().map(|p| part(p)).collect();
        expected.sort();
        assert_eq!(partitions_of(n), expected);
        for max_len in 0..=4 {
            let got = partitions_with_length(n, max_len);
            assert_eq!(got.len(), expected.iter().filter(|p| p.length() <= max_len).count());
        }
        let capped = bounded_partitions(n, n, 2);
        assert_eq!(capped.len(), expected.iter().filter(|p| p.part(0) <= 2).count());
    }
}
