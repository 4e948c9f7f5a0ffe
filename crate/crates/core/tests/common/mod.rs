//! Brute-force oracles. None of these call into the crate's enumeration or
//! counting code; they work from box diagrams and raw integer sequences.

#![allow(dead_code)]

use cylschur::{CylProfile, Partition};

pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn prof(n: usize, l: usize) -> CylProfile {
    CylProfile::new(n, l).unwrap()
}

/// Partitions of `n` by filtering all compositions of `n`.
pub fn brute_partitions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    // Bit i of the mask set means "cut after position i".
    for mask in 0u32..(1 << (n - 1)) {
        let mut comp = Vec::new();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                comp.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        comp.push(run);
        if comp.windows(2).all(|w| w[0] >= w[1]) {
            out.push(comp);
        }
    }
    out
}

pub fn brute_partitions_upto(n: usize) -> Vec<Vec<usize>> {
    (0..=n).flat_map(brute_partitions).collect()
}

fn at(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

/// Boxes `(row, col)` of the skew diagram, or `None` if not contained.
pub fn skew_boxes(outer: &[usize], inner: &[usize]) -> Option<Vec<(usize, usize)>> {
    if inner.len() > outer.len() || (0..inner.len()).any(|i| inner[i] > outer[i]) {
        return None;
    }
    Some(
        (0..outer.len())
            .flat_map(|i| (at(inner, i)..outer[i]).map(move |j| (i, j)))
            .collect(),
    )
}

/// At most one box of the skew diagram in every column.
pub fn column_strip_oracle(outer: &[usize], inner: &[usize]) -> bool {
    let Some(boxes) = skew_boxes(outer, inner) else {
        return false;
    };
    let mut cols: Vec<usize> = boxes.iter().map(|&(_, j)| j).collect();
    cols.sort_unstable();
    cols.windows(2).all(|w| w[0] != w[1])
}

pub fn nl_partition_oracle(n: usize, l: usize, lam: &[usize]) -> bool {
    lam.len() <= n && at(lam, 0) <= at(lam, n - 1) + l
}

pub fn nl_strip_oracle(n: usize, l: usize, outer: &[usize], inner: &[usize]) -> bool {
    column_strip_oracle(outer, inner) && outer.len() <= n && at(outer, 0) <= at(inner, n - 1) + l
}

/// Cylindric tableaux counted as chains of brute-force partitions.
pub fn brute_cyl_count(n: usize, l: usize, outer: &[usize], inner: &[usize], alpha: &[usize]) -> u64 {
    fn go(n: usize, l: usize, cur: &[usize], outer: &[usize], alpha: &[usize]) -> u64 {
        let Some((&k, rest)) = alpha.split_first() else {
            return u64::from(cur == outer);
        };
        let size: usize = cur.iter().sum::<usize>() + k;
        brute_partitions(size)
            .into_iter()
            .filter(|rho| nl_strip_oracle(n, l, rho, cur))
            .map(|rho| go(n, l, &rho, outer, rest))
            .sum()
    }
    if alpha.iter().sum::<usize>() + inner.iter().sum::<usize>() != outer.iter().sum::<usize>() {
        return 0;
    }
    go(n, l, inner, outer, alpha)
}

/// All semistandard fillings of `outer/inner` with content `alpha`, each
/// returned as a grid of entries (1-based labels, 0 outside the skew shape).
pub fn ssyt_fillings(outer: &[usize], inner: &[usize], alpha: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some(boxes) = skew_boxes(outer, inner) else {
        return Vec::new();
    };
    if boxes.len() != alpha.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&r| vec![0; r]).collect();
    let mut left = alpha.to_vec();
    let mut out = Vec::new();

    fn go(
        idx: usize,
        boxes: &[(usize, usize)],
        inner: &[usize],
        grid: &mut Vec<Vec<usize>>,
        left: &mut [usize],
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let Some(&(i, j)) = boxes.get(idx) else {
            out.push(grid.clone());
            return;
        };
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if j > at(inner, i) && grid[i][j - 1] > v {
                continue;
            }
            if i > 0 && j >= at(inner, i - 1) && grid[i - 1][j] >= v {
                continue;
            }
            left[v - 1] -= 1;
            grid[i][j] = v;
            go(idx + 1, boxes, inner, grid, left, out);
            grid[i][j] = 0;
            left[v - 1] += 1;
        }
    }

    go(0, &boxes, inner, &mut grid, &mut left, &mut out);
    out
}

/// Skew Kostka number by explicit fillings.
pub fn ssyt_count(outer: &[usize], inner: &[usize], alpha: &[usize]) -> u64 {
    ssyt_fillings(outer, inner, alpha).len() as u64
}

/// LR coefficient: fillings of `λ/μ` with content `ν` whose reverse reading
/// word (rows top to bottom, each right to left) is a lattice word.
pub fn brute_lr(lam: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    ssyt_fillings(lam, mu, nu)
        .into_iter()
        .filter(|grid| {
            let mut counts = vec![0usize; nu.len() + 1];
            for (i, row) in grid.iter().enumerate() {
                for j in (at(mu, i)..row.len()).rev() {
                    let v = row[j];
                    counts[v] += 1;
                    if v > 1 && counts[v] > counts[v - 1] {
                        return false;
                    }
                }
            }
            true
        })
        .count() as u64
}

/// All distinct permutations of `v`.
pub fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // Lexicographic next-permutation walk.
    while let Some(i) = (0..sorted.len().saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) {
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// All compositions (positive parts) of `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
