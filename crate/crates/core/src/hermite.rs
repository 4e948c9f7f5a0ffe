//! Row-style Hermite normal form over ℤ.
//!
//! The row lattice of an integer matrix is brought to reduced echelon form:
//! pivots are positive, each pivot is the first nonzero entry of its row,
//! and entries above a pivot lie in `[0, pivot)`. This form is unique for a
//! given lattice, so reducing a vector against it gives a canonical
//! representative of the coset `v + lattice`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl HermiteForm {
    /// Computes the Hermite normal form of the lattice spanned by `rows`.
    pub fn new(rows: &[Vec<BigInt>], ncols: usize) -> Self {
        let mut work: Vec<Vec<BigInt>> = rows
            .iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        for r in &work {
            assert_eq!(r.len(), ncols, "row width mismatch");
        }
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..ncols {
            if top == work.len() {
                break;
            }
            // Euclid on the column until a single nonzero entry remains.
            loop {
                let best = (top..work.len())
                    .filter(|&r| !work[r][col].is_zero())
                    .min_by(|&a, &b| work[a][col].abs().cmp(&work[b][col].abs()));
                let Some(best) = best else { break };
                work.swap(top, best);
                let mut done = true;
                for r in top + 1..work.len() {
                    if work[r][col].is_zero() {
                        continue;
                    }
                    let q = work[r][col].div_floor(&work[top][col]);
                    let (head, tail) = work.split_at_mut(r);
                    sub_scaled(&mut tail[0], &head[top], &q, col);
                    if !tail[0][col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if work[top][col].is_zero() {
                continue;
            }
            if work[top][col].is_negative() {
                for x in &mut work[top][col..] {
                    *x = -&*x;
                }
            }
            for r in 0..top {
                let q = work[r][col].div_floor(&work[top][col]);
                if !q.is_zero() {
                    let (head, tail) = work.split_at_mut(top);
                    sub_scaled(&mut head[r], &tail[0], &q, col);
                }
            }
            pivots.push(col);
            top += 1;
        }
        work.truncate(top);
        work.retain(|r| r.iter().any(|x| !x.is_zero()));
        HermiteForm {
            ncols,
            rows: work,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Pivot column of each row, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// True if every pivot equals 1.
    pub fn is_unimodular(&self) -> bool {
        self.rows
            .iter()
            .zip(&self.pivots)
            .all(|(r, &c)| r[c].is_one())
    }

    /// Canonical representative of `v` modulo the row lattice: each pivot
    /// coordinate ends up in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ncols, "vector width mismatch");
        let mut out = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if out[col].is_zero() {
                continue;
            }
            let q = out[col].div_floor(&row[col]);
            if !q.is_zero() {
                sub_scaled(&mut out, row, &q, col);
            }
        }
        out
    }

    /// True if `v` lies in the row lattice.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// `target -= q * source`, touching columns from `from` on.
fn sub_scaled(target: &mut [BigInt], source: &[BigInt], q: &BigInt, from: usize) {
    for (t, s) in target[from..].iter_mut().zip(&source[from..]) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}
