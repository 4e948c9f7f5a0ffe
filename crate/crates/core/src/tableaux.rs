//! Cylindric semistandard tableaux and their counts `K^cyl_{λ/μ,α}`.
//!
//! A tableau of shape `λ/μ` and weight `α = (α_1, …, α_r)` is a chain
//! `μ = ν⁰ ⊆ ν¹ ⊆ ⋯ ⊆ ν^r = λ` whose steps are `(N, L)`-horizontal strips of
//! sizes `α_i`. Zero entries of `α` are allowed and repeat a partition.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::{horizontal_strip_extensions, CylProfile, Partition, SkewShape};

/// A tableau weight: a finite vector of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<usize>);

impl Weight {
    pub fn new(entries: Vec<usize>) -> Self {
        Weight(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_entry(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<&Partition> for Weight {
    fn from(p: &Partition) -> Self {
        Weight(p.parts().to_vec())
    }
}

impl From<Vec<usize>> for Weight {
    fn from(v: Vec<usize>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", crate::partition::join(&self.0, ","))
    }
}

impl std::str::FromStr for Weight {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() {
            return Ok(Weight::default());
        }
        trimmed
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|e| {
                    crate::error::Error::InvalidPartition(format!("weight {s:?}: {e}"))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// A chain `ν⁰ ⊆ ν¹ ⊆ ⋯ ⊆ ν^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TableauChain(Vec<Partition>);

impl TableauChain {
    pub fn partitions(&self) -> &[Partition] {
        &self.0
    }

    /// The weight read off the chain: sizes of successive differences.
    pub fn weight(&self) -> Weight {
        Weight(self.0.windows(2).map(|w| w[1].size() - w[0].size()).collect())
    }
}

fn trivially_zero(p: CylProfile, shape: &SkewShape, alpha: &Weight) -> bool {
    alpha.total() != shape.size() || alpha.max_entry() > p.level()
}

/// `K^cyl_{λ/μ,α}` by layered dynamic programming over reachable partitions.
///
/// Errors if `λ` or `μ` is not an `(N, L)`-partition.
pub fn count_cyl_tableaux(p: CylProfile, shape: &SkewShape, alpha: &Weight) -> Result<BigUint> {
    p.require_cylindric(shape)?;
    if trivially_zero(p, shape, alpha) {
        return Ok(BigUint::zero());
    }
    let target = shape.outer();
    let mut layer: HashMap<Partition, BigUint> = HashMap::new();
    layer.insert(shape.inner().clone(), BigUint::one());
    for &k in alpha.entries() {
        let mut next: HashMap<Partition, BigUint> = HashMap::with_capacity(layer.len());
        for (nu, count) in &layer {
            for rho in horizontal_strip_extensions(p, nu, k) {
                if target.contains(&rho) {
                    *next.entry(rho).or_default() += count;
                }
            }
        }
        if next.is_empty() {
            return Ok(BigUint::zero());
        }
        layer = next;
    }
    Ok(layer.remove(target).unwrap_or_default())
}

/// Every cylindric tableau of the given shape and weight, in lexicographic
/// order of chains. Exponential in the size of the shape.
pub fn enumerate_cyl_tableaux(
    p: CylProfile,
    shape: &SkewShape,
    alpha: &Weight,
) -> Result<Vec<TableauChain>> {
    p.require_cylindric(shape)?;
    let mut out = Vec::new();
    if trivially_zero(p, shape, alpha) {
        return Ok(out);
    }

    fn go(
        p: CylProfile,
        target: &Partition,
        steps: &[usize],
        chain: &mut Vec<Partition>,
        out: &mut Vec<TableauChain>,
    ) {
        let last = chain.last().expect("chain starts non-empty");
        let Some((&k, rest)) = steps.split_first() else {
            if last == target {
                out.push(TableauChain(chain.clone()));
            }
            return;
        };
        for rho in horizontal_strip_extensions(p, last, k) {
            if target.contains(&rho) {
                chain.push(rho);
                go(p, target, rest, chain, out);
                chain.pop();
            }
        }
    }

    let mut chain = vec![shape.inner().clone()];
    go(p, shape.outer(), alpha.entries(), &mut chain, &mut out);
    Ok(out)
}

/// The classical Kostka number `K_{λ,α}`, computed as a cylindric count at a
/// level large enough that the level constraint never binds.
pub fn classical_kostka(lam: &Partition, alpha: &Weight) -> BigUint {
    let p = CylProfile::new(lam.length().max(1), lam.size() + 1).expect("positive profile");
    count_cyl_tableaux(p, &SkewShape::straight(lam.clone()), alpha)
        .expect("λ is an (ℓ(λ), |λ|+1)-partition")
}
