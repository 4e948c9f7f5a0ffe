//! The fusion ring `Λ^(N,L) = Λ^(N) / I^(N,L)`, built one degree at a time.
//!
//! In degree `n` the ambient space has basis `{s_λ : λ ⊢ n, ℓ(λ) ≤ N}`. The
//! ideal is generated by `s_γ` with `γ_1 − γ_N = L + 1`, so its degree-`n`
//! piece is spanned by the products `s_ν s_γ` with `|ν| + |γ| = n`. The row
//! lattice of those products is put in Hermite normal form with the columns
//! of non-`(N,L)` partitions first; reduction then expresses any `s_λ` in the
//! basis `{S_ν : ν an (N,L)-partition}`.

use std::collections::btree_map::{self, BTreeMap};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hermite::HermiteForm;
use crate::partition::{
    enumerate_nl_partitions, horizontal_strip_extensions, partitions_with_length, CylProfile,
    Partition,
};
use crate::schur::{h_to_schur, schur_product, CoeffList, SchurVector};
use crate::tableaux::Weight;

/// An element of `Λ^(N,L)` in the `S_λ` basis, homogeneous of one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct FusionElement {
    profile: CylProfile,
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl FusionElement {
    pub fn zero(profile: CylProfile, degree: usize) -> Self {
        FusionElement {
            profile,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// `S_λ` for an `(N,L)`-partition `λ`.
    pub fn basis_element(profile: CylProfile, lam: Partition) -> Result<Self> {
        profile.require_nl(&lam)?;
        let mut e = Self::zero(profile, lam.size());
        e.coeffs.insert(lam, BigInt::from(1));
        Ok(e)
    }

    pub fn profile(&self) -> CylProfile {
        self.profile
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.coeffs.get(lam).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Partition, BigInt> {
        self.coeffs.iter()
    }

    /// Number of nonzero terms; see `is_zero` for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Adds `c · S_lam`.
    ///
    /// # Panics
    ///
    /// If `lam` is not an `(N,L)`-partition of the element's degree.
    pub fn add_term(&mut self, lam: Partition, c: impl Into<BigInt>) {
        assert!(self.profile.is_nl_partition(&lam), "{lam} is not an {}-partition", self.profile);
        assert_eq!(lam.size(), self.degree, "term {lam} has the wrong degree");
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lam) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        assert_eq!(self.profile, other.profile);
        assert_eq!(self.degree, other.degree);
        for (lam, x) in &other.coeffs {
            self.add_term(lam.clone(), x * c);
        }
    }
}

impl fmt::Display for FusionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·S{lam}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FusionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.profile)
    }
}

impl Serialize for FusionElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FusionElement", 4)?;
        st.serialize_field("N", &self.profile.rank())?;
        st.serialize_field("L", &self.profile.level())?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("coeffs", &CoeffList(&self.coeffs))?;
        st.end()
    }
}

/// Partitions `γ ⊢ n` with `ℓ(γ) ≤ N` and `γ_1 − γ_N = L + 1`.
pub fn ideal_generators(p: CylProfile, n: usize) -> Vec<Partition> {
    partitions_with_length(n, p.rank())
        .into_iter()
        .filter(|g| g.part(0) - g.part(p.rank() - 1) == p.level() + 1)
        .collect()
}

/// The degree-`n` piece of the quotient.
#[derive(Clone, Debug)]
pub struct DegreeQuotient {
    profile: CylProfile,
    degree: usize,
    ambient_basis: Vec<Partition>,
    column: HashMap<Partition, usize>,
    basis_start: usize,
    ideal_matrix: Vec<Vec<BigInt>>,
    hermite: HermiteForm,
}

impl DegreeQuotient {
    pub fn profile(&self) -> CylProfile {
        self.profile
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of the degree with at most `N` parts. The non-`(N,L)`
    /// partitions come first, then the `(N,L)` ones; each block is
    /// graded-lex ordered.
    pub fn ambient_basis(&self) -> &[Partition] {
        &self.ambient_basis
    }

    /// The `(N,L)`-partitions of this degree.
    pub fn quotient_basis(&self) -> &[Partition] {
        &self.ambient_basis[self.basis_start..]
    }

    /// Rows `s_ν s_γ` in [`ambient_basis`](Self::ambient_basis) coordinates.
    pub fn ideal_matrix(&self) -> &[Vec<BigInt>] {
        &self.ideal_matrix
    }

    pub fn hermite_form(&self) -> &HermiteForm {
        &self.hermite
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_basis.len()
    }

    pub fn ideal_rank(&self) -> usize {
        self.hermite.rank()
    }

    pub fn quotient_rank(&self) -> usize {
        self.ambient_rank() - self.ideal_rank()
    }

    /// True when the ideal lattice has unit pivots exactly on the
    /// non-`(N,L)` columns, i.e. the `(N,L)`-partitions index a ℤ-basis of
    /// the quotient in this degree.
    pub fn has_nl_basis(&self) -> bool {
        self.hermite.is_unimodular()
            && self.hermite.pivots().len() == self.basis_start
            && self.hermite.pivots().iter().enumerate().all(|(i, &c)| i == c)
    }

    /// Reduces a Schur-basis vector of this degree into the `S_λ` basis.
    ///
    /// Fails if some key has more than `N` parts or if the reduction leaves
    /// weight on a non-`(N,L)` coordinate.
    pub fn reduce(&self, v: &SchurVector) -> Result<FusionElement> {
        assert_eq!(v.degree(), self.degree, "degree mismatch");
        let mut dense = vec![BigInt::zero(); self.ambient_basis.len()];
        for (lam, c) in v.iter() {
            let &idx = self.column.get(lam).ok_or_else(|| Error::TooManyParts {
                partition: lam.clone(),
                rank: self.profile.rank(),
            })?;
            dense[idx] += c;
        }
        let reduced = self.hermite.reduce(&dense);
        if let Some(i) = reduced[..self.basis_start].iter().position(|c| !c.is_zero()) {
            return Err(Error::NonIntegralReduction {
                profile: self.profile,
                degree: self.degree,
                partition: self.ambient_basis[i].clone(),
            });
        }
        let mut out = FusionElement::zero(self.profile, self.degree);
        for (lam, c) in self.ambient_basis[self.basis_start..].iter().zip(reduced.into_iter().skip(self.basis_start)) {
            out.add_term(lam.clone(), c);
        }
        Ok(out)
    }
}

/// Builds the degree-`n` quotient from scratch (no caching).
pub fn build_degree_quotient(p: CylProfile, n: usize) -> DegreeQuotient {
    let (mut outside, mut inside): (Vec<_>, Vec<_>) = partitions_with_length(n, p.rank())
        .into_iter()
        .partition(|lam| !p.is_nl_partition(lam));
    let basis_start = outside.len();
    outside.append(&mut inside);
    let ambient_basis = outside;
    let column: HashMap<Partition, usize> = ambient_basis
        .iter()
        .enumerate()
        .map(|(i, lam)| (lam.clone(), i))
        .collect();

    let mut ideal_matrix = Vec::new();
    for m in 0..=n {
        for gamma in ideal_generators(p, m) {
            for nu in partitions_with_length(n - m, p.rank()) {
                let prod = schur_product(&nu, &gamma, p.rank());
                let mut row = vec![BigInt::zero(); ambient_basis.len()];
                for (lam, c) in prod.iter() {
                    row[column[lam]] = c.clone();
                }
                ideal_matrix.push(row);
            }
        }
    }
    let hermite = HermiteForm::new(&ideal_matrix, ambient_basis.len());
    DegreeQuotient {
        profile: p,
        degree: n,
        ambient_basis,
        column,
        basis_start,
        ideal_matrix,
        hermite,
    }
}

type QuotientCache = RwLock<HashMap<(CylProfile, usize), Arc<DegreeQuotient>>>;

fn cache() -> &'static QuotientCache {
    static CACHE: OnceLock<QuotientCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Session-cached [`build_degree_quotient`].
pub fn degree_quotient(p: CylProfile, n: usize) -> Arc<DegreeQuotient> {
    if let Some(q) = cache().read().expect("quotient cache poisoned").get(&(p, n)) {
        return Arc::clone(q);
    }
    let built = Arc::new(build_degree_quotient(p, n));
    let mut guard = cache().write().expect("quotient cache poisoned");
    Arc::clone(guard.entry((p, n)).or_insert(built))
}

/// Image of a Schur-basis vector in `Λ^(N,L)`.
pub fn reduce_vector(p: CylProfile, v: &SchurVector) -> Result<FusionElement> {
    degree_quotient(p, v.degree()).reduce(v)
}

/// `S_λ` in the basis of `(N,L)`-partitions. Requires `ℓ(λ) ≤ N`.
pub fn reduce_schur(p: CylProfile, lam: &Partition) -> Result<FusionElement> {
    if lam.length() > p.rank() {
        return Err(Error::TooManyParts {
            partition: lam.clone(),
            rank: p.rank(),
        });
    }
    reduce_vector(p, &SchurVector::basis_element(lam.clone()))
}

/// `S_μ S_ν = Σ_λ d^λ_{μν} S_λ`.
pub fn fusion_product(p: CylProfile, mu: &Partition, nu: &Partition) -> Result<FusionElement> {
    p.require_nl(mu)?;
    p.require_nl(nu)?;
    reduce_vector(p, &schur_product(mu, nu, p.rank()))
}

/// The fusion coefficient `d^λ_{μν}`.
pub fn fusion_coefficient(p: CylProfile, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    p.require_nl(lam)?;
    if lam.size() != mu.size() + nu.size() {
        p.require_nl(mu)?;
        p.require_nl(nu)?;
        return Ok(BigInt::zero());
    }
    Ok(fusion_product(p, mu, nu)?.coeff(lam))
}

/// `S_η H_{α_1} ⋯ H_{α_r}` by repeated application of the strip rule.
pub fn strip_sum(p: CylProfile, eta: &Partition, alpha: &Weight) -> Result<FusionElement> {
    p.require_nl(eta)?;
    if let Some(&k) = alpha.entries().iter().find(|&&k| k > p.level()) {
        return Err(Error::StripTooLarge { k, level: p.level() });
    }
    let mut current = FusionElement::basis_element(p, eta.clone())?;
    for &k in alpha.entries() {
        let mut next = FusionElement::zero(p, current.degree() + k);
        for (nu, c) in current.iter() {
            for rho in horizontal_strip_extensions(p, nu, k) {
                next.add_term(rho, c.clone());
            }
        }
        current = next;
    }
    Ok(current)
}

/// `H_α = Σ_ν K^cyl_{ν,α} S_ν`, computed both by iterated strips and by
/// reducing the classical Schur expansion of `h_α`. Errors if the two
/// disagree or some `α_i > L`.
pub fn fusion_h_expansion(p: CylProfile, alpha: &Weight) -> Result<FusionElement> {
    let by_strips = strip_sum(p, &Partition::empty(), alpha)?;
    let by_reduction = reduce_vector(p, &h_to_schur(alpha, p.rank()))?;
    if by_strips != by_reduction {
        return Err(Error::IdentityViolation(format!(
            "H_{alpha} in {p}: strip sum {by_strips} but reduction {by_reduction}"
        )));
    }
    Ok(by_strips)
}

/// Both sides of the Pieri rule `S_η H_k = Σ_ρ S_ρ`: the reduction of
/// `s_η h_k` and the strip sum.
pub fn pieri_sides(p: CylProfile, eta: &Partition, k: usize) -> Result<(FusionElement, FusionElement)> {
    p.require_nl(eta)?;
    if k > p.level() {
        return Err(Error::StripTooLarge { k, level: p.level() });
    }
    let lhs = reduce_vector(p, &schur_product(eta, &Partition::row(k), p.rank()))?;
    let rhs = strip_sum(p, eta, &Weight::new(vec![k]))?;
    Ok((lhs, rhs))
}

/// Checks the fusion Pieri rule for `η` and `0 ≤ k ≤ L`.
pub fn verify_pieri(p: CylProfile, eta: &Partition, k: usize) -> Result<bool> {
    let (lhs, rhs) = pieri_sides(p, eta, k)?;
    Ok(lhs == rhs)
}

/// The `(N,L)`-partitions of degree `n`; re-exported here as the index set
/// of the quotient basis.
pub fn quotient_basis(p: CylProfile, n: usize) -> Vec<Partition> {
    enumerate_nl_partitions(p, n)
}
