//! Homogeneous symmetric functions of a fixed degree in the monomial and
//! Schur bases, the Littlewood–Richardson rule, and cylindric Schur
//! functions.
//!
//! Nothing here models the infinite-variable ring as a whole. Every vector is
//! a finite map from partitions of one degree to integers.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::marker::PhantomData;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::partition::{
    classical_strip_extensions, partitions_of, partitions_with_length, CylProfile, Partition,
    SkewShape,
};
use crate::tableaux::{classical_kostka, count_cyl_tableaux, Weight};

pub trait Basis {
    const SYMBOL: &'static str;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Schur {}

impl Basis for Monomial {
    const SYMBOL: &'static str = "m";
}

impl Basis for Schur {
    const SYMBOL: &'static str = "s";
}

/// A homogeneous element of fixed degree expanded in basis `B`.
///
/// Keys all have size `degree`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Homogeneous<B> {
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
    basis: PhantomData<B>,
}

/// Coefficients of `m_α`.
pub type MonomialVector = Homogeneous<Monomial>;
/// Coefficients of `s_λ`.
pub type SchurVector = Homogeneous<Schur>;

impl<B: Basis> Homogeneous<B> {
    pub fn zero(degree: usize) -> Self {
        Homogeneous {
            degree,
            coeffs: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    /// The single basis element indexed by `lam`.
    pub fn basis_element(lam: Partition) -> Self {
        let mut v = Self::zero(lam.size());
        v.coeffs.insert(lam, BigInt::from(1));
        v
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

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    /// Number of nonzero terms; see `is_zero` for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · B_lam`.
    ///
    /// # Panics
    ///
    /// If `lam` does not have size equal to the degree.
    pub fn add_term(&mut self, lam: Partition, c: impl Into<BigInt>) {
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

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        for (lam, x) in &other.coeffs {
            self.add_term(lam.clone(), x * c);
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

impl<B: Basis> fmt::Debug for Homogeneous<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<B: Basis> fmt::Display for Homogeneous<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·{}{lam}", B::SYMBOL)?;
        }
        Ok(())
    }
}

impl<B: Basis> Serialize for Homogeneous<B> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Homogeneous", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("coeffs", &CoeffList(&self.coeffs))?;
        st.end()
    }
}

/// Serializes a coefficient map as `[[partition, coeff], ...]`.
pub(crate) struct CoeffList<'a>(pub &'a BTreeMap<Partition, BigInt>);

impl Serialize for CoeffList<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (lam, c) in self.0 {
            seq.serialize_element(&(lam, IntValue(c)))?;
        }
        seq.end()
    }
}

/// A JSON number when it fits in `i64`, a decimal string otherwise.
pub(crate) struct IntValue<'a>(pub &'a BigInt);

impl Serialize for IntValue<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

/// `s^cyl_{λ/μ} = Σ_α K^cyl_{λ/μ,α} m_α` over partitions `α ⊢ |λ/μ|`.
pub fn cylindric_schur(p: CylProfile, shape: &SkewShape) -> Result<MonomialVector> {
    p.require_cylindric(shape)?;
    let mut out = MonomialVector::zero(shape.size());
    // α with α_1 > L contribute nothing.
    for alpha in crate::partition::bounded_partitions(shape.size(), shape.size(), p.level()) {
        let k = count_cyl_tableaux(p, shape, &Weight::from(&alpha))?;
        out.add_term(alpha, BigInt::from(k));
    }
    Ok(out)
}

/// `c^λ_{μν}`: the number of LR tableaux of shape `λ/μ` and content `ν`.
///
/// Boxes are filled row by row from the top, right to left within a row, so
/// the fill order is the reverse reading word. A filling is kept when rows
/// weakly increase, columns strictly increase, and every prefix of the
/// reading word is a lattice word.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() != mu.size() + nu.size() || !lam.contains(mu) || !lam.contains(nu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    let rows = lam.length();
    // Box positions in fill order.
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (mu.part(i)..lam.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; lam.part(i)]).collect();
    let mut used = vec![0usize; nu.length()];

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        nu: &Partition,
        grid: &mut [Vec<usize>],
        used: &mut [usize],
    ) -> u64 {
        let Some(&(i, j)) = cells.get(idx) else {
            return 1;
        };
        // Entries are 1-based labels; 0 marks unfilled / part of μ.
        let right_cap = if j + 1 < grid[i].len() { grid[i][j + 1] } else { usize::MAX };
        let above_min = if i > 0 && j >= mu.part(i - 1) { grid[i - 1][j] + 1 } else { 1 };
        let hi = right_cap.min(nu.length());
        let mut total = 0;
        for v in above_min..=hi {
            let slot = v - 1;
            if used[slot] == nu.part(slot) {
                continue;
            }
            if slot > 0 && used[slot - 1] <= used[slot] {
                continue;
            }
            used[slot] += 1;
            grid[i][j] = v;
            total += go(idx + 1, cells, mu, nu, grid, used);
            grid[i][j] = 0;
            used[slot] -= 1;
        }
        total
    }

    go(0, &cells, mu, nu, &mut grid, &mut used)
}

/// `s_μ s_ν = Σ_λ c^λ_{μν} s_λ`, keeping only `ℓ(λ) ≤ max_length`.
pub fn schur_product(mu: &Partition, nu: &Partition, max_length: usize) -> SchurVector {
    let n = mu.size() + nu.size();
    let mut out = SchurVector::zero(n);
    if mu.length() > max_length || nu.length() > max_length {
        return out;
    }
    if mu.is_empty() || nu.is_empty() {
        let lam = if mu.is_empty() { nu } else { mu };
        out.add_term(lam.clone(), 1);
        return out;
    }
    for lam in partitions_with_length(n, max_length) {
        if lam.contains(mu) && lam.contains(nu) {
            let c = lr_coefficient(&lam, mu, nu);
            out.add_term(lam, c);
        }
    }
    out
}

/// Monomial expansion of `s_λ`: the coefficients are Kostka numbers.
pub fn schur_to_monomial(lam: &Partition) -> MonomialVector {
    let mut out = MonomialVector::zero(lam.size());
    for alpha in partitions_of(lam.size()) {
        if alpha.dominated_by(lam) {
            let k = classical_kostka(lam, &Weight::from(&alpha));
            out.add_term(alpha, BigInt::from(k));
        }
    }
    out
}

/// Monomial expansion of a Schur-basis vector.
pub fn schur_vector_to_monomial(v: &SchurVector) -> MonomialVector {
    let mut out = MonomialVector::zero(v.degree());
    for (lam, c) in v.iter() {
        out.add_scaled(&schur_to_monomial(lam), c);
    }
    out
}

/// Schur expansion of `h_α = h_{α_1} h_{α_2} ⋯` truncated to
/// `ℓ(λ) ≤ max_length`, by iterated Pieri multiplication.
pub fn h_to_schur(alpha: &Weight, max_length: usize) -> SchurVector {
    let mut current: BTreeMap<Partition, BigUint> = BTreeMap::new();
    current.insert(Partition::empty(), BigUint::from(1u8));
    for &k in alpha.entries() {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (eta, c) in &current {
            for rho in classical_strip_extensions(eta, k, max_length) {
                *next.entry(rho).or_default() += c;
            }
        }
        current = next;
    }
    let mut out = SchurVector::zero(alpha.total());
    for (lam, c) in current {
        out.add_term(lam, BigInt::from(c));
    }
    out
}

/// Classical skew Schur function `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν` in the Schur
/// basis.
pub fn skew_schur(shape: &SkewShape) -> SchurVector {
    let mut out = SchurVector::zero(shape.size());
    for nu in partitions_of(shape.size()) {
        out.add_term(nu.clone(), lr_coefficient(shape.outer(), shape.inner(), &nu));
    }
    out
}
