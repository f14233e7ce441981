//! The ring of signed-symmetric functions in power-sum coordinates.
//!
//! A value is a finite integer table over [`PartitionType`] keys, read as
//! `Σ c_{(u,λ)} x_0^u p_λ` where `p_{(a;b)} = Σ_i x_i^a x_{-i}^b`. The ring
//! is free commutative on `x_0` and the generators `p_{(a;b)}`, so products
//! are key concatenations. The table keeps integer coefficients; rational
//! coefficients only appear on the ordinary-symmetric side.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::PartitionType;
use crate::truncated::TruncatedPolynomial;

/// A signed-symmetric function in power-sum coordinates. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SSymFunction {
    coeffs: BTreeMap<PartitionType, BigInt>,
}

impl SSymFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::power_sum(PartitionType::unit())
    }

    /// The basis element `x_0^u p_λ` for a single key.
    pub fn power_sum(key: PartitionType) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(key, BigInt::one());
        SSymFunction { coeffs }
    }

    /// The indeterminate `x_0`.
    pub fn x0() -> Self {
        Self::power_sum(PartitionType::x0_power(1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PartitionType, BigInt)>) -> Self {
        let mut f = Self::zero();
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    fn add_term(&mut self, key: PartitionType, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, key: &PartitionType) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartitionType, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest key degree; 0 for the zero table.
    pub fn degree(&self) -> usize {
        self.coeffs
            .keys()
            .map(PartitionType::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SSymFunction {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Product in the free commutative algebra: coefficients convolve along
    /// key concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                out.add_term(k1.concat(k2), c1 * c2);
            }
        }
        out
    }

    /// The involution fixing each key up to sign: `x_0 -> -x_0` and
    /// `p_{(a;b)} -> (-1)^{a+b-1} p_{(a;b)}`, i.e. the coefficient at
    /// `(u, λ)` picks up `(-1)^{u + Σ(a_i+b_i) - r}`.
    pub fn omega(&self) -> Self {
        SSymFunction {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| {
                    let exponent = k.degree() - k.columns().len();
                    let c = if exponent % 2 == 0 { c.clone() } else { -c };
                    (k.clone(), c)
                })
                .collect(),
        }
    }

    /// Evaluates at `x_i = 1` for `i` in `[-n, n]` (minus `x_0` when
    /// `zero_free`) and `x_i = 0` outside: each generator contributes the
    /// count of surviving indices, `2n + 1` or `2n`.
    pub fn specialize(&self, n: usize, zero_free: bool) -> BigInt {
        let per_generator = BigInt::from(if zero_free { 2 * n } else { 2 * n + 1 });
        let mut total = BigInt::zero();
        for (k, c) in &self.coeffs {
            if zero_free && k.u() > 0 {
                continue;
            }
            let mut term = c.clone();
            for _ in 0..k.columns().len() {
                term *= &per_generator;
            }
            total += term;
        }
        total
    }

    /// Substitutes `x_i = 0` for `|i| > radius` and expands exactly.
    pub fn truncate(&self, radius: usize) -> TruncatedPolynomial {
        let mut out = TruncatedPolynomial::zero(radius);
        for (k, c) in &self.coeffs {
            let mut prod = TruncatedPolynomial::x0_power(radius, k.u() as u32);
            for &(a, b) in k.columns() {
                prod = prod.mul(&TruncatedPolynomial::power_sum_generator(
                    radius, a as u32, b as u32,
                ));
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Coordinates in the monomial basis, computed by truncating at the
    /// total degree and classifying monomials by type. A type of degree `d`
    /// has at most `d` columns, so radius `d` realizes every type and the
    /// coefficient of any one representative monomial is the `m`-coefficient.
    /// All representatives are required to agree.
    pub fn monomial_expansion(&self) -> Result<BTreeMap<PartitionType, BigInt>> {
        let trunc = self.truncate(self.degree());
        let mut out: BTreeMap<PartitionType, BigInt> = BTreeMap::new();
        for (exps, coeff) in trunc.terms() {
            let key = trunc.monomial_type(exps);
            match out.get(&key) {
                None => {
                    out.insert(key, coeff.clone());
                }
                Some(prev) if prev == coeff => {}
                Some(_) => return Err(Error::NotSignedSymmetric(key.to_string())),
            }
        }
        Ok(out)
    }

    /// Kills every key mentioning `x_0` or a column with both entries
    /// positive; surviving keys are ordinary power-sum partitions.
    pub fn pi(&self) -> SymFunction {
        let mut out = SymFunction::zero();
        for (k, c) in &self.coeffs {
            if k.u() > 0 || k.columns().iter().any(|&(_, b)| b > 0) {
                continue;
            }
            let parts: Vec<usize> = k.columns().iter().map(|&(a, _)| a).collect();
            out.add_term(parts, BigRational::from(c.clone()));
        }
        out
    }

    /// Canonical line serialization, `<coeff> <type>` per key in table
    /// order. This is the CLI output format and the collision fingerprint.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for (k, c) in &self.coeffs {
            writeln!(s, "{c} {k}").unwrap();
        }
        s
    }
}

impl std::ops::Add for &SSymFunction {
    type Output = SSymFunction;
    fn add(self, rhs: Self) -> SSymFunction {
        SSymFunction::add(self, rhs)
    }
}

impl std::ops::Sub for &SSymFunction {
    type Output = SSymFunction;
    fn sub(self, rhs: Self) -> SSymFunction {
        SSymFunction::sub(self, rhs)
    }
}

impl std::ops::Mul for &SSymFunction {
    type Output = SSymFunction;
    fn mul(self, rhs: Self) -> SSymFunction {
        SSymFunction::mul(self, rhs)
    }
}

/// An ordinary symmetric function in power-sum coordinates: rational
/// coefficients over weakly decreasing positive partitions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymFunction {
    coeffs: BTreeMap<Vec<usize>, BigRational>,
}

impl SymFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `p_{k1} p_{k2} ...` for one partition.
    pub fn power_sum(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut f = Self::zero();
        f.add_term(parts.into_iter().collect(), BigRational::one());
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<usize>, BigRational)>) -> Self {
        let mut f = Self::zero();
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    pub fn add_term(&mut self, mut parts: Vec<usize>, coeff: BigRational) {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(parts) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, parts: &[usize]) -> BigRational {
        self.coeffs
            .get(parts)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The standard involution: `p_k -> (-1)^{k-1} p_k`.
    pub fn omega(&self) -> Self {
        SymFunction {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| {
                    let exponent = k.iter().sum::<usize>() - k.len();
                    let c = if exponent % 2 == 0 { c.clone() } else { -c };
                    (k.clone(), c)
                })
                .collect(),
        }
    }
}

/// The embedding of ordinary symmetric functions: `p_k -> p_{(k;0)}`.
/// Fails if a coefficient is not an integer, since the target table is
/// integer-valued.
pub fn iota(f: &SymFunction) -> Result<SSymFunction> {
    let mut out = SSymFunction::zero();
    for (parts, c) in f.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient(format!("{c} at {parts:?}")));
        }
        let key = PartitionType::new(0, parts.iter().map(|&k| (k, 0)))
            .expect("partition parts are positive");
        out.add_term(key, c.to_integer());
    }
    Ok(out)
}

/// Outcome of the triangularity check for a single index.
#[derive(Clone, Debug)]
pub struct TriangularityEntry {
    pub index: PartitionType,
    pub diagonal: BigInt,
    pub diagonal_positive: bool,
    /// Every key in the `m`-expansion dominates the index in the order
    /// generated by summing two columns (with swaps) and absorbing a column
    /// into the `x_0`-exponent.
    pub support_dominates: bool,
    pub coefficients_nonnegative: bool,
}

impl TriangularityEntry {
    pub fn passed(&self) -> bool {
        self.diagonal_positive && self.support_dominates && self.coefficients_nonnegative
    }
}

#[derive(Clone, Debug)]
pub struct TriangularityReport {
    pub degree: usize,
    pub entries: Vec<TriangularityEntry>,
}

impl TriangularityReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(TriangularityEntry::passed)
    }
}

/// Largest degree [`triangularity_report`] accepts; the expansion cost grows
/// like `(2d+1)^d`.
pub const TRIANGULARITY_DEGREE_CAP: usize = 6;

/// Expands `p_{(u,λ)}` in the monomial basis for every type of degree at
/// most `degree` and checks unitriangularity-style domination: positive
/// diagonal, nonnegative coefficients, and support inside the up-set of the
/// index.
pub fn triangularity_report(degree: usize) -> TriangularityReport {
    assert!(
        degree <= TRIANGULARITY_DEGREE_CAP,
        "triangularity degree {degree} exceeds cap {TRIANGULARITY_DEGREE_CAP}"
    );
    let mut entries = Vec::new();
    for index in types_up_to_degree(degree) {
        let expansion = SSymFunction::power_sum(index.clone())
            .monomial_expansion()
            .expect("power sums are signed-symmetric");
        let up_set = dominating_types(&index);
        let diagonal = expansion.get(&index).cloned().unwrap_or_else(BigInt::zero);
        let entry = TriangularityEntry {
            diagonal_positive: diagonal.is_positive(),
            diagonal,
            support_dominates: expansion.keys().all(|k| up_set.contains(k)),
            coefficients_nonnegative: expansion.values().all(|c| !c.is_negative()),
            index,
        };
        entries.push(entry);
    }
    TriangularityReport { degree, entries }
}

/// All canonical types of degree at most `d`, in table order.
pub(crate) fn types_up_to_degree(d: usize) -> Vec<PartitionType> {
    let mut out = Vec::new();
    for deg in 0..=d {
        for u in 0..=deg {
            let mut columns = Vec::new();
            column_lists(deg - u, (deg, deg), &mut columns, &mut |cols| {
                out.push(PartitionType::new(u, cols.iter().copied()).expect("columns are nonzero"));
            });
        }
    }
    out.sort();
    out
}

/// Enumerates canonical column lists summing to `rem`, non-increasing and
/// bounded by `max_col`.
fn column_lists(
    rem: usize,
    max_col: (usize, usize),
    acc: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if rem == 0 {
        emit(acc);
        return;
    }
    for a in (1..=rem.min(max_col.0)).rev() {
        let b_max = (rem - a).min(a);
        let b_start = if a == max_col.0 {
            b_max.min(max_col.1)
        } else {
            b_max
        };
        for b in (0..=b_start).rev() {
            acc.push((a, b));
            column_lists(rem - a - b, (a, b), acc, emit);
            acc.pop();
        }
    }
}

/// Closure of `{index}` under the two coarsening moves: replace two columns
/// by their sum (optionally swapping one first) and absorb a column into the
/// `x_0`-exponent.
fn dominating_types(index: &PartitionType) -> std::collections::BTreeSet<PartitionType> {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![index.clone()];
    while let Some(t) = stack.pop() {
        if !seen.insert(t.clone()) {
            continue;
        }
        let cols = t.columns();
        for i in 0..cols.len() {
            // Absorb column i into u.
            let rest = || {
                cols.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, &c)| c)
            };
            let (a, b) = cols[i];
            stack.push(PartitionType::new(t.u() + a + b, rest()).expect("columns stay nonzero"));
            for j in 0..cols.len() {
                if i == j {
                    continue;
                }
                let (c, d) = cols[j];
                for merged in [(a + c, b + d), (a + d, b + c)] {
                    let others = cols
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i && k != j)
                        .map(|(_, &col)| col)
                        .chain([merged]);
                    stack.push(PartitionType::new(t.u(), others).expect("merged column nonzero"));
                }
            }
        }
    }
    seen
}
