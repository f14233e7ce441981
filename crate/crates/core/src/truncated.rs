//! Exact polynomials in the variables `x_{-N}, ..., x_N`: the image of a
//! signed-symmetric function after substituting `x_i = 0` for `|i| > N`.
//! Keys are dense exponent vectors of length `2N + 1`, so equality and
//! output order are bit-reproducible.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partition::PartitionType;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPolynomial {
    radius: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedPolynomial {
    pub fn zero(radius: usize) -> Self {
        TruncatedPolynomial {
            radius,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(radius: usize) -> Self {
        let mut p = Self::zero(radius);
        p.add_term(vec![0; 2 * radius + 1], BigInt::from(1));
        p
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Column index of the variable `x_i`, for `i` in `[-radius, radius]`.
    pub fn var_index(&self, i: isize) -> usize {
        debug_assert!(i.unsigned_abs() <= self.radius);
        (i + self.radius as isize) as usize
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        debug_assert_eq!(exponents.len(), 2 * self.radius + 1);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
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

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.radius, other.radius);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.radius);
        if c.is_zero() {
            return out;
        }
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.radius, other.radius);
        let mut out = Self::zero(self.radius);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    /// The truncation of the generator `Σ_i x_i^a x_{-i}^b` to `i` in
    /// `[-radius, radius]`.
    pub fn power_sum_generator(radius: usize, a: u32, b: u32) -> Self {
        let mut p = Self::zero(radius);
        for i in -(radius as isize)..=(radius as isize) {
            let mut exp = vec![0u32; 2 * radius + 1];
            exp[(i + radius as isize) as usize] += a;
            exp[(-i + radius as isize) as usize] += b;
            p.add_term(exp, BigInt::from(1));
        }
        p
    }

    /// `x_0^u`.
    pub fn x0_power(radius: usize, u: u32) -> Self {
        let mut exp = vec![0u32; 2 * radius + 1];
        exp[radius] = u;
        let mut p = Self::zero(radius);
        p.add_term(exp, BigInt::from(1));
        p
    }

    /// The type of a monomial: `u` is the exponent of `x_0`, and each index
    /// pair `{i, -i}` with a nonzero exponent contributes a column.
    pub fn monomial_type(&self, exponents: &[u32]) -> PartitionType {
        let n = self.radius;
        let u = exponents[n] as usize;
        let cols = (1..=n).filter_map(|i| {
            let a = exponents[n + i] as usize;
            let b = exponents[n - i] as usize;
            (a + b > 0).then_some((a, b))
        });
        PartitionType::new(u, cols).expect("columns are nonzero by construction")
    }

    /// Evaluates at `x_i = 1` for all `i` (or all `i != 0` when `zero_free`,
    /// killing monomials that mention `x_0`).
    pub fn substitute_ones(&self, zero_free: bool) -> BigInt {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            if zero_free && e[self.radius] > 0 {
                continue;
            }
            total += c;
        }
        total
    }
}
