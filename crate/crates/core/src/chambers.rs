//! Geometric verification layer: chambers of the signed-graphic arrangement
//! enumerated by exact sign-vector feasibility, chamber-closure membership,
//! and brute-force truncations of `X` and `X̄` straight from their defining
//! sums over integer points.
//!
//! A candidate chamber fixes a strict sign for every hyperplane. The strict
//! homogeneous system `σ_e · form_e(z) > 0` is feasible exactly when the
//! closed system `σ_e · form_e(z) >= 1` is (scale any strict solution), and
//! the closed system is decided by Fourier-Motzkin elimination over the
//! rationals, which also back-substitutes a witness point.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flats;
use crate::graph::{EdgeRef, SignedGraph};
use crate::truncated::TruncatedPolynomial;

/// Chamber enumeration refuses graphs beyond these sizes.
pub const CHAMBER_VERTEX_CAP: usize = 5;
pub const CHAMBER_EDGE_CAP: usize = 12;

/// Bound on `(2N+1)^ℓ` for the brute-force point enumerations.
pub const POINT_BUDGET: usize = 20_000_000;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// One strict sign per edge, in the graph's canonical edge order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SignVector(pub Vec<Sign>);

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Sign::Plus { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// A feasible sign vector and one rational interior point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chamber {
    pub signs: SignVector,
    pub witness: Vec<BigRational>,
}

/// The feasible open sign vectors of a signed-graphic arrangement, sorted.
#[derive(Clone, Debug)]
pub struct ChamberSet {
    chambers: Vec<Chamber>,
}

impl ChamberSet {
    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn count(&self) -> usize {
        self.chambers.len()
    }

    /// One line per chamber: the ±-string, then the witness coordinates.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for c in &self.chambers {
            let coords: Vec<String> = c.witness.iter().map(|w| w.to_string()).collect();
            out.push_str(format!("{} {}", c.signs, coords.join(" ")).trim());
            out.push('\n');
        }
        out
    }
}

/// The defining linear form of an edge's hyperplane, as integer coordinates.
fn edge_form(e: EdgeRef, l: usize) -> Vec<i64> {
    let mut form = vec![0i64; l];
    match e {
        EdgeRef::Positive(i, j) => {
            form[i - 1] = 1;
            form[j - 1] = -1;
        }
        EdgeRef::Negative(i, j) => {
            form[i - 1] = 1;
            form[j - 1] = 1;
        }
        EdgeRef::Loop(v) => {
            form[v - 1] = 1;
        }
    }
    form
}

fn eval_form(e: EdgeRef, point: &[i64]) -> i64 {
    match e {
        EdgeRef::Positive(i, j) => point[i - 1] - point[j - 1],
        EdgeRef::Negative(i, j) => point[i - 1] + point[j - 1],
        EdgeRef::Loop(v) => point[v - 1],
    }
}

/// `coeffs · z >= rhs` with integer, gcd-reduced coefficients.
#[derive(Clone, Debug)]
struct LinIneq {
    coeffs: Vec<BigInt>,
    rhs: BigRational,
}

/// Canonicalizes by the positive scale making the coefficients primitive;
/// drops satisfied trivial rows, keeps only the strongest rhs per direction.
/// Returns `None` on an unsatisfiable constant row.
fn normalize(rows: Vec<LinIneq>) -> Option<Vec<LinIneq>> {
    let mut best: BTreeMap<Vec<BigInt>, BigRational> = BTreeMap::new();
    for row in rows {
        let gcd = row.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if gcd.is_zero() {
            if row.rhs.is_positive() {
                return None;
            }
            continue;
        }
        let coeffs: Vec<BigInt> = row.coeffs.iter().map(|c| c / &gcd).collect();
        let rhs = row.rhs / BigRational::from(gcd);
        match best.entry(coeffs) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(rhs);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                if rhs > *o.get() {
                    o.insert(rhs);
                }
            }
        }
    }
    Some(
        best.into_iter()
            .map(|(coeffs, rhs)| LinIneq { coeffs, rhs })
            .collect(),
    )
}

/// Decides `A z >= b` by eliminating variables in index order; on success
/// returns a witness from back-substitution.
fn feasible_witness(rows: Vec<LinIneq>, nvars: usize) -> Option<Vec<BigRational>> {
    let mut stages: Vec<Vec<LinIneq>> = Vec::with_capacity(nvars);
    let mut current = normalize(rows)?;
    for k in 0..nvars {
        stages.push(current.clone());
        let mut next: Vec<LinIneq> = Vec::new();
        let mut pos: Vec<&LinIneq> = Vec::new();
        let mut neg: Vec<&LinIneq> = Vec::new();
        for row in &current {
            match row.coeffs[k].sign() {
                num_bigint::Sign::Plus => pos.push(row),
                num_bigint::Sign::Minus => neg.push(row),
                num_bigint::Sign::NoSign => next.push(row.clone()),
            }
        }
        for p in &pos {
            for q in &neg {
                // Scale p by |q_k| and q by p_k; the k-th coefficients cancel.
                let a = p.coeffs[k].magnitude().clone();
                let b = q.coeffs[k].magnitude().clone();
                let coeffs: Vec<BigInt> = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(pc, qc)| pc * BigInt::from(b.clone()) + qc * BigInt::from(a.clone()))
                    .collect();
                let rhs = &p.rhs * BigRational::from(BigInt::from(b.clone()))
                    + &q.rhs * BigRational::from(BigInt::from(a.clone()));
                next.push(LinIneq { coeffs, rhs });
            }
        }
        current = normalize(next)?;
    }
    for row in &current {
        if row.rhs.is_positive() {
            return None;
        }
    }

    let mut witness = vec![BigRational::zero(); nvars];
    for k in (0..nvars).rev() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for row in &stages[k] {
            if row.coeffs[k].is_zero() {
                continue;
            }
            let mut rest = row.rhs.clone();
            for (c, w) in row.coeffs[k + 1..].iter().zip(&witness[k + 1..]) {
                rest -= BigRational::from(c.clone()) * w;
            }
            let bound = rest / BigRational::from(row.coeffs[k].clone());
            if row.coeffs[k].is_positive() {
                lower = Some(match lower {
                    Some(l) => l.max(bound),
                    None => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) => u.min(bound),
                    None => bound,
                });
            }
        }
        witness[k] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "elimination guarantees a nonempty interval");
                (l + u) / BigRational::from(BigInt::from(2))
            }
            (Some(l), None) => l,
            (None, Some(u)) => u,
            (None, None) => BigRational::zero(),
        };
    }
    Some(witness)
}

fn check_caps(g: &SignedGraph) -> Result<()> {
    if g.n_vertices() > CHAMBER_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "chamber enumeration vertices",
            cap: CHAMBER_VERTEX_CAP,
            actual: g.n_vertices(),
        });
    }
    if g.n_edges() > CHAMBER_EDGE_CAP {
        return Err(Error::CapExceeded {
            what: "chamber enumeration edges",
            cap: CHAMBER_EDGE_CAP,
            actual: g.n_edges(),
        });
    }
    Ok(())
}

/// Tests all `2^|E|` sign vectors for strict feasibility and returns the
/// feasible ones with witnesses, sorted by sign vector.
pub fn enumerate_chambers(g: &SignedGraph) -> Result<ChamberSet> {
    check_caps(g)?;
    let l = g.n_vertices();
    let edges = g.edges();
    let forms: Vec<Vec<i64>> = edges.iter().map(|&e| edge_form(e, l)).collect();
    let mut chambers: Vec<Chamber> = (0u32..1 << edges.len())
        .into_par_iter()
        .filter_map(|mask| {
            let signs: Vec<Sign> = (0..edges.len())
                .map(|k| {
                    if mask >> k & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            let rows: Vec<LinIneq> = forms
                .iter()
                .zip(&signs)
                .map(|(form, s)| {
                    let dir: i64 = if *s == Sign::Plus { 1 } else { -1 };
                    LinIneq {
                        coeffs: form.iter().map(|&c| BigInt::from(c * dir)).collect(),
                        rhs: BigRational::one(),
                    }
                })
                .collect();
            feasible_witness(rows, l).map(|witness| Chamber {
                signs: SignVector(signs),
                witness,
            })
        })
        .collect();
    chambers.sort_by(|a, b| a.signs.cmp(&b.signs));
    Ok(ChamberSet { chambers })
}

/// True iff the point lies in the closed chamber: wherever a form is nonzero
/// at the point, its sign must match the sign vector.
pub fn closure_contains(g: &SignedGraph, sv: &SignVector, point: &[i64]) -> Result<bool> {
    if point.len() != g.n_vertices() {
        return Err(Error::LengthMismatch {
            expected: g.n_vertices(),
            actual: point.len(),
        });
    }
    Ok(g.edges().iter().zip(&sv.0).all(|(&e, s)| {
        let v = eval_form(e, point);
        v == 0 || (v > 0) == (*s == Sign::Plus)
    }))
}

fn point_budget_check(g: &SignedGraph, radius: usize) -> Result<()> {
    let side = 2 * radius + 1;
    let total = side.checked_pow(g.n_vertices() as u32);
    if total.is_none_or(|t| t > POINT_BUDGET) {
        return Err(Error::CapExceeded {
            what: "point enumeration budget",
            cap: POINT_BUDGET,
            actual: total.unwrap_or(usize::MAX),
        });
    }
    Ok(())
}

fn integer_points(radius: usize, dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut point = vec![-(radius as i64); dim];
    loop {
        out.push(point.clone());
        let mut k = 0;
        while k < dim {
            point[k] += 1;
            if point[k] <= radius as i64 {
                break;
            }
            point[k] = -(radius as i64);
            k += 1;
        }
        if k == dim {
            break;
        }
    }
    out
}

fn monomial_of_point(point: &[i64], radius: usize) -> Vec<u32> {
    let mut exps = vec![0u32; 2 * radius + 1];
    for &c in point {
        exps[(c + radius as i64) as usize] += 1;
    }
    exps
}

/// `X` truncated to `[-N, N]` straight from its definition: the sum of
/// `x_κ` over proper colorings with colors in `[-N, N]`.
pub fn brute_x_truncated(g: &SignedGraph, radius: usize) -> Result<TruncatedPolynomial> {
    point_budget_check(g, radius)?;
    let mut out = TruncatedPolynomial::zero(radius);
    for point in integer_points(radius, g.n_vertices()) {
        let proper = g
            .pos_edges()
            .iter()
            .all(|&(i, j)| point[i - 1] != point[j - 1])
            && g.neg_edges()
                .iter()
                .all(|&(i, j)| point[i - 1] != -point[j - 1])
            && g.loops().iter().all(|&v| point[v - 1] != 0);
        if proper {
            out.add_term(monomial_of_point(&point, radius), BigInt::one());
        }
    }
    Ok(out)
}

/// `X̄` truncated to `[-N, N]` from its definition: every integer point
/// contributes once per chamber closure containing it.
pub fn brute_xbar_truncated(g: &SignedGraph, radius: usize) -> Result<TruncatedPolynomial> {
    point_budget_check(g, radius)?;
    let chambers = enumerate_chambers(g)?;
    let mut out = TruncatedPolynomial::zero(radius);
    for point in integer_points(radius, g.n_vertices()) {
        let mut count = 0u32;
        for c in chambers.chambers() {
            if closure_contains(g, &c.signs, &point)? {
                count += 1;
            }
        }
        out.add_term(monomial_of_point(&point, radius), BigInt::from(count));
    }
    Ok(out)
}

/// Per-point comparison of the chamber-closure count against the lattice
/// multiplicity `|χ(-1)|` of the localization.
#[derive(Clone, Debug)]
pub struct MultiplicityCheck {
    pub radius: usize,
    pub points_checked: usize,
    pub mismatches: Vec<(Vec<i64>, BigInt, BigInt)>,
}

impl MultiplicityCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn multiplicity_crosscheck(g: &SignedGraph, radius: usize) -> Result<MultiplicityCheck> {
    point_budget_check(g, radius)?;
    let chambers = enumerate_chambers(g)?;
    let mut by_flat: BTreeMap<Vec<EdgeRef>, BigInt> = BTreeMap::new();
    let mut check = MultiplicityCheck {
        radius,
        points_checked: 0,
        mismatches: Vec::new(),
    };
    for point in integer_points(radius, g.n_vertices()) {
        let mut closure_count = 0u32;
        for c in chambers.chambers() {
            if closure_contains(g, &c.signs, &point)? {
                closure_count += 1;
            }
        }
        let flat = flats::localization_flat(g, &point)?;
        let key: Vec<EdgeRef> = flat.edges.iter().copied().collect();
        let mult = match by_flat.get(&key) {
            Some(m) => m.clone(),
            None => {
                let m = flats::multiplicity_of_flat(g, &flat)?;
                by_flat.insert(key, m.clone());
                m
            }
        };
        check.points_checked += 1;
        if BigInt::from(closure_count) != mult {
            check
                .mismatches
                .push((point, BigInt::from(closure_count), mult));
        }
    }
    Ok(check)
}
