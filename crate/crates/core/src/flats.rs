//! The frame matroid of a signed graph: rank from balance decompositions,
//! closure, the lattice of flats with Möbius values, characteristic
//! polynomials, and point localizations.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, SignedGraph};
use crate::partition::PartitionType;
use crate::poly::IntPolynomial;

/// Edge subsets with more edges than this are refused by the lattice
/// enumerator.
pub const DEFAULT_FLAT_EDGE_CAP: usize = 20;

/// A closed edge set together with its rank and partition type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flat {
    pub edges: BTreeSet<EdgeRef>,
    pub rank: usize,
    pub ptype: PartitionType,
}

/// All flats of a signed graph, sorted by `(rank, edges)`, with the Möbius
/// values `μ(0̂, F)` of the containment order.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<Flat>,
    mobius: Vec<BigInt>,
}

/// Rank of an edge subset: vertices minus balanced components of `(V, s)`.
pub fn rank(g: &SignedGraph, s: &BTreeSet<EdgeRef>) -> Result<usize> {
    let t = g.subset_type(s)?;
    Ok(g.n_vertices() - t.columns().len())
}

fn rank_unchecked(g: &SignedGraph, s: impl IntoIterator<Item = EdgeRef>) -> usize {
    g.n_vertices() - g.subset_type_unchecked(s).columns().len()
}

/// The minimal flat containing `s`: every edge whose addition keeps the rank.
pub fn closure(g: &SignedGraph, s: &BTreeSet<EdgeRef>) -> Result<Flat> {
    g.subset_type(s)?; // validates membership
    Ok(closure_unchecked(g, s))
}

fn closure_unchecked(g: &SignedGraph, s: &BTreeSet<EdgeRef>) -> Flat {
    let base_rank = rank_unchecked(g, s.iter().copied());
    let mut edges = s.clone();
    for e in g.edges() {
        if edges.contains(&e) {
            continue;
        }
        if rank_unchecked(g, s.iter().copied().chain([e])) == base_rank {
            edges.insert(e);
        }
    }
    let ptype = g.subset_type_unchecked(edges.iter().copied());
    Flat {
        edges,
        rank: base_rank,
        ptype,
    }
}

/// Breadth-first enumeration of the flat lattice: each level closes the
/// one-edge extensions of the previous level. Möbius values come from the
/// defining recursion over the containment order.
pub fn enumerate_flats(g: &SignedGraph, cap_edges: usize) -> Result<FlatLattice> {
    if g.n_edges() > cap_edges {
        return Err(Error::CapExceeded {
            what: "flat lattice edges",
            cap: cap_edges,
            actual: g.n_edges(),
        });
    }
    let all_edges = g.edges();
    let bottom = closure_unchecked(g, &BTreeSet::new());
    let mut seen: BTreeSet<BTreeSet<EdgeRef>> = BTreeSet::new();
    seen.insert(bottom.edges.clone());
    let mut flats = vec![bottom];
    let mut level: Vec<usize> = vec![0];
    while !level.is_empty() {
        let mut next = Vec::new();
        for &idx in &level {
            let current = flats[idx].edges.clone();
            for &e in &all_edges {
                if current.contains(&e) {
                    continue;
                }
                let mut extended = current.clone();
                extended.insert(e);
                let flat = closure_unchecked(g, &extended);
                if seen.insert(flat.edges.clone()) {
                    next.push(flats.len());
                    flats.push(flat);
                }
            }
        }
        level = next;
    }
    flats.sort_by(|a, b| (a.rank, &a.edges).cmp(&(b.rank, &b.edges)));

    let mut mobius: Vec<BigInt> = Vec::with_capacity(flats.len());
    for i in 0..flats.len() {
        if i == 0 {
            mobius.push(BigInt::one());
            continue;
        }
        let mut sum = BigInt::zero();
        for j in 0..i {
            if flats[j].edges.is_subset(&flats[i].edges) {
                sum += &mobius[j];
            }
        }
        mobius.push(-sum);
    }
    Ok(FlatLattice { flats, mobius })
}

impl FlatLattice {
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn mobius(&self, index: usize) -> &BigInt {
        &self.mobius[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Flat, &BigInt)> {
        self.flats.iter().zip(&self.mobius)
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// One flat per line: `rank=<r> mu=<m> type=<type> edges={...}`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (flat, mu) in self.iter() {
            write!(
                out,
                "rank={} mu={} type={} edges={{",
                flat.rank, mu, flat.ptype
            )
            .unwrap();
            for (k, e) in flat.edges.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                write!(out, "{e}").unwrap();
            }
            out.push_str("}\n");
        }
        out
    }
}

/// `Σ_F μ(0̂, F) t^{ℓ - rank F}`, a monic integer polynomial of degree `ℓ`.
pub fn characteristic_polynomial(lattice: &FlatLattice, ambient_dim: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); ambient_dim + 1];
    for (flat, mu) in lattice.iter() {
        coeffs[ambient_dim - flat.rank] += mu;
    }
    IntPolynomial::new(coeffs)
}

/// The flat of all edges whose hyperplane contains the point: positive pairs
/// with equal coordinates, negative pairs with opposite coordinates, loops at
/// zero coordinates.
pub fn localization_flat(g: &SignedGraph, point: &[i64]) -> Result<Flat> {
    if point.len() != g.n_vertices() {
        return Err(Error::LengthMismatch {
            expected: g.n_vertices(),
            actual: point.len(),
        });
    }
    let edges: BTreeSet<EdgeRef> = g
        .edges()
        .into_iter()
        .filter(|e| match *e {
            EdgeRef::Positive(i, j) => point[i - 1] == point[j - 1],
            EdgeRef::Negative(i, j) => point[i - 1] == -point[j - 1],
            EdgeRef::Loop(v) => point[v - 1] == 0,
        })
        .collect();
    let flat = closure_unchecked(g, &edges);
    assert_eq!(flat.edges, edges, "localization must be closed");
    Ok(flat)
}

/// Chamber count of the localization at a flat: `|χ(-1)|` of the spanning
/// subgraph on the flat's edges.
pub fn multiplicity_of_flat(g: &SignedGraph, flat: &Flat) -> Result<BigInt> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut loops = Vec::new();
    for &e in &flat.edges {
        match e {
            EdgeRef::Positive(i, j) => pos.push((i, j)),
            EdgeRef::Negative(i, j) => neg.push((i, j)),
            EdgeRef::Loop(v) => loops.push(v),
        }
    }
    let sub =
        SignedGraph::new(g.n_vertices(), pos, neg, loops).expect("flat edges come from the graph");
    let lattice = enumerate_flats(&sub, DEFAULT_FLAT_EDGE_CAP)?;
    let chi = characteristic_polynomial(&lattice, g.n_vertices());
    Ok(chi.eval(&BigInt::from(-1)).magnitude().clone().into())
}

/// Number of chamber closures containing the point, computed on the lattice
/// side as `|χ(-1)|` of the localization.
pub fn multiplicity(g: &SignedGraph, point: &[i64]) -> Result<BigInt> {
    let flat = localization_flat(g, point)?;
    multiplicity_of_flat(g, &flat)
}
