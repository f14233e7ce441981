//! Shared helpers for the integration suites: the exhaustive test corpus,
//! independent re-implementations used as oracles (type enumeration, the
//! ordinary chromatic symmetric function, deletion-contraction, structural
//! circuit enumeration), and seeded random tables.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use signed_chroma::graph::EdgeRef;
use signed_chroma::poly::IntPolynomial;
use signed_chroma::{PartitionType, SSymFunction, SignedGraph, SymFunction};

/// Every signed graph on three vertices: each vertex pair independently
/// carries none, a positive, a negative, or both edges; each vertex may
/// carry a loop. 4^3 * 2^3 = 512 graphs.
pub fn all_graphs_3() -> Vec<SignedGraph> {
    let pairs = [(1, 2), (1, 3), (2, 3)];
    let mut out = Vec::with_capacity(512);
    for code in 0..(4usize.pow(3) * 2usize.pow(3)) {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut c = code;
        for &p in &pairs {
            match c % 4 {
                1 => pos.push(p),
                2 => neg.push(p),
                3 => {
                    pos.push(p);
                    neg.push(p);
                }
                _ => {}
            }
            c /= 4;
        }
        let loops: Vec<usize> = (1..=3).filter(|v| c >> (v - 1) & 1 == 1).collect();
        out.push(SignedGraph::new(3, pos, neg, loops).unwrap());
    }
    assert_eq!(out.len(), 512);
    out
}

/// Seeded sample of signed graphs on four vertices.
pub fn random_graphs_4(count: usize, seed: u64) -> Vec<SignedGraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    (0..count)
        .map(|_| {
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for &p in &pairs {
                match rng.random_range(0..4) {
                    1 => pos.push(p),
                    2 => neg.push(p),
                    3 => {
                        pos.push(p);
                        neg.push(p);
                    }
                    _ => {}
                }
            }
            let loops: Vec<usize> = (1..=4).filter(|_| rng.random_bool(0.5)).collect();
            SignedGraph::new(4, pos, neg, loops).unwrap()
        })
        .collect()
}

/// The full acceptance corpus: all graphs on 3 vertices plus 200 seeded
/// graphs on 4 vertices.
pub fn corpus() -> Vec<SignedGraph> {
    let mut out = all_graphs_3();
    out.extend(random_graphs_4(200, 0x5eed_cafe));
    out
}

/// Independent enumeration of canonical partition types of exact degree `d`:
/// brute force over small tuples, canonicalized and deduplicated.
pub fn types_of_degree(d: usize) -> Vec<PartitionType> {
    let mut out = BTreeSet::new();
    // Choose u, then spread d - u over up to d columns by composition.
    for u in 0..=d {
        let rest = d - u;
        spread(rest, &mut Vec::new(), &mut |cols| {
            out.insert(PartitionType::new(u, cols.iter().copied()).unwrap());
        });
    }
    out.into_iter().collect()
}

fn spread(rem: usize, acc: &mut Vec<(usize, usize)>, emit: &mut impl FnMut(&[(usize, usize)])) {
    if rem == 0 {
        emit(acc);
        return;
    }
    for total in 1..=rem {
        for a in 0..=total {
            acc.push((a, total - a));
            spread(rem - total, acc, emit);
            acc.pop();
        }
    }
}

pub fn types_up_to(d: usize) -> Vec<PartitionType> {
    (0..=d).flat_map(types_of_degree).collect()
}

/// Random integer table over types of degree at most `max_degree`.
pub fn random_ssym(rng: &mut StdRng, max_degree: usize) -> SSymFunction {
    let types = types_up_to(max_degree);
    let n_terms = rng.random_range(1..=5);
    SSymFunction::from_terms((0..n_terms).map(|_| {
        let key = types[rng.random_range(0..types.len())].clone();
        let coeff = loop {
            let c = rng.random_range(-9i64..=9);
            if c != 0 {
                break c;
            }
        };
        (key, BigInt::from(coeff))
    }))
}

/// Random integer-coefficient ordinary symmetric function, power-sum basis.
pub fn random_sym(rng: &mut StdRng, max_degree: usize) -> SymFunction {
    let mut partitions: Vec<Vec<usize>> = vec![vec![]];
    for d in 1..=max_degree {
        partitions.extend(integer_partitions(d));
    }
    let n_terms = rng.random_range(1..=5);
    SymFunction::from_terms((0..n_terms).filter_map(|_| {
        let parts = partitions[rng.random_range(0..partitions.len())].clone();
        if parts.is_empty() {
            return None;
        }
        let coeff = rng.random_range(-9i64..=9);
        Some((parts, BigRational::from(BigInt::from(coeff))))
    }))
}

pub fn integer_partitions(d: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            acc.push(part);
            go(rem - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Stanley's edge-subset expansion of the ordinary chromatic symmetric
/// function of a simple graph: `Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}` with `λ(S)`
/// the component sizes of `(V, S)`. Oracle for the projection of `X`.
pub fn stanley_csf(n: usize, edges: &BTreeSet<(usize, usize)>) -> SymFunction {
    let edge_list: Vec<(usize, usize)> = edges.iter().copied().collect();
    let mut out = SymFunction::zero();
    for mask in 0u64..1 << edge_list.len() {
        let chosen = edge_list
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        let sizes = component_sizes(n, chosen);
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        out.add_term(sizes, BigRational::from(BigInt::from(sign)));
    }
    out
}

fn component_sizes(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            parent[v] = find(parent, parent[v]);
        }
        parent[v]
    }
    for (i, j) in edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 1..=n {
        *sizes.entry(find(&mut parent, v)).or_default() += 1;
    }
    let mut out: Vec<usize> = sizes.into_values().collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Ordinary chromatic polynomial of a simple graph by deletion-contraction.
/// Oracle for the characteristic polynomial of all-positive signed graphs.
pub fn deletion_contraction_chromatic(n: usize, edges: &BTreeSet<(usize, usize)>) -> IntPolynomial {
    if let Some(&(i, j)) = edges.iter().next() {
        let mut deleted = edges.clone();
        deleted.remove(&(i, j));
        let del = deletion_contraction_chromatic(n, &deleted);

        // Contract j into i: relabel j -> i, drop self-loops, merge parallels,
        // then compact labels above j.
        let contracted: BTreeSet<(usize, usize)> = deleted
            .iter()
            .filter_map(|&(a, b)| {
                let a = if a == j { i } else { a };
                let b = if b == j { i } else { b };
                (a != b).then(|| {
                    let (a, b) = (a.min(b), a.max(b));
                    (if a > j { a - 1 } else { a }, if b > j { b - 1 } else { b })
                })
            })
            .collect();
        let con = deletion_contraction_chromatic(n - 1, &contracted);
        let mut coeffs: Vec<BigInt> = del.coeffs().to_vec();
        for (k, c) in con.coeffs().iter().enumerate() {
            coeffs[k] -= c;
        }
        IntPolynomial::new(coeffs)
    } else {
        let mut coeffs = vec![BigInt::from(0); n + 1];
        coeffs[n] = BigInt::from(1);
        IntPolynomial::new(coeffs)
    }
}

/// Structural circuit enumeration: balanced cycles, tight handcuffs, and
/// loose handcuffs, recognized from degrees and connectivity alone.
pub fn circuits_of(g: &SignedGraph) -> Vec<BTreeSet<EdgeRef>> {
    let edges = g.edges();
    let mut out = Vec::new();
    for mask in 1u64..1 << edges.len() {
        let subset: Vec<EdgeRef> = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if is_circuit(&subset) {
            out.push(subset.into_iter().collect());
        }
    }
    out
}

fn endpoints(e: EdgeRef) -> Vec<usize> {
    match e {
        EdgeRef::Positive(i, j) | EdgeRef::Negative(i, j) => vec![i, j],
        EdgeRef::Loop(v) => vec![v],
    }
}

fn support(edges: &[EdgeRef]) -> BTreeSet<usize> {
    edges.iter().flat_map(|&e| endpoints(e)).collect()
}

fn is_connected_on_support(edges: &[EdgeRef]) -> bool {
    let verts = support(edges);
    let Some(&start) = verts.first() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &e in edges {
            let ends = endpoints(e);
            if ends.contains(&v) {
                for w in ends {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
    }
    seen == verts
}

/// A cycle: a single loop, the positive-negative pair on one vertex pair, or
/// a connected 2-regular edge set of length at least three.
fn is_cycle(edges: &[EdgeRef]) -> bool {
    match edges {
        [EdgeRef::Loop(_)] => true,
        [a, b] => {
            let (ea, eb) = (endpoints(*a), endpoints(*b));
            ea.len() == 2 && ea == eb && *a != *b
        }
        _ => {
            if edges.len() < 3 || edges.iter().any(|e| matches!(e, EdgeRef::Loop(_))) {
                return false;
            }
            let verts = support(edges);
            if verts.len() != edges.len() {
                return false;
            }
            let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
            for &e in edges {
                for v in endpoints(e) {
                    *degree.entry(v).or_default() += 1;
                }
            }
            degree.values().all(|&d| d == 2) && is_connected_on_support(edges)
        }
    }
}

fn is_unbalanced_cycle(edges: &[EdgeRef]) -> bool {
    if !is_cycle(edges) {
        return false;
    }
    if edges.len() <= 2 {
        return true; // loops and 2-cycles are unbalanced by definition
    }
    let negs = edges
        .iter()
        .filter(|e| matches!(e, EdgeRef::Negative(..)))
        .count();
    negs % 2 == 1
}

fn is_balanced_cycle(edges: &[EdgeRef]) -> bool {
    is_cycle(edges) && !is_unbalanced_cycle(edges)
}

/// A simple path with at least one edge: no loops, two endpoints of degree
/// one, interior of degree two, connected, one fewer edge than vertices.
fn path_endpoints(edges: &[EdgeRef]) -> Option<(usize, usize)> {
    if edges.is_empty() || edges.iter().any(|e| matches!(e, EdgeRef::Loop(_))) {
        return None;
    }
    let verts = support(edges);
    if edges.len() + 1 != verts.len() || !is_connected_on_support(edges) {
        return None;
    }
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in edges {
        for v in endpoints(e) {
            *degree.entry(v).or_default() += 1;
        }
    }
    let ones: Vec<usize> = degree
        .iter()
        .filter(|&(_, &d)| d == 1)
        .map(|(&v, _)| v)
        .collect();
    if ones.len() == 2 && degree.values().all(|&d| d <= 2) {
        Some((ones[0], ones[1]))
    } else {
        None
    }
}

fn is_circuit(edges: &[EdgeRef]) -> bool {
    if is_balanced_cycle(edges) {
        return true;
    }
    let k = edges.len();
    // Tight handcuff: two unbalanced cycles sharing exactly one vertex.
    for mask in 1u64..(1 << k) - 1 {
        let mut c1: Vec<EdgeRef> = Vec::new();
        let mut c2: Vec<EdgeRef> = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                c1.push(e);
            } else {
                c2.push(e);
            }
        }
        if is_unbalanced_cycle(&c1) && is_unbalanced_cycle(&c2) {
            let shared = support(&c1).intersection(&support(&c2)).count();
            if shared == 1 {
                return true;
            }
        }
    }
    // Loose handcuff: two vertex-disjoint unbalanced cycles joined by a path
    // whose interior avoids both.
    for assign in 0..3u32.pow(k as u32) {
        let mut c1 = Vec::new();
        let mut c2 = Vec::new();
        let mut path = Vec::new();
        let mut a = assign;
        for &e in edges {
            match a % 3 {
                0 => c1.push(e),
                1 => c2.push(e),
                _ => path.push(e),
            }
            a /= 3;
        }
        if !is_unbalanced_cycle(&c1) || !is_unbalanced_cycle(&c2) {
            continue;
        }
        let (v1, v2) = (support(&c1), support(&c2));
        if v1.intersection(&v2).next().is_some() {
            continue;
        }
        let Some((e1, e2)) = path_endpoints(&path) else {
            continue;
        };
        let joins =
            (v1.contains(&e1) && v2.contains(&e2)) || (v1.contains(&e2) && v2.contains(&e1));
        if !joins {
            continue;
        }
        let interior_clean = support(&path)
            .iter()
            .filter(|v| **v != e1 && **v != e2)
            .all(|v| !v1.contains(v) && !v2.contains(v));
        if interior_clean {
            return true;
        }
    }
    false
}

/// Flats recognized from the circuit side: `S` is a flat iff no circuit
/// leaves exactly one edge outside `S`.
pub fn flats_by_circuits(g: &SignedGraph) -> BTreeSet<BTreeSet<EdgeRef>> {
    let edges = g.edges();
    let circuits = circuits_of(g);
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << edges.len() {
        let subset: BTreeSet<EdgeRef> = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let closed = circuits.iter().all(|c| c.difference(&subset).count() != 1);
        if closed {
            out.insert(subset);
        }
    }
    out
}
