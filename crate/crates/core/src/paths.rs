//! Signed paths from integer compositions and the distinguishing
//! experiment: does the chromatic signed-symmetric function separate
//! non-isomorphic signed paths? Fingerprints are the canonical line
//! serializations of `X`, computed in parallel over reversal classes.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::chromatic::{self, DEFAULT_SUBSET_EDGE_CAP};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::ssym::SSymFunction;

/// Search cap: `n` above this is refused unless raised explicitly.
pub const DEFAULT_PATH_VERTEX_CAP: usize = 12;

/// A composition: a nonempty list of positive parts. `P_α` strings together
/// all-positive paths of the part sizes, joined by single negative edges.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(Error::InvalidGraph("composition must be nonempty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidGraph(
                "composition parts must be positive".into(),
            ));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        // Nonempty by construction.
        false
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Weakly increases, then weakly decreases.
    pub fn is_unimodal(&self) -> bool {
        let a = &self.0;
        let mut i = 0;
        while i + 1 < a.len() && a[i] <= a[i + 1] {
            i += 1;
        }
        while i + 1 < a.len() && a[i] >= a[i + 1] {
            i += 1;
        }
        i == a.len() - 1
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The signed path `P_α`: vertices `1..=Σα`, consecutive positive edges
/// inside each block, one negative edge between consecutive blocks.
pub fn build_path(alpha: &Composition) -> SignedGraph {
    let n = alpha.total();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut v = 1;
    for (k, &part) in alpha.parts().iter().enumerate() {
        if k > 0 {
            neg.push((v - 1, v));
        }
        for w in v..v + part - 1 {
            pos.push((w, w + 1));
        }
        v += part;
    }
    SignedGraph::new(n, pos, neg, []).expect("paths are valid graphs")
}

/// `P_α` and `P_β` are isomorphic iff the compositions agree up to reversal.
pub fn path_isomorphic(alpha: &Composition, beta: &Composition) -> bool {
    alpha == beta || *alpha == beta.reversed()
}

/// All `2^{n-1}` compositions of `n`, in cut-set order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return Vec::new();
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for cut in 0..n - 1 {
                if mask >> cut & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition(parts)
        })
        .collect()
}

/// Outcome of the distinguishing experiment at one vertex count.
#[derive(Clone, Debug)]
pub struct CollisionReport {
    pub n: usize,
    /// Number of reversal classes examined.
    pub class_count: usize,
    /// Fingerprint groups with more than one class.
    pub groups: Vec<Vec<Composition>>,
    /// Groups containing a pair of non-isomorphic compositions.
    pub violations: Vec<Vec<Composition>>,
}

impl CollisionReport {
    /// `n=<n> classes=<k> collisions=<j>`, then one line per violating
    /// group.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "n={} classes={} collisions={}",
            self.n,
            self.class_count,
            self.violations.len()
        )
        .unwrap();
        for group in &self.violations {
            let items: Vec<String> = group.iter().map(Composition::to_string).collect();
            writeln!(out, "{}", items.join(" ")).unwrap();
        }
        out
    }
}

/// The collision fingerprint of one signed path.
pub fn fingerprint(alpha: &Composition) -> SSymFunction {
    chromatic::x_subset(&build_path(alpha), DEFAULT_SUBSET_EDGE_CAP)
        .expect("path edge count is below the subset cap")
}

/// Groups the reversal classes of compositions of `n` by the serialized
/// fingerprint of `X_{P_α}` and reports groups that merge distinct classes.
pub fn search_collisions(n: usize, cap: usize) -> Result<CollisionReport> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "path search vertices",
            cap,
            actual: n,
        });
    }
    let reps: Vec<Composition> = compositions_of(n)
        .into_iter()
        .filter(|c| *c <= c.reversed())
        .collect();
    let class_count = reps.len();
    let mut keyed: Vec<(String, Composition)> = reps
        .into_par_iter()
        .map(|c| (fingerprint(&c).serialize(), c))
        .collect();
    keyed.sort();
    let mut grouped: BTreeMap<String, Vec<Composition>> = BTreeMap::new();
    for (key, c) in keyed {
        grouped.entry(key).or_default().push(c);
    }
    let groups: Vec<Vec<Composition>> = grouped.into_values().filter(|g| g.len() > 1).collect();
    let violations = groups
        .iter()
        .filter(|g| {
            g.iter()
                .enumerate()
                .any(|(i, a)| g[i + 1..].iter().any(|b| !path_isomorphic(a, b)))
        })
        .cloned()
        .collect();
    Ok(CollisionReport {
        n,
        class_count,
        groups,
        violations,
    })
}

/// Counts, for each `(r, p)`, the edge subsets whose spanning forest has
/// `r` components of which `p` contain no negative edge — read off the
/// fingerprint: every key of `X_{P_α}` has `u = 0`, `r` columns, and `p`
/// columns with a zero entry, and its coefficient magnitude counts subsets.
pub fn block_statistics(alpha: &Composition) -> BTreeMap<(usize, usize), BigInt> {
    let mut out: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for (key, coeff) in fingerprint(alpha).terms() {
        debug_assert_eq!(key.u(), 0, "subsets of a signed tree are balanced");
        let r = key.columns().len();
        let p = key.columns().iter().filter(|&&(_, b)| b == 0).count();
        *out.entry((r, p)).or_default() += coeff.abs();
    }
    out
}

/// The same statistics by direct enumeration of edge subsets; the
/// independent side of the fingerprint check.
pub fn block_statistics_enumerated(alpha: &Composition) -> BTreeMap<(usize, usize), BigInt> {
    let g = build_path(alpha);
    let edges = g.edges();
    let mut out: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for mask in 0u64..1 << edges.len() {
        let subset: std::collections::BTreeSet<_> = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let d = g.decompose(&subset).expect("subset of own edges");
        assert!(d.unbalanced_vertices.is_empty());
        let r = d.balanced_parts.len();
        let p = d
            .balanced_parts
            .iter()
            .filter(|(_, b)| b.is_empty())
            .count();
        *out.entry((r, p)).or_default() += BigInt::from(1);
    }
    out
}

/// Structure check for the collision groups: no violating pair may have
/// both members of length at most four, and none may have both unimodal.
#[derive(Clone, Debug)]
pub struct MainTheoremCheck {
    pub report: CollisionReport,
    pub short_length_pairs: Vec<(Composition, Composition)>,
    pub unimodal_pairs: Vec<(Composition, Composition)>,
}

impl MainTheoremCheck {
    pub fn passed(&self) -> bool {
        self.short_length_pairs.is_empty() && self.unimodal_pairs.is_empty()
    }
}

pub fn verify_main_theorem(n: usize, cap: usize) -> Result<MainTheoremCheck> {
    let report = search_collisions(n, cap)?;
    let mut short_length_pairs = Vec::new();
    let mut unimodal_pairs = Vec::new();
    for group in &report.violations {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                if path_isomorphic(a, b) {
                    continue;
                }
                if a.len() <= 4 && b.len() <= 4 {
                    short_length_pairs.push((a.clone(), b.clone()));
                }
                if a.is_unimodal() && b.is_unimodal() {
                    unimodal_pairs.push((a.clone(), b.clone()));
                }
            }
        }
    }
    Ok(MainTheoremCheck {
        report,
        short_length_pairs,
        unimodal_pairs,
    })
}
