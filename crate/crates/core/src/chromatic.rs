//! Chromatic signed-symmetric functions: the signed edge-subset expansion,
//! the Möbius-weighted flat expansions of `X` and `X̄`, the reciprocity check
//! `ω X = X̄`, Zaslavsky's two chromatic polynomials, the projection to the
//! ordinary chromatic symmetric function, and the single-column
//! connectivity certificate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::flats::{self, DEFAULT_FLAT_EDGE_CAP};
use crate::graph::SignedGraph;
use crate::poly::{self, IntPolynomial};
use crate::ssym::{SSymFunction, SymFunction};

/// Default bound on `|E|` for the `2^|E|` edge-subset expansion.
pub const DEFAULT_SUBSET_EDGE_CAP: usize = 24;

/// `X_Γ = Σ_{S ⊆ E} (-1)^{|S|} p_{type(S)}`, summed over all edge subsets.
pub fn x_subset(g: &SignedGraph, cap_edges: usize) -> Result<SSymFunction> {
    let edges = g.edges();
    if edges.len() > cap_edges {
        return Err(Error::CapExceeded {
            what: "subset expansion edges",
            cap: cap_edges,
            actual: edges.len(),
        });
    }
    let mut table = SSymFunction::zero();
    let mut masked = Vec::with_capacity(edges.len());
    for mask in 0u64..(1u64 << edges.len()) {
        masked.clear();
        masked.extend(
            edges
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        );
        let sign = if masked.len() % 2 == 0 { 1 } else { -1 };
        let key = g.subset_type_unchecked(masked.iter().copied());
        table = table.add(&SSymFunction::from_terms([(key, BigInt::from(sign))]));
    }
    Ok(table)
}

/// `X_Γ = Σ_F μ(0̂, F) p_{type(F)}` over the flat lattice.
pub fn x_flats(g: &SignedGraph, cap_edges: usize) -> Result<SSymFunction> {
    let lattice = flats::enumerate_flats(g, cap_edges)?;
    Ok(SSymFunction::from_terms(
        lattice.iter().map(|(f, mu)| (f.ptype.clone(), mu.clone())),
    ))
}

/// `X̄_Γ = Σ_F |μ(0̂, F)| p_{type(F)}` over the flat lattice.
pub fn xbar_flats(g: &SignedGraph, cap_edges: usize) -> Result<SSymFunction> {
    let lattice = flats::enumerate_flats(g, cap_edges)?;
    Ok(SSymFunction::from_terms(lattice.iter().map(|(f, mu)| {
        (f.ptype.clone(), BigInt::from(mu.magnitude().clone()))
    })))
}

/// Checks `ω X_Γ = X̄_Γ` exactly, with `X` from the subset route and `X̄`
/// from the flat route.
pub fn reciprocity_check(g: &SignedGraph, cap_edges: usize) -> Result<bool> {
    Ok(x_subset(g, cap_edges)?.omega() == xbar_flats(g, DEFAULT_FLAT_EDGE_CAP.max(cap_edges))?)
}

/// Zaslavsky's chromatic and zero-free chromatic polynomials, recovered by
/// exact interpolation: `χ(2n+1)` counts proper colorings in `[-n, n]` and
/// `χ*(2n)` counts the zero-free ones, so the smallest legal arguments of
/// each parity pin down the two monic degree-`ℓ` polynomials.
pub fn chromatic_polynomials(
    g: &SignedGraph,
    cap_edges: usize,
) -> Result<(IntPolynomial, IntPolynomial)> {
    let x = x_subset(g, cap_edges)?;
    let l = g.n_vertices();
    let rat = |v: BigInt| BigRational::from(v);

    let chi_points: Vec<_> = (0..=l)
        .map(|n| (rat(BigInt::from(2 * n + 1)), rat(x.specialize(n, false))))
        .collect();
    let chi = poly::into_int_polynomial(poly::lagrange_interpolate(&chi_points))?;

    let star_points: Vec<_> = (1..=l + 1)
        .map(|n| (rat(BigInt::from(2 * n)), rat(x.specialize(n, true))))
        .collect();
    let chi_star = poly::into_int_polynomial(poly::lagrange_interpolate(&star_points))?;

    for (name, p) in [("chromatic", &chi), ("zero-free", &chi_star)] {
        if !p.is_monic_of_degree(l) {
            return Err(Error::Interpolation(format!(
                "{name} polynomial is not monic of degree {l}: {p}"
            )));
        }
    }
    Ok((chi, chi_star))
}

/// `π(X_Γ)`, the ordinary chromatic symmetric function of the positive part.
pub fn project_positive(g: &SignedGraph, cap_edges: usize) -> Result<SymFunction> {
    Ok(x_subset(g, cap_edges)?.pi())
}

/// Connectivity certificate read off `X`: a connected graph has a maximal
/// balanced flat with connected spanning subgraph, so `X` carries a nonzero
/// coefficient on some single-column key `(0, [(a, b)])` with `a + b = n`;
/// conversely such a key needs a spanning connected balanced subgraph.
pub fn connectivity_certificate(g: &SignedGraph, cap_edges: usize) -> Result<bool> {
    let n = g.n_vertices();
    let x = x_subset(g, cap_edges)?;
    let certified = x
        .terms()
        .any(|(key, _)| key.u() == 0 && key.columns().len() == 1 && key.degree() == n);
    Ok(certified)
}

/// Everything the CLI reports for one graph.
#[derive(Clone, Debug)]
pub struct ChromaticReport {
    pub graph_id: String,
    pub x: SSymFunction,
    pub xbar: SSymFunction,
    pub omega_check: bool,
    pub chrom_poly: IntPolynomial,
    pub zero_free_poly: IntPolynomial,
}

impl ChromaticReport {
    pub fn compute(graph_id: impl Into<String>, g: &SignedGraph, cap_edges: usize) -> Result<Self> {
        let x = x_subset(g, cap_edges)?;
        let xbar = xbar_flats(g, DEFAULT_FLAT_EDGE_CAP.max(cap_edges))?;
        let omega_check = x.omega() == xbar;
        let (chrom_poly, zero_free_poly) = chromatic_polynomials(g, cap_edges)?;
        Ok(ChromaticReport {
            graph_id: graph_id.into(),
            x,
            xbar,
            omega_check,
            chrom_poly,
            zero_free_poly,
        })
    }
}

/// Brute-force count of proper colorings `V -> [-n, n]`, zero-free if asked.
/// Independent oracle for [`SSymFunction::specialize`] on `x_subset`.
pub fn count_proper_colorings(g: &SignedGraph, n: usize, zero_free: bool) -> BigInt {
    let l = g.n_vertices();
    let mut total = BigInt::from(0u32);
    let mut coloring = vec![-(n as i64); l];
    loop {
        let proper = (!zero_free || coloring.iter().all(|&c| c != 0))
            && g.pos_edges()
                .iter()
                .all(|&(i, j)| coloring[i - 1] != coloring[j - 1])
            && g.neg_edges()
                .iter()
                .all(|&(i, j)| coloring[i - 1] != -coloring[j - 1])
            && g.loops().iter().all(|&v| coloring[v - 1] != 0);
        if proper {
            total += BigInt::one();
        }
        let mut k = 0;
        while k < l {
            coloring[k] += 1;
            if coloring[k] <= n as i64 {
                break;
            }
            coloring[k] = -(n as i64);
            k += 1;
        }
        if k == l {
            break;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::PartitionType;
    use num_traits::Zero;

    fn pt(u: usize, cols: &[(usize, usize)]) -> PartitionType {
        PartitionType::new(u, cols.iter().copied()).unwrap()
    }

    const CAP: usize = DEFAULT_SUBSET_EDGE_CAP;

    #[test]
    fn x_of_tiny_graphs() {
        let one_vertex = SignedGraph::empty(1);
        assert_eq!(
            x_subset(&one_vertex, CAP).unwrap(),
            SSymFunction::power_sum(pt(0, &[(1, 0)]))
        );

        let looped = SignedGraph::new(1, [], [], [1]).unwrap();
        let expected = SSymFunction::from_terms([
            (pt(0, &[(1, 0)]), BigInt::from(1)),
            (pt(1, &[]), BigInt::from(-1)),
        ]);
        assert_eq!(x_subset(&looped, CAP).unwrap(), expected);

        let neg = SignedGraph::new(2, [], [(1, 2)], []).unwrap();
        let expected = SSymFunction::from_terms([
            (pt(0, &[(1, 0), (1, 0)]), BigInt::from(1)),
            (pt(0, &[(1, 1)]), BigInt::from(-1)),
        ]);
        assert_eq!(x_subset(&neg, CAP).unwrap(), expected);
    }

    #[test]
    fn subset_cap_enforced() {
        let g = SignedGraph::new(2, [(1, 2)], [(1, 2)], [1]).unwrap();
        assert!(matches!(
            x_subset(&g, 2),
            Err(Error::CapExceeded { actual: 3, .. })
        ));
    }

    #[test]
    fn flat_route_on_positive_edge() {
        let g = SignedGraph::new(2, [(1, 2)], [], []).unwrap();
        let x = SSymFunction::from_terms([
            (pt(0, &[(1, 0), (1, 0)]), BigInt::from(1)),
            (pt(0, &[(2, 0)]), BigInt::from(-1)),
        ]);
        let xbar = SSymFunction::from_terms([
            (pt(0, &[(1, 0), (1, 0)]), BigInt::from(1)),
            (pt(0, &[(2, 0)]), BigInt::from(1)),
        ]);
        assert_eq!(x_flats(&g, CAP).unwrap(), x);
        assert_eq!(x_subset(&g, CAP).unwrap(), x);
        assert_eq!(xbar_flats(&g, CAP).unwrap(), xbar);
        assert!(reciprocity_check(&g, CAP).unwrap());
    }

    #[test]
    fn edgeless_graphs_are_fixed_by_omega() {
        for n in 0..4 {
            let g = SignedGraph::empty(n);
            let x = x_subset(&g, CAP).unwrap();
            assert_eq!(x, x_flats(&g, CAP).unwrap());
            assert_eq!(x, xbar_flats(&g, CAP).unwrap());
            assert!(reciprocity_check(&g, CAP).unwrap());
        }
    }

    #[test]
    fn chromatic_polynomials_of_named_graphs() {
        let k3 = SignedGraph::new(3, [(1, 2), (1, 3), (2, 3)], [], []).unwrap();
        let (chi, _) = chromatic_polynomials(&k3, CAP).unwrap();
        assert_eq!(chi.to_string(), "0 2 -3 1");

        let p3 = SignedGraph::new(3, [(1, 2), (2, 3)], [], []).unwrap();
        let (chi, _) = chromatic_polynomials(&p3, CAP).unwrap();
        // t(t-1)^2
        assert_eq!(chi.to_string(), "0 1 -2 1");

        let looped = SignedGraph::new(1, [], [], [1]).unwrap();
        let (chi, chi_star) = chromatic_polynomials(&looped, CAP).unwrap();
        assert_eq!(chi.to_string(), "-1 1");
        assert_eq!(chi_star.to_string(), "0 1");
    }

    #[test]
    fn specialize_counts_colorings() {
        let graphs = [
            SignedGraph::new(2, [(1, 2)], [(1, 2)], [1]).unwrap(),
            SignedGraph::new(3, [(1, 2), (2, 3)], [(1, 3)], [2]).unwrap(),
        ];
        for g in graphs {
            let x = x_subset(&g, CAP).unwrap();
            for n in 0..3 {
                assert_eq!(x.specialize(n, false), count_proper_colorings(&g, n, false));
                assert_eq!(x.specialize(n, true), count_proper_colorings(&g, n, true));
            }
        }
    }

    #[test]
    fn projection_examples() {
        let neg = SignedGraph::new(2, [], [(1, 2)], []).unwrap();
        assert_eq!(
            project_positive(&neg, CAP).unwrap(),
            SymFunction::power_sum([1, 1])
        );

        let pos = SignedGraph::new(2, [(1, 2)], [], []).unwrap();
        let expected = SymFunction::from_terms([
            (vec![1, 1], BigRational::one()),
            (vec![2], -BigRational::one()),
        ]);
        assert_eq!(project_positive(&pos, CAP).unwrap(), expected);

        let looped = SignedGraph::new(1, [], [], [1]).unwrap();
        assert_eq!(
            project_positive(&looped, CAP).unwrap(),
            SymFunction::power_sum([1])
        );
    }

    #[test]
    fn connectivity_certificate_examples() {
        let neg = SignedGraph::new(2, [], [(1, 2)], []).unwrap();
        assert!(connectivity_certificate(&neg, CAP).unwrap());

        let two_isolated = SignedGraph::empty(2);
        assert!(!connectivity_certificate(&two_isolated, CAP).unwrap());

        let looped = SignedGraph::new(1, [], [], [1]).unwrap();
        assert!(connectivity_certificate(&looped, CAP).unwrap());

        // Disconnected but all components unbalanced: the x0-power key is
        // nonzero, the single-column certificate must still say no.
        let two_loops = SignedGraph::new(2, [], [], [1, 2]).unwrap();
        let x = x_subset(&two_loops, CAP).unwrap();
        assert!(!x.coeff(&pt(2, &[])).is_zero());
        assert!(!connectivity_certificate(&two_loops, CAP).unwrap());
    }

    #[test]
    fn multiplicativity_under_disjoint_union() {
        let a = SignedGraph::new(2, [(1, 2)], [], [1]).unwrap();
        let b = SignedGraph::new(2, [], [(1, 2)], []).unwrap();
        let xa = x_subset(&a, CAP).unwrap();
        let xb = x_subset(&b, CAP).unwrap();
        let xu = x_subset(&a.disjoint_union(&b), CAP).unwrap();
        assert_eq!(xu, xa.mul(&xb));
    }

    #[test]
    fn report_is_consistent() {
        let g = SignedGraph::new(2, [(1, 2)], [(1, 2)], []).unwrap();
        let report = ChromaticReport::compute("pm-pair", &g, CAP).unwrap();
        assert!(report.omega_check);
        assert_eq!(report.x, x_subset(&g, CAP).unwrap());
        assert_eq!(report.chrom_poly.to_string(), "1 -2 1");
    }
}
