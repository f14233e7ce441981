//! Signed graphs: vertices `1..=n`, positive edges, negative edges, and loops.
//! Balance analysis splits an edge subset into unbalanced components (pooled
//! into a vertex set `U`) and balanced components, each of which carries a
//! two-sided vertex split `(A_j, B_j)` with positive edges inside a side and
//! negative edges across.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::PartitionType;

/// A single edge: positive and negative edges join two distinct vertices,
/// a loop sits on one vertex. Endpoints are normalized to `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EdgeRef {
    Positive(usize, usize),
    Negative(usize, usize),
    Loop(usize),
}

impl EdgeRef {
    pub fn positive(i: usize, j: usize) -> Self {
        debug_assert_ne!(i, j);
        EdgeRef::Positive(i.min(j), i.max(j))
    }

    pub fn negative(i: usize, j: usize) -> Self {
        debug_assert_ne!(i, j);
        EdgeRef::Negative(i.min(j), i.max(j))
    }

    pub fn loop_at(v: usize) -> Self {
        EdgeRef::Loop(v)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeRef::Positive(i, j) => write!(f, "+{{{i},{j}}}"),
            EdgeRef::Negative(i, j) => write!(f, "-{{{i},{j}}}"),
            EdgeRef::Loop(v) => write!(f, "o{{{v}}}"),
        }
    }
}

/// A signed graph `(V, E+, E-, L)` on vertices `1..=n_vertices`.
///
/// A pair may carry both a positive and a negative edge (a cycle of length
/// two); parallel edges of the same sign do not exist.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedGraph {
    n_vertices: usize,
    pos_edges: BTreeSet<(usize, usize)>,
    neg_edges: BTreeSet<(usize, usize)>,
    loops: BTreeSet<usize>,
}

/// Split of the vertex set induced by an edge subset: `unbalanced_vertices`
/// pools the vertices of all unbalanced components; each balanced component
/// contributes one `(A_j, B_j)` pair, `A_j` being the side of its smallest
/// vertex. Parts are ordered by smallest contained vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BalanceDecomposition {
    pub unbalanced_vertices: BTreeSet<usize>,
    pub balanced_parts: Vec<(BTreeSet<usize>, BTreeSet<usize>)>,
}

impl SignedGraph {
    /// Builds a graph, validating every invariant.
    pub fn new(
        n_vertices: usize,
        pos: impl IntoIterator<Item = (usize, usize)>,
        neg: impl IntoIterator<Item = (usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut g = SignedGraph {
            n_vertices,
            pos_edges: BTreeSet::new(),
            neg_edges: BTreeSet::new(),
            loops: BTreeSet::new(),
        };
        for (i, j) in pos {
            g.insert_pair(i, j, true)?;
        }
        for (i, j) in neg {
            g.insert_pair(i, j, false)?;
        }
        for v in loops {
            g.check_vertex(v)?;
            if !g.loops.insert(v) {
                return Err(Error::InvalidGraph(format!("duplicate loop at {v}")));
            }
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n_vertices: n,
            pos_edges: BTreeSet::new(),
            neg_edges: BTreeSet::new(),
            loops: BTreeSet::new(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n_vertices {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} out of range 1..={}",
                self.n_vertices
            )));
        }
        Ok(())
    }

    fn insert_pair(&mut self, i: usize, j: usize, positive: bool) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidGraph(format!(
                "self pair {{{i},{j}}} in edge list"
            )));
        }
        let pair = (i.min(j), i.max(j));
        let set = if positive {
            &mut self.pos_edges
        } else {
            &mut self.neg_edges
        };
        if !set.insert(pair) {
            let sign = if positive { '+' } else { '-' };
            return Err(Error::InvalidGraph(format!(
                "duplicate {sign} edge {{{},{}}}",
                pair.0, pair.1
            )));
        }
        Ok(())
    }

    /// Parses the line-oriented graph file format:
    /// `v <n>` first, then `+ <i> <j>`, `- <i> <j>`, `o <i>`; `#` starts a
    /// comment line; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<SignedGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let kind = tokens.next().unwrap();
            let rest: Vec<&str> = tokens.collect();
            let parse_vertex = |tok: &str| -> Result<usize> {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected a positive integer, got `{tok}`"),
                })
            };
            let located = |e: Error| match e {
                Error::Parse { .. } => e,
                other => Error::Parse {
                    line: line_no,
                    msg: other.to_string(),
                },
            };
            match kind {
                "v" => {
                    if graph.is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "duplicate `v` record".into(),
                        });
                    }
                    if rest.len() != 1 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "`v` takes exactly one argument".into(),
                        });
                    }
                    graph = Some(SignedGraph::empty(parse_vertex(rest[0])?));
                }
                "+" | "-" => {
                    let g = graph.as_mut().ok_or(Error::Parse {
                        line: line_no,
                        msg: "`v <n>` must be the first record".into(),
                    })?;
                    if rest.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("`{kind}` takes exactly two arguments"),
                        });
                    }
                    let (i, j) = (parse_vertex(rest[0])?, parse_vertex(rest[1])?);
                    g.insert_pair(i, j, kind == "+").map_err(located)?;
                }
                "o" => {
                    let g = graph.as_mut().ok_or(Error::Parse {
                        line: line_no,
                        msg: "`v <n>` must be the first record".into(),
                    })?;
                    if rest.len() != 1 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "`o` takes exactly one argument".into(),
                        });
                    }
                    let v = parse_vertex(rest[0])?;
                    g.check_vertex(v).map_err(located)?;
                    if !g.loops.insert(v) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("duplicate loop at {v}"),
                        });
                    }
                }
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unknown record `{other}`"),
                    });
                }
            }
        }
        graph.ok_or(Error::Parse {
            line: 0,
            msg: "missing `v <n>` record".into(),
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn pos_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.pos_edges
    }

    pub fn neg_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.neg_edges
    }

    pub fn loops(&self) -> &BTreeSet<usize> {
        &self.loops
    }

    pub fn n_edges(&self) -> usize {
        self.pos_edges.len() + self.neg_edges.len() + self.loops.len()
    }

    /// All edges in canonical order: positive, then negative, then loops,
    /// each block sorted by endpoints. This order indexes sign vectors.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.n_edges());
        out.extend(self.pos_edges.iter().map(|&(i, j)| EdgeRef::Positive(i, j)));
        out.extend(self.neg_edges.iter().map(|&(i, j)| EdgeRef::Negative(i, j)));
        out.extend(self.loops.iter().map(|&v| EdgeRef::Loop(v)));
        out
    }

    pub fn has_edge(&self, e: EdgeRef) -> bool {
        match e {
            EdgeRef::Positive(i, j) => self.pos_edges.contains(&(i, j)),
            EdgeRef::Negative(i, j) => self.neg_edges.contains(&(i, j)),
            EdgeRef::Loop(v) => self.loops.contains(&v),
        }
    }

    fn check_subset<'a>(&self, s: impl IntoIterator<Item = &'a EdgeRef>) -> Result<()> {
        for &e in s {
            if !self.has_edge(e) {
                return Err(Error::NotAnEdge(e));
            }
        }
        Ok(())
    }

    /// Balance decomposition of the spanning subgraph `(V, s)`.
    pub fn decompose(&self, s: &BTreeSet<EdgeRef>) -> Result<BalanceDecomposition> {
        self.check_subset(s)?;
        let state = BalanceState::run(self.n_vertices, s.iter().copied());
        Ok(state.into_decomposition())
    }

    /// The partition type of an edge subset: `u` counts vertices of
    /// unbalanced components, one `(|A_j|, |B_j|)` column per balanced one.
    pub fn subset_type(&self, s: &BTreeSet<EdgeRef>) -> Result<PartitionType> {
        self.check_subset(s)?;
        Ok(self.subset_type_unchecked(s.iter().copied()))
    }

    /// Same as [`subset_type`](Self::subset_type) without membership checks;
    /// the workhorse of the subset expansions.
    pub(crate) fn subset_type_unchecked(
        &self,
        edges: impl IntoIterator<Item = EdgeRef>,
    ) -> PartitionType {
        let state = BalanceState::run(self.n_vertices, edges);
        state.into_type()
    }

    /// True iff every cycle of `(V, s)` is balanced.
    pub fn is_balanced(&self, s: &BTreeSet<EdgeRef>) -> Result<bool> {
        Ok(self.decompose(s)?.unbalanced_vertices.is_empty())
    }

    /// Disjoint union; vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.n_vertices;
        let mut out = self.clone();
        out.n_vertices += other.n_vertices;
        out.pos_edges
            .extend(other.pos_edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        out.neg_edges
            .extend(other.neg_edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        out.loops.extend(other.loops.iter().map(|&v| v + shift));
        out
    }

    /// Connected components, ordered by smallest contained vertex, each
    /// renumbered to `1..=k` preserving the vertex order.
    pub fn connected_components(&self) -> Vec<SignedGraph> {
        let state = BalanceState::run(self.n_vertices, self.edges());
        let mut comps: Vec<BTreeSet<usize>> = Vec::new();
        let mut comp_of_root = vec![usize::MAX; self.n_vertices + 1];
        for v in 1..=self.n_vertices {
            let root = state.root_of(v);
            if comp_of_root[root] == usize::MAX {
                comp_of_root[root] = comps.len();
                comps.push(BTreeSet::new());
            }
            comps[comp_of_root[root]].insert(v);
        }
        comps
            .into_iter()
            .map(|verts| {
                let index: std::collections::BTreeMap<usize, usize> =
                    verts.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
                SignedGraph {
                    n_vertices: verts.len(),
                    pos_edges: self
                        .pos_edges
                        .iter()
                        .filter(|(i, _)| verts.contains(i))
                        .map(|&(i, j)| (index[&i], index[&j]))
                        .collect(),
                    neg_edges: self
                        .neg_edges
                        .iter()
                        .filter(|(i, _)| verts.contains(i))
                        .map(|&(i, j)| (index[&i], index[&j]))
                        .collect(),
                    loops: self
                        .loops
                        .iter()
                        .filter(|v| verts.contains(v))
                        .map(|&v| index[&v])
                        .collect(),
                }
            })
            .collect()
    }
}

/// Union-find over vertices with a sign relative to the root: positive edges
/// join equal sides, negative edges opposite sides; a loop or a sign conflict
/// marks the component unbalanced.
struct BalanceState {
    parent: Vec<usize>,
    // Parity of the path to the parent: 0 same side, 1 opposite side.
    parity: Vec<u8>,
    unbalanced: Vec<bool>,
    n: usize,
}

impl BalanceState {
    fn run(n: usize, edges: impl IntoIterator<Item = EdgeRef>) -> Self {
        let mut st = BalanceState {
            parent: (0..=n).collect(),
            parity: vec![0; n + 1],
            unbalanced: vec![false; n + 1],
            n,
        };
        for e in edges {
            match e {
                EdgeRef::Positive(i, j) => st.union(i, j, 0),
                EdgeRef::Negative(i, j) => st.union(i, j, 1),
                EdgeRef::Loop(v) => {
                    let (r, _) = st.find(v);
                    st.unbalanced[r] = true;
                }
            }
        }
        st
    }

    fn find(&mut self, v: usize) -> (usize, u8) {
        if self.parent[v] == v {
            return (v, 0);
        }
        let (root, par) = self.find(self.parent[v]);
        self.parent[v] = root;
        self.parity[v] ^= par;
        (root, self.parity[v])
    }

    fn union(&mut self, a: usize, b: usize, rel: u8) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb != rel {
                self.unbalanced[ra] = true;
            }
            return;
        }
        // Attach the larger root under the smaller so roots stay canonical.
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop] = keep;
        self.parity[drop] = pa ^ pb ^ rel;
        self.unbalanced[keep] |= self.unbalanced[drop];
    }

    fn root_of(&self, v: usize) -> usize {
        let mut cur = v;
        while self.parent[cur] != cur {
            cur = self.parent[cur];
        }
        cur
    }

    fn classify(mut self) -> (Vec<(usize, usize, u8)>, Vec<bool>) {
        let n = self.n;
        let mut rows = Vec::with_capacity(n);
        for v in 1..=n {
            let (root, par) = self.find(v);
            rows.push((v, root, par));
        }
        (rows, self.unbalanced)
    }

    fn into_decomposition(self) -> BalanceDecomposition {
        let (rows, unbalanced) = self.classify();
        let mut u_set = BTreeSet::new();
        let mut parts: Vec<(usize, BTreeSet<usize>, BTreeSet<usize>)> = Vec::new();
        let mut part_of_root: std::collections::BTreeMap<usize, usize> =
            std::collections::BTreeMap::new();
        for (v, root, par) in rows {
            if unbalanced[root] {
                u_set.insert(v);
                continue;
            }
            let idx = *part_of_root.entry(root).or_insert_with(|| {
                parts.push((par as usize, BTreeSet::new(), BTreeSet::new()));
                parts.len() - 1
            });
            // The first vertex seen in a component is its smallest; its side is A.
            let (a_par, ref mut a, ref mut b) = parts[idx];
            if (par as usize) == a_par {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        // Roots are the smallest vertices of their components, so iterating
        // vertices in order already yields parts sorted by smallest vertex.
        BalanceDecomposition {
            unbalanced_vertices: u_set,
            balanced_parts: parts.into_iter().map(|(_, a, b)| (a, b)).collect(),
        }
    }

    fn into_type(self) -> PartitionType {
        let (rows, unbalanced) = self.classify();
        let mut u = 0usize;
        let mut counts: std::collections::BTreeMap<usize, (usize, usize)> =
            std::collections::BTreeMap::new();
        for (_, root, par) in rows {
            if unbalanced[root] {
                u += 1;
            } else {
                let entry = counts.entry(root).or_insert((0, 0));
                if par == 0 {
                    entry.0 += 1;
                } else {
                    entry.1 += 1;
                }
            }
        }
        PartitionType::new(u, counts.into_values()).expect("components are nonempty")
    }
}
