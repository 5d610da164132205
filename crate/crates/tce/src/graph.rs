//! Graph value, edit sets, twin classes and neighborhood-nesting primitives.

use std::collections::BTreeSet;
use std::fmt;

/// Undirected simple graph over dense 0-based vertex ids.
///
/// Adjacency is kept as sorted sets so subset tests run in O(deg).
/// Treat a constructed graph as an immutable value: operations return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange(usize),
    SelfLoop(usize),
    /// A completion pair that is already an edge, or a deletion pair that is not.
    VariantViolation(usize, usize),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange(v) => write!(f, "vertex {} out of range", v),
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {}", v),
            GraphError::VariantViolation(u, v) => {
                write!(f, "pair ({},{}) violates the variant constraint", u, v)
            }
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { n, adj: vec![BTreeSet::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {}", u);
        assert!(u < self.n && v < self.n, "edge ({},{}) out of range", u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> BTreeSet<usize> {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as (u,v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `s`, relabeled to 0..|s|.
    ///
    /// The returned map sends new ids back to original ids (sorted ascending).
    pub fn induced_subgraph(&self, s: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().copied().collect();
        for &v in &map {
            assert!(v < self.n, "vertex {} out of range", v);
        }
        let mut g = Graph::new(map.len());
        for i in 0..map.len() {
            for j in i + 1..map.len() {
                if self.has_edge(map[i], map[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Remove one vertex, shifting every larger id down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: BTreeSet<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).0
    }

    pub fn is_clique(&self, s: &BTreeSet<usize>) -> bool {
        let vs: Vec<usize> = s.iter().copied().collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !self.has_edge(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_independent(&self, s: &BTreeSet<usize>) -> bool {
        let vs: Vec<usize> = s.iter().copied().collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Which edge modifications a problem variant admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Edit,
    Complete,
    Delete,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Edit => "edit",
            Variant::Complete => "complete",
            Variant::Delete => "delete",
        }
    }
}

/// Set of unordered vertex pairs, applied to a graph by symmetric difference.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EditSet {
    pairs: BTreeSet<(usize, usize)>,
    pub variant: Option<Variant>,
}

impl EditSet {
    pub fn new() -> EditSet {
        EditSet::default()
    }

    pub fn with_variant(variant: Variant) -> EditSet {
        EditSet { pairs: BTreeSet::new(), variant: Some(variant) }
    }

    fn norm(u: usize, v: usize) -> (usize, usize) {
        assert!(u != v, "self-pair at {}", u);
        if u < v { (u, v) } else { (v, u) }
    }

    pub fn insert(&mut self, u: usize, v: usize) {
        self.pairs.insert(Self::norm(u, v));
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        self.pairs.remove(&Self::norm(u, v));
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&Self::norm(u, v))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn union(&self, other: &EditSet) -> EditSet {
        let mut out = self.clone();
        for (u, v) in other.iter() {
            out.insert(u, v);
        }
        out
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> EditSet {
        let mut e = EditSet::new();
        for &(u, v) in pairs {
            e.insert(u, v);
        }
        e
    }

    /// True when every pair respects the variant against `g`:
    /// completion touches only non-edges, deletion only edges.
    pub fn respects_variant(&self, g: &Graph, variant: Variant) -> bool {
        match variant {
            Variant::Edit => true,
            Variant::Complete => self.iter().all(|(u, v)| !g.has_edge(u, v)),
            Variant::Delete => self.iter().all(|(u, v)| g.has_edge(u, v)),
        }
    }
}

/// G △ F: the edge set becomes the symmetric difference with the pairs of `f`.
pub fn apply_edits(g: &Graph, f: &EditSet) -> Result<Graph, GraphError> {
    for (u, v) in f.iter() {
        if u >= g.n() || v >= g.n() {
            return Err(GraphError::VertexOutOfRange(u.max(v)));
        }
        match f.variant {
            Some(Variant::Complete) if g.has_edge(u, v) => {
                return Err(GraphError::VariantViolation(u, v))
            }
            Some(Variant::Delete) if !g.has_edge(u, v) => {
                return Err(GraphError::VariantViolation(u, v))
            }
            _ => {}
        }
    }
    let mut out = g.clone();
    for (u, v) in f.iter() {
        if out.has_edge(u, v) {
            out.remove_edge(u, v);
        } else {
            out.add_edge(u, v);
        }
    }
    Ok(out)
}

/// Unchecked symmetric difference, for internal enumeration where the
/// variant constraint is enforced by the caller.
pub fn toggle_edits(g: &Graph, f: &EditSet) -> Graph {
    let mut out = g.clone();
    for (u, v) in f.iter() {
        if out.has_edge(u, v) {
            out.remove_edge(u, v);
        } else {
            out.add_edge(u, v);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    TrueTwin,
    FalseTwin,
}

/// Partition of V into twin classes tc(v): the larger of ttc(v) and ftc(v),
/// false twins winning ties (ties only happen at singletons, where the choice is inert).
#[derive(Debug, Clone)]
pub struct TwinClasses {
    /// Class id of each vertex.
    pub class_of: Vec<usize>,
    /// Members of each class, ascending.
    pub members: Vec<Vec<usize>>,
    pub kinds: Vec<TwinKind>,
}

impl TwinClasses {
    pub fn class_size(&self, v: usize) -> usize {
        self.members[self.class_of[v]].len()
    }
}

pub fn twin_classes(g: &Graph) -> TwinClasses {
    let n = g.n();
    // ttc groups by closed neighborhoods, ftc by open ones.
    let mut by_closed: std::collections::BTreeMap<BTreeSet<usize>, Vec<usize>> = Default::default();
    let mut by_open: std::collections::BTreeMap<BTreeSet<usize>, Vec<usize>> = Default::default();
    for v in 0..n {
        by_closed.entry(g.closed_neighbors(v)).or_default().push(v);
        by_open.entry(g.neighbors(v).clone()).or_default().push(v);
    }
    let mut class_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut kinds = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let ttc = &by_closed[&g.closed_neighbors(v)];
        let ftc = &by_open[g.neighbors(v)];
        let (cls, kind) = if ttc.len() > ftc.len() {
            (ttc.clone(), TwinKind::TrueTwin)
        } else {
            (ftc.clone(), TwinKind::FalseTwin)
        };
        let id = members.len();
        for &u in &cls {
            class_of[u] = id;
        }
        members.push(cls);
        kinds.push(kind);
    }
    TwinClasses { class_of, members, kinds }
}

/// Outcome of comparing the neighborhoods of two vertices for nesting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nesting {
    /// N(u) ⊆ N[v]
    FirstUnderSecond,
    /// N(v) ⊆ N[u]
    SecondUnderFirst,
    Both,
    /// Witnesses u' ∈ N(u)∖N[v] and v' ∈ N(v)∖N[u]; {u,v,u',v'} induces C4, P4 or 2K2.
    Incomparable { u_wit: usize, v_wit: usize },
}

pub fn nesting_compare(g: &Graph, u: usize, v: usize) -> Nesting {
    assert!(u != v);
    let u_wit = g.neighbors(u).iter().copied().find(|&x| x != v && !g.has_edge(x, v));
    let v_wit = g.neighbors(v).iter().copied().find(|&x| x != u && !g.has_edge(x, u));
    match (u_wit, v_wit) {
        (None, None) => Nesting::Both,
        (None, Some(_)) => Nesting::FirstUnderSecond,
        (Some(_), None) => Nesting::SecondUnderFirst,
        (Some(a), Some(b)) => Nesting::Incomparable { u_wit: a, v_wit: b },
    }
}
