//! Simple undirected graphs on at most 64 vertices, stored as bitmask rows.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// Largest vertex count a [`Graph`] can hold (one machine word per row).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertices {0} and {1} are adjacent and cannot be identified")]
    AdjacentVertices(VertexId, VertexId),
    #[error("cannot identify vertex {0} with itself")]
    SameVertex(VertexId),
    #[error("vertex set is empty")]
    EmptySet,
}

/// A set of vertex ids, as a 64-bit membership mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All ids in `[0, n)`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: VertexId) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as VertexId)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as VertexId;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexSetIter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<VertexId>::deserialize(deserializer)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex id {bad} out of range")));
        }
        Ok(ids.into_iter().collect())
    }
}

/// Simple undirected graph with vertex ids `0..n`.
///
/// Row `v` of the adjacency holds the neighbourhood of `v` as a bitmask; the
/// relation is kept symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// Result of merging vertices: the new graph plus where each old id went.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identified {
    pub graph: Graph,
    /// `relabel[old] = new`; every merged vertex maps to the same new id.
    pub relabel: Vec<VertexId>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let fresh = self.rows[u] >> v & 1 == 0;
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
        Ok(fresh)
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Union of the neighbourhoods of `set`'s members (may intersect `set`).
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)).iter().map(move |v| (u, v))
        })
    }

    /// Vertices adjacent to both `x` and `y`.
    pub fn common_neighbors(&self, x: VertexId, y: VertexId) -> VertexSet {
        debug_assert_ne!(x, y);
        self.neighbors(x).intersection(self.neighbors(y))
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).is_disjoint(set))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter().map(|v| self.neighbors(v).intersection(set).len()).sum::<usize>() / 2
    }

    /// Every triangle `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            let above = u64::MAX.checked_shl(b as u32 + 1).unwrap_or(0);
            for c in VertexSet(self.rows[a] & self.rows[b] & above) {
                out.push([a, b, c]);
            }
        }
        out
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach(&self, start: VertexId, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start).intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood_of(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reach(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True when the subgraph induced by `within` is connected (the empty
    /// subgraph counts as connected).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.min() {
            None => true,
            Some(v) => self.reach(v, within) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// True when removing `set` leaves at least two components.
    pub fn separates(&self, set: VertexSet) -> bool {
        !self.is_connected_within(self.vertices().difference(set))
    }

    /// Subgraph induced by `set`, relabelled densely in increasing id order.
    /// Returns the subgraph and the map from new ids back to old ids.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<VertexId>) {
        let back: Vec<VertexId> = set.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in back.iter().enumerate() {
            pos[v] = i;
        }
        let rows = back
            .iter()
            .map(|&v| VertexSet(self.rows[v]).intersection(set).iter().fold(0u64, |acc, w| acc | 1u64 << pos[w]))
            .collect();
        (Graph { n: back.len(), rows }, back)
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[VertexId]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (v, &row) in self.rows.iter().enumerate() {
            rows[perm[v]] = VertexSet(row).iter().fold(0u64, |acc, w| acc | 1u64 << perm[w]);
        }
        Graph { n: self.n, rows }
    }

    /// Raw adjacency rows, one bitmask per vertex.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Merges two non-adjacent vertices into one whose neighbourhood is the
    /// union of theirs. The merged vertex keeps the smaller id before ids are
    /// re-densified.
    pub fn identify_vertices(&self, x: VertexId, y: VertexId) -> Result<Identified, GraphError> {
        self.check(x)?;
        self.check(y)?;
        if x == y {
            return Err(GraphError::SameVertex(x));
        }
        if self.has_edge(x, y) {
            return Err(GraphError::AdjacentVertices(x, y));
        }
        self.identify_set(VertexSet::singleton(x).with(y))
    }

    /// Contracts all of `set` into a single vertex (no adjacency requirement).
    /// Edges inside `set` disappear and parallel edges collapse.
    pub fn identify_set(&self, set: VertexSet) -> Result<Identified, GraphError> {
        let keep = set.min().ok_or(GraphError::EmptySet)?;
        if let Some(v) = set.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let removed = set.without(keep);
        let mut relabel = vec![0; self.n];
        let mut next = 0;
        for (v, slot) in relabel.iter_mut().enumerate() {
            if !removed.contains(v) {
                *slot = next;
                next += 1;
            }
        }
        for v in removed {
            relabel[v] = relabel[keep];
        }
        let mut graph = Graph::empty(next)?;
        for (u, v) in self.edges() {
            let (a, b) = (relabel[u], relabel[v]);
            if a != b {
                graph.add_edge(a, b)?;
            }
        }
        Ok(Identified { graph, relabel })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::{Graph, VertexId};

    fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).expect("named graph is well formed")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        build(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build(n, &edges)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build(n, &edges)
    }

    /// `K_{p,q}` with sides `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let edges: Vec<_> = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))).collect();
        build(p + q, &edges)
    }

    /// Star `K_{1,leaves}` centred at 0.
    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    /// Triangular prism: triangles 0-1-2 and 3-4-5, matching 0-3, 1-4, 2-5.
    pub fn prism() -> Graph {
        build(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])
    }

    /// `K_4` minus the edge 2-3; triangles 0-1-2 and 0-1-3 share the edge 0-1.
    pub fn k4_minus() -> Graph {
        build(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    }
}
