//! Exact stable-cutset search and the structural predicates used when
//! analysing graphs with `2n - 3` edges and no stable cutset.
//!
//! Every search enumerates its candidates in lexicographic order of sorted
//! vertex ids and returns the first hit, so results are reproducible.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutsetError {
    #[error("input graph must be connected")]
    Disconnected,
}

/// A vertex set together with a split of the remaining vertices into two
/// non-empty sides with no edge between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub cutset: VertexSet,
    #[serde(rename = "sideA")]
    pub side_a: VertexSet,
    #[serde(rename = "sideB")]
    pub side_b: VertexSet,
}

/// Witness that a stable set disconnects the graph.
pub type StableCutsetCertificate = Separation;

impl Separation {
    /// Splits `G - cutset` into the component holding the smallest remaining
    /// vertex and everything else. `None` if `G - cutset` is connected.
    pub fn of(g: &Graph, cutset: VertexSet) -> Option<Separation> {
        let rest = g.vertices().difference(cutset);
        let first = rest.min()?;
        let side_a = g.reach(first, rest);
        let side_b = rest.difference(side_a);
        (!side_b.is_empty()).then_some(Separation { cutset, side_a, side_b })
    }

    /// Checks the partition and no-crossing-edge conditions against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let all = self.cutset.union(self.side_a).union(self.side_b);
        all == g.vertices()
            && self.cutset.is_disjoint(self.side_a)
            && self.cutset.is_disjoint(self.side_b)
            && self.side_a.is_disjoint(self.side_b)
            && !self.side_a.is_empty()
            && !self.side_b.is_empty()
            && g.neighborhood_of(self.side_a).is_disjoint(self.side_b)
    }
}

/// Returns a stable cutset of `g`, if one exists.
///
/// A disconnected graph yields the empty cutset.
pub fn find_stable_cutset(g: &Graph) -> Option<StableCutsetCertificate> {
    search_stable_cutset(g, VertexSet::EMPTY)
}

/// Returns a stable cutset of `g` that does not contain `x`, if one exists.
pub fn find_stable_cutset_avoiding(g: &Graph, x: VertexId) -> Option<StableCutsetCertificate> {
    search_stable_cutset(g, VertexSet::singleton(x).intersection(g.vertices()))
}

fn search_stable_cutset(g: &Graph, excluded: VertexSet) -> Option<Separation> {
    if g.n() < 2 {
        return None;
    }
    if !g.is_connected() {
        return Separation::of(g, VertexSet::EMPTY);
    }
    for a in 0..g.n() {
        let later = g.vertices().difference(VertexSet::full(a + 1));
        for b in later.difference(g.neighbors(a)) {
            let forbidden = excluded.with(a).with(b);
            if let Some(cut) = separate_pair(g, a, b, VertexSet::EMPTY, forbidden) {
                return Separation::of(g, cut);
            }
        }
    }
    None
}

/// Looks for a stable set containing `cut`, avoiding `forbidden`, that
/// separates `a` from `b`.
///
/// Any such set must hit every `a`-`b` path, so branch over the interior of a
/// shortest surviving path: the `i`-th branch puts the `i`-th eligible vertex
/// into the cutset and forbids every earlier one.
fn separate_pair(g: &Graph, a: VertexId, b: VertexId, cut: VertexSet, forbidden: VertexSet) -> Option<VertexSet> {
    let alive = g.vertices().difference(cut);
    let Some(path) = shortest_path(g, a, b, alive) else {
        return Some(cut);
    };
    let mut forbidden = forbidden;
    for &p in &path[1..path.len() - 1] {
        if forbidden.contains(p) {
            continue;
        }
        let next_forbidden = forbidden.union(g.neighbors(p));
        if let Some(found) = separate_pair(g, a, b, cut.with(p), next_forbidden) {
            return Some(found);
        }
        forbidden.insert(p);
    }
    None
}

/// Breadth-first shortest path from `from` to `to` inside `within`,
/// preferring smaller ids on ties.
fn shortest_path(g: &Graph, from: VertexId, to: VertexId, within: VertexSet) -> Option<Vec<VertexId>> {
    let mut parent = [usize::MAX; crate::graph::MAX_VERTICES];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).intersection(within).difference(seen) {
            seen.insert(w);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}

/// Which clique sizes [`has_clique_cutset`] may return.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueSizes {
    pub edges: bool,
    pub triangles: bool,
}

impl CliqueSizes {
    pub const EDGES: CliqueSizes = CliqueSizes { edges: true, triangles: false };
    pub const TRIANGLES: CliqueSizes = CliqueSizes { edges: false, triangles: true };
    pub const BOTH: CliqueSizes = CliqueSizes { edges: true, triangles: true };
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutset {
    pub clique: VertexSet,
    pub separation: Separation,
}

/// All edge and triangle cutsets of a connected graph: edges first, then
/// triangles, each group in lexicographic order.
pub fn clique_cutsets(g: &Graph, sizes: CliqueSizes) -> Result<Vec<CliqueCutset>, CutsetError> {
    require_connected(g)?;
    let mut out = Vec::new();
    if sizes.edges {
        for (u, v) in g.edges() {
            let clique = VertexSet::from_iter([u, v]);
            if let Some(separation) = Separation::of(g, clique) {
                out.push(CliqueCutset { clique, separation });
            }
        }
    }
    if sizes.triangles {
        for t in g.triangles() {
            let clique = VertexSet::from_iter(t);
            if let Some(separation) = Separation::of(g, clique) {
                out.push(CliqueCutset { clique, separation });
            }
        }
    }
    Ok(out)
}

/// First `K_2`- or `K_3`-cutset (as permitted by `sizes`), edges before
/// triangles.
pub fn has_clique_cutset(g: &Graph, sizes: CliqueSizes) -> Result<Option<CliqueCutset>, CutsetError> {
    require_connected(g)?;
    let edges = sizes.edges.then(|| g.edges().map(|(u, v)| VertexSet::from_iter([u, v])));
    let triangles = sizes.triangles.then(|| g.triangles().into_iter().map(VertexSet::from_iter));
    let found = edges
        .into_iter()
        .flatten()
        .chain(triangles.into_iter().flatten())
        .find_map(|clique| Separation::of(g, clique).map(|separation| CliqueCutset { clique, separation }));
    Ok(found)
}

/// Three vertices inducing a path, listed end, middle, end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct P3Cutset {
    pub path: [VertexId; 3],
    pub separation: Separation,
}

/// First vertex triple that induces a two-edge path and disconnects `g`.
pub fn has_p3_cutset(g: &Graph) -> Result<Option<P3Cutset>, CutsetError> {
    require_connected(g)?;
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let set = VertexSet::from_iter([a, b, c]);
                if g.edges_within(set) != 2 {
                    continue;
                }
                if let Some(separation) = Separation::of(g, set) {
                    let path = if !g.has_edge(a, b) {
                        [a, c, b]
                    } else if !g.has_edge(a, c) {
                        [a, b, c]
                    } else {
                        [b, a, c]
                    };
                    return Ok(Some(P3Cutset { path, separation }));
                }
            }
        }
    }
    Ok(None)
}

/// Vertex bipartition whose crossing edges form a matching of size three.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCut {
    #[serde(rename = "sideA")]
    pub side_a: VertexSet,
    #[serde(rename = "sideB")]
    pub side_b: VertexSet,
    pub crossing: Vec<(VertexId, VertexId)>,
}

/// First 3-edge matching cut, scanning matchings of three edges in
/// lexicographic order of their edge lists.
///
/// With the three edges removed, the crossing edges decide the side of every
/// component; the matching is a cut exactly when that two-colouring exists.
pub fn has_3edge_matching_cut(g: &Graph) -> Result<Option<MatchingCut>, CutsetError> {
    require_connected(g)?;
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let touches = |(a, b): (VertexId, VertexId), (c, d): (VertexId, VertexId)| a == c || a == d || b == c || b == d;
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if touches(edges[i], edges[j]) {
                continue;
            }
            for k in j + 1..edges.len() {
                if touches(edges[i], edges[k]) || touches(edges[j], edges[k]) {
                    continue;
                }
                let chosen = [edges[i], edges[j], edges[k]];
                if let Some(cut) = matching_cut_for(g, chosen) {
                    return Ok(Some(cut));
                }
            }
        }
    }
    Ok(None)
}

fn matching_cut_for(g: &Graph, chosen: [(VertexId, VertexId); 3]) -> Option<MatchingCut> {
    let mut h = Graph::empty(g.n()).expect("same order as g");
    for (u, v) in g.edges() {
        if !chosen.contains(&(u, v)) {
            h.add_edge(u, v).expect("edge of g");
        }
    }
    let comps = h.components();
    let comp_of = |v: VertexId| comps.iter().position(|c| c.contains(v)).expect("covered");
    // 0 = unset, 1 = side A, 2 = side B
    let mut colour = vec![0u8; comps.len()];
    colour[0] = 1;
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v) in &chosen {
            let (cu, cv) = (comp_of(u), comp_of(v));
            if cu == cv {
                return None;
            }
            match (colour[cu], colour[cv]) {
                (0, 0) => {}
                (x, 0) => {
                    colour[cv] = 3 - x;
                    changed = true;
                }
                (0, y) => {
                    colour[cu] = 3 - y;
                    changed = true;
                }
                (x, y) if x == y => return None,
                _ => {}
            }
        }
    }
    if colour.contains(&0) {
        return None;
    }
    let side_a = comps.iter().zip(&colour).filter(|(_, &c)| c == 1).fold(VertexSet::EMPTY, |acc, (s, _)| acc.union(*s));
    let side_b = g.vertices().difference(side_a);
    Some(MatchingCut { side_a, side_b, crossing: chosen.to_vec() })
}

/// Two triangles sharing the edge `shared`; `tips` are their third vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4Minus {
    pub shared: [VertexId; 2],
    pub tips: [VertexId; 2],
}

impl K4Minus {
    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_iter(self.shared.into_iter().chain(self.tips))
    }
}

/// First `K_4^-` subgraph (not necessarily induced): the first edge, in
/// lexicographic order, with two common neighbours.
pub fn has_k4_minus(g: &Graph) -> Option<K4Minus> {
    g.edges().find_map(|(u, v)| {
        let mut common = g.common_neighbors(u, v).iter();
        match (common.next(), common.next()) {
            (Some(c), Some(d)) => Some(K4Minus { shared: [u, v], tips: [c, d] }),
            _ => None,
        }
    })
}

/// A set of at most two vertices whose removal disconnects `g` (the empty set
/// when `g` is already disconnected).
pub fn small_separator(g: &Graph) -> Option<VertexSet> {
    if !g.is_connected() {
        return Some(VertexSet::EMPTY);
    }
    let n = g.n();
    for a in 0..n {
        let single = VertexSet::singleton(a);
        if g.separates(single) {
            return Some(single);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let pair = VertexSet::from_iter([a, b]);
            if g.separates(pair) {
                return Some(pair);
            }
        }
    }
    None
}

/// True iff `g` has at least four vertices and no set of at most two
/// vertices disconnects it.
pub fn is_3_connected(g: &Graph) -> bool {
    g.n() >= 4 && small_separator(g).is_none()
}

/// Vertices whose removal disconnects a connected graph.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.separates(VertexSet::singleton(v))).collect()
}

fn require_connected(g: &Graph) -> Result<(), CutsetError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(CutsetError::Disconnected)
    }
}

/// Concrete reason a structural claim fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    EdgeCount { n: usize, m: usize },
    VertexOutsideTriangles { vertex: VertexId },
    CliqueCutset { cutset: CliqueCutset },
    Order { n: usize },
    Separator { vertices: VertexSet },
    MatchingCut { cut: MatchingCut },
    K4Minus { subgraph: K4Minus },
    CommonNeighbors { pair: [VertexId; 2], common: VertexSet },
    P3Cutset { cutset: P3Cutset },
    Triangles { triangles: Vec<[VertexId; 3]> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: u8,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

/// Outcome of every structural predicate, numbered 6 through 14.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimAudit {
    pub claims: Vec<ClaimResult>,
}

impl ClaimAudit {
    pub fn get(&self, claim: u8) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim == claim)
    }

    pub fn holds(&self, claim: u8) -> bool {
        self.get(claim).is_some_and(|c| c.holds)
    }
}

fn result(claim: u8, failure: Option<Witness>) -> ClaimResult {
    ClaimResult { claim, holds: failure.is_none(), witness: failure }
}

/// Evaluates the structural properties a minimal graph with `2n - 3` edges
/// and no stable cutset would have to satisfy.
///
/// 6: `m = 2n - 3`. 7: every vertex in a triangle. 8: no `K_2`/`K_3`-cutset.
/// 9: 3-connected. 10: no 3-edge matching cut. 11: no `K_4^-`. 12: non-adjacent
/// pairs share at most two neighbours. 13: no `P_3`-cutset. 14: every triangle
/// has at least two vertices that also lie in another triangle.
pub fn audit_claims(g: &Graph) -> Result<ClaimAudit, CutsetError> {
    require_connected(g)?;
    let (n, m) = (g.n(), g.edge_count());
    let triangles = g.triangles();
    let mut in_triangles = vec![0usize; n];
    for t in &triangles {
        for &v in t {
            in_triangles[v] += 1;
        }
    }

    let claim6 = (m + 3 != 2 * n).then_some(Witness::EdgeCount { n, m });
    let claim7 = in_triangles.iter().position(|&c| c == 0).map(|vertex| Witness::VertexOutsideTriangles { vertex });
    let claim8 = has_clique_cutset(g, CliqueSizes::BOTH)?.map(|cutset| Witness::CliqueCutset { cutset });
    let claim9 = if n < 4 {
        Some(Witness::Order { n })
    } else {
        small_separator(g).map(|vertices| Witness::Separator { vertices })
    };
    let claim10 = has_3edge_matching_cut(g)?.map(|cut| Witness::MatchingCut { cut });
    let claim11 = has_k4_minus(g).map(|subgraph| Witness::K4Minus { subgraph });
    let claim12 =
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).filter(|&(x, y)| !g.has_edge(x, y)).find_map(|(x, y)| {
            let common = g.common_neighbors(x, y);
            (common.len() > 2).then_some(Witness::CommonNeighbors { pair: [x, y], common })
        });
    let claim13 = has_p3_cutset(g)?.map(|cutset| Witness::P3Cutset { cutset });
    let lonely: Vec<[VertexId; 3]> =
        triangles.iter().filter(|t| t.iter().filter(|&&v| in_triangles[v] >= 2).count() < 2).copied().collect();
    let claim14 = (!lonely.is_empty()).then_some(Witness::Triangles { triangles: lonely });

    Ok(ClaimAudit {
        claims: vec![
            result(6, claim6),
            result(7, claim7),
            result(8, claim8),
            result(9, claim9),
            result(10, claim10),
            result(11, claim11),
            result(12, claim12),
            result(13, claim13),
            result(14, claim14),
        ],
    })
}
