//! Membership test for the class generated from triangles and prisms by edge
//! and triangle identifications, with a generating sequence as certificate.

use dashmap::DashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cutset::{clique_cutsets, find_stable_cutset, CliqueSizes};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::graph6::fingerprint;
use crate::gsc::{Attachment, EdgeRole, GeneratingSequence, Layout, Piece, PieceKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("input graph must be connected")]
    Disconnected,
    #[error("input graph needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("{m} edges exceeds 2n-3 = {limit} for n = {n}")]
    OutOfRegime { n: usize, m: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureReason {
    /// Members have exactly `2n - 3` edges.
    EdgeCount { n: usize, m: usize },
    /// Not a base graph and no edge or triangle disconnects it.
    NoCliqueCutset,
    /// Splitting along `cutset` produced the rejected part `part`.
    PartRejected { cutset: VertexSet, part: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub fingerprint: String,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<GeneratingSequence>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<Vec<TraceEntry>>,
}

impl RecognitionResult {
    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }
}

/// Complement of the 6-cycle: 3-regular on six vertices with two triangles
/// (the only other cubic graph of order six, `K_{3,3}`, has none).
pub fn is_prism(g: &Graph) -> bool {
    g.n() == 6 && (0..6).all(|v| g.degree(v) == 3) && g.triangles().len() == 2
}

/// Recognizer with a memo table keyed by relabelled adjacency. A single
/// instance may be shared between threads.
#[derive(Default)]
pub struct Recognizer {
    memo: DashMap<Vec<u64>, Option<GeneratingSequence>>,
}

impl Recognizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized subgraphs.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn recognize(&self, g: &Graph) -> Result<RecognitionResult, RecognizeError> {
        check_input(g)?;
        if let Some(certificate) = self.certify(g) {
            debug_assert_eq!(certificate.build().as_ref(), Ok(g));
            return Ok(RecognitionResult { verdict: Verdict::Member, certificate: Some(certificate), trace: None });
        }
        Ok(RecognitionResult { verdict: Verdict::NonMember, certificate: None, trace: Some(self.trace(g)) })
    }

    fn trace(&self, g: &Graph) -> Vec<TraceEntry> {
        let (n, m) = (g.n(), g.edge_count());
        let fp = fingerprint(g);
        if m + 3 != 2 * n {
            return vec![TraceEntry { fingerprint: fp, reason: FailureReason::EdgeCount { n, m } }];
        }
        let cuts = clique_cutsets(g, CliqueSizes::BOTH).expect("connected input");
        if cuts.is_empty() {
            return vec![TraceEntry { fingerprint: fp, reason: FailureReason::NoCliqueCutset }];
        }
        cuts.iter()
            .filter_map(|cut| {
                parts(g, cut.clique).into_iter().find_map(|part| {
                    let (sub, _) = g.induced(part);
                    self.certify(&sub).is_none().then(|| TraceEntry {
                        fingerprint: fp.clone(),
                        reason: FailureReason::PartRejected { cutset: cut.clique, part: fingerprint(&sub) },
                    })
                })
            })
            .collect()
    }

    /// Generating sequence for a connected graph, or `None` for non-members.
    fn certify(&self, g: &Graph) -> Option<GeneratingSequence> {
        let perm = canonical_order(g);
        let canon = g.permuted(&perm);
        let key = canon.rows().to_vec();
        let cached = match self.memo.get(&key) {
            Some(hit) => hit.value().clone(),
            None => {
                let computed = self.certify_uncached(&canon);
                self.memo.entry(key).or_insert(computed).value().clone()
            }
        };
        let mut inverse = vec![0; perm.len()];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        cached.map(|s| s.relabelled(&inverse))
    }

    fn certify_uncached(&self, g: &Graph) -> Option<GeneratingSequence> {
        let (n, m) = (g.n(), g.edge_count());
        if m + 3 != 2 * n {
            return None;
        }
        if n == 3 {
            let root = Piece {
                kind: PieceKind::K3,
                attach: Attachment::Root,
                fresh: vec![0, 1, 2],
                along: EdgeRole::Matching,
            };
            return Some(GeneratingSequence::new(vec![root]));
        }
        if is_prism(g) {
            return Some(GeneratingSequence::new(vec![prism_root(g)]));
        }
        let cuts = clique_cutsets(g, CliqueSizes::BOTH).expect("parts stay connected");
        cuts.iter().find_map(|cut| self.certify_split(g, cut.clique))
    }

    /// Certifies every part of the split along `clique` and glues the part
    /// certificates: the first part as is, each later part re-rooted at a
    /// piece holding `clique` and glued onto it.
    fn certify_split(&self, g: &Graph, clique: VertexSet) -> Option<GeneratingSequence> {
        let mut pieces: Vec<Piece> = Vec::new();
        for (i, part) in parts(g, clique).into_iter().enumerate() {
            let (sub, back) = g.induced(part);
            let local = self.certify(&sub)?;
            if i == 0 {
                pieces = local.relabelled(&back).into_pieces();
                continue;
            }
            let local_clique: VertexSet = (0..back.len()).filter(|&j| clique.contains(back[j])).collect();
            let host = local
                .pieces()
                .iter()
                .position(|p| local_clique.is_subset(p.layout().expect("certificate piece").vertices()))
                .expect("a clique lies inside one piece");
            let rerooted = local.reroot(host + 1).expect("valid certificate").relabelled(&back).into_pieces();
            let glued = rerooted[0]
                .layout()
                .expect("certificate piece")
                .attached_at(clique)
                .expect("host piece holds the clique");
            pieces.push(glued);
            pieces.extend(rerooted.into_iter().skip(1));
        }
        Some(GeneratingSequence::new(pieces))
    }
}

/// Splits `g` along `clique` into `component + clique` vertex sets, ordered by
/// smallest vertex (ties broken by the component's smallest vertex).
fn parts(g: &Graph, clique: VertexSet) -> Vec<VertexSet> {
    let mut out: Vec<(VertexId, VertexId, VertexSet)> = g
        .components_within(g.vertices().difference(clique))
        .into_iter()
        .map(|comp| {
            let part = comp.union(clique);
            (part.min().expect("non-empty"), comp.min().expect("non-empty"), part)
        })
        .collect();
    out.sort_unstable();
    out.into_iter().map(|(_, _, part)| part).collect()
}

/// Vertex order by degree, then sorted neighbour degrees, then id.
/// `perm[old] = new`.
fn canonical_order(g: &Graph) -> Vec<VertexId> {
    let mut keyed: Vec<(usize, Vec<usize>, VertexId)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd, v)
        })
        .collect();
    keyed.sort();
    let mut perm = vec![0; g.n()];
    for (new, (_, _, old)) in keyed.into_iter().enumerate() {
        perm[old] = new;
    }
    perm
}

fn prism_root(g: &Graph) -> Piece {
    let tris = g.triangles();
    let top = tris[0];
    let other: VertexSet = tris[1].iter().copied().collect();
    let bottom = top.map(|v| {
        g.neighbors(v).intersection(other).min().expect("each prism vertex has one neighbour in the other triangle")
    });
    Layout::Prism { top, bottom }.attached_at(VertexSet::EMPTY).expect("root piece")
}

fn check_input(g: &Graph) -> Result<(), RecognizeError> {
    if g.n() < 3 {
        return Err(RecognizeError::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(RecognizeError::Disconnected);
    }
    Ok(())
}

/// Decides membership with a fresh [`Recognizer`].
pub fn recognize(g: &Graph) -> Result<RecognitionResult, RecognizeError> {
    Recognizer::new().recognize(g)
}

/// Membership via the characterization: a connected graph with `2n - 3`
/// edges is a member exactly when it has no stable cutset. Only meant as a
/// cross-check for [`recognize`].
pub fn recognize_via_theorem(g: &Graph) -> Result<Verdict, RecognizeError> {
    check_input(g)?;
    let (n, m) = (g.n(), g.edge_count());
    if m + 3 > 2 * n {
        return Err(RecognizeError::OutOfRegime { n, m, limit: 2 * n - 3 });
    }
    if m + 3 == 2 * n && find_stable_cutset(g).is_none() {
        Ok(Verdict::Member)
    } else {
        Ok(Verdict::NonMember)
    }
}
