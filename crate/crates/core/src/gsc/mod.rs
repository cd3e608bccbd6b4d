//! Generating sequences: triangles and prisms glued along edges or triangles.
//!
//! A [`GeneratingSequence`] lists its pieces in gluing order. Each piece names
//! the existing clique it is glued onto and the ids of the vertices it
//! creates; the concrete labelled piece follows from a fixed slot convention.
//!
//! Prism slots are `u v w | a b c`: triangles `uvw` and `abc`, matching
//! `au, bv, cw`.
//!
//! | piece                   | attach targets | fresh ids       |
//! |-------------------------|----------------|-----------------|
//! | K3 root                 | -              | `p q r`         |
//! | K3 on edge              | `v b`          | `a`             |
//! | K3 on triangle          | `p q r`        | -               |
//! | prism root              | -              | `u v w a b c`   |
//! | prism on matching edge  | `v b`          | `u w a c`       |
//! | prism on triangle edge  | `a b`          | `u v w c`       |
//! | prism on triangle       | `u v w`        | `a b c`         |

mod extend;
mod generate;
mod reroot;

pub use extend::extend_stable_set;
pub use generate::{random_gsc, random_gsc_through};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PieceKind {
    K3,
    Prism,
}

impl PieceKind {
    pub fn order(self) -> usize {
        match self {
            PieceKind::K3 => 3,
            PieceKind::Prism => 6,
        }
    }
}

/// The clique of the graph built so far that a piece is glued onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Attachment {
    Root,
    Edge([VertexId; 2]),
    Triangle([VertexId; 3]),
}

impl Attachment {
    pub fn targets(&self) -> &[VertexId] {
        match self {
            Attachment::Root => &[],
            Attachment::Edge(t) => t,
            Attachment::Triangle(t) => t,
        }
    }

    pub fn clique(&self) -> VertexSet {
        self.targets().iter().copied().collect()
    }
}

/// Which prism edge an edge attachment lands on.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeRole {
    #[default]
    Matching,
    Triangle,
}

impl EdgeRole {
    fn is_matching(&self) -> bool {
        *self == EdgeRole::Matching
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Piece {
    pub kind: PieceKind,
    pub attach: Attachment,
    pub fresh: Vec<VertexId>,
    /// Only meaningful for a prism glued on an edge.
    #[serde(default, skip_serializing_if = "EdgeRole::is_matching")]
    pub along: EdgeRole,
}

/// Concrete labelled piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    Triangle([VertexId; 3]),
    /// `top = [u, v, w]`, `bottom = [a, b, c]`, matched index-wise.
    Prism {
        top: [VertexId; 3],
        bottom: [VertexId; 3],
    },
}

impl Layout {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Layout::Triangle(t) => t.iter().copied().collect(),
            Layout::Prism { top, bottom } => top.iter().chain(bottom).copied().collect(),
        }
    }

    pub fn kind(&self) -> PieceKind {
        match self {
            Layout::Triangle(_) => PieceKind::K3,
            Layout::Prism { .. } => PieceKind::Prism,
        }
    }

    /// Edges as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let pair = |a: VertexId, b: VertexId| (a.min(b), a.max(b));
        let tri = |t: &[VertexId; 3]| [pair(t[0], t[1]), pair(t[0], t[2]), pair(t[1], t[2])];
        let mut out: Vec<_> = match self {
            Layout::Triangle(t) => tri(t).to_vec(),
            Layout::Prism { top, bottom } => {
                let mut e = tri(top).to_vec();
                e.extend(tri(bottom));
                e.extend((0..3).map(|i| pair(top[i], bottom[i])));
                e
            }
        };
        out.sort_unstable();
        out
    }

    /// Re-expresses this labelled piece as glued onto `clique` (empty for a
    /// root). `None` if `clique` is not an edge or triangle of the piece.
    pub fn attached_at(&self, clique: VertexSet) -> Option<Piece> {
        let ids = clique.to_vec();
        match *self {
            Layout::Triangle(t) => {
                if !clique.is_subset(self.vertices()) {
                    return None;
                }
                let rest: Vec<VertexId> = t.iter().copied().filter(|v| !clique.contains(*v)).collect();
                let attach = match ids.len() {
                    0 => Attachment::Root,
                    2 => Attachment::Edge([ids[0], ids[1]]),
                    3 => Attachment::Triangle([ids[0], ids[1], ids[2]]),
                    _ => return None,
                };
                Some(Piece { kind: PieceKind::K3, attach, fresh: rest, along: EdgeRole::Matching })
            }
            Layout::Prism { top, bottom } => {
                let top_set: VertexSet = top.iter().copied().collect();
                let bottom_set: VertexSet = bottom.iter().copied().collect();
                let piece =
                    |attach, fresh: Vec<VertexId>, along| Some(Piece { kind: PieceKind::Prism, attach, fresh, along });
                match ids.len() {
                    0 => {
                        let fresh = top.iter().chain(&bottom).copied().collect();
                        piece(Attachment::Root, fresh, EdgeRole::Matching)
                    }
                    3 if clique == top_set => piece(Attachment::Triangle(top), bottom.to_vec(), EdgeRole::Matching),
                    3 if clique == bottom_set => piece(Attachment::Triangle(bottom), top.to_vec(), EdgeRole::Matching),
                    2 => {
                        let (x, y) = (ids[0], ids[1]);
                        let (near, far) = if top_set.contains(x) { (top, bottom) } else { (bottom, top) };
                        let i = near.iter().position(|&z| z == x)?;
                        let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
                        if far[i] == y {
                            let fresh = vec![near[others[0]], near[others[1]], far[others[0]], far[others[1]]];
                            piece(Attachment::Edge([x, y]), fresh, EdgeRole::Matching)
                        } else {
                            let j = near.iter().position(|&z| z == y)?;
                            let k = 3 - i - j;
                            let fresh = vec![far[i], far[j], far[k], near[k]];
                            piece(Attachment::Edge([x, y]), fresh, EdgeRole::Triangle)
                        }
                    }
                    _ => None,
                }
            }
        }
    }
}

impl Piece {
    /// Number of fresh ids this piece must carry.
    pub fn expected_fresh(&self) -> usize {
        self.kind.order() - self.attach.targets().len()
    }

    /// The labelled piece. `None` when the fresh count does not match.
    pub fn layout(&self) -> Option<Layout> {
        if self.fresh.len() != self.expected_fresh() {
            return None;
        }
        let f = &self.fresh;
        let layout = match (self.kind, self.attach) {
            (PieceKind::K3, Attachment::Root) => Layout::Triangle([f[0], f[1], f[2]]),
            (PieceKind::K3, Attachment::Edge([v, b])) => Layout::Triangle([v, b, f[0]]),
            (PieceKind::K3, Attachment::Triangle(t)) => Layout::Triangle(t),
            (PieceKind::Prism, Attachment::Root) => {
                Layout::Prism { top: [f[0], f[1], f[2]], bottom: [f[3], f[4], f[5]] }
            }
            (PieceKind::Prism, Attachment::Edge([x, y])) => match self.along {
                EdgeRole::Matching => Layout::Prism { top: [f[0], x, f[1]], bottom: [f[2], y, f[3]] },
                EdgeRole::Triangle => Layout::Prism { top: [f[0], f[1], f[2]], bottom: [x, y, f[3]] },
            },
            (PieceKind::Prism, Attachment::Triangle(t)) => Layout::Prism { top: t, bottom: [f[0], f[1], f[2]] },
        };
        Some(layout)
    }

    /// True for a triangle glued onto an existing triangle, which adds nothing.
    pub fn is_noop(&self) -> bool {
        self.kind == PieceKind::K3 && matches!(self.attach, Attachment::Triangle(_))
    }

    fn relabelled(&self, map: &[VertexId]) -> Piece {
        let attach = match self.attach {
            Attachment::Root => Attachment::Root,
            Attachment::Edge([a, b]) => Attachment::Edge([map[a], map[b]]),
            Attachment::Triangle([a, b, c]) => Attachment::Triangle([map[a], map[b], map[c]]),
        };
        Piece { kind: self.kind, attach, fresh: self.fresh.iter().map(|&v| map[v]).collect(), along: self.along }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum ValidationIssue {
    EmptySequence,
    FirstPieceNotRoot,
    RootAfterFirst,
    FreshCount { expected: usize, found: usize },
    UnknownVertex { vertex: VertexId },
    RepeatedTarget,
    TargetsNotClique,
    FreshNotNew { vertex: VertexId },
    RoleWithoutPrismEdge,
    TooManyVertices { n: usize },
    IdsNotDense { n: usize },
}

/// A problem found by [`GeneratingSequence::validate`]. `piece` is the
/// 1-based position of the offending piece (0 for whole-sequence problems).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationError {
    pub piece: usize,
    #[serde(flatten)]
    pub issue: ValidationIssue,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "piece {}: {:?}", self.piece, self.issue)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ValidationWarning {
    /// A triangle glued onto an existing triangle contributes nothing.
    NoopTriangle { piece: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GscError {
    #[error("invalid generating sequence: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<ValidationError>),
    #[error("piece position {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("a generating sequence needs at least one piece")]
    NoPieces,
    #[error("sequence would need {0} vertices, more than {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("vertex {vertex} is not in piece {piece}")]
    VertexNotInPiece { vertex: VertexId, piece: usize },
    #[error("piece {piece} is a prism glued along a triangle edge; normalize the sequence first")]
    NotNormalized { piece: usize },
    #[error("seed set is not contained in the first {0} pieces")]
    SeedOutsidePrefix(usize),
    #[error("seed set is not stable in the first {0} pieces")]
    SeedNotStable(usize),
    #[error("seed set contains the excluded vertex {0}")]
    SeedContainsVertex(VertexId),
}

/// Ordered pieces whose union is the generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratingSequence {
    pieces: Vec<Piece>,
}

impl GeneratingSequence {
    /// Wraps pieces without checking them; see [`validate`](Self::validate).
    pub fn new(pieces: Vec<Piece>) -> Self {
        GeneratingSequence { pieces }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn into_pieces(self) -> Vec<Piece> {
        self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Total number of vertices created by all pieces.
    pub fn vertex_count(&self) -> usize {
        self.pieces.iter().map(|p| p.fresh.len()).sum()
    }

    /// Checks every structural condition. Warnings come back on success.
    pub fn validate(&self) -> Result<Vec<ValidationWarning>, Vec<ValidationError>> {
        let mut errors = Vec::new();
        let mut warnings = Vec::new();
        if self.pieces.is_empty() {
            return Err(vec![ValidationError { piece: 0, issue: ValidationIssue::EmptySequence }]);
        }
        let mut seen = VertexSet::EMPTY;
        let mut partial = Graph::empty(MAX_VERTICES).expect("maximum order");
        let mut created = 0usize;

        for (idx, piece) in self.pieces.iter().enumerate() {
            let pos = idx + 1;
            let before = errors.len();
            let mut fail = |issue| errors.push(ValidationError { piece: pos, issue });

            match (idx, piece.attach) {
                (0, Attachment::Root) => {}
                (0, _) => fail(ValidationIssue::FirstPieceNotRoot),
                (_, Attachment::Root) => fail(ValidationIssue::RootAfterFirst),
                _ => {}
            }
            if piece.along == EdgeRole::Triangle
                && !(piece.kind == PieceKind::Prism && matches!(piece.attach, Attachment::Edge(_)))
            {
                fail(ValidationIssue::RoleWithoutPrismEdge);
            }
            let targets = piece.attach.targets();
            if let Some(&v) = targets.iter().find(|&&v| v >= MAX_VERTICES || !seen.contains(v)) {
                fail(ValidationIssue::UnknownVertex { vertex: v });
            } else if piece.attach.clique().len() != targets.len() {
                fail(ValidationIssue::RepeatedTarget);
            } else if !partial.is_clique(piece.attach.clique()) {
                fail(ValidationIssue::TargetsNotClique);
            }
            if piece.fresh.len() != piece.expected_fresh() {
                fail(ValidationIssue::FreshCount { expected: piece.expected_fresh(), found: piece.fresh.len() });
            }
            created += piece.fresh.len();
            if created > MAX_VERTICES {
                fail(ValidationIssue::TooManyVertices { n: created });
                break;
            }
            let mut fresh_seen = seen;
            for &v in &piece.fresh {
                if v >= MAX_VERTICES || fresh_seen.contains(v) {
                    fail(ValidationIssue::FreshNotNew { vertex: v });
                } else {
                    fresh_seen.insert(v);
                }
            }
            if errors.len() > before {
                // Later pieces are still checked against what this one would have added.
                seen = fresh_seen;
                continue;
            }
            seen = fresh_seen;
            if piece.is_noop() {
                warnings.push(ValidationWarning::NoopTriangle { piece: pos });
            }
            let layout = piece.layout().expect("fresh count checked");
            for (u, v) in layout.edges() {
                partial.add_edge(u, v).expect("ids below maximum");
            }
        }
        if errors.is_empty() && seen != VertexSet::full(created) {
            errors.push(ValidationError { piece: 0, issue: ValidationIssue::IdsNotDense { n: created } });
        }
        if errors.is_empty() {
            Ok(warnings)
        } else {
            Err(errors)
        }
    }

    fn ensure_valid(&self) -> Result<(), GscError> {
        self.validate().map(|_| ()).map_err(GscError::Invalid)
    }

    /// The graph generated by the first `k` pieces, on the full vertex range
    /// of the sequence (vertices created later are isolated). Assumes a valid
    /// sequence.
    pub(crate) fn partial_graph(&self, k: usize) -> Graph {
        let mut g = Graph::empty(self.vertex_count()).expect("validated order");
        for piece in &self.pieces[..k] {
            for (u, v) in piece.layout().expect("validated piece").edges() {
                g.add_edge(u, v).expect("validated ids");
            }
        }
        g
    }

    /// Vertices created by the first `k` pieces.
    pub fn vertices_upto(&self, k: usize) -> VertexSet {
        self.pieces[..k.min(self.pieces.len())].iter().flat_map(|p| p.fresh.iter().copied()).collect()
    }

    /// Builds the generated graph.
    pub fn build(&self) -> Result<Graph, GscError> {
        self.ensure_valid()?;
        Ok(self.partial_graph(self.len()))
    }

    /// Builds the graph generated by the first `k` pieces, with all ids of the
    /// full sequence present (later vertices isolated).
    pub fn build_prefix(&self, k: usize) -> Result<Graph, GscError> {
        self.ensure_valid()?;
        if k == 0 || k > self.len() {
            return Err(GscError::IndexOutOfRange { index: k, len: self.len() });
        }
        Ok(self.partial_graph(k))
    }

    /// Renames every vertex `v` to `map[v]`.
    pub fn relabelled(&self, map: &[VertexId]) -> GeneratingSequence {
        GeneratingSequence { pieces: self.pieces.iter().map(|p| p.relabelled(map)).collect() }
    }

    /// An equivalent sequence whose first piece is the piece at 1-based
    /// position `position`, generating the same labelled graph.
    pub fn reroot(&self, position: usize) -> Result<GeneratingSequence, GscError> {
        self.ensure_valid()?;
        if position == 0 || position > self.len() {
            return Err(GscError::IndexOutOfRange { index: position, len: self.len() });
        }
        Ok(GeneratingSequence { pieces: reroot::reroot(&self.pieces, position - 1) })
    }

    /// Rewrites every prism glued along one of its triangle edges `ab` as a
    /// triangle `abc` on that edge followed by the prism on the triangle
    /// `abc`. The generated graph is unchanged.
    pub fn normalize(&self) -> Result<GeneratingSequence, GscError> {
        self.ensure_valid()?;
        let mut pieces = Vec::with_capacity(self.len());
        for piece in &self.pieces {
            if piece.kind == PieceKind::Prism && piece.along == EdgeRole::Triangle {
                let Attachment::Edge([a, b]) = piece.attach else {
                    unreachable!("validated role");
                };
                let c = piece.fresh[3];
                pieces.push(Piece {
                    kind: PieceKind::K3,
                    attach: Attachment::Edge([a, b]),
                    fresh: vec![c],
                    along: EdgeRole::Matching,
                });
                let layout = piece.layout().expect("validated piece");
                let prism = layout.attached_at(VertexSet::from_iter([a, b, c])).expect("abc is a prism triangle");
                pieces.push(prism);
            } else {
                pieces.push(piece.clone());
            }
        }
        Ok(GeneratingSequence { pieces })
    }

    /// True if no prism is glued along a triangle edge.
    pub fn is_normalized(&self) -> bool {
        self.pieces.iter().all(|p| p.along == EdgeRole::Matching)
    }
}

/// Shorthand for [`GeneratingSequence::normalize`].
pub fn normalize_sequence(s: &GeneratingSequence) -> Result<GeneratingSequence, GscError> {
    s.normalize()
}
