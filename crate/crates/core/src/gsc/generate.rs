use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Attachment, EdgeRole, GeneratingSequence, GscError, Layout, Piece, PieceKind};
use crate::graph::{Graph, VertexId, VertexSet, MAX_VERTICES};

/// Random valid sequence of `pieces` pieces, deterministic in `seed`.
///
/// The root kind is a fair coin. Each later piece picks its kind by a fair
/// coin, then an attachment uniformly among the legal ones for that kind:
/// any edge for a triangle (a triangle glued onto a triangle adds nothing and
/// is never drawn), and any edge in either prism role or any triangle for a
/// prism. Targets are listed in random order.
pub fn random_gsc(pieces: usize, seed: u64) -> Result<GeneratingSequence, GscError> {
    generate(pieces, seed, None)
}

/// Like [`random_gsc`], but every piece contains vertex `through`, which must
/// be one of the root's ids (`0..3` is always safe).
pub fn random_gsc_through(pieces: usize, seed: u64, through: VertexId) -> Result<GeneratingSequence, GscError> {
    generate(pieces, seed, Some(through))
}

fn generate(count: usize, seed: u64, through: Option<VertexId>) -> Result<GeneratingSequence, GscError> {
    if count == 0 {
        return Err(GscError::NoPieces);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(MAX_VERTICES).expect("maximum order");
    let mut next = 0usize;
    let mut out = Vec::with_capacity(count);

    let root_kind = if rng.gen_bool(0.5) { PieceKind::K3 } else { PieceKind::Prism };
    let root = Piece {
        kind: root_kind,
        attach: Attachment::Root,
        fresh: (0..root_kind.order()).collect(),
        along: EdgeRole::Matching,
    };
    next += root_kind.order();
    if let Some(v) = through {
        if v >= next {
            return Err(GscError::VertexNotInPiece { vertex: v, piece: 1 });
        }
    }
    add_piece(&mut g, &root);
    out.push(root);

    while out.len() < count {
        let kind = if rng.gen_bool(0.5) { PieceKind::K3 } else { PieceKind::Prism };
        let contains = |set: VertexSet| through.is_none_or(|v| set.contains(v));
        let edges: Vec<[VertexId; 2]> =
            g.edges().map(|(u, v)| [u, v]).filter(|e| contains(e.iter().copied().collect())).collect();
        let mut options: Vec<(Attachment, EdgeRole)> = Vec::new();
        match kind {
            PieceKind::K3 => options.extend(edges.iter().map(|&e| (Attachment::Edge(e), EdgeRole::Matching))),
            PieceKind::Prism => {
                for &e in &edges {
                    options.push((Attachment::Edge(e), EdgeRole::Matching));
                    options.push((Attachment::Edge(e), EdgeRole::Triangle));
                }
                for t in g.triangles() {
                    if contains(t.iter().copied().collect()) {
                        options.push((Attachment::Triangle(t), EdgeRole::Matching));
                    }
                }
            }
        }
        let &(attach, along) = options.choose(&mut rng).expect("the root always offers an edge");
        let attach = match attach {
            Attachment::Edge(mut e) => {
                e.shuffle(&mut rng);
                Attachment::Edge(e)
            }
            Attachment::Triangle(mut t) => {
                t.shuffle(&mut rng);
                Attachment::Triangle(t)
            }
            Attachment::Root => unreachable!(),
        };
        let fresh_count = kind.order() - attach.targets().len();
        if next + fresh_count > MAX_VERTICES {
            return Err(GscError::TooLarge(next + fresh_count));
        }
        let piece = Piece { kind, attach, fresh: (next..next + fresh_count).collect(), along };
        next += fresh_count;
        add_piece(&mut g, &piece);
        out.push(piece);
    }
    Ok(GeneratingSequence::new(out))
}

fn add_piece(g: &mut Graph, piece: &Piece) {
    let layout: Layout = piece.layout().expect("generated pieces are well formed");
    for (u, v) in layout.edges() {
        g.add_edge(u, v).expect("ids below maximum");
    }
}
