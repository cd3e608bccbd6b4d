use super::{Attachment, EdgeRole, GeneratingSequence, GscError, Layout};
use crate::graph::{VertexId, VertexSet};

/// Extends a stable set of the first `prefix_len` pieces piece by piece to a
/// stable set of the whole generated graph that still avoids `v`.
///
/// `s` must be normalized and `v` must lie in every piece. For each later
/// piece, with `v` and `b` old:
///
/// * triangle `vab`: keep the set if `b` is in it, else add `a`;
/// * prism glued on the matching edge `vb` (triangles `uvw`, `abc`): add `w`
///   if `b` is in the set, else add `a` and `w`;
/// * prism glued on the triangle `uvw`: add `b`.
///
/// A triangle glued onto a triangle adds no vertex and leaves the set alone.
pub fn extend_stable_set(
    s: &GeneratingSequence,
    prefix_len: usize,
    seed: VertexSet,
    v: VertexId,
) -> Result<VertexSet, GscError> {
    s.ensure_valid()?;
    if prefix_len == 0 || prefix_len > s.len() {
        return Err(GscError::IndexOutOfRange { index: prefix_len, len: s.len() });
    }
    let layouts: Vec<Layout> = s.pieces().iter().map(|p| p.layout().expect("validated")).collect();
    if let Some(i) = layouts.iter().position(|l| !l.vertices().contains(v)) {
        return Err(GscError::VertexNotInPiece { vertex: v, piece: i + 1 });
    }
    if let Some(i) = s.pieces().iter().position(|p| p.along == EdgeRole::Triangle) {
        return Err(GscError::NotNormalized { piece: i + 1 });
    }
    if !seed.is_subset(s.vertices_upto(prefix_len)) {
        return Err(GscError::SeedOutsidePrefix(prefix_len));
    }
    if seed.contains(v) {
        return Err(GscError::SeedContainsVertex(v));
    }
    if !s.partial_graph(prefix_len).is_stable(seed) {
        return Err(GscError::SeedNotStable(prefix_len));
    }

    let mut x = seed;
    for (piece, layout) in s.pieces().iter().zip(&layouts).skip(prefix_len) {
        match (piece.attach, layout) {
            (Attachment::Edge(ends), Layout::Triangle(_)) => {
                let b = if ends[0] == v { ends[1] } else { ends[0] };
                if !x.contains(b) {
                    x.insert(piece.fresh[0]);
                }
            }
            (Attachment::Triangle(_), Layout::Triangle(_)) => {}
            (Attachment::Edge(_), &Layout::Prism { top, bottom }) => {
                let (near, far) = if top.contains(&v) { (top, bottom) } else { (bottom, top) };
                let i = near.iter().position(|&z| z == v).expect("v is an attachment end");
                let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
                let (b, a, w) = (far[i], far[others[0]], near[others[1]]);
                if !x.contains(b) {
                    x.insert(a);
                }
                x.insert(w);
            }
            (Attachment::Triangle(_), &Layout::Prism { top, bottom }) => {
                let i = top.iter().position(|&z| z == v).expect("v is in the glued triangle");
                x.insert(bottom[i]);
            }
            (Attachment::Root, _) => unreachable!("only the first piece is a root"),
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{k3_edge, k3_root};
    use super::super::*;
    use super::*;

    fn set(ids: &[VertexId]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn triangle_rule_adds_new_vertex() {
        // v = 0, p = 1, q = 2, r = 3
        let s = GeneratingSequence::new(vec![k3_root([0, 1, 2]), k3_edge([0, 1], 3)]);
        let out = extend_stable_set(&s, 1, set(&[2]), 0).unwrap();
        assert_eq!(out, set(&[2, 3]));
        assert!(s.build().unwrap().is_stable(out));
    }

    #[test]
    fn triangle_rule_keeps_set_when_b_taken() {
        let s = GeneratingSequence::new(vec![k3_root([0, 1, 2]), k3_edge([0, 1], 3)]);
        assert_eq!(extend_stable_set(&s, 1, set(&[1]), 0).unwrap(), set(&[1]));
    }

    #[test]
    fn prism_edge_rule() {
        // v = 0, b = 1, x = 2; prism slots u=3, w=4, a=5, c=6
        let s = GeneratingSequence::new(vec![
            k3_root([0, 1, 2]),
            Piece {
                kind: PieceKind::Prism,
                attach: Attachment::Edge([0, 1]),
                fresh: vec![3, 4, 5, 6],
                along: EdgeRole::Matching,
            },
        ]);
        let out = extend_stable_set(&s, 1, set(&[2]), 0).unwrap();
        assert_eq!(out, set(&[2, 5, 4]));
        assert!(s.build().unwrap().is_stable(out));

        let with_b = extend_stable_set(&s, 1, set(&[1]), 0).unwrap();
        assert_eq!(with_b, set(&[1, 4]));
    }

    #[test]
    fn prism_triangle_rule_adds_b() {
        // root prism u=0 v=1 w=2 | a=3 b=4 c=5; second prism glued on 0-1-2 with
        // new bottom 6 7 8, so its b (matched to v=1) is 7.
        let s = GeneratingSequence::new(vec![
            Piece {
                kind: PieceKind::Prism,
                attach: Attachment::Root,
                fresh: (0..6).collect(),
                along: EdgeRole::Matching,
            },
            Piece {
                kind: PieceKind::Prism,
                attach: Attachment::Triangle([0, 1, 2]),
                fresh: vec![6, 7, 8],
                along: EdgeRole::Matching,
            },
        ]);
        let out = extend_stable_set(&s, 1, set(&[3]), 1).unwrap();
        assert_eq!(out, set(&[3, 7]));
        assert!(s.build().unwrap().is_stable(out));
    }

    #[test]
    fn precondition_failures() {
        let s = GeneratingSequence::new(vec![k3_root([0, 1, 2]), k3_edge([0, 1], 3)]);
        assert_eq!(extend_stable_set(&s, 1, set(&[2]), 2), Err(GscError::VertexNotInPiece { vertex: 2, piece: 2 }));
        assert_eq!(extend_stable_set(&s, 1, set(&[0]), 0), Err(GscError::SeedContainsVertex(0)));
        assert_eq!(extend_stable_set(&s, 1, set(&[1, 2]), 0), Err(GscError::SeedNotStable(1)));
        assert_eq!(extend_stable_set(&s, 1, set(&[3]), 0), Err(GscError::SeedOutsidePrefix(1)));
        assert_eq!(extend_stable_set(&s, 3, set(&[]), 0), Err(GscError::IndexOutOfRange { index: 3, len: 2 }));

        let raw = GeneratingSequence::new(vec![
            k3_root([0, 1, 2]),
            Piece {
                kind: PieceKind::Prism,
                attach: Attachment::Edge([0, 1]),
                fresh: vec![3, 4, 5, 6],
                along: EdgeRole::Triangle,
            },
        ]);
        assert_eq!(extend_stable_set(&raw, 1, set(&[2]), 0), Err(GscError::NotNormalized { piece: 2 }));
        let norm = raw.normalize().unwrap();
        let out = extend_stable_set(&norm, 1, set(&[2]), 0).unwrap();
        assert!(norm.build().unwrap().is_stable(out) && out.contains(2) && !out.contains(0));
    }
}
