use super::Piece;

/// Re-roots a valid sequence at the 0-based piece `target`.
///
/// View the sequence as the prefix `G1` (all but the last piece) glued to the
/// last piece `G2` along its attachment clique `C`. If `target` lies in the
/// prefix, re-root the prefix and append `G2` unchanged. Otherwise `G2` becomes
/// the root and the prefix follows, re-rooted at a piece containing `C` (every
/// clique of the prefix lies inside a single piece) and glued onto `C`.
pub(super) fn reroot(pieces: &[Piece], target: usize) -> Vec<Piece> {
    let k = pieces.len();
    if k == 1 {
        return pieces.to_vec();
    }
    let last = &pieces[k - 1];
    if target < k - 1 {
        let mut out = reroot(&pieces[..k - 1], target);
        out.push(last.clone());
        return out;
    }

    let clique = last.attach.clique();
    let layout = last.layout().expect("validated piece");
    let root = layout.attached_at(Default::default()).expect("any piece can be a root");
    let host = pieces[..k - 1]
        .iter()
        .position(|p| clique.is_subset(p.layout().expect("validated piece").vertices()))
        .expect("attachment clique lies in an earlier piece");
    let rest = reroot(&pieces[..k - 1], host);
    let glued =
        rest[0].layout().expect("validated piece").attached_at(clique).expect("clique belongs to the host piece");

    let mut out = Vec::with_capacity(k);
    out.push(root);
    out.push(glued);
    out.extend(rest.into_iter().skip(1));
    out
}

#[cfg(test)]
mod tests {
    use super::super::tests::{k3_edge, k3_root};
    use super::super::*;

    #[test]
    fn single_piece_is_identity() {
        let s = GeneratingSequence::new(vec![k3_root([0, 1, 2])]);
        assert_eq!(s.reroot(1).unwrap(), s);
    }

    #[test]
    fn k4_minus_rerooted_at_second_triangle() {
        let s = GeneratingSequence::new(vec![k3_root([0, 1, 2]), k3_edge([0, 1], 3)]);
        let r = s.reroot(2).unwrap();
        assert_eq!(r.pieces()[0], k3_root([0, 1, 3]));
        assert_eq!(r.pieces()[1], k3_edge([0, 1], 2));
        assert_eq!(r.build().unwrap(), s.build().unwrap());
    }

    #[test]
    fn three_piece_sequence_rerooted_at_last() {
        let s = GeneratingSequence::new(vec![
            k3_root([0, 1, 2]),
            Piece {
                kind: PieceKind::Prism,
                attach: Attachment::Edge([0, 1]),
                fresh: vec![3, 4, 5, 6],
                along: EdgeRole::Matching,
            },
            k3_edge([3, 0], 7),
        ]);
        let r = s.reroot(3).unwrap();
        assert!(r.validate().is_ok());
        assert_eq!(r.len(), 3);
        assert_eq!(r.pieces()[0].layout().unwrap().vertices(), VertexSet::from_iter([0, 3, 7]));
        assert_eq!(r.build().unwrap(), s.build().unwrap());
    }

    #[test]
    fn out_of_range() {
        let s = GeneratingSequence::new(vec![k3_root([0, 1, 2])]);
        assert_eq!(s.reroot(0), Err(GscError::IndexOutOfRange { index: 0, len: 1 }));
        assert_eq!(s.reroot(2), Err(GscError::IndexOutOfRange { index: 2, len: 1 }));
    }
}
