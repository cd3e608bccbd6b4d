mod common;

use proptest::prelude::*;

use common::Adj;
use stable_cutset::gsc::{random_gsc, Attachment};
use stable_cutset::{find_stable_cutset, from_graph6, to_graph6, Graph, Recognizer, Verdict, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(40)) {
        let code = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&code).unwrap(), g);
    }

    #[test]
    fn identifying_non_adjacent_vertices(g in arb_graph(12), x in 0usize..12, y in 0usize..12) {
        let n = g.n();
        let (x, y) = (x % n, y % n);
        prop_assume!(x != y && !g.has_edge(x, y));
        let id = g.identify_vertices(x, y).unwrap();
        let common = g.common_neighbors(x, y).len();
        prop_assert_eq!(id.graph.n(), n - 1);
        prop_assert_eq!(id.graph.edge_count(), g.edge_count() - common);
        prop_assert_eq!(id.relabel[x], id.relabel[y]);
        let merged = id.relabel[x];
        prop_assert_eq!(id.graph.degree(merged), g.degree(x) + g.degree(y) - common);
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    prop_assert!(id.graph.has_edge(id.relabel[u], id.relabel[v]));
                }
            }
        }
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(20)) {
        let comps = g.components();
        let mut union = VertexSet::EMPTY;
        for c in &comps {
            prop_assert!(!c.is_empty() && c.is_disjoint(union));
            prop_assert!(g.is_connected_within(*c));
            prop_assert!(g.neighborhood_of(*c).is_subset(*c));
            union = union.union(*c);
        }
        prop_assert_eq!(union, g.vertices());
        prop_assert_eq!(comps.len(), Adj::of(&g).components(Adj::of(&g).all()));
    }

    #[test]
    fn triangles_match_brute_force(g in arb_graph(12)) {
        let a = Adj::of(&g);
        let want: Vec<[usize; 3]> = common::subsets_of_size(a.n, 3)
            .filter(|&s| common::bits(s).all(|v| a.rows[v] & s == s & !(1 << v)))
            .map(|s| { let v: Vec<usize> = common::bits(s).collect(); [v[0], v[1], v[2]] })
            .collect();
        let mut got = g.triangles();
        got.sort_unstable();
        let mut want = want;
        want.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn stable_cutset_agrees_with_brute_force(g in arb_graph(10)) {
        let a = Adj::of(&g);
        let found = find_stable_cutset(&g);
        prop_assert_eq!(found.is_some(), a.n >= 2 && common::has_stable_cutset(&a, 0));
        if let Some(c) = found {
            prop_assert!(g.is_stable(c.cutset) && a.disconnects(c.cutset.bits()));
        }
    }

    #[test]
    fn sequence_operations_preserve_the_graph(pieces in 1usize..=8, seed in any::<u64>()) {
        let s = random_gsc(pieces, seed).unwrap();
        let g = s.build().unwrap();
        prop_assert_eq!(g.edge_count() + 3, 2 * g.n());
        prop_assert!(g.is_connected());

        let norm = s.normalize().unwrap();
        prop_assert!(norm.is_normalized());
        prop_assert_eq!(norm.build().unwrap(), g.clone());

        for i in 1..=s.len() {
            let r = s.reroot(i).unwrap();
            prop_assert_eq!(r.len(), s.len());
            prop_assert_eq!(r.pieces()[0].attach, Attachment::Root);
            prop_assert_eq!(r.build().unwrap(), g.clone());
        }

        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<stable_cutset::GeneratingSequence>(&json).unwrap(), s);
    }

    #[test]
    fn recognition_is_invariant_under_relabelling(pieces in 1usize..=6, seed in any::<u64>(), shift in 0usize..64) {
        let g = random_gsc(pieces, seed).unwrap().build().unwrap();
        let n = g.n();
        let perm: Vec<usize> = (0..n).map(|v| (v * 7 + shift) % n).collect();
        prop_assume!({ let mut p = perm.clone(); p.sort_unstable(); p.dedup(); p.len() == n });
        let h = g.permuted(&perm);
        let rec = Recognizer::new();
        let r = rec.recognize(&h).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Member);
        prop_assert_eq!(r.certificate.unwrap().build().unwrap(), h);
    }
}
