//! Brute-force reference implementations. They only read adjacency through
//! `Graph::has_edge` and enumerate vertex subsets directly, so they share no
//! search logic with the library.
#![allow(dead_code)]

use std::path::PathBuf;

use stable_cutset::Graph;

/// Plain adjacency rows copied out of a graph.
pub struct Adj {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl Adj {
    pub fn of(g: &Graph) -> Adj {
        let n = g.n();
        let rows =
            (0..n).map(|u| (0..n).filter(|&v| v != u && g.has_edge(u, v)).fold(0u64, |acc, v| acc | 1 << v)).collect();
        Adj { n, rows }
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_stable(&self, set: u64) -> bool {
        bits(set).all(|v| self.rows[v] & set == 0)
    }

    /// Number of connected components of the subgraph induced by `within`.
    pub fn components(&self, within: u64) -> usize {
        let mut left = within;
        let mut count = 0;
        while left != 0 {
            count += 1;
            let start = left.trailing_zeros() as usize;
            let mut stack = vec![start];
            left &= !(1 << start);
            while let Some(u) = stack.pop() {
                for v in bits(self.rows[u] & left) {
                    left &= !(1 << v);
                    stack.push(v);
                }
            }
        }
        count
    }

    /// Removing `set` leaves at least two components.
    pub fn disconnects(&self, set: u64) -> bool {
        self.components(self.all() & !set) >= 2
    }
}

pub fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            v
        })
    })
}

/// Whether some stable set avoiding `forbidden` disconnects the graph.
/// Enumerates every stable set by include/exclude recursion.
pub fn has_stable_cutset(a: &Adj, forbidden: u64) -> bool {
    fn go(a: &Adj, v: usize, chosen: u64, blocked: u64) -> bool {
        if a.disconnects(chosen) {
            return true;
        }
        (v..a.n).any(|w| blocked >> w & 1 == 0 && go(a, w + 1, chosen | 1 << w, blocked | a.rows[w]))
    }
    go(a, 0, 0, forbidden)
}

/// Membership by the extremal characterization: exactly `2n - 3` edges and no
/// stable cutset.
pub fn is_member(a: &Adj) -> bool {
    a.n >= 3 && a.edge_count() + 3 == 2 * a.n && !has_stable_cutset(a, 0)
}

pub fn has_3edge_matching_cut(a: &Adj) -> bool {
    // Fix vertex 0 on side A and try every other side assignment.
    let n = a.n;
    (0..1u64 << (n - 1)).any(|mask| {
        let side_b = mask << 1;
        if side_b == 0 {
            return false;
        }
        let crossing: Vec<(usize, usize)> = (0..n)
            .filter(|&u| side_b >> u & 1 == 0)
            .flat_map(|u| bits(a.rows[u] & side_b).map(move |v| (u, v)))
            .collect();
        if crossing.len() != 3 {
            return false;
        }
        let mut seen = 0u64;
        crossing.iter().all(|&(u, v)| {
            let fresh = seen & (1 << u | 1 << v) == 0;
            seen |= 1 << u | 1 << v;
            fresh
        })
    })
}

pub fn has_p3_cutset(a: &Adj) -> bool {
    subsets_of_size(a.n, 3).any(|s| {
        let vs: Vec<usize> = bits(s).collect();
        let edges = [(0, 1), (0, 2), (1, 2)].iter().filter(|&&(i, j)| a.adjacent(vs[i], vs[j])).count();
        edges == 2 && a.disconnects(s)
    })
}

/// Two triangles sharing an edge, not necessarily induced: some four
/// vertices span at least five edges.
pub fn has_k4_minus(a: &Adj) -> bool {
    subsets_of_size(a.n, 4).any(|s| {
        let vs: Vec<usize> = bits(s).collect();
        let mut edges = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                edges += a.adjacent(vs[i], vs[j]) as usize;
            }
        }
        edges >= 5
    })
}

pub fn is_3_connected(a: &Adj) -> bool {
    if a.n < 4 || a.components(a.all()) != 1 {
        return false;
    }
    (1..=2).all(|k| subsets_of_size(a.n, k).all(|s| !a.disconnects(s)))
}

pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0..1u64 << n).filter(move |s| s.count_ones() as usize == k)
}

pub fn corpus_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../corpora/graphs_n{n}.g6"))
}

/// Lines of the exhaustive corpus of order `n`.
pub fn corpus(n: usize) -> Vec<String> {
    let path = corpus_path(n);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(str::to_string)
        .collect()
}

pub fn corpus_graphs(n: usize) -> Vec<(String, Graph)> {
    corpus(n)
        .into_iter()
        .map(|line| {
            let g = stable_cutset::from_graph6(&line).expect("corpus line parses");
            (line, g)
        })
        .collect()
}
