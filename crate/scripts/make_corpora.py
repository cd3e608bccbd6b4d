#!/usr/bin/env python3
"""Write exhaustive graph6 corpora of all non-isomorphic simple graphs.

Orders 1..7 come straight from the networkx graph atlas. Order 8 is built by
adding one vertex, with every possible neighbourhood, to each order-7 graph and
keeping one representative per isomorphism class. Counts are checked against
the known totals (OEIS A000088 / A001349) before anything is written.

Usage: python3 scripts/make_corpora.py [OUT_DIR]   (default: corpora/)
"""
import itertools
import os
import sys
from collections import defaultdict

import networkx as nx

ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def extend(graphs, n):
    buckets = defaultdict(list)
    for g in graphs:
        for r in range(n):
            for nbrs in itertools.combinations(range(n - 1), r):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, u) for u in nbrs)
                key = (
                    h.number_of_edges(),
                    tuple(sorted(d for _, d in h.degree())),
                    nx.weisfeiler_lehman_graph_hash(h, iterations=3),
                )
                bucket = buckets[key]
                if not any(nx.is_isomorphic(h, other) for other in bucket):
                    bucket.append(h)
    return [g for b in buckets.values() for g in b]


def g6(g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "corpora"
    os.makedirs(out, exist_ok=True)
    by_order = defaultdict(list)
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() >= 1:
            by_order[g.number_of_nodes()].append(g)
    by_order[8] = extend(by_order[7], 8)
    for n in sorted(ALL):
        graphs = by_order[n]
        connected = sum(1 for g in graphs if nx.is_connected(g))
        assert len(graphs) == ALL[n], (n, len(graphs))
        assert connected == CONNECTED[n], (n, connected)
        lines = sorted(g6(g) for g in graphs)
        with open(os.path.join(out, f"graphs_n{n}.g6"), "w") as f:
            f.write("\n".join(lines) + "\n")
        print(f"n={n}: {len(graphs)} graphs, {connected} connected")


if __name__ == "__main__":
    main()
