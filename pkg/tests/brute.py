"""Naive reference implementations used as test oracles.

Deliberately written from definitions only, sharing no code with the package.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx


def brute_embeddings(H, G):
    """All order-preserving images of ``H`` in ``G`` by trying every vertex subset."""
    out = []
    for image in combinations(range(1, G.n + 1), H.n):
        if all(G.has_edge(image[u - 1], image[v - 1]) for u, v in H.edges):
            out.append(image)
    return out


def brute_contains(G, H) -> bool:
    return bool(brute_embeddings(H, G))


def brute_chi(G) -> int:
    """Chromatic number by trying every colouring with k colours, k ascending."""
    if G.n == 0:
        return 0
    for k in range(1, G.n + 1):
        for col in product(range(k), repeat=G.n):
            if all(col[u - 1] != col[v - 1] for u, v in G.edges):
                return k
    raise AssertionError("unreachable")


def brute_inner_cuts(G):
    return [v for v in range(2, G.n) if not any(u < v < w for u, w in G.edges)]


def brute_interval_chi(G) -> int:
    """Fewest independent consecutive intervals, over all cut sets."""
    best = G.n
    for r in range(G.n):
        for cuts in combinations(range(1, G.n), r):
            bounds = [0, *cuts, G.n]
            ok = all(
                not any(a < u and v <= b for u, v in G.edges)
                for a, b in zip(bounds, bounds[1:])
            )
            if ok:
                best = min(best, r + 1)
    return best


def to_nx(G) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(1, G.n + 1))
    g.add_edges_from(G.edges)
    return g


def crosses(e, f) -> bool:
    (a, b), (c, d) = sorted([tuple(sorted(e)), tuple(sorted(f))])
    return a < c < b < d


def path_is_tangled(path) -> bool:
    """Definition check: an interior extreme vertex splits a crossing pair."""
    lo, hi = min(path), max(path)
    for i in range(1, len(path) - 1):
        if path[i] not in (lo, hi):
            continue
        before = [(path[j], path[j + 1]) for j in range(i)]
        after = [(path[j], path[j + 1]) for j in range(i, len(path) - 1)]
        if any(crosses(e, f) for e in before for f in after):
            return True
    return False


def brute_has_tangled_path(G) -> bool:
    g = to_nx(G)
    for s, t in combinations(range(1, G.n + 1), 2):
        for p in nx.all_simple_paths(g, s, t):
            if len(p) >= 4 and path_is_tangled(p):
                return True
    return False


def brute_is_monoalt(T) -> bool:
    """Definition of a monotonically alternating tree, checked over every split."""
    n = T.n
    if n == 1:
        return True
    nbrs = {v: [w for e in T.edges for w in e if v in e and w != v] for v in range(1, n + 1)}
    for p in range(1, n):
        L = set(range(1, p + 1))
        if any((u in L) == (v in L) for u, v in T.edges):
            continue
        chosen = {True: set(), False: set()}
        ok = True
        for v in range(1, n + 1):
            lengths = sorted((abs(v - w), w) for w in nbrs[v])
            if len(lengths) > 1 and lengths[0][0] == lengths[1][0]:
                ok = False
                break
            w = lengths[0][1]
            chosen[v in L].add((min(v, w), max(v, w)))
        if not ok or chosen[True] | chosen[False] != set(T.edges):
            continue
        if any(crosses(e, f) for side in chosen.values() for e, f in combinations(side, 2)):
            continue
        return True
    return False
