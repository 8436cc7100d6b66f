"""Explicit ordered graphs used as lower-bound witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import OrderedGraph, contains, reverse
from .patterns import is_minimal_tangled

DEFAULT_VERTEX_CAP = 10**6


def complete_graph(n: int) -> OrderedGraph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return OrderedGraph(n, frozenset(combinations(range(1, n + 1), 2)))


def shift_pairs(n: int) -> list[tuple[int, int]]:
    """Vertices of the shift graph in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))


def shift_graph(n: int) -> OrderedGraph:
    """Pairs ``(i, j)`` ranked lexicographically, with ``(i, j) ~ (j, t)``."""
    if n < 2:
        raise ValueError("shift_graph needs n >= 2")
    rank = {p: r for r, p in enumerate(shift_pairs(n), 1)}
    edges = frozenset((rank[(i, j)], rank[(j, t)]) for i, j, t in combinations(range(1, n + 1), 3))
    return OrderedGraph(len(rank), edges)


def spiral_path(k: int) -> OrderedGraph:
    """The path 1, k, 2, k-1, 3, ... spiralling inwards."""
    if k < 4:
        raise ValueError("spiral_path needs k >= 4")
    lo, hi = 1, k
    seq = []
    while lo <= hi:
        seq.append(lo)
        if lo != hi:
            seq.append(hi)
        lo, hi = lo + 1, hi - 1
    return OrderedGraph.from_edges(k, zip(seq, seq[1:]))


@dataclass(frozen=True)
class Spindle:
    k: int
    graph: OrderedGraph
    path: OrderedGraph
    u: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    x: int
    y: int


def spindle(k: int) -> Spindle:
    """(2k-1)-vertex gadget of four (k-1)-cliques plus the edge xy.

    Layout: u < x_1 < ... < x_{k-2} < y_1 < ... < y_{k-2} < x < y.
    """
    if k < 4:
        raise ValueError("spindle needs k >= 4")
    u = 1
    xs = tuple(range(2, k))
    ys = tuple(range(k, 2 * k - 2))
    x, y = 2 * k - 2, 2 * k - 1
    edges = {(x, y)}
    for clique in ((u, *xs), (u, *ys), (*xs, x), (*ys, y)):
        edges.update(combinations(sorted(clique), 2))
    return Spindle(k, OrderedGraph(2 * k - 1, frozenset(edges)), spiral_path(k), u, xs, ys, x, y)


@dataclass(frozen=True)
class TutteGraph:
    graph: OrderedGraph
    k: int
    base_size: int  # n
    N: int
    M: int
    blocks: tuple[tuple[int, ...], ...]  # U_1..U_M
    right_block: tuple[int, ...]  # V
    subsets: tuple[tuple[int, ...], ...]  # V_i matched to U_i
    reversed: bool = False

    def metadata(self) -> dict:
        return {"k": self.k, "n": self.base_size, "N": self.N, "M": self.M,
                "vertices": self.graph.n, "edges": self.graph.m, "reversed": self.reversed}


def tutte_sizes(n: int, k: int) -> tuple[int, int, int]:
    N = (k - 1) * (n - 1) + 1
    M = comb(N, n)
    return N, M, M * n + N


def tutte_step(P: OrderedGraph, base: OrderedGraph, k: int,
               vertex_cap: int = DEFAULT_VERTEX_CAP, check: bool = True) -> TutteGraph:
    """One round of the Blanche Descartes blow-up against a minimal tangled path ``P``.

    ``base`` must avoid ``P``; the result avoids ``P`` and needs ``k`` colours
    whenever ``base`` needs ``k - 1``.
    """
    rep = is_minimal_tangled(P)
    if not rep.minimal:
        raise ValueError("P is not a minimal tangled path")
    if check and contains(base, P):
        raise ValueError("base contains P")
    if not rep.rightmost_crossing:
        # mirror everything so the rightmost vertex splits a crossing pair
        R = tutte_step(reverse(P), reverse(base), k, vertex_cap, check=False)
        n_tot = R.graph.n
        flip = lambda v: n_tot + 1 - v  # noqa: E731
        return TutteGraph(
            reverse(R.graph), k, R.base_size, R.N, R.M,
            tuple(tuple(sorted(map(flip, b))) for b in reversed(R.blocks)),
            tuple(sorted(map(flip, R.right_block))),
            tuple(tuple(sorted(map(flip, s))) for s in reversed(R.subsets)),
            reversed=True,
        )
    n = base.n
    N, M, total = tutte_sizes(n, k)
    if total > vertex_cap:
        raise ValueError(f"construction needs {total} vertices, above the cap {vertex_cap}")
    V = tuple(range(M * n + 1, M * n + N + 1))
    subsets = tuple(combinations(V, n))
    edges = set()
    blocks = []
    for i, Vi in enumerate(subsets):
        off = i * n
        block = tuple(range(off + 1, off + n + 1))
        blocks.append(block)
        edges.update((a + off, b + off) for a, b in base.edges)
        edges.update(zip(block, Vi))
    G = OrderedGraph(total, frozenset(edges))
    return TutteGraph(G, k, n, N, M, tuple(blocks), V, subsets)
