"""Exact ground truth at desk scale: chromatic numbers and exhaustive avoider searches."""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Sequence

import numpy as np
from pysat.solvers import Solver

from .core import OrderedGraph, contains, induced, norm_edge
from .patterns import BudgetExhausted

DEFAULT_NODE_BUDGET = 5_000_000
EXHAUSTIVE_MAX_N = 7


def node_budget() -> int:
    return int(os.environ.get("ORDCHROM_NODE_BUDGET", DEFAULT_NODE_BUDGET))


# ---------------------------------------------------------------------------
# chromatic number


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    coloring: tuple[int, ...]  # colour of vertex v at index v-1
    clique: tuple[int, ...]
    refuted: int | None  # k-1 colours refuted by exhaustive search (None if clique suffices)
    nodes: int

    def to_json(self) -> dict:
        return {"value": self.value, "coloring": list(self.coloring),
                "lower_bound": {"clique": list(self.clique), "refuted_colors": self.refuted},
                "nodes": self.nodes}


def is_proper(G: OrderedGraph, coloring: Sequence[int]) -> bool:
    return len(coloring) == G.n and all(coloring[u - 1] != coloring[v - 1] for u, v in G.edges)


def greedy_clique(G: OrderedGraph) -> list[int]:
    best: list[int] = []
    order = sorted(G.vertices, key=lambda v: -G.degree(v))
    for seed in order:
        clique = [seed]
        cand = set(G.adj[seed])
        for v in order:
            if v in cand:
                clique.append(v)
                cand &= G.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur_greedy(G: OrderedGraph) -> list[int]:
    n = G.n
    col = [-1] * (n + 1)
    sat: list[set[int]] = [set() for _ in range(n + 1)]
    for _ in range(n):
        v = max((x for x in G.vertices if col[x] < 0), key=lambda x: (len(sat[x]), G.degree(x), -x))
        c = 0
        while c in sat[v]:
            c += 1
        col[v] = c
        for w in G.adj[v]:
            sat[w].add(c)
    return col[1:]


class _Search:
    def __init__(self, G: OrderedGraph, k: int, budget: int, fixed: Sequence[int]):
        self.G, self.k, self.budget = G, k, budget
        n = G.n
        self.col = [-1] * (n + 1)
        self.cnt = [[0] * k for _ in range(n + 1)]
        self.satn = [0] * (n + 1)
        self.nodes = 0
        self.uncolored = set(G.vertices)
        for c, v in enumerate(fixed):
            self.assign(v, c)

    def assign(self, v: int, c: int) -> None:
        self.col[v] = c
        self.uncolored.discard(v)
        for w in self.G.adj[v]:
            row = self.cnt[w]
            if row[c] == 0:
                self.satn[w] += 1
            row[c] += 1

    def unassign(self, v: int, c: int) -> None:
        self.col[v] = -1
        self.uncolored.add(v)
        for w in self.G.adj[v]:
            row = self.cnt[w]
            row[c] -= 1
            if row[c] == 0:
                self.satn[w] -= 1

    def run(self, used: int) -> bool:
        if not self.uncolored:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"colouring search exceeded {self.budget} nodes")
        G = self.G
        v = max(self.uncolored, key=lambda x: (self.satn[x], G.degree(x), -x))
        if self.satn[v] >= self.k:
            return False
        row = self.cnt[v]
        for c in range(min(self.k, used + 1)):
            if row[c]:
                continue
            self.assign(v, c)
            if self.run(max(used, c + 1)):
                return True
            self.unassign(v, c)
        return False


def k_coloring(G: OrderedGraph, k: int, budget: int | None = None,
               clique: Sequence[int] | None = None) -> tuple[list[int] | None, int]:
    """Decide ``k``-colourability exactly. Returns ``(colouring or None, nodes)``."""
    import sys

    if G.n == 0:
        return [], 0
    if k <= 0:
        return None, 0
    clique = list(clique) if clique is not None else greedy_clique(G)
    if len(clique) > k:
        return None, 0
    budget = node_budget() if budget is None else budget
    s = _Search(G, k, budget, clique)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * G.n + 100))
    try:
        ok = s.run(len(clique))
    finally:
        sys.setrecursionlimit(old)
    return (s.col[1:] if ok else None), s.nodes


def sat_k_coloring(G: OrderedGraph, k: int, budget: int | None = None,
                   clique: Sequence[int] | None = None) -> tuple[list[int] | None, int]:
    """Decide ``k``-colourability with a CDCL solver. Returns ``(colouring or None, conflicts)``.

    Same contract as :func:`k_coloring`, with ``budget`` counting solver conflicts.
    Clause learning copes with graphs whose obstruction is a pigeonhole over a
    small vertex set, where plain branch and bound thrashes.
    """
    if G.n == 0:
        return [], 0
    if k <= 0:
        return None, 0
    clique = list(clique) if clique is not None else greedy_clique(G)
    if len(clique) > k:
        return None, 0
    budget = node_budget() if budget is None else budget

    def var(v: int, c: int) -> int:
        return (v - 1) * k + c + 1

    with Solver(name="cadical153") as s:
        for v in G.vertices:
            s.add_clause([var(v, c) for c in range(k)])
        for u, v in G.edges:
            for c in range(k):
                s.add_clause([-var(u, c), -var(v, c)])
        # colour symmetry: pin the clique to the first colours
        for c, v in enumerate(clique):
            s.add_clause([var(v, c)])
        s.conf_budget(budget)
        ok = s.solve_limited()
        conflicts = s.accum_stats().get("conflicts", 0)
        if ok is None:
            raise BudgetExhausted(f"SAT search exceeded {budget} conflicts")
        if not ok:
            return None, conflicts
        true = {x for x in s.get_model() if x > 0}
    col = [next(c for c in range(k) if var(v, c) in true) for v in G.vertices]
    return col, conflicts


def chromatic_number(G: OrderedGraph, budget: int | None = None,
                     method: str = "dsatur") -> ChromaticResult:
    """Exact chromatic number with a proper colouring and a lower-bound certificate.

    ``method`` is ``"dsatur"`` (branch and bound, budget in nodes) or ``"sat"``
    (CDCL, budget in conflicts). Raises :class:`BudgetExhausted` rather than
    guessing when the search is too large.
    """
    if G.n < 1:
        raise ValueError("empty graph")
    decide = {"dsatur": k_coloring, "sat": sat_k_coloring}.get(method)
    if decide is None:
        raise ValueError(f"unknown method {method!r}")
    budget = node_budget() if budget is None else budget
    clique = greedy_clique(G)
    best = dsatur_greedy(G)
    ub = max(best) + 1
    nodes = 0
    for k in range(len(clique), ub):
        col, used = decide(G, k, budget - nodes, clique)
        nodes += used
        if col is not None:
            return ChromaticResult(k, tuple(col), tuple(clique), k - 1 if k > len(clique) else None, nodes)
    refuted = ub - 1 if ub > len(clique) else None
    return ChromaticResult(ub, tuple(best), tuple(clique), refuted, nodes)


def chi(G: OrderedGraph) -> int:
    return chromatic_number(G).value


def _chi_small(n: int, nbr: Sequence[int]) -> int:
    """Chromatic number from neighbour bitmasks, for tiny graphs."""
    full = (1 << n) - 1
    if not any(nbr):
        return 1 if n else 0
    # independent subsets
    indep = [True] * (full + 1)
    for S in range(1, full + 1):
        low = S & -S
        v = low.bit_length() - 1
        rest = S ^ low
        indep[S] = indep[rest] and not (nbr[v] & rest)
    best = [0] + [n + 1] * full
    for S in range(1, full + 1):
        low = S & -S
        rest = S ^ low
        # independent sets containing the lowest vertex of S
        T = rest
        b = n + 1
        while True:
            I = T | low
            if indep[I]:
                c = best[S ^ I] + 1
                if c < b:
                    b = c
            if T == 0:
                break
            T = (T - 1) & rest
        best[S] = b
    return best[full]


# ---------------------------------------------------------------------------
# avoider searches


@dataclass(frozen=True)
class SearchReport:
    n: int
    pattern: OrderedGraph
    objective: str  # "max_chi" | "max_edges"
    value: int | None
    witness: OrderedGraph | None
    examined: int
    wall_time: float
    exhaustive: bool

    @property
    def lower_bound_only(self) -> bool:
        return not self.exhaustive

    def verify(self) -> bool:
        if self.witness is None:
            return self.value in (None, 0)
        if contains(self.witness, self.pattern):
            return False
        got = chi(self.witness) if self.objective == "max_chi" else self.witness.m
        return got == self.value

    def to_json(self) -> dict:
        return {"n": self.n, "pattern": str(self.pattern), "objective": self.objective,
                "value": self.value, "witness": str(self.witness) if self.witness else None,
                "examined": self.examined, "wall_time": round(self.wall_time, 4),
                "exhaustive": self.exhaustive, "lower_bound_only": self.lower_bound_only}


def _edge_index(n: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(combinations(range(1, n + 1), 2))}


def copy_masks(H: OrderedGraph, n: int) -> list[int]:
    """Edge bitmasks of every order-preserving placement of ``H`` into ``K_n``."""
    idx = _edge_index(n)
    masks = set()
    for image in combinations(range(1, n + 1), H.n):
        m = 0
        for u, v in H.edges:
            m |= 1 << idx[(image[u - 1], image[v - 1])]
        masks.add(m)
    return sorted(masks)


def _mask_graph(n: int, mask: int) -> OrderedGraph:
    pairs = list(combinations(range(1, n + 1), 2))
    return OrderedGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def _avoider_table(H: OrderedGraph, n: int) -> tuple[np.ndarray, np.ndarray]:
    E = n * (n - 1) // 2
    masks = np.arange(1 << E, dtype=np.int64)
    avoid = np.ones(1 << E, dtype=bool)
    for c in copy_masks(H, n):
        avoid &= (masks & c) != c
    return masks, avoid


def _nbr_masks(n: int, mask: int, pairs) -> list[int]:
    nbr = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            nbr[u - 1] |= 1 << (v - 1)
            nbr[v - 1] |= 1 << (u - 1)
    return nbr


def _exhaustive(H: OrderedGraph, n: int, objective: str) -> SearchReport:
    t0 = time.perf_counter()
    E = n * (n - 1) // 2
    masks, avoid = _avoider_table(H, n)
    examined = int(avoid.sum())
    if examined == 0:
        return SearchReport(n, H, objective, 0, None, 1 << E, time.perf_counter() - t0, True)
    if objective == "max_edges":
        pop = np.zeros_like(masks)
        for e in range(E):
            pop += (masks >> e) & 1
        pop = np.where(avoid, pop, -1)
        best = int(pop.argmax())
        return SearchReport(n, H, objective, int(pop[best]), _mask_graph(n, best), 1 << E,
                            time.perf_counter() - t0, True)
    # chromatic number is monotone under adding edges: only maximal avoiders matter
    maximal = avoid.copy()
    for e in range(E):
        bit = 1 << e
        up = masks | bit
        maximal &= ((masks & bit) != 0) | ~avoid[up]
    pairs = list(combinations(range(1, n + 1), 2))
    best_val, best_mask = -1, 0
    for mask in np.flatnonzero(maximal):
        mask = int(mask)
        c = _chi_small(n, _nbr_masks(n, mask, pairs))
        if c > best_val:
            best_val, best_mask = c, mask
            if c == n:
                break
    return SearchReport(n, H, objective, best_val, _mask_graph(n, best_mask), 1 << E,
                        time.perf_counter() - t0, True)


def random_maximal_avoider(H: OrderedGraph, n: int, rng: random.Random,
                           max_edges: int | None = None) -> OrderedGraph:
    """Add edges of ``K_n`` in random order while the graph keeps avoiding ``H``."""
    pairs = list(combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    edges: set[tuple[int, int]] = set()
    for e in pairs:
        if max_edges is not None and len(edges) >= max_edges:
            break
        trial = OrderedGraph(n, frozenset(edges | {e}))
        if not contains(trial, H):
            edges.add(e)
    return OrderedGraph(n, frozenset(edges))


def _heuristic(H: OrderedGraph, n: int, objective: str, trials: int, seed: int) -> SearchReport:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    best_val, best = -1, None
    for _ in range(trials):
        G = random_maximal_avoider(H, n, rng)
        if contains(G, H):  # only possible for patterns with isolated vertices
            continue
        val = chi(G) if objective == "max_chi" else G.m
        if val > best_val:
            best_val, best = val, G
    return SearchReport(n, H, objective, best_val if best is not None else 0, best, trials,
                        time.perf_counter() - t0, False)


def max_chi_avoiders(H: OrderedGraph, n: int, exhaustive: bool | None = None,
                     trials: int = 200, seed: int = 0) -> SearchReport:
    """Largest chromatic number among ``n``-vertex ordered graphs avoiding ``H``.

    Exhaustive for ``n <= 7``; otherwise (or with ``exhaustive=False``) a
    randomized search whose value is only a lower bound.
    """
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_MAX_N
    if exhaustive and n > EXHAUSTIVE_MAX_N:
        exhaustive = False
    if exhaustive:
        return _exhaustive(H, n, "max_chi")
    return _heuristic(H, n, "max_chi", trials, seed)


def extremal_number(H: OrderedGraph, n: int, exhaustive: bool | None = None,
                    trials: int = 200, seed: int = 0) -> SearchReport:
    """Largest edge count of an ``n``-vertex ordered graph avoiding ``H``."""
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_MAX_N
    if exhaustive and n > EXHAUSTIVE_MAX_N:
        exhaustive = False
    if exhaustive:
        return _exhaustive(H, n, "max_edges")
    return _heuristic(H, n, "max_edges", trials, seed)


# ---------------------------------------------------------------------------
# orderings of unordered graphs

MAX_ORDERING_VERTICES = 7

SMALL_FORESTS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "P2": (2, [(0, 1)]),
    "S2": (3, [(0, 1), (0, 2)]),
    "M2": (4, [(0, 1), (2, 3)]),
    "S3": (4, [(0, 1), (0, 2), (0, 3)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "S2+P2": (5, [(0, 1), (0, 2), (3, 4)]),
    "M3": (6, [(0, 1), (2, 3), (4, 5)]),
}


def orderings(n: int, edges: Sequence[tuple[int, int]]) -> list[OrderedGraph]:
    """All pairwise distinct ordered graphs obtained by ordering an unordered graph.

    ``edges`` use labels ``0..n-1``.
    """
    if n > MAX_ORDERING_VERTICES:
        raise ValueError(f"at most {MAX_ORDERING_VERTICES} vertices supported")
    seen: dict[frozenset, OrderedGraph] = {}
    for pos in permutations(range(1, n + 1)):
        es = frozenset(norm_edge(pos[a], pos[b]) for a, b in edges)
        if es not in seen:
            seen[es] = OrderedGraph(n, es)
    return sorted(seen.values(), key=lambda g: g.sorted_edges)


def count_orderings(n: int, edges: Sequence[tuple[int, int]]) -> int:
    return len(orderings(n, edges))


# ---------------------------------------------------------------------------
# structured certificate for the Tutte construction


def tutte_refutation(tg, colors: int) -> dict:
    """Check that the Tutte graph admits no proper colouring with ``colors`` colours.

    Verifies the block structure, the pigeonhole count on the right block and
    that the base graph needs more than ``colors - 1`` colours.
    """
    G = tg.graph
    n, N = tg.base_size, tg.N
    if len(set(tg.subsets)) != comb(N, n) or any(len(s) != n for s in tg.subsets):
        raise AssertionError("subsets of the right block are not all n-subsets")
    if any(G.has_edge(a, b) for a, b in combinations(tg.right_block, 2)):
        raise AssertionError("right block is not independent")
    first = induced(G, tg.blocks[0])[0]
    for block, Vi in zip(tg.blocks, tg.subsets):
        sub = induced(G, block)[0]
        if sub != first:
            raise AssertionError("blocks are not identical copies")
        if any(not G.has_edge(a, b) for a, b in zip(block, Vi)):
            raise AssertionError("matching between block and subset is missing")
    base_chi = chromatic_number(first).value
    pigeon = N > colors * (n - 1)
    ok = pigeon and base_chi > colors - 1
    return {"colors": colors, "pigeonhole": pigeon, "base_chromatic_number": base_chi,
            "refuted": ok}
