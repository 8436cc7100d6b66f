"""Constructive colourings of pattern-avoiding hosts, one routine per rule.

Each routine returns a 0-based colour list (vertex ``v`` at index ``v - 1``)
using at most ``d.bound`` colours. The reduction routines recurse on
subgraphs that avoid the child pattern; with ``verify=True`` that avoidance
is re-checked at every node.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import OrderedGraph, contains, delete_vertices, find_embedding, induced, rightmost_in_copies
from ..oracle import is_proper, k_coloring
from ..patterns import BudgetExhausted
from .engine import ASSERTED_RULES, Derivation, classify


class PatternPresent(ValueError):
    """The host contains the pattern, so no bound applies."""

    def __init__(self, message: str, embedding=None):
        super().__init__(message)
        self.embedding = embedding


class BoundExceeded(AssertionError):
    """A constructive colouring used more colours than its derivation allows."""


@dataclass(frozen=True)
class ColoringResult:
    coloring: tuple[int, ...]
    colors_used: int
    bound: int
    derivation: Derivation
    fallbacks: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"coloring": list(self.coloring), "colors_used": self.colors_used,
                "bound": self.bound, "rule": self.derivation.rule.value,
                "fallbacks": list(self.fallbacks)}


def degeneracy_order(G: OrderedGraph) -> tuple[list[int], int]:
    """Smallest-last order (removal order) and the degeneracy."""
    deg = {v: G.degree(v) for v in G.vertices}
    alive = set(G.vertices)
    order, d = [], 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive.discard(v)
        for w in G.adj[v]:
            if w in alive:
                deg[w] -= 1
    return order, d


def greedy_in_order(G: OrderedGraph, order) -> list[int]:
    col = [-1] * G.n
    for v in order:
        taken = {col[w - 1] for w in G.adj[v]}
        c = 0
        while c in taken:
            c += 1
        col[v - 1] = c
    return col


def degeneracy_coloring(G: OrderedGraph) -> tuple[list[int], int]:
    """Greedy colouring in reverse smallest-last order: at most degeneracy + 1 colours."""
    order, d = degeneracy_order(G)
    return greedy_in_order(G, reversed(order)), d


def _ncolors(col) -> int:
    return max(col) + 1 if col else 0


class _Colorer:
    def __init__(self, verify: bool):
        self.verify = verify
        self.fallbacks: list[str] = []

    def _check_avoids(self, G: OrderedGraph, H: OrderedGraph, where: str) -> None:
        if self.verify and contains(G, H):
            raise AssertionError(f"{where}: subgraph contains child pattern {H}")

    def sub(self, G: OrderedGraph, vertices, d: Derivation, where: str) -> dict[int, int]:
        """Colour ``G[vertices]`` with ``d`` and return colours keyed by host vertex."""
        S, labels = induced(G, vertices)
        self._check_avoids(S, d.pattern, where)
        col = self.color(S, d)
        return {labels[i]: c for i, c in enumerate(col)}

    def color(self, G: OrderedGraph, d: Derivation) -> list[int]:
        if G.n == 0:
            return []
        handler = getattr(self, "_" + d.rule.name.lower())
        col = handler(G, d)
        if len(col) != G.n or not is_proper(G, col):
            raise AssertionError(f"{d.rule.value} produced an improper colouring")
        if _ncolors(col) > d.bound:
            raise BoundExceeded(f"{d.rule.value} on {d.pattern} used {_ncolors(col)} > {d.bound} colours")
        return col

    # -- reductions ---------------------------------------------------------

    def _inner_cut_split(self, G: OrderedGraph, d: Derivation) -> list[int]:
        d1, d2 = d.children
        V1 = rightmost_in_copies(d1.pattern, G)
        V2 = [v for v in G.vertices if v not in V1]
        col = self.sub(G, V2, d1, "InnerCutSplit V2")
        top = self.sub(G, V1, d2, "InnerCutSplit V1")
        col.update({v: d1.bound + c for v, c in top.items()})
        return [col[v] for v in G.vertices]

    def _isolated_vertex(self, G: OrderedGraph, d: Derivation) -> list[int]:
        (c,) = d.children
        v, k = d.params["vertex"], d.pattern.n
        if v in (1, k):
            # the extreme host vertex takes a colour of its own
            u = 1 if v == 1 else G.n
            rest = self.sub(G, [x for x in G.vertices if x != u], c, "IsolatedVertex rest")
            rest[u] = c.bound
            return [rest[x] for x in G.vertices]
        odd = self.sub(G, range(1, G.n + 1, 2), c, "IsolatedVertex odd")
        even = self.sub(G, range(2, G.n + 1, 2), c, "IsolatedVertex even")
        odd.update({x: c.bound + y for x, y in even.items()})
        return [odd[x] for x in G.vertices]

    def _isolated_edge(self, G: OrderedGraph, d: Derivation) -> list[int]:
        (c,) = d.children
        Hp, b = c.pattern, c.bound
        if not contains(G, Hp):
            return self.color(G, c)
        parts: list[tuple[int, int]] = []
        s = 1
        while s <= G.n:
            e = s
            while e < G.n and not contains(induced(G, range(s, e + 2))[0], Hp):
                e += 1
            parts.append((s, e))
            s = e + 1
        universe = set(range(2 * b + 1))
        palettes = [list(range(b)), list(range(b, 2 * b))]
        col: dict[int, int] = {}
        for i, (s, e) in enumerate(parts):
            part = self.sub(G, range(s, e + 1), c, f"IsolatedEdge part {i + 1}")
            if i < 2:
                pal = palettes[i]
                col.update({x: pal[y] for x, y in part.items()})
                continue
            (z,) = universe - set(palettes[i - 2]) - set(palettes[i - 1])
            rest = sorted(universe - set(palettes[i - 1]) - {z})[: b - 1]
            palettes.append([z] + rest)
            # first vertex of the part gets z; other classes fill the rest
            first = part[s]
            others = iter(rest)
            perm = {first: z}
            for y in range(b):
                if y != first:
                    perm[y] = next(others)
            col.update({x: perm[y] for x, y in part.items()})
        return [col[x] for x in G.vertices]

    def _reducible_vertex(self, G: OrderedGraph, d: Derivation) -> list[int]:
        (c,) = d.children
        E, parity = peel_forest(G, leftmost=d.params["vertex"] == 1)
        rest = OrderedGraph(G.n, G.edges - E)
        self._check_avoids(rest, c.pattern, "ReducibleVertex G-E")
        base = self.color(rest, c)
        return [2 * base[v - 1] + parity[v - 1] for v in G.vertices]

    def _matching_consecutive_pair(self, G: OrderedGraph, d: Derivation) -> list[int]:
        (c,) = d.children
        b, T = c.bound, d.pattern
        a = d.params["edge"][0]
        members = [[v] for v in G.vertices]
        cur = G
        while cur.n > 3 * b:
            x = next((x for x in range(1, cur.n) if not cur.has_edge(x, x + 1)), None)
            if x is None:
                break
            cur = _identify(cur, x)
            members[x - 1] += members.pop(x)
        self._check_avoids(cur, T, "MatchingConsecutivePair identified graph")
        if cur.n <= 3 * b:
            ccol = list(range(cur.n))
        elif 1 < a and a + 1 < T.n:
            ccol = [0] * cur.n
            for r in range(3):
                part = self.sub(cur, range(r + 1, cur.n + 1, 3), c, f"MatchingConsecutivePair class {r}")
                for x, y in part.items():
                    ccol[x - 1] = r * b + y
        else:
            # the pair is extreme in T: two private colours for the two extreme host vertices
            ends = [1, 2] if a == 1 else [cur.n - 1, cur.n]
            part = self.sub(cur, [x for x in cur.vertices if x not in ends], c,
                            "MatchingConsecutivePair remainder")
            ccol = [0] * cur.n
            for x, y in part.items():
                ccol[x - 1] = 2 + y
            ccol[ends[0] - 1], ccol[ends[1] - 1] = 0, 1
        col = [0] * G.n
        for i, grp in enumerate(members):
            for v in grp:
                col[v - 1] = ccol[i]
        return col

    # -- leaves ---------------------------------------------------------------

    def _single_edge(self, G: OrderedGraph, d: Derivation) -> list[int]:
        if G.m:
            raise AssertionError("host of a single-edge avoider has an edge")
        return [0] * G.n

    def _generalized_star(self, G: OrderedGraph, d: Derivation) -> list[int]:
        order = range(G.n, 0, -1) if d.params["center"] == 1 else range(1, G.n + 1)
        return greedy_in_order(G, order)

    def _mono_alt_non_crossing_tree(self, G: OrderedGraph, d: Derivation) -> list[int]:
        if self.verify:
            peel_certificate(d.pattern, G)
        return degeneracy_coloring(G)[0]

    def _asserted(self, G: OrderedGraph, d: Derivation) -> list[int]:
        col, _ = degeneracy_coloring(G)
        if _ncolors(col) <= d.bound:
            return col
        try:
            exact, _ = k_coloring(G, d.bound)
        except BudgetExhausted:
            exact = None
        if exact is None:
            raise BoundExceeded(f"{d.rule.value}: no {d.bound}-colouring found for a {G.n}-vertex avoider")
        self.fallbacks.append(f"{d.rule.value}: degeneracy used {_ncolors(col)}, exact search used {_ncolors(exact)}")
        return exact

    _two_nesting = _two_crossing = _nesting = _crossing = _tuple_matching = _asserted


def _identify(G: OrderedGraph, x: int) -> OrderedGraph:
    """Merge consecutive vertices ``x`` and ``x + 1``."""
    f = lambda v: v if v <= x else v - 1  # noqa: E731
    return OrderedGraph(G.n - 1, frozenset((f(u), f(v)) for u, v in G.edges))


def peel_forest(G: OrderedGraph, leftmost: bool = True) -> tuple[frozenset, list[int]]:
    """Longest left edge at every vertex (or longest right edge), and a 2-colouring of that forest."""
    E = set()
    parity = [0] * G.n
    order = G.vertices if leftmost else range(G.n, 0, -1)
    for w in order:
        side = [x for x in G.adj[w] if (x < w) == leftmost]
        if side:
            x = min(side) if leftmost else max(side)
            E.add((min(x, w), max(x, w)))
            parity[w - 1] = 1 - parity[x - 1]
    return frozenset(E), parity


def peel_certificate(T: OrderedGraph, G: OrderedGraph) -> int:
    """Split ``E(G)`` into forests by peeling reducible extreme leaves of ``T``.

    Returns the number of forests; raises if the remainder keeps an edge.
    """
    from .engine import reducible_vertices

    edges, forests = set(G.edges), 0
    while T.n > 2:
        red = reducible_vertices(T)
        if not red:
            raise AssertionError(f"{T} has no reducible extreme leaf")
        u = red[0]
        E, _ = peel_forest(OrderedGraph(G.n, frozenset(edges)), leftmost=u == 1)
        edges -= E
        forests += 1
        T = delete_vertices(T, [u])
    if edges:
        raise AssertionError("edges survive the peeling")
    return forests


def color_avoider(H: OrderedGraph, G: OrderedGraph, derivation: Derivation | None = None,
                  verify: bool = True) -> ColoringResult:
    """Properly colour an ``H``-avoiding host with at most the derived bound of colours."""
    emb = find_embedding(H, G)
    if emb is not None:
        raise PatternPresent(f"host contains the pattern at {list(emb.image)}", emb)
    if derivation is None:
        cls = classify(H)
        if cls.verdict != "Finite":
            raise ValueError(f"pattern is {cls.verdict}; no bound to colour against")
        derivation = cls.derivation
    if derivation.pattern != H:
        raise ValueError("derivation belongs to a different pattern")
    c = _Colorer(verify)
    col = c.color(G, derivation)
    return ColoringResult(tuple(col), _ncolors(col), derivation.bound, derivation, tuple(c.fallbacks))


__all__ = [
    "ASSERTED_RULES", "BoundExceeded", "ColoringResult", "PatternPresent", "color_avoider",
    "degeneracy_coloring", "degeneracy_order", "greedy_in_order", "peel_certificate", "peel_forest",
]
