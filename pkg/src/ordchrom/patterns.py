"""Detection of crossings, cycles, bonnets and tangled paths, and segment classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .core import (
    Edge,
    Embedding,
    OrderedGraph,
    edges_cross,
    find_embedding,
    norm_edge,
)


class BudgetExhausted(RuntimeError):
    """A bounded search stopped before reaching a decision."""


@dataclass(frozen=True)
class PatternWitness:
    kind: str  # cycle | crossing | bonnet | tangled_path
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    catalog_member: str | None = None
    path: tuple[int, ...] | None = None
    split_vertex: int | None = None
    crossing_pair: tuple[Edge, Edge] | None = None
    embedding: tuple[int, ...] | None = None

    def validate(self, G: OrderedGraph) -> bool:
        """Re-check the witness against its definition inside ``G``."""
        if not all(G.has_edge(*e) for e in self.edges):
            return False
        if self.kind == "crossing":
            (a, b), (c, d) = self.edges
            return a < c < b < d
        if self.kind == "cycle":
            cyc = self.vertices
            if len(cyc) < 3 or len(set(cyc)) != len(cyc):
                return False
            return all(G.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        if self.kind == "bonnet":
            H = BONNETS.get(self.catalog_member or "")
            return H is not None and Embedding(H.n, self.embedding or ()).verify(H, G)
        if self.kind == "tangled_path":
            P = self.path or ()
            if len(set(P)) != len(P) or not all(G.has_edge(P[i], P[i + 1]) for i in range(len(P) - 1)):
                return False
            i = P.index(self.split_vertex)
            if not 0 < i < len(P) - 1 or self.split_vertex not in (min(P), max(P)):
                return False
            e, f = self.crossing_pair
            pre = {norm_edge(P[j], P[j + 1]) for j in range(i)}
            post = {norm_edge(P[j], P[j + 1]) for j in range(i, len(P) - 1)}
            return e in pre and f in post and edges_cross(e, f)
        return False

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "vertices": list(self.vertices),
                     "edges": [list(e) for e in self.edges]}
        if self.catalog_member is not None:
            out["catalog_member"] = self.catalog_member
        if self.path is not None:
            out["path"] = list(self.path)
        if self.split_vertex is not None:
            out["split_vertex"] = self.split_vertex
        if self.crossing_pair is not None:
            out["crossing_pair"] = [list(e) for e in self.crossing_pair]
        if self.embedding is not None:
            out["embedding"] = list(self.embedding)
        return out


# ---------------------------------------------------------------------------
# bonnets


def enumerate_bonnet_families() -> list[OrderedGraph]:
    """Instantiate both bonnet families over all equality choices.

    Family one: u1 < u2 <= u3 < u4 <= u5 with edges u1u2, u1u5, u3u4.
    Family two: u1 <= u2 < u3 <= u4 < u5 with edges u1u5, u4u5, u2u3.
    A weak inequality either holds strictly or collapses two vertices.
    Collapsing both leaves three vertices and a triangle, which is not a
    forest on 4 or 5 vertices, so those are dropped.
    """
    families = [
        ((False, True, False, True), [(0, 1), (0, 4), (2, 3)]),
        ((True, False, True, False), [(0, 4), (3, 4), (1, 2)]),
    ]
    found: list[OrderedGraph] = []
    for weak, edge_idx in families:
        weak_slots = [i for i, w in enumerate(weak) if w]
        for collapse in product((False, True), repeat=len(weak_slots)):
            pos = [1]
            merged = dict(zip(weak_slots, collapse))
            for i in range(4):
                pos.append(pos[-1] + (0 if merged.get(i, False) else 1))
            nverts = pos[-1]
            edges = {norm_edge(pos[a], pos[b]) for a, b in edge_idx}
            if any(u == v for u, v in edges) or len(edges) < 3 or nverts < 4:
                continue
            G = OrderedGraph(nverts, frozenset(edges))
            if G not in found:
                found.append(G)
    return found


BONNETS: dict[str, OrderedGraph] = {
    "A1": OrderedGraph.from_edges(5, [(1, 2), (1, 5), (3, 4)]),
    "A2": OrderedGraph.from_edges(4, [(1, 2), (1, 4), (2, 3)]),
    "A3": OrderedGraph.from_edges(4, [(1, 2), (1, 4), (3, 4)]),
    "B1": OrderedGraph.from_edges(5, [(1, 5), (4, 5), (2, 3)]),
    "B3": OrderedGraph.from_edges(4, [(1, 4), (3, 4), (2, 3)]),
}


def find_bonnet(G: OrderedGraph) -> PatternWitness | None:
    for name, B in BONNETS.items():
        emb = find_embedding(B, G)
        if emb is not None:
            im = emb.image
            edges = tuple(sorted(norm_edge(im[u - 1], im[v - 1]) for u, v in B.edges))
            return PatternWitness("bonnet", im, edges, catalog_member=name, embedding=im)
    return None


# ---------------------------------------------------------------------------
# crossings and cycles


def find_crossing(G: OrderedGraph) -> PatternWitness | None:
    E = G.sorted_edges
    for i, (a, b) in enumerate(E):
        for c, d in E[i + 1:]:
            if c >= b:
                break
            if a < c < b < d:
                return PatternWitness("crossing", (a, c, b, d), ((a, b), (c, d)))
    return None


def is_crossing(G: OrderedGraph) -> bool:
    return find_crossing(G) is not None


def find_cycle(G: OrderedGraph) -> PatternWitness | None:
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in G.vertices:
        if root in parent:
            continue
        parent[root] = 0
        depth[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in sorted(G.adj[x]):
                if y == parent[x]:
                    continue
                if y in parent:
                    # tree path x -> lca <- y closes a cycle
                    a, b = x, y
                    left, right = [a], [b]
                    while a != b:
                        if depth[a] >= depth[b]:
                            a = parent[a]
                            left.append(a)
                        else:
                            b = parent[b]
                            right.append(b)
                    cyc = left + right[-2::-1]
                    edges = tuple(sorted(norm_edge(cyc[i], cyc[(i + 1) % len(cyc)])
                                         for i in range(len(cyc))))
                    return PatternWitness("cycle", tuple(cyc), edges)
                parent[y] = x
                depth[y] = depth[x] + 1
                stack.append(y)
    return None


# ---------------------------------------------------------------------------
# tangled paths


def tangled_split(path: Sequence[int]) -> tuple[int, Edge, Edge] | None:
    """Return ``(split_vertex, e, f)`` if the vertex sequence is a tangled path.

    ``e`` lies before the split vertex, ``f`` after it, and they cross.
    """
    k = len(path)
    if k < 4:
        return None
    lo, hi = min(path), max(path)
    edges = [norm_edge(path[j], path[j + 1]) for j in range(k - 1)]
    for i in range(1, k - 1):
        if path[i] != lo and path[i] != hi:
            continue
        for e in edges[:i]:
            for f in edges[i:]:
                if edges_cross(e, f):
                    return path[i], e, f
    return None


def _tree_path(G: OrderedGraph, s: int, t: int) -> list[int] | None:
    prev = {s: 0}
    stack = [s]
    while stack:
        x = stack.pop()
        if x == t:
            break
        for y in G.adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    if t not in prev:
        return None
    out = [t]
    while out[-1] != s:
        out.append(prev[out[-1]])
    return out[::-1]


def _simple_paths(G: OrderedGraph, max_vertices: int | None) -> Iterator[list[int]]:
    limit = max_vertices or G.n
    for s in G.vertices:
        path = [s]
        on = {s}

        def walk() -> Iterator[list[int]]:
            x = path[-1]
            if len(path) >= 2 and path[0] < x:
                yield path
            if len(path) == limit:
                return
            for y in sorted(G.adj[x]):
                if y not in on:
                    path.append(y)
                    on.add(y)
                    yield from walk()
                    on.discard(y)
                    path.pop()

        yield from walk()


def _witness(path: Sequence[int], split: tuple[int, Edge, Edge]) -> PatternWitness:
    v, e, f = split
    edges = tuple(norm_edge(path[j], path[j + 1]) for j in range(len(path) - 1))
    return PatternWitness("tangled_path", tuple(path), edges, path=tuple(path),
                          split_vertex=v, crossing_pair=(e, f))


def find_tangled_path(G: OrderedGraph, path_budget: int = 200_000,
                      max_vertices: int | None = None) -> PatternWitness | None:
    """Find a tangled path in ``G``.

    On forests every pair of vertices is joined by at most one path and all
    pairs are checked, so the answer is exact. Otherwise simple paths are
    enumerated depth first (each once, from its smaller endpoint); more than
    ``path_budget`` of them raises :class:`BudgetExhausted`. ``max_vertices``
    restricts the search to paths with at most that many vertices.
    """
    if G.is_forest():
        for s, t in combinations(G.vertices, 2):
            p = _tree_path(G, s, t)
            if p is None or (max_vertices is not None and len(p) > max_vertices):
                continue
            hit = tangled_split(p)
            if hit is not None:
                return _witness(p, hit)
        return None
    count = 0
    for p in _simple_paths(G, max_vertices):
        count += 1
        if count > path_budget:
            raise BudgetExhausted(f"more than {path_budget} simple paths enumerated")
        hit = tangled_split(p)
        if hit is not None:
            return _witness(list(p), hit)
    return None


def path_order(P: OrderedGraph) -> list[int]:
    """Vertex sequence of an ordered graph whose underlying graph is a path."""
    if P.n == 1 and P.m == 0:
        return [1]
    degs = [P.degree(v) for v in P.vertices]
    if not (P.is_tree() and max(degs) <= 2):
        raise ValueError("underlying graph is not a path")
    start = min(v for v in P.vertices if P.degree(v) == 1)
    seq = [start]
    prev = 0
    while len(seq) < P.n:
        nxt = next(y for y in P.adj[seq[-1]] if y != prev)
        prev = seq[-1]
        seq.append(nxt)
    return seq


@dataclass(frozen=True)
class MinimalTangledReport:
    tangled: bool
    minimal: bool
    path: tuple[int, ...]
    tangled_subpath: tuple[int, ...] | None
    rightmost_crossing: bool  # Pu and uP cross for the rightmost vertex u
    leftmost_crossing: bool


def _halves_cross(seq: Sequence[int], v: int) -> bool:
    i = list(seq).index(v)
    if not 0 < i < len(seq) - 1:
        return False
    pre = [norm_edge(seq[j], seq[j + 1]) for j in range(i)]
    post = [norm_edge(seq[j], seq[j + 1]) for j in range(i, len(seq) - 1)]
    return any(edges_cross(e, f) for e in pre for f in post)


def is_minimal_tangled(P: OrderedGraph) -> MinimalTangledReport:
    seq = path_order(P)
    tangled = tangled_split(seq) is not None
    sub = None
    k = len(seq)
    for a in range(k):
        for b in range(a + 1, k + 1):
            if b - a == k:
                continue
            if tangled_split(seq[a:b]) is not None:
                sub = tuple(seq[a:b])
                break
        if sub:
            break
    return MinimalTangledReport(
        tangled=tangled,
        minimal=tangled and sub is None,
        path=tuple(seq),
        tangled_subpath=sub,
        rightmost_crossing=_halves_cross(seq, P.n),
        leftmost_crossing=_halves_cross(seq, 1),
    )


# ---------------------------------------------------------------------------
# segment classes


@dataclass(frozen=True, order=True)
class SegmentClass:
    tag: str
    k: int | None = field(default=None)

    def __str__(self) -> str:
        return f"{self.tag}({self.k})" if self.k is not None else self.tag


def nesting(k: int) -> OrderedGraph:
    return OrderedGraph.from_edges(2 * k, [(i, 2 * k + 1 - i) for i in range(1, k + 1)])


def crossing(k: int) -> OrderedGraph:
    return OrderedGraph.from_edges(2 * k, [(i, k + i) for i in range(1, k + 1)])


def star_centers(G: OrderedGraph) -> list[int]:
    """Vertices incident to every edge (all vertices when edgeless)."""
    if not G.edges:
        return list(G.vertices)
    common = set(next(iter(G.edges)))
    for e in G.edges:
        common &= set(e)
    return sorted(common)


def is_generalized_star(G: OrderedGraph) -> bool:
    return G.n >= 1 and bool(star_centers(G))


def tuple_matching(t: int, m: int, perm: Sequence[int]) -> OrderedGraph:
    edges = [(i, t + j + m * (perm[i - 1] - 1)) for i in range(1, t + 1) for j in range(1, m + 1)]
    return OrderedGraph.from_edges(t * (m + 1), edges)


def recognize_tuple_matching(G: OrderedGraph) -> tuple[int, int, tuple[int, ...]] | None:
    hits = []
    n = G.n
    for t in range(1, n):
        if n % t or n // t - 1 < 1:
            continue
        m = n // t - 1
        if G.m != t * m:
            continue
        perm = []
        for i in range(1, t + 1):
            nb = sorted(G.adj[i])
            if len(nb) != m or nb[0] <= t or (nb[0] - t - 1) % m or nb[-1] - nb[0] != m - 1:
                break
            perm.append((nb[0] - t - 1) // m + 1)
        else:
            if sorted(perm) == list(range(1, t + 1)) and tuple_matching(t, m, perm) == G:
                hits.append((t, m, tuple(perm)))
    if len(hits) > 1:
        raise AssertionError(f"ambiguous tuple matching parameters {hits}")
    return hits[0] if hits else None


def recognize_segment_class(G: OrderedGraph) -> set[SegmentClass]:
    from .structure import is_monotonically_alternating

    tags: set[SegmentClass] = set()
    if G.n == 2 and G.m == 1:
        tags.add(SegmentClass("SingleEdge"))
    if is_generalized_star(G):
        tags.add(SegmentClass("GeneralizedStar"))
    if G.n % 2 == 0 and G.n >= 4:
        k = G.n // 2
        if G == nesting(k):
            tags.add(SegmentClass("Nesting", k))
            if k == 2:
                tags.add(SegmentClass("TwoNesting"))
        if G == crossing(k):
            tags.add(SegmentClass("Crossing", k))
            if k == 2:
                tags.add(SegmentClass("TwoCrossing"))
    if G.is_tree():
        if find_crossing(G) is None and find_bonnet(G) is None:
            tags.add(SegmentClass("NonCrossingBonnetFreeTree"))
        if is_monotonically_alternating(G).verdict:
            tags.add(SegmentClass("MonoAltTree"))
    if not tags:
        tags.add(SegmentClass("Other"))
    return tags


__all__ = [
    "BONNETS", "BudgetExhausted", "MinimalTangledReport", "PatternWitness", "SegmentClass",
    "crossing", "enumerate_bonnet_families", "find_bonnet", "find_crossing", "find_cycle",
    "find_tangled_path", "is_crossing", "is_generalized_star", "is_minimal_tangled",
    "nesting", "path_order", "recognize_segment_class", "recognize_tuple_matching",
    "star_centers", "tangled_split", "tuple_matching",
]
