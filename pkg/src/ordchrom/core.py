"""Ordered graphs: data model, text format, embeddings and segments.

Vertices are the integers ``1..n`` and the linear order is the integer order.
Edges are stored as pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when a graph description cannot be parsed."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class OrderedGraph:
    """A graph on vertices ``1..n`` ordered left to right.

    Two ordered graphs are equal exactly when they have the same ``n`` and the
    same edge set, which makes structural equality the same as being copies of
    each other.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            u, v = norm_edge(u, v)
            if u < 1 or v > self.n:
                raise ValueError(f"edge {u}-{v} out of range 1..{self.n}")
            normed.add((u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "OrderedGraph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e[0]}-{e[1]}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, indexed by vertex (index 0 unused)."""
        nb: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices if not self.adj[v]]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def is_forest(self) -> bool:
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def __str__(self) -> str:
        return serialize_graph(self)

    def __repr__(self) -> str:
        return f"OrderedGraph({serialize_graph(self)!r})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    @classmethod
    def from_json(cls, data: dict) -> "OrderedGraph":
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


# ---------------------------------------------------------------------------
# text format

_HEADER = re.compile(r"\s*OG\s*(\d+)\s*:", re.ASCII)
_EDGE = re.compile(r"\s*(\d+)\s*-\s*(\d+)\s*", re.ASCII)


def parse_graph(text: str) -> OrderedGraph:
    """Parse ``OG <n>: <u>-<v>, ...`` (1-indexed, whitespace-insensitive)."""
    head = _HEADER.match(text)
    if head is None:
        raise GraphFormatError("expected header 'OG <n>:'", 0)
    n = int(head.group(1))
    if n < 1:
        raise GraphFormatError("vertex count must be at least 1", head.start(1))
    pos = head.end()
    rest = text[pos:]
    edges: set[Edge] = set()
    if rest.strip():
        offset = pos
        for chunk in rest.split(","):
            m = _EDGE.fullmatch(chunk)
            if m is None:
                raise GraphFormatError(f"malformed edge {chunk.strip()!r}", offset)
            u, v = int(m.group(1)), int(m.group(2))
            where = offset + m.start(1)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"endpoint {x} out of range [1,{n}]", where)
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}", where)
            e = norm_edge(u, v)
            if e in edges:
                raise GraphFormatError(f"duplicate edge {e[0]}-{e[1]}", where)
            edges.add(e)
            offset += len(chunk) + 1
    return OrderedGraph(n, frozenset(edges))


def serialize_graph(G: OrderedGraph) -> str:
    body = ", ".join(f"{u}-{v}" for u, v in G.sorted_edges)
    return f"OG {G.n}: {body}" if body else f"OG {G.n}:"


def og(text: str) -> OrderedGraph:
    """Shorthand for :func:`parse_graph`."""
    return parse_graph(text)


# ---------------------------------------------------------------------------
# elementary operations


def reverse(G: OrderedGraph) -> OrderedGraph:
    """Reverse the vertex order: vertex ``i`` becomes ``n + 1 - i``."""
    n = G.n
    return OrderedGraph(n, frozenset(norm_edge(n + 1 - u, n + 1 - v) for u, v in G.edges))


def edge_length(G: OrderedGraph, e: Sequence[int]) -> int:
    u, v = norm_edge(*e)
    if (u, v) not in G.edges:
        raise ValueError(f"{u}-{v} is not an edge")
    return v - u


def induced(G: OrderedGraph, vertices: Iterable[int]) -> tuple[OrderedGraph, list[int]]:
    """Induced subgraph relabelled densely.

    Returns the subgraph and the list mapping new vertex ``i`` to
    ``labels[i - 1]`` in ``G``.
    """
    labels = sorted(set(vertices))
    index = {v: i for i, v in enumerate(labels, 1)}
    edges = frozenset(
        (index[u], index[v]) for u, v in G.edges if u in index and v in index
    )
    return OrderedGraph(len(labels), edges), labels


def delete_vertices(G: OrderedGraph, removed: Iterable[int]) -> OrderedGraph:
    gone = set(removed)
    return induced(G, (v for v in G.vertices if v not in gone))[0]


def delete_edges(G: OrderedGraph, removed: Iterable[Edge]) -> OrderedGraph:
    return OrderedGraph(G.n, G.edges - {norm_edge(*e) for e in removed})


def edges_cross(e: Edge, f: Edge) -> bool:
    (a, b), (c, d) = sorted((norm_edge(*e), norm_edge(*f)))
    return a < c < b < d


# ---------------------------------------------------------------------------
# embeddings


@dataclass(frozen=True)
class Embedding:
    """An order-preserving map of pattern vertex ``i`` to ``image[i - 1]``."""

    pattern_size: int
    image: tuple[int, ...]

    def verify(self, H: OrderedGraph, G: OrderedGraph) -> bool:
        im = self.image
        if len(im) != H.n or self.pattern_size != H.n:
            return False
        if any(not 1 <= x <= G.n for x in im):
            return False
        if any(im[i] >= im[i + 1] for i in range(len(im) - 1)):
            return False
        return all(G.has_edge(im[u - 1], im[v - 1]) for u, v in H.edges)

    def to_json(self) -> list[int]:
        return list(self.image)


def _embeddings(H: OrderedGraph, G: OrderedGraph, last: int | None = None) -> Iterator[tuple[int, ...]]:
    k, N = H.n, G.n
    if k == 0:
        yield ()
        return
    if k > N:
        return
    # earlier neighbours of each pattern vertex
    back = [sorted(u for u in H.adj[i] if u < i) for i in range(k + 1)]
    image = [0] * (k + 1)
    gadj = G.adj

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        lo = image[i - 1] + 1
        hi = N - (k - i)
        if i == k and last is not None:
            if not lo <= last <= hi:
                return
            lo = hi = last
        if back[i]:
            anchor = image[back[i][0]]
            cands = sorted(x for x in gadj[anchor] if lo <= x <= hi)
        else:
            cands = range(lo, hi + 1)
        for x in cands:
            if all(image[j] in gadj[x] for j in back[i]):
                image[i] = x
                if i == k:
                    yield tuple(image[1:])
                else:
                    yield from extend(i + 1)

    yield from extend(1)


def find_embedding(H: OrderedGraph, G: OrderedGraph, find_all: bool = False):
    """Find order-preserving copies of ``H`` in ``G`` (extra host edges allowed).

    Returns the lexicographically first :class:`Embedding` or ``None``; with
    ``find_all`` a list of all of them in lexicographic order of the image.
    """
    if H.n < 1:
        raise ValueError("pattern must have at least one vertex")
    gen = (Embedding(H.n, im) for im in _embeddings(H, G))
    if find_all:
        return list(gen)
    return next(gen, None)


def contains(G: OrderedGraph, H: OrderedGraph) -> bool:
    return find_embedding(H, G) is not None


def rightmost_in_copies(H: OrderedGraph, G: OrderedGraph) -> set[int]:
    """Host vertices that are the rightmost vertex of some copy of ``H``."""
    return {r for r in G.vertices if next(_embeddings(H, G, last=r), None) is not None}


# ---------------------------------------------------------------------------
# segments


@dataclass(frozen=True)
class Segment:
    start: int
    end: int
    edges: frozenset[Edge]

    def graph(self) -> OrderedGraph:
        off = self.start - 1
        return OrderedGraph(self.end - off, frozenset((u - off, v - off) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"interval": [self.start, self.end], "edges": [list(e) for e in sorted(self.edges)]}


@dataclass(frozen=True)
class SegmentDecomposition:
    inner_cut_vertices: tuple[int, ...]
    segments: tuple[Segment, ...]

    def to_json(self) -> dict:
        return {
            "inner_cut_vertices": list(self.inner_cut_vertices),
            "segments": [s.to_json() for s in self.segments],
        }


def inner_cut_vertices(G: OrderedGraph) -> list[int]:
    """Vertices ``1 < v < n`` not strictly spanned by any edge."""
    n = G.n
    cover = [0] * (n + 2)
    for u, v in G.edges:
        if v - u >= 2:
            cover[u + 1] += 1
            cover[v] -= 1
    cuts, run = [], 0
    for x in range(1, n + 1):
        run += cover[x]
        if 1 < x < n and run == 0:
            cuts.append(x)
    return cuts


def segments(G: OrderedGraph) -> SegmentDecomposition:
    if G.n < 2:
        raise ValueError("segments need at least two vertices")
    cuts = inner_cut_vertices(G)
    bounds = [1, *cuts, G.n]
    segs = []
    for a, b in zip(bounds, bounds[1:]):
        segs.append(Segment(a, b, frozenset((u, v) for u, v in G.edges if a <= u and v <= b)))
    return SegmentDecomposition(tuple(cuts), tuple(segs))


def split_at(G: OrderedGraph, v: int) -> tuple[OrderedGraph, OrderedGraph]:
    """Split at an inner cut vertex into the parts left and right of ``v`` (both keep ``v``)."""
    left = induced(G, range(1, v + 1))[0]
    right = induced(G, range(v, G.n + 1))[0]
    return left, right


# ---------------------------------------------------------------------------
# interval chromatic number


def interval_chromatic_number(G: OrderedGraph) -> tuple[int, list[tuple[int, int]]]:
    """Fewest consecutive independent intervals covering ``1..n``.

    Greedy: extend the current interval until the next vertex has a
    neighbour inside it. Returns the count and the intervals as ``(a, b)``.
    """
    if G.n < 1:
        raise ValueError("empty graph")
    parts = []
    start = 1
    for x in range(2, G.n + 1):
        if any(start <= y < x for y in G.adj[x]):
            parts.append((start, x - 1))
            start = x
    parts.append((start, G.n))
    return len(parts), parts


@dataclass(frozen=True)
class BipartiteMatrix:
    """0-1 matrix of an ordered graph with interval chromatic number at most 2."""

    n: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    def to_graph(self) -> OrderedGraph:
        edges = set()
        for i, r in enumerate(self.rows):
            for j, c in enumerate(self.cols):
                if self.matrix[i][j]:
                    edges.add((r, c))
        return OrderedGraph(self.n, frozenset(edges))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": list(self.rows), "cols": list(self.cols),
                "matrix": [list(r) for r in self.matrix]}


def bipartite_matrix(H: OrderedGraph) -> BipartiteMatrix:
    chi, parts = interval_chromatic_number(H)
    if chi > 2:
        raise ValueError(f"interval chromatic number {chi} > 2")
    rows = tuple(range(parts[0][0], parts[0][1] + 1))
    cols = tuple(range(parts[1][0], parts[1][1] + 1)) if chi == 2 else ()
    matrix = tuple(tuple(int(H.has_edge(r, c)) for c in cols) for r in rows)
    return BipartiteMatrix(H.n, rows, cols, matrix)


def all_edges(n: int) -> list[Edge]:
    return list(combinations(range(1, n + 1), 2))
