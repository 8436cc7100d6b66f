"""Monotonically alternating trees and the bonnet/tangled-path equivalence check."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Edge, OrderedGraph, edges_cross, norm_edge, segments
from .patterns import find_bonnet, find_tangled_path

NO_INDEPENDENT_SPLIT = "no independent split"
TWO_SHORTEST = "vertex with two shortest edges in chosen side"
NOT_COVERED = "E != S(L) u S(R)"
CROSS_LEFT = "crossing within S(L)"
CROSS_RIGHT = "crossing within S(R)"


def shortest_edges(T: OrderedGraph, v: int) -> set[Edge]:
    """Incident edges of ``v`` with minimum length (one or two of them)."""
    if not T.adj[v]:
        raise ValueError(f"vertex {v} is isolated")
    best = min(abs(v - w) for w in T.adj[v])
    return {norm_edge(v, w) for w in T.adj[v] if abs(v - w) == best}


@dataclass(frozen=True)
class MonoAltResult:
    verdict: bool
    split: int | None = None  # L = 1..split, R = split+1..n
    left_edges: frozenset[Edge] = frozenset()
    right_edges: frozenset[Edge] = frozenset()
    failures: dict[int, str] = field(default_factory=dict)
    successes: tuple[int, ...] = ()

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.verdict:
            out["split"] = self.split
            out["S_L"] = [list(e) for e in sorted(self.left_edges)]
            out["S_R"] = [list(e) for e in sorted(self.right_edges)]
        else:
            out["failures"] = {str(p): r for p, r in sorted(self.failures.items())}
        return out


def _check_split(T: OrderedGraph, p: int) -> tuple[str | None, frozenset[Edge], frozenset[Edge]]:
    if any(v <= p for _, v in T.edges) or any(u > p for u, _ in T.edges):
        return NO_INDEPENDENT_SPLIT, frozenset(), frozenset()
    sides = []
    for side in (range(1, p + 1), range(p + 1, T.n + 1)):
        chosen = set()
        for u in side:
            se = shortest_edges(T, u)
            if len(se) != 1:
                return TWO_SHORTEST, frozenset(), frozenset()
            chosen |= se
        sides.append(frozenset(chosen))
    sl, sr = sides
    if sl | sr != T.edges:
        return NOT_COVERED, sl, sr
    for name, S in ((CROSS_LEFT, sl), (CROSS_RIGHT, sr)):
        es = sorted(S)
        if any(edges_cross(e, f) for i, e in enumerate(es) for f in es[i + 1:]):
            return name, sl, sr
    return None, sl, sr


def is_monotonically_alternating(T: OrderedGraph) -> MonoAltResult:
    """Try every split ``L = 1..p``, ``R = p+1..n`` against the definition."""
    if not T.is_tree():
        raise ValueError("input is not a tree")
    if T.n == 1:
        return MonoAltResult(True, split=1)
    failures: dict[int, str] = {}
    ok: list[tuple[int, frozenset[Edge], frozenset[Edge]]] = []
    for p in range(1, T.n):
        reason, sl, sr = _check_split(T, p)
        if reason is None:
            ok.append((p, sl, sr))
        else:
            failures[p] = reason
    if len(ok) > 1:
        raise AssertionError(f"connected tree with several independent splits: {[o[0] for o in ok]}")
    if ok:
        p, sl, sr = ok[0]
        return MonoAltResult(True, p, sl, sr, failures, (p,))
    return MonoAltResult(False, failures=failures)


@dataclass(frozen=True)
class CharacterizationReport:
    no_bonnet: bool
    no_tangled: bool
    segment_results: tuple[MonoAltResult, ...]
    bonnet: object = None
    tangled: object = None

    @property
    def forbidden_free(self) -> bool:
        return self.no_bonnet and self.no_tangled

    @property
    def all_segments_monoalt(self) -> bool:
        return all(r.verdict for r in self.segment_results)

    @property
    def agree(self) -> bool:
        return self.forbidden_free == self.all_segments_monoalt

    def to_json(self) -> dict:
        return {
            "no_bonnet": self.no_bonnet,
            "no_tangled_path": self.no_tangled,
            "segments_monoalt": [r.verdict for r in self.segment_results],
            "agree": self.agree,
            "bonnet": self.bonnet.to_json() if self.bonnet else None,
            "tangled_path": self.tangled.to_json() if self.tangled else None,
        }


def check_characterization(T: OrderedGraph) -> CharacterizationReport:
    """Evaluate both sides of: no bonnet and no tangled path <=> every segment mono-alt."""
    if not T.is_tree():
        raise ValueError("input is not a tree")
    bon = find_bonnet(T)
    tan = find_tangled_path(T)
    results: tuple[MonoAltResult, ...] = ()
    if T.n >= 2:
        results = tuple(is_monotonically_alternating(s.graph()) for s in segments(T).segments)
    return CharacterizationReport(bon is None, tan is None, results, bon, tan)
