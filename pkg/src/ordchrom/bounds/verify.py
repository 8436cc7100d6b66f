"""Independent checker for bound derivations.

Every precondition is re-derived from the raw edge set with small local
helpers so that a certificate does not have to trust the search that
produced it.
"""

from __future__ import annotations

from ..core import OrderedGraph
from .engine import LEAF_RULES, Derivation, Rule


def _sub(H: OrderedGraph, keep) -> OrderedGraph:
    keep = sorted(keep)
    pos = {v: i + 1 for i, v in enumerate(keep)}
    return OrderedGraph(len(keep), frozenset((pos[u], pos[v]) for u, v in H.edges
                                             if u in pos and v in pos))


def _nbrs(H: OrderedGraph, v: int) -> set[int]:
    return {b if a == v else a for a, b in H.edges if v in (a, b)}


def _is_tree(H: OrderedGraph) -> bool:
    if len(H.edges) != H.n - 1:
        return False
    seen, todo = {1}, [1]
    while todo:
        x = todo.pop()
        for y in _nbrs(H, x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == H.n


def _cross(e, f) -> bool:
    (a, b), (c, d) = sorted([e, f])
    return a < c < b < d


def _monoalt_split_ok(H: OrderedGraph, p: int) -> bool:
    left = set(range(1, p + 1))
    if not 1 <= p < H.n:
        return False
    if any((u in left) == (v in left) for u, v in H.edges):
        return False
    S = {True: set(), False: set()}
    for x in range(1, H.n + 1):
        inc = [(min(x, y), max(x, y)) for y in _nbrs(H, x)]
        if not inc:
            return False
        m = min(b - a for a, b in inc)
        short = [e for e in inc if e[1] - e[0] == m]
        if len(short) != 1:
            return False
        S[x in left].add(short[0])
    if S[True] | S[False] != set(H.edges):
        return False
    return not any(_cross(e, f) for side in S.values() for e in side for f in side if e < f)


def _tuple_matching_ok(H: OrderedGraph, t: int, m: int, perm) -> bool:
    if sorted(perm) != list(range(1, t + 1)) or H.n != t * (m + 1):
        return False
    want = {(i, t + j + m * (perm[i - 1] - 1)) for i in range(1, t + 1) for j in range(1, m + 1)}
    return want == set(H.edges)


def _leaf_problems(d: Derivation) -> list[str]:
    H, r, p = d.pattern, d.rule, d.params
    k = H.n
    E = set(H.edges)
    if r is Rule.SINGLE_EDGE:
        ok, want = E == {(1, 2)} and k == 2, 1
    elif r is Rule.GENERALIZED_STAR:
        c = p.get("center")
        ok = c in (1, k) and all(c in e for e in E)
        want = k - 1
    elif r in (Rule.TWO_NESTING, Rule.NESTING):
        q = k // 2
        ok = k % 2 == 0 and E == {(i, k + 1 - i) for i in range(1, q + 1)} and q >= 2
        ok = ok and (r is Rule.NESTING or q == 2)
        want = 3 if r is Rule.TWO_NESTING else 4 * (q - 1)
    elif r in (Rule.TWO_CROSSING, Rule.CROSSING):
        q = k // 2
        ok = k % 2 == 0 and E == {(i, q + i) for i in range(1, q + 1)} and q >= 2
        ok = ok and (r is Rule.CROSSING or q == 2)
        want = 3 if r is Rule.TWO_CROSSING else 4 * (q - 1)
    elif r is Rule.MONO_ALT_NON_CROSSING_TREE:
        es = sorted(E)
        ok = (_is_tree(H) and not any(_cross(e, f) for e in es for f in es if e < f)
              and _monoalt_split_ok(H, p.get("split", 0)))
        want = 2 * k - 3
    elif r is Rule.TUPLE_MATCHING:
        ok = _tuple_matching_ok(H, p.get("t", 0), p.get("m", 0), p.get("perm", ()))
        want = k ** (10 * k)
    else:
        return [f"{r} is not a leaf rule"]
    errs = []
    if not ok:
        errs.append(f"{H}: precondition of {r.value} fails")
    if d.bound != want:
        errs.append(f"{H}: {r.value} bound {d.bound} != {want}")
    if d.children:
        errs.append(f"{H}: leaf rule {r.value} has children")
    return errs


def _reduction_problems(d: Derivation) -> list[str]:
    H, r, p = d.pattern, d.rule, d.params
    k = H.n
    E = set(H.edges)
    kids = [c.pattern for c in d.children]
    cb = [c.bound for c in d.children]
    everything = range(1, k + 1)
    if r is Rule.INNER_CUT_SPLIT:
        v = p.get("vertex", 0)
        ok = 1 < v < k and not any(a < v < b for a, b in E)
        want_kids = [_sub(H, range(1, v + 1)), _sub(H, range(v, k + 1))]
        want = sum(cb) if len(cb) == 2 else None
    elif r is Rule.ISOLATED_VERTEX:
        v = p.get("vertex", 0)
        ok = k >= 3 and 1 <= v <= k and not _nbrs(H, v)
        want_kids = [_sub(H, [x for x in everything if x != v])]
        want = 2 * cb[0] if cb else None
    elif r is Rule.ISOLATED_EDGE:
        ok = (k >= 4 and tuple(p.get("edge", ())) == (1, k) and (1, k) in E
              and _nbrs(H, 1) == {k} and _nbrs(H, k) == {1})
        want_kids = [_sub(H, range(2, k))]
        want = 2 * cb[0] + 1 if cb else None
    elif r is Rule.REDUCIBLE_VERTEX:
        u = p.get("vertex", 0)
        nxt = 2 if u == 1 else k - 1
        ok = k >= 3 and u in (1, k) and len(_nbrs(H, u)) == 1 and bool(_nbrs(H, u) & _nbrs(H, nxt))
        want_kids = [_sub(H, [x for x in everything if x != u])]
        want = 2 * cb[0] if cb else None
    elif r is Rule.MATCHING_CONSECUTIVE_PAIR:
        a, b = tuple(p.get("edge", (0, 0)))
        ok = (len(E) >= 2 and all(len(_nbrs(H, x)) == 1 for x in everything)
              and b == a + 1 and (a, b) in E)
        want_kids = [_sub(H, [x for x in everything if x not in (a, b)])]
        want = 3 * cb[0] if cb else None
    else:
        return [f"unknown rule {r}"]
    errs = []
    if not ok:
        errs.append(f"{H}: precondition of {r.value} fails ({p})")
    if kids != want_kids:
        errs.append(f"{H}: {r.value} children {list(map(str, kids))} != {list(map(str, want_kids))}")
    if want is None or d.bound != want:
        errs.append(f"{H}: {r.value} bound {d.bound} != {want}")
    return errs


def derivation_problems(d: Derivation) -> list[str]:
    """All problems found in the derivation tree (empty when it is valid)."""
    errs: list[str] = []
    for node in d.nodes():
        if node.pattern.n < 2:
            errs.append(f"{node.pattern}: pattern with fewer than two vertices")
            continue
        if node.rule in LEAF_RULES:
            errs += _leaf_problems(node)
        else:
            errs += _reduction_problems(node)
    return errs


def verify_derivation(d: Derivation) -> bool:
    return not derivation_problems(d)
