"""Reduction calculus: classify a pattern and derive upper bounds on its chromatic threshold."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any

from ..core import (
    OrderedGraph,
    delete_vertices,
    inner_cut_vertices,
    parse_graph,
    split_at,
)
from ..patterns import (
    PatternWitness,
    crossing,
    find_bonnet,
    find_crossing,
    find_cycle,
    find_tangled_path,
    nesting,
    recognize_tuple_matching,
    star_centers,
)
from ..structure import is_monotonically_alternating


class Rule(str, Enum):
    INNER_CUT_SPLIT = "InnerCutSplit"
    ISOLATED_VERTEX = "IsolatedVertex"
    ISOLATED_EDGE = "IsolatedEdge"
    REDUCIBLE_VERTEX = "ReducibleVertex"
    MATCHING_CONSECUTIVE_PAIR = "MatchingConsecutivePair"
    MONO_ALT_NON_CROSSING_TREE = "MonoAltNonCrossingTree"
    GENERALIZED_STAR = "GeneralizedStar"
    TWO_NESTING = "TwoNesting"
    TWO_CROSSING = "TwoCrossing"
    NESTING = "Nesting"
    CROSSING = "Crossing"
    TUPLE_MATCHING = "TupleMatching"
    SINGLE_EDGE = "SingleEdge"


LEAF_RULES = frozenset({
    Rule.MONO_ALT_NON_CROSSING_TREE, Rule.GENERALIZED_STAR, Rule.TWO_NESTING, Rule.TWO_CROSSING,
    Rule.NESTING, Rule.CROSSING, Rule.TUPLE_MATCHING, Rule.SINGLE_EDGE,
})

# rules whose bound comes from an edge-density theorem and is enforced by degeneracy colouring
ASSERTED_RULES = frozenset({Rule.TWO_NESTING, Rule.TWO_CROSSING, Rule.NESTING, Rule.CROSSING,
                            Rule.TUPLE_MATCHING})


def combine(rule: Rule, child_bounds: list[int]) -> int:
    if rule is Rule.INNER_CUT_SPLIT:
        return child_bounds[0] + child_bounds[1]
    if rule in (Rule.ISOLATED_VERTEX, Rule.REDUCIBLE_VERTEX):
        return 2 * child_bounds[0]
    if rule is Rule.ISOLATED_EDGE:
        return 2 * child_bounds[0] + 1
    if rule is Rule.MATCHING_CONSECUTIVE_PAIR:
        return 3 * child_bounds[0]
    raise ValueError(f"{rule} has no children")


def leaf_bound(rule: Rule, H: OrderedGraph) -> int:
    k = H.n
    if rule is Rule.SINGLE_EDGE:
        return 1
    if rule is Rule.GENERALIZED_STAR:
        return k - 1
    if rule is Rule.MONO_ALT_NON_CROSSING_TREE:
        return 2 * k - 3
    if rule in (Rule.TWO_NESTING, Rule.TWO_CROSSING):
        return 3
    if rule in (Rule.NESTING, Rule.CROSSING):
        return 4 * (H.m - 1)
    if rule is Rule.TUPLE_MATCHING:
        # 2^(10 k log2 k) is exactly k^(10k)
        return k ** (10 * k)
    raise ValueError(f"{rule} is not a leaf rule")


@dataclass(frozen=True, eq=False)
class Derivation:
    """A node of a bound derivation; its children are derivations for smaller patterns."""

    pattern: OrderedGraph
    rule: Rule
    bound: int
    params: dict[str, Any] = field(default_factory=dict)
    children: tuple["Derivation", ...] = ()

    def nodes(self):
        yield self
        for c in self.children:
            yield from c.nodes()

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def render(self, indent: int = 0) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        bound = self.bound if self.bound < 10**12 else f"{self.pattern.n}^{10 * self.pattern.n}"
        line = f"{'  ' * indent}[{bound}] {self.pattern}  {self.rule.value}({ps})"
        return "\n".join([line, *(c.render(indent + 1) for c in self.children)])

    def to_json(self) -> dict:
        nodes: list[dict] = []

        def walk(d: Derivation) -> int:
            i = len(nodes)
            nodes.append({})
            kids = [walk(c) for c in d.children]
            nodes[i] = {"id": i, "pattern": str(d.pattern), "rule": d.rule.value,
                        "bound": d.bound, "params": _json_params(d.params), "children": kids}
            return i

        walk(self)
        return {"root": 0, "bound": self.bound, "nodes": nodes}

    @classmethod
    def from_json(cls, data: dict) -> "Derivation":
        nodes = {n["id"]: n for n in data["nodes"]}

        def build(i: int) -> Derivation:
            n = nodes[i]
            params = {k: tuple(v) if isinstance(v, list) else v for k, v in n["params"].items()}
            return cls(parse_graph(n["pattern"]), Rule(n["rule"]), int(n["bound"]), params,
                       tuple(build(c) for c in n["children"]))

        return build(data["root"])


def _json_params(params: dict) -> dict:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in params.items()}


# ---------------------------------------------------------------------------
# rule applicability


def leaf_candidates(H: OrderedGraph) -> list[tuple[Rule, dict]]:
    out: list[tuple[Rule, dict]] = []
    if H.n == 2 and H.m == 1:
        out.append((Rule.SINGLE_EDGE, {}))
    centers = [c for c in star_centers(H) if c in (1, H.n)]
    if centers:
        out.append((Rule.GENERALIZED_STAR, {"center": centers[0]}))
    if H.n >= 4 and H.n % 2 == 0:
        k = H.n // 2
        if H == nesting(k):
            if k == 2:
                out.append((Rule.TWO_NESTING, {}))
            out.append((Rule.NESTING, {"k": k}))
        if H == crossing(k):
            if k == 2:
                out.append((Rule.TWO_CROSSING, {}))
            out.append((Rule.CROSSING, {"k": k}))
    if H.n >= 2 and H.is_tree() and find_crossing(H) is None:
        ma = is_monotonically_alternating(H)
        if ma.verdict:
            out.append((Rule.MONO_ALT_NON_CROSSING_TREE, {"split": ma.split}))
    tm = recognize_tuple_matching(H)
    if tm is not None:
        t, m, perm = tm
        out.append((Rule.TUPLE_MATCHING, {"t": t, "m": m, "perm": perm}))
    return out


def reducible_vertices(H: OrderedGraph) -> list[int]:
    out = []
    if H.n < 3:
        return out
    for u, nxt in ((1, 2), (H.n, H.n - 1)):
        if H.degree(u) == 1 and H.adj[u] & H.adj[nxt]:
            out.append(u)
    return out


def is_matching(H: OrderedGraph) -> bool:
    return H.m >= 1 and all(H.degree(v) == 1 for v in H.vertices)


def reduction_candidates(H: OrderedGraph) -> list[tuple[Rule, dict, tuple[OrderedGraph, ...]]]:
    out: list[tuple[Rule, dict, tuple[OrderedGraph, ...]]] = []
    for v in inner_cut_vertices(H):
        out.append((Rule.INNER_CUT_SPLIT, {"vertex": v}, split_at(H, v)))
    if H.n >= 3:
        for v in H.isolated_vertices():
            out.append((Rule.ISOLATED_VERTEX, {"vertex": v}, (delete_vertices(H, [v]),)))
    if H.n >= 4 and H.has_edge(1, H.n) and H.degree(1) == 1 and H.degree(H.n) == 1:
        out.append((Rule.ISOLATED_EDGE, {"edge": (1, H.n)}, (delete_vertices(H, [1, H.n]),)))
    for u in reducible_vertices(H):
        out.append((Rule.REDUCIBLE_VERTEX, {"vertex": u}, (delete_vertices(H, [u]),)))
    if is_matching(H) and H.m >= 2:
        for a, b in H.sorted_edges:
            if b == a + 1:
                out.append((Rule.MATCHING_CONSECUTIVE_PAIR, {"edge": (a, b)},
                            (delete_vertices(H, [a, b]),)))
    return out


@lru_cache(maxsize=None)
def _derive(H: OrderedGraph) -> Derivation | None:
    best: Derivation | None = None
    for rule, params in leaf_candidates(H):
        b = leaf_bound(rule, H)
        if best is None or b < best.bound:
            best = Derivation(H, rule, b, params)
    for rule, params, kids in reduction_candidates(H):
        subs = [_derive(K) for K in kids]
        if any(s is None for s in subs):
            continue
        b = combine(rule, [s.bound for s in subs])
        if best is None or b < best.bound:
            best = Derivation(H, rule, b, params, tuple(subs))
    return best


class InfinitePattern(ValueError):
    """The pattern contains a cycle, bonnet or tangled path."""


def infinite_witness(H: OrderedGraph) -> PatternWitness | None:
    w = find_cycle(H)
    if w is None:
        w = find_bonnet(H)
    if w is None:
        w = find_tangled_path(H)
    return w


def derive_upper_bound(H: OrderedGraph, screened: bool = False) -> Derivation | None:
    """Minimum-bound derivation over all applicable rules, or ``None``.

    The pattern must be free of cycles, bonnets and tangled paths; this is
    checked unless ``screened`` says the caller already did.
    """
    if H.n < 2:
        raise ValueError("patterns need at least two vertices")
    if not screened:
        w = infinite_witness(H)
        if w is not None:
            raise InfinitePattern(f"pattern contains a {w.kind}; no finite bound exists")
    return _derive(H)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    pattern: OrderedGraph
    verdict: str  # Infinite | Finite | Unknown
    witness: PatternWitness | None = None
    lower: int | None = None
    upper: int | None = None
    derivation: Derivation | None = None
    diagnosis: dict | None = None

    def summary(self) -> str:
        if self.verdict == "Infinite":
            return f"Infinite ({self.witness.kind})"
        if self.verdict == "Finite":
            up = self.upper if self.upper < 10**12 else f"{self.pattern.n}^{10 * self.pattern.n}"
            return f"Finite ({self.lower} <= f <= {up})" if self.lower != self.upper else f"Finite (f = {self.lower})"
        return f"Unknown ({self.diagnosis['reason']})"

    def to_json(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "verdict": self.verdict,
            "witness": self.witness.to_json() if self.witness else None,
            "lower": self.lower,
            "upper": self.upper,
            "derivation": self.derivation.to_json() if self.derivation else None,
            "diagnosis": self.diagnosis,
        }


def _unknown_diagnosis(H: OrderedGraph) -> dict:
    from ..core import segments

    cr = find_crossing(H)
    segs = []
    for s in segments(H).segments:
        g = s.graph()
        entry: dict = {"interval": [s.start, s.end], "tree": g.is_tree()}
        if g.is_tree():
            entry["monoalt"] = is_monotonically_alternating(g).verdict
        segs.append(entry)
    return {
        "reason": "crossing, no forbidden substructure, no terminating reduction chain",
        "crossing_pair": [list(e) for e in cr.edges] if cr else None,
        "forbidden_substructure": None,
        "segments": segs,
        "applicable_rules": sorted({r.value for r, *_ in reduction_candidates(H)}
                                   | {r.value for r, _ in leaf_candidates(H)}),
    }


def classify(H: OrderedGraph) -> Classification:
    if H.n < 2:
        raise ValueError("patterns need at least two vertices")
    w = infinite_witness(H)
    if w is not None:
        return Classification(H, "Infinite", witness=w)
    d = _derive(H)
    if d is not None:
        return Classification(H, "Finite", lower=H.n - 1, upper=d.bound, derivation=d)
    if find_crossing(H) is None:
        raise AssertionError(f"non-crossing bonnet-free forest {H} without a derivation")
    return Classification(H, "Unknown", diagnosis=_unknown_diagnosis(H))

