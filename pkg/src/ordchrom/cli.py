"""Command-line interface: ``ordchrom <subcommand> [options]``.

Graphs are given inline (``--graph "OG 4: 1-2,2-3,3-4"``) or as a path to a
file holding that text or its JSON form. Exit status is 0 on success, 1 on
domain errors (bad graph text, pattern present, budget exhausted) and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import islice
from pathlib import Path

from .bounds import (
    BoundExceeded,
    InfinitePattern,
    PatternPresent,
    classify,
    color_avoider,
    derive_upper_bound,
)
from .constructions import (
    DEFAULT_VERTEX_CAP,
    complete_graph,
    shift_graph,
    spindle,
    spiral_path,
    tutte_step,
)
from .core import (
    GraphFormatError,
    OrderedGraph,
    bipartite_matrix,
    find_embedding,
    interval_chromatic_number,
    parse_graph,
    reverse,
    segments,
)
from .oracle import (
    EXHAUSTIVE_MAX_N,
    SMALL_FORESTS,
    chromatic_number,
    extremal_number,
    max_chi_avoiders,
    orderings,
)
from .patterns import BudgetExhausted, find_bonnet, find_crossing, find_cycle, find_tangled_path
from .structure import check_characterization, is_monotonically_alternating


@dataclass(frozen=True)
class CommandResult:
    status: int
    report: str
    payload: dict | None = None

    def output(self, as_json: bool) -> str:
        if as_json and self.payload is not None:
            return json.dumps(self.payload, indent=2)
        return self.report


class UsageError(Exception):
    pass


def load_graph(text: str) -> OrderedGraph:
    """Parse inline ``OG`` text, or read it (or its JSON form) from a file."""
    if text.lstrip().startswith("OG"):
        return parse_graph(text)
    path = Path(text)
    if not path.is_file():
        raise GraphFormatError(f"not OG text and no such file: {text!r}")
    body = path.read_text(encoding="utf-8").strip()
    if body.startswith("{"):
        return OrderedGraph.from_json(json.loads(body))
    return parse_graph(body)


def _witness_line(w) -> str:
    if w is None:
        return "none"
    extra = f" [{w.catalog_member}]" if w.catalog_member else ""
    if w.path:
        return f"{w.kind}{extra} path {list(w.path)} split at {w.split_vertex}"
    return f"{w.kind}{extra} on {list(w.vertices)} edges {[list(e) for e in w.edges]}"


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> CommandResult:
    H = load_graph(args.graph)
    c = classify(H)
    lines = [f"pattern: {H}", f"verdict: {c.summary()}"]
    if c.witness is not None:
        lines.append(f"witness: {_witness_line(c.witness)}")
    if c.derivation is not None:
        lines += ["derivation:", c.derivation.render(1)]
    if c.diagnosis is not None:
        d = c.diagnosis
        lines.append(f"crossing pair: {d['crossing_pair']}")
        for s in d["segments"]:
            lines.append(f"segment {s['interval']}: tree={s['tree']} monoalt={s.get('monoalt')}")
        lines.append(f"applicable rules: {', '.join(d['applicable_rules']) or 'none'}")
    return CommandResult(0, "\n".join(lines), c.to_json())


def cmd_bound(args) -> CommandResult:
    H = load_graph(args.graph)
    d = derive_upper_bound(H)
    report = f"pattern: {H}\n" + (d.render() if d else "no terminating derivation")
    return CommandResult(0, report, {"pattern": str(H), "derivation": d.to_json() if d else None})


def cmd_color(args) -> CommandResult:
    H, G = load_graph(args.pattern), load_graph(args.graph)
    res = color_avoider(H, G, verify=not args.no_verify)
    lines = [f"pattern: {H}", f"host: {G.n} vertices, {G.m} edges",
             f"colors used: {res.colors_used} (bound {res.bound}, rule {res.derivation.rule.value})",
             "coloring: " + " ".join(f"{v}:{c}" for v, c in enumerate(res.coloring, 1))]
    lines += [f"fallback: {f}" for f in res.fallbacks]
    return CommandResult(0, "\n".join(lines), res.to_json())


def cmd_detect(args) -> CommandResult:
    G = load_graph(args.graph)
    found = {
        "cycle": find_cycle(G),
        "bonnet": find_bonnet(G),
        "tangled_path": find_tangled_path(G, path_budget=args.path_budget),
        "crossing": find_crossing(G),
    }
    lines = [f"graph: {G}"] + [f"{k}: {_witness_line(w)}" for k, w in found.items()]
    payload = {"graph": str(G), **{k: (w.to_json() if w else None) for k, w in found.items()}}
    return CommandResult(0, "\n".join(lines), payload)


def cmd_segments(args) -> CommandResult:
    G = load_graph(args.graph)
    dec = segments(G)
    chi, parts = interval_chromatic_number(G)
    bm = bipartite_matrix(G).to_json() if chi <= 2 else None
    lines = [f"graph: {G}", f"inner cut vertices: {list(dec.inner_cut_vertices)}"]
    for s in dec.segments:
        lines.append(f"segment [{s.start}, {s.end}]: {s.graph()}")
    lines.append(f"interval chromatic number: {chi} {parts}")
    if bm is not None:
        lines.append("bipartite matrix (rows " + str(bm["rows"]) + ", cols " + str(bm["cols"]) + "):")
        lines += ["  " + "".join(map(str, r)) for r in bm["matrix"]]
    payload = {"graph": str(G), "decomposition": dec.to_json(), "interval_chromatic_number": chi,
               "intervals": [list(p) for p in parts], "bipartite_matrix": bm}
    return CommandResult(0, "\n".join(lines), payload)


def cmd_monoalt(args) -> CommandResult:
    T = load_graph(args.graph)
    if not T.is_tree():
        raise ValueError("monoalt needs a tree")
    ma = is_monotonically_alternating(T)
    rep = check_characterization(T)
    lines = [f"tree: {T}", f"monotonically alternating: {ma.verdict}"]
    if ma.verdict:
        lines.append(f"split after {ma.split}; S(L) {sorted(ma.left_edges)}; S(R) {sorted(ma.right_edges)}")
    else:
        lines += [f"  split {p}: {r}" for p, r in sorted(ma.failures.items())]
    lines += [f"no bonnet: {rep.no_bonnet}", f"no tangled path: {rep.no_tangled}",
              f"segments mono-alt: {[r.verdict for r in rep.segment_results]}",
              f"equivalence holds: {rep.agree}"]
    return CommandResult(0, "\n".join(lines),
                         {"graph": str(T), "monoalt": ma.to_json(), "equivalence": rep.to_json()})


def cmd_construct(args) -> CommandResult:
    kind = args.kind
    meta: dict = {}
    if kind == "shift":
        G = shift_graph(args.size)
        meta = {"n": args.size}
    elif kind == "complete":
        G = complete_graph(args.size)
        meta = {"n": args.size}
    elif kind == "spiral":
        G = spiral_path(args.size)
        meta = {"k": args.size}
    elif kind == "spindle":
        s = spindle(args.size)
        G = s.graph
        meta = {"k": s.k, "u": s.u, "xs": list(s.xs), "ys": list(s.ys), "x": s.x, "y": s.y,
                "path": str(s.path)}
    else:
        P, base = load_graph(args.pattern), load_graph(args.base)
        tg = tutte_step(P, base, args.k, vertex_cap=args.cap)
        G = tg.graph
        meta = tg.metadata()
    meta.update({"vertices": G.n, "edges": G.m})
    if args.out:
        Path(args.out).write_text(str(G) + "\n", encoding="utf-8")
    summary = ", ".join(f"{k}={v}" for k, v in meta.items() if not isinstance(v, list))
    report = f"{kind}: {summary}" + (f"\nwritten to {args.out}" if args.out else f"\n{G}")
    return CommandResult(0, report, {"kind": kind, "graph": str(G), "metadata": meta})


def cmd_embed(args) -> CommandResult:
    H, G = load_graph(args.pattern), load_graph(args.graph)
    if args.all:
        embs = list(islice(find_embedding(H, G, find_all=True), args.limit))
    else:
        e = find_embedding(H, G)
        embs = [e] if e is not None else []
    lines = [f"pattern: {H}", f"host: {G.n} vertices, {G.m} edges", f"copies found: {len(embs)}"]
    lines += [f"  {list(e.image)}" for e in embs]
    payload = {"pattern": str(H), "graph": str(G), "embeddings": [list(e.image) for e in embs],
               "count": len(embs)}
    return CommandResult(0, "\n".join(lines), payload)


def cmd_oracle(args) -> CommandResult:
    if args.task == "chi":
        G = load_graph(args.graph)
        r = chromatic_number(G, budget=args.budget, method=args.method)
        report = (f"graph: {G.n} vertices, {G.m} edges\nchi = {r.value}\n"
                  f"clique: {list(r.clique)}; refuted colours: {r.refuted}; nodes: {r.nodes}")
        return CommandResult(0, report, {"graph": str(G), **r.to_json()})
    if args.task in ("maxchi", "extremal"):
        H = load_graph(args.pattern)
        fn = max_chi_avoiders if args.task == "maxchi" else extremal_number
        exhaustive = False if args.heuristic else (True if args.exhaustive else None)
        r = fn(H, args.n, exhaustive=exhaustive, trials=args.trials, seed=args.seed)
        what = "max chi" if args.task == "maxchi" else "max edges"
        tag = "exact" if r.exhaustive else "lower bound only (heuristic)"
        report = (f"pattern: {H}\nn = {r.n}: {what} over avoiders = {r.value} [{tag}]\n"
                  f"witness: {r.witness}\nexamined: {r.examined}")
        return CommandResult(0, report, r.to_json())
    names = [args.forest] if args.forest else list(SMALL_FORESTS)
    lines, payloads = [], []
    for name in names:
        n, edges = SMALL_FORESTS[name]
        obs = orderings(n, edges)
        lines.append(f"{name}: {len(obs)} orderings")
        payloads.append({"forest": name, "count": len(obs), "orderings": [str(g) for g in obs]})
    payload = payloads[0] if args.forest else {"forests": payloads}
    return CommandResult(0, "\n".join(lines), payload)


# independently pinned values; everything else is reported as an engine output
def _anchor(name: str, G: OrderedGraph, c) -> str:
    text = str(G)
    if c.verdict == "Infinite":
        return f"witness-certified ({c.witness.kind})"
    if name in ("P2", "S2"):
        return "pinned (k-1 for k = 2, 3)"
    if text in ("OG 4: 1-2, 2-3, 3-4", "OG 4: 1-4, 2-3", "OG 4: 1-3, 2-4"):
        return "pinned (f = 3)"
    if c.verdict == "Unknown" and text == "OG 6: 1-3, 2-5, 4-6":
        return "open instance"
    return "engine value (not pinned)"


def table_rows() -> list[dict]:
    rows = []
    for name, (n, edges) in SMALL_FORESTS.items():
        obs = orderings(n, edges)
        present = set(obs)
        for G in obs:
            R = reverse(G)
            if R != G and R in present and R.sorted_edges < G.sorted_edges:
                continue
            c = classify(G)
            lower, anchor = c.lower, _anchor(name, G, c)
            if c.verdict == "Finite" and G.n >= 4 and spiral_path(G.n) in (G, R):
                # the spindle gadget lifts the lower bound to k
                lower = G.n
                anchor = "spindle lower bound; " + anchor
            rows.append({"forest": name, "ordering": str(G),
                         "paired_with_reverse": R != G and R in present,
                         "verdict": c.verdict, "lower": lower, "upper": c.upper,
                         "anchor": anchor})
    return rows


def cmd_table(args) -> CommandResult:
    rows = table_rows()
    lines = ["f values of ordered forests with at most 3 edges (* = also stands for the reverse)", ""]
    width = max(len(r["ordering"]) for r in rows) + 1
    for r in rows:
        star = "*" if r["paired_with_reverse"] else " "
        if r["verdict"] == "Finite":
            up = r["upper"] if r["upper"] < 10**6 else "k^(10k)"
            val = f"f = {r['lower']}" if r["lower"] == r["upper"] else f"{r['lower']} <= f <= {up}"
        elif r["verdict"] == "Infinite":
            val = "f = inf"
        else:
            val = "f = ?"
        lines.append(f"{r['forest']:<6} {r['ordering']:<{width}}{star}  {val:<16} {r['anchor']}")
    return CommandResult(0, "\n".join(lines), {"rows": rows})


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the machine-readable payload")

    ap = argparse.ArgumentParser(prog="ordchrom", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, hlp in (("classify", cmd_classify, "finite / infinite / unknown verdict"),
                          ("bound", cmd_bound, "minimum-bound derivation tree"),
                          ("segments", cmd_segments, "segment decomposition and interval chromatic number"),
                          ("monoalt", cmd_monoalt, "monotonically alternating test for a tree")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--graph", required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("detect", parents=[common], help="cycle, bonnet, tangled path and crossing witnesses")
    p.add_argument("--graph", required=True)
    p.add_argument("--path-budget", type=int, default=200_000)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("color", parents=[common], help="colour a pattern-avoiding host within the bound")
    p.add_argument("--pattern", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--no-verify", action="store_true", help="skip avoidance checks at inner nodes")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("embed", parents=[common], help="find ordered copies of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--all", action="store_true")
    p.add_argument("--limit", type=int, default=100)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("construct", parents=[common], help="build a named construction")
    p.add_argument("kind", choices=["shift", "spindle", "spiral", "tutte", "complete"])
    p.add_argument("size", type=int, nargs="?", help="n for shift/complete, k for spindle/spiral")
    p.add_argument("--pattern", help="tutte: minimal tangled path")
    p.add_argument("--base", help="tutte: base graph avoiding the pattern")
    p.add_argument("--k", type=int, help="tutte: target chromatic number")
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--out", help="write the graph text to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("oracle", parents=[common], help="exact ground-truth computations")
    p.add_argument("task", choices=["chi", "maxchi", "extremal", "orderings"])
    p.add_argument("--graph")
    p.add_argument("--pattern")
    p.add_argument("--n", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="full enumeration (n <= 7)")
    mode.add_argument("--heuristic", action="store_true", help="random maximal avoiders (lower bound only)")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None,
                   help="search budget (nodes for dsatur, conflicts for sat)")
    p.add_argument("--method", choices=["dsatur", "sat"], default="dsatur",
                   help="exact colouring engine for chi")
    p.add_argument("--forest", choices=list(SMALL_FORESTS))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", parents=[common], help="f values for all forests with at most 3 edges")
    p.set_defaults(func=cmd_table)
    return ap


def _check_usage(args) -> None:
    if args.command == "construct":
        if args.kind == "tutte":
            if not (args.pattern and args.base and args.k):
                raise UsageError("construct tutte needs --pattern, --base and --k")
        elif args.size is None:
            raise UsageError(f"construct {args.kind} needs a size")
    if args.command == "oracle":
        need = {"chi": ["graph"], "maxchi": ["pattern", "n"], "extremal": ["pattern", "n"],
                "orderings": []}[args.task]
        missing = [f"--{a}" for a in need if getattr(args, a) is None]
        if missing:
            raise UsageError(f"oracle {args.task} needs {', '.join(missing)}")
        if args.exhaustive and args.n is not None and args.n > EXHAUSTIVE_MAX_N:
            raise UsageError(f"--exhaustive supports n <= {EXHAUSTIVE_MAX_N}")


def run(argv: list[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_usage(args)
    except SystemExit as e:
        return CommandResult(int(e.code or 0), "")
    except UsageError as e:
        return CommandResult(2, f"usage error: {e}")
    try:
        res = args.func(args)
    except GraphFormatError as e:
        return CommandResult(1, f"error: {e}")
    except PatternPresent as e:
        return CommandResult(1, f"error: {e}")
    except (InfinitePattern, BudgetExhausted, BoundExceeded, ValueError, OSError) as e:
        return CommandResult(1, f"error: {type(e).__name__}: {e}")
    return CommandResult(res.status, res.output(args.json), res.payload)


def main(argv: list[str] | None = None) -> int:
    res = run(argv)
    if res.report:
        stream = sys.stdout if res.status == 0 else sys.stderr
        print(res.report, file=stream)
    return res.status


if __name__ == "__main__":
    raise SystemExit(main())
