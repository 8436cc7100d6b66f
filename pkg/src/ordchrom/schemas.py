"""JSON Schemas for every ``--json`` payload the CLI emits.

Plain dicts so the runtime needs no validator; tests validate with ``jsonschema``.
"""

from __future__ import annotations

GRAPH_TEXT = {"type": "string", "pattern": r"^OG \d+:"}
EDGE = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 2, "maxItems": 2}
COLORING = {"type": "array", "items": {"type": "integer", "minimum": 0}}

WITNESS = {
    "type": ["object", "null"],
    "required": ["kind", "vertices", "edges"],
    "properties": {
        "kind": {"enum": ["cycle", "bonnet", "tangled_path", "crossing"]},
        "vertices": {"type": "array", "items": {"type": "integer"}},
        "edges": {"type": "array", "items": EDGE},
    },
}

DERIVATION = {
    "type": "object",
    "required": ["root", "bound", "nodes"],
    "properties": {
        "root": {"type": "integer"},
        "bound": {"type": "integer", "minimum": 1},
        "nodes": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "pattern", "rule", "bound", "params", "children"],
                "properties": {
                    "id": {"type": "integer"},
                    "pattern": GRAPH_TEXT,
                    "rule": {"type": "string"},
                    "bound": {"type": "integer", "minimum": 1},
                    "params": {"type": "object"},
                    "children": {"type": "array", "items": {"type": "integer"}},
                },
            },
        },
    },
}

CLASSIFICATION = {
    "type": "object",
    "required": ["pattern", "verdict", "witness", "lower", "upper", "derivation", "diagnosis"],
    "properties": {
        "pattern": GRAPH_TEXT,
        "verdict": {"enum": ["Infinite", "Finite", "Unknown"]},
        "witness": WITNESS,
        "lower": {"type": ["integer", "null"]},
        "upper": {"type": ["integer", "null"]},
        "derivation": {"oneOf": [DERIVATION, {"type": "null"}]},
        "diagnosis": {"type": ["object", "null"]},
    },
}

BOUND = {
    "type": "object",
    "required": ["pattern", "derivation"],
    "properties": {"pattern": GRAPH_TEXT, "derivation": {"oneOf": [DERIVATION, {"type": "null"}]}},
}

COLOR = {
    "type": "object",
    "required": ["coloring", "colors_used", "bound", "rule", "fallbacks"],
    "properties": {
        "coloring": COLORING,
        "colors_used": {"type": "integer", "minimum": 0},
        "bound": {"type": "integer", "minimum": 1},
        "rule": {"type": "string"},
        "fallbacks": {"type": "array", "items": {"type": "string"}},
    },
}

DETECT = {
    "type": "object",
    "required": ["graph", "cycle", "bonnet", "tangled_path", "crossing"],
    "properties": {"graph": GRAPH_TEXT, "cycle": WITNESS, "bonnet": WITNESS,
                   "tangled_path": WITNESS, "crossing": WITNESS},
}

SEGMENTS = {
    "type": "object",
    "required": ["graph", "decomposition", "interval_chromatic_number", "intervals"],
    "properties": {
        "graph": GRAPH_TEXT,
        "decomposition": {
            "type": "object",
            "required": ["inner_cut_vertices", "segments"],
            "properties": {
                "inner_cut_vertices": {"type": "array", "items": {"type": "integer"}},
                "segments": {"type": "array", "items": {"type": "object"}},
            },
        },
        "interval_chromatic_number": {"type": "integer", "minimum": 0},
        "intervals": {"type": "array", "items": EDGE},
        "bipartite_matrix": {"type": ["object", "null"]},
    },
}

MONOALT = {
    "type": "object",
    "required": ["graph", "monoalt", "equivalence"],
    "properties": {
        "graph": GRAPH_TEXT,
        "monoalt": {"type": ["object", "null"], "required": ["verdict"]},
        "equivalence": {"type": "object", "required": ["agree"]},
    },
}

CONSTRUCT = {
    "type": "object",
    "required": ["kind", "graph", "metadata"],
    "properties": {"kind": {"type": "string"}, "graph": GRAPH_TEXT, "metadata": {"type": "object"}},
}

EMBED = {
    "type": "object",
    "required": ["pattern", "graph", "embeddings", "count"],
    "properties": {
        "pattern": GRAPH_TEXT,
        "graph": GRAPH_TEXT,
        "embeddings": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "count": {"type": "integer", "minimum": 0},
    },
}

ORACLE_CHI = {
    "type": "object",
    "required": ["graph", "value", "coloring", "lower_bound", "nodes"],
    "properties": {
        "graph": GRAPH_TEXT,
        "value": {"type": "integer", "minimum": 0},
        "coloring": COLORING,
        "lower_bound": {"type": "object"},
        "nodes": {"type": "integer", "minimum": 0},
    },
}

ORACLE_SEARCH = {
    "type": "object",
    "required": ["n", "pattern", "objective", "value", "witness", "examined", "exhaustive"],
    "properties": {
        "n": {"type": "integer"},
        "pattern": GRAPH_TEXT,
        "objective": {"enum": ["max_chi", "max_edges"]},
        "value": {"type": ["integer", "null"]},
        "witness": {"type": ["string", "null"]},
        "examined": {"type": "integer"},
        "exhaustive": {"type": "boolean"},
        "lower_bound_only": {"type": "boolean"},
    },
}

ORACLE_ORDERINGS = {
    "type": "object",
    "required": ["forest", "count", "orderings"],
    "properties": {
        "forest": {"type": "string"},
        "count": {"type": "integer", "minimum": 1},
        "orderings": {"type": "array", "items": GRAPH_TEXT},
    },
}

TABLE = {
    "type": "object",
    "required": ["rows"],
    "properties": {
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["forest", "ordering", "paired_with_reverse", "verdict", "lower", "upper",
                             "anchor"],
                "properties": {
                    "forest": {"type": "string"},
                    "ordering": GRAPH_TEXT,
                    "paired_with_reverse": {"type": "boolean"},
                    "verdict": {"enum": ["Infinite", "Finite", "Unknown"]},
                    "lower": {"type": ["integer", "null"]},
                    "upper": {"type": ["integer", "null"]},
                    "anchor": {"type": "string"},
                },
            },
        },
    },
}

SCHEMAS = {
    "classify": CLASSIFICATION,
    "bound": BOUND,
    "color": COLOR,
    "detect": DETECT,
    "segments": SEGMENTS,
    "monoalt": MONOALT,
    "construct": CONSTRUCT,
    "embed": EMBED,
    "oracle chi": ORACLE_CHI,
    "oracle maxchi": ORACLE_SEARCH,
    "oracle extremal": ORACLE_SEARCH,
    "oracle orderings": ORACLE_ORDERINGS,
    "table": TABLE,
}
