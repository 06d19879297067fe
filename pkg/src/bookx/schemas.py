"""JSON Schemas (draft 2020-12) for the ``--json`` output of each subcommand."""

_NULLABLE_INT = {"type": ["integer", "null"]}

CLASSIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["input", "canonical", "class", "species", "rank", "approx"],
    "properties": {
        "input": {"type": "string"},
        "canonical": {"type": "string"},
        "class": {
            "enum": [
                "rational_length",
                "rational_power_only",
                "medial",
                "simple_rank",
                "binomial",
                "apotome",
                "unclassified",
            ]
        },
        "species": {"type": ["integer", "null"], "minimum": 1, "maximum": 6},
        "rank": {"type": ["integer", "null"], "minimum": 0},
        "approx": {"type": "string"},
        "conditions": {
            "type": ["object", "null"],
            "properties": {
                "excess_commensurable": {"type": "boolean"},
                "greater_rational": {"type": "boolean"},
                "lesser_rational": {"type": "boolean"},
            },
        },
    },
}

COMMENSURABLE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["inputs", "canonical", "mode", "commensurable", "ratio"],
    "properties": {
        "inputs": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        "canonical": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        "mode": {"enum": ["length", "power"]},
        "commensurable": {"type": "boolean"},
        "ratio": {"type": ["string", "null"]},
    },
}

SQRT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["input", "canonical", "approx"],
    "properties": {
        "input": {"type": "string"},
        "canonical": {"type": "string"},
        "approx": {"type": "string"},
    },
}

RANKS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["base", "count", "terms"],
    "properties": {
        "base": {"type": "string"},
        "count": {"type": "integer", "minimum": 1},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "u", "power_form", "rank", "area", "approx"],
                "properties": {
                    "n": {"type": "integer", "minimum": 1},
                    "u": {"type": "string"},
                    "power_form": {"type": "string"},
                    "rank": {"type": "integer", "minimum": 1},
                    "area": {"type": "string"},
                    "approx": {"type": "string"},
                    "incommensurable_with_previous": {"type": "boolean"},
                    "incommensurable_with_unit": {"type": "boolean"},
                },
            },
        },
    },
}

BINOMIAL = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["type", "n", "kind", "greater_square", "lesser_square", "canonical", "species", "approx"],
    "properties": {
        "type": {"type": "integer", "minimum": 1, "maximum": 6},
        "n": {"type": "string"},
        "kind": {"enum": ["binomial", "apotome"]},
        "greater_square": {"type": "string"},
        "lesser_square": {"type": "string"},
        "canonical": {"type": "string"},
        "species": {"type": "integer", "minimum": 1, "maximum": 6},
        "approx": {"type": "string"},
    },
}

VERIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["prop", "attempted", "passed", "seed", "counterexample"],
    "properties": {
        "prop": {"enum": ["x17", "x21", "x54", "x115"]},
        "attempted": {"type": "integer", "minimum": 1},
        "passed": {"type": "integer", "minimum": 0},
        "seed": {"type": "integer"},
        "counterexample": {"type": ["object", "null"]},
    },
}

ERROR = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["error", "message"],
    "properties": {
        "error": {"enum": ["domain", "not_representable", "syntax", "usage"]},
        "message": {"type": "string"},
        "position": _NULLABLE_INT,
    },
}

BY_SUBCOMMAND = {
    "classify": CLASSIFY,
    "commensurable": COMMENSURABLE,
    "sqrt": SQRT,
    "ranks": RANKS,
    "binomial": BINOMIAL,
    "verify": VERIFY,
}
