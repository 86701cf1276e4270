"""JSON schema for ``afgr ... --output json``."""

RATIONAL = {
    "type": "object",
    "properties": {"num": {"type": "integer"}, "den": {"type": "integer", "minimum": 1}},
    "required": ["num", "den"],
    "additionalProperties": False,
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "afgr output",
    "type": "object",
    "required": ["command", "result"],
    "additionalProperties": False,
    "properties": {"command": {"type": "string"}, "result": {"$ref": "#/$defs/value"}},
    "$defs": {
        "rational": RATIONAL,
        "coweight": {"type": "array", "items": {"type": "integer"}},
        "element": {
            "type": "object",
            "properties": {
                "trans": {"$ref": "#/$defs/coweight"},
                "perm": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                "word": {"type": "string", "pattern": "^(e|(s[0-9]+)+)$"},
                "length": {"type": "integer", "minimum": 0},
            },
            "required": ["trans", "perm"],
            "additionalProperties": False,
        },
        "polytope": {
            "type": "object",
            "properties": {
                "vertices": {"type": "array", "minItems": 1,
                             "items": {"type": "array", "items": {"$ref": "#/$defs/rational"}}},
                "dim": {"type": "integer", "minimum": 0},
            },
            "required": ["vertices", "dim"],
            "additionalProperties": False,
        },
        "dimresult": {
            "type": "object",
            "properties": {
                "value": {"type": ["integer", "null"], "minimum": 0},
                "empty": {"type": "boolean"},
                "equidimensional": {"type": "boolean"},
                "kind": {"type": "string"},
                "note": {"type": "string"},
            },
            "required": ["value", "empty", "equidimensional", "kind"],
            "additionalProperties": False,
        },
        "value": {
            "anyOf": [
                {"type": ["integer", "boolean", "string", "null"]},
                {"$ref": "#/$defs/rational"},
                {"type": "array", "items": {"$ref": "#/$defs/value"}},
                {"type": "object", "additionalProperties": {"$ref": "#/$defs/value"}},
            ]
        },
    },
}
