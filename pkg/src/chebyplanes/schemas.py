"""JSON Schemas for every CLI payload.

Rationals travel as integers or ``"num/den"`` strings.
"""

RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
    ]
}

POINT = {"type": "array", "items": RATIONAL, "minItems": 2}

POLYLINE = {
    "type": "object",
    "required": ["vertices"],
    "properties": {"vertices": {"type": "array", "items": POINT, "minItems": 2}},
}

PLANE = {"type": "array", "items": RATIONAL, "minItems": 4, "maxItems": 4}

SECTOR = {
    "type": "object",
    "required": ["axis", "sign"],
    "properties": {
        "axis": {"type": "integer", "minimum": 1},
        "sign": {"enum": ["+", "-"]},
    },
    "additionalProperties": False,
}

GEODESIC_COUNT = {"enum": ["one", "infinite"]}

SIGNED_PERMUTATION = {
    "type": "object",
    "required": ["perm", "signs"],
    "properties": {
        "perm": {"type": "array", "items": {"enum": [1, 2, 3]}, "minItems": 3, "maxItems": 3},
        "signs": {"type": "array", "items": {"enum": ["+", "-"]}, "minItems": 3, "maxItems": 3},
    },
    "additionalProperties": False,
}

CANONICAL_CLASS = {
    "oneOf": [
        {
            "type": "object",
            "required": ["kind"],
            "properties": {"kind": {"const": "flat"}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["kind", "sides"],
            "properties": {
                "kind": {"const": "triangle"},
                "sides": {"type": "array", "items": RATIONAL, "minItems": 3, "maxItems": 3},
            },
            "additionalProperties": False,
        },
    ]
}

SECTION = {
    "type": "object",
    "required": ["shape", "radius", "plane", "vertices"],
    "properties": {
        "shape": {"enum": ["tetragon", "hexagon"]},
        "radius": RATIONAL,
        "plane": PLANE,
        "vertices": {"type": "array", "items": POINT},
        "edge_lengths": {"type": "array", "items": RATIONAL},
        "svg": {"type": "string"},
    },
}

PAYLOADS = {
    "classify": {
        "type": "object",
        "required": ["plane", "triangle_test", "canonical_class", "nu", "shape"],
        "properties": {
            "plane": PLANE,
            "triangle_test": {"type": "boolean"},
            "canonical_class": CANONICAL_CLASS,
            "nu": {"type": "integer"},
            "shape": {"enum": ["tetragon", "hexagon"]},
        },
    },
    "section": SECTION,
    "orbit": {
        "type": "object",
        "required": ["plane", "size", "members", "stabilizer"],
        "properties": {
            "plane": PLANE,
            "size": {"type": "integer"},
            "members": {"type": "array", "items": PLANE},
            "stabilizer": {"type": "array", "items": SIGNED_PERMUTATION},
            "stabilizer_notation": {"type": "array", "items": {"type": "string"}},
        },
    },
    "isometric": {
        "type": "object",
        "required": ["isometric", "class1", "class2"],
        "properties": {
            "isometric": {"type": "boolean"},
            "class1": CANONICAL_CLASS,
            "class2": CANONICAL_CLASS,
        },
    },
    "tau": {
        "type": "object",
        "required": ["p", "q", "tau"],
        "properties": {
            "p": POINT,
            "q": POINT,
            "tau": GEODESIC_COUNT,
            "plane": PLANE,
            "probe_unique": {"type": "boolean"},
        },
    },
    "nu": {
        "type": "object",
        "required": ["nu"],
        "properties": {
            "nu": {"type": "integer"},
            "dimension": {"type": "integer"},
            "plane": PLANE,
        },
    },
    "witness": {
        "type": "object",
        "required": ["geodesics"],
        "properties": {
            "geodesics": {"type": "array", "items": POLYLINE, "minItems": 2, "maxItems": 2},
            "length": RATIONAL,
        },
    },
    "geodesic-check": {
        "type": "object",
        "required": ["is_geodesic", "length", "endpoint_distance"],
        "properties": {
            "is_geodesic": {"type": "boolean"},
            "sector": SECTOR,
            "violation": {"type": "array", "items": POINT, "minItems": 2, "maxItems": 2},
            "length": RATIONAL,
            "endpoint_distance": RATIONAL,
        },
    },
}

RESULT = {
    "type": "object",
    "required": ["status", "command"],
    "properties": {
        "status": {"enum": ["ok", "error"]},
        "command": {"type": "string"},
        "payload": {"type": "object"},
        "notes": {"type": "array", "items": {"type": "string"}},
        "error": {"type": "string"},
    },
}
