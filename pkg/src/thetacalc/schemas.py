"""JSON schemas for every input format and the parsers that enforce them.

Rationals are JSON strings ``"p"`` / ``"p/q"`` (q > 0) or JSON integers.
Parsers return domain objects and raise :class:`InputError` carrying a JSON
pointer to the offending field.
"""

from __future__ import annotations

from jsonschema import Draft202012Validator

from .chern import BASIS_TAG, ChernCharacter, TotalChernClass
from .cohring import CohClass, PpavContext
from .errors import InputError
from .grr import CurveLineBundleSpec

_RATIONAL = {"type": ["string", "integer"]}
_RATIONALS = {"type": "array", "items": _RATIONAL, "minItems": 1}
_G = {"type": "integer", "minimum": 1}
_BASIS = {"enum": [BASIS_TAG]}

SHEAF = {
    "type": "object",
    "properties": {
        "g": _G,
        "ch": _RATIONALS,
        "wit": {"type": ["integer", "null"]},
        "side": {"enum": ["A", "A-hat"]},
        "basis": _BASIS,
    },
    "required": ["g", "ch"],
    "additionalProperties": False,
}

CURVE = {
    "type": "object",
    "properties": {"genus": {"type": "integer"}, "degree": {"type": "integer"}},
    "required": ["genus", "degree"],
    "additionalProperties": False,
}

CHERN = {
    "type": "object",
    "properties": {"g": _G, "rank": {"type": "integer"}, "c": _RATIONALS, "basis": _BASIS},
    "required": ["g", "rank", "c"],
    "additionalProperties": False,
}

CHARACTER = {
    "type": "object",
    "properties": {"g": _G, "ch": _RATIONALS, "basis": _BASIS},
    "required": ["g", "ch"],
    "additionalProperties": False,
}

JACOBIAN = {
    "type": "object",
    "properties": {
        "g": _G,
        "rank": {"type": "integer"},
        "c": _RATIONALS,
        "wit_g": {"type": "boolean"},
        "ppav_indecomposable": {"type": "boolean"},
        "sheaf_indecomposable": {"type": "boolean"},
        "basis": _BASIS,
    },
    "required": ["g", "rank", "c", "wit_g"],
    "additionalProperties": False,
}

PPAV = {
    "type": "object",
    "properties": {"g": _G},
    "required": ["g"],
    "additionalProperties": False,
}

SEQUENCE = {
    "type": "object",
    "properties": {"sub": SHEAF, "total": SHEAF, "quot": SHEAF},
    "required": ["sub", "total", "quot"],
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "properties": {"g_list": {"type": "array", "items": _G, "minItems": 1}},
    "required": ["g_list"],
    "additionalProperties": False,
}

SCHEMAS = {
    "sheaf": SHEAF,
    "curve": CURVE,
    "chern": CHERN,
    "character": CHARACTER,
    "jacobian": JACOBIAN,
    "ppav": PPAV,
    "sequence": SEQUENCE,
    "verify": VERIFY,
}


def _pointer(path) -> str:
    return "/" + "/".join(str(p) for p in path)


def validate(data, schema, pointer: str = "") -> None:
    errors = sorted(Draft202012Validator(schema).iter_errors(data), key=lambda e: list(e.path))
    if not errors:
        return
    err = errors[0]
    where = pointer + _pointer(err.absolute_path) if err.absolute_path else (pointer or "/")
    if err.validator == "additionalProperties" and isinstance(err.instance, dict):
        allowed = err.schema.get("properties", {})
        extra = sorted(k for k in err.instance if k not in allowed)
        if extra:
            where = where.rstrip("/") + "/" + extra[0]
            raise InputError(f"unknown field {extra[0]!r}", where)
    if err.validator == "required" and isinstance(err.instance, dict):
        missing = [k for k in err.validator_value if k not in err.instance]
        if missing:
            raise InputError(f"missing field {missing[0]!r}", where.rstrip("/") + "/" + missing[0])
    raise InputError(err.message, where)


def _ctx(data, pointer) -> PpavContext:
    try:
        return PpavContext(data["g"])
    except InputError as exc:
        raise InputError(exc.args[0], pointer + "/g") from None


def parse_ppav(data, pointer: str = "") -> PpavContext:
    validate(data, PPAV, pointer)
    return _ctx(data, pointer)


def parse_sheaf(data, pointer: str = ""):
    from .fourier_mukai import SheafInvariant, Side

    validate(data, SHEAF, pointer)
    ctx = _ctx(data, pointer)
    ch = CohClass.from_json(ctx, data["ch"], pointer + "/ch")
    try:
        character = ChernCharacter(ch)
    except InputError as exc:
        raise InputError(exc.args[0], pointer + "/ch/0") from None
    return SheafInvariant(character, data.get("wit"), Side(data.get("side", "A")))


def parse_curve(data, pointer: str = "") -> CurveLineBundleSpec:
    validate(data, CURVE, pointer)
    try:
        return CurveLineBundleSpec(data["genus"], data["degree"])
    except InputError as exc:
        raise InputError(exc.args[0], pointer + "/genus") from None


def parse_chern(data, pointer: str = "", schema=CHERN):
    """Return ``(ctx, rank, TotalChernClass)`` from a CHERN or JACOBIAN object."""
    validate(data, schema, pointer)
    ctx = _ctx(data, pointer)
    c = CohClass.from_json(ctx, data["c"], pointer + "/c")
    try:
        total = TotalChernClass(c)
    except InputError as exc:
        raise InputError(exc.args[0], pointer + "/c/0") from None
    return ctx, data["rank"], total


def parse_character(data, pointer: str = "") -> ChernCharacter:
    validate(data, CHARACTER, pointer)
    ctx = _ctx(data, pointer)
    ch = CohClass.from_json(ctx, data["ch"], pointer + "/ch")
    try:
        return ChernCharacter(ch)
    except InputError as exc:
        raise InputError(exc.args[0], pointer + "/ch/0") from None
