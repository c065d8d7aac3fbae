"""JSON input documents: a group plus a list of parameter factors.

Unitary::

    {"group": {"kind": "unitary", "p": 2, "q": 1},
     "factors": [{"t": 2, "nu": "0", "a": 1}, {"t": 0, "nu": "1", "a": 1}]}

Classical groups use ``{"kind": "symplectic", "n": n}`` or
``{"kind": "special_orthogonal", "p": p, "q": q}`` with factors
``{"type": "delta", "t": t, "nu": "0", "a": a}`` or
``{"type": "eta", "eps": 1, "nu": "0", "a": a}``.

``nu`` is always an exact rational written as a string, ``"k"`` or ``"k/m"``.
:func:`emit_document` writes the canonical form (factors sorted, rationals
reduced), so ``emit_document(parse_document(x)) == x`` for canonical ``x``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .params import ClassicalFactor, ClassicalGroupKind, UnitaryFactor, sort_classical

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class DocumentError(ValueError):
    """Malformed input document (maps to exit status 2)."""


@dataclass(frozen=True)
class UnitaryGroup:
    p: int
    q: int

    def __str__(self):
        return f"U({self.p}, {self.q})"


Group = Union[UnitaryGroup, ClassicalGroupKind]


@dataclass(frozen=True)
class InputDocument:
    group: Group
    factors: Tuple[Union[UnitaryFactor, ClassicalFactor], ...]

    @property
    def is_unitary(self) -> bool:
        return isinstance(self.group, UnitaryGroup)


def parse_rational(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise DocumentError(f"nu must be a rational string like '1/2', got {s!r}")
    den = s.partition("/")[2]
    if den and int(den) == 0:
        raise DocumentError(f"zero denominator in {s!r}")
    return Fraction(s)


def _int(obj: dict, key: str) -> int:
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise DocumentError(f"field {key!r} must be an integer, got {v!r}")
    return v


def _expect_keys(obj, keys, where):
    if not isinstance(obj, dict):
        raise DocumentError(f"{where} must be an object")
    extra = set(obj) - set(keys)
    if extra:
        raise DocumentError(f"unknown fields {sorted(extra)} in {where}")


def _parse_group(obj) -> Group:
    if not isinstance(obj, dict):
        raise DocumentError("group must be an object")
    kind = obj.get("kind")
    if kind == "unitary":
        _expect_keys(obj, ("kind", "p", "q"), "group")
        p, q = _int(obj, "p"), _int(obj, "q")
        if p < 0 or q < 0:
            raise DocumentError("signature entries must be nonnegative")
        return UnitaryGroup(p, q)
    if kind == "symplectic":
        _expect_keys(obj, ("kind", "n"), "group")
        return ClassicalGroupKind.symplectic(_int(obj, "n"))
    if kind == "special_orthogonal":
        _expect_keys(obj, ("kind", "p", "q"), "group")
        return ClassicalGroupKind.special_orthogonal(_int(obj, "p"), _int(obj, "q"))
    raise DocumentError(f"unknown group kind {kind!r}")


def _parse_factor(obj, unitary: bool):
    try:
        if unitary:
            _expect_keys(obj, ("t", "nu", "a"), "factor")
            return UnitaryFactor(_int(obj, "t"), parse_rational(obj.get("nu")), _int(obj, "a"))
        typ = obj.get("type") if isinstance(obj, dict) else None
        if typ == "delta":
            _expect_keys(obj, ("type", "t", "nu", "a"), "factor")
            return ClassicalFactor.delta(_int(obj, "t"), parse_rational(obj.get("nu")), _int(obj, "a"))
        if typ == "eta":
            _expect_keys(obj, ("type", "eps", "nu", "a"), "factor")
            return ClassicalFactor.eta(_int(obj, "eps"), parse_rational(obj.get("nu")), _int(obj, "a"))
        raise DocumentError(f"classical factor type must be 'delta' or 'eta', got {typ!r}")
    except (TypeError, ValueError) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(f"invalid factor {obj!r}: {exc}") from exc


def parse_document(text: str) -> InputDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    _expect_keys(raw, ("group", "factors"), "document")
    group = _parse_group(raw.get("group"))
    factors = raw.get("factors")
    if not isinstance(factors, list):
        raise DocumentError("factors must be a list")
    unitary = isinstance(group, UnitaryGroup)
    parsed = [_parse_factor(f, unitary) for f in factors]
    if unitary:
        parsed.sort(key=UnitaryFactor.sort_key)
        return InputDocument(group, tuple(parsed))
    return InputDocument(group, sort_classical(parsed))


def group_to_json(group: Group) -> dict:
    if isinstance(group, UnitaryGroup):
        return {"kind": "unitary", "p": group.p, "q": group.q}
    if group.is_symplectic:
        return {"kind": "symplectic", "n": group.n}
    return {"kind": "special_orthogonal", "p": group.p, "q": group.q}


def factor_to_json(f) -> dict:
    if isinstance(f, UnitaryFactor):
        return {"t": f.t, "nu": str(f.nu), "a": f.a}
    if f.t is not None:
        return {"type": "delta", "t": f.t, "nu": str(f.nu), "a": f.a}
    return {"type": "eta", "eps": f.eps, "nu": str(f.nu), "a": f.a}


def _sorted_factors(doc: InputDocument):
    if doc.is_unitary:
        return sorted(doc.factors, key=UnitaryFactor.sort_key)
    return sort_classical(doc.factors)


def emit_document(doc: InputDocument) -> str:
    lines = ["{", f'  "group": {json.dumps(group_to_json(doc.group))},']
    factors = _sorted_factors(doc)
    if factors:
        lines.append('  "factors": [')
        body = [f"    {json.dumps(factor_to_json(f))}" for f in factors]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "factors": []')
    lines.append("}")
    return "\n".join(lines) + "\n"
