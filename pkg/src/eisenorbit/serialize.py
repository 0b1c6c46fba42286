"""JSON text forms for elements, matrices, tuples and decompositions.

Elements are strings in the ``a+b*w`` grammar. A matrix is a list of rows of
element strings, a tuple a list of six element strings, and a decomposition
an object whose keys follow the factor order of its side.
"""

from __future__ import annotations

import json

from .decompose import LeftDecomposition, RightDecomposition
from .eisenstein import EisensteinInt, parse
from .gamma import InvariantTuple
from .matrices import Mat2, Mat3

__all__ = [
    "ParseError",
    "element_to_json",
    "element_from_json",
    "matrix_to_json",
    "mat3_from_json",
    "mat2_from_json",
    "tuple_to_json",
    "tuple_from_json",
    "decomposition_to_json",
    "load_mat3",
    "dumps",
]


class ParseError(ValueError):
    """Malformed textual input."""


def element_to_json(x) -> str:
    return str(x)


def element_from_json(value) -> EisensteinInt:
    if isinstance(value, bool):
        raise ParseError(f"not an Eisenstein integer: {value!r}")
    if isinstance(value, int):
        return EisensteinInt(value, 0)
    if not isinstance(value, str):
        raise ParseError(f"expected an element string, got {value!r}")
    try:
        return parse(value)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def matrix_to_json(m: Mat2 | Mat3) -> list[list[str]]:
    return [[element_to_json(x) for x in row] for row in m.rows]


def _square_from_json(value, n: int):
    if not isinstance(value, list) or len(value) != n:
        raise ParseError(f"expected a list of {n} rows, got {value!r}")
    rows = []
    for row in value:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"expected a row of {n} entries, got {row!r}")
        rows.append([element_from_json(v) for v in row])
    return rows


def mat3_from_json(value) -> Mat3:
    return Mat3(_square_from_json(value, 3))


def mat2_from_json(value) -> Mat2:
    return Mat2(_square_from_json(value, 2))


def tuple_to_json(t: InvariantTuple) -> list[str]:
    return [element_to_json(x) for x in t]


def tuple_from_json(value) -> InvariantTuple:
    if not isinstance(value, (list, tuple)) or len(value) != 6:
        raise ParseError(f"expected 6 element strings, got {value!r}")
    return InvariantTuple(*(element_from_json(v) for v in value))


def decomposition_to_json(dec: LeftDecomposition | RightDecomposition) -> dict:
    if isinstance(dec, LeftDecomposition):
        order = ("C", "u", "d", "y3", "y2", "y1")
    else:
        order = ("y1", "y2", "y3", "d", "u", "C")
    out = {"cell": dec.cell.value}
    for name in order:
        factor = getattr(dec, name)
        out[name] = matrix_to_json(getattr(factor, "matrix", factor))
    return out


def load_mat3(path: str) -> Mat3:
    """Read a matrix file; every failure surfaces as ParseError."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return mat3_from_json(data)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)
