"""Bit-exact JSON envelopes for every value the command line emits.

Scalars are strings ("3/2", "-1", "5"), never JSON numbers, so output is
identical across runs and platforms and parses back exactly.  Key order is
fixed by construction order.
"""

from __future__ import annotations

from .errors import InputError
from .fields import parse_field
from .linalg import Matrix
from .heckecore import HeckeData, HeckeSymmetry, build_R, symmetric_form

__all__ = [
    "vector_to_json",
    "vector_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "hecke_data_to_json",
    "hecke_data_from_json",
    "symmetry_to_json",
    "load_symmetry",
]


def vector_to_json(field, v):
    return [field.fmt(x) for x in v]


def vector_from_json(field, data, length=3):
    if not isinstance(data, list) or len(data) != length:
        raise InputError(f"expected a list of {length} scalars")
    return [field.of(x) for x in data]


def matrix_to_json(m: Matrix):
    return [[m.field.fmt(x) for x in row] for row in m.rows]


def matrix_from_json(field, data, nrows, ncols) -> Matrix:
    if (
        not isinstance(data, list)
        or len(data) != nrows
        or any(not isinstance(r, list) or len(r) != ncols for r in data)
    ):
        raise InputError(f"expected a {nrows}x{ncols} matrix of scalars")
    try:
        return Matrix.from_rows(field, data)
    except Exception as exc:
        raise InputError(f"bad matrix entry: {exc}") from exc


def hecke_data_to_json(data: HeckeData) -> dict:
    fld = data.field
    return {
        "field": fld.name,
        "q": fld.fmt(data.q),
        "a": vector_to_json(fld, data.a),
        "b": vector_to_json(fld, data.b),
        "g": matrix_to_json(data.g),
    }


def hecke_data_from_json(obj: dict, default_field=None) -> HeckeData:
    if not isinstance(obj, dict):
        raise InputError("quadruple record must be a JSON object")
    fld = parse_field(obj["field"]) if "field" in obj else default_field
    if fld is None:
        raise InputError("no field given and no default field set")
    try:
        q = fld.parse(str(obj["q"]))
        a = vector_from_json(fld, obj["a"])
        b = vector_from_json(fld, obj["b"])
        g = symmetric_form(fld, obj["g"])
    except KeyError as exc:
        raise InputError(f"quadruple record misses key {exc}") from exc
    return HeckeData(q, a, b, g)


def symmetry_to_json(sym: HeckeSymmetry) -> dict:
    fld = sym.field
    out = {
        "field": fld.name,
        "q": fld.fmt(sym.q),
        "R": matrix_to_json(sym.R),
    }
    return out


def load_symmetry(obj, default_field=None) -> HeckeSymmetry:
    """Accept a quadruple record, a symmetry record, or a bare 9x9 matrix.

    Bare and record matrices are validated (quadratic relation, image and
    eigenvalue conditions); quadruple input is built, which validates the
    q constraint instead.
    """
    if isinstance(obj, dict) and {"a", "b", "g"} <= set(obj):
        return build_R(hecke_data_from_json(obj, default_field))
    if isinstance(obj, dict) and "R" in obj:
        fld = parse_field(obj["field"]) if "field" in obj else default_field
        if fld is None:
            raise InputError("no field given and no default field set")
        R = matrix_from_json(fld, obj["R"], 9, 9)
        q = fld.parse(str(obj["q"])) if "q" in obj else None
        return HeckeSymmetry.from_matrix(R, q)
    if isinstance(obj, list):
        if default_field is None:
            raise InputError("a bare matrix needs --field (or HECKE3_FIELD)")
        R = matrix_from_json(default_field, obj, 9, 9)
        return HeckeSymmetry.from_matrix(R)
    raise InputError("unrecognized input document")
