"""Type classification of Hecke symmetries with polynomial symmetric algebra.

Up to basis change (over a closed field) there are eight types: two
one-parameter families with q != 1 and six isolated types with q = 1.  The
label is determined by field-independent invariants alone: the parameter q,
the rank of the bilinear form g, and the rank of its restriction to the
plane of the bivector.  Over a non-closed field the label therefore reports
the invariant triple without claiming equivalence under rational basis
change.

Canonical representatives use a = e1, b = e2 and the form matrices

   Type1 [[0,s,0],[s,0,0],[0,0,1]]   Type2 [[0,s,0],[s,0,0],[0,0,0]]   (s = (q-1)/2)
   Type3 [[1,0,0],[0,0,1],[0,1,0]]   Type4 diag(1,0,1)   Type5 diag(1,0,0)
   Type6 [[0,0,0],[0,0,1],[0,1,0]]   Type7 diag(0,0,1)   Type8 0
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .errors import Hecke3Error, InvalidQ
from .fields import QQ
from .linalg import Matrix
from .multilinear import idx2, random_invertible, std_basis
from .heckecore import (
    FOperator,
    HeckeData,
    HeckeSymmetry,
    build_R,
    conjugate,
    extract_F,
    g_value,
)
from .verifier import CheckReport

__all__ = [
    "TYPE_LABELS",
    "ClassificationReport",
    "canonical_gram",
    "canonical",
    "classify",
    "reference_r_matrix",
    "check_value_tables",
    "invariance_suite",
]

TYPE_LABELS = tuple(f"Type{n}" for n in range(1, 9))


@dataclass(frozen=True)
class ClassificationReport:
    """Label plus the invariants that determine it.

    ``rank_restricted`` is None exactly when the invariant operator is zero
    (Type 8), where no bivector plane exists.
    """

    label: str
    q: object
    rank_g: int
    rank_restricted: int | None
    f: FOperator

    def to_json(self) -> dict:
        fld = self.f.field
        return {
            "type": self.label,
            "q": fld.fmt(self.q),
            "rank_g": self.rank_g,
            "rank_restricted": self.rank_restricted,
            "F": {
                "g": [[fld.fmt(x) for x in row] for row in self.f.g.rows],
                "bivector": [fld.fmt(x) for x in self.f.t],
            },
        }


def canonical_gram(label: str, q=None, field=QQ) -> Matrix:
    """The canonical form matrix of a type (q needed for Types 1 and 2)."""
    z, o = field.zero(), field.one()
    if label in ("Type1", "Type2"):
        if q is None:
            raise InvalidQ(f"{label} needs an explicit q")
        q = field.of(q)
        if q == 0 or q == 1:
            raise InvalidQ(f"{label} needs q outside {{0, 1}}")
        s = (q - 1) / 2
        corner = o if label == "Type1" else z
        return Matrix(field, [[z, s, z], [s, z, z], [z, z, corner]])
    grams = {
        "Type3": [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
        "Type4": [[1, 0, 0], [0, 0, 0], [0, 0, 1]],
        "Type5": [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
        "Type6": [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        "Type7": [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
        "Type8": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    }
    if label not in grams:
        raise InvalidQ(f"unknown type label {label!r}")
    return Matrix.from_rows(field, grams[label])


def canonical(label: str, q=None, field=QQ) -> HeckeData:
    """Canonical quadruple of a type: a = e1, b = e2, the listed form.

    Types 3 to 8 live at q = 1; passing any other q for them is an error.
    """
    e = std_basis(field)
    if label in ("Type1", "Type2"):
        g = canonical_gram(label, q, field)
        return HeckeData(field.of(q), e[0], e[1], g)
    if q is not None and field.of(q) != 1:
        raise InvalidQ(f"{label} exists only at q = 1")
    return HeckeData(field.one(), e[0], e[1], canonical_gram(label, field=field))


def classify(sym: HeckeSymmetry) -> ClassificationReport:
    """Determine the type of a verified Hecke symmetry.

    Dispatch on (q, rank g, rank of g restricted to the bivector plane); a
    zero invariant operator is Type 8.  For q != 1 the restricted rank is
    forced to 2 by the q constraint and is asserted.
    """
    f_op = extract_F(sym)
    q = sym.q
    if f_op.is_zero():
        return ClassificationReport("Type8", q, 0, None, f_op)
    a, b = f_op.vectors()
    g = f_op.g
    rank_g = g.rank()
    gram = Matrix(
        g.field,
        [
            [g_value(g, a, a), g_value(g, a, b)],
            [g_value(g, a, b), g_value(g, b, b)],
        ],
    )
    rank_res = gram.rank()
    if not rank_res <= rank_g <= 2 + rank_res:
        raise Hecke3Error("internal inconsistency: rank inequality violated")
    if q != 1:
        if rank_res != 2:
            raise Hecke3Error(
                "internal inconsistency: q != 1 forces a nondegenerate restriction"
            )
        if rank_g == 3:
            label = "Type1"
        elif rank_g == 2:
            label = "Type2"
        else:
            raise Hecke3Error("internal inconsistency: impossible rank for q != 1")
    else:
        if rank_res == 2:
            raise Hecke3Error(
                "internal inconsistency: q = 1 forces a degenerate restriction"
            )
        if rank_res == 1:
            label = {3: "Type3", 2: "Type4", 1: "Type5"}.get(rank_g)
        else:
            label = {2: "Type6", 1: "Type7"}.get(rank_g)
        if label is None:
            raise Hecke3Error("internal inconsistency: impossible rank pattern")
    return ClassificationReport(label, q, rank_g, rank_res, f_op)


def _table_type1(q, one):
    """R values of the first family on basis monomials, as sparse columns."""
    return {
        (0, 0): {(0, 0): q},
        (0, 1): {(0, 1): q - 1, (1, 0): one},
        (0, 2): {(0, 2): q - 1, (2, 0): one},
        (1, 0): {(0, 1): q},
        (1, 1): {(1, 1): q},
        (1, 2): {(2, 1): q},
        (2, 0): {(0, 2): q},
        (2, 1): {(2, 1): q - 1, (1, 2): one},
        (2, 2): {(2, 2): q, (0, 1): -one, (1, 0): one},
    }


def _table_type3(one):
    return {
        (0, 0): {(0, 0): one, (0, 1): one, (1, 0): -one},
        (0, 1): {(1, 0): one},
        (0, 2): {(2, 0): one, (1, 2): -one, (2, 1): one},
        (1, 0): {(0, 1): one},
        (1, 1): {(1, 1): one},
        (1, 2): {(2, 1): one},
        (2, 0): {(0, 2): one, (1, 2): -one, (2, 1): one},
        (2, 1): {(1, 2): one},
        (2, 2): {(2, 2): one, (0, 2): 2 * one, (2, 0): -2 * one},
    }


def reference_r_matrix(label: str, q, field=QQ) -> Matrix:
    """Hard-coded R values of Types 1 to 6 on the nine basis monomials.

    Types 1 and 2 take the given q; Types 3 to 6 are at q = 1.  Types 2, 4,
    5 and 6 differ from their neighbours in a handful of entries only.
    """
    one = field.one()
    if label in ("Type1", "Type2"):
        q = field.of(q)
        table = _table_type1(q, one)
        if label == "Type2":
            table[(2, 2)] = {(2, 2): q}
    else:
        table = _table_type3(one)
        if label == "Type4":
            table[(2, 2)] = {(2, 2): one, (0, 1): -one, (1, 0): one}
        elif label == "Type5":
            table[(2, 2)] = {(2, 2): one}
        elif label == "Type6":
            table[(0, 0)] = {(0, 0): one}
            table[(0, 2)] = {(2, 0): one}
            table[(2, 0)] = {(0, 2): one}
        elif label != "Type3":
            raise InvalidQ(f"no reference table for {label}")
    rows = [[field.zero()] * 9 for _ in range(9)]
    for (i, j), entries in table.items():
        for (k, l), c in entries.items():
            rows[idx2(k, l)][idx2(i, j)] = c
    return Matrix(field, rows)


def check_value_tables(q, field=QQ) -> CheckReport:
    """Compare built symmetries of Types 1 to 6 against the value tables."""
    t0 = time.perf_counter()
    witness = None
    for label in ("Type1", "Type2", "Type3", "Type4", "Type5", "Type6"):
        use_q = q if label in ("Type1", "Type2") else None
        built = build_R(canonical(label, use_q, field)).R
        expected = reference_r_matrix(label, use_q, field)
        if built != expected:
            for col in range(9):
                if built.col(col) != expected.col(col):
                    witness = {
                        "input": {"type": label,
                                  "basis_tensor": [col // 3 + 1, col % 3 + 1]},
                        "lhs": [field.fmt(x) for x in built.col(col)],
                        "rhs": [field.fmt(x) for x in expected.col(col)],
                    }
                    break
            break
    return CheckReport(
        "value_tables", witness is None, witness,
        (time.perf_counter() - t0) * 1000.0,
    )


def invariance_suite(trials: int, seed: int, field=QQ,
                     q_pool=(2, 3, -1, "1/2")) -> CheckReport:
    """Labels and q are unchanged by random basis transport, for every type."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for label in TYPE_LABELS:
        if label in ("Type1", "Type2"):
            qs = [field.of(x) for x in q_pool]
            qs = [x for x in qs if x != 0 and x != 1]
        else:
            qs = [None]
        for q in qs:
            sym = build_R(canonical(label, q, field))
            base = classify(sym)
            if base.label != label:
                failures.append({"type": label, "note": "canonical misclassified",
                                 "got": base.label})
                continue
            for _ in range(trials):
                P = random_invertible(field, rng)
                moved = classify(conjugate(sym, P))
                if moved.label != label or moved.q != sym.q:
                    failures.append({
                        "type": label,
                        "basis": [[field.fmt(x) for x in row] for row in P.rows],
                        "got": moved.label,
                    })
    witness = {"failures": failures} if failures else None
    return CheckReport(
        f"invariance(trials={trials},seed={seed},field={field.name})",
        not failures, witness, (time.perf_counter() - t0) * 1000.0,
    )
