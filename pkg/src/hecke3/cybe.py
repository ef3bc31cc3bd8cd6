"""Classical r-matrices of Hecke symmetries and their carrier subalgebras.

The classical limit of a symmetry R is r = R0 R - Id, an element of
gl(V) (x) gl(V).  It always solves the classical Yang-Baxter equation

    [r12, r13] + [r12, r23] + [r13, r23] = 0,

and its symmetrization is pinned by r + r21 = (q - 1)(R0 + Id), so r is
skewsymmetric exactly at q = 1.  The carrier is the smallest Lie subalgebra
L of gl(V) with r in L (x) L: operationally, the bracket closure of the
span of the factors of a minimal tensor decomposition of r.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .fields import QQ
from .linalg import Matrix, echelon_span, in_span
from .heckecore import HeckeSymmetry, flip_matrix
from .verifier import CheckReport

__all__ = [
    "GlTensor",
    "gl_tensor",
    "classical_r",
    "r21",
    "check_cybe",
    "check_symmetrized",
    "LieSubalgebra",
    "carrier",
    "lie_subalgebra",
    "is_frobenius",
    "FrobeniusResult",
    "fingerprint",
    "matrix_unit",
    "reference_carriers",
]


def matrix_unit(field, i: int, j: int) -> Matrix:
    """The 3x3 matrix unit E_ij (1-based indices, as in E13)."""
    m = Matrix.zeros(field, 3)
    m.rows[i - 1][j - 1] = field.one()
    return m


def _vec(m: Matrix):
    return [m.rows[i][j] for i in range(3) for j in range(3)]


def _unvec(field, v) -> Matrix:
    return Matrix(field, [[v[3 * i + j] for j in range(3)] for i in range(3)])


@dataclass(frozen=True)
class GlTensor:
    """A 9x9 operator together with a minimal decomposition sum a_i (x) b_i.

    The decomposition length equals the rank of the flattening, and
    reassembling it reproduces the matrix exactly.
    """

    matrix: Matrix
    left: tuple
    right: tuple

    @property
    def field(self):
        return self.matrix.field

    def to_json(self) -> dict:
        fld = self.field
        mat = [[fld.fmt(x) for x in row] for row in self.matrix.rows]
        return {
            "matrix": mat,
            "left": [[[fld.fmt(x) for x in row] for row in m.rows] for m in self.left],
            "right": [[[fld.fmt(x) for x in row] for row in m.rows] for m in self.right],
        }


def _flatten(m: Matrix) -> Matrix:
    """Permute the operator entries so simple tensors become rank-1 blocks."""
    fld = m.field
    out = Matrix.zeros(fld, 9)
    for i in range(3):
        for k in range(3):
            for j in range(3):
                for l in range(3):
                    out.rows[3 * i + j][3 * k + l] = m.rows[3 * i + k][3 * j + l]
    return out


def gl_tensor(m: Matrix) -> GlTensor:
    """Attach a minimal simple-tensor decomposition to a 9x9 operator.

    Rank factorization of the flattening: pivot columns give the left
    factors, reduced rows the right factors.
    """
    fld = m.field
    flat = _flatten(m)
    red, pivots = flat.rref()
    left = tuple(_unvec(fld, flat.col(c)) for c in pivots)
    right = tuple(_unvec(fld, red.rows[r]) for r in range(len(pivots)))
    out = Matrix.zeros(fld, 9)
    for a, b in zip(left, right):
        for i in range(3):
            for j in range(3):
                if a.rows[i][j] == 0:
                    continue
                for k in range(3):
                    for l in range(3):
                        if b.rows[k][l] != 0:
                            out.rows[3 * i + k][3 * j + l] = (
                                out.rows[3 * i + k][3 * j + l] + a.rows[i][j] * b.rows[k][l]
                            )
    if out != m:
        raise AssertionError("decomposition failed to reassemble")  # unreachable
    return GlTensor(m, left, right)


def classical_r(sym: HeckeSymmetry) -> GlTensor:
    """The classical r-matrix R0 R - Id of a Hecke symmetry."""
    fld = sym.field
    return gl_tensor(flip_matrix(fld) * sym.R - Matrix.identity(fld, 9))


def r21(t: GlTensor) -> GlTensor:
    """Swap of the two tensor factors (equals R0 r R0)."""
    fld = t.field
    m = Matrix.zeros(fld, 9)
    for i in range(3):
        for k in range(3):
            for j in range(3):
                for l in range(3):
                    m.rows[3 * i + k][3 * j + l] = t.matrix.rows[3 * k + i][3 * l + j]
    return gl_tensor(m)


def check_cybe(t: GlTensor) -> CheckReport:
    """Classical Yang-Baxter equation on the 27x27 embeddings."""
    t0 = time.perf_counter()
    fld = t.field
    ident = Matrix.identity(fld, 3)
    r12 = Matrix.zeros(fld, 27)
    r13 = Matrix.zeros(fld, 27)
    r23 = Matrix.zeros(fld, 27)
    for a, b in zip(t.left, t.right):
        r12 = r12 + a.kron(b).kron(ident)
        r13 = r13 + a.kron(ident).kron(b)
        r23 = r23 + ident.kron(a).kron(b)
    total = Matrix.zeros(fld, 27)
    for x, y in ((r12, r13), (r12, r23), (r13, r23)):
        total = total + (x * y - y * x)
    witness = None
    if not total.is_zero():
        for j in range(27):
            col = total.col(j)
            if any(c != 0 for c in col):
                witness = {
                    "input": {"basis_tensor": [j // 9 + 1, (j // 3) % 3 + 1, j % 3 + 1]},
                    "lhs": [fld.fmt(c) for c in col],
                    "rhs": ["0"] * 27,
                }
                break
    return CheckReport("cybe", witness is None, witness,
                       (time.perf_counter() - t0) * 1000.0)


def check_symmetrized(t: GlTensor, q) -> CheckReport:
    """r + r21 = (q - 1)(R0 + Id) as a 9x9 identity."""
    t0 = time.perf_counter()
    fld = t.field
    qq = fld.of(q)
    lhs = t.matrix + r21(t).matrix
    rhs = (flip_matrix(fld) + Matrix.identity(fld, 9)).scale(qq - 1)
    witness = None
    if lhs != rhs:
        for j in range(9):
            if lhs.col(j) != rhs.col(j):
                witness = {
                    "input": {"basis_tensor": [j // 3 + 1, j % 3 + 1]},
                    "lhs": [fld.fmt(c) for c in lhs.col(j)],
                    "rhs": [fld.fmt(c) for c in rhs.col(j)],
                }
                break
    return CheckReport("symmetrized", witness is None, witness,
                       (time.perf_counter() - t0) * 1000.0)


@dataclass(frozen=True)
class LieSubalgebra:
    """A bracket-closed subalgebra of gl(3) with an echelonized basis."""

    field: object
    basis: tuple          # 3x3 matrices, canonical echelon order
    closure_grew: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)

    def span_rows(self):
        return [_vec(m) for m in self.basis]

    def bracket_closed(self) -> bool:
        rows = self.span_rows()
        for x in self.basis:
            for y in self.basis:
                if not in_span(rows, _vec(x * y - y * x)):
                    return False
        return True

    def coords(self, m: Matrix):
        """Coordinates of a member matrix in the echelon basis."""
        v = _vec(m)
        out = [self.field.zero()] * self.dim
        for r, row in enumerate(self.span_rows()):
            lead = next(i for i, x in enumerate(row) if x != 0)
            if v[lead] != 0:
                f = v[lead] / row[lead]
                out[r] = f
                v = [a - f * b for a, b in zip(v, row)]
        if any(x != 0 for x in v):
            raise AssertionError("matrix outside the subalgebra")
        return out

    def structure_constants(self):
        """c[i][j] = coordinates of [x_i, x_j]."""
        return [
            [self.coords(x * y - y * x) for y in self.basis]
            for x in self.basis
        ]

    def to_json(self) -> dict:
        fld = self.field
        return {
            "dim": self.dim,
            "basis": [[[fld.fmt(x) for x in row] for row in m.rows] for m in self.basis],
            "closure_grew": self.closure_grew,
        }


def lie_subalgebra(field, generators) -> LieSubalgebra:
    """Bracket closure of the span of the given 3x3 matrices."""
    rows = echelon_span(field, [_vec(m) for m in generators])
    grew = False
    while True:
        mats = [_unvec(field, r) for r in rows]
        new = []
        for x in mats:
            for y in mats:
                b = _vec(x * y - y * x)
                if not in_span(rows, b):
                    new.append(b)
        if not new:
            break
        grew = True
        rows = echelon_span(field, rows + new)
    return LieSubalgebra(field, tuple(_unvec(field, r) for r in rows), grew)


def carrier(t: GlTensor) -> LieSubalgebra:
    """Smallest bracket-closed subalgebra containing both factor spans."""
    return lie_subalgebra(t.field, list(t.left) + list(t.right))


@dataclass(frozen=True)
class FrobeniusResult:
    """Outcome of the Frobenius witness search."""

    status: str            # "yes" | "no" | "inconclusive" | "not_applicable"
    witness: tuple | None  # functional coordinates in the echelon basis

    def to_json(self, field) -> dict:
        return {
            "status": self.status,
            "witness": None if self.witness is None
            else [field.fmt(x) for x in self.witness],
        }


def _functional_stream(field, dim: int, attempts: int):
    o, z = field.one(), field.zero()
    count = 0
    for k in range(dim):
        f = [z] * dim
        f[k] = o
        yield f
        count += 1
        if count >= attempts:
            return
    for mask in range(1, 1 << dim):
        if mask.bit_count() < 2:
            continue
        yield [o if mask >> k & 1 else z for k in range(dim)]
        count += 1
        if count >= attempts:
            return
    rng = random.Random(20240)
    while count < attempts:
        yield [field.of(rng.randint(-9, 9)) for _ in range(dim)]
        count += 1


def is_frobenius(L: LieSubalgebra, attempts: int = 256) -> FrobeniusResult:
    """Search for a functional f making (x, y) |-> f([x, y]) nondegenerate.

    A nonzero determinant certifies the positive exactly.  An identically
    zero bracket makes the form vanish for every f: an exact negative.
    Odd dimension admits no nondegenerate alternating form at all.  When
    the sample is exhausted without a witness the answer is inconclusive
    (sampling cannot certify a negative over an infinite field).
    """
    if L.dim == 0:
        return FrobeniusResult("yes", ())
    if L.dim % 2 == 1:
        return FrobeniusResult("not_applicable", None)
    c = L.structure_constants()
    if all(all(x == 0 for x in c[i][j]) for i in range(L.dim) for j in range(L.dim)):
        return FrobeniusResult("no", None)
    fld = L.field
    for f in _functional_stream(fld, L.dim, attempts):
        form = Matrix(
            fld,
            [
                [sum((fk * ck for fk, ck in zip(f, c[i][j])), fld.zero())
                 for j in range(L.dim)]
                for i in range(L.dim)
            ],
        )
        if form.det() != 0:
            return FrobeniusResult("yes", tuple(f))
    return FrobeniusResult("inconclusive", None)


def fingerprint(L: LieSubalgebra):
    """(dim, dim of derived algebra, dim of center, rank of Killing form).

    The first three invariants do not separate all carrier subalgebras that
    occur here (two of the dimension-4 carriers share them), so the Killing
    rank is included; the quadruple is a strictly finer isomorphism
    invariant and separates all six.
    """
    fld = L.field
    d = L.dim
    if d == 0:
        return (0, 0, 0, 0)
    brackets = [
        _vec(x * y - y * x) for x in L.basis for y in L.basis
    ]
    derived = len(echelon_span(fld, brackets))
    c = L.structure_constants()
    rows = []
    for j in range(d):
        for coord in range(d):
            rows.append([c[i][j][coord] for i in range(d)])
    center = d - Matrix(fld, rows).rank()
    ad = []
    for i in range(d):
        ad.append(Matrix(fld, [[c[i][j][k] for j in range(d)] for k in range(d)]))
    killing = Matrix(
        fld,
        [[(ad[i] * ad[j]).trace() for j in range(d)] for i in range(d)],
    )
    return (d, derived, center, killing.rank())


def reference_carriers(field=QQ) -> dict:
    """The carrier subalgebras of the eight canonical types, as generators."""
    E = lambda i, j: matrix_unit(field, i, j)
    h = E(1, 1) + E(3, 3)
    return {
        "Type1": None,
        "Type2": None,
        "Type3": [E(1, 1), E(1, 3), E(2, 1), E(2, 3), E(3, 1), E(3, 3)],
        "Type4": [h, E(1, 3) - E(3, 1), E(2, 1), E(2, 3)],
        "Type5": [h, E(2, 1), E(2, 3), E(3, 1)],
        "Type6": [E(1, 3), E(3, 3)],
        "Type7": [E(1, 3), E(2, 3)],
        "Type8": [],
    }
