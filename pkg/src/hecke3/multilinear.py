"""Exact tensor algebra on a 3-dimensional space V.

Tensors are coordinate lists in the fixed basis e1, e2, e3: a vector has 3
entries, a degree-2 tensor 9, a degree-3 tensor 27.  The index layout is
lexicographic: e_i (x) e_j sits at position 3*(i-1) + (j-1) and
e_i (x) e_j (x) e_k at 9*(i-1) + 3*(j-1) + (k-1).  Operators on the tensor
powers are square :class:`~hecke3.linalg.Matrix` objects acting on coordinate
columns.

The wedge products follow the convention x ^ y = xy - yx and
x ^ y ^ z = xyz + yzx + zxy - zyx - xzy - yxz, and ``vol`` is the alternating
trilinear volume form pinned by vol(e1, e2, e3) = 1 (the coordinate
determinant).
"""

from __future__ import annotations

from .errors import (
    DimensionMismatch,
    NotAlternating,
    NotInAlt3,
    SingularBasis,
    ZeroBivector,
)
from .fields import field_of
from .linalg import Matrix

__all__ = [
    "idx2",
    "idx3",
    "basis_vector",
    "std_basis",
    "zero_tensor",
    "tensor2",
    "wedge2",
    "wedge3",
    "wedge_vt",
    "wedge_tv",
    "vol",
    "trivector_coeff",
    "vol_form",
    "pair_vt",
    "eval_form",
    "is_alt2",
    "is_alt3",
    "in_v_alt2",
    "in_alt2_v",
    "subspace_query",
    "alt2_basis",
    "alt3_generator",
    "decompose_bivector",
    "lift_left",
    "lift_right",
    "cyclic_shift",
    "random_invertible",
    "change_of_basis",
]

_PERM_SIGNS = {
    (0, 1, 2): 1,
    (0, 2, 1): -1,
    (1, 0, 2): -1,
    (1, 2, 0): 1,
    (2, 0, 1): 1,
    (2, 1, 0): -1,
}


def idx2(i: int, j: int) -> int:
    """Position of e_i (x) e_j, 0-based indices."""
    return 3 * i + j


def idx3(i: int, j: int, k: int) -> int:
    """Position of e_i (x) e_j (x) e_k, 0-based indices."""
    return 9 * i + 3 * j + k


def basis_vector(field, i: int):
    v = [field.zero()] * 3
    v[i] = field.one()
    return v


def std_basis(field):
    return [basis_vector(field, i) for i in range(3)]


def zero_tensor(field, degree: int):
    return [field.zero()] * (3 ** degree)


def _check_len(t, n, what):
    if len(t) != n:
        raise DimensionMismatch(f"{what} must have {n} coordinates, got {len(t)}")


def tensor2(x, y):
    """Plain tensor product x (x) y of two vectors."""
    return [xi * yj for xi in x for yj in y]


def wedge2(x, y):
    """x ^ y = x(x)y - y(x)x."""
    return [xi * yj - yi * xj for xi, yi in zip(x, y) for xj, yj in zip(x, y)]


def wedge3(x, y, z):
    """Full alternation of x(x)y(x)z over the six permutations."""
    out = []
    for i in range(3):
        for j in range(3):
            for k in range(3):
                out.append(
                    x[i] * y[j] * z[k]
                    + y[i] * z[j] * x[k]
                    + z[i] * x[j] * y[k]
                    - z[i] * y[j] * x[k]
                    - x[i] * z[j] * y[k]
                    - y[i] * x[j] * z[k]
                )
    return out


def is_alt2(t) -> bool:
    _check_len(t, 9, "degree-2 tensor")
    for i in range(3):
        if t[idx2(i, i)] != 0:
            return False
        for j in range(i + 1, 3):
            if t[idx2(i, j)] != -t[idx2(j, i)]:
                return False
    return True


def is_alt3(w) -> bool:
    _check_len(w, 27, "degree-3 tensor")
    c = w[idx3(0, 1, 2)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                expected = 0
                if i != j and j != k and i != k:
                    expected = _PERM_SIGNS[(i, j, k)] * c
                if w[idx3(i, j, k)] != expected:
                    return False
    return True


def in_v_alt2(w) -> bool:
    """Membership in V (x) Alt2: every front slice is alternating."""
    _check_len(w, 27, "degree-3 tensor")
    return all(is_alt2(w[9 * i : 9 * i + 9]) for i in range(3))


def in_alt2_v(w) -> bool:
    """Membership in Alt2 (x) V: every back slice is alternating."""
    _check_len(w, 27, "degree-3 tensor")
    return all(
        is_alt2([w[idx3(i, j, k)] for i in range(3) for j in range(3)])
        for k in range(3)
    )


def subspace_query(w, space: str) -> bool:
    """Exact membership test; ``space`` is Alt2, Alt3, VxAlt2 or Alt2xV."""
    tests = {
        "Alt2": is_alt2,
        "Alt3": is_alt3,
        "VxAlt2": in_v_alt2,
        "Alt2xV": in_alt2_v,
    }
    try:
        return tests[space](w)
    except KeyError:
        raise DimensionMismatch(f"unknown subspace {space!r}") from None


def wedge_vt(x, t):
    """Wedge of a vector with an alternating degree-2 tensor.

    Extends x ^ (y ^ z) = x ^ y ^ z bilinearly; requires t alternating.
    """
    if not is_alt2(t):
        raise NotAlternating("second factor must be alternating")
    fld = field_of(x[0])
    e = std_basis(fld)
    out = zero_tensor(fld, 3)
    for i in range(3):
        for j in range(i + 1, 3):
            c = t[idx2(i, j)]
            if c != 0:
                w = wedge3(x, e[i], e[j])
                out = [a + c * b for a, b in zip(out, w)]
    return out


def wedge_tv(t, x):
    """Mirror wedge t ^ x; equals x ^ t for a bivector t."""
    return wedge_vt(x, t)


def vol(x, y, z):
    """The alternating trilinear form with vol(e1,e2,e3) = 1 (a determinant)."""
    return (
        x[0] * (y[1] * z[2] - y[2] * z[1])
        - x[1] * (y[0] * z[2] - y[2] * z[0])
        + x[2] * (y[0] * z[1] - y[1] * z[0])
    )


def trivector_coeff(w):
    """Coefficient of a degree-3 alternating tensor against e1^e2^e3.

    Inverse of ``c |-> c * wedge3(e1,e2,e3)``; satisfies
    trivector_coeff(wedge3(x,y,z)) = vol(x,y,z).
    """
    if not is_alt3(w):
        raise NotInAlt3("tensor is not alternating of degree 3")
    return w[idx3(0, 1, 2)]


def vol_form(x, y):
    """The linear form v |-> vol(x, y, v), as a coefficient triple."""
    fld = field_of(x[0])
    return [vol(x, y, e) for e in std_basis(fld)]


def pair_vt(x, t):
    """trivector_coeff(x ^ t) for an alternating t, without building the wedge.

    Reads the three independent coordinates of t straight off: the pairing
    is x_1 t_23 + x_2 t_31 + x_3 t_12.  The caller guarantees t alternating.
    """
    return x[0] * t[5] + x[1] * t[6] + x[2] * t[1]


def eval_form(form, v):
    acc = form[0] * v[0]
    for f, c in zip(form[1:], v[1:]):
        acc = acc + f * c
    return acc


def alt2_basis(field):
    """Basis e1^e2, e1^e3, e2^e3 of the alternating square."""
    e = std_basis(field)
    return [wedge2(e[0], e[1]), wedge2(e[0], e[2]), wedge2(e[1], e[2])]


def alt3_generator(field):
    e = std_basis(field)
    return wedge3(e[0], e[1], e[2])


def decompose_bivector(t):
    """Split a nonzero alternating degree-2 tensor t into (a, b) with a^b = t.

    The plane spanned by a and b is the kernel of the linear form
    v |-> trivector_coeff(v ^ t); an echelonized kernel basis (u1, u2) has
    u1 ^ u2 proportional to t, and scaling u1 by the exact ratio finishes.
    No square roots are needed in dimension 3.
    """
    if not is_alt2(t):
        raise NotAlternating("tensor is not an alternating degree-2 tensor")
    if all(x == 0 for x in t):
        raise ZeroBivector("cannot decompose the zero bivector")
    fld = field_of(next(x for x in t if x != 0))
    e = std_basis(fld)
    form = [trivector_coeff(wedge_vt(v, t)) for v in e]
    u1, u2 = Matrix(fld, [form]).kernel_basis()
    w = wedge2(u1, u2)
    m = next(i for i, x in enumerate(t) if x != 0)
    c = w[m] / t[m]
    a = [x / c for x in u1]
    if wedge2(a, u2) != t:
        raise ZeroBivector("internal decomposition failure")  # unreachable
    return a, u2


def lift_left(op2: Matrix) -> Matrix:
    """The operator Y (x) Id acting on the third tensor power."""
    return op2.kron(Matrix.identity(op2.field, 3))


def lift_right(op2: Matrix) -> Matrix:
    """The operator Id (x) Y acting on the third tensor power."""
    return Matrix.identity(op2.field, 3).kron(op2)


def cyclic_shift(w):
    """Coordinate action of x(x)y(x)z |-> y(x)z(x)x."""
    _check_len(w, 27, "degree-3 tensor")
    out = [None] * 27
    for i in range(3):
        for j in range(3):
            for k in range(3):
                out[idx3(j, k, i)] = w[idx3(i, j, k)]
    return out


def random_invertible(field, rng, bound: int = 3) -> Matrix:
    """Random invertible 3x3 matrix with small integer entries."""
    while True:
        m = Matrix.from_rows(
            field,
            [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)],
        )
        if m.det() != 0:
            return m


def change_of_basis(op: Matrix, basis: Matrix) -> Matrix:
    """Components of a degree-2 operator in the basis given by the columns."""
    if basis.det() == 0:
        raise SingularBasis("basis matrix is singular")
    binv = basis.inverse()
    return binv.kron(binv) * op * basis.kron(basis)
