"""Construction and inversion of Hecke symmetries on a 3-dimensional space.

A symmetry R here is an invertible operator on V (x) V satisfying the braid
equation and the quadratic relation (R - q)(R + 1) = 0, whose associated
R-symmetric algebra is the ordinary polynomial algebra.  Every such R is
produced from a quadruple (q, a, b, g): a nonzero parameter q, two vectors
a, b and a symmetric bilinear form g tied together by the constraint

    (q - 1)^2 = -4 * (g(a,a) g(b,b) - g(a,b)^2).

The skewsymmetrizer Y = q * Id - R is assembled as

    Y(x y) = g(x,y) a^b + x ^ Ty + y ^ Tx + (q+1)/2 * x^y,

with T v = g(b,v) a - g(a,v) b.  Conversely, R determines the pair (q, F)
where F is the rank-at-most-1 symmetric operator F(x y) = g(x,y) a^b, and
the quadruple can be recovered from F up to the rescaling
(g, a^b) -> (c g, a^b / c).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    ImageNotInAlt2,
    InputError,
    InvalidConstraint,
    NoHeckeParameter,
    NotHeckeSym0,
    SingularDeformation,
    SingularMatrix,
    ZeroQ,
)
from .linalg import Matrix
from .multilinear import (
    alt2_basis,
    decompose_bivector,
    idx2,
    is_alt2,
    pair_vt,
    std_basis,
    tensor2,
    vol,
    wedge2,
    zero_tensor,
)

__all__ = [
    "g_value",
    "symmetric_form",
    "t_operator",
    "discriminant",
    "solve_q",
    "HeckeData",
    "hecke_data_with_solved_q",
    "skewsymmetrizer_matrix",
    "build_Y",
    "build_R",
    "flip_matrix",
    "flip_symmetry",
    "HeckeSymmetry",
    "pairing_form",
    "extract_q",
    "FOperator",
    "zero_F",
    "extract_F",
    "t_operator_of_F",
    "build_Y_from_F",
    "deform",
    "conjugate",
]


def g_value(g: Matrix, x, y):
    """Evaluate the bilinear form given by a 3x3 matrix."""
    acc = g.field.zero()
    for i in range(3):
        if x[i] == 0:
            continue
        row = g.rows[i]
        for j in range(3):
            if row[j] != 0 and y[j] != 0:
                acc = acc + x[i] * row[j] * y[j]
    return acc


def symmetric_form(field, rows) -> Matrix:
    """Build a symmetric 3x3 form matrix, rejecting asymmetric input."""
    g = Matrix.from_rows(field, rows)
    if g.nrows != 3 or g.ncols != 3:
        raise InputError("bilinear form must be 3x3")
    for i in range(3):
        for j in range(i + 1, 3):
            if g.rows[i][j] != g.rows[j][i]:
                raise InputError("bilinear form must be symmetric")
    return g


def t_operator(a, b, g: Matrix) -> Matrix:
    """The traceless operator v |-> g(b,v) a - g(a,v) b, as a 3x3 matrix."""
    fld = g.field
    cols = []
    for e in std_basis(fld):
        gb, ga = g_value(g, b, e), g_value(g, a, e)
        cols.append([gb * a[i] - ga * b[i] for i in range(3)])
    return Matrix(fld, [[cols[j][i] for j in range(3)] for i in range(3)])


def discriminant(a, b, g: Matrix):
    """g(a,a) g(b,b) - g(a,b)^2: the Gram determinant of g on (a, b)."""
    return g_value(g, a, a) * g_value(g, b, b) - g_value(g, a, b) ** 2


def solve_q(a, b, g: Matrix):
    """All nonzero q with (q - 1)^2 = -4 * discriminant, possibly empty.

    Returns a deterministically ordered list; the double root at q = 1
    appears once, and a root at q = 0 is dropped.
    """
    fld = g.field
    s = fld.sqrt(-discriminant(a, b, g))
    if s is None:
        return []
    roots = {fld.of(1) + 2 * s, fld.of(1) - 2 * s}
    roots.discard(fld.zero())
    return sorted(roots, key=fld.fmt)


@dataclass(frozen=True)
class HeckeData:
    """A validated parametrizing quadruple (q, a, b, g)."""

    q: object
    a: list
    b: list
    g: Matrix

    def __post_init__(self):
        if len(self.a) != 3 or len(self.b) != 3:
            raise InputError("a and b must be 3-dimensional vectors")
        fld = self.g.field
        for i in range(3):
            for j in range(i + 1, 3):
                if self.g.rows[i][j] != self.g.rows[j][i]:
                    raise InputError("bilinear form must be symmetric")
        if self.q == 0:
            raise ZeroQ("the Hecke parameter q must be nonzero")
        lhs = (self.q - 1) ** 2
        rhs = -4 * discriminant(self.a, self.b, self.g)
        if lhs != rhs:
            raise InvalidConstraint(
                f"(q-1)^2 = {fld.fmt(lhs)} but -4*discriminant = {fld.fmt(rhs)}"
            )

    @property
    def field(self):
        return self.g.field


def hecke_data_with_solved_q(a, b, g: Matrix, which: int = 0) -> HeckeData:
    """Convenience constructor solving for q; errors when no q exists."""
    qs = solve_q(a, b, g)
    if not qs:
        raise InvalidConstraint(
            "-discriminant is not a square in the field: no admissible q"
        )
    return HeckeData(qs[which % len(qs)], a, b, g)


def skewsymmetrizer_matrix(q, a, b, g: Matrix) -> Matrix:
    """Raw assembly of the skewsymmetrizer formula, with no validation.

    Used both by :func:`build_Y` (after validation) and by adversarial test
    harnesses that deliberately break the q constraint.
    """
    fld = g.field
    e = std_basis(fld)
    T = t_operator(a, b, g)
    ab = wedge2(a, b)
    half = (q + 1) / 2
    cols = []
    for i in range(3):
        Ti = T.apply(e[i])
        for j in range(3):
            Tj = T.apply(e[j])
            col = [g.rows[i][j] * c for c in ab]
            for pos, val in enumerate(wedge2(e[i], Tj)):
                col[pos] = col[pos] + val
            for pos, val in enumerate(wedge2(e[j], Ti)):
                col[pos] = col[pos] + val
            for pos, val in enumerate(wedge2(e[i], e[j])):
                col[pos] = col[pos] + half * val
            cols.append(col)
    return Matrix(fld, [[cols[c][r] for c in range(9)] for r in range(9)])


def build_Y(data: HeckeData) -> Matrix:
    """Skewsymmetrizer of the symmetry determined by the quadruple."""
    return skewsymmetrizer_matrix(data.q, data.a, data.b, data.g)


@dataclass(frozen=True)
class HeckeSymmetry:
    """An operator R with its cached skewsymmetrizer Y = q*Id - R."""

    R: Matrix
    Y: Matrix
    q: object
    data: HeckeData | None = dc_field(default=None, compare=False)

    @property
    def field(self):
        return self.R.field

    @classmethod
    def from_matrix(cls, R: Matrix, q=None) -> "HeckeSymmetry":
        """Validate a raw 9x9 matrix as a Hecke symmetry.

        Checks the quadratic relation, that the image of Y is exactly the
        alternating square, and the eigenvalue q+1 there.  The braid
        equation is the verifier's job.
        """
        if R.nrows != 9 or R.ncols != 9:
            raise InputError("R must be a 9x9 matrix")
        fld = R.field
        if q is None:
            try:
                q = extract_q(R)
            except NoHeckeParameter as exc:
                raise NotHeckeSym0(str(exc)) from exc
        else:
            q = fld.of(q)
            ident = Matrix.identity(fld, 9)
            if not ((R - ident.scale(q)) * (R + ident)).is_zero():
                raise NotHeckeSym0("the quadratic Hecke relation fails for the given q")
        if q == 0:
            raise NotHeckeSym0("the Hecke parameter is zero")
        Y = Matrix.identity(fld, 9).scale(q) - R
        for j in range(9):
            if not is_alt2(Y.col(j)):
                raise NotHeckeSym0("the skewsymmetrizer image is not alternating")
        if Y.rank() != 3:
            raise NotHeckeSym0("the skewsymmetrizer image is not the full alternating square")
        for w in alt2_basis(fld):
            if Y.apply(w) != [(q + 1) * c for c in w]:
                raise NotHeckeSym0("alternating tensors are not (q+1)-eigenvectors")
        return cls(R, Y, q)


def build_R(data: HeckeData) -> HeckeSymmetry:
    """The Hecke symmetry R = q*Id - Y of a validated quadruple."""
    Y = build_Y(data)
    R = Matrix.identity(data.field, 9).scale(data.q) - Y
    return HeckeSymmetry(R, Y, data.q, data)


def flip_matrix(field) -> Matrix:
    """The flip x(x)y |-> y(x)x."""
    z, o = field.zero(), field.one()
    rows = [[z] * 9 for _ in range(9)]
    for i in range(3):
        for j in range(3):
            rows[idx2(j, i)][idx2(i, j)] = o
    return Matrix(field, rows)


def flip_symmetry(field) -> HeckeSymmetry:
    """The flip as a Hecke symmetry with q = 1 and zero form."""
    e = std_basis(field)
    data = HeckeData(field.one(), e[0], e[1], Matrix.zeros(field, 3))
    return build_R(data)


def pairing_form(Y: Matrix, x, y):
    """The linear form z |-> trivector_coeff(x ^ Y(y z)).

    Trilinear in (x, y, z); requires the image of Y inside the alternating
    square.
    """
    fld = Y.field
    for j in range(9):
        if not is_alt2(Y.col(j)):
            raise ImageNotInAlt2("operator image is not alternating")
    out = []
    for z in std_basis(fld):
        yz = Y.apply(tensor2(y, z))
        out.append(pair_vt(x, yz))
    return out


def extract_q(R: Matrix):
    """The unique q with (R - q)(R + 1) = 0, when one exists.

    The relation forces R to act as q on the image of R + Id, so the ratio
    on any nonzero column of R + Id is the only candidate; it is then
    verified globally.  R = -Id is rejected as ambiguous.
    """
    fld = R.field
    ident = Matrix.identity(fld, R.nrows)
    M = R + ident
    col = None
    for j in range(M.ncols):
        c = M.col(j)
        if any(x != 0 for x in c):
            col = c
            break
    if col is None:
        raise NoHeckeParameter("R = -Id: every q satisfies the relation")
    m = next(i for i, x in enumerate(col) if x != 0)
    w = R.apply(col)
    q = w[m] / col[m]
    if not ((R - ident.scale(q)) * M).is_zero():
        raise NoHeckeParameter("no q satisfies the quadratic Hecke relation")
    return q


@dataclass(frozen=True)
class FOperator:
    """The invariant operator F(x y) = g(x,y) t with t an alternating bivector.

    ``t`` is normalized so that its first nonzero coordinate is 1, the
    compensating scalar being folded into ``g``; the zero operator is stored
    as (g = 0, t = 0).
    """

    g: Matrix
    t: list

    def __post_init__(self):
        if not is_alt2(self.t):
            raise InputError("the bivector part must be alternating")

    @property
    def field(self):
        return self.g.field

    def is_zero(self) -> bool:
        return self.g.is_zero() or all(x == 0 for x in self.t)

    def column(self, i: int, j: int):
        """F(e_i e_j) as a coordinate list."""
        c = self.g.rows[i][j]
        return [c * x for x in self.t]

    def matrix(self) -> Matrix:
        cols = [self.column(i, j) for i in range(3) for j in range(3)]
        return Matrix(self.field, [[cols[c][r] for c in range(9)] for r in range(9)])

    def delta(self):
        """Gram determinant of g on the plane of the bivector (0 for F = 0)."""
        if self.is_zero():
            return self.field.zero()
        a, b = decompose_bivector(self.t)
        return discriminant(a, b, self.g)

    def vectors(self):
        """A pair (a, b) with a ^ b = t; undefined for the zero operator."""
        if self.is_zero():
            raise ZeroBivector("the zero operator has no bivector decomposition")
        return decompose_bivector(self.t)


def zero_F(field) -> FOperator:
    return FOperator(Matrix.zeros(field, 3), zero_tensor(field, 2))


def _bivector_from_pairings(field, s):
    """The bivector u with trivector_coeff(u ^ e_k) = s[k]."""
    e = std_basis(field)
    u = zero_tensor(field, 2)
    for coeff, (i, j) in zip(s, ((1, 2), (2, 0), (0, 1))):
        if coeff != 0:
            for pos, val in enumerate(wedge2(e[i], e[j])):
                u[pos] = u[pos] + coeff * val
    return u


def extract_F(sym: HeckeSymmetry) -> FOperator:
    """Recover the invariant operator F from a Hecke symmetry.

    F is pinned by 2 F(x y) ^ z = x ^ Y(y z) + y ^ Y(x z), solved through the
    nondegenerate pairing of vectors against bivectors.  The result must be
    symmetric with rank at most 1 and image in the alternating square, and
    its discriminant must match the symmetry's q; any violation means the
    operator is not a Hecke symmetry of the polynomial algebra.
    """
    fld = sym.field
    Y = sym.Y
    e = std_basis(fld)
    for j in range(9):
        if not is_alt2(Y.col(j)):
            raise NotHeckeSym0("the skewsymmetrizer image is not alternating")
    ycols = {}
    for i in range(3):
        for j in range(3):
            ycols[(i, j)] = Y.col(idx2(i, j))
    cols = []
    for i in range(3):
        for j in range(3):
            s = []
            for k in range(3):
                s.append((pair_vt(e[i], ycols[(j, k)]) + pair_vt(e[j], ycols[(i, k)])) / 2)
            cols.append(_bivector_from_pairings(fld, s))
    lead = None
    for c in cols:
        if any(x != 0 for x in c):
            lead = c
            break
    if lead is None:
        f_op = zero_F(fld)
    else:
        m = next(i for i, x in enumerate(lead) if x != 0)
        t = [x / lead[m] for x in lead]
        grows = [[fld.zero()] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                c = cols[idx2(i, j)]
                coeff = c[m]
                if [coeff * x for x in t] != c:
                    raise NotHeckeSym0("the invariant operator does not have rank 1")
                grows[i][j] = coeff
        g = Matrix(fld, grows)
        for i in range(3):
            for j in range(i + 1, 3):
                if g.rows[i][j] != g.rows[j][i]:
                    raise NotHeckeSym0("the invariant operator is not symmetric")
        f_op = FOperator(g, t)
    if (sym.q - 1) ** 2 != -4 * f_op.delta():
        raise NotHeckeSym0(
            "the parameter-discriminant constraint fails for the extracted operator"
        )
    return f_op


def t_operator_of_F(f_op: FOperator) -> Matrix:
    """The traceless operator of any decomposition of F (rescaling-invariant)."""
    if f_op.is_zero():
        return Matrix.zeros(f_op.field, 3)
    a, b = f_op.vectors()
    return t_operator(a, b, f_op.g)


def build_Y_from_F(q, f_op: FOperator) -> Matrix:
    """Reassemble the skewsymmetrizer from the pair (q, F).

    Inverse of ``extract_F o build_R``: uses the identity
    x ^ Y(y z) = F(x y)^z + F(x z)^y - F(y z)^x + (q+1)/2 x^y^z.
    """
    fld = f_op.field
    q = fld.of(q)
    if (q - 1) ** 2 != -4 * f_op.delta():
        raise InvalidConstraint(
            "(q-1)^2 = -4*discriminant(F) fails for the requested q"
        )
    if q == 0:
        raise ZeroQ("the Hecke parameter q must be nonzero")
    e = std_basis(fld)
    half = (q + 1) / 2
    fcols = {(i, j): f_op.column(i, j) for i in range(3) for j in range(3)}
    cols = []
    for j in range(3):
        for k in range(3):
            s = []
            for i in range(3):
                # F(..)^z = z^F(..) since the first factor is a bivector
                acc = pair_vt(e[k], fcols[(i, j)])
                acc = acc + pair_vt(e[j], fcols[(i, k)])
                acc = acc - pair_vt(e[i], fcols[(j, k)])
                acc = acc + half * vol(e[i], e[j], e[k])
                s.append(acc)
            cols.append(_bivector_from_pairings(fld, s))
    return Matrix(fld, [[cols[c][r] for c in range(9)] for r in range(9)])


def deform(sym: HeckeSymmetry, lam) -> HeckeSymmetry:
    """The member R_lam = R0 + lam (R - R0) of the deformation family.

    Valid whenever lam (q - 1) != -1; the deformed parameter is
    1 + lam (q - 1) and the invariant operator scales by lam.
    """
    fld = sym.field
    lam = fld.of(lam)
    q_lam = 1 + lam * (sym.q - 1)
    if q_lam == 0:
        raise SingularDeformation(
            "lam*(q-1) = -1 makes the deformed operator singular"
        )
    r0 = flip_matrix(fld)
    R = r0 + (sym.R - r0).scale(lam)
    Y = Matrix.identity(fld, 9).scale(q_lam) - R
    data = None
    if sym.data is not None:
        data = HeckeData(q_lam, sym.data.a, sym.data.b, sym.data.g.scale(lam))
    return HeckeSymmetry(R, Y, q_lam, data)


def conjugate(sym: HeckeSymmetry, P: Matrix) -> HeckeSymmetry:
    """Transport the symmetry along the basis change P (x) P."""
    if P.det() == 0:
        raise SingularMatrix("basis change must be invertible")
    Pinv = P.inverse()
    K = P.kron(P)
    Kinv = Pinv.kron(Pinv)
    R = K * sym.R * Kinv
    Y = K * sym.Y * Kinv
    data = None
    if sym.data is not None:
        g2 = Pinv.transpose() * sym.data.g * Pinv
        data = HeckeData(sym.q, P.apply(sym.data.a), P.apply(sym.data.b), g2)
    return HeckeSymmetry(R, Y, sym.q, data)
