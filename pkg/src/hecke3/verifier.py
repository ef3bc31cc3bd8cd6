"""Exact checks of every identity a Hecke symmetry must satisfy.

Each check returns a :class:`CheckReport`; a failing report carries a witness
(the first offending basis tensor or index tuple, with both side values).
There are no tolerances anywhere: a check passes iff the identity holds
bit-exactly.  Witness indices are printed 1-based to match the e1, e2, e3
naming.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .errors import InputError, NotHeckeSym0
from .linalg import Matrix
from .multilinear import (
    alt2_basis,
    basis_vector,
    change_of_basis,
    idx2,
    is_alt2,
    is_alt3,
    lift_left,
    lift_right,
    cyclic_shift,
    pair_vt,
    random_invertible,
    std_basis,
    vol,
    wedge2,
    wedge_vt,
)
from .heckecore import (
    HeckeData,
    HeckeSymmetry,
    build_R,
    build_Y_from_F,
    conjugate,
    discriminant,
    extract_F,
    extract_q,
    g_value,
    skewsymmetrizer_matrix,
    t_operator,
    t_operator_of_F,
)

__all__ = [
    "CheckReport",
    "check_braid",
    "check_hecke",
    "check_image_and_eigen",
    "check_containments",
    "check_component_identity",
    "check_pairing_identities",
    "check_cyclic_shift_identity",
    "run_suite",
    "sample_strategy_a",
    "sample_strategy_b",
    "sample_adversarial",
    "fuzz",
]


@dataclass
class CheckReport:
    """Outcome of one exact check; witness is present iff the check failed."""

    name: str
    passed: bool
    witness: dict | None = None
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _fmt_list(field, xs):
    return [field.fmt(x) for x in xs]


def _finish(name, passed, witness, t0):
    return CheckReport(name, passed, witness if not passed else None,
                       (time.perf_counter() - t0) * 1000.0)


def check_braid(R: Matrix) -> CheckReport:
    """(R x Id)(Id x R)(R x Id) = (Id x R)(R x Id)(Id x R) on all 27 columns."""
    t0 = time.perf_counter()
    fld = R.field
    r1, r2 = lift_left(R), lift_right(R)
    lhs = r1 * (r2 * r1)
    rhs = r2 * (r1 * r2)
    witness = None
    if lhs != rhs:
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    c = 9 * i + 3 * j + k
                    lc, rc = lhs.col(c), rhs.col(c)
                    if lc != rc and witness is None:
                        witness = {
                            "input": {"basis_tensor": [i + 1, j + 1, k + 1]},
                            "lhs": _fmt_list(fld, lc),
                            "rhs": _fmt_list(fld, rc),
                        }
    return _finish("braid", witness is None, witness, t0)


def check_hecke(R: Matrix, q) -> CheckReport:
    """(R - q*Id)(R + Id) = 0 as a 9x9 identity."""
    t0 = time.perf_counter()
    fld = R.field
    ident = Matrix.identity(fld, 9)
    prod = (R - ident.scale(fld.of(q))) * (R + ident)
    witness = None
    if not prod.is_zero():
        for j in range(9):
            col = prod.col(j)
            if any(x != 0 for x in col):
                witness = {
                    "input": {"basis_tensor": [j // 3 + 1, j % 3 + 1]},
                    "lhs": _fmt_list(fld, col),
                    "rhs": ["0"] * 9,
                }
                break
    return _finish("hecke", witness is None, witness, t0)


def check_image_and_eigen(Y: Matrix, q) -> CheckReport:
    """Image of Y is exactly the alternating square and Yw = (q+1)w there."""
    t0 = time.perf_counter()
    fld = Y.field
    witness = None
    for j in range(9):
        col = Y.col(j)
        if not is_alt2(col):
            witness = {
                "input": {"basis_tensor": [j // 3 + 1, j % 3 + 1]},
                "lhs": _fmt_list(fld, col),
                "rhs": ["alternating tensor expected"],
            }
            break
    if witness is None:
        rk = Y.rank()
        if rk != 3:
            witness = {"input": {"rank": rk}, "lhs": [str(rk)], "rhs": ["3"]}
    if witness is None:
        qq = fld.of(q)
        for w in alt2_basis(fld):
            got = Y.apply(w)
            want = [(qq + 1) * c for c in w]
            if got != want:
                witness = {
                    "input": {"bivector": _fmt_list(fld, w)},
                    "lhs": _fmt_list(fld, got),
                    "rhs": _fmt_list(fld, want),
                }
                break
    return _finish("image_eigen", witness is None, witness, t0)


def check_containments(Y: Matrix, q) -> CheckReport:
    """Degree-3 containments of the reformulated braid equation.

    (Id x Y)(Y x Id)w - q w must be alternating for every w in V (x) Alt2,
    and (Y x Id)(Id x Y)w - q w for every w in Alt2 (x) V; both are checked
    on the 9 spanning tensors of each space.
    """
    t0 = time.perf_counter()
    fld = Y.field
    qq = fld.of(q)
    y1, y2 = lift_left(Y), lift_right(Y)
    e = std_basis(fld)
    witness = None
    for i in range(3):
        for t in alt2_basis(fld):
            w = [ei * tc for ei in e[i] for tc in t]
            u = y2.apply(y1.apply(w))
            u = [a - qq * b for a, b in zip(u, w)]
            if not is_alt3(u):
                witness = {
                    "input": {"space": "VxAlt2", "vector": i + 1,
                              "bivector": _fmt_list(fld, t)},
                    "lhs": _fmt_list(fld, u),
                    "rhs": ["element of Alt3 expected"],
                }
                break
        if witness:
            break
    if witness is None:
        for i in range(3):
            for t in alt2_basis(fld):
                w = [tc * ei for tc in t for ei in e[i]]
                u = y1.apply(y2.apply(w))
                u = [a - qq * b for a, b in zip(u, w)]
                if not is_alt3(u):
                    witness = {
                        "input": {"space": "Alt2xV", "vector": i + 1,
                                  "bivector": _fmt_list(fld, t)},
                        "lhs": _fmt_list(fld, u),
                        "rhs": ["element of Alt3 expected"],
                    }
                    break
            if witness:
                break
    return _finish("containments", witness is None, witness, t0)


def check_component_identity(Y: Matrix, q, basis: Matrix | None = None) -> CheckReport:
    """Quadratic identity satisfied by the matrix components of Y.

    With components Y(e_i e_j) = sum Y_ij^{kl} e_k e_l recomputed in the
    supplied basis, the sum over l of
    Y_ij^{rl} Y_lk^{rt} - Y_ik^{rl} Y_lj^{rt} must equal q, -q or 0
    according to the index pattern.  Holding in every basis, this is
    equivalent to the degree-3 containments.
    """
    t0 = time.perf_counter()
    fld = Y.field
    qq = fld.of(q)
    zero = fld.zero()
    yb = Y if basis is None else change_of_basis(Y, basis)
    comp = yb.rows  # comp[idx2(k,l)][idx2(i,j)] = Y_ij^{kl}

    def y(i, j, k, l):
        return comp[idx2(k, l)][idx2(i, j)]

    witness = None
    name = "component_identity" if basis is None else "component_identity[basis]"
    for r in range(3):
        for t in range(3):
            for i in range(3):
                for j in range(3):
                    for k in range(3):
                        acc = zero
                        for l in range(3):
                            acc = acc + y(i, j, r, l) * y(l, k, r, t) \
                                - y(i, k, r, l) * y(l, j, r, t)
                        if i != r or t == r or {j, k} != {r, t}:
                            want = zero
                        elif j == r and k == t:
                            want = qq
                        else:
                            want = -qq
                        if acc != want:
                            witness = {
                                "input": {"indices": [i + 1, j + 1, k + 1, r + 1, t + 1]},
                                "lhs": [fld.fmt(acc)],
                                "rhs": [fld.fmt(want)],
                            }
                            return _finish(name, False, witness, t0)
    return _finish(name, True, None, t0)


def check_pairing_identities(Y: Matrix, q) -> CheckReport:
    """The two identities for the pairing forms of Y.

    With L[x,y](z) = trivector_coeff(x ^ Y(y z)):

      * L[x,y](z) - L[x,z](y) = (q+1) vol(x,y,z)  (linear in all slots,
        checked on basis triples);
      * (L[x,y] ^ L[x,z] - L[x,x] ^ L[y,z])(u,v) = q vol(x,y,z) vol(x,u,v),
        quadratic in x, so x additionally runs over e_i + e_j to pin the
        polarization; together the sample decides the identity exactly.
    """
    t0 = time.perf_counter()
    fld = Y.field
    qq = fld.of(q)
    e = std_basis(fld)
    for c in range(9):
        if not is_alt2(Y.col(c)):
            witness = {
                "input": {"basis_tensor": [c // 3 + 1, c % 3 + 1]},
                "lhs": _fmt_list(fld, Y.col(c)),
                "rhs": ["alternating tensor expected"],
            }
            return _finish("pairing_identities", False, witness, t0)
    cols = {(j, k): Y.col(idx2(j, k)) for j in range(3) for k in range(3)}
    # ell[i][j][k] = L[e_i, e_j](e_k)
    ell = [
        [[pair_vt(e[i], cols[(j, k)]) for k in range(3)] for j in range(3)]
        for i in range(3)
    ]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                lhs = ell[i][j][k] - ell[i][k][j]
                rhs = (qq + 1) * vol(e[i], e[j], e[k])
                if lhs != rhs:
                    witness = {
                        "identity": "eigenvalue",
                        "input": {"indices": [i + 1, j + 1, k + 1]},
                        "lhs": [fld.fmt(lhs)],
                        "rhs": [fld.fmt(rhs)],
                    }
                    return _finish("pairing_identities", False, witness, t0)
    xs = [(f"e{i+1}", e[i]) for i in range(3)]
    xs += [
        (f"e{i+1}+e{j+1}", [a + b for a, b in zip(e[i], e[j])])
        for i in range(3)
        for j in range(i + 1, 3)
    ]
    zero9 = [fld.zero()] * 9
    for xname, x in xs:
        lx = [[pair_vt(x, cols[(j, u)]) for u in range(3)] for j in range(3)]
        lxx = []
        for u in range(3):
            yxu = zero9
            for j in range(3):
                if x[j] != 0:
                    yxu = [a + x[j] * b for a, b in zip(yxu, cols[(j, u)])]
            lxx.append(pair_vt(x, yxu))
        volx = [[vol(x, e[u], e[v]) for v in range(3)] for u in range(3)]
        for j in range(3):
            for k in range(3):
                vxjk = vol(x, e[j], e[k])
                ljk = ell[j][k]
                for u in range(3):
                    for v in range(3):
                        lhs = (
                            lx[j][u] * lx[k][v]
                            - lx[j][v] * lx[k][u]
                            - lxx[u] * ljk[v]
                            + lxx[v] * ljk[u]
                        )
                        if lhs != qq * vxjk * volx[u][v]:
                            witness = {
                                "identity": "wedge",
                                "input": {
                                    "x": xname,
                                    "indices": [j + 1, k + 1, u + 1, v + 1],
                                },
                                "lhs": [fld.fmt(lhs)],
                                "rhs": [fld.fmt(qq * vxjk * volx[u][v])],
                            }
                            return _finish("pairing_identities", False, witness, t0)
    return _finish("pairing_identities", True, None, t0)


def check_cyclic_shift_identity(Y: Matrix, T: Matrix, q) -> CheckReport:
    """Y1 Y2(t x) - shift(Y2 Y1(x t)) = 2(q+1) Tx ^ t for basis x and bivectors t.

    Both mixed products land in the alternating cube when shifted against
    each other, and their difference is controlled by the traceless
    operator alone.
    """
    t0 = time.perf_counter()
    fld = Y.field
    qq = fld.of(q)
    y1, y2 = lift_left(Y), lift_right(Y)
    e = std_basis(fld)
    witness = None
    for i in range(3):
        tx2 = T.apply(e[i])
        for t in alt2_basis(fld):
            tx = [tc * ei for tc in t for ei in e[i]]
            xt = [ei * tc for ei in e[i] for tc in t]
            lhs_v = y1.apply(y2.apply(tx))
            shift = cyclic_shift(y2.apply(y1.apply(xt)))
            lhs = [a - b for a, b in zip(lhs_v, shift)]
            rhs = [2 * (qq + 1) * c for c in wedge_vt(tx2, t)]
            if lhs != rhs:
                witness = {
                    "input": {"vector": i + 1, "bivector": _fmt_list(fld, t)},
                    "lhs": _fmt_list(fld, lhs),
                    "rhs": _fmt_list(fld, rhs),
                }
                return _finish("cyclic_shift_identity", False, witness, t0)
    return _finish("cyclic_shift_identity", True, None, t0)


def run_suite(sym: HeckeSymmetry, random_bases: int = 0, rng=None) -> list[CheckReport]:
    """All checks on one symmetry, in a fixed order.

    ``random_bases`` extra bases (beyond the standard one) are used for the
    component identity.  The traceless operator for the shift identity comes
    from the symmetry's quadruple when available, else from the extracted
    invariant operator.
    """
    reports = [
        check_braid(sym.R),
        check_hecke(sym.R, sym.q),
        check_image_and_eigen(sym.Y, sym.q),
        check_containments(sym.Y, sym.q),
        check_component_identity(sym.Y, sym.q),
    ]
    if random_bases:
        rng = rng or random.Random(0)
        for _ in range(random_bases):
            reports.append(
                check_component_identity(sym.Y, sym.q, random_invertible(sym.field, rng))
            )
    reports.append(check_pairing_identities(sym.Y, sym.q))
    if sym.data is not None:
        T = t_operator(sym.data.a, sym.data.b, sym.data.g)
    else:
        try:
            T = t_operator_of_F(extract_F(sym))
        except NotHeckeSym0 as exc:
            reports.append(CheckReport(
                "cyclic_shift_identity", False,
                {"error": f"no valid invariant operator: {exc}"},
            ))
            return reports
    reports.append(check_cyclic_shift_identity(sym.Y, T, sym.q))
    return reports


def _random_scalar(field, rng, bound: int = 4):
    if field.characteristic == 0:
        return field.of(rng.randint(-bound, bound))
    return field.of(rng.randint(0, field.characteristic - 1))


def _random_vector(field, rng, bound: int = 4):
    return [_random_scalar(field, rng, bound) for _ in range(3)]


def _random_independent_pair(field, rng):
    while True:
        a = _random_vector(field, rng)
        b = _random_vector(field, rng)
        if any(x != 0 for x in wedge2(a, b)):
            return a, b


def sample_strategy_a(field, rng) -> HeckeData:
    """Generic data with g isotropic on a, so an admissible q always exists.

    In a basis starting with a, the form has a zero corner; the discriminant
    is then -g(a,b)^2 and q = 1 +/- 2 g(a,b) lies in the field.  The nonzero
    root is kept.
    """
    a, b = _random_independent_pair(field, rng)
    # complete a to a basis deterministically
    cols = [a]
    for i in range(3):
        cand = basis_vector(field, i)
        trial = Matrix(field, [list(r) for r in zip(*(cols + [cand]))])
        if trial.rank() == len(cols) + 1:
            cols.append(cand)
        if len(cols) == 3:
            break
    B = Matrix(field, [list(r) for r in zip(*cols)])
    entries = [[field.zero()] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            if i == 0 and j == 0:
                continue
            v = _random_scalar(field, rng)
            entries[i][j] = v
            entries[j][i] = v
    g_new = Matrix(field, entries)
    binv = B.inverse()
    g = binv.transpose() * g_new * binv
    gab = g_value(g, a, b)
    q = field.of(1) + 2 * gab
    if q == 0:
        q = field.of(1) - 2 * gab
    return HeckeData(q, a, b, g)


_CANONICAL_Q_POOL = (2, 3, -1, "1/2", 5, "-2/3")


def sample_strategy_b(field, rng) -> HeckeData:
    """A canonical type at an admissible q, transported by a random basis."""
    from .classify import TYPE_LABELS, canonical

    label = rng.choice(TYPE_LABELS)
    if label in ("Type1", "Type2"):
        while True:
            try:
                q = field.of(rng.choice(_CANONICAL_Q_POOL))
            except InputError:
                continue  # denominator vanishes in this field
            if q != 0 and q != 1:
                break
        data = canonical(label, q, field)
    else:
        data = canonical(label, field=field)
    P = random_invertible(field, rng)
    return conjugate(build_R(data), P).data


def sample_adversarial(field, rng):
    """Quadruple of the right shape whose q constraint is deliberately broken.

    Returns (q, a, b, g) such that (q-1)^2 != -4*discriminant; feeding it to
    the raw skewsymmetrizer assembly yields an operator with image in the
    alternating square that cannot satisfy the braid equation.
    """
    while True:
        data = sample_strategy_a(field, rng)
        g = data.g.copy()
        for i in range(3):
            for j in range(i, 3):
                bump = field.one()
                rows = [row[:] for row in g.rows]
                rows[i][j] = rows[i][j] + bump
                if i != j:
                    rows[j][i] = rows[j][i] + bump
                cand = Matrix(field, rows)
                if (data.q - 1) ** 2 != -4 * discriminant(data.a, data.b, cand):
                    return data.q, data.a, data.b, cand
        # every single-entry bump kept the constraint (not expected); resample


def fuzz(field, trials: int, seed: int, strategy: str = "A",
         adversarial: bool = False) -> CheckReport:
    """Deterministic sampling harness running the full suite per trial.

    Per-trial random streams are derived from (seed, trial index), so the
    aggregate is independent of execution order.  In adversarial mode the
    q constraint is broken on purpose and a trial counts as expected when
    the braid or quadratic check fails.
    """
    t0 = time.perf_counter()
    if trials < 1:
        raise ValueError("trials must be >= 1")
    strategy = strategy.upper()
    if strategy not in ("A", "B"):
        raise ValueError("strategy must be 'A' or 'B'")
    sampler = sample_strategy_a if strategy == "A" else sample_strategy_b
    failures = []
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        if adversarial:
            q, a, b, g = sample_adversarial(field, rng)
            Y = skewsymmetrizer_matrix(q, a, b, g)
            R = Matrix.identity(field, 9).scale(q) - Y
            braid = check_braid(R)
            hecke = check_hecke(R, q)
            if braid.passed and hecke.passed:
                failures.append(
                    {"trial": trial, "check": "adversarial",
                     "witness": {"note": "broken constraint went undetected"}}
                )
            continue
        data = sampler(field, rng)
        sym = build_R(data)
        for rep in run_suite(sym):
            if not rep.passed:
                failures.append(
                    {"trial": trial, "check": rep.name, "witness": rep.witness}
                )
        f_op = extract_F(sym)
        if build_Y_from_F(sym.q, f_op) != sym.Y:
            failures.append({"trial": trial, "check": "roundtrip",
                             "witness": {"note": "rebuilt skewsymmetrizer differs"}})
        if extract_q(sym.R) != sym.q:
            failures.append({"trial": trial, "check": "parameter_roundtrip",
                             "witness": {"note": "extracted q differs"}})
    name = f"fuzz(field={field.name},strategy={strategy}," \
           f"trials={trials},seed={seed},adversarial={adversarial})"
    witness = {"failures": failures} if failures else None
    return _finish(name, not failures, witness, t0)
