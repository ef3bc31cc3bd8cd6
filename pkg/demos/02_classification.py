"""The eight types of symmetries and invariance of the labels.

Every symmetry with polynomial symmetric algebra is determined by (q, F)
with F(xy) = g(x,y) a^b, and up to basis change there are two q-families
and six isolated types at q = 1.  The label depends only on q, the rank
of g, and the rank of g on the plane of the bivector, so it must not move
under conjugation by invertible matrices.
"""

import random
from fractions import Fraction

from hecke3 import (
    QQ,
    TYPE_LABELS,
    build_R,
    canonical,
    classify,
    conjugate,
)
from hecke3.multilinear import random_invertible

rng = random.Random(2024)

print(f"{'label':8s} {'q':>4s} {'rank g':>7s} {'rank on plane':>14s}")
for label in TYPE_LABELS:
    q = Fraction(3) if label in ("Type1", "Type2") else None
    rep = classify(build_R(canonical(label, q)))
    res = "-" if rep.rank_restricted is None else str(rep.rank_restricted)
    print(f"{rep.label:8s} {QQ.fmt(rep.q):>4s} {rep.rank_g:>7d} {res:>14s}")

print("\ntransporting Type5 through five random basis changes:")
sym = build_R(canonical("Type5"))
for k in range(5):
    P = random_invertible(QQ, rng)
    moved = classify(conjugate(sym, P))
    print(f"  change {k + 1}: label = {moved.label} (q = {QQ.fmt(moved.q)})")
