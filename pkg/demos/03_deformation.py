"""Every symmetry here is a deformation of the plain flip.

Sliding along R_lam = R0 + lam (R - R0) stays inside the solution set as
long as lam(q-1) != -1, the parameter moving affinely and the invariant
operator scaling linearly.  The excluded value would make R_lam singular.
"""

from fractions import Fraction

from hecke3 import QQ, build_R, canonical, deform, extract_F, extract_q, run_suite
from hecke3.errors import SingularDeformation

sym = build_R(canonical("Type1", Fraction(3)))
print("starting symmetry: Type1 at q = 3")

for lam in (Fraction(0), Fraction(1, 2), Fraction(2), Fraction(-1), Fraction(1, 3)):
    moved = deform(sym, lam)
    checks_ok = all(r.passed for r in run_suite(moved))
    f_scale = extract_F(moved).matrix() == extract_F(sym).matrix().scale(lam)
    print(f"  lam = {QQ.fmt(lam):>4s}: q_lam = {QQ.fmt(extract_q(moved.R)):>4s}, "
          f"all checks {'ok' if checks_ok else 'FAILED'}, "
          f"invariant operator scaled by lam: {f_scale}")

try:
    deform(sym, Fraction(-1, 2))
except SingularDeformation as exc:
    print(f"  lam = -1/2 rejected: {exc}")
