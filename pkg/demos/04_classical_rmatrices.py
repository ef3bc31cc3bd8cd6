"""Classical limits: r = R0 R - Id, its Yang-Baxter property and carriers.

For each canonical type the script checks the classical Yang-Baxter
equation on the 27x27 embeddings, the symmetrization identity
r + r21 = (q-1)(R0 + Id), and computes the carrier subalgebra of r with
its Frobenius status and isomorphism fingerprint.
"""

from fractions import Fraction

from hecke3 import (
    QQ,
    TYPE_LABELS,
    build_R,
    canonical,
    carrier,
    check_cybe,
    check_symmetrized,
    classical_r,
    fingerprint,
    is_frobenius,
)

print(f"{'label':8s} {'cybe':>5s} {'r+r21':>6s} {'dim':>4s} "
      f"{'frobenius':>12s}  fingerprint")
for label in TYPE_LABELS:
    q = Fraction(2) if label in ("Type1", "Type2") else None
    sym = build_R(canonical(label, q))
    r = classical_r(sym)
    cy = check_cybe(r).passed
    sm = check_symmetrized(r, sym.q).passed
    sub = carrier(r)
    frob = is_frobenius(sub)
    print(f"{label:8s} {str(cy):>5s} {str(sm):>6s} {sub.dim:>4d} "
          f"{frob.status:>12s}  {fingerprint(sub)}")

print("\ncarrier basis of Type6 (echelonized):")
sub = carrier(classical_r(build_R(canonical("Type6"))))
for m in sub.basis:
    print("  " + "; ".join(" ".join(QQ.fmt(x) for x in row) for row in m.rows))

print("\nFrobenius functional found for Type6 carrier:",
      [QQ.fmt(x) for x in is_frobenius(sub).witness])
