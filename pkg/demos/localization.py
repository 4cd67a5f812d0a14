"""Restricting Schubert classes to torus-fixed points.

The table shows which fixed points e_mu of Gr(2, 4) see a nonzero
restriction of the class of lam: exactly those with mu containing lam.
The last part checks the fixed-point formula for a pushforward at random
rational points.

Run with ``python3 demos/localization.py``.
"""

from eqschubert import (
    FixedPoint,
    Theory,
    build_P_lambda,
    coh_localize,
    factorial_schur_det,
    verify_localized_pushforward,
)
from eqschubert.combinat import partitions_in_box

k, N = 2, 2
box = partitions_in_box(k, N)

print("lam \\ mu " + " ".join(f"{str(mu):>5}" for mu in box))
for lam in box:
    cls = factorial_schur_det(lam, k, N)
    marks = ["    *" if coh_localize(cls, FixedPoint(mu, k, N)) else "    ." for mu in box]
    print(f"{str(lam):>8} " + " ".join(marks))

print()
cls = factorial_schur_det((1, 0), k, N)
print("class of (1) at e_(2,1):", coh_localize(cls, FixedPoint.of((2, 1), k, N)))

for lam in box:
    ok = verify_localized_pushforward(build_P_lambda(lam, k, N), lam, k, N, Theory.KTHEORY, trials=5, seed=1)
    print(f"K-theory fixed-point formula for P_{lam.parts}: {'ok' if ok else 'MISMATCH'}")
