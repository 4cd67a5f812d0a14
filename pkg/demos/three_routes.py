"""One Schubert class, three computations.

The operator route applies divided differences (or Demazure operators) to
the Bott-Samelson class, the symmetrizer route sums over S_k and divides by
the Vandermonde once, and the determinant route never touches the
Bott-Samelson class at all.  All three must agree term by term.

Run with ``python3 demos/three_routes.py``.
"""

import time

from eqschubert import Route, Theory, pushforward_class

k, N = 3, 2
lam = (2, 1, 0)

for theory in Theory:
    values = {}
    for route in Route:
        start = time.perf_counter()
        values[route] = pushforward_class(lam, k, N, theory, route).value
        elapsed = time.perf_counter() - start
        print(f"{theory.value:>3} {route.value:>3}: {len(values[route]):4d} terms in {elapsed * 1000:7.1f} ms")
    agree = len(set(values.values())) == 1
    print(f"{theory.value:>3}: routes {'agree' if agree else 'DISAGREE'}\n")

print("cohomology class of (1) in Gr(2, 4):", pushforward_class((1,), 2, 2, Theory.COHOMOLOGY).value)
print("K-theory class of (1) in Gr(1, 2):  ", pushforward_class((1,), 1, 1, Theory.KTHEORY).value)
