"""Pushing forward classes indexed by compositions that are not partitions.

In cohomology the result is either zero or a signed factorial Schur
polynomial; in K-theory a composition with an ascent is rewritten in terms
of its neighbours, and the identity is checked after clearing denominators.

Run with ``python3 demos/straightening.py``.
"""

from eqschubert import (
    Theory,
    check_ktheory_straightening,
    factorial_schur_det,
    pushforward_class,
    straighten_composition,
)

k, N = 2, 2

for mu in [(1, 2), (0, 2), (2, 1)]:
    outcome = straighten_composition(mu)
    value = pushforward_class(mu, k, N, Theory.COHOMOLOGY).value
    if outcome.is_zero:
        print(f"{mu}: mu + delta has a repeated entry, pushforward = {value}")
    else:
        lam = outcome.partition
        sign = "+" if outcome.sign > 0 else "-"
        assert value == outcome.sign * factorial_schur_det(lam, k, N)
        print(f"{mu}: pushforward = {sign} s_{lam.parts}(x|t) = {value}")

print()
for lam in [(0, 1), (0, 2), (1, 2)]:
    ok = check_ktheory_straightening(lam, 1, k, N)
    print(f"K-theory exchange identity at {lam}, i=1: {'holds' if ok else 'FAILS'}")
