"""Seeded random polynomials for property checks."""

from __future__ import annotations

import random

from .poly import Family, Polynomial, VarId

__all__ = ["random_polynomial"]


def random_polynomial(
    rng: random.Random,
    k: int,
    *,
    terms: int = 4,
    max_deg: int = 3,
    params: int = 0,
    family: Family = Family.TCOH,
    coeff_range: int = 5,
) -> Polynomial:
    """A sum of ``terms`` random monomials in ``x_1..x_k`` and ``params`` parameters.

    >>> f = random_polynomial(random.Random(0), 3)
    >>> f == random_polynomial(random.Random(0), 3)
    True
    """
    out = Polynomial()
    for _ in range(terms):
        exps = {VarId.x(i): rng.randint(0, max_deg) for i in range(1, k + 1)}
        for j in range(1, params + 1):
            exps[VarId(family, j)] = rng.randint(0, 1)
        c = rng.choice([c for c in range(-coeff_range, coeff_range + 1) if c])
        out = out + Polynomial.monomial(exps, c)
    return out
