"""Torus-fixed points of Gr(k, N+k) and of the Bott-Samelson tower.

The fixed point ``e_lam`` is spanned by the basis vectors with indices
``i_j = j + lam_{k+1-j}``.  Localizing a class there substitutes

* cohomology: ``x_j -> -t_{i_j}``,
* K-theory:   ``x_j -> 1 - E_{i_j}`` and ``T_j -> 1 - E_j^{-1}``,

where ``E_j`` stands for the character ``e^{t_j}``.  Bott-Samelson fixed
points ``e_{lam,w}`` use the permuted indices ``i_{w(j)}``.

Weight ratios are returned as unreduced ``(numerator, denominator)`` pairs
and are only ever evaluated at exact rational points.

>>> from eqschubert.poly import x, t
>>> coh_localize(x(1) + x(2) + t(1) + t(2), FixedPoint.of((), 2, 2))
Polynomial('0')
>>> num, den = coh_weight_ratio((), Permutation((2, 1)), 2, 2)
>>> num.to_text(), den.to_text()
('t1 - t2', 't1 - t2')
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .classes import Theory, pushforward
from .combinat import (
    Partition,
    Permutation,
    contains,
    fixed_point_indices,
    iterate_sk,
    partitions_in_box,
)
from .errors import DegenerateSpecialization
from .poly import E, Family, Polynomial, VarId, t

__all__ = [
    "FixedPoint", "BSFixedPoint", "coh_localize", "k_localize",
    "coh_localize_bs", "k_localize_bs", "coh_weight_ratio", "k_weight_ratio",
    "localize", "random_specialization", "verify_localized_pushforward",
    "predicate_disagreements", "localizations_agree", "vanishes_off_support",
    "MAX_REDRAWS",
]

log = logging.getLogger(__name__)

MAX_REDRAWS = 32


def _partition(lam) -> Partition:
    if isinstance(lam, Partition):
        return lam
    return Partition(tuple(getattr(lam, "parts", lam)))


@dataclass(frozen=True)
class FixedPoint:
    """The coordinate subspace ``e_lam`` of Gr(k, N+k)."""

    lam: Partition
    k: int
    N: int

    def __post_init__(self):
        object.__setattr__(self, "lam", _partition(self.lam))
        parts = self.lam.padded(self.k)
        if parts and parts[0] > self.N:
            raise ValueError(f"{self.lam} does not fit in a {self.k} x {self.N} box")

    @classmethod
    def of(cls, lam, k: int, N: int) -> "FixedPoint":
        return cls(_partition(lam), k, N)

    @property
    def indices(self) -> tuple[int, ...]:
        return fixed_point_indices(self.lam, self.k)


@dataclass(frozen=True)
class BSFixedPoint:
    """The Bott-Samelson fixed point ``e_{lam,w}``."""

    lam: Partition
    w: Permutation
    N: int

    def __post_init__(self):
        object.__setattr__(self, "lam", _partition(self.lam))
        FixedPoint(self.lam, self.w.k, self.N)

    @property
    def k(self) -> int:
        return self.w.k

    @property
    def indices(self) -> tuple[int, ...]:
        """``(i_{w(1)}, ..., i_{w(k)})``."""
        base = fixed_point_indices(self.lam, self.k)
        return tuple(base[self.w(j) - 1] for j in range(1, self.k + 1))

    @property
    def admissible(self) -> bool:
        """``k+1-i <= i_{w(j)} <= N+k`` for all ``j <= i``."""
        idx, k = self.indices, self.k
        return all(
            k + 1 - i <= idx[j - 1] <= self.N + k
            for i in range(1, k + 1)
            for j in range(1, i + 1)
        )

    @property
    def permutation_only_admissible(self) -> bool:
        """The competing criterion that looks at ``w`` alone: ``w(i) >= k+1-i`` for all ``i``."""
        return all(self.w(i) >= self.k + 1 - i for i in range(1, self.k + 1))

    @property
    def predicates_agree(self) -> bool:
        return self.admissible == self.permutation_only_admissible


def _x_targets_coh(indices) -> dict[VarId, Polynomial]:
    return {VarId.x(j): -t(i) for j, i in enumerate(indices, 1)}


def _k_targets(f: Polynomial, indices) -> dict[VarId, Polynomial]:
    mapping = {VarId.x(j): 1 - E(i) for j, i in enumerate(indices, 1)}
    for v in f.variables():
        if v.family == Family.TK:
            mapping[v] = 1 - E(v.index, -1)
    return mapping


def coh_localize(f: Polynomial, p: FixedPoint) -> Polynomial:
    """Substitute ``x_j -> -t_{i_j}``."""
    return f.substitute_many(_x_targets_coh(p.indices))


def k_localize(f: Polynomial, p: FixedPoint) -> Polynomial:
    """Substitute ``x_j -> 1 - E_{i_j}`` and ``T_j -> 1 - E_j^{-1}``."""
    return f.substitute_many(_k_targets(f, p.indices))


def coh_localize_bs(f: Polynomial, q: BSFixedPoint) -> Polynomial:
    return f.substitute_many(_x_targets_coh(q.indices))


def k_localize_bs(f: Polynomial, q: BSFixedPoint) -> Polynomial:
    return f.substitute_many(_k_targets(f, q.indices))


def localize(f: Polynomial, p: FixedPoint, theory: Theory) -> Polynomial:
    if Theory(theory) is Theory.COHOMOLOGY:
        return coh_localize(f, p)
    return k_localize(f, p)


def coh_weight_ratio(lam, w: Permutation, k: int, N: int) -> tuple[Polynomial, Polynomial]:
    """``prod_{i<j} (t_{j-i} - t_{i_{w(i)}})`` over ``prod_{i<j} (t_{i_{w(j)}} - t_{i_{w(i)}})``."""
    idx = BSFixedPoint(_partition(lam), w, N).indices
    if w.k != k:
        raise ValueError(f"{w} is not in S_{k}")
    num, den = Polynomial(1), Polynomial(1)
    for i in range(1, k):
        for j in range(i + 1, k + 1):
            num = num * (t(j - i) - t(idx[i - 1]))
            den = den * (t(idx[j - 1]) - t(idx[i - 1]))
    return num, den


def k_weight_ratio(lam, w: Permutation, k: int, N: int) -> tuple[Polynomial, Polynomial]:
    """``prod_{i<j} (1 - E_{i_{w(i)}} E_{j-i}^{-1})`` over ``prod_{i<j} (1 - E_{i_{w(i)}} E_{i_{w(j)}}^{-1})``."""
    idx = BSFixedPoint(_partition(lam), w, N).indices
    if w.k != k:
        raise ValueError(f"{w} is not in S_{k}")
    num, den = Polynomial(1), Polynomial(1)
    for i in range(1, k):
        for j in range(i + 1, k + 1):
            a = E(idx[i - 1])
            num = num * (1 - a * E(j - i, -1))
            den = den * (1 - a * E(idx[j - 1], -1))
    return num, den


@lru_cache(maxsize=256)
def _pushforward(f: Polynomial, k: int, N: int, theory: Theory) -> Polynomial:
    return pushforward(f, k, N, theory).value


def random_specialization(rng: random.Random, n: int, theory: Theory) -> dict[VarId, Fraction]:
    """Distinct integers for ``t_1..t_n`` or distinct positive rationals for ``E_1..E_n``."""
    if Theory(theory) is Theory.COHOMOLOGY:
        values = rng.sample(range(-10**6, 10**6), n)
        return {VarId.t(i): Fraction(v) for i, v in enumerate(values, 1)}
    seen: set[Fraction] = set()
    while len(seen) < n:
        seen.add(Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6)))
    values = sorted(seen)
    rng.shuffle(values)
    return {VarId.E(i): v for i, v in enumerate(values, 1)}


def _point_value(f: Polynomial, indices, point: Mapping[VarId, Fraction], theory: Theory) -> Fraction:
    # evaluate f at a Bott-Samelson fixed point without symbolic substitution
    values: dict[VarId, Fraction] = {}
    if theory is Theory.COHOMOLOGY:
        for j, i in enumerate(indices, 1):
            values[VarId.x(j)] = -point[VarId.t(i)]
        for v in f.variables():
            if v.family == Family.TCOH:
                values[v] = point[v]
    else:
        for j, i in enumerate(indices, 1):
            values[VarId.x(j)] = 1 - point[VarId.E(i)]
        for v in f.variables():
            if v.family == Family.TK:
                values[v] = 1 - 1 / point[VarId.E(v.index)]
    return f.evaluate(values)


def verify_localized_pushforward(
    f: Polynomial,
    lam,
    k: int,
    N: int,
    theory: Theory,
    trials: int = 5,
    seed: int = 0,
) -> bool:
    """Compare the localized pushforward of ``f`` at ``e_lam`` with the fixed-point sum.

    The left side localizes ``pushforward(f)`` symbolically and evaluates it;
    the right side sums ``ratio(w) * f(e_{lam,w})`` over all of S_k, evaluated
    numerically.  Each trial uses a fresh random specialization; draws that
    make some denominator vanish are redrawn up to ``MAX_REDRAWS`` times.
    """
    theory = Theory(theory)
    p = FixedPoint.of(lam, k, N)
    lhs_poly = localize(_pushforward(f, k, N, theory), p, theory)
    ratio = coh_weight_ratio if theory is Theory.COHOMOLOGY else k_weight_ratio
    cases = []
    for w in iterate_sk(k):
        q = BSFixedPoint(p.lam, w, N)
        num, den = ratio(p.lam, w, k, N)
        cases.append((q.indices, num, den))

    rng = random.Random(seed)
    for trial in range(trials):
        for _ in range(MAX_REDRAWS):
            point = random_specialization(rng, N + k, theory)
            dens = [den.evaluate(point) for _, _, den in cases]
            if all(dens):
                break
        else:
            raise DegenerateSpecialization(
                f"no usable specialization after {MAX_REDRAWS} draws (seed {seed}, trial {trial})"
            )
        lhs = lhs_poly.evaluate(point)
        rhs = sum(
            (num.evaluate(point) / d * _point_value(f, idx, point, theory)
             for (idx, num, _), d in zip(cases, dens)),
            Fraction(0),
        )
        if lhs != rhs:
            log.debug("mismatch lam=%s k=%d N=%d seed=%d trial=%d", p.lam, k, N, seed, trial)
            return False
    return True


def predicate_disagreements(k: int, N: int) -> list[BSFixedPoint]:
    """All ``(lam, w)`` where the index criterion and the permutation-only criterion differ."""
    out = []
    for lam in partitions_in_box(k, N):
        for w in iterate_sk(k):
            q = BSFixedPoint(lam, w, N)
            if not q.predicates_agree:
                out.append(q)
    return out


def localizations_agree(f: Polynomial, g: Polynomial, k: int, N: int, theory: Theory) -> bool:
    """True when ``f`` and ``g`` localize identically at every ``e_mu``, ``mu`` in the box."""
    return all(
        localize(f, FixedPoint.of(mu, k, N), theory) == localize(g, FixedPoint.of(mu, k, N), theory)
        for mu in partitions_in_box(k, N)
    )


def vanishes_off_support(cls: Polynomial, lam, k: int, N: int, theory: Theory) -> bool:
    """Check that ``cls|_{e_mu}`` is zero exactly when ``mu`` does not contain ``lam``."""
    lam = _partition(lam)
    for mu in partitions_in_box(k, N):
        value = localize(cls, FixedPoint(mu, k, N), theory)
        if value.is_zero() == contains(mu.parts, lam.parts):
            return False
    return True
