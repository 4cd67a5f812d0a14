"""Schubert classes of Gr(k, N+k) as polynomials, computed three ways.

Cohomology lives in ``Z[t][x]`` and K-theory in ``Z[T][x]``; the factor
attached to a pair ``(x_i, j)`` is ``x_i + t_j`` or ``x_i + T_j - x_i T_j``
respectively.  The Bott-Samelson classes

    p_lam = prod_i prod_{j=k+1-i}^{k-i+lam_i} (x_i + t_j)

(and ``P_lam`` with K-theoretic factors) are pushed forward to the
Grassmannian by

* ``Route.OPERATOR``: ``partial_{w0}(p_delta f)`` / ``pi_{w0}(P_delta f)``,
* ``Route.SYMMETRIZER``: the alternating S_k sum of weight products divided
  by the Vandermonde,
* ``Route.DETERMINANT``: the factorial Schur / Grothendieck determinant
  (cohomology goes through the straightening rule first).

Sign convention: ``factorial_schur_det`` is the determinant of
``(x_i|t)^r = prod_{j<=r} (x_i + t_j)`` over the Vandermonde, exactly as
written; the Macdonald polynomial ``s_lam(x|a)`` is its image under
``t -> -t`` and is not built separately.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .combinat import (
    Composition,
    Partition,
    Permutation,
    grassmannian_partition,
    iterate_sk,
    straighten_composition,
)
from .errors import IndexOutOfRange
from .operators import OperatorKind, apply_w, pi_i
from .poly import Family, Polynomial, T, t, x

__all__ = [
    "Theory", "Route", "PushforwardResult", "GrassmannianCheck",
    "build_p_lambda", "build_P_lambda", "build_p_delta", "build_P_delta",
    "falling_product", "factorial_schur_det", "factorial_grothendieck_det",
    "pushforward", "pushforward_class", "double_grothendieck",
    "grothendieck_w0", "check_grassmannian_match", "straighten_pushforward_coh",
    "check_ktheory_straightening",
]


class Theory(enum.Enum):
    COHOMOLOGY = "coh"
    KTHEORY = "k"

    @property
    def param_family(self) -> Family:
        return Family.TCOH if self is Theory.COHOMOLOGY else Family.TK

    @property
    def operator_kind(self) -> OperatorKind:
        if self is Theory.COHOMOLOGY:
            return OperatorKind.DIVIDED_DIFFERENCE
        return OperatorKind.DEMAZURE


class Route(enum.Enum):
    DETERMINANT = "det"
    SYMMETRIZER = "sym"
    OPERATOR = "op"


@dataclass(frozen=True)
class PushforwardResult:
    value: Polynomial
    theory: Theory
    route: Route
    source: Optional[Composition] = None


@lru_cache(maxsize=None)
def _factor(i: int, j: int, theory: Theory) -> Polynomial:
    if theory is Theory.COHOMOLOGY:
        return x(i) + t(j)
    return x(i) + T(j) - x(i) * T(j)


def _parts(lam, k: int) -> tuple[int, ...]:
    if isinstance(lam, (Partition, Composition)):
        lam = lam.parts
    return Composition(tuple(lam)).padded(k)


def _check_bounds(parts: tuple[int, ...], k: int, N: int) -> None:
    # keep every parameter index inside 1..N+k
    for i, p in enumerate(parts, 1):
        if p + k - i > N + k - 1:
            raise IndexOutOfRange(
                f"part {p} in position {i} needs parameter index {p + k - i} > N+k-1 = {N + k - 1}"
            )


def _bs_class(lam, k: int, N: int, theory: Theory) -> Polynomial:
    parts = _parts(lam, k)
    _check_bounds(parts, k, N)
    out = Polynomial(1)
    for i, p in enumerate(parts, 1):
        for j in range(k + 1 - i, k - i + p + 1):
            out = out * _factor(i, j, theory)
    return out


def build_p_lambda(lam, k: int, N: int) -> Polynomial:
    """``prod_{i=1}^k prod_{j=k+1-i}^{k-i+lam_i} (x_i + t_j)``."""
    return _bs_class(lam, k, N, Theory.COHOMOLOGY)


def build_P_lambda(lam, k: int, N: int) -> Polynomial:
    """``prod_{i=1}^k prod_{j=k+1-i}^{k-i+lam_i} (x_i + T_j - x_i T_j)``."""
    return _bs_class(lam, k, N, Theory.KTHEORY)


def _delta_class(k: int, theory: Theory) -> Polynomial:
    if k < 1:
        raise ValueError("k must be positive")
    out = Polynomial(1)
    for i in range(1, k):
        for j in range(1, k - i + 1):
            out = out * _factor(i, j, theory)
    return out


def build_p_delta(k: int) -> Polynomial:
    return _delta_class(k, Theory.COHOMOLOGY)


def build_P_delta(k: int) -> Polynomial:
    return _delta_class(k, Theory.KTHEORY)


def falling_product(i: int, r: int, theory: Theory, n: int | None = None) -> Polynomial:
    """``(x_i|t)^r`` or ``(x_i|T)^r``; ``n`` (= N+k) bounds ``r`` by ``n - 1``."""
    theory = Theory(theory)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n is not None and r > n - 1:
        raise IndexOutOfRange(f"falling product of length {r} exceeds N+k-1 = {n - 1}")
    return _falling(i, r, theory)


@lru_cache(maxsize=4096)
def _falling(i: int, r: int, theory: Theory) -> Polynomial:
    if r == 0:
        return Polynomial(1)
    return _falling(i, r - 1, theory) * _factor(i, r, theory)


def _determinant(parts: tuple[int, ...], k: int, theory: Theory) -> Polynomial:
    # entry (row r, column c) = (x_r|.)^{lam_c + k - c} (1 - x_r)^{c-1} in K-theory
    def entry(r: int, c: int) -> Polynomial:
        e = _falling(r, parts[c - 1] + k - c, theory)
        if theory is Theory.KTHEORY and c > 1:
            e = e * (1 - x(r)) ** (c - 1)
        return e

    table = {(r, c): entry(r, c) for r in range(1, k + 1) for c in range(1, k + 1)}
    numerator = Polynomial()
    for w in iterate_sk(k):
        term = Polynomial(1)
        for c in range(1, k + 1):
            term = term * table[w(c), c]
        numerator = numerator + term if w.sign > 0 else numerator - term
    return numerator.divide_vandermonde(k)


def factorial_schur_det(lam, k: int, N: int) -> Polynomial:
    """``det((x_i|t)^{lam_j + k - j}) / prod_{i<j} (x_i - x_j)`` for any composition."""
    parts = _parts(lam, k)
    _check_bounds(parts, k, N)
    return _determinant(parts, k, Theory.COHOMOLOGY)


def factorial_grothendieck_det(lam, k: int, N: int) -> Polynomial:
    """``det((x_i|T)^{lam_j + k - j} (1 - x_i)^{j-1}) / prod_{i<j} (x_i - x_j)``."""
    parts = _parts(lam, k)
    _check_bounds(parts, k, N)
    return _determinant(parts, k, Theory.KTHEORY)


def _check_support(f: Polynomial, k: int, N: int, theory: Theory) -> None:
    fam = theory.param_family
    for v in f.variables():
        if v.family == Family.X and v.index <= k:
            continue
        if v.family == fam and v.index <= N + k:
            continue
        raise ValueError(f"variable {v} is not allowed in a {theory.value} pushforward with k={k}, N={N}")


def pushforward(
    f: Polynomial, k: int, N: int, theory: Theory, route: Route = Route.OPERATOR
) -> PushforwardResult:
    """Push ``f(x; t)`` (or ``f(x; T)``) from the Bott-Samelson space to Gr(k, N+k)."""
    theory, route = Theory(theory), Route(route)
    _check_support(f, k, N, theory)
    if route is Route.OPERATOR:
        delta = _delta_class(k, theory)
        value = apply_w(delta * f, Permutation.longest(k), theory.operator_kind)
    elif route is Route.SYMMETRIZER:
        value = _symmetrizer(f, k, theory)
    else:
        raise ValueError("the determinant route needs a composition; use pushforward_class")
    return PushforwardResult(value, theory, route)


def _symmetrizer(f: Polynomial, k: int, theory: Theory) -> Polynomial:
    numerator = Polynomial()
    for w in iterate_sk(k):
        weight = Polynomial(1)
        for i in range(1, k):
            for j in range(i + 1, k + 1):
                weight = weight * _factor(w(i), j - i, theory)
                if theory is Theory.KTHEORY:
                    weight = weight * (1 - x(w(j)))
        term = weight * f.permute_x(w.oneline)
        numerator = numerator + term if w.sign > 0 else numerator - term
    return numerator.divide_vandermonde(k)


def pushforward_class(
    lam, k: int, N: int, theory: Theory, route: Route = Route.OPERATOR
) -> PushforwardResult:
    """Pushforward of ``p_lam`` / ``P_lam`` for a composition ``lam`` along ``route``."""
    theory, route = Theory(theory), Route(route)
    parts = _parts(lam, k)
    return PushforwardResult(_pushforward_value(parts, k, N, theory, route), theory, route, Composition(parts))


@lru_cache(maxsize=8192)
def _pushforward_value(parts: tuple[int, ...], k: int, N: int, theory: Theory, route: Route) -> Polynomial:
    if route is Route.DETERMINANT:
        if theory is Theory.COHOMOLOGY:
            return straighten_pushforward_coh(parts, k, N).value
        return factorial_grothendieck_det(parts, k, N)
    f = _bs_class(parts, k, N, theory)
    return pushforward(f, k, N, theory, route).value


def straighten_pushforward_coh(mu, k: int, N: int) -> PushforwardResult:
    """Cohomology pushforward of ``p_mu`` via the straightening rule: 0 or ``sgn * det``."""
    parts = _parts(mu, k)
    _check_bounds(parts, k, N)
    outcome = straighten_composition(parts)
    if outcome.is_zero:
        value = Polynomial()
    else:
        value = outcome.sign * factorial_schur_det(outcome.partition, k, N)
    return PushforwardResult(value, Theory.COHOMOLOGY, Route.DETERMINANT, Composition(parts))


# -- double Grothendieck polynomials ------------------------------------------


def grothendieck_w0(n: int) -> Polynomial:
    """``prod_{i+j<=n} (x_i + T_j - x_i T_j)``."""
    out = Polynomial(1)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            out = out * _factor(i, j, Theory.KTHEORY)
    return out


@lru_cache(maxsize=None)
def _dgroth(w: tuple[int, ...], largest: bool) -> Polynomial:
    n = len(w)
    ascents = [i for i in range(1, n) if w[i - 1] < w[i]]
    if not ascents:
        return grothendieck_w0(n)
    i = ascents[-1] if largest else ascents[0]
    v = list(w)
    v[i - 1], v[i] = v[i], v[i - 1]
    # v s_i = w with l(w) = l(v) - 1, so G_w = pi_i G_v
    return pi_i(_dgroth(tuple(v), largest), i, n)


def double_grothendieck(w: Permutation, n: int | None = None, path: str = "smallest") -> Polynomial:
    """Double Grothendieck polynomial by Demazure descent from ``w0``.

    ``path`` picks which ascent is undone first at each step ("smallest" or
    "largest"); the result does not depend on it.
    """
    if not isinstance(w, Permutation):
        w = Permutation(tuple(w))
    if n is not None and n != w.k:
        raise ValueError(f"permutation {w} is not in S_{n}")
    if path not in ("smallest", "largest"):
        raise ValueError("path must be 'smallest' or 'largest'")
    return _dgroth(w.oneline, path == "largest")


@dataclass(frozen=True)
class GrassmannianCheck:
    partition: Partition
    independent: bool  # no x_{k+1}, ..., x_n occurs
    matches: bool  # equals the factorial Grothendieck determinant

    @property
    def ok(self) -> bool:
        return self.independent and self.matches


def check_grassmannian_match(w: Permutation, k: int) -> GrassmannianCheck:
    """Compare the double Grothendieck polynomial of a k-Grassmannian ``w`` with the determinant."""
    lam = grassmannian_partition(w, k)
    n = w.k
    g = double_grothendieck(w)
    independent = all(not (v.family == Family.X and v.index > k) for v in g.variables())
    matches = independent and g == factorial_grothendieck_det(lam, k, n - k)
    return GrassmannianCheck(lam, independent, matches)


# -- K-theoretic straightening -------------------------------------------------


def check_ktheory_straightening(
    lam, i: int, k: int, N: int, route: Route = Route.OPERATOR
) -> bool:
    """Check the K-theoretic exchange identity at positions ``i, i+1``.

    Both sides are multiplied by ``1 - T_{lam_{i+1}+k-i}`` so that the check
    is a polynomial identity.  Returns True without computing anything when
    ``lam_i >= lam_{i+1}`` (the identity only speaks about ascents).
    """
    parts = _parts(lam, k)
    if not 1 <= i <= k - 1:
        raise ValueError(f"position {i} outside 1..{k - 1}")
    a, b = parts[i - 1], parts[i]
    if a >= b:
        return True

    def push(p) -> Polynomial:
        return pushforward_class(p, k, N, Theory.KTHEORY, route).value

    def swapped(first: int, second: int) -> tuple[int, ...]:
        q = list(parts)
        q[i - 1], q[i] = first, second
        return tuple(q)

    lhs = (1 - T(b + k - i)) * push(parts)
    rhs = Polynomial()
    for j in range(a + 1, b + 1):
        rhs = rhs + (1 - T(j + k - i)) * push(swapped(b, j))
    for j in range(a + 1, b):
        rhs = rhs - (1 - T(j + k - i)) * push(swapped(b - 1, j))
    return lhs == rhs
