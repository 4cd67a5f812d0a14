"""Divided differences and isobaric Demazure operators on the x-alphabet.

``partial_i(f) = (f - s_i f) / (x_i - x_{i+1})`` and
``pi_i(f) = partial_i((1 - x_{i+1}) f)``.  Both act linearly over the
equivariant parameters (t, T, E are never permuted).

Words are composed right to left: ``apply_word(f, (i1, ..., il), kind)`` is
``op_{i1}(op_{i2}(... op_{il}(f)))``, so the last letter acts first.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .combinat import Permutation, iterate_sk
from .errors import NotDivisible
from .poly import Polynomial, x

__all__ = [
    "OperatorKind", "partial_i", "pi_i", "apply_word", "apply_w",
    "jacobi_symmetrize",
]


class OperatorKind(enum.Enum):
    DIVIDED_DIFFERENCE = "divided_difference"
    DEMAZURE = "demazure"


def _check_index(i: int, k: int) -> None:
    if not 1 <= i <= k - 1:
        raise ValueError(f"operator index {i} outside 1..{k - 1}")


def partial_i(f: Polynomial, i: int, k: int) -> Polynomial:
    _check_index(i, k)
    try:
        return (f - f.swap_x(i)).exact_divide_linear(i, i + 1)
    except NotDivisible as exc:  # pragma: no cover - antisymmetric numerators always divide
        raise RuntimeError(f"internal error: divided difference {i} left a remainder") from exc


def pi_i(f: Polynomial, i: int, k: int) -> Polynomial:
    _check_index(i, k)
    return partial_i((1 - x(i + 1)) * f, i, k)


_OPS = {OperatorKind.DIVIDED_DIFFERENCE: partial_i, OperatorKind.DEMAZURE: pi_i}


def apply_word(
    f: Polynomial, word: Sequence[int], kind: OperatorKind, k: int | None = None
) -> Polynomial:
    """Compose the operators of ``word`` right to left.

    ``k`` defaults to one more than the largest letter.
    """
    if k is None:
        k = max(word, default=0) + 1
    op = _OPS[OperatorKind(kind)]
    for i in reversed(tuple(word)):
        f = op(f, i, k)
    return f


def apply_w(f: Polynomial, w: Permutation, kind: OperatorKind) -> Polynomial:
    """``partial_w`` or ``pi_w`` along the bubble-sort reduced word of ``w``."""
    return apply_word(f, w.reduced_word(), kind, w.k)


def jacobi_symmetrize(f: Polynomial, k: int, kind: OperatorKind) -> Polynomial:
    """Full symmetrizer over S_k computed as one alternating sum over the Vandermonde.

    For divided differences this is ``sum_w w(f / V)``; for Demazure operators
    ``sum_w w(f * prod_{i<j} (1 - x_j) / V)``.  Since ``w(V) = sgn(w) V`` both
    reduce to ``(sum_w sgn(w) w(g)) / V``, with no rational functions involved.
    """
    kind = OperatorKind(kind)
    g = f
    if kind is OperatorKind.DEMAZURE:
        for j in range(2, k + 1):
            g = g * (1 - x(j)) ** (j - 1)
    numerator = Polynomial()
    for w in iterate_sk(k):
        term = g.permute_x(w.oneline)
        numerator = numerator + term if w.sign > 0 else numerator - term
    try:
        return numerator.divide_vandermonde(k)
    except NotDivisible as exc:  # pragma: no cover
        raise RuntimeError("internal error: alternating sum was not skew-symmetric") from exc
