import random
from fractions import Fraction

import pytest
import sympy

from eqschubert import localize as loc
from eqschubert.classes import Route, Theory, build_P_lambda, build_p_lambda, factorial_schur_det, pushforward_class
from eqschubert.combinat import Partition, Permutation, iterate_sk, partitions_in_box
from eqschubert.errors import DegenerateSpecialization
from eqschubert.localize import (
    BSFixedPoint,
    FixedPoint,
    coh_localize,
    coh_weight_ratio,
    k_localize,
    k_weight_ratio,
    localizations_agree,
    predicate_disagreements,
    random_specialization,
    verify_localized_pushforward,
)
from eqschubert.poly import E, Polynomial, T, VarId, t, x

from conftest import to_sympy

COH, K = Theory.COHOMOLOGY, Theory.KTHEORY


def test_fixed_point():
    p = FixedPoint.of((2, 1), 2, 2)
    assert p.indices == (2, 4)
    with pytest.raises(ValueError):
        FixedPoint.of((3,), 2, 2)


def test_coh_localize_examples():
    p = FixedPoint.of((), 2, 2)
    assert coh_localize(Polynomial(1), p) == 1
    assert coh_localize(x(1) + x(2) + t(1) + t(2), p).is_zero


def test_k_localize_examples():
    assert k_localize(Polynomial(1), FixedPoint.of((), 2, 2)) == 1
    for m in range(3):
        got = k_localize(x(1) + T(1) - x(1) * T(1), FixedPoint.of((m,), 1, 2))
        # oracle: sympy substitution x1 -> 1 - E_{1+m}, T1 -> 1 - 1/E1
        e1, em = sympy.Symbol("E1"), sympy.Symbol(f"E{1 + m}")
        x1, T1 = sympy.symbols("x1 T1")
        want = sympy.expand((x1 + T1 - x1 * T1).subs({x1: 1 - em, T1: 1 - 1 / e1}, simultaneous=True))
        assert sympy.expand(to_sympy(got) - want) == 0
        assert got == 1 - E(1 + m) * E(1, -1)


def test_weight_ratio_examples():
    assert coh_weight_ratio((), Permutation((1,)), 1, 2) == (1, 1)
    assert k_weight_ratio((), Permutation((1,)), 1, 2) == (1, 1)
    num, den = coh_weight_ratio((), Permutation((2, 1)), 2, 2)
    assert num == t(1) - t(2) and den == t(1) - t(2)
    num, den = k_weight_ratio((), Permutation((2, 1)), 2, 2)
    assert num == 1 - E(2) * E(1, -1) and den == 1 - E(2) * E(1, -1)
    # at the identity the single numerator factor is 1 - E1 E1^-1 = 0
    num, den = k_weight_ratio((), Permutation((1, 2)), 2, 2)
    assert num.is_zero and den == 1 - E(1) * E(2, -1)


@pytest.mark.parametrize("k,N", [(2, 2), (3, 2), (3, 3)])
def test_admissibility_matches_vanishing_numerator(k, N):
    rng = random.Random(11)
    for lam in partitions_in_box(k, N):
        for w in iterate_sk(k):
            q = BSFixedPoint(lam, w, N)
            num, _ = coh_weight_ratio(lam, w, k, N)
            knum, _ = k_weight_ratio(lam, w, k, N)
            assert num.is_zero == (not q.admissible)
            assert knum.is_zero == (not q.admissible)
            point = random_specialization(rng, N + k, COH)
            if not q.admissible:
                assert num.evaluate(point) == 0


def test_predicate_disagreements_are_reported():
    assert predicate_disagreements(1, 3) == []
    found = predicate_disagreements(2, 3)
    assert found and all(q.admissible != q.permutation_only_admissible for q in found)
    # at lam = empty the indices equal the positions, so both criteria coincide
    assert all(q.lam != Partition(()) for q in found)


def test_random_specialization_is_distinct():
    rng = random.Random(0)
    for theory in (COH, K):
        point = random_specialization(rng, 6, theory)
        assert len(set(point.values())) == 6
        if theory is K:
            assert all(v > 0 and isinstance(v, Fraction) for v in point.values())


@pytest.mark.parametrize("theory", [COH, K])
def test_verify_unit(theory):
    assert verify_localized_pushforward(Polynomial(1), (), 2, 2, theory, trials=5, seed=1)


def test_verify_small_classes():
    for lam in partitions_in_box(2, 2):
        assert verify_localized_pushforward(build_p_lambda(lam, 2, 2), lam, 2, 2, COH, trials=5, seed=3)
        assert verify_localized_pushforward(build_P_lambda(lam, 2, 2), lam, 2, 2, K, trials=5, seed=3)


def test_verify_general_f():
    f = x(1) ** 2 - 2 * x(1) * x(2) * t(3) + 5
    for mu in partitions_in_box(2, 2):
        assert verify_localized_pushforward(f, mu, 2, 2, COH, trials=3, seed=9)


def test_verify_detects_wrong_pushforward(monkeypatch):
    real = loc._pushforward.__wrapped__
    monkeypatch.setattr(loc, "_pushforward", lambda f, k, N, th: real(f, k, N, th) + t(1))
    assert not verify_localized_pushforward(build_p_lambda((1,), 2, 2), (1,), 2, 2, COH, trials=2, seed=0)


def test_degenerate_specialization(monkeypatch):
    monkeypatch.setattr(loc, "random_specialization", lambda rng, n, th: {VarId.t(i): Fraction(1) for i in range(1, n + 1)})
    with pytest.raises(DegenerateSpecialization):
        verify_localized_pushforward(Polynomial(1), (), 2, 2, COH, trials=1, seed=0)


def test_injectivity_on_route_pairs():
    for mu in [(0, 2), (1, 2), (2, 1)]:
        a = pushforward_class(mu, 2, 2, COH, Route.OPERATOR).value
        b = pushforward_class(mu, 2, 2, COH, Route.DETERMINANT).value
        assert localizations_agree(a, b, 2, 2, COH) and a == b
    # distinct classes are told apart by some fixed point
    assert not localizations_agree(factorial_schur_det((1,), 2, 2), factorial_schur_det((2,), 2, 2), 2, 2, COH)
