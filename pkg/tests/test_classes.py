import pytest
import sympy

from eqschubert.classes import (
    Route,
    Theory,
    build_P_delta,
    build_P_lambda,
    build_p_delta,
    build_p_lambda,
    check_grassmannian_match,
    check_ktheory_straightening,
    double_grothendieck,
    factorial_grothendieck_det,
    factorial_schur_det,
    falling_product,
    pushforward,
    pushforward_class,
    straighten_pushforward_coh,
)
from eqschubert.combinat import Permutation, grassmannian_permutation, is_grassmannian, iterate_sk, partitions_in_box
from eqschubert.errors import IndexOutOfRange
from eqschubert.poly import Family, Polynomial, T, t, x

from conftest import from_sympy

COH, K = Theory.COHOMOLOGY, Theory.KTHEORY


def kfac(i, j):
    return x(i) + T(j) - x(i) * T(j)


class TestBuilders:
    def test_p_lambda(self):
        assert build_p_lambda((), 2, 2) == 1
        assert build_p_lambda((1,), 1, 1) == x(1) + t(1)
        assert build_p_lambda((2, 1), 2, 2) == (x(1) + t(2)) * (x(1) + t(3)) * (x(2) + t(1))

    def test_P_lambda(self):
        assert build_P_lambda((), 2, 2) == 1
        assert build_P_lambda((1,), 1, 1) == kfac(1, 1)
        assert build_P_lambda((1, 1), 2, 1) == kfac(1, 2) * kfac(2, 1)

    def test_delta(self):
        assert build_p_delta(1) == 1 and build_P_delta(1) == 1
        assert build_p_delta(2) == x(1) + t(1)
        assert build_P_delta(2) == kfac(1, 1)
        assert build_p_delta(3) == (x(1) + t(1)) * (x(1) + t(2)) * (x(2) + t(1))

    def test_index_bounds(self):
        with pytest.raises(IndexOutOfRange):
            build_p_lambda((3,), 1, 2)
        with pytest.raises(IndexOutOfRange):
            factorial_schur_det((3, 0), 2, 2)
        with pytest.raises(ValueError):
            build_p_lambda((1, 1, 1), 2, 3)

    def test_falling_product(self):
        assert falling_product(1, 0, COH) == 1
        assert falling_product(1, 2, COH) == (x(1) + t(1)) * (x(1) + t(2))
        assert falling_product(1, 1, K) == kfac(1, 1)
        with pytest.raises(IndexOutOfRange):
            falling_product(1, 4, COH, n=4)


class TestDeterminants:
    def test_small_cases(self):
        assert factorial_schur_det((), 3, 2) == 1
        assert factorial_schur_det((1,), 1, 1) == x(1) + t(1)
        assert factorial_schur_det((1, 0), 2, 2) == x(1) + x(2) + t(1) + t(2)
        assert factorial_grothendieck_det((), 1, 1) == 1
        assert factorial_grothendieck_det((1,), 1, 1) == kfac(1, 1)

    def test_schur_against_sympy_determinant(self):
        # oracle: sympy determinant and cancellation for lam=(2,1), k=2
        x1, x2, t1, t2, t3 = sympy.symbols("x1 x2 t1 t2 t3")
        ts = [t1, t2, t3]

        def fall(v, r):
            return sympy.prod([v + ts[j] for j in range(r)])

        lam = (2, 1)
        m = sympy.Matrix(2, 2, lambda i, j: fall((x1, x2)[i], lam[j] + 2 - (j + 1)))
        want = sympy.cancel(m.det() / (x1 - x2))
        assert factorial_schur_det(lam, 2, 2) == from_sympy(want)

    def test_grothendieck_against_sympy_determinant(self):
        x1, x2, T1, T2, T3 = sympy.symbols("x1 x2 T1 T2 T3")
        Ts = [T1, T2, T3]

        def fall(v, r):
            return sympy.prod([v + Ts[j] - v * Ts[j] for j in range(r)])

        lam = (2, 1)
        xs = (x1, x2)
        m = sympy.Matrix(2, 2, lambda i, j: fall(xs[i], lam[j] + 2 - (j + 1)) * (1 - xs[i]) ** j)
        want = sympy.cancel(m.det() / (x1 - x2))
        assert factorial_grothendieck_det(lam, 2, 2) == from_sympy(want)

    def test_stability_in_N(self):
        for lam in partitions_in_box(2, 2):
            assert factorial_schur_det(lam, 2, 2) == factorial_schur_det(lam, 2, 4)

    def test_degree(self):
        for lam in partitions_in_box(3, 2):
            value = pushforward_class(lam, 3, 2, COH, Route.OPERATOR).value
            assert value.is_homogeneous(lam.size)


class TestPushforward:
    def test_unit(self):
        for k in (1, 2, 3):
            assert pushforward(Polynomial(1), k, 2, COH).value == 1
            assert pushforward(Polynomial(1), k, 2, K).value == 1

    def test_operator_route_small(self):
        # oracle: sympy divided difference of (x1+t1)(x1+t2)
        x1, x2, t1, t2 = sympy.symbols("x1 x2 t1 t2")
        # p_delta * p_(1,0) at k=2
        g = (x1 + t1) * (x1 + t2)
        want = sympy.cancel((g - g.subs({x1: x2, x2: x1}, simultaneous=True)) / (x1 - x2))
        assert want == x1 + x2 + t1 + t2
        value = pushforward(build_p_lambda((1, 0), 2, 2), 2, 2, COH).value
        assert value == from_sympy(want)

    def test_support_checked(self):
        with pytest.raises(ValueError):
            pushforward(x(3), 2, 2, COH)
        with pytest.raises(ValueError):
            pushforward(T(1), 2, 2, COH)
        with pytest.raises(ValueError):
            pushforward(t(5), 2, 2, COH)
        with pytest.raises(ValueError):
            pushforward(x(1), 2, 2, COH, Route.DETERMINANT)

    @pytest.mark.parametrize("theory", [COH, K])
    def test_symmetric_results(self, theory):
        for lam in [(0, 2), (1, 2, 0), (2, 0, 1)]:
            for route in Route:
                assert pushforward_class(lam, len(lam), 2, theory, route).value.is_symmetric(len(lam))

    def test_general_f_routes_agree(self):
        f = x(1) ** 2 * x(2) + 3 * t(2) * x(2) - 1
        assert pushforward(f, 2, 2, COH, Route.OPERATOR).value == pushforward(f, 2, 2, COH, Route.SYMMETRIZER).value
        g = x(1) * T(1) - x(2) ** 2
        assert pushforward(g, 2, 2, K, Route.OPERATOR).value == pushforward(g, 2, 2, K, Route.SYMMETRIZER).value


class TestStraightening:
    @pytest.mark.parametrize("N", [2, 3])
    def test_examples(self, N):
        assert straighten_pushforward_coh((1, 2), 2, N).value.is_zero
        assert straighten_pushforward_coh((0, 2), 2, N).value == -factorial_schur_det((1, 1), 2, N)
        assert straighten_pushforward_coh((2, 1), 2, N).value == factorial_schur_det((2, 1), 2, N)

    def test_k_examples(self):
        assert check_ktheory_straightening((0, 1), 1, 2, 2)
        assert check_ktheory_straightening((0, 2), 1, 2, 2)
        assert check_ktheory_straightening((2, 1), 1, 2, 2)

    def test_k_identity_is_not_vacuous(self):
        # perturbing one pushforward on the right breaks the identity
        lam, k, N = (0, 2), 2, 2
        lhs = (1 - T(3)) * pushforward_class(lam, k, N, K).value
        rhs_terms = (
            (1 - T(2)) * pushforward_class((2, 1), k, N, K).value
            + (1 - T(3)) * pushforward_class((2, 2), k, N, K).value
            - (1 - T(2)) * pushforward_class((1, 1), k, N, K).value
        )
        assert lhs == rhs_terms
        assert lhs != rhs_terms + x(1) * x(2)


class TestDoubleGrothendieck:
    def test_base_and_identity(self):
        assert double_grothendieck(Permutation((2, 1))) == kfac(1, 1)
        assert double_grothendieck(Permutation((1, 2))) == 1

    def test_identity_n2_against_sympy(self):
        x1, x2, T1 = sympy.symbols("x1 x2 T1")
        g = (1 - x2) * (x1 + T1 - x1 * T1)
        want = sympy.cancel((g - g.subs({x1: x2, x2: x1}, simultaneous=True)) / (x1 - x2))
        assert want == 1

    def test_path_independence(self):
        for n in (2, 3, 4):
            for w in iterate_sk(n):
                assert double_grothendieck(w) == double_grothendieck(w, path="largest")

    def test_grassmannian_match(self):
        for n in (2, 3, 4):
            for w in iterate_sk(n):
                for k in range(1, n):
                    if is_grassmannian(w, k):
                        check = check_grassmannian_match(w, k)
                        assert check.independent and check.matches, (w, k)

    def test_non_grassmannian_rejected(self):
        w = Permutation((3, 1, 2))
        with pytest.raises(ValueError):
            check_grassmannian_match(w, 2)
        assert Family.X in {v.family for v in double_grothendieck(w).variables()}

    def test_T_zero_specialization(self):
        # classical Grothendieck polynomial of the Grassmannian permutation
        for lam in partitions_in_box(2, 2):
            w = grassmannian_permutation(lam, 2, 4)
            det = factorial_grothendieck_det(lam, 2, 2).specialize_family(Family.TK)
            assert det == double_grothendieck(w).specialize_family(Family.TK)
