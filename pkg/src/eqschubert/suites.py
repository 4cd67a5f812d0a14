"""Verification sweeps behind ``eqschubert verify``.

Each suite expands into a deterministic list of cases.  A case is a label
plus the arguments of a top-level checker, so the list can be farmed out to
worker processes and the results read back in order.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .classes import (
    Route,
    Theory,
    build_P_lambda,
    build_p_lambda,
    check_grassmannian_match,
    check_ktheory_straightening,
    double_grothendieck,
    factorial_grothendieck_det,
    factorial_schur_det,
    pushforward_class,
)
from .combinat import (
    Permutation,
    compositions_in_box,
    contains,
    is_grassmannian,
    iterate_sk,
    partitions_in_box,
    reduced_words,
)
from .localize import FixedPoint, localizations_agree, localize, verify_localized_pushforward
from .operators import OperatorKind, apply_w, apply_word, jacobi_symmetrize, partial_i, pi_i
from .poly import x
from .sampling import random_polynomial

__all__ = ["SUITES", "Case", "SuiteReport", "build_cases", "run_suite", "worker_count"]

SUITES = ("operators", "routes-coh", "routes-k", "straighten-k", "localize", "vanishing", "dgroth")


@dataclass(frozen=True)
class Case:
    label: str
    check: str
    args: tuple


@dataclass
class SuiteReport:
    suite: str
    results: list[tuple[Case, bool]] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(ok for _, ok in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def first_failure(self) -> Case | None:
        return next((c for c, ok in self.results if not ok), None)


# -- individual checks ---------------------------------------------------------


def _operator_identities(k: int, seed: int) -> bool:
    rng = random.Random(seed)
    f = random_polynomial(rng, k, params=2)
    g = random_polynomial(rng, k, params=2)
    dd, dm = OperatorKind.DIVIDED_DIFFERENCE, OperatorKind.DEMAZURE
    for i in range(1, k):
        d = partial_i(f, i, k)
        p = pi_i(f, i, k)
        if partial_i(d, i, k) or pi_i(p, i, k) != p:
            return False
        if p != f + (1 - x(i)) * d:
            return False
        if partial_i(f * g, i, k) != d * g + f.swap_x(i) * partial_i(g, i, k):
            return False
    for i in range(1, k - 1):
        for kind in (dd, dm):
            if apply_word(f, (i, i + 1, i), kind, k) != apply_word(f, (i + 1, i, i + 1), kind, k):
                return False
    for i in range(1, k):
        for j in range(i + 2, k):
            for kind in (dd, dm):
                if apply_word(f, (i, j), kind, k) != apply_word(f, (j, i), kind, k):
                    return False
    for kind in (dd, dm):
        if jacobi_symmetrize(f, k, kind) != apply_w(f, Permutation.longest(k), kind):
            return False
    return True


def _word_independence(oneline: tuple[int, ...], seed: int) -> bool:
    w = Permutation(oneline)
    f = random_polynomial(random.Random(seed), w.k, params=1)
    for kind in OperatorKind:
        values = {apply_word(f, word, kind, w.k) for word in reduced_words(w)}
        if len(values) != 1:
            return False
    return True


def _routes_coh(parts: tuple[int, ...], k: int, N: int) -> bool:
    th = Theory.COHOMOLOGY
    vals = [pushforward_class(parts, k, N, th, r).value for r in Route]
    if any(v != vals[0] for v in vals):
        return False
    # the determinant route and the operator route also agree after localization
    return localizations_agree(vals[0], vals[2], k, N, th) and vals[0].is_symmetric(k)


def _routes_k(parts: tuple[int, ...], k: int, N: int) -> bool:
    th = Theory.KTHEORY
    vals = [pushforward_class(parts, k, N, th, r).value for r in Route]
    return all(v == vals[0] for v in vals) and vals[0].is_symmetric(k)


def _straighten_k(parts: tuple[int, ...], i: int, k: int, N: int) -> bool:
    return check_ktheory_straightening(parts, i, k, N)


def _localize(parts: tuple[int, ...], mu: tuple[int, ...], k: int, N: int, theory: str, trials: int, seed: int) -> bool:
    th = Theory(theory)
    build = build_p_lambda if th is Theory.COHOMOLOGY else build_P_lambda
    return verify_localized_pushforward(build(parts, k, N), mu, k, N, th, trials, seed)


def _vanishing(parts: tuple[int, ...], k: int, N: int, theory: str) -> bool:
    th = Theory(theory)
    det = factorial_schur_det if th is Theory.COHOMOLOGY else factorial_grothendieck_det
    cls = det(parts, k, N)
    for mu in partitions_in_box(k, N):
        value = localize(cls, FixedPoint(mu, k, N), th)
        if contains(mu.parts, parts) == value.is_zero:
            return False
    return True


def _dgroth(oneline: tuple[int, ...]) -> bool:
    w = Permutation(oneline)
    if double_grothendieck(w) != double_grothendieck(w, path="largest"):
        return False
    for k in range(1, w.k):
        if is_grassmannian(w, k) and not check_grassmannian_match(w, k).ok:
            return False
    return True


_CHECKS: dict[str, Callable[..., bool]] = {
    "operator_identities": _operator_identities,
    "word_independence": _word_independence,
    "routes_coh": _routes_coh,
    "routes_k": _routes_k,
    "straighten_k": _straighten_k,
    "localize": _localize,
    "vanishing": _vanishing,
    "dgroth": _dgroth,
}


def _run_case(case: Case) -> bool:
    return _CHECKS[case.check](*case.args)


# -- case lists ------------------------------------------------------------------


def _fmt(parts) -> str:
    return ",".join(map(str, parts))


def build_cases(suite: str, k: int, N: int, trials: int = 100, seed: int = 0) -> list[Case]:
    """Cases for ``suite`` over ``k' = 1..k`` (``n = 1..k+1`` for dgroth) and fixed ``N``."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    cases: list[Case] = []
    if suite == "operators":
        for kk in range(2, max(k, 2) + 1):
            for s in range(trials):
                cases.append(Case(f"k={kk} seed={seed + s}", "operator_identities", (kk, seed + s)))
        for w in iterate_sk(max(k, 1)):
            cases.append(Case(f"w={w}", "word_independence", (w.oneline, seed)))
    elif suite == "routes-coh":
        for kk in range(1, k + 1):
            for mu in compositions_in_box(kk, N):
                cases.append(Case(f"k={kk} N={N} mu={mu}", "routes_coh", (mu.parts, kk, N)))
    elif suite == "routes-k":
        for kk in range(1, k + 1):
            for lam in partitions_in_box(kk, N):
                cases.append(Case(f"k={kk} N={N} lam={lam}", "routes_k", (lam.parts, kk, N)))
    elif suite == "straighten-k":
        for kk in range(2, k + 1):
            for mu in compositions_in_box(kk, N):
                for i in range(1, kk):
                    cases.append(Case(f"k={kk} N={N} lam={mu} i={i}", "straighten_k", (mu.parts, i, kk, N)))
    elif suite == "localize":
        per = max(1, min(trials, 5))
        for theory in ("coh", "k"):
            for kk in range(1, k + 1):
                for lam in partitions_in_box(kk, N):
                    for mu in partitions_in_box(kk, N):
                        cases.append(Case(
                            f"{theory} k={kk} N={N} lam={lam} mu={mu} seed={seed}",
                            "localize", (lam.parts, mu.parts, kk, N, theory, per, seed),
                        ))
    elif suite == "vanishing":
        for theory in ("coh", "k"):
            for kk in range(1, k + 1):
                for lam in partitions_in_box(kk, N):
                    cases.append(Case(f"{theory} k={kk} N={N} lam={lam}", "vanishing", (lam.parts, kk, N, theory)))
    elif suite == "dgroth":
        for n in range(1, k + 2):
            for w in iterate_sk(n):
                cases.append(Case(f"w={w}", "dgroth", (w.oneline,)))
    return cases


def worker_count() -> int:
    """Worker processes allowed by ``SCHUBERT_THREADS`` (unset: 1, ``0``: all cores)."""
    raw = os.environ.get("SCHUBERT_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n < 0:
        raise ValueError("SCHUBERT_THREADS must be nonnegative")
    return n or (os.cpu_count() or 1)


def run_suite(suite: str, k: int, N: int, trials: int = 100, seed: int = 0, workers: int | None = None) -> SuiteReport:
    cases = build_cases(suite, k, N, trials, seed)
    workers = worker_count() if workers is None else workers
    report = SuiteReport(suite)
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_case, cases, chunksize=max(1, len(cases) // (4 * workers))))
    else:
        outcomes = [_run_case(c) for c in cases]
    report.results = list(zip(cases, outcomes))
    return report
