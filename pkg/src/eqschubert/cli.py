"""Command-line interface: ``eqschubert <command> [flags]``.

Exit codes: 0 success, 1 verification failure or route mismatch, 2 invalid
input.  All output is deterministic for a fixed ``--seed`` (bench timings
aside).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
import time
from dataclasses import dataclass, replace
from math import factorial
from typing import Sequence

from .classes import (
    Route,
    Theory,
    build_P_lambda,
    build_p_lambda,
    check_ktheory_straightening,
    double_grothendieck,
    factorial_grothendieck_det,
    factorial_schur_det,
    pushforward,
    pushforward_class,
    straighten_pushforward_coh,
)
from .combinat import Composition, Partition, Permutation, parse_sequence, partitions_in_box, straighten_composition
from .localize import FixedPoint, localize
from .poly import Polynomial
from .suites import SUITES, run_suite

COMMANDS = ("schur", "groth", "push", "straighten", "dgroth", "localize", "verify", "bench")
ROUTE_ORDER = (Route.DETERMINANT, Route.SYMMETRIZER, Route.OPERATOR)


class UsageError(Exception):
    """Invalid command-line input; reported with exit code 2."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    k: int
    N: int
    lam: Composition
    theory: Theory
    route: str
    format: str
    seed: int
    trials: int
    perm: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    suite: str | None = None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eqschubert", description="Equivariant Schubert classes of Gr(k, N+k).")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--k", type=int, default=None, help="dimension of the subspaces (default: length of --lam, at least 1)")
    p.add_argument("--n-cap", type=int, default=None, dest="n_cap",
                   help="N, so that the ambient space has dimension N+k (default: smallest valid)")
    p.add_argument("--lam", default="", help="comma-separated parts, e.g. 2,1,0")
    p.add_argument("--theory", choices=("coh", "k"), default="coh")
    p.add_argument("--route", choices=("det", "sym", "op", "all"), default=None)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--perm", default=None, help="one-line permutation for dgroth, e.g. 2,1,3")
    p.add_argument("--mu", default=None, help="fixed point partition for localize")
    p.add_argument("--suite", choices=SUITES, default=None, help="suite for verify")
    return p


def _minimal_N(parts: Sequence[int]) -> int:
    return max([1] + [p - i for i, p in enumerate(parts)])


def make_config(ns: argparse.Namespace) -> CliConfig:
    try:
        lam = parse_sequence(ns.lam)
        perm = parse_sequence(ns.perm) if ns.perm is not None else None
        mu = parse_sequence(ns.mu) if ns.mu is not None else None
        comp = Composition(lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    k = ns.k if ns.k is not None else max(1, len(lam))
    if k < 1:
        raise UsageError("--k must be at least 1")
    if len(lam) > k and any(lam[k:]):
        raise UsageError(f"--lam has more than k={k} nonzero parts")
    parts = comp.padded(k)
    if ns.command in ("verify", "bench"):
        N = ns.n_cap if ns.n_cap is not None else (3 if ns.command == "verify" else 2)
    else:
        floor = _minimal_N(parts)
        if mu:
            floor = max(floor, mu[0])
        N = ns.n_cap if ns.n_cap is not None else floor
    if N < 1:
        raise UsageError("--n-cap must be at least 1")
    if ns.seed < -(2**63) or ns.seed >= 2**64:
        raise UsageError("--seed must fit in 64 bits")
    if ns.trials < 1:
        raise UsageError("--trials must be positive")
    if ns.command in ("schur", "groth", "localize"):
        if not comp.is_partition():
            raise UsageError(f"--lam {ns.lam} is not a partition (parts must be weakly decreasing)")
        if parts and parts[0] > N:
            raise UsageError(f"largest part {parts[0]} exceeds --n-cap {N}")
    if ns.command == "localize":
        if mu is None:
            raise UsageError("localize needs --mu")
        if any(a < b for a, b in zip(mu, mu[1:])) or any(m < 0 for m in mu):
            raise UsageError(f"--mu {ns.mu} is not a partition")
        if len([m for m in mu if m]) > k or (mu and mu[0] > N):
            raise UsageError(f"--mu {ns.mu} does not fit in the {k} x {N} box")
    if ns.command == "dgroth" and perm is None:
        raise UsageError("dgroth needs --perm")
    if ns.command == "verify" and ns.suite is None:
        raise UsageError("verify needs --suite")
    default_route = {"push": "op"}.get(ns.command, "det")
    return CliConfig(
        command=ns.command, k=k, N=N, lam=Composition(parts), theory=Theory(ns.theory),
        route=ns.route or default_route, format=ns.format, seed=ns.seed, trials=ns.trials,
        perm=perm, mu=mu, suite=ns.suite,
    )


# -- formatting ------------------------------------------------------------------


def render(p: Polynomial, fmt: str) -> str:
    if fmt == "latex":
        return p.to_latex()
    if fmt == "json":
        return json.dumps(p.to_json(), sort_keys=True)
    return p.to_text()


def _emit_routes(values: dict[Route, Polynomial], fmt: str, out) -> int:
    match = len(set(values.values())) == 1
    if fmt == "json":
        doc = {
            "routes": {r.value: v.to_json() for r, v in values.items()},
            "match": match,
        }
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        for r, v in values.items():
            print(f"{r.value}: {render(v, fmt)}", file=out)
        print("MATCH" if match else "MISMATCH", file=out)
    return 0 if match else 1


def _class_routes(cfg: CliConfig) -> dict[Route, Polynomial]:
    parts = cfg.lam.parts
    routes = ROUTE_ORDER if cfg.route == "all" else (Route(cfg.route),)
    return {r: pushforward_class(parts, cfg.k, cfg.N, cfg.theory, r).value for r in routes}


# -- commands --------------------------------------------------------------------


def cmd_schur(cfg: CliConfig, out) -> int:
    return _cmd_class(cfg, Theory.COHOMOLOGY, out)


def cmd_groth(cfg: CliConfig, out) -> int:
    return _cmd_class(cfg, Theory.KTHEORY, out)


def _cmd_class(cfg: CliConfig, theory: Theory, out) -> int:
    det = factorial_schur_det if theory is Theory.COHOMOLOGY else factorial_grothendieck_det
    if cfg.route == "det":
        print(render(det(cfg.lam.parts, cfg.k, cfg.N), cfg.format), file=out)
        return 0
    cfg = replace(cfg, theory=theory)
    values = _class_routes(cfg)
    if cfg.route != "all":
        print(render(next(iter(values.values())), cfg.format), file=out)
        return 0
    return _emit_routes(values, cfg.format, out)


def cmd_push(cfg: CliConfig, out) -> int:
    values = _class_routes(cfg)
    if cfg.route != "all":
        print(render(next(iter(values.values())), cfg.format), file=out)
        return 0
    return _emit_routes(values, cfg.format, out)


def cmd_straighten(cfg: CliConfig, out) -> int:
    parts = cfg.lam.parts
    if cfg.theory is Theory.COHOMOLOGY:
        outcome = straighten_composition(parts)
        value = straighten_pushforward_coh(parts, cfg.k, cfg.N).value
        operator = pushforward(build_p_lambda(parts, cfg.k, cfg.N), cfg.k, cfg.N, Theory.COHOMOLOGY).value
        if outcome.is_zero:
            summary = "0"
        else:
            summary = f"{'+' if outcome.sign > 0 else '-'} s[{outcome.partition}]"
        if cfg.format == "json":
            doc = {
                "composition": list(parts),
                "zero": outcome.is_zero,
                "sign": outcome.sign,
                "partition": list(outcome.partition.parts) if outcome.partition else None,
                "value": value.to_json(),
                "match": value == operator,
            }
            print(json.dumps(doc, sort_keys=True), file=out)
        else:
            print(f"{Composition(parts)} -> {summary}", file=out)
            print(render(value, cfg.format), file=out)
            print("MATCH" if value == operator else "MISMATCH", file=out)
        return 0 if value == operator else 1
    rows = []
    for i in range(1, cfg.k):
        rows.append((i, check_ktheory_straightening(parts, i, cfg.k, cfg.N)))
    if cfg.format == "json":
        print(json.dumps([{"i": i, "pass": ok} for i, ok in rows]), file=out)
    else:
        for i, ok in rows:
            print(f"i={i}: {'PASS' if ok else 'FAIL'}", file=out)
    return 0 if all(ok for _, ok in rows) else 1


def cmd_dgroth(cfg: CliConfig, out) -> int:
    try:
        w = Permutation(cfg.perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(render(double_grothendieck(w), cfg.format), file=out)
    return 0


def cmd_localize(cfg: CliConfig, out) -> int:
    det = factorial_schur_det if cfg.theory is Theory.COHOMOLOGY else factorial_grothendieck_det
    cls = det(cfg.lam.parts, cfg.k, cfg.N)
    print(render(localize(cls, FixedPoint.of(cfg.mu, cfg.k, cfg.N), cfg.theory), cfg.format), file=out)
    return 0


def cmd_verify(cfg: CliConfig, out) -> int:
    report = run_suite(cfg.suite, cfg.k, cfg.N, cfg.trials, cfg.seed)
    failure = report.first_failure()
    if cfg.format == "json":
        doc = {
            "suite": report.suite, "k": cfg.k, "N": cfg.N, "seed": cfg.seed,
            "passed": report.passed, "failed": report.failed,
            "first_failure": failure.label if failure else None,
        }
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        print(f"suite {report.suite}: k<={cfg.k} N={cfg.N} seed={cfg.seed}", file=out)
        print(f"passed {report.passed} failed {report.failed}", file=out)
        if failure:
            print(f"first failing case: {failure.label}", file=out)
    return 0 if report.ok else 1


def cmd_bench(cfg: CliConfig, out) -> int:
    build = build_p_lambda if cfg.theory is Theory.COHOMOLOGY else build_P_lambda
    det = factorial_schur_det if cfg.theory is Theory.COHOMOLOGY else factorial_grothendieck_det
    rows = []
    ks = [cfg.k] if any(cfg.lam.parts) else range(1, cfg.k + 1)
    for k in ks:
        lams = [Partition(cfg.lam.parts)] if any(cfg.lam.parts) else partitions_in_box(k, cfg.N)
        for lam in lams:
            parts = lam.padded(k)
            for route in ROUTE_ORDER:
                start = time.perf_counter()
                if route is Route.DETERMINANT:
                    value = det(parts, k, cfg.N)
                else:
                    value = pushforward(build(parts, k, cfg.N), k, cfg.N, cfg.theory, route).value
                elapsed = time.perf_counter() - start
                rows.append({
                    "k": k, "N": cfg.N, "lam": str(lam), "route": route.value,
                    "summands": factorial(k) if route is not Route.OPERATOR else k * (k - 1) // 2,
                    "terms": len(value), "seconds": round(elapsed, 6),
                })
    if cfg.format == "json":
        for row in rows:
            print(json.dumps(row, sort_keys=True), file=out)
    else:
        print(f"{'k':>2} {'N':>2} {'lam':<10} {'route':<5} {'summands':>8} {'terms':>7} {'seconds':>10}", file=out)
        for r in rows:
            print(f"{r['k']:>2} {r['N']:>2} {r['lam']:<10} {r['route']:<5} {r['summands']:>8} {r['terms']:>7} {r['seconds']:>10.6f}", file=out)
    return 0


_DISPATCH = {
    "schur": cmd_schur, "groth": cmd_groth, "push": cmd_push, "straighten": cmd_straighten,
    "dgroth": cmd_dgroth, "localize": cmd_localize, "verify": cmd_verify, "bench": cmd_bench,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = make_config(ns)
        return _DISPATCH[cfg.command](cfg, out)
    except UsageError as exc:
        print(f"eqschubert: error: {exc}", file=err)
        return 2
    except ValueError as exc:
        # precondition failures from the library (IndexOutOfRange, PartTooLarge, ...)
        print(f"eqschubert: error: {exc}", file=err)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
