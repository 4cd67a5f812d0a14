import random

import pytest
import sympy
from hypothesis import strategies as st

from eqschubert.poly import Family, Polynomial, VarId

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}

_SYMBOL_PREFIX = {Family.X: "x", Family.TCOH: "t", Family.TK: "T", Family.E: "E"}


def sym(v: VarId) -> sympy.Symbol:
    return sympy.Symbol(f"{_SYMBOL_PREFIX[v.family]}{v.index}")


def to_sympy(p: Polynomial) -> sympy.Expr:
    """Independent rendering of a Polynomial as a sympy expression."""
    out = sympy.Integer(0)
    for exps, c in p.terms():
        term = sympy.Integer(c)
        for v, e in exps.items():
            term *= sym(v) ** e
        out += term
    return out


def from_sympy(expr) -> Polynomial:
    """Convert an expanded sympy polynomial in x/t/T symbols back to a Polynomial."""
    expr = sympy.expand(expr)
    if expr == 0:
        return Polynomial()
    symbols = sorted(expr.free_symbols, key=str)
    if not symbols:
        return Polynomial(int(expr))
    names = {"x": Family.X, "t": Family.TCOH, "T": Family.TK, "E": Family.E}
    vids = [VarId(names[s.name[0]], int(s.name[1:])) for s in symbols]
    poly = sympy.Poly(expr, *symbols)
    return Polynomial.from_terms(
        (dict(zip(vids, mon)), int(c)) for mon, c in poly.terms()
    )


@st.composite
def polynomials(draw, k=3, params=2, family=Family.TCOH, max_terms=5, max_deg=3):
    """Small random polynomials in x_1..x_k and a few parameters."""
    n = draw(st.integers(0, max_terms))
    terms = []
    for _ in range(n):
        exps = {VarId.x(i): draw(st.integers(0, max_deg)) for i in range(1, k + 1)}
        for j in range(1, params + 1):
            exps[VarId(family, j)] = draw(st.integers(0, 2))
        terms.append((exps, draw(st.integers(-6, 6))))
    return Polynomial.from_terms(terms)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
