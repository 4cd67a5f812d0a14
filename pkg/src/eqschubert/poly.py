"""Sparse multivariate (Laurent) polynomials with exact integer coefficients.

Four indexed variable families live in one ring:

* ``x1, x2, ...``  Chern roots (family ``X``),
* ``t1, t2, ...``  cohomological equivariant parameters (``TCOH``),
* ``T1, T2, ...``  K-theoretic equivariant parameters (``TK``),
* ``E1, E2, ...``  the characters ``e^{t_i}`` (``E``); only these may carry
  negative exponents.

A monomial is packed into a single Python int: every variable owns a 32-bit
digit and the monomial is ``sum(exp * 2**(32*slot))``.  Multiplying monomials
is then integer addition, and negative ``E`` exponents are just negative
digits.  The ``X`` digits occupy the lowest slots and are never negative, so
an ``x`` exponent can be read off with a shift and a mask.

>>> p = (x(1) + t(1)) * (x(1) + t(2))
>>> print(p)
x1^2 + x1*t1 + x1*t2 + t1*t2
>>> print(p.substitute(VarId.x(1), -t(1)))
0
"""

from __future__ import annotations

import enum
import json
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .errors import (
    MissingAssignment,
    NegativeExponentSubstitution,
    NotDivisible,
    ZeroAtLaurentPole,
)

__all__ = [
    "Family", "VarId", "Polynomial", "RationalValue", "MAX_X",
    "x", "t", "T", "E", "const",
    "add", "mul", "substitute", "substitute_many", "evaluate", "permute_x",
    "exact_divide_linear", "divide_vandermonde", "is_symmetric",
    "to_json", "from_json", "dumps", "loads", "parse",
]

# exact rational values used by evaluate()
RationalValue = Fraction


class Family(enum.IntEnum):
    X = 0
    TCOH = 1
    TK = 2
    E = 3


_FAMILY_NAME = {Family.X: "x", Family.TCOH: "t", Family.TK: "T", Family.E: "E"}
_NAME_FAMILY = {v: k for k, v in _FAMILY_NAME.items()}


class VarId(NamedTuple):
    """A variable: family plus a positive index.  Ordered by (family, index)."""

    family: Family
    index: int

    @classmethod
    def x(cls, i: int) -> "VarId":
        return cls(Family.X, i)

    @classmethod
    def t(cls, i: int) -> "VarId":
        return cls(Family.TCOH, i)

    @classmethod
    def T(cls, i: int) -> "VarId":
        return cls(Family.TK, i)

    @classmethod
    def E(cls, i: int) -> "VarId":
        return cls(Family.E, i)

    def __str__(self) -> str:
        return f"{_FAMILY_NAME[self.family]}{self.index}"


# ---------------------------------------------------------------------------
# monomial packing

_BITS = 32
_BASE = 1 << _BITS
_DIGIT = _BASE - 1
_HALF = 1 << (_BITS - 1)

# number of x-variables that get a low (never negative) slot
MAX_X = 32
_XREGION = _BITS * MAX_X
_XMASK = (1 << _XREGION) - 1
_SLOT_TO_FAMILY = (Family.TCOH, Family.TK, Family.E)


def _slot(v: VarId) -> int:
    if v.index < 1:
        raise ValueError(f"variable index must be positive, got {v}")
    if v.family == Family.X:
        if v.index > MAX_X:
            raise ValueError(f"at most {MAX_X} x-variables are supported, got {v}")
        return v.index - 1
    return MAX_X + 3 * (v.index - 1) + (v.family - 1)


@lru_cache(maxsize=None)
def _unit(v: VarId) -> int:
    return 1 << (_BITS * _slot(v))


def _encode(exps: Mapping[VarId, int]) -> int:
    m = 0
    for v, e in exps.items():
        v = VarId(Family(v[0]), int(v[1]))
        e = int(e)
        if e == 0:
            continue
        if e < 0 and v.family != Family.E:
            raise ValueError(f"negative exponent {e} on non-Laurent variable {v}")
        if abs(e) >= _HALF:
            raise OverflowError(f"exponent {e} too large")
        m += e * _unit(v)
    return m


@lru_cache(maxsize=1 << 17)
def _decode(m: int) -> tuple[tuple[VarId, int], ...]:
    out = []
    low = m & _XMASK
    s = 0
    while low:
        e = low & _DIGIT
        if e:
            out.append((VarId(Family.X, s + 1), e))
        low >>= _BITS
        s += 1
    high = m >> _XREGION
    s = 0
    while high:
        e = high & _DIGIT
        if e >= _HALF:
            e -= _BASE
        if e:
            idx, fam = divmod(s, 3)
            out.append((VarId(_SLOT_TO_FAMILY[fam], idx + 1), e))
        high = (high - e) >> _BITS
        s += 1
    out.sort()
    return tuple(out)


@lru_cache(maxsize=1 << 17)
def _order_key(m: int) -> tuple:
    # graded (ascending total degree), then lexicographic on the sparse
    # (variable, -exponent) sequence: x1^2 < x1*x2 < x2^2 < x1*t1 ...
    dec = _decode(m)
    return (sum(e for _, e in dec), tuple((v.family, v.index, -e) for v, e in dec))


def _x_exp(m: int, i: int) -> int:
    return (m >> (_BITS * (i - 1))) & _DIGIT


# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial; coefficients are Python ints, never zero.

    Supports ``+ - *`` and ``**`` with ints and other polynomials.  Equality
    is equality of the term maps.
    """

    __slots__ = ("_terms", "_hash", "_vars")

    def __init__(self, value: Union[int, "Polynomial"] = 0):
        if isinstance(value, Polynomial):
            self._terms = value._terms
        elif isinstance(value, int) and not isinstance(value, bool):
            self._terms = {0: value} if value else {}
        else:
            raise TypeError(f"cannot build a Polynomial from {type(value).__name__}")
        self._hash = None
        self._vars = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "Polynomial":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        obj._vars = None
        return obj

    @classmethod
    def monomial(cls, exps: Mapping[VarId, int], coeff: int = 1) -> "Polynomial":
        if not coeff:
            return cls()
        return cls._raw({_encode(exps): int(coeff)})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[VarId, int], int]]) -> "Polynomial":
        out: dict[int, int] = {}
        for exps, c in terms:
            m = _encode(exps)
            out[m] = out.get(m, 0) + int(c)
        return cls._raw({m: c for m, c in out.items() if c})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[dict[VarId, int], int]]:
        """Terms as ``(exponent map, coefficient)`` pairs in canonical order."""
        return [(dict(_decode(m)), self._terms[m]) for m in self._sorted_monomials()]

    def _sorted_monomials(self) -> list[int]:
        return sorted(self._terms, key=_order_key)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> tuple[VarId, ...]:
        if self._vars is None:
            vs = set()
            for m in self._terms:
                vs.update(v for v, _ in _decode(m))
            self._vars = tuple(sorted(vs))
        return self._vars

    def coefficient(self, exps: Mapping[VarId, int]) -> int:
        return self._terms.get(_encode(exps), 0)

    def degrees(self) -> set[int]:
        """The set of total degrees of the terms (x, t, T each of degree 1)."""
        return {sum(e for _, e in _decode(m)) for m in self._terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        if len(ds) > 1:
            return False
        return degree is None or ds == {degree}

    def x_degree(self, i: int) -> int:
        """Largest exponent of ``x_i`` (0 for the zero polynomial)."""
        return max((_x_exp(m, i) for m in self._terms), default=0)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial()
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ma, ca), = a.items()
            if ma == 0:
                return Polynomial._raw({m: ca * c for m, c in b.items()})
            return Polynomial._raw({ma + m: ca * c for m, c in b.items()})
        out: dict[int, int] = {}
        get = out.get
        bitems = list(b.items())
        for ma, ca in a.items():
            for mb, cb in bitems:
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return _inverse_unit(self) ** (-e)
        result = Polynomial(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __getstate__(self):
        return self._terms

    def __setstate__(self, state):
        self._terms = state
        self._hash = None
        self._vars = None

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- ring maps ----------------------------------------------------------

    def substitute(self, v: VarId, q) -> "Polynomial":
        """Ring homomorphism sending ``v`` to ``q``; other variables untouched."""
        return self.substitute_many({v: q})

    def substitute_many(self, mapping: Mapping[VarId, object]) -> "Polynomial":
        """Simultaneous substitution of several variables."""
        subs = {}
        for v, q in mapping.items():
            q = self._coerce(q)
            if q is None:
                raise TypeError("substitution values must be Polynomial or int")
            v = VarId(Family(v[0]), int(v[1]))
            subs[v] = q
        if not subs or not self._terms:
            return self
        if not any(v in subs for q in subs.values() for v in q.variables()):
            # substitutes avoid the replaced variables, so one variable at a time is
            # equivalent and keeps the partial products small
            out = self
            for v, q in subs.items():
                out = out._substitute_one(v, q)
            return out
        return self._substitute_group(subs)

    def _substitute_one(self, v: VarId, q: "Polynomial") -> "Polynomial":
        shift = _BITS * _slot(v)
        u = 1 << shift
        half = u >> 1
        groups: dict[int, dict[int, int]] = {}
        for m, c in self._terms.items():
            # lower digits sum to less than half a unit in absolute value
            e = (((m + half) >> shift) + _HALF & _DIGIT) - _HALF
            groups.setdefault(e, {})[m - e * u] = c
        if len(groups) == 1 and 0 in groups:
            return self
        return self._recombine({(e,): rest for e, rest in groups.items()}, (v,), {v: q})

    def _substitute_group(self, subs: dict[VarId, "Polynomial"]) -> "Polynomial":
        order = tuple(subs)
        units = [_unit(v) for v in order]
        groups: dict[tuple[int, ...], dict[int, int]] = {}
        for m, c in self._terms.items():
            dec = dict(_decode(m))
            key = tuple(dec.get(v, 0) for v in order)
            rest = m
            for e, u in zip(key, units):
                if e:
                    rest -= e * u
            groups.setdefault(key, {})[rest] = c
        if len(groups) == 1 and not any(next(iter(groups))):
            return self
        return self._recombine(groups, order, subs)

    @staticmethod
    def _recombine(groups, order, subs) -> "Polynomial":
        powers: list[dict[int, Polynomial]] = [{} for _ in order]

        def power(slot: int, e: int) -> Polynomial:
            cache = powers[slot]
            if e not in cache:
                q = subs[order[slot]]
                if e < 0:
                    try:
                        cache[e] = _inverse_unit(q) ** (-e)
                    except NegativeExponentSubstitution:
                        raise NegativeExponentSubstitution(
                            f"{order[slot]} occurs with exponent {e} but its "
                            f"substitute {q} is not a unit monomial"
                        ) from None
                else:
                    cache[e] = q ** e
            return cache[e]

        out: dict[int, int] = {}
        for key, rest in groups.items():
            factor = Polynomial(1)
            for slot, e in enumerate(key):
                if e:
                    factor = factor * power(slot, e)
            for m, c in (Polynomial._raw(rest) * factor)._terms.items():
                out[m] = out.get(m, 0) + c
        return Polynomial._raw({m: c for m, c in out.items() if c})

    def specialize_family(self, family: Family, value=0) -> "Polynomial":
        """Substitute ``value`` for every variable of ``family`` occurring here."""
        return self.substitute_many({v: value for v in self.variables() if v.family == family})

    def evaluate(self, point: Mapping[VarId, object]) -> Fraction:
        """Exact rational value at ``point`` (a map VarId -> int/Fraction)."""
        vals = {VarId(Family(v[0]), int(v[1])): Fraction(val) for v, val in point.items()}
        pow_cache: dict[tuple[VarId, int], Fraction] = {}
        total = Fraction(0)
        for m, c in self._terms.items():
            prod = Fraction(c)
            for v, e in _decode(m):
                key = (v, e)
                p = pow_cache.get(key)
                if p is None:
                    try:
                        val = vals[v]
                    except KeyError:
                        raise MissingAssignment(str(v)) from None
                    if v.family == Family.E and val == 0:
                        raise ZeroAtLaurentPole(f"{v} assigned 0")
                    p = pow_cache[key] = val ** e
                prod *= p
            total += prod
        return total

    def permute_x(self, w: Sequence[int]) -> "Polynomial":
        """Apply ``x_i -> x_{w(i)}`` for ``w`` in one-line notation."""
        w = tuple(w)
        k = len(w)
        if sorted(w) != list(range(1, k + 1)):
            raise ValueError(f"{w} is not a permutation in one-line notation")
        if k > MAX_X:
            raise ValueError(f"permutations of more than {MAX_X} letters are not supported")
        moved = [(i, w[i] - 1) for i in range(k) if w[i] != i + 1]
        if not moved:
            return self
        shifts = [(_BITS * i, _BITS * j) for i, j in moved]
        out = {}
        for m, c in self._terms.items():
            new = m
            for si, sj in shifts:
                e = (m >> si) & _DIGIT
                if e:
                    new += (e << sj) - (e << si)
            out[new] = c
        return Polynomial._raw(out)

    def swap_x(self, i: int) -> "Polynomial":
        """Apply the simple transposition exchanging ``x_i`` and ``x_{i+1}``."""
        si = _BITS * (i - 1)
        sj = si + _BITS
        out = {}
        for m, c in self._terms.items():
            a = (m >> si) & _DIGIT
            b = (m >> sj) & _DIGIT
            if a != b:
                d = b - a
                m += (d << si) - (d << sj)
            out[m] = c
        return Polynomial._raw(out)

    def exact_divide_linear(self, i: int, j: int) -> "Polynomial":
        """Return ``q`` with ``q * (x_i - x_j) == self``; raise NotDivisible otherwise."""
        if i == j:
            raise ValueError("exact_divide_linear needs i != j")
        if not (1 <= i <= MAX_X and 1 <= j <= MAX_X):
            raise ValueError(f"x-indices must lie in 1..{MAX_X}")
        if not self._terms:
            return self
        ui = _unit(VarId.x(i))
        uj = _unit(VarId.x(j))
        sh = _BITS * (i - 1)
        groups: dict[int, dict[int, int]] = {}
        for m, c in self._terms.items():
            a = (m >> sh) & _DIGIT
            groups.setdefault(a, {})[m - a * ui] = c
        # synthetic division in x_i: q_{a-1} = c_a + x_j q_a, remainder c_0 + x_j q_0
        q: dict[int, int] = {}
        carry: dict[int, int] = {}
        for a in range(max(groups), 0, -1):
            cur = dict(groups.get(a, ()))
            for r, c in carry.items():
                key = r + uj
                s = cur.get(key, 0) + c
                if s:
                    cur[key] = s
                else:
                    cur.pop(key, None)
            carry = cur
            shift = (a - 1) * ui
            for r, c in cur.items():
                q[r + shift] = c
        rem = dict(groups.get(0, ()))
        for r, c in carry.items():
            key = r + uj
            s = rem.get(key, 0) + c
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
        if rem:
            raise NotDivisible(f"x{i} - x{j} does not divide the polynomial ({len(rem)} remainder terms)")
        return Polynomial._raw(q)

    def divide_vandermonde(self, k: int) -> "Polynomial":
        """Divide by ``prod_{i<j<=k} (x_i - x_j)``, pairs in row-major order."""
        p = self
        for i in range(1, k):
            for j in range(i + 1, k + 1):
                p = p.exact_divide_linear(i, j)
        return p

    def is_symmetric(self, k: int) -> bool:
        return all(self.swap_x(i) == self for i in range(1, k))

    # -- printing / serialization -------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for n, m in enumerate(self._sorted_monomials()):
            c = self._terms[m]
            mono = "*".join(
                f"{v}" if e == 1 else f"{v}^{e}" for v, e in _decode(m)
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if n == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for n, m in enumerate(self._sorted_monomials()):
            c = self._terms[m]
            mono = " ".join(
                f"{_FAMILY_NAME[v.family]}_{{{v.index}}}" + ("" if e == 1 else f"^{{{e}}}")
                for v, e in _decode(m)
            )
            a = abs(c)
            body = str(a) if not mono else (mono if a == 1 else f"{a} {mono}")
            if n == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {
                "coeff": str(self._terms[m]),
                "vars": [
                    {"family": _FAMILY_NAME[v.family], "index": v.index, "exp": e}
                    for v, e in _decode(m)
                ],
            }
            for m in self._sorted_monomials()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "Polynomial":
        terms = []
        for term in data:
            exps: dict[VarId, int] = {}
            for var in term["vars"]:
                try:
                    fam = _NAME_FAMILY[var["family"]]
                except KeyError:
                    raise ValueError(f"unknown variable family {var['family']!r}") from None
                v = VarId(fam, int(var["index"]))
                exps[v] = exps.get(v, 0) + int(var["exp"])
            terms.append((exps, int(term["coeff"])))
        return cls.from_terms(terms)


def _inverse_unit(q: Polynomial) -> Polynomial:
    if len(q._terms) == 1:
        (m, c), = q._terms.items()
        if c in (1, -1) and all(v.family == Family.E for v, _ in _decode(m)):
            return Polynomial._raw({-m: c})
    raise NegativeExponentSubstitution(f"{q} is not an invertible (Laurent unit) monomial")


# ---------------------------------------------------------------------------
# generators and functional API


def x(i: int) -> Polynomial:
    return Polynomial.monomial({VarId.x(i): 1})


def t(i: int) -> Polynomial:
    return Polynomial.monomial({VarId.t(i): 1})


def T(i: int) -> Polynomial:
    return Polynomial.monomial({VarId.T(i): 1})


def E(i: int, exp: int = 1) -> Polynomial:
    return Polynomial.monomial({VarId.E(i): exp})


def const(c: int) -> Polynomial:
    return Polynomial(c)


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def substitute(p: Polynomial, v: VarId, q) -> Polynomial:
    return p.substitute(v, q)


def substitute_many(p: Polynomial, mapping: Mapping[VarId, object]) -> Polynomial:
    return p.substitute_many(mapping)


def evaluate(p: Polynomial, point: Mapping[VarId, object]) -> Fraction:
    return p.evaluate(point)


def permute_x(p: Polynomial, w: Sequence[int]) -> Polynomial:
    return p.permute_x(w)


def exact_divide_linear(p: Polynomial, i: int, j: int) -> Polynomial:
    return p.exact_divide_linear(i, j)


def divide_vandermonde(p: Polynomial, k: int) -> Polynomial:
    return p.divide_vandermonde(k)


def is_symmetric(p: Polynomial, k: int) -> bool:
    return p.is_symmetric(k)


def to_json(p: Polynomial) -> list[dict]:
    return p.to_json()


def from_json(data: list[dict]) -> Polynomial:
    return Polynomial.from_json(data)


def dumps(p: Polynomial) -> str:
    return json.dumps(p.to_json())


def loads(s: str) -> Polynomial:
    return Polynomial.from_json(json.loads(s))


_FACTOR = r"[xtTE]\d+(?:\^-?\d+)?"
_TERM_RE = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?P<head>\d+|{_FACTOR})(?P<tail>(?:\s*\*\s*{_FACTOR})*)\s*"
)
_FACTOR_RE = re.compile(r"([xtTE])(\d+)(?:\^(-?\d+))?")


def parse(text: str) -> Polynomial:
    """Parse the output of ``Polynomial.to_text`` (sums of signed monomials)."""
    pos = 0
    terms = []
    first = True
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    while pos < len(text):
        mt = _TERM_RE.match(text, pos)
        if mt is None or mt.end() == pos or (not first and mt.group("sign") is None):
            raise ValueError(f"cannot parse polynomial at position {pos}: {text[pos:pos + 20]!r}")
        coeff = -1 if mt.group("sign") == "-" else 1
        exps: dict[VarId, int] = {}
        factors = mt.group("head") + mt.group("tail")
        for piece in factors.split("*"):
            piece = piece.strip()
            if piece.isdigit():
                coeff *= int(piece)
                continue
            fm = _FACTOR_RE.fullmatch(piece)
            v = VarId(_NAME_FAMILY[fm.group(1)], int(fm.group(2)))
            exps[v] = exps.get(v, 0) + int(fm.group(3) or 1)
        terms.append((exps, coeff))
        pos = mt.end()
        first = False
    return Polynomial.from_terms(terms)
