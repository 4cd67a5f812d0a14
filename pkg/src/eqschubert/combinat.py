"""Partitions, compositions and permutations of {1..k}.

Permutations are 1-based and written in one-line notation; ``(u * v)(i) ==
u(v(i))``, so right multiplication by the simple reflection ``s_i`` swaps
the entries in positions ``i`` and ``i + 1``.

>>> w = Permutation((3, 1, 2))
>>> w.reduced_word()
(2, 1)
>>> Permutation.from_word((2, 1), 3) == w
True
>>> straighten_composition((0, 2))
StraightenOutcome(kind='signed', sign=-1, partition=Partition(parts=(1, 1)), witness=Permutation(oneline=(2, 1)))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import PartTooLarge

__all__ = [
    "Partition", "Composition", "Permutation", "StraightenOutcome",
    "iterate_sk", "reduced_word", "reduced_words", "staircase", "fixed_point_indices",
    "grassmannian_permutation", "grassmannian_partition", "is_grassmannian",
    "straighten_composition", "contains", "partitions_in_box",
    "compositions_in_box", "parse_sequence",
]


def _strip(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    n = len(parts)
    while n and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


@dataclass(frozen=True, eq=False)
class Partition:
    """Weakly decreasing sequence of nonnegative integers.

    Trailing zeros are kept but ignored by ``==`` and ``hash``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    def __eq__(self, other):
        if isinstance(other, Partition):
            return _strip(self.parts) == _strip(other.parts)
        return NotImplemented

    def __hash__(self):
        return hash(("Partition", _strip(self.parts)))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(_strip(self.parts))

    def padded(self, k: int) -> tuple[int, ...]:
        """The parts as a length-``k`` tuple; raises if there are more than ``k`` nonzero parts."""
        if self.length > k:
            raise ValueError(f"{self.parts} has more than {k} nonzero parts")
        p = _strip(self.parts)
        return p + (0,) * (k - len(p))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) or "0"


@dataclass(frozen=True)
class Composition:
    """Arbitrary finite sequence of nonnegative integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be nonnegative: {parts}")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def padded(self, k: int) -> tuple[int, ...]:
        p = self.parts
        if len(p) > k:
            if any(p[k:]):
                raise ValueError(f"{p} has nonzero entries beyond position {k}")
            return p[:k]
        return p + (0,) * (k - len(p))

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) or "0"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..k} in one-line notation ``(w(1), ..., w(k))``."""

    oneline: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(a) for a in self.oneline)
        object.__setattr__(self, "oneline", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{len(w)}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def longest(cls, k: int) -> "Permutation":
        return cls(tuple(range(k, 0, -1)))

    @classmethod
    def simple(cls, i: int, k: int) -> "Permutation":
        if not 1 <= i < k:
            raise ValueError(f"s_{i} is not a simple reflection of S_{k}")
        w = list(range(1, k + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def from_word(cls, word: Sequence[int], k: int) -> "Permutation":
        """The product ``s_{i_1} s_{i_2} ... s_{i_l}``."""
        w = list(range(1, k + 1))
        for i in word:
            if not 1 <= i < k:
                raise ValueError(f"s_{i} is not a simple reflection of S_{k}")
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @property
    def k(self) -> int:
        return len(self.oneline)

    def __len__(self):
        return len(self.oneline)

    def __iter__(self):
        return iter(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.k != self.k:
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self.oneline[j - 1] for j in other.oneline))

    def inverse(self) -> "Permutation":
        inv = [0] * self.k
        for i, wi in enumerate(self.oneline, 1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        w = self.oneline
        return sum(1 for a, b in itertools.combinations(w, 2) if a > b)

    length = inversions

    @property
    def sign(self) -> int:
        return -1 if self.inversions() % 2 else 1

    def descents(self) -> tuple[int, ...]:
        w = self.oneline
        return tuple(i for i in range(1, self.k) if w[i - 1] > w[i])

    def times_simple(self, i: int) -> "Permutation":
        """Right multiplication ``w s_i``: swap positions ``i`` and ``i + 1``."""
        w = list(self.oneline)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word, found by adjacent-transposition (bubble) sorting."""
        w = list(self.oneline)
        steps = []
        swapped = True
        while swapped:
            swapped = False
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    steps.append(i + 1)
                    swapped = True
        # w s_{a_1} ... s_{a_l} = id, hence w = s_{a_l} ... s_{a_1}
        return tuple(reversed(steps))

    def __str__(self) -> str:
        return ",".join(map(str, self.oneline))


@dataclass(frozen=True)
class StraightenOutcome:
    """Result of straightening a composition: zero, or sign times a partition."""

    kind: str  # "zero" or "signed"
    sign: int = 0
    partition: Optional[Partition] = None
    witness: Optional[Permutation] = None

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"


def iterate_sk(k: int) -> Iterator[Permutation]:
    """All of S_k, in lexicographic one-line order."""
    if k < 1:
        raise ValueError("k must be positive")
    for w in itertools.permutations(range(1, k + 1)):
        yield Permutation(w)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    return w.reduced_word()


def reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """Every reduced word of ``w``, in lexicographic order.

    >>> reduced_words(Permutation((3, 2, 1)))
    [(1, 2, 1), (2, 1, 2)]
    """
    if not w.descents():
        return [()]
    out = []
    for i in w.descents():
        # w = (w s_i) s_i with l(w s_i) = l(w) - 1
        out.extend(word + (i,) for word in reduced_words(w.times_simple(i)))
    return sorted(out)


def staircase(k: int) -> Partition:
    if k < 1:
        raise ValueError("k must be positive")
    return Partition(tuple(range(k - 1, -1, -1)))


def _as_parts(lam) -> tuple[int, ...]:
    if isinstance(lam, (Partition, Composition)):
        return lam.parts
    return tuple(int(p) for p in lam)


def fixed_point_indices(lam, k: int) -> tuple[int, ...]:
    """The basis indices ``i_j = j + lam_{k+1-j}`` of the fixed point ``e_lam``."""
    lam = Partition(_as_parts(lam)).padded(k)
    return tuple(j + lam[k - j] for j in range(1, k + 1))


def grassmannian_permutation(lam, k: int, n: int) -> Permutation:
    """The k-Grassmannian permutation of S_n attached to ``lam``."""
    lam = Partition(_as_parts(lam))
    parts = lam.padded(k)
    if parts and parts[0] > n - k:
        raise PartTooLarge(f"largest part {parts[0]} exceeds n - k = {n - k}")
    head = [i + parts[k - i] for i in range(1, k + 1)]
    used = set(head)
    tail = [v for v in range(1, n + 1) if v not in used]
    return Permutation(tuple(head + tail))


def is_grassmannian(w: Permutation, k: int) -> bool:
    """True when every descent of ``w`` sits at position ``k``."""
    return all(d == k for d in w.descents())


def grassmannian_partition(w: Permutation, k: int) -> Partition:
    """``(w(k) - k, w(k-1) - (k-1), ..., w(1) - 1)`` for a k-Grassmannian ``w``."""
    if not is_grassmannian(w, k):
        raise ValueError(f"{w} is not {k}-Grassmannian")
    return Partition(tuple(w(i) - i for i in range(k, 0, -1)))


def straighten_composition(mu) -> StraightenOutcome:
    """Sort ``mu + delta`` into a strictly decreasing sequence, tracking the sign."""
    mu = _as_parts(mu)
    k = len(mu)
    delta = tuple(range(k - 1, -1, -1))
    shifted = [m + d for m, d in zip(mu, delta)]
    if len(set(shifted)) < k:
        return StraightenOutcome("zero")
    # witness w with shifted[w(1)] > shifted[w(2)] > ...
    order = sorted(range(1, k + 1), key=lambda j: -shifted[j - 1])
    witness = Permutation(tuple(order))
    lam = tuple(shifted[order[i] - 1] - delta[i] for i in range(k))
    return StraightenOutcome("signed", witness.sign, Partition(lam), witness)


def contains(mu, lam) -> bool:
    """Containment of Young diagrams: ``mu_i >= lam_i`` for all ``i``."""
    a, b = _as_parts(mu), _as_parts(lam)
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return all(p >= q for p, q in zip(a, b))


def partitions_in_box(k: int, N: int) -> list[Partition]:
    """All partitions with at most ``k`` parts, each at most ``N``, as length-``k`` tuples."""
    out = []
    for parts in itertools.product(range(N, -1, -1), repeat=k):
        if all(a >= b for a, b in zip(parts, parts[1:])):
            out.append(Partition(parts))
    return sorted(out, key=lambda p: (p.size, tuple(-a for a in p.parts)))


def compositions_in_box(k: int, max_part: int) -> list[Composition]:
    return [Composition(c) for c in itertools.product(range(max_part + 1), repeat=k)]


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse ``"2,1,0"`` into ``(2, 1, 0)``; the empty string gives ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None
