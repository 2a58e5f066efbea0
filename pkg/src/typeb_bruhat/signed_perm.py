"""Signed permutations: the hyperoctahedral group W_n of type B.

An element ``w`` is stored by its one-line notation ``w(1) ... w(n)``;
a negative entry stands for a barred value.  The values on negative
positions follow from ``w(-i) = -w(i)`` and ``w(0) = 0`` and are never
stored.

Group elements act on the right on positions, so ``w * s_i`` permutes
the entries of ``w`` and ``compose(w, x)(i) == w(x(i))``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .errors import ContractError, ParseError

__all__ = [
    "SignedPermutation",
    "Transposition",
    "SignChange",
    "Reflection",
    "identity",
    "apply_simple",
    "apply_reflection",
    "reflection_from_positions",
    "reflections",
    "inversions",
    "length_full",
    "compose",
    "parse_oneline",
    "format_oneline",
    "bar_position",
    "all_signed_permutations",
]


@dataclass(frozen=True, order=True)
class SignedPermutation:
    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n == 0:
            raise ContractError("a signed permutation needs rank n >= 1")
        if sorted(abs(e) for e in entries) != list(range(1, n + 1)):
            raise ContractError(
                f"absolute values of {entries} are not a permutation of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        """Value at window position ``i`` in ``[-n, n]``."""
        if not -self.n <= i <= self.n:
            raise ContractError(f"position {i} outside [-{self.n}, {self.n}]")
        if i == 0:
            return 0
        if i > 0:
            return self.entries[i - 1]
        return -self.entries[-i - 1]

    def window(self) -> tuple:
        """Values ``w(-n), ..., w(0), ..., w(n)``."""
        return tuple(-e for e in reversed(self.entries)) + (0,) + self.entries

    def is_identity(self) -> bool:
        return self.entries == tuple(range(1, self.n + 1))

    def __mul__(self, other):
        return compose(self, other)

    def __str__(self):
        return format_oneline(self)


@dataclass(frozen=True)
class Transposition:
    """Reflection ``(i, j)(-i, -j)`` with ``1 <= i < |j| <= n``."""

    i: int
    j: int

    def check(self, n):
        if not (1 <= self.i < abs(self.j) <= n):
            raise ContractError(f"Transposition({self.i}, {self.j}) invalid for n={n}")


@dataclass(frozen=True)
class SignChange:
    """Reflection ``(i, -i)`` with ``1 <= i <= n``."""

    i: int

    def check(self, n):
        if not 1 <= self.i <= n:
            raise ContractError(f"SignChange({self.i}) invalid for n={n}")


Reflection = Union[Transposition, SignChange]


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def apply_simple(w: SignedPermutation, i: int) -> SignedPermutation:
    """Right multiplication by the simple reflection ``s_i``.

    ``s_0`` negates the first entry; ``s_i`` for ``i >= 1`` swaps the
    entries in positions ``i`` and ``i + 1``.
    """
    if not 0 <= i <= w.n - 1:
        raise ContractError(f"simple reflection s_{i} undefined for n={w.n}")
    e = list(w.entries)
    if i == 0:
        e[0] = -e[0]
    else:
        e[i - 1], e[i] = e[i], e[i - 1]
    return SignedPermutation(tuple(e))


def apply_reflection(w: SignedPermutation, t: Reflection) -> SignedPermutation:
    t.check(w.n)
    e = list(w.entries)
    if isinstance(t, SignChange):
        e[t.i - 1] = -e[t.i - 1]
    elif t.j > 0:
        e[t.i - 1], e[t.j - 1] = e[t.j - 1], e[t.i - 1]
    else:
        # positions i and j=-|j| swap, so w'(i) = w(-|j|) = -w(|j|)
        a, b = t.i - 1, -t.j - 1
        e[a], e[b] = -w.entries[b], -w.entries[a]
    return SignedPermutation(tuple(e))


def reflection_from_positions(i: int, j: int) -> Reflection:
    """Normalize the window transposition of positions ``i != j`` (both nonzero).

    ``(i, j)(-i, -j)`` and ``(-i, -j)(i, j)`` are the same reflection; the
    representative with a positive smaller-magnitude index is returned.
    When ``|i| == |j|`` the reflection is a sign change.
    """
    if i == 0 or j == 0 or i == j:
        raise ContractError(f"no reflection swaps positions {i} and {j}")
    if abs(i) == abs(j):
        return SignChange(abs(i))
    p, q = (i, j) if abs(i) < abs(j) else (j, i)
    if p < 0:
        p, q = -p, -q
    return Transposition(p, q)


def reflections(n: int) -> Iterator[Reflection]:
    """All ``n**2`` reflections of W_n."""
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yield Transposition(i, j)
            yield Transposition(i, -j)
    for i in range(1, n + 1):
        yield SignChange(i)


def inversions(w: SignedPermutation) -> int:
    e = w.entries
    return sum(1 for a, b in itertools.combinations(e, 2) if a > b)


def length_full(w: SignedPermutation) -> int:
    """Coxeter length: inversions of the one-line word plus the barred values."""
    return inversions(w) - sum(x for x in w.entries if x < 0)


def compose(w: SignedPermutation, x: SignedPermutation) -> SignedPermutation:
    """The product ``w x``; ``x`` acts first, so the result maps ``i`` to ``w(x(i))``."""
    if w.n != x.n:
        raise ContractError(f"rank mismatch: {w.n} vs {x.n}")
    return SignedPermutation(tuple(w(xi) for xi in x.entries))


def all_signed_permutations(n: int) -> Iterator[SignedPermutation]:
    """Every element of W_n, in lexicographic order of the one-line notation."""
    perms = []
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            perms.append(tuple(s * a for s, a in zip(signs, p)))
    for e in sorted(perms):
        yield SignedPermutation(e)


_TOKEN = re.compile(r"^[+-]?\d+$")


def _tokens(text):
    # '|' may be glued to neighbours, as in "2 5 6|-8"
    return text.replace("|", " | ").split()


def bar_position(text: str) -> Optional[int]:
    """Number of entries before the ``'|'`` marker, or ``None`` if absent."""
    toks = _tokens(text)
    bars = [i for i, t in enumerate(toks) if t == "|"]
    if not bars:
        return None
    if len(bars) > 1:
        raise ParseError("more than one '|' marker", bars[1] + 1)
    return bars[0]


def parse_oneline(text: str, n: Optional[int] = None) -> SignedPermutation:
    """Parse whitespace separated nonzero integers; ``-a`` means barred ``a``.

    A single ``'|'`` token is allowed and ignored here (see
    :func:`bar_position`).  If ``n`` is given the entry count must match.
    """
    bar_position(text)
    values = []
    seen = {}
    for pos, tok in enumerate((t for t in _tokens(text) if t != "|"), start=1):
        if not _TOKEN.match(tok):
            raise ParseError(f"not an integer: {tok!r}", pos)
        val = int(tok)
        if val == 0:
            raise ParseError("zero is not a valid entry", pos)
        if abs(val) in seen:
            raise ParseError(
                f"absolute value {abs(val)} repeats entry {seen[abs(val)]}", pos
            )
        seen[abs(val)] = pos
        values.append(val)
    if not values:
        raise ParseError("empty one-line notation")
    if n is not None and len(values) != n:
        raise ParseError(f"expected {n} entries, got {len(values)}")
    missing = sorted(set(range(1, len(values) + 1)) - set(seen))
    if missing:
        raise ParseError(f"absolute values {missing} missing for n={len(values)}")
    return SignedPermutation(tuple(values))


def format_oneline(w: SignedPermutation, k: Optional[int] = None) -> str:
    """Space separated entries, with ``'|'`` after position ``k`` when given."""
    parts = [str(e) for e in w.entries]
    if k is not None:
        if not 0 <= k <= w.n:
            raise ContractError(f"k={k} outside [0, {w.n}]")
        parts.insert(k, "|")
    return " ".join(parts)
