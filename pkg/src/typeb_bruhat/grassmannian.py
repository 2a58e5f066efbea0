"""k-Grassmannian permutations: minimal coset representatives of W_n / W_(k).

Every representative has the block form

    u_1 ... u_k | -lambda_r ... -lambda_1 v_1 ... v_{n-k-r}

with ``u``, ``lambda`` and ``v`` strictly increasing sequences of positive
integers that together partition ``{1, ..., n}``.  ``lambda`` is stored
ascending; its barred entries appear in the one-line word with the largest
first.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import ContractError, InvariantError, ValidationError
from .signed_perm import SignedPermutation, compose, format_oneline

__all__ = [
    "GrassmannPerm",
    "PartitionPair",
    "from_blocks",
    "to_signed",
    "is_grassmannian",
    "from_signed",
    "minimal_coset_representative",
    "partition_pair",
    "length_grass",
    "longest_element",
    "longest_length",
    "identity_element",
    "dual",
    "enumerate_grassmannian",
    "quotient_size",
    "rank_generating_function",
    "is_palindromic",
]


def _check_range(n, k):
    if n < 1:
        raise ContractError(f"rank n={n} must be >= 1")
    if not 0 <= k <= n:
        raise ContractError(f"k={k} outside [0, {n}]")


@dataclass(frozen=True)
class GrassmannPerm:
    n: int
    k: int
    u: tuple
    lam: tuple
    v: tuple

    def __post_init__(self):
        for name in ("u", "lam", "v"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        _check_range(self.n, self.k)
        n, k, u, lam, v = self.n, self.k, self.u, self.lam, self.v
        if len(u) != k:
            raise ValidationError(f"u has {len(u)} entries, expected k={k}")
        if len(u) + len(lam) + len(v) != n:
            raise ValidationError(
                f"block sizes {len(u)}+{len(lam)}+{len(v)} do not add up to n={n}"
            )
        for name, block in (("u", u), ("lambda", lam), ("v", v)):
            if any(x < 1 or x > n for x in block):
                raise ValidationError(f"{name} has a value outside [1, {n}]: {block}")
            if any(a >= b for a, b in zip(block, block[1:])):
                raise ValidationError(f"{name} is not strictly increasing: {block}")
        values = set(u) | set(lam) | set(v)
        if len(values) != n:
            dup = sorted(x for x in values if (x in u) + (x in lam) + (x in v) > 1)
            raise ValidationError(f"values {dup} appear in more than one block")

    @property
    def r(self) -> int:
        return len(self.lam)

    @property
    def entries(self) -> tuple:
        return self.u + tuple(-x for x in reversed(self.lam)) + self.v

    @property
    def oneline(self) -> str:
        return format_oneline(to_signed(self), self.k)

    def sort_key(self):
        return self.entries

    def __str__(self):
        return self.oneline

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "u": list(self.u),
            "lambda": list(self.lam),
            "v": list(self.v),
        }

    @classmethod
    def from_dict(cls, data) -> "GrassmannPerm":
        return cls(data["n"], data["k"], data["u"], data["lambda"], data["v"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text) -> "GrassmannPerm":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class PartitionPair:
    """The partition pair of a representative plus the counts behind it.

    ``alpha`` is weakly increasing and fits in a ``k x (n-k)`` box;
    ``lam`` is ascending like :attr:`GrassmannPerm.lam`.
    ``d[i]`` counts barred values above ``u[i]`` and ``mu[i]`` counts
    unbarred ``v`` values above ``u[i]``.
    """

    alpha: tuple
    lam: tuple
    d: tuple
    mu: tuple

    @property
    def strict_partition(self) -> tuple:
        return tuple(reversed(self.lam))

    @property
    def size(self) -> int:
        return sum(self.alpha) + sum(self.lam)


def from_blocks(n, k, u, lam, v) -> GrassmannPerm:
    return GrassmannPerm(n, k, tuple(u), tuple(lam), tuple(v))


def to_signed(g: GrassmannPerm) -> SignedPermutation:
    return SignedPermutation(g.entries)


def _first_violation(w: SignedPermutation, k: int):
    e = w.entries
    head, tail = e[:k], e[k:]
    if any(x < 0 for x in head):
        return "positions 1..k must carry positive values"
    if any(a >= b for a, b in zip(head, head[1:])):
        return "positions 1..k must be increasing"
    r = 0
    while r < len(tail) and tail[r] < 0:
        r += 1
    if any(x < 0 for x in tail[r:]):
        return "barred entries must form one block right after position k"
    if any(a >= b for a, b in zip(tail, tail[1:])):
        # reading -lambda_r ... -lambda_1 then v ascending is exactly an increasing tail
        return "positions k+1..n must be increasing"
    return None


def is_grassmannian(w: SignedPermutation, k: int) -> bool:
    _check_range(w.n, k)
    return _first_violation(w, k) is None


def from_signed(w: SignedPermutation, k: int) -> GrassmannPerm:
    _check_range(w.n, k)
    problem = _first_violation(w, k)
    if problem is not None:
        raise ValidationError(f"{format_oneline(w)} is not {k}-Grassmannian: {problem}")
    e = w.entries
    u = e[:k]
    lam = tuple(sorted(-x for x in e[k:] if x < 0))
    v = tuple(x for x in e[k:] if x > 0)
    return GrassmannPerm(w.n, k, u, lam, v)


def minimal_coset_representative(w: SignedPermutation, k: int) -> GrassmannPerm:
    """The unique shortest element of ``w W_(k)``.

    ``W_(k)`` permutes and re-signs the first ``k`` positions and permutes
    the remaining ones, so the head is made positive and sorted and the
    tail is sorted with its signs kept.
    """
    _check_range(w.n, k)
    head = sorted(abs(x) for x in w.entries[:k])
    tail = sorted(w.entries[k:])
    return from_signed(SignedPermutation(tuple(head) + tuple(tail)), k)


def partition_pair(g: GrassmannPerm) -> PartitionPair:
    n, k = g.n, g.k
    d = tuple(sum(1 for x in g.lam if x > ui) for ui in g.u)
    mu = tuple(sum(1 for x in g.v if x > ui) for ui in g.u)
    alpha = tuple(ui - i + di for i, (ui, di) in enumerate(zip(g.u, d), start=1))
    for i in range(k):
        if alpha[i] != n - k - mu[i]:
            raise InvariantError(f"alpha_{i + 1}={alpha[i]} != n-k-mu_{i + 1} for {g}")
        if g.u[i] != n - k + (i + 1) - d[i] - mu[i]:
            raise InvariantError(f"u_{i + 1} != n-k+i-d_i-mu_i for {g}")
    if any(a > b for a, b in zip(alpha, alpha[1:])) or any(
        not 0 <= a <= n - k for a in alpha
    ):
        raise InvariantError(f"alpha={alpha} does not fit a {k}x{n - k} box")
    return PartitionPair(alpha, g.lam, d, mu)


def length_grass(g: GrassmannPerm) -> int:
    return partition_pair(g).size


def longest_length(n: int, k: int) -> int:
    return (n + 3 * k + 1) * (n - k) // 2


def identity_element(n: int, k: int) -> GrassmannPerm:
    _check_range(n, k)
    return GrassmannPerm(n, k, tuple(range(1, k + 1)), (), tuple(range(k + 1, n + 1)))


def longest_element(n: int, k: int) -> GrassmannPerm:
    _check_range(n, k)
    return GrassmannPerm(n, k, tuple(range(1, k + 1)), tuple(range(k + 1, n + 1)), ())


def dual(g: GrassmannPerm) -> GrassmannPerm:
    """``g * w0``: barred and unbarred tail values trade places."""
    return GrassmannPerm(g.n, g.k, g.u, g.v, g.lam)


def dual_by_product(g: GrassmannPerm) -> GrassmannPerm:
    """Same as :func:`dual`, computed as a group product for cross-checking."""
    w0 = to_signed(longest_element(g.n, g.k))
    return minimal_coset_representative(compose(to_signed(g), w0), g.k)


def quotient_size(n: int, k: int) -> int:
    return 2 ** (n - k) * comb(n, k)


def enumerate_grassmannian(n: int, k: int) -> Iterator[GrassmannPerm]:
    """All of ``W_n^(k)`` in lexicographic order of the one-line entries."""
    _check_range(n, k)
    items = []
    for u in itertools.combinations(range(1, n + 1), k):
        rest = [x for x in range(1, n + 1) if x not in u]
        for barred in itertools.product((False, True), repeat=len(rest)):
            lam = tuple(x for x, b in zip(rest, barred) if b)
            v = tuple(x for x, b in zip(rest, barred) if not b)
            items.append(GrassmannPerm(n, k, u, lam, v))
    items.sort(key=GrassmannPerm.sort_key)
    return iter(items)


def rank_generating_function(n: int, k: int) -> list:
    """Coefficients of ``sum q**length`` over ``W_n^(k)``, indexed by length."""
    coeffs = [0] * (longest_length(n, k) + 1)
    for g in enumerate_grassmannian(n, k):
        coeffs[length_grass(g)] += 1
    return coeffs


def is_palindromic(seq) -> bool:
    seq = list(seq)
    return seq == seq[::-1]
