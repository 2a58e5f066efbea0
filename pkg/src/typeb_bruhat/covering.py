"""Covering relations of the Bruhat order on ``W_n^(k)``.

A pair ``(w, w')`` of representatives is a covering exactly when it is one
of four local moves on the blocks ``u | lambda, v``:

B1  the barred value 1 loses its bar (1 moves from lambda to v);
B2  barred ``a`` and unbarred ``a - 1`` trade places;
B3  ``a`` in u trades with smaller ``b`` in v, every value strictly
    between them being barred;
B4  ``b`` in u trades with larger barred ``a``, every value strictly
    between them lying in v.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import ContractError
from .grassmannian import GrassmannPerm, from_blocks

__all__ = ["CoverType", "CoveringEdge", "classify", "covered_by", "covers_of"]


class CoverType(str, enum.Enum):
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"

    def __str__(self):
        return self.value

    def dual(self) -> "CoverType":
        """Type of the dual pair ``((w')^v, w^v)``."""
        return _DUAL_TYPE[self]


_DUAL_TYPE = {
    CoverType.B1: CoverType.B1,
    CoverType.B2: CoverType.B2,
    CoverType.B3: CoverType.B4,
    CoverType.B4: CoverType.B3,
}


@dataclass(frozen=True)
class CoveringEdge:
    upper: GrassmannPerm
    lower: GrassmannPerm
    ctype: CoverType

    def __str__(self):
        return f"{self.ctype}\t{self.upper.oneline} > {self.lower.oneline}"


def _rebuild(g, u, lam, v):
    return from_blocks(g.n, g.k, sorted(u), sorted(lam), sorted(v))


def _gap(b, a):
    return range(b + 1, a)


def classify(w: GrassmannPerm, w2: GrassmannPerm) -> Optional[CoverType]:
    """Type of the pair if ``w`` covers ``w2``, else ``None``.

    Works on the value sets of the blocks.  The gap conditions for B3 and
    B4 are checked here directly; they are what keeps each swapped value
    at its old position in the sorted one-line word.
    """
    if (w.n, w.k) != (w2.n, w2.k):
        raise ContractError(
            f"cannot compare elements of W_{w.n}^({w.k}) and W_{w2.n}^({w2.k})"
        )
    U, L, V = set(w.u), set(w.lam), set(w.v)
    U2, L2, V2 = set(w2.u), set(w2.lam), set(w2.v)

    if U == U2:
        lost, gained = L - L2, L2 - L
        if lost == {1} and not gained and V2 == V | {1}:
            return CoverType.B1
        if len(lost) == 1 and len(gained) == 1:
            (a,), (b,) = lost, gained
            if b == a - 1 and b in V and V2 == (V - {b}) | {a}:
                return CoverType.B2
        return None

    left, entered = U - U2, U2 - U
    if len(left) != 1 or len(entered) != 1:
        return None
    (x,), (y,) = left, entered
    # B3: a = x leaves u for v, b = y comes from v; lambda untouched
    if x > y and y in V and L2 == L and V2 == (V - {y}) | {x}:
        if all(c in L for c in _gap(y, x)):
            return CoverType.B3
        return None
    # B4: b = x leaves u for lambda, a = y comes from lambda; v untouched
    if y > x and y in L and V2 == V and L2 == (L - {y}) | {x}:
        if all(c in V for c in _gap(x, y)):
            return CoverType.B4
    return None


def _sorted_edges(edges, key_attr):
    return sorted(edges, key=lambda e: (e.ctype.value, getattr(e, key_attr).entries))


def covered_by(w: GrassmannPerm) -> list:
    """Every ``w'`` covered by ``w``, as edges sorted by type then ``w'``."""
    U, L, V = set(w.u), set(w.lam), set(w.v)
    edges = []
    if 1 in L:
        lower = _rebuild(w, U, L - {1}, V | {1})
        edges.append(CoveringEdge(w, lower, CoverType.B1))
    for a in sorted(L):
        # a = 1 would need 0 in v
        if a >= 2 and a - 1 in V:
            lower = _rebuild(w, U, (L - {a}) | {a - 1}, (V - {a - 1}) | {a})
            edges.append(CoveringEdge(w, lower, CoverType.B2))
    for a in w.u:
        for b in w.v:
            if b < a and all(c in L for c in _gap(b, a)):
                lower = _rebuild(w, (U - {a}) | {b}, L, (V - {b}) | {a})
                edges.append(CoveringEdge(w, lower, CoverType.B3))
    for b in w.u:
        for a in w.lam:
            if a > b and all(c in V for c in _gap(b, a)):
                lower = _rebuild(w, (U - {b}) | {a}, (L - {a}) | {b}, V)
                edges.append(CoveringEdge(w, lower, CoverType.B4))
    return _sorted_edges(edges, "lower")


def covers_of(w2: GrassmannPerm) -> list:
    """Every ``w`` covering ``w2``, as edges sorted by type then ``w``."""
    U, L, V = set(w2.u), set(w2.lam), set(w2.v)
    edges = []
    if 1 in V:
        upper = _rebuild(w2, U, L | {1}, V - {1})
        edges.append(CoveringEdge(upper, w2, CoverType.B1))
    for a in sorted(V):
        if a >= 2 and a - 1 in L:
            upper = _rebuild(w2, U, (L - {a - 1}) | {a}, (V - {a}) | {a - 1})
            edges.append(CoveringEdge(upper, w2, CoverType.B2))
    for b in w2.u:
        for a in w2.v:
            if a > b and all(c in L for c in _gap(b, a)):
                upper = _rebuild(w2, (U - {b}) | {a}, L, (V - {a}) | {b})
                edges.append(CoveringEdge(upper, w2, CoverType.B3))
    for a in w2.u:
        for b in w2.lam:
            if a > b and all(c in V for c in _gap(b, a)):
                upper = _rebuild(w2, (U - {a}) | {b}, (L - {b}) | {a}, V)
                edges.append(CoveringEdge(upper, w2, CoverType.B4))
    return _sorted_edges(edges, "upper")
