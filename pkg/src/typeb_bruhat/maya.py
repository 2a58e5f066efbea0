"""Maya diagrams of k-Grassmannian permutations.

A diagram is a row of ``n`` boxes.  Box ``p`` holds ``o`` when ``p`` is in
``u``, ``b`` when ``p`` is a barred value and ``x`` when ``p`` is in ``v``.
The ASCII string is the canonical form; :meth:`MayaDiagram.unicode` gives
the ``∘ • ×`` rendering for display.
"""
from __future__ import annotations

from dataclasses import dataclass

from .covering import CoverType
from .errors import ParseError
from .grassmannian import GrassmannPerm, from_blocks

__all__ = [
    "CIRCLE",
    "BULLET",
    "CROSS",
    "MayaDiagram",
    "parse_maya",
    "to_maya",
    "from_maya",
    "maya_length",
    "maya_mu",
    "maya_covered_by",
    "maya_dual",
]

CIRCLE, BULLET, CROSS = "o", "b", "x"

_FROM_UNICODE = {"∘": CIRCLE, "○": CIRCLE, "•": BULLET, "×": CROSS}
_TO_UNICODE = {CIRCLE: "∘", BULLET: "•", CROSS: "×"}


@dataclass(frozen=True)
class MayaDiagram:
    boxes: str

    def __post_init__(self):
        if not self.boxes:
            raise ParseError("empty Maya diagram")
        for pos, c in enumerate(self.boxes, start=1):
            if c not in (CIRCLE, BULLET, CROSS):
                raise ParseError(f"bad box symbol {c!r}", pos)

    @property
    def n(self) -> int:
        return len(self.boxes)

    @property
    def k(self) -> int:
        return self.boxes.count(CIRCLE)

    def positions(self, symbol) -> tuple:
        return tuple(p for p, c in enumerate(self.boxes, start=1) if c == symbol)

    def unicode(self) -> str:
        return " ".join(_TO_UNICODE[c] for c in self.boxes)

    def __str__(self):
        return self.boxes


def parse_maya(text: str) -> MayaDiagram:
    """Accept ASCII ``o/b/x`` or the Unicode symbols; whitespace is ignored."""
    chars = []
    for c in "".join(text.split()):
        chars.append(_FROM_UNICODE.get(c, c.lower()))
    return MayaDiagram("".join(chars))


def to_maya(g: GrassmannPerm) -> MayaDiagram:
    boxes = [CROSS] * g.n
    for p in g.u:
        boxes[p - 1] = CIRCLE
    for p in g.lam:
        boxes[p - 1] = BULLET
    return MayaDiagram("".join(boxes))


def from_maya(m: MayaDiagram) -> GrassmannPerm:
    return from_blocks(
        m.n, m.k, m.positions(CIRCLE), m.positions(BULLET), m.positions(CROSS)
    )


def maya_mu(m: MayaDiagram) -> tuple:
    """For each circle, left to right, the number of crosses to its right."""
    out = []
    crosses_right = m.boxes.count(CROSS)
    for c in m.boxes:
        if c == CROSS:
            crosses_right -= 1
        elif c == CIRCLE:
            out.append(crosses_right)
    return tuple(out)


def maya_length(m: MayaDiagram) -> int:
    n, k = m.n, m.k
    return sum(n - k - mu for mu in maya_mu(m)) + sum(m.positions(BULLET))


def _swap(s, i, j, ci, cj):
    chars = list(s)
    chars[i], chars[j] = ci, cj
    return "".join(chars)


def maya_covered_by(m: MayaDiagram) -> list:
    """All diagrams one covering move below ``m``, found by pattern scanning.

    Patterns, reading left to right (w above, w' below):

    * B1: leading ``b`` becomes ``x``;
    * B2: ``xb`` becomes ``bx``;
    * B3: ``x b...b o`` becomes ``o b...b x``;
    * B4: ``o x...x b`` becomes ``b x...x o``.

    Runs of ``b`` or ``x`` in B3 and B4 may be empty.
    """
    s = m.boxes
    n = len(s)
    found = []
    if s[0] == BULLET:
        found.append((CoverType.B1, CROSS + s[1:]))
    for i in range(n - 1):
        if s[i] == CROSS and s[i + 1] == BULLET:
            found.append((CoverType.B2, _swap(s, i, i + 1, BULLET, CROSS)))
    for i, c in enumerate(s):
        if c == CROSS:
            j = i + 1
            while j < n and s[j] == BULLET:
                j += 1
            if j < n and s[j] == CIRCLE:
                found.append((CoverType.B3, _swap(s, i, j, CIRCLE, CROSS)))
        elif c == CIRCLE:
            j = i + 1
            while j < n and s[j] == CROSS:
                j += 1
            if j < n and s[j] == BULLET:
                found.append((CoverType.B4, _swap(s, i, j, BULLET, CIRCLE)))
    out = [(MayaDiagram(t), ctype) for ctype, t in found]
    out.sort(key=lambda item: (item[1].value, from_maya(item[0]).entries))
    return out


def maya_dual(m: MayaDiagram) -> MayaDiagram:
    return MayaDiagram(m.boxes.translate(str.maketrans({BULLET: CROSS, CROSS: BULLET})))
