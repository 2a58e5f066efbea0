"""Brute-force ground truth for the Bruhat order of W_n and its quotients.

Nothing here uses the block description of minimal coset representatives
or the covering rules of :mod:`typeb_bruhat.covering`:

* lengths are word lengths, found by breadth-first search over the simple
  reflections from the identity;
* covering relations of W_n come from scanning every window transposition
  ``(i, j)(-i, -j)`` / ``(i, -i)`` with ``w(i) > w(j)`` and keeping the
  products one step shorter;
* Bruhat order is reachability along those covers;
* ``W_n^(k)`` is found from its definition, ``l(w) < l(w s_i)`` for all
  ``i != k``.

Only the final conversion of quotient elements into
:class:`~typeb_bruhat.grassmannian.GrassmannPerm` touches other modules,
and that conversion fails loudly if the two descriptions ever disagree.
"""
from __future__ import annotations

import itertools
import logging
import os
from collections import deque

import numpy as np

from .errors import ContractError, ResourceGuardError
from .grassmannian import from_signed
from .signed_perm import SignedPermutation

__all__ = [
    "DEFAULT_MAX_N",
    "FORMAT_VERSION",
    "FullGroupTable",
    "build_full_group",
    "bruhat_leq",
    "quotient_indices",
    "quotient_cover_oracle",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 6
FORMAT_VERSION = 1


class FullGroupTable:
    """All of W_n with lengths, right simple actions and cover edges.

    ``elements[i]`` is the one-line word of element ``i`` (rows sorted
    lexicographically); ``cover_edges`` has rows ``(lower, upper)``.
    Arrays are made read-only after construction.
    """

    def __init__(self, n, elements, length, right_simple, cover_edges):
        self.n = n
        self.elements = elements
        self.length = length
        self.right_simple = right_simple
        self.cover_edges = cover_edges
        for arr in (elements, length, right_simple, cover_edges):
            arr.flags.writeable = False
        self._keys = _encode(elements, n)
        self._key_order = np.argsort(self._keys, kind="stable")
        self._sorted_keys = self._keys[self._key_order]
        self._up = None

    def __len__(self):
        return len(self.elements)

    def index_rows(self, rows) -> np.ndarray:
        keys = _encode(rows, self.n)
        pos = np.searchsorted(self._sorted_keys, keys)
        idx = self._key_order[pos]
        if not np.array_equal(self._keys[idx], keys):
            raise ContractError("rows are not elements of this group")
        return idx

    def index(self, w) -> int:
        if isinstance(w, (int, np.integer)):
            return int(w)
        if w.n != self.n:
            raise ContractError(f"rank mismatch: {w.n} vs {self.n}")
        return int(self.index_rows(np.array([w.entries], dtype=np.int8))[0])

    def element(self, i) -> SignedPermutation:
        return SignedPermutation(tuple(int(x) for x in self.elements[i]))

    @property
    def identity_index(self) -> int:
        return self.index(SignedPermutation(tuple(range(1, self.n + 1))))

    @property
    def longest_index(self) -> int:
        return self.index(SignedPermutation(tuple(range(-1, -self.n - 1, -1))))

    def up_neighbors(self, i) -> np.ndarray:
        if self._up is None:
            lo, hi = self.cover_edges[:, 0], self.cover_edges[:, 1]
            order = np.argsort(lo, kind="stable")
            starts = np.searchsorted(lo[order], np.arange(len(self) + 1))
            self._up = (hi[order], starts)
        targets, starts = self._up
        return targets[starts[i]:starts[i + 1]]

    def save(self, path):
        np.savez_compressed(
            path,
            version=np.array(FORMAT_VERSION),
            n=np.array(self.n),
            elements=self.elements,
            length=self.length,
            right_simple=self.right_simple,
            cover_edges=self.cover_edges,
        )

    @classmethod
    def load(cls, path) -> "FullGroupTable":
        with np.load(path) as data:
            if int(data["version"]) != FORMAT_VERSION:
                raise ValueError(f"{path}: cache format {int(data['version'])}")
            return cls(
                int(data["n"]),
                data["elements"].copy(),
                data["length"].copy(),
                data["right_simple"].copy(),
                data["cover_edges"].copy(),
            )


def _encode(rows, n):
    base = 2 * n + 1
    weights = base ** np.arange(n, dtype=np.int64)
    return (rows.astype(np.int64) + n) @ weights


def _all_rows(n):
    rows = [
        tuple(s * a for s, a in zip(signs, p))
        for p in itertools.permutations(range(1, n + 1))
        for signs in itertools.product((1, -1), repeat=n)
    ]
    rows.sort()
    return np.array(rows, dtype=np.int8).reshape(len(rows), n)


def _window(rows):
    # column c holds position c - n
    return np.concatenate([-rows[:, ::-1], np.zeros((len(rows), 1), rows.dtype), rows], axis=1)


def _lookup(table_keys, key_order, rows, n):
    keys = _encode(rows, n)
    return key_order[np.searchsorted(table_keys, keys)]


def _cache_path(cache_dir, n):
    return os.path.join(cache_dir, f"typeb_W{n}_v{FORMAT_VERSION}.npz")


def build_full_group(n: int, max_n: int = DEFAULT_MAX_N, cache_dir=None) -> FullGroupTable:
    """Enumerate W_n with word lengths and every covering relation.

    ``max_n`` guards against accidental huge builds (``|W_7| = 645120``).
    With ``cache_dir`` the table is read from / written to an ``.npz`` file;
    the cache only saves time and never changes results.
    """
    if n < 1:
        raise ContractError(f"rank n={n} must be >= 1")
    if n > max_n:
        raise ResourceGuardError(f"n={n} exceeds the full-group bound {max_n}")
    if cache_dir is not None:
        path = _cache_path(cache_dir, n)
        if os.path.exists(path):
            try:
                return FullGroupTable.load(path)
            except (ValueError, KeyError, OSError) as exc:
                log.warning("ignoring unusable cache %s: %s", path, exc)

    rows = _all_rows(n)
    N = len(rows)
    keys = _encode(rows, n)
    key_order = np.argsort(keys, kind="stable")
    sorted_keys = keys[key_order]

    right_simple = np.empty((n, N), dtype=np.int64)
    for i in range(n):
        moved = rows.copy()
        if i == 0:
            moved[:, 0] = -moved[:, 0]
        else:
            moved[:, [i - 1, i]] = moved[:, [i, i - 1]]
        right_simple[i] = _lookup(sorted_keys, key_order, moved, n)

    length = np.full(N, -1, dtype=np.int64)
    start = int(_lookup(sorted_keys, key_order, np.arange(1, n + 1, dtype=np.int8)[None, :], n)[0])
    length[start] = 0
    frontier = np.array([start])
    level = 0
    while frontier.size:
        level += 1
        nxt = np.unique(right_simple[:, frontier].ravel())
        nxt = nxt[length[nxt] < 0]
        length[nxt] = level
        frontier = nxt

    win = _window(rows)
    positions = [p for p in range(-n, n + 1) if p != 0]
    found = []
    for i, j in itertools.combinations(positions, 2):
        ci, cj = i + n, j + n
        sel = np.nonzero(win[:, ci] > win[:, cj])[0]
        if not sel.size:
            continue
        moved = win[sel].copy()
        moved[:, [ci, cj]] = moved[:, [cj, ci]]
        if abs(i) != abs(j):
            mi, mj = -i + n, -j + n
            moved[:, [mi, mj]] = moved[:, [mj, mi]]
        lower = _lookup(sorted_keys, key_order, moved[:, n + 1:], n)
        keep = length[sel] == length[lower] + 1
        found.append(np.stack([lower[keep], sel[keep]], axis=1))
    if found:
        edges = np.unique(np.concatenate(found), axis=0)
    else:
        edges = np.empty((0, 2), dtype=np.int64)

    table = FullGroupTable(n, rows, length, right_simple, edges)
    if cache_dir is not None:
        os.makedirs(cache_dir, exist_ok=True)
        table.save(_cache_path(cache_dir, n))
    return table


def bruhat_leq(table: FullGroupTable, a, b) -> bool:
    """``a <= b`` in Bruhat order: ``b`` is reachable from ``a`` going up covers."""
    a, b = table.index(a), table.index(b)
    top = table.length[b]
    if table.length[a] > top:
        return False
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            return True
        for y in table.up_neighbors(x):
            y = int(y)
            if y not in seen and table.length[y] <= top:
                seen.add(y)
                queue.append(y)
    return False


def quotient_indices(table: FullGroupTable, k: int) -> np.ndarray:
    """Indices of ``W_n^(k)``: elements lengthened by every ``s_i``, ``i != k``."""
    if not 0 <= k <= table.n:
        raise ContractError(f"k={k} outside [0, {table.n}]")
    mask = np.ones(len(table), dtype=bool)
    for i in range(table.n):
        if i != k:
            mask &= table.length[table.right_simple[i]] > table.length
    return np.nonzero(mask)[0]


def quotient_cover_indices(table: FullGroupTable, k: int) -> set:
    """Covering pairs ``(lower, upper)`` of ``W_n^(k)`` as table indices.

    For every element ``x`` a boolean row records which quotient elements
    lie below ``x``; rows are filled level by level along the cover edges,
    which only join consecutive lengths.
    """
    q = quotient_indices(table, k)
    col = {int(x): c for c, x in enumerate(q)}
    below = np.zeros((len(table), len(q)), dtype=bool)
    below[q, np.arange(len(q))] = True

    edges = table.cover_edges
    edge_level = table.length[edges[:, 1]]
    order = np.lexsort((edges[:, 1], edge_level))
    edges, edge_level = edges[order], edge_level[order]
    bounds = np.searchsorted(edge_level, np.arange(1, int(table.length.max()) + 2))
    lo = 0
    for hi in bounds:
        if hi > lo:
            lev_lower, lev_upper = edges[lo:hi, 0], edges[lo:hi, 1]
            starts = np.flatnonzero(np.r_[True, lev_upper[1:] != lev_upper[:-1]])
            merged = np.logical_or.reduceat(below[lev_lower], starts, axis=0)
            below[lev_upper[starts]] |= merged
        lo = hi

    pairs = set()
    lengths = table.length
    for upper in q:
        for lower in q:
            if lengths[upper] == lengths[lower] + 1 and below[upper, col[int(lower)]]:
                pairs.add((int(lower), int(upper)))
    return pairs


def quotient_cover_oracle(n: int, k: int, table=None, max_n=DEFAULT_MAX_N, cache_dir=None) -> set:
    """Ground-truth covering pairs ``(lower, upper)`` of ``W_n^(k)``."""
    if table is None:
        table = build_full_group(n, max_n=max_n, cache_dir=cache_dir)
    elif table.n != n:
        raise ContractError(f"table has rank {table.n}, expected {n}")
    return {
        (from_signed(table.element(lo), k), from_signed(table.element(up), k))
        for lo, up in quotient_cover_indices(table, k)
    }
