"""Exact convex hulls in V-representation.

Membership ``q in conv(P)`` is decided by a phase-one simplex over
``Fraction`` with Bland's smallest-index rule; everything else (extreme
points, lattice points, hull equality) is built on that one test.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

QPoint = tuple[Fraction, ...]

__all__ = [
    "QPoint",
    "qpoint",
    "contains",
    "extreme_points",
    "lattice_points",
    "op_negate",
    "hull_equal",
    "Hull",
]


def qpoint(p: Iterable) -> QPoint:
    return tuple(Fraction(x) for x in p)


def _dimension(points: Sequence[Sequence]) -> int:
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise ValueError(f"points of mixed dimension {sorted(dims)}")
    return dims.pop()


def _feasible(columns: Sequence[QPoint], q: QPoint) -> tuple[bool, tuple | None]:
    """Is there ``x >= 0`` with ``sum x_j = 1`` and ``sum x_j columns[j] = q``?

    Returns ``(True, None)`` or ``(False, (c, c0))`` where the Farkas
    certificate satisfies ``c.p + c0 <= 0`` for every column and
    ``c.q + c0 > 0``.
    """
    n = len(columns)
    r = len(q)
    m = r + 1
    rows = []
    signs = []
    for i in range(m):
        if i < r:
            row = [c[i] for c in columns]
            rhs = q[i]
        else:
            row = [Fraction(1)] * n
            rhs = Fraction(1)
        sign = -1 if rhs < 0 else 1
        if sign < 0:
            row = [-x for x in row]
            rhs = -rhs
        signs.append(sign)
        rows.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    width = n + m + 1
    basis = [n + i for i in range(m)]
    obj = [sum((rows[i][j] for i in range(m)), Fraction(0)) for j in range(width)]
    for k in range(n, n + m):
        obj[k] = Fraction(0)
    while True:
        col = next((j for j in range(n) if obj[j] > 0), None)
        if col is None:
            break
        best = None
        for i in range(m):
            a = rows[i][col]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # pragma: no cover - phase one objective is bounded
            break
        piv = best[1]
        inv = 1 / rows[piv][col]
        prow = [x * inv for x in rows[piv]]
        rows[piv] = prow
        for i in range(m):
            if i != piv and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        f = obj[col]
        obj = [x - f * y for x, y in zip(obj, prow)]
        basis[piv] = col
    if obj[-1] == 0:
        return True, None
    # the objective row is y^T [A | I | b] minus the artificial costs
    y = [obj[n + i] + 1 for i in range(m)]
    c = tuple(y[i] * signs[i] for i in range(r))
    return False, (c, y[r] * signs[r])


class Hull:
    """Convex hull of a finite point set with cached pruning data."""

    def __init__(self, points: Iterable[Sequence]):
        pts = sorted({qpoint(p) for p in points})
        if not pts:
            raise ValueError("empty point set")
        self.dim = _dimension(pts)
        self.points = pts
        self._point_set = set(pts)
        self.vertices = _extreme(pts)
        self.lower = tuple(min(p[j] for p in self.vertices) for j in range(self.dim))
        self.upper = tuple(max(p[j] for p in self.vertices) for j in range(self.dim))
        self._directions = _directions(self.dim)
        self._support = [max(_dot(c, p) for p in self.vertices) for c in self._directions]
        self._cuts: list[tuple] = []

    def __contains__(self, q) -> bool:
        q = qpoint(q)
        if len(q) != self.dim:
            raise ValueError("dimension mismatch")
        if q in self._point_set:
            return True
        if any(x < lo or x > hi for x, lo, hi in zip(q, self.lower, self.upper)):
            return False
        for c, s in zip(self._directions, self._support):
            if _dot(c, q) > s:
                return False
        for c, c0 in self._cuts:
            if _dot(c, q) + c0 > 0:
                return False
        inside, cut = _feasible(self.vertices, q)
        if cut is not None:
            self._cuts.append(cut)
        return inside

    def lattice_points(self) -> set[tuple[int, ...]]:
        ranges = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in zip(self.lower, self.upper)]
        return {z for z in itertools.product(*ranges) if z in self}


def _dot(c, p) -> Fraction:
    return sum((a * b for a, b in zip(c, p) if a), Fraction(0))


def _directions(r: int) -> list[tuple[int, ...]]:
    # cheap separating functionals tried before the LP
    if r <= 4:
        return [c for c in itertools.product((-1, 0, 1), repeat=r) if any(c)]
    out = []
    for i in range(r):
        for j in range(i, r):
            for si in (-1, 1):
                for sj in (-1, 1):
                    c = [0] * r
                    c[i] += si
                    c[j] += sj
                    if any(c):
                        out.append(tuple(c))
    out += [(1,) * r, (-1,) * r]
    return sorted(set(out))


def _extreme(pts: list[QPoint]) -> list[QPoint]:
    if len(pts) <= 1:
        return list(pts)
    # lexicographic extremes along each coordinate ordering are always vertices
    keep = list(pts)
    sure = {min(pts), max(pts)}
    for p in list(keep):
        if p in sure:
            continue
        others = [x for x in keep if x != p]
        if _feasible(others, p)[0]:
            keep = others
    return keep


def contains(points: Sequence[Sequence], q: Sequence) -> bool:
    """Exact test of ``q in conv(points)``."""
    if not points:
        raise ValueError("empty point set")
    pts = [qpoint(p) for p in points]
    q = qpoint(q)
    if _dimension(pts + [q]) != len(q):  # pragma: no cover
        raise ValueError("dimension mismatch")
    return _feasible(pts, q)[0]


def extreme_points(points: Sequence[Sequence]) -> list[QPoint]:
    """Minimal V-representation: ``p`` is kept iff it is not in the hull of the others."""
    if not points:
        raise ValueError("empty point set")
    pts = sorted({qpoint(p) for p in points})
    _dimension(pts)
    return _extreme(pts)


def lattice_points(points: Sequence[Sequence]) -> set[tuple[int, ...]]:
    return Hull(points).lattice_points()


def op_negate(points: Iterable[Sequence]) -> list[QPoint]:
    """``{-reverse(p)}``: the coordinate reversal composed with negation."""
    return [tuple(-Fraction(x) for x in reversed(p)) for p in points]


def hull_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ha, hb = Hull(a), Hull(b)
    if ha.dim != hb.dim:
        raise ValueError("dimension mismatch")
    return all(v in hb for v in ha.vertices) and all(v in ha for v in hb.vertices)
