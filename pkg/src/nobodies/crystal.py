"""Crystals B(lambda) and Demazure crystals via the Littelmann path model.

A path is a sequence of linear segments ``(direction, duration)`` with
rational durations summing to 1; directions are weights in fundamental
coordinates.  For the simple index ``i`` the height function is
``h_i(t) = <path(t), h_i>``, which is piecewise linear with break points at
segment boundaries.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .cartan import RootSystemData, is_reduced

__all__ = [
    "LSPath",
    "straight_path",
    "root_f",
    "root_e",
    "eps",
    "phi",
    "wt",
    "DemazureCrystal",
    "demazure_crystal",
    "full_crystal",
    "string_parametrization",
    "crystal_level_sets",
]

Segment = tuple[tuple[Fraction, ...], Fraction]


def _normalize(segments) -> tuple[Segment, ...]:
    out: list[list] = []
    for d, dur in segments:
        if dur == 0:
            continue
        d = tuple(Fraction(x) for x in d)
        if out and out[-1][0] == d:
            out[-1][1] += dur
        else:
            out.append([d, Fraction(dur)])
    return tuple((d, dur) for d, dur in out)


@dataclass(frozen=True)
class LSPath:
    segments: tuple[Segment, ...]

    @classmethod
    def from_segments(cls, segments) -> LSPath:
        segs = _normalize(segments)
        if sum(dur for _, dur in segs) != 1:
            raise ValueError("segment durations must sum to 1")
        return cls(segs)

    @property
    def rank(self) -> int:
        return len(self.segments[0][0])

    def endpoint(self) -> tuple[Fraction, ...]:
        end = [Fraction(0)] * self.rank
        for d, dur in self.segments:
            for j, x in enumerate(d):
                end[j] += x * dur
        return tuple(end)

    def heights(self, i: int) -> list[Fraction]:
        """``h_i`` at the break points ``0 = s_0 < s_1 < ... < s_m = 1``."""
        h = [Fraction(0)]
        for d, dur in self.segments:
            h.append(h[-1] + d[i - 1] * dur)
        return h

    def sort_key(self):
        return tuple((tuple(-x for x in d), dur) for d, dur in self.segments)

    def __repr__(self) -> str:
        segs = ", ".join(
            "(" + ",".join(str(x) for x in d) + f")*{dur}" for d, dur in self.segments
        )
        return f"LSPath[{segs}]"


def straight_path(lam: Sequence[int]) -> LSPath:
    if any(x < 0 for x in lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    return LSPath.from_segments([(tuple(lam), Fraction(1))])


def wt(path: LSPath) -> tuple[int, ...]:
    end = path.endpoint()
    if any(x.denominator != 1 for x in end):
        raise ValueError(f"non-integral endpoint {end}")
    return tuple(int(x) for x in end)


def eps(path: LSPath, i: int) -> int:
    """Number of times ``e_i`` can be applied: minus the minimum of ``h_i``."""
    return int(-min(path.heights(i)))


def phi(path: LSPath, i: int) -> int:
    h = path.heights(i)
    return int(h[-1] - min(h))


def _reflect_window(rs: RootSystemData, path: LSPath, i: int, lo: Fraction, hi: Fraction) -> LSPath:
    """Reflect the directions of the part of ``path`` on times ``[lo, hi]`` by ``s_i``."""
    alpha = rs.simple_root_weight(i)
    out = []
    s = Fraction(0)
    for d, dur in path.segments:
        a, b = s, s + dur
        s = b
        pieces = []
        cuts = sorted({a, b} | {x for x in (lo, hi) if a < x < b})
        for u, v in zip(cuts, cuts[1:]):
            pieces.append((u, v))
        for u, v in pieces:
            if lo <= u and v <= hi:
                m = d[i - 1]
                out.append((tuple(x - m * y for x, y in zip(d, alpha)), v - u))
            else:
                out.append((d, v - u))
    return LSPath.from_segments(out)


def root_f(rs: RootSystemData, path: LSPath, i: int) -> LSPath | None:
    h = path.heights(i)
    m = min(h)
    if h[-1] - m < 1:
        return None
    times = [Fraction(0)]
    for _, dur in path.segments:
        times.append(times[-1] + dur)
    p_idx = max(k for k, x in enumerate(h) if x == m)
    # first time after the last minimum at which h reaches m + 1
    for k in range(p_idx, len(path.segments)):
        if h[k + 1] >= m + 1:
            slope = path.segments[k][0][i - 1]
            x = times[k] + (m + 1 - h[k]) / slope
            break
    return _reflect_window(rs, path, i, times[p_idx], x)


def root_e(rs: RootSystemData, path: LSPath, i: int) -> LSPath | None:
    h = path.heights(i)
    m = min(h)
    if m > -1:
        return None
    times = [Fraction(0)]
    for _, dur in path.segments:
        times.append(times[-1] + dur)
    q_idx = min(k for k, x in enumerate(h) if x == m)
    # last time before the first minimum at which h equals m + 1
    for k in range(q_idx - 1, -1, -1):
        if h[k] >= m + 1:
            slope = path.segments[k][0][i - 1]
            y = times[k] + (m + 1 - h[k]) / slope
            break
    return _reflect_window(rs, path, i, y, times[q_idx])


def _f_string(rs, b, i) -> Iterator[LSPath]:
    while b is not None:
        yield b
        b = root_f(rs, b, i)


@dataclass(frozen=True)
class DemazureCrystal:
    lam: tuple[int, ...]
    word: tuple[int, ...]
    elements: frozenset

    def __len__(self) -> int:
        return len(self.elements)

    def sorted(self) -> list[LSPath]:
        return sorted(self.elements, key=LSPath.sort_key)


def demazure_crystal(rs: RootSystemData, lam: Sequence[int], word: Sequence[int]) -> DemazureCrystal:
    """``{f_{i_1}^{a_1} ... f_{i_r}^{a_r} b_lambda} minus {0}``."""
    word = tuple(word)
    if not is_reduced(rs, word):
        raise ValueError(f"{word} is not a reduced word")
    elements = {straight_path(lam)}
    for i in reversed(word):
        elements = {x for b in elements for x in _f_string(rs, b, i)}
    return DemazureCrystal(tuple(lam), word, frozenset(elements))


def full_crystal(rs: RootSystemData, lam: Sequence[int]) -> set[LSPath]:
    """Closure of ``b_lambda`` under all lowering operators."""
    start = straight_path(lam)
    seen = {start}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for i in range(1, rs.rank + 1):
            c = root_f(rs, b, i)
            if c is not None and c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def string_parametrization(rs: RootSystemData, b: LSPath, word: Sequence[int]) -> tuple[int, ...]:
    """Iterated maximal raising exponents along ``word``.

    Raises ``ValueError`` if peeling does not end at the highest element,
    i.e. ``b`` is not in the Demazure crystal of ``word``.
    """
    out = []
    for i in word:
        a = eps(b, i)
        for _ in range(a):
            b = root_e(rs, b, i)
        out.append(a)
    if len(b.segments) != 1 or any(eps(b, i) for i in range(1, rs.rank + 1)):
        raise ValueError("path is not in the Demazure crystal of this word")
    return tuple(out)


def crystal_level_sets(rs: RootSystemData, lam: Sequence[int], word: Sequence[int], K: int) -> dict[int, set]:
    if K < 1:
        raise ValueError("K must be at least 1")
    out = {}
    for k in range(1, K + 1):
        crys = demazure_crystal(rs, tuple(k * x for x in lam), word)
        out[k] = {string_parametrization(rs, b, word) for b in crys.elements}
    return out
