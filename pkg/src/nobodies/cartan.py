"""Finite-type root systems, weights and reduced words.

Convention: ``cartan[i][j] = <alpha_j, h_i>`` with Bourbaki node numbering.
Indices in the public API are 1-based (as in reduced words); internally the
matrix is 0-based.  Weights are tuples in fundamental-weight coordinates, so
``<mu, h_i>`` is simply ``mu[i - 1]``.  Roots are tuples in simple-root
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

__all__ = [
    "RootSystemData",
    "build_root_system",
    "simple_reflect",
    "is_reduced",
    "longest_word",
    "inversion_roots",
    "same_element",
    "alternative_word",
    "POSITIVE_ROOT_COUNTS",
]


def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def _cartan_matrix(series: str, n: int) -> list[list[int]]:
    if series == "A":
        return _chain(n)
    if series == "B":
        c = _chain(n)
        c[n - 1][n - 2] = -2
        return c
    if series == "C":
        c = _chain(n)
        c[n - 2][n - 1] = -2
        return c
    if series == "D":
        c = _chain(n - 1) + [[0] * (n - 1)]
        for row in c:
            row.append(0)
        c[n - 1][n - 1] = 2
        c[n - 2][n - 3] = c[n - 3][n - 2] = -1
        c[n - 1][n - 3] = c[n - 3][n - 1] = -1
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        return c
    if series == "E":
        # Bourbaki: 1-3-4-5-6-7-8 is the long arm, node 2 hangs off node 4.
        c = [[0] * n for _ in range(n)]
        for i in range(n):
            c[i][i] = 2
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        for a, b in edges:
            if a <= n and b <= n:
                c[a - 1][b - 1] = c[b - 1][a - 1] = -1
        return c
    if series == "F":
        c = _chain(4)
        c[2][1] = -2
        return c
    if series == "G":
        return [[2, -1], [-3, 2]]
    raise ValueError(f"unknown series {series!r}")


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _count_positive_roots(series: str, n: int) -> int:
    if series == "A":
        return n * (n + 1) // 2
    if series in "BC":
        return n * n
    if series == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(series, n)]


POSITIVE_ROOT_COUNTS = _count_positive_roots


@dataclass(frozen=True)
class RootSystemData:
    """Cartan data for a finite-type root system."""

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    def pairing(self, root: Sequence[int], i: int) -> int:
        """``<root, h_i>`` for a root in simple-root coordinates (``i`` 1-based)."""
        row = self.cartan[i - 1]
        return sum(row[j] * root[j] for j in range(self.rank))

    def simple_root_weight(self, i: int) -> tuple[int, ...]:
        """``alpha_i`` in fundamental-weight coordinates (column ``i`` of the Cartan matrix)."""
        return tuple(self.cartan[k][i - 1] for k in range(self.rank))

    def root_to_weight(self, root: Sequence) -> tuple:
        return tuple(sum(self.cartan[k][j] * root[j] for j in range(self.rank)) for k in range(self.rank))

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        """``d_i = (alpha_i, alpha_i) / 2`` normalised so that the shortest root has ``d = 1``."""
        d: list[Fraction | None] = [None] * self.rank
        for start in range(self.rank):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(self.rank):
                    if j != i and self.cartan[i][j] != 0 and d[j] is None:
                        # d_i c[i][j] = d_j c[j][i]
                        d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                        stack.append(j)
        smallest = min(d)
        return tuple(x / smallest for x in d)

    def weight_to_root_coords(self, mu: Sequence) -> tuple[Fraction, ...]:
        """Solve ``sum_j q_j alpha_j = mu`` for rational root coordinates ``q``."""
        from .linalg import solve

        sol = solve([[Fraction(x) for x in row] for row in self.cartan], [Fraction(x) for x in mu])
        if sol is None:  # pragma: no cover - Cartan matrices are invertible
            raise ArithmeticError("singular Cartan matrix")
        return tuple(sol)

    def inner(self, mu: Sequence, nu: Sequence) -> Fraction:
        """Invariant form ``(mu, nu)`` for weights in fundamental coordinates."""
        q = self.weight_to_root_coords(nu)
        d = self.symmetrizer
        return sum((Fraction(q[k]) * mu[k] * d[k] for k in range(self.rank)), Fraction(0))

    def coroot_pairing(self, mu: Sequence, root: Sequence[int]) -> Fraction:
        """``<mu, beta^vee>`` for a weight ``mu`` and a positive root ``beta``."""
        d = self.symmetrizer
        beta = [Fraction(c) for c in root]
        norm = sum(beta[j] * d[j] * self.pairing(root, j + 1) for j in range(self.rank)) / 2
        # beta^vee = sum_j beta_j (d_j / d_beta) h_j with d_beta = (beta, beta) / 2
        return sum((beta[j] * d[j] / norm * mu[j] for j in range(self.rank)), Fraction(0))

    @property
    def rho(self) -> tuple[int, ...]:
        return (1,) * self.rank


def _generate_positive_roots(cartan: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                p = sum(cartan[i][j] * beta[j] for j in range(n))
                gamma = tuple(beta[j] - p * (j == i) for j in range(n))
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    positive = [r for r in seen if all(c >= 0 for c in r)]
    return tuple(sorted(positive, key=lambda r: (sum(r), r)))


def build_root_system(series: str, rank: int) -> RootSystemData:
    series = str(series).upper()
    if series not in _VALID_RANKS or not isinstance(rank, int) or not _VALID_RANKS[series](rank):
        raise ValueError(f"invalid finite type ({series!r}, {rank!r})")
    c = _cartan_matrix(series, rank)
    roots = _generate_positive_roots(c)
    if len(roots) != _count_positive_roots(series, rank):  # pragma: no cover
        raise AssertionError("positive root count mismatch")
    return RootSystemData(series, rank, tuple(tuple(r) for r in c), roots)


def _check_index(rs: RootSystemData, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"index {i} out of range 1..{rs.rank}")


def simple_reflect(rs: RootSystemData, i: int, mu: Sequence) -> tuple:
    """``s_i mu = mu - <mu, h_i> alpha_i`` in fundamental-weight coordinates."""
    _check_index(rs, i)
    m = mu[i - 1]
    alpha = rs.simple_root_weight(i)
    return tuple(mu[k] - m * alpha[k] for k in range(rs.rank))


def _reflect_root(rs: RootSystemData, i: int, beta: Sequence[int]) -> tuple[int, ...]:
    p = rs.pairing(beta, i)
    return tuple(beta[j] - p * (j == i - 1) for j in range(rs.rank))


def inversion_roots(rs: RootSystemData, word: Sequence[int]) -> list[tuple[int, ...]]:
    """The roots ``s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})`` for ``k = 1..r``."""
    out = []
    for k, ik in enumerate(word):
        _check_index(rs, ik)
        beta = tuple(int(j == ik - 1) for j in range(rs.rank))
        for i in reversed(word[:k]):
            beta = _reflect_root(rs, i, beta)
        out.append(beta)
    return out


def is_reduced(rs: RootSystemData, word: Sequence[int]) -> bool:
    roots = inversion_roots(rs, list(word))
    return all(all(c >= 0 for c in b) for b in roots) and len(set(roots)) == len(roots)


def longest_word(rs: RootSystemData) -> tuple[int, ...]:
    # every reduced word extends to a reduced word for w0, so greedy lex-min works
    word: list[int] = []
    target = len(rs.positive_roots)
    while len(word) < target:
        for i in range(1, rs.rank + 1):
            if is_reduced(rs, word + [i]):
                word.append(i)
                break
    return tuple(word)


def same_element(rs: RootSystemData, u: Sequence[int], v: Sequence[int]) -> bool:
    """Do two reduced words spell the same Weyl group element?"""
    return set(inversion_roots(rs, list(u))) == set(inversion_roots(rs, list(v)))


def alternative_word(rs: RootSystemData, word: Sequence[int]) -> tuple[int, ...]:
    """Reduced word for the same element built from the largest left descent each step.

    ``s_i w < w`` iff ``alpha_i`` is one of the inversion roots of the word, and
    then ``s_i w`` is spelled by deleting the letter that produced ``alpha_i``.
    """
    u = list(word)
    if not is_reduced(rs, u):
        raise ValueError(f"{tuple(word)} is not a reduced word")
    out = []
    while u:
        roots = inversion_roots(rs, u)
        simple = {tuple(int(j == i - 1) for j in range(rs.rank)): i for i in range(1, rs.rank + 1)}
        descents = [(simple[b], p) for p, b in enumerate(roots) if b in simple]
        i, p = max(descents)
        out.append(i)
        del u[p]
    return tuple(out)
