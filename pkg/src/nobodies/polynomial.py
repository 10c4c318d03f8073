"""Sparse multivariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


def _common_denominator(coeffs) -> int:
    d = 1
    for c in coeffs:
        d = lcm(d, c.denominator)
    return d


class Polynomial:
    """Polynomial in ``t_1 .. t_r`` stored as ``{exponent tuple: Fraction}``.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have length {nvars}")
            if c:
                clean[tuple(e)] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c=1) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, k: int) -> Polynomial:
        """The variable ``t_k`` (1-based)."""
        return cls.monomial(nvars, tuple(int(j == k - 1) for j in range(nvars)))

    @classmethod
    def monomial(cls, nvars: int, exponent: Iterable[int], c=1) -> Polynomial:
        return cls(nvars, {tuple(exponent): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: Polynomial) -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def scale(self, c) -> Polynomial:
        c = Fraction(c)
        if c == 0:
            return Polynomial(self.nvars)
        return Polynomial(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        # integer arithmetic over a common denominator is much faster than Fraction
        d1 = _common_denominator(self.terms.values())
        d2 = _common_denominator(other.terms.values())
        left = [(e, int(c * d1)) for e, c in self.terms.items()]
        right = [(e, int(c * d2)) for e, c in other.terms.items()]
        out: dict = {}
        for e1, c1 in left:
            for e2, c2 in right:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        d = d1 * d2
        return Polynomial(self.nvars, {e: Fraction(c, d) for e, c in out.items() if c})

    def __rmul__(self, other) -> Polynomial:
        return self.scale(other)

    def __pow__(self, n: int) -> Polynomial:
        out = Polynomial.constant(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def degree_in(self, k: int) -> int:
        """Degree in ``t_k``; ``-1`` for the zero polynomial."""
        return max((e[k - 1] for e in self.terms), default=-1)

    def derivative(self, k: int, times: int = 1) -> Polynomial:
        """``d^times / dt_k^times``."""
        out = {}
        for e, c in self.terms.items():
            a = e[k - 1]
            if a < times:
                continue
            ne = e[: k - 1] + (a - times,) + e[k:]
            out[ne] = c * (factorial(a) // factorial(a - times))
        return Polynomial(self.nvars, out)

    def substitute_zero(self, k: int) -> Polynomial:
        """Set ``t_k = 0`` (the ring keeps its ``nvars``)."""
        return Polynomial(self.nvars, {e: c for e, c in self.terms.items() if e[k - 1] == 0})

    def shift(self, exponent: Exponent, c=1) -> Polynomial:
        """Multiply by the monomial ``c * t^exponent``."""
        c = Fraction(c)
        return Polynomial(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exponent)): v * c for e, v in self.terms.items()},
        )

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending lexicographic order of exponents (``t_1 > ... > t_r``)."""
        return sorted(self.terms.items(), reverse=True)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {dict(self.sorted_terms())!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"t{k + 1}" if a == 1 else f"t{k + 1}^{a}" for k, a in enumerate(e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def t(nvars: int, k: int) -> Polynomial:
    """Shorthand for the variable ``t_k`` in ``nvars`` variables."""
    return Polynomial.variable(nvars, k)
