"""Lexicographic valuations on Q[t_1, ..., t_r] and Newton-Okounkov value sets.

Two monomial orders are used: ``<`` compares exponents from ``t_1`` onward and
``≺`` compares from ``t_r`` backward.  Each of the four valuations emits a
tuple such that, under plain lexicographic comparison of the emitted tuples,
the valuation of a polynomial is the *minimum* over its monomials:

=========  ==============================  ===========================
kind       extremal monomial               emitted tuple
=========  ==============================  ===========================
HighLex    ``<``-largest   ``t^a``         ``-(a_1, ..., a_r)``
LowLex     ``<``-smallest  ``t^a``         ``(a_1, ..., a_r)``
HighTilde  ``≺``-largest   ``t^a``         ``-(a_r, ..., a_1)``
LowTilde   ``≺``-smallest  ``t^a``         ``(a_r, ..., a_1)``
=========  ==============================  ===========================
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

from .cartan import RootSystemData, is_reduced
from .chart import section_blocks
from .polynomial import Polynomial
from .rep import Irrep, build_irrep

ValueTuple = tuple[int, ...]

__all__ = [
    "ValuationKind",
    "ValueTuple",
    "monomial_value",
    "valuate",
    "valuate_quotient",
    "chevalley_valuate",
    "value_basis",
    "value_set",
    "graded_value_set",
    "ChartContext",
    "semigroup_levels",
]


class ValuationKind(enum.Enum):
    HighLex = "HighLex"
    LowLex = "LowLex"
    HighTilde = "HighTilde"
    LowTilde = "LowTilde"

    @property
    def is_high(self) -> bool:
        return self in (ValuationKind.HighLex, ValuationKind.HighTilde)

    @property
    def is_tilde(self) -> bool:
        return self in (ValuationKind.HighTilde, ValuationKind.LowTilde)

    @property
    def symbol(self) -> str:
        return {"HighLex": "v^high", "LowLex": "v^low", "HighTilde": "ṽ^high", "LowTilde": "ṽ^low"}[self.value]


ALL_KINDS = tuple(ValuationKind)


def monomial_value(e: Sequence[int], kind: ValuationKind) -> ValueTuple:
    a = tuple(reversed(e)) if kind.is_tilde else tuple(e)
    return tuple(-x for x in a) if kind.is_high else a


def _lead(p: Polynomial, kind: ValuationKind):
    return min(p.terms, key=lambda e: monomial_value(e, kind))


def valuate(p: Polynomial, kind: ValuationKind) -> ValueTuple:
    if not p:
        raise ValueError("the zero polynomial has no valuation")
    return monomial_value(_lead(p, kind), kind)


def valuate_quotient(f: Polynomial, g: Polynomial, kind: ValuationKind) -> ValueTuple:
    """Valuation of the rational function ``f / g``."""
    return tuple(a - b for a, b in zip(valuate(f, kind), valuate(g, kind)))


def chevalley_valuate(p: Polynomial, word: Sequence[int], side: str = "left") -> ValueTuple:
    """Highest term valuations through the lowering-operator action on the chart.

    ``f_{i_1}`` acts on the left as ``-d/dt_1``: the exponent ``a_1`` is the
    largest power of ``f_{i_1}`` not killing ``p``.  After applying that power
    the result is restricted to the subchart ``t_1 = 0`` and the procedure
    continues with ``t_2``.  ``side="right"`` runs the same recursion from
    ``t_r`` with the right action of ``f_{i_r}``, giving the tilde valuation.
    """
    if not p:
        raise ValueError("the zero polynomial has no valuation")
    r = len(word)
    if p.nvars != r:
        raise ValueError(f"polynomial has {p.nvars} variables, word has length {r}")
    if side == "left":
        order = range(1, r + 1)
    elif side == "right":
        order = range(r, 0, -1)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    exps = {}
    for k in order:
        a = 0
        q = p
        while True:
            nxt = -q.derivative(k)
            if not nxt:
                break
            q = nxt
            a += 1
        exps[k] = a
        p = q.substitute_zero(k)
    if side == "left":
        return tuple(-exps[k] for k in range(1, r + 1))
    return tuple(-exps[k] for k in range(r, 0, -1))


def value_basis(ps: Iterable[Polynomial], kind: ValuationKind) -> dict[ValueTuple, Polynomial]:
    """Recombine ``ps`` into a basis of their span with pairwise distinct values."""
    basis: dict[ValueTuple, tuple[tuple, Polynomial]] = {}
    for p in ps:
        while p:
            e = _lead(p, kind)
            val = monomial_value(e, kind)
            if val not in basis:
                basis[val] = (e, p)
                break
            _, q = basis[val]
            p = p - q.scale(p.terms[e] / q.terms[e])
    return {val: q for val, (_, q) in basis.items()}


def value_set(ps: Iterable[Polynomial], kind: ValuationKind) -> set[ValueTuple]:
    """``{valuate(f) : f in span(ps), f != 0}``; its size is the dimension of the span."""
    return set(value_basis(ps, kind))


def graded_value_set(blocks: dict, kind: ValuationKind) -> set[ValueTuple]:
    """Value set of a direct sum of blocks whose monomial supports are disjoint.

    Weight spaces of the chart give such a decomposition, and the extremal
    monomial of a sum is the extremal one among the summands.
    """
    out: set = set()
    for polys in blocks.values():
        out |= value_set(polys, kind)
    return out


class ChartContext:
    """Cached irreps and section spaces for the levels ``k * lambda`` of one case."""

    def __init__(self, rs: RootSystemData, lam: Sequence[int], word: Sequence[int]):
        self.rs = rs
        self.lam = tuple(lam)
        self.word = tuple(word)
        if not is_reduced(rs, self.word):
            raise ValueError(f"{self.word} is not a reduced word")
        self._irreps: dict[int, Irrep] = {}
        self._blocks: dict[int, dict] = {}

    def level_weight(self, k: int) -> tuple:
        return tuple(k * x for x in self.lam)

    def irrep(self, k: int) -> Irrep:
        if k not in self._irreps:
            self._irreps[k] = build_irrep(self.rs, self.level_weight(k))
        return self._irreps[k]

    def blocks(self, k: int) -> dict:
        if k not in self._blocks:
            self._blocks[k] = section_blocks(self.irrep(k), self.word)
        return self._blocks[k]

    def sections(self, k: int) -> list[Polynomial]:
        return [p for ps in self.blocks(k).values() for p in ps]


def semigroup_levels(ctx: ChartContext, kind: ValuationKind, K: int) -> dict[int, set[ValueTuple]]:
    """Level ``k`` of the valuation semigroup for ``k = 1..K`` (normalised by ``tau_lambda``)."""
    if K < 1:
        raise ValueError("K must be at least 1")
    return {k: graded_value_set(ctx.blocks(k), kind) for k in range(1, K + 1)}
