"""Sections of L_lambda over the Schubert chart, as polynomials.

The chart is ``(t_1, ..., t_r) -> exp(t_1 f_{i_1}) ... exp(t_r f_{i_r})``.  A
section ``sigma`` of ``V(lambda)^*`` restricts to the polynomial
``<sigma, exp(t_1 f_{i_1}) ... exp(t_r f_{i_r}) v_lambda>``; taking ``sigma``
over the dual basis of the constructed module gives the coordinates of the
orbit vector.  The ``v_lambda`` coordinate is the constant 1, which plays the
role of the normalising section ``tau_lambda``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import linalg
from .cartan import is_reduced
from .polynomial import Polynomial
from .rep import Irrep

__all__ = [
    "PolyVector",
    "exp_orbit_vector",
    "chart_matrix",
    "section_blocks",
    "section_space",
    "restrict_to_subchart",
    "echelonize",
]


@dataclass
class PolyVector:
    """A vector of V(lambda) with polynomial coordinates, stored per weight."""

    irrep: Irrep
    nvars: int
    blocks: dict[tuple, list[Polynomial]]

    @property
    def coords(self) -> list[Polynomial]:
        out = [Polynomial(self.nvars) for _ in range(self.irrep.dim)]
        for mu, polys in self.blocks.items():
            off = self.irrep.offsets[mu]
            out[off:off + len(polys)] = polys
        return out

    def grading_violations(self, word: Sequence[int]) -> list[tuple]:
        """Coordinates whose monomials have the wrong per-index degree."""
        rs = self.irrep.rs
        bad = []
        for mu, polys in self.blocks.items():
            d = rs.weight_to_root_coords(tuple(a - b for a, b in zip(self.irrep.lam, mu)))
            for idx, p in enumerate(polys):
                for e in p.terms:
                    got = [0] * rs.rank
                    for k, ik in enumerate(word):
                        got[ik - 1] += e[k]
                    if any(g != x for g, x in zip(got, d)):
                        bad.append((mu, idx, e))
        return bad


def _apply_matrix(m, polys: list[Polynomial], nvars: int) -> list[Polynomial]:
    out = []
    for row in m:
        acc: dict = {}
        for c, p in zip(row, polys):
            if c == 0 or not p:
                continue
            for e, v in p.terms.items():
                acc[e] = acc.get(e, 0) + c * v
        out.append(Polynomial(nvars, acc))
    return out


def _exp_apply(irrep: Irrep, word: Sequence[int], blocks: dict) -> dict:
    r = len(word)
    for k in range(r, 0, -1):
        i = word[k - 1]
        new: dict[tuple, list[Polynomial]] = {}

        def add(mu, polys):
            if mu in new:
                new[mu] = [p + q for p, q in zip(new[mu], polys)]
            else:
                new[mu] = list(polys)

        for mu, polys in blocks.items():
            add(mu, polys)
            cur_mu, cur = mu, polys
            a = 0
            while True:
                m = irrep.f_action.get((i, cur_mu))
                if m is None:
                    break
                cur = _apply_matrix(m, cur, r)
                cur_mu = tuple(x - y for x, y in zip(cur_mu, irrep.rs.simple_root_weight(i)))
                if not any(cur):
                    break
                a += 1
                e = tuple(a if j == k - 1 else 0 for j in range(r))
                add(cur_mu, [p.shift(e, Fraction(1, factorial(a))) for p in cur])
        blocks = {mu: ps for mu, ps in new.items() if any(ps)}
    return {mu: blocks[mu] for mu in irrep.spaces if mu in blocks}


def exp_orbit_vector(irrep: Irrep, word: Sequence[int]) -> PolyVector:
    """``exp(t_1 f_{i_1}) ... exp(t_r f_{i_r}) v_lambda`` with polynomial coordinates."""
    word = tuple(word)
    if not is_reduced(irrep.rs, word):
        raise ValueError(f"{word} is not a reduced word")
    r = len(word)
    start = {irrep.lam: [Polynomial.constant(r)]}
    return PolyVector(irrep, r, _exp_apply(irrep, word, start))


def chart_matrix(irrep: Irrep, word: Sequence[int]) -> list[list[Polynomial]]:
    """Matrix of ``exp(t_1 f_{i_1}) ... exp(t_r f_{i_r})`` on the module basis."""
    word = tuple(word)
    r = len(word)
    cols = []
    for mu, ws in irrep.spaces.items():
        for j in range(ws.dim):
            unit = [Polynomial.constant(r, int(j == jj)) for jj in range(ws.dim)]
            cols.append(PolyVector(irrep, r, _exp_apply(irrep, word, {mu: unit})).coords)
    return [list(row) for row in zip(*cols)] if cols else []


def echelonize(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced echelon basis of the span, pivots on lex-largest monomials first."""
    polys = [p for p in polys if p]
    if not polys:
        return []
    nvars = polys[0].nvars
    monos = sorted({e for p in polys for e in p.terms}, reverse=True)
    col = {e: j for j, e in enumerate(monos)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monos)
        for e, c in p.terms.items():
            row[col[e]] = c
        rows.append(row)
    red, piv = linalg.rref(rows)
    return [Polynomial(nvars, {monos[j]: c for j, c in enumerate(red[r]) if c}) for r in range(len(piv))]


def section_blocks(irrep: Irrep, word: Sequence[int]) -> dict[tuple, list[Polynomial]]:
    """Echelonized section polynomials grouped by weight."""
    vec = exp_orbit_vector(irrep, word)
    out = {}
    for mu, polys in vec.blocks.items():
        basis = echelonize(polys)
        if basis:
            out[mu] = basis
    return out


def section_space(irrep: Irrep, word: Sequence[int]) -> list[Polynomial]:
    """A deterministic basis of the image of ``H^0(X(w), L_lambda)`` in ``Q[t_1..t_r]``."""
    return [p for polys in section_blocks(irrep, word).values() for p in polys]


def restrict_to_subchart(p: Polynomial, k: int) -> Polynomial:
    if not 1 <= k <= p.nvars:
        raise IndexError(f"variable index {k} out of range 1..{p.nvars}")
    return p.substitute_zero(k)
