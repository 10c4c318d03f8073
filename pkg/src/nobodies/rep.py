"""The irreducible module V(lambda) and its Demazure submodules, exactly.

Vectors of the Verma module are written as lowering words applied to the
highest weight vector: the word ``(j1, ..., jm)`` stands for
``f_{j1} ... f_{jm} v_lambda``.  V(lambda) is the quotient by the radical of
the contravariant form, so each weight space is carved out by a Gram rank
computation.  Weight spaces are built top-down; the basis at weight ``mu`` is
a pivot subset of the words ``(i,) + b`` with ``b`` a basis word at
``mu + alpha_i``, which keeps every Gram matrix small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .cartan import RootSystemData, is_reduced

FWord = tuple[int, ...]
FormalVector = dict  # FWord -> nonzero Fraction

__all__ = [
    "FWord",
    "FormalVector",
    "fword_weight",
    "apply_e",
    "apply_f",
    "contravariant_form",
    "WeightSpace",
    "Irrep",
    "build_irrep",
    "DemazureSubspace",
    "demazure_subspace",
]


def _sub(mu, nu):
    return tuple(a - b for a, b in zip(mu, nu))


def _add(mu, nu):
    return tuple(a + b for a, b in zip(mu, nu))


def fword_weight(rs: RootSystemData, lam: Sequence[int], word: FWord) -> tuple:
    mu = tuple(lam)
    for j in word:
        mu = _sub(mu, rs.simple_root_weight(j))
    return mu


def _clean(v: dict) -> FormalVector:
    return {w: c for w, c in v.items() if c != 0}


def apply_f(i: int, v: FormalVector) -> FormalVector:
    return {(i,) + w: c for w, c in v.items()}


def apply_e(rs: RootSystemData, lam: Sequence[int], i: int, v: FormalVector) -> FormalVector:
    """Expand ``e_i`` through a combination of lowering words.

    Uses ``e_i f_j = f_j e_i + delta_ij h_i`` and ``e_i v_lambda = 0``.
    """
    out: dict = {}
    for word, coeff in v.items():
        # weight of the tail f_{j_{p+1}} ... v_lambda, built from the right
        mu = tuple(lam)
        tails = [mu]
        for j in reversed(word):
            mu = _sub(mu, rs.simple_root_weight(j))
            tails.append(mu)
        m = len(word)
        for p, j in enumerate(word):
            if j != i:
                continue
            h = tails[m - 1 - p][i - 1]
            if h == 0:
                continue
            w = word[:p] + word[p + 1:]
            out[w] = out.get(w, 0) + coeff * h
    return _clean({w: Fraction(c) for w, c in out.items()})


@lru_cache(maxsize=None)
def _form(rs: RootSystemData, lam: tuple, u: FWord, v: FWord) -> Fraction:
    if not u:
        return Fraction(int(not v))
    if not v:
        return Fraction(0)
    j, rest = u[0], u[1:]
    ev = apply_e(rs, lam, j, {v: Fraction(1)})
    return sum((c * _form(rs, lam, rest, w) for w, c in ev.items()), Fraction(0))


def contravariant_form(rs: RootSystemData, lam: Sequence[int], u: FWord, v: FWord) -> Fraction:
    """Contravariant form on lowering words, normalised by ``<v_lambda, v_lambda> = 1``."""
    lam = tuple(lam)
    if sorted(u) != sorted(v):
        return Fraction(0)
    return _form(rs, lam, tuple(u), tuple(v))


@dataclass
class WeightSpace:
    weight: tuple
    depth: int
    basis: list[FWord]
    gram: linalg.Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class Irrep:
    """V(lambda) with per-weight bases and exact Chevalley action matrices.

    ``f_action[(i, mu)]`` maps weight ``mu`` coordinates to weight
    ``mu - alpha_i`` coordinates (a ``dim(mu - alpha_i) x dim(mu)`` matrix);
    ``e_action[(i, mu)]`` maps ``mu`` to ``mu + alpha_i``.  Pairs whose target
    is not a weight are absent (the action is zero there).
    """

    rs: RootSystemData
    lam: tuple
    spaces: dict[tuple, WeightSpace]
    f_action: dict[tuple, linalg.Matrix] = field(repr=False)
    e_action: dict[tuple, linalg.Matrix] = field(repr=False)

    def __post_init__(self):
        self.offsets = {}
        n = 0
        for mu, ws in self.spaces.items():
            self.offsets[mu] = n
            n += ws.dim
        self.dim = n

    def mult(self, mu) -> int:
        ws = self.spaces.get(tuple(mu))
        return ws.dim if ws else 0

    def weights(self) -> list[tuple]:
        return list(self.spaces)

    def weight_of_index(self, k: int) -> tuple:
        for mu, off in self.offsets.items():
            if off <= k < off + self.spaces[mu].dim:
                return mu
        raise IndexError(k)

    def lower(self, i: int, mu, coords: Sequence) -> tuple[tuple, list[Fraction]] | None:
        """Apply ``f_i`` to a vector of weight ``mu``; ``None`` when the result is zero."""
        mu = tuple(mu)
        m = self.f_action.get((i, mu))
        if m is None:
            return None
        out = linalg.matvec(m, coords)
        if not any(out):
            return None
        return _sub(mu, self.rs.simple_root_weight(i)), out

    def raise_(self, i: int, mu, coords: Sequence) -> tuple[tuple, list[Fraction]] | None:
        mu = tuple(mu)
        m = self.e_action.get((i, mu))
        if m is None:
            return None
        out = linalg.matvec(m, coords)
        if not any(out):
            return None
        return _add(mu, self.rs.simple_root_weight(i)), out

    def formal_vector(self, mu, coords: Sequence) -> FormalVector:
        ws = self.spaces[tuple(mu)]
        return _clean({w: Fraction(c) for w, c in zip(ws.basis, coords)})


def build_irrep(rs: RootSystemData, lam: Sequence[int]) -> Irrep:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank or any(x < 0 for x in lam):
        raise ValueError(f"highest weight {lam} is not dominant for rank {rs.rank}")
    n = rs.rank
    alpha = [rs.simple_root_weight(i) for i in range(1, n + 1)]
    spaces: dict[tuple, WeightSpace] = {lam: WeightSpace(lam, 0, [()], [[Fraction(1)]])}
    f_action: dict[tuple, linalg.Matrix] = {}
    e_action: dict[tuple, linalg.Matrix] = {}
    layer = [lam]
    depth = 0
    while layer:
        depth += 1
        targets = sorted({_sub(nu, alpha[i - 1]) for nu in layer for i in range(1, n + 1)}, reverse=True)
        new_layer = []
        for mu in targets:
            ws = _build_weight_space(rs, mu, depth, spaces, f_action, e_action)
            if ws is not None:
                spaces[mu] = ws
                new_layer.append(mu)
        layer = new_layer
    return Irrep(rs, lam, spaces, f_action, e_action)


def _raise_candidate(rs, mu, i, b_idx, j, spaces, f_action, e_action):
    """Coordinates of ``e_j f_i b`` in the weight space ``mu + alpha_j``.

    ``b`` is basis vector ``b_idx`` of weight ``nu = mu + alpha_i``.
    """
    alpha = rs.simple_root_weight
    target = _add(mu, alpha(j))
    tgt = spaces.get(target)
    if tgt is None:
        return None
    nu = _add(mu, alpha(i))
    out = [Fraction(0)] * tgt.dim
    e_m = e_action.get((j, nu))
    if e_m is not None:
        eb = [row[b_idx] for row in e_m]
        f_m = f_action.get((i, _add(nu, alpha(j))))
        if f_m is not None and any(eb):
            out = linalg.matvec(f_m, eb)
    if i == j:
        h = nu[i - 1]
        out[b_idx] += h
    return out


def _build_weight_space(rs, mu, depth, spaces, f_action, e_action):
    n = rs.rank
    cands = []  # (word, i, b_idx)
    for i in range(1, n + 1):
        nu = _add(mu, rs.simple_root_weight(i))
        ws = spaces.get(nu)
        if ws is None:
            continue
        for b_idx, w in enumerate(ws.basis):
            cands.append(((i,) + w, i, b_idx))
    if not cands:
        return None
    cands.sort()
    # raised[j][c] = e_j (candidate c) in V_{mu + alpha_j}
    raised = {
        j: [_raise_candidate(rs, mu, i, b, j, spaces, f_action, e_action) for _, i, b in cands]
        for j in range(1, n + 1)
    }
    # <f_i b, c'> = <b, e_i c'>; the form on V_{mu + alpha_i} is its Gram matrix
    gram_rows = []
    for _, i, b in cands:
        g_nu = spaces[_add(mu, rs.simple_root_weight(i))].gram
        row = []
        for c2 in range(len(cands)):
            ev = raised[i][c2]
            row.append(sum((x * y for x, y in zip(g_nu[b], ev)), Fraction(0)) if ev is not None else Fraction(0))
        gram_rows.append(row)
    piv = linalg.independent_columns(gram_rows)
    if not piv:
        return None
    sub = [[gram_rows[a][b] for b in piv] for a in piv]
    inv = linalg.inverse(sub)
    coords = linalg.matmul(inv, [gram_rows[a] for a in piv])  # dim x |cands|

    for i in range(1, n + 1):
        nu = _add(mu, rs.simple_root_weight(i))
        if nu not in spaces:
            continue
        cols = [c for c, (_, ci, _) in enumerate(cands) if ci == i]
        f_action[(i, nu)] = [[coords[r][c] for c in cols] for r in range(len(piv))]
    for j in range(1, n + 1):
        target = _add(mu, rs.simple_root_weight(j))
        if target not in spaces:
            continue
        cols = [raised[j][c] for c in piv]
        e_action[(j, mu)] = linalg.transpose(cols)
    return WeightSpace(mu, depth, [cands[c][0] for c in piv], sub)


@dataclass
class DemazureSubspace:
    parent: Irrep
    word: tuple[int, ...]
    blocks: dict[tuple, linalg.Matrix]  # weight -> echelonized rows in weight-space coords

    @property
    def dim(self) -> int:
        return sum(len(rows) for rows in self.blocks.values())

    @property
    def basis(self) -> list[list[Fraction]]:
        """Basis vectors in global coordinates of the parent module."""
        out = []
        for mu, rows in self.blocks.items():
            off = self.parent.offsets[mu]
            for row in rows:
                v = [Fraction(0)] * self.parent.dim
                v[off:off + len(row)] = row
                out.append(v)
        return out


def _echelon_rows(rows):
    if not rows:
        return []
    red, piv = linalg.rref(rows)
    return red[: len(piv)]


def demazure_subspace(irrep: Irrep, word: Sequence[int]) -> DemazureSubspace:
    """Span of ``f_{i_1}^{a_1} ... f_{i_r}^{a_r} v_lambda`` over all exponents."""
    word = tuple(word)
    if not is_reduced(irrep.rs, word):
        raise ValueError(f"{word} is not a reduced word")
    blocks: dict[tuple, list] = {irrep.lam: [[Fraction(1)]]}
    for i in reversed(word):
        new = {mu: list(rows) for mu, rows in blocks.items()}
        for mu, rows in blocks.items():
            cur_mu, cur = mu, rows
            while cur:
                nxt = []
                nxt_mu = None
                for v in cur:
                    res = irrep.lower(i, cur_mu, v)
                    if res is not None:
                        nxt_mu, w = res
                        nxt.append(w)
                if not nxt:
                    break
                new.setdefault(nxt_mu, []).extend(nxt)
                cur_mu, cur = nxt_mu, nxt
        blocks = {mu: _echelon_rows(rows) for mu, rows in new.items()}
    ordered = {mu: blocks[mu] for mu in irrep.spaces if blocks.get(mu)}
    return DemazureSubspace(irrep, word, ordered)
