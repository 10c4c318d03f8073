"""Case runner: builds every object for one (type, word, lambda, K) case and
checks the valuation/crystal identities between them.

Check identifiers:

C1   crystal size = Demazure module dimension = section space dimension
C2   string parametrization image = -(HighLex value set)
C3   Kashiwara-embedding image recorded as -(HighTilde value set); its
     per-index coordinate sums match the crystal weights
C4   LowLex value set = op-negation of the HighTilde value set
C5   LowTilde value set = op-negation of the HighLex value set
C6   lattice points of each level-1 hull = level-1 value set, plus the
     stabilisation of ``level k / k`` inside the level-1 hull
C7   valuation axioms and the lowering-operator recursion on all sections
C8   the Demazure crystal does not depend on the reduced word
C9   changing the normalising section shifts level k by k * v(tau / tau')
C10  hull identities between the low bodies and op-negated high bodies
     (level 1)
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import cartan
from .crystal import demazure_crystal, string_parametrization, wt
from .polynomial import Polynomial
from .polytope import Hull, hull_equal, op_negate
from .polyval import (
    ChartContext,
    ValuationKind,
    chevalley_valuate,
    graded_value_set,
    valuate,
    valuate_quotient,
    value_basis,
)
from .rep import demazure_subspace

__all__ = [
    "CHECK_IDS",
    "InputError",
    "CaseSpec",
    "CheckResult",
    "CaseReport",
    "run_case",
    "render_report",
    "parse_report",
    "valuation_table",
    "crystal_table",
    "DEFAULT_CASES",
    "DEMAZURE_CASES",
]

CHECK_IDS = tuple(f"C{n}" for n in range(1, 11))
KINDS = (ValuationKind.HighLex, ValuationKind.LowLex, ValuationKind.HighTilde, ValuationKind.LowTilde)


class InputError(ValueError):
    """Invalid case specification."""


@dataclass(frozen=True)
class CaseSpec:
    series: str
    rank: int
    word: tuple[int, ...]
    lam: tuple[int, ...]
    kmax: int = 1
    checks: tuple[str, ...] = CHECK_IDS
    fmt: str = "json"
    alt_word: tuple[int, ...] | None = None

    def root_system(self) -> cartan.RootSystemData:
        try:
            return cartan.build_root_system(self.series, self.rank)
        except ValueError as exc:
            raise InputError(str(exc)) from None

    def validate(self) -> cartan.RootSystemData:
        rs = self.root_system()
        if len(self.lam) != rs.rank:
            raise InputError(f"lambda needs {rs.rank} coordinates, got {len(self.lam)}")
        if any(x < 0 for x in self.lam):
            raise InputError(f"lambda {self.lam} is not dominant")
        if self.kmax < 1:
            raise InputError("kmax must be at least 1")
        for w in (self.word,) + ((self.alt_word,) if self.alt_word is not None else ()):
            if any(not 1 <= i <= rs.rank for i in w):
                raise InputError(f"word {w} has an index outside 1..{rs.rank}")
            if not cartan.is_reduced(rs, w):
                raise InputError(f"word {w} is not reduced")
        if self.alt_word is not None and not cartan.same_element(rs, self.word, self.alt_word):
            raise InputError(f"{self.alt_word} does not spell the same element as {self.word}")
        unknown = set(self.checks) - set(CHECK_IDS)
        if unknown:
            raise InputError(f"unknown checks {sorted(unknown)}")
        return rs

    def as_dict(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "word": list(self.word),
            "lambda": list(self.lam),
            "kmax": self.kmax,
        }


@dataclass
class CheckResult:
    id: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"id": self.id, "pass": self.passed, "witness": self.witness}


@dataclass
class CaseReport:
    case: dict
    checks: list[CheckResult]
    levels: list[dict]
    strings: list[dict]
    polytopes: list[dict]
    timing: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, cid: str) -> CheckResult:
        return next(c for c in self.checks if c.id == cid)

    def level_set(self, kind: str, k: int) -> set[tuple[int, ...]]:
        for row in self.levels:
            if row["kind"] == kind and row["k"] == k:
                return {tuple(t) for t in row["tuples"]}
        raise KeyError((kind, k))

    def as_dict(self, timing: bool = False) -> dict:
        out = {
            "case": self.case,
            "checks": [c.as_dict() for c in self.checks],
            "levels": self.levels,
            "strings": self.strings,
            "polytopes": self.polytopes,
        }
        if timing:
            out["timing"] = self.timing
        return out


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(s: str) -> Fraction:
    return Fraction(s)


def _opneg(tuples) -> set[tuple]:
    return {tuple(-x for x in reversed(t)) for t in tuples}


def _neg(tuples) -> set[tuple]:
    return {tuple(-x for x in t) for t in tuples}


def _diff_witness(a: set, b: set) -> dict:
    return {"only_left": sorted(map(list, a - b)), "only_right": sorted(map(list, b - a))}


class _Case:
    """Lazily computed data shared by the checks of one case."""

    def __init__(self, spec: CaseSpec, rs: cartan.RootSystemData):
        self.spec = spec
        self.rs = rs
        self.word = tuple(spec.word)
        self.r = len(self.word)
        self.ctx = ChartContext(rs, spec.lam, self.word)
        self.levels = {kind: {} for kind in KINDS}
        self.crystals = {}
        self.phi = {}

    def level(self, kind: ValuationKind, k: int) -> set:
        if k not in self.levels[kind]:
            self.levels[kind][k] = graded_value_set(self.ctx.blocks(k), kind)
        return self.levels[kind][k]

    def crystal(self, k: int):
        if k not in self.crystals:
            self.crystals[k] = demazure_crystal(self.rs, self.ctx.level_weight(k), self.word)
        return self.crystals[k]

    def strings(self, k: int) -> set:
        if k not in self.phi:
            self.phi[k] = {string_parametrization(self.rs, b, self.word) for b in self.crystal(k).elements}
        return self.phi[k]

    def weight_depth(self, mu, k: int) -> tuple:
        lam = self.ctx.level_weight(k)
        q = self.rs.weight_to_root_coords(tuple(a - b for a, b in zip(lam, mu)))
        return tuple(int(x) for x in q)


def _c1(case: _Case, K: int) -> CheckResult:
    rows = []
    ok = True
    for k in range(1, K + 1):
        ncrys = len(case.crystal(k))
        ndem = demazure_subspace(case.ctx.irrep(k), case.word).dim
        nsec = len(case.ctx.sections(k))
        ok &= ncrys == ndem == nsec
        rows.append({"k": k, "crystal": ncrys, "demazure": ndem, "sections": nsec, "module": case.ctx.irrep(k).dim})
    return CheckResult("C1", ok, {"levels": rows})


def _c2(case: _Case, K: int) -> CheckResult:
    ok = True
    bad = {}
    for k in range(1, K + 1):
        a, b = case.strings(k), _neg(case.level(ValuationKind.HighLex, k))
        if a != b:
            ok = False
            bad[str(k)] = _diff_witness(a, b)
    return CheckResult("C2", ok, bad)


def _index_sums(t: Sequence[int], word: Sequence[int], rank: int, reverse: bool) -> tuple[int, ...]:
    # position p of a tilde tuple belongs to letter r + 1 - p of the word
    letters = list(reversed(word)) if reverse else list(word)
    out = [0] * rank
    for a, i in zip(t, letters):
        out[i - 1] += a
    return tuple(out)


def _c3(case: _Case, K: int) -> CheckResult:
    ok = True
    wit = {}
    for k in range(1, K + 1):
        psi = _neg(case.level(ValuationKind.HighTilde, k))
        from_psi = Counter(_index_sums(t, case.word, case.rs.rank, reverse=True) for t in psi)
        from_crys = Counter(case.weight_depth(wt(b), k) for b in case.crystal(k).elements)
        total_ok = Counter(sum(t) for t in psi) == Counter(sum(d) for d in from_crys.elements())
        level_ok = from_psi == from_crys and total_ok and len(psi) == len(case.crystal(k))
        ok &= level_ok
        if not level_ok:
            wit[str(k)] = {
                "psi_weights": sorted([list(d), n] for d, n in from_psi.items()),
                "crystal_weights": sorted([list(d), n] for d, n in from_crys.items()),
            }
    return CheckResult("C3", ok, wit)


def _identity_check(cid: str, case: _Case, K: int, low: ValuationKind, high: ValuationKind) -> CheckResult:
    ok = True
    wit = {}
    for k in range(1, K + 1):
        a, b = case.level(low, k), _opneg(case.level(high, k))
        if a != b:
            ok = False
            wit[str(k)] = _diff_witness(a, b)
    return CheckResult(cid, ok, wit)


def _c6(case: _Case, K: int) -> CheckResult:
    ok = True
    wit: dict[str, Any] = {}
    stabilized = True
    for kind in KINDS:
        base = case.level(kind, 1)
        hull = Hull(base)
        lattice = hull.lattice_points()
        if lattice != base:
            ok = False
            wit[kind.value] = _diff_witness(lattice, base)
        sums = set(base)
        for k in range(2, K + 1):
            # x in k * conv(level 1) is certified directly when x is a sum of k level-1 points
            sums = {tuple(a + b for a, b in zip(s, t)) for s in sums for t in base}
            outside = [
                t for t in case.level(kind, k)
                if t not in sums and tuple(Fraction(x, k) for x in t) not in hull
            ]
            if outside:
                stabilized = False
                wit.setdefault("unstable", {})[f"{kind.value}:{k}"] = sorted(map(list, outside))[:10]
    # stabilisation at small k is evidence only; failing it is not a counterexample
    wit["stabilization"] = "pass" if stabilized else "inconclusive"
    return CheckResult("C6", ok, wit)


def _c7(case: _Case, K: int) -> CheckResult:
    fails = []
    for k in range(1, K + 1):
        polys = case.ctx.sections(k)
        for p in polys:
            left = chevalley_valuate(p, case.word, "left")
            right = chevalley_valuate(p, case.word, "right")
            if left != valuate(p, ValuationKind.HighLex) or right != valuate(p, ValuationKind.HighTilde):
                fails.append({"k": k, "poly": str(p), "left": list(left), "right": list(right)})
        for p, q in zip(polys, polys[1:] + polys[:1]):
            pq = p * q
            s = p + q
            for kind in KINDS:
                vp, vq = valuate(p, kind), valuate(q, kind)
                if valuate(pq, kind) != tuple(a + b for a, b in zip(vp, vq)):
                    fails.append({"k": k, "axiom": "product", "kind": kind.value, "p": str(p), "q": str(q)})
                if valuate(p.scale(Fraction(-7, 3)), kind) != vp:
                    fails.append({"k": k, "axiom": "scalar", "kind": kind.value, "p": str(p)})
                if s and valuate(s, kind) < min(vp, vq):
                    fails.append({"k": k, "axiom": "sum", "kind": kind.value, "p": str(p), "q": str(q)})
    return CheckResult("C7", not fails, {"failures": fails[:20]} if fails else {})


def _c8(case: _Case, K: int) -> CheckResult:
    alt = case.spec.alt_word
    if alt is None:
        alt = cartan.alternative_word(case.rs, case.word)
    ok = True
    wit: dict[str, Any] = {"alt_word": list(alt)}
    for k in range(1, K + 1):
        other = demazure_crystal(case.rs, case.ctx.level_weight(k), alt)
        if other.elements != case.crystal(k).elements:
            ok = False
            wit[str(k)] = {"sizes": [len(case.crystal(k)), len(other)]}
    return CheckResult("C8", ok, wit)


def _c9(case: _Case, K: int) -> CheckResult:
    sections = case.ctx.sections(1)
    # a generic section: the sum of the whole level-1 basis
    g = sum(sections[1:], sections[0]) if sections else Polynomial.constant(case.r)
    one = Polynomial.constant(case.r)
    ok = True
    wit: dict[str, Any] = {"tau_prime": str(g)}
    for k in range(1, K + 1):
        gk = g ** k
        for kind in KINDS:
            shift = valuate_quotient(one, g, kind)
            denominator = valuate(gk, kind)
            moved = set()
            for polys in case.ctx.blocks(k).values():
                for f in value_basis(polys, kind).values():
                    moved.add(tuple(a - b for a, b in zip(valuate(f, kind), denominator)))
            expected = {tuple(a + k * s for a, s in zip(t, shift)) for t in case.level(kind, k)}
            if moved != expected:
                ok = False
                wit[f"{kind.value}:{k}"] = _diff_witness(moved, expected)
    return CheckResult("C9", ok, wit)


def _c10(case: _Case, K: int) -> CheckResult:
    # the bodies are level-1 slices; higher levels only rescale them
    ok = True
    wit = {}
    for k in (1,):
        for low, high in ((ValuationKind.LowLex, ValuationKind.HighTilde), (ValuationKind.LowTilde, ValuationKind.HighLex)):
            a = sorted(case.level(low, k))
            b = op_negate(sorted(case.level(high, k)))
            if case.r == 0:
                same = set(a) == {tuple(b_) for b_ in b}
            else:
                same = hull_equal(a, b)
            if not same:
                ok = False
                wit[f"{low.value}~{high.value}:{k}"] = False
    return CheckResult("C10", ok, wit)


_CHECKS = {
    "C1": _c1,
    "C2": _c2,
    "C3": _c3,
    "C4": lambda case, K: _identity_check("C4", case, K, ValuationKind.LowLex, ValuationKind.HighTilde),
    "C5": lambda case, K: _identity_check("C5", case, K, ValuationKind.LowTilde, ValuationKind.HighLex),
    "C6": _c6,
    "C7": _c7,
    "C8": _c8,
    "C9": _c9,
    "C10": _c10,
}


def _vertices(points) -> list[list[str]]:
    if not points:
        return []
    if len(next(iter(points))) == 0:
        return [[]]
    return [[_frac_str(x) for x in v] for v in Hull(points).vertices]


def run_case(spec: CaseSpec) -> CaseReport:
    rs = spec.validate()
    case = _Case(spec, rs)
    timing = {}
    checks = []
    for cid in CHECK_IDS:
        if cid not in spec.checks:
            continue
        t0 = time.perf_counter()
        checks.append(_CHECKS[cid](case, spec.kmax))
        timing[cid] = round(time.perf_counter() - t0, 4)

    levels = []
    for k in range(1, spec.kmax + 1):
        for kind in KINDS:
            levels.append({"k": k, "kind": kind.value, "tuples": sorted(map(list, case.level(kind, k)))})
    strings = []
    for k in range(1, spec.kmax + 1):
        strings.append({"k": k, "map": "Phi", "tuples": sorted(map(list, case.strings(k)))})
        strings.append({"k": k, "map": "Psi", "tuples": sorted(map(list, _neg(case.level(ValuationKind.HighTilde, k))))})
    polytopes = [{"kind": kind.value, "vertices": _vertices(case.level(kind, 1))} for kind in KINDS]
    return CaseReport(spec.as_dict(), checks, levels, strings, polytopes, timing)


# ---------------------------------------------------------------- rendering


def valuation_table(report: CaseReport, k: int = 1) -> tuple[list[str], list[list[str]]]:
    """Rows ``kind -> values`` at level ``k``; columns grouped by weight.

    Each value determines the weight of the section it comes from (through the
    per-letter degrees), so the columns are the weights ``k lambda - d`` in
    decreasing order and, within one weight, the values in increasing order.
    Only the set in each row is meaningful; no basis is shared across rows.
    """
    word = report.case["word"]
    rank = report.case["rank"]

    def depth(t, kind):
        return _index_sums([abs(x) for x in t], word, rank, reverse=kind in ("HighTilde", "LowTilde"))

    per_kind = {}
    for kind in KINDS:
        vals = sorted(report.level_set(kind.value, k), key=lambda t: (sum(abs(x) for x in t), depth(t, kind.value), t))
        per_kind[kind.value] = vals
    header = ["Valuation"] + [
        "d=(" + ",".join(str(x) for x in depth(t, "HighLex")) + ")" for t in per_kind["HighLex"]
    ]
    rows = []
    for kind in KINDS:
        cells = []
        for t in per_kind[kind.value]:
            if kind.is_high:
                cells.append("-(" + ", ".join(str(-x) for x in t) + ")" if any(t) else "(" + ", ".join("0" for _ in t) + ")")
            else:
                cells.append("(" + ", ".join(str(x) for x in t) + ")")
        rows.append([kind.symbol] + cells)
    return header, rows


def _markdown(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def crystal_table(report: CaseReport) -> list[tuple[int, str, tuple]]:
    return [(row["k"], row["map"], tuple(t)) for row in report.strings for t in row["tuples"]]


def render_report(report: CaseReport, fmt: str = "json", timing: bool = False) -> str:
    if fmt == "json":
        return json.dumps(report.as_dict(timing=timing), indent=2) + "\n"
    if fmt == "csv":
        lines = ["kind,level,tuple"]
        for row in report.levels:
            for t in row["tuples"]:
                lines.append(f"{row['kind']},{row['k']},{' '.join(str(x) for x in t)}")
        for row in report.strings:
            for t in row["tuples"]:
                lines.append(f"{row['map']},{row['k']},{' '.join(str(x) for x in t)}")
        return "\n".join(lines) + "\n"
    if fmt == "md":
        c = report.case
        out = [
            f"# {c['series']}{c['rank']}  word={tuple(c['word'])}  lambda={tuple(c['lambda'])}  kmax={c['kmax']}",
            "",
            "## Checks",
            "",
            _markdown(["check", "result"], [[ch.id, "pass" if ch.passed else "FAIL"] for ch in report.checks]),
        ]
        for k in range(1, c["kmax"] + 1):
            header, rows = valuation_table(report, k)
            out += [f"## Valuation table, level {k}", "", _markdown(header, rows)]
        return "\n".join(out)
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(text: str) -> CaseReport:
    """Inverse of ``render_report(..., "json")``."""
    data = json.loads(text)
    checks = [CheckResult(c["id"], c["pass"], c["witness"]) for c in data["checks"]]
    return CaseReport(data["case"], checks, data["levels"], data["strings"], data["polytopes"], data.get("timing", {}))


DEFAULT_CASES = (
    CaseSpec("A", 2, (1, 2, 1), (1, 1), kmax=2, alt_word=(2, 1, 2)),
    CaseSpec("A", 2, (1, 2, 1), (2, 1), kmax=2),
    CaseSpec("A", 3, (1, 2, 1, 3, 2, 1), (1, 1, 1), kmax=2),
    CaseSpec("B", 2, (1, 2, 1, 2), (1, 1), kmax=2, alt_word=(2, 1, 2, 1)),
    CaseSpec("C", 2, (1, 2, 1, 2), (1, 1), kmax=2),
    CaseSpec("G", 2, (1, 2, 1, 2, 1, 2), (1, 1), kmax=1),
)

DEMAZURE_CASES = (
    CaseSpec("A", 2, (1,), (1, 1), kmax=2),
    CaseSpec("A", 2, (1, 2), (1, 1), kmax=2),
    CaseSpec("A", 3, (1, 2, 1), (1, 1, 1), kmax=2),
    CaseSpec("A", 3, (2, 1, 3, 2), (1, 1, 1), kmax=2),
    CaseSpec("A", 3, (1, 2, 1, 3, 2), (1, 1, 1), kmax=2),
)
