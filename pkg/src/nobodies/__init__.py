"""Exact Newton-Okounkov value sets of Schubert varieties and their crystal counterparts.

Submodules
----------
cartan     root systems, Weyl group words
rep        irreducible modules and Demazure submodules over the rationals
chart      the unipotent chart of a reduced word and its section polynomials
polyval    the four lexicographic valuations and value semigroups
crystal    Littelmann paths, Demazure crystals, string parametrizations
polytope   exact convex hulls in V-representation
harness    case runner and report rendering
"""

from .cartan import build_root_system, is_reduced, longest_word
from .crystal import demazure_crystal, string_parametrization
from .harness import CaseSpec, run_case, render_report
from .polyval import ValuationKind, valuate
from .rep import build_irrep, demazure_subspace

__version__ = "0.1.0"

__all__ = [
    "build_root_system",
    "is_reduced",
    "longest_word",
    "build_irrep",
    "demazure_subspace",
    "ValuationKind",
    "valuate",
    "demazure_crystal",
    "string_parametrization",
    "CaseSpec",
    "run_case",
    "render_report",
]
