# Newton-Okounkov bodies as convex hulls of level-1 value sets.

from fractions import Fraction

from nobodies.harness import CaseSpec, run_case
from nobodies.polytope import Hull, hull_equal, op_negate

rep = run_case(CaseSpec("A", 2, (1, 2, 1), (1, 1), kmax=2, checks=("C6", "C10")))

low = rep.level_set("LowLex", 1)
hull = Hull(low)
print("vertices of the v^low body:", [tuple(map(int, v)) for v in hull.vertices])
print("lattice points = value set:", hull.lattice_points() == low)

# level 2 divided by 2 stays inside the level-1 body
print(all(tuple(Fraction(x, 2) for x in p) in hull for p in rep.level_set("LowLex", 2)))

# the body for v^low is the op-negated body for the tilde highest term valuation
print(hull_equal(sorted(low), op_negate(sorted(rep.level_set("HighTilde", 1)))))

# C2 is the first case where halving level 2 leaves the level-1 hull
rep = run_case(CaseSpec("C", 2, (1, 2, 1, 2), (1, 1), kmax=2, checks=("C6",)))
print(rep.check("C6").witness["stabilization"], rep.check("C6").witness.get("unstable"))
