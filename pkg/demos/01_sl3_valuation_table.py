# Sections of the line bundle for rho on the flag variety of SL3,
# seen through the chart exp(t1 f1) exp(t2 f2) exp(t3 f1).

from nobodies.cartan import build_root_system
from nobodies.chart import chart_matrix, section_space
from nobodies.polyval import ValuationKind, valuate, value_set
from nobodies.rep import build_irrep

rs = build_root_system("A", 2)
word = (1, 2, 1)

# the chart in the vector representation
for row in chart_matrix(build_irrep(rs, (1, 0)), word):
    print("  ".join(str(p).rjust(9) for p in row))

# V(rho) is the adjoint representation
V = build_irrep(rs, (1, 1))
print("dim V(rho) =", V.dim, " zero weight multiplicity =", V.mult((0, 0)))

sections = section_space(V, word)
print("section basis:", ", ".join(map(str, sections)))

# each valuation sees a different basis but the same number of values
for kind in ValuationKind:
    values = sorted(value_set(sections, kind))
    print(kind.symbol.ljust(7), values)

# a single polynomial under all four orders
p = sections[-1]
print(p, {kind.value: valuate(p, kind) for kind in ValuationKind})
