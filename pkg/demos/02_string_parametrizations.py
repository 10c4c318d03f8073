# Littelmann paths for B(rho) in type A2 and the string parametrization
# along the reduced word (1,2,1).

from nobodies.cartan import build_root_system
from nobodies.crystal import demazure_crystal, eps, phi, string_parametrization, wt

rs = build_root_system("A", 2)

crys = demazure_crystal(rs, (1, 1), (1, 2, 1))
for b in crys.sorted():
    s = string_parametrization(rs, b, (1, 2, 1))
    print(str(wt(b)).ljust(9), s, "eps", [eps(b, i) for i in (1, 2)], "phi", [phi(b, i) for i in (1, 2)])

# the set does not depend on the reduced word
print(crys.elements == demazure_crystal(rs, (1, 1), (2, 1, 2)).elements)

# proper Demazure crystals
for word in [(), (1,), (1, 2)]:
    print(word, len(demazure_crystal(rs, (1, 1), word)))
