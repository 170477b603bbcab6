"""Measures on [0, 1]: grid densities plus point masses.

Run with ``python3 demos/03_unit_interval.py``.
"""
from fractions import Fraction

from measdecomp import LineMeasure, atomic_diffuse, lebesgue_line, topological_support

mu = LineMeasure.build(4, [0, 3, 0, 1], [(Fraction(1, 8), 2), (Fraction(3, 4), Fraction(1, 2))])
print("total mass =", mu.total_mass())

a, d = atomic_diffuse(mu)
print("atomic     =", [(str(x), str(w)) for x, w in a.atoms])
print("diffuse    =", [str(v) for v in d.densities])
ac, s = lebesgue_line(mu)
assert a + d == mu and ac + s == mu

cs = topological_support(mu)
print("support intervals =", [(str(lo), str(hi)) for lo, hi in cs.intervals])
print("isolated points   =", [str(x) for x in cs.points])
for x in (Fraction(1, 8), Fraction(1, 5), Fraction(1, 4), Fraction(5, 8), Fraction(1)):
    print(f"  {x} in support: {x in cs}")
