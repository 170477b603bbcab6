"""The atomic and diffuse projections as band projections.

Run with ``python3 demos/05_band_projections.py``.
"""
from fractions import Fraction

from measdecomp import FiniteSpace, SetFamily, SignedMeasure, band_membership, band_project, total_variation
from measdecomp.oracle import brute_nearest

space = FiniteSpace.of_size(3)
g = SetFamily.generated(space, [["a1"], ["a2"]])
mu = SignedMeasure.of(space, [1, 0, 2])

a, d = band_project(mu, g)
print("A mu =", a, "  D mu =", d)
print("norms add up:", total_variation(a) + total_variation(d) == total_variation(mu))

# A mu + t D mu never has smaller norm than A mu.
for t in (Fraction(-2), Fraction(-1, 2), Fraction(1, 3), Fraction(3)):
    print(f"  t = {t}: |A mu + t D mu| = {total_variation(a + d * t)}")

print("distance to the atomic band (sampled):", brute_nearest(mu, g, samples=200, seed=1))
print("membership of A mu:", band_membership(a, g))
print("membership of D mu:", band_membership(d, g))
