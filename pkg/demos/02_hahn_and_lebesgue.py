"""Hahn-Jordan and Lebesgue splits as special cases of the same engine.

Run with ``python3 demos/02_hahn_and_lebesgue.py``.
"""
from measdecomp import (
    FiniteSpace,
    SignedMeasure,
    hahn_decompose_via_positive_sets,
    hahn_jordan,
    lebesgue_decompose,
    positive_subset_steps,
    radon_nikodym_density,
)

space = FiniteSpace.of_size(4)
mu = SignedMeasure.of(space, [3, -1, 2, 0])

hj = hahn_jordan(mu)
print("Hahn set  =", hj.g_bar)
print("mu+       =", hj.mu_plus)
print("mu-       =", hj.mu_minus)

# Same answer through the family of all positive sets.
dec = hahn_decompose_via_positive_sets(mu)
assert dec.atomic == hj.mu_plus and dec.diffuse == -hj.mu_minus

# The positive-subset induction, round by round.
small = FiniteSpace.of_size(3)
bar, steps = positive_subset_steps(SignedMeasure.of(small, [5, -3, 1]), small.full())
for k, step in enumerate(steps, 1):
    print(f"round {k}: n = {step.n}, remove {step.removed}")
print("positive subset =", bar)

# Lebesgue: split against the family of nu-null sets.
mu = SignedMeasure.of(space, [1, 2, 0, 3])
nu = SignedMeasure.of(space, [0, 5, 1, 0])
ac, s = lebesgue_decompose(mu, nu)
print("ac        =", ac)
print("singular  =", s)
print("density   =", [str(f) for f in radon_nikodym_density(ac, nu)])
