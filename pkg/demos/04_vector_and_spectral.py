"""Vector measures through a control measure, and spectral measures of matrices.

Run with ``python3 demos/04_vector_and_spectral.py``.
"""
import numpy as np

from measdecomp import (
    FiniteSpace,
    SetFamily,
    VectorMeasure,
    control_measure,
    e_xy,
    from_normal_matrix,
    from_projections,
    spectral_control,
    spectral_decompose,
    vector_decompose,
)

space = FiniteSpace.of_size(3)
theta = VectorMeasure.of(space, [(1, 0), (0, -1), (0, 0)])
print("control     =", control_measure(theta))
dec = vector_decompose(theta, SetFamily.generated(space, [["a2", "a3"]]))
print("support     =", dec.support)
print("atomic      =", [[str(c) for c in v] for v in dec.atomic.values])

# Exact projections for diag(1, 1, 2).
e = from_projections(3, ["1", "2"], [
    [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
    [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
])
print("control     =", spectral_control(e))
print("E_xx({1})   =", e_xy(e, ["1"], [1, 0, 1], [1, 0, 1]), "for x = e1 + e3")
parts = spectral_decompose(e, SetFamily.generated(e.space, [["1"]]))
print("atomic(all) =\n", parts.atomic.total())

# The same measure from a floating-point normal matrix.
rng = np.random.default_rng(0)
q, _ = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
n = q @ np.diag([1, 1, 2]) @ q.conj().T
numeric = from_normal_matrix(n)
print("outcomes    =", numeric.outcomes)
print("ranks       =", [round(np.trace(p).real) for p in numeric.projections])
