"""Projection-valued measures on a finite set of outcomes and C^m.

A spectral measure assigns an orthogonal projection to every outcome; the
projection of a set of outcomes is the sum over its members. Projections
given with exact (Gaussian-rational) entries are checked exactly, floating
point ones within :data:`AXIOM_TOL`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np
import scipy.linalg

from .decompose import g_atomic_support
from .errors import (
    EigensolverError,
    IncompleteError,
    NonNormalError,
    NotHermitianError,
    NotIdempotentError,
    NotOrthogonalError,
    ShapeMismatchError,
    SpaceMismatchError,
)
from .gaussian import GaussianRational, exact_matrix, exact_vector
from .measure import SignedMeasure
from .space import AtomSet, FiniteSpace, SetFamily

AXIOM_TOL = 1e-9
NORMALITY_TOL = 1e-10
EIGENVALUE_REL_TOL = 1e-8

OutcomeSet = Union[AtomSet, Iterable[str]]


def _is_exact(rows) -> bool:
    for row in rows:
        for entry in row:
            if isinstance(entry, (float, complex, np.floating, np.complexfloating)):
                return False
            if isinstance(entry, (list, tuple)) and any(isinstance(c, float) for c in entry):
                return False
    return True


def _as_matrix(rows, exact: bool) -> np.ndarray:
    if isinstance(rows, np.ndarray) and rows.dtype != object:
        return rows.astype(complex)
    if exact:
        return exact_matrix(rows)
    return np.array(
        [[complex(*e) if isinstance(e, (list, tuple)) else complex(e) for e in row] for row in rows],
        dtype=complex,
    )


def _is_zero(a: np.ndarray, exact: bool, tol: float = AXIOM_TOL) -> bool:
    if exact:
        return not any(bool(x) for x in a.flat)
    return bool(np.abs(a).max(initial=0.0) <= tol)


def _adjoint(a: np.ndarray) -> np.ndarray:
    return np.conj(a).T


def _identity(m: int, exact: bool) -> np.ndarray:
    if not exact:
        return np.eye(m, dtype=complex)
    out = np.empty((m, m), dtype=object)
    for i in range(m):
        for j in range(m):
            out[i, j] = GaussianRational(int(i == j))
    return out


def _zeros(m: int, exact: bool) -> np.ndarray:
    if not exact:
        return np.zeros((m, m), dtype=complex)
    out = np.empty((m, m), dtype=object)
    for idx in np.ndindex(m, m):
        out[idx] = GaussianRational()
    return out


@dataclass(frozen=True, eq=False)
class ProjectionMeasure:
    """Orthogonal projections indexed by outcomes, pairwise orthogonal.

    Satisfies every spectral-measure axiom except that the total need not be
    the identity; restrictions of a spectral measure are of this kind.
    """

    space: FiniteSpace
    outcomes: tuple
    dim: int
    projections: tuple[np.ndarray, ...]
    exact: bool

    def outcome_set(self, delta: OutcomeSet) -> AtomSet:
        if isinstance(delta, AtomSet):
            if delta.space != self.space:
                raise SpaceMismatchError("outcome set belongs to a different space")
            return delta
        return self.space.set(*delta)

    def __call__(self, delta: OutcomeSet) -> np.ndarray:
        """The projection attached to a set of outcomes."""
        delta = self.outcome_set(delta)
        out = _zeros(self.dim, self.exact)
        for i in delta:
            out = out + self.projections[i]
        return out

    def total(self) -> np.ndarray:
        return self(self.space.full())

    def is_null(self, delta: OutcomeSet) -> bool:
        return _is_zero(self(delta), self.exact)

    def vector(self, x) -> np.ndarray:
        if len(x) != self.dim:
            raise ShapeMismatchError(f"vector of length {len(x)} for a space of dimension {self.dim}")
        if self.exact:
            return exact_vector(x)
        return np.asarray(x, dtype=complex)


@dataclass(frozen=True, eq=False)
class SpectralMeasure(ProjectionMeasure):
    """Projection measure whose total is the identity."""


def _validate(projections: Sequence[np.ndarray], dim: int, exact: bool, complete: bool) -> None:
    for k, p in enumerate(projections):
        if p.shape != (dim, dim):
            raise ShapeMismatchError(f"projection {k} has shape {p.shape}, expected {(dim, dim)}")
        if not _is_zero(p @ p - p, exact):
            raise NotIdempotentError(f"projection {k} is not idempotent")
        if not _is_zero(p - _adjoint(p), exact):
            raise NotHermitianError(f"projection {k} is not self-adjoint")
    for k, p in enumerate(projections):
        for j in range(k + 1, len(projections)):
            if not _is_zero(p @ projections[j], exact):
                raise NotOrthogonalError(f"projections {k} and {j} are not orthogonal")
    if complete:
        total = _zeros(dim, exact)
        for p in projections:
            total = total + p
        if not _is_zero(total - _identity(dim, exact), exact):
            raise IncompleteError("projections do not sum to the identity")


def from_projections(dim: int, outcomes: Sequence, projections: Sequence) -> SpectralMeasure:
    """Validated spectral measure from one projection matrix per outcome.

    Entries may be exact (ints, Fractions, ``"p/q"`` strings, ``(re, im)``
    pairs of those, :class:`GaussianRational`) or floating point; a single
    floating entry switches the whole measure to the numeric path.
    """
    outcomes = tuple(outcomes)
    if len(outcomes) != len(projections):
        raise ShapeMismatchError("need exactly one projection per outcome")
    exact = all(
        (p.dtype == object) if isinstance(p, np.ndarray) else _is_exact(p) for p in projections
    )
    mats = tuple(_as_matrix(p, exact) for p in projections)
    _validate(mats, dim, exact, complete=True)
    space = FiniteSpace(tuple(str(o) for o in outcomes))
    return SpectralMeasure(space, outcomes, dim, mats, exact)


def _eigen_label(z: complex, tol: float) -> str:
    if abs(z.imag) <= tol:
        return f"{z.real:.10g}"
    return f"{z.real:.10g}{z.imag:+.10g}j"


def from_normal_matrix(n_matrix, rel_tol: float = EIGENVALUE_REL_TOL) -> SpectralMeasure:
    """Spectral measure of a normal matrix: one outcome per distinct eigenvalue.

    Eigenvalues closer than ``rel_tol`` times the spectral radius are merged;
    each outcome carries the orthogonal projection on the merged eigenspace,
    read off a complex Schur factorisation (diagonal for normal input).
    """
    n_matrix = np.asarray(n_matrix, dtype=complex)
    if n_matrix.ndim != 2 or n_matrix.shape[0] != n_matrix.shape[1]:
        raise ShapeMismatchError(f"expected a square matrix, got shape {n_matrix.shape}")
    m = n_matrix.shape[0]
    norm_f = np.linalg.norm(n_matrix)
    comm = n_matrix @ _adjoint(n_matrix) - _adjoint(n_matrix) @ n_matrix
    if np.linalg.norm(comm) > NORMALITY_TOL * norm_f**2:
        raise NonNormalError("matrix does not commute with its adjoint")
    try:
        t, z = scipy.linalg.schur(n_matrix, output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigensolverError(str(exc)) from exc
    lam = np.diag(t)
    tol = rel_tol * float(np.abs(lam).max(initial=0.0))

    # single-linkage grouping of eigenvalues
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(m):
        for j in range(i + 1, m):
            if abs(lam[i] - lam[j]) <= tol:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    clusters = sorted(groups.values(), key=lambda g: (lam[g].mean().real, lam[g].mean().imag))

    outcomes, projections = [], []
    for g in clusters:
        basis = z[:, g]
        outcomes.append(complex(lam[g].mean()))
        projections.append(basis @ _adjoint(basis))
    labels = [_eigen_label(o, tol) for o in outcomes]
    if len(set(labels)) != len(labels):
        labels = [f"{s}#{k}" for k, s in enumerate(labels)]
    try:
        _validate(projections, m, exact=False, complete=True)
    except (NotIdempotentError, NotHermitianError, NotOrthogonalError, IncompleteError) as exc:
        raise EigensolverError(f"eigenprojections failed the axiom check: {exc}") from exc
    values = tuple(o.real if abs(o.imag) <= tol else o for o in outcomes)
    return SpectralMeasure(FiniteSpace(tuple(labels)), values, m, tuple(projections), False)


def e_xy(e: ProjectionMeasure, delta: OutcomeSet, x, y):
    """The scalar ``(E(delta) x, y)``, linear in ``x`` and conjugate-linear in ``y``."""
    xv, yv = e.vector(x), e.vector(y)
    return np.sum(e(delta) @ xv * np.conj(yv))


def spectral_control(e: ProjectionMeasure) -> SignedMeasure:
    """Equivalent control measure ``sum_n t_n E_{x_n, x_n}``.

    The vectors ``x_n`` are the standard basis ``e_1 .. e_m`` in order and
    ``t_n = 2**-(n+1) / (1 + |x_n|**2) = 2**-(n+2)``. Since
    ``E_{e_n, e_n}(delta)`` is the ``n``-th diagonal entry of ``E(delta)``,
    the mass of an outcome is a weighted trace of its projection.
    """
    weights = [Fraction(1, 2 ** (n + 2)) for n in range(1, e.dim + 1)]
    masses = []
    for p in e.projections:
        if e.exact:
            masses.append(sum((w * p[n, n].re for n, w in enumerate(weights)), Fraction(0)))
        else:
            v = sum(float(w) * p[n, n].real for n, w in enumerate(weights))
            masses.append(Fraction(v) if v > AXIOM_TOL else Fraction(0))
    return SignedMeasure(e.space, tuple(masses))


class SpectralDecomposition(NamedTuple):
    support: AtomSet
    atomic: ProjectionMeasure
    diffuse: ProjectionMeasure


def restrict_projections(e: ProjectionMeasure, s: AtomSet) -> ProjectionMeasure:
    """The projection measure ``delta -> E(delta & s)``."""
    s = e.outcome_set(s)
    zero = _zeros(e.dim, e.exact)
    mats = tuple(p if i in s else zero for i, p in enumerate(e.projections))
    return ProjectionMeasure(e.space, e.outcomes, e.dim, mats, e.exact)


def spectral_decompose(e: ProjectionMeasure, g: SetFamily) -> SpectralDecomposition:
    """Decompose ``E`` along a family of outcome sets through its control measure.

    The parts are projection measures but not spectral measures: their
    totals are complementary projections rather than the identity.
    """
    support = g_atomic_support(spectral_control(e), g)
    return SpectralDecomposition(
        support, restrict_projections(e, support), restrict_projections(e, support.complement())
    )


def is_projection_measure(e: ProjectionMeasure) -> bool:
    """Whether the axioms other than completeness hold."""
    try:
        _validate(e.projections, e.dim, e.exact, complete=False)
    except (NotIdempotentError, NotHermitianError, NotOrthogonalError):
        return False
    return True


def is_spectral(e: ProjectionMeasure) -> bool:
    try:
        _validate(e.projections, e.dim, e.exact, complete=True)
    except (NotIdempotentError, NotHermitianError, NotOrthogonalError, IncompleteError):
        return False
    return True
