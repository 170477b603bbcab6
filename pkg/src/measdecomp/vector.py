"""R^d-valued measures on a finite space and their decomposition through a control measure."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .decompose import g_atomic_support
from .errors import SpaceMismatchError
from .measure import RationalLike, SignedMeasure, to_fraction
from .space import AtomSet, FiniteSpace, SetFamily


@dataclass(frozen=True)
class VectorMeasure:
    """Measure with a vector of ``d`` rational components on each block.

    A complex measure is represented with ``d = 2`` (real, imaginary).
    """

    space: FiniteSpace
    d: int
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        vals = tuple(tuple(to_fraction(c) for c in v) for v in self.values)
        if self.d < 1:
            raise ValueError("dimension must be at least 1")
        if len(vals) != self.space.n:
            raise ValueError(f"expected {self.space.n} block vectors, got {len(vals)}")
        if any(len(v) != self.d for v in vals):
            raise ValueError(f"every block vector must have length {self.d}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, space: FiniteSpace, values: Iterable[Sequence[RationalLike]]) -> VectorMeasure:
        vals = tuple(tuple(v) for v in values)
        return cls(space, len(vals[0]) if vals else 1, vals)

    @classmethod
    def from_components(cls, components: Sequence[SignedMeasure]) -> VectorMeasure:
        space = components[0].space
        for c in components:
            if c.space != space:
                raise SpaceMismatchError("components live on different spaces")
        return cls(space, len(components), tuple(zip(*(c.values for c in components))))

    def component(self, j: int) -> SignedMeasure:
        return SignedMeasure(self.space, tuple(v[j] for v in self.values))

    def _check(self, other) -> None:
        if self.space != other.space:
            raise SpaceMismatchError("operands live on different spaces")

    def __call__(self, f: AtomSet) -> tuple[Fraction, ...]:
        self._check(f)
        return tuple(sum((self.values[i][j] for i in f), Fraction(0)) for j in range(self.d))

    def __add__(self, other: VectorMeasure) -> VectorMeasure:
        self._check(other)
        return VectorMeasure(
            self.space,
            self.d,
            tuple(tuple(a + b for a, b in zip(u, v)) for u, v in zip(self.values, other.values)),
        )

    def restrict(self, s: AtomSet) -> VectorMeasure:
        self._check(s)
        zero = (Fraction(0),) * self.d
        return VectorMeasure(
            self.space, self.d, tuple(v if i in s else zero for i, v in enumerate(self.values))
        )


def is_theta_null(theta: VectorMeasure, f: AtomSet) -> bool:
    theta._check(f)
    return all(not any(theta.values[i]) for i in f)


def control_measure(theta: VectorMeasure) -> SignedMeasure:
    """Positive measure ``sum_j |Theta_j|`` with exactly the null sets of ``theta``."""
    return SignedMeasure(theta.space, tuple(sum(abs(c) for c in v) for v in theta.values))


class VectorDecomposition(NamedTuple):
    support: AtomSet
    atomic: VectorMeasure
    diffuse: VectorMeasure


def vector_decompose(theta: VectorMeasure, g: SetFamily) -> VectorDecomposition:
    """Decompose ``theta`` along ``g`` using the support computed for its control measure."""
    support = g_atomic_support(control_measure(theta), g)
    return VectorDecomposition(support, theta.restrict(support), theta.restrict(support.complement()))
