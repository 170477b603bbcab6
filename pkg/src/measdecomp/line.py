"""Signed measures on [0, 1]: finitely many point masses plus a step density.

The density is constant on each cell of a uniform grid of ``m`` cells
``[k/m, (k+1)/m)``; the last cell is closed so that the point 1 belongs to
a cell. Measurable sets are restricted to grid-aligned unions of cells
together with finitely many extra points (:class:`LineSet`), which keeps every
evaluation exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import PreconditionError, SpaceMismatchError
from .measure import RationalLike, to_fraction


def cell_of(x: Fraction, m: int) -> int:
    """Index of the grid cell containing ``x``; the last cell also holds 1."""
    return min(math.floor(_check_location(x) * m), m - 1)


def _check_location(x: Fraction) -> Fraction:
    x = to_fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"location {x} lies outside [0, 1]")
    return x


@dataclass(frozen=True)
class LineSet:
    """Union of the grid cells in ``cells`` (bit mask) and the finite set ``points``."""

    m: int
    cells: int = 0
    points: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("grid needs at least one cell")
        if self.cells < 0 or self.cells >> self.m:
            raise ValueError("cell mask does not fit the grid")
        pts = tuple(sorted({_check_location(p) for p in self.points}))
        object.__setattr__(self, "points", pts)

    @classmethod
    def of_cells(cls, m: int, cells: Iterable[int] = (), points: Iterable[RationalLike] = ()) -> LineSet:
        mask = 0
        for k in cells:
            if not 0 <= k < m:
                raise IndexError(f"cell {k} out of range for m={m}")
            mask |= 1 << k
        return cls(m, mask, tuple(to_fraction(p) for p in points))

    @classmethod
    def full(cls, m: int) -> LineSet:
        return cls(m, (1 << m) - 1)

    def __contains__(self, x: Fraction) -> bool:
        return x in self.points or bool(self.cells >> cell_of(x, self.m) & 1)


@dataclass(frozen=True)
class LineMeasure:
    """``sum_k densities[k] * Lebesgue|cell_k + sum_j w_j * delta_{x_j}``.

    ``atoms`` holds ``(location, weight)`` pairs with distinct locations in
    [0, 1] and nonzero weights; they are kept sorted by location.
    """

    m: int
    densities: tuple[Fraction, ...]
    atoms: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("grid needs at least one cell")
        dens = tuple(to_fraction(d) for d in self.densities)
        if len(dens) != self.m:
            raise ValueError(f"expected {self.m} densities, got {len(dens)}")
        atoms = tuple(sorted((_check_location(x), to_fraction(w)) for x, w in self.atoms))
        locs = [x for x, _ in atoms]
        if len(set(locs)) != len(locs):
            raise ValueError("atom locations must be distinct")
        if any(w == 0 for _, w in atoms):
            raise ValueError("atom weights must be nonzero")
        object.__setattr__(self, "densities", dens)
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def build(
        cls,
        m: int,
        densities: Iterable[RationalLike] | None = None,
        atoms: Iterable[tuple[RationalLike, RationalLike]] = (),
    ) -> LineMeasure:
        """Measure from loose inputs; zero-weight atoms are dropped, densities default to 0."""
        dens = tuple(densities) if densities is not None else (0,) * m
        kept = tuple((x, w) for x, w in atoms if to_fraction(w) != 0)
        return cls(m, dens, kept)

    @classmethod
    def lebesgue(cls, m: int = 1) -> LineMeasure:
        return cls(m, (Fraction(1),) * m)

    def _check(self, other) -> None:
        if self.m != other.m:
            raise SpaceMismatchError(f"grid sizes differ: {self.m} != {other.m}")

    def __add__(self, other: LineMeasure) -> LineMeasure:
        self._check(other)
        weights: dict[Fraction, Fraction] = {}
        for x, w in self.atoms + other.atoms:
            weights[x] = weights.get(x, Fraction(0)) + w
        return LineMeasure.build(
            self.m,
            tuple(a + b for a, b in zip(self.densities, other.densities)),
            weights.items(),
        )

    def __neg__(self) -> LineMeasure:
        return LineMeasure(self.m, tuple(-d for d in self.densities), tuple((x, -w) for x, w in self.atoms))

    def __sub__(self, other: LineMeasure) -> LineMeasure:
        return self + (-other)

    def __call__(self, s: LineSet) -> Fraction:
        return evaluate_line(self, s)

    def is_positive(self) -> bool:
        return all(d >= 0 for d in self.densities) and all(w > 0 for _, w in self.atoms)

    def is_zero(self) -> bool:
        return not self.atoms and not any(self.densities)

    @property
    def atom_locations(self) -> tuple[Fraction, ...]:
        return tuple(x for x, _ in self.atoms)

    def total_mass(self) -> Fraction:
        return evaluate_line(self, LineSet.full(self.m))


def evaluate_line(mu: LineMeasure, s: LineSet) -> Fraction:
    """Mass of ``s``: density times cell width over selected cells, plus atoms inside ``s``."""
    mu._check(s)
    width = Fraction(1, mu.m)
    total = sum((d * width for k, d in enumerate(mu.densities) if s.cells >> k & 1), Fraction(0))
    return total + sum((w for x, w in mu.atoms if x in s), Fraction(0))


def restrict_line(mu: LineMeasure, s: LineSet) -> LineMeasure:
    """The measure ``t -> mu(s & t)``."""
    mu._check(s)
    dens = tuple(d if s.cells >> k & 1 else Fraction(0) for k, d in enumerate(mu.densities))
    return LineMeasure(mu.m, dens, tuple((x, w) for x, w in mu.atoms if x in s))


def atomic_diffuse(mu: LineMeasure) -> tuple[LineMeasure, LineMeasure]:
    """Split into a purely atomic and a diffuse part.

    The family is the countable subsets of [0, 1]. Atoms of ``|mu|`` are
    exactly the point masses, so the union of their locations is the
    pointwise-largest support that matters and the atomic part is ``mu``
    restricted to it.
    """
    support = LineSet(mu.m, 0, mu.atom_locations)
    a = restrict_line(mu, support)
    return a, mu - a


def lebesgue_line(mu: LineMeasure) -> tuple[LineMeasure, LineMeasure]:
    """Split into parts absolutely continuous and singular w.r.t. Lebesgue measure.

    Finite point sets are Lebesgue-null and carry the point masses; a step
    density charges no Lebesgue-null set.
    """
    s = restrict_line(mu, LineSet(mu.m, 0, mu.atom_locations))
    return mu - s, s


@dataclass(frozen=True)
class ClosedSet:
    """Finite union of closed intervals and isolated points of [0, 1]."""

    intervals: tuple[tuple[Fraction, Fraction], ...] = ()
    points: tuple[Fraction, ...] = ()

    def __contains__(self, x: Fraction) -> bool:
        return x in self.points or any(lo <= x <= hi for lo, hi in self.intervals)


def topological_support(mu: LineMeasure) -> ClosedSet:
    """Complement of the largest open ``mu``-null set, for positive ``mu``.

    Closures of the cells with nonzero density, adjacent ones merged, plus
    the atom locations not already covered.
    """
    if not mu.is_positive():
        raise PreconditionError("topological support needs a positive measure")
    intervals = []
    k = 0
    while k < mu.m:
        if mu.densities[k] == 0:
            k += 1
            continue
        start = k
        while k < mu.m and mu.densities[k] != 0:
            k += 1
        intervals.append((Fraction(start, mu.m), Fraction(k, mu.m)))
    covered = ClosedSet(tuple(intervals))
    points = tuple(x for x in mu.atom_locations if x not in covered)
    return ClosedSet(tuple(intervals), points)
