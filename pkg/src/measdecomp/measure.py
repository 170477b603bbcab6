"""Signed measures on a finite space, in exact rational arithmetic.

A measure is fixed by the mass of each block; the mass of a set is the sum
over its blocks, so additivity holds by construction. The setwise order
``mu <= nu`` (``mu(F) <= nu(F)`` for every ``F``) is the blockwise order, and
the lattice operations are blockwise as well.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import PreconditionError, SizeLimitError, SpaceMismatchError
from .space import AtomSet, FiniteSpace, SetFamily

RationalLike = Union[int, Fraction, str]

#: Largest set accepted by the exhaustive subset search of :func:`find_positive_subset`.
MAX_SEARCH_BLOCKS = 20


def to_fraction(x: RationalLike) -> Fraction:
    """Convert an exact scalar (int, Fraction or ``"p/q"`` string) to a Fraction.

    Floats are rejected: their binary expansion would silently leak into
    results that are meant to be exact.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not measure values")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


@dataclass(frozen=True)
class SignedMeasure:
    """Finite signed measure given by its mass on each block of ``space``."""

    space: FiniteSpace
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(to_fraction(v) for v in self.values)
        if len(vals) != self.space.n:
            raise ValueError(f"expected {self.space.n} block values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, space: FiniteSpace, values: Iterable[RationalLike]) -> SignedMeasure:
        return cls(space, tuple(values))

    @classmethod
    def from_mapping(cls, space: FiniteSpace, masses: Mapping[str, RationalLike]) -> SignedMeasure:
        """Measure with the given block masses; unnamed blocks get zero."""
        vals = [Fraction(0)] * space.n
        for label, v in masses.items():
            vals[space.index(label)] = to_fraction(v)
        return cls(space, tuple(vals))

    @classmethod
    def zero(cls, space: FiniteSpace) -> SignedMeasure:
        return cls(space, (Fraction(0),) * space.n)

    def _check(self, other) -> None:
        if self.space != other.space:
            raise SpaceMismatchError("operands live on different spaces")

    def __call__(self, s: AtomSet) -> Fraction:
        return evaluate(self, s)

    def __add__(self, other: SignedMeasure) -> SignedMeasure:
        self._check(other)
        return SignedMeasure(self.space, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: SignedMeasure) -> SignedMeasure:
        self._check(other)
        return SignedMeasure(self.space, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> SignedMeasure:
        return SignedMeasure(self.space, tuple(-a for a in self.values))

    def __mul__(self, t: RationalLike) -> SignedMeasure:
        t = to_fraction(t)
        return SignedMeasure(self.space, tuple(t * a for a in self.values))

    __rmul__ = __mul__

    def __le__(self, other: SignedMeasure) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def __ge__(self, other: SignedMeasure) -> bool:
        return other <= self

    def __abs__(self) -> SignedMeasure:
        return SignedMeasure(self.space, tuple(abs(a) for a in self.values))

    def restrict(self, s: AtomSet) -> SignedMeasure:
        """The measure ``F -> mu(F & s)``."""
        self._check(s)
        return SignedMeasure(
            self.space, tuple(v if i in s else Fraction(0) for i, v in enumerate(self.values))
        )

    def is_positive(self) -> bool:
        return all(v >= 0 for v in self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def carrier(self) -> AtomSet:
        """Blocks of nonzero mass: the smallest set the measure is concentrated on."""
        return self.space.from_indices(i for i, v in enumerate(self.values) if v != 0)

    def __repr__(self) -> str:
        return "SignedMeasure(" + ", ".join(str(v) for v in self.values) + ")"


def evaluate(mu: SignedMeasure, f: AtomSet) -> Fraction:
    mu._check(f)
    return sum((mu.values[i] for i in f), Fraction(0))


def variation(mu: SignedMeasure) -> tuple[SignedMeasure, Fraction]:
    """Return the variation measure ``|mu|`` and the total variation norm."""
    v = abs(mu)
    return v, sum(v.values, Fraction(0))


def total_variation(mu: SignedMeasure) -> Fraction:
    return variation(mu)[1]


def lattice_sup(nu1: SignedMeasure, nu2: SignedMeasure) -> SignedMeasure:
    """Least upper bound in the setwise order.

    For every set ``F`` its value is ``max(nu1(B) + nu2(F - B))`` over
    measurable ``B <= F``, which on a partition space is the blockwise max.
    """
    nu1._check(nu2)
    return SignedMeasure(nu1.space, tuple(max(a, b) for a, b in zip(nu1.values, nu2.values)))


def lattice_inf(nu1: SignedMeasure, nu2: SignedMeasure) -> SignedMeasure:
    return -lattice_sup(-nu1, -nu2)


def is_null_set(mu: SignedMeasure, f: AtomSet) -> bool:
    """True when every measurable subset of ``f`` has measure zero.

    For a signed measure this is stronger than ``mu(f) == 0``.
    """
    mu._check(f)
    return all(mu.values[i] == 0 for i in f)


class Relation(NamedTuple):
    abs_continuous: bool
    singular: bool


def relation(mu: SignedMeasure, nu: SignedMeasure) -> Relation:
    """Whether ``mu << nu`` and whether ``mu`` and ``nu`` are mutually singular."""
    mu._check(nu)
    ac = all(a == 0 for a, b in zip(mu.values, nu.values) if b == 0)
    singular = all(a == 0 or b == 0 for a, b in zip(mu.values, nu.values))
    return Relation(ac, singular)


class PositiveSubsetStep(NamedTuple):
    """One round of the positive-subset induction: threshold index and removed set."""

    n: int
    removed: AtomSet


def _scaled(mu: SignedMeasure) -> tuple[list[int], int]:
    # Common denominator so subset sums are compared in integers.
    den = math.lcm(*(v.denominator for v in mu.values))
    return [int(v * den) for v in mu.values], den


def positive_subset_steps(mu: SignedMeasure, a: AtomSet) -> tuple[AtomSet, list[PositiveSubsetStep]]:
    """Run the positive-subset induction from ``a`` and record every round.

    Starting from ``A_0 = a``, while ``A_{k-1}`` has a subset of negative
    measure, take the smallest integer ``n_k >= 1`` for which some
    ``B <= A_{k-1}`` has ``mu(B) < -1/n_k``, remove such a ``B_k`` and set
    ``A_k = a - (B_1 | ... | B_k)``. Among the admissible ``B`` the one of
    least measure is removed, ties going to the lexicographically smallest
    bit vector. Subsets are searched exhaustively.
    """
    mu._check(a)
    if evaluate(mu, a) <= 0:
        raise PreconditionError(f"positive-subset search needs mu(a) > 0, got {evaluate(mu, a)}")
    if len(a) > MAX_SEARCH_BLOCKS:
        raise SizeLimitError(f"subset search over {len(a)} blocks exceeds cap {MAX_SEARCH_BLOCKS}")
    ints, den = _scaled(mu)
    n_prev = 1
    current = a.bits
    steps: list[PositiveSubsetStep] = []
    while True:
        best_sum, best_key, best_mask = 0, None, 0
        sums = {0: 0}
        sub = current & -current if current else 0
        while sub:
            low = sub & -sub
            s = sums[sub ^ low] + ints[low.bit_length() - 1]
            sums[sub] = s
            if s <= best_sum:
                key = AtomSet(a.space, sub).bitvector
                if s < best_sum or best_key is None or key < best_key:
                    best_sum, best_key, best_mask = s, key, sub
            sub = (sub - current) & current
        if best_sum >= 0:
            return AtomSet(a.space, current), steps
        # smallest n with best_sum/den < -1/n, i.e. n * |best_sum| > den
        n_k = max(n_prev, den // -best_sum + 1)
        steps.append(PositiveSubsetStep(n_k, AtomSet(a.space, best_mask)))
        current &= ~best_mask
        n_prev = n_k


def find_positive_subset(mu: SignedMeasure, a: AtomSet) -> AtomSet:
    """A ``mu``-positive subset of ``a`` whose measure is at least ``mu(a) > 0``."""
    return positive_subset_steps(mu, a)[0]


class HahnJordan(NamedTuple):
    g_bar: AtomSet
    mu_plus: SignedMeasure
    mu_minus: SignedMeasure


def hahn_jordan(mu: SignedMeasure) -> HahnJordan:
    """Hahn set and Jordan parts of ``mu``.

    ``g_bar`` is the largest ``mu``-positive set whose complement is
    ``mu``-negative: it keeps every block of nonnegative mass, zero-mass
    blocks included.
    """
    g_bar = mu.space.from_indices(i for i, v in enumerate(mu.values) if v >= 0)
    return HahnJordan(g_bar, mu.restrict(g_bar), -mu.restrict(g_bar.complement()))


def is_positive_set(mu: SignedMeasure, f: AtomSet) -> bool:
    mu._check(f)
    return all(mu.values[i] >= 0 for i in f)


def positive_sets(mu: SignedMeasure) -> SetFamily:
    """The family of all ``mu``-positive sets (closed under unions, contains the empty set)."""
    if mu.space.n > 16:
        raise SizeLimitError("enumerating positive sets is capped at 16 blocks")
    top = hahn_jordan(mu).g_bar
    return SetFamily(mu.space, tuple(top.subsets()), sigma_closed=True, validate=False)
