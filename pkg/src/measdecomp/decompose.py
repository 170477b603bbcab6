"""Decomposition of a measure along a family of sets closed under unions.

Given a family ``G`` and a measure ``mu``, there is a member ``G_mu`` of the
sigma-closure of ``G`` that contains every member up to a ``mu``-null set.
Restricting ``mu`` to ``G_mu`` and to its complement gives the unique split

    mu = mu_G + mu_G_perp

with ``mu_G`` concentrated on a member of the family and every member of
the family null for ``mu_G_perp``. On a finite space the union of all
members is itself a member and is the pointwise largest choice of
``G_mu``; that is the representative returned here.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import EmptyFamilyError, PreconditionError
from .measure import SignedMeasure, positive_sets, relation
from .space import AtomSet, SetFamily


@dataclass(frozen=True)
class Decomposition:
    support: AtomSet
    atomic: SignedMeasure
    diffuse: SignedMeasure

    def minimal_support(self) -> AtomSet:
        """Smallest set in the support's equivalence class (may lie outside the family)."""
        return self.support & (self.atomic + self.diffuse).carrier()


def _nonempty(g: SetFamily) -> None:
    if len(g) == 0:
        raise EmptyFamilyError("the family of sets must contain at least one member")


def g_atomic_support(mu: SignedMeasure, g: SetFamily) -> AtomSet:
    """Pointwise-largest member of the sigma-closure of ``g``.

    Every member ``G`` then satisfies ``G - support == {}``, so ``G - support``
    is null for ``mu`` and for ``|mu|`` alike.
    """
    _nonempty(g)
    mu._check(g)
    return g.union()


def minimal_support(mu: SignedMeasure, g: SetFamily) -> AtomSet:
    """The support with all ``mu``-null blocks removed."""
    return g_atomic_support(mu, g) & mu.carrier()


def dellacherie_decompose(mu: SignedMeasure, g: SetFamily) -> Decomposition:
    support = g_atomic_support(mu, g)
    return Decomposition(support, mu.restrict(support), mu.restrict(support.complement()))


def null_family(nu: SignedMeasure) -> AtomSet:
    """Union of the ``nu``-null blocks.

    The family of ``nu``-null sets is closed under unions and this set is
    its pointwise maximum, so it stands for the whole family.
    """
    return nu.space.from_indices(i for i, v in enumerate(nu.values) if v == 0)


def null_sets(nu: SignedMeasure) -> SetFamily:
    """Every ``nu``-null set, explicitly (``2**k`` members for ``k`` null blocks)."""
    top = null_family(nu)
    return SetFamily(nu.space, tuple(top.subsets()), sigma_closed=True, validate=False)


def polar_set(measures: Iterable[SignedMeasure]) -> AtomSet:
    """Largest set that is null for every measure given."""
    it = iter(measures)
    try:
        out = null_family(next(it))
    except StopIteration:
        raise EmptyFamilyError("polar set of an empty collection of measures") from None
    for nu in it:
        out = out & null_family(nu)
    return out


def lebesgue_decompose(mu: SignedMeasure, nu: SignedMeasure) -> tuple[SignedMeasure, SignedMeasure]:
    """Split ``mu`` into a part absolutely continuous w.r.t. ``nu`` and a ``nu``-singular part.

    Runs the decomposition against the family of ``nu``-null sets: the
    atomic part lives on a ``nu``-null set (singular), the diffuse part
    vanishes on every ``nu``-null set (absolutely continuous).
    """
    mu._check(nu)
    s = mu.restrict(null_family(nu))
    return mu - s, s


def radon_nikodym_density(ac: SignedMeasure, nu: SignedMeasure) -> tuple[Fraction, ...]:
    """Blockwise density ``f`` with ``f . nu == ac``; zero on ``nu``-null blocks."""
    if not relation(ac, nu).abs_continuous:
        raise PreconditionError("measure is not absolutely continuous with respect to nu")
    return tuple(a / b if b != 0 else Fraction(0) for a, b in zip(ac.values, nu.values))


def hahn_decompose_via_positive_sets(mu: SignedMeasure) -> Decomposition:
    """Hahn decomposition obtained by decomposing along the family of positive sets.

    The atomic part is ``mu+`` and the diffuse part is ``-mu-``.
    """
    return dellacherie_decompose(mu, positive_sets(mu))
