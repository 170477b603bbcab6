"""The atomic and diffuse projections on the space of signed measures.

For a nonempty family ``G`` closed under unions, ``A(G)`` is the set of
measures concentrated on some member and ``D(G)`` the set of measures for
which every member is null. They are complementary bands of the Riesz space
of signed measures; ``A`` and ``D`` below are the corresponding band
projections.
"""
from __future__ import annotations

from typing import NamedTuple

from .decompose import dellacherie_decompose, g_atomic_support
from .measure import SignedMeasure, is_null_set
from .space import SetFamily


def band_project(mu: SignedMeasure, g: SetFamily) -> tuple[SignedMeasure, SignedMeasure]:
    """``(A mu, D mu)``; they sum to ``mu`` and are mutually singular."""
    dec = dellacherie_decompose(mu, g)
    return dec.atomic, dec.diffuse


class BandMembership(NamedTuple):
    in_atomic_band: bool
    in_diffuse_band: bool


def band_membership(mu: SignedMeasure, g: SetFamily) -> BandMembership:
    # Every member lies inside the pointwise-largest one, so "concentrated on
    # some member" and "every member is null" are both decided by it.
    top = g_atomic_support(mu, g)
    return BandMembership(
        in_atomic_band=is_null_set(mu, top.complement()),
        in_diffuse_band=is_null_set(mu, top),
    )
