"""Brute-force reference implementations.

Everything here works from definitions by exhaustive enumeration and shares
nothing with the main code path except the data types and :func:`evaluate`.
Subset scans run over integer-scaled subset-sum tables (numpy), so they stay
exact while covering all ``2**n`` sets.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations
from typing import Iterator

import numpy as np

from .errors import EmptyFamilyError, SizeLimitError
from .line import LineMeasure, LineSet, evaluate_line
from .measure import SignedMeasure, evaluate
from .space import AtomSet, FiniteSpace, SetFamily

MAX_SCAN_BLOCKS = 16
MAX_SUP_BLOCKS = 12


def _cap(n: int, limit: int) -> None:
    if n > limit:
        raise SizeLimitError(f"exhaustive scan over {n} blocks exceeds cap {limit}")


class SubsetTable:
    """Measure of every subset of a finite space, indexed by bit mask.

    ``sums[F]`` is ``den * mu(F)`` as an integer. ``min_sub[F]`` and
    ``max_sub[F]`` are the extreme values over all subsets of ``F``.
    """

    def __init__(self, mu: SignedMeasure):
        n = mu.space.n
        _cap(n, MAX_SCAN_BLOCKS)
        self.n = n
        self.den = math.lcm(*(v.denominator for v in mu.values))
        ints = [int(v * self.den) for v in mu.values]
        dtype = np.int64 if sum(abs(x) for x in ints) < 2**62 else object
        sums = np.zeros(1, dtype=dtype)
        for x in ints:
            sums = np.concatenate([sums, sums + x])
        self.sums = sums
        lo, hi = sums.copy(), sums.copy()
        masks = np.arange(1 << n)
        for i in range(n):
            has = (masks >> i) & 1 == 1
            lo[has] = np.minimum(lo[has], lo[masks[has] ^ (1 << i)])
            hi[has] = np.maximum(hi[has], hi[masks[has] ^ (1 << i)])
        self.min_sub, self.max_sub = lo, hi

    def value(self, mask: int) -> Fraction:
        return Fraction(int(self.sums[mask]), self.den)

    def is_null(self, mask: int) -> bool:
        return self.min_sub[mask] == 0 and self.max_sub[mask] == 0

    def null_masks(self) -> np.ndarray:
        return (self.min_sub == 0) & (self.max_sub == 0)

    def positive_masks(self) -> np.ndarray:
        return self.min_sub >= 0

    def negative_masks(self) -> np.ndarray:
        return self.max_sub <= 0


def brute_sigma_close(g: SetFamily) -> SetFamily:
    """Unions of every nonempty sub-list of the members, deduplicated."""
    if g.sigma_closed:
        masks = set(g.masks)
        while True:
            grown = masks | {a | b for a in masks for b in masks}
            if grown == masks:
                break
            masks = grown
    else:
        _cap(len(g), MAX_SCAN_BLOCKS)
        members = [m.bits for m in g.members]
        masks = set()
        for r in range(1, len(members) + 1):
            for combo in combinations(members, r):
                u = 0
                for b in combo:
                    u |= b
                masks.add(u)
    return SetFamily(g.space, tuple(AtomSet(g.space, b) for b in masks), sigma_closed=True, validate=False)


def _abs_measure(mu: SignedMeasure) -> SignedMeasure:
    return SignedMeasure(mu.space, tuple(-v if v < 0 else v for v in mu.values))


def brute_g_support(mu: SignedMeasure, g: SetFamily) -> AtomSet:
    """Essential maximum of the closure of ``g``, promoted to its largest equivalent member.

    A member ``M`` is a maximum for the a.e. order when ``|mu|(G - M) == 0``
    for every member ``G``; among the members differing from ``M`` by a
    ``|mu|``-null set, the pointwise-largest one is returned.
    """
    if len(g) == 0:
        raise EmptyFamilyError("empty family")
    _cap(mu.space.n, MAX_SCAN_BLOCKS)
    closure = brute_sigma_close(g).members
    var = _abs_measure(mu)
    maxima = [m for m in closure if all(evaluate(var, G - m) == 0 for G in closure)]
    if not maxima:
        raise AssertionError("closure has no essential maximum")
    m = maxima[0]
    equivalent = [c for c in closure if evaluate(var, c ^ m) == 0]
    top = equivalent[0]
    for c in equivalent:
        top = top | c
    if top not in equivalent:
        raise AssertionError("equivalence class has no largest member")
    return top


def brute_hahn(mu: SignedMeasure) -> AtomSet:
    """Largest ``mu``-positive set whose complement is ``mu``-negative, by scanning all sets."""
    table = SubsetTable(mu)
    full = (1 << table.n) - 1
    masks = np.arange(full + 1)
    ok = table.positive_masks() & table.negative_masks()[full ^ masks]
    candidates = masks[ok]
    sizes = np.array([bin(int(c)).count("1") for c in candidates])
    best = int(candidates[sizes.argmax()])
    if any(int(c) & ~best for c in candidates):
        raise AssertionError("Hahn sets have no pointwise-largest member")
    return AtomSet(mu.space, best)


def brute_sup_values(nu1: SignedMeasure, nu2: SignedMeasure) -> dict[int, Fraction]:
    """``F -> max over B <= F of nu1(B) + nu2(F - B)`` for every set ``F``."""
    _cap(nu1.space.n, MAX_SUP_BLOCKS)
    t1, t2 = SubsetTable(nu1), SubsetTable(nu2)
    den = math.lcm(t1.den, t2.den)
    s1 = t1.sums * (den // t1.den)
    s2 = t2.sums * (den // t2.den)
    masks = np.arange(1 << nu1.space.n)
    out = {}
    for f in range(1 << nu1.space.n):
        subs = masks[(masks & ~f) == 0]
        out[f] = Fraction(int((s1[subs] + s2[f ^ subs]).max()), den)
    return out


def brute_sup(nu1: SignedMeasure, nu2: SignedMeasure) -> SignedMeasure:
    """Supremum rebuilt from its values on single blocks."""
    values = brute_sup_values(nu1, nu2)
    return SignedMeasure(nu1.space, tuple(values[1 << i] for i in range(nu1.space.n)))


def brute_relation(mu: SignedMeasure, nu: SignedMeasure) -> tuple[bool, bool]:
    """``(mu << nu, mu singular to nu)`` from the definitions over all sets."""
    tm, tn = SubsetTable(mu), SubsetTable(nu)
    null_mu, null_nu = tm.null_masks(), tn.null_masks()
    full = (1 << mu.space.n) - 1
    masks = np.arange(full + 1)
    ac = bool(np.all(null_mu[null_nu]))
    singular = bool(np.any(null_mu[full ^ masks] & null_nu))
    return ac, singular


def is_positive_set(mu: SignedMeasure, f: AtomSet) -> bool:
    return bool(SubsetTable(mu).min_sub[f.bits] >= 0)


def nearest_candidates(mu: SignedMeasure, g: SetFamily, samples: int, seed) -> Iterator[SignedMeasure]:
    """Random measures concentrated on members of the closure of ``g``.

    Values are drawn near ``mu`` (exact copies, small rational perturbations
    or fresh values) so that the search probes close competitors.
    """
    rng = random.Random(seed)
    closure = brute_sigma_close(g).members
    for _ in range(samples):
        G = rng.choice(closure)
        vals = []
        for i, v in enumerate(mu.values):
            if i not in G:
                vals.append(Fraction(0))
                continue
            r = rng.random()
            if r < 0.4:
                vals.append(v)
            elif r < 0.8:
                vals.append(v + Fraction(rng.randint(-8, 8), rng.randint(1, 4)))
            else:
                vals.append(Fraction(rng.randint(-10, 10), rng.randint(1, 3)))
        yield SignedMeasure(mu.space, tuple(vals))


def _norm(mu: SignedMeasure) -> Fraction:
    return sum((abs(v) for v in mu.values), Fraction(0))


def brute_nearest(mu: SignedMeasure, g: SetFamily, samples: int = 200, seed=0) -> Fraction:
    """Least total-variation distance from ``mu`` to the sampled atomic measures.

    The restriction of ``mu`` to the brute-force support is always among the
    candidates.
    """
    if len(g) == 0:
        raise EmptyFamilyError("empty family")
    support = brute_g_support(mu, g)
    best = _norm(mu - mu.restrict(support))
    for nu in nearest_candidates(mu, g, samples, seed):
        best = min(best, _norm(mu - nu))
    return best


def brute_open_null_cells(mu: LineMeasure) -> np.ndarray:
    """Cell masks ``S`` whose open set (interior of the closed cells, atoms removed) is null.

    Interior of the union of closed cells of ``S`` relative to [0, 1], minus
    the atom locations, is open; its ``|mu|``-mass is the sum of the cell
    masses of ``|density|``, tabulated for every ``S`` at once.
    """
    if mu.m > MAX_SUP_BLOCKS:
        raise SizeLimitError(f"grid of {mu.m} cells exceeds cap {MAX_SUP_BLOCKS}")
    cell_mass = SignedMeasure(
        _grid_space(mu.m), tuple(evaluate_line(_abs_density(mu), LineSet.of_cells(mu.m, [k])) for k in range(mu.m))
    )
    table = SubsetTable(cell_mass)
    return np.flatnonzero(table.sums == 0)


def _grid_space(m: int) -> FiniteSpace:
    return FiniteSpace.of_size(m, prefix="c")


def _abs_density(mu: LineMeasure) -> LineMeasure:
    return LineMeasure(mu.m, tuple(abs(d) for d in mu.densities), ())


def in_open_set(x: Fraction, m: int, cells, atoms: tuple[Fraction, ...]):
    """Whether ``x`` lies in the relative interior of the closed cells in ``cells``, minus ``atoms``.

    ``cells`` may be an int or an integer array of masks.
    """
    if x in atoms:
        return np.zeros(np.shape(cells), dtype=bool)
    k = x * m
    if k.denominator != 1:
        return (cells >> math.floor(k)) & 1 == 1
    k = int(k)
    left = True if k == 0 else (cells >> (k - 1)) & 1 == 1
    right = True if k == m else (cells >> k) & 1 == 1
    return left & right


def brute_in_support(mu: LineMeasure, x: Fraction) -> bool:
    """``x`` is in the support iff no grid-aligned open null set contains it."""
    hits = in_open_set(x, mu.m, brute_open_null_cells(mu), mu.atom_locations)
    return not bool(np.any(hits))


def support_probe_points(mu: LineMeasure) -> list[Fraction]:
    """Points at which membership in a grid-aligned closed set can change.

    Grid points, atom locations and one point inside each cell that is
    neither a grid point nor an atom.
    """
    pts = {Fraction(k, mu.m) for k in range(mu.m + 1)} | set(mu.atom_locations)
    for k in range(mu.m):
        lo = Fraction(k, mu.m)
        q = Fraction(1, 2)
        x = lo + q / mu.m
        while x in mu.atom_locations:
            q /= 2
            x = lo + q / mu.m
        pts.add(x)
    return sorted(pts)
