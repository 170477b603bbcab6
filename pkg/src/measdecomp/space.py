"""Finite measurable spaces, measurable sets and families of sets.

A :class:`FiniteSpace` stands for the sigma-algebra generated by a finite
partition; its blocks are the atoms of the sigma-algebra, so every measurable
set is a union of blocks and is stored as an integer bit mask (bit ``i`` set
means block ``i`` is included).

On a finite space a union of countably many sets is a union of finitely many
distinct ones, so "closed under countable unions" and "closed under finite
unions" coincide and sigma-closure is a finite fixpoint computation.
"""
from __future__ import annotations

from dataclasses import InitVar, dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import SizeLimitError, SpaceMismatchError

#: Largest number of distinct generators accepted by :func:`sigma_close`.
MAX_GENERATORS = 16


@dataclass(frozen=True)
class FiniteSpace:
    """Measurable space generated by a finite partition with labelled blocks."""

    block_labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(s) for s in self.block_labels)
        object.__setattr__(self, "block_labels", labels)
        if not labels:
            raise ValueError("a space needs at least one block")
        if len(set(labels)) != len(labels):
            raise ValueError(f"block labels must be distinct: {labels}")

    @classmethod
    def of_size(cls, n: int, prefix: str = "a") -> FiniteSpace:
        """Space with blocks ``a1 .. an``."""
        return cls(tuple(f"{prefix}{i + 1}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.block_labels)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.block_labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown block label {label!r}") from None

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def set(self, *labels: str) -> AtomSet:
        """The measurable set made of the named blocks."""
        bits = 0
        for s in labels:
            bits |= 1 << self.index(s)
        return AtomSet(self, bits)

    def from_indices(self, indices: Iterable[int]) -> AtomSet:
        bits = 0
        for i in indices:
            if not 0 <= i < self.n:
                raise IndexError(f"block index {i} out of range for n={self.n}")
            bits |= 1 << i
        return AtomSet(self, bits)

    def empty(self) -> AtomSet:
        return AtomSet(self, 0)

    def full(self) -> AtomSet:
        return AtomSet(self, self.full_mask)

    def subsets(self) -> Iterator[AtomSet]:
        """All ``2**n`` measurable sets, in increasing mask order."""
        for bits in range(1 << self.n):
            yield AtomSet(self, bits)


@dataclass(frozen=True)
class AtomSet:
    """A measurable set: a union of blocks of ``space`` encoded as a bit mask."""

    space: FiniteSpace
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.space.n:
            raise ValueError(f"mask {self.bits:#x} does not fit a space of {self.space.n} blocks")

    def _check(self, other: AtomSet) -> None:
        if self.space != other.space:
            raise SpaceMismatchError("sets belong to different spaces")

    def __or__(self, other: AtomSet) -> AtomSet:
        self._check(other)
        return AtomSet(self.space, self.bits | other.bits)

    def __and__(self, other: AtomSet) -> AtomSet:
        self._check(other)
        return AtomSet(self.space, self.bits & other.bits)

    def __sub__(self, other: AtomSet) -> AtomSet:
        self._check(other)
        return AtomSet(self.space, self.bits & ~other.bits)

    def __xor__(self, other: AtomSet) -> AtomSet:
        self._check(other)
        return AtomSet(self.space, self.bits ^ other.bits)

    def complement(self) -> AtomSet:
        return AtomSet(self.space, self.space.full_mask & ~self.bits)

    def __le__(self, other: AtomSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: AtomSet) -> bool:
        return other <= self

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        """Indices of the blocks in the set, ascending."""
        return (i for i in range(self.space.n) if self.bits >> i & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def bitvector(self) -> tuple[int, ...]:
        return tuple(self.bits >> i & 1 for i in range(self.space.n))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.space.block_labels[i] for i in self)

    def subsets(self) -> Iterator[AtomSet]:
        """Every measurable subset, the empty set first and ``self`` last."""
        sub = 0
        while True:
            yield AtomSet(self.space, sub)
            if sub == self.bits:
                return
            sub = (sub - self.bits) & self.bits

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


def _canonical_key(s: AtomSet) -> tuple[int, ...]:
    return s.bitvector


@dataclass(frozen=True)
class SetFamily:
    """A finite family of measurable sets of one space.

    Members are deduplicated and sorted lexicographically on their bit
    vectors, so two families are equal exactly when they have the same
    members. ``sigma_closed`` records that the family is known to be closed
    under unions; it is checked on construction unless ``validate`` is false
    (used internally for families that are closed by construction).
    """

    space: FiniteSpace
    members: tuple[AtomSet, ...] = ()
    sigma_closed: bool = False
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        seen = {}
        for m in self.members:
            if m.space != self.space:
                raise SpaceMismatchError("family member belongs to a different space")
            seen[m.bits] = m
        ordered = tuple(sorted(seen.values(), key=_canonical_key))
        object.__setattr__(self, "members", ordered)
        if self.sigma_closed and validate:
            masks = set(seen)
            for a in masks:
                for b in masks:
                    if a | b not in masks:
                        raise ValueError("family flagged sigma_closed is not closed under unions")

    @classmethod
    def generated(cls, space: FiniteSpace, generators: Iterable[Sequence[str]]) -> SetFamily:
        """Family whose members are the given lists of block labels (not closed)."""
        return cls(space, tuple(space.set(*g) for g in generators))

    @cached_property
    def masks(self) -> frozenset[int]:
        return frozenset(m.bits for m in self.members)

    def __contains__(self, s: AtomSet) -> bool:
        return s.space == self.space and s.bits in self.masks

    def __iter__(self) -> Iterator[AtomSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def union(self) -> AtomSet:
        """Pointwise union of all members."""
        bits = 0
        for m in self.members:
            bits |= m.bits
        return AtomSet(self.space, bits)

    def issubfamily(self, other: SetFamily) -> bool:
        _same_space(self, other)
        return self.masks <= other.masks

    def __repr__(self) -> str:
        tag = "sigma " if self.sigma_closed else ""
        return f"SetFamily({tag}{list(self.members)})"


def _same_space(f: SetFamily, g: SetFamily) -> None:
    if f.space != g.space:
        raise SpaceMismatchError("families belong to different spaces")


def sigma_close(family: SetFamily) -> SetFamily:
    """Close ``family`` under unions of nonempty subcollections.

    Raises :class:`SizeLimitError` when an unclosed family has more than
    :data:`MAX_GENERATORS` distinct members, since the closure can have up to
    ``2**k`` members.
    """
    if family.sigma_closed:
        return family
    if len(family) > MAX_GENERATORS:
        raise SizeLimitError(
            f"sigma-closure of {len(family)} generators exceeds the cap of {MAX_GENERATORS}"
        )
    closure: set[int] = set()
    for g in family.masks:
        closure |= {c | g for c in closure}
        closure.add(g)
    space = family.space
    return SetFamily(
        space, tuple(AtomSet(space, b) for b in closure), sigma_closed=True, validate=False
    )


def family_join(f: SetFamily, g: SetFamily) -> SetFamily:
    """Smallest sigma-closed family containing both ``f`` and ``g``."""
    _same_space(f, g)
    if f.sigma_closed and g.sigma_closed:
        masks = set(f.masks) | g.masks | {a | b for a in f.masks for b in g.masks}
        return SetFamily(
            f.space, tuple(AtomSet(f.space, b) for b in masks), sigma_closed=True, validate=False
        )
    if f.sigma_closed or g.sigma_closed:
        return family_join(sigma_close(f), sigma_close(g))
    return sigma_close(SetFamily(f.space, f.members + g.members))


def family_meet(f: SetFamily, g: SetFamily) -> SetFamily:
    """Members common to ``f`` and ``g``; sigma-closed when both inputs are."""
    _same_space(f, g)
    common = f.masks & g.masks
    return SetFamily(
        f.space,
        tuple(AtomSet(f.space, b) for b in common),
        sigma_closed=f.sigma_closed and g.sigma_closed,
    )
