"""Exact complex rationals ``re + i*im`` for object-dtype numpy arrays.

Instances support the arithmetic numpy needs for ``@``, ``sum`` and
``np.conj`` on object arrays, so exact and floating-point matrices can share
one code path.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> GaussianRational:
        """Convert ints, Fractions, ``"p/q"`` strings and ``(re, im)`` pairs."""
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, bool):
            raise TypeError("booleans are not matrix entries")
        if isinstance(x, (int, Rational)):
            return GaussianRational(x)
        if isinstance(x, str):
            return GaussianRational(Fraction(x.strip()))
        if isinstance(x, (tuple, list)) and len(x) == 2:
            if any(isinstance(c, (float, bool)) for c in x):
                raise TypeError("floating-point parts are not exact")
            re, im = (Fraction(c.strip()) if isinstance(c, str) else Fraction(c) for c in x)
            return GaussianRational(re, im)
        raise TypeError(f"not an exact complex rational: {x!r}")

    def _other(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        den = o.abs2()
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return float(self.abs2()) ** 0.5

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


def exact_matrix(rows) -> np.ndarray:
    """Square object array of :class:`GaussianRational` from nested exact entries.

    Each entry may itself be an ``(re, im)`` pair, so rows are read one level
    at a time rather than through ``np.array``.
    """
    m = len(rows)
    out = np.empty((m, m), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != m:
            raise ValueError(f"row {i} has {len(row)} entries, expected {m}")
        for j, entry in enumerate(row):
            out[i, j] = GaussianRational.coerce(entry)
    return out


def exact_vector(entries) -> np.ndarray:
    out = np.empty(len(entries), dtype=object)
    for i, entry in enumerate(entries):
        out[i] = GaussianRational.coerce(entry)
    return out
