"""Dual-mode scalars: exact rationals or doubles, never silently mixed.

Every real quantity in this package lives in one of two numeric modes.
Exact mode carries :class:`fractions.Fraction` values; arithmetic is closed
under +, -, *, / with no rounding, which is what makes orbit closure and
kappa-invariance checkable as identities rather than approximations.  Float
mode carries ordinary doubles for the geometry that genuinely needs
radicals (ellipse axes, rotation frames).

Python ints are accepted anywhere and promoted to the mode of their
companions (an int is exactly representable in either carrier).  A Fraction
meeting a float raises :class:`MixedModeError` instead of decaying to
floating point.

Interval endpoints of the component classification are quadratic surds
``a + b*sqrt(r)`` rather than plain rationals; :class:`Surd` carries just
enough exact arithmetic (comparison, rational collapse, float conversion)
to keep the classification decidable without rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"

# Repo-wide float tolerances: surface membership, and identities derived
# from it by bounded algebra (ellipse equations, rotation frames).
TOL_SURFACE = 1e-9
TOL_GEOM = 1e-8


class MixedModeError(TypeError):
    """Exact rationals and floats were combined in one geometric object."""


class NeedsFloatModeError(ValueError):
    """An exact-mode computation hit an irrational quantity."""


def mode_of(value: Scalar) -> str:
    """Numeric mode of a scalar; ints count as exact."""
    if isinstance(value, float):
        return FLOAT
    if isinstance(value, (Fraction, int)):
        return EXACT
    raise TypeError(f"not a scalar: {value!r}")


def unify(*values: Scalar) -> tuple[str, tuple[Scalar, ...]]:
    """Promote ints and return ``(mode, values)``, rejecting mixed modes."""
    mode = None
    for v in values:
        if isinstance(v, float):
            m = FLOAT
        elif isinstance(v, Fraction):
            m = EXACT
        elif isinstance(v, int):
            continue
        else:
            raise TypeError(f"not a scalar: {v!r}")
        if mode is None:
            mode = m
        elif mode != m:
            raise MixedModeError(
                "exact rationals and floats cannot be mixed; convert explicitly"
            )
    if mode is None:
        mode = EXACT
    cast = Fraction if mode == EXACT else float
    return mode, tuple(cast(v) if isinstance(v, int) else v for v in values)


def as_fraction(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (or pass through exact numbers)."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(text.strip())


def sqrt_exact(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        raise ValueError("negative radicand")
    n, d = value.numerator, value.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _sign_binomial(t: Fraction, u: Fraction, r: Fraction) -> int:
    """Exact sign of t + u*sqrt(r) for rational t, u and r >= 0."""
    if u == 0 or r == 0:
        return _sign(t)
    if t == 0:
        return _sign(u)
    st, su = _sign(t), _sign(u)
    if st == su:
        return st
    # Opposite signs: the winner has the larger square.
    d = _sign(t * t - u * u * r)
    return d if st > 0 else -d


def _sign_two_radicals(
    t: Fraction, u: Fraction, r1: Fraction, v: Fraction, r2: Fraction
) -> int:
    """Exact sign of t + u*sqrt(r1) + v*sqrt(r2), all arguments rational."""
    if u == 0 or r1 == 0:
        return _sign_binomial(t, v, r2)
    if v == 0 or r2 == 0:
        return _sign_binomial(t, u, r1)
    u2r, v2r = u * u * r1, v * v * r2
    if u > 0 and v > 0:
        sw = 1
    elif u < 0 and v < 0:
        sw = -1
    else:
        sw = _sign(u2r - v2r) * (1 if u > 0 else -1)
    if t == 0:
        return sw
    if sw == 0:
        return _sign(t)
    st = _sign(t)
    if st == sw:
        return st
    # t and the radical part w disagree; compare t^2 with
    # |w|^2 = u^2 r1 + v^2 r2 + 2uv*sqrt(r1 r2), a single-radical quantity.
    d = _sign_binomial(t * t - u2r - v2r, -2 * u * v, r1 * r2)
    return d if st > 0 else -d


@total_ordering
@dataclass(frozen=True, eq=False)
class Surd:
    """An exact quadratic surd ``a + b*sqrt(r)`` over the rationals.

    Perfect-square radicands collapse into the rational part, so surds
    compare transparently against plain rationals:

    >>> Surd(1, 1, 9) == 4
    True
    >>> Surd(0, 1, 2) < Fraction(3, 2)
    True
    >>> Surd(0, 2, 2) == Surd(0, 1, 8)
    True
    """

    a: Fraction
    b: Fraction
    r: Fraction

    def __init__(self, a, b=0, r=0):
        a, b, r = Fraction(a), Fraction(b), Fraction(r)
        if r < 0:
            raise ValueError("negative radicand")
        if b == 0 or r == 0:
            b, r = Fraction(0), Fraction(0)
        else:
            root = sqrt_exact(r)
            if root is not None:
                a, b, r = a + b * root, Fraction(0), Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "r", r)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise NeedsFloatModeError(f"{self} is irrational")
        return self.a

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(float(self.r))

    def _cmp(self, other) -> int:
        if isinstance(other, (int, Fraction)):
            other = Surd(other)
        elif not isinstance(other, Surd):
            return NotImplemented
        return _sign_two_radicals(
            self.a - other.a, self.b, self.r, -other.b, other.r
        )

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __hash__(self):
        # Rational surds must hash like the rational they equal.
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.r))

    def __repr__(self):
        if self.is_rational:
            return f"Surd({self.a})"
        return f"Surd({self.a} + {self.b}*sqrt({self.r}))"
