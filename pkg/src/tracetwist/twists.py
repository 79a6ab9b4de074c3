"""Dehn-twist generators acting on trace coordinates.

Each twist fixes one coordinate and rewrites the other two by a pair of
Vieta substitutions.  The surface polynomial is a monic quadratic in every
single coordinate, so replacing that coordinate by (sum of roots) - itself
preserves kappa identically, on and off the surface; a twist is two such
replacements in a fixed order.  In local coordinates the forward twist
about the x-axis is::

    z -> sigma_z - x*y - z        (first step)
    y -> sigma_y - x*z_new - y    (second step)

and its inverse performs the same two substitutions in the opposite order.
The y- and z-twists are the cyclic analogues.

On a slice of its own axis a twist is conjugate to a rotation by
``2*acos(level/2)``; :func:`to_rotation_frame` realizes the conjugating
coordinates explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import FLOAT, NeedsFloatModeError, Scalar, unify
from .surface import (
    Axis,
    BoundaryTraces,
    TracePoint,
    _require_same_mode,
    level_set,
)


@dataclass(frozen=True)
class TwistGenerator:
    """One twist generator: an axis and a power of +1 or -1."""

    axis: Axis
    power: int = 1

    def __post_init__(self):
        if self.power not in (1, -1):
            raise ValueError("power must be +1 or -1")

    def inverse(self) -> "TwistGenerator":
        return TwistGenerator(self.axis, -self.power)

    @property
    def letter(self) -> str:
        """Single-letter form: uppercase for the twist, lowercase for its inverse."""
        ch = self.axis.value
        return ch.upper() if self.power == 1 else ch

    @classmethod
    def from_letter(cls, ch: str) -> "TwistGenerator":
        if ch.lower() not in ("x", "y", "z"):
            raise ValueError(f"unknown generator letter {ch!r}")
        return cls(Axis(ch.lower()), 1 if ch.isupper() else -1)


GENERATORS = tuple(
    TwistGenerator(axis, power) for axis in (Axis.X, Axis.Y, Axis.Z) for power in (1, -1)
)


@dataclass(frozen=True)
class TwistWord:
    """A finite word in the six generators, applied left to right."""

    letters: tuple[TwistGenerator, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "TwistWord":
        """Parse words like ``"XYz"`` (lowercase letters are inverses)."""
        return cls(tuple(TwistGenerator.from_letter(ch) for ch in text.strip()))

    def __str__(self) -> str:
        return "".join(g.letter for g in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple(g.inverse() for g in reversed(self.letters)))

    def free_reduce(self) -> "TwistWord":
        """Cancel adjacent inverse pairs (offered, never forced)."""
        out: list[TwistGenerator] = []
        for g in self.letters:
            if out and out[-1].axis is g.axis and out[-1].power == -g.power:
                out.pop()
            else:
                out.append(g)
        return TwistWord(tuple(out))


def vieta_involution(B: BoundaryTraces, p: TracePoint, variable: Axis) -> TracePoint:
    """Replace one coordinate by the other root of kappa as a quadratic in it."""
    _require_same_mode(B, p)
    x, y, z = p.x, p.y, p.z
    if variable is Axis.X:
        return TracePoint(B.sigma_x - y * z - x, y, z)
    if variable is Axis.Y:
        return TracePoint(x, B.sigma_y - x * z - y, z)
    return TracePoint(x, y, B.sigma_z - x * y - z)


def apply_generator(B: BoundaryTraces, p: TracePoint, g: TwistGenerator) -> TracePoint:
    """Act by one twist generator; the generator's own coordinate is fixed."""
    _require_same_mode(B, p)
    x, y, z = p.x, p.y, p.z
    if g.axis is Axis.X:
        if g.power == 1:
            z = B.sigma_z - x * y - z
            y = B.sigma_y - x * z - y
        else:
            y = B.sigma_y - x * z - y
            z = B.sigma_z - x * y - z
    elif g.axis is Axis.Y:
        if g.power == 1:
            x = B.sigma_x - y * z - x
            z = B.sigma_z - y * x - z
        else:
            z = B.sigma_z - y * x - z
            x = B.sigma_x - y * z - x
    else:
        if g.power == 1:
            y = B.sigma_y - z * x - y
            x = B.sigma_x - z * y - x
        else:
            x = B.sigma_x - z * y - x
            y = B.sigma_y - z * x - y
    return TracePoint(x, y, z)


def apply_word(B: BoundaryTraces, p: TracePoint, w: TwistWord) -> TracePoint:
    """Fold :func:`apply_generator` over a word; the empty word is the identity."""
    for g in w.letters:
        p = apply_generator(B, p, g)
    return p


def rotation_angle(level: Scalar) -> float:
    """Rotation angle 2*acos(level/2) of a twist on its own level slice."""
    _, (level,) = unify(level)
    if not (-2 < level < 2):
        raise ValueError(f"|level| must be < 2, got {level}")
    return 2.0 * math.acos(float(level) / 2.0)


@dataclass(frozen=True)
class RotationFrame:
    """Rectified slice coordinates in which the axis twist is a rotation.

    ``u, v`` are the weighted, recentered sum/difference coordinates;
    ``radius**2`` equals the slice's rhs for points on the surface, and the
    angle advances by a fixed +-rotation_angle(level) under the twist.
    """

    axis: Axis
    level: float
    u: float
    v: float
    radius: float
    angle: float


def to_rotation_frame(B: BoundaryTraces, p: TracePoint, axis: Axis) -> RotationFrame:
    """Polar coordinates of p within its own axis slice (float mode).

    A point on a single-point slice (rhs == 0) is a fixed point of the
    twist and comes back with radius zero; an empty slice is an error.
    """
    if B.mode != FLOAT or p.mode != FLOAT:
        raise NeedsFloatModeError("rotation frames are float-mode geometry")
    level = p.coord(axis)
    geom = level_set(B, axis, level)
    if geom.is_empty:
        raise ValueError(f"empty level set at {axis.value} = {level}")
    m1, m2 = p.moving_coords(axis)
    u = math.sqrt(geom.weight_sum) * ((m1 + m2) - geom.center_sum)
    v = math.sqrt(geom.weight_diff) * ((m1 - m2) - geom.center_diff)
    radius = math.hypot(u, v)
    angle = math.atan2(v, u) % (2 * math.pi) if radius > 0 else 0.0
    return RotationFrame(axis=axis, level=level, u=u, v=v, radius=radius, angle=angle)
