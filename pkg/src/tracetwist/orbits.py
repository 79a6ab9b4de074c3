"""Orbit enumeration, period filtrations, and density testing.

The six twist generators act on trace space; an orbit is the closure of a
start point under all of them.  Exact mode certifies finite orbits (set
closure of exact rationals); float mode explores but never certifies.

A twist rotates its own level slice by ``2*acos(level/2)``, so the levels
with period <= n form the filtration {2*cos(pi*p/q) : q <= n}.  Rational
levels are periodic only for the three values 0, +-1 (the only rational
traces with rational rotation number); everything else rational rotates
irrationally and equidistributes, which is what the epsilon-density
machinery measures.
"""

from __future__ import annotations

import math
import random
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction

from .angles import AngleFraction
from .scalars import (
    EXACT,
    MixedModeError,
    NeedsFloatModeError,
    Scalar,
    TOL_GEOM,
    TOL_SURFACE,
    mode_of,
    unify,
)
from .surface import (
    Axis,
    BoundaryTraces,
    TracePoint,
    _require_same_mode,
    level_range,
    level_set,
    surface_sample,
)
from .twists import GENERATORS, TwistGenerator, apply_generator


def box_distance(p1: TracePoint, p2: TracePoint) -> Scalar:
    """Sup metric max(|dx|, |dy|, |dz|) on trace space."""
    if p1.mode != p2.mode:
        raise MixedModeError("box distance requires points in one numeric mode")
    return max(abs(p1.x - p2.x), abs(p1.y - p2.y), abs(p1.z - p2.z))


class _BoxIndex:
    """Grid hash over trace points for neighbor queries in the box metric."""

    def __init__(self, cell: float):
        self.cell = cell
        self.buckets: dict[tuple[int, int, int], list[TracePoint]] = defaultdict(list)

    def _key(self, p: TracePoint) -> tuple[int, int, int]:
        c = self.cell
        return (math.floor(p.x / c), math.floor(p.y / c), math.floor(p.z / c))

    def add(self, p: TracePoint) -> None:
        self.buckets[self._key(p)].append(p)

    def any_within(self, p: TracePoint, eps: float, exclude_self: bool = False) -> bool:
        kx, ky, kz = self._key(p)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for dz in (-1, 0, 1):
                    for q in self.buckets.get((kx + dx, ky + dy, kz + dz), ()):
                        d = max(abs(p.x - q.x), abs(p.y - q.y), abs(p.z - q.z))
                        if d < eps and (d > 0 or not exclude_self):
                            return True
        return False


@dataclass(frozen=True)
class OrbitResult:
    """Points reached by a traversal plus how it ended.

    ``finite`` status is only ever produced by exact-mode traversals whose
    queue drained: the point set is then exactly closed under all six
    generators.  Float traversals report ``truncated`` even when they stop
    growing, since snapped float equality certifies nothing.
    """

    points: frozenset[TracePoint]
    status: str
    budget: int
    words: dict | None = None

    @property
    def cardinality(self) -> int:
        return len(self.points)

    @property
    def is_finite(self) -> bool:
        return self.status == "finite"


def enumerate_orbit(
    B: BoundaryTraces,
    p0: TracePoint,
    budget: int,
    log_words: bool = False,
    snap: float = 1e-9,
) -> OrbitResult:
    """Breadth-first closure of p0 under all six twist generators.

    `budget` bounds the number of points retained.  Exact mode
    deduplicates by exact coordinates; float mode snaps coordinates to a
    grid of size `snap` (keep this far below any epsilon under test).
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    mode = _require_same_mode(B, p0)

    if mode == EXACT:
        def key(pt: TracePoint):
            return pt.as_tuple()
    else:
        def key(pt: TracePoint):
            return (round(pt.x / snap), round(pt.y / snap), round(pt.z / snap))

    visited: dict = {key(p0): p0}
    words: dict | None = {key(p0): ""} if log_words else None
    queue = deque([p0])
    truncated = False
    while queue and not truncated:
        cur = queue.popleft()
        for g in GENERATORS:
            img = apply_generator(B, cur, g)
            k = key(img)
            if k in visited:
                continue
            if len(visited) >= budget:
                truncated = True
                break
            visited[k] = img
            if words is not None:
                words[k] = words[key(cur)] + g.letter
            queue.append(img)
    status = "finite" if (not truncated and mode == EXACT) else "truncated"
    return OrbitResult(
        points=frozenset(visited.values()),
        status=status,
        budget=budget,
        words={pt: words[k] for k, pt in visited.items()} if words is not None else None,
    )


@dataclass(frozen=True)
class FiltrationLevel:
    """Trace levels whose twist has period <= n: {2cos(pi p/q) : q <= n}."""

    n: int
    elements: frozenset[AngleFraction]

    def values(self) -> list[float]:
        return sorted(a.two_cos() for a in self.elements)


def filtration(n: int) -> FiltrationLevel:
    """Level sets of the twist-period function, as exact angle fractions.

    >>> sorted(filtration(2).elements)
    [AngleFraction(1, 2)]
    >>> len(filtration(4).elements)
    5
    """
    if n < 2:
        raise ValueError("filtration starts at n = 2")
    elems = frozenset(
        AngleFraction(p, q)
        for q in range(2, n + 1)
        for p in range(1, q)
        if math.gcd(p, q) == 1
    )
    return FiltrationLevel(n, elems)


def rational_angle_of(
    level: Scalar | AngleFraction, max_q: int = 64
) -> AngleFraction | None:
    """The angle fraction with 2cos(pi p/q) == level, if there is one.

    Exact rational levels are decided by Niven's theorem: inside (-2, 2)
    only 0 and +-1 are traces of rational angles.  A level that is already
    an AngleFraction is returned canonically.  Float levels are matched
    against all q <= max_q within 1e-9, smallest denominator first.
    """
    if isinstance(level, AngleFraction):
        folded = level.trace_canonical()
        if folded.p == 0 or folded.p == folded.q:
            raise ValueError("angle corresponds to a trace of +-2, outside the domain")
        return folded
    _, (level,) = unify(level)
    if not (-2 < level < 2):
        raise ValueError(f"|level| must be < 2, got {level}")
    if mode_of(level) == EXACT:
        return {
            Fraction(0): AngleFraction(1, 2),
            Fraction(1): AngleFraction(1, 3),
            Fraction(-1): AngleFraction(2, 3),
        }.get(level)
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            if abs(level - 2.0 * math.cos(math.pi * p / q)) <= TOL_SURFACE:
                return AngleFraction(p, q)
    return None


def _is_fixed(B: BoundaryTraces, p: TracePoint, g: TwistGenerator) -> bool:
    img = apply_generator(B, p, g)
    if p.mode == EXACT:
        return img == p
    return box_distance(img, p) <= 1e-12


def twist_period(
    B: BoundaryTraces, p: TracePoint, axis: Axis, max_q: int = 64
) -> int | None:
    """Period of the axis twist on a non-fixed point, or None if infinite.

    A level 2cos(pi p/q) rotates its slice by 2*pi*p/q, so the order is q;
    the returned period is re-verified by iterating the twist (exactly in
    exact mode, within 1e-8 box drift in float mode).
    """
    _require_same_mode(B, p)
    g = TwistGenerator(axis, 1)
    if _is_fixed(B, p, g):
        raise ValueError("point is fixed by the axis twist; period is undefined")
    angle = rational_angle_of(p.coord(axis), max_q)
    if angle is None:
        return None
    period = angle.q
    cur = p
    for _ in range(period):
        cur = apply_generator(B, cur, g)
    if p.mode == EXACT:
        if cur != p:
            raise RuntimeError(f"period {period} failed to verify exactly")
    elif box_distance(cur, p) > TOL_GEOM:
        raise RuntimeError(f"period {period} drifted beyond tolerance")
    return period


def epsilon_density_on_level(
    B: BoundaryTraces,
    orbit,
    axis: Axis,
    level: float,
    eps: float,
) -> bool:
    """Is the orbit eps-dense on the ellipse slice at `level`?

    Tested against a deterministic angular reference grid with arc step at
    most eps/4; every grid point must have an orbit point strictly within
    eps (and strictly away from itself) in the box metric.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    geom = level_set(B.to_float(), axis, float(level))
    if not geom.is_ellipse:
        raise ValueError("level set is degenerate; density is undefined")
    a_sum, a_diff = geom.semi_axes()
    speed = (a_sum + a_diff) / 2.0  # bounds the box-metric speed of the parameterization
    n_grid = max(8, math.ceil(8 * math.pi * speed / eps))
    index = _BoxIndex(eps)
    for pt in orbit:
        index.add(pt.to_float())
    for j in range(n_grid):
        gp = geom.point_at_angle(2 * math.pi * j / n_grid)
        if not index.any_within(gp, eps, exclude_self=True):
            return False
    return True


def _circumference_bound(B: BoundaryTraces, samples: int = 512) -> float:
    """Crude uniform bound on the box-metric circumference of any level slice."""
    Bf = B.to_float()
    best = 0.0
    for axis in Axis:
        lo, hi = level_range(Bf, axis)
        for i in range(samples):
            level = lo + (hi - lo) * (i + 0.5) / samples
            geom = level_set(Bf, axis, level)
            if not geom.is_ellipse:
                continue
            best = max(best, sum(geom.semi_axes()))
    return 8.0 * best


def N_of_epsilon(B: BoundaryTraces, eps: float) -> int:
    """Period threshold beyond which every periodic slice orbit is eps-dense.

    Any level 2cos(pi p/q) with q > N places q equally spaced points on
    its slice ellipse, at gaps below the circumference bound over q, hence
    below eps.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    return math.ceil(_circumference_bound(B) / eps) + 1


def minimality_criterion(B: BoundaryTraces) -> bool:
    """Do at least two sigma invariants lie in Q minus the integers?

    The sigma invariants are trapped in (-8, 8), so excluding the integer
    band -8..8 amounts to excluding all integers.  When this holds, every
    orbit on the surface is dense.  Exact mode only: float rationality is
    undecidable.
    """
    if B.mode != EXACT:
        raise NeedsFloatModeError("rationality of sigma invariants needs exact mode")
    return sum(s.denominator != 1 for s in (B.sigma_x, B.sigma_y, B.sigma_z)) >= 2


def exceptional_family(
    a: Scalar, c: Scalar
) -> tuple[BoundaryTraces, frozenset[TracePoint]]:
    """Boundary data (a, a, c, -c) carrying an invariant two-point orbit.

    Requires a^2 + c^2 > 4 and at least one of the two boundary rotation
    numbers acos(./2)/pi irrational (for exact inputs this is Niven's
    theorem: the trace must avoid {0, +-1}).  The returned special orbit
    {(a^2-2, 0, 0), (2-c^2, 0, 0)} is verified closed under all six
    generators before returning.
    """
    mode, (a, c) = unify(a, c)
    for name, v in (("a", a), ("c", c)):
        if not (-2 < v < 2):
            raise ValueError(f"{name} = {v} must lie strictly in (-2, 2)")
    if not (a * a + c * c > 4):
        raise ValueError("need a^2 + c^2 > 4")
    if mode == EXACT:
        def irrational_angle(t):
            return t not in (0, 1, -1)
    else:
        def irrational_angle(t):
            return rational_angle_of(t) is None
    if not (irrational_angle(a) or irrational_angle(c)):
        raise ValueError("need an irrational rotation number on the boundary")
    B = BoundaryTraces(a, a, c, -c)
    orbit = frozenset({TracePoint(a * a - 2, 0, 0), TracePoint(2 - c * c, 0, 0)})
    for pt in orbit:
        for g in GENERATORS:
            img = apply_generator(B, pt, g)
            if mode == EXACT:
                ok = img in orbit
            else:
                ok = any(box_distance(img, q) <= TOL_SURFACE for q in orbit)
            if not ok:
                raise RuntimeError("special orbit failed closure under the twists")
    return B, orbit


@dataclass(frozen=True)
class DensityReport:
    """Coverage of a surface grid by an explored orbit."""

    covered_fraction: float
    truncated: bool
    orbit_size: int
    grid_size: int


def density_scan(
    B: BoundaryTraces,
    p0: TracePoint,
    eps: float,
    budget: int,
    grid: tuple[int, int] = (24, 24),
    seed: int = 0,
) -> DensityReport:
    """Fraction of a surface sample grid within eps of an explored orbit.

    Exploration is float-mode: a deterministic walk alternating blocks of
    the systematic two-twist pattern with seeded pseudo-random generator
    choices, deduplicated on an eps/10 grid.  `budget` counts twist
    applications.  `truncated` reports whether new points were still being
    found in the final tenth of the walk.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if budget <= 0:
        raise ValueError("budget must be positive")
    Bf = B.to_float()
    current = p0.to_float()
    rng = random.Random(seed)
    snap = eps / 10.0

    def key(pt: TracePoint):
        return (round(pt.x / snap), round(pt.y / snap), round(pt.z / snap))

    seen = {key(current)}
    points = [current]
    alternation = (TwistGenerator(Axis.X, 1), TwistGenerator(Axis.Y, 1))
    last_new = 0
    for step in range(budget):
        if (step // 64) % 2 == 0:
            g = alternation[step % 2]
        else:
            g = GENERATORS[rng.randrange(len(GENERATORS))]
        current = apply_generator(Bf, current, g)
        k = key(current)
        if k not in seen:
            seen.add(k)
            points.append(current)
            last_new = step

    m, k_angles = grid
    grid_points = surface_sample(Bf, m, k_angles)
    index = _BoxIndex(eps)
    for pt in points:
        index.add(pt)
    covered = sum(
        1 for gp in grid_points if index.any_within(gp, eps * (1 + 1e-12))
    )
    return DensityReport(
        covered_fraction=covered / len(grid_points) if grid_points else 1.0,
        truncated=last_new >= 0.9 * budget,
        orbit_size=len(points),
        grid_size=len(grid_points),
    )
