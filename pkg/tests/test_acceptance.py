"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report.  Every tolerance is pinned here; nothing is deferred.
"""

import math
import random
import time
from fractions import Fraction

from tracetwist import (
    AngleFraction,
    Axis,
    BoundaryTraces,
    TracePoint,
    TwistGenerator,
    N_of_epsilon,
    apply_generator,
    bounded_search,
    classify,
    conway_jones_list,
    density_scan,
    enumerate_orbit,
    epsilon_density_on_level,
    eval_exact,
    exceptional_family,
    exceptional_representation,
    filtration,
    kappa,
    level_set,
    lift_to_surface,
    rational_angle_of,
    rotation_angle,
    surface_sample,
    to_rotation_frame,
    trace_coordinates,
    twist_period,
)
from tracetwist.twists import GENERATORS
from conftest import rand_boundary, rand_point


def _report(num: int, ok: bool, detail: str, dt: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"{status} criterion {num}: {detail} ({dt:.1f}s)")
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_kappa_invariance_exact():
    t0 = time.perf_counter()
    rng = random.Random(2024)
    checks = 0
    failures = 0
    for _ in range(100):
        B = rand_boundary(rng, max_den=20)
        for _ in range(100):
            p = rand_point(rng, max_den=30)
            value = kappa(B, p)
            for g in GENERATORS:
                if kappa(B, apply_generator(B, p, g)) != value:
                    failures += 1
                checks += 1
    dt = time.perf_counter() - t0
    _report(
        1,
        failures == 0 and checks == 60_000 and dt < 60,
        f"kappa preserved exactly in {checks} generator applications, {failures} failures",
        dt,
    )


def test_criterion_2_explicit_example_reproduction():
    t0 = time.perf_counter()
    rep = exceptional_representation()
    boundary, point = trace_coordinates(rep)
    ok = boundary == BoundaryTraces(1, 1, Fraction(7, 4), Fraction(-7, 4))
    ok = ok and point == TracePoint(-1, 0, 0)
    ok = ok and rep.D.trace() == Fraction(-7, 4)
    ok = ok and kappa(boundary, point) == 0
    result = enumerate_orbit(boundary, point, 10_000)
    expected = frozenset({TracePoint(-1, 0, 0), TracePoint(Fraction(-17, 16), 0, 0)})
    ok = ok and result.is_finite and result.points == expected
    ok = ok and all(
        apply_generator(boundary, p, g) in expected for p in expected for g in GENERATORS
    )
    dt = time.perf_counter() - t0
    _report(2, ok and dt < 1.0, "matrices reproduce the finite two-point orbit exactly", dt)


def test_criterion_3_filtration_and_periods():
    t0 = time.perf_counter()
    expected_sets = {
        2: {(1, 2)},
        3: {(1, 2), (1, 3), (2, 3)},
        4: {(1, 2), (1, 3), (2, 3), (1, 4), (3, 4)},
        5: {(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)},
        6: {(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5), (1, 6), (5, 6)},
    }
    golden = (1 + math.sqrt(5)) / 2
    expected_values = {
        2: [0.0],
        3: [-1.0, 0.0, 1.0],
        4: [-math.sqrt(2), -1.0, 0.0, 1.0, math.sqrt(2)],
        5: sorted([0.0, 1.0, -1.0, math.sqrt(2), -math.sqrt(2),
                   golden, -golden, golden - 1, 1 - golden]),
        6: sorted([0.0, 1.0, -1.0, math.sqrt(2), -math.sqrt(2), golden, -golden,
                   golden - 1, 1 - golden, math.sqrt(3), -math.sqrt(3)]),
    }
    ok = True
    for n, pairs in expected_sets.items():
        level = filtration(n)
        ok = ok and level.elements == {AngleFraction(p, q) for p, q in pairs}
        numeric = level.values()
        ok = ok and len(numeric) == len(expected_values[n])
        ok = ok and all(
            abs(a - b) <= 1e-12 for a, b in zip(numeric, expected_values[n])
        )

    # periods: every level 2cos(pi p/q) with q <= 12, verified by iteration
    B0 = BoundaryTraces(0, 0, 0, 0)
    Bf = B0.to_float()
    tested = 0
    for q in range(2, 13):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            level = 2 * math.cos(math.pi * p / q)
            point = level_set(Bf, Axis.Y, level).point_at_angle(0.35)
            ok = ok and twist_period(Bf, point, Axis.Y, max_q=12) == q
            tested += 1
    # exact verification for the rational levels
    ok = ok and twist_period(B0, TracePoint(1, 1, 1), Axis.X) == 3
    ok = ok and twist_period(B0, TracePoint(0, 0, 2), Axis.Y) == 2
    dt = time.perf_counter() - t0
    _report(3, ok, f"filtration sets n=2..6 exact; {tested} periods verified", dt)


def test_criterion_4_rotation_conjugacy():
    t0 = time.perf_counter()
    su2 = BoundaryTraces(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3))
    sl2r = BoundaryTraces(1, 1, Fraction(7, 4), Fraction(-7, 4))
    points = 0
    worst_radius = 0.0
    worst_angle = 0.0
    for B in (su2.to_float(), sl2r.to_float()):
        for p in surface_sample(B, 24, 22):
            points += 1
            for axis in Axis:
                lev = p.coord(axis)
                if abs(lev) >= 2 or level_set(B, axis, lev).rhs <= 1e-10:
                    continue
                f0 = to_rotation_frame(B, p, axis)
                if f0.radius < 1e-6:
                    continue
                f1 = to_rotation_frame(B, apply_generator(B, p, TwistGenerator(axis)), axis)
                worst_radius = max(worst_radius, abs(f1.radius - f0.radius))
                theta = rotation_angle(lev)
                step = (f1.angle - f0.angle) % (2 * math.pi)
                worst_angle = max(
                    worst_angle,
                    min(abs(step - theta), abs(step - (2 * math.pi - theta))),
                )
    ok = points >= 1000 and worst_radius <= 1e-8 and worst_angle <= 1e-8
    dt = time.perf_counter() - t0
    _report(
        4,
        ok,
        f"{points} surface points: radius drift {worst_radius:.1e}, "
        f"angle error {worst_angle:.1e}",
        dt,
    )


def test_criterion_5_cosine_relation_list_and_search():
    t0 = time.perf_counter()
    ok = all(eval_exact(rel).is_zero() for rel in conway_jones_list())
    found = bounded_search(15, 4, (1, -1))
    ok = ok and len(found) > 0
    ok = ok and all(cls.kind == "family" for _, cls in found)
    families = {cls.family for _, cls in found}
    ok = ok and families == {1, 2, 3, 4, 5, 6, 10}
    t_values = {cls.t for _, cls in found if cls.family == 2}
    ok = ok and t_values == {Fraction(1, 15), Fraction(1, 12), Fraction(1, 9), Fraction(2, 15)}
    dt = time.perf_counter() - t0
    _report(
        5,
        ok and dt < 600,
        f"ten identities exactly zero; search found {len(found)} relations, "
        f"all classified (families {sorted(families)})",
        dt,
    )


def test_criterion_6_density_dichotomy():
    t0 = time.perf_counter()
    B = BoundaryTraces(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3))
    Bf = B.to_float()
    starts = [
        lift_to_surface(Bf, 0.0, 0.5)[0],
        lift_to_surface(Bf, -1.0, 0.25)[0],
        lift_to_surface(Bf, 1.2, -0.3)[1],
    ]
    fractions = []
    ok = True
    for p0 in starts:
        report = density_scan(B, p0, eps=0.1, budget=100_000, seed=0)
        fractions.append(report.covered_fraction)
        ok = ok and report.covered_fraction == 1.0
    # conversely: the exceptional instance never leaves its two points
    family_B, orbit = exceptional_family(Fraction(1), Fraction(7, 4))
    result = enumerate_orbit(family_B, TracePoint(-1, 0, 0), 100_000)
    ok = ok and result.is_finite and result.points == orbit
    report = density_scan(family_B, TracePoint(-1.0, 0.0, 0.0), eps=0.01, budget=100_000)
    ok = ok and report.orbit_size == 2 and not report.truncated
    ok = ok and report.covered_fraction < 0.2
    dt = time.perf_counter() - t0
    _report(
        6,
        ok,
        f"dense instance covered {fractions}; exceptional instance pinned to 2 points",
        dt,
    )


def test_criterion_7_rational_angle_soundness():
    t0 = time.perf_counter()
    ok = True
    tested = 0
    for q in range(1, 51):
        for p in range(-2 * q + 1, 2 * q):
            level = Fraction(p, q)
            angle = rational_angle_of(level)
            expected = {
                Fraction(0): AngleFraction(1, 2),
                Fraction(1): AngleFraction(1, 3),
                Fraction(-1): AngleFraction(2, 3),
            }.get(level)
            ok = ok and angle == expected
            tested += 1
    dt = time.perf_counter() - t0
    _report(7, ok, f"Niven test exact on {tested} rationals with q <= 50", dt)


def _dense_levels_above(B, N: int, count: int):
    """Levels 2cos(pi p/q) with q > N lying inside the attainable x-range."""
    _, S = classify(B)
    lo, hi = float(S[0]), float(S[1])
    margin = 0.02 * (hi - lo)
    out = []
    q = N
    while len(out) < count and q < N + 400:
        q += 1
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            level = 2 * math.cos(math.pi * p / q)
            if lo + margin < level < hi - margin:
                out.append((p, q, level))
                break
    return out


def test_criterion_8_density_threshold_bound():
    t0 = time.perf_counter()
    rng = random.Random(88)
    instances = [
        BoundaryTraces(0, 0, 0, 0),
        BoundaryTraces(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)),
        BoundaryTraces(1, 1, Fraction(7, 4), Fraction(-7, 4)),
    ]
    while len(instances) < 10:
        B = rand_boundary(rng)
        if classify(B)[1] is not None:
            instances.append(B)
    ok = True
    checked = 0
    for B in instances:
        Bf = B.to_float()
        for eps in (0.5, 0.1):
            N = N_of_epsilon(B, eps)
            for p, q, level in _dense_levels_above(B, N, 2):
                point = level_set(Bf, Axis.X, level).point_at_angle(0.3)
                orbit = [point]
                cur = point
                g = TwistGenerator(Axis.X)
                for _ in range(q - 1):
                    cur = apply_generator(Bf, cur, g)
                    orbit.append(cur)
                ok = ok and epsilon_density_on_level(B, orbit, Axis.X, level, eps)
                checked += 1
    ok = ok and checked >= 20
    dt = time.perf_counter() - t0
    _report(8, ok, f"period-q orbits eps-dense in {checked} (instance, eps, q) cases", dt)
