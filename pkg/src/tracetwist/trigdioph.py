"""Exact rational relations among cosines of rational multiples of pi.

The substrate is arithmetic in cyclotomic fields: cos(pi*p/q) equals
(z^k + z^-k)/2 for a root of unity z, so a rational linear combination of
such cosines is an element of Q(z_L) with L the least common conductor,
and it is rational precisely when its non-constant power-basis
coordinates vanish.  No tolerances are involved anywhere.

On top of that sit the classical facts this package consumes: the finite
list of minimal rational cosine relations with at most four angles in
(0, pi/2) (a one-term identity, a one-parameter three-term family, and
eight sporadic relations, all with right side 1/2 up to scaling), plus a
bounded exhaustive search that rediscovers and classifies them, and the
four-cosine equation that a finite twist orbit must satisfy with
(ab+cd)/2 on the right side.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .angles import AngleFraction
from .scalars import EXACT
from .surface import BoundaryTraces

CONDUCTOR_LIMIT = 10_000


class ConductorLimitError(ValueError):
    """The least common conductor exceeds the desk-scale guard."""


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Synthetic division by a monic integer polynomial; remainder must vanish.
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    assert not any(num), "division left a remainder"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant first.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def _phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce(conductor: int, dense: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient vector modulo the cyclotomic polynomial."""
    phi = cyclotomic_poly(conductor)
    m = len(phi) - 1
    vec = list(dense) + [Fraction(0)] * max(0, m - len(dense))
    for e in range(len(vec) - 1, m - 1, -1):
        c = vec[e]
        if c:
            vec[e] = Fraction(0)
            for j in range(m):
                if phi[j]:
                    vec[e - m + j] -= c * phi[j]
    return tuple(vec[:m])


@dataclass(frozen=True)
class CycloElement:
    """An element of the cyclotomic field of the given conductor.

    Coordinates are exact rationals over the power basis 1, z, ...,
    z^(phi-1) with z = exp(2*pi*i/conductor); the element is rational iff
    every non-constant coordinate is zero.
    """

    conductor: int
    coords: tuple[Fraction, ...]

    @classmethod
    def zero(cls, conductor: int) -> "CycloElement":
        return cls(conductor, (Fraction(0),) * _phi(conductor))

    @classmethod
    def from_rational(cls, conductor: int, value) -> "CycloElement":
        coords = [Fraction(value)] + [Fraction(0)] * (_phi(conductor) - 1)
        return cls(conductor, tuple(coords))

    @classmethod
    def root_power(cls, conductor: int, k: int) -> "CycloElement":
        """The root of unity z^k."""
        k %= conductor
        dense = [Fraction(0)] * (k + 1)
        dense[k] = Fraction(1)
        return cls(conductor, _reduce(conductor, dense))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction | None:
        return self.coords[0] if self.is_rational() else None

    def __add__(self, other: "CycloElement") -> "CycloElement":
        a, b = _common(self, other)
        return CycloElement(a.conductor, tuple(x + y for x, y in zip(a.coords, b.coords)))

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        a, b = _common(self, other)
        return CycloElement(a.conductor, tuple(x - y for x, y in zip(a.coords, b.coords)))

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.conductor, tuple(-x for x in self.coords))

    def scale(self, factor) -> "CycloElement":
        factor = Fraction(factor)
        return CycloElement(self.conductor, tuple(factor * x for x in self.coords))

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        a, b = _common(self, other)
        n = len(a.coords)
        dense = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        dense[i + j] += x * y
        return CycloElement(a.conductor, _reduce(a.conductor, dense))

    def promote(self, conductor: int) -> "CycloElement":
        """Embed into the field of a larger conductor (a multiple of ours)."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError("can only promote to a multiple of the conductor")
        step = conductor // self.conductor
        dense = [Fraction(0)] * ((len(self.coords) - 1) * step + 1)
        for j, x in enumerate(self.coords):
            dense[j * step] = x
        return CycloElement(conductor, _reduce(conductor, dense))

    def numeric(self, dps: int = 50):
        """High-precision numeric value (mpmath real part)."""
        with mpmath.workdps(dps):
            z = mpmath.e ** (2j * mpmath.pi / self.conductor)
            total = mpmath.mpc(0)
            for j, x in enumerate(self.coords):
                if x:
                    total += mpmath.mpf(x.numerator) / x.denominator * z**j
            return total.real


def _common(a: CycloElement, b: CycloElement) -> tuple[CycloElement, CycloElement]:
    L = math.lcm(a.conductor, b.conductor)
    _guard_conductor(L)
    return a.promote(L), b.promote(L)


def _guard_conductor(L: int) -> None:
    if L > CONDUCTOR_LIMIT:
        raise ConductorLimitError(f"conductor {L} exceeds guard {CONDUCTOR_LIMIT}")


def cos_pi(angle: AngleFraction, conductor: int | None = None) -> CycloElement:
    """cos(pi*p/q) as an exact cyclotomic element.

    >>> cos_pi(AngleFraction(1, 3)).rational_value()
    Fraction(1, 2)
    """
    L = 2 * angle.q if conductor is None else conductor
    _guard_conductor(L)
    if L % (2 * angle.q):
        raise ValueError("conductor must be a multiple of twice the denominator")
    k = angle.p * (L // (2 * angle.q))
    half = CycloElement.root_power(L, k) + CycloElement.root_power(L, -k)
    return half.scale(Fraction(1, 2))


@dataclass(frozen=True)
class CJTerm:
    """One term coeff * cos(angle) of a cosine relation."""

    coeff: Fraction
    angle: AngleFraction

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            raise ValueError("zero coefficients are not terms")


@dataclass(frozen=True)
class CJRelation:
    """A formal relation sum_i coeff_i * cos(angle_i) = rhs."""

    terms: tuple[CJTerm, ...]
    rhs: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    @classmethod
    def make(cls, triples, rhs=0) -> "CJRelation":
        """Build from (coeff, p, q) triples."""
        return cls(
            tuple(CJTerm(Fraction(c), AngleFraction(p, q)) for c, p, q in triples),
            Fraction(rhs),
        )

    def conductor(self) -> int:
        L = 1
        for t in self.terms:
            L = math.lcm(L, 2 * t.angle.q)
        return L

    def describe(self) -> str:
        if not self.terms:
            return f"0 = {self.rhs}"
        parts = []
        for t in self.terms:
            sign = "+" if t.coeff > 0 else "-"
            mag = abs(t.coeff)
            coeff = "" if mag == 1 else f"{mag}*"
            num = "" if t.angle.p == 1 else str(t.angle.p)
            parts.append(f"{sign} {coeff}cos({num}pi/{t.angle.q})")
        lhs = " ".join(parts).lstrip("+ ")
        return f"{lhs} = {self.rhs}"


def normalize(rel: CJRelation) -> CJRelation:
    """Fold all angles into [0, pi/2], merging terms and absorbing constants.

    Uses cos(pi - t) = cos(pi + t) to reach [0, pi] and
    cos(pi/2 + t) = -cos(pi/2 - t) to reach [0, pi/2]; angles 0 and pi/2
    then leave the relation as constants or vanish, so the result has all
    angles strictly inside (0, pi/2) and the same exact value.
    """
    rhs = rel.rhs
    merged: dict[AngleFraction, Fraction] = {}
    for term in rel.terms:
        t = term.angle.fraction
        coeff = term.coeff
        if t > 1:
            t = 2 - t
        if t > Fraction(1, 2):
            t = 1 - t
            coeff = -coeff
        if t == 0:
            rhs -= coeff
            continue
        if t == Fraction(1, 2):
            continue
        key = AngleFraction.from_fraction(t)
        merged[key] = merged.get(key, Fraction(0)) + coeff
    terms = tuple(
        CJTerm(c, a) for a, c in sorted(merged.items(), key=lambda kv: kv[0].fraction) if c
    )
    return CJRelation(terms, rhs)


def eval_exact(rel: CJRelation) -> CycloElement:
    """Exact value of (sum of terms) - rhs in the least common cyclotomic field."""
    L = rel.conductor()
    _guard_conductor(L)
    total = CycloElement.from_rational(L, -rel.rhs)
    for t in rel.terms:
        total = total + cos_pi(t.angle, L).scale(t.coeff)
    return total


def is_rational_relation(rel: CJRelation) -> Fraction | None:
    """The exact rational value of the term sum, or None if irrational."""
    value = eval_exact(CJRelation(rel.terms, Fraction(0)))
    return value.rational_value()


# The minimal rational relations with at most four distinct angles strictly
# between 0 and pi/2.  Family 2 is the one-parameter family
# cos(t + pi/3) + cos(pi/3 - t) - cos(t) = 0 for 0 < t < pi/6, detected
# structurally; the rest are fixed, stored with angles ascending.
_FIXED_FAMILIES: dict[int, CJRelation] = {
    1: CJRelation.make([(1, 1, 3)], Fraction(1, 2)),
    3: CJRelation.make([(1, 1, 5), (-1, 2, 5)], Fraction(1, 2)),
    4: CJRelation.make([(1, 1, 7), (-1, 2, 7), (1, 3, 7)], Fraction(1, 2)),
    5: CJRelation.make([(-1, 1, 15), (1, 1, 5), (1, 4, 15)], Fraction(1, 2)),
    6: CJRelation.make([(1, 2, 15), (-1, 2, 5), (-1, 7, 15)], Fraction(1, 2)),
    7: CJRelation.make([(-1, 1, 21), (1, 1, 7), (1, 8, 21), (1, 3, 7)], Fraction(1, 2)),
    8: CJRelation.make([(1, 2, 21), (1, 1, 7), (-1, 5, 21), (-1, 2, 7)], Fraction(1, 2)),
    9: CJRelation.make([(1, 4, 21), (-1, 2, 7), (1, 3, 7), (1, 10, 21)], Fraction(1, 2)),
    10: CJRelation.make([(-1, 1, 15), (1, 2, 15), (1, 4, 15), (-1, 7, 15)], Fraction(1, 2)),
}


def t_family_instance(t: Fraction) -> CJRelation:
    """The three-term family member at parameter angle pi*t, 0 < t < 1/6."""
    t = Fraction(t)
    if not (0 < t < Fraction(1, 6)):
        raise ValueError("parameter must satisfy 0 < t < 1/6")
    third = Fraction(1, 3)
    return CJRelation(
        (
            CJTerm(Fraction(-1), AngleFraction.from_fraction(t)),
            CJTerm(Fraction(1), AngleFraction.from_fraction(third - t)),
            CJTerm(Fraction(1), AngleFraction.from_fraction(third + t)),
        ),
        Fraction(0),
    )


@dataclass(frozen=True)
class Classification:
    """Outcome of matching a relation against the known minimal families."""

    kind: str  # "family" | "reducible" | "empty" | "unclassified"
    family: int | None = None
    scale: Fraction | None = None
    t: Fraction | None = None


def _has_rational_proper_subset(terms: tuple[CJTerm, ...]) -> bool:
    for size in range(1, len(terms)):
        for subset in itertools.combinations(terms, size):
            if is_rational_relation(CJRelation(subset, Fraction(0))) is not None:
                return True
    return False


def match_family(rel: CJRelation) -> Classification:
    """Identify which minimal family a rationally valued relation scales to.

    The relation is normalized first; a relation with a rational proper
    sub-combination is reported as reducible rather than matched.
    Raises ValueError if the relation is not rationally valued.
    """
    nrel = normalize(rel)
    value = is_rational_relation(nrel)
    if value is None:
        raise ValueError("relation is not rationally valued")
    terms = nrel.terms
    if not terms:
        return Classification("empty")
    if len(terms) > 1 and _has_rational_proper_subset(terms):
        return Classification("reducible")
    angles = tuple(t.angle for t in terms)
    for index, fam in _FIXED_FAMILIES.items():
        if angles != tuple(t.angle for t in fam.terms):
            continue
        scale = terms[0].coeff / fam.terms[0].coeff
        if all(t.coeff == scale * f.coeff for t, f in zip(terms, fam.terms)):
            if value == scale * fam.rhs:
                return Classification("family", family=index, scale=scale)
    if len(terms) == 3 and value == 0:
        t1, t2, t3 = (t.angle.fraction for t in terms)
        c1, c2, c3 = (t.coeff for t in terms)
        if (
            t2 + t3 == Fraction(2, 3)
            and t3 - t2 == 2 * t1
            and 0 < t1 < Fraction(1, 6)
            and c2 == c3 == -c1
        ):
            return Classification("family", family=2, scale=c2, t=t1)
    return Classification("unclassified")


def conway_jones_list(t: Fraction = Fraction(1, 12)) -> list[CJRelation]:
    """All ten minimal relations, with the parameterized family sampled at t."""
    out = []
    for index in range(1, 11):
        out.append(t_family_instance(t) if index == 2 else _FIXED_FAMILIES[index])
    return out


def _search_angles(max_q: int) -> list[AngleFraction]:
    half = Fraction(1, 2)
    angles = [
        AngleFraction(p, q)
        for q in range(3, max_q + 1)
        for p in range(1, q)
        if math.gcd(p, q) == 1 and Fraction(p, q) < half
    ]
    return sorted(angles)


def _nearest_rational(x: float, max_den: int) -> Fraction:
    return Fraction(x).limit_denominator(max_den)


def bounded_search(
    max_q: int,
    max_terms: int = 4,
    coeff_set: tuple = (1, -1, Fraction(1, 2), Fraction(-1, 2), 2, -2),
) -> list[tuple[CJRelation, Classification]]:
    """All minimal rational relations with distinct angles pi*p/q in (0, pi/2).

    Candidates are screened by double-precision evaluation against nearby
    small rationals, re-screened at 50 significant digits, and only then
    confirmed in exact cyclotomic arithmetic; minimality (no rational
    proper sub-combination) is decided exactly.  Proportional duplicates
    keep their first-enumerated representative.
    """
    if max_q > 30:
        raise ValueError("search is desk-scale only: max_q <= 30")
    if not (1 <= max_terms <= 4):
        raise ValueError("max_terms must be between 1 and 4")
    coeffs = tuple(Fraction(c) for c in coeff_set)
    if any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero")
    angles = _search_angles(max_q)
    n = len(angles)
    total = sum(
        math.comb(n, k) * len(coeffs) ** k for k in range(1, max_terms + 1)
    )
    if total > 20_000_000:
        raise ValueError(f"search space of {total} combinations exceeds desk scale")
    cos_values = [a.cos() for a in angles]
    max_den = 4 * max(c.denominator for c in coeffs) ** max_terms

    results: list[tuple[CJRelation, Classification]] = []
    seen_keys: set = set()
    for k in range(1, max_terms + 1):
        for combo in itertools.combinations(range(n), k):
            base = [cos_values[i] for i in combo]
            for assignment in itertools.product(coeffs, repeat=k):
                s = sum(float(c) * v for c, v in zip(assignment, base))
                cand = _nearest_rational(s, max_den)
                if abs(s - float(cand)) > 1e-9:
                    continue
                rel = CJRelation(
                    tuple(CJTerm(c, angles[i]) for c, i in zip(assignment, combo)),
                    Fraction(0),
                )
                if not _confirm_rational(rel):
                    continue
                value = is_rational_relation(rel)
                if value is None or _has_rational_proper_subset(rel.terms):
                    continue
                found = CJRelation(rel.terms, value)
                lead = found.terms[0].coeff
                key = (
                    tuple((t.angle, t.coeff / lead) for t in found.terms),
                    value / lead,
                )
                if key in seen_keys:
                    continue
                seen_keys.add(key)
                results.append((found, match_family(found)))
    return results


def _confirm_rational(rel: CJRelation, dps: int = 60) -> bool:
    # 50+ digit screen: a genuinely rational combination has residual ~0
    # here, while float-level coincidences die, keeping the exact stage
    # (and its conductor guard) off the hot path.
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for t in rel.terms:
            total += (
                mpmath.mpf(t.coeff.numerator)
                / t.coeff.denominator
                * mpmath.cos(mpmath.pi * t.angle.p / t.angle.q)
            )
        nearest = _nearest_rational(float(total), 10_000)
        diff = abs(total - mpmath.mpf(nearest.numerator) / nearest.denominator)
        return diff < mpmath.mpf(10) ** -40


def eqcos_residual(
    B: BoundaryTraces,
    thetas: tuple[AngleFraction, AngleFraction, AngleFraction, AngleFraction],
) -> Fraction | CycloElement:
    """Exact residual of the finite-orbit cosine equation.

    For angle data (theta_x, theta_y, theta_z, theta_xy) the equation reads

        cos(theta_xy) + cos(theta_z + theta_y) + cos(theta_z - theta_y)
            + cos(theta_x)  =  sigma_x / 2,

    and this returns the left side minus the right side: a Fraction when
    the value is rational (so zero means the equation holds), otherwise
    the cyclotomic element itself.  When the residual vanishes the
    underlying trace identity 2cos(theta_xy) = sigma_x
    - 2cos(theta_y)*2cos(theta_z) - 2cos(theta_x) is re-checked exactly.
    """
    if B.mode != EXACT:
        raise ValueError("sigma_x must be exactly rational; use exact-mode boundary traces")
    theta_x, theta_y, theta_z, theta_xy = thetas
    rel = CJRelation(
        (
            CJTerm(Fraction(1), theta_xy),
            CJTerm(Fraction(1), theta_z + theta_y),
            CJTerm(Fraction(1), theta_z - theta_y),
            CJTerm(Fraction(1), theta_x),
        ),
        B.sigma_x / 2,
    )
    value = eval_exact(rel)
    if value.is_zero():
        L = rel.conductor()
        lhs = cos_pi(theta_xy, L).scale(2)
        two = Fraction(2)
        rhs = (
            CycloElement.from_rational(L, B.sigma_x)
            - cos_pi(theta_y, L).scale(two) * cos_pi(theta_z, L).scale(two)
            - cos_pi(theta_x, L).scale(two)
        )
        if not (lhs - rhs).is_zero():
            raise RuntimeError("trace identity cross-check failed")
    rational = value.rational_value()
    return rational if rational is not None else value
