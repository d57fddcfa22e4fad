"""Sectors of a point, the geodesic criterion, and geodesic counts in R^n_inf.

A sector ``(i, e)`` at ``p`` is the set of ``q`` whose d_inf distance from
``p`` is realised, with sign ``e``, by the ``i``-th coordinate. A polyline
is a geodesic exactly when some sector containing its far endpoint also
contains every later vertex as seen from every earlier one; because
sectors are transitive, checking consecutive vertex pairs is enough.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from .metric_core import (
    DimensionError,
    Point,
    Polyline,
    chebyshev_distance,
    segment,
    to_scalar,
)

__all__ = [
    "Sector",
    "SectorSignature",
    "GeodesicCount",
    "GeodesicVerdict",
    "SphereSpec",
    "CLASSICAL_DIMENSIONS",
    "in_sector",
    "sector_signature",
    "is_diagonal",
    "is_cubic_diagonal",
    "check_geodesic",
    "is_geodesic_polyline",
    "tau",
    "tau_is_derived",
    "witness_two_geodesics",
    "unique_geodesic_points",
    "nu_ambient",
]

# tau/nu for n >= 4 follow the same all-|delta|-equal rule but are an
# extension; callers surface that through tau_is_derived().
CLASSICAL_DIMENSIONS = (2, 3)

_SIGN_TEXT = {1: "+", -1: "-"}
_SIGN_VALUE = {"+": 1, "-": -1}


@dataclass(frozen=True, order=True)
class Sector:
    """Sector ``S_axis^sign``; ``axis`` is 1-based, ``sign`` is +1 or -1."""

    axis: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sector sign must be +1 or -1, got {self.sign!r}")
        if self.axis < 1:
            raise ValueError(f"sector axis is 1-based, got {self.axis}")

    def check_dim(self, n: int) -> None:
        if self.axis > n:
            raise DimensionError(f"sector axis {self.axis} out of range for n={n}")

    def __str__(self) -> str:
        return f"S_{self.axis}^{_SIGN_TEXT[self.sign]}"

    def to_json(self) -> dict:
        return {"axis": self.axis, "sign": _SIGN_TEXT[self.sign]}

    @classmethod
    def from_json(cls, data: dict) -> "Sector":
        return cls(int(data["axis"]), _SIGN_VALUE[data["sign"]])

    @classmethod
    def all(cls, n: int) -> Tuple["Sector", ...]:
        return tuple(cls(i, s) for i in range(1, n + 1) for s in (1, -1))


SectorSignature = FrozenSet[Sector]


class GeodesicCount(enum.Enum):
    """Number of geodesics joining two points; only 1 or infinitely many occur."""

    ONE = "one"
    INFINITE = "infinite"

    def to_json(self) -> str:
        return self.value


@dataclass(frozen=True)
class SphereSpec:
    center: Point
    radius: Fraction

    def __post_init__(self):
        r = to_scalar(self.radius)
        if r <= 0:
            raise ValueError("sphere radius must be positive")
        object.__setattr__(self, "radius", r)


def in_sector(p: Point, q: Point, s: Sector) -> bool:
    """True iff ``q`` lies in the sector ``s`` at ``p``."""
    s.check_dim(p.dim)
    i = s.axis - 1
    return chebyshev_distance(p, q) == s.sign * (q[i] - p[i])


def sector_signature(p: Point, q: Point) -> SectorSignature:
    """All sectors at ``p`` containing ``q`` (every sector when ``q == p``)."""
    d = chebyshev_distance(p, q)
    if d == 0:
        return frozenset(Sector.all(p.dim))
    out = set()
    for i, (a, b) in enumerate(zip(p, q), start=1):
        if b - a == d:
            out.add(Sector(i, 1))
        elif a - b == d:
            out.add(Sector(i, -1))
    return frozenset(out)


def _distinct_pair(p: Point, q: Point, n: int) -> None:
    p._check(q)
    if p.dim != n:
        raise DimensionError(f"expected dimension {n}, got {p.dim}")
    if p == q:
        raise ValueError("points must be distinct")


def _all_gaps_equal(p: Point, q: Point) -> bool:
    gaps = {abs(b - a) for a, b in zip(p, q)}
    return len(gaps) == 1


def is_diagonal(p: Point, q: Point) -> bool:
    """Diagonal position in R^2: ``q - p`` is a multiple of (1, 1) or (1, -1)."""
    _distinct_pair(p, q, 2)
    return _all_gaps_equal(p, q)


def is_cubic_diagonal(p: Point, q: Point) -> bool:
    """Cubic diagonal position in R^3: ``|dx| == |dy| == |dz|``."""
    _distinct_pair(p, q, 3)
    return _all_gaps_equal(p, q)


@dataclass(frozen=True)
class GeodesicVerdict:
    """Outcome of :func:`check_geodesic`.

    ``sector`` is the witnessing sector when the path is a geodesic.
    Otherwise ``violation`` holds the first consecutive vertex pair that
    leaves the lowest candidate sector of the endpoints.
    """

    is_geodesic: bool
    sector: Optional[Sector]
    violation: Optional[Tuple[Point, Point]]
    length: Fraction
    endpoint_distance: Fraction


def check_geodesic(path: Polyline) -> GeodesicVerdict:
    edges = list(path.edges())
    dists = [chebyshev_distance(u, v) for u, v in edges]
    length = sum(dists, Fraction(0))
    dist = chebyshev_distance(path.start, path.end)
    candidates = sorted(sector_signature(path.start, path.end))
    first_violation = None
    for s in candidates:
        i = s.axis - 1
        bad = next(
            ((u, v) for (u, v), d in zip(edges, dists) if d != s.sign * (v[i] - u[i])),
            None,
        )
        if bad is None:
            return GeodesicVerdict(True, s, None, length, dist)
        if first_violation is None:
            first_violation = bad
    return GeodesicVerdict(False, None, first_violation, length, dist)


def is_geodesic_polyline(path: Polyline) -> bool:
    return check_geodesic(path).is_geodesic


def tau_is_derived(n: int) -> bool:
    """Whether the tau/nu rule in dimension ``n`` is an extension beyond n = 2, 3."""
    return n not in CLASSICAL_DIMENSIONS


def tau(p: Point, q: Point) -> GeodesicCount:
    """Geodesic count between ``p`` and ``q``.

    One exactly when every coordinate gap has the same absolute value
    (diagonal / cubic diagonal position); ``tau(p, p)`` is taken as One.
    """
    p._check(q)
    if p == q or _all_gaps_equal(p, q):
        return GeodesicCount.ONE
    return GeodesicCount.INFINITE


def witness_two_geodesics(p: Point, q: Point) -> Tuple[Polyline, Polyline]:
    """Two distinct geodesics from ``p`` to ``q`` (requires tau == Infinite).

    The second one bends through the midpoint pushed along the first axis
    whose gap is shorter than the distance.
    """
    if tau(p, q) is GeodesicCount.ONE:
        raise ValueError("points are joined by a unique geodesic")
    delta = q - p
    dist = chebyshev_distance(p, q)
    j = next(k for k, g in enumerate(delta) if abs(g) < dist)
    mid = [a + g / 2 for a, g in zip(p, delta)]
    mid[j] += (dist - abs(delta[j])) / 2
    return segment(p, q), Polyline([p, Point(mid), q])


def unique_geodesic_points(sphere: SphereSpec) -> list:
    """The 2^n cube corners ``center + r(+-1, ..., +-1)``."""
    c, r = sphere.center, sphere.radius
    return [
        Point(x + s * r for x, s in zip(c, signs))
        for signs in itertools.product((1, -1), repeat=c.dim)
    ]


def nu_ambient(n: int) -> int:
    if n < 2:
        raise DimensionError("nu is defined here for n >= 2")
    return 2**n
