"""Planes of R^3 under the maximum metric.

The unit disc of a plane through the origin is the plane's slice of the
cube ``[-r, r]^3``: a tetragon when the plane is isometric to R^2_inf and a
hexagon when ``|a|, |b|, |c|`` are the sides of a non-degenerate triangle.
Everything here is exact; sections are assembled face by face and ordered
by walking shared faces, never by angle.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .metric_core import Point, chebyshev_distance, scalar_to_json, to_scalar
from .sectors import GeodesicCount

__all__ = [
    "Plane",
    "Shape",
    "SectionPolygon",
    "FlatChart",
    "translate_to_origin",
    "triangle_test",
    "cross_section",
    "section_edge_lengths",
    "flat_isometry_to_R2",
    "nu_in_plane",
    "tau_in_plane",
    "tau_in_plane_is_derived",
]


@dataclass(frozen=True, init=False)
class Plane:
    """The plane ``a x + b y + c z = d``, stored in canonical scale.

    Coefficients are cleared to coprime integers with the first nonzero of
    ``(a, b, c)`` positive, so proportional equations compare equal.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __init__(self, a, b, c, d=0):
        vals = [to_scalar(v) for v in (a, b, c, d)]
        if not any(vals[:3]):
            raise ValueError("(a, b, c) must not all vanish")
        lcm = 1
        for v in vals:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        ints = [int(v * lcm) for v in vals]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        lead = next(v for v in ints[:3] if v)
        if lead < 0:
            g = -g
        for name, v in zip("abcd", ints):
            object.__setattr__(self, name, Fraction(v // g))

    @property
    def normal(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d)

    @property
    def through_origin(self) -> bool:
        return self.d == 0

    def evaluate(self, p: Point) -> Fraction:
        return sum((n * x for n, x in zip(self.normal, p)), Fraction(0))

    def contains(self, p: Point) -> bool:
        if p.dim != 3:
            return False
        return self.evaluate(p) == self.d

    def __repr__(self) -> str:
        return "Plane({}, {}, {}, {})".format(*(str(v) for v in self.coefficients))

    def to_json(self) -> list:
        return [scalar_to_json(v) for v in self.coefficients]

    @classmethod
    def from_json(cls, data) -> "Plane":
        return cls(*data)


class Shape(enum.Enum):
    TETRAGON = "tetragon"
    HEXAGON = "hexagon"


@dataclass(frozen=True)
class SectionPolygon:
    """The slice of ``[-r, r]^3`` by a plane through the origin.

    ``vertices`` form a cycle; consecutive vertices share a cube face and
    the cycle runs counter-clockwise around the plane's canonical normal.
    """

    plane: Plane
    radius: Fraction
    vertices: Tuple[Point, ...]
    shape: Shape

    def to_json(self) -> dict:
        return {
            "shape": self.shape.value,
            "radius": str(self.radius),
            "plane": self.plane.to_json(),
            "vertices": [v.to_json() for v in self.vertices],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SectionPolygon":
        verts = tuple(Point.from_json(v) for v in data["vertices"])
        return cls(
            Plane.from_json(data["plane"]),
            to_scalar(data["radius"]),
            verts,
            Shape(data["shape"]),
        )


def translate_to_origin(plane: Plane) -> Tuple[Plane, Point]:
    """Shift ``plane`` along one axis so it passes through the origin.

    The shift runs along the last axis with a nonzero coefficient (``z``
    whenever ``c != 0``). Returns the shifted plane and the translation
    vector ``t``; ``x -> x + t`` carries the old plane onto the new one.
    """
    k = max(i for i, n in enumerate(plane.normal) if n)
    t = [Fraction(0)] * 3
    t[k] = -plane.d / plane.normal[k]
    return Plane(plane.a, plane.b, plane.c, 0), Point(t)


def triangle_test(plane: Plane) -> bool:
    """True iff ``|a|, |b|, |c|`` are the sides of a non-degenerate triangle.

    Equivalently, the plane is *not* isometric to R^2_inf. ``d`` is ignored.
    """
    x, y, z = sorted(abs(n) for n in plane.normal)
    return x > 0 and x + y > z


def _require_origin(plane: Plane) -> None:
    if not plane.through_origin:
        raise ValueError(f"{plane!r} does not pass through the origin")


def _face_segment(normal, axis: int, side: Fraction, r: Fraction) -> set:
    """Endpoints of (plane) ∩ (face ``x_axis = side``) inside ``[-r, r]^3``."""
    u, v = [k for k in range(3) if k != axis]
    rhs = -normal[axis] * side
    pts = set()
    # Hitting each of the four face edges; a line lying along an edge
    # yields both of its corners from the transverse edges.
    for fixed, free in ((u, v), (v, u)):
        if normal[free] == 0:
            continue
        for s in (r, -r):
            val = (rhs - normal[fixed] * s) / normal[free]
            if -r <= val <= r:
                p = [Fraction(0)] * 3
                p[axis], p[fixed], p[free] = side, s, val
                pts.add(Point(p))
    return pts


def _cross(p: Point, q: Point) -> Tuple[Fraction, Fraction, Fraction]:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


@functools.lru_cache(maxsize=4096)
def _section(plane: Plane, radius: Fraction) -> SectionPolygon:
    normal = plane.normal
    edges = set()
    verts = set()
    for axis in range(3):
        for side in (radius, -radius):
            pts = _face_segment(normal, axis, side, radius)
            verts |= pts
            if len(pts) == 2:
                edges.add(frozenset(pts))
            elif len(pts) > 2:
                raise ArithmeticError(f"face meets {plane!r} in {len(pts)} points")
    adjacency = {v: [] for v in verts}
    for e in edges:
        a, b = tuple(e)
        adjacency[a].append(b)
        adjacency[b].append(a)
    if len(verts) not in (4, 6) or any(len(n) != 2 for n in adjacency.values()):
        raise ArithmeticError(f"degenerate section data for {plane!r}")

    start = max(verts, key=lambda p: p.coords)
    first, second = adjacency[start]
    turn = sum(x * n for x, n in zip(_cross(start, first), normal))
    cycle = [start, first if turn > 0 else second]
    while len(cycle) < len(verts):
        prev, cur = cycle[-2], cycle[-1]
        cycle.append(next(n for n in adjacency[cur] if n != prev))
    if start not in adjacency[cycle[-1]]:
        raise ArithmeticError(f"section of {plane!r} does not close")

    shape = Shape.HEXAGON if len(cycle) == 6 else Shape.TETRAGON
    return SectionPolygon(plane, radius, tuple(cycle), shape)


def cross_section(plane: Plane, radius=1) -> SectionPolygon:
    """Intersect a plane through the origin with the boundary of ``[-r, r]^3``.

    This is the sphere of radius ``r`` about the origin in the plane's
    induced metric.
    """
    _require_origin(plane)
    r = to_scalar(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    return _section(plane, r)


def section_edge_lengths(poly: SectionPolygon) -> list:
    vs = poly.vertices
    return [chebyshev_distance(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]


@dataclass(frozen=True)
class FlatChart:
    """Coordinate chart of a plane through the origin onto R^2.

    The chart keeps the two coordinates in ``keep`` and forgets the third;
    ``lift`` solves the plane equation for the forgotten one. Charts built
    by :func:`flat_isometry_to_R2` are d_inf isometries. Others can be
    built by hand, e.g. to exercise the isometry checker.
    """

    plane: Plane
    keep: Tuple[int, int]
    case: str = "manual"

    def __post_init__(self):
        _require_origin(self.plane)
        keep = tuple(sorted(self.keep))
        if len(set(keep)) != 2 or not set(keep) <= {0, 1, 2}:
            raise ValueError(f"keep must name two distinct axes, got {self.keep}")
        object.__setattr__(self, "keep", keep)
        if self.plane.normal[self.dropped] == 0:
            raise ValueError("cannot solve the plane for the dropped axis")

    @property
    def dropped(self) -> int:
        return ({0, 1, 2} - set(self.keep)).pop()

    @property
    def matrix(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """2x3 matrix of the chart."""
        return tuple(
            tuple(Fraction(int(col == k)) for col in range(3)) for k in self.keep
        )

    @property
    def parametrization(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """3x2 matrix with ``lift(u, v) = M @ (u, v)``."""
        n = self.plane.normal
        m = self.dropped
        rows = []
        for row in range(3):
            if row == m:
                rows.append(tuple(-n[k] / n[m] for k in self.keep))
            else:
                rows.append(tuple(Fraction(int(row == k)) for k in self.keep))
        return tuple(rows)

    def __call__(self, p: Point) -> Point:
        if not self.plane.contains(p):
            raise ValueError(f"{p!r} is not on {self.plane!r}")
        return Point(p[k] for k in self.keep)

    def lift(self, uv: Point) -> Point:
        if uv.dim != 2:
            raise ValueError("chart coordinates are 2-dimensional")
        return Point(
            sum((m * x for m, x in zip(row, uv)), Fraction(0))
            for row in self.parametrization
        )


def flat_isometry_to_R2(plane: Plane) -> FlatChart:
    """An exact isometry from a flat plane onto R^2_inf.

    Drops the axis whose coefficient has the largest absolute value
    (lowest index on ties). That single rule covers all three cases of the
    flatness argument: one nonzero coefficient (drop the constrained axis),
    exactly one zero coefficient (keep the axis with the smaller
    coefficient and the free axis), and a dominant coefficient with
    ``|a| + |b| <= |c|`` (project onto the other two axes).
    """
    if triangle_test(plane):
        raise ValueError(f"{plane!r} is not isometric to R^2_inf")
    base, _ = translate_to_origin(plane)
    mags = [abs(n) for n in base.normal]
    m = mags.index(max(mags))
    zeros = mags.count(0)
    case = {2: "axis-plane", 1: "one-zero-coefficient", 0: "dominant-coefficient"}[zeros]
    keep = tuple(k for k in range(3) if k != m)
    return FlatChart(base, keep, case)


def nu_in_plane(plane: Plane) -> int:
    """Number of unit-sphere points joined to the center by a unique geodesic."""
    base, _ = translate_to_origin(plane)
    return len(cross_section(base, 1).vertices)


def tau_in_plane_is_derived(plane: Plane) -> bool:
    """The in-plane tau rule is only argued directly for hexagonal planes like x+y+z=0."""
    return not triangle_test(plane)


def tau_in_plane(plane: Plane, p: Point, q: Point) -> GeodesicCount:
    """Geodesic count between two points of ``plane`` in its induced metric.

    One iff ``q - p`` points at a vertex of the plane's unit section.
    """
    for x in (p, q):
        if not plane.contains(x):
            raise ValueError(f"{x!r} is not on {plane!r}")
    if p == q:
        raise ValueError("points must be distinct")
    base, _ = translate_to_origin(plane)
    direction = q - p
    for v in cross_section(base, 1).vertices:
        if not any(_cross(direction, v)):
            return GeodesicCount.ONE
    return GeodesicCount.INFINITE
