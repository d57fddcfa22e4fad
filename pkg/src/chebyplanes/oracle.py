"""Brute-force validators.

These are deliberately naive and avoid the algorithms they check: they
recompute distances themselves, sample faces on a lattice instead of
solving for segment endpoints, and look for second geodesics by poking
midpoints. Only the shared value types are imported.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np
from scipy.spatial import ConvexHull

from .isometry import SignedPermutation
from .metric_core import Point, Polyline, to_scalar
from .planes import FlatChart, Plane

__all__ = [
    "ProbeConfig",
    "refine_length",
    "brute_section",
    "cloud_extremes",
    "probe_unique_geodesic",
    "sample_isometry_check",
]


def _dinf(p: Sequence, q: Sequence) -> Fraction:
    return max(abs(a - b) for a, b in zip(p, q))


@dataclass(frozen=True)
class ProbeConfig:
    grid_density: int = 100
    perturbations: Tuple[Fraction, ...] = field(
        default=(Fraction(1, 2), Fraction(-1, 2), Fraction(1, 4), Fraction(-1, 4))
    )
    seed: int = 42

    def __post_init__(self):
        if self.grid_density < 2:
            raise ValueError("grid_density must be at least 2")
        pert = tuple(to_scalar(v) for v in self.perturbations)
        if not (any(v > 0 for v in pert) and any(v < 0 for v in pert)):
            raise ValueError("perturbations need both signs")
        object.__setattr__(self, "perturbations", pert)

    def to_json(self) -> dict:
        return {
            "grid_density": self.grid_density,
            "perturbations": [str(v) for v in self.perturbations],
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ProbeConfig":
        return cls(int(data["grid_density"]), tuple(data["perturbations"]), int(data["seed"]))


def refine_length(path: Polyline, parts: int) -> Fraction:
    """Partition sum with every segment cut into ``parts`` equal pieces."""
    if parts < 1:
        raise ValueError("parts must be positive")
    total = Fraction(0)
    for u, v in zip(path.vertices, path.vertices[1:]):
        pts = [
            [a + (b - a) * Fraction(k, parts) for a, b in zip(u, v)]
            for k in range(parts + 1)
        ]
        total += sum(_dinf(x, y) for x, y in zip(pts, pts[1:]))
    return total


def brute_section(plane: Plane, radius, cfg: ProbeConfig) -> List[Point]:
    """Lattice cells of the cube faces that the plane passes through.

    Each face of ``[-r, r]^3`` is cut into ``grid_density^2`` square cells;
    a cell's center is kept when the plane crosses the cell. Every point of
    the true section is therefore within ``r / grid_density`` (d_inf) of a
    kept center.
    """
    r = to_scalar(radius)
    m = cfg.grid_density
    h = 2 * r / m
    centers = [-r + h * (2 * k + 1) / 2 for k in range(m)]
    n = plane.normal
    cloud = []
    for axis in range(3):
        u, v = [k for k in range(3) if k != axis]
        slack = (abs(n[u]) + abs(n[v])) * h / 2
        for side in (r, -r):
            base = n[axis] * side - plane.d
            for x in centers:
                partial = base + n[u] * x
                for y in centers:
                    if abs(partial + n[v] * y) <= slack:
                        p = [Fraction(0)] * 3
                        p[axis], p[u], p[v] = side, x, y
                        cloud.append(Point(p))
    return cloud


def cloud_extremes(cloud: Sequence[Point], plane: Plane, tol: float) -> List[Point]:
    """Corner points of a section cloud.

    Projects onto two coordinates, takes the convex hull, then repeatedly
    drops the hull vertex closest to the chord of its neighbours while that
    distance is below ``tol``. Returns the cloud points left standing.
    """
    n = [abs(float(c)) for c in plane.normal]
    drop = n.index(max(n))
    keep = [k for k in range(3) if k != drop]
    xyz = np.array([[float(c) for c in p] for p in cloud])
    pts = xyz[:, keep]
    hull = list(ConvexHull(pts).vertices)

    def chord_gap(k):
        a, b, c = pts[hull[k - 1]], pts[hull[k]], pts[hull[(k + 1) % len(hull)]]
        ab, ac = b - a, c - a
        norm = np.hypot(*ac)
        if norm == 0:
            return 0.0
        return abs(ab[0] * ac[1] - ab[1] * ac[0]) / norm

    while len(hull) > 3:
        gaps = [chord_gap(k) for k in range(len(hull))]
        k = int(np.argmin(gaps))
        if gaps[k] >= tol:
            break
        del hull[k]
    return [cloud[i] for i in hull]


def _three_point_geodesic(p: Point, m: Point, q: Point) -> bool:
    return _dinf(p, m) + _dinf(m, q) == _dinf(p, q)


def probe_unique_geodesic(p: Point, q: Point, cfg: ProbeConfig) -> bool:
    """False when a bent path through a shifted midpoint is also a geodesic.

    A False verdict is conclusive. True only means no probe found a second
    geodesic.
    """
    if p == q:
        raise ValueError("points must be distinct")
    mid = [(a + b) / 2 for a, b in zip(p, q)]
    for j in range(len(mid)):
        for eta in cfg.perturbations:
            bent = list(mid)
            bent[j] += eta
            if bent == list(p) or bent == list(q):
                continue
            if _three_point_geodesic(p, Point(bent), q):
                return False
    return True


def _random_plane_point(plane: Plane, rng: random.Random) -> Point:
    # coordinates u/m on the free axes; the last one solved in integers
    n = [int(c) for c in plane.normal]
    k = max(i for i in range(3) if n[i])
    free = [i for i in range(3) if i != k]
    num = [rng.randint(-60, 60) for _ in free]
    den = [rng.randint(1, 7) for _ in free]
    p = [None] * 3
    for i, a, b in zip(free, num, den):
        p[i] = Fraction(a, b)
    top = int(plane.d) * den[0] * den[1] - n[free[0]] * num[0] * den[1] - n[free[1]] * num[1] * den[0]
    p[k] = Fraction(top, n[k] * den[0] * den[1])
    return Point(p)


def sample_isometry_check(
    chart: Union[FlatChart, SignedPermutation],
    plane: Plane,
    count: int,
    seed: int,
) -> bool:
    """Draw ``count`` seeded point pairs on ``plane`` and compare distances."""
    if isinstance(chart, FlatChart):
        if chart.plane != plane:
            raise ValueError("chart belongs to a different plane")
    elif not isinstance(chart, SignedPermutation):
        raise TypeError(f"cannot check {type(chart).__name__}")
    rng = random.Random(seed)
    for _ in range(count):
        x = _random_plane_point(plane, rng)
        y = _random_plane_point(plane, rng)
        if _dinf(chart(x), chart(y)) != _dinf(x, y):
            return False
    return True
