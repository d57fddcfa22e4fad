"""Exact points, the maximum (Chebyshev) metric and polyline paths.

All quantities are :class:`fractions.Fraction`; nothing in this module
rounds. Paths are stored as vertex lists (their image up to
reparametrization), which is all the geodesic tests downstream need.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence, Union

Scalar = Fraction
ScalarLike = Union[int, str, Fraction]

__all__ = [
    "Scalar",
    "DimensionError",
    "Point",
    "Polyline",
    "to_scalar",
    "scalar_to_json",
    "chebyshev_distance",
    "polyline_length",
    "segment",
]


class DimensionError(ValueError):
    """Raised when points of different (or unsupported) dimension meet."""


def to_scalar(value: ScalarLike) -> Fraction:
    """Parse an int, a Fraction or a ``"num/den"`` string into a Fraction.

    Floats are refused: they would smuggle rounding into the exact core.
    """
    if type(value) is Fraction:
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def scalar_to_json(value: Fraction) -> Union[int, str]:
    """Integers stay integers, everything else becomes ``"num/den"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, init=False)
class Point:
    """A point of R^n with exact rational coordinates, n >= 2."""

    coords: tuple

    def __init__(self, coords: Iterable[ScalarLike]):
        values = tuple(to_scalar(c) for c in coords)
        if len(values) < 2:
            raise DimensionError(f"points need dimension >= 2, got {len(values)}")
        object.__setattr__(self, "coords", values)

    @classmethod
    def origin(cls, n: int) -> "Point":
        return cls([0] * n)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Point") -> None:
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Point") -> "Point":
        self._check(other)
        return Point(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Point") -> "Point":
        self._check(other)
        return Point(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Point":
        return Point(-a for a in self.coords)

    def scale(self, factor: ScalarLike) -> "Point":
        f = to_scalar(factor)
        return Point(f * a for a in self.coords)

    def __repr__(self) -> str:
        return "Point(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list:
        return [scalar_to_json(c) for c in self.coords]

    @classmethod
    def from_json(cls, data: Sequence) -> "Point":
        if isinstance(data, (str, bytes)) or not isinstance(data, Sequence):
            raise ValueError("a point is a JSON array of rationals")
        return cls(data)


def chebyshev_distance(p: Point, q: Point) -> Fraction:
    """Maximum over axes of ``|p_i - q_i|``."""
    p._check(q)
    return max(abs(a - b) for a, b in zip(p.coords, q.coords))


@dataclass(frozen=True, init=False)
class Polyline:
    """Ordered vertices of a piecewise-linear path.

    Consecutive duplicates are rejected rather than merged.
    """

    vertices: tuple

    def __init__(self, vertices: Iterable):
        verts = tuple(v if isinstance(v, Point) else Point(v) for v in vertices)
        if len(verts) < 2:
            raise ValueError("a polyline needs at least two vertices")
        dim = verts[0].dim
        for v in verts[1:]:
            if v.dim != dim:
                raise DimensionError("polyline vertices must share one dimension")
        for u, v in zip(verts, verts[1:]):
            if u == v:
                raise ValueError(f"consecutive duplicate vertex {v!r}")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return self.vertices[0].dim

    @property
    def start(self) -> Point:
        return self.vertices[0]

    @property
    def end(self) -> Point:
        return self.vertices[-1]

    def edges(self) -> Iterator[tuple]:
        return zip(self.vertices, self.vertices[1:])

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": [v.to_json() for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "Polyline":
        if not isinstance(data, dict) or "vertices" not in data:
            raise ValueError('a polyline is {"vertices": [...]}')
        return cls(Point.from_json(v) for v in data["vertices"])


def polyline_length(path: Polyline) -> Fraction:
    # A straight segment has d_inf length equal to its endpoint distance,
    # so the sup over partitions collapses to this sum.
    return sum((chebyshev_distance(u, v) for u, v in path.edges()), Fraction(0))


def segment(p: Point, q: Point) -> Polyline:
    """The straight path from ``p`` to ``q``; always a geodesic."""
    p._check(q)
    if p == q:
        raise ValueError("segment endpoints must differ")
    return Polyline([p, q])
