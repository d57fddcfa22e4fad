"""The 48 signed permutations of R^3 and their action on planes.

A signed permutation ``g = (perm, signs)`` sends ``x`` to ``w`` with
``w_i = signs[i] * x[perm[i]]`` (1-based ``perm``), so
``SignedPermutation((3, 2, 1), (1, -1, 1))`` is ``(x, y, z) -> (z, -y, x)``.
These are exactly the symmetries of the cube, hence d_inf isometries, and
they act on planes through the origin by taking images.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .metric_core import Point, scalar_to_json, to_scalar
from .planes import Plane, translate_to_origin, triangle_test

__all__ = [
    "SignedPermutation",
    "CanonicalClass",
    "PlaneOrbit",
    "group_elements",
    "act",
    "orbit",
    "canonical_class",
    "isometric",
]

_SIGN_TEXT = {1: "+", -1: "-"}
_SIGN_VALUE = {"+": 1, "-": -1}
_AXES = "xyz"


@dataclass(frozen=True, order=True)
class SignedPermutation:
    perm: Tuple[int, int, int]
    signs: Tuple[int, int, int]

    def __post_init__(self):
        perm, signs = tuple(self.perm), tuple(self.signs)
        if sorted(perm) != [1, 2, 3]:
            raise ValueError(f"perm must be a permutation of (1, 2, 3), got {perm}")
        if len(signs) != 3 or any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be three of +1/-1, got {signs}")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def identity(cls) -> "SignedPermutation":
        return cls((1, 2, 3), (1, 1, 1))

    def __call__(self, p: Point) -> Point:
        if p.dim != 3:
            raise ValueError("signed permutations act on R^3")
        return Point(s * p[k - 1] for k, s in zip(self.perm, self.signs))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition: ``(g * h)(x) == g(h(x))``."""
        perm = tuple(other.perm[k - 1] for k in self.perm)
        signs = tuple(s * other.signs[k - 1] for k, s in zip(self.perm, self.signs))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        perm = [0, 0, 0]
        signs = [0, 0, 0]
        for i, (k, s) in enumerate(zip(self.perm, self.signs), start=1):
            perm[k - 1] = i
            signs[k - 1] = s
        return SignedPermutation(tuple(perm), tuple(signs))

    @property
    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(
            tuple(s if col == k else 0 for col in range(1, 4))
            for k, s in zip(self.perm, self.signs)
        )

    def __str__(self) -> str:
        parts = (("-" if s < 0 else "") + _AXES[k - 1] for k, s in zip(self.perm, self.signs))
        return "(" + ",".join(parts) + ")"

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "signs": [_SIGN_TEXT[s] for s in self.signs]}

    @classmethod
    def from_json(cls, data: dict) -> "SignedPermutation":
        return cls(tuple(int(k) for k in data["perm"]), tuple(_SIGN_VALUE[s] for s in data["signs"]))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """Read the ``(z,-y,x)`` notation."""
        items = [t.strip() for t in text.strip().strip("()").split(",")]
        if len(items) != 3:
            raise ValueError(f"expected three entries in {text!r}")
        perm, signs = [], []
        for t in items:
            sign = -1 if t.startswith("-") else 1
            perm.append(_AXES.index(t.lstrip("+-")) + 1)
            signs.append(sign)
        return cls(tuple(perm), tuple(signs))


_GROUP = tuple(
    SignedPermutation(perm, signs)
    for perm in itertools.permutations((1, 2, 3))
    for signs in itertools.product((1, -1), repeat=3)
)


def group_elements() -> list:
    """All 48 cube isometries, identity first, in a fixed order."""
    return list(_GROUP)


def act(g: SignedPermutation, plane: Plane) -> Plane:
    """Image of a plane through the origin under ``g``.

    ``x`` lies on the image iff ``g^{-1}(x)`` lies on ``plane``, so the new
    normal is ``M n`` (signed permutation matrices are orthogonal).
    """
    if not plane.through_origin:
        raise ValueError(f"{plane!r} does not pass through the origin")
    n = plane.normal
    return Plane(*(s * n[k - 1] for k, s in zip(g.perm, g.signs)), 0)


@dataclass(frozen=True)
class PlaneOrbit:
    plane: Plane
    members: Tuple[Plane, ...]
    stabilizer: Tuple[SignedPermutation, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "plane": self.plane.to_json(),
            "size": self.size,
            "members": [p.to_json() for p in self.members],
            "stabilizer": [g.to_json() for g in self.stabilizer],
            "stabilizer_notation": [str(g) for g in self.stabilizer],
        }


def orbit(plane: Plane) -> PlaneOrbit:
    members = {}
    stab = []
    for g in _GROUP:
        image = act(g, plane)
        members.setdefault(image, None)
        if image == plane:
            stab.append(g)
    return PlaneOrbit(plane, tuple(members), tuple(stab))


@dataclass(frozen=True)
class CanonicalClass:
    """Complete isometry invariant of a plane in R^3_inf.

    ``kind`` is ``"flat"`` (isometric to R^2_inf) or ``"triangle"``, in
    which case ``sides`` are ``|a|, |b|, |c|`` sorted and divided by the
    largest.
    """

    kind: str
    sides: Optional[Tuple[Fraction, Fraction, Fraction]] = None

    def __post_init__(self):
        if self.kind == "flat":
            if self.sides is not None:
                raise ValueError("flat classes carry no sides")
            return
        if self.kind != "triangle" or self.sides is None:
            raise ValueError(f"bad canonical class {self.kind!r}")
        t = tuple(to_scalar(v) for v in self.sides)
        if not (0 < t[0] <= t[1] <= t[2] == 1 and t[0] + t[1] > t[2]):
            raise ValueError(f"sides {t} are not a normalized non-degenerate triangle")
        object.__setattr__(self, "sides", t)

    def to_json(self) -> dict:
        if self.kind == "flat":
            return {"kind": "flat"}
        return {"kind": "triangle", "sides": [str(v) for v in self.sides]}

    @classmethod
    def from_json(cls, data: dict) -> "CanonicalClass":
        if data["kind"] == "flat":
            return cls("flat")
        return cls("triangle", tuple(to_scalar(v) for v in data["sides"]))

    def __str__(self) -> str:
        if self.kind == "flat":
            return "flat"
        return "triangle[" + ",".join(str(scalar_to_json(v)) for v in self.sides) + "]"


FLAT = CanonicalClass("flat")


def canonical_class(plane: Plane) -> CanonicalClass:
    if not triangle_test(plane):
        return FLAT
    base, _ = translate_to_origin(plane)
    sides = sorted(abs(n) for n in base.normal)
    top = sides[-1]
    return CanonicalClass("triangle", tuple(s / top for s in sides))


def isometric(p1: Plane, p2: Plane) -> bool:
    return canonical_class(p1) == canonical_class(p2)
