"""End-to-end acceptance checks, one test per requirement.

Every comparison is exact. Run with ``pytest tests/test_acceptance.py -v``;
a PASS/FAIL line per check is printed at the end of the session.
"""

import itertools
import random
from fractions import Fraction

from chebyplanes import (
    GeodesicCount,
    Plane,
    Point,
    Polyline,
    Shape,
    act,
    canonical_class,
    chebyshev_distance,
    cross_section,
    flat_isometry_to_R2,
    group_elements,
    is_geodesic_polyline,
    isometric,
    nu_ambient,
    nu_in_plane,
    orbit,
    polyline_length,
    section_edge_lengths,
    SignedPermutation,
    tau,
    triangle_test,
    witness_two_geodesics,
)
from chebyplanes.cli import run
from chebyplanes.oracle import ProbeConfig, probe_unique_geodesic, sample_isometry_check
from chebyplanes.planes import SectionPolygon

from conftest import SWEEP

PLANES = [Plane(a, b, c, 0) for a, b, c in SWEEP]


def strict_triangle(a, b, c):
    a, b, c = abs(a), abs(b), abs(c)
    return a > 0 and b > 0 and c > 0 and a < b + c and b < a + c and c < a + b


def test_01_hexagon_of_x_plus_y_plus_z():
    code, result, _ = run(["section", "1", "1", "1", "--radius", "1"])
    assert code == 0
    poly = SectionPolygon.from_json(result["payload"])
    expected = [Point(v) for v in [(1, 0, -1), (0, 1, -1), (-1, 1, 0), (-1, 0, 1), (0, -1, 1), (1, -1, 0)]]
    assert list(poly.vertices) == expected
    assert section_edge_lengths(poly) == [1] * 6


def test_02_hexagon_of_2x_2y_3z():
    poly = cross_section(Plane(2, 2, 3, 0), 1)
    expected = [
        Point(v)
        for v in [(1, "1/2", -1), ("1/2", 1, -1), (-1, 1, 0), (-1, "-1/2", 1), ("-1/2", -1, 1), (1, -1, 0)]
    ]
    assert list(poly.vertices) == expected
    half, three_halves = Fraction(1, 2), Fraction(3, 2)
    assert section_edge_lengths(poly) == [half, three_halves, three_halves] * 2


def test_03_hexagon_iff_strict_triangle_inequalities():
    mismatches = [
        (a, b, c)
        for (a, b, c), plane in zip(SWEEP, PLANES)
        if (cross_section(plane, 1).shape is Shape.HEXAGON) != strict_triangle(a, b, c)
    ]
    assert mismatches == []


def test_04_flat_charts_preserve_distance_exactly():
    flat = [p for p in PLANES if not triangle_test(p)]
    assert flat
    failures = [
        p.coefficients
        for k, p in enumerate(flat)
        if not sample_isometry_check(flat_isometry_to_R2(p), p, 1000, seed=1000 + k)
    ]
    assert failures == []


def test_05_unique_geodesic_counts():
    assert nu_ambient(2) == 4
    assert nu_ambient(3) == 8
    assert nu_in_plane(Plane(1, 1, 1, 0)) == 6
    flat_values = {nu_in_plane(p) for p in PLANES if not triangle_test(p)}
    assert flat_values == {4}


def test_06_orbit_sizes_and_stabilizers():
    assert orbit(Plane(2, 3, 4, 0)).size == 24
    orb = orbit(Plane(2, 2, 3, 0))
    assert orb.size == 12
    named = {SignedPermutation.parse(t) for t in ["(x,y,z)", "(-x,-y,-z)", "(y,x,z)", "(-y,-x,-z)"]}
    assert set(orb.stabilizer) == named
    assert orbit(Plane(1, 1, 1, 0)).size == 4
    bad = [p.coefficients for p in PLANES if orbit(p).size * len(orbit(p).stabilizer) != 48]
    assert bad == []


def test_07_isometry_decisions():
    assert isometric(Plane(1, 1, 1, 0), Plane(2, 2, 3, 0)) is False
    assert isometric(Plane(1, 1, 1, 0), Plane(2, 2, 2, 5)) is True

    related = {p: frozenset(q for q in PLANES if isometric(p, q)) for p in PLANES}
    for p in PLANES:
        assert p in related[p]
        for q in related[p]:
            assert p in related[q]
            # transitivity: everything related to q is related to p
            assert related[q] == related[p]

    def similar(s, t):
        s, t = sorted(map(abs, s)), sorted(map(abs, t))
        return all(s[i] * t[j] == s[j] * t[i] for i in range(3) for j in range(3))

    for (s, p), (t, q) in itertools.combinations(zip(SWEEP, PLANES), 2):
        fs, ft = not strict_triangle(*s), not strict_triangle(*t)
        expected = (fs and ft) or (not fs and not ft and similar(s, t))
        assert (canonical_class(p) == canonical_class(q)) == expected, (s, t)


def test_08_geodesic_criterion_matches_length_equality():
    grid = [Point(v) for v in itertools.product(range(-2, 3), repeat=2)]
    total = mismatches = 0
    for a, b, c in itertools.product(grid, repeat=3):
        if a == b or b == c:
            continue
        path = Polyline([a, b, c])
        same = polyline_length(path) == chebyshev_distance(a, c)
        total += 1
        mismatches += is_geodesic_polyline(path) != same
    assert total == 25 * 24 * 24
    assert mismatches == 0


def _pairs(n, count, rng):
    # half-integer coordinates so the probe's 1/2 and 1/4 offsets stay meaningful
    out = []
    while len(out) < count:
        p = Point(Fraction(rng.randint(-8, 8), 2) for _ in range(n))
        if rng.random() < 0.5:
            step = Fraction(rng.randint(1, 8), 2)
            delta = [rng.choice((-1, 1)) * step for _ in range(n)]
        else:
            delta = [Fraction(rng.randint(-8, 8), 2) for _ in range(n)]
        q = p + Point(delta)
        if q != p:
            out.append((p, q))
    return out


def test_09_tau_rule_probe_and_witnesses_agree():
    rng = random.Random(20240609)
    cfg = ProbeConfig()
    disagreements = 0
    counts = {GeodesicCount.ONE: 0, GeodesicCount.INFINITE: 0}
    for n in (2, 3):
        for p, q in _pairs(n, 10_000, rng):
            t = tau(p, q)
            counts[t] += 1
            rule = len({abs(x - y) for x, y in zip(p, q)}) == 1
            probe = probe_unique_geodesic(p, q, cfg)
            disagreements += not ((t is GeodesicCount.ONE) == rule == probe)
            if t is GeodesicCount.INFINITE:
                a, b = witness_two_geodesics(p, q)
                assert is_geodesic_polyline(a) and is_geodesic_polyline(b)
                assert (a.start, a.end) == (b.start, b.end) == (p, q)
                assert a != b
    assert disagreements == 0
    assert min(counts.values()) > 1000


def test_10_tetragon_edges_have_length_two():
    tetragons = [cross_section(p, 1) for p in PLANES if cross_section(p, 1).shape is Shape.TETRAGON]
    assert tetragons
    assert all(section_edge_lengths(t) == [2] * 4 for t in tetragons)


def test_11_invariants_are_preserved_by_the_group():
    for g in group_elements():
        for p in PLANES:
            image = act(g, p)
            assert canonical_class(image) == canonical_class(p)
            assert nu_in_plane(image) == nu_in_plane(p)
            moved = {g(v) for v in cross_section(p, 1).vertices}
            assert moved == set(cross_section(image, 1).vertices)
