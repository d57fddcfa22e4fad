"""Geodesics in the maximum metric.

Between two points of (R^n, d_inf) there is either exactly one shortest
path or infinitely many. This walk-through shows how the sector test
decides whether a polyline is shortest and when the straight segment is
the only option.
"""
from chebyplanes import (
    Point,
    Polyline,
    chebyshev_distance,
    check_geodesic,
    polyline_length,
    sector_signature,
    tau,
    witness_two_geodesics,
)

p, q = Point([0, 0]), Point([2, 0])
print("d_inf(p, q) =", chebyshev_distance(p, q))

# Two ways of going over a bump. The low one is as short as the segment.
for path in [Polyline([p, (1, 1), q]), Polyline([p, (1, 2), q])]:
    verdict = check_geodesic(path)
    print(
        [str(v) for v in path.vertices],
        "length", polyline_length(path),
        "geodesic" if verdict.is_geodesic else f"not geodesic, breaks at {verdict.violation}",
    )

# Which sectors at the origin hold a given point?
for target in [Point([1, 0, -1]), Point([1, 1, 1]), Point([2, 1, 0])]:
    sig = sorted(sector_signature(Point.origin(3), target))
    print(target, "->", [f"{s.axis}{'+' if s.sign > 0 else '-'}" for s in sig])

# Only pairs whose coordinate differences share one absolute value have a
# unique geodesic.
for target in [Point([2, 2, -2]), Point([2, 1, 0])]:
    print("tau(O,", target, ") =", tau(Point.origin(3), target).value)

a, b = witness_two_geodesics(Point([0, 0]), Point([2, 1]))
print("two different geodesics from (0,0) to (2,1):")
print("  ", [str(v) for v in a.vertices])
print("  ", [str(v) for v in b.vertices])
