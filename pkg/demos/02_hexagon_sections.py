"""Cutting the unit cube with planes through its center.

The unit sphere of d_inf in R^3 is the surface of a cube, so the unit
circle of a plane through the origin is a polygon. It has six corners
exactly when |a|, |b|, |c| are the sides of a genuine triangle.
"""
from pathlib import Path

from chebyplanes import Plane, cross_section, section_edge_lengths, triangle_test
from chebyplanes.svg import section_svg

for coeffs in [(1, 1, 1), (2, 2, 3), (1, 1, 2), (2, 3, 4), (0, 1, 1)]:
    plane = Plane(*coeffs)
    poly = cross_section(plane, 1)
    print(
        f"{coeffs}: triangle={triangle_test(plane)!s:5} {poly.shape.value:8}",
        "edges", [str(e) for e in section_edge_lengths(poly)],
    )

poly = cross_section(Plane(2, 2, 3), 1)
for v in poly.vertices:
    print("  ", v)

# Count hexagons in a small sweep of nonnegative coefficients.
hexagons = 0
total = 0
for a in range(6):
    for b in range(a, 6):
        for c in range(b, 6):
            if (a, b, c) == (0, 0, 0):
                continue
            total += 1
            hexagons += triangle_test(Plane(a, b, c))
print(f"{hexagons} of {total} planes give a hexagon")

out = Path("section_2_2_3.svg")
out.write_text(section_svg(poly))
print("wrote", out)
