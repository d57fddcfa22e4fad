"""Planes that look like the maximum-metric plane.

When the triangle test fails the section is a parallelogram, and simply
forgetting the coordinate with the largest normal coefficient is an exact
isometry onto (R^2, d_inf). The random check below compares distances
before and after the chart.
"""
import random
from fractions import Fraction

from chebyplanes import Point, Plane, chebyshev_distance, flat_isometry_to_R2, nu_in_plane
from chebyplanes.oracle import sample_isometry_check

rng = random.Random(0)

for coeffs in [(0, 0, 1), (1, -1, 0), (1, 1, 2), (3, -1, 7)]:
    plane = Plane(*coeffs)
    chart = flat_isometry_to_R2(plane)
    print(f"{coeffs}: drop axis {chart.dropped + 1} ({chart.case}), nu = {nu_in_plane(plane)}")
    for _ in range(3):
        uv = Point([Fraction(rng.randint(-9, 9), 3), Fraction(rng.randint(-9, 9), 3)])
        x = chart.lift(uv)
        y = chart.lift(Point([0, 0]))
        print("   ", x, "->", chart(x), " distances", chebyshev_distance(x, y), chebyshev_distance(chart(x), chart(y)))
    print("    1000 random pairs preserved:", sample_isometry_check(chart, plane, 1000, seed=1))
