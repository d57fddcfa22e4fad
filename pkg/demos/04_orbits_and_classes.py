"""Symmetries of the cube acting on planes.

The 48 signed permutations of coordinates are isometries of R^3_inf and
move planes around. Two planes are isometric when their coefficient
triangles are similar, or when both are flat.
"""
from collections import Counter

from chebyplanes import Plane, canonical_class, group_elements, isometric, orbit

G = group_elements()
print(len(G), "signed permutations, e.g.", ", ".join(str(g) for g in G[:5]))

for coeffs in [(2, 3, 4), (2, 2, 3), (1, 1, 1)]:
    orb = orbit(Plane(*coeffs))
    print(f"{coeffs}: orbit {orb.size}, stabilizer", [str(g) for g in orb.stabilizer])

pairs = [
    (Plane(1, 1, 1, 0), Plane(2, 2, 3, 0)),
    (Plane(1, 1, 1, 0), Plane(2, 2, 2, 5)),
    (Plane(1, 2, 3, 0), Plane(0, 0, 1, 0)),
    (Plane(2, 3, 4, 0), Plane(4, 6, 8, 1)),
]
for p, q in pairs:
    print(p, q, "isometric" if isometric(p, q) else "different")

# How many isometry classes among small integer planes?
classes = Counter(
    canonical_class(Plane(a, b, c))
    for a in range(8)
    for b in range(a, 8)
    for c in range(b, 8)
    if (a, b, c) != (0, 0, 0)
)
flat = sum(n for cls, n in classes.items() if cls.kind == "flat")
print(f"{len(classes)} classes, {flat} flat planes")
for cls, n in classes.most_common(4):
    print("  ", cls.to_json(), n)
