"""
Mixed volume of two polygons from the hull of their union
=========================================================

Two lattice polygons, each with six or eight vertices, whose union has a
square hull.  The mixed volume and the union's normalized volume agree, and
the face check says why.
"""

from bkkunmix import (SupportSystem, check_theorem1, convex_hull, mixed_volume,
                      normalized_volume, unmixed_bkk)

Q1 = [(1, 1), (3, 0), (4, 0), (4, 1), (3, 3), (1, 4), (0, 4), (0, 3)]
Q2 = [(0, 1), (0, 0), (3, 0), (4, 1), (4, 4), (3, 4)]
system = SupportSystem.from_lists([Q1, Q2])

# the oracle: inclusion-exclusion over Q1, Q2 and Q1 + Q2
print("mixed volume        ", mixed_volume(system))

# the union hull only has the four corners of [0, 4]^2
hull = convex_hull(Q1 + Q2)
print("union hull vertices ", hull.vertices)
print("2! vol(conv union)  ", normalized_volume(Q1 + Q2))

# every edge of the square meets both polygons, so the two numbers must agree
report = check_theorem1(system)
for verdict in report.verdicts:
    print("  edge with normal", verdict.face.normal, "meets supports",
          [i for i, x in enumerate(verdict.intersections) if x])
print("certified:", report.theorem1)

#%%
# Sliding Q2 to the right leaves the mixed volume alone but grows the hull.
# The check notices and the bound is flagged instead of certified.
moved = SupportSystem.from_lists([Q1, [(x + 5, y) for x, y in Q2]])
value, report = unmixed_bkk(moved)
print("after translation: mixed volume", mixed_volume(moved),
      "| union bound", report.bound, "| certified value", value)
