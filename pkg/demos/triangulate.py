"""
Normalized volume through a lifted triangulation
================================================

The volume engine lifts every point to a random height, keeps the lower
hull, and adds up the simplex determinants.  Different seeds give different
triangulations but the same total.
"""

from fractions import Fraction

from bkkunmix import Support, normalized_volume, regular_triangulation

hexagon = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1), (0, 0)]

for seed in (0, 1, 2):
    tri = regular_triangulation(hexagon, seed)
    print(f"seed {seed}: {len(tri.cells)} cells, total {tri.total}")

# the export format keeps the seed that actually produced the lift
print(regular_triangulation(hexagon, 0).to_json())

#%%
# Cell ids index the sorted point list.  Interior points never show up.
tri = regular_triangulation(hexagon)
points = Support.from_points(hexagon).points
used = {points[i] for cell in tri.cells for i in cell.vertex_ids}
print("origin used:", (0, 0) in used)

#%%
# Rational coordinates stay exact.
print(normalized_volume([(0, 0, 0), (Fraction(1, 2), 0, 0), (0, Fraction(1, 3), 0),
                         (0, 0, Fraction(1, 5))]))

# a flat point set has volume 0
print(normalized_volume([(0, 0, 1), (1, 0, 1), (0, 1, 1)]))
