"""
Tensor eigenpairs: merging nearly identical supports
====================================================

The first ``n`` supports of the eigenpair system differ in one point each.
The union check fails on them, but the block check passes, so those supports
may be replaced by their union.  The generalized system lands on the same
number.
"""

from bkkunmix import (check_theorem2, mixed_volume, tensor_eigen_supports)
from bkkunmix.unmix import Grouping, check_semimixed, merged_system, semimixed_bkk

for params in ((2, 3, 2), (2, 4, 3), (3, 3, 3)):
    n = params[0]
    standard = tensor_eigen_supports(*params)
    generalized = tensor_eigen_supports(*params, generalized=True)
    blocks = Grouping((tuple(range(n)), (n,)))

    union_check = check_theorem2(standard).theorem2
    value, report = semimixed_bkk(standard, blocks)
    print(f"{params}: union check {union_check}, block check {report.ok}, "
          f"merged {value}, oracle {mixed_volume(standard)}, "
          f"generalized {mixed_volume(generalized)}")

#%%
# The merged system for n=2 has two copies of the 5-point union.
merged = merged_system(tensor_eigen_supports(2, 3, 2), Grouping(((0, 1), (2,))))
for s in merged.supports:
    print(s.points)
