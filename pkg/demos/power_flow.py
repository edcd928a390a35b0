"""
Power-flow root counts from adjacency polytopes
===============================================

For load-flow systems the certified bound is the normalized volume of the
graph's adjacency polytope.  On cycles the numbers follow ``N * 2^(N-2)``.
"""

import time

from bkkunmix import (adjacency_polytope, check_theorem2, cycle_graph, ieee14,
                      loadflow_supports, mixed_volume, normalized_volume)

# small cases: the face check passes, mostly through condition C
for N in (3, 4):
    system = loadflow_supports(cycle_graph(N))
    report = check_theorem2(system)
    kinds = {}
    for v in report.verdicts:
        kinds[v.satisfied_by] = kinds.get(v.satisfied_by, 0) + 1
    print(f"cycle N={N}: certified={report.theorem2} verdicts={kinds} "
          f"oracle={mixed_volume(system)}")

#%%
# The volume alone scales much further.
for N in range(5, 13):
    t0 = time.perf_counter()
    vol = normalized_volume(adjacency_polytope(cycle_graph(N)))
    print(f"cycle N={N:>2}: {vol:>7}  (N 2^(N-2) = {N * 2 ** (N - 2):>7})  "
          f"{time.perf_counter() - t0:6.2f}s")

#%%
# The IEEE 14-bus network gives 26 equations in 26 unknowns.  Its volume takes
# one to two minutes here; uncomment to run.
# print(normalized_volume(adjacency_polytope(ieee14())))   # 427680
print("ieee14:", len(ieee14().edges), "branches,",
      len(adjacency_polytope(ieee14())), "lattice points")
