"""Exact mixed volumes of Newton polytopes via the convex hull of their union."""

from .ratgeom import affine_dim, det, rank
from .hull import (Face, Facet, Polytope, Support, convex_hull, enumerate_faces,
                   face_of, support_value)
from .volume import normalized_volume, regular_triangulation
from .mixedvol import SupportSystem, minkowski_sum, mixed_volume
from .unmix import (Grouping, UnmixReport, check_semimixed, check_theorem1,
                    check_theorem2, semimixed_bkk, unmixed_bkk)
from .generators import (Graph, adjacency_polytope, cycle_graph, ieee14,
                         kuramoto_cycle, loadflow_supports, noonburg, path_graph,
                         tensor_eigen_supports)

__version__ = "0.1.0"
