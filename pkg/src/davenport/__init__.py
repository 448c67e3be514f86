"""Exact computation and verification toolkit for Davenport constants of
integer boxes and discrete Euclidean balls."""

from .lattice import (GroundSet, ball, box, canonical_orbit_representative,
                      contains, enumerate_points, explicit, parse_ground)
from .sequences import MinimalityCertificate, ZsSequence, is_minimal_zero_sum, sequence_sum
from .kernel import SupportMatrix, analyze, davenport_support_dp1, ell_of, unique_maximizer_check
from .search import Budget, BudgetExceeded, davenport_exact, davenport_support_k_small
from .constructions import VerifiedConstruction, ball3_s, box2_s, box3_s, disk_s1, disk_s2
from .polytopes import (ReorderCertificate, ZonotopePolytope, cayley_menger_Vd,
                        greedy_reorder, simplex_vertices, tiling_check, verify_reorder)
from .optimize import (DODECA_FULL, DODECA_REDUCED, HEXAGON, dodeca_full,
                       dodeca_reduced, hexagon_area, maximize,
                       simplex_local_max_evidence)
from . import bounds, primes

__version__ = "0.1.0"
