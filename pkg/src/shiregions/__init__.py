"""Bijections between regions of Shi-type hyperplane arrangements and parking functions."""

from .arrangement import (Arrangement, Face, Hyperplane, Region, braid, build,
                          enumerate_faces, enumerate_regions, extended, family, feasible,
                          graphical, region_to_diagram, shi)
from .bijection import sigma, sigma_inverse, sigma_k, sigma_k_inverse
from .counting import (count_faces_formula, count_family, count_graphical_product,
                       count_path, count_shi, family_recursion_check)
from .diagram import (ChainPartition, Diagram, KDiagram, chain_partition,
                      prune_containments, validate_diagram)
from .errors import GraphConditionError, InvariantError, NotParkingError, ShiError
from .finite_field import count_points_offplanes, regions_via_zaslavsky
from .pfcore import (CosetVector, KParkingFunction, ParkingFunction, SimpleGraph,
                     coset_representative, enumerate_k_parking, is_k_parking,
                     satisfies_graph_condition)

__version__ = "0.1.0"
