from surface_factory.normal.coords import DimensionMismatch, NotAdmissible, format_vector, parse_vector
from surface_factory.normal.matching import (
    MatchingSystem,
    boundary_pattern,
    compatible,
    edge_weights,
    is_admissible,
    matching_matrix,
)
