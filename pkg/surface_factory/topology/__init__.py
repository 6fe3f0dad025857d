from surface_factory.topology.classify import (
    SurfaceKind,
    TopologyClass,
    classify_surface,
    classify_vector,
    euler_characteristic_linear,
    is_vertex_linking,
    vertex_link_vector,
)
from surface_factory.topology.surface_complex import SurfaceComplex, reconstruct_surface
