from surface_factory.enumeration.brute_force import brute_force_vertex_surfaces
from surface_factory.enumeration.double_description import enumerate_vertex_surfaces
from surface_factory.enumeration.stats import ComplexityStats, complexity_stats, count_with_face_pattern
from surface_factory.enumeration.vertex_surfaces import TooLarge, VertexSurfaceSet
