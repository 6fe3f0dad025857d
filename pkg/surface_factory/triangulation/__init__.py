from surface_factory.triangulation.gluing_table import format_gluing_table, parse_gluing_table
from surface_factory.triangulation.pairing_graph import FacePairingGraph, face_pairing_graph
from surface_factory.triangulation.signature import canonical_signature, from_signature
from surface_factory.triangulation.skeleton import LinkClass, SkeletonData, classify_vertex_links, compute_skeleton
from surface_factory.triangulation.triangulation import (
    FaceGluing,
    GluingSyntaxError,
    InconsistentGluing,
    InvalidTriangulation,
    NotABoundaryFace,
    SelfGluedFace,
    Triangulation,
    TriangulationBuilder,
    TriangulationError,
)
from surface_factory.triangulation.validity import ValidityReport, validate
