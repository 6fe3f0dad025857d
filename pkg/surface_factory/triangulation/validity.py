from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from surface_factory.triangulation.pairing_graph import face_pairing_graph
from surface_factory.triangulation.skeleton import LinkClass, SkeletonData, compute_skeleton
from surface_factory.triangulation.triangulation import Triangulation


@dataclass(frozen=True)
class ValidityReport:
    edge_valid: Tuple[bool, ...]
    link_class: Tuple[str, ...]
    is_connected: bool
    is_closed: bool
    is_bounded: bool
    is_3manifold: bool
    num_vertices: int
    problems: List[str] = field(default_factory=list)

    @property
    def is_one_vertex(self) -> bool:
        return self.num_vertices == 1


def validate(t: Triangulation, skeleton: SkeletonData = None) -> ValidityReport:
    """
    Checks the 3-manifold conditions: connected, no edge identified with itself in reverse,
    every vertex link a sphere (interior vertices) or a disc (boundary vertices).
    """
    skeleton = skeleton or compute_skeleton(t)
    problems = []

    is_connected = face_pairing_graph(t).is_connected()
    if not is_connected:
        problems.append("triangulation is disconnected")

    for orbit, valid in enumerate(skeleton.edge_valid):
        if not valid:
            problems.append(f"edge {orbit} is identified with itself in reverse")

    for orbit, link in enumerate(skeleton.vertex_links):
        expected = LinkClass.DISC if skeleton.vertex_boundary[orbit] else LinkClass.SPHERE
        if link.link_class != expected:
            problems.append(f"vertex {orbit} has link {link.link_class} (chi={link.euler}), expected {expected}")

    is_closed = len(skeleton.boundary_faces) == 0
    return ValidityReport(
        edge_valid=skeleton.edge_valid,
        link_class=skeleton.link_class,
        is_connected=is_connected,
        is_closed=is_closed,
        is_bounded=not is_closed,
        is_3manifold=not problems,
        num_vertices=skeleton.num_vertices,
        problems=problems,
    )
