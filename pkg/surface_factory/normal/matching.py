from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from surface_factory.normal.coords import (
    COORDS_PER_TET,
    NotAdmissible,
    arc_count,
    arc_pieces,
    check_dimension,
    quad_separates,
    quad_type,
    satisfies_quad_constraints,
)
from surface_factory.triangulation.perm import EDGES, FACE_VERTICES
from surface_factory.triangulation.skeleton import SkeletonData, compute_skeleton
from surface_factory.triangulation.triangulation import InternalFace, NotABoundaryFace, Triangulation
from surface_factory.utils.typing import FaceKey


@dataclass(frozen=True)
class MatchingRow:
    face: InternalFace
    # arc type on the source side, named by the vertex it cuts off
    vertex: int
    coefficients: Tuple[int, ...]


@dataclass(frozen=True)
class MatchingSystem:
    n: int
    rows: Tuple[MatchingRow, ...]

    @property
    def num_columns(self) -> int:
        return COORDS_PER_TET * self.n

    def residual(self, v: Sequence[int]) -> List[int]:
        """M·v with Python integers, so arbitrarily large coordinates stay exact."""
        return [sum(c * x for c, x in zip(r.coefficients, v) if c) for r in self.rows]

    def contains(self, v: Sequence[int]) -> bool:
        return all(x == 0 for x in self.residual(v))

    def rows_for_faces(self, faces: Sequence[int]) -> List[MatchingRow]:
        """Rows of the given internal faces (indices into Triangulation.internal_faces), in that order."""
        per_face = 3
        return [self.rows[per_face * f + k] for f in faces for k in range(per_face)]


def matching_matrix(t: Triangulation) -> MatchingSystem:
    """
    One row per (internal face, arc type): arcs counted on the smaller (tet, face) side minus the arcs of the
    matching type on the partner side. Rows follow internal faces by source key, then the cut-off vertex.
    """
    cols = COORDS_PER_TET * t.n
    rows = []
    for face in t.internal_faces():
        for v in FACE_VERTICES[face.face]:
            coeffs = np.zeros(cols, dtype=np.int64)
            tri, quad = arc_pieces(face.face, v)
            coeffs[COORDS_PER_TET * face.tet + tri] += 1
            coeffs[COORDS_PER_TET * face.tet + quad] += 1

            w = face.vertex_map[v]
            tri, quad = arc_pieces(face.target_face, w)
            coeffs[COORDS_PER_TET * face.target_tet + tri] -= 1
            coeffs[COORDS_PER_TET * face.target_tet + quad] -= 1

            rows.append(MatchingRow(face=face, vertex=v, coefficients=tuple(int(c) for c in coeffs)))
    return MatchingSystem(n=t.n, rows=tuple(rows))


def is_admissible(t: Triangulation, v: Sequence[int], system: Optional[MatchingSystem] = None) -> bool:
    check_dimension(v, t.n)
    if any(x < 0 for x in v):
        return False
    if not satisfies_quad_constraints(v, t.n):
        return False
    system = system or matching_matrix(t)
    return system.contains(v)


def require_admissible(t: Triangulation, v: Sequence[int]) -> None:
    if not is_admissible(t, v):
        raise NotAdmissible(f"Vector is not an admissible normal surface of {t}")


def compatible(u: Sequence[int], v: Sequence[int], n: int) -> bool:
    """Two admissible vectors are compatible iff their sum still satisfies the quadrilateral constraints."""
    return satisfies_quad_constraints([a + b for a, b in zip(u, v)], n)


def boundary_pattern(t: Triangulation, v: Sequence[int], face: FaceKey) -> Tuple[int, int, int]:
    """Arc counts on a boundary face, starting with the arcs around its smallest vertex label."""
    check_dimension(v, t.n)
    tet, f = face
    if not t.is_boundary(tet, f):
        raise NotABoundaryFace(f"Face {f} of tetrahedron {tet} is not a boundary face")
    a, b, c = (arc_count(v, tet, f, vertex) for vertex in FACE_VERTICES[f])
    return a, b, c


def tet_edge_weight(v: Sequence[int], tet: int, a: int, b: int) -> int:
    """Number of points in which the pieces of one tetrahedron meet its edge ab."""
    base = COORDS_PER_TET * tet
    weight = v[base + a] + v[base + b]
    q = quad_type(v, tet)
    if q is not None and quad_separates(q, a, b):
        weight += v[base + 4 + q]
    return weight


def edge_weights(t: Triangulation, v: Sequence[int], skeleton: Optional[SkeletonData] = None) -> Tuple[int, ...]:
    """Intersection numbers of the surface with every edge orbit, read off the orbit's first member."""
    check_dimension(v, t.n)
    skeleton = skeleton or compute_skeleton(t)
    weights = []
    for orbit in skeleton.edge_orbits:
        tet, e, _ = orbit[0]
        a, b = EDGES[e]
        weights.append(tet_edge_weight(v, tet, a, b))
    return tuple(weights)
