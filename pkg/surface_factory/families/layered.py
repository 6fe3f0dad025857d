"""
Layered solid tori with Fibonacci meridian weights.

The one-tetrahedron LST(1,2,3) folds face 0(123) onto 0(302). Each further tetrahedron is layered over the
boundary edge met least often by the meridian disc, so LST(a, b, a+b) becomes LST(b, a+b, a+2b) and the n-th
member is LST(F(n+1), F(n+2), F(n+3)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from surface_factory.families.errors import ParameterOutOfRange
from surface_factory.normal.matching import tet_edge_weight
from surface_factory.triangulation.perm import FACE_VERTICES
from surface_factory.triangulation.skeleton import compute_skeleton
from surface_factory.triangulation.triangulation import Triangulation, TriangulationBuilder
from surface_factory.utils.typing import FaceKey

# 0(123) -> 0(302): 1->3, 2->0, 3->2
LST_BASE_MAP = (1, 3, 0, 2)

# meridian disc of the base tetrahedron: two triangles and one quad
LST_BASE_MERIDIAN = (1, 1, 0, 0, 0, 1, 0)

EdgeKey = Tuple[int, int, int]


def fibonacci(k: int) -> int:
    """F(1) = F(2) = 1."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class LayeredSolidTorus:
    triangulation: Triangulation
    boundary_faces: Tuple[FaceKey, FaceKey]
    # meridian intersection numbers of the tetrahedron edges lying in the boundary faces, keyed (tet, a, b), a < b
    edge_weights: Dict[EdgeKey, int]

    def boundary_weights(self) -> Tuple[int, ...]:
        """Meridian weights of the three boundary edges, sorted."""
        tet, face = self.boundary_faces[0]
        return tuple(sorted(self.edge_weights[key] for key in _face_edges(tet, face)))

    def arc_pattern(self, face: FaceKey) -> Dict[int, int]:
        """Meridian arcs around every vertex of a boundary face."""
        tet, f = face
        result = {}
        for v in FACE_VERTICES[f]:
            p, q = (w for w in FACE_VERTICES[f] if w != v)
            result[v] = (self.weight(tet, v, p) + self.weight(tet, v, q) - self.weight(tet, p, q)) // 2
        return result

    def weight(self, tet: int, a: int, b: int) -> int:
        return self.edge_weights[(tet, min(a, b), max(a, b))]


def _face_edges(tet: int, face: int) -> List[EdgeKey]:
    a, b, c = FACE_VERTICES[face]
    return [(tet, a, b), (tet, a, c), (tet, b, c)]


def _base() -> Tuple[TriangulationBuilder, LayeredSolidTorus]:
    builder = TriangulationBuilder(1)
    builder.join(0, 0, 0, LST_BASE_MAP)

    boundary = ((0, 2), (0, 3))
    weights = {}
    for face in boundary:
        for key in _face_edges(*face):
            weights[key] = tet_edge_weight(LST_BASE_MERIDIAN, 0, key[1], key[2])
    return builder, LayeredSolidTorus(builder.build(), boundary, weights)


def _layer(builder: TriangulationBuilder, lst: LayeredSolidTorus) -> LayeredSolidTorus:
    skeleton = compute_skeleton(lst.triangulation)
    (i1, f1), (i2, f2) = lst.boundary_faces

    # the edge to cover: smallest meridian weight, as seen from the first boundary face
    _, x1, y1 = min(_face_edges(i1, f1), key=lambda key: (lst.edge_weights[key], key))
    orbit = skeleton.edge_of(i1, x1, y1)
    direction = skeleton.edge_direction(i1, x1, y1)

    matches = [(a, b) for _, a, b in _face_edges(i2, f2) if skeleton.edge_of(i2, a, b) == orbit]
    assert len(matches) == 1, "boundary torus edge must appear once in each boundary face"
    x2, y2 = matches[0]
    if skeleton.edge_direction(i2, x2, y2) != direction:
        x2, y2 = y2, x2

    z1 = next(v for v in FACE_VERTICES[f1] if v not in (x1, y1))
    z2 = next(v for v in FACE_VERTICES[f2] if v not in (x2, y2))

    new = builder.add_tetrahedra(1)
    # new faces 0 = (123) and 1 = (023) share the edge 23, which goes onto the covered edge
    m1 = [0, 0, 0, 0]
    m1[0], m1[1], m1[2], m1[3] = f1, z1, x1, y1
    m2 = [0, 0, 0, 0]
    m2[1], m2[0], m2[2], m2[3] = f2, z2, x2, y2
    builder.join(new, 0, i1, tuple(m1))
    builder.join(new, 1, i2, tuple(m2))

    w = lst.weight
    covered = w(i1, x1, y1)
    flipped = max(w(i1, z1, x1) + w(i2, z2, y2), w(i2, z2, x2) + w(i1, z1, y1)) - covered

    weights = {
        (new, 1, 2): w(i1, z1, x1),
        (new, 1, 3): w(i1, z1, y1),
        (new, 0, 2): w(i2, z2, x2),
        (new, 0, 3): w(i2, z2, y2),
        (new, 0, 1): flipped,
    }
    return LayeredSolidTorus(builder.build(), ((new, 2), (new, 3)), weights)


def build_lst(n: int) -> LayeredSolidTorus:
    if n < 1:
        raise ParameterOutOfRange(f"layered solid torus family needs n >= 1, got {n}")

    builder, lst = _base()
    for _ in range(n - 1):
        lst = _layer(builder, lst)
    return lst


def build_fib_lst(n: int) -> Triangulation:
    return build_lst(n).triangulation
