"""
Closed one-vertex triangulations C(n): a Fibonacci layered solid torus B(n-4) plugged into E along the boundary torus.

The identification is the first one (in a fixed search order) that carries the meridian of B(n-4) onto the curve of E
whose arcs around 3(013) and 3(123) are (0, F(n-2), F(n-3)) and (F(n-3), 0, F(n-2)), and that produces a valid closed
one-vertex triangulation.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, Tuple

from surface_factory.families.errors import NoClosingMap, ParameterOutOfRange
from surface_factory.families.layered import LayeredSolidTorus, build_lst, fibonacci
from surface_factory.families.tables import E_BOUNDARY_1, E_BOUNDARY_2, build_e
from surface_factory.triangulation.perm import FACE_VERTICES, Perm4, gluing_perms
from surface_factory.triangulation.triangulation import Triangulation, TriangulationBuilder
from surface_factory.triangulation.validity import validate
from surface_factory.utils.typing import FaceKey
from surface_factory.utils.utils import log

CLOSED_C_MIN_N = 5

Plug = Tuple[Tuple[FaceKey, FaceKey, Perm4], Tuple[FaceKey, FaceKey, Perm4]]


def _e_arcs(m: int) -> Dict[FaceKey, Dict[int, int]]:
    """Arcs the plug curve must have around each vertex of the two boundary faces of E."""
    a, b = fibonacci(m + 1), fibonacci(m + 2)
    return {
        E_BOUNDARY_1: {0: 0, 1: b, 3: a},
        E_BOUNDARY_2: {1: a, 2: 0, 3: b},
    }


def _matching_maps(e_face: FaceKey, required: Dict[int, int], lst: LayeredSolidTorus, b_face: FaceKey):
    pattern = lst.arc_pattern(b_face)
    for p in gluing_perms(e_face[1], b_face[1]):
        if all(pattern[p[v]] == required[v] for v in FACE_VERTICES[e_face[1]]):
            yield p


def candidate_plugs(lst: LayeredSolidTorus, m: int) -> Iterator[Plug]:
    """Face assignments and vertex maps that line the meridian up with the plug curve, in search order."""
    required = _e_arcs(m)
    for face_1, face_2 in itertools.permutations(lst.boundary_faces):
        maps_1 = list(_matching_maps(E_BOUNDARY_1, required[E_BOUNDARY_1], lst, face_1))
        maps_2 = list(_matching_maps(E_BOUNDARY_2, required[E_BOUNDARY_2], lst, face_2))
        for p1, p2 in itertools.product(maps_1, maps_2):
            yield (E_BOUNDARY_1, face_1, p1), (E_BOUNDARY_2, face_2, p2)


def _assemble(lst: LayeredSolidTorus, e: Triangulation, plug: Plug) -> Triangulation:
    builder = TriangulationBuilder()
    builder.add_triangulation(lst.triangulation)
    offset = builder.add_triangulation(e)
    for (e_tet, e_face), (b_tet, _), p in plug:
        builder.join(e_tet + offset, e_face, b_tet, p)
    return builder.build()


def build_closed_c(n: int) -> Triangulation:
    if n < CLOSED_C_MIN_N:
        raise ParameterOutOfRange(f"closed family needs n >= {CLOSED_C_MIN_N}, got {n}")

    m = n - 4
    lst = build_lst(m)
    e = build_e()
    tried = 0
    for plug in candidate_plugs(lst, m):
        tried += 1
        t = _assemble(lst, e, plug)
        report = validate(t)
        if report.is_3manifold and report.is_closed and report.is_one_vertex:
            log.debug("C(%d): plug %r accepted after %d candidates", n, plug, tried)
            return t

    raise NoClosingMap(f"no boundary identification closes B({m}) with E ({tried} candidates)")
