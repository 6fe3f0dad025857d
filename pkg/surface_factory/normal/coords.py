"""
Standard normal coordinates.

Every tetrahedron contributes seven coordinates (t0, t1, t2, t3, q01, q02, q03): t_v counts normal triangles
cutting off vertex v and q_0x counts quadrilaterals separating edge 0x from its opposite edge.
Normal arcs on a face are named by the face vertex they cut off.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from surface_factory.utils.errors import SurfaceFactoryError
from surface_factory.utils.typing import NormalVector

COORDS_PER_TET = 7
NUM_QUAD_TYPES = 3

# quad type q splits the vertices into these two pairs, the first pair always contains vertex 0
QUAD_PAIRS: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...] = (
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
)
QUAD_NAMES = ("q01", "q02", "q03")

QUAD_OF_PAIR: Dict[Tuple[int, int], int] = {}
for _q, (_p0, _p1) in enumerate(QUAD_PAIRS):
    QUAD_OF_PAIR[_p0] = _q
    QUAD_OF_PAIR[_p1] = _q


class DimensionMismatch(SurfaceFactoryError):
    pass


class NotAdmissible(SurfaceFactoryError):
    pass


def tri_index(tet: int, vertex: int) -> int:
    return COORDS_PER_TET * tet + vertex


def quad_index(tet: int, quad: int) -> int:
    return COORDS_PER_TET * tet + 4 + quad


def quad_of_pair(a: int, b: int) -> int:
    return QUAD_OF_PAIR[(a, b) if a < b else (b, a)]


def quad_separates(quad: int, x: int, y: int) -> bool:
    """True if quads of this type cross the edge xy."""
    first = QUAD_PAIRS[quad][0]
    return (x in first) != (y in first)


def arc_pieces(face: int, vertex: int) -> Tuple[int, int]:
    """
    Local coordinate offsets (triangle, quad) of the pieces whose arc on `face` cuts off `vertex`:
    the triangle around vertex and the quad type pairing vertex with the face's opposite vertex.
    """
    assert vertex != face
    return vertex, 4 + quad_of_pair(vertex, face)


def arc_count(v: Sequence[int], tet: int, face: int, vertex: int) -> int:
    tri, quad = arc_pieces(face, vertex)
    base = COORDS_PER_TET * tet
    return v[base + tri] + v[base + quad]


def tet_block(v: Sequence[int], tet: int) -> Tuple[int, ...]:
    return tuple(v[COORDS_PER_TET * tet : COORDS_PER_TET * (tet + 1)])


def quad_type(v: Sequence[int], tet: int) -> Optional[int]:
    """The single non-zero quad type of this tetrahedron, None if there are no quads (or more than one type)."""
    nonzero = [q for q in range(NUM_QUAD_TYPES) if v[quad_index(tet, q)] != 0]
    return nonzero[0] if len(nonzero) == 1 else None


def satisfies_quad_constraints(v: Sequence[int], n: int) -> bool:
    for tet in range(n):
        base = COORDS_PER_TET * tet + 4
        if (v[base] != 0) + (v[base + 1] != 0) + (v[base + 2] != 0) > 1:
            return False
    return True


def check_dimension(v: Sequence[int], n: int) -> None:
    if len(v) != COORDS_PER_TET * n:
        raise DimensionMismatch(f"Expected {COORDS_PER_TET * n} coordinates for {n} tetrahedra, got {len(v)}")


def format_vector(v: Sequence[int]) -> str:
    blocks = []
    for tet in range(len(v) // COORDS_PER_TET):
        b = tet_block(v, tet)
        blocks.append(f"{b[0]},{b[1]},{b[2]},{b[3]}|{b[4]},{b[5]},{b[6]}")
    return ";".join(blocks)


def parse_vector(text: str) -> NormalVector:
    entries: List[int] = []
    for block in text.strip().split(";"):
        try:
            tris, quads = block.split("|")
            tri_values = [int(x) for x in tris.split(",")]
            quad_values = [int(x) for x in quads.split(",")]
        except ValueError as exc:
            raise SurfaceFactoryError(f"Malformed normal vector block {block!r}") from exc
        if len(tri_values) != 4 or len(quad_values) != NUM_QUAD_TYPES:
            raise SurfaceFactoryError(f"Normal vector block {block!r} needs 4 triangle and 3 quad entries")
        entries.extend(tri_values + quad_values)
    return tuple(entries)


def vector_from_blocks(blocks: Sequence[Sequence[int]]) -> NormalVector:
    """Concatenates per-tetrahedron 7-tuples."""
    return tuple(x for b in blocks for x in b)
