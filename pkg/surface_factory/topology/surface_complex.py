"""
Reconstruction of the surface carried by an admissible normal vector.

Parallel copies of a piece type are stacked inside their tetrahedron: triangles around vertex v are numbered
from v outwards, quads from the side of the vertex pair containing vertex 0. A piece's corners sit on tetrahedron
edges and are identified by (tet, edge, position counted from the lower vertex of the edge). Arcs on a face are
matched across a gluing by their position counted from the vertex they cut off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from surface_factory.normal.coords import COORDS_PER_TET, QUAD_PAIRS, quad_separates, quad_type
from surface_factory.normal.matching import require_admissible
from surface_factory.triangulation.perm import EDGE_INDEX, EDGES
from surface_factory.triangulation.skeleton import DisjointSet
from surface_factory.triangulation.triangulation import Triangulation

TRIANGLE = "tri"
QUAD = "quad"

# (tet, edge index, position from the lower vertex)
Point = Tuple[int, int, int]


@dataclass(frozen=True)
class Piece:
    tet: int
    kind: str
    # vertex for triangles, quad type for quads
    piece_type: int
    index: int


@dataclass(frozen=True)
class Side:
    """Side of a piece running from corner `start` to corner `end` in the piece's cyclic order."""

    face: int
    # the tetrahedron vertex cut off by this arc, and the arc's position counted from that vertex
    vertex: int
    position: int
    start: Point
    end: Point


@dataclass(frozen=True)
class ArcMatch:
    piece_a: int
    side_a: int
    piece_b: int
    side_b: int
    # True when both pieces traverse the shared edge in the same direction in their stored cyclic order
    same_direction: bool


@dataclass
class SurfaceComplex:
    n: int
    pieces: List[Piece]
    sides: List[List[Side]]
    matches: List[ArcMatch]
    boundary_sides: List[Tuple[int, int]]
    # class id of every corner point
    point_class: Dict[Point, int]
    num_point_classes: int

    def piece_counts(self) -> Tuple[int, ...]:
        counts = [0] * (COORDS_PER_TET * self.n)
        for p in self.pieces:
            offset = p.piece_type if p.kind == TRIANGLE else 4 + p.piece_type
            counts[COORDS_PER_TET * p.tet + offset] += 1
        return tuple(counts)

    @property
    def num_edges(self) -> int:
        return len(self.matches) + len(self.boundary_sides)


def _edge_point_count(v: Sequence[int], tet: int, a: int, b: int) -> int:
    base = COORDS_PER_TET * tet
    count = v[base + a] + v[base + b]
    q = quad_type(v, tet)
    if q is not None and quad_separates(q, a, b):
        count += v[base + 4 + q]
    return count


def _position_from(v: Sequence[int], piece: Piece, x: int) -> int:
    """Position of the piece's corner on an edge leaving vertex x, counted from x."""
    base = COORDS_PER_TET * piece.tet
    if piece.kind == TRIANGLE:
        assert piece.piece_type == x
        return piece.index
    q = piece.piece_type
    quads = v[base + 4 + q]
    k = piece.index if x in QUAD_PAIRS[q][0] else quads - 1 - piece.index
    return v[base + x] + k


def _point(v: Sequence[int], piece: Piece, x: int, y: int) -> Point:
    """The corner of `piece` on tetrahedron edge xy, where x is a vertex the piece cuts off."""
    pos = _position_from(v, piece, x)
    if x > y:
        pos = _edge_point_count(v, piece.tet, x, y) - 1 - pos
    return piece.tet, EDGE_INDEX[(min(x, y), max(x, y))], pos


def _corner_edges(piece: Piece) -> List[Tuple[int, int]]:
    """Tetrahedron edges carrying the corners of a piece in cyclic order, as (cut-off vertex, other vertex)."""
    if piece.kind == TRIANGLE:
        v = piece.piece_type
        return [(v, w) for w in range(4) if w != v]
    (a, b), (c, d) = QUAD_PAIRS[piece.piece_type]
    return [(a, c), (c, b), (b, d), (d, a)]


def _sides(v: Sequence[int], piece: Piece) -> List[Side]:
    edges = _corner_edges(piece)
    sides = []
    for k in range(len(edges)):
        e1, e2 = edges[k], edges[(k + 1) % len(edges)]
        shared = set(e1) & set(e2)
        assert len(shared) == 1
        cut = shared.pop()
        face = ({0, 1, 2, 3} - set(e1) - set(e2)).pop()

        x1 = e1[0] if piece.kind == TRIANGLE else cut
        start = _point(v, piece, x1, e1[1] if x1 == e1[0] else e1[0])
        x2 = e2[0] if piece.kind == TRIANGLE else cut
        end = _point(v, piece, x2, e2[1] if x2 == e2[0] else e2[0])

        sides.append(Side(face=face, vertex=cut, position=_position_from(v, piece, cut), start=start, end=end))
    return sides


def _map_point(t: Triangulation, v: Sequence[int], point: Point, face: int) -> Point:
    """Image of a point on an edge of `face` under that face's gluing."""
    tet, e, pos = point
    g = t.gluing(tet, face)
    a, b = EDGES[e]
    ma, mb = g.vertex_map[a], g.vertex_map[b]
    if ma > mb:
        pos = _edge_point_count(v, tet, a, b) - 1 - pos
    return g.target_tet, EDGE_INDEX[(min(ma, mb), max(ma, mb))], pos


def reconstruct_surface(t: Triangulation, v: Sequence[int], check: bool = True) -> SurfaceComplex:
    if check:
        require_admissible(t, v)

    pieces: List[Piece] = []
    for tet in range(t.n):
        base = COORDS_PER_TET * tet
        for vertex in range(4):
            pieces.extend(Piece(tet, TRIANGLE, vertex, k) for k in range(v[base + vertex]))
        for q in range(3):
            pieces.extend(Piece(tet, QUAD, q, k) for k in range(v[base + 4 + q]))

    sides = [_sides(v, p) for p in pieces]

    # arcs on each face, keyed by (tet, face, cut-off vertex, position)
    arcs: Dict[Tuple[int, int, int, int], Tuple[int, int]] = {}
    for p_idx, piece_sides in enumerate(sides):
        for s_idx, s in enumerate(piece_sides):
            key = (pieces[p_idx].tet, s.face, s.vertex, s.position)
            assert key not in arcs, f"two arcs share the slot {key}"
            arcs[key] = (p_idx, s_idx)

    points = sorted({s.start for piece_sides in sides for s in piece_sides})
    point_ids = {pt: i for i, pt in enumerate(points)}
    point_ds = DisjointSet(len(points))

    matches: List[ArcMatch] = []
    boundary_sides: List[Tuple[int, int]] = []
    for (tet, face, vertex, position), (p_idx, s_idx) in sorted(arcs.items()):
        g = t.gluing(tet, face)
        if g is None:
            boundary_sides.append((p_idx, s_idx))
            continue

        partner_key = (g.target_tet, g.target_face, g.vertex_map[vertex], position)
        q_idx, r_idx = arcs[partner_key]
        side = sides[p_idx][s_idx]
        other = sides[q_idx][r_idx]
        mapped_start = _map_point(t, v, side.start, face)
        mapped_end = _map_point(t, v, side.end, face)
        assert {mapped_start, mapped_end} == {other.start, other.end}

        point_ds.union(point_ids[side.start], point_ids[mapped_start])
        point_ds.union(point_ids[side.end], point_ids[mapped_end])
        if (tet, face) < (g.target_tet, g.target_face):
            matches.append(ArcMatch(p_idx, s_idx, q_idx, r_idx, same_direction=mapped_start == other.start))

    roots = {}
    point_class = {}
    for pt, i in point_ids.items():
        root, _ = point_ds.find(i)
        point_class[pt] = roots.setdefault(root, len(roots))

    return SurfaceComplex(
        n=t.n,
        pieces=pieces,
        sides=sides,
        matches=matches,
        boundary_sides=boundary_sides,
        point_class=point_class,
        num_point_classes=len(roots),
    )

