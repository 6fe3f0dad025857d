from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from surface_factory.normal.coords import COORDS_PER_TET, QUAD_PAIRS
from surface_factory.normal.matching import require_admissible
from surface_factory.topology.surface_complex import SurfaceComplex, reconstruct_surface
from surface_factory.triangulation.skeleton import DisjointSet, SkeletonData, compute_skeleton
from surface_factory.triangulation.triangulation import Triangulation
from surface_factory.utils.typing import NormalVector


class SurfaceKind:
    DISC = "Disc"
    SPHERE = "Sphere"
    PROJECTIVE_PLANE = "ProjectivePlane"
    CYLINDER = "Cylinder"
    MOBIUS_STRIP = "MobiusStrip"
    OTHER = "Other"

    @staticmethod
    def orientable_genus(g: int) -> str:
        return f"OrientableGenus({g})"

    @staticmethod
    def non_orientable_genus(k: int) -> str:
        return f"NonOrientableGenus({k})"


@dataclass(frozen=True)
class TopologyClass:
    euler: int
    components: int
    orientable: Tuple[bool, ...]
    boundary_curves: Tuple[int, ...]
    component_euler: Tuple[int, ...]
    kind: str
    # orientable genus for orientable, number of cross-caps for non-orientable; None unless connected
    genus: Optional[int]

    @property
    def is_disc(self) -> bool:
        return self.kind == SurfaceKind.DISC

    @property
    def is_orientable(self) -> bool:
        return all(self.orientable)

    @property
    def total_boundary_curves(self) -> int:
        return sum(self.boundary_curves)

    def csv_row(self) -> str:
        orientable = str(self.is_orientable).lower()
        return f"{self.euler},{self.components},{orientable},{self.total_boundary_curves},{self.kind}"


CSV_HEADER = "chi,components,orientable,boundary,kind"


def _component_kind(euler: int, orientable: bool, boundary: int) -> Tuple[str, int]:
    if orientable:
        genus = (2 - euler - boundary) // 2
        if boundary == 0 and euler == 2:
            return SurfaceKind.SPHERE, 0
        if boundary == 1 and euler == 1:
            return SurfaceKind.DISC, 0
        if boundary == 2 and euler == 0:
            return SurfaceKind.CYLINDER, 0
        return SurfaceKind.orientable_genus(genus), genus

    crosscaps = 2 - euler - boundary
    if boundary == 0 and euler == 1:
        return SurfaceKind.PROJECTIVE_PLANE, 1
    if boundary == 1 and euler == 0:
        return SurfaceKind.MOBIUS_STRIP, 1
    return SurfaceKind.non_orientable_genus(crosscaps), crosscaps


def classify_surface(c: SurfaceComplex) -> TopologyClass:
    num_pieces = len(c.pieces)
    if num_pieces == 0:
        return TopologyClass(0, 0, (), (), (), SurfaceKind.OTHER, None)

    # parity 1 between two pieces means their stored cyclic orders disagree with a consistent orientation
    pieces_ds = DisjointSet(num_pieces)
    for m in c.matches:
        pieces_ds.union(m.piece_a, m.piece_b, 1 if m.same_direction else 0)

    roots = sorted({pieces_ds.find(i)[0] for i in range(num_pieces)})
    comp_of_root = {r: k for k, r in enumerate(roots)}
    comp = [comp_of_root[pieces_ds.find(i)[0]] for i in range(num_pieces)]
    num_components = len(roots)

    euler = [0] * num_components
    for i in range(num_pieces):
        euler[comp[i]] += 1
    for m in c.matches:
        euler[comp[m.piece_a]] -= 1
    for p_idx, _ in c.boundary_sides:
        euler[comp[p_idx]] -= 1

    point_comp = {}
    for p_idx, piece_sides in enumerate(c.sides):
        for s in piece_sides:
            point_comp[c.point_class[s.start]] = comp[p_idx]
    for k in point_comp.values():
        euler[k] += 1

    # boundary curves: boundary sides chained through shared corner classes
    bdry_ds = DisjointSet(len(c.boundary_sides))
    by_point = {}
    for idx, (p_idx, s_idx) in enumerate(c.boundary_sides):
        s = c.sides[p_idx][s_idx]
        for pt in (s.start, s.end):
            cls = c.point_class[pt]
            if cls in by_point:
                bdry_ds.union(idx, by_point[cls])
            else:
                by_point[cls] = idx
    boundary = [0] * num_components
    for root in {bdry_ds.find(i)[0] for i in range(len(c.boundary_sides))}:
        p_idx, _ = c.boundary_sides[root]
        boundary[comp[p_idx]] += 1

    orientable = tuple(not pieces_ds.conflict[r] for r in roots)

    if num_components == 1:
        kind, genus = _component_kind(euler[0], orientable[0], boundary[0])
    else:
        kind, genus = SurfaceKind.OTHER, None

    return TopologyClass(
        euler=sum(euler),
        components=num_components,
        orientable=orientable,
        boundary_curves=tuple(boundary),
        component_euler=tuple(euler),
        kind=kind,
        genus=genus,
    )


def euler_characteristic_linear(t: Triangulation, v: Sequence[int], skeleton: SkeletonData = None) -> Fraction:
    """
    Euler characteristic as a linear functional of the coordinates: each piece contributes one face, minus half
    of every arc on an internal face and all of every arc on a boundary face, plus 1/d for each corner on an edge
    of degree d.
    """
    skeleton = skeleton or compute_skeleton(t)
    total = Fraction(0)
    for tet in range(t.n):
        base = COORDS_PER_TET * tet

        def side_weight(face: int) -> Fraction:
            return Fraction(1) if t.is_boundary(tet, face) else Fraction(1, 2)

        def corner_weight(a: int, b: int) -> Fraction:
            return Fraction(1, skeleton.edge_degree(skeleton.edge_of(tet, a, b)))

        for vertex in range(4):
            if v[base + vertex]:
                others = [w for w in range(4) if w != vertex]
                contrib = 1 - sum(side_weight(f) for f in others) + sum(corner_weight(vertex, w) for w in others)
                total += v[base + vertex] * contrib

        for q, ((a, b), (c, d)) in enumerate(QUAD_PAIRS):
            if v[base + 4 + q]:
                contrib = 1 - sum(side_weight(f) for f in range(4))
                contrib += sum(corner_weight(x, y) for x, y in ((a, c), (c, b), (b, d), (d, a)))
                total += v[base + 4 + q] * contrib
    return total


def vertex_link_vector(t: Triangulation, orbit: int, skeleton: SkeletonData = None) -> NormalVector:
    skeleton = skeleton or compute_skeleton(t)
    v = [0] * (COORDS_PER_TET * t.n)
    for tet, vertex in skeleton.vertex_orbits[orbit]:
        v[COORDS_PER_TET * tet + vertex] = 1
    return tuple(v)


def is_vertex_linking(t: Triangulation, v: Sequence[int], skeleton: SkeletonData = None) -> bool:
    require_admissible(t, v)
    skeleton = skeleton or compute_skeleton(t)
    v = tuple(v)
    return any(v == vertex_link_vector(t, orbit, skeleton) for orbit in range(skeleton.num_vertices))


def classify_vector(t: Triangulation, v: Sequence[int], check: bool = True) -> TopologyClass:
    return classify_surface(reconstruct_surface(t, v, check=check))
