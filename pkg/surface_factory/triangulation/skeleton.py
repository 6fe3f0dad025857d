"""
Vertex and edge identification orbits of a triangulation, plus the combinatorial vertex links.

Corners are (tet, vertex) pairs, tetrahedron edges are (tet, edge index) with edges numbered as in perm.EDGES.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from surface_factory.triangulation.perm import EDGES, FACE_VERTICES, edge_index
from surface_factory.triangulation.triangulation import Triangulation
from surface_factory.utils.typing import FaceKey


class LinkClass:
    SPHERE = "Sphere"
    DISC = "Disc"
    OTHER = "Other"


class DisjointSet:
    """Union-find with a parity bit per element relative to its root, conflicts are recorded on roots."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.parity = [0] * size
        self.conflict = [False] * size

    def find(self, x: int) -> Tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x

        # compress, accumulating parity from the top of the path down
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, a: int, b: int, relation: int = 0) -> bool:
        """Join a and b so that parity(a) ^ parity(b) == relation. Returns False on a parity conflict."""
        root_a, par_a = self.find(a)
        root_b, par_b = self.find(b)
        if root_a == root_b:
            if par_a ^ par_b != relation:
                self.conflict[root_a] = True
                return False
            return True

        if root_a > root_b:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.parity[root_b] = par_a ^ par_b ^ relation
        self.conflict[root_a] = self.conflict[root_a] or self.conflict[root_b]
        return True

    def groups(self) -> Dict[int, List[int]]:
        result: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            root, _ = self.find(x)
            result.setdefault(root, []).append(x)
        return result


@dataclass(frozen=True)
class VertexLink:
    euler: int
    boundary_sides: int
    link_class: str


@dataclass(frozen=True)
class SkeletonData:
    n: int
    # orbits are sorted lists of members, orbits themselves ordered by their minimum member
    vertex_orbits: Tuple[Tuple[Tuple[int, int], ...], ...]
    # members are (tet, edge index, sign), sign is the orientation of the tetrahedron edge (low to high vertex)
    # relative to the orbit representative
    edge_orbits: Tuple[Tuple[Tuple[int, int, int], ...], ...]
    boundary_faces: FrozenSet[FaceKey]
    edge_valid: Tuple[bool, ...]
    edge_boundary: Tuple[bool, ...]
    vertex_boundary: Tuple[bool, ...]
    vertex_links: Tuple[VertexLink, ...]
    # lookups indexed by 4 * tet + vertex and 6 * tet + edge
    corner_orbit: Tuple[int, ...]
    edge_orbit: Tuple[int, ...]
    edge_sign: Tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_orbits)

    @property
    def num_edges(self) -> int:
        return len(self.edge_orbits)

    @property
    def link_class(self) -> Tuple[str, ...]:
        return tuple(link.link_class for link in self.vertex_links)

    def vertex_of(self, tet: int, vertex: int) -> int:
        return self.corner_orbit[4 * tet + vertex]

    def edge_of(self, tet: int, a: int, b: int) -> int:
        return self.edge_orbit[6 * tet + edge_index(a, b)]

    def edge_degree(self, orbit: int) -> int:
        """Number of tetrahedron edges in the orbit."""
        return len(self.edge_orbits[orbit])

    def edge_direction(self, tet: int, a: int, b: int) -> int:
        """+1 if walking a -> b in this tetrahedron follows the orbit's reference direction."""
        sign = self.edge_sign[6 * tet + edge_index(a, b)]
        return sign if a < b else -sign


def _vertex_orbits(t: Triangulation) -> DisjointSet:
    ds = DisjointSet(4 * t.n)
    for tet, face, g in t.face_slots():
        if g is None:
            continue
        for v in FACE_VERTICES[face]:
            ds.union(4 * tet + v, 4 * g.target_tet + g.vertex_map[v])
    return ds


def _edge_orbits(t: Triangulation) -> DisjointSet:
    ds = DisjointSet(6 * t.n)
    for tet, face, g in t.face_slots():
        if g is None:
            continue
        m = g.vertex_map
        for a, b in EDGES:
            if face in (a, b):
                continue
            reversed_ = 0 if m[a] < m[b] else 1
            ds.union(6 * tet + edge_index(a, b), 6 * g.target_tet + edge_index(m[a], m[b]), reversed_)
    return ds


def _link_of(t: Triangulation, corners: List[Tuple[int, int]]) -> VertexLink:
    """
    Builds the link of a vertex orbit from its corner triangles.

    Link triangle (tet, v) has one side per face f != v, and a link vertex (tet, v, w) near every edge vw.
    """
    corner_set = set(corners)
    sides_internal = 0
    sides_boundary = 0

    link_vertex_ids: Dict[Tuple[int, int, int], int] = {}
    for tet, v in corners:
        for w in range(4):
            if w != v:
                link_vertex_ids[(tet, v, w)] = len(link_vertex_ids)
    ds = DisjointSet(len(link_vertex_ids))

    for tet, v in corners:
        for face in range(4):
            if face == v:
                continue
            g = t.gluing(tet, face)
            if g is None:
                sides_boundary += 1
                continue

            sides_internal += 1
            m = g.vertex_map
            assert (g.target_tet, m[v]) in corner_set
            for w in FACE_VERTICES[face]:
                if w != v:
                    ds.union(link_vertex_ids[(tet, v, w)], link_vertex_ids[(g.target_tet, m[v], m[w])])

    num_link_vertices = len(ds.groups())
    euler = num_link_vertices - (sides_internal // 2 + sides_boundary) + len(corners)

    if euler == 2 and sides_boundary == 0:
        link_class = LinkClass.SPHERE
    elif euler == 1 and sides_boundary > 0:
        link_class = LinkClass.DISC
    else:
        link_class = LinkClass.OTHER
    return VertexLink(euler=euler, boundary_sides=sides_boundary, link_class=link_class)


def compute_skeleton(t: Triangulation) -> SkeletonData:
    vertex_ds = _vertex_orbits(t)
    edge_ds = _edge_orbits(t)

    vertex_groups = sorted(vertex_ds.groups().values(), key=min)
    corner_orbit = [0] * (4 * t.n)
    for orbit, group in enumerate(vertex_groups):
        for c in group:
            corner_orbit[c] = orbit

    edge_groups = sorted(edge_ds.groups().items(), key=lambda item: min(item[1]))
    edge_orbit = [0] * (6 * t.n)
    edge_sign = [1] * (6 * t.n)
    edge_orbits = []
    edge_valid = []
    for orbit, (root, group) in enumerate(edge_groups):
        members = []
        for e in group:
            _, parity = edge_ds.find(e)
            edge_orbit[e] = orbit
            edge_sign[e] = -1 if parity else 1
            members.append((e // 6, e % 6, edge_sign[e]))
        edge_orbits.append(tuple(members))
        edge_valid.append(not edge_ds.conflict[root])

    boundary_faces = frozenset(t.boundary_faces())
    edge_boundary = [False] * len(edge_orbits)
    vertex_boundary = [False] * len(vertex_groups)
    for tet, face in boundary_faces:
        fv = FACE_VERTICES[face]
        for v in fv:
            vertex_boundary[corner_orbit[4 * tet + v]] = True
        for a, b in ((fv[0], fv[1]), (fv[0], fv[2]), (fv[1], fv[2])):
            edge_boundary[edge_orbit[6 * tet + edge_index(a, b)]] = True

    vertex_orbits = tuple(tuple(tuple(divmod(c, 4)) for c in group) for group in vertex_groups)
    vertex_links = tuple(_link_of(t, list(orbit)) for orbit in vertex_orbits)

    return SkeletonData(
        n=t.n,
        vertex_orbits=vertex_orbits,
        edge_orbits=tuple(edge_orbits),
        boundary_faces=boundary_faces,
        edge_valid=tuple(edge_valid),
        edge_boundary=tuple(edge_boundary),
        vertex_boundary=tuple(vertex_boundary),
        vertex_links=vertex_links,
        corner_orbit=tuple(corner_orbit),
        edge_orbit=tuple(edge_orbit),
        edge_sign=tuple(edge_sign),
    )


def classify_vertex_links(t: Triangulation) -> Tuple[str, ...]:
    """Sphere, Disc or Other for every vertex orbit, in orbit order."""
    return compute_skeleton(t).link_class
