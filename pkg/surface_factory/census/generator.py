"""
Census generation: every valid connected triangulation of a given size and kind, once up to relabelling.

Work is split by face pairing graph. For one graph the gluing permutations are chosen arc by arc, abandoning a partial
assignment as soon as some edge is identified with itself in reverse or some vertex link closes up as anything
other than a sphere.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from surface_factory.census.errors import CensusTooLarge, InvalidCensusQuery
from surface_factory.census.face_pairings import CensusGraph, enumerate_census_graphs
from surface_factory.triangulation.perm import FACE_VERTICES, edge_index, gluing_perms
from surface_factory.triangulation.signature import canonical_signature
from surface_factory.triangulation.triangulation import Triangulation, TriangulationBuilder
from surface_factory.triangulation.validity import ValidityReport, validate
from surface_factory.utils.utils import log, log_every_n

DEFAULT_CENSUS_CEILING = 5


class CensusKind:
    CLOSED = "closed"
    BOUNDED = "bounded"


CENSUS_KINDS = (CensusKind.CLOSED, CensusKind.BOUNDED)


@dataclass(frozen=True)
class CensusQuery:
    n: int
    kind: str
    one_vertex: bool = False
    # only changes which surfaces the statistics count
    discs_only: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise InvalidCensusQuery(f"census size must be at least 1, got {self.n}")
        if self.kind not in CENSUS_KINDS:
            raise InvalidCensusQuery(f"census kind must be one of {CENSUS_KINDS}, got {self.kind!r}")

    @property
    def closed(self) -> bool:
        return self.kind == CensusKind.CLOSED

    def as_dict(self) -> Dict:
        return dict(n=self.n, kind=self.kind, one_vertex=self.one_vertex, discs_only=self.discs_only)


def check_census_size(query: CensusQuery, ceiling: int = DEFAULT_CENSUS_CEILING, allow_large: bool = False) -> None:
    if query.n > ceiling and not allow_large:
        raise CensusTooLarge(
            f"census at n={query.n} exceeds the configured ceiling {ceiling}, pass --allow_large to run it anyway"
        )


def is_member(report: ValidityReport, query: CensusQuery) -> bool:
    """Connected, valid 3-manifold, closed or with some boundary as asked, one vertex if asked."""
    if not report.is_3manifold:
        return False
    if report.is_closed != query.closed:
        return False
    if query.one_vertex and not report.is_one_vertex:
        return False
    return True


class _EdgeParity:
    """Union-find over tetrahedron edges with orientation parity, by rank and without path compression to allow undo."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.parity = [0] * size
        self.rank = [0] * size

    def find(self, x: int) -> Tuple[int, int]:
        par = 0
        while self.parent[x] != x:
            par ^= self.parity[x]
            x = self.parent[x]
        return x, par

    def union(self, a: int, b: int, relation: int):
        """Undo token, () if nothing changed, None on a conflict."""
        root_a, par_a = self.find(a)
        root_b, par_b = self.find(b)
        if root_a == root_b:
            return () if par_a ^ par_b == relation else None

        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.parity[root_b] = par_a ^ par_b ^ relation
        bumped = self.rank[root_a] == self.rank[root_b]
        if bumped:
            self.rank[root_a] += 1
        return root_b, root_a, bumped

    def undo(self, token) -> None:
        if not token:
            return
        root_b, root_a, bumped = token
        self.parent[root_b] = root_b
        self.parity[root_b] = 0
        if bumped:
            self.rank[root_a] -= 1

    def glue(self, tet: int, face: int, target_tet: int, p) -> Optional[list]:
        """Identify the three edges of a face with their images. None if some edge closes up reversed."""
        tokens = []
        a, b, c = FACE_VERTICES[face]
        for x, y in ((a, b), (a, c), (b, c)):
            relation = 0 if p[x] < p[y] else 1
            token = self.union(6 * tet + edge_index(x, y), 6 * target_tet + edge_index(p[x], p[y]), relation)
            if token is None:
                for t in reversed(tokens):
                    self.undo(t)
                return None
            tokens.append(token)
        return tokens


class _VertexLinks:
    """
    Union-find over tetrahedron corners, each corner being one triangle of a vertex link, with the number of
    unglued triangle sides per class. A class with no unglued sides is a finished closed link and must be a sphere.
    """

    def __init__(self, n: int, edges: _EdgeParity):
        self.n = n
        self.edges = edges
        self.parent = list(range(4 * n))
        self.rank = [0] * (4 * n)
        self.free_sides = [3] * (4 * n)

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def _union(self, a: int, b: int):
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            self.free_sides[root_a] -= 2
            return root_a, None, False

        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.free_sides[root_a] += self.free_sides[root_b] - 2
        bumped = self.rank[root_a] == self.rank[root_b]
        if bumped:
            self.rank[root_a] += 1
        return root_a, root_b, bumped

    def undo(self, token) -> None:
        root_a, root_b, bumped = token
        self.free_sides[root_a] += 2
        if root_b is None:
            return
        self.free_sides[root_a] -= self.free_sides[root_b]
        self.parent[root_b] = root_b
        if bumped:
            self.rank[root_a] -= 1

    def _closed_link_is_sphere(self, root: int) -> bool:
        # a closed link has F triangles and 3F/2 sides, so twice its Euler characteristic is 2V - F
        corners = [c for c in range(4 * self.n) if self.find(c) == root]
        ends = set()
        for corner in corners:
            tet, v = divmod(corner, 4)
            for w in range(4):
                if w == v:
                    continue
                orbit, parity = self.edges.find(6 * tet + edge_index(v, w))
                ends.add((orbit, parity ^ (0 if v < w else 1)))
        return 2 * len(ends) - len(corners) == 4

    def glue(self, tet: int, face: int, target_tet: int, p) -> Optional[list]:
        """Identify the link triangle sides of a face with their images. None if a link closes up as a non-sphere."""
        tokens = [self._union(4 * tet + v, 4 * target_tet + p[v]) for v in FACE_VERTICES[face]]
        for root in {token[0] for token in tokens}:
            root = self.find(root)
            if self.free_sides[root] == 0 and not self._closed_link_is_sphere(root):
                for token in reversed(tokens):
                    self.undo(token)
                return None
        return tokens


@dataclass(frozen=True)
class CensusMember:
    signature: str
    triangulation: Triangulation
    num_vertices: int


@dataclass
class GraphSearchStats:
    leaves: int = 0
    pruned: int = 0
    valid: int = 0


def search_graph(
    graph: CensusGraph, query: CensusQuery, stats: Optional[GraphSearchStats] = None
) -> List[CensusMember]:
    """Members of the census with this face pairing graph, sorted by signature."""
    stats = stats if stats is not None else GraphSearchStats()
    assignment = graph.face_assignment()
    builder = TriangulationBuilder(graph.n)
    edges = _EdgeParity(6 * graph.n)
    links = _VertexLinks(graph.n, edges)
    found: Dict[str, CensusMember] = dict()

    def rec(k: int) -> None:
        if k == len(assignment):
            stats.leaves += 1
            t = builder.build()
            report = validate(t)
            if is_member(report, query):
                stats.valid += 1
                signature = canonical_signature(t)
                if signature not in found:
                    found[signature] = CensusMember(signature, t, report.num_vertices)
            log_every_n(10000, logging.DEBUG, "graph %s: %d leaves searched", graph.graph_id, stats.leaves)
            return

        (tet, face), (target_tet, target_face) = assignment[k]
        for p in gluing_perms(face, target_face):
            edge_tokens = edges.glue(tet, face, target_tet, p)
            if edge_tokens is None:
                stats.pruned += 1
                continue
            link_tokens = links.glue(tet, face, target_tet, p)
            if link_tokens is None:
                stats.pruned += 1
                for token in reversed(edge_tokens):
                    edges.undo(token)
                continue

            builder.join(tet, face, target_tet, p)
            rec(k + 1)
            builder.unjoin(tet, face)
            for token in reversed(link_tokens):
                links.undo(token)
            for token in reversed(edge_tokens):
                edges.undo(token)

    rec(0)
    log.debug(
        f"Graph {graph.graph_id}: {stats.leaves} leaves, {stats.pruned} pruned, "
        f"{stats.valid} valid, {len(found)} distinct"
    )
    return [found[signature] for signature in sorted(found)]


def census_graphs(query: CensusQuery) -> List[CensusGraph]:
    return enumerate_census_graphs(query.n, query.closed)


def generate_census(
    query: CensusQuery, ceiling: int = DEFAULT_CENSUS_CEILING, allow_large: bool = False
) -> Iterator[Triangulation]:
    """Census members in signature order."""
    check_census_size(query, ceiling, allow_large)

    members: List[CensusMember] = []
    for graph in census_graphs(query):
        members.extend(search_graph(graph, query))

    for member in sorted(members, key=lambda m: m.signature):
        yield member.triangulation
