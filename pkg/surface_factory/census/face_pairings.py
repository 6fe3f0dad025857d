"""
Connected face pairing multigraphs up to isomorphism, the unit of work of a census.

A graph on n nodes is stored as the upper triangle of its symmetric adjacency matrix, diagonal entries counting loops.
Each tetrahedron has four faces, so a node carries at most four arc ends (a loop uses two).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from surface_factory.utils.typing import FaceKey
from surface_factory.utils.utils import log

FACES_PER_TET = 4


def _positions(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


@dataclass(frozen=True)
class CensusGraph:
    n: int
    # upper triangle of the adjacency matrix, row by row
    entries: Tuple[int, ...]

    @property
    def graph_id(self) -> str:
        """Stable text id, safe to use as a file name."""
        return f"{self.n}-" + "".join(str(x) for x in self.entries)

    def arcs(self) -> List[Tuple[int, int]]:
        result = []
        for (i, j), count in zip(_positions(self.n), self.entries):
            result.extend([(i, j)] * count)
        return result

    def degrees(self) -> Tuple[int, ...]:
        deg = [0] * self.n
        for i, j in self.arcs():
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    @property
    def is_closed(self) -> bool:
        return all(d == FACES_PER_TET for d in self.degrees())

    def face_assignment(self) -> List[Tuple[FaceKey, FaceKey]]:
        """
        Face slots used by every arc. Tetrahedron vertices can always be relabelled so that a node with d arc ends
        uses faces 0..d-1, so nothing is lost by filling faces in order.
        """
        next_face = [0] * self.n
        result = []
        for i, j in self.arcs():
            fi = next_face[i]
            next_face[i] += 1
            fj = next_face[j]
            next_face[j] += 1
            result.append(((i, fi), (j, fj)))
        return result

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.arcs())
        return g


def _canonical_entries(n: int, matrix: List[List[int]]) -> Tuple[int, ...]:
    positions = _positions(n)
    return max(tuple(matrix[p[i]][p[j]] for i, j in positions) for p in itertools.permutations(range(n)))


def _spend(free_faces: List[int], i: int, j: int, c: int) -> None:
    if i == j:
        free_faces[i] -= 2 * c
    else:
        free_faces[i] -= c
        free_faces[j] -= c


def _matrices(n: int, closed: bool):
    positions = _positions(n)
    matrix = [[0] * n for _ in range(n)]
    free_faces = [FACES_PER_TET] * n

    def rec(k: int):
        if k == len(positions):
            if not closed or all(b == 0 for b in free_faces):
                yield matrix
            return

        i, j = positions[k]
        top = free_faces[i] // 2 if i == j else min(free_faces[i], free_faces[j])
        for c in range(top + 1):
            _spend(free_faces, i, j, c)
            matrix[i][j] = matrix[j][i] = c
            # row i is complete once its last entry is placed, a closed graph uses all four faces by then
            if not (closed and j == n - 1 and free_faces[i] != 0):
                yield from rec(k + 1)
            _spend(free_faces, i, j, -c)
        matrix[i][j] = matrix[j][i] = 0

    yield from rec(0)


def enumerate_census_graphs(n: int, closed: bool) -> List[CensusGraph]:
    """
    Connected face pairing graphs on n nodes, one per isomorphism class, in a fixed order.
    Closed graphs use every face, bounded graphs leave at least one face free.
    """
    found = set()
    for matrix in _matrices(n, closed):
        entries = _canonical_entries(n, matrix)
        if entries in found:
            continue

        graph = CensusGraph(n, entries)
        if not nx.is_connected(graph.to_networkx()):
            continue
        if not closed and sum(graph.degrees()) == FACES_PER_TET * n:
            continue
        found.add(entries)

    graphs = [CensusGraph(n, entries) for entries in sorted(found, reverse=True)]
    log.debug("n=%d %s: %d face pairing graphs", n, "closed" if closed else "bounded", len(graphs))
    return graphs
