from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from surface_factory.triangulation.triangulation import Triangulation

# (tet, face, target tet, target face) with (tet, face) < (target tet, target face)
Arc = Tuple[int, int, int, int]


@dataclass(frozen=True)
class FacePairingGraph:
    """Multigraph with a node per tetrahedron and an arc per identified face pair, loops allowed."""

    n: int
    arcs: Tuple[Arc, ...]

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        for tet, face, target_tet, target_face in self.arcs:
            g.add_edge(tet, target_tet, faces=(face, target_face))
        return g

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def bfs_arc_order(self, root: int = 0) -> List[int]:
        """Arc indices ordered so that arcs of a BFS spanning tree from root come first, then the rest."""
        g = self.to_networkx()
        tree_pairs = set()
        for u, v in nx.bfs_edges(g, root):
            tree_pairs.add((min(u, v), max(u, v)))

        tree_arcs, other_arcs = [], []
        depth = nx.single_source_shortest_path_length(g, root)
        for idx, (tet, _, target_tet, _) in enumerate(self.arcs):
            pair = (min(tet, target_tet), max(tet, target_tet))
            if pair in tree_pairs:
                tree_pairs.discard(pair)
                tree_arcs.append(idx)
            else:
                other_arcs.append(idx)

        def arc_depth(idx):
            tet, _, target_tet, _ = self.arcs[idx]
            return max(depth.get(tet, self.n), depth.get(target_tet, self.n)), idx

        return sorted(tree_arcs, key=arc_depth) + sorted(other_arcs, key=arc_depth)


def face_pairing_graph(t: Triangulation) -> FacePairingGraph:
    arcs = tuple((f.tet, f.face, f.target_tet, f.target_face) for f in t.internal_faces())
    return FacePairingGraph(n=t.n, arcs=arcs)
