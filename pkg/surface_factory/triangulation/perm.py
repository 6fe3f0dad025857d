"""
Permutations of the four tetrahedron vertices.

A permutation is a plain tuple p with p[v] the image of vertex v. Faces are indexed by their opposite vertex,
so face f of a tetrahedron has vertices FACE_VERTICES[f].
"""

import itertools
from typing import Dict, List, Tuple

Perm4 = Tuple[int, int, int, int]

IDENTITY: Perm4 = (0, 1, 2, 3)

# all 24 permutations in lexicographic order, the index is used by signatures
ALL_PERMS: List[Perm4] = list(itertools.permutations(range(4)))
PERM_INDEX: Dict[Perm4, int] = {p: i for i, p in enumerate(ALL_PERMS)}

FACE_VERTICES: Tuple[Tuple[int, int, int], ...] = tuple(tuple(v for v in range(4) if v != f) for f in range(4))

# the six edges of a tetrahedron as ordered vertex pairs
EDGES: Tuple[Tuple[int, int], ...] = tuple(itertools.combinations(range(4), 2))
EDGE_INDEX: Dict[Tuple[int, int], int] = {e: i for i, e in enumerate(EDGES)}


def compose(a: Perm4, b: Perm4) -> Perm4:
    """a after b."""
    return a[b[0]], a[b[1]], a[b[2]], a[b[3]]


def inverse(p: Perm4) -> Perm4:
    inv = [0, 0, 0, 0]
    for v, image in enumerate(p):
        inv[image] = v
    return inv[0], inv[1], inv[2], inv[3]


def is_perm(p) -> bool:
    return len(p) == 4 and sorted(p) == [0, 1, 2, 3]


def edge_index(a: int, b: int) -> int:
    return EDGE_INDEX[(a, b) if a < b else (b, a)]


def face_map(src_face: int, dst_vertices: Tuple[int, int, int]) -> Perm4:
    """
    Full permutation sending the vertices of src_face (in increasing order) to dst_vertices
    and the opposite vertex of src_face to the remaining vertex.
    """
    p = [0, 0, 0, 0]
    for v, image in zip(FACE_VERTICES[src_face], dst_vertices):
        p[v] = image
    p[src_face] = 6 - sum(dst_vertices)
    return p[0], p[1], p[2], p[3]


def gluing_perms(src_face: int, dst_face: int) -> List[Perm4]:
    """The six permutations carrying src_face onto dst_face, lexicographically ordered."""
    return sorted(face_map(src_face, images) for images in itertools.permutations(FACE_VERTICES[dst_face]))
