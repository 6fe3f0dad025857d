"""Fixed triangulations given by explicit gluing tables."""

from surface_factory.normal.coords import vector_from_blocks
from surface_factory.triangulation.gluing_table import parse_gluing_table
from surface_factory.triangulation.triangulation import Triangulation

# eleven tetrahedra, a root with two binary levels below it and a leaf layer of folded tetrahedra
G_TABLE = """\
 0: -     1(012) 2(021) -
 1: 0(013) 3(012) 4(021) -
 2: 0(032) 5(012) 6(021) -
 3: 1(013) 7(231) 7(023) -
 4: 1(032) 8(231) 8(023) -
 5: 2(013) 9(231) 9(023) -
 6: 2(032) 10(231) 10(023) -
 7: -     -      3(023) 3(301)
 8: -     -      4(023) 4(301)
 9: -     -      5(023) 5(301)
10: -     -      6(023) 6(301)
"""

# designated face 0(012) and the arc type around its vertex 0
G_FACE = (0, 3)
G_ARC = 0
G_SIGMA = 61526
G_ALPHA = 31643

# four tetrahedra with boundary 3(013) and 3(123), a one-vertex torus
E_TABLE = """\
0: 2(231) 1(230) 2(023) 1(123)
1: 3(012) 2(102) 0(301) 0(123)
2: 1(103) 3(230) 0(023) 0(201)
3: 1(012) -      2(301) -
"""

E_BOUNDARY_1 = (3, 2)
E_BOUNDARY_2 = (3, 0)

# a cylinder and a Mobius band of E, both vertex normal surfaces
E_SURFACE_S = vector_from_blocks(
    [(0, 1, 1, 0, 0, 0, 0), (0, 1, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 0, 1), (0, 2, 0, 2, 0, 0, 0)]
)
E_SURFACE_T = vector_from_blocks(
    [(0, 0, 0, 0, 1, 0, 0), (1, 1, 0, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0, 0), (0, 1, 0, 1, 0, 0, 1)]
)


def build_g() -> Triangulation:
    return parse_gluing_table(G_TABLE)


def build_e() -> Triangulation:
    return parse_gluing_table(E_TABLE)
