from surface_factory.families.errors import ParameterOutOfRange
from surface_factory.triangulation.perm import face_map
from surface_factory.triangulation.triangulation import Triangulation, TriangulationBuilder


def build_path(n: int) -> Triangulation:
    """Chain of n tetrahedra glued by i(012) -> (i+1)(013); every vertex normal surface is a disc."""
    if n < 1:
        raise ParameterOutOfRange(f"path family needs n >= 1, got {n}")

    b = TriangulationBuilder(n)
    for i in range(n - 1):
        b.join(i, 3, i + 1, face_map(3, (0, 1, 3)))
    return b.build()
