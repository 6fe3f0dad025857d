from surface_factory.families.errors import ParameterOutOfRange
from surface_factory.triangulation.perm import face_map
from surface_factory.triangulation.triangulation import Triangulation, TriangulationBuilder


def build_binomial(n: int) -> Triangulation:
    """
    Closed 1-vertex triangulation with 2^n vertex normal surfaces: every tetrahedron folds i(012) onto i(013)
    and the tetrahedra form a cycle through i(123) -> (i+1)(230).
    """
    if n < 1:
        raise ParameterOutOfRange(f"binomial family needs n >= 1, got {n}")

    b = TriangulationBuilder(n)
    for i in range(n):
        b.join(i, 3, i, face_map(3, (0, 1, 3)))
        b.join(i, 0, (i + 1) % n, face_map(0, (2, 3, 0)))
    return b.build()
