"""
Independent oracle for vertex normal surfaces: a vector is a vertex surface iff its support S is admissible and
the matching equations restricted to the columns of S have a one-dimensional kernel spanned by a vector with
full support on S. Exact rational kernels come from sympy.
"""

import itertools
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

import sympy

from surface_factory.enumeration.vertex_surfaces import TooLarge, VertexSurfaceSet, check_vertex_surfaces
from surface_factory.normal.coords import COORDS_PER_TET
from surface_factory.normal.matching import matching_matrix
from surface_factory.triangulation.triangulation import Triangulation
from surface_factory.utils.typing import NormalVector
from surface_factory.utils.utils import log

MAX_ORACLE_DIMENSION = 28


def _local_supports() -> List[int]:
    """The 64 admissible supports inside one tetrahedron: any triangles plus at most one quad type."""
    result = []
    for tris in range(16):
        for quad in (None, 0, 1, 2):
            result.append(tris if quad is None else tris | (1 << (4 + quad)))
    return result


def _candidate_supports(n: int) -> List[int]:
    local = _local_supports()
    masks = []
    for combo in itertools.product(local, repeat=n):
        mask = 0
        for tet, m in enumerate(combo):
            mask |= m << (COORDS_PER_TET * tet)
        if mask:
            masks.append(mask)
    return sorted(masks, key=lambda m: (bin(m).count("1"), m))


def _kernel_vector(rows: Sequence[Sequence[int]], columns: List[int]) -> Tuple[int, ...]:
    """Primitive positive integer kernel vector with full support on columns, or () if there is none."""
    restricted = [[row[c] for c in columns] for row in rows]
    restricted = [r for r in restricted if any(r)]
    matrix = sympy.Matrix(restricted) if restricted else sympy.zeros(1, len(columns))

    kernel = matrix.nullspace()
    if len(kernel) != 1:
        return ()

    entries = list(kernel[0])
    if any(e == 0 for e in entries):
        return ()
    if all(e < 0 for e in entries):
        entries = [-e for e in entries]
    elif not all(e > 0 for e in entries):
        return ()

    denominators = reduce(sympy.ilcm, (sympy.fraction(e)[1] for e in entries), 1)
    ints = [int(e * denominators) for e in entries]
    g = reduce(gcd, ints)
    return tuple(x // g for x in ints)


def _forces_zero(rows: Sequence[Sequence[int]], columns: List[int]) -> bool:
    """A row with a single non-zero entry on the support pins that coordinate to zero."""
    for row in rows:
        if sum(1 for c in columns if row[c]) == 1:
            return True
    return False


def brute_force_vertex_surfaces(t: Triangulation) -> VertexSurfaceSet:
    dim = COORDS_PER_TET * t.n
    if dim > MAX_ORACLE_DIMENSION:
        raise TooLarge(f"Brute force oracle needs 7n <= {MAX_ORACLE_DIMENSION}, got 7n = {dim}")

    system = matching_matrix(t)
    rows = [r.coefficients for r in system.rows if any(r.coefficients)]

    found_masks: List[int] = []
    surfaces: List[NormalVector] = []
    candidates = _candidate_supports(t.n)
    for mask in candidates:
        # a proper superset of a vertex support carries that vertex in its kernel, so it cannot be extremal
        if any(m & mask == m for m in found_masks):
            continue

        columns = [i for i in range(dim) if mask >> i & 1]
        if _forces_zero(rows, columns):
            continue

        kernel = _kernel_vector(rows, columns)
        if not kernel:
            continue

        v = [0] * dim
        for c, x in zip(columns, kernel):
            v[c] = x
        surfaces.append(tuple(v))
        found_masks.append(mask)

    log.debug("Brute force checked %d supports, found %d vertex surfaces", len(candidates), len(surfaces))
    result = VertexSurfaceSet(n=t.n, surfaces=tuple(sorted(surfaces)))
    check_vertex_surfaces(result, system)
    return result
