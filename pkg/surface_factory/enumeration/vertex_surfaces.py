from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from surface_factory.normal.coords import COORDS_PER_TET, satisfies_quad_constraints
from surface_factory.normal.matching import MatchingSystem
from surface_factory.utils.errors import SurfaceFactoryError
from surface_factory.utils.typing import NormalVector


class TooLarge(SurfaceFactoryError):
    pass


class EnumerationInvariantViolated(SurfaceFactoryError):
    pass


@dataclass(frozen=True)
class VertexSurfaceSet:
    """Minimal integer points of the admissible extremal rays, sorted lexicographically."""

    n: int
    surfaces: Tuple[NormalVector, ...]

    def __len__(self) -> int:
        return len(self.surfaces)

    def __iter__(self) -> Iterator[NormalVector]:
        return iter(self.surfaces)

    @property
    def sigma(self) -> int:
        return len(self.surfaces)

    @property
    def kappa(self) -> int:
        return max((max(v) for v in self.surfaces), default=0)


def support_mask(v: Sequence[int]) -> int:
    mask = 0
    for i, x in enumerate(v):
        if x:
            mask |= 1 << i
    return mask


def primitive(v: Sequence[int]) -> NormalVector:
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _require(condition: bool, msg: str) -> None:
    if not condition:
        raise EnumerationInvariantViolated(msg)


def check_vertex_surfaces(result: VertexSurfaceSet, system: MatchingSystem) -> None:
    """Invariants every enumeration must satisfy, whichever algorithm produced it."""
    n = result.n
    _require(result.sigma <= 64**n, f"{result.sigma} vertex surfaces exceed the 64^{n} bound")
    _require(list(result.surfaces) == sorted(result.surfaces), "vertex surfaces are not sorted")

    supports = set()
    for v in result.surfaces:
        _require(len(v) == COORDS_PER_TET * n, f"vector of length {len(v)} for {n} tetrahedra")
        _require(any(v), "zero vector reported as a surface")
        _require(min(v) >= 0, f"negative coordinate in {v}")
        _require(primitive(v) == tuple(v), f"non-primitive vector {v}")
        _require(satisfies_quad_constraints(v, n), f"vector {v} violates the quadrilateral constraints")
        _require(system.contains(v), f"vector {v} violates the matching equations")

        mask = support_mask(v)
        _require(mask not in supports, f"two vertex surfaces share the zero set of {v}")
        supports.add(mask)
