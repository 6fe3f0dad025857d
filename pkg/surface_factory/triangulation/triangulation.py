from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from surface_factory.triangulation.perm import IDENTITY, Perm4, compose, inverse, is_perm
from surface_factory.utils.errors import SurfaceFactoryError
from surface_factory.utils.typing import FaceKey


class TriangulationError(SurfaceFactoryError):
    pass


class GluingSyntaxError(TriangulationError):
    pass


class InconsistentGluing(TriangulationError):
    pass


class SelfGluedFace(TriangulationError):
    pass


class InvalidTriangulation(TriangulationError):
    pass


class NotABoundaryFace(TriangulationError):
    pass


@dataclass(frozen=True)
class FaceGluing:
    target_tet: int
    target_face: int
    vertex_map: Perm4


@dataclass(frozen=True)
class InternalFace:
    """One identified pair of faces, stored with the smaller (tet, face) key as the source."""

    tet: int
    face: int
    target_tet: int
    target_face: int
    vertex_map: Perm4

    @property
    def key(self) -> FaceKey:
        return self.tet, self.face


class Triangulation:
    """
    n abstract tetrahedra plus a partial pairing of their faces.

    Instances are immutable once constructed; the constructor checks the involution, that every vertex map
    carries the source face onto the target face, and that no face is glued to itself.
    """

    __slots__ = ("_n", "_gluings", "_hash")

    def __init__(self, n: int, gluings: Sequence[Optional[FaceGluing]]):
        if n < 1:
            raise TriangulationError(f"A triangulation needs at least one tetrahedron, got {n=}")
        if len(gluings) != 4 * n:
            raise TriangulationError(f"Expected {4 * n} gluing slots, got {len(gluings)}")

        self._n = n
        self._gluings: Tuple[Optional[FaceGluing], ...] = tuple(gluings)
        self._hash = None
        self._check()

    def _check(self) -> None:
        for tet in range(self._n):
            for face in range(4):
                g = self._gluings[4 * tet + face]
                if g is None:
                    continue
                if not (0 <= g.target_tet < self._n and 0 <= g.target_face < 4):
                    raise InconsistentGluing(f"{tet}:{face} glued to a missing face {g.target_tet}:{g.target_face}")
                if (g.target_tet, g.target_face) == (tet, face):
                    raise SelfGluedFace(f"Face {face} of tetrahedron {tet} is glued to itself")
                if not is_perm(g.vertex_map) or g.vertex_map[face] != g.target_face:
                    raise InconsistentGluing(
                        f"Vertex map {g.vertex_map} of {tet}:{face} does not carry the face onto {g.target_face}"
                    )

                back = self._gluings[4 * g.target_tet + g.target_face]
                if back is None or (back.target_tet, back.target_face) != (tet, face):
                    raise InconsistentGluing(f"{tet}:{face} -> {g.target_tet}:{g.target_face} has no matching partner")
                if compose(back.vertex_map, g.vertex_map) != IDENTITY:
                    raise InconsistentGluing(
                        f"Partner map of {tet}:{face} is not the inverse of {g.vertex_map} (got {back.vertex_map})"
                    )

    @property
    def n(self) -> int:
        return self._n

    @property
    def gluings(self) -> Tuple[Optional[FaceGluing], ...]:
        return self._gluings

    def gluing(self, tet: int, face: int) -> Optional[FaceGluing]:
        return self._gluings[4 * tet + face]

    def is_boundary(self, tet: int, face: int) -> bool:
        return self._gluings[4 * tet + face] is None

    def boundary_faces(self) -> List[FaceKey]:
        return [(tet, face) for tet in range(self._n) for face in range(4) if self.is_boundary(tet, face)]

    def internal_faces(self) -> List[InternalFace]:
        """Each identified pair exactly once, ordered by the source (tet, face) key."""
        result = []
        for tet in range(self._n):
            for face in range(4):
                g = self.gluing(tet, face)
                if g is not None and (tet, face) < (g.target_tet, g.target_face):
                    result.append(InternalFace(tet, face, g.target_tet, g.target_face, g.vertex_map))
        return result

    def is_closed(self) -> bool:
        return all(g is not None for g in self._gluings)

    def face_slots(self) -> Iterator[Tuple[int, int, Optional[FaceGluing]]]:
        for tet in range(self._n):
            for face in range(4):
                yield tet, face, self._gluings[4 * tet + face]

    def relabel(self, tet_perm: Sequence[int], vertex_perms: Sequence[Perm4]) -> Triangulation:
        """
        Isomorphic copy: old tetrahedron i becomes tet_perm[i], and its vertex v becomes vertex_perms[i][v].
        """
        new_gluings: List[Optional[FaceGluing]] = [None] * (4 * self._n)
        for tet, face, g in self.face_slots():
            if g is None:
                continue
            p_src = vertex_perms[tet]
            p_dst = vertex_perms[g.target_tet]
            new_map = compose(p_dst, compose(g.vertex_map, inverse(p_src)))
            new_gluings[4 * tet_perm[tet] + p_src[face]] = FaceGluing(
                tet_perm[g.target_tet], p_dst[g.target_face], new_map
            )
        return Triangulation(self._n, new_gluings)

    def __eq__(self, other) -> bool:
        return isinstance(other, Triangulation) and self._n == other._n and self._gluings == other._gluings

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._gluings))
        return self._hash

    def __repr__(self) -> str:
        return f"Triangulation(n={self._n}, boundary_faces={len(self.boundary_faces())})"


class TriangulationBuilder:
    """Mutable gluing table; `join` fills both sides of an identification at once."""

    def __init__(self, n: int = 0):
        self.n = n
        self._gluings: List[Optional[FaceGluing]] = [None] * (4 * n)

    def add_tetrahedra(self, count: int = 1) -> int:
        """Returns the index of the first new tetrahedron."""
        first = self.n
        self.n += count
        self._gluings.extend([None] * (4 * count))
        return first

    def add_triangulation(self, t: Triangulation) -> int:
        """Disjoint union, returns the index offset of the copied tetrahedra."""
        offset = self.add_tetrahedra(t.n)
        for tet, face, g in t.face_slots():
            if g is not None:
                glued = FaceGluing(g.target_tet + offset, g.target_face, g.vertex_map)
                self._gluings[4 * (tet + offset) + face] = glued
        return offset

    def is_boundary(self, tet: int, face: int) -> bool:
        return self._gluings[4 * tet + face] is None

    def join(self, tet: int, face: int, target_tet: int, vertex_map: Perm4) -> None:
        target_face = vertex_map[face]
        if not self.is_boundary(tet, face) or not self.is_boundary(target_tet, target_face):
            raise InconsistentGluing(f"Cannot join {tet}:{face} to {target_tet}:{target_face}, already glued")
        if (tet, face) == (target_tet, target_face):
            raise SelfGluedFace(f"Face {face} of tetrahedron {tet} cannot be glued to itself")
        self._gluings[4 * tet + face] = FaceGluing(target_tet, target_face, tuple(vertex_map))
        self._gluings[4 * target_tet + target_face] = FaceGluing(tet, face, inverse(tuple(vertex_map)))

    def unjoin(self, tet: int, face: int) -> None:
        g = self._gluings[4 * tet + face]
        if g is not None:
            self._gluings[4 * g.target_tet + g.target_face] = None
            self._gluings[4 * tet + face] = None

    def gluing(self, tet: int, face: int) -> Optional[FaceGluing]:
        return self._gluings[4 * tet + face]

    def build(self) -> Triangulation:
        return Triangulation(self.n, self._gluings)