from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from surface_factory.enumeration.double_description import enumerate_vertex_surfaces
from surface_factory.enumeration.vertex_surfaces import VertexSurfaceSet
from surface_factory.normal.coords import format_vector, parse_vector
from surface_factory.normal.matching import boundary_pattern
from surface_factory.topology.classify import classify_vector
from surface_factory.triangulation.gluing_table import format_gluing_table, parse_gluing_table
from surface_factory.triangulation.perm import FACE_VERTICES
from surface_factory.triangulation.triangulation import NotABoundaryFace, Triangulation
from surface_factory.utils.errors import SurfaceFactoryError
from surface_factory.utils.typing import FaceKey, NormalVector


@dataclass(frozen=True)
class ComplexityStats:
    sigma: int
    kappa: int
    sigma_discs: int
    kappa_discs: int


def complexity_stats(t: Triangulation, surfaces: Optional[VertexSurfaceSet] = None) -> ComplexityStats:
    surfaces = surfaces if surfaces is not None else enumerate_vertex_surfaces(t)
    discs = [v for v in surfaces if classify_vector(t, v, check=False).is_disc]
    return ComplexityStats(
        sigma=surfaces.sigma,
        kappa=surfaces.kappa,
        sigma_discs=len(discs),
        kappa_discs=max((max(v) for v in discs), default=0),
    )


def count_with_face_pattern(
    t: Triangulation, face: FaceKey, arc: int, surfaces: Optional[Sequence[NormalVector]] = None
) -> int:
    """
    Number of vertex surfaces meeting the boundary face only in arcs cutting off vertex `arc`, at least once.
    `arc` is a vertex of the face.
    """
    tet, f = face
    if not t.is_boundary(tet, f):
        raise NotABoundaryFace(f"Face {f} of tetrahedron {tet} is not a boundary face")
    if arc not in FACE_VERTICES[f]:
        raise SurfaceFactoryError(f"Vertex {arc} does not lie on face {f}")

    surfaces = surfaces if surfaces is not None else enumerate_vertex_surfaces(t)
    position = FACE_VERTICES[f].index(arc)

    count = 0
    for v in surfaces:
        pattern = boundary_pattern(t, v, face)
        if pattern[position] > 0 and all(x == 0 for i, x in enumerate(pattern) if i != position):
            count += 1
    return count


_HEADER_RE = re.compile(r"^n=(\d+) sigma=(\d+) kappa=(\d+)$")
_TRIANGULATION_MARKER = "# triangulation"


def format_surface_listing(t: Triangulation, surfaces: Sequence[NormalVector]) -> str:
    """
    Header line, one vector per line, then the source triangulation as comment lines so that a listing is
    self-contained for downstream classification.
    """
    kappa = max((max(v) for v in surfaces), default=0)
    lines = [f"n={t.n} sigma={len(surfaces)} kappa={kappa}"]
    lines.extend(format_vector(v) for v in surfaces)
    lines.append(_TRIANGULATION_MARKER)
    lines.extend(f"# {row}" for row in format_gluing_table(t).splitlines())
    return "\n".join(lines) + "\n"


def parse_surface_listing(text: str) -> Tuple[Optional[Triangulation], List[NormalVector]]:
    lines = [line.rstrip() for line in text.splitlines() if line.strip()]
    if not lines or not _HEADER_RE.match(lines[0]):
        raise SurfaceFactoryError("Surface listing must start with 'n=<n> sigma=<sigma> kappa=<kappa>'")
    n, sigma, _ = (int(x) for x in _HEADER_RE.match(lines[0]).groups())

    vectors: List[NormalVector] = []
    table_rows: List[str] = []
    in_table = False
    for line in lines[1:]:
        if line == _TRIANGULATION_MARKER:
            in_table = True
        elif in_table:
            table_rows.append(line.lstrip("#").strip())
        elif not line.startswith("#"):
            vectors.append(parse_vector(line))

    if len(vectors) != sigma:
        raise SurfaceFactoryError(f"Header announces {sigma} surfaces, found {len(vectors)}")
    t = parse_gluing_table("\n".join(table_rows)) if table_rows else None
    if t is not None and t.n != n:
        raise SurfaceFactoryError(f"Header says n={n} but the embedded triangulation has {t.n} tetrahedra")
    return t, vectors
