"""
Double description enumeration of vertex normal surfaces.

Starting from the unit rays of the non-negative orthant, matching equations are intersected one at a time.
Rays are kept with their supports as integer bitmasks. Two rays on opposite sides of the new hyperplane are
combined only if they are adjacent, i.e. no other ray's support lies inside the union of theirs. Rays and pairs
whose support breaks the quadrilateral constraints are dropped immediately: every descendant of such a ray
carries a superset of its support.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from surface_factory.enumeration.vertex_surfaces import VertexSurfaceSet, check_vertex_surfaces, primitive
from surface_factory.normal.coords import COORDS_PER_TET, quad_index
from surface_factory.normal.matching import MatchingSystem, matching_matrix
from surface_factory.triangulation.pairing_graph import face_pairing_graph
from surface_factory.triangulation.triangulation import InvalidTriangulation, Triangulation
from surface_factory.triangulation.validity import validate
from surface_factory.utils.utils import log

_WORD_BITS = 64
_WORD_MASK = (1 << _WORD_BITS) - 1

# upper bound on the number of elements in one broadcast subset test
_MAX_BATCH_ELEMENTS = 1 << 22


def _bad_quad_masks(n: int) -> List[int]:
    masks = []
    for tet in range(n):
        for a in range(3):
            for b in range(a + 1, 3):
                masks.append((1 << quad_index(tet, a)) | (1 << quad_index(tet, b)))
    return masks


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _RaySet:
    def __init__(self, num_words: int):
        self.num_words = num_words
        self.vectors: List[Tuple[int, ...]] = []
        self.supports: List[int] = []

    def add(self, v: Tuple[int, ...], support: int) -> None:
        self.vectors.append(v)
        self.supports.append(support)

    def __len__(self):
        return len(self.vectors)

    def words(self, mask: int) -> List[int]:
        return [(mask >> (_WORD_BITS * w)) & _WORD_MASK for w in range(self.num_words)]

    def mask_array(self, masks: Sequence[int]) -> np.ndarray:
        return np.array([self.words(m) for m in masks], dtype=np.uint64).reshape(len(masks), self.num_words)


def _adjacent(rays: _RaySet, ray_words: np.ndarray, unions: List[int]) -> np.ndarray:
    """For every union of two supports, True iff exactly two rays (the pair itself) have support inside it."""
    result = np.zeros(len(unions), dtype=bool)
    if not unions:
        return result

    batch = max(1, _MAX_BATCH_ELEMENTS // max(1, len(rays) * rays.num_words))
    for start in range(0, len(unions), batch):
        chunk = unions[start : start + batch]
        complement = ~rays.mask_array(chunk)
        inside = ((ray_words[None, :, :] & complement[:, None, :]) == 0).all(axis=2)
        result[start : start + len(chunk)] = inside.sum(axis=1) == 2
    return result


def _row_order(t: Triangulation, system: MatchingSystem) -> List[Tuple[int, ...]]:
    """Rows of the faces along a BFS spanning tree of the face pairing graph first, zero rows dropped."""
    order = face_pairing_graph(t).bfs_arc_order() if t.internal_faces() else []
    rows = [r.coefficients for r in system.rows_for_faces(order)]

    seen = set()
    result = []
    for r in rows:
        if any(r) and r not in seen:
            seen.add(r)
            result.append(r)
    return result


def _intersect(rays: _RaySet, row: Tuple[int, ...], processed: int, bad_masks: List[int]) -> _RaySet:
    nonzero = [(i, c) for i, c in enumerate(row) if c]
    values = [sum(c * v[i] for i, c in nonzero) for v in rays.vectors]

    result = _RaySet(rays.num_words)
    pos, neg = [], []
    for idx, value in enumerate(values):
        if value == 0:
            result.add(rays.vectors[idx], rays.supports[idx])
        elif value > 0:
            pos.append(idx)
        else:
            neg.append(idx)

    if not pos or not neg:
        return result

    ray_words = rays.mask_array(rays.supports)
    # a 2-face of the cone cut by `processed` equations has support of size at most processed + 2
    max_support = processed + 2

    pairs, unions = [], []
    for p in pos:
        sp = rays.supports[p]
        for q in neg:
            union = sp | rays.supports[q]
            if _popcount(union) > max_support:
                continue
            if any(union & bad == bad for bad in bad_masks):
                continue
            pairs.append((p, q))
            unions.append(union)

    adjacent = _adjacent(rays, ray_words, unions)
    for (p, q), union, ok in zip(pairs, unions, adjacent):
        if not ok:
            continue
        a, b = values[p], -values[q]
        vp, vq = rays.vectors[p], rays.vectors[q]
        combined = primitive(tuple(a * y + b * x for x, y in zip(vp, vq)))
        result.add(combined, union)
    return result


def enumerate_vertex_surfaces(
    t: Triangulation, system: Optional[MatchingSystem] = None, check_valid: bool = True
) -> VertexSurfaceSet:
    if check_valid:
        report = validate(t)
        if not report.is_3manifold:
            raise InvalidTriangulation("; ".join(report.problems))

    system = system or matching_matrix(t)
    dim = COORDS_PER_TET * t.n
    num_words = (dim + _WORD_BITS - 1) // _WORD_BITS
    bad_masks = _bad_quad_masks(t.n)

    rays = _RaySet(num_words)
    for i in range(dim):
        unit = tuple(1 if j == i else 0 for j in range(dim))
        rays.add(unit, 1 << i)

    rows = _row_order(t, system)
    for processed, row in enumerate(rows):
        rays = _intersect(rays, row, processed, bad_masks)
        log.debug("Hyperplane %d/%d: %d rays", processed + 1, len(rows), len(rays))

    result = VertexSurfaceSet(n=t.n, surfaces=tuple(sorted(rays.vectors)))
    check_vertex_surfaces(result, system)
    return result
