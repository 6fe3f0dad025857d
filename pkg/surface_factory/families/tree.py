"""
Tree doubling: two copies of a bounded triangulation joined to one new tetrahedron.

Every vertex surface of a copy meeting the designated face only in arcs around one vertex pairs up with every such
surface of the other copy across the new tetrahedron, so the designated count at least squares at each step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Tuple

from surface_factory.families.errors import PreconditionViolated
from surface_factory.families.tables import G_ALPHA, G_ARC, G_FACE, build_g
from surface_factory.triangulation.perm import FACE_VERTICES
from surface_factory.triangulation.skeleton import SkeletonData, compute_skeleton
from surface_factory.triangulation.triangulation import Triangulation, TriangulationBuilder
from surface_factory.triangulation.validity import validate
from surface_factory.utils.typing import FaceKey
from surface_factory.utils.utils import log

# the new tetrahedron is glued along faces 3 (012) and 2 (013), both sharing edge 01
ROOT_FACE_1 = 3
ROOT_FACE_2 = 2
# the next designated face is root(023), arcs around root vertex 0
ROOT_NEXT_FACE = 1
ROOT_NEXT_ARC = 0


@dataclass(frozen=True)
class TreeContext:
    triangulation: Triangulation
    face: FaceKey
    arc: int
    # lower bound on the number of vertex surfaces meeting `face` only in arcs around `arc`
    alpha: int

    @property
    def n(self) -> int:
        return self.triangulation.n


def _face_fully_identified(skeleton: SkeletonData, face: FaceKey) -> bool:
    tet, f = face
    return len({skeleton.vertex_of(tet, v) for v in FACE_VERTICES[f]}) == 1


def check_context(ctx: TreeContext, skeleton: SkeletonData = None) -> SkeletonData:
    tet, f = ctx.face
    if not ctx.triangulation.is_boundary(tet, f):
        raise PreconditionViolated(f"designated face {f} of tetrahedron {tet} is not a boundary face")
    if ctx.arc not in FACE_VERTICES[f]:
        raise PreconditionViolated(f"designated arc vertex {ctx.arc} does not lie on face {f}")

    skeleton = skeleton or compute_skeleton(ctx.triangulation)
    if _face_fully_identified(skeleton, ctx.face):
        raise PreconditionViolated(f"all three vertices of face {f} of tetrahedron {tet} are identified")
    return skeleton


def _attachment_order(skeleton: SkeletonData, ctx: TreeContext) -> List[Tuple[int, int]]:
    """Choices (x1, x2) for the image of root vertex 1 in each copy, preferred choice first."""
    tet, f = ctx.face
    w = ctx.arc
    a, b = (v for v in FACE_VERTICES[f] if v != w)

    same = skeleton.vertex_of
    if same(tet, w) == same(tet, a):
        preferred = (a, b)
    elif same(tet, w) == same(tet, b):
        preferred = (b, a)
    else:
        preferred = (a, a)

    rest = [combo for combo in itertools.product((a, b), repeat=2) if combo != preferred]
    return [preferred] + rest


def _attach(ctx: TreeContext, x1: int, x2: int) -> Tuple[Triangulation, int]:
    tet, f = ctx.face
    w = ctx.arc
    y1 = next(v for v in FACE_VERTICES[f] if v not in (w, x1))
    y2 = next(v for v in FACE_VERTICES[f] if v not in (w, x2))

    builder = TriangulationBuilder()
    copy_1 = builder.add_triangulation(ctx.triangulation)
    copy_2 = builder.add_triangulation(ctx.triangulation)
    root = builder.add_tetrahedra(1)

    m1 = [0, 0, 0, 0]
    m1[0], m1[1], m1[2], m1[3] = w, x1, y1, f
    m2 = [0, 0, 0, 0]
    m2[0], m2[1], m2[3], m2[2] = w, x2, y2, f
    builder.join(root, ROOT_FACE_1, copy_1 + tet, tuple(m1))
    builder.join(root, ROOT_FACE_2, copy_2 + tet, tuple(m2))
    return builder.build(), root


def tree_extend(ctx: TreeContext) -> TreeContext:
    skeleton = check_context(ctx)

    for x1, x2 in _attachment_order(skeleton, ctx):
        t, root = _attach(ctx, x1, x2)
        new_face = (root, ROOT_NEXT_FACE)
        report = validate(t)
        if not report.is_3manifold:
            log.debug("tree step: attachment (%d, %d) rejected: %s", x1, x2, "; ".join(report.problems))
            continue
        if _face_fully_identified(compute_skeleton(t), new_face):
            log.debug("tree step: attachment (%d, %d) leaves the new face fully identified", x1, x2)
            continue
        return TreeContext(t, new_face, ROOT_NEXT_ARC, ctx.alpha * ctx.alpha)

    raise PreconditionViolated(f"no attachment of two copies of the {ctx.n}-tetrahedron context is valid")


def tree_chain(ctx: TreeContext, k: int) -> TreeContext:
    if k < 0:
        raise PreconditionViolated(f"number of doubling steps must be non-negative, got {k}")
    for _ in range(k):
        ctx = tree_extend(ctx)
    return ctx


def free_tetrahedron_context() -> TreeContext:
    """Single unglued tetrahedron, face 0(012) with arcs around vertex 0: one triangle and one quad."""
    return TreeContext(TriangulationBuilder(1).build(), (0, 3), 0, 2)


def g_context() -> TreeContext:
    return TreeContext(build_g(), G_FACE, G_ARC, G_ALPHA)


def build_tree_step(k: int) -> Triangulation:
    """G doubled k times: 12 * 2^k - 1 tetrahedra."""
    return tree_chain(g_context(), k).triangulation
