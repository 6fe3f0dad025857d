"""
Text form of a gluing table, one line per tetrahedron:

    i: A B C D

where the four slots are the faces i(012), i(013), i(023), i(123) in that order, and each entry is either `-`
(boundary) or `j(xyz)`, meaning the listed face of i is glued to tetrahedron j with 0->x, 1->y, ... on the
face vertices taken in increasing order. `#` starts a comment.
"""

import re
from typing import Dict, List, Optional

from surface_factory.triangulation.perm import FACE_VERTICES, face_map, inverse
from surface_factory.triangulation.triangulation import (
    FaceGluing,
    GluingSyntaxError,
    InconsistentGluing,
    SelfGluedFace,
    Triangulation,
)

# column order of the text format, faces named by their opposite vertex
SLOT_FACES = (3, 2, 1, 0)

_LINE_RE = re.compile(r"^\s*(\d+)\s*:\s*(.*)$")
_ENTRY_RE = re.compile(r"^(\d+)\(([0-3])([0-3])([0-3])\)$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_entry(entry: str, tet: int, face: int, lineno: int) -> Optional[FaceGluing]:
    if entry == "-":
        return None

    match = _ENTRY_RE.match(entry)
    if match is None:
        raise GluingSyntaxError(f"line {lineno}: cannot parse gluing entry {entry!r}")

    target_tet = int(match.group(1))
    images = tuple(int(match.group(k)) for k in (2, 3, 4))
    if len(set(images)) != 3:
        raise GluingSyntaxError(f"line {lineno}: repeated vertex in {entry!r}")

    vertex_map = face_map(face, images)
    target_face = vertex_map[face]
    if (target_tet, target_face) == (tet, face):
        raise SelfGluedFace(f"line {lineno}: face {tet}({''.join(map(str, FACE_VERTICES[face]))}) glued to itself")
    return FaceGluing(target_tet, target_face, vertex_map)


def parse_gluing_table(text: str) -> Triangulation:
    rows: Dict[int, List[Optional[FaceGluing]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue

        match = _LINE_RE.match(line)
        if match is None:
            raise GluingSyntaxError(f"line {lineno}: expected 'i: A B C D', got {raw!r}")

        tet = int(match.group(1))
        entries = match.group(2).split()
        if len(entries) != 4:
            raise GluingSyntaxError(f"line {lineno}: expected 4 entries, got {len(entries)}")
        if tet in rows:
            raise GluingSyntaxError(f"line {lineno}: tetrahedron {tet} listed twice")

        gluings: List[Optional[FaceGluing]] = [None] * 4
        for face, entry in zip(SLOT_FACES, entries):
            gluings[face] = _parse_entry(entry, tet, face, lineno)
        rows[tet] = gluings

    if not rows:
        raise GluingSyntaxError("empty gluing table")

    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise GluingSyntaxError(f"tetrahedra must be numbered 0..{n - 1}, got {sorted(rows)}")

    flat: List[Optional[FaceGluing]] = [g for tet in range(n) for g in rows[tet]]

    # complete the involution where the partner slot was left empty, disagreements are left to the constructor
    for tet in range(n):
        for face in range(4):
            g = flat[4 * tet + face]
            if g is None:
                continue
            if g.target_tet >= n:
                raise InconsistentGluing(f"{tet}:{face} refers to missing tetrahedron {g.target_tet}")
            partner_slot = 4 * g.target_tet + g.target_face
            if flat[partner_slot] is None:
                flat[partner_slot] = FaceGluing(tet, face, inverse(g.vertex_map))

    return Triangulation(n, flat)


def format_entry(g: Optional[FaceGluing], face: int) -> str:
    if g is None:
        return "-"
    images = "".join(str(g.vertex_map[v]) for v in FACE_VERTICES[face])
    return f"{g.target_tet}({images})"


def format_gluing_table(t: Triangulation) -> str:
    lines = []
    for tet in range(t.n):
        entries = " ".join(format_entry(t.gluing(tet, face), face) for face in SLOT_FACES)
        lines.append(f"{tet}: {entries}")
    return "\n".join(lines) + "\n"
