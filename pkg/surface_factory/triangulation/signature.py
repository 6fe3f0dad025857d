"""
Isomorphism signatures.

For every choice of root tetrahedron and vertex relabelling of the root, the triangulation is relabelled by a
breadth-first walk that numbers tetrahedra in order of discovery and picks the vertex labels of each newly
discovered tetrahedron so that the discovering gluing becomes the identity. The lexicographically smallest
resulting gluing table is the canonical form.
"""

from typing import List, Optional, Sequence, Tuple

import networkx as nx

from surface_factory.triangulation.pairing_graph import face_pairing_graph
from surface_factory.triangulation.perm import ALL_PERMS, PERM_INDEX, compose, inverse
from surface_factory.triangulation.triangulation import FaceGluing, GluingSyntaxError, Triangulation

_BOUNDARY = (-1, 0)

Encoding = Tuple[Tuple[int, int], ...]


def _encode_from(t: Triangulation, root: int, root_perm, best: Optional[Encoding]) -> Optional[Encoding]:
    """Relabelled gluing table starting from (root, root_perm). Returns None as soon as it exceeds best."""
    labels = {root: 0}
    perms = {root: root_perm}
    order = [root]
    entries: List[Tuple[int, int]] = []
    # still tied with best on the prefix built so far
    tied = best is not None

    k = 0
    while k < len(order):
        tet = order[k]
        p = perms[tet]
        p_inv = inverse(p)
        for new_face in range(4):
            g = t.gluing(tet, p_inv[new_face])
            if g is None:
                entry = _BOUNDARY
            else:
                j = g.target_tet
                if j not in labels:
                    labels[j] = len(order)
                    order.append(j)
                    perms[j] = compose(p, inverse(g.vertex_map))
                entry = (labels[j], PERM_INDEX[compose(perms[j], compose(g.vertex_map, p_inv))])

            if tied:
                other = best[len(entries)]
                if entry > other:
                    return None
                tied = entry == other
            entries.append(entry)
        k += 1

    return tuple(entries)


def _canonical_encoding(t: Triangulation) -> Encoding:
    best = None
    for root in range(t.n):
        for root_perm in ALL_PERMS:
            enc = _encode_from(t, root, root_perm, best)
            if enc is not None and (best is None or enc < best):
                best = enc
    return best


def _render(encoding: Encoding) -> str:
    n = len(encoding) // 4
    blocks = []
    for tet in range(n):
        tokens = []
        for j, perm_idx in encoding[4 * tet : 4 * tet + 4]:
            tokens.append("-" if j < 0 else f"{j}/{perm_idx}")
        blocks.append(",".join(tokens))
    return f"{n}:" + ".".join(blocks)


def _component_triangulations(t: Triangulation) -> List[Triangulation]:
    g = face_pairing_graph(t).to_networkx()
    components = [sorted(c) for c in nx.connected_components(g)]
    if len(components) == 1:
        return [t]

    result = []
    for tets in components:
        index = {old: new for new, old in enumerate(tets)}
        gluings = []
        for old in tets:
            for face in range(4):
                gl = t.gluing(old, face)
                gluings.append(None if gl is None else FaceGluing(index[gl.target_tet], gl.target_face, gl.vertex_map))
        result.append(Triangulation(len(tets), gluings))
    return result


def canonical_signature(t: Triangulation) -> str:
    """Equal for two triangulations iff they differ by relabelling tetrahedra and/or their vertices."""
    parts = sorted(_render(_canonical_encoding(c)) for c in _component_triangulations(t))
    return "+".join(parts)


def _decode_component(token: str) -> Tuple[int, List[Optional[FaceGluing]]]:
    try:
        n_str, body = token.split(":", 1)
        n = int(n_str)
        blocks = body.split(".")
        if len(blocks) != n:
            raise ValueError(f"expected {n} blocks")

        gluings: List[Optional[FaceGluing]] = []
        for block in blocks:
            tokens = block.split(",")
            if len(tokens) != 4:
                raise ValueError(f"expected 4 entries in {block!r}")
            for face, tok in enumerate(tokens):
                if tok == "-":
                    gluings.append(None)
                    continue
                j, perm_idx = (int(x) for x in tok.split("/"))
                perm = ALL_PERMS[perm_idx]
                gluings.append(FaceGluing(j, perm[face], perm))
    except (ValueError, IndexError) as exc:
        raise GluingSyntaxError(f"malformed signature component {token!r}: {exc}") from exc
    return n, gluings


def from_signature(signature: str) -> Triangulation:
    total = 0
    gluings: List[Optional[FaceGluing]] = []
    for token in signature.strip().split("+"):
        n, component = _decode_component(token)
        for g in component:
            gluings.append(None if g is None else FaceGluing(g.target_tet + total, g.target_face, g.vertex_map))
        total += n
    return Triangulation(total, gluings)


def random_relabelling(t: Triangulation, rng) -> Triangulation:
    """Isomorphic copy with shuffled tetrahedra and vertex labels, rng is a numpy Generator."""
    tet_perm: Sequence[int] = [int(x) for x in rng.permutation(t.n)]
    vertex_perms = [ALL_PERMS[int(rng.integers(len(ALL_PERMS)))] for _ in range(t.n)]
    return t.relabel(tet_perm, vertex_perms)

