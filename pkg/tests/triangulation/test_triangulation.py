import numpy as np
import pytest

from surface_factory.census.generator import CENSUS_KINDS, CensusQuery, generate_census
from surface_factory.families.binomial import build_binomial
from surface_factory.families.path import build_path
from surface_factory.triangulation.gluing_table import format_gluing_table, parse_gluing_table
from surface_factory.triangulation.pairing_graph import face_pairing_graph
from surface_factory.triangulation.perm import ALL_PERMS, compose, face_map, gluing_perms, inverse
from surface_factory.triangulation.signature import canonical_signature, from_signature, random_relabelling
from surface_factory.triangulation.skeleton import LinkClass, compute_skeleton
from surface_factory.triangulation.triangulation import (
    GluingSyntaxError,
    InconsistentGluing,
    SelfGluedFace,
    TriangulationBuilder,
)
from surface_factory.triangulation.validity import validate
from tests.utils import free_tetrahedron, slow


class TestPerm:
    def test_inverse(self):
        for p in ALL_PERMS:
            assert compose(p, inverse(p)) == (0, 1, 2, 3)

    def test_face_map(self):
        p = face_map(3, (0, 1, 3))
        assert p == (0, 1, 3, 2)
        assert p[3] == 2

    @pytest.mark.parametrize("src_face, dst_face", [(0, 0), (3, 2), (1, 3)])
    def test_gluing_perms(self, src_face, dst_face):
        perms = gluing_perms(src_face, dst_face)
        assert len(perms) == 6
        assert perms == sorted(perms)
        assert all(p[src_face] == dst_face for p in perms)


class TestGluingTable:
    def test_free_tetrahedron(self):
        t = parse_gluing_table("0: - - - -\n")
        assert t.n == 1
        assert len(t.boundary_faces()) == 4
        assert format_gluing_table(t) == "0: - - - -\n"

    def test_comments_and_blank_lines(self):
        t = parse_gluing_table("# a folded tetrahedron\n\n0: 0(013) 0(012) - -  # fold\n")
        assert t.gluing(0, 3).target_face == 2
        assert t.gluing(0, 2).target_face == 3

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_format_parse(self, n):
        for t in (build_binomial(n), build_path(n)):
            assert parse_gluing_table(format_gluing_table(t)) == t

    def test_one_sided_entry_is_completed(self):
        t = parse_gluing_table("0: 0(013) - - -\n")

        b = TriangulationBuilder(1)
        b.join(0, 3, 0, face_map(3, (0, 1, 3)))
        assert t == b.build()

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "0: - - -",
            "0: 1(01) - - -",
            "0: 1(011) - - -",
            "zero: - - - -",
            "0: - - - -\n0: - - - -",
            "1: - - - -",
        ],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(GluingSyntaxError):
            parse_gluing_table(text)

    def test_self_glued_face(self):
        with pytest.raises(SelfGluedFace):
            parse_gluing_table("0: 0(012) - - -")

    def test_involution_violated(self):
        with pytest.raises(InconsistentGluing):
            parse_gluing_table("0: 1(012) - - -\n1: 0(013) - - -\n")

    def test_missing_tetrahedron(self):
        with pytest.raises(InconsistentGluing):
            parse_gluing_table("0: 3(012) - - -\n")


class TestSkeleton:
    def test_free_tetrahedron(self):
        skeleton = compute_skeleton(free_tetrahedron())
        assert skeleton.num_vertices == 4
        assert skeleton.num_edges == 6
        assert skeleton.link_class == (LinkClass.DISC,) * 4

    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_binomial(self, n):
        # closed one-vertex triangulations have n + 1 edges
        skeleton = compute_skeleton(build_binomial(n))
        assert skeleton.num_vertices == 1
        assert skeleton.num_edges == n + 1
        assert skeleton.link_class == (LinkClass.SPHERE,)
        assert sum(skeleton.edge_degree(e) for e in range(skeleton.num_edges)) == 6 * n

    @pytest.mark.parametrize("n", [1, 4])
    def test_pairing_graph(self, n):
        g = face_pairing_graph(build_path(n))
        assert g.n == n
        assert g.num_arcs == n - 1
        assert g.is_connected()
        assert all(tet != target_tet for tet, _, target_tet, _ in g.arcs)

    def test_pairing_graph_of_free_tetrahedron(self):
        g = face_pairing_graph(free_tetrahedron())
        assert g.num_arcs == 0
        assert g.is_connected()


class TestValidity:
    def test_free_tetrahedron(self):
        report = validate(free_tetrahedron())
        assert report.is_3manifold
        assert report.is_bounded
        assert report.num_vertices == 4
        assert report.link_class == (LinkClass.DISC,) * 4

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_binomial(self, n):
        report = validate(build_binomial(n))
        assert report.is_3manifold
        assert report.is_closed
        assert report.is_one_vertex

    def test_reversed_edge(self):
        # folding 0(012) onto 0(013) with 0 and 1 swapped reverses edge 01
        b = TriangulationBuilder(1)
        b.join(0, 3, 0, face_map(3, (1, 0, 3)))
        report = validate(b.build())
        assert not report.is_3manifold
        assert not all(report.edge_valid)
        assert report.problems

    def test_disconnected(self):
        report = validate(TriangulationBuilder(2).build())
        assert not report.is_connected
        assert not report.is_3manifold


class TestSignature:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_relabelling_invariance(self, n):
        rng = np.random.default_rng(seed=n)
        for t in (build_binomial(n), build_path(n)):
            signature = canonical_signature(t)
            for _ in range(5):
                assert canonical_signature(random_relabelling(t, rng)) == signature

    @staticmethod
    def _check_census_signatures(n: int, relabellings: int):
        rng = np.random.default_rng(seed=n)
        for kind in CENSUS_KINDS:
            for t in generate_census(CensusQuery(n, kind)):
                signature = canonical_signature(t)
                assert canonical_signature(from_signature(signature)) == signature
                for _ in range(relabellings):
                    assert canonical_signature(random_relabelling(t, rng)) == signature, repr(t)

    @pytest.mark.parametrize("n", [1, 2])
    def test_census_relabelling_invariance(self, n):
        self._check_census_signatures(n, relabellings=100)

    @slow
    def test_census_relabelling_invariance_n3(self):
        self._check_census_signatures(3, relabellings=100)

    @pytest.mark.parametrize("n", [1, 3])
    def test_from_signature(self, n):
        t = build_binomial(n)
        signature = canonical_signature(t)
        decoded = from_signature(signature)
        assert decoded.n == n
        assert canonical_signature(decoded) == signature

    def test_distinct_triangulations(self):
        assert canonical_signature(build_binomial(2)) != canonical_signature(build_path(2))
        assert canonical_signature(build_path(2)) != canonical_signature(build_path(3))

    def test_malformed_signature(self):
        with pytest.raises(GluingSyntaxError):
            from_signature("2:garbage")
