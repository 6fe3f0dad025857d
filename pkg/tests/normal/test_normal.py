import pytest

from surface_factory.enumeration.double_description import enumerate_vertex_surfaces
from surface_factory.families.binomial import build_binomial
from surface_factory.families.path import build_path
from surface_factory.families.tables import (
    E_BOUNDARY_1,
    E_BOUNDARY_2,
    E_SURFACE_S,
    E_SURFACE_T,
    build_e,
    build_g,
)
from surface_factory.normal.coords import (
    DimensionMismatch,
    NotAdmissible,
    arc_count,
    format_vector,
    parse_vector,
    quad_index,
    quad_of_pair,
    quad_separates,
    satisfies_quad_constraints,
    tri_index,
)
from surface_factory.normal.matching import (
    boundary_pattern,
    compatible,
    edge_weights,
    is_admissible,
    matching_matrix,
    require_admissible,
)
from surface_factory.triangulation.perm import FACE_VERTICES
from surface_factory.triangulation.triangulation import NotABoundaryFace
from surface_factory.utils.errors import SurfaceFactoryError
from tests.utils import free_tetrahedron


class TestCoords:
    def test_quad_pairs(self):
        assert quad_of_pair(0, 1) == quad_of_pair(2, 3) == 0
        assert quad_of_pair(2, 0) == quad_of_pair(1, 3) == 1
        assert quad_of_pair(0, 3) == quad_of_pair(2, 1) == 2

        # quad q01 crosses the four edges other than 01 and 23
        crossed = [(a, b) for a in range(4) for b in range(a + 1, 4) if quad_separates(0, a, b)]
        assert crossed == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_indices(self):
        assert tri_index(2, 3) == 17
        assert quad_index(2, 0) == 18

    def test_arc_count(self):
        # a q01 quad meets face 3 in an arc cutting off vertex 2
        v = (0, 0, 0, 0, 1, 0, 0)
        assert [arc_count(v, 0, 3, x) for x in (0, 1, 2)] == [0, 0, 1]

    def test_quad_constraints(self):
        assert satisfies_quad_constraints((1, 1, 1, 1, 5, 0, 0), 1)
        assert not satisfies_quad_constraints((0, 0, 0, 0, 1, 1, 0), 1)

    def test_format_parse(self):
        v = (0, 1, 2, 3, 0, 0, 12345678901234567890, 1, 0, 0, 0, 0, 0, 0)
        text = format_vector(v)
        assert text == "0,1,2,3|0,0,12345678901234567890;1,0,0,0|0,0,0"
        assert parse_vector(text) == v

    @pytest.mark.parametrize("text", ["", "1,2,3|0,0,0", "0,0,0,0|0,0", "a,0,0,0|0,0,0", "0,0,0,0"])
    def test_parse_errors(self, text):
        with pytest.raises(SurfaceFactoryError):
            parse_vector(text)


class TestMatching:
    def test_free_tetrahedron(self):
        t = free_tetrahedron()
        assert len(matching_matrix(t).rows) == 0
        for k in range(7):
            unit = tuple(1 if i == k else 0 for i in range(7))
            assert is_admissible(t, unit)

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_rows(self, n):
        for t in (build_binomial(n), build_path(n)):
            system = matching_matrix(t)
            assert len(system.rows) == 3 * len(t.internal_faces())
            assert all(len(r.coefficients) == system.num_columns == 7 * n for r in system.rows)

    def test_g_rows(self):
        t = build_g()
        assert len(t.boundary_faces()) == 16
        assert len(matching_matrix(t).rows) == 42

    def test_vertex_link_is_admissible(self):
        t = build_binomial(2)
        link = (1, 1, 1, 1, 0, 0, 0) * 2
        assert is_admissible(t, link)

    def test_quad_violation(self):
        t = free_tetrahedron()
        assert not is_admissible(t, (0, 0, 0, 0, 1, 1, 0))
        with pytest.raises(NotAdmissible):
            require_admissible(t, (0, 0, 0, 0, 1, 1, 0))

    def test_negative_entry(self):
        assert not is_admissible(free_tetrahedron(), (-1, 0, 0, 0, 0, 0, 0))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            is_admissible(build_binomial(2), (1, 1, 1, 1, 0, 0, 0))

    def test_compatible(self):
        assert compatible((0, 0, 0, 0, 1, 0, 0), (1, 0, 0, 0, 2, 0, 0), 1)
        assert not compatible((0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1, 0), 1)

    def test_edge_weights(self):
        t = free_tetrahedron()
        # a q01 quad meets the four edges it separates
        assert edge_weights(t, (0, 0, 0, 0, 1, 0, 0)) == (0, 1, 1, 1, 1, 0)


class TestArcConsistency:
    @pytest.mark.parametrize("build", [lambda: build_binomial(3), lambda: build_path(3), build_e])
    def test_both_sides_of_every_internal_face(self, build):
        t = build()
        surfaces = list(enumerate_vertex_surfaces(t))
        assert surfaces
        for v in surfaces:
            for face in t.internal_faces():
                for x in FACE_VERTICES[face.face]:
                    near = arc_count(v, face.tet, face.face, x)
                    far = arc_count(v, face.target_tet, face.target_face, face.vertex_map[x])
                    assert near == far, (v, face, x)

    def test_single_triangle_does_not_match(self):
        t = build_binomial(1)
        v = (1, 0, 0, 0, 0, 0, 0)
        mismatched = []
        for face in t.internal_faces():
            for x in FACE_VERTICES[face.face]:
                far = arc_count(v, face.target_tet, face.target_face, face.vertex_map[x])
                if arc_count(v, face.tet, face.face, x) != far:
                    mismatched.append((face, x))
        assert mismatched


class TestPlugSurfaces:
    def test_admissible(self):
        t = build_e()
        assert is_admissible(t, E_SURFACE_S)
        assert is_admissible(t, E_SURFACE_T)

    def test_boundary_patterns(self):
        t = build_e()
        assert boundary_pattern(t, E_SURFACE_S, E_BOUNDARY_1) == (0, 2, 2)
        assert boundary_pattern(t, E_SURFACE_S, E_BOUNDARY_2) == (2, 0, 2)
        assert boundary_pattern(t, E_SURFACE_T, E_BOUNDARY_1) == (0, 2, 1)
        assert boundary_pattern(t, E_SURFACE_T, E_BOUNDARY_2) == (1, 0, 2)

    def test_internal_face(self):
        t = build_e()
        with pytest.raises(NotABoundaryFace):
            boundary_pattern(t, E_SURFACE_S, (0, 3))
