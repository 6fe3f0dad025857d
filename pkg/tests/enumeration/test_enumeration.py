import pytest

from surface_factory.census.generator import CENSUS_KINDS, CensusQuery, generate_census
from surface_factory.enumeration.brute_force import brute_force_vertex_surfaces
from surface_factory.enumeration.double_description import enumerate_vertex_surfaces
from surface_factory.enumeration.stats import (
    complexity_stats,
    count_with_face_pattern,
    format_surface_listing,
    parse_surface_listing,
)
from surface_factory.enumeration.vertex_surfaces import (
    EnumerationInvariantViolated,
    TooLarge,
    VertexSurfaceSet,
    check_vertex_surfaces,
    primitive,
    support_mask,
)
from surface_factory.families.binomial import build_binomial
from surface_factory.families.layered import build_lst
from surface_factory.families.path import build_path
from surface_factory.families.tables import E_SURFACE_S, E_SURFACE_T, G_ALPHA, G_ARC, G_FACE, G_SIGMA, build_e, build_g
from surface_factory.normal.matching import matching_matrix
from surface_factory.triangulation.perm import FACE_VERTICES, face_map
from surface_factory.triangulation.triangulation import InvalidTriangulation, NotABoundaryFace, TriangulationBuilder
from surface_factory.utils.errors import SurfaceFactoryError
from tests.utils import free_tetrahedron, slow


class TestVertexSurfaces:
    def test_primitive(self):
        assert primitive((0, 4, 6)) == (0, 2, 3)
        assert primitive((0, 1, 6)) == (0, 1, 6)

    def test_support_mask(self):
        assert support_mask((0, 3, 0, 1)) == 0b1010

    def test_check_accepts_enumeration(self):
        t = build_path(2)
        system = matching_matrix(t)
        check_vertex_surfaces(enumerate_vertex_surfaces(t, system), system)

    @pytest.mark.parametrize(
        "surfaces",
        [
            # same zero set twice
            ((1, 0, 0, 0, 1, 0, 0), (1, 0, 0, 0, 2, 0, 0)),
            ((0, 0, 0, 0, 0, 0, 0),),
            ((2, 0, 0, 0, 0, 0, 2),),
            ((0, 0, 0, 0, 1, 1, 0),),
            ((0, 1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0)),
        ],
    )
    def test_check_rejects(self, surfaces):
        t = free_tetrahedron()
        with pytest.raises(EnumerationInvariantViolated):
            check_vertex_surfaces(VertexSurfaceSet(1, surfaces), matching_matrix(t))


class TestDoubleDescription:
    def test_free_tetrahedron(self):
        surfaces = enumerate_vertex_surfaces(free_tetrahedron())
        assert surfaces.sigma == 7
        assert surfaces.kappa == 1
        assert sorted(sum(v) for v in surfaces) == [1] * 7

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_binomial(self, n):
        assert enumerate_vertex_surfaces(build_binomial(n)).sigma == 2**n

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
    def test_path(self, n):
        assert enumerate_vertex_surfaces(build_path(n)).sigma == 2 ** (n + 1) + (n + 1) * (n + 2) // 2

    def test_path_2(self):
        assert enumerate_vertex_surfaces(build_path(2)).sigma == 14

    def test_plug(self):
        surfaces = enumerate_vertex_surfaces(build_e())
        assert surfaces.sigma == 13
        assert E_SURFACE_S in surfaces.surfaces
        assert E_SURFACE_T in surfaces.surfaces

    def test_sorted_and_deterministic(self):
        t = build_path(3)
        first = enumerate_vertex_surfaces(t)
        assert list(first.surfaces) == sorted(first.surfaces)
        assert enumerate_vertex_surfaces(t).surfaces == first.surfaces

    def test_every_surface_solves_the_system(self):
        t = build_lst(3).triangulation
        system = matching_matrix(t)
        for v in enumerate_vertex_surfaces(t, system):
            assert system.contains(v)

    def test_invalid_triangulation(self):
        b = TriangulationBuilder(1)
        b.join(0, 3, 0, face_map(3, (1, 0, 3)))
        with pytest.raises(InvalidTriangulation):
            enumerate_vertex_surfaces(b.build())

    @slow
    def test_g(self):
        t = build_g()
        surfaces = enumerate_vertex_surfaces(t)
        assert surfaces.sigma == G_SIGMA
        assert count_with_face_pattern(t, G_FACE, G_ARC, surfaces) == G_ALPHA


class TestOracle:
    @pytest.mark.parametrize(
        "build",
        [
            free_tetrahedron,
            lambda: build_binomial(1),
            lambda: build_binomial(2),
            lambda: build_path(1),
            lambda: build_path(2),
        ],
    )
    def test_matches_double_description(self, build):
        t = build()
        assert brute_force_vertex_surfaces(t).surfaces == enumerate_vertex_surfaces(t).surfaces

    def test_layered_solid_torus(self):
        t = build_lst(1).triangulation
        assert brute_force_vertex_surfaces(t).surfaces == enumerate_vertex_surfaces(t).surfaces

    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("kind", CENSUS_KINDS)
    def test_census(self, n, kind):
        count = 0
        for t in generate_census(CensusQuery(n, kind)):
            assert brute_force_vertex_surfaces(t).surfaces == enumerate_vertex_surfaces(t).surfaces, repr(t)
            count += 1
        assert count == {(1, "closed"): 4, (1, "bounded"): 3, (2, "closed"): 17, (2, "bounded"): 17}[(n, kind)]

    def test_too_large(self):
        with pytest.raises(TooLarge):
            brute_force_vertex_surfaces(build_path(5))


class TestStats:
    def test_free_tetrahedron(self):
        stats = complexity_stats(free_tetrahedron())
        assert (stats.sigma, stats.kappa, stats.sigma_discs, stats.kappa_discs) == (7, 1, 7, 1)

    def test_binomial_has_no_discs(self):
        stats = complexity_stats(build_binomial(3))
        assert stats.sigma == 8
        assert stats.sigma_discs == 0
        assert stats.kappa_discs == 0

    def test_face_pattern_free_tetrahedron(self):
        t = free_tetrahedron()
        surfaces = enumerate_vertex_surfaces(t)
        for face in range(4):
            for arc in FACE_VERTICES[face]:
                assert count_with_face_pattern(t, (0, face), arc, surfaces) == 2

    def test_face_pattern_errors(self):
        with pytest.raises(NotABoundaryFace):
            count_with_face_pattern(build_binomial(1), (0, 3), 0)
        with pytest.raises(SurfaceFactoryError):
            count_with_face_pattern(free_tetrahedron(), (0, 3), 3)


class TestListing:
    def test_listing(self):
        t = build_path(2)
        surfaces = list(enumerate_vertex_surfaces(t))
        text = format_surface_listing(t, surfaces)
        assert text.startswith(f"n=2 sigma=14 kappa={max(max(v) for v in surfaces)}\n")

        parsed_t, vectors = parse_surface_listing(text)
        assert parsed_t == t
        assert vectors == surfaces

    def test_listing_without_triangulation(self):
        t, vectors = parse_surface_listing("n=1 sigma=1 kappa=1\n1,0,0,0|0,0,0\n")
        assert t is None
        assert vectors == [(1, 0, 0, 0, 0, 0, 0)]

    @pytest.mark.parametrize(
        "text",
        ["", "sigma=1\n1,0,0,0|0,0,0\n", "n=1 sigma=2 kappa=1\n1,0,0,0|0,0,0\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(SurfaceFactoryError):
            parse_surface_listing(text)
