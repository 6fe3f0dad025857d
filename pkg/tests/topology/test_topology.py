from collections import Counter
from math import comb

import pytest

from surface_factory.enumeration.double_description import enumerate_vertex_surfaces
from surface_factory.families.binomial import build_binomial
from surface_factory.families.layered import build_lst
from surface_factory.families.path import build_path
from surface_factory.families.tables import E_SURFACE_S, E_SURFACE_T, build_e
from surface_factory.normal.coords import NotAdmissible
from surface_factory.normal.matching import compatible
from surface_factory.topology.classify import (
    CSV_HEADER,
    SurfaceKind,
    classify_vector,
    euler_characteristic_linear,
    is_vertex_linking,
    vertex_link_vector,
)
from surface_factory.topology.surface_complex import reconstruct_surface
from tests.utils import free_tetrahedron


class TestClassify:
    def test_free_tetrahedron(self):
        t = free_tetrahedron()
        for v in enumerate_vertex_surfaces(t):
            c = classify_vector(t, v)
            assert c.kind == SurfaceKind.DISC
            assert c.euler == 1
            assert c.components == 1
            assert c.total_boundary_curves == 1

    def test_two_parallel_quads(self):
        c = classify_vector(free_tetrahedron(), (0, 0, 0, 0, 2, 0, 0))
        assert c.components == 2
        assert c.euler == 2
        assert c.kind == SurfaceKind.OTHER
        assert c.genus is None

    def test_plug_surfaces(self):
        t = build_e()
        assert classify_vector(t, E_SURFACE_S).kind == SurfaceKind.CYLINDER
        assert classify_vector(t, E_SURFACE_T).kind == SurfaceKind.MOBIUS_STRIP
        assert not classify_vector(t, E_SURFACE_T).is_orientable

    def test_vertex_link(self):
        t = build_binomial(2)
        link = vertex_link_vector(t, 0)
        assert link == (1, 1, 1, 1, 0, 0, 0) * 2
        assert classify_vector(t, link).kind == SurfaceKind.SPHERE
        assert is_vertex_linking(t, link)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_binomial_genus_histogram(self, n):
        t = build_binomial(n)
        genera = Counter(classify_vector(t, v).genus for v in enumerate_vertex_surfaces(t))
        assert genera == Counter({k: comb(n, k) for k in range(n + 1)})

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_path_discs(self, n):
        t = build_path(n)
        assert all(classify_vector(t, v).is_disc for v in enumerate_vertex_surfaces(t))

    def test_not_admissible(self):
        with pytest.raises(NotAdmissible):
            classify_vector(free_tetrahedron(), (0, 0, 0, 0, 1, 1, 0))

    def test_csv_row(self):
        row = classify_vector(build_e(), E_SURFACE_S).csv_row()
        assert len(row.split(",")) == len(CSV_HEADER.split(","))
        assert row == "0,1,true,2,Cylinder"


class TestSurfaceComplex:
    @pytest.mark.parametrize("build", [lambda: build_binomial(2), lambda: build_path(3), build_e])
    def test_reconstruction_inverts_coordinates(self, build):
        t = build()
        for v in enumerate_vertex_surfaces(t):
            assert reconstruct_surface(t, v).piece_counts() == tuple(v)

    @pytest.mark.parametrize(
        "build", [lambda: build_binomial(3), lambda: build_path(2), build_e, lambda: build_lst(2).triangulation]
    )
    def test_linear_euler_characteristic(self, build):
        t = build()
        for v in enumerate_vertex_surfaces(t):
            assert euler_characteristic_linear(t, v) == classify_vector(t, v).euler

    def test_euler_additivity(self):
        t = build_path(2)
        surfaces = list(enumerate_vertex_surfaces(t))
        for u in surfaces:
            for v in surfaces:
                if compatible(u, v, t.n):
                    total = tuple(a + b for a, b in zip(u, v))
                    assert classify_vector(t, total).euler == classify_vector(t, u).euler + classify_vector(t, v).euler
