import os

import pytest

from surface_factory.triangulation.triangulation import Triangulation, TriangulationBuilder


def slow_tests_enabled() -> bool:
    return os.environ.get("SF_SLOW_TESTS", "0") == "1"


# hour-scale checks, e.g. the four-tetrahedron census or the 11-tetrahedron counts
slow = pytest.mark.skipif(not slow_tests_enabled(), reason="set SF_SLOW_TESTS=1 to run slow tests")


def free_tetrahedron() -> Triangulation:
    return TriangulationBuilder(1).build()
