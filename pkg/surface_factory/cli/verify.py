"""
Golden checks behind the `verify` verb. Every criterion logs what went wrong and returns a bool,
tier 1 runs in minutes on one core, tier 2 adds the four-tetrahedron census and the 11-tetrahedron counts.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Callable, List, TextIO

from surface_factory.census.generator import CensusKind, CensusQuery, generate_census
from surface_factory.census.report import csv_row, stats_for_settings
from surface_factory.census.runner import census_entries, run_census
from surface_factory.enumeration.brute_force import brute_force_vertex_surfaces
from surface_factory.enumeration.double_description import enumerate_vertex_surfaces
from surface_factory.enumeration.stats import count_with_face_pattern
from surface_factory.enumeration.vertex_surfaces import EnumerationInvariantViolated, check_vertex_surfaces
from surface_factory.families.binomial import build_binomial
from surface_factory.families.closed import build_closed_c
from surface_factory.families.layered import build_lst, fibonacci
from surface_factory.families.path import build_path
from surface_factory.families.tables import (
    E_BOUNDARY_1,
    E_BOUNDARY_2,
    G_ALPHA,
    G_ARC,
    G_FACE,
    G_SIGMA,
    build_e,
    build_g,
)
from surface_factory.families.tree import free_tetrahedron_context, g_context, tree_extend
from surface_factory.normal.matching import boundary_pattern, compatible, edge_weights, is_admissible, matching_matrix
from surface_factory.topology.classify import (
    SurfaceKind,
    classify_vector,
    euler_characteristic_linear,
    is_vertex_linking,
)
from surface_factory.topology.surface_complex import reconstruct_surface
from surface_factory.triangulation.skeleton import compute_skeleton
from surface_factory.triangulation.triangulation import Triangulation, TriangulationBuilder
from surface_factory.utils.attr_dict import AttrDict
from surface_factory.utils.misc import ExperimentStatus
from surface_factory.utils.timing import Timing
from surface_factory.utils.typing import StatusCode
from surface_factory.utils.utils import log

EXPECTED_COUNTS = {
    CensusKind.CLOSED: [4, 17, 81, 577],
    "closed 1-vertex": [3, 12, 63, 433],
    CensusKind.BOUNDED: [3, 17, 156, 2308],
}

# max values exact, averages as displayed with one decimal
EXPECTED_COMPLEXITY = {
    ("closed", "sigma_max"): [3, 7, 11, 18],
    ("closed", "sigma_avg"): ["2.0", "3.9", "5.5", "8.8"],
    ("closed 1-vertex", "sigma_max"): [2, 4, 8, 16],
    ("bounded", "sigma_max"): [7, 14, 35, 85],
    ("bounded", "sigma_avg"): ["5.0", "8.2", "14.0", "31.3"],
    ("bounded discs", "sigma_max"): [7, 14, 27, 69],
    ("closed", "kappa_max"): [1, 2, 3, 4],
    ("bounded", "kappa_max"): [1, 2, 3, 6],
}
AVERAGE_TOLERANCE = 0.05


@dataclass(frozen=True)
class Criterion:
    key: str
    description: str
    tier: int
    check: Callable[[], bool]


def _expect(ok: bool, msg: str) -> bool:
    if not ok:
        log.error(msg)
    return ok


def check_single_tetrahedron() -> bool:
    t = TriangulationBuilder(1).build()
    surfaces = enumerate_vertex_surfaces(t)
    kinds = {classify_vector(t, v).kind for v in surfaces}
    return _expect(
        surfaces.sigma == 7 and kinds == {SurfaceKind.DISC} and surfaces.kappa == 1,
        f"single tetrahedron: sigma={surfaces.sigma}, kinds={kinds}, kappa={surfaces.kappa}",
    )


def check_binomial() -> bool:
    ok = True
    for n in range(1, 9):
        t = build_binomial(n)
        surfaces = enumerate_vertex_surfaces(t)
        ok &= _expect(surfaces.sigma == 2**n, f"binomial({n}): sigma={surfaces.sigma}, expected {2 ** n}")
        if n <= 6:
            genera = Counter(classify_vector(t, v).genus for v in surfaces)
            expected = Counter({k: comb(n, k) for k in range(n + 1)})
            ok &= _expect(genera == expected, f"binomial({n}): genus histogram {dict(genera)}")
    return ok


def check_path() -> bool:
    ok = True
    for n in range(1, 11):
        t = build_path(n)
        surfaces = enumerate_vertex_surfaces(t)
        expected = 2 ** (n + 1) + (n + 1) * (n + 2) // 2
        ok &= _expect(surfaces.sigma == expected, f"path({n}): sigma={surfaces.sigma}, expected {expected}")
        ok &= _expect(all(classify_vector(t, v).is_disc for v in surfaces), f"path({n}): non-disc vertex surface")
    return ok


def meridian_discs(t: Triangulation, surfaces, max_coord: int):
    """Vertex normal discs with the given maximum coordinate, with their weights on the boundary edges."""
    skeleton = compute_skeleton(t)
    result = []
    for v in surfaces:
        if max(v) != max_coord or not classify_vector(t, v).is_disc:
            continue
        weights = edge_weights(t, v, skeleton)
        boundary = sorted(w for w, on_boundary in zip(weights, skeleton.edge_boundary) if on_boundary)
        result.append((v, tuple(boundary)))
    return result


def check_layered_solid_tori() -> bool:
    ok = True
    for n in range(1, 11):
        lst = build_lst(n)
        t = lst.triangulation
        expected = (fibonacci(n + 1), fibonacci(n + 2), fibonacci(n + 3))
        found = meridian_discs(t, enumerate_vertex_surfaces(t), fibonacci(n + 1))
        ok &= _expect(
            any(boundary == expected for _, boundary in found),
            f"lst({n}): no vertex disc with max coordinate {expected[0]} meeting the boundary edges {expected}",
        )
    return ok


def check_plug() -> bool:
    t = build_e()
    surfaces = enumerate_vertex_surfaces(t)
    classes = [classify_vector(t, v) for v in surfaces]
    bounded = sum(1 for c in classes if c.total_boundary_curves > 0)
    ok = _expect(surfaces.sigma == 13 and bounded == 12, f"E: sigma={surfaces.sigma}, bounded surfaces={bounded}")

    expected_kinds = (
        (((0, 2, 2), (2, 0, 2)), SurfaceKind.CYLINDER),
        (((0, 2, 1), (1, 0, 2)), SurfaceKind.MOBIUS_STRIP),
    )
    for patterns, kind in expected_kinds:
        matching = [
            c
            for v, c in zip(surfaces, classes)
            if (boundary_pattern(t, v, E_BOUNDARY_1), boundary_pattern(t, v, E_BOUNDARY_2)) == patterns
        ]
        ok &= _expect(
            len(matching) > 0 and all(c.kind == kind for c in matching),
            f"E: surfaces with boundary patterns {patterns} are {[c.kind for c in matching]}, expected {kind}",
        )
    return ok


def check_closed_family() -> bool:
    t8 = build_closed_c(8)
    surfaces = enumerate_vertex_surfaces(t8)
    ok = _expect(
        any(max(v) >= fibonacci(5) and classify_vector(t8, v).kind == SurfaceKind.PROJECTIVE_PLANE for v in surfaces),
        "C(8): no projective plane with maximum coordinate >= 5",
    )

    t7 = build_closed_c(7)
    surfaces = enumerate_vertex_surfaces(t7)
    ok &= _expect(surfaces.kappa >= 2 * fibonacci(4), f"C(7): kappa={surfaces.kappa}, expected >= 6")
    ok &= _expect(
        any(classify_vector(t7, v).kind == SurfaceKind.SPHERE and not is_vertex_linking(t7, v) for v in surfaces),
        "C(7): no non-vertex-linking sphere",
    )
    return ok


def _check_counts(max_n: int) -> bool:
    ok = True
    for n in range(1, max_n + 1):
        for kind in (CensusKind.CLOSED, CensusKind.BOUNDED):
            count = sum(1 for _ in generate_census(CensusQuery(n, kind)))
            expected = EXPECTED_COUNTS[kind][n - 1]
            ok &= _expect(count == expected, f"census n={n} {kind}: {count} triangulations, expected {expected}")
        count = sum(1 for _ in generate_census(CensusQuery(n, CensusKind.CLOSED, one_vertex=True)))
        expected = EXPECTED_COUNTS["closed 1-vertex"][n - 1]
        ok &= _expect(count == expected, f"census n={n} closed 1-vertex: {count}, expected {expected}")
    return ok


def check_census_counts() -> bool:
    return _check_counts(3)


def check_census_counts_n4() -> bool:
    return _check_counts(4)


def check_census_complexity() -> bool:
    ok = True
    for n in range(1, 5):
        entries = {kind: census_entries(CensusQuery(n, kind)) for kind in (CensusKind.CLOSED, CensusKind.BOUNDED)}
        stats = stats_for_settings(n, entries)
        for (label, column), values in EXPECTED_COMPLEXITY.items():
            s = stats[(label, n)]
            if column.endswith("_avg"):
                value = getattr(s, column)
                expected = float(values[n - 1])
                ok &= _expect(
                    value is not None and abs(float(value) - expected) <= AVERAGE_TOLERANCE,
                    f"n={n} {label} {column}: {value}, expected {expected}",
                )
            else:
                ok &= _expect(getattr(s, column) == values[n - 1], f"n={n} {label} {column}: {getattr(s, column)}")
    return ok


def check_g() -> bool:
    t = build_g()
    surfaces = enumerate_vertex_surfaces(t)
    alpha = count_with_face_pattern(t, G_FACE, G_ARC, surfaces)
    return _expect(surfaces.sigma == G_SIGMA and alpha == G_ALPHA, f"G: sigma={surfaces.sigma}, alpha={alpha}")


def _oracle_triangulations() -> List[Triangulation]:
    result = [build_binomial(1), build_path(1), build_path(2), build_lst(1).triangulation]
    for n in (1, 2):
        for kind in (CensusKind.CLOSED, CensusKind.BOUNDED):
            result.extend(generate_census(CensusQuery(n, kind)))
    return result


def check_oracle() -> bool:
    ok = True
    for t in _oracle_triangulations():
        dd = enumerate_vertex_surfaces(t)
        oracle = brute_force_vertex_surfaces(t)
        ok &= _expect(dd.surfaces == oracle.surfaces, f"{t!r}: double description and oracle disagree")
    return ok


def check_enumeration_invariants() -> bool:
    ok = True
    for t in (build_binomial(3), build_path(3), build_e(), build_lst(3).triangulation):
        system = matching_matrix(t)
        try:
            check_vertex_surfaces(enumerate_vertex_surfaces(t, system), system)
        except EnumerationInvariantViolated as exc:
            ok = _expect(False, f"{t!r}: {exc}")
    return ok


def check_surface_properties() -> bool:
    ok = True
    for t in (build_binomial(2), build_path(2), build_e(), build_lst(2).triangulation):
        system = matching_matrix(t)
        surfaces = list(enumerate_vertex_surfaces(t))
        euler = {}
        for v in surfaces:
            ok &= _expect(is_admissible(t, v, system), f"{t!r}: {v} is not admissible")
            ok &= _expect(reconstruct_surface(t, v).piece_counts() == tuple(v), f"{t!r}: reconstruction of {v} differs")
            euler[v] = classify_vector(t, v).euler
            ok &= _expect(euler_characteristic_linear(t, v) == euler[v], f"{t!r}: linear Euler characteristic of {v}")

        for u, v in itertools.combinations(surfaces, 2):
            if compatible(u, v, t.n):
                total = tuple(a + b for a, b in zip(u, v))
                ok &= _expect(classify_vector(t, total).euler == euler[u] + euler[v], f"{t!r}: chi({u} + {v})")
    return ok


def check_tree_extend() -> bool:
    ctx = free_tetrahedron_context()
    extended = tree_extend(ctx)
    alpha = count_with_face_pattern(extended.triangulation, extended.face, extended.arc)
    ok = _expect(extended.n == 2 * ctx.n + 1, f"tree step from one tetrahedron gave {extended.n}")
    ok &= _expect(alpha >= ctx.alpha**2, f"tree step from one tetrahedron: count {alpha} < {ctx.alpha ** 2}")

    g1 = tree_extend(g_context())
    ok &= _expect(g1.n == 23, f"tree step from G gave {g1.n} tetrahedra")
    return ok


def check_determinism() -> bool:
    rows = []
    for jobs in (1, 2):
        cfg = AttrDict(
            n=2,
            kind=CensusKind.CLOSED,
            one_vertex=False,
            discs_only=False,
            jobs=jobs,
            journal=None,
            census_ceiling=5,
            allow_large=False,
            signatures=None,
            dump_dir=None,
        )
        _, runner = run_census(cfg)
        rows.append((csv_row(runner.stats), runner.signatures()))
    return _expect(rows[0] == rows[1], f"census output differs between 1 and 2 jobs: {rows}")


CRITERIA = [
    Criterion("1", "single tetrahedron: 7 discs, kappa 1", 1, check_single_tetrahedron),
    Criterion("2", "binomial family: 2^n surfaces, binomial genus histogram", 1, check_binomial),
    Criterion("3", "path family: 2^(n+1) + (n+1)(n+2)/2 surfaces, all discs", 1, check_path),
    Criterion("4", "layered solid tori: Fibonacci meridian discs", 1, check_layered_solid_tori),
    Criterion("5", "plug E: 13 surfaces, cylinder and Mobius band boundary patterns", 1, check_plug),
    Criterion(
        "6", "closed family: projective plane in C(8), non-vertex-linking sphere in C(7)", 1, check_closed_family
    ),
    Criterion("7", "census counts for n <= 3", 1, check_census_counts),
    Criterion("10", "double description agrees with the brute-force oracle", 1, check_oracle),
    Criterion("11", "distinct supports and sigma <= 64^n", 1, check_enumeration_invariants),
    Criterion("12", "Euler characteristic additivity, reconstruction, admissibility", 1, check_surface_properties),
    Criterion("13", "tree doubling arithmetic", 1, check_tree_extend),
    Criterion("14", "census output independent of the number of jobs", 1, check_determinism),
    Criterion("7b", "census counts for n = 4", 2, check_census_counts_n4),
    Criterion("8", "census complexity table for n <= 4", 2, check_census_complexity),
    Criterion("9", "sigma and alpha of the 11-tetrahedron triangulation G", 2, check_g),
]


def run_verification(tier: int, out: TextIO) -> StatusCode:
    timing = Timing("Verification")
    failed = 0
    for criterion in CRITERIA:
        if criterion.tier > tier:
            continue

        with timing.timeit(f"criterion_{criterion.key}"):
            try:
                passed = criterion.check()
            except Exception as exc:
                log.exception(f"Criterion {criterion.key} raised {exc!r}")
                passed = False

        failed += not passed
        out.write(f"{'PASS' if passed else 'FAIL'} {criterion.key}: {criterion.description}\n")
        out.flush()

    log.info(timing.flat_str())
    return ExperimentStatus.SUCCESS if failed == 0 else ExperimentStatus.FAILURE
