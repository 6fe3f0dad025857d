import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Set, Tuple

import pytest

from surface_factory.census.errors import CensusTooLarge, InvalidCensusQuery
from surface_factory.census.face_pairings import enumerate_census_graphs
from surface_factory.census.generator import (
    CENSUS_KINDS,
    CensusKind,
    CensusQuery,
    GraphSearchStats,
    generate_census,
    is_member,
    search_graph,
)
from surface_factory.census.journal import CensusJournal
from surface_factory.census.report import CSV_HEADER, csv_row, format_csv, render_tables, stats_for_settings
from surface_factory.census.runner import (
    CensusEntry,
    CensusStats,
    ParallelCensusRunner,
    SerialCensusRunner,
    aggregate_stats,
    census_entries,
    format_average,
    make_runner,
    run_census,
)
from surface_factory.families.binomial import build_binomial
from surface_factory.triangulation.perm import gluing_perms
from surface_factory.triangulation.signature import canonical_signature
from surface_factory.triangulation.triangulation import TriangulationBuilder
from surface_factory.triangulation.validity import validate
from surface_factory.utils.attr_dict import AttrDict
from surface_factory.utils.misc import ExperimentStatus
from tests.utils import slow


def census_cfg(n: int, kind: str, **kwargs) -> AttrDict:
    cfg = AttrDict(
        n=n,
        kind=kind,
        one_vertex=False,
        discs_only=False,
        jobs=1,
        journal=None,
        census_ceiling=5,
        allow_large=False,
        signatures=None,
        dump_dir=None,
    )
    cfg.update(kwargs)
    return cfg


def census_count(n: int, kind: str, one_vertex: bool = False) -> int:
    return sum(1 for _ in generate_census(CensusQuery(n, kind, one_vertex=one_vertex)))


class TestCensusQuery:
    @pytest.mark.parametrize("n, kind", [(0, CensusKind.CLOSED), (2, "ideal")])
    def test_invalid(self, n, kind):
        with pytest.raises(InvalidCensusQuery):
            CensusQuery(n, kind)

    def test_size_guard(self):
        with pytest.raises(CensusTooLarge):
            next(generate_census(CensusQuery(6, CensusKind.CLOSED)))

        with pytest.raises(CensusTooLarge):
            next(generate_census(CensusQuery(3, CensusKind.CLOSED), ceiling=2))


class TestFacePairingGraphs:
    @pytest.mark.parametrize(
        "n, closed, expected",
        [(1, True, 1), (1, False, 2), (2, True, 2)],
    )
    def test_counts(self, n, closed, expected):
        assert len(enumerate_census_graphs(n, closed)) == expected

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_graphs(self, n):
        for closed in (True, False):
            graphs = enumerate_census_graphs(n, closed)
            assert len({g.graph_id for g in graphs}) == len(graphs)
            for g in graphs:
                assert max(g.degrees()) <= 4
                assert g.is_closed == closed
                used = [slot for pair in g.face_assignment() for slot in pair]
                assert len(used) == len(set(used))


class TestGenerateCensus:
    @pytest.mark.parametrize(
        "n, kind, one_vertex, expected",
        [
            (1, CensusKind.CLOSED, False, 4),
            (1, CensusKind.CLOSED, True, 3),
            (1, CensusKind.BOUNDED, False, 3),
            (2, CensusKind.CLOSED, False, 17),
            (2, CensusKind.CLOSED, True, 12),
            (2, CensusKind.BOUNDED, False, 17),
        ],
    )
    def test_counts(self, n, kind, one_vertex, expected):
        assert census_count(n, kind, one_vertex) == expected

    @pytest.mark.parametrize(
        "kind, one_vertex, expected",
        [(CensusKind.CLOSED, False, 81), (CensusKind.CLOSED, True, 63), (CensusKind.BOUNDED, False, 156)],
    )
    def test_counts_n3(self, kind, one_vertex, expected):
        assert census_count(3, kind, one_vertex) == expected

    def test_members(self):
        triangulations = list(generate_census(CensusQuery(2, CensusKind.CLOSED)))
        signatures = [canonical_signature(t) for t in triangulations]
        assert signatures == sorted(set(signatures))
        for t in triangulations:
            report = validate(t)
            assert report.is_3manifold and report.is_closed

    def test_one_vertex_subset(self):
        every = {canonical_signature(t) for t in generate_census(CensusQuery(2, CensusKind.CLOSED))}
        one_vertex = {canonical_signature(t) for t in generate_census(CensusQuery(2, CensusKind.CLOSED, True))}
        assert one_vertex < every

    def test_binomial_is_a_member(self):
        signatures = {canonical_signature(t) for t in generate_census(CensusQuery(2, CensusKind.CLOSED, True))}
        assert canonical_signature(build_binomial(2)) in signatures

    @staticmethod
    def _exhaustive_signatures(graph, query: CensusQuery) -> Tuple[Set[str], int]:
        """Every gluing of the graph validated after the fact, plus how many of them have only valid edges."""
        assignment = graph.face_assignment()
        choices = [gluing_perms(face, target_face) for (_, face), (_, target_face) in assignment]
        signatures, edge_valid = set(), 0
        for perms in itertools.product(*choices):
            builder = TriangulationBuilder(graph.n)
            for ((tet, face), (target_tet, _)), p in zip(assignment, perms):
                builder.join(tet, face, target_tet, p)
            t = builder.build()
            report = validate(t)
            edge_valid += all(report.edge_valid)
            if is_member(report, query):
                signatures.add(canonical_signature(t))
        return signatures, edge_valid

    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("kind", CENSUS_KINDS)
    def test_pruning_keeps_every_member(self, n, kind):
        query = CensusQuery(n, kind)
        for graph in enumerate_census_graphs(n, query.closed):
            stats = GraphSearchStats()
            pruned = {m.signature for m in search_graph(graph, query, stats)}
            exhaustive, edge_valid = self._exhaustive_signatures(graph, query)
            assert pruned == exhaustive, graph.graph_id
            # leaves are only reached through gluings whose edges are all valid
            assert stats.leaves <= edge_valid

    def test_search_graph(self):
        query = CensusQuery(1, CensusKind.BOUNDED)
        members = [m for g in enumerate_census_graphs(1, closed=False) for m in search_graph(g, query)]
        assert len(members) == 3
        assert all(m.num_vertices == validate(m.triangulation).num_vertices for m in members)


class TestStats:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (None, "-"),
            (Fraction(2), "2.0"),
            (Fraction(11, 2), "5.5"),
            (Fraction(1, 3), "0.3"),
            (Fraction(5, 4), "1.3"),
            (Fraction(1, 20), "0.1"),
            (Fraction(313, 10), "31.3"),
        ],
    )
    def test_format_average(self, value, expected):
        assert format_average(value) == expected

    def test_filters(self):
        entries = [
            CensusEntry("a", num_vertices=1, sigma=4, kappa=2, sigma_discs=1, kappa_discs=1),
            CensusEntry("b", num_vertices=2, sigma=7, kappa=1, sigma_discs=3, kappa_discs=1),
        ]
        every = aggregate_stats(CensusQuery(1, CensusKind.BOUNDED), entries)
        assert (every.count, every.sigma_max, every.sigma_avg, every.kappa_max) == (2, 7, Fraction(11, 2), 2)

        one_vertex = aggregate_stats(CensusQuery(1, CensusKind.BOUNDED, one_vertex=True), entries)
        assert (one_vertex.count, one_vertex.sigma_max, one_vertex.signatures) == (1, 4, ["a"])

        discs = aggregate_stats(CensusQuery(1, CensusKind.BOUNDED, discs_only=True), entries)
        assert (discs.count, discs.sigma_max, discs.sigma_avg) == (2, 3, Fraction(2))

    def test_empty(self):
        stats = CensusStats(CensusQuery(1, CensusKind.CLOSED))
        assert stats.sigma_avg is None
        assert csv_row(stats) == "1,closed,false,false,0,0,-,0,-"

    def test_merge(self):
        query = CensusQuery(1, CensusKind.CLOSED)
        first = aggregate_stats(query, [CensusEntry("b", 1, 2, 1, 0, 0)])
        second = aggregate_stats(query, [CensusEntry("a", 1, 3, 1, 0, 0)])
        first.merge(second)
        assert (first.count, first.sigma_max, first.sigma_sum, first.signatures) == (2, 3, 5, ["a", "b"])

        with pytest.raises(InvalidCensusQuery):
            first.merge(CensusStats(CensusQuery(1, CensusKind.BOUNDED)))

    def test_entry_dict(self):
        entry = CensusEntry("a", 1, 2, 3, 4, 5)
        assert CensusEntry.from_dict(entry.to_dict()) == entry

    def test_single_tetrahedron(self):
        closed = aggregate_stats(CensusQuery(1, CensusKind.CLOSED))
        assert (closed.count, closed.sigma_max, format_average(closed.sigma_avg), closed.kappa_max) == (4, 3, "2.0", 1)

        one_vertex = aggregate_stats(CensusQuery(1, CensusKind.CLOSED, one_vertex=True))
        assert (one_vertex.count, one_vertex.sigma_max) == (3, 2)

        bounded = aggregate_stats(CensusQuery(1, CensusKind.BOUNDED))
        assert (bounded.count, bounded.sigma_max, format_average(bounded.sigma_avg)) == (3, 7, "5.0")


# size: label -> (count, sigma max, sigma avg, kappa max, kappa avg), None where no value is published
CENSUS_TABLE_ROWS = {
    1: {
        "closed": (4, 3, "2.0", 1, "1.0"),
        "closed 1-vertex": (3, 2, "1.7", None, None),
        "bounded": (3, 7, "5.0", 1, "1.0"),
        "bounded discs": (3, 7, "4.0", None, None),
    },
    2: {
        "closed": (17, 7, "3.9", 2, "1.2"),
        "closed 1-vertex": (12, 4, "3.3", None, None),
        "bounded": (17, 14, "8.2", 2, "1.3"),
        "bounded discs": (17, 14, "5.2", None, None),
    },
    3: {
        "closed": (81, 11, "5.5", 3, "1.5"),
        "closed 1-vertex": (63, 8, "4.9", None, None),
        "bounded": (156, 35, "14.0", 3, "1.7"),
        "bounded discs": (156, 27, "7.0", None, None),
    },
}


@lru_cache(maxsize=None)
def census_entries_by_kind(n: int) -> Dict[str, List[CensusEntry]]:
    return {kind: census_entries(CensusQuery(n, kind)) for kind in CENSUS_KINDS}


class TestCensusTables:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_rows(self, n):
        stats = stats_for_settings(n, census_entries_by_kind(n))
        for label, expected in CENSUS_TABLE_ROWS[n].items():
            s = stats[(label, n)]
            actual = (
                s.count,
                s.sigma_max,
                format_average(s.sigma_avg),
                s.kappa_max if expected[3] is not None else None,
                format_average(s.kappa_avg) if expected[4] is not None else None,
            )
            assert actual == expected, label

    @staticmethod
    def _check_binomial_is_worst(n: int, entries: List[CensusEntry]):
        one_vertex = [e for e in entries if e.num_vertices == 1]
        sigma_max = max(e.sigma for e in one_vertex)
        assert sigma_max == 2**n
        worst = {e.signature for e in one_vertex if e.sigma == sigma_max}
        assert canonical_signature(build_binomial(n)) in worst

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_binomial_is_worst_one_vertex(self, n):
        self._check_binomial_is_worst(n, census_entries_by_kind(n)[CensusKind.CLOSED])

    @slow
    def test_binomial_is_worst_one_vertex_n4(self):
        self._check_binomial_is_worst(4, census_entries(CensusQuery(4, CensusKind.CLOSED)))


class TestReport:
    def test_csv(self):
        stats = aggregate_stats(CensusQuery(1, CensusKind.CLOSED))
        text = format_csv([stats])
        assert text == f"{CSV_HEADER}\n1,closed,false,false,4,3,2.0,1,1.0\n"

    def test_render_tables(self):
        entries = {kind: census_entries(CensusQuery(1, kind)) for kind in (CensusKind.CLOSED, CensusKind.BOUNDED)}
        stats = stats_for_settings(1, entries)
        assert stats[("closed 1-vertex", 1)].count == 3
        assert stats[("bounded discs", 1)].sigma_max == 7

        counts = render_tables(stats, [1], 1)
        assert counts.splitlines()[-1].split() == ["1", "4", "3", "3"]
        assert "complexity" in render_tables(stats, [1, 2], 1)


class TestJournal:
    def test_record_and_load(self, tmp_path):
        path = str(tmp_path / "census.journal")
        journal = CensusJournal(path, dict(n=1, kind="closed"))
        assert journal.completed() == set()

        journal.record("1-2", [dict(signature="x")])
        assert journal.completed() == {"1-2"}
        assert journal.load("1-2") == [dict(signature="x")]

        other = CensusJournal(path, dict(n=1, kind="bounded"))
        assert other.load("1-2") is None
        assert other.load("1-3") is None


class TestRunner:
    def test_make_runner(self):
        assert isinstance(make_runner(census_cfg(1, CensusKind.CLOSED)), SerialCensusRunner)
        assert isinstance(make_runner(census_cfg(1, CensusKind.CLOSED, jobs=2)), ParallelCensusRunner)

    def test_serial(self):
        status, runner = run_census(census_cfg(1, CensusKind.CLOSED))
        assert status == ExperimentStatus.SUCCESS
        assert runner.stats.count == 4
        assert runner.signatures() == sorted(runner.signatures())

    @pytest.mark.parametrize("kind", CENSUS_KINDS)
    def test_merged_stats_match_aggregate(self, kind):
        _, runner = run_census(census_cfg(2, kind, one_vertex=True))
        assert csv_row(runner.stats) == csv_row(aggregate_stats(runner.query, runner.entries))
        assert runner.signatures() == aggregate_stats(runner.query, runner.entries).signatures

    def test_one_vertex_filter(self):
        _, runner = run_census(census_cfg(1, CensusKind.CLOSED, one_vertex=True))
        assert runner.stats.count == 3
        # the search itself is not filtered
        assert len(runner.entries) == 4

    def test_size_guard(self):
        with pytest.raises(CensusTooLarge):
            run_census(census_cfg(3, CensusKind.CLOSED, census_ceiling=2))

    def test_journal_resume(self, tmp_path):
        journal = str(tmp_path / "census.journal")
        _, first = run_census(census_cfg(2, CensusKind.CLOSED, journal=journal))
        assert len(CensusJournal(journal, {}).completed()) == len(first.graphs)

        _, second = run_census(census_cfg(2, CensusKind.CLOSED, journal=journal))
        assert csv_row(second.stats) == csv_row(first.stats)
        assert second.signatures() == first.signatures()
        assert second.stats.count == 17

    def test_dump_dir(self, tmp_path):
        dump_dir = tmp_path / "dump"
        _, runner = run_census(census_cfg(1, CensusKind.BOUNDED, dump_dir=str(dump_dir)))
        assert len(list(dump_dir.iterdir())) == runner.stats.count

    def test_jobs_do_not_change_the_output(self):
        results = []
        for jobs in (1, 2):
            _, runner = run_census(census_cfg(2, CensusKind.BOUNDED, jobs=jobs))
            results.append((csv_row(runner.stats), runner.signatures()))
        assert results[0] == results[1]
