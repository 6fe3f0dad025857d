from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import partial
from os.path import join
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from threadpoolctl import threadpool_limits

from surface_factory.census.errors import InvalidCensusQuery
from surface_factory.census.face_pairings import CensusGraph
from surface_factory.census.generator import CensusQuery, census_graphs, check_census_size, search_graph
from surface_factory.census.journal import CensusJournal
from surface_factory.cfg.configurable import Configurable
from surface_factory.enumeration.double_description import enumerate_vertex_surfaces
from surface_factory.enumeration.stats import complexity_stats, format_surface_listing
from surface_factory.utils.algo_version import ALGO_VERSION
from surface_factory.utils.misc import ExperimentStatus, memory_stats
from surface_factory.utils.multiprocessing_utils import get_mp_ctx
from surface_factory.utils.timing import Timing
from surface_factory.utils.typing import Config, StatusCode
from surface_factory.utils.utils import ensure_dir_exists, init_file_logger, log


@dataclass(frozen=True)
class CensusEntry:
    """Per-triangulation record of a census run, everything the statistics need."""

    signature: str
    num_vertices: int
    sigma: int
    kappa: int
    sigma_discs: int
    kappa_discs: int

    def to_dict(self) -> Dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: Dict) -> CensusEntry:
        return cls(**d)


TaskResult = Tuple[str, List[Dict], Dict[str, float]]


def census_task(graph: CensusGraph, query: CensusQuery, dump_dir: Optional[str] = None) -> TaskResult:
    """Searches one face pairing graph and enumerates the surfaces of every member. Runs in worker processes."""
    timing = Timing(f"Task {graph.graph_id}")
    with timing.add_time("search"):
        members = search_graph(graph, query)

    entries = []
    for idx, member in enumerate(members):
        t = member.triangulation
        with timing.add_time("enumerate"):
            surfaces = enumerate_vertex_surfaces(t)
        with timing.add_time("classify"):
            stats = complexity_stats(t, surfaces)

        if dump_dir is not None:
            with open(join(dump_dir, f"{graph.graph_id}-{idx}.txt"), "w") as f:
                f.write(format_surface_listing(t, surfaces))

        entry = CensusEntry(
            signature=member.signature,
            num_vertices=member.num_vertices,
            sigma=stats.sigma,
            kappa=stats.kappa,
            sigma_discs=stats.sigma_discs,
            kappa_discs=stats.kappa_discs,
        )
        entries.append(entry.to_dict())

    return graph.graph_id, entries, timing.measurements()


def format_average(value: Optional[Fraction]) -> str:
    """One decimal, halves rounded up, computed on the exact rational."""
    if value is None:
        return "-"
    tenths = math.floor(value * 10 + Fraction(1, 2))
    return f"{tenths // 10}.{tenths % 10}"


@dataclass
class CensusStats:
    query: CensusQuery
    count: int = 0
    sigma_max: int = 0
    sigma_sum: int = 0
    kappa_max: int = 0
    kappa_sum: int = 0
    algo_version: int = ALGO_VERSION
    signatures: List[str] = field(default_factory=list)

    def add(self, entry: CensusEntry) -> None:
        if self.query.one_vertex and entry.num_vertices != 1:
            return

        sigma, kappa = entry.sigma, entry.kappa
        if self.query.discs_only:
            sigma, kappa = entry.sigma_discs, entry.kappa_discs

        self.count += 1
        self.sigma_max = max(self.sigma_max, sigma)
        self.sigma_sum += sigma
        self.kappa_max = max(self.kappa_max, kappa)
        self.kappa_sum += kappa
        self.signatures.append(entry.signature)

    def merge(self, other: CensusStats) -> None:
        if self.query != other.query:
            raise InvalidCensusQuery(f"cannot merge statistics of {self.query} and {other.query}")
        self.count += other.count
        self.sigma_max = max(self.sigma_max, other.sigma_max)
        self.sigma_sum += other.sigma_sum
        self.kappa_max = max(self.kappa_max, other.kappa_max)
        self.kappa_sum += other.kappa_sum
        self.signatures = sorted(self.signatures + other.signatures)

    @property
    def sigma_avg(self) -> Optional[Fraction]:
        return Fraction(self.sigma_sum, self.count) if self.count else None

    @property
    def kappa_avg(self) -> Optional[Fraction]:
        return Fraction(self.kappa_sum, self.count) if self.count else None

    def __str__(self) -> str:
        return (
            f"n={self.query.n} {self.query.kind}: count={self.count} "
            f"sigma max/avg={self.sigma_max}/{format_average(self.sigma_avg)} "
            f"kappa max/avg={self.kappa_max}/{format_average(self.kappa_avg)}"
        )


def aggregate_stats(query: CensusQuery, entries: Optional[Sequence[CensusEntry]] = None) -> CensusStats:
    """Statistics of a census. Without precomputed entries the census is generated serially first."""
    if entries is None:
        entries = census_entries(query)

    stats = CensusStats(query)
    for entry in sorted(entries, key=lambda e: e.signature):
        stats.add(entry)
    return stats


def search_query(query: CensusQuery) -> CensusQuery:
    """The filters only select among the members, the search itself depends on size and kind alone."""
    return CensusQuery(query.n, query.kind)


def census_entries(query: CensusQuery) -> List[CensusEntry]:
    entries = []
    for graph in census_graphs(query):
        _, records, _ = census_task(graph, search_query(query))
        entries.extend(CensusEntry.from_dict(r) for r in records)
    return sorted(entries, key=lambda e: e.signature)


class CensusRunner(Configurable):
    def __init__(self, cfg: Config):
        super().__init__(cfg)
        self.query = CensusQuery(cfg.n, cfg.kind, one_vertex=cfg.one_vertex, discs_only=cfg.discs_only)
        self.timing = Timing("Census profile")
        self.graphs: List[CensusGraph] = []
        self.journal: Optional[CensusJournal] = None
        self.entries: List[CensusEntry] = []
        self.stats = CensusStats(self.query)
        self.status: StatusCode = ExperimentStatus.SUCCESS

    def init(self) -> StatusCode:
        check_census_size(self.query, self.cfg.census_ceiling, self.cfg.allow_large)

        if self.cfg.journal:
            init_file_logger(f"{self.cfg.journal}.log")
            journal_key = dict(search_query(self.query).as_dict(), algo_version=ALGO_VERSION)
            self.journal = CensusJournal(self.cfg.journal, journal_key)
        if self.cfg.dump_dir:
            ensure_dir_exists(self.cfg.dump_dir)

        with self.timing.timeit("graphs"):
            self.graphs = census_graphs(self.query)
        log.info(f"Census n={self.query.n} {self.query.kind}: {len(self.graphs)} face pairing graphs")
        return ExperimentStatus.SUCCESS

    def _pending_graphs(self) -> List[CensusGraph]:
        if self.journal is None:
            return list(self.graphs)

        done = self.journal.completed()
        pending = []
        for graph in self.graphs:
            records = self.journal.load(graph.graph_id) if graph.graph_id in done else None
            if records is None:
                pending.append(graph)
            else:
                self._absorb([CensusEntry.from_dict(r) for r in records])

        log.info(f"Journal {self.journal.path}: {len(self.graphs) - len(pending)} tasks done, {len(pending)} to go")
        return pending

    def _absorb(self, entries: List[CensusEntry]) -> None:
        self.entries.extend(entries)
        self.stats.merge(aggregate_stats(self.query, entries))

    def _execute(self, graphs: List[CensusGraph]) -> Iterator[TaskResult]:
        raise NotImplementedError()

    def _on_task_done(self, result: TaskResult, done: int, total: int) -> None:
        graph_id, records, measurements = result
        self._absorb([CensusEntry.from_dict(r) for r in records])
        self.timing.merge(measurements)
        if self.journal is not None:
            self.journal.record(graph_id, records)
        log.debug(f"Task {graph_id} done ({done}/{total}): {len(records)} triangulations, {memory_stats('census')}")

    def run(self) -> StatusCode:
        pending = self._pending_graphs()
        started = time.time()

        with self.timing.timeit("main_loop"):
            try:
                for done, result in enumerate(self._execute(pending), start=1):
                    self._on_task_done(result, done, len(pending))
            except KeyboardInterrupt:
                log.warning("Census interrupted, completed tasks are kept in the journal")
                self.status = ExperimentStatus.INTERRUPTED

        self.entries.sort(key=lambda e: e.signature)

        log.info(self.timing.flat_str())
        log.info(f"{self.stats} ({time.time() - started:.1f}s)")
        return self.status

    def signatures(self) -> List[str]:
        return list(self.stats.signatures)


class SerialCensusRunner(CensusRunner):
    def _execute(self, graphs: List[CensusGraph]) -> Iterator[TaskResult]:
        for graph in graphs:
            yield census_task(graph, search_query(self.query), self.cfg.dump_dir)


def _init_worker() -> None:
    # workers already run one per core
    threadpool_limits(limits=1)


class ParallelCensusRunner(CensusRunner):
    def _execute(self, graphs: List[CensusGraph]) -> Iterator[TaskResult]:
        mp_ctx = get_mp_ctx(serial=False)
        task = partial(census_task, query=search_query(self.query), dump_dir=self.cfg.dump_dir)

        log.debug(f"Starting {self.cfg.jobs} census workers...")
        pool = mp_ctx.Pool(processes=self.cfg.jobs, initializer=_init_worker)
        try:
            yield from pool.imap_unordered(task, graphs)
            pool.close()
        except BaseException:
            pool.terminate()
            raise
        finally:
            pool.join()


def make_runner(cfg: Config) -> CensusRunner:
    if cfg.jobs <= 1:
        runner_cls = SerialCensusRunner
    else:
        runner_cls = ParallelCensusRunner

    return runner_cls(cfg)


def run_census(cfg: Config) -> Tuple[StatusCode, CensusRunner]:
    runner = make_runner(cfg)

    status = runner.init()
    if status == ExperimentStatus.SUCCESS:
        status = runner.run()

    return status, runner
