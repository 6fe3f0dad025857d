"""CSV rows and the two census tables: triangulation counts, and worst and average complexity."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from surface_factory.census.generator import CensusKind, CensusQuery
from surface_factory.census.runner import CensusEntry, CensusStats, aggregate_stats, format_average, run_census
from surface_factory.utils.attr_dict import AttrDict
from surface_factory.utils.misc import ExperimentStatus
from surface_factory.utils.typing import Config
from surface_factory.utils.utils import log

CSV_HEADER = "n,kind,one_vertex,discs_only,count,sigma_max,sigma_avg,kappa_max,kappa_avg"

# report columns: label, kind, one_vertex, discs_only
SETTINGS = (
    ("closed", CensusKind.CLOSED, False, False),
    ("closed 1-vertex", CensusKind.CLOSED, True, False),
    ("bounded", CensusKind.BOUNDED, False, False),
    ("bounded discs", CensusKind.BOUNDED, False, True),
)
COUNT_SETTINGS = SETTINGS[:3]

ReportStats = Dict[Tuple[str, int], CensusStats]


def _flag(value: bool) -> str:
    return "true" if value else "false"


def csv_row(stats: CensusStats) -> str:
    q = stats.query
    fields = [
        q.n,
        q.kind,
        _flag(q.one_vertex),
        _flag(q.discs_only),
        stats.count,
        stats.sigma_max,
        format_average(stats.sigma_avg),
        stats.kappa_max,
        format_average(stats.kappa_avg),
    ]
    return ",".join(str(f) for f in fields)


def format_csv(stats: Sequence[CensusStats]) -> str:
    return "\n".join([CSV_HEADER] + [csv_row(s) for s in stats]) + "\n"


def _render(title: str, header: List[str], rows: List[List[str]]) -> str:
    widths = [max(len(row[i]) for row in [header] + rows) for i in range(len(header))]

    def line(cells):
        return "  ".join(cell.rjust(width) for cell, width in zip(cells, widths)).rstrip()

    lines = [title, line(header), line(["-" * w for w in widths])]
    lines.extend(line(row) for row in rows)
    return "\n".join(lines) + "\n"


def render_counts(stats: ReportStats, max_n: int) -> str:
    header = ["n"] + [label for label, *_ in COUNT_SETTINGS]
    rows = [[str(n)] + [str(stats[(label, n)].count) for label, *_ in COUNT_SETTINGS] for n in range(1, max_n + 1)]
    return _render("Census size: number of 3-manifold triangulations", header, rows)


def render_complexity(stats: ReportStats, max_n: int) -> str:
    header = ["n"]
    for label, *_ in SETTINGS:
        header += [f"{label} max", f"{label} avg"]

    blocks = []
    for quantity in ("sigma", "kappa"):
        rows = []
        for n in range(1, max_n + 1):
            row = [str(n)]
            for label, *_ in SETTINGS:
                s = stats[(label, n)]
                row.append(str(getattr(s, f"{quantity}_max")))
                row.append(format_average(getattr(s, f"{quantity}_avg")))
            rows.append(row)
        blocks.append(_render(f"Census complexity ({quantity}): worst and average case", header, rows))
    return "\n".join(blocks)


def stats_for_settings(n: int, entries: Dict[str, List[CensusEntry]]) -> ReportStats:
    """All four report settings at size n from one closed and one bounded census."""
    result = {}
    for label, kind, one_vertex, discs_only in SETTINGS:
        query = CensusQuery(n, kind, one_vertex=one_vertex, discs_only=discs_only)
        result[(label, n)] = aggregate_stats(query, entries[kind])
    return result


def collect_report_stats(cfg: Config, max_n: int) -> Tuple[int, ReportStats]:
    stats: ReportStats = dict()
    for n in range(1, max_n + 1):
        entries = dict()
        for kind in (CensusKind.CLOSED, CensusKind.BOUNDED):
            census_cfg = AttrDict(vars(cfg) if not isinstance(cfg, dict) else cfg).copy()
            census_cfg.update(n=n, kind=kind, one_vertex=False, discs_only=False, signatures=None, dump_dir=None)
            if cfg.journal:
                census_cfg.journal = f"{cfg.journal}.n{n}.{kind}"

            status, runner = run_census(census_cfg)
            if status != ExperimentStatus.SUCCESS:
                log.error(f"Census n={n} {kind} did not complete")
                return status, stats
            entries[kind] = runner.entries
        stats.update(stats_for_settings(n, entries))
    return ExperimentStatus.SUCCESS, stats


def render_tables(stats: ReportStats, tables: Sequence[int], max_n: int) -> str:
    rendered = []
    if 1 in tables:
        rendered.append(render_counts(stats, max_n))
    if 2 in tables:
        rendered.append(render_complexity(stats, max_n))
    return "\n".join(rendered)
