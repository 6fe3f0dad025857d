import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from surface_factory.census.report import collect_report_stats, format_csv, render_tables
from surface_factory.census.runner import run_census
from surface_factory.cfg.arguments import cfg_str, parse_full_cfg, parse_sf_args, verify_cfg
from surface_factory.cli.verify import run_verification
from surface_factory.enumeration.brute_force import brute_force_vertex_surfaces
from surface_factory.enumeration.double_description import enumerate_vertex_surfaces
from surface_factory.enumeration.stats import format_surface_listing, parse_surface_listing
from surface_factory.families.registry import FamilySpec, build_family
from surface_factory.topology.classify import CSV_HEADER, classify_vector
from surface_factory.triangulation.gluing_table import format_gluing_table, parse_gluing_table
from surface_factory.utils.errors import SurfaceFactoryError
from surface_factory.utils.misc import ExperimentStatus
from surface_factory.utils.timing import Timing
from surface_factory.utils.typing import Config, StatusCode
from surface_factory.utils.utils import log, set_log_level

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2

LOG_LEVELS = dict(debug=logging.DEBUG, info=logging.INFO, warning=logging.WARNING, error=logging.ERROR)


class UsageError(Exception):
    pass


def _read_input(stdin: TextIO, what: str) -> str:
    text = stdin.read()
    if not text.strip():
        raise UsageError(f"expected {what} on standard input, got nothing")
    return text


def run_family(cfg: Config, stdin: TextIO, stdout: TextIO) -> StatusCode:
    t = build_family(FamilySpec(cfg.name, cfg.n))
    stdout.write(format_gluing_table(t))
    return ExperimentStatus.SUCCESS


def run_enumerate(cfg: Config, stdin: TextIO, stdout: TextIO) -> StatusCode:
    t = parse_gluing_table(_read_input(stdin, "a gluing table"))

    timing = Timing("Enumeration")
    with timing.timeit("enumerate"):
        surfaces = brute_force_vertex_surfaces(t) if cfg.oracle else enumerate_vertex_surfaces(t)

    listed = list(surfaces)
    if cfg.discs_only:
        with timing.timeit("classify"):
            listed = [v for v in listed if classify_vector(t, v, check=False).is_disc]

    log.info(f"n={t.n}: {surfaces.sigma} vertex normal surfaces, {len(listed)} listed ({timing.flat_str()})")
    stdout.write(format_surface_listing(t, listed))
    return ExperimentStatus.SUCCESS


def run_classify(cfg: Config, stdin: TextIO, stdout: TextIO) -> StatusCode:
    t, vectors = parse_surface_listing(_read_input(stdin, "a surface listing"))
    if t is None:
        raise SurfaceFactoryError("surface listing does not embed its triangulation, pipe it from `enumerate`")

    stdout.write(CSV_HEADER + "\n")
    for v in vectors:
        stdout.write(classify_vector(t, v, check=not cfg.skip_check).csv_row() + "\n")
    return ExperimentStatus.SUCCESS


def run_census_verb(cfg: Config, stdin: TextIO, stdout: TextIO) -> StatusCode:
    status, runner = run_census(cfg)
    if status != ExperimentStatus.SUCCESS:
        return status

    if cfg.signatures:
        with open(cfg.signatures, "w") as f:
            f.writelines(f"{s}\n" for s in runner.signatures())

    if cfg.format == "csv":
        stdout.write(format_csv([runner.stats]))
    else:
        stdout.write(f"{runner.stats}\n")
    return ExperimentStatus.SUCCESS


def run_report(cfg: Config, stdin: TextIO, stdout: TextIO) -> StatusCode:
    status, stats = collect_report_stats(cfg, cfg.max_n)
    if status != ExperimentStatus.SUCCESS:
        return status

    stdout.write(render_tables(stats, cfg.tables, cfg.max_n))
    return ExperimentStatus.SUCCESS


def run_verify(cfg: Config, stdin: TextIO, stdout: TextIO) -> StatusCode:
    return run_verification(cfg.tier, stdout)


VERB_HANDLERS: Dict[str, Callable[[Config, TextIO, TextIO], StatusCode]] = {
    "family": run_family,
    "enumerate": run_enumerate,
    "classify": run_classify,
    "census": run_census_verb,
    "report": run_report,
    "verify": run_verify,
}


def main(argv: Optional[List[str]] = None, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None) -> int:
    """Entry point of the `surface-factory` command. Returns the process exit status."""
    argv = sys.argv[1:] if argv is None else argv
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout

    try:
        parser, _ = parse_sf_args(argv)
        cfg = parse_full_cfg(parser, argv)
    except SystemExit as exc:
        # argparse has already printed the usage
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    set_log_level(LOG_LEVELS[cfg.log_level])
    log.debug(f"Configuration:\n{cfg_str(cfg)}")
    if not verify_cfg(cfg):
        return EXIT_USAGE

    try:
        status = VERB_HANDLERS[cfg.verb](cfg, stdin, stdout)
    except UsageError as exc:
        log.error(f"{cfg.verb}: {exc}")
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except SurfaceFactoryError as exc:
        log.error(f"{cfg.verb}: {exc}")
        return EXIT_DOMAIN_ERROR

    return EXIT_OK if status == ExperimentStatus.SUCCESS else EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
