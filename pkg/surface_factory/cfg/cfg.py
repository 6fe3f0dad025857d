from argparse import ArgumentParser, ArgumentTypeError
from typing import List

from surface_factory.census.generator import CENSUS_KINDS, DEFAULT_CENSUS_CEILING
from surface_factory.families.registry import family_names
from surface_factory.utils.utils import str2bool


def add_basic_cli_args(p: ArgumentParser):
    p.add_argument(
        "--log_level",
        default="info",
        type=str,
        choices=["debug", "info", "warning", "error"],
        help="Verbosity of the diagnostics written to stderr. Results always go to stdout.",
    )


def add_family_args(p: ArgumentParser):
    p.add_argument("name", type=str, choices=family_names(), help="Family to build")
    p.add_argument(
        "n",
        type=int,
        nargs="?",
        default=None,
        help="Number of tetrahedra (g11 and plug-e have a fixed size and accept it only if it matches). "
        "For tree-step this is the number of doubling steps applied to the 11-tetrahedron seed.",
    )


def add_enumeration_args(p: ArgumentParser):
    p.add_argument(
        "--oracle",
        action="store_true",
        help="Use the brute-force support enumeration instead of the double description method. "
        "Exponential, only meant for cross-checking small triangulations (at most 4 tetrahedra)",
    )
    p.add_argument(
        "--discs-only",
        "--discs_only",
        dest="discs_only",
        action="store_true",
        help="Only list vertex normal surfaces that are discs",
    )


def add_classify_args(p: ArgumentParser):
    p.add_argument(
        "--skip_check",
        default=False,
        type=str2bool,
        nargs="?",
        const=True,
        help="Do not re-check that the input vectors are admissible before reconstructing the surfaces",
    )


def add_census_args(p: ArgumentParser):
    p.add_argument("--n", type=int, required=True, help="Number of tetrahedra")
    p.add_argument("--kind", type=str, required=True, choices=CENSUS_KINDS, help="Closed or bounded triangulations")
    p.add_argument(
        "--one-vertex",
        "--one_vertex",
        dest="one_vertex",
        action="store_true",
        help="Only keep triangulations in which all vertices are identified",
    )
    p.add_argument(
        "--discs-only",
        "--discs_only",
        dest="discs_only",
        action="store_true",
        help="Statistics count only disc surfaces. Does not change which triangulations belong to the census",
    )
    p.add_argument("--format", type=str, default="csv", choices=["csv", "table"], help="Output format")
    p.add_argument(
        "--signatures",
        type=str,
        default=None,
        help="If set, write the canonical signatures of the census members to this file, one per line",
    )
    p.add_argument(
        "--dump_dir",
        "--dump-dir",
        dest="dump_dir",
        type=str,
        default=None,
        help="If set, write the vertex surface listing of every census member into this directory",
    )
    add_census_runner_args(p)


def add_census_runner_args(p: ArgumentParser):
    p.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="Number of worker processes. Each face pairing graph is one task, results do not depend on this value",
    )
    p.add_argument(
        "--journal",
        type=str,
        default=None,
        help="Checkpoint file. Completed tasks are recorded there and skipped when the same census is run again",
    )
    p.add_argument(
        "--census_ceiling",
        type=int,
        default=DEFAULT_CENSUS_CEILING,
        help="Refuse to run censuses with more tetrahedra than this unless --allow_large is given",
    )
    p.add_argument(
        "--allow_large",
        default=False,
        type=str2bool,
        nargs="?",
        const=True,
        help="Run censuses above --census_ceiling. The number of triangulations grows super-exponentially",
    )


def parse_tables(tables: str) -> List[int]:
    try:
        return sorted({int(x) for x in tables.split(",") if x.strip()})
    except ValueError:
        raise ArgumentTypeError(f"expected a comma-separated list of integers, got {tables!r}")


def add_report_args(p: ArgumentParser):
    p.add_argument("--tables", type=parse_tables, default="1,2", help="Comma-separated list of tables to render (1, 2)")
    p.add_argument("--max-n", "--max_n", dest="max_n", type=int, default=3, help="Largest census size in the tables")
    add_census_runner_args(p)


def add_verify_args(p: ArgumentParser):
    p.add_argument(
        "--tier",
        type=int,
        default=1,
        choices=[1, 2],
        help="1: fast golden checks (minutes). "
        "2: also the four-tetrahedron census tables and the 11-tetrahedron counts (hours)",
    )
