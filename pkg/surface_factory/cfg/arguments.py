import argparse
import sys
from typing import Callable, Dict, List, Optional, Tuple

from surface_factory.cfg.cfg import (
    add_basic_cli_args,
    add_census_args,
    add_classify_args,
    add_enumeration_args,
    add_family_args,
    add_report_args,
    add_verify_args,
)
from surface_factory.utils.attr_dict import AttrDict
from surface_factory.utils.typing import Config
from surface_factory.utils.utils import log

VERBS: Dict[str, Tuple[str, Callable[[argparse.ArgumentParser], None]]] = {
    "family": ("Print the gluing table of a family member", add_family_args),
    "enumerate": ("Read a gluing table from stdin, print its vertex normal surfaces", add_enumeration_args),
    "classify": ("Read a surface listing from stdin, print the topology of every surface", add_classify_args),
    "census": ("Generate a census and print its statistics", add_census_args),
    "report": ("Render the census tables", add_report_args),
    "verify": ("Run the golden checks and report pass/fail per criterion", add_verify_args),
}


def parse_sf_args(argv: Optional[List[str]] = None) -> Tuple[argparse.ArgumentParser, argparse.Namespace]:
    """
    Create the verb parser and parse the known arguments.
    Returns the parser too, so callers can add arguments before the final pass.

    argv: list of arguments to parse. If None, use sys.argv.
    returns: (parser, args)
    """
    if argv is None:
        argv = sys.argv[1:]

    p = argparse.ArgumentParser(
        prog="surface-factory",
        description="Normal surface enumeration, classification and census statistics",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_basic_cli_args(p)

    subparsers = p.add_subparsers(dest="verb", metavar="verb")
    subparsers.required = True
    for verb, (help_str, add_args) in VERBS.items():
        sp = subparsers.add_parser(verb, help=help_str, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        add_args(sp)

    args, _ = p.parse_known_args(argv)
    return p, args


def parse_full_cfg(parser: argparse.ArgumentParser, argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Given a parser, parse all arguments and return the final configuration."""
    if argv is None:
        argv = sys.argv[1:]

    args = parser.parse_args(argv)
    args = postprocess_args(args, argv)
    return args


def postprocess_args(args: argparse.Namespace, argv: List[str]) -> argparse.Namespace:
    args.command_line = " ".join(argv)
    return args


def default_cfg(verb: str, extra: Optional[List[str]] = None) -> Config:
    """Configuration of a verb with all defaults, e.g. for census runners driven from code."""
    parser, _ = parse_sf_args([verb] + (extra or []))
    return parse_full_cfg(parser, [verb] + (extra or []))


def verify_cfg(cfg: Config) -> bool:
    """
    Checks that argparse cannot express. Logs every problem and returns False if there is any.
    """
    good_config: bool = True

    def cfg_error(msg: str) -> None:
        nonlocal good_config
        good_config = False
        log.error(msg)

    verb = cfg.verb
    if verb == "family" and cfg.n is not None and cfg.n < 0:
        cfg_error(f"{cfg.n=} must be non-negative")

    if verb == "census" and cfg.n < 1:
        cfg_error(f"{cfg.n=} must be at least 1")

    if verb in ("census", "report"):
        if cfg.jobs < 1:
            cfg_error(f"{cfg.jobs=} must be at least 1")
        if cfg.census_ceiling < 1:
            cfg_error(f"{cfg.census_ceiling=} must be at least 1")

    if verb == "report":
        if cfg.max_n < 1:
            cfg_error(f"{cfg.max_n=} must be at least 1")
        if not cfg.tables or any(table not in (1, 2) for table in cfg.tables):
            cfg_error(f"{cfg.tables=} must be a non-empty subset of 1,2")

    return good_config


def cfg_dict(cfg: Config) -> AttrDict:
    if isinstance(cfg, dict):
        return AttrDict(cfg)
    else:
        return AttrDict(vars(cfg))


def cfg_str(cfg: Config) -> str:
    cfg_dict_ = cfg_dict(cfg)
    lines = []
    for k, v in cfg_dict_.items():
        lines.append(f"{k}={v}")
    return "\n".join(lines)
