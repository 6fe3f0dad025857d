"""Logging and small filesystem and process helpers shared by every command."""

import argparse
import logging
import os
from collections import Counter
from os.path import dirname
from typing import Optional

import psutil
from colorlog import ColoredFormatter

LOG_FORMAT = "[%(asctime)s][%(process)05d] %(message)s"
LOG_COLORS = {
    "DEBUG": "cyan",
    "INFO": "white,bold",
    "WARNING": "yellow",
    "ERROR": "red,bold",
    "CRITICAL": "red,bg_white",
}


def _stderr_handler(level: int) -> logging.Handler:
    # stdout carries command output only
    handler = logging.StreamHandler()
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter(f"%(log_color)s{LOG_FORMAT}", reset=True, log_colors=LOG_COLORS))
    return handler


log = logging.getLogger("sf")
log.setLevel(logging.DEBUG)
log.handlers = []  # re-imports in spawned workers must not stack handlers
log.propagate = False
stream_handler = _stderr_handler(logging.INFO)
log.addHandler(stream_handler)


def set_log_level(level: int) -> None:
    stream_handler.setLevel(level)


def init_file_logger(path: Optional[str]) -> None:
    """Mirror all diagnostics, debug included, into a file next to the census journal."""
    if not path or any(isinstance(h, logging.FileHandler) for h in log.handlers):
        return

    ensure_dir_exists(dirname(os.path.abspath(path)))
    file_handler = logging.FileHandler(path)
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    log.addHandler(file_handler)


def str2bool(v) -> bool:
    if isinstance(v, bool):
        return v
    lowered = str(v).lower()
    if lowered not in ("true", "false"):
        raise argparse.ArgumentTypeError(f"Boolean value expected, got {v!r}")
    return lowered == "true"


def ensure_dir_exists(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path


def memory_consumption_mb() -> float:
    """Resident memory of the current process."""
    return psutil.Process(os.getpid()).memory_info().rss / 1e6


def log_every_n(n: int, level: int, msg: str, *args, **kwargs) -> None:
    """Log `msg` on the first call and then once every n calls. Only `msg` is used to count calls."""
    seen = log_every_n.history[msg]
    if seen % n == 0:
        log.log(level, f"{msg} ({seen} times)" if seen > 1 else msg, *args, **kwargs)
    log_every_n.history[msg] += 1


log_every_n.history = Counter()
