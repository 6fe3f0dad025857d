import multiprocessing
from functools import lru_cache
from multiprocessing.context import BaseContext
from typing import Optional


@lru_cache(maxsize=None)
def _spawn_ctx() -> BaseContext:
    return multiprocessing.get_context("spawn")


def get_mp_ctx(serial: bool) -> Optional[BaseContext]:
    """Spawn context for census worker pools, None when running serially."""
    return None if serial else _spawn_ctx()
