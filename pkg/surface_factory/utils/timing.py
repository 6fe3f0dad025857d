import time
from contextlib import contextmanager
from typing import Dict, Iterator, List, Tuple

from surface_factory.utils.attr_dict import AttrDict

_MIN_DURATION = 1e-9
_PRIVATE = ("_name", "_stack", "_nesting")


class Timing(AttrDict):
    """
    Wall-clock profile of census and enumeration stages, e.g. `with timing.add_time("enumerate"): ...`.
    Stage durations are readable as attributes (timing.enumerate). `timeit` keeps the last measurement,
    `add_time` accumulates. Flat measurements from worker processes are folded in with `merge`.
    """

    def __init__(self, name: str = "Profile", *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._name = name
        self._stack: List[str] = []
        # (depth, stage) in order of first entry, for the indented view
        self._nesting: List[Tuple[int, str]] = []

    @contextmanager
    def _stage(self, key: str, additive: bool) -> Iterator[None]:
        if key not in self:
            self[key] = 0.0
            self._nesting.append((len(self._stack), key))

        self._stack.append(key)
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = max(time.perf_counter() - start, _MIN_DURATION)
            self._stack.pop()
            self[key] = self[key] + elapsed if additive else elapsed

    def timeit(self, key: str):
        return self._stage(key, additive=False)

    def add_time(self, key: str):
        return self._stage(key, additive=True)

    def measurements(self) -> Dict[str, float]:
        return {k: v for k, v in self.items() if k not in _PRIVATE}

    def merge(self, other: Dict[str, float]) -> None:
        """Accumulate flat measurements coming back from a worker process."""
        for key, value in other.items():
            if key not in self:
                self._nesting.append((0, key))
            self[key] = self.get(key, 0.0) + value

    def flat_str(self) -> str:
        return ", ".join(f"{key}: {value:.4f}" for key, value in self.measurements().items())

    def __str__(self) -> str:
        lines = [f"{self._name}:"]
        lines.extend(f"{'  ' * (depth + 1)}{key}: {self[key]:.4f}" for depth, key in self._nesting)
        return "\n".join(lines)
