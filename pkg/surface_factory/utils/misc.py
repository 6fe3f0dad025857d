from typing import Dict

from surface_factory.utils.utils import memory_consumption_mb


class ExperimentStatus:
    SUCCESS, FAILURE, INTERRUPTED = range(3)


def memory_stats(process: str) -> Dict[str, float]:
    return {f"memory_{process}": memory_consumption_mb()}
