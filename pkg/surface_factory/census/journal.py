"""
Append-only checkpoint journal of completed face pairing graph tasks.

The journal file holds one `done <graph-id>` line per finished task, the task's results live in
`<journal>.d/<graph-id>.json` and are written before the line is appended, so a listed task can always be reloaded.
"""

from __future__ import annotations

import json
import os
from os.path import join
from typing import Dict, List, Optional, Set

from filelock import FileLock

from surface_factory.utils.utils import ensure_dir_exists, log

DONE_PREFIX = "done "
JOURNAL_LOCK_TIMEOUT = 60


class CensusJournal:
    def __init__(self, path: str, query: Dict):
        self.path = path
        self.results_dir = f"{path}.d"
        self.query = query
        self.lock = FileLock(f"{path}.lock")

    def _result_file(self, graph_id: str) -> str:
        return join(self.results_dir, f"{graph_id}.json")

    def completed(self) -> Set[str]:
        if not os.path.isfile(self.path):
            return set()

        done = set()
        with self.lock.acquire(timeout=JOURNAL_LOCK_TIMEOUT):
            with open(self.path, "r") as f:
                for line in f:
                    line = line.strip()
                    if line.startswith(DONE_PREFIX):
                        done.add(line[len(DONE_PREFIX) :])
        return done

    def load(self, graph_id: str) -> Optional[List[Dict]]:
        """Results of a completed task, None if they were recorded for a different query or are unreadable."""
        try:
            with open(self._result_file(graph_id), "r") as f:
                record = json.load(f)
        except (OSError, ValueError) as exc:
            log.warning(f"Could not reload journaled task {graph_id}: {exc}")
            return None

        if record.get("query") != self.query:
            log.warning(f"Journaled task {graph_id} belongs to query {record.get('query')}, recomputing")
            return None
        return record["members"]

    def record(self, graph_id: str, members: List[Dict]) -> None:
        ensure_dir_exists(self.results_dir)
        with self.lock.acquire(timeout=JOURNAL_LOCK_TIMEOUT):
            tmp = self._result_file(graph_id) + ".tmp"
            with open(tmp, "w") as f:
                json.dump(dict(query=self.query, members=members), f, sort_keys=True)
            os.replace(tmp, self._result_file(graph_id))

            with open(self.path, "a") as f:
                f.write(f"{DONE_PREFIX}{graph_id}\n")
                f.flush()
