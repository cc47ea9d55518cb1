"""Append-only line-delimited JSON cache of invariant reports."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from . import __version__
from .report_io import report_from_dict, report_to_dict
from .structure import InvariantReport

log = logging.getLogger(__name__)


class ReportCache:
    """Records are {"p", "version", "report"}; only records matching `version` are hits.

    Meant to have a single writer (the scan collector).
    """

    def __init__(self, path: str | os.PathLike, version: str = __version__):
        self.path = Path(path)
        self.version = version
        self._index: dict[int, dict] | None = None

    def _load(self) -> dict[int, dict]:
        index: dict[int, dict] = {}
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, 1):
                    if not line.strip():
                        continue
                    try:
                        rec = json.loads(line)
                        p, version, report = rec["p"], rec["version"], rec["report"]
                    except (ValueError, KeyError, TypeError):
                        log.warning("%s:%d: skipping corrupt cache line", self.path, lineno)
                        continue
                    if version == self.version:
                        index[p] = report
        return index

    def get(self, p: int) -> InvariantReport | None:
        if self._index is None:
            self._index = self._load()
        d = self._index.get(p)
        if d is None:
            return None
        try:
            return report_from_dict(d)
        except (KeyError, TypeError, ValueError):
            log.warning("cache record for p=%d is malformed; ignoring", p)
            return None

    def put(self, rep: InvariantReport) -> None:
        d = report_to_dict(rep)
        line = json.dumps({"p": rep.p, "version": self.version, "report": d}, separators=(",", ":"))
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")
            fh.flush()
        if self._index is not None:
            self._index[rep.p] = d
