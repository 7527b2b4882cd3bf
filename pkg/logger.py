"""Structured logging helpers for check reports."""

from __future__ import annotations

import csv
import json
from typing import Optional

from check_types import Report


class ReportLogger:
    def __init__(self, path: str, *, fmt: str = "jsonl") -> None:
        self.path = path
        self.format = fmt.lower()
        if self.format not in ("jsonl", "csv"):
            raise ValueError(f"Unsupported log format: {fmt}")
        newline = "" if self.format == "csv" else "\n"
        self._handle = open(path, "a", encoding="utf-8", newline=newline)
        self._writer: Optional[csv.DictWriter] = None
        if self.format == "csv":
            fieldnames = ["instance", "command", "check", "verdict", "detail", "dims", "witness"]
            self._writer = csv.DictWriter(self._handle, fieldnames=fieldnames)
            if self._handle.tell() == 0:
                self._writer.writeheader()

    def __enter__(self) -> "ReportLogger":
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()

    def log(self, report: Report) -> None:
        """Append one record per check result."""

        for check in report.checks:
            if self.format == "jsonl":
                record = {"instance": report.instance, "command": report.command}
                record.update(check.to_dict())
                json.dump(record, self._handle, ensure_ascii=False, sort_keys=True, default=str)
                self._handle.write("\n")
            else:
                assert self._writer is not None
                self._writer.writerow(
                    {
                        "instance": report.instance,
                        "command": report.command,
                        "check": check.name,
                        "verdict": check.verdict.value,
                        "detail": check.detail,
                        "dims": json.dumps(check.dims, ensure_ascii=False, sort_keys=True),
                        "witness": json.dumps(check.witness, ensure_ascii=False, sort_keys=True, default=str),
                    }
                )
        self._handle.flush()

    def close(self) -> None:
        if not self._handle.closed:
            self._handle.close()


__all__ = ["ReportLogger"]
