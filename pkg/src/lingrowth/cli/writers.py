"""
Deterministic output files.

Every CSV starts with one ``# lingrowth <version> config=<hash>`` comment
line; no file carries a timestamp, so equal configurations give
byte-identical outputs.
"""

import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from loguru import logger

from lingrowth.config.constants import OutputFiles

writer_logger = logger.bind(component="cli")


class OutputWriter:
    """Single writer for one ``--out`` directory."""

    def __init__(self, directory, digest: str, version: str):
        self.directory = Path(directory)
        self.digest = digest
        self.version = version
        self.written: List[str] = []

    @property
    def header_comment(self) -> str:
        return f"# lingrowth {self.version} config={self.digest}"

    def _path(self, name: OutputFiles) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        return name.under(self.directory)

    def write_csv(
        self,
        name: OutputFiles,
        rows: Iterable[Dict[str, Any]],
        fieldnames: Optional[List[str]] = None,
    ) -> Path:
        """Write dict rows; the header is ``fieldnames`` or the keys of the first row."""
        rows = list(rows)
        if fieldnames is None:
            fieldnames = list(rows[0].keys()) if rows else []
        path = self._path(name)
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(self.header_comment + "\n")
            writer = csv.DictWriter(handle, fieldnames=fieldnames, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        writer_logger.info(f"Wrote {len(rows)} rows to {path}")
        self.written.append(str(path))
        return path

    def write_json(self, name: OutputFiles, payload: Dict[str, Any]) -> Path:
        path = self._path(name)
        stamped = {**payload, "config_hash": self.digest, "version": self.version}
        path.write_text(json.dumps(stamped, indent=2, sort_keys=True, default=str) + "\n", encoding="utf-8")
        writer_logger.info(f"Wrote {path}")
        self.written.append(str(path))
        return path


def read_csv(path) -> List[Dict[str, str]]:
    """Rows of a file written by OutputWriter, skipping the comment line."""
    with Path(path).open(encoding="utf-8", newline="") as handle:
        lines = [line for line in handle if not line.startswith("#")]
    return list(csv.DictReader(lines))
