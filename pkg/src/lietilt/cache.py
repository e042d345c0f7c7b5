"""On-disk JSON cache for computed character tables.

One file per (kind, characteristic) with a format-version field.  Caches are
pure accelerators: entries are structurally validated on load, and a corrupt
or version-mismatched file is discarded silently and recomputed.  Writes go
to a temporary file in the same directory followed by an atomic rename, so
concurrent runs can share a cache directory without torn files.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Mapping

from .charring import SymCharacter
from .tiltchar import preload_tilting, tilting_table

__all__ = ["FORMAT_VERSION", "CharTableCache", "flush_tilting", "warm_tilting"]

FORMAT_VERSION = 1


class CharTableCache:
    """Character tables persisted as JSON under one directory."""

    def __init__(self, directory: Path | str):
        self.directory = Path(directory)

    def _path(self, kind: str, p: int) -> Path:
        return self.directory / f"{kind}-p{p}.json"

    def load_tilting(self, p: int) -> dict[int, SymCharacter]:
        """Load the tilting character table for characteristic p.

        Returns an empty table on any kind of damage: unreadable file, bad
        JSON, wrong version, or entries that fail the structural checks
        (top weight matching the key with multiplicity one, all
        multiplicities positive).
        """
        path = self._path("tilting", p)
        try:
            raw = json.loads(path.read_text())
        except (OSError, ValueError):
            return {}
        if (
            not isinstance(raw, dict)
            or raw.get("format_version") != FORMAT_VERSION
            or raw.get("kind") != "tilting"
            or raw.get("p") != p
            or not isinstance(raw.get("tables"), dict)
        ):
            return {}
        out: dict[int, SymCharacter] = {}
        try:
            for key, entry in raw["tables"].items():
                m = int(key)
                chi = SymCharacter({int(w): int(c) for w, c in entry.items()})
                if m < 0 or chi.max_weight != m or chi.multiplicity(m) != 1:
                    return {}
                if any(chi.multiplicity(w) < 0 for w in chi.support):
                    return {}
                out[m] = chi
        except (AttributeError, TypeError, ValueError):
            return {}
        return out

    def save_tilting(self, p: int, tables: Mapping[int, SymCharacter]) -> None:
        """Atomically write the tilting table for characteristic p."""
        payload = {
            "format_version": FORMAT_VERSION,
            "kind": "tilting",
            "p": p,
            "tables": {
                str(m): {str(w): chi.multiplicity(w) for w in chi.support}
                for m, chi in sorted(tables.items())
            },
        }
        self.directory.mkdir(parents=True, exist_ok=True)
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tilting-", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, self._path("tilting", p))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


def warm_tilting(cache: CharTableCache, p: int) -> None:
    """Seed the in-memory tilting memo from disk."""
    preload_tilting(p, cache.load_tilting(p))


def flush_tilting(cache: CharTableCache, p: int) -> None:
    """Persist the in-memory tilting memo for characteristic p."""
    cache.save_tilting(p, tilting_table(p))
