"""Checksummed on-disk cache for computed sequence tables.

One JSON file per parameter set, keyed by the canonical (a, b, d0) strings.
Writes are atomic (temp file + rename) and reads verify a SHA-256 checksum
over the canonical payload, so a torn or edited file surfaces as
:class:`CacheCorruptionError` instead of silently wrong mathematics.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

from .errors import CacheCorruptionError
from .recurrence import Params, SequenceTable
from .serialize import canonical_json_bytes, frac_str, parse_rational, sha256_hex

CACHE_ENV_VAR = "RECGROW_CACHE_DIR"
CACHE_SCHEMA_VERSION = 1


def params_key(params: Params) -> str:
    """Stable filename stem for a parameter set."""
    canonical = f"{frac_str(params.a)}|{frac_str(params.b)}|{frac_str(params.d0)}"
    return sha256_hex(canonical.encode("utf-8"))[:16]


def _payload(table: SequenceTable) -> dict:
    return {
        "schema_version": CACHE_SCHEMA_VERSION,
        "params": {
            "a": frac_str(table.params.a),
            "b": frac_str(table.params.b),
            "d0": frac_str(table.params.d0),
        },
        "n_max": table.n_max,
        "values": [frac_str(v) for v in table.values],
    }


def store_table(table: SequenceTable, path: Union[str, Path]) -> None:
    """Write a table atomically: serialize, checksum, temp file, rename."""
    path = Path(path)
    payload = _payload(table)
    payload["checksum"] = sha256_hex(canonical_json_bytes(payload))
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(canonical_json_bytes(payload))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_table(path: Union[str, Path]) -> SequenceTable:
    """Read a table back; any parse or checksum failure is corruption."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise CacheCorruptionError(f"unreadable cache file {path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise CacheCorruptionError(f"malformed cache file {path}: not an object")
    stored = payload.pop("checksum", None)
    actual = sha256_hex(canonical_json_bytes(payload))
    if stored != actual:
        raise CacheCorruptionError(f"checksum mismatch in {path}: stored {stored!r}, computed {actual!r}")
    try:
        if payload["schema_version"] != CACHE_SCHEMA_VERSION:
            raise CacheCorruptionError(
                f"unsupported cache schema {payload['schema_version']} in {path}"
            )
        params = Params(
            a=parse_rational(payload["params"]["a"]),
            b=parse_rational(payload["params"]["b"]),
            d0=parse_rational(payload["params"]["d0"]),
        )
        values = tuple(parse_rational(v) for v in payload["values"])
        if len(values) != payload["n_max"] + 1:
            raise CacheCorruptionError(f"value count disagrees with n_max in {path}")
    except (KeyError, TypeError, ValueError) as exc:
        raise CacheCorruptionError(f"malformed cache file {path}: {exc}") from exc
    return SequenceTable(params=params, values=values)


def cache_roundtrip(table: SequenceTable, path: Union[str, Path]) -> SequenceTable:
    """Write then read a table; the result is bit-identical to the input."""
    store_table(table, path)
    return load_table(path)


class SequenceCache:
    """Directory of cached tables, one file per parameter set."""

    def __init__(self, directory: Union[str, Path]):
        self.directory = Path(directory)

    def path_for(self, params: Params) -> Path:
        return self.directory / f"seq_{params_key(params)}.json"

    def get(self, params: Params, n_max: int) -> Optional[SequenceTable]:
        """Cached table truncated to n_max, or None on miss/too-short.

        Prefixes are reusable because evaluation is deterministic.
        """
        path = self.path_for(params)
        if not path.exists():
            return None
        table = load_table(path)
        if table.params != params or table.n_max < n_max:
            return None
        return SequenceTable(params=params, values=table.values[: n_max + 1])

    def put(self, table: SequenceTable) -> None:
        """Store a table unless an equal-or-longer one is already cached."""
        path = self.path_for(table.params)
        if path.exists():
            try:
                existing = load_table(path)
                if existing.params == table.params and existing.n_max >= table.n_max:
                    return
            except CacheCorruptionError:
                pass  # overwrite corrupt entries
        store_table(table, path)
