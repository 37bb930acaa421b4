"""Deterministic artifact rendering and seed plumbing for the CLI.

Two format rules keep reruns byte-identical: floats are emitted as their
shortest round-trip repr (after coercion to a plain Python float), and
nothing time- or host-dependent is ever written into an artifact.  Wall
clock chatter belongs on stderr.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import random
import sys
from typing import Mapping, Sequence

TOOL_NAME = "bruhatlab"
TOOL_VERSION = "0.1.0"


def spawn_stream(seed: int, index: int) -> random.Random:
    """Independent child generator for worker `index` of a seeded run.

    Hashing "seed:index" decouples the streams from worker count arithmetic:
    shard i always sees the same draws no matter how many siblings it has.
    """
    digest = hashlib.sha256(f"{seed}:{index}".encode("ascii")).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def shard_sizes(total: int, workers: int) -> list[int]:
    """Split `total` trials into `workers` near-equal shards, largest first."""
    if total < 1 or workers < 1:
        raise ValueError(f"need total >= 1 and workers >= 1, got {total}, {workers}")
    base, extra = divmod(total, workers)
    return [base + 1] * extra + [base] * (workers - extra)


def format_value(value: object) -> str:
    """Canonical text form of one cell."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        as_float = float(value)
        if not math.isfinite(as_float):
            raise ValueError(f"artifacts must be finite, got {as_float}")
        return repr(as_float)
    if isinstance(value, str):
        return value
    raise TypeError(f"cannot render {type(value).__name__} in an artifact")


def _json_value(value: object) -> object:
    if isinstance(value, bool) or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        as_float = float(value)
        if not math.isfinite(as_float):
            raise ValueError(f"artifacts must be finite, got {as_float}")
        return as_float
    raise TypeError(f"cannot render {type(value).__name__} in an artifact")


def _config_line(config: Mapping[str, object]) -> str:
    clean = {key: _json_value(val) for key, val in config.items() if val is not None}
    return json.dumps(clean, sort_keys=True, separators=(", ", ": "))


def render_csv(
    rows: Sequence[Mapping[str, object]],
    columns: Sequence[str],
    config: Mapping[str, object],
) -> str:
    """Comment preamble (tool version, config echo) plus a plain CSV table."""
    buffer = io.StringIO()
    buffer.write(f"# {TOOL_NAME} {TOOL_VERSION}\n")
    buffer.write(f"# config {_config_line(config)}\n")
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row[col]) for col in columns])
    return buffer.getvalue()


def render_json(
    rows: Sequence[Mapping[str, object]],
    columns: Sequence[str],
    config: Mapping[str, object],
) -> str:
    payload = {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "config": {k: _json_value(v) for k, v in config.items() if v is not None},
        "rows": [{col: _json_value(row[col]) for col in columns} for row in rows],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
