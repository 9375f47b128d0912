"""Report assembly: every emitted file starts with a header line carrying
the tool version, a hash of the generating config, and a hash of the body,
so reruns are byte-identical and regressions pin cleanly (no timestamps)."""

from __future__ import annotations

import hashlib
import json

from . import __version__

JSONL = "jsonl"
CSV = "csv"
FORMATS = (CSV, JSONL)


def config_hash(config: dict) -> str:
    payload = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def content_hash(lines: list[str]) -> str:
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()[:16]


def assemble(
    body_lines: list[str],
    config: dict,
    fmt: str,
    extra: dict | None = None,
) -> str:
    """Prepend the header line appropriate for the format and return the
    full report text (trailing newline included).  ``extra`` adds flat
    key=value flags to the header (caveats and the like)."""
    cfg = config_hash(config)
    body = content_hash(body_lines)
    fields = {
        "tool": "palinkit",
        "version": __version__,
        "config": cfg,
        "content": body,
    }
    if extra:
        fields.update(extra)
    if fmt == JSONL:
        header = json.dumps(fields, separators=(",", ":"))
    elif fmt == CSV:
        header = "# " + " ".join(f"{key}={value}" for key, value in fields.items())
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    return "\n".join([header, *body_lines]) + "\n"
