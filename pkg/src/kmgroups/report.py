"""Reports emitted by the command line tool, as JSON or aligned text.

Both renderings carry the same payload: the text form lists every leaf of
the flattened payload as ``key  value`` with the value JSON encoded, and
:func:`parse_text` reads it back.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def payload(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "results": self.results,
                "checks": self.checks, "seconds": round(self.seconds, 3)}

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(d["command"], d.get("inputs", {}), d.get("results", {}),
                   d.get("checks", []), d.get("seconds", 0.0))

    def to_text(self) -> str:
        flat = flatten(self.payload())
        width = max((len(k) for k in flat), default=0)
        lines = [f"{k.ljust(width)}  {json.dumps(v)}" for k, v in flat.items()]
        if self.checks:
            lines.append("")
            for c in self.checks:
                lines.append(f"# {'PASS' if c['passed'] else 'FAIL'}  {c['name']}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def flatten(obj: Any, prefix: str = "") -> dict[str, Any]:
    """Dotted keys for dicts, ``[i]`` for lists; empty containers kept as leaves."""
    out: dict[str, Any] = {}
    if isinstance(obj, dict) and obj:
        for k, v in obj.items():
            out.update(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(obj, list) and obj:
        for i, v in enumerate(obj):
            out.update(flatten(v, f"{prefix}[{i}]"))
    else:
        out[prefix] = obj
    return out


def parse_text(text: str) -> dict[str, Any]:
    """Flattened payload from :meth:`Report.to_text` output."""
    out = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("  ")
        out[key.strip()] = json.loads(value.strip())
    return out
