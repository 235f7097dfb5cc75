"""Run reports and benchmark suites."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "type": "object",
    "required": [
        "schema", "instance", "algorithm", "weight", "oracle_weight", "ratio", "wall_time_ms", "seed",
    ],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "instance": {
            "type": "object",
            "required": ["kind", "params"],
            "properties": {
                "kind": {"enum": ["two_clique", "planted_laminar", "random_gnp", "star_pvc", "file"]},
                "params": {"type": "object"},
            },
        },
        "algorithm": {
            "type": "object",
            "required": ["name", "config"],
            "properties": {"name": {"type": "string"}, "config": {"type": "object"}},
        },
        "weight": {"type": "number"},
        "oracle_weight": {"type": ["number", "null"]},
        "ratio": {"type": ["number", "null"]},
        "wall_time_ms": {"type": "integer", "minimum": 0},
        "seed": {"type": "integer"},
    },
}


@dataclass
class InstanceSpec:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)


@dataclass
class RunReport:
    instance: InstanceSpec
    algorithm: dict[str, Any]
    weight: float
    oracle_weight: float | None
    ratio: float | None
    wall_time_ms: int
    seed: int
    schema: int = SCHEMA_VERSION

    def to_dict(self, *, timing: bool = True) -> dict[str, Any]:
        d = asdict(self)
        if not timing:
            d["wall_time_ms"] = 0
        return d

    def to_json(self, *, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), sort_keys=True)


def make_report(
    instance: InstanceSpec,
    name: str,
    config: dict[str, Any],
    seed: int,
    run: Callable[[], float],
    oracle: float | None = None,
) -> RunReport:
    t0 = time.perf_counter()
    weight = float(run())
    ms = int(round((time.perf_counter() - t0) * 1000))
    ratio = None
    if oracle is not None:
        ratio = 1.0 if oracle == 0 and weight == 0 else (weight / oracle if oracle else None)
    return RunReport(instance, {"name": name, "config": config}, weight, oracle, ratio, ms, seed)


def dumps_reports(reports: list[RunReport], *, timing: bool = True) -> str:
    return json.dumps([r.to_dict(timing=timing) for r in reports], indent=1, sort_keys=True) + "\n"
