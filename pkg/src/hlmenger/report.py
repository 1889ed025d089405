"""Machine-readable verification reports.

One schema is shared by every check in the package: structure validation,
campaign runs, component-lemma sweeps and tightness constructions. Reports
round-trip losslessly through JSON, and two runs with identical inputs
(including seeds) serialize to identical bytes except for the timing field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"


@dataclass
class VerificationReport:
    check_name: str
    target: dict
    mode: str                       # "exhaustive" | "sampled" | "direct"
    parameters: dict
    counts: dict                    # visited / skipped_conditional / failures
    witness: dict | None = None
    details: list = field(default_factory=list)
    timing_seconds: float = 0.0
    schema_version: str = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return self.counts.get("failures", 0) == 0

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "target": self.target,
            "mode": self.mode,
            "parameters": self.parameters,
            "counts": self.counts,
            "witness": self.witness,
            "details": self.details,
            "timing_seconds": self.timing_seconds,
            "schema_version": self.schema_version,
        }

    @staticmethod
    def from_dict(data: dict) -> "VerificationReport":
        return VerificationReport(
            check_name=data["check_name"],
            target=data["target"],
            mode=data["mode"],
            parameters=data["parameters"],
            counts=data["counts"],
            witness=data.get("witness"),
            details=data.get("details", []),
            timing_seconds=data.get("timing_seconds", 0.0),
            schema_version=data.get("schema_version", SCHEMA_VERSION),
        )

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def canonical_json(self) -> str:
        """Serialized form with the timing field removed, for comparisons."""
        data = self.to_dict()
        del data["timing_seconds"]
        return json.dumps(data, indent=2, sort_keys=True)
