"""Versioned JSON report documents written by ``turanlab verify``."""

import json
from dataclasses import dataclass, field

from .cache import atomic_write_text

SCHEMA_VERSION = "1"


@dataclass
class ReportDocument:
    command: str
    parameters: dict
    records: list
    passed: bool = True
    onset: object = None
    notes: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    @classmethod
    def from_verification(cls, command, report, timings=None):
        return cls(
            command=command,
            parameters=report.parameters,
            records=report.rows,
            passed=report.passed,
            onset=report.onset,
            notes=list(report.notes),
            timings=dict(timings or {}),
        )

    def to_dict(self, include_timings=True):
        d = {
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "passed": self.passed,
            "onset": self.onset,
            "notes": self.notes,
            "records": self.records,
        }
        if include_timings:
            d["timings"] = self.timings
        return d

    def dumps(self, include_timings=True):
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True) + "\n"

    def write(self, path):
        atomic_write_text(path, self.dumps())

    @classmethod
    def from_dict(cls, data):
        # unknown keys are ignored for forward compatibility
        return cls(
            command=data["command"],
            parameters=data.get("parameters", {}),
            records=data.get("records", []),
            passed=data.get("passed", True),
            onset=data.get("onset"),
            notes=data.get("notes", []),
            timings=data.get("timings", {}),
            schema_version=str(data.get("schema_version", SCHEMA_VERSION)),
        )


def load_report(path):
    with open(path, encoding="utf-8") as fh:
        return ReportDocument.from_dict(json.load(fh))
