"""Machine-readable verification reports and their serialization.

One report per verified case.  A report passes only when its metric satisfies
the stated target, and a report stream is deterministic given identical
inputs (the elapsed_ms field is the one timing exception).
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str
    lhs: str
    rhs: str
    metric: dict
    variant: str = "n/a"
    elapsed_ms: int = 0
    extra: dict = field(default_factory=dict)

    def sort_key(self) -> tuple:
        return (self.identity, json.dumps(self.params, sort_keys=True, default=str))

    def to_obj(self) -> dict:
        obj = {
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "metric": self.metric,
            "variant": self.variant,
            "elapsed_ms": self.elapsed_ms,
        }
        obj.update(self.extra)
        return obj


def sort_reports(reports: list[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=VerificationReport.sort_key)


def dump_json_lines(reports: list[VerificationReport]) -> str:
    lines = [json.dumps(r.to_obj(), sort_keys=True, default=str) for r in sort_reports(reports)]
    return "\n".join(lines) + ("\n" if lines else "")


def dump_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["identity", "params", "status", "lhs", "rhs", "metric", "variant", "elapsed_ms"])
    for r in sort_reports(reports):
        writer.writerow([
            r.identity,
            json.dumps(r.params, sort_keys=True, default=str),
            r.status,
            r.lhs,
            r.rhs,
            json.dumps(r.metric, sort_keys=True, default=str),
            r.variant,
            r.elapsed_ms,
        ])
    return buf.getvalue()


def exit_code(reports: list[VerificationReport]) -> int:
    if any(r.status == FAIL for r in reports):
        return EXIT_IDENTITY_FAILURE
    if any(r.status == INCONCLUSIVE for r in reports):
        return EXIT_PRECISION
    return EXIT_OK
