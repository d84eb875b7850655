"""Report records and their JSON / text serializations."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

SCHEMA_VERSION = 1


@lru_cache(maxsize=1)
def anchor_table() -> dict:
    """Check name -> anchor formula, loaded from the packaged data file."""
    text = resources.files("cullen.verify").joinpath("anchors.json").read_text(encoding="utf-8")
    return json.loads(text)


def base_name(check_name: str) -> str:
    return check_name.split("[", 1)[0]


def anchor_for(check_name: str) -> str:
    return anchor_table()[base_name(check_name)]


@dataclass
class Check:
    name: str
    max_residual: float
    tolerance: float
    residual: str = "absolute"
    detail: dict = field(default_factory=dict)

    @property
    def paper_anchor(self) -> str:
        return anchor_for(self.name)

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tolerance)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "paper_anchor": self.paper_anchor,
            "max_residual": float(self.max_residual),
            "tolerance": float(self.tolerance),
            "residual": self.residual,
            "pass": self.passed,
            "detail": self.detail,
        }


@dataclass
class Observation:
    """Measured agreement reported without a pass/fail verdict."""

    name: str
    max_residual: float
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "paper_anchor": anchor_for(self.name),
                "max_residual": float(self.max_residual), "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    seed: int
    checks: list = field(default_factory=list)
    observations: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self, timings: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "pass": self.passed,
            "checks": [c.as_dict() for c in self.checks],
            "observations": [o.as_dict() for o in self.observations],
        }
        if timings:
            out["wall_time"] = self.wall_time
        return out


@dataclass
class VerificationReport:
    seed: int
    suites: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    @property
    def overall_pass(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def checks(self) -> list:
        return [c for s in self.suites for c in s.checks]

    def as_dict(self, timings: bool = False) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "seed": self.seed,
            "overall_pass": self.overall_pass,
            "config": self.config,
            "warnings": list(self.warnings),
            "suites": [s.as_dict(timings) for s in self.suites],
        }


def _text(report: VerificationReport, timings: bool) -> str:
    rows = [("suite", "check", "max_residual", "tolerance", "kind", "result")]
    for s in report.suites:
        for c in s.checks:
            rows.append((s.suite, c.name, f"{c.max_residual:.3e}", f"{c.tolerance:.1e}",
                         c.residual, "PASS" if c.passed else "FAIL"))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    for s in report.suites:
        for o in s.observations:
            lines.append(f"[observation] {s.suite}/{o.name}: max residual {o.max_residual:.3e}")
        if timings:
            lines.append(f"[time] {s.suite}: {s.wall_time:.3f} s")
    for w in report.warnings:
        lines.append(f"[warning] {w}")
    n = len(report.checks)
    failed = sum(not c.passed for c in report.checks)
    lines.append(f"seed {report.seed}: {n - failed}/{n} checks passed; overall "
                 + ("PASS" if report.overall_pass else "FAIL"))
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, format: str = "json", timings: bool = False) -> bytes:
    """Serialize a report; JSON output is key-sorted and deterministic."""
    if format == "json":
        text = json.dumps(report.as_dict(timings), sort_keys=True, indent=2, ensure_ascii=False)
        return (text + "\n").encode("utf-8")
    if format == "text":
        return _text(report, timings).encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")


def anchor_table_markdown() -> str:
    lines = ["| check | anchor |", "| --- | --- |"]
    for name, anchor in sorted(anchor_table().items()):
        escaped = anchor.replace("|", r"\|")
        lines.append(f"| `{name}` | {escaped} |")
    return "\n".join(lines) + "\n"
