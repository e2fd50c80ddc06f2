"""Deterministic rendering of obstruction reports.

Reports are pure functions of (input, config): no timestamps, no
environment data, canonical key order in the structured form.  Two runs
with the same inputs and configuration must produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .invariants import ObstructionReport
from .search import DEFAULT_BUDGET, SearchBudget

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation settings, echoed into every report."""

    command: str
    inputs: tuple[str, ...] = ()
    output_format: str = "text"  # "text" | "json"
    seed: int = 0
    budget: SearchBudget = DEFAULT_BUDGET
    search_forced: bool = False

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": list(self.inputs),
            "format": self.output_format,
            "seed": self.seed,
            "budget": self.budget.as_dict(),
            "search_forced": self.search_forced,
        }


def exit_code_for(report: ObstructionReport) -> int:
    return 0 if report.passed else 2


def report_payload(report: ObstructionReport, config: RunConfig) -> dict:
    rows = []
    for r in report.rows:
        row = {"test": r.test, "simplex": r.where, "verdict": r.verdict,
               "value": r.value}
        if r.data:
            row.update(r.data)
        rows.append(row)
    return {
        "tool_version": TOOL_VERSION,
        "complex": report.complex_name,
        "dimension": report.dimension,
        "config": config.as_dict(),
        "tests": rows,
        "summary": dict(sorted(report.summary.items())),
        "notes": list(report.notes),
        "exit_code": exit_code_for(report),
    }


def render_json(report: ObstructionReport, config: RunConfig) -> str:
    return json.dumps(report_payload(report, config), indent=2,
                      sort_keys=True) + "\n"


def render_text(report: ObstructionReport, config: RunConfig) -> str:
    lines = [
        f"eulerlink {TOOL_VERSION}: {config.command} on"
        f" {report.complex_name} (dimension {report.dimension})",
        "config: " + " ".join(
            [f"format={config.output_format}", f"seed={config.seed}",
             f"search_forced={config.search_forced}"]
            + [f"budget.{k}={v}" for k, v in config.budget.as_dict().items()]),
        "",
    ]
    if report.rows:
        w_test = max(len("test"), max(len(r.test) for r in report.rows))
        w_simp = max(len("simplex"), max(len(r.where) for r in report.rows))
        w_verd = max(len("verdict"), max(len(r.verdict) for r in report.rows))
        header = (f"{'test':<{w_test}}  {'simplex':<{w_simp}}"
                  f"  {'verdict':<{w_verd}}  value")
        lines.append(header)
        lines.append("-" * len(header))
        for r in report.rows:
            lines.append(f"{r.test:<{w_test}}  {r.where:<{w_simp}}"
                         f"  {r.verdict:<{w_verd}}  {r.value}")
        lines.append("")
    summary = " ".join(f"{k}={v}" for k, v in sorted(report.summary.items()))
    code = exit_code_for(report)
    verdict = "all tests passed" if code == 0 else "obstruction found"
    lines.append(f"summary: {summary} ({verdict}, exit {code})")
    for n in report.notes:
        lines.append(f"note: {n}")
    return "\n".join(lines) + "\n"


def render(report: ObstructionReport, config: RunConfig) -> str:
    if config.output_format == "json":
        return render_json(report, config)
    return render_text(report, config)
