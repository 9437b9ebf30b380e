"""Suite results, canonical JSON / CSV reports, and the summary figure.

Reports deliberately contain no timestamps or timings so that two runs with
the same configuration and seed produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, List

MAX_FAILURES_KEPT = 3


@dataclass
class LawResult:
    name: str
    checked: int = 0
    failures: List[dict] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "truncated": self.truncated,
            "counterexamples": self.failures,
        }


@dataclass
class SuiteResult:
    name: str
    laws: List[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    @property
    def total_checked(self) -> int:
        return sum(law.checked for law in self.laws)

    @property
    def failure_count(self) -> int:
        return sum(len(law.failures) for law in self.laws)

    def law(self, name: str) -> LawResult:
        for law in self.laws:
            if law.name == name:
                return law
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.total_checked,
            "laws": [law.to_json() for law in self.laws],
        }


def run_law(name: str, instances: Iterable, check, budget: int,
            keep: int = MAX_FAILURES_KEPT) -> LawResult:
    """Drive one law over an instance stream.

    ``check`` maps an instance to ``None`` (pass) or a failure record dict.
    The stream is consumed smallest-first; the budget truncates it, and the
    scan stops early once ``keep`` counterexamples are collected.
    """
    result = LawResult(name)
    iterator = iter(instances)
    for instance in iterator:
        if result.checked >= budget:
            result.truncated = True
            break
        result.checked += 1
        record = check(instance)
        if record is not None:
            result.failures.append(record)
            if len(result.failures) >= keep:
                break
    return result


def report_json(suites: List[SuiteResult], config) -> dict:
    return {
        "config": config.to_json(),
        "passed": all(s.passed for s in suites),
        "suites": [s.to_json() for s in suites],
    }


def report_bytes(suites: List[SuiteResult], config) -> bytes:
    data = report_json(suites, config)
    return (json.dumps(data, sort_keys=True, indent=2) + "\n").encode("utf-8")


def report_csv(suites: List[SuiteResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "law", "checked", "passed", "truncated", "counterexamples"])
    for suite in suites:
        for law in suite.laws:
            writer.writerow([
                suite.name, law.name, law.checked,
                "yes" if law.passed else "no",
                "yes" if law.truncated else "no",
                len(law.failures),
            ])
    return buf.getvalue()


def human_lines(suites: List[SuiteResult]) -> Iterator[str]:
    for suite in suites:
        for law in suite.laws:
            status = "ok " if law.passed else "FAIL"
            extra = " (truncated)" if law.truncated else ""
            yield f"{status} {suite.name}/{law.name}: {law.checked} checks{extra}"
        mark = "PASS" if suite.passed else "FAIL"
        yield f"== {mark} {suite.name}: {suite.total_checked} checks, {suite.failure_count} failures"


def render_figure(suites: List[SuiteResult], path: Path) -> None:
    """One horizontal bar per suite: checks performed, colored by status."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [s.name for s in suites]
    counts = [max(s.total_checked, 1) for s in suites]
    colors = ["#2a9d58" if s.passed else "#c23b3b" for s in suites]
    fig, ax = plt.subplots(figsize=(8, 0.5 * len(suites) + 1.6))
    ypos = range(len(suites))
    ax.barh(list(ypos), counts, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("checks performed")
    ax.set_title("law suite summary")
    for y, suite in zip(ypos, suites):
        ax.text(max(suite.total_checked, 1), y,
                " pass" if suite.passed else f" {suite.failure_count} failures",
                va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata={"Software": "opal"})
    plt.close(fig)


def write_report(suites: List[SuiteResult], config, outdir: Path) -> None:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "report.json").write_bytes(report_bytes(suites, config))
    (outdir / "suites.csv").write_text(report_csv(suites), encoding="utf-8")
    render_figure(suites, outdir / "suites.png")
