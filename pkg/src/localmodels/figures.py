"""Write a verification report to a directory as JSON, CSV and PNG figures."""
from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .report import VerificationReport  # noqa: E402

CSV_COLUMNS = ["name", "group", "provenance", "expected", "computed", "passed"]


def case_group(name: str) -> str:
    return name.split(" ")[0]


def write_cases_csv(report: VerificationReport, path: Path) -> Path:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for c in report.cases:
            writer.writerow([
                c.name, case_group(c.name), c.provenance,
                json.dumps(c.expected, sort_keys=True), json.dumps(c.computed, sort_keys=True),
                "pass" if c.passed else "fail",
            ])
    return path


def plot_case_status(report: VerificationReport, path: Path) -> Path:
    groups = sorted({case_group(c.name) for c in report.cases})
    passed = [sum(c.passed for c in report.cases if case_group(c.name) == g) for g in groups]
    failed = [sum(not c.passed for c in report.cases if case_group(c.name) == g) for g in groups]
    fig, ax = plt.subplots(figsize=(7, 0.4 * len(groups) + 1.5))
    ax.barh(groups, passed, color="tab:green", label="pass")
    ax.barh(groups, failed, left=passed, color="tab:red", label="fail")
    ax.set_xlabel("cases")
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_title(report.campaign)
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def plot_lattice_strata(report: VerificationReport, path: Path) -> Path | None:
    cases = [c for c in report.cases if c.name.startswith("lattice") and isinstance(c.computed, dict)]
    if not cases:
        return None
    fig, axes = plt.subplots(1, len(cases), figsize=(2.6 * len(cases), 3), squeeze=False)
    for ax, c in zip(axes[0], cases):
        strata = c.computed["strata"]
        labels = ["(" + ",".join(s["partition"]) + ")" for s in strata]
        ax.bar(labels, [int(s["count"]) for s in strata], color="tab:blue")
        ax.set_title(c.name.replace("lattice ", ""), fontsize=7)
        ax.tick_params(labelsize=7)
        ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    axes[0][0].set_ylabel("points")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def plot_coinvariant(report: VerificationReport, path: Path) -> Path | None:
    cases = [c for c in report.cases if c.name.startswith("coinvariant")]
    if not cases:
        return None
    fig, ax = plt.subplots(figsize=(5, 4))
    xs = [int(c.expected) for c in cases]
    ys = [int(c.computed) for c in cases]
    ax.scatter(xs, ys, c=["tab:green" if c.passed else "tab:red" for c in cases])
    top = max(xs + ys) + 1
    ax.plot([0, top], [0, top], color="grey", linewidth=0.8)
    ax.set_xlabel("closed formula")
    ax.set_ylabel("staircase count")
    ax.set_title("coinvariant algebra dimensions")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def write_report_dir(report: VerificationReport, directory) -> list[Path]:
    """Write report.json, cases.csv and the figures; returns the files written."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    json_path = out / "report.json"
    json_path.write_text(report.to_json())
    written.append(json_path)
    written.append(write_cases_csv(report, out / "cases.csv"))
    written.append(plot_case_status(report, out / "case_status.png"))
    for fn, name in ((plot_lattice_strata, "lattice_strata.png"), (plot_coinvariant, "coinvariant.png")):
        p = fn(report, out / name)
        if p is not None:
            written.append(p)
    return written
