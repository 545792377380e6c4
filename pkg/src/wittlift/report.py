"""Report emission: JSON, markdown digest, CSV table, and summary figures.

The JSON report is the source of truth (one object per check with id,
anchor, status, evidence, ms).  The markdown digest is generated from the
same records.  Writing the JSON report also drops a CSV table and two PNG
summary figures next to it, so a report directory is self-contained.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import List, Sequence

from .checks import CheckReport

STATUS_ORDER = ("pass", "fail", "skipped")
_STATUS_COLORS = {"pass": "#2a9d4e", "fail": "#d03a3a", "skipped": "#b0b0b0"}


def report_dicts(reports: Sequence[CheckReport]) -> List[dict]:
    """Reports as JSON-ready dicts, ordered by check id."""
    return [r.as_dict() for r in sorted(reports, key=lambda r: r.id)]


def write_json(reports: Sequence[CheckReport], path: str) -> Path:
    """Write the JSON report plus the CSV table and figures alongside it."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    records = report_dicts(reports)
    out.write_text(json.dumps(records, indent=2, sort_keys=True) + "\n")
    write_csv(reports, out.with_suffix(".csv"))
    render_figures(reports, out.parent, stem=out.stem)
    return out


def write_csv(reports: Sequence[CheckReport], path: Path) -> Path:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "anchor", "status", "ms", "evidence"])
        for rec in report_dicts(reports):
            writer.writerow(
                [
                    rec["id"],
                    rec["anchor"],
                    rec["status"],
                    f"{rec['ms']:.1f}",
                    json.dumps(rec["evidence"], sort_keys=True),
                ]
            )
    return path


def render_figures(reports: Sequence[CheckReport], outdir: Path, stem: str = "report") -> List[Path]:
    """Render status and timing summary PNGs into outdir."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    records = report_dicts(reports)
    paths = []

    counts = {s: sum(1 for r in records if r["status"] == s) for s in STATUS_ORDER}
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(list(counts), list(counts.values()), color=[_STATUS_COLORS[s] for s in counts])
    ax.set_ylabel("checks")
    ax.set_title(f"Check statuses ({len(records)} total)")
    fig.tight_layout()
    p = outdir / f"{stem}-status.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    timed = sorted((r for r in records if r["status"] != "skipped"), key=lambda r: -r["ms"])[:15]
    if timed:
        fig, ax = plt.subplots(figsize=(7, 0.3 * len(timed) + 1.2))
        ids = [r["id"] for r in timed][::-1]
        ms = [r["ms"] for r in timed][::-1]
        colors = [_STATUS_COLORS[r["status"]] for r in timed][::-1]
        ax.barh(ids, ms, color=colors)
        ax.set_xlabel("ms")
        ax.set_title("Slowest checks")
        fig.tight_layout()
        p = outdir / f"{stem}-timings.png"
        fig.savefig(p, dpi=120)
        plt.close(fig)
        paths.append(p)
    return paths


def markdown_digest(reports: Sequence[CheckReport]) -> str:
    records = report_dicts(reports)
    counts = {s: sum(1 for r in records if r["status"] == s) for s in STATUS_ORDER}
    lines = [
        "# Verification report",
        "",
        f"{len(records)} checks: {counts['pass']} pass, "
        f"{counts['fail']} fail, {counts['skipped']} skipped.",
        "",
        "| id | status | ms | anchor |",
        "|---|---|---:|---|",
    ]
    for rec in records:
        lines.append(f"| {rec['id']} | {rec['status']} | {rec['ms']:.1f} | {rec['anchor']} |")
    fails = [r for r in records if r["status"] == "fail"]
    if fails:
        lines += ["", "## Failures", ""]
        for rec in fails:
            lines.append(f"- **{rec['id']}**: `{json.dumps(rec['evidence'], sort_keys=True)}`")
    return "\n".join(lines) + "\n"


def write_markdown(reports: Sequence[CheckReport], path: str) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(markdown_digest(reports))
    return out
