"""Matplotlib rendering of diagrams and verification reports.

The report path writes delimited data (TSV) and figures side by side:
``report.json`` + ``checks.tsv`` + ``summary.tsv`` + ``diagram.png`` +
``checks.png``.  Diagrams use a fixed circular layout by vertex index so
mutation diffs stay visually attributable.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .companion import QuasiCartan
from .exchange import Diagram, ExchangeMatrix, diagram
from .io import canonical_json
from .verify import VerificationReport

CUT_COLOR = "#d62728"
EDGE_COLOR = "#444444"
NODE_COLOR = "#dce6f2"


def circular_layout(n: int, radius: float = 1.0) -> list[tuple[float, float]]:
    """Vertex v sits at angle 90 - 360 v / n degrees (vertex 1 on top)."""
    out = []
    for v in range(n):
        theta = math.pi / 2 - 2 * math.pi * v / n
        out.append((radius * math.cos(theta), radius * math.sin(theta)))
    return out


def draw_diagram(D: Diagram | ExchangeMatrix, companion: QuasiCartan | None = None,
                 ax=None, title: str | None = None):
    """Draw the diagram; edges with positive companion entries are
    highlighted as the cut."""
    if isinstance(D, ExchangeMatrix):
        D = diagram(D)
    if ax is None:
        _, ax = plt.subplots(figsize=(4.2, 4.2))
    pos = circular_layout(D.n)
    cut = companion.positive_edges() if companion is not None else frozenset()
    for i, j, w in D.edges:
        (x1, y1), (x2, y2) = pos[i], pos[j]
        in_cut = frozenset((i, j)) in cut
        arrow = FancyArrowPatch(
            (x1, y1), (x2, y2),
            arrowstyle="-|>", mutation_scale=16,
            shrinkA=14, shrinkB=14,
            linewidth=2.4 if in_cut else 1.4,
            color=CUT_COLOR if in_cut else EDGE_COLOR,
            zorder=1,
        )
        ax.add_patch(arrow)
        if w != 1:
            ax.text((x1 + x2) / 2, (y1 + y2) / 2, str(w), fontsize=9,
                    ha="center", va="center",
                    bbox=dict(boxstyle="round,pad=0.15", fc="white", ec="none"))
    for v, (x, y) in enumerate(pos):
        ax.scatter([x], [y], s=420, c=NODE_COLOR, edgecolors="#333333", zorder=2)
        ax.text(x, y, str(v + 1), ha="center", va="center", fontsize=11, zorder=3)
    ax.set_xlim(-1.45, 1.45)
    ax.set_ylim(-1.45, 1.45)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return ax


def save_diagram(B: ExchangeMatrix, path, companion: QuasiCartan | None = None,
                 title: str | None = None) -> None:
    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    draw_diagram(B, companion=companion, ax=ax, title=title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def checks_figure(report: VerificationReport, path) -> None:
    """Stacked pass/fail/unknown counts per check id."""
    checks = sorted(report.summary["checks"])
    passes = [report.summary["checks"][c]["pass"] for c in checks]
    fails = [report.summary["checks"][c]["fail"] for c in checks]
    unknowns = [report.summary["checks"][c]["unknown"] for c in checks]
    fig, ax = plt.subplots(figsize=(7, 0.42 * max(len(checks), 4) + 1.2))
    ys = range(len(checks))
    ax.barh(ys, passes, color="#2ca02c", label="pass")
    ax.barh(ys, fails, left=passes, color="#d62728", label="fail")
    ax.barh(ys, unknowns, left=[p + f for p, f in zip(passes, fails)],
            color="#ff7f0e", label="unknown")
    ax.set_yticks(list(ys))
    ax.set_yticklabels(checks, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("check outcomes")
    ax.legend(loc="lower right", fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def write_report_files(report: VerificationReport, outdir,
                       B: ExchangeMatrix | None = None,
                       companion: QuasiCartan | None = None) -> list[str]:
    """Write the delimited and figure artifacts for a verification run."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    path = out / "report.json"
    path.write_text(canonical_json(report.to_obj()) + "\n", encoding="utf-8")
    written.append(str(path))

    path = out / "summary.tsv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter="\t")
        writer.writerow(["check", "pass", "fail", "unknown"])
        for check in sorted(report.summary["checks"]):
            counts = report.summary["checks"][check]
            writer.writerow([check, counts["pass"], counts["fail"], counts["unknown"]])
        rrv = report.summary["real_root_vectors"]
        writer.writerow(["real-root-vectors", rrv["yes"], rrv["no"], rrv["unknown"]])
    written.append(str(path))

    path = out / "checks.tsv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter="\t")
        writer.writerow(["trial", "step", "k", "check", "status", "detail"])
        for trial in report.trials:
            if trial.steps is not None:
                for step in trial.steps:
                    for res in step.checks:
                        writer.writerow([
                            trial.trial, step.step,
                            step.k if step.k is not None else "",
                            res.check, res.status,
                            canonical_json(res.detail) if res.detail else "",
                        ])
            else:
                for p in trial.problems:
                    writer.writerow([
                        trial.trial, p["step"], "", p["check"], p["status"],
                        canonical_json(p.get("detail", {})),
                    ])
    written.append(str(path))

    if B is not None:
        path = out / "diagram.png"
        save_diagram(B, path, companion=companion, title="initial diagram")
        written.append(str(path))

    path = out / "checks.png"
    checks_figure(report, path)
    written.append(str(path))
    return written
