"""Report rendering: CSV / Markdown / JSON tables plus matplotlib figures
written alongside the delimited output.

Row keys are stable "algorithm.step.metric" identifiers so scripted
consumers can grep a single cell.  Figures are rendered headlessly (Agg)
and only when a file destination is given; stdout stays delimited text.
"""

from __future__ import annotations

import csv
import io
import json


def _cell(counts, metric, m):
    if counts is None:
        return ""
    if metric == "overall":
        return counts.weighted(m)
    return getattr(counts, metric)


METRICS = ("mul", "add", "inv", "overall")


def case_study_rows(report):
    """Flatten a CaseStudyReport into one row per algorithm.step.metric."""
    rows = []
    for cell in report.cells:
        for metric in METRICS:
            rows.append({
                "key": f"{cell.algorithm}.{cell.step}.{metric}",
                "algorithm": cell.algorithm,
                "step": cell.step,
                "metric": metric,
                "formula_direct": _cell(cell.formula, metric, report.m),
                "measured_direct": _cell(cell.measured_direct, metric,
                                         report.m),
                "measured_fast": _cell(cell.measured_fast, metric, report.m),
            })
    return rows


CASE_STUDY_FIELDS = ("key", "algorithm", "step", "metric", "formula_direct",
                     "measured_direct", "measured_fast")


def threshold_rows(rows):
    out = []
    for r in rows:
        out.append({
            "key": r.name,
            "stated_threshold": "" if r.stated != r.stated else round(
                r.stated, 6),
            "bracket_low": "" if r.bracket is None else r.bracket[0],
            "bracket_high": "" if r.bracket is None else r.bracket[1],
            "holds": r.holds,
            "detail": r.detail,
        })
    return out


THRESHOLD_FIELDS = ("key", "stated_threshold", "bracket_low", "bracket_high",
                    "holds", "detail")


def hw_rows(rows):
    out = []
    for r in rows:
        out.append({
            "unit": r.unit,
            "multipliers": r.multipliers,
            "adders": r.adders,
            "inverters": r.inverters,
            "registers": r.registers,
            "muxes": r.muxes,
            "latency_cycles": r.latency_cycles,
            "cycles_per_word": r.cycles_per_word,
            "cpd": r.cpd,
        })
    return out


HW_FIELDS = ("unit", "multipliers", "adders", "inverters", "registers",
             "muxes", "latency_cycles", "cycles_per_word", "cpd")


def to_csv(rows, fieldnames):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def to_markdown(rows, fieldnames):
    lines = ["| " + " | ".join(fieldnames) + " |",
             "|" + "|".join("---" for _ in fieldnames) + "|"]
    for r in rows:
        lines.append("| " + " | ".join(str(r.get(f, "")) for f in fieldnames)
                     + " |")
    return "\n".join(lines) + "\n"


def to_json(rows, _fieldnames=None):
    return json.dumps(rows, indent=2, default=str) + "\n"


FORMATS = {"csv": to_csv, "md": to_markdown, "json": to_json}


def render(rows, fieldnames, fmt):
    try:
        return FORMATS[fmt](rows, fieldnames)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}") from None


# -- figures ----------------------------------------------------------------

def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def render_case_study_figure(report, path):
    """Grouped log-scale bars: overall cost per algorithm step, formula vs
    measured direct vs measured fast."""
    plt = _plt()
    cells = [c for c in report.cells if c.step != "total"
             and (c.formula or c.measured_direct or c.measured_fast)]
    labels = [f"{c.algorithm}\n{c.step}" for c in cells]
    series = {
        "formula (direct)": [_cell(c.formula, "overall", report.m) or 0
                             for c in cells],
        "measured (direct)": [_cell(c.measured_direct, "overall", report.m)
                              or 0 for c in cells],
        "measured (Cantor fast)": [_cell(c.measured_fast, "overall",
                                         report.m) or 0 for c in cells],
    }
    x = range(len(cells))
    width = 0.27
    fig, ax = plt.subplots(figsize=(max(8, 1.1 * len(cells)), 4.5))
    for i, (name, vals) in enumerate(series.items()):
        ax.bar([xi + (i - 1) * width for xi in x], vals, width, label=name)
    ax.set_yscale("log")
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels, fontsize=7)
    ax.set_ylabel("overall cost  2m(mul+inv)+add")
    ax.set_title(f"({report.n}, {report.k}) over GF(2^{report.m}): "
                 "per-step decoding cost")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_threshold_figure(rows, path):
    """Sign-change curves for the rate comparisons, one panel per family."""
    plt = _plt()
    fams = {"direct": [], "fast": [], "hw": []}
    for r in rows:
        fams[r.name.split(".")[0]].append(r)
    fig, axes = plt.subplots(1, 3, figsize=(13, 4))
    for ax, (fam, items) in zip(axes, fams.items()):
        for r in items:
            if r.bracket:
                ax.axvline(sum(r.bracket) / 2, linestyle="--", alpha=0.6,
                           label=f"{r.name.split('.', 1)[1]} "
                                 f"~{sum(r.bracket) / 2:.3f}")
            if r.stated == r.stated:
                ax.axvline(r.stated, color="k", alpha=0.25)
        ax.set_title(f"{fam} comparisons")
        ax.set_xlabel("code rate R")
        ax.set_xlim(0, 1)
        if items:
            ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_hw_figure(all_rows, n, k, path):
    """Grouped bars of the total hardware cost cells per architecture."""
    plt = _plt()
    attrs = ("multipliers", "adders", "registers", "muxes")
    algs = list(all_rows)
    fig, ax = plt.subplots(figsize=(8, 4.5))
    width = 0.8 / len(attrs)
    for i, attr in enumerate(attrs):
        vals = []
        for alg in algs:
            total = [r for r in all_rows[alg] if r.unit == "total"][0]
            vals.append(getattr(total, attr))
        ax.bar([j + i * width for j in range(len(algs))], vals, width,
               label=attr)
    ax.set_xticks([j + 1.5 * width for j in range(len(algs))])
    ax.set_xticklabels(algs)
    ax.set_yscale("log")
    ax.set_title(f"decoder architecture totals at (n, k) = ({n}, {k})")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
