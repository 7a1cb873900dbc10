"""Report assembly: per-sample CSV, aggregate JSON, markdown tables.

Everything here renders to strings; callers decide where bytes land.
Output is deterministic for identical inputs, with one exception by
design: the aggregate JSON carries a single generated_at field, so two
runs differ in at most that line. Version and input-file content
hashes ride along in every JSON report so a result can be tied back to
the exact code and data that produced it.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from pathlib import Path
from typing import Mapping, Sequence

from . import __version__
from .errors import ValidationError
from .metrics import AggregateStats, BootstrapResult, SampleMetrics, aggregate

# Display names for the word-grouping strategies, in canonical order.
STRATEGY_LABELS = {
    "raw": "Raw OCR",
    "line": "Line-based",
    "dbscan_flat": "DBSCAN flat",
    "dbscan_vote": "DBSCAN+vote",
}

_CSV_COLUMNS = ("engine_id", "strategy", "image_id", "language",
                "n_detected", "n_truth", "tp_exact", "tp_fuzzy",
                "precision", "recall", "f1", "fuzzy_f1", "catastrophic")


def sha256_file(path: str | Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def hash_inputs(paths: Mapping[str, str | Path]) -> dict[str, str]:
    """Content hashes of the run's input files, keyed by role."""
    return {name: sha256_file(p) for name, p in sorted(paths.items())}


def samples_csv(samples_by_run: Mapping[tuple[str, str],
                                        Sequence[SampleMetrics]]) -> str:
    """Flat per-sample table over every (engine, strategy) run.

    Rows are sorted by (engine, strategy, image_id) so output order
    never depends on evaluation order.
    """
    rows = []
    for (engine_id, strategy), samples in samples_by_run.items():
        for s in samples:
            rows.append((engine_id, strategy, s.image_id, s.language,
                         s.n_detected, s.n_truth, s.tp_exact, s.tp_fuzzy,
                         f"{s.precision:.6f}", f"{s.recall:.6f}",
                         f"{s.f1:.6f}", f"{s.fuzzy_f1:.6f}",
                         int(s.is_catastrophic)))
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()


def _stats_dict(stats: AggregateStats) -> dict:
    return {
        "n_samples": stats.n_samples,
        "mean_precision": stats.mean_precision,
        "mean_recall": stats.mean_recall,
        "mean_f1": stats.mean_f1,
        "mean_fuzzy_f1": stats.mean_fuzzy_f1,
        "catastrophic_rate_pct": stats.catastrophic_rate_pct,
        "per_language_f1": dict(sorted(stats.per_language_f1.items())),
        "per_language_n": dict(sorted(stats.per_language_n.items())),
    }


def aggregate_json(samples_by_run: Mapping[tuple[str, str],
                                           Sequence[SampleMetrics]], *,
                   input_hashes: Mapping[str, str] | None = None,
                   bootstraps: Mapping[tuple[str, str], BootstrapResult]
                   | None = None,
                   skipped: Mapping[str, int] | None = None,
                   generated_at: str | None = None,
                   extra: Mapping[str, object] | None = None) -> str:
    """Aggregate report as a JSON string.

    `bootstraps` maps (run label A, run label B) to a paired
    significance result. `skipped` counts documents left out of the
    run and why. `generated_at` is the only volatile field; pass None
    for fully reproducible bytes.
    """
    runs = []
    for (engine_id, strategy), samples in sorted(samples_by_run.items()):
        entry = {"engine_id": engine_id, "strategy": strategy}
        entry.update(_stats_dict(aggregate(samples)))
        runs.append(entry)
    doc: dict[str, object] = {
        "version": __version__,
        "generated_at": generated_at,
        "inputs": dict(sorted((input_hashes or {}).items())),
        "skipped": dict(sorted((skipped or {}).items())),
        "runs": runs,
    }
    if bootstraps:
        doc["paired_bootstrap"] = [
            {"a": a, "b": b, "p_value": r.p_value,
             "observed_diff": r.observed_diff,
             "resamples": r.resamples, "seed": r.seed}
            for (a, b), r in bootstraps.items()
        ]
    if extra:
        for key in extra:
            if key in doc:
                raise ValidationError(f"extra key {key!r} collides")
        doc.update(sorted(extra.items()))
    return json.dumps(doc, ensure_ascii=False, indent=2,
                      sort_keys=False) + "\n"


def _fmt(value: float, decimals: int = 3) -> str:
    return f"{value:.{decimals}f}"


def _bold_marks(values: Sequence[float], best: float) -> list[bool]:
    return [v == best for v in values]


def _md_table(header: Sequence[str], aligns: Sequence[str],
              rows: Sequence[Sequence[str]]) -> str:
    rule = {"l": ":---", "c": ":---:", "r": "---:"}
    lines = ["| " + " | ".join(header) + " |",
             "| " + " | ".join(rule[a] for a in aligns) + " |"]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def engine_table_md(stats_by_engine: Mapping[str, AggregateStats]) -> str:
    """Engine comparison: F1, fuzzy F1, precision, recall, and the
    catastrophic-failure rate, one row per engine. Best value per
    column in bold (lowest wins for the failure rate)."""
    if not stats_by_engine:
        raise ValidationError("no engine rows to tabulate")
    names = sorted(stats_by_engine)
    cols = [
        ("F1", lambda s: s.mean_f1, max, 3),
        ("Fuzzy", lambda s: s.mean_fuzzy_f1, max, 3),
        ("P", lambda s: s.mean_precision, max, 3),
        ("R", lambda s: s.mean_recall, max, 3),
        ("Cat.%", lambda s: s.catastrophic_rate_pct, min, 1),
    ]
    rows = []
    marks: dict[str, list[bool]] = {}
    for title, get, pick, _ in cols:
        values = [get(stats_by_engine[n]) for n in names]
        marks[title] = _bold_marks(values, pick(values))
    for i, name in enumerate(names):
        row = [name]
        for title, get, _, decimals in cols:
            text = _fmt(get(stats_by_engine[name]), decimals)
            row.append(f"**{text}**" if marks[title][i] else text)
        rows.append(row)
    return _md_table(["Engine"] + [c[0] for c in cols],
                     ["l"] + ["r"] * len(cols), rows)


def per_language_table_md(stats_by_run: Mapping[str, AggregateStats],
                          order: Sequence[str] | None = None) -> str:
    """Per-language F1, one row per language, one column per run.

    `n` is the language's sample count (equal across runs over the
    same corpus; the max is shown if they differ). Best value per row
    in bold. `order` pins the column order; default alphabetical.
    """
    if not stats_by_run:
        raise ValidationError("no runs to tabulate")
    run_names = list(order) if order is not None else sorted(stats_by_run)
    missing = set(run_names) - set(stats_by_run)
    if missing:
        raise ValidationError(f"order names unknown runs {sorted(missing)}")
    languages = sorted({lang for s in stats_by_run.values()
                        for lang in s.per_language_f1})
    if not languages:
        raise ValidationError("no per-language rows to tabulate")
    rows = []
    for lang in languages:
        n = max(s.per_language_n.get(lang, 0)
                for s in stats_by_run.values())
        values = [stats_by_run[r].per_language_f1.get(lang)
                  for r in run_names]
        present = [v for v in values if v is not None]
        best = max(present)
        cells = []
        for v in values:
            if v is None:
                cells.append("-")
            else:
                text = _fmt(v)
                cells.append(f"**{text}**" if v == best else text)
        rows.append([lang, str(n)] + cells)
    return _md_table(["Lang", "n"] + run_names,
                     ["l", "r"] + ["r"] * len(run_names), rows)


def ablation_table_md(stats_by_strategy: Mapping[str, AggregateStats]) -> str:
    """Strategy comparison: F1, precision, recall per word-grouping
    strategy, in canonical order, lettered like published ablations.
    Best value per column in bold."""
    known = [s for s in STRATEGY_LABELS if s in stats_by_strategy]
    extra = sorted(set(stats_by_strategy) - set(known))
    order = known + extra
    if not order:
        raise ValidationError("no strategy rows to tabulate")
    cols = [
        ("F1", lambda s: s.mean_f1),
        ("P", lambda s: s.mean_precision),
        ("R", lambda s: s.mean_recall),
    ]
    marks: dict[str, list[bool]] = {}
    for title, get in cols:
        values = [get(stats_by_strategy[name]) for name in order]
        marks[title] = _bold_marks(values, max(values))
    rows = []
    for i, name in enumerate(order):
        letter = f"({chr(ord('a') + i)})"
        row = [letter, STRATEGY_LABELS.get(name, name)]
        for title, get in cols:
            text = _fmt(get(stats_by_strategy[name]))
            row.append(f"**{text}**" if marks[title][i] else text)
        rows.append(row)
    return _md_table(["", "Strategy"] + [c[0] for c in cols],
                     ["l", "l"] + ["r"] * len(cols), rows)


def bootstrap_table_md(results: Mapping[tuple[str, str],
                                        BootstrapResult]) -> str:
    """Pairwise paired-bootstrap significance table.

    Rows keep the mapping's order, so callers control pair ordering.
    """
    if not results:
        raise ValidationError("no bootstrap pairs to tabulate")
    rows = [[a, b, f"{r.observed_diff:+.4f}", f"{r.p_value:.4f}"]
            for (a, b), r in results.items()]
    return _md_table(["A", "B", "mean F1 diff (A-B)", "p"],
                     ["l", "l", "r", "r"], rows)
