"""Command-line surface.

Subcommands:

  evaluate  score OCR documents against ground truth, per strategy
  ablation  compare all four word-grouping strategies on one corpus,
            with pairwise paired-bootstrap significance
  generate  materialize a synthetic corpus (ground truth + OCR JSON +
            manifest) onto disk
  split     stratified train/test split of a ground-truth file

Exit codes: 0 success, 1 validation or configuration error, 2 I/O or
parse error.

Configuration comes from an optional JSON file (--config) overridden
by flags; the effective configuration is echoed into the output
directory as config.json. Reports carry the toolkit version and
sha256 hashes of the input files; the only volatile output line is a
single generated_at timestamp.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import sys
from pathlib import Path
from typing import Any, Mapping, Sequence

from . import __version__
from .clustering import ClusterConfig, VocabularySet, load_vocabulary
from .errors import ParseError, ValidationError
from .extraction import DelimiterSet
from .ingest import (
    load_engine_output,
    parse_coco,
    serialize_coco,
    serialize_document,
    stratified_split,
)
from .metrics import (
    FUZZY_MAX_DISTANCE,
    BootstrapResult,
    SampleMetrics,
    aggregate,
    paired_bootstrap,
)
from .model import GroundTruthLabel, OcrDocument
from .pipeline import STRATEGY_NAMES, default_vocabularies, evaluate_corpus
from .report import (
    ablation_table_md,
    aggregate_json,
    bootstrap_table_md,
    engine_table_md,
    hash_inputs,
    per_language_table_md,
    samples_csv,
)
from .synthgen import build_corpus, load_recipe, packaged_recipe

_CONFIG_DEFAULTS: dict[str, Any] = {
    "truth": None,
    "ocr_dir": None,
    "recipe": None,
    "strategies": list(STRATEGY_NAMES),
    "cluster": {
        "eps_multiplier": 1.5,
        "min_samples": 3,
        "line_y_tolerance_multiplier": 0.5,
    },
    "include_full_stop_delimiter": True,
    "fuzzy_max_distance": FUZZY_MAX_DISTANCE,
    "bootstrap": {"resamples": 10000, "seed": 0},
    "vocab_dir": None,
    "out": "reports",
}


def _merge_config(path: str | None,
                  overrides: Mapping[str, Any]) -> dict[str, Any]:
    """Defaults, then config file, then flags; flags win."""
    config = json.loads(json.dumps(_CONFIG_DEFAULTS))
    if path is not None:
        try:
            text = Path(path).read_text("utf-8")
        except OSError as exc:
            raise exc
        try:
            loaded = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"config is not valid JSON: {exc.msg}",
                             path=str(path)) from exc
        if not isinstance(loaded, dict):
            raise ValidationError(f"{path}: config must be a JSON object")
        unknown = set(loaded) - set(config)
        if unknown:
            raise ValidationError(
                f"{path}: unknown config keys {sorted(unknown)}")
        for key, value in loaded.items():
            if isinstance(config.get(key), dict) and isinstance(value, dict):
                bad = set(value) - set(config[key])
                if bad:
                    raise ValidationError(
                        f"{path}: unknown {key} keys {sorted(bad)}")
                config[key].update(value)
            else:
                config[key] = value
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(config.get(key), dict) and isinstance(value, dict):
            config[key].update(value)
        else:
            config[key] = value
    return config


def _cluster_config(config: Mapping[str, Any]) -> ClusterConfig:
    c = config["cluster"]
    return ClusterConfig(eps_multiplier=float(c["eps_multiplier"]),
                         min_samples=int(c["min_samples"]),
                         line_y_tolerance_multiplier=float(
                             c["line_y_tolerance_multiplier"]))


def _resolve_recipe(value: str):
    """A recipe flag is a JSON file path, or the name of a packaged
    fixture recipe (e.g. "ablation_c")."""
    path = Path(value)
    if path.suffix == ".json" or path.exists():
        return load_recipe(path), {"recipe": path}
    return packaged_recipe(value), {}


def _load_vocabs(config: Mapping[str, Any]) -> list[VocabularySet]:
    vocab_dir = config.get("vocab_dir")
    if vocab_dir is None:
        return default_vocabularies()
    files = sorted(Path(vocab_dir).glob("*.txt"))
    if not files:
        raise ValidationError(f"no .txt vocabularies in {vocab_dir}")
    return [load_vocabulary(f) for f in files]


def _gather_pairs(config: Mapping[str, Any]):
    """Resolve the input corpus into evaluation pairs.

    Returns (pairs_by_engine, input_paths, skipped) where
    pairs_by_engine maps engine_id to aligned (document, truth) lists
    sorted by image_id, input_paths maps roles to files for hashing,
    and skipped counts documents or labels left out.
    """
    recipe_value = config.get("recipe")
    truth_path = config.get("truth")
    ocr_dir = config.get("ocr_dir")
    skipped: dict[str, int] = {}

    if recipe_value is not None:
        if truth_path is not None or ocr_dir is not None:
            raise ValidationError(
                "give either a recipe or truth + ocr_dir, not both")
        recipe, inputs = _resolve_recipe(str(recipe_value))
        corpus = build_corpus(recipe)
        by_engine: dict[str, list[tuple[OcrDocument, GroundTruthLabel]]] = {}
        for item in corpus:
            by_engine.setdefault(item.observed.engine_id, []).append(
                (item.observed, item.label.truth))
        for pairs in by_engine.values():
            pairs.sort(key=lambda p: p[0].image_id)
        return by_engine, inputs, skipped

    if truth_path is None or ocr_dir is None:
        raise ValidationError(
            "inputs missing: need a recipe, or truth + ocr_dir")
    labels = {lab.image_id: lab for lab in parse_coco(truth_path)}
    doc_files = sorted(Path(ocr_dir).glob("*.json"))
    if not doc_files:
        raise ValidationError(f"no .json documents in {ocr_dir}")
    inputs = {"truth": Path(truth_path)}
    by_engine = {}
    matched_ids = set()
    for f in doc_files:
        doc = load_engine_output(f)
        inputs[f"ocr/{f.name}"] = f
        truth = labels.get(doc.image_id)
        if truth is None:
            skipped["document_without_ground_truth"] = (
                skipped.get("document_without_ground_truth", 0) + 1)
            continue
        matched_ids.add(doc.image_id)
        by_engine.setdefault(doc.engine_id, []).append((doc, truth))
    unmatched_labels = len(set(labels) - matched_ids)
    if unmatched_labels:
        skipped["ground_truth_without_document"] = unmatched_labels
    if not by_engine:
        raise ValidationError(
            "no overlapping image ids between ground truth and documents")
    for pairs in by_engine.values():
        pairs.sort(key=lambda p: p[0].image_id)
    return by_engine, inputs, skipped


def _evaluate_runs(by_engine, config) -> dict[tuple[str, str],
                                              list[SampleMetrics]]:
    strategies = list(config["strategies"])
    if not strategies:
        raise ValidationError("at least one strategy is required")
    unknown = set(strategies) - set(STRATEGY_NAMES)
    if unknown:
        raise ValidationError(
            f"unknown strategies {sorted(unknown)}; "
            f"expected a subset of {STRATEGY_NAMES}")
    cluster = _cluster_config(config)
    delimiters = DelimiterSet(
        include_full_stop=bool(config["include_full_stop_delimiter"]))
    vocabs = (_load_vocabs(config) if "dbscan_vote" in strategies else None)
    out: dict[tuple[str, str], list[SampleMetrics]] = {}
    for engine_id, pairs in sorted(by_engine.items()):
        runs = evaluate_corpus(
            pairs, strategies, config=cluster, vocabs=vocabs,
            delimiters=delimiters,
            fuzzy_max_distance=int(config["fuzzy_max_distance"]))
        for strategy, samples in runs.items():
            out[(engine_id, strategy)] = samples
    return out


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(
        timespec="seconds")


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _echo_config(outdir: Path, config: Mapping[str, Any]) -> None:
    _write(outdir / "config.json",
           json.dumps(config, ensure_ascii=False, indent=2,
                      sort_keys=True) + "\n")


def _report_header(title: str, stamp: str) -> list[str]:
    # the timestamp stays on this one line so reports diff cleanly
    return [f"# {title}",
            "",
            f"ingreval {__version__}, generated {stamp}",
            ""]


def cmd_evaluate(args: argparse.Namespace) -> int:
    config = _merge_config(args.config, {
        "truth": args.truth,
        "ocr_dir": args.ocr_dir,
        "recipe": args.recipe,
        "strategies": (args.strategies.split(",") if args.strategies
                       else None),
        "vocab_dir": args.vocab_dir,
        "fuzzy_max_distance": args.fuzzy_max_distance,
        "out": args.out,
    })
    by_engine, inputs, skipped = _gather_pairs(config)
    samples_by_run = _evaluate_runs(by_engine, config)
    outdir = Path(config["out"])
    stamp = _timestamp()
    hashes = hash_inputs(inputs)

    _write(outdir / "samples.csv", samples_csv(samples_by_run))
    _write(outdir / "aggregate.json",
           aggregate_json(samples_by_run, input_hashes=hashes,
                          skipped=skipped, generated_at=stamp))

    stats_by_run = {key: aggregate(s) for key, s in samples_by_run.items()}
    engines = sorted({e for e, _ in stats_by_run})
    strategies = [s for s in STRATEGY_NAMES
                  if s in {st for _, st in stats_by_run}]
    lines = _report_header("Evaluation report", stamp)
    for strategy in strategies:
        per_engine = {e: stats_by_run[(e, strategy)] for e in engines
                      if (e, strategy) in stats_by_run}
        lines.append(f"## Engine comparison ({strategy})")
        lines.append("")
        lines.append(engine_table_md(per_engine))
    if len(engines) == 1:
        label = lambda e, s: s
    elif len(strategies) == 1:
        label = lambda e, s: e
    else:
        label = lambda e, s: f"{e}/{s}"
    lines.append("## Per-language F1")
    lines.append("")
    lines.append(per_language_table_md(
        {label(e, s): stats for (e, s), stats in stats_by_run.items()}))
    if skipped:
        lines.append("## Skipped inputs")
        lines.append("")
        for reason, count in sorted(skipped.items()):
            lines.append(f"- {reason}: {count}")
        lines.append("")
    _write(outdir / "report.md", "\n".join(lines))
    _echo_config(outdir, config)
    for reason, count in sorted(skipped.items()):
        print(f"warning: skipped {count} ({reason})", file=sys.stderr)
    print(f"wrote {outdir / 'report.md'}")
    return 0


def cmd_ablation(args: argparse.Namespace) -> int:
    config = _merge_config(args.config, {
        "truth": args.truth,
        "ocr_dir": args.ocr_dir,
        "recipe": args.recipe,
        "strategies": list(STRATEGY_NAMES),
        "vocab_dir": args.vocab_dir,
        "bootstrap": {k: v for k, v in
                      (("resamples", args.resamples),
                       ("seed", args.bootstrap_seed)) if v is not None},
        "out": args.out,
    })
    if config["recipe"] is None and config["truth"] is None:
        config["recipe"] = "ablation_c"
    by_engine, inputs, skipped = _gather_pairs(config)
    if len(by_engine) != 1:
        raise ValidationError(
            f"the strategy comparison needs documents from one engine, "
            f"got {sorted(by_engine)}")
    samples_by_run = _evaluate_runs(by_engine, config)
    engine_id = next(iter(by_engine))

    resamples = int(config["bootstrap"]["resamples"])
    seed = int(config["bootstrap"]["seed"])
    bootstraps: dict[tuple[str, str], BootstrapResult] = {}
    for i, a in enumerate(STRATEGY_NAMES):
        for b in STRATEGY_NAMES[i + 1:]:
            bootstraps[(a, b)] = paired_bootstrap(
                samples_by_run[(engine_id, a)],
                samples_by_run[(engine_id, b)],
                resamples=resamples, seed=seed)

    outdir = Path(config["out"])
    stamp = _timestamp()
    hashes = hash_inputs(inputs)
    _write(outdir / "samples.csv", samples_csv(samples_by_run))
    _write(outdir / "aggregate.json",
           aggregate_json(samples_by_run, input_hashes=hashes,
                          bootstraps=bootstraps, skipped=skipped,
                          generated_at=stamp))

    stats = {s: aggregate(samples)
             for (_, s), samples in samples_by_run.items()}
    lines = _report_header("Word-grouping strategy comparison", stamp)
    lines.append(f"Engine: {engine_id}, "
                 f"{stats[STRATEGY_NAMES[0]].n_samples} samples")
    lines.append("")
    lines.append(ablation_table_md(stats))
    lines.append("## Pairwise paired bootstrap")
    lines.append("")
    lines.append(bootstrap_table_md(bootstraps))
    lines.append("## Per-language F1")
    lines.append("")
    lines.append(per_language_table_md(
        stats, order=[s for s in STRATEGY_NAMES if s in stats]))
    _write(outdir / "ablation.md", "\n".join(lines))
    _echo_config(outdir, config)
    print(f"wrote {outdir / 'ablation.md'}")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    recipe, _ = _resolve_recipe(args.recipe)
    corpus = build_corpus(recipe)
    outdir = Path(args.out)
    ocr_dir = outdir / "ocr"
    ocr_dir.mkdir(parents=True, exist_ok=True)

    items = sorted(corpus, key=lambda it: it.label.image_id)
    labels = [it.label.truth for it in items]
    sizes = {it.label.image_id: it.observed.image_size for it in items}
    _write(outdir / "truth.json",
           json.dumps(serialize_coco(labels, sizes), ensure_ascii=False,
                      indent=2) + "\n")
    manifest = io.StringIO()
    writer = csv.writer(manifest, lineterminator="\n")
    writer.writerow(("image_id", "template_id", "language",
                     "n_ingredients", "n_words", "ocr_file"))
    for it in items:
        name = f"{it.label.image_id}.json"
        _write(ocr_dir / name,
               json.dumps(serialize_document(it.observed),
                          ensure_ascii=False, indent=2) + "\n")
        writer.writerow((it.label.image_id, it.label.template_id,
                         it.label.language,
                         len(it.label.truth.ingredients),
                         len(it.observed.words), f"ocr/{name}"))
    _write(outdir / "manifest.csv", manifest.getvalue())
    print(f"wrote {len(items)} labels under {outdir}")
    return 0


def cmd_split(args: argparse.Namespace) -> int:
    labels = parse_coco(args.truth)
    result = stratified_split(labels, args.fraction, args.seed)
    rows = sorted([(iid, "train") for iid in result.train]
                  + [(iid, "test") for iid in result.test])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("image_id", "split"))
    writer.writerows(rows)
    _write(Path(args.out), buf.getvalue())
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(f"wrote {args.out} ({len(result.train)} train, "
          f"{len(result.test)} test)")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ingreval",
        description="OCR evaluation toolkit for ingredient lists")
    parser.add_argument("--version", action="version",
                        version=f"ingreval {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io_flags(p, with_strategies=True):
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--truth", help="COCO ground-truth JSON")
        p.add_argument("--ocr-dir",
                       help="directory of OCR interchange JSON files")
        p.add_argument("--recipe",
                       help="synthetic corpus recipe (path or packaged "
                            "fixture name)")
        p.add_argument("--vocab-dir",
                       help="directory of .txt vocabularies (default: "
                            "packaged)")
        p.add_argument("--out", help="output directory")
        if with_strategies:
            p.add_argument("--strategies",
                           help="comma-separated subset of "
                                + ",".join(STRATEGY_NAMES))

    p_eval = sub.add_parser("evaluate",
                            help="score OCR documents against ground truth")
    add_io_flags(p_eval)
    p_eval.add_argument("--fuzzy-max-distance", type=int)
    p_eval.set_defaults(func=cmd_evaluate)

    p_abl = sub.add_parser("ablation",
                           help="compare all word-grouping strategies")
    add_io_flags(p_abl, with_strategies=False)
    p_abl.add_argument("--resamples", type=int,
                       help="bootstrap resample count")
    p_abl.add_argument("--bootstrap-seed", type=int)
    p_abl.set_defaults(func=cmd_ablation)

    p_gen = sub.add_parser("generate",
                           help="materialize a synthetic corpus")
    p_gen.add_argument("--recipe", required=True)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=cmd_generate)

    p_split = sub.add_parser("split",
                             help="stratified train/test split")
    p_split.add_argument("--truth", required=True)
    p_split.add_argument("--seed", type=int, default=42)
    p_split.add_argument("--fraction", type=float, default=0.2)
    p_split.add_argument("--out", default="split.csv")
    p_split.set_defaults(func=cmd_split)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
