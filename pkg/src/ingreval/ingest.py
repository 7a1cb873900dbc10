"""Input handling: annotation files, engine output, and dataset splits.

Ground truth travels as COCO object-detection JSON where each
annotation carries ``attributes: {name, language}``. Engine output
travels as one interchange JSON document per image:

    {
      "image_id": "pkg-0017",
      "engine_id": "some-engine",
      "granularity": "word" | "line",
      "items": [{"text": ..., "bbox": [x, y, w, h],
                 "confidence": 0.93, "line_id": 4}, ...],
      "image_size": [w, h]          # optional
    }

Integer COCO ids stay internal; evaluation joins truth to engine output
on the string image id, which for COCO images is the file_name stem.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Sequence

from .errors import (
    ParseError,
    ReferentialIntegrityError,
    ValidationError,
)
from .model import GroundTruthLabel, IngredientBox, OcrDocument, Rect, WordBox
from .prng import SplitMix64, derive_seed


def _load_json(source: str | Path) -> Any:
    path = Path(source)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read: {exc}", path=str(path)) from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("not valid UTF-8", path=str(path),
                         offset=exc.start) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[:exc.pos].encode("utf-8"))
        raise ParseError(f"invalid JSON: {exc.msg}", path=str(path),
                         offset=offset) from exc


def _require(mapping: Mapping[str, Any], key: str, context: str) -> Any:
    if key not in mapping:
        raise ValidationError(f"{context}: missing required key {key!r}")
    return mapping[key]


def _as_rect(bbox: Any, context: str) -> Rect:
    if (not isinstance(bbox, (list, tuple)) or len(bbox) != 4
            or not all(isinstance(v, (int, float)) for v in bbox)):
        raise ValidationError(
            f"{context}: bbox must be [x, y, w, h] numbers, got {bbox!r}")
    try:
        return Rect(float(bbox[0]), float(bbox[1]),
                    float(bbox[2]), float(bbox[3]))
    except ValidationError as exc:
        raise ValidationError(f"{context}: {exc}") from None


def parse_coco(source: str | Path) -> list[GroundTruthLabel]:
    """Read a COCO annotation file into ground-truth labels.

    One label per image, in file order. The label's string image id is
    the file_name stem. Language comes from image attributes when
    present, otherwise from the image's annotations, which must agree.
    """
    doc = _load_json(source)
    if not isinstance(doc, dict):
        raise ValidationError(f"{source}: top level must be a JSON object")
    images = doc.get("images", [])
    annotations = doc.get("annotations", [])

    by_coco_id: dict[int, dict] = {}
    stems: dict[str, int] = {}
    for img in images:
        coco_id = _require(img, "id", f"{source}: image")
        file_name = _require(img, "file_name", f"{source}: image {coco_id}")
        if coco_id in by_coco_id:
            raise ValidationError(f"{source}: duplicate image id {coco_id}")
        stem = Path(str(file_name)).stem
        if stem in stems:
            raise ValidationError(
                f"{source}: images {stems[stem]} and {coco_id} share the "
                f"file_name stem {stem!r}; stems are evaluation keys and "
                f"must be unique")
        stems[stem] = coco_id
        by_coco_id[coco_id] = img

    dangling = [ann.get("id") for ann in annotations
                if ann.get("image_id") not in by_coco_id]
    if dangling:
        raise ReferentialIntegrityError(
            f"{source}: {len(dangling)} annotation(s) reference missing "
            f"images; annotation ids: {dangling}", offenders=dangling)

    per_image: dict[int, list[IngredientBox]] = {c: [] for c in by_coco_id}
    ann_langs: dict[int, set[str]] = {c: set() for c in by_coco_id}
    for ann in annotations:
        context = f"{source}: annotation {ann.get('id')}"
        attrs = _require(ann, "attributes", context)
        name = _require(attrs, "name", context)
        bbox = _as_rect(_require(ann, "bbox", context), context)
        per_image[ann["image_id"]].append(IngredientBox(str(name), bbox))
        lang = attrs.get("language")
        if lang:
            ann_langs[ann["image_id"]].add(str(lang).lower())

    labels = []
    for coco_id, img in by_coco_id.items():
        context = f"{source}: image {coco_id}"
        lang = (img.get("attributes") or {}).get("language")
        if not lang:
            candidates = ann_langs[coco_id]
            if len(candidates) == 1:
                lang = next(iter(candidates))
            elif not candidates:
                raise ValidationError(f"{context}: no language attribute on "
                                      f"the image or its annotations")
            else:
                raise ValidationError(
                    f"{context}: annotations disagree on language: "
                    f"{sorted(candidates)}")
        stem = Path(str(img["file_name"])).stem
        if not per_image[coco_id]:
            raise ValidationError(
                f"{context}: image {stem!r} has no annotations; every "
                f"ground-truth image needs at least one ingredient")
        labels.append(GroundTruthLabel(
            image_id=stem,
            language=str(lang),
            ingredients=tuple(per_image[coco_id]),
            source=str(img.get("attributes", {}).get("source", "real")),
        ))
    return labels


def serialize_coco(labels: Sequence[GroundTruthLabel],
                   image_sizes: Mapping[str, tuple[int, int]]) -> dict:
    """Build a COCO JSON object from labels. Inverse of parse_coco up to
    COCO ids, which are assigned sequentially from 1 here.
    """
    images = []
    annotations = []
    ann_id = 0
    for idx, label in enumerate(labels, start=1):
        if label.image_id not in image_sizes:
            raise ValidationError(
                f"no image size given for {label.image_id!r}")
        width, height = image_sizes[label.image_id]
        images.append({
            "id": idx,
            "file_name": f"{label.image_id}.png",
            "width": int(width),
            "height": int(height),
            "attributes": {"language": label.language,
                           "source": label.source},
        })
        for ing in label.ingredients:
            ann_id += 1
            box = ing.bbox
            annotations.append({
                "id": ann_id,
                "image_id": idx,
                "category_id": 1,
                "bbox": [box.x, box.y, box.width, box.height],
                "area": box.width * box.height,
                "iscrowd": 0,
                "attributes": {"name": ing.name,
                               "language": label.language},
            })
    return {
        "images": images,
        "annotations": annotations,
        "categories": [{"id": 1, "name": "ingredient"}],
    }


def lines_to_words(text: str, bbox: Rect, confidence: float | None = None,
                   line_id: int | None = None) -> list[WordBox]:
    """Split a line-level box into per-word boxes.

    Horizontal extent is apportioned by code-point share: with W total
    word code points over n words, the line width divides into
    W + (n - 1) units; each word spans len(word) units and each gap
    exactly one. All words inherit the line's y extent.
    """
    words = text.split()
    if not words:
        return []
    total_cp = sum(len(w) for w in words)
    unit = bbox.width / (total_cp + len(words) - 1)
    out = []
    x = bbox.x
    for word in words:
        w = len(word) * unit
        out.append(WordBox(word, Rect(x, bbox.y, w, bbox.height),
                           confidence=confidence, line_id=line_id))
        x += w + unit
    return out


_GRANULARITIES = ("word", "line")


def normalize_engine_output(doc: Mapping[str, Any],
                            context: str = "engine output") -> OcrDocument:
    """Validate an interchange JSON object and build a word-level
    document. Line-granularity items are split with lines_to_words;
    word-granularity items containing internal whitespace are rejected.
    Items whose text is empty after trimming are dropped.
    """
    image_id = str(_require(doc, "image_id", context))
    engine_id = str(_require(doc, "engine_id", context))
    granularity = _require(doc, "granularity", context)
    if granularity not in _GRANULARITIES:
        raise ValidationError(
            f"{context}: granularity must be one of {_GRANULARITIES}, "
            f"got {granularity!r}")
    items = _require(doc, "items", context)
    if not isinstance(items, list):
        raise ValidationError(f"{context}: items must be a list")

    image_size = None
    if doc.get("image_size") is not None:
        raw_size = doc["image_size"]
        if (not isinstance(raw_size, (list, tuple)) or len(raw_size) != 2):
            raise ValidationError(
                f"{context}: image_size must be [width, height]")
        image_size = (int(raw_size[0]), int(raw_size[1]))

    if granularity == "word":
        offenders = [i for i, item in enumerate(items)
                     if len(str(item.get("text", "")).split()) > 1]
        if offenders:
            from .errors import MixedGranularityError
            raise MixedGranularityError(
                f"{context}: declared word granularity but items "
                f"{offenders} contain internal whitespace; emit them as "
                f"granularity \"line\" instead")

    words: list[WordBox] = []
    for i, item in enumerate(items):
        item_ctx = f"{context}: item {i}"
        if not isinstance(item, Mapping):
            raise ValidationError(f"{item_ctx}: must be an object")
        text = str(_require(item, "text", item_ctx))
        if not text.strip():
            continue
        bbox = _as_rect(_require(item, "bbox", item_ctx), item_ctx)
        confidence = item.get("confidence")
        if confidence is not None:
            confidence = float(confidence)
        line_id = item.get("line_id")
        if line_id is not None:
            line_id = int(line_id)
        if granularity == "word":
            words.append(WordBox(text, bbox, confidence=confidence,
                                 line_id=line_id))
        else:
            words.extend(lines_to_words(
                text, bbox, confidence=confidence,
                line_id=line_id if line_id is not None else i))
    return OcrDocument(image_id=image_id, engine_id=engine_id,
                       words=tuple(words), image_size=image_size)


def load_engine_output(source: str | Path) -> OcrDocument:
    """Read and normalize one interchange JSON file."""
    doc = _load_json(source)
    if not isinstance(doc, Mapping):
        raise ValidationError(f"{source}: top level must be a JSON object")
    return normalize_engine_output(doc, context=str(source))


def serialize_document(doc: OcrDocument) -> dict:
    """Interchange JSON object for a word-level document."""
    items = []
    for w in doc.words:
        item: dict[str, Any] = {
            "text": w.text,
            "bbox": [w.bbox.x, w.bbox.y, w.bbox.width, w.bbox.height],
        }
        if w.confidence is not None:
            item["confidence"] = w.confidence
        if w.line_id is not None:
            item["line_id"] = w.line_id
        items.append(item)
    out: dict[str, Any] = {
        "image_id": doc.image_id,
        "engine_id": doc.engine_id,
        "granularity": "word",
        "items": items,
    }
    if doc.image_size is not None:
        out["image_size"] = list(doc.image_size)
    return out


def iter_lexicon_lines(source: str | Path) -> list[str]:
    """Read a lexicon file: UTF-8, one entry per line, blank lines and
    lines starting with # skipped, surrounding whitespace trimmed.
    """
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read: {exc}", path=str(path)) from exc
    except UnicodeDecodeError as exc:
        raise ParseError("not valid UTF-8", path=str(path),
                         offset=exc.start) from exc
    out = []
    for line in text.splitlines():
        entry = line.strip()
        if entry and not entry.startswith("#"):
            out.append(entry)
    return out


@dataclass(frozen=True)
class SplitResult:
    """Train/test image ids plus any per-stratum warnings."""

    train: tuple[str, ...]
    test: tuple[str, ...]
    warnings: tuple[str, ...]


def stratified_split(labels: Sequence[GroundTruthLabel],
                     test_fraction: float, seed: int) -> SplitResult:
    """Split image ids into train/test, stratified by language.

    Within each language the ids are sorted, shuffled with a seed
    derived from (seed, "split", language), and the first
    round-half-up(fraction * size) go to test. A single-image stratum
    stays in train and produces a warning record. Deterministic for a
    given (labels, fraction, seed) regardless of input order.
    """
    if not (0.0 < test_fraction < 1.0):
        raise ValidationError(
            f"test_fraction must be in (0, 1), got {test_fraction}")
    ids_seen: set[str] = set()
    strata: dict[str, list[str]] = {}
    for label in labels:
        if label.image_id in ids_seen:
            raise ValidationError(f"duplicate image_id {label.image_id!r}")
        ids_seen.add(label.image_id)
        strata.setdefault(label.language, []).append(label.image_id)

    train: list[str] = []
    test: list[str] = []
    warnings: list[str] = []
    for language in sorted(strata):
        ids = sorted(strata[language])
        if len(ids) == 1:
            train.extend(ids)
            warnings.append(
                f"stratum {language!r} has a single image; kept in train")
            continue
        rng = SplitMix64(derive_seed(seed, "split", language))
        rng.shuffle(ids)
        n_test = int(test_fraction * len(ids) + 0.5)  # round half up
        test.extend(ids[:n_test])
        train.extend(ids[n_test:])
    return SplitResult(train=tuple(sorted(train)), test=tuple(sorted(test)),
                       warnings=tuple(warnings))
