"""Interchange JSON assembly and the metadata sidecar.

The output contract per image is one JSON document:

    {
      "image_id": "<image file stem>",
      "engine_id": "doctr" | "easyocr" | "rapidocr",
      "granularity": "word" | "line",
      "items": [{"text", "bbox": [x, y, w, h],
                 "confidence"?, "line_id"?}, ...],
      "image_size"?: [width, height]
    }

plus a sidecar next to it carrying {latency_ms, peak_rss_mb} and the
language hints that were passed through.
"""

from __future__ import annotations

import json
import resource
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any


def make_item(text: Any, bbox: Sequence[float], confidence: Any = None,
              line_id: int | None = None) -> dict | None:
    """One interchange item, or None for output the schema forbids.

    Engines occasionally emit empty strings, zero-area boxes, or
    confidences a hair outside [0, 1]; empties and degenerate boxes
    are dropped here (the one place that policy lives) and confidence
    is clamped.
    """
    text = str(text)
    x, y, w, h = (float(v) for v in bbox)
    if not text.strip() or w <= 0 or h <= 0:
        return None
    item: dict[str, Any] = {"text": text, "bbox": [x, y, w, h]}
    if confidence is not None:
        c = float(confidence)
        item["confidence"] = 0.0 if c < 0.0 else 1.0 if c > 1.0 else c
    if line_id is not None:
        item["line_id"] = int(line_id)
    return item


def build_document(image_id: str, engine_id: str, granularity: str,
                   items: list[dict],
                   image_size: tuple[int, int] | None = None) -> dict:
    doc: dict[str, Any] = {
        "image_id": image_id,
        "engine_id": engine_id,
        "granularity": granularity,
        "items": items,
    }
    if image_size is not None:
        doc["image_size"] = [int(image_size[0]), int(image_size[1])]
    return doc


def sidecar_path(out_path: str | Path) -> Path:
    """Metadata file next to the output: doc.json -> doc.meta.json."""
    out = Path(out_path)
    if out.suffix == ".json":
        return out.with_suffix(".meta.json")
    return out.with_name(out.name + ".meta.json")


def peak_rss_mb() -> float:
    """Peak resident set size of this process, in MiB."""
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    # Linux reports KiB, macOS bytes
    divisor = 1048576.0 if sys.platform == "darwin" else 1024.0
    return peak / divisor


def write_json(payload: dict, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(payload, ensure_ascii=False, indent=1) + "\n",
        encoding="utf-8")
