"""ONNX PP-OCR engine adapter (line granularity).

Chosen over the full framework for its small runtime footprint. The
engine returns (result, elapse) where result is a list of
[quadrilateral, text, score] entries (or None when nothing was
detected); quadrilaterals are converted to their axis-aligned cover.
"""

from __future__ import annotations

from pathlib import Path

from .geometry import polygon_to_rect
from .interchange import make_item

GRANULARITY = "line"


def load(langs: list[str]):
    """Build the ONNX pipeline. Language hints are recorded upstream
    but not consumed; model selection is fixed at install time."""
    from rapidocr_onnxruntime import RapidOCR
    return RapidOCR()


def recognize(engine, image_path: str | Path):
    result, _elapse = engine(str(image_path))
    items = []
    for i, (box, text, score) in enumerate(result or []):
        item = make_item(text, polygon_to_rect(box),
                         confidence=score, line_id=i)
        if item is not None:
            items.append(item)
    return GRANULARITY, items, None
