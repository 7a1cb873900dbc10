"""CRAFT-based engine adapter (line granularity).

The engine returns (quadrilateral, text, confidence) per detected
region; quadrilaterals are converted to their axis-aligned cover.
"""

from __future__ import annotations

from pathlib import Path

from .geometry import polygon_to_rect
from .interchange import make_item

GRANULARITY = "line"


def load(langs: list[str]):
    """Build a reader for the hinted languages (its native lever)."""
    import easyocr
    return easyocr.Reader(list(langs) or ["en"], gpu=False, verbose=False)


def recognize(reader, image_path: str | Path):
    results = reader.readtext(str(image_path))
    items = []
    for i, (box, text, confidence) in enumerate(results):
        item = make_item(text, polygon_to_rect(box),
                         confidence=confidence, line_id=i)
        if item is not None:
            items.append(item)
    return GRANULARITY, items, None
