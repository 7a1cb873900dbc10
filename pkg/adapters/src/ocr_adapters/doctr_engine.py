"""Document-recognition engine adapter (word granularity).

The engine reports word geometry relative to the page as
((xmin, ymin), (xmax, ymax)) in [0, 1]; boxes are scaled to pixels
here using the page dimensions it also reports.
"""

from __future__ import annotations

from pathlib import Path

from .interchange import make_item

GRANULARITY = "word"


def load(langs: list[str]):
    """Build the predictor. Language hints are recorded upstream but
    not consumed; the pretrained detection+recognition stack is not
    language-switchable."""
    from doctr.models import ocr_predictor
    return ocr_predictor(pretrained=True)


def recognize(predictor, image_path: str | Path):
    from doctr.io import DocumentFile
    pages = DocumentFile.from_images(str(image_path))
    result = predictor(pages)
    page = result.pages[0]
    height, width = page.dimensions

    items = []
    line_counter = 0
    for block in page.blocks:
        for line in block.lines:
            for word in line.words:
                (x0, y0), (x1, y1) = word.geometry
                item = make_item(
                    word.value,
                    [x0 * width, y0 * height,
                     (x1 - x0) * width, (y1 - y0) * height],
                    confidence=word.confidence,
                    line_id=line_counter)
                if item is not None:
                    items.append(item)
            line_counter += 1
    return GRANULARITY, items, (int(width), int(height))
