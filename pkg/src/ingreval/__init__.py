"""Toolkit for evaluating OCR on food-packaging ingredient lists.

Pipeline stages: engine output normalization to word boxes, spatial
clustering to isolate the ingredient block, text extraction into
candidate ingredients, and exact/fuzzy matching metrics against ground
truth. A synthetic label generator with an OCR-noise simulator supports
controlled ablations; the CLI ties it together into reproducible runs.
"""

__version__ = "0.1.0"

from .model import (  # noqa: F401
    CanonicalName,
    GroundTruthLabel,
    IngredientBox,
    OcrDocument,
    Rect,
    WordBox,
    canonicalize,
    centroid,
)
