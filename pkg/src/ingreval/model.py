"""Core value types: boxes, words, documents, labels, canonical names.

All types are immutable after construction and validate their invariants
in __post_init__, so downstream stages never re-check geometry or text
shape. Coordinates are pixels with the origin at the top-left corner and
y growing downward.
"""

from __future__ import annotations

import math
import re
import unicodedata
from dataclasses import dataclass, field

from .errors import EmptyNameError, ValidationError

# Primary language subtag: 2-3 ASCII letters (lowercased on input).
_LANG_RE = re.compile(r"^[a-z]{2,3}$")

# Boxes may poke out of the declared page by this much before we reject
# the document; real engines routinely overshoot edges by a pixel.
PAGE_TOLERANCE = 2.0


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle with strictly positive extent."""

    x: float
    y: float
    width: float
    height: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)
                and math.isfinite(self.width) and math.isfinite(self.height)):
            raise ValidationError(f"non-finite rectangle: {self}")
        if self.width <= 0 or self.height <= 0:
            raise ValidationError(
                f"rectangle extent must be positive, got "
                f"width={self.width} height={self.height}")

    @property
    def right(self) -> float:
        return self.x + self.width

    @property
    def bottom(self) -> float:
        return self.y + self.height

    def union(self, other: Rect) -> Rect:
        x = min(self.x, other.x)
        y = min(self.y, other.y)
        return Rect(x, y,
                    max(self.right, other.right) - x,
                    max(self.bottom, other.bottom) - y)


def centroid(box: Rect) -> tuple[float, float]:
    """Center point of a rectangle."""
    return (box.x + box.width / 2.0, box.y + box.height / 2.0)


def union_rect(boxes) -> Rect:
    """Smallest rectangle covering all given boxes. Errors when empty."""
    it = iter(boxes)
    try:
        acc = next(it)
    except StopIteration:
        raise ValidationError("union of zero rectangles is undefined") from None
    for box in it:
        acc = acc.union(box)
    return acc


@dataclass(frozen=True)
class CanonicalName:
    """Matching key for an ingredient name; construct via canonicalize()."""

    value: str

    def __str__(self) -> str:
        return self.value


def canonicalize(raw: str) -> CanonicalName:
    """Trim, casefold, then normalize to NFC.

    Folding before normalization keeps e.g. "Beißwurz" and its
    uppercase spelling on the same key. Idempotent: feeding the result
    back in returns an equal CanonicalName.
    """
    folded = raw.strip().casefold()
    value = unicodedata.normalize("NFC", folded)
    if not value:
        raise EmptyNameError(
            f"name is empty after trimming: {raw!r}")
    return CanonicalName(value)


@dataclass(frozen=True)
class WordBox:
    """One recognized word with its box.

    Text is stripped on construction and must be non-empty afterwards.
    confidence, when present, lies in [0, 1]; line_id, when present, is
    a non-negative engine-assigned line index.
    """

    text: str
    bbox: Rect
    confidence: float | None = None
    line_id: int | None = None

    def __post_init__(self):
        stripped = self.text.strip()
        if not stripped:
            raise ValidationError(
                f"word text is empty or whitespace: {self.text!r}")
        if stripped != self.text:
            object.__setattr__(self, "text", stripped)
        if self.confidence is not None and not (0.0 <= self.confidence <= 1.0):
            raise ValidationError(
                f"confidence out of [0, 1]: {self.confidence}")
        if self.line_id is not None and self.line_id < 0:
            raise ValidationError(f"negative line_id: {self.line_id}")


@dataclass(frozen=True)
class OcrDocument:
    """All words one engine produced for one image."""

    image_id: str
    engine_id: str
    words: tuple[WordBox, ...]
    image_size: tuple[int, int] | None = None

    def __post_init__(self):
        if not self.image_id:
            raise ValidationError("image_id must be non-empty")
        if not self.engine_id:
            raise ValidationError("engine_id must be non-empty")
        if not isinstance(self.words, tuple):
            object.__setattr__(self, "words", tuple(self.words))
        if self.image_size is not None:
            w, h = self.image_size
            if w <= 0 or h <= 0:
                raise ValidationError(f"bad image_size: {self.image_size}")
            for word in self.words:
                box = word.bbox
                if (box.x < -PAGE_TOLERANCE or box.y < -PAGE_TOLERANCE
                        or box.right > w + PAGE_TOLERANCE
                        or box.bottom > h + PAGE_TOLERANCE):
                    raise ValidationError(
                        f"box {box} of word {word.text!r} lies outside the "
                        f"{w}x{h} page (tolerance {PAGE_TOLERANCE}px)")


@dataclass(frozen=True)
class IngredientBox:
    """A ground-truth ingredient name with its box on the label."""

    name: str
    bbox: Rect

    def __post_init__(self):
        normalized = unicodedata.normalize("NFC", self.name.strip())
        if not normalized:
            raise ValidationError("ingredient name is empty after trimming")
        if normalized != self.name:
            object.__setattr__(self, "name", normalized)


_SOURCES = ("real", "synthetic")


@dataclass(frozen=True)
class GroundTruthLabel:
    """Annotated truth for one label image."""

    image_id: str
    language: str
    ingredients: tuple[IngredientBox, ...]
    source: str = "real"

    def __post_init__(self):
        if not self.image_id:
            raise ValidationError("image_id must be non-empty")
        lang = self.language.lower()
        if not _LANG_RE.match(lang):
            raise ValidationError(
                f"language must be a 2-3 letter primary subtag, "
                f"got {self.language!r}")
        if lang != self.language:
            object.__setattr__(self, "language", lang)
        if not isinstance(self.ingredients, tuple):
            object.__setattr__(self, "ingredients", tuple(self.ingredients))
        # scoring divides by the truth count, so empty labels are
        # rejected at construction rather than guarded everywhere
        if not self.ingredients:
            raise ValidationError(
                f"label {self.image_id!r} has no ingredients")
        if self.source not in _SOURCES:
            raise ValidationError(
                f"source must be one of {_SOURCES}, got {self.source!r}")
