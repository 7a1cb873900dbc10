"""Shared fixtures: small hand-built documents and corpora."""

from __future__ import annotations

import pytest

from ingreval.model import GroundTruthLabel, IngredientBox, Rect, WordBox, OcrDocument


def word(text: str, x: float, y: float, w: float = 30.0,
         h: float = 10.0) -> WordBox:
    return WordBox(text, Rect(x, y, w, h))


@pytest.fixture
def simple_doc() -> OcrDocument:
    """Three comma-separated names on one row, header above."""
    return OcrDocument(
        image_id="img-1",
        engine_id="test",
        words=(
            word("Ingredients:", 10, 10),
            word("water,", 10, 40),
            word("sugar,", 50, 40),
            word("salt", 90, 40),
        ),
        image_size=(200, 100),
    )


@pytest.fixture
def simple_truth() -> GroundTruthLabel:
    return GroundTruthLabel(
        image_id="img-1",
        language="en",
        ingredients=(
            IngredientBox("water", Rect(10, 40, 30, 10)),
            IngredientBox("sugar", Rect(50, 40, 30, 10)),
            IngredientBox("salt", Rect(90, 40, 30, 10)),
        ),
    )
