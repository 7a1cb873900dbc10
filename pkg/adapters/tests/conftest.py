"""Shared fixtures: a rendered two-word label image and fake engine
modules that return native-format output, so the full adapter code
path (conversion, filtering, sidecar, exit codes) runs without the
engines installed. Real-engine tests live in test_conformance and
skip when an engine is absent.
"""

from __future__ import annotations

import sys
import types

import pytest
from PIL import Image, ImageDraw, ImageFont

FIXTURE_WORDS = ("water", "sugar")
FIXTURE_SIZE = (320, 96)


@pytest.fixture(scope="session")
def fixture_image(tmp_path_factory):
    """White label, black 'water, sugar' in a large default font."""
    path = tmp_path_factory.mktemp("images") / "label-0001.png"
    image = Image.new("RGB", FIXTURE_SIZE, "white")
    draw = ImageDraw.Draw(image)
    draw.text((14, 28), "water, sugar", fill="black",
              font=ImageFont.load_default(36))
    image.save(path)
    return path


# --- CRAFT-based engine fake: readtext -> (quad, text, confidence) ---

class FakeReader:
    last_langs: list[str] | None = None

    def __init__(self, lang_list, gpu=False, verbose=False):
        FakeReader.last_langs = list(lang_list)

    def readtext(self, path):
        return [
            # slightly rotated quadrilateral, misspelled on purpose
            ([[14, 30], [150, 26], [152, 62], [16, 66]], "watef,", 0.91),
            ([[168, 28], [300, 28], [300, 64], [168, 64]], "sugor", 1.02),
            ([[0, 0], [0, 0], [0, 0], [0, 0]], "ghost", 0.5),
            ([[5, 5], [30, 5], [30, 20], [5, 20]], "   ", 0.9),
        ]


@pytest.fixture
def fake_easyocr(monkeypatch):
    module = types.ModuleType("easyocr")
    module.Reader = FakeReader
    FakeReader.last_langs = None
    monkeypatch.setitem(sys.modules, "easyocr", module)
    return module


# --- document-recognition fake: pages/blocks/lines/words tree with
#     relative geometry and (h, w) page dimensions ---

class _Word:
    def __init__(self, value, geometry, confidence):
        self.value = value
        self.geometry = geometry
        self.confidence = confidence


class _Node:
    def __init__(self, **kw):
        self.__dict__.update(kw)


def _fake_doctr_result():
    words = [
        _Word("water,", ((0.05, 0.3), (0.45, 0.7)), 0.97),
        _Word("sugar", ((0.5, 0.3), (0.95, 0.7)), 0.93),
        _Word("", ((0.1, 0.1), (0.2, 0.2)), 0.5),
        _Word("smudge", ((0.3, 0.4), (0.3, 0.6)), 0.4),  # zero width
    ]
    line = _Node(words=words)
    page = _Node(blocks=[_Node(lines=[line])], dimensions=(96, 320))
    return _Node(pages=[page])


@pytest.fixture
def fake_doctr(monkeypatch):
    root = types.ModuleType("doctr")
    models = types.ModuleType("doctr.models")
    io_mod = types.ModuleType("doctr.io")
    models.ocr_predictor = lambda pretrained: (lambda pages:
                                               _fake_doctr_result())
    io_mod.DocumentFile = types.SimpleNamespace(
        from_images=lambda path: [path])
    root.models = models
    root.io = io_mod
    monkeypatch.setitem(sys.modules, "doctr", root)
    monkeypatch.setitem(sys.modules, "doctr.models", models)
    monkeypatch.setitem(sys.modules, "doctr.io", io_mod)
    return root


# --- ONNX PP-OCR fake: engine(path) -> (result, elapse) ---

class FakeRapidOCR:
    def __call__(self, path):
        result = [
            [[[14, 28], [152, 28], [152, 64], [14, 64]], "water,", 0.95],
            [[[168, 28], [300, 28], [300, 64], [168, 64]], "sugqr", 0.88],
        ]
        return result, [0.01, 0.0, 0.02]


@pytest.fixture
def fake_rapidocr(monkeypatch):
    module = types.ModuleType("rapidocr_onnxruntime")
    module.RapidOCR = FakeRapidOCR
    monkeypatch.setitem(sys.modules, "rapidocr_onnxruntime", module)
    return module
