"""Schema conformance against the evaluation package.

Every adapter output must load through the evaluation package's
ingest with zero schema errors, and the recognized text must
fuzzy-contain a fixture word at edit distance <= 2. Stubbed variants
always run (native-format fakes, real conversion code); real-engine
variants run whenever an engine is actually installed.
"""

from __future__ import annotations

import importlib.util
import json

import pytest
from conftest import FIXTURE_SIZE, FIXTURE_WORDS

ingreval = pytest.importorskip(
    "ingreval", reason="evaluation package not installed")

from ingreval.ingest import load_engine_output  # noqa: E402
from ingreval.kernels import levenshtein_within  # noqa: E402

from ocr_adapters import cli  # noqa: E402

ENGINE_MODULES = {
    "doctr": "doctr",
    "easyocr": "easyocr",
    "rapidocr": "rapidocr_onnxruntime",
}


def fuzzy_contains(doc, targets=FIXTURE_WORDS, max_distance=2) -> bool:
    for box in doc.words:
        token = box.text.strip(",.;:·、").casefold()
        for target in targets:
            if levenshtein_within(token, target,
                                  max_distance) <= max_distance:
                return True
    return False


def run_and_validate(engine_id, fixture_image, tmp_path):
    out = tmp_path / f"{engine_id}.json"
    code = cli.main([engine_id, "--image", str(fixture_image),
                     "--out", str(out)])
    assert code == 0
    doc = load_engine_output(out)  # zero schema errors
    assert doc.engine_id == engine_id
    assert doc.words
    assert fuzzy_contains(doc)
    meta = json.loads(
        (out.parent / f"{engine_id}.meta.json").read_text("utf-8"))
    assert meta["latency_ms"] >= 0
    assert meta["peak_rss_mb"] > 0
    return doc


@pytest.mark.parametrize("engine_id,fake", [
    ("easyocr", "fake_easyocr"),
    ("doctr", "fake_doctr"),
    ("rapidocr", "fake_rapidocr"),
])
def test_adapter_conformance_stubbed(engine_id, fake, request,
                                     fixture_image, tmp_path):
    request.getfixturevalue(fake)
    run_and_validate(engine_id, fixture_image, tmp_path)


def test_word_granularity_scaled_to_pixels(fake_doctr, fixture_image,
                                           tmp_path):
    doc = run_and_validate("doctr", fixture_image, tmp_path)
    assert doc.image_size == FIXTURE_SIZE
    first = doc.words[0]
    assert first.text == "water,"
    # relative geometry (0.05, 0.3)-(0.45, 0.7) on a 320x96 page
    assert first.bbox.x == pytest.approx(16.0)
    assert first.bbox.y == pytest.approx(28.8)
    assert first.bbox.width == pytest.approx(128.0)
    assert first.bbox.height == pytest.approx(38.4)


def test_line_granularity_split_into_words(fake_rapidocr, fixture_image,
                                           tmp_path):
    doc = run_and_validate("rapidocr", fixture_image, tmp_path)
    # one-word lines survive the split; line ids kept per source line
    assert [w.text for w in doc.words] == ["water,", "sugqr"]
    assert [w.line_id for w in doc.words] == [0, 1]


@pytest.mark.parametrize("engine_id", sorted(ENGINE_MODULES))
def test_installed_engine_conformance(engine_id, fixture_image, tmp_path):
    module = ENGINE_MODULES[engine_id]
    if importlib.util.find_spec(module) is None:
        pytest.skip(f"{engine_id} not installed (pip install "
                    f"'{cli.ENGINES[engine_id].pip_name}')")
    run_and_validate(engine_id, fixture_image, tmp_path)
