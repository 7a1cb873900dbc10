"""Entry point: adapter <engine_id> --image <path> --out <path>.

Runs one engine on one image and writes the interchange JSON plus a
metadata sidecar. One process per invocation; callers parallelize
across images with separate processes.

Exit codes: 0 success, 2 unreadable image path, 3 engine not
installed, 4 the engine raised during loading or inference.
"""

from __future__ import annotations

import argparse
import importlib
import sys
import time
import traceback
from dataclasses import dataclass
from pathlib import Path

from .interchange import (
    build_document,
    peak_rss_mb,
    sidecar_path,
    write_json,
)


@dataclass(frozen=True)
class EngineSpec:
    module: str
    pip_name: str


ENGINES = {
    "doctr": EngineSpec("ocr_adapters.doctr_engine", "python-doctr[torch]"),
    "easyocr": EngineSpec("ocr_adapters.easyocr_engine", "easyocr"),
    "rapidocr": EngineSpec("ocr_adapters.rapidocr_engine",
                           "rapidocr-onnxruntime"),
}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="adapter",
        description="run an OCR engine on an image and emit normalized "
                    "word/line JSON")
    parser.add_argument("engine_id", choices=sorted(ENGINES))
    parser.add_argument("--image", required=True, help="input image file")
    parser.add_argument("--out", required=True,
                        help="output JSON path; the metadata sidecar is "
                             "written next to it")
    parser.add_argument("--langs", default="en",
                        help="comma-separated language hints, passed to "
                             "the engine best-effort and recorded in the "
                             "sidecar")
    args = parser.parse_args(argv)
    langs = [t.strip() for t in args.langs.split(",") if t.strip()]

    image = Path(args.image)
    try:
        with open(image, "rb") as fh:
            fh.read(16)
    except OSError as exc:
        print(f"adapter: cannot read image: {exc}", file=sys.stderr)
        return 2

    spec = ENGINES[args.engine_id]
    try:
        engine = importlib.import_module(spec.module)
        backend = engine.load(langs)
    except ImportError as exc:
        print(f"adapter: engine {args.engine_id!r} is not installed "
              f"({exc}); install it with: pip install '{spec.pip_name}'",
              file=sys.stderr)
        return 3
    except Exception:
        traceback.print_exc()
        print(f"adapter: {args.engine_id} failed to initialize; "
              f"traceback above", file=sys.stderr)
        return 4

    started = time.perf_counter()
    try:
        granularity, items, image_size = engine.recognize(backend, image)
    except Exception:
        traceback.print_exc()
        print(f"adapter: {args.engine_id} inference failed on {image}; "
              f"traceback above", file=sys.stderr)
        return 4
    latency_ms = (time.perf_counter() - started) * 1000.0

    doc = build_document(image_id=image.stem, engine_id=args.engine_id,
                         granularity=granularity, items=items,
                         image_size=image_size)
    meta = {
        "engine_id": args.engine_id,
        "image": str(image),
        "langs": langs,
        "latency_ms": round(latency_ms, 3),
        "peak_rss_mb": round(peak_rss_mb(), 3),
    }
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_json(doc, out)
    write_json(meta, sidecar_path(out))
    print(f"wrote {out} ({len(items)} items) and {sidecar_path(out)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
