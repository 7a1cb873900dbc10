"""Thin command-line wrappers around OCR engines.

Each adapter runs one engine on one image and writes the normalized
interchange JSON that the evaluation pipeline ingests, plus a sidecar
with wall-clock latency and peak memory. Engines are imported lazily
so installing one never drags in the others.
"""

__version__ = "0.1.0"
