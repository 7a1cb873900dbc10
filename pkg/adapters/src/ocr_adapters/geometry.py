"""Box geometry for engine output."""

from __future__ import annotations

from collections.abc import Sequence


def polygon_to_rect(points: Sequence[Sequence[float]]) -> list[float]:
    """Smallest axis-aligned [x, y, w, h] covering all vertices.

    Detection models emit quadrilaterals (often rotated); downstream
    consumes axis-aligned boxes only, so every vertex must end up
    inside the returned rectangle. Degenerate polygons (collinear or
    single-point) yield zero width or height; the caller decides
    whether to drop them.
    """
    if not points:
        raise ValueError("empty polygon")
    xs = [float(p[0]) for p in points]
    ys = [float(p[1]) for p in points]
    x, y = min(xs), min(ys)
    return [x, y, max(xs) - x, max(ys) - y]
