import random

import pytest

from ocr_adapters.geometry import polygon_to_rect


def test_axis_aligned_quad():
    assert polygon_to_rect([[10, 20], [110, 20], [110, 50], [10, 50]]) \
        == [10.0, 20.0, 100.0, 30.0]


def test_rotated_quad_is_covered():
    quad = [[14, 30], [150, 26], [152, 62], [16, 66]]
    x, y, w, h = polygon_to_rect(quad)
    assert (x, y, w, h) == (14.0, 26.0, 138.0, 40.0)
    for px, py in quad:
        assert x <= px <= x + w
        assert y <= py <= y + h


def test_every_vertex_inside_cover():
    # (min + (max - min)) can land an ulp below max; allow exactly that
    # float rounding, nothing more
    slack = 1e-9
    rng = random.Random(0)
    for _ in range(300):
        n = rng.randint(1, 8)
        poly = [(rng.uniform(-500, 500), rng.uniform(-500, 500))
                for _ in range(n)]
        x, y, w, h = polygon_to_rect(poly)
        assert w >= 0 and h >= 0
        for px, py in poly:
            assert x <= px <= x + w + slack
            assert y <= py <= y + h + slack


def test_degenerate_polygons_yield_zero_extent():
    assert polygon_to_rect([[5, 7]]) == [5.0, 7.0, 0.0, 0.0]
    assert polygon_to_rect([[0, 0], [10, 0]])[3] == 0.0


def test_empty_polygon_rejected():
    with pytest.raises(ValueError):
        polygon_to_rect([])


def test_accepts_numeric_strings_via_float_cast():
    # engines sometimes hand back numpy scalars; anything float() takes
    assert polygon_to_rect([["1", "2"], ["3", "4"]]) == [1.0, 2.0, 2.0, 2.0]
