import math
import re

import pytest
from hypothesis import given

from exactquad.forms import GeneralForm, discriminant, to_standard
from exactquad.plot import PlotSpec, plot_overlay, plot_quadratic, quadratic_spec, sample_quadratic
from exactquad.transform import Transformation

from conftest import small_forms


def count(svg, role):
    return len(re.findall(rf'<circle class="{role}"', svg))


def test_intercept_markers_examples():
    spec = quadratic_spec(GeneralForm(1, -2, -2))
    xs = sorted(m.x for m in spec.markers if m.role == "intercept")
    assert xs == pytest.approx([1 - math.sqrt(3), 1 + math.sqrt(3)], abs=1e-12)
    assert xs == pytest.approx([-0.732, 2.732], abs=1e-3)

    spec = quadratic_spec(GeneralForm(1, -2, 1))
    (m,) = [m for m in spec.markers if m.role == "intercept"]
    (v,) = [m for m in spec.markers if m.role == "vertex"]
    assert (m.x, m.y) == (v.x, v.y) == (1.0, 0.0)

    assert count(plot_quadratic(GeneralForm(1, 0, 1)), "intercept") == 0


def test_svg_structure():
    svg = plot_quadratic(GeneralForm(1, -2, -2))
    assert svg.startswith('<?xml version="1.0"')
    assert 'version="1.1"' in svg
    assert svg.count("<polyline") == 1
    assert 'class="axis-of-symmetry"' in svg and "stroke-dasharray" in svg
    assert count(svg, "vertex") == 1
    for number in re.findall(r'(?:cx|cy|x1|y1)="([^"]+)"', svg):
        assert re.fullmatch(r"-?\d+\.\d{6}", number)


def test_determinism():
    q = GeneralForm(-2, 3, 5)
    assert plot_quadratic(q) == plot_quadratic(GeneralForm(-2, 3, 5))


@given(small_forms)
def test_marker_count_matches_case(q):
    svg = plot_quadratic(q, samples=16)
    assert count(svg, "intercept") == discriminant(q).case.real_root_count


@given(small_forms)
def test_sampled_points_mirror_about_axis(q):
    h = float(to_standard(q).h)
    pts = sample_quadratic(q, 64)
    for (x1, y1), (x2, y2) in zip(pts, reversed(pts)):
        assert abs((x1 - h) + (x2 - h)) <= 1e-9
        assert abs(y1 - y2) <= 1e-9


def test_viewport_shows_both_intercepts():
    q = GeneralForm(1, 0, -100)  # roots +-10, wider than the default 3
    spec = quadratic_spec(q)
    x0, x1, _, _ = spec.viewport
    assert x0 < -10 and x1 > 10


def test_plotspec_invariants():
    with pytest.raises(ValueError):
        PlotSpec(curves=(), sample_count=1)
    with pytest.raises(ValueError):
        PlotSpec(curves=(), viewport=(1, 1, 0, 1))


def test_overlay_wave():
    tr = Transformation(3, math.pi, math.pi / 2, 2)
    table = [(-math.pi + 2 * math.pi * i / 99, math.sin(-math.pi + 2 * math.pi * i / 99)) for i in range(100)]
    landmarks = [(-math.pi / 2, -1), (0, 0), (math.pi / 2, 1)]
    svg = plot_overlay(tr, table, landmarks=landmarks, center=(0, 0))
    assert svg.count("<polyline") == 2
    assert count(svg, "landmark") == 3
    assert count(svg, "symmetry-center") == 1
    assert svg == plot_overlay(tr, table, landmarks=landmarks, center=(0, 0))


def test_overlay_identity_coincides():
    pts = [(0.0, 0.0), (1.0, 1.0), (2.0, 4.0)]
    svg = plot_overlay(Transformation(1, 1, 0, 0), pts)
    parent, image = re.findall(r'points="([^"]+)"', svg)
    assert parent == image


def test_overlay_needs_points():
    with pytest.raises(ValueError):
        plot_overlay(Transformation(1, 1), [])
