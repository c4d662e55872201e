"""Deterministic SVG figures: parabola anatomy and parent/transform overlays."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from math import sqrt

from .forms import GeneralForm, RootCase, discriminant, to_factored, to_standard
from .transform import Point, Transformation, map_table

DEFAULT_SAMPLES = 256
WIDTH, HEIGHT, MARGIN = 640, 480, 40


@dataclass(frozen=True)
class Curve:
    points: tuple[tuple[float, float], ...]
    role: str


@dataclass(frozen=True)
class Marker:
    x: float
    y: float
    role: str  # vertex | intercept | landmark | symmetry-center


@dataclass(frozen=True)
class PlotSpec:
    curves: tuple[Curve, ...]
    markers: tuple[Marker, ...] = ()
    axis_x: float | None = None  # dashed vertical axis of symmetry
    viewport: tuple[float, float, float, float] = (-1.0, 1.0, -1.0, 1.0)
    sample_count: int = DEFAULT_SAMPLES
    title: str = ""
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.sample_count < 2:
            raise ValueError("sample_count must be at least 2")
        x0, x1, y0, y1 = self.viewport
        if not (x0 < x1 and y0 < y1):
            raise ValueError(f"degenerate viewport {self.viewport}")


def sample_quadratic(q: GeneralForm, samples: int = DEFAULT_SAMPLES,
                     half_width: float | None = None) -> list[tuple[float, float]]:
    """Points on ``y = q(x)`` spaced symmetrically about the axis ``x = h``.

    Offsets from ``h`` are built from integer numerators so mirrored samples
    have exactly opposite offsets.
    """
    if samples < 2:
        raise ValueError("samples must be at least 2")
    sf = to_standard(q)
    a, h, k = float(sf.a), float(sf.h), float(sf.k)
    w = default_half_width(q) if half_width is None else half_width
    out = []
    for i in range(samples):
        dx = w * (2 * i - (samples - 1)) / (samples - 1)
        out.append((h + dx, a * dx * dx + k))
    return out


def default_half_width(q: GeneralForm) -> float:
    delta = discriminant(q).delta
    z = sqrt(abs(float(delta))) / (2 * abs(float(q.a)))
    return max(3.0, 2 * z)


def _fit(points: Sequence[tuple[float, float]], pad: float = 0.08) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    if x1 - x0 < 1e-12:
        x0, x1 = x0 - 1, x1 + 1
    if y1 - y0 < 1e-12:
        y0, y1 = y0 - 1, y1 + 1
    dx, dy = (x1 - x0) * pad, (y1 - y0) * pad
    return x0 - dx, x1 + dx, y0 - dy, y1 + dy


def quadratic_spec(q: GeneralForm, samples: int = DEFAULT_SAMPLES,
                   viewport: tuple[float, float, float, float] | None = None) -> PlotSpec:
    sf = to_standard(q)
    h, k = float(sf.h), float(sf.k)
    pts = sample_quadratic(q, samples)
    cls = discriminant(q)
    markers = [Marker(h, k, "vertex")]
    if cls.case is RootCase.TWO_REAL_ROOTS:
        f = to_factored(q)
        markers += [Marker(f.r.real_approx().real, 0.0, "intercept"),
                    Marker(f.s.real_approx().real, 0.0, "intercept")]
    elif cls.case is RootCase.DOUBLE_ROOT:
        markers.append(Marker(h, 0.0, "intercept"))
    if viewport is None:
        viewport = _fit(pts + [(h, 0.0)])
    return PlotSpec(
        curves=(Curve(tuple(pts), "parabola"),),
        markers=tuple(markers),
        axis_x=h,
        viewport=viewport,
        sample_count=samples,
        title=f"y = {q}",
        meta={"case": cls.case.value},
    )


def plot_quadratic(q: GeneralForm, samples: int = DEFAULT_SAMPLES,
                   viewport: tuple[float, float, float, float] | None = None) -> str:
    """Parabola with vertex, dashed axis ``x = h`` and real x-intercepts."""
    return render_svg(quadratic_spec(q, samples, viewport))


def plot_overlay(tr: Transformation, parent_pts: Sequence[Point | tuple[float, float]],
                 landmarks: Sequence[Point | tuple[float, float]] = (),
                 center: Point | tuple[float, float] | None = None) -> str:
    """Parent polyline and its image under ``tr``.

    ``landmarks`` and ``center`` are parent-plane points; their images are
    marked on the transformed curve.
    """
    if not parent_pts:
        raise ValueError("overlay needs at least one parent point")
    parent = [(float(t), float(s)) for t, s in parent_pts]
    image = [(float(x), float(y)) for x, y in map_table(tr, parent_pts)]
    markers = [Marker(float(x), float(y), "landmark") for x, y in map_table(tr, landmarks)]
    if center is not None:
        cx, cy = map_table(tr, [center])[0]
        markers.append(Marker(float(cx), float(cy), "symmetry-center"))
    viewport = _fit(parent + image + [(m.x, m.y) for m in markers])
    spec = PlotSpec(
        curves=(Curve(tuple(parent), "parent"), Curve(tuple(image), "transformed")),
        markers=tuple(markers),
        viewport=viewport,
        sample_count=max(2, len(parent)),
        title=f"A={tr.A} B={tr.B} C={tr.C} D={tr.D}",
    )
    return render_svg(spec)


# -- rendering ------------------------------------------------------------

_STYLE = {
    "parabola": 'stroke="#1f77b4" stroke-width="2"',
    "parent": 'stroke="#888888" stroke-width="1.5"',
    "transformed": 'stroke="#d62728" stroke-width="2"',
}
_MARKER_FILL = {
    "vertex": "#2ca02c",
    "intercept": "#ff7f0e",
    "landmark": "#9467bd",
    "symmetry-center": "#17becf",
}


def _f(v: float) -> str:
    text = f"{v:.6f}"
    return "0.000000" if text == "-0.000000" else text


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(spec: PlotSpec) -> str:
    x0, x1, y0, y1 = spec.viewport
    sx = (WIDTH - 2 * MARGIN) / (x1 - x0)
    sy = (HEIGHT - 2 * MARGIN) / (y1 - y0)

    def px(x: float) -> str:
        return _f(MARGIN + (x - x0) * sx)

    def py(y: float) -> str:
        return _f(HEIGHT - MARGIN - (y - y0) * sy)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{_escape(spec.title)}</title>",
    ]
    for key, value in sorted(spec.meta.items()):
        lines.append(f'<desc class="{key}">{_escape(value)}</desc>')
    lines.append(f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>')
    # coordinate axes when visible
    if y0 <= 0 <= y1:
        lines.append(f'<line class="x-axis" x1="{px(x0)}" y1="{py(0)}" x2="{px(x1)}" y2="{py(0)}" '
                     'stroke="black" stroke-width="1"/>')
    if x0 <= 0 <= x1:
        lines.append(f'<line class="y-axis" x1="{px(0)}" y1="{py(y0)}" x2="{px(0)}" y2="{py(y1)}" '
                     'stroke="black" stroke-width="1"/>')
    if spec.axis_x is not None:
        lines.append(
            f'<line class="axis-of-symmetry" x1="{px(spec.axis_x)}" y1="{py(y0)}" '
            f'x2="{px(spec.axis_x)}" y2="{py(y1)}" stroke="#555555" stroke-dasharray="6,4"/>'
        )
    for curve in spec.curves:
        pts = " ".join(f"{px(x)},{py(y)}" for x, y in curve.points)
        style = _STYLE.get(curve.role, 'stroke="black"')
        lines.append(f'<polyline class="{curve.role}" fill="none" {style} points="{pts}"/>')
    for m in spec.markers:
        lines.append(f'<circle class="{m.role}" cx="{px(m.x)}" cy="{py(m.y)}" r="5" '
                     f'fill="{_MARKER_FILL.get(m.role, "black")}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
