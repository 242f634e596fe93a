"""
Implicit curve tracing and SVG figures.

Floats are used here and only here: the exact polynomial is evaluated in double
precision on a grid, the zero set is traced by marching squares with per-cell
linear interpolation, and the result is drawn as SVG.
"""

import itertools
import math
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from ..leibniz import TangentDirection
from ..logging_config import get_logger
from ..models import PlotSpec
from ..poly import Point, Poly2

logger = get_logger(__name__)

type XY = tuple[float, float]
type Segment = tuple[XY, XY]
type BBox = tuple[float, float, float, float]

# Cell corners: 0 = (i, j), 1 = (i+1, j), 2 = (i+1, j+1), 3 = (i, j+1).
_EDGES = ((0, 1), (1, 2), (2, 3), (3, 0))


def _build_table() -> list[tuple[tuple[int, int], ...]]:
    """Crossed-edge pairs for each of the 16 corner sign patterns; saddles (5, 10) left empty."""
    table: list[tuple[tuple[int, int], ...]] = []
    for case in range(16):
        bits = [(case >> corner) & 1 for corner in range(4)]
        crossed = [e for e, (a, b) in enumerate(_EDGES) if bits[a] != bits[b]]
        table.append(((crossed[0], crossed[1]),) if len(crossed) == 2 else ())
    return table


_TABLE = _build_table()


def _saddle_pairs(case: int, centre_positive: bool) -> tuple[tuple[int, int], ...]:
    corner0_positive = bool(case & 1)
    if centre_positive == corner0_positive:
        # corners 0 and 2 join through the centre; cut off corners 1 and 3
        return ((0, 1), (2, 3))
    return ((3, 0), (1, 2))


type _Coords = npt.NDArray[np.float64] | float


def evaluate(poly: Poly2, x: _Coords, y: _Coords) -> npt.NDArray[np.float64]:
    """Float evaluation of an exact polynomial, elementwise."""
    total = np.zeros(np.broadcast(x, y).shape, dtype=np.float64)
    for (i, j), c in poly.sorted_terms():
        total = total + float(c) * np.power(x, i) * np.power(y, j)
    return total


def trace_curve(poly: Poly2, bbox: BBox, grid: int) -> list[Segment]:
    """
    Segments approximating poly = 0 inside the box, one or two per crossed cell.

    Args:
        poly: Curve polynomial
        bbox: (xmin, xmax, ymin, ymax)
        grid: Number of cells per axis
    """
    xmin, xmax, ymin, ymax = (float(v) for v in bbox)
    xs = np.linspace(xmin, xmax, grid + 1)
    ys = np.linspace(ymin, ymax, grid + 1)
    gx, gy = np.meshgrid(xs, ys)
    values = evaluate(poly, gx, gy)
    positive = values > 0
    cases = (
        positive[:-1, :-1].astype(np.int64)
        + 2 * positive[:-1, 1:]
        + 4 * positive[1:, 1:]
        + 8 * positive[1:, :-1]
    )
    segments: list[Segment] = []
    for j, i in np.argwhere((cases != 0) & (cases != 15)):
        case = int(cases[j, i])
        corners = ((xs[i], ys[j]), (xs[i + 1], ys[j]), (xs[i + 1], ys[j + 1]), (xs[i], ys[j + 1]))
        corner_values = (values[j, i], values[j, i + 1], values[j + 1, i + 1], values[j + 1, i])
        pairs = _TABLE[case]
        if not pairs:
            centre = float(evaluate(poly, (xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2))
            pairs = _saddle_pairs(case, centre > 0)
        for e0, e1 in pairs:
            segments.append(
                (_crossing(corners, corner_values, _EDGES[e0]), _crossing(corners, corner_values, _EDGES[e1]))
            )
    logger.debug(f"traced {len(segments)} segments on a {grid}x{grid} grid")
    return segments


def _crossing(corners: Sequence[XY], values: Sequence[float], edge: tuple[int, int]) -> XY:
    a, b = edge
    va, vb = float(values[a]), float(values[b])
    t = min(max(va / (va - vb), 0.0), 1.0)
    (xa, ya), (xb, yb) = corners[a], corners[b]
    return (float(xa + t * (xb - xa)), float(ya + t * (yb - ya)))


def chord_slope(segments: Sequence[Segment]) -> float | None:
    """
    Slope of the longest chord between traced points, math.inf when it is vertical.

    Traced in a small box around a regular point, the two farthest points are where
    the curve leaves the box, so the chord approximates the tangent. None when
    fewer than two distinct points were traced.
    """
    points = sorted({p for segment in segments for p in segment})
    if len(points) < 2:
        return None
    best = max(itertools.combinations(points, 2), key=lambda pair: math.dist(*pair))
    (x0, y0), (x1, y1) = best
    if x1 == x0:
        return math.inf
    return (y1 - y0) / (x1 - x0)


def local_slope(poly: Poly2, at: Point, half_width: float = 1e-4, grid: int = 16) -> float | None:
    """Finite-difference slope at a point from a trace of the box [x0 +- h] x [y0 +- h]."""
    x0, y0 = float(at.x0), float(at.y0)
    box = (x0 - half_width, x0 + half_width, y0 - half_width, y0 + half_width)
    return chord_slope(trace_curve(poly, box, grid))


# ----------------------------------------------------------------------
# SVG
# ----------------------------------------------------------------------

_CURVE_COLOR = "#1f4e8c"
_TANGENT_COLORS = ("#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d")


def _fmt(value: float) -> str:
    text = f"{value:.3f}"
    return "0.000" if text == "-0.000" else text


def _nice_step(span: float) -> float:
    raw = span / 10
    magnitude = 10 ** math.floor(math.log10(raw))
    for factor in (1, 2, 5, 10):
        if raw <= factor * magnitude:
            return factor * magnitude
    return 10 * magnitude


def _clip_line(origin: XY, direction: XY, bbox: BBox) -> Segment | None:
    """Portion of the line origin + t * direction inside the box."""
    lo, hi = -math.inf, math.inf
    axes = ((origin[0], direction[0], bbox[0], bbox[1]), (origin[1], direction[1], bbox[2], bbox[3]))
    for p, d, vmin, vmax in axes:
        if d == 0:
            if not vmin <= p <= vmax:
                return None
            continue
        t0, t1 = sorted(((vmin - p) / d, (vmax - p) / d))
        lo, hi = max(lo, t0), min(hi, t1)
    if lo > hi:
        return None
    return (
        (origin[0] + lo * direction[0], origin[1] + lo * direction[1]),
        (origin[0] + hi * direction[0], origin[1] + hi * direction[1]),
    )


class _Canvas:
    """World-to-pixel mapping for a plot."""

    def __init__(self, spec: PlotSpec) -> None:
        self.spec = spec
        self.xmin, self.xmax, self.ymin, self.ymax = (float(v) for v in spec.bbox)
        self.inner_w = spec.width - 2 * spec.margin
        self.inner_h = spec.height - 2 * spec.margin

    def px(self, x: float) -> float:
        return self.spec.margin + (x - self.xmin) / (self.xmax - self.xmin) * self.inner_w

    def py(self, y: float) -> float:
        return self.spec.height - self.spec.margin - (y - self.ymin) / (self.ymax - self.ymin) * self.inner_h


def _svg_line(x1: float, y1: float, x2: float, y2: float, extra: str = "") -> str:
    return f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"{extra}/>'


def _axes(canvas: _Canvas) -> list[str]:
    lines = ['  <g id="axes" stroke="#444" stroke-width="1" font-family="sans-serif" font-size="10" fill="#444">']
    if canvas.ymin <= 0 <= canvas.ymax:
        lines.append("    " + _svg_line(canvas.px(canvas.xmin), canvas.py(0), canvas.px(canvas.xmax), canvas.py(0)))
    if canvas.xmin <= 0 <= canvas.xmax:
        lines.append("    " + _svg_line(canvas.px(0), canvas.py(canvas.ymin), canvas.px(0), canvas.py(canvas.ymax)))

    bottom = canvas.spec.height - canvas.spec.margin
    step = _nice_step(canvas.xmax - canvas.xmin)
    for k in range(math.ceil(canvas.xmin / step), math.floor(canvas.xmax / step) + 1):
        x = canvas.px(k * step)
        lines.append("    " + _svg_line(x, bottom, x, bottom + 4))
        lines.append(
            f'    <text x="{_fmt(x)}" y="{_fmt(bottom + 15)}" text-anchor="middle" stroke="none">{k * step:g}</text>'
        )
    left = canvas.spec.margin
    step = _nice_step(canvas.ymax - canvas.ymin)
    for k in range(math.ceil(canvas.ymin / step), math.floor(canvas.ymax / step) + 1):
        y = canvas.py(k * step)
        lines.append("    " + _svg_line(left - 4, y, left, y))
        lines.append(
            f'    <text x="{_fmt(left - 6)}" y="{_fmt(y)}" text-anchor="end" dominant-baseline="middle" '
            f'stroke="none">{k * step:g}</text>'
        )
    lines.append("  </g>")
    return lines


def _curve_path(canvas: _Canvas, segments: Sequence[Segment]) -> list[str]:
    if not segments:
        return []
    commands = " ".join(
        f"M{_fmt(canvas.px(a[0]))} {_fmt(canvas.py(a[1]))}L{_fmt(canvas.px(b[0]))} {_fmt(canvas.py(b[1]))}"
        for a, b in segments
    )
    return [f'  <path id="curve" d="{commands}" stroke="{_CURVE_COLOR}" stroke-width="1.5" fill="none"/>']


def _direction_label(direction: TangentDirection) -> str:
    if direction.slope is None:
        return "vertical tangent"
    return f"tangent m = {direction.slope.to_float():.6f}"


def render_svg(
    poly: Poly2,
    spec: PlotSpec,
    point: Point | None = None,
    directions: Sequence[TangentDirection] = (),
) -> str:
    """
    SVG 1.1 figure of the curve, with the tangent lines at a point when given.

    Output is byte-identical for identical inputs.
    """
    canvas = _Canvas(spec)
    bbox: BBox = (canvas.xmin, canvas.xmax, canvas.ymin, canvas.ymax)
    segments = trace_curve(poly, bbox, spec.grid)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'  <rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="white"/>',
        f'  <rect x="{spec.margin}" y="{spec.margin}" width="{canvas.inner_w}" height="{canvas.inner_h}" '
        'fill="none" stroke="#bbb"/>',
    ]
    lines.extend(_axes(canvas))
    lines.extend(_curve_path(canvas, segments))

    legend = [("curve", _CURVE_COLOR)]
    if point is not None:
        origin = (float(point.x0), float(point.y0))
        for index, direction in enumerate(directions):
            color = _TANGENT_COLORS[index % len(_TANGENT_COLORS)]
            vector = (0.0, 1.0) if direction.slope is None else (1.0, direction.slope.to_float())
            clipped = _clip_line(origin, vector, bbox)
            legend.append((_direction_label(direction), color))
            if clipped is None:
                continue
            (ax, ay), (bx, by) = clipped
            extra = f' class="tangent" stroke="{color}" stroke-width="1"'
            lines.append("  " + _svg_line(canvas.px(ax), canvas.py(ay), canvas.px(bx), canvas.py(by), extra))
        if canvas.xmin <= origin[0] <= canvas.xmax and canvas.ymin <= origin[1] <= canvas.ymax:
            lines.append(
                f'  <circle cx="{_fmt(canvas.px(origin[0]))}" cy="{_fmt(canvas.py(origin[1]))}" r="3" fill="black"/>'
            )

    lines.append('  <g id="legend" font-family="sans-serif" font-size="11">')
    for index, (label, color) in enumerate(legend):
        y = spec.margin + 12 + 14 * index
        x = spec.margin + 8
        lines.append("    " + _svg_line(x, y - 4, x + 16, y - 4, f' stroke="{color}" stroke-width="2"'))
        lines.append(f'    <text x="{x + 22}" y="{y}">{label}</text>')
    lines.append("  </g>")
    lines.append("</svg>")
    logger.info(f"rendered SVG with {len(segments)} curve segments and {len(directions)} tangents")
    return "\n".join(lines) + "\n"
