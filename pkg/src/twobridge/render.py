"""Deterministic SVG and ASCII pictures of the walks.

Geometry depends only on the walk; styling is fixed.  One-dimensional
walks lift each re-traversal of an edge one level higher so backtracking
stays visible.  Every picture circles the start vertex and labels visited
points with their signed coefficients.
"""

from __future__ import annotations

from collections import Counter
from xml.sax.saxutils import escape

from .errors import KindError
from .fraction import TwoBridgeParam
from .walks import WalkTrace1D, walk_1d_hartley, walk_1d_minkus, walk_2d

CELL = 40
LIFT = 12
STROKE = "#1f4e79"
DOT = "#888888"
LABEL_POS = "#0a6b2d"
LABEL_NEG = "#a11d1d"

WALKS_1D = ("minkus", "hartley")


def edge_levels(positions) -> list[int]:
    """Lift level of each step: how often its unit edge was already walked."""
    seen: Counter[int] = Counter()
    levels = []
    for a, b in zip(positions, positions[1:]):
        edge = min(a, b)
        levels.append(seen[edge])
        seen[edge] += 1
    return levels


def _trace_1d(param: TwoBridgeParam, walk: str) -> WalkTrace1D:
    if walk == "minkus":
        return walk_1d_minkus(param)
    if walk == "hartley":
        return walk_1d_hartley(param)
    raise ValueError(f"unknown walk {walk!r}; expected one of {WALKS_1D}")


def _labels_1d(trace: WalkTrace1D, walk: str) -> list[tuple[int, int, int]]:
    """(doubled position, count, signed coefficient) left to right."""
    if walk == "minkus":
        counts = {2 * n: c for n, c in trace.visit_counts.items()}
    else:
        counts = dict(trace.crossing_counts)
    keys = sorted(counts)
    return [(k, counts[k], (-1) ** n * counts[k]) for n, k in enumerate(keys)]


def _fmt_half(doubled: int) -> str:
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled}/2"


def render_1d_ascii(param: TwoBridgeParam, walk: str = "minkus") -> str:
    trace = _trace_1d(param, walk)
    lo, hi = min(trace.positions), max(trace.positions)
    width = 4
    col0 = 10

    def col(n: int) -> int:
        return col0 + width * (n - lo)

    levels = edge_levels(trace.positions)
    top = max(levels, default=0)
    rows = [[" "] * (col(hi) + 3) for _ in range(top + 1)]
    for (a, b), lev in zip(zip(trace.positions, trace.positions[1:]), levels):
        row = rows[top - lev]
        left, right = sorted((col(a), col(b)))
        for c in range(left + 1, right):
            row[c] = "-"
        row[col(b) - 1 if b > a else col(b) + 1] = ">" if b > a else "<"
        for c in (left, right):
            if row[c] == " ":
                row[c] = "|"
    lines = [f"K({param}) {walk} walk, {len(trace.steps)} steps, start at 0 (marked *)"]
    for lev, row in zip(range(top, -1, -1), rows):
        lines.append(f"{'lift ' + str(lev):<{col0}}" + "".join(row[col0:]).rstrip())

    def placed(title: str, items) -> str:
        row = [" "] * (col(hi) + width + 2)
        for c, text in items:
            row[c : c + len(text)] = text
        return f"{title:<{col0}}" + "".join(row[col0:]).rstrip()

    labels = _labels_1d(trace, walk)

    def at(doubled: int) -> int:
        return col0 + width * (doubled - 2 * lo) // 2

    name = "visits" if walk == "minkus" else "crossings"
    lines.append(placed("start", [(col(0), "*")]))
    lines.append(placed("position", [(col(n), str(n)) for n in range(lo, hi + 1)]))
    lines.append(placed(name, [(at(k), str(c)) for k, c, _ in labels]))
    lines.append(placed("coeff", [(at(k), str(v)) for k, _, v in labels]))
    return "\n".join(lines) + "\n"


def _svg_open(width: int, height: int, title: str) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(title)}</title>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


def _label(x: int, y: int, value: int, cls: str = "coeff") -> str:
    color = LABEL_POS if value > 0 else LABEL_NEG
    return (
        f'<text class="{cls}" x="{x}" y="{y}" font-family="monospace" font-size="13" '
        f'text-anchor="middle" fill="{color}">{value}</text>'
    )


def render_1d_svg(param: TwoBridgeParam, walk: str = "minkus") -> str:
    trace = _trace_1d(param, walk)
    lo, hi = min(trace.positions) - 1, max(trace.positions) + 1
    levels = edge_levels(trace.positions)
    top = max(levels, default=0)
    width = CELL * (hi - lo + 2)
    axis_y = CELL + LIFT * (top + 1)
    height = axis_y + 2 * CELL

    def px(doubled: int) -> int:
        return CELL + (doubled - 2 * lo) * CELL // 2

    def py(level: int) -> int:
        return axis_y - LIFT * (level + 1)

    out = _svg_open(width, height, f"K({param}) {walk} walk")
    out.append(f'<line x1="{px(2 * lo)}" y1="{axis_y}" x2="{px(2 * hi)}" y2="{axis_y}" stroke="{DOT}" stroke-width="1"/>')
    for n in range(lo, hi + 1):
        out.append(f'<circle class="lattice" cx="{px(2 * n)}" cy="{axis_y}" r="2" fill="{DOT}"/>')
        out.append(
            f'<text class="tick" x="{px(2 * n)}" y="{axis_y + 16}" font-family="monospace" '
            f'font-size="10" text-anchor="middle" fill="{DOT}">{n}</text>'
        )
    points = []
    for (a, b), lev in zip(zip(trace.positions, trace.positions[1:]), levels):
        points.append((px(2 * a), py(lev)))
        points.append((px(2 * b), py(lev)))
    if points:
        coords = " ".join(f"{x},{y}" for x, y in points)
        out.append(f'<polyline class="walk" points="{coords}" fill="none" stroke="{STROKE}" stroke-width="2"/>')
    start_y = py(levels[0]) if levels else axis_y
    out.append(f'<circle class="start" cx="{px(0)}" cy="{start_y}" r="7" fill="none" stroke="black" stroke-width="1.5"/>')
    for doubled, _, signed in _labels_1d(trace, walk):
        out.append(_label(px(doubled), axis_y + 40, signed))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _require_link(param: TwoBridgeParam) -> None:
    if not param.is_link:
        raise KindError(f"the lattice walk needs q even (a link), got {param}")


def _signed_2d(i: int, j: int, k: int) -> int:
    return k if (i + j) % 2 == 0 else -k


def render_2d_ascii(param: TwoBridgeParam) -> str:
    _require_link(param)
    trace = walk_2d(param)
    xs = [x for x, _ in trace.positions]
    ys = [y for _, y in trace.positions]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    width = 6
    lines = [f"K({param}) lattice walk, {len(trace.steps)} steps, start in brackets"]
    for y in range(y1, y0 - 1, -1):
        cells = []
        for x in range(x0, x1 + 1):
            k = trace.visit_counts.get((x, y))
            if k is None:
                cell = "."
            else:
                cell = f"{_signed_2d(x, y, k):+d}"
                if (x, y) == (0, 0):
                    cell = f"[{cell}]"
            cells.append(f"{cell:^{width}}")
        lines.append(f"{y:>4} " + "".join(cells).rstrip())
    lines.append("     " + "".join(f"{x:^{width}}" for x in range(x0, x1 + 1)).rstrip())
    steps = " ".join(f"({dx:+d},{dy:+d})" for dx, dy in trace.steps) or "(none)"
    lines.append(f"steps {steps}")
    return "\n".join(lines) + "\n"


def render_2d_svg(param: TwoBridgeParam) -> str:
    _require_link(param)
    trace = walk_2d(param)
    cell = 3 * CELL // 2
    xs = [x for x, _ in trace.positions]
    ys = [y for _, y in trace.positions]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    width = cell * (x1 - x0 + 2)
    height = cell * (y1 - y0 + 2)

    def px(x: int) -> int:
        return cell * (x - x0 + 1)

    def py(y: int) -> int:
        return cell * (y1 - y + 1)

    out = _svg_open(width, height, f"K({param}) lattice walk")
    for y in range(y1, y0 - 1, -1):
        for x in range(x0, x1 + 1):
            out.append(f'<circle class="lattice" cx="{px(x)}" cy="{py(y)}" r="2" fill="{DOT}"/>')
    if len(trace.positions) > 1:
        coords = " ".join(f"{px(x)},{py(y)}" for x, y in trace.positions)
        out.append(f'<polyline class="walk" points="{coords}" fill="none" stroke="{STROKE}" stroke-width="2"/>')
    seen: Counter[tuple[int, int]] = Counter()
    for x, y in trace.positions:
        nth = seen[(x, y)]
        seen[(x, y)] += 1
        out.append(
            f'<circle class="visit" cx="{px(x) + 5 * nth}" cy="{py(y) - 5 * nth}" r="3.5" '
            f'fill="{STROKE}"/>'
        )
    out.append(f'<circle class="start" cx="{px(0)}" cy="{py(0)}" r="12" fill="none" stroke="black" stroke-width="1.5"/>')
    for (x, y), k in trace.visit_counts.items():
        out.append(_label(px(x) - 14, py(y) + 20, _signed_2d(x, y, k)))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(param: TwoBridgeParam, dim: int = 1, fmt: str = "svg", walk: str = "minkus") -> str:
    if dim not in (1, 2):
        raise ValueError(f"dim must be 1 or 2, got {dim}")
    if fmt not in ("svg", "ascii"):
        raise ValueError(f"format must be svg or ascii, got {fmt!r}")
    if dim == 1:
        return render_1d_svg(param, walk) if fmt == "svg" else render_1d_ascii(param, walk)
    return render_2d_svg(param) if fmt == "svg" else render_2d_ascii(param)
