"""Standalone SVG heatmaps of sweep results.

Hand-rolled SVG so the output bytes are a pure function of the input records:
no plotting library, no font metrics, no timestamps.
"""

from __future__ import annotations

import math

from .errors import GridShapeError

# three-stop colormap, dark violet -> teal -> yellow
_STOPS = [(68, 1, 84), (33, 145, 140), (253, 231, 37)]
_NAN_COLOR = "#c8c8c8"

PLOT_SIZE = 500
MARGIN_LEFT = 70
MARGIN_TOP = 30
MARGIN_BOTTOM = 60
LEGEND_WIDTH = 90


def _color(t: float) -> str:
    t = min(max(t, 0.0), 1.0)
    if t <= 0.5:
        a, b, u = _STOPS[0], _STOPS[1], t * 2
    else:
        a, b, u = _STOPS[1], _STOPS[2], (t - 0.5) * 2
    rgb = [round(x + (y - x) * u) for x, y in zip(a, b)]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _fmt(v: float) -> str:
    return f"{v:.4g}"


def write_svg_heatmap(records, metric: str, path) -> None:
    """Render one colored cell per (chi_r, chi_i) pair.

    chi_r runs along x, chi_i along y (increasing upward); the color scale is
    linear between the grid's min and max with both annotated in the legend.
    """
    if metric not in ("mc", "neff"):
        raise ValueError(f"metric must be 'mc' or 'neff', got {metric!r}")
    value_of = (lambda r: r.mc_mean) if metric == "mc" else (lambda r: r.neff_mean)

    xs = sorted({r.chi_r for r in records})
    ys = sorted({r.chi_i for r in records})
    cell_values = {(r.chi_r, r.chi_i): value_of(r) for r in records}
    if not records or len(cell_values) != len(records):
        raise GridShapeError("duplicate or empty cells in records")
    missing = [(x, y) for x in xs for y in ys if (x, y) not in cell_values]
    if missing:
        raise GridShapeError(f"records are not a full grid; missing cells such as {missing[0]}")

    finite = [v for v in cell_values.values() if not math.isnan(v)]
    vmin = min(finite) if finite else 0.0
    vmax = max(finite) if finite else 0.0
    span = vmax - vmin

    cw = PLOT_SIZE / len(xs)
    ch = PLOT_SIZE / len(ys)
    width = MARGIN_LEFT + PLOT_SIZE + LEGEND_WIDTH
    height = MARGIN_TOP + PLOT_SIZE + MARGIN_BOTTOM

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{MARGIN_LEFT + PLOT_SIZE / 2:.1f}" y="{MARGIN_TOP / 2 + 5:.1f}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="14">'
        f'{"MC" if metric == "mc" else "N_eff"}</text>',
    ]
    for xi, x in enumerate(xs):
        for yi, y in enumerate(ys):
            v = cell_values[(x, y)]
            if math.isnan(v):
                fill = _NAN_COLOR
            else:
                fill = _color((v - vmin) / span if span > 0 else 0.5)
            px = MARGIN_LEFT + xi * cw
            # chi_i increases upward
            py = MARGIN_TOP + (len(ys) - 1 - yi) * ch
            parts.append(
                f'<rect class="cell" x="{px:.2f}" y="{py:.2f}" '
                f'width="{cw:.2f}" height="{ch:.2f}" fill="{fill}"/>')

    # axes
    ax_y = MARGIN_TOP + PLOT_SIZE
    parts += [
        f'<text x="{MARGIN_LEFT + PLOT_SIZE / 2:.1f}" y="{ax_y + 40:.1f}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="13">χ_R</text>',
        f'<text x="{MARGIN_LEFT - 45:.1f}" y="{MARGIN_TOP + PLOT_SIZE / 2:.1f}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 {MARGIN_LEFT - 45:.1f} {MARGIN_TOP + PLOT_SIZE / 2:.1f})">'
        f'χ_I</text>',
        f'<text x="{MARGIN_LEFT:.1f}" y="{ax_y + 18:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11">{xs[0]}</text>',
        f'<text x="{MARGIN_LEFT + PLOT_SIZE:.1f}" y="{ax_y + 18:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11">{xs[-1]}</text>',
        f'<text x="{MARGIN_LEFT - 8:.1f}" y="{ax_y:.1f}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{ys[0]}</text>',
        f'<text x="{MARGIN_LEFT - 8:.1f}" y="{MARGIN_TOP + 10:.1f}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{ys[-1]}</text>',
    ]

    # legend: vertical gradient bar with min/max labels
    lx = MARGIN_LEFT + PLOT_SIZE + 25
    parts += [
        '<defs><linearGradient id="scale" x1="0" y1="1" x2="0" y2="0">',
        f'<stop offset="0" stop-color="{_color(0.0)}"/>',
        f'<stop offset="0.5" stop-color="{_color(0.5)}"/>',
        f'<stop offset="1" stop-color="{_color(1.0)}"/>',
        '</linearGradient></defs>',
        f'<rect class="legend" x="{lx}" y="{MARGIN_TOP}" width="16" '
        f'height="{PLOT_SIZE}" fill="url(#scale)"/>',
        f'<text x="{lx + 22}" y="{MARGIN_TOP + PLOT_SIZE:.1f}" '
        f'font-family="sans-serif" font-size="11">{_fmt(vmin)}</text>',
        f'<text x="{lx + 22}" y="{MARGIN_TOP + 10:.1f}" '
        f'font-family="sans-serif" font-size="11">{_fmt(vmax)}</text>',
        '</svg>',
    ]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
