"""CSV and SVG emitters shared by the CLI commands.

Both consume the same row streams, so an SVG has exactly one marker per
CSV data row. CSV uses LF line endings and shortest round-trip decimals.
"""

import math

WIDTH = 800
HEIGHT = 600
MARGIN = 60


def write_csv(stream, header, rows):
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(row) + "\n")


def _span(values):
    finite = [v for v in values if math.isfinite(v)]
    if not finite:
        return -1.0, 1.0
    lo, hi = min(finite), max(finite)
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    return lo, hi


def render_svg(xs, ys, x_label, y_label):
    """Scatter plot of ``(xs, ys)`` as a standalone SVG document.

    Fixed 800x600 viewport, 1-px square markers, linear axes labelled with
    their min and max. Non-finite values are pinned to the plot edge.
    """
    xs = [float(v) for v in xs]
    ys = [float(v) for v in ys]
    x0, x1 = _span(xs)
    y0, y1 = _span(ys)
    pw = WIDTH - 2 * MARGIN
    ph = HEIGHT - 2 * MARGIN

    def px(v):
        v = min(max(v, x0), x1) if v == v else x0
        return MARGIN + (v - x0) / (x1 - x0) * pw

    def py(v):
        v = min(max(v, y0), y1) if v == v else y0
        return HEIGHT - MARGIN - (v - y0) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<text x="{MARGIN}" y="{HEIGHT - MARGIN + 20}" font-size="12">{x0!r}</text>',
        f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - MARGIN + 20}" font-size="12" '
        f'text-anchor="end">{x1!r}</text>',
        f'<text x="{WIDTH // 2}" y="{HEIGHT - 15}" font-size="14" '
        f'text-anchor="middle">{x_label}</text>',
        f'<text x="{MARGIN - 5}" y="{HEIGHT - MARGIN}" font-size="12" '
        f'text-anchor="end">{y0!r}</text>',
        f'<text x="{MARGIN - 5}" y="{MARGIN + 10}" font-size="12" text-anchor="end">{y1!r}</text>',
        f'<text x="15" y="{HEIGHT // 2}" font-size="14">{y_label}</text>',
        '<g fill="black">',
    ]
    for x, y in zip(xs, ys):
        out.append(f'<rect class="pt" x="{px(x):.2f}" y="{py(y):.2f}" width="1" height="1"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
