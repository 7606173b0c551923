"""Minimal static SVG scatter plots (axes, ticks, circle and cross markers)."""
from xml.sax.saxutils import escape

import numpy as np

WIDTH, HEIGHT = 720, 440
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 20, 40, 50
COLORS = ("#1f77b4", "#d62728", "#2ca02c")


def _ticks(lo, hi, count=6):
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / (count - 1)
    mag = 10.0 ** np.floor(np.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=raw)
    start = np.ceil(lo / step) * step
    return np.arange(start, hi + 0.5 * step, step)


def _fmt(v):
    return f"{v:.4g}"


def scatter_svg(path, series, title="", xlabel="j", ylabel="value"):
    """Write an SVG overlaying ``series``: iterable of ``(label, x, y, marker)``.

    ``marker`` is ``"circle"`` or ``"cross"``.
    """
    series = [(lab, np.asarray(x, float), np.asarray(y, float), mk) for lab, x, y, mk in series]
    xs = np.concatenate([s[1] for s in series]) if series else np.zeros(1)
    ys = np.concatenate([s[2] for s in series]) if series else np.zeros(1)
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y0, y1 = y0 - 1.0, y1 + 1.0
    pad = 0.04 * (y1 - y0)
    y0, y1 = y0 - pad, y1 + pad
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(v):
        return MARGIN_L + (v - x0) / (x1 - x0) * pw

    def py(v):
        return MARGIN_T + (y1 - v) / (y1 - y0) * ph

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
           f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
           f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
           f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" fill="none" stroke="black"/>']
    for t in _ticks(x0, x1):
        out.append(f'<line x1="{px(t):.2f}" y1="{MARGIN_T + ph}" x2="{px(t):.2f}" '
                   f'y2="{MARGIN_T + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{px(t):.2f}" y="{MARGIN_T + ph + 18}" text-anchor="middle">{_fmt(t)}</text>')
    for t in _ticks(y0, y1):
        out.append(f'<line x1="{MARGIN_L - 5}" y1="{py(t):.2f}" x2="{MARGIN_L}" y2="{py(t):.2f}" stroke="black"/>')
        out.append(f'<line x1="{MARGIN_L}" y1="{py(t):.2f}" x2="{MARGIN_L + pw}" y2="{py(t):.2f}" '
                   f'stroke="#e0e0e0"/>')
        out.append(f'<text x="{MARGIN_L - 8}" y="{py(t) + 4:.2f}" text-anchor="end">{_fmt(t)}</text>')
    out.append(f'<text x="{MARGIN_L + pw / 2:.1f}" y="{HEIGHT - 10}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(f'<text x="16" y="{MARGIN_T + ph / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {MARGIN_T + ph / 2:.1f})">{escape(ylabel)}</text>')

    for i, (label, x, y, marker) in enumerate(series):
        color = COLORS[i % len(COLORS)]
        out.append(f'<g stroke="{color}" fill="none" stroke-width="1">')
        for a, b in zip(px(x), py(y)):
            if marker == "cross":
                out.append(f'<path d="M{a - 3:.2f},{b - 3:.2f}L{a + 3:.2f},{b + 3:.2f}'
                           f'M{a - 3:.2f},{b + 3:.2f}L{a + 3:.2f},{b - 3:.2f}"/>')
            else:
                out.append(f'<circle cx="{a:.2f}" cy="{b:.2f}" r="2.5"/>')
        out.append("</g>")
        ly = MARGIN_T + 16 + 16 * i
        lx = MARGIN_L + 12
        if marker == "cross":
            out.append(f'<path d="M{lx - 3},{ly - 3}L{lx + 3},{ly + 3}M{lx - 3},{ly + 3}L{lx + 3},{ly - 3}" '
                       f'stroke="{color}"/>')
        else:
            out.append(f'<circle cx="{lx}" cy="{ly}" r="2.5" stroke="{color}" fill="none"/>')
        out.append(f'<text x="{lx + 10}" y="{ly + 4}">{escape(label)}</text>')
    out.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out) + "\n")
