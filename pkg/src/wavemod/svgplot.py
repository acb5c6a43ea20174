"""Minimal self-contained SVG emitter for BER waterfall curves.

Hand-rolled so the output is deterministic and diffable; BER is drawn on
a log axis, SNR linear. Zero-error points are dropped (no log of 0).
"""

from math import ceil, floor, log10

_WIDTH, _HEIGHT = 720, 480
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 70, 20, 20, 50

_COLORS = {
    "wm1": "#d62728",
    "wm2": "#1f77b4",
    "pam": "#2ca02c",
}


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_ber_svg(curves) -> str:
    """Render curves [(label, dashed, [(snr_db, ber), ...]), ...] to SVG text."""
    pts = [p for _, _, c in curves for p in c if p[1] > 0]
    if not pts:
        xs, ys = (0.0, 1.0), (1e-6, 1.0)
    else:
        xs = (min(p[0] for p in pts), max(p[0] for p in pts))
        ys = (min(p[1] for p in pts), max(p[1] for p in pts))
    x_lo, x_hi = floor(xs[0]), ceil(xs[1]) if xs[1] > xs[0] else ceil(xs[0]) + 1
    y_lo, y_hi = floor(log10(ys[0])), ceil(log10(ys[1])) if ys[1] > ys[0] else 0
    if y_hi <= y_lo:
        y_hi = y_lo + 1

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def px(snr_db):
        return _MARGIN_L + (snr_db - x_lo) / (x_hi - x_lo) * plot_w

    def py(ber):
        return _MARGIN_T + (y_hi - log10(ber)) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]

    # Axes and decade grid lines.
    for d in range(y_lo, y_hi + 1):
        y = py(10.0**d)
        parts.append(
            f'<line x1="{_MARGIN_L}" y1="{_fmt(y)}" x2="{_WIDTH - _MARGIN_R}" '
            f'y2="{_fmt(y)}" stroke="#dddddd"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_L - 8}" y="{_fmt(y + 4)}" text-anchor="end" '
            f'font-size="12">1e{d}</text>'
        )
    x_step = max(1, (x_hi - x_lo) // 10)
    for sx in range(x_lo, x_hi + 1, x_step):
        x = px(sx)
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{_MARGIN_T}" x2="{_fmt(x)}" '
            f'y2="{_HEIGHT - _MARGIN_B}" stroke="#eeeeee"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{_HEIGHT - _MARGIN_B + 18}" '
            f'text-anchor="middle" font-size="12">{sx}</text>'
        )
    parts.append(
        f'<rect x="{_MARGIN_L}" y="{_MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="black"/>'
    )
    parts.append(
        f'<text x="{_MARGIN_L + plot_w / 2:.0f}" y="{_HEIGHT - 10}" '
        'text-anchor="middle" font-size="13">SNR per copy (dB)</text>'
    )
    parts.append(
        f'<text x="18" y="{_MARGIN_T + plot_h / 2:.0f}" text-anchor="middle" '
        f'font-size="13" transform="rotate(-90 18 {_MARGIN_T + plot_h / 2:.0f})">BER</text>'
    )

    legend_y = _MARGIN_T + 16
    for label, dashed, curve in curves:
        visible = [(s, b) for s, b in curve if b > 0]
        if not visible:
            continue
        color = _COLORS.get(label.split()[0], "#555555")
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        path = " ".join(f"{_fmt(px(s))},{_fmt(py(b))}" for s, b in visible)
        parts.append(
            f'<polyline points="{path}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"{dash}/>'
        )
        parts.append(
            f'<line x1="{_WIDTH - 180}" y1="{legend_y - 4}" x2="{_WIDTH - 150}" '
            f'y2="{legend_y - 4}" stroke="{color}" stroke-width="1.5"{dash}/>'
        )
        parts.append(
            f'<text x="{_WIDTH - 144}" y="{legend_y}" font-size="12">{label}</text>'
        )
        legend_y += 16

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
