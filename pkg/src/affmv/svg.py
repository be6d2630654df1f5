"""SVG drawing of an MV polytope in the plane a1 -> (1,1), a0 -> (-1,1)."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .mvpoly import MVPolytope, figure_coords

UNIT = 12
MARGIN = 60


def _label_points(P: MVPolytope) -> list:
    v = P.vertices()
    out = []
    for k, p in enumerate(v.right_bottom):
        out.append((p, f"μ{k}" if k < len(v.right_bottom) - 1 else "μ∞", "start"))
    for k, p in enumerate(v.left_bottom):
        out.append((p, f"μ̄{k}" if k < len(v.left_bottom) - 1 else "μ̄∞", "end"))
    return out


def render_svg(P: MVPolytope, out=None) -> str:
    """Polygon outline with bottom vertices labelled and the partitions
    written next to the two vertical edges.  Written to `out` if given."""
    pts = [figure_coords(p) for p in P.outline()]
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    width = (x1 - x0) * UNIT + 2 * MARGIN
    height = (y1 - y0) * UNIT + 2 * MARGIN

    def sx(x):
        return (x - x0) * UNIT + MARGIN

    def sy(y):
        return (y1 - y) * UNIT + MARGIN

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if len(pts) == 1:
        x, y = pts[0]
        lines.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="3" fill="black"/>')
    else:
        coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
        lines.append(f'<polygon points="{coords}" fill="none" stroke="black" stroke-width="1.5"/>')
        for x, y in pts:
            lines.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="2" fill="black"/>')
        for p, text, anchor in _label_points(P):
            x, y = figure_coords(p)
            dx = 6 if anchor == "start" else -6
            lines.append(
                f'<text x="{sx(x) + dx}" y="{sy(y) + 4}" font-size="10" text-anchor="{anchor}">{escape(text)}</text>'
            )
        v = P.vertices()
        for side, lo, hi, part, dx, anchor in (
            ("right", v.mu_inf, v.right_top[-1], P.right.partition, 8, "start"),
            ("left", v.mubar_inf, v.left_top[-1], P.left.partition, -8, "end"),
        ):
            if not part.parts:
                continue
            (ax, ay), (bx, by) = figure_coords(lo), figure_coords(hi)
            lines.append(
                f'<text class="{side}-partition" x="{sx((ax + bx) / 2) + dx}" y="{sy((ay + by) / 2)}" '
                f'font-size="11" text-anchor="{anchor}">{escape(part.exponential())}·δ</text>'
            )
    lines.append("</svg>")
    text = "\n".join(lines) + "\n"
    if out is not None:
        if hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
    return text
