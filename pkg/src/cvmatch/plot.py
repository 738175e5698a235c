"""Plot-ready exports of one job's relevance row: CSV data and a static SVG."""

from __future__ import annotations

from collections.abc import Sequence
from xml.sax.saxutils import escape


def row_csv(cv_ids: Sequence[int], values: Sequence[float]) -> str:
    lines = ["id_cv,value"]
    lines += [f"{c},{v:.6f}" for c, v in zip(cv_ids, values)]
    return "\n".join(lines) + "\n"


def bar_chart_svg(
    cv_ids: Sequence[int],
    values: Sequence[float],
    title: str = "",
    bar_width: int = 16,
    gap: int = 4,
    height: int = 200,
    margin: int = 30,
) -> str:
    """One bar per CV, linear scale from 0 to the row maximum.

    An all-zero row gives zero-height bars rather than dividing by zero.
    """
    top = max(values, default=0.0)
    width = 2 * margin + len(values) * (bar_width + gap)
    total_h = height + 2 * margin
    baseline = margin + height
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{total_h}" '
        f'viewBox="0 0 {width} {total_h}">',
    ]
    if title:
        parts.append(f'<text x="{margin}" y="{margin - 10}" font-size="12">{escape(title)}</text>')
    parts.append(
        f'<line x1="{margin}" y1="{baseline}" x2="{width - margin}" y2="{baseline}" stroke="black"/>'
    )
    for i, (cid, v) in enumerate(zip(cv_ids, values)):
        h = (v / top) * height if top > 0 else 0.0
        x = margin + i * (bar_width + gap)
        parts.append(
            f'<rect x="{x}" y="{baseline - h:.3f}" width="{bar_width}" height="{h:.3f}" '
            f'fill="steelblue"><title>cv {cid}: {v:.6f}</title></rect>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
