"""Two-dimensional embedding scatter plots as standalone SVG documents.

Output bytes are a pure function of the input: fixed canvas, fixed decimal
formatting, markers emitted in row order.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "emit_scatter",
    "format_label_colors",
    "read_label_colors",
]

_FILLS = {
    "red": "#d62728",
    "blue": "#1f77b4",
    "yellow": "#e6b800",
}
_FILL_UNLABELED = "#999999"

_CANVAS = 640
_MARGIN_FRAC = 0.05


def format_label_colors(colors: dict[str, str]) -> str:
    """Serialize a label -> color mapping as ``label,color`` CSV."""
    lines = ["label,color"]
    lines.extend(f"{label},{color}" for label, color in colors.items())
    return "\n".join(lines) + "\n"


def read_label_colors(text: str) -> dict[str, str]:
    """Parse a ``label,color`` CSV (header optional) into a dict."""
    colors = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "label,color":
            continue
        parts = line.rsplit(",", 1)
        if len(parts) != 2 or not parts[0]:
            raise ValueError(f"labels csv line {lineno}: expected 'label,color', got {raw!r}")
        colors[parts[0]] = parts[1]
    return colors


def _scale(values: np.ndarray, lo_px: float, hi_px: float) -> np.ndarray:
    vmin = float(values.min())
    vmax = float(values.max())
    span = vmax - vmin
    if span == 0.0:
        span = 1.0
        vmin -= 0.5
    pad = span * _MARGIN_FRAC
    vmin -= pad
    span += 2 * pad
    return lo_px + (values - vmin) / span * (hi_px - lo_px)


def emit_scatter(labels: list[str], coords, colors: dict[str, str] | None = None) -> str:
    """Render one circle per node, filled by its color label.

    ``coords`` must be an (n, 2) array (anything else is a dimension
    error); ``colors`` maps node labels to {red, blue, yellow}, and nodes
    without an entry render gray.  Axes are auto-scaled to the data with a
    5% margin.  An empty matrix yields a valid frame-only document.
    """
    coords = np.asarray(coords, dtype=np.float64)
    if coords.size == 0:
        coords = coords.reshape(0, 2) if coords.ndim != 2 else coords
    if coords.ndim != 2 or coords.shape[1] != 2:
        raise ValueError(f"scatter plots need 2-d embeddings, got shape {coords.shape}")
    if len(labels) != coords.shape[0]:
        raise ValueError(f"{coords.shape[0]} rows but {len(labels)} labels")
    colors = colors or {}
    side = _CANVAS
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{side}" height="{side}" viewBox="0 0 {side} {side}">',
        f'<rect x="0.5" y="0.5" width="{side - 1}" height="{side - 1}" '
        f'fill="white" stroke="#333333"/>',
    ]
    if coords.shape[0]:
        xs = _scale(coords[:, 0], 20.0, side - 20.0)
        # svg y grows downward; flip so larger embedding values plot higher
        ys = _scale(coords[:, 1], 20.0, side - 20.0)
        ys = side - ys
        for label, x, y in zip(labels, xs, ys):
            fill = _FILLS.get(colors.get(label, ""), _FILL_UNLABELED)
            parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="{fill}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
