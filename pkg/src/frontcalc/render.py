"""Deterministic SVG rendering of fronts, rulings, and traces.

Strands are drawn as polylines sampled once per event column; cusps
come to a point, and at each crossing the understrand is broken by a
small mask so the descending strand reads as passing in front.  The
output depends only on the input diagram, so files are byte-stable.
"""

from __future__ import annotations

from .diagrams import CROSSING, LEFT_CUSP, RIGHT_CUSP
from .rulings import ruling_pairings

X0 = 30.0
Y0 = 30.0
DX = 36.0
DY = 28.0

PALETTE = ("#1f6f8b", "#c0392b", "#52772b", "#7d3c98",
           "#b9770e", "#1a5276", "#6e2c00", "#117864")


def _fmt(v):
    s = f"{v:.1f}"
    return s[:-2] if s.endswith(".0") else s


def _y(level):
    return Y0 + (level - 1) * DY


class _Layout:
    """Geometry of one front: strand polylines, cusp tips, crossings."""

    def __init__(self, diagram):
        self.diagram = diagram
        self.points = {}        # segment id -> [(x, y), ...]
        self.component = {}     # segment id -> component index
        self.crossings = []     # (center x, level, over component)
        current = []            # segment id per strand, replaying the scan
        fresh = 0
        for idx, ev in enumerate(diagram.events):
            i = ev.level - 1
            x = X0 + (idx + 1) * DX
            if ev.kind == LEFT_CUSP:
                a, b = fresh, fresh + 1
                fresh += 2
                tip = (x - DX / 2, _y(ev.level) + DY / 2)
                self.points[a] = [tip]
                self.points[b] = [tip]
                self.component[a] = diagram.component_of_segment[a]
                self.component[b] = diagram.component_of_segment[b]
                current[i:i] = [a, b]
            elif ev.kind == RIGHT_CUSP:
                tip = (x - DX / 2, _y(ev.level) + DY / 2)
                self.points[current[i]].append(tip)
                self.points[current[i + 1]].append(tip)
                del current[i:i + 2]
            else:
                over = self.component[current[i]]
                self.crossings.append((x - DX / 2, ev.level, over))
                current[i], current[i + 1] = current[i + 1], current[i]
            for pos, s in enumerate(current):
                self.points[s].append((x, _y(pos + 1)))
        self.width = X0 + (len(diagram.events) + 1) * DX
        maxlev = max([1] + [m for m in diagram.strand_counts])
        self.height = Y0 + maxlev * DY


def _polyline(pts, color, width=2.0, dash=None):
    d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts)
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<path d="{d}" fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(width)}" stroke-linejoin="round" '
            f'stroke-linecap="round"{extra}/>')


def _front_group(diagram, ruling=None):
    """SVG fragment for one front; returns (markup lines, w, h)."""
    lay = _Layout(diagram)
    out = []
    if ruling is not None:
        gaps = ruling_pairings(diagram, ruling)
        switches = set(ruling)
        for g, pairing in enumerate(gaps):
            x = X0 + g * DX + DX / 2
            for i, p in enumerate(pairing):
                if p <= i:
                    continue
                out.append(_polyline([(x, _y(i + 1)), (x, _y(p + 1))],
                                     "#bbbbbb", 1.0, "3 3"))
        for idx in sorted(switches):
            ev = diagram.events[idx]
            x = X0 + (idx + 1) * DX - DX / 2
            y = _y(ev.level) + DY / 2
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" '
                       f'fill="#222222"/>')
    for s in sorted(lay.points):
        color = PALETTE[lay.component[s] % len(PALETTE)]
        out.append(_polyline(lay.points[s], color))
    for x, level, over in lay.crossings:
        y = _y(level) + DY / 2
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" '
                   f'fill="#ffffff"/>')
        color = PALETTE[over % len(PALETTE)]
        out.append(_polyline([(x - DX / 2, _y(level)),
                              (x + DX / 2, _y(level + 1))], color))
    return out, lay.width, lay.height


def _document(lines, width, height):
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">')
    return "\n".join([head] + lines + ["</svg>"]) + "\n"


def render_svg(diagram, ruling=None):
    """SVG document for one front, optionally with a ruling overlay."""
    lines, w, h = _front_group(diagram, ruling=ruling)
    return _document(lines, w, h)


def render_trace_svg(trace):
    """Filmstrip of every stage of a cobordism trace, bottom to top."""
    stages = trace.replay()
    labels = [""] + [str(m) for m in trace.moves]
    lines = []
    y_off = 0.0
    width = 0.0
    for d, label in zip(stages, labels):
        body, w, h = _front_group(d)
        if label:
            lines.append(f'<text x="{_fmt(X0)}" y="{_fmt(y_off + 16)}" '
                         f'font-family="monospace" font-size="12">'
                         f'{label}</text>')
            y_off += 24.0
        lines.append(f'<g transform="translate(0 {_fmt(y_off)})">')
        lines.extend(body)
        lines.append("</g>")
        y_off += h
        width = max(width, w)
    return _document(lines, width, y_off)
