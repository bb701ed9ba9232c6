"""Deterministic SVG drawings of tilings and wirings."""

from __future__ import annotations

from pathlib import Path

from .sets import bit, elements_of, fmt, interval
from .tiling import GTiling, Tile
from .wiring import Wiring, crossing_tiles, faces

SIZE = 640
MARGIN = 30


class _Frame:
    def __init__(self, n: int):
        self.n = n
        shift = ((1 << n) - 1) / n if n else 0.0
        self.xs = {c: (1 << (c - 1)) - shift for c in range(1, n + 1)}
        lo = sum(v for v in self.xs.values() if v < 0)
        hi = sum(v for v in self.xs.values() if v > 0)
        self.lo = lo
        self.sx = (SIZE - 2 * MARGIN) / max(hi - lo, 1e-9)
        self.sy = (SIZE - 2 * MARGIN) / max(n, 1)

    def point(self, mask: int) -> tuple[float, float]:
        x = sum(self.xs[c] for c in elements_of(mask))
        return MARGIN + (x - self.lo) * self.sx, SIZE - MARGIN - bin(mask).count("1") * self.sy

    def mid(self, *masks: int) -> tuple[float, float]:
        pts = [self.point(m) for m in masks]
        return sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts)


def _pts(points) -> str:
    return " ".join(f"{x:.2f},{y:.2f}" for x, y in points)


def _header() -> list[str]:
    return [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
            '<rect width="100%" height="100%" fill="white"/>']


def _tile_polygon(f: _Frame, t: Tile, fill: str, opacity: float, width: float) -> str:
    pts = _pts(f.point(v) for v in t.corners)
    return (f'<polygon points="{pts}" fill="{fill}" fill-opacity="{opacity}" '
            f'stroke="#222" stroke-width="{width}"/>')


def tiling_svg(t: GTiling) -> str:
    f = _Frame(t.n)
    out = _header()
    for x in t.white:
        out.append(_tile_polygon(f, x, "#eef2f7", 1.0, 1))
    for x in t.black:
        out.append(_tile_polygon(f, x, "#000", 0.12, 3.5))
    for v in sorted(t.vertices):
        x, y = f.point(v)
        out.append(f'<text x="{x + 4:.2f}" y="{y - 4:.2f}" font-size="10" font-family="monospace">{fmt(v)}</text>')
    for v in sorted(t.terminal):
        x, y = f.point(v)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="6" fill="none" stroke="#c00" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def wiring_svg(w: Wiring) -> str:
    n = w.n
    f = _Frame(n)
    tiles = crossing_tiles(w)
    out = _header()
    outline = [f.point(interval(1, c)) for c in range(n + 1)] + [f.point(interval(c, n)) for c in range(2, n + 1)]
    out.append(f'<polygon points="{_pts(outline)}" fill="none" stroke="#bbb" stroke-width="1"/>')
    for i in range(1, n + 1):
        start = f.mid(interval(1, i - 1), interval(1, i))
        end = f.mid(interval(i + 1, n), interval(i + 1, n) | bit(i))
        pts = [start] + [f.mid(*tiles[cid].corners) for cid in w.wires[i - 1]] + [end]
        out.append(f'<polyline points="{_pts(pts)}" fill="none" stroke="#246" stroke-width="1.5"/>')
        out.append(f'<text x="{start[0] - 14:.2f}" y="{start[1] + 4:.2f}" font-size="11" font-family="monospace">{i}</text>')
    for c in w.crossings:
        if c.black:
            x, y = f.mid(*tiles[c.id].corners)
            d = 6
            out.append(f'<polygon points="{_pts([(x, y - d), (x + d, y), (x, y + d), (x - d, y)])}" fill="#000"/>')
    for face in faces(w):
        if face.cyclic:
            x, y = f.point(face.label)
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="6" fill="none" stroke="#c00" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(obj, path: str | Path) -> str:
    text = tiling_svg(obj) if isinstance(obj, GTiling) else wiring_svg(obj)
    Path(path).write_text(text)
    return text
