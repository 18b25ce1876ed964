"""Deterministic SVG rendering of cylinder scenes.

The lateral surface is unrolled into a rectangle whose identified vertical
sides are marked; cap routes appear on two disks beside the rectangle.  All
layout constants live in LAYOUT and output is byte-stable across runs.
"""
from __future__ import annotations

import math
from fractions import Fraction

from crossforge.scene import (CapChord, CapDrop, CylinderScene, Lateral,
                              count_scene_crossings)

LAYOUT = {
    "cell": 48.0,          # lattice pitch in px
    "margin": 40.0,
    "disk_radius": 60.0,
    "disk_gap": 30.0,
    "stroke": 1.4,
    "vertex_radius": 3.0,
    "seam_dash": "6,4",
    "font": 13.0,
    "colors": ("#1b6ca8", "#c8501e", "#2e8540", "#8036a8",
               "#a87e1b", "#167a7a", "#a8123a", "#4a4a4a"),
}


def _f(x: float) -> str:
    return f"{x:.2f}"


def _color(band: int) -> str:
    palette = LAYOUT["colors"]
    return palette[band % len(palette)]


def _split_wrapped(x0: Fraction, y0: Fraction, x1: Fraction, y1: Fraction,
                   period: int):
    """Cut a lifted segment at period boundaries into on-rectangle pieces."""
    if x1 < x0:
        x0, y0, x1, y1 = x1, y1, x0, y0
    pieces = []
    cuts = [Fraction(x0), Fraction(x1)]
    k = math.floor(x0 / period) + 1
    while k * period < x1:
        cuts.insert(-1, Fraction(k * period))
        k += 1
    for a, b in zip(cuts, cuts[1:]):
        if a == b:
            continue
        if x1 == x0:
            ya, yb = y0, y1
        else:
            ya = y0 + (y1 - y0) * (a - x0) / (x1 - x0)
            yb = y0 + (y1 - y0) * (b - x0) / (x1 - x0)
        shift = (a // period) * period
        pieces.append((a - shift, ya, b - shift, yb))
    return pieces


def render_svg(scene: CylinderScene) -> str:
    cell = LAYOUT["cell"]
    margin = LAYOUT["margin"]
    rect_w = scene.period * cell
    y_values = [y for (_, y) in scene.vertices.values()]
    rows = (max(y_values) - min(y_values)) if y_values else 1
    rect_h = max(rows, 1) * cell
    has_caps = any(isinstance(p, (CapChord, CapDrop))
                   for e in scene.edges for p in e.pieces)
    disk_r = LAYOUT["disk_radius"]
    disk_h = (2 * disk_r + LAYOUT["disk_gap"]) if has_caps else 0.0
    width = rect_w + 2 * margin
    height = rect_h + 2 * margin + 2 * disk_h + 30.0

    ox = margin
    oy = margin + 30.0 + disk_h

    def px(x: Fraction | float) -> float:
        return ox + float(x) * cell

    def py(y: Fraction | float) -> float:
        return oy + float(y) * cell

    top_c = (ox + rect_w / 2, oy - LAYOUT["disk_gap"] - disk_r)
    bot_c = (ox + rect_w / 2, oy + rect_h + LAYOUT["disk_gap"] + disk_r)

    def rim(disk: str, angle_x: int):
        cx, cy = top_c if disk == "top" else bot_c
        theta = 2 * math.pi * (angle_x % scene.period) / scene.period
        return cx + disk_r * math.cos(theta), cy + disk_r * math.sin(theta)

    nu = count_scene_crossings(scene)
    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
               f'width="{_f(width)}" height="{_f(height)}" '
               f'viewBox="0 0 {_f(width)} {_f(height)}">')
    out.append(f'<rect x="0" y="0" width="{_f(width)}" height="{_f(height)}" '
               f'fill="#ffffff"/>')
    label = (f"K{scene.m} x {'C' if scene.family == 'cycle' else 'P'}{scene.n}"
             f" drawing, nu = {nu}")
    out.append(f'<text x="{_f(margin)}" y="{_f(margin - 14.0)}" '
               f'font-family="monospace" font-size="{_f(LAYOUT["font"])}">'
               f'{label}</text>')
    # unrolled lateral surface; vertical sides are identified
    out.append(f'<rect x="{_f(ox)}" y="{_f(oy)}" width="{_f(rect_w)}" '
               f'height="{_f(rect_h)}" fill="none" stroke="#888888" '
               f'stroke-width="1.0"/>')
    for sx in (ox, ox + rect_w):
        out.append(f'<line x1="{_f(sx)}" y1="{_f(oy)}" x2="{_f(sx)}" '
                   f'y2="{_f(oy + rect_h)}" stroke="#888888" stroke-width="1.0" '
                   f'stroke-dasharray="{LAYOUT["seam_dash"]}"/>')
    out.append(f'<text x="{_f(ox - 6.0)}" y="{_f(oy - 6.0)}" '
               f'font-family="monospace" font-size="10.00">A</text>')
    out.append(f'<text x="{_f(ox + rect_w - 6.0)}" y="{_f(oy - 6.0)}" '
               f'font-family="monospace" font-size="10.00">A</text>')
    if has_caps:
        for cx, cy in (top_c, bot_c):
            out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(disk_r)}" '
                       f'fill="none" stroke="#888888" stroke-width="1.0"/>')
    sw = _f(LAYOUT["stroke"])
    for e in scene.edges:
        ys = [p.y0 for p in e.pieces if isinstance(p, (Lateral, CapDrop))]
        color = _color(int(min(ys)) if ys else 0)
        for p in e.pieces:
            if isinstance(p, Lateral):
                for x0, y0, x1, y1 in _split_wrapped(
                        Fraction(p.x0), Fraction(p.y0),
                        Fraction(p.x1), Fraction(p.y1), scene.period):
                    out.append(f'<line x1="{_f(px(x0))}" y1="{_f(py(y0))}" '
                               f'x2="{_f(px(x1))}" y2="{_f(py(y1))}" '
                               f'stroke="{color}" stroke-width="{sw}" '
                               f'stroke-linecap="round"/>')
            elif isinstance(p, CapDrop):
                out.append(f'<line x1="{_f(px(p.x % scene.period))}" '
                           f'y1="{_f(py(p.y0))}" '
                           f'x2="{_f(px(p.x % scene.period))}" y2="{_f(py(p.y1))}" '
                           f'stroke="{color}" stroke-width="{sw}" '
                           f'stroke-linecap="round"/>')
            else:
                x0, y0 = rim(p.disk, p.a)
                x1, y1 = rim(p.disk, p.b)
                out.append(f'<line x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" '
                           f'y2="{_f(y1)}" stroke="{color}" stroke-width="{sw}" '
                           f'stroke-linecap="round"/>')
    for v, (x, y) in sorted(scene.vertices.items()):
        out.append(f'<circle cx="{_f(px(x % scene.period))}" cy="{_f(py(y))}" '
                   f'r="{_f(LAYOUT["vertex_radius"])}" fill="#222222"/>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def emit_svg(scene: CylinderScene, path: str) -> str:
    content = render_svg(scene)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content)
    return path
