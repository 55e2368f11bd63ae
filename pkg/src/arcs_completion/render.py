"""Deterministic SVG disc diagrams."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .category import Arc
from .completion import zbar_contains
from .cyclic import BoundaryPoint, IntervalSystem, acc, in_interval, marked
from .sequences import FanSequence, mocolim_thread
from .tstructure import DecoratedNC

SIZE = 400
CENTER = SIZE / 2
RADIUS = 170
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


@dataclass(frozen=True)
class Scene:
    n: int
    window: int = 8
    layers: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if self.n < 1:
            raise ValueError("need at least one accumulation point")
        if self.window < 2:
            raise ValueError("window must be at least 2")
        for style, _ in self.layers:
            if style not in ("arcs", "region", "fan", "completion"):
                raise ValueError(f"unknown layer style {style!r}")


def _squash(u: float) -> float:
    return (1 + u / (1 + abs(u))) / 2


def angle(p: BoundaryPoint, n: int, window: int) -> float:
    span = 2 * math.pi / n
    start = span * (p.segment - 1)
    if p.index is None:
        return start
    return start + span * _squash(p.index / (window + 1))


def _xy(p: BoundaryPoint, n: int, window: int, r: float = RADIUS):
    th = angle(p, n, window)
    return CENTER + r * math.cos(th), CENTER - r * math.sin(th)


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _chord(x: Arc, scene: Scene, stroke: str, width: float = 1.5, extra: str = "") -> str:
    (x1, y1), (x2, y2) = _xy(x.a, scene.n, scene.window), _xy(x.b, scene.n, scene.window)
    return (
        f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
        f'stroke="{stroke}" stroke-width="{width}"{extra}/>'
    )


def _region(system: IntervalSystem, scene: Scene, k: int):
    out = []
    for j, (bid, ivs) in enumerate(system.blocks):
        pts = [
            marked(i, idx)
            for i in range(1, scene.n + 1)
            for idx in range(-scene.window, scene.window + 1)
            if any(in_interval(marked(i, idx), iv) for iv in ivs)
        ]
        for iv in ivs:
            for e in (iv.lo, iv.hi):
                if e.index is None and e not in pts:
                    pts.append(e)
        if not pts:
            continue
        pts.sort(key=lambda p: (angle(p, scene.n, scene.window), p.key))
        coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in (_xy(p, scene.n, scene.window) for p in pts))
        colour = PALETTE[(k + j) % len(PALETTE)]
        label = "-".join(map(str, bid))
        out.append(
            f'<polygon class="block-{label}" points="{coords}" fill="{colour}" '
            f'fill-opacity="0.25" stroke="{colour}" stroke-width="0.8"/>'
        )
    return out


def _fan(fan: FanSequence, scene: Scene, k: int, steps: int = 4):
    out = []
    colour = PALETTE[k % len(PALETTE)]
    for th in fan.threads:
        for step in range(steps):
            opacity = 0.3 + 0.7 * step / max(1, steps - 1)
            out.append(_chord(th.entry(th.first + step), scene, colour, 1.0, f' stroke-opacity="{opacity:.2f}"'))
        lim = mocolim_thread(th, scene.n)
        if lim is not None:
            out.append(_chord(lim, scene, colour, 2.0, ' stroke-dasharray="6,3"'))
    return out


def _acc_fill(scene: Scene):
    fill = {i: "#000000" for i in range(1, scene.n + 1)}
    for style, payload in scene.layers:
        if style == "completion":
            t: DecoratedNC = payload
            for i in range(1, scene.n + 1):
                inside = any(zbar_contains(t, b, acc(i)) for b in t.partition.blocks)
                fill[i] = "#000000" if inside else "#ffffff"
    return fill


def render_svg(scene: Scene) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<circle cx="{_f(CENTER)}" cy="{_f(CENTER)}" r="{RADIUS}" fill="none" stroke="#000000" stroke-width="1"/>',
    ]
    for k, (style, payload) in enumerate(scene.layers):
        if style == "region":
            lines.extend(_region(payload, scene, k))
        elif style == "arcs":
            lines.extend(_chord(x, scene, PALETTE[k % len(PALETTE)]) for x in payload)
        elif style == "fan":
            lines.extend(_fan(payload, scene, k))
    for i in range(1, scene.n + 1):
        for idx in range(-scene.window, scene.window + 1):
            x, y = _xy(marked(i, idx), scene.n, scene.window)
            lines.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="1.2" fill="#555555"/>')
    fill = _acc_fill(scene)
    for i in range(1, scene.n + 1):
        x, y = _xy(acc(i), scene.n, scene.window)
        lines.append(
            f'<circle class="acc-{i}" cx="{_f(x)}" cy="{_f(y)}" r="4" fill="{fill[i]}" stroke="#000000" stroke-width="1"/>'
        )
        lx, ly = _xy(acc(i), scene.n, scene.window, RADIUS + 16)
        lines.append(f'<text x="{_f(lx)}" y="{_f(ly)}" font-size="11" text-anchor="middle">a{i}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
