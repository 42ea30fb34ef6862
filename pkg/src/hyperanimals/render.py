"""SVG drawings of spiral animals.

Hyperbolic animals are drawn in the Poincare disk: the first tile is the
regular p-gon centred at the origin and each later tile is the mirror image
of a neighbour across their shared geodesic. Euclidean animals use
the same scheme with ordinary line reflections. Floating point is fine
here; nothing downstream depends on these coordinates.
"""

from __future__ import annotations

import cmath
import math
from pathlib import Path

from .context import TessContext
from .spiral import AnimalState, grow_to, new_animal

__all__ = ["place_tiles", "render_svg", "write_svg"]

_EPS = 1e-12


def _disk_circumradius(p: int, q: int) -> float:
    return math.sqrt(math.cos(math.pi / p + math.pi / q) / math.cos(math.pi / p - math.pi / q))


def _geodesic_circle(a: complex, b: complex):
    """Centre and radius of the circle through a, b orthogonal to |z| = 1.

    Returns None when the geodesic is a diameter.
    """
    det = a.real * b.imag - a.imag * b.real
    # relative test: short chords near the rim have tiny but nonzero det
    if abs(det) <= _EPS * abs(a - b) * max(abs(a), abs(b)):
        return None
    ra = (abs(a) ** 2 + 1) / 2
    rb = (abs(b) ** 2 + 1) / 2
    cx = (ra * b.imag - rb * a.imag) / det
    cy = (rb * a.real - ra * b.real) / det
    c = complex(cx, cy)
    return c, math.sqrt(max(abs(c) ** 2 - 1, 0.0))


# An isometry is (M, flip): z -> M(conj(z)) if flip else M(z), where M is a
# 2x2 complex matrix acting as a Mobius map. Tiles carry the isometry taking
# the fundamental polygon onto them, so rounding error grows only linearly
# with the number of gluings instead of feeding back through coordinates.


def _mul(A, B):
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _conj(A):
    return tuple(tuple(x.conjugate() for x in row) for row in A)


def _compose(F, G):
    (A, fa), (B, fb) = F, G
    M = _mul(A, _conj(B) if fa else B)
    (a, b), (c, d) = M
    s = cmath.sqrt(a * d - b * c)
    return (((a / s, b / s), (c / s, d / s)), fa != fb)


def _apply(F, z: complex) -> complex:
    ((a, b), (c, d)), flip = F
    if flip:
        z = z.conjugate()
    return (a * z + b) / (c * z + d)


def _edge_reflection(a: complex, b: complex, hyperbolic: bool):
    """Reflection fixing the segment or geodesic through a and b."""
    if hyperbolic:
        ac = a.conjugate()
        d = (b - a) / (1 - ac * b)
        u2 = (d / abs(d)) ** 2
        to0 = ((1, -a), (-ac, 1))
        back = ((1, a), (ac, 1))
        # back . (z -> u2 conj z) . to0
        M = _mul(back, _mul(((u2, 0), (0, 1)), _conj(to0)))
    else:
        u2 = ((b - a) / abs(b - a)) ** 2
        M = ((u2, a - u2 * a.conjugate()), (0, 1))
    return (M, True)


def _walk(cyc, a, b):
    """The cycle read from a in the direction of its neighbour b."""
    p = len(cyc)
    i = cyc.index(a)
    step = 1 if cyc[(i + 1) % p] == b else -1
    return [cyc[(i + step * s) % p] for s in range(p)]


def _anchors(state: AnimalState) -> list:
    """For each tile, an earlier edge neighbour of least depth from tile 0."""
    depth = [0] * state.n
    out = [None]
    for t in range(1, state.n):
        cyc = state.tiles[t]
        best = None
        for i in range(len(cyc)):
            u, v = cyc[i], cyc[(i + 1) % len(cyc)]
            for s in state.edges[(u, v) if u < v else (v, u)]:
                if s < t and (best is None or depth[s] < depth[best[0]]):
                    best = (s, u, v)
        depth[t] = depth[best[0]] + 1
        out.append(best)
    return out


def place_tiles(state: AnimalState, hyperbolic: bool = True) -> dict[int, complex]:
    """Coordinates for every vertex of the animal."""
    p = state.p
    radius = _disk_circumradius(p, state.q) if hyperbolic else 1.0
    corners = [radius * cmath.exp(1j * (math.pi / 2 + 2 * math.pi * i / p)) for i in range(p)]
    mirrors = [_edge_reflection(corners[i], corners[(i + 1) % p], hyperbolic) for i in range(p)]
    identity = (((1, 0), (0, 1)), False)

    iso = [identity]
    # label[t][v]: index of the fundamental corner that tile t's map sends to v
    label = [{v: i for i, v in enumerate(state.tiles[0])}]
    for t, anchor in enumerate(_anchors(state)):
        if anchor is None:
            continue
        par, u, v = anchor
        lu, lv = label[par][u], label[par][v]
        step = (lv - lu) % p
        edge = lu if step == 1 else lv
        iso.append(_compose(iso[par], mirrors[edge]))
        label.append({x: (lu + (1 if step == 1 else -1) * s) % p for s, x in enumerate(_walk(state.tiles[t], u, v))})

    pos: dict[int, complex] = {}
    for t in range(state.n):
        for x, i in label[t].items():
            if x not in pos:
                pos[x] = _apply(iso[t], corners[i])
    return pos


def _fmt(x: float) -> str:
    s = f"{x:.5f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _segment(a: complex, b: complex, hyperbolic: bool, scale: float) -> str:
    # SVG y grows downwards
    bx, by = b.real * scale, -b.imag * scale
    if hyperbolic:
        circ = _geodesic_circle(a, b)
        if circ is not None:
            c, r = circ
            pa = complex(a.real, -a.imag) - complex(c.real, -c.imag)
            pb = complex(b.real, -b.imag) - complex(c.real, -c.imag)
            sweep = 1 if (pa.real * pb.imag - pa.imag * pb.real) > 0 else 0
            R = _fmt(r * scale)
            return f"A {R} {R} 0 0 {sweep} {_fmt(bx)} {_fmt(by)}"
    return f"L {_fmt(bx)} {_fmt(by)}"


def _path(points: list[complex], hyperbolic: bool, scale: float, closed: bool) -> str:
    a = points[0]
    parts = [f"M {_fmt(a.real * scale)} {_fmt(-a.imag * scale)}"]
    seq = points + [points[0]] if closed else points
    for x, y in zip(seq, seq[1:]):
        parts.append(_segment(x, y, hyperbolic, scale))
    if closed:
        parts.append("Z")
    return " ".join(parts)


def render_svg(ctx: TessContext, n: int, size: int = 800) -> str:
    """SVG 1.1 document showing the n-tile spiral animal."""
    state = grow_to(new_animal(ctx), n)
    return state_to_svg(state, hyperbolic=ctx.is_hyperbolic, size=size)


def state_to_svg(state: AnimalState, hyperbolic: bool = True, size: int = 800) -> str:
    pos = place_tiles(state, hyperbolic)
    if hyperbolic:
        extent = 1.0
    else:
        extent = max(max(abs(z.real), abs(z.imag)) for z in pos.values())
    scale = (size / 2 - 10) / extent
    half = size / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="{_fmt(-half)} {_fmt(-half)} {size} {size}">',
        f"<title>{{{state.p},{state.q}}} spiral animal, n={state.n}, perimeter={state.perimeter}</title>",
    ]
    if hyperbolic:
        out.append(f'<circle cx="0" cy="0" r="{_fmt(scale)}" fill="#f7f7f7" stroke="#999999" stroke-width="1"/>')
    out.append('<g id="tiles" fill="#9ecae1" stroke="#3182bd" stroke-width="0.8">')
    for t, cyc in enumerate(state.tiles):
        d = _path([pos[v] for v in cyc], hyperbolic, scale, closed=True)
        out.append(f'<path class="tile" data-tile="{t}" d="{d}"/>')
    out.append("</g>")
    out.append('<g id="boundary" fill="none" stroke="#d62728" stroke-width="2.5" stroke-linecap="round">')
    ring = state.boundary_cycle()
    prev = ring[-1]
    for v in ring:
        d = _path([pos[prev], pos[v]], hyperbolic, scale, closed=False)
        out.append(f'<path class="boundary-edge" d="{d}"/>')
        prev = v
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(ctx: TessContext, n: int, out_path, size: int = 800) -> Path:
    path = Path(out_path)
    path.write_text(render_svg(ctx, n, size), encoding="utf-8")
    return path
