"""Mobile guards for pieces of at most 8 vertices.

A patrol is a segment inside its piece; a point of the piece counts as
covered when it sees one of the two endpoints.  Coordinates are exact
rationals throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import (
    INSIDE,
    OUTSIDE,
    PointOutside,
    RectilinearPolygon,
    locate,
    sees,
    segment_strictly_inside,
)

Q = Fraction


class NoPatrolFound(RuntimeError):
    def __init__(self, piece: RectilinearPolygon):
        self.piece = piece
        super().__init__(f"no covering patrol for {piece}")

    def dump(self) -> str:
        return f"{self.piece.n}\n" + "".join(f"{v.x} {v.y}\n" for v in self.piece.vertices)


@dataclass(frozen=True)
class Patrol:
    piece_id: int
    segment: tuple  # two (x, y) pairs of Fractions; equal for a stationary guard

    @property
    def stationary(self) -> bool:
        return self.segment[0] == self.segment[1]

    def to_json(self):
        return {"piece": self.piece_id,
                "segment": [[_num(c) for c in p] for p in self.segment]}


def _num(c: Fraction):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else float(c)


def _pt(p) -> tuple[Fraction, Fraction]:
    return Q(p[0]), Q(p[1])


# --- kernel --------------------------------------------------------------------


def kernel(piece: RectilinearPolygon) -> Optional[tuple[int, int, int, int]]:
    """Visibility kernel as a closed box (x0, y0, x1, y1), or None when empty.

    For an axis-parallel polygon the kernel is the intersection of the inner
    half-planes of its edges, which is always a box.
    """
    x0, y0, x1, y1 = piece.bbox()
    for a, b in piece.edges():
        # CCW: the interior lies to the left of a -> b
        if a.y == b.y:
            if b.x > a.x:
                y0 = max(y0, a.y)
            else:
                y1 = min(y1, a.y)
        else:
            if b.y > a.y:
                x1 = min(x1, a.x)
            else:
                x0 = max(x0, a.x)
    if x0 > x1 or y0 > y1:
        return None
    return x0, y0, x1, y1


def _in_kernel(piece: RectilinearPolygon, p) -> bool:
    k = kernel(piece)
    return k is not None and k[0] <= p[0] <= k[2] and k[1] <= p[1] <= k[3]


# --- exact coverage ----------------------------------------------------------------


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _line_y(p, d, x):
    return p[1] + (x - p[0]) * d[1] / d[0]


def _face_samples(piece: RectilinearPolygon, guards):
    """One interior sample per face of the arrangement formed by the piece's
    edges and, for each guard, the lines through it and the vertices that can
    cast its shadows.  Visibility from a guard is constant on each face."""
    vs = [_pt(v) for v in piece.vertices]
    reflex = {_pt(v) for v in piece.reflex_vertices()}
    lines = []  # (point, direction), direction never zero
    for g, inner in guards:
        for v in vs:
            if v != g and (v in reflex or not inner):
                lines.append((g, (v[0] - g[0], v[1] - g[1])))
    hsegs = [(min(a[0], b[0]), max(a[0], b[0]), a[1])
             for a, b in zip(vs, vs[1:] + vs[:1]) if a[1] == b[1]]
    vxs = {a[0] for a in vs}
    xmin, xmax = min(vxs), max(vxs)
    crit = set(vxs)
    sloped = [(p, d) for p, d in lines if d[0] != 0]
    crit.update(p[0] for p, d in lines if d[0] == 0)
    for (p, d), (q, e) in itertools.combinations(sloped, 2):
        den = d[0] * e[1] - d[1] * e[0]
        if den:
            t = ((q[0] - p[0]) * e[1] - (q[1] - p[1]) * e[0]) / den
            crit.add(p[0] + t * d[0])
    for p, d in sloped:
        if d[1]:
            for lo, hi, y in hsegs:
                x = p[0] + (y - p[1]) * d[0] / d[1]
                if lo <= x <= hi:
                    crit.add(x)
    xs = sorted(x for x in crit if xmin <= x <= xmax)
    for x0, x1 in zip(xs, xs[1:]):
        xm = (x0 + x1) / 2
        ys = {y for lo, hi, y in hsegs if lo < xm < hi}
        ys.update(_line_y(p, d, xm) for p, d in sloped)
        ys = sorted(ys)
        for y0, y1 in zip(ys, ys[1:]):
            yield xm, (y0 + y1) / 2


def _scaled(D, p):
    return p[0].numerator * (D // p[0].denominator), p[1].numerator * (D // p[1].denominator)


def _sees_fast(piece, ivs, D, g, x) -> bool:
    """Visibility between interior points, in integer arithmetic at scale ``D``.

    The segment leaves the piece iff it properly crosses an edge, unless it
    runs through a vertex, in which case the general test decides.
    """
    gi, xi = _scaled(D, g), _scaled(D, x)
    n = len(ivs)
    for k in range(n):
        a = ivs[k]
        a = (a[0] * D, a[1] * D)
        b = ivs[(k + 1) % n]
        b = (b[0] * D, b[1] * D)
        o1, o2 = _orient(gi, xi, a), _orient(gi, xi, b)
        if o1 == 0 and _on_segment(a, gi, xi):
            return sees(piece, g, x)
        if (o1 > 0) == (o2 > 0) or o2 == 0:
            continue
        if _orient(a, b, gi) * _orient(a, b, xi) < 0:
            return False
    return True


def _inside_int(ivs, D, x) -> bool:
    """``x`` (known to be off every edge) lies inside the piece."""
    X, Y = _scaled(D, x)
    n = len(ivs)
    crossings = 0
    for k in range(n):
        a, b = ivs[k], ivs[(k + 1) % n]
        if a[0] == b[0] and a[0] * D > X:
            lo, hi = (a[1], b[1]) if a[1] < b[1] else (b[1], a[1])
            if lo * D <= Y < hi * D:
                crossings += 1
    return crossings % 2 == 1


def _lcm_den(*cs) -> int:
    D = 1
    for c in cs:
        D = math.lcm(D, c.denominator)
    return D


def _covers(piece, guards, samples, on_edges_possible=False) -> bool:
    ivs = [(v.x, v.y) for v in piece.vertices]
    gd = _lcm_den(*(c for g, _ in guards for c in g))
    for x in samples:
        D = math.lcm(gd, x[0].denominator, x[1].denominator)
        if on_edges_possible:
            if locate(piece, x) != INSIDE:
                continue
        elif not _inside_int(ivs, D, x):
            continue
        if not any(_sees_fast(piece, ivs, D, g, x) if inner else sees(piece, g, x) for g, inner in guards):
            return False
    return True


def coverage_check(piece: RectilinearPolygon, patrol: Patrol) -> bool:
    """Every point of ``piece`` sees an endpoint of the patrol (exact)."""
    a, b = (_pt(p) for p in patrol.segment)
    for g in (a, b):
        if locate(piece, g) == OUTSIDE:
            return False
    if _in_kernel(piece, a) or _in_kernel(piece, b):
        return True
    pts = [a] if a == b else [a, b]
    guards = [(g, locate(piece, g) == INSIDE) for g in pts]
    return _covers(piece, guards, _face_samples(piece, guards))


# --- synthesis -----------------------------------------------------------------------


def _candidate_points(piece: RectilinearPolygon, step: int):
    """Interior points on the piece's coordinate grid refined ``step`` times."""
    xs = sorted({v.x for v in piece.vertices})
    ys = sorted({v.y for v in piece.vertices})

    def refine(cs):
        out = []
        for c0, c1 in zip(cs, cs[1:]):
            out += [Q(c0) + Q(c1 - c0) * k / step for k in range(step)]
        return out + [Q(cs[-1])]

    return [p for p in itertools.product(refine(xs), refine(ys)) if locate(piece, p) == INSIDE]


def _centres(piece: RectilinearPolygon):
    xs = sorted({v.x for v in piece.vertices})
    ys = sorted({v.y for v in piece.vertices})
    pts = [(Q(x0 + x1, 2), Q(y0 + y1, 2)) for x0, x1 in zip(xs, xs[1:]) for y0, y1 in zip(ys, ys[1:])]
    return [p for p in pts if locate(piece, p) == INSIDE]


def _segment_order(pair):
    a, b = pair
    axis = a[0] == b[0] or a[1] == b[1]
    length2 = (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2
    return (not axis, -length2, a, b)


def patrol_for_piece(piece: RectilinearPolygon, piece_id: int = 0) -> Patrol:
    """A covering patrol strictly inside ``piece``; stationary when the kernel allows it."""
    if piece.n > 8:
        raise ValueError(f"patrols are synthesised for pieces of at most 8 vertices, got {piece.n}")
    k = kernel(piece)
    if k is not None:
        c = (Q(k[0] + k[2], 2), Q(k[1] + k[3], 2))
        if locate(piece, c) == INSIDE:
            return Patrol(piece_id, (c, c))
    probes = _centres(piece)
    for pts in (probes, _candidate_points(piece, 2), _candidate_points(piece, 4)):
        pairs = sorted(itertools.combinations(pts, 2), key=_segment_order)
        for a, b in pairs:
            # cheap necessary condition before the exact test
            if not _covers(piece, [(a, True), (b, True)], probes, on_edges_possible=True):
                continue
            if not segment_strictly_inside(piece, a, b):
                continue
            p = Patrol(piece_id, (a, b))
            if coverage_check(piece, p):
                return p
    raise NoPatrolFound(piece)


def patrols_for(pieces) -> list[Patrol]:
    return [patrol_for_piece(P, i) for i, P in enumerate(pieces)]


# --- non-crossing ------------------------------------------------------------------


def _segments_meet(a, b, c, d) -> Optional[str]:
    """How closed segments ab and cd meet: None, 'touch' (only at endpoints of
    both) or 'cross' (at a point interior to one of them)."""
    a, b, c, d = (_pt(p) for p in (a, b, c, d))
    if max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0]):
        return None
    if max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1]):
        return None
    pts = []
    for p, s0, s1 in ((a, c, d), (b, c, d), (c, a, b), (d, a, b)):
        if _on_segment(p, s0, s1):
            pts.append(p)
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return "cross"
    if not pts:
        return None
    ends = {a, b} & {c, d}
    if all(p in ends for p in pts):
        return "touch"
    return "cross"


def _on_segment(p, a, b) -> bool:
    return (_orient(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def patrols_noncrossing(patrols, pieces=None) -> bool:
    """No two patrols share a point that is interior to either segment."""
    for p, q in itertools.combinations(patrols, 2):
        if _segments_meet(*p.segment, *q.segment) == "cross":
            return False
    return True


def check_patrol_in_piece(piece: RectilinearPolygon, patrol: Patrol) -> None:
    """Raise PointOutside unless both endpoints lie in the closed piece and see each other."""
    a, b = patrol.segment
    if not sees(piece, a, b):
        raise PointOutside(f"patrol {patrol.segment} leaves its piece")
