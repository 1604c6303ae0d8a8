"""Exact lattice geometry for simple orthogonal polygons.

Everything here works on integer (or ``Fraction``) coordinates; no predicate
ever touches a float.  Polygons are stored counter-clockwise, starting at the
lexicographically smallest vertex, so two polygons describing the same region
compare equal.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class Point(NamedTuple):
    x: int
    y: int


class GeometryError(ValueError):
    """Base class for invalid polygons and cuts."""


class NonOrthogonalEdge(GeometryError):
    pass


class SelfIntersecting(GeometryError):
    pass


class DegenerateArea(GeometryError):
    pass


class CutNotInterior(GeometryError):
    pass


class CutEndpointInvalid(GeometryError):
    pass


class PointOutside(GeometryError):
    pass


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _signed_area2(pts: Sequence[Point]) -> int:
    s = 0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def _edges_touch(a0, a1, b0, b1) -> bool:
    """Closed axis-parallel segments a0a1 and b0b1 share a point."""
    ax0, ax1 = sorted((a0[0], a1[0]))
    ay0, ay1 = sorted((a0[1], a1[1]))
    bx0, bx1 = sorted((b0[0], b1[0]))
    by0, by1 = sorted((b0[1], b1[1]))
    return ax0 <= bx1 and bx0 <= ax1 and ay0 <= by1 and by0 <= ay1


def _touching_pair(pts: Sequence[Point]):
    """Indices of two non-consecutive edges that share a point, or None."""
    a = np.array(pts, dtype=np.int64)
    b = np.roll(a, -1, axis=0)
    x0, x1 = np.minimum(a[:, 0], b[:, 0]), np.maximum(a[:, 0], b[:, 0])
    y0, y1 = np.minimum(a[:, 1], b[:, 1]), np.maximum(a[:, 1], b[:, 1])
    touch = ((x0[:, None] <= x1[None, :]) & (x0[None, :] <= x1[:, None])
             & (y0[:, None] <= y1[None, :]) & (y0[None, :] <= y1[:, None]))
    n = len(pts)
    idx = np.arange(n)
    touch[idx, idx] = False
    touch[idx, (idx + 1) % n] = False
    touch[(idx + 1) % n, idx] = False
    hit = np.argwhere(touch)
    return tuple(int(v) for v in hit[0]) if len(hit) else None


@dataclass(frozen=True)
class RectilinearPolygon:
    """A simple polyomino: closed region bounded by an axis-parallel cycle.

    Build instances with :func:`normalize`; the constructor only re-checks the
    invariants of an already canonical vertex list.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = self.vertices
        n = len(vs)
        if n < 4 or n % 2:
            raise DegenerateArea(f"need an even vertex count >= 4, got {n}")
        for i in range(n):
            p, q, r = vs[i - 1], vs[i], vs[(i + 1) % n]
            horiz_in = p[1] == q[1]
            horiz_out = q[1] == r[1]
            if not (horiz_in or p[0] == q[0]) or not (horiz_out or q[0] == r[0]):
                raise NonOrthogonalEdge(f"edge at {q} is not axis-parallel")
            if horiz_in == horiz_out:
                raise GeometryError(f"vertex {q} is not a corner")
        if _signed_area2(vs) <= 0:
            raise GeometryError("vertices must be counter-clockwise")
        if 2 * len(self.reflex_vertices()) != n - 4:
            raise SelfIntersecting("reflex count does not match (n - 4) / 2")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_reflex(self, i: int) -> bool:
        vs = self.vertices
        return _cross(vs[i - 1], vs[i], vs[(i + 1) % len(vs)]) < 0

    def reflex_vertices(self) -> list[Point]:
        return [v for i, v in enumerate(self.vertices) if self.is_reflex(i)]

    def area(self) -> int:
        a2 = _signed_area2(self.vertices)
        assert a2 % 2 == 0
        return a2 // 2

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def __str__(self) -> str:
        return "Polygon[" + " ".join(f"({x},{y})" for x, y in self.vertices) + "]"


def normalize(raw_vertices: Iterable, *, report: bool = False, _simple_known: bool = False):
    """Canonicalize a closed axis-parallel vertex cycle.

    Collinear vertices are merged, the orientation is forced counter-clockwise
    and the cycle is rotated to start at its smallest vertex.  With
    ``report=True`` returns ``(polygon, merged_count)``.
    """
    pts = [Point(int(x), int(y)) for x, y in raw_vertices]
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    dedup = []
    for p in pts:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    while len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    pts = dedup
    if len(pts) < 4:
        raise DegenerateArea(f"a polygon needs at least 4 distinct vertices, got {len(pts)}")
    for i in range(len(pts)):
        p, q = pts[i], pts[(i + 1) % len(pts)]
        if p.x != q.x and p.y != q.y:
            raise NonOrthogonalEdge(f"edge {p} -> {q} is not axis-parallel")

    merged = 0
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        i = 0
        while i < len(pts) and len(pts) >= 3:
            p, q, r = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if (p.x == q.x == r.x) or (p.y == q.y == r.y):
                d1 = (q.x - p.x, q.y - p.y)
                d2 = (r.x - q.x, r.y - q.y)
                if d1[0] * d2[0] + d1[1] * d2[1] < 0:
                    raise DegenerateArea(f"zero-width spike at {q}")
                pts.pop(i)
                merged += 1
                changed = True
            else:
                i += 1
    if len(pts) < 4:
        raise DegenerateArea("polygon collapses to fewer than 4 corners")

    a2 = _signed_area2(pts)
    if a2 == 0:
        raise DegenerateArea("zero area")
    if a2 < 0:
        pts.reverse()
    if len(set(pts)) != len(pts):
        raise SelfIntersecting("repeated vertex")
    n = len(pts)
    clash = None if _simple_known else _touching_pair(pts)
    if clash is not None:
        raise SelfIntersecting(f"edges at {pts[clash[0]]} and {pts[clash[1]]} touch")

    k = min(range(n), key=lambda i: pts[i])
    poly = RectilinearPolygon(tuple(pts[k:] + pts[:k]))
    if merged:
        logger.debug("normalize merged %d collinear vertices", merged)
    return (poly, merged) if report else poly


def reflex_vertices(P: RectilinearPolygon) -> list[Point]:
    return P.reflex_vertices()


def area(P: RectilinearPolygon) -> int:
    return P.area()


# --- dihedral group --------------------------------------------------------

# (a, b, c, d) acts as (x, y) -> (a x + b y, c x + d y)
DIHEDRAL: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),    # identity
    (0, -1, 1, 0),   # rotate 90
    (-1, 0, 0, -1),  # rotate 180
    (0, 1, -1, 0),   # rotate 270
    (-1, 0, 0, 1),   # mirror x
    (1, 0, 0, -1),   # mirror y
    (0, 1, 1, 0),    # transpose
    (0, -1, -1, 0),  # anti-transpose
)


def dihedral_inverse(g: int) -> int:
    a, b, c, d = DIHEDRAL[g]
    # orthogonal matrix: inverse is the transpose
    return DIHEDRAL.index((a, c, b, d))


def apply_dihedral(g: int, p) -> Point:
    a, b, c, d = DIHEDRAL[g]
    return Point(a * p[0] + b * p[1], c * p[0] + d * p[1])


def transform(P: RectilinearPolygon, g: int) -> RectilinearPolygon:
    """Image of ``P`` under one of the 8 symmetries of the square."""
    if not 0 <= g < 8:
        raise ValueError(f"dihedral element must be in 0..7, got {g}")
    return normalize(apply_dihedral(g, v) for v in P.vertices)


# --- point / segment location ---------------------------------------------

INSIDE, BOUNDARY, OUTSIDE = "inside", "boundary", "outside"


def locate(P: RectilinearPolygon, p) -> str:
    """Exact location of point ``p`` (ints or Fractions) relative to ``P``."""
    px, py = p
    crossings = 0
    for a, b in P.edges():
        if a.x == b.x:
            lo, hi = (a.y, b.y) if a.y < b.y else (b.y, a.y)
            if px == a.x and lo <= py <= hi:
                return BOUNDARY
            if a.x > px and lo <= py < hi:
                crossings += 1
        else:
            lo, hi = (a.x, b.x) if a.x < b.x else (b.x, a.x)
            if py == a.y and lo <= px <= hi:
                return BOUNDARY
    return INSIDE if crossings % 2 else OUTSIDE


def _boundary_params(P: RectilinearPolygon, a, b) -> list[Fraction]:
    """Parameters t in [0, 1] where segment a + t (b - a) meets the boundary."""
    ax, ay = Fraction(a[0]), Fraction(a[1])
    dx, dy = Fraction(b[0]) - ax, Fraction(b[1]) - ay
    ts: set[Fraction] = set()
    for e0, e1 in P.edges():
        if e0.x == e1.x:
            c = e0.x
            lo, hi = sorted((e0.y, e1.y))
            if dx != 0:
                t = (c - ax) / dx
                if 0 <= t <= 1 and lo <= ay + t * dy <= hi:
                    ts.add(t)
            elif ax == c:
                if dy == 0:
                    if lo <= ay <= hi:
                        ts.add(Fraction(0))
                    continue
                for yy in (lo, hi):
                    t = (yy - ay) / dy
                    if 0 <= t <= 1:
                        ts.add(t)
                t0, t1 = sorted(((lo - ay) / dy, (hi - ay) / dy))
                if t0 <= 0 <= t1:
                    ts.add(Fraction(0))
                if t0 <= 1 <= t1:
                    ts.add(Fraction(1))
        else:
            c = e0.y
            lo, hi = sorted((e0.x, e1.x))
            if dy != 0:
                t = (c - ay) / dy
                if 0 <= t <= 1 and lo <= ax + t * dx <= hi:
                    ts.add(t)
            elif ay == c:
                if dx == 0:
                    if lo <= ax <= hi:
                        ts.add(Fraction(0))
                    continue
                for xx in (lo, hi):
                    t = (xx - ax) / dx
                    if 0 <= t <= 1:
                        ts.add(t)
                t0, t1 = sorted(((lo - ax) / dx, (hi - ax) / dx))
                if t0 <= 0 <= t1:
                    ts.add(Fraction(0))
                if t0 <= 1 <= t1:
                    ts.add(Fraction(1))
    return sorted(ts)


def _at(a, b, t):
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def segment_inside(P: RectilinearPolygon, a, b) -> bool:
    """Closed segment [a, b] lies in the closed region of ``P``."""
    ts = [Fraction(0)] + _boundary_params(P, a, b) + [Fraction(1)]
    if locate(P, a) == OUTSIDE or locate(P, b) == OUTSIDE:
        return False
    for t0, t1 in zip(ts, ts[1:]):
        if t0 != t1 and locate(P, _at(a, b, (t0 + t1) / 2)) == OUTSIDE:
            return False
    return True


def segment_strictly_inside(P: RectilinearPolygon, a, b) -> bool:
    """Closed segment [a, b] lies in the open interior of ``P``."""
    if _boundary_params(P, a, b):
        return False
    return locate(P, _at(a, b, Fraction(1, 2))) == INSIDE


def sees(P: RectilinearPolygon, a, b) -> bool:
    """True iff the closed segment [a, b] is contained in the closed region."""
    for p in (a, b):
        if locate(P, p) == OUTSIDE:
            raise PointOutside(f"{p} is outside the polygon")
    return segment_inside(P, a, b)


# --- cuts ------------------------------------------------------------------


class CutKind(enum.Enum):
    ONE = "1-cut"
    TWO = "2-cut"
    L = "L-cut"

    @property
    def size_excess(self) -> int:
        """n1 + n2 - n for a cut of this kind."""
        return 0 if self is CutKind.TWO else 2


@dataclass(frozen=True)
class Cut:
    kind: CutKind
    polyline: tuple[Point, ...]

    def __post_init__(self):
        pl = tuple(Point(*p) for p in self.polyline)
        if pl[-1] < pl[0]:
            pl = pl[::-1]
        object.__setattr__(self, "polyline", pl)
        want = 3 if self.kind is CutKind.L else 2
        if len(pl) != want:
            raise CutEndpointInvalid(f"{self.kind.value} needs {want} polyline points, got {len(pl)}")
        for p, q in zip(pl, pl[1:]):
            if p == q or (p.x != q.x and p.y != q.y):
                raise CutNotInterior(f"cut segment {p} -> {q} is not a proper axis-parallel segment")
        if want == 3 and (pl[0].x == pl[1].x) == (pl[1].x == pl[2].x):
            raise CutEndpointInvalid("L-cut segments must be perpendicular")

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return self.polyline[0], self.polyline[-1]

    def to_json(self):
        return {"kind": self.kind.value, "polyline": [list(p) for p in self.polyline]}


@dataclass(frozen=True)
class SplitResult:
    part1: RectilinearPolygon
    part2: RectilinearPolygon

    @property
    def n1(self) -> int:
        return self.part1.n

    @property
    def n2(self) -> int:
        return self.part2.n


def _boundary_position(P: RectilinearPolygon, p) -> tuple[int, bool]:
    """(edge index, is_vertex) of boundary point p; vertex hits report the vertex index."""
    for i, v in enumerate(P.vertices):
        if v == p:
            return i, True
    for i, (a, b) in enumerate(P.edges()):
        if _edges_touch(a, b, p, p):
            return i, False
    raise CutEndpointInvalid(f"cut endpoint {p} is not on the boundary")


def check_cut(P: RectilinearPolygon, c: Cut) -> None:
    """Raise unless ``c`` is a valid cut of ``P`` of its declared kind."""
    reflex = set(P.reflex_vertices())
    e0, e1 = c.endpoints
    for p in (e0, e1):
        if locate(P, p) != BOUNDARY:
            raise CutEndpointInvalid(f"cut endpoint {p} is not on the boundary")
    nref = (e0 in reflex) + (e1 in reflex)
    if c.kind is CutKind.ONE and nref != 1:
        raise CutEndpointInvalid(f"1-cut needs exactly one reflex endpoint, has {nref}")
    if c.kind is not CutKind.ONE and nref != 2:
        raise CutEndpointInvalid(f"{c.kind.value} needs two reflex endpoints, has {nref}")
    pl = c.polyline
    for p, q in zip(pl, pl[1:]):
        if _touches_open_segment(P, p, q):
            raise CutNotInterior(f"cut segment {p} -> {q} touches the boundary")
        if locate(P, _at(p, q, Fraction(1, 2))) != INSIDE:
            raise CutNotInterior(f"cut segment {p} -> {q} leaves the interior")
    for bend in pl[1:-1]:
        if locate(P, bend) != INSIDE:
            raise CutNotInterior(f"cut bend {bend} is not interior")


def _touches_open_segment(P: RectilinearPolygon, p, q) -> bool:
    """Some boundary point lies on the open axis-parallel segment (p, q)."""
    horizontal = p[1] == q[1]
    c = p[1] if horizontal else p[0]
    lo, hi = sorted((p[0], q[0]) if horizontal else (p[1], q[1]))
    for a, b in P.edges():
        # coordinates along / across the segment direction
        a_al, b_al = (a.x, b.x) if horizontal else (a.y, b.y)
        a_ac, b_ac = (a.y, b.y) if horizontal else (a.x, b.x)
        if a_al == b_al:  # edge perpendicular to the segment
            if lo < a_al < hi and min(a_ac, b_ac) <= c <= max(a_ac, b_ac):
                return True
        elif a_ac == c and min(a_al, b_al) < hi and max(a_al, b_al) > lo:
            return True
    return False


def split(P: RectilinearPolygon, c: Cut) -> SplitResult:
    """Split ``P`` along ``c``.

    ``part1`` is the piece whose boundary runs counter-clockwise from the
    cut's first endpoint to its last one.
    """
    check_cut(P, c)
    e0, e1 = c.endpoints
    ring = list(P.vertices)
    for p in (e0, e1):
        i, is_vertex = _boundary_position(P, p)
        if not is_vertex:
            # insert p after vertex a of edge (a, b)
            a = P.vertices[i]
            j = ring.index(a)
            ring.insert(j + 1, Point(*p))
    i0, i1 = ring.index(e0), ring.index(e1)
    m = len(ring)

    def arc(i, j):
        out = [ring[i]]
        while i != j:
            i = (i + 1) % m
            out.append(ring[i])
        return out

    inner = list(c.polyline[1:-1])
    # both sides of a checked cut are simple, so the quadratic edge test is skipped
    first = normalize(arc(i0, i1) + inner[::-1], _simple_known=True)
    second = normalize(arc(i1, i0) + inner, _simple_known=True)
    res = SplitResult(first, second)
    assert res.n1 + res.n2 == P.n + c.kind.size_excess, (res.n1, res.n2, P.n, c)
    assert first.area() + second.area() == P.area()
    return res
