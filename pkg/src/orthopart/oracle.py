"""Brute-force checks that share no code path with the partition engine.

Cuts are found by shooting rays from reflex vertices and testing every
two-segment connection of two reflex vertices against the polygon edges
with plain integer comparisons.  Tilings are checked by point-in-polygon
parity at cell centres of the common coordinate grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import Cut, CutKind, GeometryError, Point, RectilinearPolygon, split


def _f(n: int) -> int:
    return (3 * n + 4) // 16


# --- cut enumeration -----------------------------------------------------------


def _reflex_with_dirs(P: RectilinearPolygon):
    vs = P.vertices
    n = len(vs)
    out = []
    for i in range(n):
        p, v, q = vs[i - 1], vs[i], vs[(i + 1) % n]
        cross = (v.x - p.x) * (q.y - v.y) - (v.y - p.y) * (q.x - v.x)
        if cross < 0:
            d_in = (_sgn(v.x - p.x), _sgn(v.y - p.y))
            d_out = (_sgn(q.x - v.x), _sgn(q.y - v.y))
            out.append((v, (d_in, (-d_out[0], -d_out[1]))))
    return out


def _sgn(a: int) -> int:
    return (a > 0) - (a < 0)


def _ray_hit(P: RectilinearPolygon, v: Point, d) -> Point:
    """First boundary point hit by the ray from ``v`` in axis direction ``d``."""
    best = None
    for a, b in P.edges():
        if d[1] == 0:  # horizontal ray
            if a.x == b.x:
                lo, hi = sorted((a.y, b.y))
                t = (a.x - v.x) * d[0]
                if t > 0 and lo <= v.y <= hi:
                    best = t if best is None else min(best, t)
            elif a.y == v.y:
                for x in (a.x, b.x):
                    t = (x - v.x) * d[0]
                    if t > 0:
                        best = t if best is None else min(best, t)
        else:
            if a.y == b.y:
                lo, hi = sorted((a.x, b.x))
                t = (a.y - v.y) * d[1]
                if t > 0 and lo <= v.x <= hi:
                    best = t if best is None else min(best, t)
            elif a.x == v.x:
                for y in (a.y, b.y):
                    t = (y - v.y) * d[1]
                    if t > 0:
                        best = t if best is None else min(best, t)
    assert best is not None
    return Point(v.x + best * d[0], v.y + best * d[1])


def _inside_strict(P: RectilinearPolygon, px2: int, py2: int) -> bool:
    """Point (px2/2, py2/2) strictly inside P (doubled coordinates, off every vertical edge line)."""
    crossings = 0
    for a, b in P.edges():
        if a.x == b.x and 2 * a.x > px2:
            lo, hi = sorted((a.y, b.y))
            if 2 * lo <= py2 < 2 * hi:
                crossings += 1
    return crossings % 2 == 1


def _on_boundary(P: RectilinearPolygon, p) -> bool:
    for a, b in P.edges():
        if min(a.x, b.x) <= p[0] <= max(a.x, b.x) and min(a.y, b.y) <= p[1] <= max(a.y, b.y):
            return True
    return False


def _open_segment_clear(P: RectilinearPolygon, a, b) -> bool:
    """The open axis-parallel segment (a, b) lies in the open interior of P."""
    if a[1] == b[1]:
        y = a[1]
        x0, x1 = sorted((a[0], b[0]))
        for e0, e1 in P.edges():
            if e0.x == e1.x:
                lo, hi = sorted((e0.y, e1.y))
                if x0 < e0.x < x1 and lo <= y <= hi:
                    return False
            elif e0.y == y:
                lo, hi = sorted((e0.x, e1.x))
                if lo < x1 and hi > x0:
                    return False
        # probe just off the vertical edge lines; no edge line crosses in between
        return _inside_strict(P, x0 + x1, 2 * y + 1) and _inside_strict(P, x0 + x1, 2 * y - 1)
    x = a[0]
    y0, y1 = sorted((a[1], b[1]))
    for e0, e1 in P.edges():
        if e0.y == e1.y:
            lo, hi = sorted((e0.x, e1.x))
            if y0 < e0.y < y1 and lo <= x <= hi:
                return False
        elif e0.x == x:
            lo, hi = sorted((e0.y, e1.y))
            if lo < y1 and hi > y0:
                return False
    return _inside_strict(P, 2 * x + 1, y0 + y1) and _inside_strict(P, 2 * x - 1, y0 + y1)


def admissible_cut_set(P: RectilinearPolygon) -> set[Cut]:
    """All 1-cuts, 2-cuts and L-cuts of P, as canonical Cut values (no splitting).

    An L-cut leaves each endpoint along one of its two interior directions; it
    is interior exactly when each leg is shorter than the free ray from its
    endpoint in that direction.
    """
    refl = _reflex_with_dirs(P)
    reflex_pts = {v for v, _ in refl}
    cuts: set[Cut] = set()
    reach = {}
    for v, dirs in refl:
        for d in dirs:
            w = _ray_hit(P, v, d)
            reach[v, d] = abs(w.x - v.x) + abs(w.y - v.y)
            kind = CutKind.TWO if w in reflex_pts else CutKind.ONE
            cuts.add(Cut(kind, (v, w)))
    pts = sorted(reflex_pts)
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            if p.x == q.x or p.y == q.y:
                continue
            for bend in (Point(p.x, q.y), Point(q.x, p.y)):
                dp = (_sgn(bend.x - p.x), _sgn(bend.y - p.y))
                dq = (_sgn(bend.x - q.x), _sgn(bend.y - q.y))
                lp = abs(bend.x - p.x) + abs(bend.y - p.y)
                lq = abs(bend.x - q.x) + abs(bend.y - q.y)
                if lp < reach.get((p, dp), 0) and lq < reach.get((q, dq), 0):
                    cuts.add(Cut(CutKind.L, (p, bend, q)))
    return cuts


def _admissible_cut_set_slow(P: RectilinearPolygon) -> set[Cut]:
    """Same set by testing every candidate polyline against every edge."""
    refl = _reflex_with_dirs(P)
    reflex_pts = {v for v, _ in refl}
    cuts: set[Cut] = set()
    for v, dirs in refl:
        for d in dirs:
            w = _ray_hit(P, v, d)
            kind = CutKind.TWO if w in reflex_pts else CutKind.ONE
            cuts.add(Cut(kind, (v, w)))
    pts = sorted(reflex_pts)
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            if p.x == q.x or p.y == q.y:
                continue
            for bend in (Point(p.x, q.y), Point(q.x, p.y)):
                if _on_boundary(P, bend):
                    continue
                if _open_segment_clear(P, p, bend) and _open_segment_clear(P, bend, q):
                    cuts.add(Cut(CutKind.L, (p, bend, q)))
    return cuts


@dataclass(frozen=True)
class EnumeratedCut:
    cut: Cut
    part1: RectilinearPolygon
    part2: RectilinearPolygon

    @property
    def n1(self):
        return self.part1.n

    @property
    def n2(self):
        return self.part2.n


def enumerate_admissible_cuts(P: RectilinearPolygon) -> list[EnumeratedCut]:
    out = []
    for c in sorted(admissible_cut_set(P), key=lambda c: (c.kind.value, c.polyline)):
        try:
            r = split(P, c)
        except GeometryError:
            continue
        out.append(EnumeratedCut(c, r.part1, r.part2))
    return out


def good_cut_exists_bruteforce(P: RectilinearPolygon) -> bool:
    n = P.n
    return any(_f(c.n1) + _f(c.n2) <= _f(n) for c in enumerate_admissible_cuts(P))


def straight_cut_with_small_parts(P: RectilinearPolygon, limit: int = 8) -> Optional[EnumeratedCut]:
    for c in enumerate_admissible_cuts(P):
        if c.cut.kind is not CutKind.L and c.n1 <= limit and c.n2 <= limit:
            return c
    return None


# --- partition verification ----------------------------------------------------


def _cell_centres(xs, ys):
    cx = np.array([xs[i] + xs[i + 1] for i in range(len(xs) - 1)], dtype=np.int64)
    cy = np.array([ys[j] + ys[j + 1] for j in range(len(ys) - 1)], dtype=np.int64)
    return np.meshgrid(cx, cy)  # doubled coordinates


def _inside_cells(P: RectilinearPolygon, X2, Y2) -> np.ndarray:
    count = np.zeros(X2.shape, dtype=np.int64)
    for a, b in P.edges():
        if a.x == b.x:
            lo, hi = sorted((a.y, b.y))
            count += (2 * a.x > X2) & (2 * lo < Y2) & (Y2 < 2 * hi)
    return count % 2 == 1


def _area(P: RectilinearPolygon) -> int:
    vs = P.vertices
    s = sum(vs[i].x * vs[(i + 1) % len(vs)].y - vs[(i + 1) % len(vs)].x * vs[i].y for i in range(len(vs)))
    return abs(s) // 2


@dataclass
class PartitionReport:
    tiles_exactly: bool
    all_pieces_valid: bool
    pieces_small: bool
    count_within_bound: bool
    count: int
    bound: int
    witness: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.tiles_exactly and self.all_pieces_valid and self.pieces_small and self.count_within_bound


def verify_partition(P: RectilinearPolygon, pieces) -> PartitionReport:
    witness = {}
    valid = True
    for i, Q in enumerate(pieces):
        try:
            RectilinearPolygon(tuple(Q.vertices))
        except (GeometryError, ValueError) as e:
            valid = False
            witness.setdefault("invalid_piece", (i, str(e)))
    xs = sorted({v.x for Q in [P, *pieces] for v in Q.vertices})
    ys = sorted({v.y for Q in [P, *pieces] for v in Q.vertices})
    X2, Y2 = _cell_centres(xs, ys)
    inside = _inside_cells(P, X2, Y2)
    cover = np.zeros(X2.shape, dtype=np.int64)
    for Q in pieces:
        cover += _inside_cells(Q, X2, Y2)
    tiles = bool(np.array_equal(cover, inside.astype(np.int64)))
    if not tiles:
        bad = np.argwhere(cover != inside)
        r, c = bad[0]
        cell = ((xs[c], ys[r]), (xs[c + 1], ys[r + 1]))
        if not inside[r, c]:
            witness["outside_cell"] = cell
        elif cover[r, c] == 0:
            witness["uncovered_cell"] = cell
        else:
            witness["overlap_cell"] = cell
    if tiles and sum(_area(Q) for Q in pieces) != _area(P):
        tiles = False
        witness["area"] = (sum(_area(Q) for Q in pieces), _area(P))
    small = all(len(Q.vertices) <= 8 for Q in pieces)
    return PartitionReport(tiles, valid, small, len(pieces) <= _f(P.n), len(pieces), _f(P.n), witness)


# --- residue table ---------------------------------------------------------------


@dataclass
class Lemma6Report:
    checked: int
    unsound: list
    exclusion_needed: list

    @property
    def ok(self) -> bool:
        return not self.unsound


def _conditions(n: int, n1: int, two_cut: bool) -> list[str]:
    r = n1 % 16
    out = []
    if not two_cut and r in (2, 8, 14):
        out.append("a")
    if two_cut and r in (0, 2, 6, 8, 12, 14):
        out.append("b")
    if n % 16 != 14 and ((two_cut and r == 10) or (not two_cut and r == 12)):
        out.append("c")
    return out


def verify_lemma6_table(max_n: int = 4 + 16 * 12) -> Lemma6Report:
    """Check every residue certificate against the bound for all n up to ``max_n``.

    Also lists the instances where the third certificate would fail if its
    exclusion of n = 14 (mod 16) were dropped.
    """
    checked = 0
    unsound = []
    needed = []
    for n in range(4, max_n + 1, 2):
        for two_cut in (True, False):
            total = n if two_cut else n + 2
            for n1 in range(2, total - 1, 2):
                n2 = total - n1
                good = _f(n1) + _f(n2) <= _f(n)
                for cond in _conditions(n, n1, two_cut):
                    checked += 1
                    if not good:
                        unsound.append((n, n1, n2, "2-cut" if two_cut else "1/L-cut", cond))
                r = n1 % 16
                if n % 16 == 14 and not good and ((two_cut and r == 10) or (not two_cut and r == 12)):
                    needed.append((n, n1, n2, "2-cut" if two_cut else "1/L-cut"))
    return Lemma6Report(checked, unsound, needed)
