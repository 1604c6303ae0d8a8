"""Rectangle decomposition trees along all horizontal (or vertical) reflex chords.

``MaskTree`` is the working representation used by the partition engine: it
lives in cell-index space of a boolean mask, so it can be built for any
sub-region and for flipped or transposed views at no extra cost.  ``CutTree``
is the public, coordinate-level form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import Cut, CutKind, Point, RectilinearPolygon
from .raster import Grid, mask_to_polygon, polygon_to_mask

CORNERS = ("TL", "TR", "BL", "BR")


class NotAdjacent(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    """Tree edge in cell space: ``lo`` sits below ``hi``; the chord lies on
    row line ``row`` from column line ``c0`` to ``c1``."""

    lo: int
    hi: int
    row: int
    c0: int
    c1: int
    t: int

    def other(self, i: int) -> int:
        return self.hi if i == self.lo else self.lo


@dataclass
class MaskTree:
    mask: np.ndarray
    rects: list  # (r0, r1, c0, c1), half-open cell ranges
    edges: list
    adj: list = field(default_factory=list)

    def __post_init__(self):
        self.adj = [[] for _ in self.rects]
        for k, e in enumerate(self.edges):
            self.adj[e.lo].append(k)
            self.adj[e.hi].append(k)
        for lst in self.adj:
            lst.sort(key=lambda k: (self.edges[k].c0, self.edges[k].row))
        self._side_cache = {}
        self._node_cache = {}

    # --- structure ---------------------------------------------------------

    def deg(self, i: int) -> int:
        return len(self.adj[i])

    def is_path(self) -> bool:
        return all(len(a) <= 2 for a in self.adj)

    def top_edges(self, i: int) -> list[int]:
        return [k for k in self.adj[i] if self.edges[k].lo == i]

    def bottom_edges(self, i: int) -> list[int]:
        return [k for k in self.adj[i] if self.edges[k].hi == i]

    def order(self) -> list[int]:
        """Node ids sorted by lower-left corner, the tie-break order."""
        return sorted(range(len(self.rects)), key=lambda i: (self.rects[i][0], self.rects[i][2]))

    def node_mask(self, i: int) -> np.ndarray:
        m = self._node_cache.get(i)
        if m is None:
            r0, r1, c0, c1 = self.rects[i]
            m = np.zeros_like(self.mask)
            m[r0:r1, c0:c1] = True
            self._node_cache[i] = m
        return m

    def slice_mask(self, i: int, ca: int, cb: int) -> np.ndarray:
        """Columns ``ca..cb`` (column lines) of rectangle ``i``."""
        r0, r1, c0, c1 = self.rects[i]
        m = np.zeros_like(self.mask)
        m[r0:r1, max(ca, c0):min(cb, c1)] = True
        return m

    def side_nodes(self, k: int, i: int) -> list[int]:
        """Nodes of the component containing ``i`` once edge ``k`` is removed."""
        key = (k, i)
        if key not in self._side_cache:
            seen = {i}
            stack = [i]
            while stack:
                u = stack.pop()
                for kk in self.adj[u]:
                    if kk == k:
                        continue
                    w = self.edges[kk].other(u)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            self._side_cache[key] = sorted(seen)
        return self._side_cache[key]

    def side(self, k: int, i: int) -> np.ndarray:
        m = np.zeros_like(self.mask)
        for j in self.side_nodes(k, i):
            r0, r1, c0, c1 = self.rects[j]
            m[r0:r1, c0:c1] = True
        return m

    def union(self, nodes) -> np.ndarray:
        m = np.zeros_like(self.mask)
        for j in nodes:
            r0, r1, c0, c1 = self.rects[j]
            m[r0:r1, c0:c1] = True
        return m

    # --- corner adjacency ----------------------------------------------------

    def corner(self, i: int, corner: str) -> Optional[int]:
        """Edge adjacent to rectangle ``i`` at the given corner, or None."""
        _, _, i0, i1 = self.rects[i]
        edges = self.top_edges(i) if corner[0] == "T" else self.bottom_edges(i)
        for k in edges:
            q = self.rects[self.edges[k].other(i)]
            q0, q1 = q[2], q[3]
            if corner[1] == "L":
                if q0 <= i0 < q1 and (q0 == i0 or q1 < i1):
                    return k
            else:
                if q0 < i1 <= q1 and (q1 == i1 or q0 > i0):
                    return k
        return None

    def corner_region(self, i: int, corner: str) -> Optional[np.ndarray]:
        k = self.corner(i, corner)
        if k is None:
            return None
        return self.side(k, self.edges[k].other(i))

    def covers_side(self, k: int, i: int) -> bool:
        """Edge ``k`` is a chord spanning the whole top or bottom side of ``i``,
        with the neighbour overhanging on both ends."""
        _, _, i0, i1 = self.rects[i]
        q = self.rects[self.edges[k].other(i)]
        return q[2] < i0 and q[3] > i1

    def pockets(self) -> list[int]:
        return [i for i in self.order() if self.deg(i) == 1 and self.covers_side(self.adj[i][0], i)]

    def corridors(self) -> list[int]:
        return [i for i in self.order()
                if self.deg(i) >= 2 and any(self.covers_side(k, i) for k in self.adj[i])]

    def claim11(self) -> int:
        return 4 * len(self.rects) + sum(e.t for e in self.edges)


def _runs(row: np.ndarray) -> list[tuple[int, int]]:
    padded = np.concatenate(([False], row, [False]))
    d = np.flatnonzero(padded[1:] != padded[:-1])
    return [(int(d[j]), int(d[j + 1])) for j in range(0, len(d), 2)]


def mask_tree(mask: np.ndarray) -> MaskTree:
    """Horizontal cut tree of a simple cell region."""
    H = mask.shape[0]
    rects: list[list[int]] = []
    edges: list[Edge] = []
    prev: list[tuple[int, int, int]] = []  # (c0, c1, node)
    for r in range(H):
        cur = []
        runs = _runs(mask[r])
        for c0, c1 in runs:
            node = None
            for p0, p1, pn in prev:
                if p0 == c0 and p1 == c1:
                    node = pn
                    break
            if node is None:
                node = len(rects)
                rects.append([r, r + 1, c0, c1])
                for p0, p1, pn in prev:
                    lo_, hi_ = max(p0, c0), min(p1, c1)
                    if lo_ < hi_:
                        t = -2 * ((p0 == c0) + (p1 == c1))
                        edges.append(Edge(pn, node, r, lo_, hi_, t))
            else:
                rects[node][1] = r + 1
            cur.append((c0, c1, node))
        # edges from a node that continued upward to new runs were handled above;
        # new runs that overlap a continued node's run cannot exist (runs are disjoint)
        prev = cur
    return MaskTree(mask, [tuple(r) for r in rects], edges)


# --- public coordinate-level API -------------------------------------------


@dataclass(frozen=True)
class RectNode:
    id: int
    rect: tuple[Point, Point, Point, Point]

    @property
    def x0(self):
        return self.rect[0].x

    @property
    def y0(self):
        return self.rect[0].y

    @property
    def x1(self):
        return self.rect[2].x

    @property
    def y1(self):
        return self.rect[2].y


@dataclass(frozen=True)
class TreeEdge:
    a: int
    b: int
    cut: Cut
    t: int


@dataclass(frozen=True)
class CornerAdjacency:
    node: int
    corner: str
    edge: Optional[TreeEdge]
    region: Optional[RectilinearPolygon]


@dataclass
class CutTree:
    nodes: list
    edges: list
    orientation: str
    grid: Grid
    mtree: MaskTree

    def degree(self, i: int) -> int:
        return self.mtree.deg(i)

    def claim11_sum(self) -> int:
        return 4 * len(self.nodes) + sum(e.t for e in self.edges)


def _rect_points(x0, y0, x1, y1):
    return (Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1))


def build_cut_tree(P: RectilinearPolygon, orientation: str = "horizontal") -> CutTree:
    if orientation not in ("horizontal", "vertical"):
        raise ValueError(f"orientation must be horizontal or vertical, got {orientation!r}")
    mask, grid = polygon_to_mask(P)
    vertical = orientation == "vertical"
    mt = mask_tree(mask.T if vertical else mask)
    xs, ys = grid.xs, grid.ys

    def pt(col_line, row_line):
        # col/row lines of the (possibly transposed) working mask
        return Point(xs[row_line], ys[col_line]) if vertical else Point(xs[col_line], ys[row_line])

    nodes = []
    for i, (r0, r1, c0, c1) in enumerate(mt.rects):
        a, b = pt(c0, r0), pt(c1, r1)
        nodes.append(RectNode(i, _rect_points(min(a.x, b.x), min(a.y, b.y), max(a.x, b.x), max(a.y, b.y))))
    edges = []
    for e in mt.edges:
        kind = CutKind.TWO if e.t == 0 else CutKind.ONE
        edges.append(TreeEdge(e.lo, e.hi, Cut(kind, (pt(e.c0, e.row), pt(e.c1, e.row))), e.t))
    return CutTree(nodes, edges, orientation, grid, mt)


def t_value(Ra: RectNode, Rb: RectNode) -> int:
    """n(Ra ∪ Rb) - 8 for two rectangles meeting along a horizontal segment."""
    if Ra.y1 == Rb.y0:
        lo, hi = Ra, Rb
    elif Rb.y1 == Ra.y0:
        lo, hi = Rb, Ra
    else:
        raise NotAdjacent("rectangles do not share a horizontal side line")
    if min(lo.x1, hi.x1) <= max(lo.x0, hi.x0):
        raise NotAdjacent("rectangles do not overlap horizontally")
    return -2 * ((lo.x0 == hi.x0) + (lo.x1 == hi.x1))


def corner_adjacency(T: CutTree, R: int, corner: str) -> CornerAdjacency:
    if corner not in CORNERS:
        raise ValueError(f"corner must be one of {CORNERS}")
    mt = T.mtree
    k = mt.corner(R, corner)
    if k is None:
        return CornerAdjacency(R, corner, None, None)
    region = mt.side(k, mt.edges[k].other(R))
    if T.orientation == "vertical":
        region = region.T
    return CornerAdjacency(R, corner, T.edges[k], mask_to_polygon(region, T.grid))


def find_pockets(T: CutTree) -> list[int]:
    return T.mtree.pockets()


def find_corridors(T: CutTree) -> list[int]:
    return T.mtree.corridors()
