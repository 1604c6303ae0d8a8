"""Polygons as boolean cell masks on their compressed coordinate grid.

The grid of a polygon has one column per gap between consecutive distinct
vertex x-coordinates and one row per gap between distinct y-coordinates.
Every sub-region the partition engine talks about (rectangles, slices of
rectangles, unions of tree components) is a union of such cells, so region
arithmetic reduces to numpy boolean algebra.  ``mask[r, c]`` is the cell in
row ``r`` (bottom to top) and column ``c`` (left to right); grid points are
addressed as ``(col_line, row_line)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .geometry import Cut, CutKind, Point, RectilinearPolygon, normalize

_FOUR = ndimage.generate_binary_structure(2, 1)


@dataclass(frozen=True)
class Grid:
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.ys) - 1, len(self.xs) - 1

    def point(self, gp) -> Point:
        return Point(self.xs[gp[0]], self.ys[gp[1]])


def grid_of(P: RectilinearPolygon) -> Grid:
    return Grid(tuple(sorted({v.x for v in P.vertices})), tuple(sorted({v.y for v in P.vertices})))


def polygon_to_mask(P: RectilinearPolygon, grid: Grid | None = None) -> tuple[np.ndarray, Grid]:
    """Rasterize ``P`` onto ``grid`` (its own compressed grid by default)."""
    grid = grid or grid_of(P)
    H, W = grid.shape
    xi = {x: i for i, x in enumerate(grid.xs)}
    yi = {y: j for j, y in enumerate(grid.ys)}
    toggles = np.zeros((H, W + 1), dtype=np.uint8)
    for a, b in P.edges():
        if a.x == b.x:
            lo, hi = sorted((yi[a.y], yi[b.y]))
            toggles[lo:hi, xi[a.x]] ^= 1
    mask = (np.cumsum(toggles, axis=1)[:, :W] % 2).astype(bool)
    return mask, grid


def corner_sums(mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per grid point: number of occupied incident cells, and a diagonal-pinch flag."""
    H, W = mask.shape
    p = np.zeros((H + 2, W + 2), dtype=np.int8)
    p[1:-1, 1:-1] = mask
    a, b, c, d = p[:-1, :-1], p[:-1, 1:], p[1:, :-1], p[1:, 1:]
    s = a + b + c + d
    pinch = (s == 2) & (a == d)
    # transpose so that indexing is [col_line, row_line]
    return s.T, pinch.T


def vertex_count(mask: np.ndarray) -> int:
    s, _ = corner_sums(mask)
    return int(np.count_nonzero((s == 1) | (s == 3)))


def region_stats(mask: np.ndarray) -> tuple[bool, int]:
    """(is a simple polyomino, vertex count) for a cell mask."""
    if not mask.any():
        return False, 0
    s, pinch = corner_sums(mask)
    convex = int(np.count_nonzero(s == 1))
    reflex = int(np.count_nonzero(s == 3))
    if pinch.any() or convex - reflex != 4:
        return False, convex + reflex
    _, k = ndimage.label(mask, structure=_FOUR)
    return k == 1, convex + reflex


def is_simple_region(mask: np.ndarray) -> bool:
    return region_stats(mask)[0]


def mask_to_polygon(mask: np.ndarray, grid: Grid) -> RectilinearPolygon:
    """Trace the boundary of a simple cell region back into a polygon."""
    H, W = mask.shape
    p = np.zeros((H + 2, W + 2), dtype=bool)
    p[1:-1, 1:-1] = mask
    nxt = {}
    # horizontal unit edges on row line r: cell below is p[r, .], above p[r+1, .]
    below, above = p[:-1, 1:-1], p[1:, 1:-1]
    for r, c in zip(*np.nonzero(above & ~below)):
        nxt[(c, r)] = (c + 1, r)
    for r, c in zip(*np.nonzero(below & ~above)):
        nxt[(c + 1, r)] = (c, r)
    left, right = p[1:-1, :-1], p[1:-1, 1:]
    for r, c in zip(*np.nonzero(right & ~left)):
        nxt[(c, r + 1)] = (c, r)
    for r, c in zip(*np.nonzero(left & ~right)):
        nxt[(c, r)] = (c, r + 1)
    start = min(nxt)
    ring = [start]
    cur = nxt[start]
    while cur != start:
        ring.append(cur)
        cur = nxt[cur]
        if len(ring) > len(nxt):
            raise ValueError("boundary is not a single cycle")
    if len(ring) != len(nxt):
        raise ValueError("region boundary has several components")
    return normalize(grid.point((int(i), int(j))) for i, j in ring)


def shared_boundary(m1: np.ndarray, m2: np.ndarray) -> list[tuple[int, int]] | None:
    """Grid-point polyline where two cell regions meet, or None if not a simple path."""
    adj: dict[tuple[int, int], list[tuple[int, int]]] = {}

    def link(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    h = (m1[:-1, :] & m2[1:, :]) | (m2[:-1, :] & m1[1:, :])
    for r, c in zip(*np.nonzero(h)):
        link((int(c), int(r) + 1), (int(c) + 1, int(r) + 1))
    v = (m1[:, :-1] & m2[:, 1:]) | (m2[:, :-1] & m1[:, 1:])
    for r, c in zip(*np.nonzero(v)):
        link((int(c) + 1, int(r)), (int(c) + 1, int(r) + 1))
    if not adj:
        return None
    ends = [u for u, nb in adj.items() if len(nb) == 1]
    if len(ends) != 2 or any(len(nb) > 2 for nb in adj.values()):
        return None
    path = [min(ends)]
    prev = None
    while True:
        cur = path[-1]
        step = [w for w in adj[cur] if w != prev]
        if not step:
            break
        prev = cur
        path.append(step[0])
    if len(path) != len(adj):
        return None
    return path


def simplify_path(path):
    out = [path[0]]
    for i in range(1, len(path) - 1):
        a, b, c = out[-1], path[i], path[i + 1]
        if (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1]):
            continue
        out.append(b)
    out.append(path[-1])
    return out


def classify_cut(host_mask: np.ndarray, path, s=None) -> CutKind | None:
    """Kind of the cut along a grid path of ``host_mask``, None if it is not a valid cut."""
    if s is None:
        s, _ = corner_sums(host_mask)
    e0, e1 = path[0], path[-1]
    for p in path[1:-1]:
        if s[p] != 4:
            return None
    if s[e0] not in (2, 3) or s[e1] not in (2, 3):
        return None
    nref = int(s[e0] == 3) + int(s[e1] == 3)
    corners = simplify_path(path)
    if len(corners) == 2:
        return {2: CutKind.TWO, 1: CutKind.ONE}.get(nref)
    if len(corners) == 3 and nref == 2:
        return CutKind.L
    return None


def cut_from_masks(host_mask, m1, m2, grid: Grid, s=None) -> Cut | None:
    path = shared_boundary(m1, m2)
    if path is None:
        return None
    kind = classify_cut(host_mask, path, s)
    if kind is None:
        return None
    return Cut(kind, tuple(grid.point(p) for p in simplify_path(path)))
