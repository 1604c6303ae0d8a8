"""Deterministic random polyominoes and a few hand-built fixtures."""

from __future__ import annotations

import numpy as np

from .geometry import RectilinearPolygon, normalize
from .raster import Grid, mask_to_polygon, region_stats

BUDGET = 10_000

# grid sizes used by the generator: small grids give many aligned reflex
# vertices (2-cuts, pockets, corridors), large ones are nearly in general position
_GRID_SIZES = (6, 9, 14, 40)
# proposals without growth before starting over from a fresh rectangle
_STALL = 1500


class GenerationBudgetExceeded(RuntimeError):
    pass


def _seed_rect(rng, G: int) -> np.ndarray:
    mask = np.zeros((G, G), dtype=bool)
    h, w = (int(v) for v in rng.integers(1, max(2, G // 3) + 1, size=2))
    r, c = int(rng.integers(0, G - h + 1)), int(rng.integers(0, G - w + 1))
    mask[r:r + h, c:c + w] = True
    return mask


def generate(target_n: int, seed: int, grid_size: int | None = None) -> RectilinearPolygon:
    """A random simple polyomino with exactly ``target_n`` vertices.

    Rectangles are added to or carved out of a cell mask; a step is kept when
    the region stays a simple polyomino with at most ``target_n`` vertices.
    Starts over after a long stall and gives up after ``BUDGET`` proposals.
    """
    if target_n < 4 or target_n % 2:
        raise ValueError(f"target_n must be even and >= 4, got {target_n}")
    rng = np.random.default_rng([seed, target_n])
    if grid_size is None:
        base = _GRID_SIZES[int(rng.integers(len(_GRID_SIZES)))]
        grid_size = max(base, int(np.ceil(np.sqrt(target_n) * 3)))
    G = grid_size
    maxside = max(2, G // 4)
    mask, n, stall = _seed_rect(rng, G), 4, 0
    for _ in range(BUDGET):
        if n == target_n:
            grid = Grid(tuple(range(G + 1)), tuple(range(G + 1)))
            return mask_to_polygon(mask, grid)
        if stall > _STALL:
            mask, n, stall = _seed_rect(rng, G), 4, 0
        stall += 1
        cells = np.argwhere(mask)
        ar, ac = cells[int(rng.integers(len(cells)))]
        h, w = (int(v) for v in rng.integers(1, maxside + 1, size=2))
        dr, dc = int(rng.integers(-h + 1, 1)), int(rng.integers(-w + 1, 1))
        r0, c0 = ar + dr + int(rng.integers(-1, 2)), ac + dc + int(rng.integers(-1, 2))
        r0, c0 = max(0, min(G - h, r0)), max(0, min(G - w, c0))
        trial = mask.copy()
        carve = n >= target_n - 2 and rng.random() < 0.3 or rng.random() < 0.25
        trial[r0:r0 + h, c0:c0 + w] = not carve
        if np.array_equal(trial, mask):
            continue
        ok, m = region_stats(trial)
        if ok and m <= target_n:
            if m > n:
                stall = 0
            mask, n = trial, m
    raise GenerationBudgetExceeded(f"no {target_n}-vertex polyomino after {BUDGET} steps (seed {seed})")


def suite(count: int = 1000, n_values=range(10, 62, 2), seed: int = 0) -> list[RectilinearPolygon]:
    """The default test suite: ``count`` polygons cycling through ``n_values``."""
    ns = list(n_values)
    return [generate(ns[i % len(ns)], seed * 1_000_003 + i) for i in range(count)]


def to_text(P: RectilinearPolygon) -> str:
    return f"{P.n}\n" + "".join(f"{v.x} {v.y}\n" for v in P.vertices)


# --- fixtures ----------------------------------------------------------------------


def _poly(pts) -> RectilinearPolygon:
    return normalize(pts)


def rectangle(w: int = 4, h: int = 3) -> RectilinearPolygon:
    return _poly([(0, 0), (w, 0), (w, h), (0, h)])


def l_shape() -> RectilinearPolygon:
    return _poly([(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)])


def u_shape() -> RectilinearPolygon:
    return _poly([(0, 0), (6, 0), (6, 4), (4, 4), (4, 2), (2, 2), (2, 4), (0, 4)])


def t_shape() -> RectilinearPolygon:
    return _poly([(2, 0), (4, 0), (4, 3), (6, 3), (6, 5), (0, 5), (0, 3), (2, 3)])


def z_shape() -> RectilinearPolygon:
    return _poly([(0, 0), (4, 0), (4, 2), (6, 2), (6, 4), (2, 4), (2, 2), (0, 2)])


def plus_shape() -> RectilinearPolygon:
    return _poly([(2, 0), (4, 0), (4, 2), (6, 2), (6, 4), (4, 4), (4, 6), (2, 6),
                  (2, 4), (0, 4), (0, 2), (2, 2)])


def staircase(steps: int = 4) -> RectilinearPolygon:
    pts = [(0, 0), (steps, 0)]
    for k in range(steps, 0, -1):
        pts += [(k, steps - k + 1), (k - 1, steps - k + 1)]
    return _poly(pts[:-1] + [(0, steps)])


def fourteen_gon() -> RectilinearPolygon:
    """No straight cut leaves both parts with at most 8 vertices; one L-cut splits it 8 + 8."""
    return _poly([(0, 0), (4, 0), (4, 5), (5, 5), (5, 7), (2, 7), (2, 5), (1, 5), (1, 9),
                  (0, 9), (0, 3), (1, 3), (1, 2), (0, 2)])


def gallery_52() -> RectilinearPolygon:
    """A 52-vertex polyomino on a 14 x 14 grid, used as a worked example."""
    return _poly([(0, 1), (6, 1), (6, 3), (8, 3), (8, 2), (11, 2), (11, 0), (12, 0), (12, 3),
                  (14, 3), (14, 5), (11, 5), (11, 6), (10, 6), (10, 8), (11, 8), (11, 7), (12, 7),
                  (12, 8), (14, 8), (14, 10), (13, 10), (13, 11), (12, 11), (12, 13), (10, 13),
                  (10, 14), (9, 14), (9, 12), (8, 12), (8, 10), (10, 10), (10, 9), (7, 9), (7, 12),
                  (4, 12), (4, 14), (3, 14), (3, 12), (1, 12), (1, 11), (0, 11), (0, 10), (2, 10),
                  (2, 9), (3, 9), (3, 7), (2, 7), (2, 6), (1, 6), (1, 8), (0, 8)])
