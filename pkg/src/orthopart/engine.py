"""Good-cut search and the recursive partition into pieces of at most 8 vertices.

The search follows a fixed case order on the horizontal cut tree:

* ``case1``  the tree is a path;
* ``case2``  some rectangle is a corridor;
* ``case3``  no corridor, but a pocket;
* ``case4``  everything else, split into ``4.1`` (a high-degree rectangle
  whose top or bottom side lies inside one neighbour) and ``4.2``.

Each branch builds a short nested family of candidate regions (part 1 of a
cut-system) as cell masks, then keeps the first member whose cut is
admissible and satisfies the bound inequality.  Nothing a branch claims is
trusted: every returned cut is re-evaluated from the masks, and ``partition``
re-splits the polygon exactly before recursing.

Orientation-dependent branches run on flipped or transposed views of the
host mask, so each is written once for the picture where the interesting
neighbour sits on top and to the left.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import ndimage

from . import residues
from .cuttree import MaskTree, mask_tree
from .geometry import (
    INSIDE,
    OUTSIDE,
    Cut,
    RectilinearPolygon,
    locate,
    split,
)
from .raster import (
    Grid,
    corner_sums,
    cut_from_masks,
    mask_to_polygon,
    polygon_to_mask,
    region_stats,
    vertex_count,
)
from .residues import SizedCut, bound, is_induction_good

logger = logging.getLogger(__name__)

_FOUR = ndimage.generate_binary_structure(2, 1)


class NoGoodCutFound(RuntimeError):
    """Raised when the case analysis fails; carries the offending polygon."""

    def __init__(self, P: RectilinearPolygon, attempts):
        self.polygon = P
        self.attempts = attempts
        super().__init__(f"no good cut for n={P.n}: {P}")

    def dump(self) -> str:
        lines = [f"{self.polygon.n}"] + [f"{v.x} {v.y}" for v in self.polygon.vertices]
        lines.append("# attempted branches: " + ", ".join(self.attempts))
        return "\n".join(lines) + "\n"


class AnchorInWrongPart(ValueError):
    pass


class AnchorNotInKernel(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class LabeledCut:
    cut: Cut
    part1: RectilinearPolygon
    part2: RectilinearPolygon

    @property
    def n1(self) -> int:
        return self.part1.n

    @property
    def n2(self) -> int:
        return self.part2.n


@dataclass(frozen=True)
class AppliedCut:
    host: str
    cut: LabeledCut
    label: str


@dataclass
class PartitionResult:
    pieces: list
    cuts_applied: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.pieces)


def fingerprint(P: RectilinearPolygon) -> str:
    return ";".join(f"{v.x},{v.y}" for v in P.vertices)


# --- host and views -------------------------------------------------------


@dataclass
class Candidate:
    m1: np.ndarray
    m2: np.ndarray
    n1: int
    n2: int
    cut: Cut
    good: bool


class Host:
    """A polygon rasterized on its own grid, with a cache of evaluated regions."""

    def __init__(self, P: RectilinearPolygon):
        self.P = P
        self.n = P.n
        self.mask, self.grid = polygon_to_mask(P)
        self.corner_s, _ = corner_sums(self.mask)
        self._cache: dict = {}
        self._views: dict = {}

    def view(self, tr=False, fx=False, fy=False) -> "View":
        key = (tr, fx, fy)
        v = self._views.get(key)
        if v is None:
            v = self._views[key] = View(self, tr, fx, fy)
        return v

    def evaluate(self, part1: np.ndarray) -> Optional[Candidate]:
        m1 = part1 & self.mask
        key = m1.tobytes()
        if key in self._cache:
            return self._cache[key]
        res = None
        m2 = self.mask & ~m1
        if m1.any() and m2.any():
            # a single interior boundary-to-boundary path splits a simple region
            # into two simple regions, so no connectivity test is needed here
            cut = cut_from_masks(self.mask, m1, m2, self.grid, self.corner_s)
            if cut is not None:
                n1, n2 = vertex_count(m1), vertex_count(m2)
                if n1 + n2 == self.n + cut.kind.size_excess:
                    res = Candidate(m1, m2, n1, n2, cut, is_induction_good(self.n, n1, n2))
        self._cache[key] = res
        return res

    def labeled(self, c: Candidate) -> LabeledCut:
        """Exact split along the candidate cut, labelled to match the cell regions."""
        parts = split(self.P, c.cut)
        xs, ys = np.diff(self.grid.xs), np.diff(self.grid.ys)
        area1 = int((np.outer(ys, xs) * c.m1).sum())
        p1, p2 = parts.part1, parts.part2
        if p1.area() != area1 or (p1.area() == p2.area() and not self._holds(p1, c.m1)):
            p1, p2 = p2, p1
        if (p1.n, p2.n, p1.area()) != (c.n1, c.n2, area1):
            raise AssertionError(f"exact split disagrees with the cell split at {c.cut}")
        return LabeledCut(c.cut, p1, p2)

    def _holds(self, Q: RectilinearPolygon, m: np.ndarray) -> bool:
        r, col = np.argwhere(m)[0]
        xs, ys = self.grid.xs, self.grid.ys
        centre = (Fraction(xs[col] + xs[col + 1], 2), Fraction(ys[r] + ys[r + 1], 2))
        return locate(Q, centre) == INSIDE


class View:
    """The host mask seen through a transpose and/or flips, with its own tree."""

    def __init__(self, host: Host, tr: bool, fx: bool, fy: bool):
        self.host = host
        self.tr, self.fx, self.fy = tr, fx, fy
        m = host.mask.T if tr else host.mask
        if fx:
            m = m[:, ::-1]
        if fy:
            m = m[::-1, :]
        self.mask = np.ascontiguousarray(m)
        self.tree: MaskTree = mask_tree(self.mask)
        self.index = {r: i for i, r in enumerate(self.tree.rects)}

    def to_host(self, m: np.ndarray) -> np.ndarray:
        if self.fy:
            m = m[::-1, :]
        if self.fx:
            m = m[:, ::-1]
        if self.tr:
            m = m.T
        return m

    def evaluate(self, m: np.ndarray) -> Optional[Candidate]:
        return self.host.evaluate(self.to_host(m))

    def map_node(self, other: "View", i: int) -> int:
        """Id in this view of node ``i`` of another view with the same transpose flag."""
        assert other.tr == self.tr
        r0, r1, c0, c1 = other.tree.rects[i]
        H, W = self.mask.shape
        if other.fx != self.fx:
            c0, c1 = W - c1, W - c0
        if other.fy != self.fy:
            r0, r1 = H - r1, H - r0
        return self.index[(r0, r1, c0, c1)]


class Found(Exception):
    """Internal control flow: a branch located a good cut."""

    def __init__(self, cand: Candidate, label: str):
        self.cand = cand
        self.label = label


# --- the search -------------------------------------------------------------


class Search:
    def __init__(self, P: RectilinearPolygon):
        self.host = Host(P)
        self.base = self.host.view()
        self.attempts: list[str] = []
        self.systems: list = []

    # helpers

    def pick(self, view: View, masks, label: str):
        """Raise Found with the first good cut among ``masks`` (a nested family)."""
        self.attempts.append(label)
        cands = []
        for m in masks:
            if m is None:
                continue
            c = view.evaluate(m)
            if c is not None:
                cands.append(c)
        if not cands:
            return
        n = self.host.n
        sized = [SizedCut(c.n1, c.cut.kind, j) for j, c in enumerate(cands)]
        try:
            system = residues.check_cut_system(sized, n)
            self.systems.append((label, system))
            chosen = cands[residues.extract_good_cut(system, n).tag]
            raise Found(chosen, label)
        except (residues.ResidueConditionFails, residues.NotNested):
            pass
        for c in cands:
            if c.good:
                raise Found(c, label)

    @staticmethod
    def anchors(t: MaskTree, i: int) -> dict:
        r0, r1, c0, c1 = t.rects[i]
        return {"TL": (r1 - 1, c0), "TR": (r1 - 1, c1 - 1), "BL": (r0, c0), "BR": (r0, c1 - 1)}

    def extend(self, t: MaskTree, i: int, masks, corners) -> list:
        """Reattach corner regions of rectangle ``i``."""
        anchors = self.anchors(t, i)
        out = []
        for m in masks:
            m = m.copy()
            base = m.copy()
            for corner in corners:
                reg = t.corner_region(i, corner)
                if reg is None:
                    continue
                if base[anchors[corner]]:
                    m |= reg
            out.append(m)
        return out

    def claim_a(self, v: View, R: int, label: str):
        t = v.tree
        if t.deg(R) != 2:
            return
        k1, k2 = t.adj[R]
        for ka, kb in ((k1, k2), (k2, k1)):
            if t.edges[ka].t == 0:
                far = t.edges[ka].other(R)
                self.pick(v, [t.side(ka, far), t.side(kb, R)], label)

    def claim_b(self, v: View, R1: int, R2: int, label: str):
        t = v.tree
        if t.deg(R1) != 2 or t.deg(R2) != 2:
            return
        (e2,) = [k for k in t.adj[R1] if t.edges[k].other(R1) == R2]
        (e1,) = [k for k in t.adj[R1] if k != e2]
        (f,) = [k for k in t.adj[R2] if k != e2]
        T1 = t.edges[e1].other(R1)
        self.pick(v, [t.side(e1, T1), t.side(e2, R1), t.side(f, R2)], label)

    def path_claims(self, v: View, label: str):
        t = v.tree
        for R in t.order():
            if t.deg(R) == 2 and any(t.edges[k].t == 0 for k in t.adj[R]):
                self.claim_a(v, R, f"{label}:claimA")
        for R1 in t.order():
            if t.deg(R1) != 2:
                continue
            for k in t.adj[R1]:
                R2 = t.edges[k].other(R1)
                if t.deg(R2) == 2 and R1 < R2:
                    self.claim_b(v, R1, R2, f"{label}:claimB")

    # case 1 ---------------------------------------------------------------

    def case1(self):
        self.path_claims(self.base, "case1")

    # case 2 ---------------------------------------------------------------

    def case2(self):
        t0 = self.base.tree
        for R0 in t0.corridors():
            for k0 in t0.adj[R0]:
                if not t0.covers_side(k0, R0):
                    continue
                Rp0 = t0.edges[k0].other(R0)
                fy = t0.edges[k0].hi == R0  # wider neighbour below: flip it on top
                self.corridor(R0, Rp0, fy)

    def corridor(self, R0: int, Rp0: int, fy: bool):
        v = self.host.view(fy=fy)
        t = v.tree
        R, Rp = v.map_node(self.base, R0), v.map_node(self.base, Rp0)
        (e,) = [k for k in t.top_edges(R) if t.edges[k].other(R) == Rp]
        P1e = t.side(e, Rp)
        self.pick(v, [P1e], "case2a")
        if t.deg(R) == 2:
            self.claim_a(v, R, "case2b")
        for fx in (False, True):
            w = self.host.view(fx=fx, fy=fy)
            wt = w.tree
            WR, WRp = w.map_node(v, R), w.map_node(v, Rp)
            if wt.corner(WR, "BL") is None:
                (we,) = [k for k in wt.top_edges(WR) if wt.edges[k].other(WR) == WRp]
                first = wt.edges[wt.bottom_edges(WR)[0]]
                _, _, i0, _ = wt.rects[WR]
                assert first.c0 > i0
                self.pick(w, [wt.side(we, WRp) | wt.slice_mask(WR, i0, first.c0)], "case2c")
        for fx in (False, True):
            w = self.host.view(fx=fx, fy=fy)
            self.corridor_d(w, w.map_node(v, R), w.map_node(v, Rp))

    def corridor_d(self, w: View, R: int, Rp: int):
        t = w.tree
        bots = t.bottom_edges(R)
        bl = t.corner(R, "BL")
        if bl is None or len(bots) < 2 or bots[0] != bl:
            return
        (e,) = [k for k in t.top_edges(R) if t.edges[k].other(R) == Rp]
        P1e = t.side(e, Rp)
        _, _, i0, i1 = t.rects[R]
        E = t.edges[bl]
        S = E.other(R)
        a, b = E.c1, t.edges[bots[1]].c0
        RBL = t.side(bl, S)
        Q1, Q2 = t.slice_mask(R, i0, a), t.slice_mask(R, a, b)
        Q3 = t.slice_mask(R, b, i1)
        for k in bots[1:]:
            Q3 = Q3 | t.side(k, t.edges[k].other(R))
        L = [RBL, RBL | Q1, RBL | Q1 | Q2]
        if E.t == 0:
            self.pick(w, L, "case2d:t0")
            return
        self.pick(w, L, "case2d")
        self.pick(w, [Q3, Q3 | Q2], "case2d")
        if t.deg(S) == 2:
            (e2,) = [k for k in t.adj[S] if k != bl]
            self.pick(w, [t.side(e2, t.edges[e2].other(S))], "case2d:S2")
        elif t.deg(S) >= 3:
            sb = t.bottom_edges(S)
            if len(sb) < 2:
                return
            _, _, s0, s1 = t.rects[S]
            m = t.edges[sb[0]]
            m1, c = m.c1, t.edges[sb[1]].c0
            Q4 = t.slice_mask(S, s0, m1) | t.side(sb[0], m.other(S))
            Q5 = t.slice_mask(S, m1, c)
            Q6 = t.slice_mask(S, c, s1)
            for k in sb[1:]:
                Q6 = Q6 | t.side(k, t.edges[k].other(S))
            L8 = Q4 | Q5 | t.slice_mask(R, i0, c)
            L9 = w.mask & ~(L8 | P1e)
            self.pick(w, [Q6, Q5 | Q6], "case2d:S3")
            self.pick(w, [L8], "case2d:S3")
            self.pick(w, [L9], "case2d:S3")

    # case 3 ---------------------------------------------------------------

    def case3(self):
        t0 = self.base.tree
        for S0 in t0.pockets():
            (k0,) = t0.adj[S0]
            R0 = t0.edges[k0].other(S0)
            if t0.deg(R0) == 2:
                self.claim_a(self.base, R0, "case3:claimA")
                continue
            pockets = [t0.edges[k].other(R0) for k in t0.adj[R0]
                       if t0.deg(t0.edges[k].other(R0)) == 1 and t0.covers_side(k, t0.edges[k].other(R0))]
            if len(pockets) >= 2:
                self.case3_many(R0, pockets)
            else:
                self.case3_one(R0, S0)

    def case3_many(self, R: int, pockets):
        t = self.base.tree
        U = t.union([R] + pockets)
        tu = mask_tree(np.ascontiguousarray(U.T))
        # the vertical tree of U is a path of column blocks, left to right
        path = sorted(range(len(tu.rects)), key=lambda j: tu.rects[j][0])
        blocks = [tu.node_mask(j).T for j in path]
        if len(blocks) < 3:
            return
        if len(blocks) == 3:
            masks = [blocks[0], blocks[0] | blocks[1]]
        else:
            masks = [blocks[0], blocks[0] | blocks[1], blocks[0] | blocks[1] | blocks[2]]
        masks = self.extend(t, R, masks, ("BL", "TL", "BR", "TR"))
        self.pick(self.base, masks, "case3.1")
        # the mirrored reading of the same path
        blocks = blocks[::-1]
        masks = [blocks[0], blocks[0] | blocks[1], blocks[0] | blocks[1] | blocks[2]]
        self.pick(self.base, self.extend(t, R, masks, ("BL", "TL", "BR", "TR")), "case3.1")

    def case3_one(self, R0: int, S0: int):
        t0 = self.base.tree
        (k0,) = t0.adj[S0]
        fy = t0.edges[k0].lo == S0  # pocket below R: flip it on top
        for fx in (False, True):
            v = self.host.view(fx=fx, fy=fy)
            t = v.tree
            R, S = v.map_node(self.base, R0), v.map_node(self.base, S0)
            _, _, i0, i1 = t.rects[R]
            _, _, s0, s1 = t.rects[S]
            Sm = t.node_mask(S)
            tl = t.corner(R, "TL")
            if tl is None:
                continue
            q1 = t.edges[tl].c1
            masks = [t.slice_mask(R, s1, i1), t.slice_mask(R, s0, i1) | Sm, t.slice_mask(R, q1, i1) | Sm]
            self.pick(v, self.extend(t, R, masks, ("BL", "BR", "TR")), "case3.2:TL")
        for fx in (False, True):
            v = self.host.view(fx=fx, fy=fy)
            t = v.tree
            R, S = v.map_node(self.base, R0), v.map_node(self.base, S0)
            _, _, i0, i1 = t.rects[R]
            _, _, s0, s1 = t.rects[S]
            Sm = t.node_mask(S)
            masks = [t.slice_mask(R, s1, i1), t.slice_mask(R, s0, i1) | Sm, t.node_mask(R) | Sm]
            self.pick(v, self.extend(t, R, masks, ("BR",)), "case3.2:B")

    # case 4 ---------------------------------------------------------------

    def case4(self):
        t0 = self.base.tree
        high = [i for i in t0.order() if t0.deg(i) >= 3]
        self.case41(high)
        self.case42(high)

    def case41(self, high):
        t0 = self.base.tree
        cands = []
        for R in high:
            _, _, i0, i1 = t0.rects[R]
            for k in t0.adj[R]:
                Rp = t0.edges[k].other(R)
                q0, q1 = t0.rects[Rp][2], t0.rects[Rp][3]
                if q0 <= i0 and q1 >= i1:
                    side = t0.side_nodes(k, R)
                    area = int(t0.union(side).sum())
                    cands.append((area, t0.rects[R][0], t0.rects[R][2], R, Rp, k))
        for _, _, _, R0, Rp0, k0 in sorted(cands):
            fy = t0.edges[k0].hi == R0
            fx = t0.rects[Rp0][2] == t0.rects[R0][2]  # flush left: mirror to flush right
            v = self.host.view(fx=fx, fy=fy)
            t = v.tree
            R, Rp = v.map_node(self.base, R0), v.map_node(self.base, Rp0)
            bots = t.bottom_edges(R)
            bl = t.corner(R, "BL")
            if bl is None or len(bots) < 2 or bots[0] != bl:
                continue
            _, _, i0, i1 = t.rects[R]
            E = t.edges[bl]
            S = E.other(R)
            a, b = E.c1, t.edges[bots[1]].c0
            RBL = t.side(bl, S)
            self.pick(v, [RBL, RBL | t.slice_mask(R, i0, a), RBL | t.slice_mask(R, i0, b)], "case4.1")
            if t.deg(S) == 1:
                q0 = t.rects[Rp][2]
                Sm = t.node_mask(S)
                masks = [
                    t.slice_mask(Rp, q0, i0),
                    t.slice_mask(Rp, q0, a) | t.slice_mask(R, i0, a) | Sm,
                    t.slice_mask(Rp, q0, b) | t.slice_mask(R, i0, b) | Sm,
                ]
                self.pick(v, self.extend(t, Rp, masks, ("TL", "BL", "TR")), "case4.1.1")
            elif t.deg(S) == 2:
                (f,) = [k for k in t.adj[S] if k != bl]
                self.pick(v, [t.side(f, t.edges[f].other(S))], "case4.1.2")

    def opposite(self, R0: int, label: str):
        """Two nested cuts around a high-degree rectangle, in every orientation."""
        for fx in (False, True):
            for fy in (False, True):
                v = self.host.view(fx=fx, fy=fy)
                t = v.tree
                R = v.map_node(self.base, R0)
                ks = {c: t.corner(R, c) for c in ("BL", "BR", "TR")}
                if any(k is None for k in ks.values()):
                    continue
                _, _, i0, i1 = t.rects[R]
                a, b = t.edges[ks["BL"]].c1, t.edges[ks["BR"]].c0
                right = t.corner_region(R, "BR") | t.corner_region(R, "TR")
                self.pick(v, [t.slice_mask(R, b, i1) | right, t.slice_mask(R, a, i1) | right], label)

    def case42(self, high):
        t = self.base.tree
        for R in high:
            for k in t.adj[R]:
                S = t.edges[k].other(R)
                if t.deg(S) == 2:
                    self.claim_a(self.base, S, "case4.2:claimA")
                for kk in t.adj[S]:
                    self.pick(self.base, [t.side(kk, t.edges[kk].other(S))], "case4.2:edge")
        if len(high) >= 2:
            self.case421(high)
        self.path_claims(self.base, "case4.2.2")
        for R in high:
            self.opposite(R, "case4.2.2:opposite")
        self.endgame(high)

    def case421(self, high):
        t = self.base.tree
        keep = set(range(len(t.rects)))
        hs = set(high)
        changed = True
        while changed:
            changed = False
            for i in sorted(keep):
                nb = [t.edges[k].other(i) for k in t.adj[i] if t.edges[k].other(i) in keep]
                if len(nb) <= 1 and i not in hs:
                    keep.discard(i)
                    changed = True

        def tnb(i):
            return [t.edges[k].other(i) for k in t.adj[i] if t.edges[k].other(i) in keep]

        leaves = [i for i in t.order() if i in keep and len(tnb(i)) == 1]
        for R in leaves:
            (S,) = tnb(R)
            if t.deg(S) >= 3:
                Q = S
            else:
                (Q,) = [x for x in tnb(S) if x != R]
                if t.deg(Q) == 2:
                    self.claim_b(self.base, S, Q, "case4.2.1:claimB")
                    continue
            self.opposite(Q, "case4.2.1:opposite")

    def endgame(self, high):
        vt = self.host.view(tr=True)
        self.path_claims(vt, "case4.2.2:vertical")
        for R0 in high:
            for fx in (False, True):
                for fy in (False, True):
                    v = self.host.view(fx=fx, fy=fy)
                    t = v.tree
                    R = v.map_node(self.base, R0)
                    k = t.corner(R, "BR")
                    if k is None:
                        continue
                    RBR = t.corner_region(R, "BR")
                    rest = v.mask & ~RBR
                    tu = mask_tree(np.ascontiguousarray(rest.T))
                    if not tu.is_path():
                        continue
                    anchor = self.anchors(t, R)["BR"]
                    order = sorted(range(len(tu.rects)), key=lambda j: tu.rects[j][0])
                    blocks = [tu.node_mask(j).T for j in order]
                    for seq in (blocks, blocks[::-1]):
                        for size in (2, 3):
                            fam = []
                            acc = np.zeros_like(v.mask)
                            for blk in seq[:size]:
                                acc = acc | blk
                                fam.append(acc.copy())
                            fam = [m | RBR if m[anchor] else m for m in fam]
                            self.pick(v, fam, "case4.2.2:trim")
        self.l_search("case4.2.2:L")

    # last resort ------------------------------------------------------------

    def l_search(self, label: str):
        """Every straight tree cut and every interior two-segment cut between reflex vertices."""
        for v in (self.base, self.host.view(tr=True)):
            t = v.tree
            for k, e in enumerate(t.edges):
                self.pick(v, [t.side(k, e.lo)], label)
        s = self.host.corner_s
        mask = self.host.mask
        reflex = sorted((int(a), int(b)) for a, b in np.argwhere(s == 3))
        for ia, p in enumerate(reflex):
            for q in reflex[ia + 1:]:
                if p[0] == q[0] or p[1] == q[1]:
                    continue
                for bend in ((p[0], q[1]), (q[0], p[1])):
                    path = _grid_path(p, bend, q)
                    if any(s[g] != 4 for g in path[1:-1]):
                        continue
                    part = _split_cells(mask, path)
                    if part is not None:
                        self.pick(self.base, [part], label)

    def run(self) -> tuple[Candidate, str]:
        t = self.base.tree
        try:
            if t.is_path():
                self.case1()
            if t.corridors():
                self.case2()
            elif t.pockets():
                self.case3()
            elif not t.is_path():
                self.case4()
            self.l_search("fallback")
        except Found as f:
            return f.cand, f.label
        raise NoGoodCutFound(self.host.P, self.attempts)


def _grid_path(p, bend, q):
    out = [p]
    for a, b in ((p, bend), (bend, q)):
        dx = (b[0] > a[0]) - (b[0] < a[0])
        dy = (b[1] > a[1]) - (b[1] < a[1])
        cur = a
        while cur != b:
            cur = (cur[0] + dx, cur[1] + dy)
            out.append(cur)
    return out


def _split_cells(mask: np.ndarray, path) -> Optional[np.ndarray]:
    """Cells on one side of a grid polyline, found by flood fill with the polyline as a wall."""
    H, W = mask.shape
    big = np.zeros((2 * H + 1, 2 * W + 1), dtype=bool)
    big[1::2, 1::2] = mask
    big[1::2, 2:-1:2] = mask[:, :-1] & mask[:, 1:]
    big[2:-1:2, 1::2] = mask[:-1, :] & mask[1:, :]
    for (x0, y0), (x1, y1) in zip(path, path[1:]):
        if y0 == y1:
            big[2 * y0, 2 * min(x0, x1) + 1] = False
        else:
            big[2 * min(y0, y1) + 1, 2 * x0] = False
    lab, k = ndimage.label(big, structure=_FOUR)
    if k != 2:
        return None
    return lab[1::2, 1::2] == 1


# --- public API ---------------------------------------------------------------


def find_good_cut(P: RectilinearPolygon) -> tuple[LabeledCut, str]:
    """A cut of ``P`` (n > 8) whose parts satisfy the bound inequality, with its branch label."""
    if P.n <= 8:
        raise PreconditionViolated("polygons with at most 8 vertices need no cut")
    search = Search(P)
    cand, label = search.run()
    lc = search.host.labeled(cand)
    assert is_induction_good(P.n, lc.n1, lc.n2)
    return lc, label


def partition(P: RectilinearPolygon, trace=None) -> PartitionResult:
    """Split ``P`` recursively into at most bound(n) pieces of at most 8 vertices."""
    result = PartitionResult([])
    stack = [P]
    while stack:
        Q = stack.pop()
        if Q.n <= 8:
            result.pieces.append(Q)
            continue
        lc, label = find_good_cut(Q)
        result.cuts_applied.append(AppliedCut(fingerprint(Q), lc, label))
        if trace is not None:
            trace(Q, lc, label)
        stack.append(lc.part2)
        stack.append(lc.part1)
    assert result.count <= bound(P.n), (result.count, P.n)
    return result


def claim_opposite(P: RectilinearPolygon, R: int) -> list[LabeledCut]:
    """The two nested cuts around horizontal-tree node ``R`` (needs BL, BR, TR neighbours)."""
    search = Search(P)
    t = search.base.tree
    if t.deg(R) < 3 or t.corner(R, "BR") is None or t.corner(R, "TR") is None:
        raise PreconditionViolated("node needs degree >= 3 and both right-hand corner regions")
    if t.corner(R, "BL") is None:
        raise PreconditionViolated("node needs a bottom-left corner region")
    _, _, i0, i1 = t.rects[R]
    a, b = t.edges[t.corner(R, "BL")].c1, t.edges[t.corner(R, "BR")].c0
    right = t.corner_region(R, "BR") | t.corner_region(R, "TR")
    out = []
    for m in (t.slice_mask(R, b, i1) | right, t.slice_mask(R, a, i1) | right):
        c = search.host.evaluate(m)
        if c is None:
            raise PreconditionViolated("configuration does not give an admissible cut")
        out.append(search.host.labeled(c))
    return out


def _masks_on(grid: Grid, *polys):
    return [polygon_to_mask(Q, grid)[0] for Q in polys]


def _union_grid(*polys) -> Grid:
    xs = sorted({v.x for Q in polys for v in Q.vertices})
    ys = sorted({v.y for Q in polys for v in Q.vertices})
    return Grid(tuple(xs), tuple(ys))


def extend_partition(P, region, U_partition, anchor):
    """Attach ``region`` to the part of ``U`` holding ``anchor``; that part must be ``U1``."""
    U1, U2 = U_partition
    if locate(U1, anchor) == OUTSIDE or locate(U2, anchor) != OUTSIDE:
        raise AnchorInWrongPart(f"{anchor} is not in U1 alone")
    grid = _union_grid(P, region, U1, U2)
    mP, mR, m1, m2 = _masks_on(grid, P, region, U1, U2)
    new1 = m1 | mR
    if (new1 & m2).any() or not np.array_equal(new1 | m2, mP):
        raise ValueError("regions do not tile the host")
    ok1, n1 = region_stats(new1)
    ok2, n2 = region_stats(m2)
    if not (ok1 and ok2) or n1 + n2 > P.n + 2:
        raise ValueError("extension is not admissible")
    return mask_to_polygon(new1, grid), U2


def extend_cut_system(P, region, cuts, anchor):
    """Extend a nested cut-system of ``U = P - region`` whose kernel holds ``anchor``.

    With no region to attach the system is returned as it stands.
    """
    if region is None:
        return residues.check_cut_system([SizedCut(c.n1, c.cut.kind, c) for c in cuts], P.n)
    first, last = cuts[0], cuts[-1]

    def strictly_in(Q, other):
        return locate(Q, anchor) != OUTSIDE and locate(other, anchor) == OUTSIDE

    if not (strictly_in(first.part1, first.part2) or strictly_in(last.part2, last.part1)):
        raise AnchorNotInKernel(f"{anchor} is not in the kernel")
    grid = _union_grid(P, region, *[c.part1 for c in cuts], *[c.part2 for c in cuts])
    (mP, mR) = _masks_on(grid, P, region)
    out = []
    for c in cuts:
        m1, m2 = _masks_on(grid, c.part1, c.part2)
        if locate(c.part1, anchor) != OUTSIDE and locate(c.part2, anchor) == OUTSIDE:
            m1 = m1 | mR
        else:
            m2 = m2 | mR
        cut = cut_from_masks(mP, m1, m2, grid)
        if cut is None:
            raise ValueError("extension did not produce a cut")
        out.append(LabeledCut(cut, mask_to_polygon(m1, grid), mask_to_polygon(m2, grid)))
    sized = [SizedCut(c.n1, c.cut.kind, c) for c in out]
    return residues.check_cut_system(sized, P.n)
