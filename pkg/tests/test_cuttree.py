import numpy as np
import pytest

from orthopart.cuttree import (
    NotAdjacent,
    RectNode,
    _rect_points,
    build_cut_tree,
    corner_adjacency,
    find_corridors,
    find_pockets,
    t_value,
)
from orthopart.geometry import normalize, split
from orthopart.polygen import fourteen_gon, gallery_52, l_shape, plus_shape, rectangle, staircase, t_shape


def i_beam():
    # wide bottom bar, narrow waist, wide top bar
    return normalize([(0, 0), (6, 0), (6, 2), (4, 2), (4, 4), (6, 4), (6, 6), (0, 6), (0, 4),
                      (2, 4), (2, 2), (0, 2)])


def node(i, x0, y0, x1, y1):
    return RectNode(i, _rect_points(x0, y0, x1, y1))


def test_rectangle_tree():
    T = build_cut_tree(rectangle())
    assert len(T.nodes) == 1 and T.edges == []
    assert T.claim11_sum() == 4


def test_l_shape_tree():
    T = build_cut_tree(l_shape())
    assert len(T.nodes) == 2
    assert [e.t for e in T.edges] == [-2]
    assert T.claim11_sum() == 6


def test_plus_tree():
    T = build_cut_tree(plus_shape())
    assert len(T.nodes) == 3
    assert [e.t for e in T.edges] == [0, 0]
    assert T.claim11_sum() == 12


def test_tree_shape_and_tiling():
    P = gallery_52()
    for orient in ("horizontal", "vertical"):
        T = build_cut_tree(P, orient)
        assert len(T.edges) == len(T.nodes) - 1
        area = sum((R.x1 - R.x0) * (R.y1 - R.y0) for R in T.nodes)
        assert area == P.area()
        assert T.claim11_sum() == P.n


def test_t_value():
    assert t_value(node(0, 0, 0, 6, 2), node(1, 2, 2, 4, 4)) == 0  # 2-cut
    assert t_value(node(0, 0, 0, 4, 2), node(1, 0, 2, 2, 4)) == -2  # 1-cut
    assert t_value(node(0, 0, 0, 3, 1), node(1, 0, 1, 3, 2)) == -4  # rows of one rectangle
    assert t_value(node(1, 0, 2, 2, 4), node(0, 0, 0, 4, 2)) == -2  # order does not matter


def test_t_value_not_adjacent():
    with pytest.raises(NotAdjacent):
        t_value(node(0, 0, 0, 2, 2), node(1, 0, 3, 2, 5))
    with pytest.raises(NotAdjacent):
        t_value(node(0, 0, 0, 2, 2), node(1, 2, 2, 4, 4))  # corners touch only


def test_corner_adjacency_l_shape():
    T = build_cut_tree(l_shape())
    low = min(range(2), key=lambda i: T.nodes[i].y0)
    tl = corner_adjacency(T, low, "TL")
    assert tl.edge is not None and tl.region is not None
    assert tl.region.area() == 4
    assert corner_adjacency(T, low, "TR").edge is None


def test_corner_adjacency_rectangle_empty():
    T = build_cut_tree(rectangle())
    for c in ("TL", "TR", "BL", "BR"):
        adj = corner_adjacency(T, 0, c)
        assert adj.edge is None and adj.region is None


def test_corner_adjacency_corridor_is_empty():
    T = build_cut_tree(i_beam())
    (mid,) = find_corridors(T)
    assert (T.nodes[mid].x0, T.nodes[mid].x1) == (2, 4)
    for c in ("TL", "TR", "BL", "BR"):
        assert corner_adjacency(T, mid, c).edge is None


def test_corner_region_split_reproduces_parts():
    P = fourteen_gon()
    T = build_cut_tree(P)
    for R in range(len(T.nodes)):
        for c in ("TL", "TR", "BL", "BR"):
            adj = corner_adjacency(T, R, c)
            if adj.edge is None:
                continue
            r = split(P, adj.edge.cut)
            assert adj.region in (r.part1, r.part2)


def test_pockets():
    T = build_cut_tree(plus_shape())
    pockets = find_pockets(T)
    assert len(pockets) == 2
    assert sorted(T.nodes[i].y0 for i in pockets) == [0, 4]
    assert find_pockets(build_cut_tree(l_shape())) == []
    Tt = build_cut_tree(t_shape())
    (stem,) = find_pockets(Tt)
    assert (Tt.nodes[stem].x0, Tt.nodes[stem].x1) == (2, 4)


def test_corridors():
    assert find_corridors(build_cut_tree(staircase())) == []
    assert find_corridors(build_cut_tree(plus_shape())) == []
    assert len(find_corridors(build_cut_tree(i_beam()))) == 1


def test_pocket_and_corridor_disjoint(default_suite):
    for P in default_suite[:200]:
        T = build_cut_tree(P)
        assert not set(find_pockets(T)) & set(find_corridors(T))


def test_vertical_tree_of_l():
    T = build_cut_tree(l_shape(), "vertical")
    assert len(T.nodes) == 2 and [e.t for e in T.edges] == [-2]
    assert all(e.cut.polyline[0].x == e.cut.polyline[1].x for e in T.edges)


def test_bad_orientation():
    with pytest.raises(ValueError):
        build_cut_tree(rectangle(), "diagonal")


def test_mask_tree_tiles_mask():
    P = gallery_52()
    mt = build_cut_tree(P).mtree
    cover = np.zeros(mt.mask.shape, dtype=int)
    for r0, r1, c0, c1 in mt.rects:
        cover[r0:r1, c0:c1] += 1
    assert np.array_equal(cover, mt.mask.astype(int))
