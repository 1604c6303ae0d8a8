import pytest

from orthopart.cuttree import build_cut_tree
from orthopart.engine import (
    AnchorInWrongPart,
    AnchorNotInKernel,
    LabeledCut,
    NoGoodCutFound,
    PreconditionViolated,
    claim_opposite,
    extend_cut_system,
    extend_partition,
    find_good_cut,
    partition,
)
from orthopart.geometry import CutKind, split, transform
from orthopart.oracle import verify_partition
from orthopart.polygen import _poly, fourteen_gon, gallery_52, l_shape, rectangle, staircase, u_shape
from orthopart.raster import vertex_count
from orthopart.residues import bound, is_induction_good


def test_small_polygons_are_single_pieces():
    for P in (rectangle(), l_shape(), u_shape()):
        r = partition(P)
        assert r.pieces == [P] and r.cuts_applied == []


def test_fourteen_gon_needs_an_l_cut():
    r = partition(fourteen_gon())
    assert sorted(Q.n for Q in r.pieces) == [8, 8]
    (ac,) = r.cuts_applied
    assert ac.cut.cut.kind is CutKind.L


def test_gallery_52_within_bound():
    P = gallery_52()
    r = partition(P)
    assert r.count <= bound(P.n) == 10
    assert all(Q.n <= 8 for Q in r.pieces)
    assert verify_partition(P, r.pieces).ok


def test_find_good_cut_precondition():
    with pytest.raises(PreconditionViolated):
        find_good_cut(u_shape())


def test_find_good_cut_satisfies_inequality(default_suite):
    for P in default_suite[:150]:
        lc, _ = find_good_cut(P)
        assert lc.n1 + lc.n2 == P.n + lc.cut.kind.size_excess
        assert is_induction_good(P.n, lc.n1, lc.n2)


def test_staircase_is_a_path_case():
    P = staircase(6)
    _, label = find_good_cut(P)
    assert label.startswith("case1")


def test_partition_deterministic(default_suite):
    for P in default_suite[:40]:
        a, b = partition(P), partition(P)
        assert a.pieces == b.pieces
        assert [c.cut.cut for c in a.cuts_applied] == [c.cut.cut for c in b.cuts_applied]


def test_dihedral_images(default_suite):
    for P in default_suite[:60:3]:
        for g in range(8):
            Q = transform(P, g)
            r = partition(Q)
            assert r.count <= bound(Q.n)
            assert verify_partition(Q, r.pieces).ok


def test_every_case_family_occurs(suite_results):
    suite_results.results()
    seen = {lab.split(":")[0].split(".")[0] for labs in suite_results.labels for lab in labs}
    seen = {s.rstrip("abcd") for s in seen}
    assert {"case1", "case2", "case3", "case4"} <= seen


def test_fallback_never_fires(suite_results):
    suite_results.results()
    assert not any(lab == "fallback" for labs in suite_results.labels for lab in labs)


def test_no_good_cut_dump():
    e = NoGoodCutFound(u_shape(), ["case1", "case2"])
    lines = e.dump().splitlines()
    assert lines[0] == "8" and len(lines) == 10
    assert lines[-1].endswith("case1, case2")


# --- nested cuts around a high-degree node ------------------------------------


def test_claim_opposite_preconditions():
    with pytest.raises(PreconditionViolated):
        claim_opposite(l_shape(), 0)


def test_claim_opposite_sizes(default_suite):
    # with s the right-hand corner sizes plus their t-values, the two cuts
    # reach s + 2 and s + 4; a 2-cut stands for both n1 and n1 + 2
    checked = 0
    for P in default_suite[:300]:
        mt = build_cut_tree(P).mtree
        for R in range(len(mt.rects)):
            try:
                cuts = claim_opposite(P, R)
            except PreconditionViolated:
                continue
            s = 0
            for c in ("BR", "TR"):
                e = mt.corner(R, c)
                s += vertex_count(mt.side(e, mt.edges[e].other(R))) + mt.edges[e].t
            for want, lc in zip((s + 2, s + 4), cuts):
                reach = {lc.n1, lc.n1 + 2} if lc.cut.kind is CutKind.TWO else {lc.n1}
                assert want in reach
            checked += 1
    assert checked > 20


# --- extending partitions and cut systems -------------------------------------


def _l_with_foot():
    U1 = _poly([(0, 0), (4, 0), (4, 2), (0, 2)])
    U2 = _poly([(0, 2), (2, 2), (2, 4), (0, 4)])
    region = _poly([(-2, 0), (0, 0), (0, 2), (-2, 2)])
    P = _poly([(-2, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4), (0, 2), (-2, 2)])
    return P, region, U1, U2


def test_extend_partition_attaches_region():
    P, region, U1, U2 = _l_with_foot()
    V1, V2 = extend_partition(P, region, (U1, U2), (0, 0))
    assert V2 == U2
    assert V1 == _poly([(-2, 0), (4, 0), (4, 2), (-2, 2)])
    assert V1.n + V2.n <= P.n + 2


def test_extend_partition_wrong_anchor():
    P, region, U1, U2 = _l_with_foot()
    with pytest.raises(AnchorInWrongPart):
        extend_partition(P, region, (U1, U2), (1, 3))
    with pytest.raises(AnchorInWrongPart):
        extend_partition(P, region, (U1, U2), (0, 2))  # shared by both parts


def _staircase_system():
    U = staircase()
    cuts = []
    for e in build_cut_tree(U).edges:
        r = split(U, e.cut)
        cuts.append(LabeledCut(e.cut, r.part1, r.part2))
    cuts.sort(key=lambda c: c.n1)
    region = _poly([(-1, 0), (0, 0), (0, 1), (-1, 1)])
    P = _poly([(-1, 0)] + [(v.x, v.y) for v in U.vertices[1:]] + [(0, 1), (-1, 1)])
    return U, P, region, cuts


def test_extend_cut_system():
    U, P, region, cuts = _staircase_system()
    sys = extend_cut_system(P, region, cuts, (0, 0))
    assert [c.n1 for c in sys.cuts] == [4, 8, 10]
    for c in sys.cuts:
        lc = c.tag
        assert lc.n1 + lc.n2 == P.n + lc.cut.kind.size_excess
        assert lc.part1.area() + lc.part2.area() == P.area()


def test_extend_cut_system_identity_without_region():
    U, _, _, cuts = _staircase_system()
    sys = extend_cut_system(U, None, cuts, (0, 0))
    assert [c.tag for c in sys.cuts] == cuts


def test_extend_cut_system_anchor_outside_kernel():
    _, P, region, cuts = _staircase_system()
    with pytest.raises(AnchorNotInKernel):
        extend_cut_system(P, region, cuts, (2, 1))
