from fractions import Fraction

import pytest

from orthopart.geometry import (
    Cut,
    CutEndpointInvalid,
    CutKind,
    CutNotInterior,
    DegenerateArea,
    NonOrthogonalEdge,
    Point,
    PointOutside,
    SelfIntersecting,
    dihedral_inverse,
    normalize,
    reflex_vertices,
    sees,
    split,
    transform,
)
from orthopart.polygen import fourteen_gon, l_shape, plus_shape, rectangle, u_shape


def test_unit_square():
    P = normalize([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert P.n == 4
    assert reflex_vertices(P) == []


def test_clockwise_input_is_reversed():
    ccw = normalize([(0, 0), (1, 0), (1, 1), (0, 1)])
    cw = normalize([(0, 0), (0, 1), (1, 1), (1, 0)])
    assert cw == ccw


def test_collinear_vertex_merged():
    P, merged = normalize([(0, 0), (1, 0), (2, 0), (2, 1), (0, 1)], report=True)
    assert P.n == 4 and merged == 1
    assert Point(1, 0) not in P.vertices


def test_normalize_errors():
    with pytest.raises(NonOrthogonalEdge):
        normalize([(0, 0), (2, 1), (2, 2), (0, 2)])
    with pytest.raises(DegenerateArea):
        normalize([(0, 0), (2, 0), (1, 0), (1, 1), (0, 1)])  # spike back along the bottom
    with pytest.raises(DegenerateArea):
        # figure eight: the two lobes cancel
        normalize([(0, 0), (1, 0), (1, 2), (2, 2), (2, 1), (0, 1)])
    with pytest.raises(SelfIntersecting):
        # two squares sharing the corner (1, 1)
        normalize([(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (1, 2), (1, 1), (0, 1)])
    with pytest.raises(SelfIntersecting):
        # a slot whose far wall touches the outer edge
        normalize([(0, 0), (3, 0), (3, 3), (0, 3), (0, 2), (3, 2), (3, 1), (0, 1)])


def test_reflex_counts():
    assert reflex_vertices(rectangle()) == []
    assert len(reflex_vertices(l_shape())) == 1
    assert len(reflex_vertices(fourteen_gon())) == 5


def test_split_rectangle_rejects_any_cut():
    with pytest.raises(CutEndpointInvalid):
        split(rectangle(4, 3), Cut(CutKind.ONE, ((2, 0), (2, 3))))


def test_split_l_shape():
    L = l_shape()  # reflex vertex (2, 2)
    r = split(L, Cut(CutKind.ONE, ((0, 2), (2, 2))))
    assert (r.n1, r.n2) == (4, 4)
    assert r.part1.area() + r.part2.area() == L.area()


def test_split_fourteen_gon_l_cut():
    P = fourteen_gon()
    r = split(P, Cut(CutKind.L, ((1, 2), (2, 2), (2, 5))))
    assert (r.n1, r.n2) == (8, 8)
    assert r.part1.area() + r.part2.area() == P.area()


def test_split_rejects_cut_through_the_outside():
    U = u_shape()
    with pytest.raises(CutNotInterior):
        split(U, Cut(CutKind.TWO, ((2, 2), (4, 2))))  # runs along the notch floor
    P = fourteen_gon()
    with pytest.raises(CutNotInterior):
        # both ends reflex, but the bend (4, 3) sits on the boundary
        split(P, Cut(CutKind.L, ((1, 3), (4, 3), (4, 5))))


def test_cut_canonical_order():
    a = Cut(CutKind.ONE, ((2, 2), (0, 2)))
    b = Cut(CutKind.ONE, ((0, 2), (2, 2)))
    assert a == b


def test_transform_identity_and_inverse():
    P = plus_shape()
    assert transform(P, 0) == P
    for g in range(8):
        Q = transform(transform(P, g), dihedral_inverse(g))
        assert Q == P


def test_transform_rotates_l_reflex():
    L = l_shape()
    R = transform(L, 1)  # rotate 90
    assert reflex_vertices(R) == [Point(-2, 2)]


def test_transform_preserves_invariants():
    P = fourteen_gon()
    for g in range(8):
        Q = transform(P, g)
        assert Q.n == P.n and Q.area() == P.area()
        assert len(reflex_vertices(Q)) == len(reflex_vertices(P))


def test_sees_basic():
    R = rectangle(4, 3)
    assert sees(R, (1, 1), (3, 2))
    U = u_shape()
    assert not sees(U, (1, 4), (5, 4))  # arm tips across the notch
    assert sees(U, (1, 1), (1, 1))
    assert sees(U, (0, 0), (6, 0))  # along the boundary counts


def test_sees_symmetric_and_exact():
    U = u_shape()
    a, b = (Fraction(1, 3), Fraction(7, 2)), (Fraction(5, 2), Fraction(1, 2))
    assert sees(U, a, b) == sees(U, b, a)
    # grazing the reflex corner (2, 2) exactly is still inside
    assert sees(U, (0, 4), (4, 0))


def test_sees_point_outside():
    with pytest.raises(PointOutside):
        sees(u_shape(), (3, 3), (1, 1))
