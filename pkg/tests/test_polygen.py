import pytest

from orthopart.geometry import normalize
from orthopart.polygen import (
    GenerationBudgetExceeded,
    fourteen_gon,
    gallery_52,
    generate,
    staircase,
    suite,
    to_text,
)


def test_n4_is_a_rectangle():
    P = generate(4, seed=3)
    assert P.n == 4 and P.reflex_vertices() == []


@pytest.mark.parametrize("n", [6, 10, 24, 60, 90])
def test_exact_vertex_count(n):
    for seed in range(3):
        P = generate(n, seed)
        assert P.n == n
        assert normalize([(v.x, v.y) for v in P.vertices]) == P


def test_deterministic():
    assert generate(30, 7) == generate(30, 7)
    assert generate(30, 7) != generate(30, 8)
    assert suite(20) == suite(20)


def test_suite_cycles_sizes(default_suite):
    assert len(default_suite) == 1000
    assert {P.n for P in default_suite} == set(range(10, 62, 2))


@pytest.mark.parametrize("n", [3, 5, 2, -4])
def test_bad_target(n):
    with pytest.raises(ValueError):
        generate(n, 0)


def test_budget_exceeded():
    with pytest.raises(GenerationBudgetExceeded):
        generate(40, 0, grid_size=3)  # a 3x3 grid cannot hold 40 vertices


def test_fixtures():
    assert fourteen_gon().n == 14
    assert gallery_52().n == 52
    assert staircase().n == 10
    assert staircase(6).n == 14


def test_to_text():
    lines = to_text(staircase(2)).splitlines()
    assert lines[0] == "6" and len(lines) == 7
