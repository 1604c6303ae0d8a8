"""Vertex-count arithmetic: the piece bound, good cuts and good cut-systems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geometry import CutKind


class OddOrTooSmall(ValueError):
    pass


class NotAdmissibleSizes(ValueError):
    pass


class NotNested(ValueError):
    pass


class ResidueConditionFails(ValueError):
    pass


def bound(n: int) -> int:
    """Maximum number of pieces allowed for an n-vertex polyomino."""
    if n < 4 or n % 2:
        raise OddOrTooSmall(f"vertex count must be even and >= 4, got {n}")
    return (3 * n + 4) // 16


def _f(n: int) -> int:
    return (3 * n + 4) // 16


def is_induction_good(n: int, n1: int, n2: int) -> bool:
    if n1 <= 0 or n2 <= 0 or n1 % 2 or n2 % 2 or n1 + n2 not in (n, n + 2):
        raise NotAdmissibleSizes(f"sizes {n1} + {n2} are not admissible for n = {n}")
    return _f(n1) + _f(n2) <= _f(n)


def lemma_tech(n: int, n1: int, kind: CutKind) -> bool:
    """Residue conditions that certify a cut as good without evaluating the bound."""
    r1 = n1 % 16
    if kind is CutKind.TWO:
        if r1 in (0, 2, 6, 8, 12, 14):
            return True
        return n % 16 != 14 and r1 == 10
    if r1 in (2, 8, 14):
        return True
    return n % 16 != 14 and r1 == 12


@dataclass(frozen=True)
class SizedCut:
    """What the residue calculus needs to know about a cut: part-1 size and kind."""

    n1: int
    kind: CutKind
    tag: object = None


@dataclass(frozen=True)
class CutSystem:
    cuts: tuple
    reversed_order: bool
    witness: tuple[int, int, int]
    kernel: object = None


def _residue_witness(sizes: Sequence[SizedCut]):
    res = set()
    for c in sizes:
        res.add(c.n1 % 16)
        if c.kind is CutKind.TWO:
            res.add((c.n1 + 2) % 16)
    for a in range(0, 16, 2):
        if {a, (a + 2) % 16, (a + 4) % 16} <= res:
            return (a, (a + 2) % 16, (a + 4) % 16)
    return None


def check_cut_system(cuts: Sequence[SizedCut], n: int, nested: bool = True, kernel=None) -> CutSystem:
    """Accept 1 to 3 nested cuts whose residues contain three consecutive even classes.

    ``cuts`` are listed by increasing part 1.  The reversed reading uses the
    part-2 sizes ``n + excess - n1`` in the opposite order.
    """
    if not 1 <= len(cuts) <= 3:
        raise NotNested(f"a cut-system has 1 to 3 cuts, got {len(cuts)}")
    if not nested:
        raise NotNested("part 1 regions are not nested")
    w = _residue_witness(cuts)
    if w is not None:
        return CutSystem(tuple(cuts), False, w, kernel)
    rev = [SizedCut(n + c.kind.size_excess - c.n1, c.kind, c.tag) for c in reversed(cuts)]
    w = _residue_witness(rev)
    if w is not None:
        return CutSystem(tuple(rev), True, w, kernel)
    raise ResidueConditionFails(f"sizes {[c.n1 for c in cuts]} miss three consecutive residues")


def extract_good_cut(system: CutSystem, n: int) -> SizedCut:
    """A member of an accepted system that satisfies the bound inequality."""
    for c in system.cuts:
        if lemma_tech(n, c.n1, c.kind) and c.kind is not CutKind.TWO and c.n1 % 16 in (2, 8, 14):
            return c
    for c in system.cuts:
        if lemma_tech(n, c.n1, c.kind):
            return c
    for c in system.cuts:
        if is_induction_good(n, c.n1, n + c.kind.size_excess - c.n1):
            return c
    raise AssertionError(f"accepted cut-system without a good cut: {system}")
