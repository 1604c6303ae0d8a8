"""Partition simple polyominoes into pieces of at most 8 vertices, with mobile guards."""

from .cuttree import (
    CutTree,
    NotAdjacent,
    build_cut_tree,
    corner_adjacency,
    find_corridors,
    find_pockets,
    t_value,
)
from .engine import (
    AnchorInWrongPart,
    AnchorNotInKernel,
    LabeledCut,
    NoGoodCutFound,
    PartitionResult,
    PreconditionViolated,
    claim_opposite,
    extend_cut_system,
    extend_partition,
    find_good_cut,
    partition,
)
from .geometry import (
    Cut,
    CutKind,
    GeometryError,
    Point,
    PointOutside,
    RectilinearPolygon,
    normalize,
    reflex_vertices,
    sees,
    split,
    transform,
)
from .guards import NoPatrolFound, Patrol, coverage_check, patrol_for_piece, patrols_noncrossing
from .io import PolygonFormatError, ValidationError, emit_result, parse_polygon
from .oracle import (
    enumerate_admissible_cuts,
    good_cut_exists_bruteforce,
    verify_lemma6_table,
    verify_partition,
)
from .polygen import GenerationBudgetExceeded, generate
from .residues import (
    NotAdmissibleSizes,
    NotNested,
    OddOrTooSmall,
    ResidueConditionFails,
    bound,
    check_cut_system,
    extract_good_cut,
    is_induction_good,
    lemma_tech,
)

__version__ = "0.1.0"
