"""Finite lattices: structural predicates, lexicographic shellings and
admissibility, each answer backed by a certificate that can be replayed.

>>> from latshell import build_lattice, is_rank_connected
>>> B2 = build_lattice([(0, 1), (0, 2), (1, 3), (2, 3)])
>>> bool(is_rank_connected(B2))
True
"""

from .admissibility import (
    check_admissible_with,
    enumerate_natural_labelings,
    gamma_labeling,
    is_admissible,
)
from .canonical import automorphisms, canonical_form, canonical_labeling
from .corpus import (
    CrossCheckReport,
    Fixture,
    cross_check,
    enumerate_lattices,
    fixture,
    random_dismantlable,
)
from .errors import (
    CycleDetected,
    ExtensionSearchExhausted,
    ImplicationViolated,
    InvalidInput,
    LatticeError,
    MultipleMaxima,
    MultipleMinima,
    NotALattice,
    NotComparable,
    NotDoublyIrreducible,
    NotRanked,
    PartialLabeling,
    PreconditionFailed,
    RedundantCover,
    SizeLimitExceeded,
)
from .kernels import BACKEND
from .lattice import (
    Deletion,
    HasseSubgraph,
    IntervalView,
    Lattice,
    RankFunction,
    build_lattice,
    delete_elements,
    hasse_subgraph,
    interval,
    is_ranked,
    rank_function,
)
from .predicates import (
    CornerWitness,
    DismantlingSequence,
    Verdict,
    dismantling_sequence,
    doubly_irreducibles,
    find_corner,
    is_interval_connected,
    is_lower_semimodular,
    is_planar,
    is_rank_connected,
    is_upper_semimodular,
    join_irreducibles,
    meet_irreducibles,
)
from .shelling import ELVerdict, construct_el, rising_chains, search_el, verify_el


def join(L: Lattice, x: int, y: int) -> int:
    return L.join(x, y)


def meet(L: Lattice, x: int, y: int) -> int:
    return L.meet(x, y)


__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
