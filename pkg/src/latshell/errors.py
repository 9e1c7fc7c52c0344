"""Exception hierarchy.

Every error that describes a defect of the *input* derives from
:class:`LatticeError` (a :class:`ValueError`) and carries the offending
objects as attributes so callers and the CLI can print them verbatim.
"""


class LatticeError(ValueError):
    """Base class for invalid input to any latshell operation."""


class InvalidInput(LatticeError):
    pass


class CycleDetected(LatticeError):
    def __init__(self, path):
        self.path = tuple(path)
        super().__init__(f"cover relation has a cycle: {' -> '.join(map(str, self.path))}")


class RedundantCover(LatticeError):
    def __init__(self, pair, reason="implied by transitivity"):
        self.pair = tuple(pair)
        super().__init__(f"cover {self.pair} is redundant ({reason})")


class MultipleMinima(LatticeError):
    def __init__(self, elements):
        self.elements = frozenset(elements)
        super().__init__(f"more than one minimal element: {sorted(self.elements)}")


class MultipleMaxima(LatticeError):
    def __init__(self, elements):
        self.elements = frozenset(elements)
        super().__init__(f"more than one maximal element: {sorted(self.elements)}")


class NotALattice(LatticeError):
    """``x`` and ``y`` lack a unique least upper (or greatest lower) bound.

    ``bounds`` is the set of minimal upper bounds when ``side == "join"``
    and the set of maximal lower bounds when ``side == "meet"``.
    """

    def __init__(self, x, y, bounds, side="join"):
        self.x, self.y = x, y
        self.bounds = frozenset(bounds)
        self.side = side
        kind = "minimal upper" if side == "join" else "maximal lower"
        super().__init__(f"elements {x}, {y} have {kind} bounds {sorted(self.bounds)}")


class NotRanked(LatticeError):
    """Carries two maximal bottom-top chains of different lengths."""

    def __init__(self, chains):
        self.chains = tuple(tuple(c) for c in chains)
        lengths = [len(c) - 1 for c in self.chains]
        super().__init__(f"not ranked: maximal chains of lengths {lengths}")


class NotComparable(LatticeError):
    def __init__(self, x, y):
        self.x, self.y = x, y
        super().__init__(f"{x} is not below {y}")


class NotDoublyIrreducible(LatticeError):
    def __init__(self, x):
        self.x = x
        super().__init__(f"element {x} is not doubly irreducible")


class PartialLabeling(LatticeError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"labeling has no value for cover {self.missing}")


class PreconditionFailed(LatticeError):
    pass


class SizeLimitExceeded(LatticeError):
    pass


class ExtensionSearchExhausted(RuntimeError):
    """No candidate label pair extended the labeling past a corner."""


class ImplicationViolated(AssertionError):
    """A structural implication failed on a concrete lattice.

    Never an accepted outcome: it means an implementation bug.
    """

    def __init__(self, implication, lattice):
        self.implication = implication
        self.lattice = lattice
        super().__init__(f"{implication} violated on n={lattice.n} covers={sorted(lattice.covers)}")
