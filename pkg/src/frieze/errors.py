"""Exception hierarchy shared by all frieze modules."""


class FriezeError(ValueError):
    """Base class for domain errors raised by this package."""


class InvalidQuiddity(FriezeError):
    pass


class InexactDivision(FriezeError):
    """The diamond rule asks for a non-integral (or undefined) entry."""

    def __init__(self, index, detail=""):
        self.index = index
        super().__init__(f"inexact division at position {index}{': ' + detail if detail else ''}")


class NonPositive(FriezeError):
    """A generated row has an entry <= 0; ``row`` holds the full computed row."""

    def __init__(self, index, row):
        self.index = index
        self.row = row
        super().__init__(f"non-positive entry {row[index]} at position {index}")


class NotConstant(AssertionError):
    """Row differences that must be constant are not. Always an internal bug."""

    def __init__(self, k, i, j):
        self.k, self.i, self.j = k, i, j
        super().__init__(f"growth difference for k={k} differs between positions {i} and {j}")


class DomainError(FriezeError):
    pass


class CrossingDiagonals(FriezeError):
    def __init__(self, d1, d2):
        self.diagonals = (d1, d2)
        super().__init__(f"diagonals {d1} and {d2} cross")


class WrongCount(FriezeError):
    def __init__(self, found, expected):
        self.found, self.expected = found, expected
        super().__init__(f"found {found} arcs, expected {expected}")


class TooLarge(FriezeError):
    pass


class NotClosed(FriezeError):
    pass


class NotInfinite(FriezeError):
    pass


class CutAtNonOne(FriezeError):
    pass


class AdjacentVertices(FriezeError):
    pass


class InvalidTriangulation(FriezeError):
    pass


class SpiralHasNoInnerQuiddity(FriezeError):
    pass
