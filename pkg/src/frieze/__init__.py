"""Exact integral frieze patterns: polygon, punctured-disk and annulus models."""

from .annulus import (
    AnnulusTriangulation,
    PuncturedDiskTriangulation,
    annulus_from_quiddity,
    disk_triangulations,
    inner_quiddity,
    quiddity_of_disk,
    star_triangulation,
    thicken,
)
from .cluster import (
    cluster_frieze,
    cluster_variable,
    det_symbolic,
    expected_det_symbolic,
    specialize_to_one,
    symbolic_matrix,
)
from .core import (
    Closed,
    FriezeGrid,
    GrowthSequence,
    Infinite,
    Invalid,
    QuidditySequence,
    check_tame,
    classify,
    cut,
    generate,
    glue,
    growth_closed_form,
    growth_rate,
    growth_sequence,
    minimal_period,
    next_row,
)
from .laurent import LaurentElement
from .polygon import (
    PolygonTriangulation,
    det_int,
    enumerate_triangulations,
    frieze_matrix,
    matchings,
    quiddity_of,
    triangulation_from_quiddity,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "LaurentElement",
    "AnnulusTriangulation",
    "Closed",
    "FriezeGrid",
    "GrowthSequence",
    "Infinite",
    "Invalid",
    "PolygonTriangulation",
    "PuncturedDiskTriangulation",
    "QuidditySequence",
    "annulus_from_quiddity",
    "check_tame",
    "classify",
    "cluster_frieze",
    "cluster_variable",
    "cut",
    "det_int",
    "det_symbolic",
    "disk_triangulations",
    "enumerate_triangulations",
    "expected_det_symbolic",
    "frieze_matrix",
    "generate",
    "glue",
    "growth_closed_form",
    "growth_rate",
    "growth_sequence",
    "inner_quiddity",
    "matchings",
    "minimal_period",
    "next_row",
    "quiddity_of",
    "quiddity_of_disk",
    "specialize_to_one",
    "star_triangulation",
    "symbolic_matrix",
    "thicken",
    "triangulation_from_quiddity",
    "validate",
]
