from .cohomology import (
    CohomologyData,
    InducedMap,
    cohomology,
    cohomology_data,
    cohomology_via_boundary_invariants,
    is_coboundary,
    map_on_cohomology,
)
from .free_complex import ComplexMorphism, FreeComplex, cone
from .presented import PresentedModule

__all__ = [
    "FreeComplex",
    "ComplexMorphism",
    "cone",
    "PresentedModule",
    "cohomology",
    "cohomology_data",
    "cohomology_via_boundary_invariants",
    "is_coboundary",
    "map_on_cohomology",
    "CohomologyData",
    "InducedMap",
]
