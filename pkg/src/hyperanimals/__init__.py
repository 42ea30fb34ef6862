"""Exact minimal perimeters of animals on {p,q} tessellations."""

from .context import TessClass, TessContext, layer_index, new_context
from .enumerate import SearchConfig, SearchResult, min_perimeter_exhaustive
from .errors import (
    BudgetExceededError,
    DomainError,
    FieldMismatchError,
    HyperAnimalsError,
    InvalidContinuedFractionError,
    InvalidSignatureError,
    PartialLayerError,
    UnsupportedClassError,
)
from .perimeter import epsilon, m_closed, m_oracle, pmin
from .quadfield import QuadExt
from .spiral import AnimalState, boundary_degree_word, grow_to, new_animal, perimeter_sequence
from .words import ContinuedFraction, DegreeWord, continued_fraction_closed

__version__ = "0.1.0"

__all__ = [
    "AnimalState",
    "BudgetExceededError",
    "ContinuedFraction",
    "DegreeWord",
    "DomainError",
    "FieldMismatchError",
    "HyperAnimalsError",
    "InvalidContinuedFractionError",
    "InvalidSignatureError",
    "PartialLayerError",
    "QuadExt",
    "SearchConfig",
    "SearchResult",
    "TessClass",
    "TessContext",
    "UnsupportedClassError",
    "boundary_degree_word",
    "continued_fraction_closed",
    "epsilon",
    "grow_to",
    "layer_index",
    "m_closed",
    "m_oracle",
    "min_perimeter_exhaustive",
    "new_animal",
    "new_context",
    "perimeter_sequence",
    "pmin",
]
