"""Equivalence search, classification and irreducibility."""

from .atlas import ATLAS_FILTERS, canonical_orbits, classify, format_atlas, write_atlas
from .config import DEFAULT_SEARCH_LIMIT, SEARCH_HARD_LIMIT, SearchConfig
from .explorer import (
    EquivalenceExplorer,
    SearchLevelEvent,
    SearchStartEvent,
    SearchStopEvent,
    are_equivalent,
    equivalence_class,
)
from .irreducible import is_irreducible
from .models import (
    AtlasClass,
    AtlasFilter,
    ClassAtlas,
    EquivalenceClass,
    EquivalenceResult,
    Verdict,
)
from .moves import iter_neighbors, neighbors

__all__ = [
    "SearchConfig",
    "SEARCH_HARD_LIMIT",
    "DEFAULT_SEARCH_LIMIT",
    "EquivalenceExplorer",
    "SearchStartEvent",
    "SearchLevelEvent",
    "SearchStopEvent",
    "Verdict",
    "EquivalenceClass",
    "EquivalenceResult",
    "AtlasClass",
    "AtlasFilter",
    "ClassAtlas",
    "ATLAS_FILTERS",
    "neighbors",
    "iter_neighbors",
    "equivalence_class",
    "are_equivalent",
    "classify",
    "canonical_orbits",
    "format_atlas",
    "write_atlas",
    "is_irreducible",
]
